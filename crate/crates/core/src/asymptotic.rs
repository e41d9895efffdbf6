//! Comparison of catalog-relative minima against the published asymptotic
//! growth expressions a*q + b*sqrt(2q) for threefolds and fourfolds.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::hodge::{MValue, ManifoldProfile};
use crate::minimize::{minimize_hodge_number, MinimizeOptions};
use crate::var::HodgeVar;

/// Asymptotic growth a*q + b*sqrt(2q) for one Hodge number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AsymptoticForm {
    pub target: HodgeVar,
    pub q_coeff: u64,
    pub sqrt2q_coeff: u64,
}

impl AsymptoticForm {
    pub fn formula(&self) -> String {
        match self.sqrt2q_coeff {
            0 => format!("{}q", self.q_coeff),
            1 => format!("{}q + sqrt(2q)", self.q_coeff),
            b => format!("{}q + {b}*sqrt(2q)", self.q_coeff),
        }
    }

    pub fn value_f64(&self, q: u64) -> f64 {
        self.q_coeff as f64 * q as f64 + self.sqrt2q_coeff as f64 * ((2 * q) as f64).sqrt()
    }

    /// Exact check |observed - (a q + b sqrt(2q))| <= tol.
    pub fn within(&self, observed: u64, q: u64, tol: u64) -> bool {
        let x = observed as i128 - (self.q_coeff as i128) * (q as i128);
        let b = self.sqrt2q_coeff as i128;
        let n = 2 * q as i128;
        let t = tol as i128;
        // need x - t <= b sqrt(n) <= x + t
        let hi = x + t;
        if hi < 0 || hi * hi < b * b * n {
            return false;
        }
        let lo = x - t;
        if lo > 0 && lo * lo > b * b * n {
            return false;
        }
        true
    }
}

/// Published asymptotic table for isolated-zero profiles (m = d).
pub fn asymptotic_targets(d: u32) -> Vec<AsymptoticForm> {
    let f = |p, j, a, b| AsymptoticForm {
        target: HodgeVar::hodge(p, j),
        q_coeff: a,
        sqrt2q_coeff: b,
    };
    match d {
        3 => vec![f(0, 2, 4, 0), f(0, 3, 4, 0), f(1, 1, 2, 1), f(1, 2, 5, 1)],
        4 => vec![
            f(0, 2, 4, 0),
            f(0, 3, 5, 1),
            f(0, 4, 4, 0),
            f(1, 1, 2, 0),
            f(1, 2, 8, 2),
            f(1, 3, 12, 3),
            f(2, 2, 8, 4),
        ],
        _ => Vec::new(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticRow {
    pub q: u64,
    pub target: String,
    pub minimized: u64,
    pub formula: String,
    pub formula_value: f64,
    pub difference: f64,
}

/// Minimize the target for each q and report the difference against the
/// asymptotic expression. Differences are reported, not asserted.
pub fn asymptotic_check(
    d: u32,
    m: u32,
    target: HodgeVar,
    q_values: &[u64],
    opts: &MinimizeOptions,
) -> Result<Vec<AsymptoticRow>> {
    let form = asymptotic_targets(d)
        .into_iter()
        .find(|t| t.target == target);
    let mut rows = Vec::new();
    for &q in q_values {
        if q <= d as u64 {
            return Err(crate::error::CoreError::InvalidProfile(format!(
                "asymptotic comparison needs q > d, got q = {q}, d = {d}"
            )));
        }
        let pf = ManifoldProfile::new(d, q, MValue::Finite(m))?;
        let min = minimize_hodge_number(target, &pf, &BTreeMap::new(), opts)?;
        let (formula, fv) = match &form {
            Some(f) => (f.formula(), f.value_f64(q)),
            None => ("-".to_string(), f64::NAN),
        };
        rows.push(AsymptoticRow {
            q,
            target: target.to_string(),
            minimized: min.value,
            formula,
            formula_value: fv,
            difference: min.value as f64 - fv,
        });
    }
    Ok(rows)
}

/// TSV rendering of the comparison table.
pub fn rows_to_tsv(rows: &[AsymptoticRow]) -> String {
    let mut out = String::from("q\ttarget\tminimized\tformula\tformula_value\tdifference\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{:.3}\t{:.3}\n",
            r.q, r.target, r.minimized, r.formula, r.formula_value, r.difference
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn within_is_exact() {
        // |46 - (2*20 + sqrt(40))| = |46 - 46.32| = 0.32 <= 3
        let f = AsymptoticForm {
            target: HodgeVar::hodge(1, 1),
            q_coeff: 2,
            sqrt2q_coeff: 1,
        };
        assert!(f.within(46, 20, 3));
        assert!(!f.within(46, 20, 0));
        // exact linear case
        let f = AsymptoticForm {
            target: HodgeVar::hodge(0, 2),
            q_coeff: 4,
            sqrt2q_coeff: 0,
        };
        assert!(f.within(4 * 500 - 10, 500, 10));
        assert!(!f.within(4 * 500 - 11, 500, 10));
    }

    #[test]
    fn small_q_h02_is_exact_two_form_bound() {
        let rows = asymptotic_check(
            3,
            3,
            HodgeVar::hodge(0, 2),
            &[30, 50],
            &MinimizeOptions::default(),
        )
        .unwrap();
        for r in &rows {
            assert_eq!(r.minimized, 4 * r.q - 10);
        }
    }
}
