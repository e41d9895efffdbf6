//! Evaluate a constraint catalog against a numeric Hodge diamond.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::catalog::applicable_series;
use crate::complex::{series_factors_numeric, SeriesKind};
use crate::constraint::{Constraint, Relation};
use crate::error::Result;
use crate::hodge::{HodgeDiamond, ManifoldProfile};
use crate::rational::Rational;
use crate::series::expand_factors_int;

/// Outcome for one constraint. Margins are exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ConstraintStatus {
    Satisfied { slack: String },
    Violated { margin: String },
    Inactive,
}

impl ConstraintStatus {
    pub fn is_violated(&self) -> bool {
        matches!(self, ConstraintStatus::Violated { .. })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstraintReport {
    pub provenance: Vec<String>,
    pub p: u32,
    pub inequality: String,
    pub status: ConstraintStatus,
}

/// Finding from the exhaustive numeric pass over a whole series family.
#[derive(Debug, Clone, Serialize)]
pub struct SweepFinding {
    pub kind: String,
    pub p: u32,
    pub index: u64,
    pub relation: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FeasibilityReport {
    pub feasible: bool,
    pub entries: Vec<ConstraintReport>,
    pub sweep_findings: Vec<SweepFinding>,
}

impl FeasibilityReport {
    pub fn violated_entries(&self) -> impl Iterator<Item = &ConstraintReport> {
        self.entries.iter().filter(|e| e.status.is_violated())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "verdict": if self.feasible { "FEASIBLE" } else { "INFEASIBLE" },
            "constraints": self.entries.iter().map(|e| serde_json::json!({
                "provenance": e.provenance,
                "p": e.p,
                "inequality": e.inequality,
                "status": match &e.status {
                    ConstraintStatus::Satisfied { slack } =>
                        serde_json::json!({"satisfied": {"slack": slack}}),
                    ConstraintStatus::Violated { margin } =>
                        serde_json::json!({"violated": {"margin": margin}}),
                    ConstraintStatus::Inactive => serde_json::json!("hypothesis-inactive"),
                },
            })).collect::<Vec<_>>(),
            "sweep_findings": self.sweep_findings,
        })
    }
}

fn rational_string(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact evaluation of every active constraint against a numeric diamond.
/// Hypothesis predicates are decided from the profile; vanishing activation
/// conditions from the diamond. The verdict is feasible exactly when no
/// active constraint is violated.
pub fn check_diamond(
    dm: &HodgeDiamond,
    pf: &ManifoldProfile,
    constraints: &[Constraint],
) -> Result<FeasibilityReport> {
    if dm.d() != pf.d {
        return Err(crate::error::CoreError::DimensionMismatch {
            dm: dm.d(),
            pf: pf.d,
        });
    }
    let asg = dm.assignment()?;
    let mut entries = Vec::with_capacity(constraints.len());
    let mut feasible = true;
    for c in constraints {
        let status = if !c.hypotheses_hold(pf) {
            ConstraintStatus::Inactive
        } else {
            let active = match &c.activation {
                None => true,
                Some(v) => {
                    let rank = v.rank.eval(&asg)?;
                    let below = rank < Rational::from_integer(BigInt::from(v.index));
                    below && v.index < pf.q
                }
            };
            if !active {
                ConstraintStatus::Inactive
            } else {
                let value = c.expr.eval(&asg)?;
                let ok = match c.relation {
                    Relation::NonNeg => !value.is_negative(),
                    Relation::Zero => value.is_zero(),
                };
                if ok {
                    ConstraintStatus::Satisfied {
                        slack: rational_string(&value),
                    }
                } else {
                    feasible = false;
                    ConstraintStatus::Violated {
                        margin: rational_string(&value),
                    }
                }
            }
        };
        entries.push(ConstraintReport {
            provenance: c.provenance.clone(),
            p: c.p,
            inequality: c.display_inequality(),
            status,
        });
    }
    Ok(FeasibilityReport {
        feasible,
        entries,
        sweep_findings: Vec::new(),
    })
}

/// Exhaustive numeric pass over every window series of the profile:
/// coefficient signs for all indices 1..=q-1 plus the vanishing clause, via
/// the fast integer recurrence. Complements a catalog whose materialized
/// coefficient indices were capped.
pub fn sweep_series_families(dm: &HodgeDiamond, pf: &ManifoldProfile) -> Result<Vec<SweepFinding>> {
    let mut findings = Vec::new();
    if pf.q < 2 {
        return Ok(findings);
    }
    let n = pf.q as usize;
    let asg = dm.assignment()?;
    // symbolic truncation 2 is enough here: only the factor shape and the
    // rank polynomial are used, the coefficients come from the integer
    // recurrence below
    for cs in applicable_series(pf, 2)? {
        if cs.vacuous {
            continue;
        }
        let factors = series_factors_numeric(dm, pf, cs.p, cs.kind)?;
        let coeffs = expand_factors_int(&factors, n);
        match cs.kind {
            SeriesKind::Epsilon => {
                for (i, c) in coeffs.iter().enumerate().skip(1) {
                    if !c.is_zero() {
                        findings.push(SweepFinding {
                            kind: cs.kind.to_string(),
                            p: cs.p,
                            index: i as u64,
                            relation: "= 0".into(),
                            value: c.to_string(),
                        });
                    }
                }
            }
            SeriesKind::Gamma | SeriesKind::Delta => {
                for (i, c) in coeffs.iter().enumerate().skip(1) {
                    if c.is_negative() {
                        findings.push(SweepFinding {
                            kind: cs.kind.to_string(),
                            p: cs.p,
                            index: i as u64,
                            relation: ">= 0".into(),
                            value: c.to_string(),
                        });
                    }
                }
                // vanishing clause: rank < i < q forces coefficient zero
                let rank = cs.rank.eval(&asg)?;
                for (i, c) in coeffs.iter().enumerate().skip(1) {
                    let idx = Rational::from_integer(BigInt::from(i as u64));
                    if rank < idx && !c.is_zero() {
                        findings.push(SweepFinding {
                            kind: cs.kind.to_string(),
                            p: cs.p,
                            index: i as u64,
                            relation: "= 0 (above rank)".into(),
                            value: c.to_string(),
                        });
                    }
                }
            }
        }
    }
    Ok(findings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{generate_catalog, CatalogOptions};
    use crate::hodge::{abelian_diamond, partial_diamond, MValue};
    use std::collections::BTreeMap;

    #[test]
    fn abelian_threefold_feasible() {
        let pf = ManifoldProfile::new(3, 3, MValue::Infinity).unwrap();
        let dm = abelian_diamond(3);
        let catalog = generate_catalog(&pf, &CatalogOptions::default()).unwrap();
        let report = check_diamond(&dm, &pf, &catalog).unwrap();
        assert!(report.feasible);
        // every epsilon constraint is an exact zero
        for e in &report.entries {
            assert_eq!(e.status, ConstraintStatus::Satisfied { slack: "0".into() });
        }
        assert!(sweep_series_families(&dm, &pf).unwrap().is_empty());
    }

    #[test]
    fn surface_with_small_h02_infeasible() {
        // (d=2, q=5, m=2), h^{0,2} = 6 violates h^{0,2} >= 2q-3 = 7 with
        // margin -1.
        let pf = ManifoldProfile::new(2, 5, MValue::Finite(2)).unwrap();
        let mut asg = BTreeMap::new();
        asg.insert((0u32, 1u32), 5u64);
        asg.insert((0u32, 2u32), 6u64);
        asg.insert((1u32, 1u32), 30u64);
        let dm = partial_diamond(2, &asg).unwrap();
        let catalog = generate_catalog(&pf, &CatalogOptions::default()).unwrap();
        let report = check_diamond(&dm, &pf, &catalog).unwrap();
        assert!(!report.feasible);
        let violated: Vec<_> = report.violated_entries().collect();
        assert!(
            violated.iter().any(|e| {
                e.status
                    == ConstraintStatus::Violated {
                        margin: "-1".into(),
                    }
                    && e.provenance.iter().any(|s| s.contains("vanishing-derived"))
            }),
            "{violated:?}"
        );
    }

    #[test]
    fn q_hypothesis_inactive_when_q_equals_d() {
        // euler bounds need q > d; with q = d they must report inactive
        let pf = ManifoldProfile::new(3, 3, MValue::Finite(3)).unwrap();
        let catalog = generate_catalog(&pf, &CatalogOptions::default()).unwrap();
        let mut asg = BTreeMap::new();
        asg.insert((0u32, 1u32), 3u64);
        asg.insert((0u32, 2u32), 3u64);
        asg.insert((0u32, 3u32), 1u64);
        asg.insert((1u32, 1u32), 20u64);
        asg.insert((1u32, 2u32), 30u64);
        let dm = partial_diamond(3, &asg).unwrap();
        let report = check_diamond(&dm, &pf, &catalog).unwrap();
        let euler: Vec<_> = report
            .entries
            .iter()
            .filter(|e| {
                e.provenance
                    .iter()
                    .any(|s| s.contains("euler characteristic"))
            })
            .collect();
        assert!(!euler.is_empty());
        assert!(euler.iter().all(|e| e.status == ConstraintStatus::Inactive));
    }

    #[test]
    fn unassigned_entry_is_error() {
        let pf = ManifoldProfile::new(2, 2, MValue::Finite(2)).unwrap();
        let dm = partial_diamond(2, &BTreeMap::new()).unwrap();
        let catalog = generate_catalog(&pf, &CatalogOptions::default()).unwrap();
        assert!(check_diamond(&dm, &pf, &catalog).is_err());
    }
}
