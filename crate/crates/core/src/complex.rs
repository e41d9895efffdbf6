//! The twisted complex of holomorphic p-forms on projective space: exactness
//! windows, Chern generating series of the window kernel/cokernel sheaves,
//! and partial Euler characteristics.
//!
//! The three series kinds correspond to which window exists:
//!
//! * `Delta` — cokernel of the left window (needs p < m <= d); factors
//!   (1-jt)^{(-1)^j h^{p,m-p-j}} for j = 1..m-p.
//! * `Gamma` — kernel of the right window (needs d-p < m <= d); factors
//!   (1-jt)^{(-1)^j h^{p,2d-m-p+j}} for j = 1..m-d+p.
//! * `Epsilon` — the everywhere-exact case m = infinity; factors
//!   (1-jt)^{(-1)^j h^{p,d-j}} for j = 1..d.
//!
//! Known entries are substituted during construction: any exponent whose
//! symmetry orbit passes through (0,0) becomes the constant 1, and any orbit
//! through (0,1) becomes the variable q. Remaining exponents keep their
//! Hodge-symmetric name h^{min,max}.

use std::fmt;

use serde::Serialize;

use crate::error::{CoreError, Result};
use crate::hodge::{classify_orbit, Cell, HodgeDiamond, MValue, ManifoldProfile, OrbitClass};
use crate::poly::MultiPoly;
use crate::series::{expand_binomial_power, series_product, TruncatedSeries};
use crate::var::HodgeVar;

/// How far from each end the complex is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExactnessWindow {
    pub left_exact_steps: u32,
    pub right_exact_steps: u32,
    pub fully_exact: bool,
}

/// Exactness window of the complex for form degree p, combining the
/// zero-locus clauses with the Albanese clauses when fiber data is present.
/// Clauses whose hypotheses fail contribute zero; when several apply the
/// maximum is taken.
pub fn exactness_window(pf: &ManifoldProfile, p: u32) -> Result<ExactnessWindow> {
    let d = pf.d;
    if p > d {
        return Err(CoreError::FormDegreeOutOfRange { p, d });
    }
    if pf.m == MValue::Infinity {
        return Ok(ExactnessWindow {
            left_exact_steps: d + 1,
            right_exact_steps: d + 1,
            fully_exact: true,
        });
    }
    let mut left = 0u32;
    let mut right = 0u32;
    if let MValue::Finite(m) = pf.m {
        if p < m {
            left = left.max(m - p);
        }
        if d - p < m {
            right = right.max(m - (d - p));
        }
    }
    if let Some(alb) = pf.albanese {
        let l = alb.l();
        if d - p > l {
            left = left.max(d - p - l);
        }
        if p > l {
            right = right.max(p - l);
        }
    }
    Ok(ExactnessWindow {
        left_exact_steps: left,
        right_exact_steps: right,
        fully_exact: false,
    })
}

/// Which generating series a window produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum SeriesKind {
    Gamma,
    Delta,
    Epsilon,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesKind::Gamma => write!(f, "gamma"),
            SeriesKind::Delta => write!(f, "delta"),
            SeriesKind::Epsilon => write!(f, "epsilon"),
        }
    }
}

/// Which partial Euler characteristic to form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerKind {
    /// chi^{>= 2d-m-p}: alternating sum over the top window, rank of the
    /// right-window kernel sheaf.
    Geq,
    /// chi^{<= m-p}: alternating sum over the bottom window, rank of the
    /// left-window cokernel sheaf.
    Leq,
}

/// A generating series together with the rank of the associated sheaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernSeries {
    pub kind: SeriesKind,
    pub p: u32,
    pub series: TruncatedSeries,
    /// Partial Euler characteristic equal to the rank of the sheaf; the full
    /// alternating sum for `Epsilon`.
    pub rank: MultiPoly,
    /// True when the window is empty (the series is 1 and yields no
    /// constraints).
    pub vacuous: bool,
}

/// Symbolic exponent for h^{p,idx} with known orbits substituted.
fn exponent_poly(d: u32, p: u32, idx: u32, sign_negative: bool) -> MultiPoly {
    let base = match classify_orbit(d, p, idx) {
        OrbitClass::One => MultiPoly::one(),
        OrbitClass::Irregularity => MultiPoly::var(HodgeVar::Q),
        OrbitClass::Free(_) => MultiPoly::var(HodgeVar::hodge(p, idx)),
    };
    if sign_negative {
        base.negate()
    } else {
        base
    }
}

/// The product factors (j, exponent index) for a series kind, or an error if
/// the kind's hypothesis fails for this profile/degree.
pub(crate) fn series_factor_indices(
    pf: &ManifoldProfile,
    p: u32,
    kind: SeriesKind,
) -> Result<Vec<(u32, u32)>> {
    let d = pf.d;
    if p > d {
        return Err(CoreError::FormDegreeOutOfRange { p, d });
    }
    match (kind, pf.m) {
        (SeriesKind::Epsilon, MValue::Infinity) => Ok((1..=d).map(|j| (j, d - j)).collect()),
        (SeriesKind::Epsilon, MValue::Finite(_)) => Err(CoreError::HypothesisViolation(
            "epsilon series requires m = infinity".into(),
        )),
        (_, MValue::Infinity) => Err(CoreError::HypothesisViolation(format!(
            "{kind} series requires finite m"
        ))),
        (SeriesKind::Gamma, MValue::Finite(m)) => {
            if d - p > m {
                return Err(CoreError::HypothesisViolation(format!(
                    "gamma series needs d-p < m <= d (d={d}, p={p}, m={m})"
                )));
            }
            // window length m-d+p; zero length (m = d-p) is the vacuous case
            let len = m + p - d;
            Ok((1..=len).map(|j| (j, 2 * d - m - p + j)).collect())
        }
        (SeriesKind::Delta, MValue::Finite(m)) => {
            if p > m {
                return Err(CoreError::HypothesisViolation(format!(
                    "delta series needs p < m <= d (p={p}, m={m})"
                )));
            }
            let len = m - p;
            Ok((1..=len).map(|j| (j, m - p - j)).collect())
        }
    }
}

fn build_series(pf: &ManifoldProfile, p: u32, n: usize, kind: SeriesKind) -> Result<ChernSeries> {
    if n < 2 {
        return Err(CoreError::TruncationTooSmall { min: 2, got: n });
    }
    let indices = series_factor_indices(pf, p, kind)?;
    let vacuous = indices.is_empty();
    let factors: Vec<TruncatedSeries> = indices
        .iter()
        .map(|&(j, idx)| {
            let e = exponent_poly(pf.d, p, idx, j % 2 == 1);
            expand_binomial_power(j, &e, n)
        })
        .collect::<Result<_>>()?;
    let series = if vacuous {
        TruncatedSeries::one(n)?
    } else {
        series_product(&factors)?
    };
    let rank = match kind {
        SeriesKind::Gamma => partial_euler(pf.d, pf.m, p, EulerKind::Geq)?,
        SeriesKind::Delta => partial_euler(pf.d, pf.m, p, EulerKind::Leq)?,
        SeriesKind::Epsilon => full_euler(pf.d, p),
    };
    Ok(ChernSeries {
        kind,
        p,
        series,
        rank,
        vacuous,
    })
}

/// Chern series of the right-window kernel sheaf.
pub fn gamma_series(pf: &ManifoldProfile, p: u32, n: usize) -> Result<ChernSeries> {
    build_series(pf, p, n, SeriesKind::Gamma)
}

/// Chern series of the left-window cokernel sheaf.
pub fn delta_series(pf: &ManifoldProfile, p: u32, n: usize) -> Result<ChernSeries> {
    build_series(pf, p, n, SeriesKind::Delta)
}

/// Chern series of the everywhere-exact case; all coefficients of index
/// 1..q-1 vanish for an actual manifold.
pub fn epsilon_series(pf: &ManifoldProfile, p: u32, n: usize) -> Result<ChernSeries> {
    build_series(pf, p, n, SeriesKind::Epsilon)
}

/// Partial Euler characteristic as a symbolic polynomial.
///
/// `Leq`: sum_{j=0}^{m-p} (-1)^{m-p+j} h^{p,j}, needs p < m <= d (p = m is
/// the vacuous boundary and is allowed).
/// `Geq`: sum_{j=2d-m-p}^{d} (-1)^{2d-m-p+j} h^{p,j}, needs d-p < m <= d
/// (m = d-p allowed as the vacuous boundary).
pub fn partial_euler(d: u32, m: MValue, p: u32, kind: EulerKind) -> Result<MultiPoly> {
    let m = match m {
        MValue::Finite(m) => m,
        MValue::Infinity => {
            return Err(CoreError::HypothesisViolation(
                "partial Euler characteristics require finite m".into(),
            ))
        }
    };
    if p > d {
        return Err(CoreError::FormDegreeOutOfRange { p, d });
    }
    let (lo, hi) = match kind {
        EulerKind::Leq => {
            if p > m {
                return Err(CoreError::HypothesisViolation(format!(
                    "chi^<= needs p <= m (p={p}, m={m})"
                )));
            }
            (0, m - p)
        }
        EulerKind::Geq => {
            if d - p > m {
                return Err(CoreError::HypothesisViolation(format!(
                    "chi^>= needs d-p <= m (d={d}, p={p}, m={m})"
                )));
            }
            (2 * d - m - p, d)
        }
    };
    let mut acc = MultiPoly::zero();
    for j in lo..=hi {
        // Leq carries sign (-1)^{m-p+j}, positive at the top index;
        // Geq carries sign (-1)^{2d-m-p+j}, positive at the bottom index.
        let negative = match kind {
            EulerKind::Leq => (hi - j) % 2 == 1,
            EulerKind::Geq => (j - lo) % 2 == 1,
        };
        acc = acc.add(&exponent_poly(d, p, j, negative));
    }
    Ok(acc)
}

/// Full Euler characteristic sum_{j=0}^{d} (-1)^j h^{p,j}.
pub fn full_euler(d: u32, p: u32) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for j in 0..=d {
        acc = acc.add(&exponent_poly(d, p, j, j % 2 == 1));
    }
    acc
}

/// Integer product factors (j, exponent value) for a numeric diamond.
pub fn series_factors_numeric(
    dm: &HodgeDiamond,
    pf: &ManifoldProfile,
    p: u32,
    kind: SeriesKind,
) -> Result<Vec<(u32, i64)>> {
    let indices = series_factor_indices(pf, p, kind)?;
    indices
        .iter()
        .map(|&(j, idx)| {
            let v = dm
                .value(p, idx)
                .ok_or(CoreError::UnassignedEntry { p, j: idx })?;
            let e = if j % 2 == 1 { -(v as i64) } else { v as i64 };
            Ok((j, e))
        })
        .collect()
}

/// The complex itself: d+1 terms with twists -d..0 and dimensions h^{p,i}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexModel {
    pub p: u32,
    pub terms: Vec<(i64, Cell)>,
}

impl ComplexModel {
    pub fn new(dm: &HodgeDiamond, p: u32) -> Result<Self> {
        let d = dm.d();
        if p > d {
            return Err(CoreError::FormDegreeOutOfRange { p, d });
        }
        let terms = (0..=d)
            .map(|i| (-(d as i64) + i as i64, dm.get(p, i).clone()))
            .collect();
        Ok(ComplexModel { p, terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::abelian_diamond;
    use crate::rational::rat;
    use num_bigint::BigInt;
    use std::collections::BTreeMap;

    fn pf(d: u32, q: u64, m: MValue) -> ManifoldProfile {
        ManifoldProfile::new(d, q, m).unwrap()
    }

    #[test]
    fn window_examples() {
        let w = exactness_window(&pf(3, 3, MValue::Finite(3)), 1).unwrap();
        assert_eq!(
            (w.left_exact_steps, w.right_exact_steps, w.fully_exact),
            (2, 1, false)
        );

        let w = exactness_window(&pf(2, 2, MValue::Infinity), 0).unwrap();
        assert!(w.fully_exact);
        assert_eq!(w.left_exact_steps, 3);

        let w = exactness_window(&pf(4, 4, MValue::Finite(2)), 3).unwrap();
        assert_eq!((w.left_exact_steps, w.right_exact_steps), (0, 1));
    }

    #[test]
    fn window_uses_albanese_clauses() {
        let profile = pf(4, 4, MValue::Finite(1)).with_albanese(0, 1).unwrap();
        // l = max{0, 0} = 0: left clause d-p-l, right clause p-l
        let w = exactness_window(&profile, 2).unwrap();
        assert_eq!(w.left_exact_steps, 2); // max(m-p inapplicable, 4-2-0)
        assert_eq!(w.right_exact_steps, 2); // max(inapplicable, 2-0)
    }

    #[test]
    fn window_monotone_in_m() {
        for d in 2..=5 {
            for p in 0..=d {
                let mut prev = exactness_window(&pf(d, 3, MValue::Finite(1)), p).unwrap();
                for m in 2..=d {
                    let w = exactness_window(&pf(d, 3, MValue::Finite(m)), p).unwrap();
                    assert!(w.left_exact_steps >= prev.left_exact_steps);
                    assert!(w.right_exact_steps >= prev.right_exact_steps);
                    prev = w;
                }
            }
        }
    }

    #[test]
    fn delta_series_threefold() {
        // (1-t)^{-h^{1,1}} (1-2t)^q, coefficient of t is h^{1,1} - 2q
        let cs = delta_series(&pf(3, 5, MValue::Finite(3)), 1, 3).unwrap();
        let expected =
            MultiPoly::var(HodgeVar::hodge(1, 1)).sub(&MultiPoly::var(HodgeVar::Q).scale(&rat(2)));
        assert_eq!(cs.series.coeff(1), &expected);
        assert!(!cs.vacuous);
    }

    #[test]
    fn delta_series_fourfold_first_coeff() {
        // coefficient of t is h^{1,2} - 2h^{1,1} + 3q
        let cs = delta_series(&pf(4, 6, MValue::Finite(4)), 1, 3).unwrap();
        let expected = MultiPoly::var(HodgeVar::hodge(1, 2))
            .sub(&MultiPoly::var(HodgeVar::hodge(1, 1)).scale(&rat(2)))
            .add(&MultiPoly::var(HodgeVar::Q).scale(&rat(3)));
        assert_eq!(cs.series.coeff(1), &expected);
    }

    #[test]
    fn epsilon_abelian_surface() {
        // On the abelian surface: (1-t)^{-2}(1-2t) = 1 + 0 t + ...
        let profile = pf(2, 2, MValue::Infinity);
        let cs = epsilon_series(&profile, 0, 2).unwrap();
        let asg = abelian_diamond(2).assignment().unwrap();
        let vals = cs.series.eval(&asg).unwrap();
        assert_eq!(vals[1], rat(0));
    }

    #[test]
    fn epsilon_vanishes_on_abelian_diamonds() {
        for d in 2..=5u32 {
            let profile = pf(d, d as u64, MValue::Infinity);
            let dm = abelian_diamond(d);
            let asg = dm.assignment().unwrap();
            for p in 0..=d {
                let cs = epsilon_series(&profile, p, d as usize).unwrap();
                let vals = cs.series.eval(&asg).unwrap();
                for (i, v) in vals.iter().enumerate().skip(1) {
                    assert_eq!(v, &rat(0), "epsilon_{i} nonzero for d={d} p={p}");
                }
            }
        }
    }

    #[test]
    fn hypothesis_violations() {
        assert!(gamma_series(&pf(3, 4, MValue::Finite(2)), 0, 3).is_err());
        assert!(delta_series(&pf(3, 4, MValue::Finite(2)), 3, 3).is_err());
        assert!(epsilon_series(&pf(3, 4, MValue::Finite(3)), 1, 3).is_err());
        assert!(delta_series(&pf(3, 4, MValue::Infinity), 1, 3).is_err());
    }

    #[test]
    fn vacuous_boundaries() {
        // gamma at m = d-p and delta at m = p succeed with a trivial series
        let cs = gamma_series(&pf(4, 5, MValue::Finite(4)), 0, 3).unwrap();
        assert!(cs.vacuous);
        assert_eq!(cs.series, TruncatedSeries::one(3).unwrap());
        let cs = delta_series(&pf(4, 5, MValue::Finite(2)), 2, 3).unwrap();
        assert!(cs.vacuous);
    }

    #[test]
    fn partial_euler_examples() {
        // d=2, m=2, p=0 at q=3, h^{0,2}=3: chi^{<=2} = 3 - 3 + 1 = 1
        let chi = partial_euler(2, MValue::Finite(2), 0, EulerKind::Leq).unwrap();
        let mut asg = BTreeMap::new();
        asg.insert(HodgeVar::Q, BigInt::from(3));
        asg.insert(HodgeVar::hodge(0, 2), BigInt::from(3));
        assert_eq!(chi.eval(&asg).unwrap(), rat(1));

        // d=3, m=3, p=0 symbolic: -1 + q - h^{0,2} + h^{0,3}
        let chi = partial_euler(3, MValue::Finite(3), 0, EulerKind::Leq).unwrap();
        let expected = MultiPoly::from_int(-1)
            .add(&MultiPoly::var(HodgeVar::Q))
            .sub(&MultiPoly::var(HodgeVar::hodge(0, 2)))
            .add(&MultiPoly::var(HodgeVar::hodge(0, 3)));
        assert_eq!(chi, expected);

        // d=3, m=3, p=0, Geq: chi^{>=3} = h^{0,3}, a single term
        let chi = partial_euler(3, MValue::Finite(3), 0, EulerKind::Geq).unwrap();
        assert_eq!(chi, MultiPoly::var(HodgeVar::hodge(0, 3)));
    }

    #[test]
    fn rank_matches_partial_euler() {
        let profile = pf(4, 5, MValue::Finite(4));
        for p in 0..=4 {
            if let Ok(cs) = delta_series(&profile, p, 3) {
                let chi = partial_euler(4, MValue::Finite(4), p, EulerKind::Leq).unwrap();
                assert_eq!(cs.rank, chi);
            }
            if let Ok(cs) = gamma_series(&profile, p, 3) {
                let chi = partial_euler(4, MValue::Finite(4), p, EulerKind::Geq).unwrap();
                assert_eq!(cs.rank, chi);
            }
        }
    }

    #[test]
    fn gamma_delta_serre_duality() {
        // gamma(p) equals delta(d-p) after substituting Serre-dual names.
        for d in 2..=5u32 {
            let profile = pf(d, 6, MValue::Finite(d));
            for p in 0..=d {
                let g = match gamma_series(&profile, p, 4) {
                    Ok(g) => g,
                    Err(_) => continue,
                };
                let del = delta_series(&profile, d - p, 4).unwrap();
                // rename h^{a,b} -> h^{d-a,d-b} in gamma's coefficients
                let mut map = BTreeMap::new();
                for a in 0..=d {
                    for b in 0..=d {
                        let from = HodgeVar::hodge(a, b);
                        if let HodgeVar::H { .. } = from {
                            map.insert(from, HodgeVar::hodge(d - a, d - b));
                        }
                    }
                }
                assert_eq!(g.series.rename_vars(&map), del.series, "d={d} p={p}");
                assert_eq!(g.rank.rename_vars(&map), del.rank, "rank d={d} p={p}");
            }
        }
    }

    #[test]
    fn complex_model_shape() {
        let dm = abelian_diamond(3);
        let model = ComplexModel::new(&dm, 1).unwrap();
        assert_eq!(model.terms.len(), 4);
        let twists: Vec<i64> = model.terms.iter().map(|t| t.0).collect();
        assert_eq!(twists, vec![-3, -2, -1, 0]);
    }
}
