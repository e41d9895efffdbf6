//! Constraint extraction: coefficient and Schur positivity, vanishing
//! clauses, rank and Euler-characteristic bounds, and the wedge-product
//! family, assembled into a deduplicated catalog for a profile.

use num_traits::Zero;

use crate::complex::{
    delta_series, epsilon_series, full_euler, gamma_series, partial_euler, series_factor_indices,
    ChernSeries, EulerKind, SeriesKind,
};
use crate::constraint::{dedup_constraints, Constraint, Hypothesis, Origin, Relation};
use crate::error::{CoreError, Result};
use crate::hodge::{classify_orbit, MValue, ManifoldProfile, OrbitClass};
use crate::partitions::partitions_up_to_weight;
use crate::poly::MultiPoly;
use crate::rational::rat;
use crate::schur::schur_of_chern;
use crate::series::expand_factors_int;
use crate::var::HodgeVar;

/// Caps for catalog materialization. `None` picks the defaults: every
/// coefficient index up to q-1, Schur weight up to min(q-1, 12).
#[derive(Debug, Clone, Copy, Default)]
pub struct CatalogOptions {
    pub coeff_cap: Option<u64>,
    pub schur_cap: Option<u64>,
}

impl CatalogOptions {
    /// The published inequality apparatus: linear and quadratic coefficient
    /// constraints only. This is what bound derivation and minimization use.
    pub fn quadratic_apparatus() -> Self {
        CatalogOptions {
            coeff_cap: Some(2),
            schur_cap: Some(2),
        }
    }

    pub fn effective_coeff_cap(&self, q: u64) -> u64 {
        self.coeff_cap.unwrap_or(u64::MAX).min(q.saturating_sub(1))
    }

    pub fn effective_schur_cap(&self, q: u64) -> u64 {
        self.schur_cap.unwrap_or(12).min(q.saturating_sub(1))
    }
}

/// Symbolic diamond entry h^{p,j} with known orbits substituted.
fn entry_poly(d: u32, p: u32, j: u32) -> MultiPoly {
    match classify_orbit(d, p, j) {
        OrbitClass::One => MultiPoly::one(),
        OrbitClass::Irregularity => MultiPoly::var(HodgeVar::Q),
        OrbitClass::Free(_) => MultiPoly::var(HodgeVar::hodge(p, j)),
    }
}

fn window_hypotheses(kind: SeriesKind, d: u32, p: u32) -> Vec<Hypothesis> {
    match kind {
        SeriesKind::Gamma => vec![Hypothesis::MGt(d - p), Hypothesis::MLe(d)],
        SeriesKind::Delta => vec![Hypothesis::MGt(p), Hypothesis::MLe(d)],
        SeriesKind::Epsilon => vec![Hypothesis::MInfinite],
    }
}

/// Positivity, Schur and vanishing constraints carried by one window series.
///
/// For gamma/delta: one non-negativity constraint per coefficient index
/// 1..=min(q-1, coeff cap) (these are the single-column Schur cases), one
/// non-negativity constraint per non-column partition of weight up to the
/// Schur cap, and one conditional vanishing constraint per coefficient
/// index. For epsilon: one vanishing constraint per index.
pub fn extract_positivity_constraints(
    cs: &ChernSeries,
    pf: &ManifoldProfile,
    opts: &CatalogOptions,
) -> Result<Vec<Constraint>> {
    match (cs.kind, pf.m) {
        (SeriesKind::Epsilon, MValue::Finite(_)) => {
            return Err(CoreError::HypothesisViolation(
                "epsilon series does not match a finite-m profile".into(),
            ))
        }
        (SeriesKind::Gamma | SeriesKind::Delta, MValue::Infinity) => {
            return Err(CoreError::HypothesisViolation(
                "window series does not match an m = infinity profile".into(),
            ))
        }
        _ => {}
    }
    let d = pf.d;
    let p = cs.p;
    let mut out = Vec::new();
    if cs.vacuous || pf.q < 2 {
        return Ok(out);
    }
    let hyps = window_hypotheses(cs.kind, d, p);
    let coeff_hi = opts
        .effective_coeff_cap(pf.q)
        .min(cs.series.truncation() as u64 - 1);

    if cs.kind == SeriesKind::Epsilon {
        for i in 1..=coeff_hi {
            let c = Constraint::new(
                d,
                p,
                cs.series.coeff(i as usize).clone(),
                Relation::Zero,
                hyps.clone(),
                Origin::EpsilonZero { index: i },
            );
            if !c.is_trivially_true() {
                out.push(c);
            }
        }
        return Ok(out);
    }

    for i in 1..=coeff_hi {
        let expr = cs.series.coeff(i as usize).clone();
        let c = Constraint::new(
            d,
            p,
            expr.clone(),
            Relation::NonNeg,
            hyps.clone(),
            Origin::Coefficient {
                kind: cs.kind,
                index: i,
            },
        );
        if !c.is_trivially_true() {
            out.push(c);
        }
        let vanish = Constraint::new(
            d,
            p,
            expr,
            Relation::Zero,
            hyps.clone(),
            Origin::Vanishing {
                kind: cs.kind,
                index: i,
            },
        )
        .with_activation(d, &cs.rank, i);
        if !vanish.is_trivially_true() {
            out.push(vanish);
        }
    }

    let schur_hi = opts
        .effective_schur_cap(pf.q)
        .min(cs.series.truncation() as u64 - 1);
    for lam in partitions_up_to_weight(schur_hi as u32) {
        if lam.is_single_column() {
            continue; // structurally identical to the coefficient constraint
        }
        let expr = schur_of_chern(&lam, cs.series.coeffs());
        let c = Constraint::new(
            d,
            p,
            expr,
            Relation::NonNeg,
            hyps.clone(),
            Origin::Schur {
                kind: cs.kind,
                partition: lam,
            },
        );
        if !c.is_trivially_true() {
            out.push(c);
        }
    }
    Ok(out)
}

/// Rank bounds from the syzygy argument, both windows, with the quotient
/// bound h^{*,1} >= h^{*,0} + q - 1. Hypotheses are recorded, not checked.
pub fn extract_rank_constraints(pf: &ManifoldProfile, p: u32) -> Vec<Constraint> {
    let d = pf.d;
    let m = match pf.m {
        MValue::Finite(m) => m,
        MValue::Infinity => return Vec::new(),
    };
    let mut out = Vec::new();

    // Right window: needs d-p < m <= d.
    if d - p < m {
        let qgt = (m + p - d).max(d.saturating_sub(p + 1)) as u64;
        let hyps = vec![
            Hypothesis::MGt(d - p),
            Hypothesis::MLe(d),
            Hypothesis::QGt(qgt),
        ];
        let chi = partial_euler(d, pf.m, p, EulerKind::Geq).expect("window checked");
        let bound =
            MultiPoly::var(HodgeVar::Q).add(&MultiPoly::from_int(d as i64 - m as i64 - p as i64));
        push_nontrivial(
            &mut out,
            Constraint::new(
                d,
                p,
                chi.sub(&bound),
                Relation::NonNeg,
                hyps.clone(),
                Origin::RankBound {
                    kind: SeriesKind::Gamma,
                },
            ),
        );
        let quot = entry_poly(d, d - p, 1)
            .sub(&entry_poly(d, d - p, 0))
            .sub(&MultiPoly::var(HodgeVar::Q))
            .add(&MultiPoly::one());
        push_nontrivial(
            &mut out,
            Constraint::new(
                d,
                p,
                quot,
                Relation::NonNeg,
                hyps,
                Origin::QuotientBound {
                    kind: SeriesKind::Gamma,
                },
            ),
        );
    }

    // Left window: needs p < m <= d.
    if p < m {
        let qgt = (m - p).max(p.saturating_sub(1)) as u64;
        let hyps = vec![Hypothesis::MGt(p), Hypothesis::MLe(d), Hypothesis::QGt(qgt)];
        let chi = partial_euler(d, pf.m, p, EulerKind::Leq).expect("window checked");
        let bound = MultiPoly::var(HodgeVar::Q).add(&MultiPoly::from_int(p as i64 - m as i64));
        push_nontrivial(
            &mut out,
            Constraint::new(
                d,
                p,
                chi.sub(&bound),
                Relation::NonNeg,
                hyps.clone(),
                Origin::RankBound {
                    kind: SeriesKind::Delta,
                },
            ),
        );
        let quot = entry_poly(d, p, 1)
            .sub(&entry_poly(d, p, 0))
            .sub(&MultiPoly::var(HodgeVar::Q))
            .add(&MultiPoly::one());
        push_nontrivial(
            &mut out,
            Constraint::new(
                d,
                p,
                quot,
                Relation::NonNeg,
                hyps,
                Origin::QuotientBound {
                    kind: SeriesKind::Delta,
                },
            ),
        );
    }
    out
}

/// Signed Euler-characteristic bounds for isolated-zero profiles (m = d):
/// (-1)^{d-1} chi(Omega^1) >= 2 and (-1)^{d-p} chi(Omega^p) >= 1 for
/// p = 2..d-2. Emitted with hypotheses m = d, q > d, d >= 2.
pub fn extract_euler_constraints(pf: &ManifoldProfile) -> Vec<Constraint> {
    let d = pf.d;
    if d < 2 || pf.m != MValue::Finite(d) {
        return Vec::new();
    }
    let hyps = vec![
        Hypothesis::MEqualsDim,
        Hypothesis::QGt(d as u64),
        Hypothesis::DimGe(2),
    ];
    let mut out = Vec::new();
    let sign1 = if (d - 1).is_multiple_of(2) { 1 } else { -1 };
    let chi1 = full_euler(d, 1).scale(&rat(sign1));
    push_nontrivial(
        &mut out,
        Constraint::new(
            d,
            1,
            chi1.sub(&MultiPoly::from_int(2)),
            Relation::NonNeg,
            hyps.clone(),
            Origin::EulerBound,
        ),
    );
    for p in 2..=d.saturating_sub(2) {
        let sign = if (d - p).is_multiple_of(2) { 1 } else { -1 };
        let chi = full_euler(d, p).scale(&rat(sign));
        push_nontrivial(
            &mut out,
            Constraint::new(
                d,
                p,
                chi.sub(&MultiPoly::one()),
                Relation::NonNeg,
                hyps.clone(),
                Origin::EulerBound,
            ),
        );
    }
    out
}

/// The wedge-product bound family h^{0,k} >= k(q-k)+1, the two-form bound
/// h^{0,2} >= 4q-10 in dimension >= 3, and chi(omega) >= q-d when q >= d.
/// All carry the hypothesis m = d.
pub fn extract_md_extras(pf: &ManifoldProfile) -> Vec<Constraint> {
    let d = pf.d;
    if pf.m != MValue::Finite(d) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for k in 0..=d {
        // h^{0,k} - k q + k^2 - 1 >= 0
        let expr = entry_poly(d, 0, k)
            .sub(&MultiPoly::var(HodgeVar::Q).scale(&rat(k as i64)))
            .add(&MultiPoly::from_int(k as i64 * k as i64 - 1));
        push_nontrivial(
            &mut out,
            Constraint::new(
                d,
                0,
                expr,
                Relation::NonNeg,
                vec![Hypothesis::MEqualsDim],
                Origin::WedgeBound { k },
            ),
        );
    }
    if d >= 3 {
        let expr = entry_poly(d, 0, 2)
            .sub(&MultiPoly::var(HodgeVar::Q).scale(&rat(4)))
            .add(&MultiPoly::from_int(10));
        push_nontrivial(
            &mut out,
            Constraint::new(
                d,
                0,
                expr,
                Relation::NonNeg,
                vec![Hypothesis::MEqualsDim, Hypothesis::DimGe(3)],
                Origin::TwoFormBound,
            ),
        );
    }
    // chi(omega) = chi^{<= d}(Omega^0) >= q - d
    let chi = partial_euler(d, pf.m, 0, EulerKind::Leq).expect("p=0 window");
    let expr = chi
        .sub(&MultiPoly::var(HodgeVar::Q))
        .add(&MultiPoly::from_int(d as i64));
    push_nontrivial(
        &mut out,
        Constraint::new(
            d,
            0,
            expr,
            Relation::NonNeg,
            vec![Hypothesis::MEqualsDim, Hypothesis::QGe(d as u64)],
            Origin::CanonicalEulerBound,
        ),
    );
    out
}

/// Rank bounds obtained by running the vanishing clause on series whose
/// exponents are fully determined by the profile (constants and q only).
///
/// For such a series the coefficients are concrete integers once q is fixed,
/// so the largest index with a nonzero coefficient forces a lower bound on
/// the sheaf rank. The bound is computed for a sweep of numeric q values,
/// verified to be affine in q, and emitted symbolically. In dimension 2 this
/// recovers the classical surface bounds.
pub fn derive_vanishing_rank_bounds(d: u32, m: u32) -> Vec<Constraint> {
    let mut out = Vec::new();
    let probe = match ManifoldProfile::new(d, 2, MValue::Finite(m)) {
        Ok(pf) => pf,
        Err(_) => return out,
    };
    for p in 0..=d {
        for kind in [SeriesKind::Delta, SeriesKind::Gamma] {
            let indices = match series_factor_indices(&probe, p, kind) {
                Ok(ix) if !ix.is_empty() => ix,
                _ => continue,
            };
            // fully determined: every exponent orbit is 1 or q
            let mut shape: Vec<(u32, i64, bool)> = Vec::new(); // (j, sign, is_q)
            let mut ok = true;
            for &(j, idx) in &indices {
                let sign = if j % 2 == 1 { -1i64 } else { 1 };
                match classify_orbit(d, p, idx) {
                    OrbitClass::One => shape.push((j, sign, false)),
                    OrbitClass::Irregularity => shape.push((j, sign, true)),
                    OrbitClass::Free(_) => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            // sweep numeric q and record the top nonzero coefficient index
            let lo = 2u64;
            let hi = 40u64;
            let mut samples = Vec::new();
            for qn in lo..=hi {
                let factors: Vec<(u32, i64)> = shape
                    .iter()
                    .map(|&(j, sign, is_q)| (j, if is_q { sign * qn as i64 } else { sign }))
                    .collect();
                let coeffs = expand_factors_int(&factors, qn as usize);
                let i0 = (1..qn as usize)
                    .rev()
                    .find(|&i| !coeffs[i].is_zero())
                    .unwrap_or(0) as i64;
                samples.push((qn as i64, i0));
            }
            // affine fit i0 = alpha q + beta, verified over the whole sweep
            let (q1, i1) = samples[samples.len() - 2];
            let (q2, i2) = samples[samples.len() - 1];
            let alpha = i2 - i1;
            let beta = i2 - alpha * q2;
            debug_assert_eq!(q2 - q1, 1);
            if !samples.iter().all(|&(qn, i0)| i0 == alpha * qn + beta) {
                continue;
            }
            let euler_kind = match kind {
                SeriesKind::Delta => EulerKind::Leq,
                SeriesKind::Gamma => EulerKind::Geq,
                SeriesKind::Epsilon => unreachable!(),
            };
            let rank = partial_euler(d, MValue::Finite(m), p, euler_kind).expect("window");
            let bound = MultiPoly::var(HodgeVar::Q)
                .scale(&rat(alpha))
                .add(&MultiPoly::from_int(beta));
            let hyps = window_hypotheses(kind, d, p);
            push_nontrivial(
                &mut out,
                Constraint::new(
                    d,
                    p,
                    rank.sub(&bound),
                    Relation::NonNeg,
                    hyps,
                    Origin::DerivedRankBound { kind },
                ),
            );
        }
    }
    out
}

fn push_nontrivial(out: &mut Vec<Constraint>, c: Constraint) {
    if !c.is_trivially_true() {
        out.push(c);
    }
}

/// Series truncation needed to materialize the requested caps, never above q.
fn truncation_for(pf: &ManifoldProfile, opts: &CatalogOptions) -> usize {
    let need = opts
        .effective_coeff_cap(pf.q)
        .max(opts.effective_schur_cap(pf.q))
        + 1;
    need.min(pf.q) as usize
}

/// The full constraint catalog for a profile: window positivity families for
/// every form degree, rank bounds, Euler bounds, the wedge family and the
/// vanishing-derived rank bounds, deduplicated and deterministically
/// ordered.
pub fn generate_catalog(pf: &ManifoldProfile, opts: &CatalogOptions) -> Result<Vec<Constraint>> {
    pf.validate()?;
    let d = pf.d;
    let mut all = Vec::new();
    let n = truncation_for(pf, opts);
    match pf.m {
        MValue::Infinity => {
            if n >= 2 {
                for p in 0..=d {
                    let cs = epsilon_series(pf, p, n)?;
                    all.extend(extract_positivity_constraints(&cs, pf, opts)?);
                }
            }
        }
        MValue::Finite(m) => {
            if n >= 2 {
                for p in 0..=d {
                    if p <= m {
                        let cs = delta_series(pf, p, n)?;
                        all.extend(extract_positivity_constraints(&cs, pf, opts)?);
                    }
                    if d - p <= m {
                        let cs = gamma_series(pf, p, n)?;
                        all.extend(extract_positivity_constraints(&cs, pf, opts)?);
                    }
                }
            }
            for p in 0..=d {
                all.extend(extract_rank_constraints(pf, p));
            }
            all.extend(extract_euler_constraints(pf));
            all.extend(extract_md_extras(pf));
            all.extend(derive_vanishing_rank_bounds(d, m));
        }
    }
    Ok(dedup_constraints(all))
}

/// Chern-series handle for one (p, kind) pair of a profile, used by callers
/// that iterate every window.
pub fn applicable_series(pf: &ManifoldProfile, n: usize) -> Result<Vec<ChernSeries>> {
    let d = pf.d;
    let mut out = Vec::new();
    match pf.m {
        MValue::Infinity => {
            for p in 0..=d {
                out.push(epsilon_series(pf, p, n)?);
            }
        }
        MValue::Finite(m) => {
            for p in 0..=d {
                if p <= m {
                    out.push(delta_series(pf, p, n)?);
                }
                if d - p <= m {
                    out.push(gamma_series(pf, p, n)?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::Partition;

    fn pf(d: u32, q: u64, m: MValue) -> ManifoldProfile {
        ManifoldProfile::new(d, q, m).unwrap()
    }

    fn has_nonneg(list: &[Constraint], expr: &MultiPoly) -> bool {
        list.iter()
            .any(|c| c.relation == Relation::NonNeg && &c.expr == expr)
    }

    fn h(p: u32, j: u32) -> MultiPoly {
        MultiPoly::var(HodgeVar::hodge(p, j))
    }

    fn q() -> MultiPoly {
        MultiPoly::var(HodgeVar::Q)
    }

    #[test]
    fn threefold_first_order_constraint() {
        let profile = pf(3, 5, MValue::Finite(3));
        let cs = delta_series(&profile, 1, 3).unwrap();
        let list =
            extract_positivity_constraints(&cs, &profile, &CatalogOptions::default()).unwrap();
        let expected = h(1, 1).sub(&q().scale(&rat(2)));
        assert!(has_nonneg(&list, &expected));
    }

    #[test]
    fn fivefold_constraint_after_renaming() {
        // delta(Omega^2), d=5: h^{2,2} - 2h^{1,2} + 3h^{0,2} >= 0
        let profile = pf(5, 6, MValue::Finite(5));
        let cs = delta_series(&profile, 2, 3).unwrap();
        let list =
            extract_positivity_constraints(&cs, &profile, &CatalogOptions::default()).unwrap();
        let expected = h(2, 2)
            .sub(&h(1, 2).scale(&rat(2)))
            .add(&h(0, 2).scale(&rat(3)));
        assert!(has_nonneg(&list, &expected));
    }

    #[test]
    fn epsilon_catalog_for_minimal_surface_profile() {
        // d=2, q=2, m=inf: exactly one vanishing constraint per p
        let profile = pf(2, 2, MValue::Infinity);
        let catalog = generate_catalog(&profile, &CatalogOptions::default()).unwrap();
        assert!(catalog.iter().all(|c| c.relation == Relation::Zero));
        assert_eq!(catalog.len(), 3, "{catalog:?}");
        let mut ps: Vec<u32> = catalog.iter().map(|c| c.p).collect();
        ps.sort();
        assert_eq!(ps, vec![0, 1, 2]);
    }

    #[test]
    fn rank_constraints_threefold() {
        let profile = pf(3, 5, MValue::Finite(3));
        // p=0: chi(omega) >= q-3, canonically h^{0,3} - h^{0,2} + 2 >= 0
        let list = extract_rank_constraints(&profile, 0);
        let expected = h(0, 3).sub(&h(0, 2)).add(&MultiPoly::from_int(2));
        assert!(has_nonneg(&list, &expected), "{list:?}");

        // p=1: h^{1,1} >= 2q-1
        let list = extract_rank_constraints(&profile, 1);
        let expected = h(1, 1).sub(&q().scale(&rat(2))).add(&MultiPoly::one());
        assert!(has_nonneg(&list, &expected), "{list:?}");
    }

    #[test]
    fn rank_constraint_fourfold_gamma_quotient() {
        // d=4, m=4, p=1, right window: h^{3,1} >= h^{3,0} + q - 1, i.e.
        // h^{1,3} - h^{0,3} - q + 1 >= 0 canonically.
        let profile = pf(4, 6, MValue::Finite(4));
        let list = extract_rank_constraints(&profile, 1);
        let expected = h(1, 3).sub(&h(0, 3)).sub(&q()).add(&MultiPoly::one());
        assert!(has_nonneg(&list, &expected), "{list:?}");
    }

    #[test]
    fn euler_constraints() {
        // d=3: chi(Omega^1) >= 2
        let profile = pf(3, 5, MValue::Finite(3));
        let list = extract_euler_constraints(&profile);
        assert_eq!(list.len(), 1);
        // chi(Om^1) = q - h^{1,1} + h^{1,2} - h^{1,3}; canonically h^{1,3} -> h^{0,2}
        let expected = q()
            .sub(&h(1, 1))
            .add(&h(1, 2))
            .sub(&h(0, 2))
            .sub(&MultiPoly::from_int(2));
        assert_eq!(list[0].expr, expected);

        // d=4: -chi(Omega^1) >= 2 and chi(Omega^2) >= 1
        let profile = pf(4, 6, MValue::Finite(4));
        let list = extract_euler_constraints(&profile);
        assert_eq!(list.len(), 2);
    }

    #[test]
    fn md_extras_examples() {
        let profile = pf(3, 5, MValue::Finite(3));
        let list = extract_md_extras(&profile);
        // k=2 wedge: h^{0,2} >= 2q-3
        let expected = h(0, 2)
            .sub(&q().scale(&rat(2)))
            .add(&MultiPoly::from_int(3));
        assert!(has_nonneg(&list, &expected), "{list:?}");
        // two-form bound h^{0,2} >= 4q-10
        let expected = h(0, 2)
            .sub(&q().scale(&rat(4)))
            .add(&MultiPoly::from_int(10));
        assert!(has_nonneg(&list, &expected));
        // canonical euler: chi(omega) >= q-3 -> h^{0,3} - h^{0,2} + 2 >= 0
        let expected = h(0, 3).sub(&h(0, 2)).add(&MultiPoly::from_int(2));
        assert!(has_nonneg(&list, &expected));
    }

    #[test]
    fn surface_classics_derived() {
        let list = derive_vanishing_rank_bounds(2, 2);
        // h^{0,2} - 2q + 3 >= 0 and h^{1,1} - 2q + 1 >= 0
        let castelnuovo = h(0, 2)
            .sub(&q().scale(&rat(2)))
            .add(&MultiPoly::from_int(3));
        let second = h(1, 1).sub(&q().scale(&rat(2))).add(&MultiPoly::one());
        assert!(has_nonneg(&list, &castelnuovo), "{list:?}");
        assert!(has_nonneg(&list, &second), "{list:?}");
    }

    #[test]
    fn catalog_deduplicates_dual_windows() {
        // gamma(Omega^2) and delta(Omega^1) give the same threefold
        // constraint h^{1,1} >= 2q; it must appear once with merged
        // provenance.
        let profile = pf(3, 5, MValue::Finite(3));
        let catalog = generate_catalog(&profile, &CatalogOptions::default()).unwrap();
        let expected = h(1, 1).sub(&q().scale(&rat(2)));
        let hits: Vec<&Constraint> = catalog
            .iter()
            .filter(|c| c.expr == expected && c.relation == Relation::NonNeg)
            .collect();
        assert_eq!(hits.len(), 1, "{hits:?}");
        assert!(hits[0].provenance.len() >= 2);
    }

    #[test]
    fn subsumption_single_column_equals_coefficient() {
        // schur on (1^i) equals the i-th coefficient for every window
        let profile = pf(3, 6, MValue::Finite(3));
        for cs in applicable_series(&profile, 4).unwrap() {
            if cs.vacuous {
                continue;
            }
            for i in 1..=3u32 {
                let col = Partition::column(i);
                let via_schur = schur_of_chern(&col, cs.series.coeffs());
                assert_eq!(&via_schur, cs.series.coeff(i as usize));
            }
        }
    }

    #[test]
    fn kind_profile_mismatch_is_error() {
        let inf = pf(3, 4, MValue::Infinity);
        let fin = pf(3, 4, MValue::Finite(3));
        let eps = crate::complex::epsilon_series(&inf, 0, 3).unwrap();
        assert!(extract_positivity_constraints(&eps, &fin, &CatalogOptions::default()).is_err());
        let del = delta_series(&fin, 0, 3).unwrap();
        assert!(extract_positivity_constraints(&del, &inf, &CatalogOptions::default()).is_err());
    }

    #[test]
    fn catalog_deterministic() {
        let profile = pf(4, 5, MValue::Finite(4));
        let a = generate_catalog(&profile, &CatalogOptions::default()).unwrap();
        let b = generate_catalog(&profile, &CatalogOptions::default()).unwrap();
        assert_eq!(a, b);
    }
}
