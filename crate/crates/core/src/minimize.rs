//! Catalog-relative integer minimization of a single Hodge number.
//!
//! The search strategy is coordinate descent from below: every free orbit
//! variable is driven to its own derived lower bound, iterating to a fixed
//! point; the target is then swept upward from its own envelope value until
//! a symmetry-consistent completion satisfies every active constraint. The
//! active catalog is the published inequality apparatus (coefficient indices
//! 1 and 2, Schur weight 2, rank, Euler and wedge bounds) plus the vanishing
//! clause, which is enforced wholesale: whenever a window series has a
//! nonzero coefficient at index i with rank < i < q, the rank is repaired by
//! raising the window entry that does not occur in the series.
//!
//! Minima are catalog-relative: the full coefficient family for indices
//! above 2 binds strictly harder and is deliberately not part of the search
//! apparatus, matching the published closed forms and asymptotics.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::bounds::solve_quadratic_bound;
use crate::catalog::{generate_catalog, CatalogOptions};
use crate::complex::{series_factor_indices, EulerKind, SeriesKind};
use crate::constraint::{Constraint, Relation};
use crate::error::{CoreError, Result};
use crate::feasibility::check_diamond;
use crate::hodge::{
    classify_orbit, partial_diamond, Cell, HodgeDiamond, MValue, ManifoldProfile, OrbitClass,
};
use crate::poly::MultiPoly;
use crate::rational::{ceil_affine_radical, Rational};
use crate::series::expand_factors_int;
use crate::var::HodgeVar;

#[derive(Debug, Clone, Copy)]
pub struct MinimizeOptions {
    /// Hard cap on any variable value during the search.
    pub ceiling: u64,
    /// When positive, brute-force a box of this radius around the greedy
    /// witness to confirm no smaller target value is feasible; a
    /// disagreement is surfaced as an error.
    pub verify_box_radius: u64,
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        MinimizeOptions {
            ceiling: 10_000_000,
            verify_box_radius: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Minimized {
    pub value: u64,
    pub witness: HodgeDiamond,
    /// The active catalog the minimum is relative to.
    pub catalog: Vec<Constraint>,
    /// True when the target was already pinned by the profile or symmetry.
    pub forced: bool,
}

/// One window series with profile-resolved factor shape, for the wholesale
/// vanishing check.
struct SeriesShape {
    kind: SeriesKind,
    /// (j, sign, entry): entry None means the exponent is the constant 1.
    factors: Vec<(u32, i64, Option<HodgeVar>)>,
    rank: MultiPoly,
    /// Orbit variable of the window entry that does not occur in the series,
    /// whose increase raises the rank one-for-one.
    slack: Option<HodgeVar>,
}

struct Search<'a> {
    pf: &'a ManifoldProfile,
    base: HodgeDiamond,
    free: Vec<HodgeVar>,
    catalog: Vec<Constraint>,
    shapes: Vec<SeriesShape>,
    ceiling: u64,
}

pub fn minimize_hodge_number(
    target: HodgeVar,
    pf: &ManifoldProfile,
    fixed: &BTreeMap<(u32, u32), u64>,
    opts: &MinimizeOptions,
) -> Result<Minimized> {
    pf.validate()?;
    let d = pf.d;

    let mut pins = fixed.clone();
    pins.insert((0, 1), pf.q);
    let base = partial_diamond(d, &pins)?;

    // resolve the target orbit; it may be forced by the profile or symmetry
    let target_rep = match target {
        HodgeVar::Q => {
            return forced_result(pf, &base, pf.q);
        }
        HodgeVar::H { p, j } => {
            if p > d || j > d {
                return Err(CoreError::FormDegreeOutOfRange { p: p.max(j), d });
            }
            match classify_orbit(d, p, j) {
                OrbitClass::One => return forced_result(pf, &base, 1),
                OrbitClass::Irregularity => return forced_result(pf, &base, pf.q),
                OrbitClass::Free(rep) => rep,
            }
        }
    };
    let free = base.free_orbits();
    if !free.contains(&target_rep) {
        if let Some((rp, rj)) = target_rep.indices() {
            if let Some(v) = base.value(rp, rj) {
                return Err(CoreError::TargetPinned(format!(
                    "{target_rep} is fixed to {v}"
                )));
            }
        }
        return Err(CoreError::TargetPinned(target_rep.to_string()));
    }

    let catalog = generate_catalog(pf, &CatalogOptions::quadratic_apparatus())?;
    let active: Vec<Constraint> = catalog
        .iter()
        .filter(|c| c.hypotheses_hold(pf))
        .cloned()
        .collect();
    let shapes = series_shapes(pf)?;
    let search = Search {
        pf,
        base: base.clone(),
        free: free.clone(),
        catalog: active,
        shapes,
        ceiling: opts.ceiling,
    };

    // Envelope pass: every free variable (target included) to its own bound.
    let mut state: BTreeMap<HodgeVar, u64> = free.iter().map(|v| (*v, 0)).collect();
    search.fixpoint(&mut state, None)?;
    let mut t = state[&target_rep];

    // Sweep the target upward until a completion exists.
    loop {
        if t > opts.ceiling {
            return Err(CoreError::SearchCeilingExceeded(opts.ceiling));
        }
        let mut completion: BTreeMap<HodgeVar, u64> = free.iter().map(|v| (*v, 0)).collect();
        completion.insert(target_rep, t);
        if search.fixpoint(&mut completion, Some(target_rep))? && search.satisfied(&completion)? {
            let witness = search.witness(&completion);
            let report = check_diamond(&witness, pf, &catalog)?;
            debug_assert!(report.feasible, "witness must satisfy its own catalog");
            if opts.verify_box_radius > 0 {
                verify_box(&search, &completion, target_rep, t, opts.verify_box_radius)?;
            }
            return Ok(Minimized {
                value: t,
                witness,
                catalog,
                forced: false,
            });
        }
        t += 1;
    }
}

fn forced_result(pf: &ManifoldProfile, base: &HodgeDiamond, value: u64) -> Result<Minimized> {
    let catalog = generate_catalog(pf, &CatalogOptions::quadratic_apparatus())?;
    Ok(Minimized {
        value,
        witness: base.clone(),
        catalog,
        forced: true,
    })
}

/// Profile-resolved factor shapes for every applicable window.
fn series_shapes(pf: &ManifoldProfile) -> Result<Vec<SeriesShape>> {
    let d = pf.d;
    let mut out = Vec::new();
    let mut push = |kind: SeriesKind, p: u32| -> Result<()> {
        let indices = series_factor_indices(pf, p, kind)?;
        if indices.is_empty() {
            return Ok(());
        }
        let factors = indices
            .iter()
            .map(|&(j, idx)| {
                let sign = if j % 2 == 1 { -1i64 } else { 1 };
                let entry = match classify_orbit(d, p, idx) {
                    OrbitClass::One => None,
                    OrbitClass::Irregularity => Some(HodgeVar::Q),
                    OrbitClass::Free(rep) => Some(rep),
                };
                (j, sign, entry)
            })
            .collect();
        let (rank, slack_idx) = match kind {
            SeriesKind::Delta => {
                let m = match pf.m {
                    MValue::Finite(m) => m,
                    MValue::Infinity => unreachable!(),
                };
                (
                    crate::complex::partial_euler(d, pf.m, p, EulerKind::Leq)?,
                    m - p,
                )
            }
            SeriesKind::Gamma => {
                let m = match pf.m {
                    MValue::Finite(m) => m,
                    MValue::Infinity => unreachable!(),
                };
                (
                    crate::complex::partial_euler(d, pf.m, p, EulerKind::Geq)?,
                    2 * d - m - p,
                )
            }
            SeriesKind::Epsilon => (crate::complex::full_euler(d, p), 0),
        };
        let slack = match kind {
            SeriesKind::Epsilon => None,
            _ => match classify_orbit(d, p, slack_idx) {
                OrbitClass::Free(rep) => Some(rep),
                _ => None,
            },
        };
        out.push(SeriesShape {
            kind,
            factors,
            rank: crate::constraint::canonicalize_expr(d, &rank),
            slack,
        });
        Ok(())
    };
    match pf.m {
        MValue::Infinity => {
            for p in 0..=d {
                push(SeriesKind::Epsilon, p)?;
            }
        }
        MValue::Finite(m) => {
            for p in 0..=d {
                if p < m {
                    push(SeriesKind::Delta, p)?;
                }
                if d - p < m {
                    push(SeriesKind::Gamma, p)?;
                }
            }
        }
    }
    Ok(out)
}

impl<'a> Search<'a> {
    fn assignment(&self, state: &BTreeMap<HodgeVar, u64>) -> BTreeMap<HodgeVar, BigInt> {
        let d = self.pf.d;
        let mut asg = BTreeMap::new();
        for p in 0..=d {
            for j in p..=d {
                let v = match self.base.get(p, j) {
                    Cell::Num(v) => *v,
                    Cell::Sym(rep) => state[rep],
                };
                asg.insert(HodgeVar::hodge(p, j), BigInt::from(v));
            }
        }
        asg
    }

    /// Drive every free variable except `pinned` to its derived lower bound
    /// until stable. Returns false when a vanishing repair is impossible.
    fn fixpoint(
        &self,
        state: &mut BTreeMap<HodgeVar, u64>,
        pinned: Option<HodgeVar>,
    ) -> Result<bool> {
        for _ in 0..500 {
            let mut changed = false;
            let asg = self.assignment(state);
            for &v in &self.free {
                if Some(v) == pinned {
                    continue;
                }
                let lb = self.lower_bound_for(v, state, &asg)?;
                if lb > state[&v] {
                    if lb > self.ceiling {
                        return Err(CoreError::SearchCeilingExceeded(self.ceiling));
                    }
                    state.insert(v, lb);
                    changed = true;
                }
            }
            // wholesale vanishing repair; the rank is re-evaluated against
            // the live state so overlapping deficits are not double-counted
            for shape in &self.shapes {
                if shape.kind == SeriesKind::Epsilon {
                    continue;
                }
                let needed = self.rank_needed(shape, state);
                let rank = shape.rank.eval(&self.assignment(state))?;
                let deficit = Rational::from_integer(BigInt::from(needed)) - &rank;
                if deficit.is_positive() {
                    let bump = deficit.ceil().to_integer().to_u64().unwrap_or(u64::MAX);
                    match shape.slack {
                        Some(slack) if Some(slack) != pinned && state.contains_key(&slack) => {
                            let nv = state[&slack].saturating_add(bump);
                            if nv > self.ceiling {
                                return Err(CoreError::SearchCeilingExceeded(self.ceiling));
                            }
                            state.insert(slack, nv);
                            changed = true;
                        }
                        _ => return Ok(false),
                    }
                }
            }
            if !changed {
                return Ok(true);
            }
        }
        Err(CoreError::SearchCeilingExceeded(self.ceiling))
    }

    /// Largest index below q with a nonzero series coefficient at the
    /// current state (0 when the whole range vanishes).
    fn rank_needed(&self, shape: &SeriesShape, state: &BTreeMap<HodgeVar, u64>) -> u64 {
        let q = self.pf.q;
        if q < 2 {
            return 0;
        }
        let factors: Vec<(u32, i64)> = shape
            .factors
            .iter()
            .map(|&(j, sign, entry)| {
                let v = match entry {
                    None => 1i64,
                    Some(HodgeVar::Q) => q as i64,
                    Some(rep) => self.resolve(rep, state) as i64,
                };
                (j, sign * v)
            })
            .collect();
        let coeffs = expand_factors_int(&factors, q as usize);
        (1..q as usize)
            .rev()
            .find(|&i| !coeffs[i].is_zero())
            .unwrap_or(0) as u64
    }

    fn resolve(&self, rep: HodgeVar, state: &BTreeMap<HodgeVar, u64>) -> u64 {
        match rep {
            HodgeVar::Q => self.pf.q,
            HodgeVar::H { p, j } => match self.base.get(p, j) {
                Cell::Num(v) => *v,
                Cell::Sym(r) => state[r],
            },
        }
    }

    /// The variable a constraint propagates its bound to: the
    /// lexicographically last free variable occurring in it. This mirrors
    /// how the published chains use each inequality (always solved for its
    /// top-index entry) and keeps the coordinate iteration from feeding a
    /// bound back through a lower-index variable.
    fn lead_var(&self, c: &Constraint) -> Option<HodgeVar> {
        c.expr
            .vars()
            .into_iter()
            .filter(|v| self.free.contains(v))
            .max()
    }

    /// Smallest admissible value of v given the rest of the state.
    fn lower_bound_for(
        &self,
        v: HodgeVar,
        state: &BTreeMap<HodgeVar, u64>,
        asg: &BTreeMap<HodgeVar, BigInt>,
    ) -> Result<u64> {
        let mut lb = state[&v];
        for c in &self.catalog {
            if c.activation.is_some() {
                continue;
            }
            if self.lead_var(c) != Some(v) {
                continue;
            }
            if c.expr.degree_in(v) == 0 {
                continue;
            }
            if c.relation == Relation::Zero {
                // a linear equality pins its lead variable outright when the
                // solution is a non-negative integer at or above the current
                // value; otherwise the completion is infeasible and the
                // global check rejects it
                if c.expr.degree_in(v) == 1 {
                    let coeffs = c.expr.coeffs_in(v);
                    let mut reduced = asg.clone();
                    reduced.remove(&v);
                    let a0 = coeffs[0].eval(&reduced)?;
                    let a1 = coeffs[1].eval(&reduced)?;
                    if !a1.is_zero() {
                        let sol = -(a0 / a1);
                        if sol.is_integer() && !sol.is_negative() {
                            if let Some(x) = sol.to_integer().to_u64() {
                                lb = lb.max(x);
                            }
                        }
                    }
                }
                continue;
            }
            let coeffs = c.expr.coeffs_in(v);
            let mut vals = Vec::with_capacity(coeffs.len());
            let mut reduced = asg.clone();
            reduced.remove(&v);
            for cp in &coeffs {
                vals.push(cp.eval(&reduced)?);
            }
            let cand = match vals.len() {
                2 => {
                    let a1 = &vals[1];
                    let a0 = &vals[0];
                    if a1.is_positive() {
                        let root = -(a0 / a1);
                        let c = root.ceil().to_integer();
                        big_to_u64(&c)
                    } else {
                        None // upper-bound direction; left to global check
                    }
                }
                3 => {
                    let a2 = &vals[2];
                    let a1 = &vals[1];
                    let a0 = &vals[0];
                    if !a2.is_positive() {
                        None
                    } else {
                        // current value feasible? then no bound from here
                        let cur = Rational::from_integer(BigInt::from(state[&v]));
                        let val = a2 * &cur * &cur + a1 * &cur + a0;
                        if !val.is_negative() {
                            None
                        } else {
                            let disc = a1 * a1 - Rational::from_integer(BigInt::from(4)) * a2 * a0;
                            if disc.is_negative() {
                                None
                            } else {
                                // ceil of the larger root
                                let two_a2 = Rational::from_integer(BigInt::from(2)) * a2;
                                let lin = -(a1 / &two_a2);
                                let den = disc.denom().clone();
                                let rad = disc.numer() * &den;
                                let coeff = (Rational::from_integer(den) * &two_a2).recip();
                                let z = ceil_affine_radical(&lin, &coeff, &rad);
                                big_to_u64(&z)
                            }
                        }
                    }
                }
                _ => {
                    // cubic or higher from a wider catalog: integer ascent
                    let mut cur = state[&v];
                    let mut full = asg.clone();
                    loop {
                        full.insert(v, BigInt::from(cur));
                        if !c.expr.eval(&full)?.is_negative() {
                            break Some(cur);
                        }
                        cur += 1;
                        if cur > self.ceiling {
                            return Err(CoreError::SearchCeilingExceeded(self.ceiling));
                        }
                    }
                }
            };
            if let Some(cand) = cand {
                lb = lb.max(cand);
            }
        }
        Ok(lb)
    }

    /// Full feasibility of a completed state: every active catalog
    /// constraint plus the wholesale coefficient/vanishing pass.
    fn satisfied(&self, state: &BTreeMap<HodgeVar, u64>) -> Result<bool> {
        let asg = self.assignment(state);
        for c in &self.catalog {
            let active = match &c.activation {
                None => true,
                Some(vc) => {
                    let rank = vc.rank.eval(&asg)?;
                    rank < Rational::from_integer(BigInt::from(vc.index)) && vc.index < self.pf.q
                }
            };
            if !active {
                continue;
            }
            let val = c.expr.eval(&asg)?;
            let ok = match c.relation {
                Relation::NonNeg => !val.is_negative(),
                Relation::Zero => val.is_zero(),
            };
            if !ok {
                return Ok(false);
            }
        }
        for shape in &self.shapes {
            if shape.kind == SeriesKind::Epsilon {
                // everywhere-exact case: every coefficient below q vanishes
                if self.rank_needed(shape, state) != 0 {
                    return Ok(false);
                }
                continue;
            }
            let needed = self.rank_needed(shape, state);
            let rank = shape.rank.eval(&asg)?;
            if rank < Rational::from_integer(BigInt::from(needed)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn witness(&self, state: &BTreeMap<HodgeVar, u64>) -> HodgeDiamond {
        let mut dm = self.base.clone();
        for (&v, &val) in state {
            dm = dm.assign_orbit(v, val);
        }
        dm
    }
}

fn big_to_u64(z: &BigInt) -> Option<u64> {
    if z.is_negative() {
        Some(0)
    } else {
        z.to_u64()
    }
}

/// Exhaustive confirmation that no target value below `found` admits a
/// completion inside the box of the given radius around the greedy witness.
fn verify_box(
    search: &Search<'_>,
    witness_state: &BTreeMap<HodgeVar, u64>,
    target: HodgeVar,
    found: u64,
    radius: u64,
) -> Result<()> {
    let others: Vec<HodgeVar> = search
        .free
        .iter()
        .copied()
        .filter(|&v| v != target)
        .collect();
    let lo = found.saturating_sub(radius);
    for t in lo..found {
        let mut state = witness_state.clone();
        state.insert(target, t);
        if explore(search, &others, 0, &mut state, radius)? {
            return Err(CoreError::SearchDiscrepancy {
                greedy: found,
                sweep: t,
            });
        }
    }
    Ok(())
}

fn explore(
    search: &Search<'_>,
    others: &[HodgeVar],
    i: usize,
    state: &mut BTreeMap<HodgeVar, u64>,
    radius: u64,
) -> Result<bool> {
    if i == others.len() {
        return search.satisfied(state);
    }
    let v = others[i];
    let base = state[&v];
    for delta in 0..=radius {
        state.insert(v, base + delta);
        if explore(search, others, i + 1, state, radius)? {
            state.insert(v, base);
            return Ok(true);
        }
    }
    state.insert(v, base);
    Ok(false)
}

/// Convenience wrapper that also derives the target's quadratic closed form
/// when one of the active degree-2 constraints is quadratic in it; used by
/// callers that want the bound next to the integer minimum.
pub fn quadratic_bound_for_target(
    pf: &ManifoldProfile,
    target: HodgeVar,
) -> Result<Option<crate::bounds::BoundExpr>> {
    let catalog = generate_catalog(pf, &CatalogOptions::quadratic_apparatus())?;
    // prefer the second-coefficient constraint; Schur determinants of the
    // same weight give valid but different closed forms
    let candidates: Vec<&Constraint> = catalog
        .iter()
        .filter(|c| {
            c.relation == Relation::NonNeg
                && c.activation.is_none()
                && c.expr.degree_in(target) == 2
        })
        .collect();
    let coeff2: Vec<&Constraint> = candidates
        .iter()
        .copied()
        .filter(|c| {
            matches!(
                c.origin,
                crate::constraint::Origin::Coefficient { index: 2, .. }
            )
        })
        .collect();
    for c in coeff2.into_iter().chain(candidates) {
        if let Ok(b) = solve_quadratic_bound(c, target) {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(d: u32, q: u64, m: u32) -> ManifoldProfile {
        ManifoldProfile::new(d, q, MValue::Finite(m)).unwrap()
    }

    #[test]
    fn threefold_h11_q20_example() {
        let result = minimize_hodge_number(
            HodgeVar::hodge(1, 1),
            &pf(3, 20, 3),
            &BTreeMap::new(),
            &MinimizeOptions::default(),
        )
        .unwrap();
        assert_eq!(result.value, 46);
        let report = check_diamond(&result.witness, &pf(3, 20, 3), &result.catalog).unwrap();
        assert!(report.feasible);
    }

    #[test]
    fn surface_h02_q5_example() {
        let result = minimize_hodge_number(
            HodgeVar::hodge(0, 2),
            &pf(2, 5, 2),
            &BTreeMap::new(),
            &MinimizeOptions {
                verify_box_radius: 2,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(result.value, 7);
        // the witness also satisfies the h^{1,1} constraints
        assert!(result.witness.value(1, 1).unwrap() >= 9);
    }

    #[test]
    fn curve_targets_are_forced() {
        let profile = ManifoldProfile::new(1, 4, MValue::Finite(1)).unwrap();
        let r = minimize_hodge_number(
            HodgeVar::hodge(0, 1),
            &profile,
            &BTreeMap::new(),
            &MinimizeOptions::default(),
        )
        .unwrap();
        assert!(r.forced);
        assert_eq!(r.value, 4);
        let r = minimize_hodge_number(
            HodgeVar::hodge(1, 1),
            &profile,
            &BTreeMap::new(),
            &MinimizeOptions::default(),
        )
        .unwrap();
        assert!(r.forced);
        assert_eq!(r.value, 1);
    }

    #[test]
    fn fixed_target_is_rejected() {
        let mut fixed = BTreeMap::new();
        fixed.insert((1u32, 1u32), 50u64);
        let err = minimize_hodge_number(
            HodgeVar::hodge(1, 1),
            &pf(3, 10, 3),
            &fixed,
            &MinimizeOptions::default(),
        );
        assert!(matches!(err, Err(CoreError::TargetPinned(_))));
    }

    #[test]
    fn infinite_m_minimum_is_the_abelian_value() {
        // m = inf, d = 2, q = 2: the vanishing family forces h^{1,1} = 2q
        let profile = ManifoldProfile::new(2, 2, MValue::Infinity).unwrap();
        let r = minimize_hodge_number(
            HodgeVar::hodge(1, 1),
            &profile,
            &BTreeMap::new(),
            &MinimizeOptions::default(),
        )
        .unwrap();
        assert_eq!(r.value, 4);
    }

    #[test]
    fn derived_rank_bound_applies_below_m_equals_d() {
        // d=3, m=2: the left window of Omega^1 is fully profile-determined,
        // so the vanishing sweep still derives h^{1,1} >= 2q - 1
        let bounds = crate::catalog::derive_vanishing_rank_bounds(3, 2);
        let expected = crate::poly::MultiPoly::var(HodgeVar::hodge(1, 1))
            .sub(&crate::poly::MultiPoly::var(HodgeVar::Q).scale(&crate::rational::rat(2)))
            .add(&crate::poly::MultiPoly::one());
        assert!(bounds.iter().any(|c| c.expr == expected), "{bounds:?}");
    }

    #[test]
    fn greedy_agrees_with_box_sweep_small() {
        for q in [10u64, 20] {
            let result = minimize_hodge_number(
                HodgeVar::hodge(1, 1),
                &pf(3, q, 3),
                &BTreeMap::new(),
                &MinimizeOptions {
                    verify_box_radius: 1,
                    ..Default::default()
                },
            )
            .unwrap();
            assert!(result.value >= 2 * q - 1);
        }
    }
}
