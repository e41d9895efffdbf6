//! Polynomial constraints on Hodge numbers with hypothesis predicates.
//!
//! A constraint asserts `expr >= 0` or `expr = 0` for every manifold whose
//! profile satisfies the attached hypotheses. Vanishing-clause constraints
//! additionally carry an activation condition `rank < index < q` that is
//! evaluated against the diamond. Expressions are stored orbit-canonically:
//! every variable is the lexicographic representative of its symmetry orbit,
//! so the same inequality arising from dual windows deduplicates
//! structurally.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::complex::SeriesKind;
use crate::hodge::{classify_orbit, MValue, ManifoldProfile, OrbitClass};
use crate::partitions::Partition;
use crate::poly::MultiPoly;
use crate::var::HodgeVar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Relation {
    NonNeg,
    Zero,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::NonNeg => write!(f, ">= 0"),
            Relation::Zero => write!(f, "= 0"),
        }
    }
}

/// Profile predicate attached to a constraint; decidable from the profile
/// alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Hypothesis {
    /// m is finite and m > value
    MGt(u32),
    /// m is finite and m <= value
    MLe(u32),
    /// m = d
    MEqualsDim,
    /// m = infinity
    MInfinite,
    /// q > value
    QGt(u64),
    /// q >= value
    QGe(u64),
    /// d >= value
    DimGe(u32),
}

impl Hypothesis {
    pub fn holds(&self, pf: &ManifoldProfile) -> bool {
        match *self {
            Hypothesis::MGt(v) => matches!(pf.m, MValue::Finite(m) if m > v),
            Hypothesis::MLe(v) => matches!(pf.m, MValue::Finite(m) if m <= v),
            Hypothesis::MEqualsDim => matches!(pf.m, MValue::Finite(m) if m == pf.d),
            Hypothesis::MInfinite => pf.m == MValue::Infinity,
            Hypothesis::QGt(v) => pf.q > v,
            Hypothesis::QGe(v) => pf.q >= v,
            Hypothesis::DimGe(v) => pf.d >= v,
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Hypothesis::MGt(v) => write!(f, "m > {v}"),
            Hypothesis::MLe(v) => write!(f, "m <= {v}"),
            Hypothesis::MEqualsDim => write!(f, "m = d"),
            Hypothesis::MInfinite => write!(f, "m = inf"),
            Hypothesis::QGt(v) => write!(f, "q > {v}"),
            Hypothesis::QGe(v) => write!(f, "q >= {v}"),
            Hypothesis::DimGe(v) => write!(f, "d >= {v}"),
        }
    }
}

/// Activation condition of a vanishing-clause constraint: active exactly
/// when rank < index < q on the diamond under test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingCond {
    pub rank: MultiPoly,
    pub index: u64,
}

/// Where a constraint came from; drives provenance strings and tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    /// Coefficient of t^index of a window series is non-negative. These are
    /// the single-column Schur specializations.
    Coefficient { kind: SeriesKind, index: u64 },
    /// A Schur polynomial of the window series coefficients is non-negative.
    Schur {
        kind: SeriesKind,
        partition: Partition,
    },
    /// Coefficient of t^index vanishes when the sheaf rank is below index.
    Vanishing { kind: SeriesKind, index: u64 },
    /// Coefficient of t^index of the everywhere-exact series vanishes.
    EpsilonZero { index: u64 },
    /// Rank of a window sheaf is bounded below (syzygy argument).
    RankBound { kind: SeriesKind },
    /// Second rank bound h^{*,1} >= h^{*,0} + q - 1.
    QuotientBound { kind: SeriesKind },
    /// Signed Euler characteristic bound from non-split windows.
    EulerBound,
    /// Wedge-product dimension bound h^{0,k} >= k(q-k)+1.
    WedgeBound { k: u32 },
    /// Two-form bound h^{0,2} >= 4q-10.
    TwoFormBound,
    /// Canonical-sheaf Euler bound chi(omega) >= q - d.
    CanonicalEulerBound,
    /// Rank bound derived by the vanishing-clause sweep on a fully
    /// profile-determined series.
    DerivedRankBound { kind: SeriesKind },
}

impl Origin {
    pub fn provenance(&self) -> String {
        match self {
            Origin::Coefficient { kind, index } => {
                format!("{kind} coefficient positivity (i={index})")
            }
            Origin::Schur { kind, partition } => {
                format!("{kind} Schur positivity {partition}")
            }
            Origin::Vanishing { kind, index } => {
                format!("{kind} vanishing above rank (i={index})")
            }
            Origin::EpsilonZero { index } => format!("epsilon vanishing (i={index})"),
            Origin::RankBound { kind } => format!("{kind} rank bound"),
            Origin::QuotientBound { kind } => format!("{kind} quotient bound"),
            Origin::EulerBound => "euler characteristic bound".to_string(),
            Origin::WedgeBound { k } => format!("wedge bound (k={k})"),
            Origin::TwoFormBound => "two-form bound".to_string(),
            Origin::CanonicalEulerBound => "canonical euler bound".to_string(),
            Origin::DerivedRankBound { kind } => format!("{kind} vanishing-derived rank bound"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub expr: MultiPoly,
    pub relation: Relation,
    pub hypotheses: Vec<Hypothesis>,
    pub activation: Option<VanishingCond>,
    pub provenance: Vec<String>,
    pub p: u32,
    pub origin: Origin,
}

impl Constraint {
    pub fn new(
        d: u32,
        p: u32,
        expr: MultiPoly,
        relation: Relation,
        hypotheses: Vec<Hypothesis>,
        origin: Origin,
    ) -> Self {
        Constraint {
            expr: canonicalize_expr(d, &expr),
            relation,
            hypotheses,
            activation: None,
            provenance: vec![origin.provenance()],
            p,
            origin,
        }
    }

    pub fn with_activation(mut self, d: u32, rank: &MultiPoly, index: u64) -> Self {
        self.activation = Some(VanishingCond {
            rank: canonicalize_expr(d, rank),
            index,
        });
        self
    }

    pub fn hypotheses_hold(&self, pf: &ManifoldProfile) -> bool {
        self.hypotheses.iter().all(|h| h.holds(pf))
    }

    /// True when the expression is a non-negative constant (the constraint
    /// says nothing); such constraints are dropped at generation time.
    pub fn is_trivially_true(&self) -> bool {
        match self.expr.as_constant() {
            Some(c) => match self.relation {
                Relation::NonNeg => c >= crate::rational::rat(0),
                Relation::Zero => c == crate::rational::rat(0),
            },
            None => false,
        }
    }

    pub fn hypothesis_strings(&self) -> Vec<String> {
        let mut out: Vec<String> = self.hypotheses.iter().map(|h| h.to_string()).collect();
        if let Some(v) = &self.activation {
            out.push(format!("{} < {} < q", v.rank, v.index));
        }
        out
    }

    pub fn display_inequality(&self) -> String {
        format!("{} {}", self.expr, self.relation)
    }

    pub fn to_latex(&self) -> String {
        let rel = match self.relation {
            Relation::NonNeg => "\\geq 0",
            Relation::Zero => "= 0",
        };
        format!("{} {}", self.expr.to_latex(), rel)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "expr": self.expr.to_string(),
            "relation": match self.relation {
                Relation::NonNeg => "nonneg",
                Relation::Zero => "zero",
            },
            "hypotheses": self.hypothesis_strings(),
            "provenance": self.provenance,
            "p": self.p,
        })
    }
}

/// Replace every variable by its orbit representative for dimension d.
pub fn canonicalize_expr(d: u32, expr: &MultiPoly) -> MultiPoly {
    let mut map: BTreeMap<HodgeVar, HodgeVar> = BTreeMap::new();
    for v in expr.vars() {
        if let HodgeVar::H { p, j } = v {
            match classify_orbit(d, p, j) {
                OrbitClass::Free(rep) => {
                    map.insert(v, rep);
                }
                OrbitClass::Irregularity => {
                    map.insert(v, HodgeVar::Q);
                }
                // Orbits through (0,0) never survive series construction,
                // but be safe for hand-built expressions.
                OrbitClass::One => {}
            }
        }
    }
    expr.rename_vars(&map)
}

/// Merge structurally identical constraints, accumulating provenance, then
/// order deterministically by primary provenance and expression.
pub fn dedup_constraints(mut list: Vec<Constraint>) -> Vec<Constraint> {
    // group by a cached expression key so big polynomials stringify once
    list.sort_by_cached_key(|c| (c.expr.to_string(), c.relation));
    let mut merged: Vec<Constraint> = Vec::new();
    let mut group_start = 0usize;
    for c in list {
        let same_group = merged[group_start..]
            .first()
            .is_some_and(|p| p.expr == c.expr);
        if !same_group {
            group_start = merged.len();
        }
        if let Some(prev) = merged[group_start..].iter_mut().find(|prev| {
            prev.expr == c.expr
                && prev.relation == c.relation
                && prev.hypotheses == c.hypotheses
                && prev.activation == c.activation
        }) {
            for s in c.provenance {
                if !prev.provenance.contains(&s) {
                    prev.provenance.push(s);
                }
            }
        } else {
            merged.push(c);
        }
    }
    merged.sort_by_cached_key(|c| (c.provenance[0].clone(), c.expr.to_string(), c.relation));
    merged
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn canonicalization_uses_orbit_reps() {
        // d=3: h^{2,2} -> h^{1,1}, h^{1,3} -> h^{0,2}
        let e = MultiPoly::var(HodgeVar::hodge(2, 2)).add(&MultiPoly::var(HodgeVar::hodge(1, 3)));
        let canon = canonicalize_expr(3, &e);
        let expected =
            MultiPoly::var(HodgeVar::hodge(1, 1)).add(&MultiPoly::var(HodgeVar::hodge(0, 2)));
        assert_eq!(canon, expected);
    }

    #[test]
    fn dedup_merges_provenance() {
        let e =
            MultiPoly::var(HodgeVar::hodge(1, 1)).sub(&MultiPoly::var(HodgeVar::Q).scale(&rat(2)));
        let a = Constraint::new(
            3,
            1,
            e.clone(),
            Relation::NonNeg,
            vec![Hypothesis::MGt(1)],
            Origin::Coefficient {
                kind: SeriesKind::Delta,
                index: 1,
            },
        );
        let b = Constraint::new(
            3,
            2,
            e,
            Relation::NonNeg,
            vec![Hypothesis::MGt(1)],
            Origin::Coefficient {
                kind: SeriesKind::Gamma,
                index: 1,
            },
        );
        let merged = dedup_constraints(vec![a, b]);
        assert_eq!(merged.len(), 1);
        assert_eq!(merged[0].provenance.len(), 2);
    }

    #[test]
    fn trivial_constant_detected() {
        let c = Constraint::new(
            2,
            0,
            MultiPoly::zero(),
            Relation::NonNeg,
            vec![],
            Origin::EulerBound,
        );
        assert!(c.is_trivially_true());
    }
}
