//! Hodge diamonds and manifold profiles.
//!
//! A diamond is the (d+1) x (d+1) table of Hodge numbers. Entries are either
//! concrete non-negative integers or symbolic references to the canonical
//! variable of their symmetry orbit, so the same type serves numeric checking
//! and symbolic constraint generation. The symmetry group is generated by
//! Hodge symmetry (p,j) -> (j,p) and Serre duality (p,j) -> (d-p,d-j); every
//! orbit has at most 4 elements.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::var::HodgeVar;

/// Zero-locus invariant m(X): least codimension of the zero set of a nonzero
/// holomorphic 1-form, infinite when every such form is nowhere vanishing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MValue {
    Finite(u32),
    Infinity,
}

impl fmt::Display for MValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MValue::Finite(m) => write!(f, "{m}"),
            MValue::Infinity => write!(f, "inf"),
        }
    }
}

/// Albanese fiber dimensions: k = generic fiber, f = maximal fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlbaneseFibers {
    pub generic: u32,
    pub maximal: u32,
}

impl AlbaneseFibers {
    /// l = max{k, f-1}.
    pub fn l(&self) -> u32 {
        self.generic.max(self.maximal.saturating_sub(1))
    }
}

/// Discrete invariants driving hypothesis checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldProfile {
    pub d: u32,
    pub q: u64,
    pub m: MValue,
    pub albanese: Option<AlbaneseFibers>,
}

impl ManifoldProfile {
    pub fn new(d: u32, q: u64, m: MValue) -> Result<Self> {
        let pf = ManifoldProfile {
            d,
            q,
            m,
            albanese: None,
        };
        pf.validate()?;
        Ok(pf)
    }

    pub fn with_albanese(mut self, generic: u32, maximal: u32) -> Result<Self> {
        self.albanese = Some(AlbaneseFibers { generic, maximal });
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(CoreError::InvalidProfile(
                "dimension must be positive".into(),
            ));
        }
        if self.q == 0 {
            return Err(CoreError::InvalidProfile(
                "irregularity must be positive".into(),
            ));
        }
        if let MValue::Finite(m) = self.m {
            if m == 0 || m > self.d {
                return Err(CoreError::InvalidProfile(format!(
                    "m must satisfy 1 <= m <= d = {}, got {m}",
                    self.d
                )));
            }
        }
        if let Some(alb) = self.albanese {
            if alb.generic > alb.maximal || alb.maximal > self.d {
                return Err(CoreError::InvalidProfile(format!(
                    "albanese fibers need 0 <= k <= f <= d, got k={} f={}",
                    alb.generic, alb.maximal
                )));
            }
        }
        Ok(())
    }
}

/// One diamond entry: a known value or the canonical variable of its orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cell {
    Num(u64),
    Sym(HodgeVar),
}

/// The (d+1) x (d+1) table h[p][j].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeDiamond {
    d: u32,
    cells: Vec<Vec<Cell>>,
}

/// Full symmetry orbit of an index pair, sorted and deduplicated.
pub fn orbit(d: u32, p: u32, j: u32) -> Vec<(u32, u32)> {
    let mut o = vec![(p, j), (j, p), (d - p, d - j), (d - j, d - p)];
    o.sort_unstable();
    o.dedup();
    o
}

/// Canonical representative (lexicographic minimum) of an orbit.
pub fn orbit_rep(d: u32, p: u32, j: u32) -> (u32, u32) {
    orbit(d, p, j)[0]
}

/// The canonical variable of the orbit of h^{p,j}, or a known constant:
/// orbits through (0,0) are 1, orbits through (0,1) are q.
pub enum OrbitClass {
    One,
    Irregularity,
    Free(HodgeVar),
}

pub fn classify_orbit(d: u32, p: u32, j: u32) -> OrbitClass {
    let o = orbit(d, p, j);
    if o.contains(&(0, 0)) {
        OrbitClass::One
    } else if o.contains(&(0, 1)) {
        OrbitClass::Irregularity
    } else {
        let (a, b) = o[0];
        OrbitClass::Free(HodgeVar::hodge(a, b))
    }
}

impl HodgeDiamond {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn get(&self, p: u32, j: u32) -> &Cell {
        &self.cells[p as usize][j as usize]
    }

    pub fn from_numeric(d: u32, h: Vec<Vec<u64>>) -> Result<Self> {
        let n = (d + 1) as usize;
        if h.len() != n || h.iter().any(|row| row.len() != n) {
            return Err(CoreError::Parse(format!(
                "table must be {n} x {n} for dimension {d}"
            )));
        }
        Ok(HodgeDiamond {
            d,
            cells: h
                .into_iter()
                .map(|row| row.into_iter().map(Cell::Num).collect())
                .collect(),
        })
    }

    pub fn is_numeric(&self) -> bool {
        self.cells
            .iter()
            .all(|row| row.iter().all(|c| matches!(c, Cell::Num(_))))
    }

    pub fn value(&self, p: u32, j: u32) -> Option<u64> {
        match self.get(p, j) {
            Cell::Num(v) => Some(*v),
            Cell::Sym(_) => None,
        }
    }

    /// Numeric table, erroring on the first free entry.
    pub fn numeric_table(&self) -> Result<Vec<Vec<u64>>> {
        let mut out = Vec::with_capacity(self.cells.len());
        for (p, row) in self.cells.iter().enumerate() {
            let mut r = Vec::with_capacity(row.len());
            for (j, c) in row.iter().enumerate() {
                match c {
                    Cell::Num(v) => r.push(*v),
                    Cell::Sym(_) => {
                        return Err(CoreError::UnassignedEntry {
                            p: p as u32,
                            j: j as u32,
                        })
                    }
                }
            }
            out.push(r);
        }
        Ok(out)
    }

    /// Assignment map for polynomial evaluation: q plus every h^{p,j} with
    /// p <= j. Requires a fully numeric diamond.
    pub fn assignment(&self) -> Result<BTreeMap<HodgeVar, BigInt>> {
        let mut asg = BTreeMap::new();
        for p in 0..=self.d {
            for j in p..=self.d {
                let v = self
                    .value(p, j)
                    .ok_or(CoreError::UnassignedEntry { p, j })?;
                asg.insert(HodgeVar::hodge(p, j), BigInt::from(v));
            }
        }
        // hodge(0,1) canonicalizes to Q, so Q is already present; make sure.
        debug_assert!(asg.contains_key(&HodgeVar::Q) || self.d == 0);
        Ok(asg)
    }

    /// Free orbit representatives (cells still symbolic).
    pub fn free_orbits(&self) -> Vec<HodgeVar> {
        let mut out = std::collections::BTreeSet::new();
        for row in &self.cells {
            for c in row {
                if let Cell::Sym(v) = c {
                    out.insert(*v);
                }
            }
        }
        out.into_iter().collect()
    }

    /// Copy with every cell of the orbit of the given variable set to v.
    pub fn assign_orbit(&self, var: HodgeVar, value: u64) -> HodgeDiamond {
        let mut out = self.clone();
        for row in out.cells.iter_mut() {
            for c in row.iter_mut() {
                if matches!(c, Cell::Sym(w) if *w == var) {
                    *c = Cell::Num(value);
                }
            }
        }
        out
    }
}

/// Binomial diamond h^{p,j} = C(d,p) C(d,j) of a d-torus.
pub fn abelian_diamond(d: u32) -> HodgeDiamond {
    let n = (d + 1) as usize;
    let mut cells = vec![vec![Cell::Num(0); n]; n];
    for p in 0..n {
        for j in 0..n {
            let v = binom_u64(d as u64, p as u64) * binom_u64(d as u64, j as u64);
            cells[p][j] = Cell::Num(v);
        }
    }
    HodgeDiamond { d, cells }
}

fn binom_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for i in 0..k.min(n - k) {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Close a partial assignment under the symmetry group. Orbits with an
/// assigned representative are filled; two disagreeing assignments in one
/// orbit are an error; unassigned orbits become symbolic references.
pub fn partial_diamond(d: u32, assignments: &BTreeMap<(u32, u32), u64>) -> Result<HodgeDiamond> {
    for &(p, j) in assignments.keys() {
        if p > d || j > d {
            return Err(CoreError::FormDegreeOutOfRange { p: p.max(j), d });
        }
    }
    let n = (d + 1) as usize;
    let mut cells = vec![vec![Cell::Num(0); n]; n];
    for p in 0..=d {
        for j in 0..=d {
            let orb = orbit(d, p, j);
            let mut assigned: Option<u64> = None;
            for &(a, b) in &orb {
                if let Some(&v) = assignments.get(&(a, b)) {
                    if let Some(prev) = assigned {
                        if prev != v {
                            return Err(CoreError::InconsistentOrbit {
                                p: a,
                                j: b,
                                a: prev,
                                b: v,
                            });
                        }
                    }
                    assigned = Some(v);
                }
            }
            let cell = match (assigned, classify_orbit(d, p, j)) {
                (Some(v), OrbitClass::One) if v != 1 => {
                    return Err(CoreError::InconsistentOrbit { p, j, a: 1, b: v })
                }
                (Some(v), _) => Cell::Num(v),
                (None, OrbitClass::One) => Cell::Num(1),
                (None, OrbitClass::Irregularity) => Cell::Sym(HodgeVar::Q),
                (None, OrbitClass::Free(v)) => Cell::Sym(v),
            };
            cells[p as usize][j as usize] = cell;
        }
    }
    Ok(HodgeDiamond { d, cells })
}

/// One violation found by [`validate_diamond`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    TopNotOne { found: u64 },
    HodgeSymmetry { p: u32, j: u32 },
    SerreDuality { p: u32, j: u32 },
    IrregularityMismatch { found: u64, expected: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TopNotOne { found } => write!(f, "h^{{0,0}} must be 1, found {found}"),
            Violation::HodgeSymmetry { p, j } => {
                write!(f, "Hodge-symmetry violation at ({p},{j})")
            }
            Violation::SerreDuality { p, j } => write!(f, "Serre-duality violation at ({p},{j})"),
            Violation::IrregularityMismatch { found, expected } => {
                write!(
                    f,
                    "h^{{1,0}} = {found} does not match profile q = {expected}"
                )
            }
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the classical symmetries and the profile's irregularity.
/// Dimension mismatch between diamond and profile is a hard error.
pub fn validate_diamond(dm: &HodgeDiamond, pf: &ManifoldProfile) -> Result<ValidationReport> {
    if dm.d != pf.d {
        return Err(CoreError::DimensionMismatch { dm: dm.d, pf: pf.d });
    }
    let d = dm.d;
    let mut report = ValidationReport::default();
    if let Some(v) = dm.value(0, 0) {
        if v != 1 {
            report.violations.push(Violation::TopNotOne { found: v });
        }
    }
    for p in 0..=d {
        for j in 0..=d {
            if p < j && dm.get(p, j) != dm.get(j, p) {
                report.violations.push(Violation::HodgeSymmetry { p, j });
            }
            let (sp, sj) = (d - p, d - j);
            if (p, j) < (sp, sj) && dm.get(p, j) != dm.get(sp, sj) {
                report.violations.push(Violation::SerreDuality { p, j });
            }
        }
    }
    if let Some(h10) = dm.value(1, 0) {
        if h10 != pf.q {
            report.violations.push(Violation::IrregularityMismatch {
                found: h10,
                expected: pf.q,
            });
        }
    }
    Ok(report)
}

// --- serialization: {"d": int, "h": [[int]]}, row index p, column index j ---

#[derive(Serialize, Deserialize)]
struct DiamondJson {
    d: u32,
    h: Vec<Vec<u64>>,
}

impl HodgeDiamond {
    pub fn to_json(&self) -> Result<String> {
        let table = self.numeric_table()?;
        let js = DiamondJson {
            d: self.d,
            h: table,
        };
        Ok(serde_json::to_string_pretty(&js).expect("diamond serialization"))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let js: DiamondJson =
            serde_json::from_str(s).map_err(|e| CoreError::Parse(e.to_string()))?;
        HodgeDiamond::from_numeric(js.d, js.h)
    }
}
