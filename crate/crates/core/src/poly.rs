//! Multivariate polynomials over exact rationals in named Hodge variables.
//!
//! Terms are kept in a `BTreeMap` keyed by a canonically ordered monomial, so
//! polynomial equality is structural and iteration order is deterministic.
//! No zero coefficient is ever stored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{CoreError, Result};
use crate::rational::{rat, Rational};
use crate::var::{parse_var, HodgeVar};

/// Product of variable powers, sorted by variable; exponents are positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(HodgeVar, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: HodgeVar) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (HodgeVar, u32)>) -> Self {
        let mut map: BTreeMap<HodgeVar, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial(map.into_iter().collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree_in(&self, v: HodgeVar) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Remove v^k from the monomial (k must not exceed the stored exponent).
    fn without(&self, v: HodgeVar, k: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|&(w, e)| {
                    let e = if w == v { e - k } else { e };
                    (e > 0).then_some((w, e))
                })
                .collect(),
        )
    }

    pub fn vars(&self) -> impl Iterator<Item = HodgeVar> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        MultiPoly::constant(rat(n))
    }

    pub fn var(v: HodgeVar) -> Self {
        let mut p = MultiPoly::zero();
        p.terms.insert(Monomial::var(v), Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Some(c) when the polynomial is the constant c (including 0).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: HodgeVar) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<HodgeVar> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = MultiPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Exact evaluation at an integer point. Errors on a missing variable.
    pub fn eval(&self, assignment: &BTreeMap<HodgeVar, BigInt>) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in &m.0 {
                let val = assignment
                    .get(v)
                    .ok_or_else(|| CoreError::MissingVariable(v.to_string()))?;
                let val = Rational::from_integer(val.clone());
                for _ in 0..*e {
                    term *= &val;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Rename variables; entries absent from the map stay unchanged.
    pub fn rename_vars(&self, map: &BTreeMap<HodgeVar, HodgeVar>) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let renamed =
                Monomial::from_pairs(m.0.iter().map(|&(v, e)| (*map.get(&v).unwrap_or(&v), e)));
            out.add_term(renamed, c.clone());
        }
        out
    }

    /// Coefficient polynomials of v^0 .. v^deg when the polynomial is viewed
    /// in the single variable v over the ring of the others.
    pub fn coeffs_in(&self, v: HodgeVar) -> Vec<MultiPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![MultiPoly::zero(); d + 1];
        for (m, c) in &self.terms {
            let e = m.degree_in(v);
            out[e as usize].add_term(m.without(v, e), c.clone());
        }
        out
    }

    /// Multiply through by the least common denominator and divide by the
    /// content, returning (primitive integer polynomial, a/b scale) with
    /// self = (a/b) * primitive. Zero maps to (0, 1).
    pub fn primitive_part(&self) -> (MultiPoly, Rational) {
        use num_integer::Integer;
        if self.is_zero() {
            return (MultiPoly::zero(), Rational::one());
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * &lcm / c.denom();
            gcd = gcd.gcd(&n);
        }
        let scale = Rational::new(gcd.clone(), lcm.clone());
        let inv = Rational::new(lcm, gcd);
        (self.scale(&inv), scale)
    }

    pub fn to_latex(&self) -> String {
        self.format(true)
    }

    fn format(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // Terms sorted by total degree descending, then monomial order.
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            b.0.total_degree()
                .cmp(&a.0.total_degree())
                .then_with(|| a.0.cmp(b.0))
        });
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_is_one = abs.is_one();
            let mono = Self::format_monomial(m, latex);
            if m.is_one() {
                out.push_str(&format_rational(&abs));
            } else if coeff_is_one {
                out.push_str(&mono);
            } else if latex {
                out.push_str(&format!("{}{}", format_rational_latex(&abs), mono));
            } else {
                out.push_str(&format!("{}*{}", format_rational(&abs), mono));
            }
        }
        out
    }

    fn format_monomial(m: &Monomial, latex: bool) -> String {
        let mut parts = Vec::new();
        for (v, e) in &m.0 {
            let vs = if latex { v.latex() } else { v.to_string() };
            if *e == 1 {
                parts.push(vs);
            } else if latex {
                parts.push(format!("({vs})^{{{e}}}"));
            } else {
                parts.push(format!("{vs}^{e}"));
            }
        }
        parts.join(if latex { " " } else { "*" })
    }
}

fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn format_rational_latex(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("\\tfrac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format(false))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, other: Self) -> MultiPoly {
        MultiPoly::add(self, other)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, other: Self) -> MultiPoly {
        MultiPoly::sub(self, other)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, other: Self) -> MultiPoly {
        MultiPoly::mul(self, other)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.negate()
    }
}

// ---------------------------------------------------------------------------
// Parsing of the canonical display form, used for JSON round-trips and CLI
// arguments. Grammar: sum of terms; term = [rational] ['*'] factor ('*' factor)*;
// factor = var ['^' int]; var = 'q' | 'h^{p,j}'.
// ---------------------------------------------------------------------------

impl FromStr for MultiPoly {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let poly = parser.parse_sum()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(CoreError::Parse(format!(
                "trailing input at byte {} in {s:?}",
                parser.pos
            )));
        }
        Ok(poly)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse_sum(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero();
        let mut sign = Rational::one();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = -sign;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        loop {
            let term = self.parse_term()?;
            acc = acc.add(&term.scale(&sign));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = Rational::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -Rational::one();
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(c) if c.is_ascii_digit() => MultiPoly::constant(self.parse_rational()?),
            _ => MultiPoly::one(),
        };
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                Some(b'q') | Some(b'h') => {}
                _ => return Ok(acc),
            }
            let v = self.parse_variable()?;
            let e = if self.peek() == Some(b'^') && self.src.get(self.pos + 1) != Some(&b'{') {
                self.pos += 1;
                self.parse_uint()? as u32
            } else {
                1
            };
            acc = acc.mul(&MultiPoly::var(v).pow(e));
        }
    }

    fn parse_variable(&mut self) -> Result<HodgeVar> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&b'q') {
            self.pos += 1;
            return Ok(HodgeVar::Q);
        }
        // h^{p,j}
        let rest = &self.src[self.pos..];
        let close = rest
            .iter()
            .position(|&c| c == b'}')
            .ok_or_else(|| CoreError::Parse("unterminated variable".into()))?;
        let token = std::str::from_utf8(&rest[..=close])
            .map_err(|_| CoreError::Parse("non-utf8 variable".into()))?;
        let v =
            parse_var(token).ok_or_else(|| CoreError::Parse(format!("bad variable {token:?}")))?;
        self.pos += close + 1;
        Ok(v)
    }

    fn parse_rational(&mut self) -> Result<Rational> {
        let n = self.parse_uint()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.parse_uint()?;
            if d == 0 {
                return Err(CoreError::Parse("zero denominator".into()));
            }
            Ok(Rational::new(BigInt::from(n), BigInt::from(d)))
        } else {
            Ok(Rational::from_integer(BigInt::from(n)))
        }
    }

    fn parse_uint(&mut self) -> Result<u128> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(CoreError::Parse(format!("expected number at byte {start}")));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|e| CoreError::Parse(format!("{e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn h(p: u32, j: u32) -> MultiPoly {
        MultiPoly::var(HodgeVar::hodge(p, j))
    }

    fn q() -> MultiPoly {
        MultiPoly::var(HodgeVar::Q)
    }

    #[test]
    fn eval_examples() {
        // x(x+1)/2 at x = 4 -> 10
        let x = HodgeVar::hodge(1, 1);
        let p = MultiPoly::var(x)
            .mul(&MultiPoly::var(x).add(&MultiPoly::one()))
            .scale(&ratio(1, 2));
        let mut asg = BTreeMap::new();
        asg.insert(x, BigInt::from(4));
        assert_eq!(p.eval(&asg).unwrap(), rat(10));

        // h^{1,2} - 2 h^{1,1} + 3q at (10, 5, 2) -> 6
        let p = h(1, 2)
            .sub(&h(1, 1).scale(&rat(2)))
            .add(&q().scale(&rat(3)));
        let mut asg = BTreeMap::new();
        asg.insert(HodgeVar::hodge(1, 2), BigInt::from(10));
        asg.insert(HodgeVar::hodge(1, 1), BigInt::from(5));
        asg.insert(HodgeVar::Q, BigInt::from(2));
        assert_eq!(p.eval(&asg).unwrap(), rat(6));

        // constant with empty assignment
        assert_eq!(
            MultiPoly::from_int(7).eval(&BTreeMap::new()).unwrap(),
            rat(7)
        );
    }

    #[test]
    fn missing_variable_errors() {
        let p = h(1, 1);
        assert!(p.eval(&BTreeMap::new()).is_err());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let p = h(1, 1)
            .mul(&h(1, 1))
            .scale(&ratio(1, 2))
            .sub(&q().scale(&rat(2)))
            .add(&MultiPoly::from_int(3));
        let s = p.to_string();
        let back: MultiPoly = s.parse().unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display_order() {
        let p = h(1, 1).sub(&q().scale(&rat(2)));
        assert_eq!(p.to_string(), "h^{1,1} - 2*q");
    }

    #[test]
    fn coeffs_in_variable() {
        let v = HodgeVar::hodge(1, 1);
        // v^2/2 + v(1/2 - 2q) + 3
        let p = MultiPoly::var(v)
            .pow(2)
            .scale(&ratio(1, 2))
            .add(&MultiPoly::var(v).mul(&MultiPoly::constant(ratio(1, 2)).sub(&q().scale(&rat(2)))))
            .add(&MultiPoly::from_int(3));
        let cs = p.coeffs_in(v);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], MultiPoly::from_int(3));
        assert_eq!(cs[2], MultiPoly::constant(ratio(1, 2)));
    }

    #[test]
    fn primitive_part_scales() {
        let p = h(0, 2)
            .scale(&rat(2))
            .sub(&MultiPoly::constant(ratio(1, 2)));
        let (prim, scale) = p.primitive_part();
        assert_eq!(prim.scale(&scale), p);
        // primitive: 4 h^{0,2} - 1
        assert_eq!(prim, h(0, 2).scale(&rat(4)).sub(&MultiPoly::one()));
    }
}
