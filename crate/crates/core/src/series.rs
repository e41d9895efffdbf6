//! Truncated formal power series in one variable t with polynomial
//! coefficients, plus a fast integer path for fully numeric products.
//!
//! The symbolic representation is dense: a series of truncation order N
//! stores the coefficients of t^0 .. t^{N-1} as [`MultiPoly`] values. The
//! generating functions built here always have constant term 1.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{CoreError, Result};
use crate::poly::MultiPoly;
use crate::rational::{rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    trunc: usize,
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    pub fn one(trunc: usize) -> Result<Self> {
        if trunc == 0 {
            return Err(CoreError::TruncationTooSmall { min: 1, got: 0 });
        }
        let mut coeffs = vec![MultiPoly::zero(); trunc];
        coeffs[0] = MultiPoly::one();
        Ok(TruncatedSeries { trunc, coeffs })
    }

    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(CoreError::TruncationTooSmall { min: 1, got: 0 });
        }
        Ok(TruncatedSeries {
            trunc: coeffs.len(),
            coeffs,
        })
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, i: usize) -> &MultiPoly {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.trunc != other.trunc {
            return Err(CoreError::MismatchedTruncation(self.trunc, other.trunc));
        }
        let n = self.trunc;
        let mut out = vec![MultiPoly::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        Ok(TruncatedSeries {
            trunc: n,
            coeffs: out,
        })
    }

    /// Multiplicative inverse mod t^N; the constant term must be exactly 1.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0] != MultiPoly::one() {
            return Err(CoreError::NotInvertible);
        }
        let n = self.trunc;
        let mut inv = vec![MultiPoly::zero(); n];
        inv[0] = MultiPoly::one();
        for i in 1..n {
            // c_i = -sum_{k=1}^{i} a_k * c_{i-k}
            let mut acc = MultiPoly::zero();
            for k in 1..=i {
                if self.coeffs[k].is_zero() || inv[i - k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[k].mul(&inv[i - k]));
            }
            inv[i] = acc.negate();
        }
        Ok(TruncatedSeries {
            trunc: n,
            coeffs: inv,
        })
    }

    /// Evaluate every coefficient at an integer point.
    pub fn eval(
        &self,
        assignment: &std::collections::BTreeMap<crate::var::HodgeVar, BigInt>,
    ) -> Result<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.eval(assignment)).collect()
    }

    /// Rename variables in every coefficient.
    pub fn rename_vars(
        &self,
        map: &std::collections::BTreeMap<crate::var::HodgeVar, crate::var::HodgeVar>,
    ) -> Self {
        TruncatedSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| c.rename_vars(map)).collect(),
        }
    }
}

/// Generalized binomial coefficient C(e, i) = e(e-1)...(e-i+1)/i! for a
/// polynomial exponent e.
pub fn binomial_poly(e: &MultiPoly, i: u32) -> MultiPoly {
    let mut num = MultiPoly::one();
    for r in 0..i {
        num = num.mul(&e.sub(&MultiPoly::from_int(r as i64)));
    }
    let mut fact = Rational::one();
    for r in 1..=i {
        fact *= rat(r as i64);
    }
    num.scale(&fact.recip())
}

/// (1 - j t)^e mod t^N with a polynomial exponent e.
///
/// The coefficient of t^i is C(e, i) (-j)^i, a polynomial in the entries of
/// e with rational coefficients. Evaluating e at an integer n reproduces the
/// series obtained by exact repeated multiplication (n > 0) or inversion
/// (n < 0).
pub fn expand_binomial_power(j: u32, e: &MultiPoly, n: usize) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(CoreError::TruncationTooSmall { min: 1, got: 0 });
    }
    if j == 0 {
        return Err(CoreError::InvalidFactor(0));
    }
    let mut coeffs = Vec::with_capacity(n);
    let mut jpow = Rational::one();
    let minus_j = rat(-(j as i64));
    for i in 0..n {
        if i > 0 {
            jpow = &jpow * &minus_j;
        }
        coeffs.push(binomial_poly(e, i as u32).scale(&jpow));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Exact truncated product of several series sharing one truncation order.
pub fn series_product(factors: &[TruncatedSeries]) -> Result<TruncatedSeries> {
    let first = factors
        .first()
        .ok_or(CoreError::TruncationTooSmall { min: 1, got: 0 })?;
    let mut acc = TruncatedSeries::one(first.truncation())?;
    for f in factors {
        acc = acc.mul(f)?;
    }
    Ok(acc)
}

/// Coefficients c_0..c_{n-1} of prod_f (1 - j_f t)^{e_f} for integer
/// exponents, via the first-order recurrence induced by the logarithmic
/// derivative. Cost O(n * #factors) big-integer operations, so it stays fast
/// even for n in the thousands.
pub fn expand_factors_int(factors: &[(u32, i64)], n: usize) -> Vec<BigInt> {
    assert!(n >= 1);
    // Merge duplicate j and drop zero exponents.
    let mut merged: std::collections::BTreeMap<u32, i64> = std::collections::BTreeMap::new();
    for &(j, e) in factors {
        assert!(j >= 1, "factor needs j >= 1");
        *merged.entry(j).or_insert(0) += e;
    }
    merged.retain(|_, e| *e != 0);

    // P(t) = prod (1 - j t), Q(t) = sum_j (-j e_j) prod_{k != j} (1 - k t).
    let mut p = vec![BigInt::one()];
    for &j in merged.keys() {
        p = poly_mul_linear(&p, j);
    }
    let mut q = vec![BigInt::zero(); p.len().max(1)];
    for (&j, &e) in &merged {
        let mut rest = vec![BigInt::one()];
        for &k in merged.keys() {
            if k != j {
                rest = poly_mul_linear(&rest, k);
            }
        }
        let c = BigInt::from(-(j as i64)) * BigInt::from(e);
        for (idx, r) in rest.iter().enumerate() {
            q[idx] += &c * r;
        }
    }

    // (i+1) c_{i+1} = sum_r q_r c_{i-r} - sum_{r>=1} p_r (i+1-r) c_{i+1-r}
    let mut c = vec![BigInt::zero(); n];
    c[0] = BigInt::one();
    for i in 0..n.saturating_sub(1) {
        let mut rhs = BigInt::zero();
        for (r, qr) in q.iter().enumerate() {
            if r > i {
                break;
            }
            if !qr.is_zero() {
                rhs += qr * &c[i - r];
            }
        }
        for (r, pr) in p.iter().enumerate().skip(1) {
            if r > i + 1 {
                break;
            }
            if !pr.is_zero() {
                rhs -= pr * BigInt::from((i + 1 - r) as u64) * &c[i + 1 - r];
            }
        }
        let div = BigInt::from((i + 1) as u64);
        debug_assert!((&rhs % &div).is_zero(), "recurrence division must be exact");
        c[i + 1] = rhs / div;
    }
    c
}

fn poly_mul_linear(p: &[BigInt], j: u32) -> Vec<BigInt> {
    // p(t) * (1 - j t)
    let mut out = vec![BigInt::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
        out[i + 1] -= BigInt::from(j as u64) * c;
    }
    out
}

/// Oracle-style expansion of (1 - j t)^n for an integer n: repeated exact
/// multiplication for n > 0, multiplication-then-inversion for n < 0. Used by
/// tests to pin down the symbolic path; kept here so integration tests can
/// reach it.
pub fn binomial_power_by_multiplication(
    j: u32,
    n_exp: i64,
    trunc: usize,
) -> Result<TruncatedSeries> {
    let mut base = TruncatedSeries::one(trunc)?;
    if trunc > 1 {
        let mut coeffs = vec![MultiPoly::zero(); trunc];
        coeffs[0] = MultiPoly::one();
        coeffs[1] = MultiPoly::from_int(-(j as i64));
        base = TruncatedSeries::from_coeffs(coeffs)?;
    }
    let mut acc = TruncatedSeries::one(trunc)?;
    for _ in 0..n_exp.unsigned_abs() {
        acc = acc.mul(&base)?;
    }
    if n_exp < 0 {
        acc = acc.inverse()?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::var::HodgeVar;
    use std::collections::BTreeMap;

    #[test]
    fn geometric_square() {
        // (1-t)^{-2} = 1 + 2t + 3t^2 + ...
        let s = expand_binomial_power(1, &MultiPoly::from_int(-2), 3).unwrap();
        assert_eq!(s.coeff(0), &MultiPoly::one());
        assert_eq!(s.coeff(1), &MultiPoly::from_int(2));
        assert_eq!(s.coeff(2), &MultiPoly::from_int(3));
    }

    #[test]
    fn plain_binomial() {
        // (1-2t)^1 = 1 - 2t + 0 t^2
        let s = expand_binomial_power(2, &MultiPoly::one(), 3).unwrap();
        assert_eq!(s.coeff(1), &MultiPoly::from_int(-2));
        assert!(s.coeff(2).is_zero());
    }

    #[test]
    fn symbolic_negative_exponent() {
        // (1-t)^{-x}: coefficient of t^2 is x(x+1)/2; matches numeric
        // expansion at x = 1..5.
        let x = HodgeVar::hodge(2, 2);
        let e = MultiPoly::var(x).negate();
        let s = expand_binomial_power(1, &e, 3).unwrap();
        let expected = MultiPoly::var(x)
            .mul(&MultiPoly::var(x).add(&MultiPoly::one()))
            .scale(&ratio(1, 2));
        assert_eq!(s.coeff(2), &expected);
        for n in 1..=5i64 {
            let mut asg = BTreeMap::new();
            asg.insert(x, num_bigint::BigInt::from(n));
            let vals = s.eval(&asg).unwrap();
            let oracle = binomial_power_by_multiplication(1, -n, 3).unwrap();
            for (i, v) in vals.iter().enumerate() {
                assert_eq!(Some(v.clone()), oracle.coeff(i).as_constant());
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(expand_binomial_power(0, &MultiPoly::one(), 3).is_err());
        assert!(expand_binomial_power(1, &MultiPoly::one(), 0).is_err());
    }

    #[test]
    fn product_example() {
        // (1-2t)(1-t)^{-3} = 1 + t + 0 t^2
        let a = expand_binomial_power(2, &MultiPoly::one(), 3).unwrap();
        let b = expand_binomial_power(1, &MultiPoly::from_int(-3), 3).unwrap();
        let p = series_product(&[a, b]).unwrap();
        assert_eq!(p.coeff(0), &MultiPoly::one());
        assert_eq!(p.coeff(1), &MultiPoly::one());
        assert!(p.coeff(2).is_zero());
    }

    #[test]
    fn singleton_product() {
        let a = expand_binomial_power(3, &MultiPoly::from_int(2), 4).unwrap();
        let p = series_product(std::slice::from_ref(&a)).unwrap();
        assert_eq!(p, a);
    }

    #[test]
    fn symbolic_inverse_pair() {
        // (1-t)^{-q} * (1-t)^{q} = 1 mod t^5
        let q = MultiPoly::var(HodgeVar::Q);
        let a = expand_binomial_power(1, &q.negate(), 5).unwrap();
        let b = expand_binomial_power(1, &q, 5).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p, TruncatedSeries::one(5).unwrap());
    }

    #[test]
    fn mismatched_truncation_rejected() {
        let a = TruncatedSeries::one(3).unwrap();
        let b = TruncatedSeries::one(4).unwrap();
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn integer_recurrence_matches_naive() {
        let factors = [(1u32, -7i64), (2, 4), (3, -2)];
        let fast = expand_factors_int(&factors, 12);
        let mut acc = TruncatedSeries::one(12).unwrap();
        for &(j, e) in &factors {
            acc = acc
                .mul(&binomial_power_by_multiplication(j, e, 12).unwrap())
                .unwrap();
        }
        for i in 0..12 {
            assert_eq!(
                acc.coeff(i).as_constant().unwrap(),
                Rational::from_integer(fast[i].clone())
            );
        }
    }
}
