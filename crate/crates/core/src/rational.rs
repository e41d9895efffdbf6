//! Exact rational scalars.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; all coefficient arithmetic in the crate goes through
//! it. Backed by `num_rational::BigRational`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics on d = 0.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact binomial coefficient C(n, k) for big n.
pub fn binomial_big(n: &BigInt, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Floor of the square root of a non-negative integer.
pub fn isqrt_big(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative integer");
    if n.is_zero() {
        return BigInt::zero();
    }
    // Newton iteration starting from a power-of-two overestimate.
    let bits = n.bits();
    let mut x = BigInt::one() << ((bits / 2) + 1);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Smallest integer z with z >= a + c*sqrt(n), for c >= 0 and n >= 0.
///
/// Entirely exact: the comparison z - a >= c*sqrt(n) is decided by squaring.
pub fn ceil_affine_radical(a: &Rational, c: &Rational, n: &BigInt) -> BigInt {
    assert!(!c.is_negative() && !n.is_negative());
    let c2n = c * c * Rational::from_integer(n.clone());
    // Seed below the true value, then walk up.
    let mut z = a.floor().to_integer() + isqrt_big(&(c2n.floor().to_integer())) - BigInt::from(2);
    loop {
        let diff = Rational::from_integer(z.clone()) - a;
        let ok = !diff.is_negative() && &diff * &diff >= c2n;
        if ok {
            let prev = Rational::from_integer(&z - BigInt::one()) - a;
            let prev_ok = !prev.is_negative() && &prev * &prev >= c2n;
            if !prev_ok {
                return z;
            }
            z -= BigInt::one();
        } else {
            z += BigInt::one();
        }
    }
}

/// Split n >= 1 as s^2 * f with f squarefree, by trial division.
pub fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive());
    let mut rem = n.clone();
    let mut s = BigInt::one();
    let mut f = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= rem {
        let mut count = 0u32;
        while (&rem % &d).is_zero() {
            rem /= &d;
            count += 1;
        }
        if count > 0 {
            for _ in 0..count / 2 {
                s *= &d;
            }
            if count % 2 == 1 {
                f *= &d;
            }
        }
        d += 1;
    }
    f *= rem;
    (s, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial_big(&BigInt::from(10), 3), BigInt::from(120));
        assert_eq!(binomial_big(&BigInt::from(-2), 2), BigInt::from(3));
        assert_eq!(binomial_big(&BigInt::from(5), 0), BigInt::from(1));
    }

    #[test]
    fn isqrt_exact_and_floor() {
        assert_eq!(isqrt_big(&BigInt::from(144)), BigInt::from(12));
        assert_eq!(isqrt_big(&BigInt::from(150)), BigInt::from(12));
        assert_eq!(isqrt_big(&BigInt::from(0)), BigInt::from(0));
        let big = BigInt::from(10).pow(40) + 12345u32;
        let r = isqrt_big(&big);
        assert!(&r * &r <= big && (&r + 1) * (&r + 1) > big);
    }

    #[test]
    fn ceil_radical() {
        // 2q - 1/2 + sqrt(8q+1)/2 at q = 20: 39.5 + sqrt(161)/2 = 45.84 -> 46
        let a = ratio(79, 2);
        let c = ratio(1, 2);
        assert_eq!(
            ceil_affine_radical(&a, &c, &BigInt::from(161)),
            BigInt::from(46)
        );
        // exact integer boundary: 1 + 1*sqrt(4) = 3
        assert_eq!(
            ceil_affine_radical(&rat(1), &rat(1), &BigInt::from(4)),
            BigInt::from(3)
        );
    }

    #[test]
    fn square_free() {
        let (s, f) = square_free_split(&BigInt::from(72));
        assert_eq!((s, f), (BigInt::from(6), BigInt::from(2)));
        let (s, f) = square_free_split(&BigInt::from(1));
        assert_eq!((s, f), (BigInt::from(1), BigInt::from(1)));
    }
}
