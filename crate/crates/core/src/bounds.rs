//! Closed-form lower bounds of shape linear + coefficient * sqrt(affine),
//! obtained by solving a degree-2 coefficient constraint for its target.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::constraint::Constraint;
use crate::error::{CoreError, Result};
use crate::poly::MultiPoly;
use crate::rational::{ceil_affine_radical, square_free_split, Rational};
use crate::var::HodgeVar;

/// target >= linear + constant + radical_coeff * sqrt(radicand), valid under
/// the side condition radicand >= 0.
///
/// The radical part is canonical: the radicand is an integer-coefficient
/// polynomial whose content is squarefree, so structurally equal bounds are
/// exactly the equal ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundExpr {
    pub target: HodgeVar,
    pub linear: BTreeMap<HodgeVar, Rational>,
    pub constant: Rational,
    pub radical_coeff: Rational,
    pub radicand: MultiPoly,
}

impl BoundExpr {
    /// The linear part as a polynomial.
    pub fn linear_poly(&self) -> MultiPoly {
        let mut acc = MultiPoly::constant(self.constant.clone());
        for (v, c) in &self.linear {
            acc = acc.add(&MultiPoly::var(*v).scale(c));
        }
        acc
    }

    /// Exact ceiling of the bound at an integer assignment; errors when the
    /// radicand is negative there (side condition violated).
    pub fn ceil_at(&self, assignment: &BTreeMap<HodgeVar, BigInt>) -> Result<Option<BigInt>> {
        let lin = self.linear_poly().eval(assignment)?;
        let rad = self.radicand.eval(assignment)?;
        if rad.is_negative() {
            return Ok(None);
        }
        debug_assert!(rad.denom().is_one());
        Ok(Some(ceil_affine_radical(
            &lin,
            &self.radical_coeff,
            &rad.to_integer(),
        )))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "target": self.target.to_string(),
            "lin": self.linear_poly().to_string(),
            "coef": rational_string(&self.radical_coeff),
            "rad": self.radicand.to_string(),
        })
    }

    pub fn to_latex(&self) -> String {
        format!(
            "{} \\geq {} + {}\\sqrt{{{}}}",
            self.target.latex(),
            self.linear_poly().to_latex(),
            latex_rational(&self.radical_coeff),
            self.radicand.to_latex()
        )
    }
}

fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn latex_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("\\tfrac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

impl fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} >= {} + {}*sqrt({})",
            self.target,
            self.linear_poly(),
            rational_string(&self.radical_coeff),
            self.radicand
        )
    }
}

/// Solve a non-negativity constraint that is quadratic in `target` with a
/// positive constant leading coefficient for the larger root:
/// target >= -B/(2A) + sqrt(B^2 - 4AC)/(2A). The discriminant must be affine
/// in the remaining variables; it becomes the canonical radicand.
pub fn solve_quadratic_bound(c: &Constraint, target: HodgeVar) -> Result<BoundExpr> {
    let coeffs = c.expr.coeffs_in(target);
    let deg = coeffs.len().saturating_sub(1) as u32;
    if deg != 2 {
        return Err(CoreError::NotQuadratic(deg));
    }
    let lead = coeffs[2]
        .as_constant()
        .ok_or_else(|| CoreError::BadLeadingCoefficient(coeffs[2].to_string()))?;
    if !lead.is_positive() {
        return Err(CoreError::BadLeadingCoefficient(lead.to_string()));
    }
    let b = &coeffs[1];
    let cc = &coeffs[0];
    // discriminant B^2 - 4AC
    let disc = b
        .mul(b)
        .sub(&cc.scale(&(&lead * Rational::from_integer(BigInt::from(4)))));
    if disc.total_degree() > 1 {
        return Err(CoreError::RadicandNotAffine);
    }
    // -B/(2A)
    let half = (Rational::from_integer(BigInt::from(2)) * &lead).recip();
    let lin_poly = b.negate().scale(&half);
    let mut linear = BTreeMap::new();
    let mut constant = Rational::zero();
    for (mono, coef) in lin_poly.terms() {
        if mono.is_one() {
            constant = coef.clone();
        } else {
            let vars: Vec<HodgeVar> = mono.vars().collect();
            if vars.len() != 1 || mono.total_degree() != 1 {
                return Err(CoreError::RadicandNotAffine);
            }
            linear.insert(vars[0], coef.clone());
        }
    }
    // canonical radical: sqrt(disc)/(2A) = coeff * sqrt(prim * f) with the
    // scale s^2 f / den^2 factored out of disc = (num/den) * prim
    let (prim, scale) = disc.primitive_part();
    if prim.is_zero() {
        return Ok(BoundExpr {
            target,
            linear,
            constant,
            radical_coeff: Rational::zero(),
            radicand: MultiPoly::zero(),
        });
    }
    debug_assert!(
        scale.is_positive(),
        "radicand scale must be positive for a real root"
    );
    let num_den = scale.numer() * scale.denom();
    let (s, f) = square_free_split(&num_den);
    let radicand = prim.scale(&Rational::from_integer(f.clone()));
    let radical_coeff = half * Rational::new(s, scale.denom().clone());
    Ok(BoundExpr {
        target,
        linear,
        constant,
        radicand,
        radical_coeff,
    })
}
