use super::poly::{Poly, Rational};
use crate::error::{Error, Result};
use num::One;

/// Rational function in `z`, stored in normalized form.
///
/// Invariants: the denominator is monic and nonzero, gcd(num, den) = 1,
/// and zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Normalizes `num/den`: cancels the gcd and makes the denominator monic.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        let lead_inv = Rational::one() / den.leading().unwrap();
        num = num.scale(&lead_inv);
        den = den.scale(&lead_inv);
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn var() -> Self {
        RatFunc::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, b: &RatFunc) -> RatFunc {
        let num = self.num.mul(&b.den).add(&b.num.mul(&self.den));
        let den = self.den.mul(&b.den);
        RatFunc::new(num, den).expect("product of nonzero denominators is nonzero")
    }

    pub fn sub(&self, b: &RatFunc) -> RatFunc {
        let num = self.num.mul(&b.den).sub(&b.num.mul(&self.den));
        let den = self.den.mul(&b.den);
        RatFunc::new(num, den).expect("product of nonzero denominators is nonzero")
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, b: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&b.num), self.den.mul(&b.den))
            .expect("product of nonzero denominators is nonzero")
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, b: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&b.inv()?))
    }

    /// Formal derivative d/dz via the quotient rule.
    pub fn derivative(&self) -> RatFunc {
        let num = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        let den = self.den.mul(&self.den);
        RatFunc::new(num, den).expect("square of a nonzero denominator is nonzero")
    }
}
