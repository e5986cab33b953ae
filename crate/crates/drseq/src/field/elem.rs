use super::poly::{Poly, Rational};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use num::{BigInt, One, Signed, Zero};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Which differential field a value lives in.
///
/// `Q` is the rationals with the zero derivation; `Qz` is rational functions
/// in `z` with the formal derivative d/dz.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Q,
    Qz,
}

impl FieldTag {
    /// The flag spelling used by the CLI and the JSON forms.
    pub fn name(self) -> &'static str {
        match self {
            FieldTag::Q => "q",
            FieldTag::Qz => "qz",
        }
    }
}

/// An element of one of the two supported differential fields.
///
/// Mixed-tag arithmetic is a caller error: the arithmetic operators panic on
/// it, while the `try_*` methods report [`Error::FieldMismatch`]. Aggregate
/// types (matrices, skew polynomials, sequences) enforce a uniform tag at
/// construction, so operator use inside the engine never mixes tags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldElem {
    Q(Rational),
    Qz(RatFunc),
}

impl FieldElem {
    pub fn tag(&self) -> FieldTag {
        match self {
            FieldElem::Q(_) => FieldTag::Q,
            FieldElem::Qz(_) => FieldTag::Qz,
        }
    }

    pub fn zero(tag: FieldTag) -> Self {
        FieldElem::from_rational(Rational::zero(), tag)
    }

    pub fn one(tag: FieldTag) -> Self {
        FieldElem::from_rational(Rational::one(), tag)
    }

    pub fn from_int(n: i64, tag: FieldTag) -> Self {
        FieldElem::from_rational(Rational::from_integer(BigInt::from(n)), tag)
    }

    /// Embeds a rational constant into the field named by `tag`.
    pub fn from_rational(c: Rational, tag: FieldTag) -> Self {
        match tag {
            FieldTag::Q => FieldElem::Q(c),
            FieldTag::Qz => FieldElem::Qz(RatFunc::constant(c)),
        }
    }

    /// The variable `z` of the rational function field.
    pub fn var() -> Self {
        FieldElem::Qz(RatFunc::var())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Q(c) => c.is_zero(),
            FieldElem::Qz(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Q(c) => c.is_one(),
            FieldElem::Qz(f) => f.is_one(),
        }
    }

    /// The rational value of a constant, if the element is one.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            FieldElem::Q(c) => Some(c.clone()),
            FieldElem::Qz(f) => {
                if f.den().is_one() && f.num().degree().is_none_or(|d| d == 0) {
                    Some(f.num().coeff(0))
                } else {
                    None
                }
            }
        }
    }

    fn pair<'a>(&'a self, b: &'a FieldElem) -> Result<(&'a FieldElem, &'a FieldElem)> {
        if self.tag() == b.tag() {
            Ok((self, b))
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, b: &FieldElem) -> Result<FieldElem> {
        match self.pair(b)? {
            (FieldElem::Q(x), FieldElem::Q(y)) => Ok(FieldElem::Q(x + y)),
            (FieldElem::Qz(x), FieldElem::Qz(y)) => Ok(FieldElem::Qz(x.add(y))),
            _ => unreachable!(),
        }
    }

    pub fn try_sub(&self, b: &FieldElem) -> Result<FieldElem> {
        match self.pair(b)? {
            (FieldElem::Q(x), FieldElem::Q(y)) => Ok(FieldElem::Q(x - y)),
            (FieldElem::Qz(x), FieldElem::Qz(y)) => Ok(FieldElem::Qz(x.sub(y))),
            _ => unreachable!(),
        }
    }

    pub fn try_mul(&self, b: &FieldElem) -> Result<FieldElem> {
        match self.pair(b)? {
            (FieldElem::Q(x), FieldElem::Q(y)) => Ok(FieldElem::Q(x * y)),
            (FieldElem::Qz(x), FieldElem::Qz(y)) => Ok(FieldElem::Qz(x.mul(y))),
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self) -> Result<FieldElem> {
        match self {
            FieldElem::Q(c) => {
                if c.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(FieldElem::Q(c.recip()))
                }
            }
            FieldElem::Qz(f) => Ok(FieldElem::Qz(f.inv()?)),
        }
    }

    pub fn try_div(&self, b: &FieldElem) -> Result<FieldElem> {
        self.try_mul(&b.inv()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, n: i64) -> Result<FieldElem> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut out = FieldElem::one(self.tag());
        for _ in 0..n.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// The field derivation: zero on `Q`, d/dz on `Qz`.
    pub fn derive(&self) -> FieldElem {
        match self {
            FieldElem::Q(_) => FieldElem::Q(Rational::zero()),
            FieldElem::Qz(f) => FieldElem::Qz(f.derivative()),
        }
    }

    /// `n`-fold derivation.
    pub fn derive_iter(&self, n: usize) -> FieldElem {
        let mut out = self.clone();
        for _ in 0..n {
            if out.is_zero() {
                break;
            }
            out = out.derive();
        }
        out
    }

    /// Multiplies by a rational constant without changing the tag.
    pub fn scale(&self, c: &Rational) -> FieldElem {
        match self {
            FieldElem::Q(x) => FieldElem::Q(x * c),
            FieldElem::Qz(f) => {
                if c.is_zero() {
                    FieldElem::Qz(RatFunc::from_poly(Poly::zero()))
                } else {
                    FieldElem::Qz(
                        RatFunc::new(f.num().scale(c), f.den().clone())
                            .expect("denominator unchanged"),
                    )
                }
            }
        }
    }

    /// Sign of the leading numerator coefficient; used by the printer.
    pub fn leading_is_negative(&self) -> bool {
        match self {
            FieldElem::Q(c) => c.is_negative(),
            FieldElem::Qz(f) => f.num().leading().is_some_and(|c| c.is_negative()),
        }
    }
}

macro_rules! panicking_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.$try(rhs).expect("field tag mismatch")
            }
        }
        impl $trait<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
    };
}

panicking_binop!(Add, add, try_add);
panicking_binop!(Sub, sub, try_sub);
panicking_binop!(Mul, mul, try_mul);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Q(c) => FieldElem::Q(-c),
            FieldElem::Qz(f) => FieldElem::Qz(f.neg()),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        *self = &*self - rhs;
    }
}
