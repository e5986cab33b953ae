//! The skew polynomial ring K[Y; d] over a ground differential field.
//!
//! `Y` does not commute with coefficients: `x*Y = Y*x + d(x)`. Every element
//! is stored with its coefficients on the right of the powers of `Y`,
//! `P = sum_i Y^i c_i`, and moving a coefficient leftward across `Y^n`
//! expands by the binomial rule `x*Y^n = sum_k C(n,k) Y^k d^(n-k)(x)`.
//!
//! Invariants: all coefficients carry the ring's tag; the stored coefficient
//! list has a nonzero last entry (the zero polynomial stores none). Degree
//! is multiplicative because K is a field, so right division by a nonzero
//! divisor always terminates with a strictly smaller remainder.

use crate::error::{Error, Result};
use crate::field::{binomial_row, FieldElem, FieldTag, Rational};
use std::fmt;

/// Element of K[Y; d], coefficients written on the right: `sum_i Y^i c_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrePoly {
    tag: FieldTag,
    coeffs: Vec<FieldElem>,
}

impl OrePoly {
    /// Builds from right coefficients `c_0..c_d`, trimming trailing zeros.
    pub fn new(tag: FieldTag, mut coeffs: Vec<FieldElem>) -> Result<Self> {
        if coeffs.iter().any(|c| c.tag() != tag) {
            return Err(Error::FieldMismatch);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(OrePoly { tag, coeffs })
    }

    pub fn zero(tag: FieldTag) -> Self {
        OrePoly {
            tag,
            coeffs: Vec::new(),
        }
    }

    pub fn one(tag: FieldTag) -> Self {
        OrePoly::from_elem(FieldElem::one(tag))
    }

    /// The generator `Y`.
    pub fn gen(tag: FieldTag) -> Self {
        OrePoly {
            tag,
            coeffs: vec![FieldElem::zero(tag), FieldElem::one(tag)],
        }
    }

    /// A field element as a degree-zero polynomial.
    pub fn from_elem(c: FieldElem) -> Self {
        let tag = c.tag();
        if c.is_zero() {
            OrePoly::zero(tag)
        } else {
            OrePoly {
                tag,
                coeffs: vec![c],
            }
        }
    }

    /// The monomial `Y^i c`.
    pub fn monomial(i: usize, c: FieldElem) -> Self {
        let tag = c.tag();
        if c.is_zero() {
            return OrePoly::zero(tag);
        }
        let mut coeffs = vec![FieldElem::zero(tag); i + 1];
        coeffs[i] = c;
        OrePoly { tag, coeffs }
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Right coefficient of `Y^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| FieldElem::zero(self.tag))
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, b: &OrePoly) -> Result<OrePoly> {
        if self.tag != b.tag {
            return Err(Error::FieldMismatch);
        }
        let n = self.coeffs.len().max(b.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &b.coeff(i));
        }
        OrePoly::new(self.tag, out)
    }

    pub fn sub(&self, b: &OrePoly) -> Result<OrePoly> {
        self.add(&b.neg())
    }

    pub fn neg(&self) -> OrePoly {
        OrePoly {
            tag: self.tag,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Noncommutative product.
    ///
    /// Expands `(Y^i a)(Y^j b)` by commuting `a` across `Y^j`:
    /// the result accumulates `C(j,k) d^(j-k)(a) b` at degree `i+k`.
    pub fn mul(&self, b: &OrePoly) -> Result<OrePoly> {
        if self.tag != b.tag {
            return Err(Error::FieldMismatch);
        }
        if self.is_zero() || b.is_zero() {
            return Ok(OrePoly::zero(self.tag));
        }
        let db = b.degree().unwrap();
        let mut out = vec![FieldElem::zero(self.tag); self.coeffs.len() + db];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // d^0(a)..d^db(a)
            let mut ders = Vec::with_capacity(db + 1);
            ders.push(a.clone());
            for _ in 0..db {
                ders.push(ders.last().unwrap().derive());
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                if bc.is_zero() {
                    continue;
                }
                let row = binomial_row(j);
                for (k, w) in row.iter().enumerate() {
                    let da = &ders[j - k];
                    if da.is_zero() {
                        continue;
                    }
                    let term = da.scale(&Rational::from_integer(w.clone()));
                    out[i + k] += &(&term * bc);
                }
            }
        }
        OrePoly::new(self.tag, out)
    }

    pub fn pow(&self, n: usize) -> Result<OrePoly> {
        let mut out = OrePoly::one(self.tag);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Scales every coefficient on the right by `u`.
    pub fn scale_right(&self, u: &FieldElem) -> Result<OrePoly> {
        if self.tag != u.tag() {
            return Err(Error::FieldMismatch);
        }
        OrePoly::new(self.tag, self.coeffs.iter().map(|c| c * u).collect())
    }

    /// Right division: `self = b * q + r` with `deg r < deg b`.
    pub fn right_divrem(&self, b: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        if self.tag != b.tag {
            return Err(Error::FieldMismatch);
        }
        let Some(db) = b.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = b.leading().unwrap().inv()?;
        let mut rem = self.clone();
        let mut quot = vec![
            FieldElem::zero(self.tag);
            self.coeffs.len().saturating_sub(db)
        ];
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            // b * (Y^(dr-db) u) has leading term Y^dr (lead(b) u); picking
            // u = lead(b)^-1 lead(rem) cancels the top of rem exactly.
            let u = &lead_inv * rem.leading().unwrap();
            let term = OrePoly::monomial(dr - db, u.clone());
            rem = rem.sub(&b.mul(&term)?)?;
            quot[dr - db] = u;
        }
        Ok((OrePoly::new(self.tag, quot)?, rem))
    }

    /// Right-scales by the inverse of the leading coefficient.
    pub fn monic(&self) -> Result<OrePoly> {
        let Some(lead) = self.leading() else {
            return Err(Error::ZeroPolynomial);
        };
        self.scale_right(&lead.inv()?)
    }
}

/// Renders `sum_i sym^i c_i` with the conventions the expression grammar
/// round-trips: highest power first, coefficients after the power, parens
/// around any coefficient that is not a plain power or integer.
pub fn operator_string(coeffs: &[FieldElem], sym: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.leading_is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = if neg { -c } else { c.clone() };
        let base = match i {
            0 => String::new(),
            1 => sym.to_string(),
            _ => format!("{sym}^{i}"),
        };
        let body = if i == 0 {
            mag.to_string()
        } else if mag.is_one() {
            base
        } else {
            let cs = mag.to_string();
            let needs_parens = cs.contains(['+', '-', '*', '/', ' ']);
            if needs_parens {
                format!("{base}*({cs})")
            } else {
                format!("{base}*{cs}")
            }
        };
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", operator_string(&self.coeffs, "Y"))
    }
}
