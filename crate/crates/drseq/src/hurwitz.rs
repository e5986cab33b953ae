//! Finite prefixes of Hurwitz series over a ground differential field.
//!
//! A Hurwitz series is a sequence `a(0), a(1), ...` of field elements with
//! the binomial convolution as product:
//!
//! ```text
//! (a * b)(n) = sum_{k=0}^{n} C(n,k) a(k) b(n-k)
//! ```
//!
//! The shift `N(a)(n) = a(n+1)` is a derivation for this product. Two ring
//! maps embed the field: `source(x) = (x, 0, 0, ...)` and
//! `target(x) = (x, d(x), d^2(x), ...)`; both send 1 to the multiplicative
//! unit `(1, 0, 0, ...)`.
//!
//! Everything here works on finite prefixes and tracks how many terms are
//! known: a length-L value represents the first L entries of some infinite
//! sequence, and each operation returns as many entries as its inputs
//! determine (the product keeps the shorter length, the shift drops one).
//! Equality of prefixes is therefore always "equal on the common prefix",
//! reported together with how many entries were compared.

use crate::error::{Error, Result};
use crate::field::{binomial_row, FieldElem, FieldTag, Rational};
use std::fmt;

/// A known prefix of a Hurwitz series; all terms carry the same tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seq {
    tag: FieldTag,
    terms: Vec<FieldElem>,
}

impl Seq {
    pub fn new(tag: FieldTag, terms: Vec<FieldElem>) -> Result<Self> {
        if terms.iter().any(|t| t.tag() != tag) {
            return Err(Error::FieldMismatch);
        }
        Ok(Seq { tag, terms })
    }

    pub fn zeros(tag: FieldTag, len: usize) -> Self {
        Seq {
            tag,
            terms: vec![FieldElem::zero(tag); len],
        }
    }

    /// `(x, 0, 0, ...)`: the source embedding of a field element.
    pub fn source(x: &FieldElem, len: usize) -> Self {
        let tag = x.tag();
        let mut terms = vec![FieldElem::zero(tag); len];
        if len > 0 {
            terms[0] = x.clone();
        }
        Seq { tag, terms }
    }

    /// `(x, d(x), d^2(x), ...)`: the target embedding of a field element.
    pub fn target(x: &FieldElem, len: usize) -> Self {
        let tag = x.tag();
        let mut terms = Vec::with_capacity(len);
        let mut cur = x.clone();
        for i in 0..len {
            if i > 0 {
                cur = cur.derive();
            }
            terms.push(cur.clone());
        }
        Seq { tag, terms }
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, n: usize) -> &FieldElem {
        &self.terms[n]
    }

    pub fn terms(&self) -> &[FieldElem] {
        &self.terms
    }

    /// True when every known term is zero.
    pub fn is_zero_prefix(&self) -> bool {
        self.terms.iter().all(|t| t.is_zero())
    }

    /// The first `len` terms (or all of them, whichever is shorter).
    pub fn prefix(&self, len: usize) -> Seq {
        Seq {
            tag: self.tag,
            terms: self.terms[..len.min(self.terms.len())].to_vec(),
        }
    }

    fn same_tag(&self, b: &Seq) -> Result<()> {
        if self.tag == b.tag {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Hurwitz product on the common prefix.
    pub fn hmul(&self, b: &Seq) -> Result<Seq> {
        self.same_tag(b)?;
        let len = self.len().min(b.len());
        let mut terms = Vec::with_capacity(len);
        for n in 0..len {
            let row = binomial_row(n);
            let mut acc = FieldElem::zero(self.tag);
            for (k, w) in row.iter().enumerate() {
                let prod = &self.terms[k] * &b.terms[n - k];
                acc += &prod.scale(&Rational::from_integer(w.clone()));
            }
            terms.push(acc);
        }
        Ok(Seq {
            tag: self.tag,
            terms,
        })
    }

    /// Componentwise sum on the common prefix.
    pub fn hadd(&self, b: &Seq) -> Result<Seq> {
        self.same_tag(b)?;
        let len = self.len().min(b.len());
        let terms = (0..len).map(|n| &self.terms[n] + &b.terms[n]).collect();
        Ok(Seq {
            tag: self.tag,
            terms,
        })
    }

    pub fn hsub(&self, b: &Seq) -> Result<Seq> {
        self.hadd(&b.neg())
    }

    pub fn neg(&self) -> Seq {
        Seq {
            tag: self.tag,
            terms: self.terms.iter().map(|t| -t).collect(),
        }
    }

    /// Left multiplication by `source(x)`: scales every term by `x`.
    pub fn hscale_left(&self, x: &FieldElem) -> Result<Seq> {
        if self.tag != x.tag() {
            return Err(Error::FieldMismatch);
        }
        Ok(Seq {
            tag: self.tag,
            terms: self.terms.iter().map(|t| x * t).collect(),
        })
    }

    /// Right multiplication by `target(x)`:
    /// `(a * t(x))(n) = sum_k C(n,k) a(k) d^(n-k)(x)`.
    pub fn hscale_right(&self, x: &FieldElem) -> Result<Seq> {
        if self.tag != x.tag() {
            return Err(Error::FieldMismatch);
        }
        self.hmul(&Seq::target(x, self.len()))
    }

    /// The shift `N(a)(n) = a(n+1)`; one term shorter.
    pub fn shift(&self) -> Result<Seq> {
        if self.terms.is_empty() {
            return Err(Error::EmptyPrefix);
        }
        Ok(Seq {
            tag: self.tag,
            terms: self.terms[1..].to_vec(),
        })
    }

    /// `i`-fold shift; `i` terms shorter.
    pub fn shift_n(&self, i: usize) -> Result<Seq> {
        if self.terms.len() < i {
            return Err(Error::PrefixTooShort {
                needed: i,
                have: self.terms.len(),
            });
        }
        Ok(Seq {
            tag: self.tag,
            terms: self.terms[i..].to_vec(),
        })
    }

    /// Applies the field derivation to every term; same length.
    pub fn nabla(&self) -> Seq {
        Seq {
            tag: self.tag,
            terms: self.terms.iter().map(|t| t.derive()).collect(),
        }
    }

    /// `nabla - shift`, the derivation sequences inherit from their
    /// annihilator's solution space; one term shorter.
    pub fn ker_derivation(&self) -> Result<Seq> {
        let shifted = self.shift()?;
        self.nabla().prefix(shifted.len()).hsub(&shifted)
    }

    /// Hurwitz inverse of a prefix with invertible constant term:
    /// `b(0) = a(0)^-1`, then
    /// `b(n) = -a(0)^-1 sum_{k=1}^{n} C(n,k) a(k) b(n-k)`.
    pub fn hinv(&self) -> Result<Seq> {
        if self.terms.is_empty() {
            return Err(Error::EmptyPrefix);
        }
        if self.terms[0].is_zero() {
            return Err(Error::NotInvertible);
        }
        let a0_inv = self.terms[0].inv()?;
        let mut out: Vec<FieldElem> = Vec::with_capacity(self.len());
        out.push(a0_inv.clone());
        for n in 1..self.len() {
            let row = binomial_row(n);
            let mut acc = FieldElem::zero(self.tag);
            for k in 1..=n {
                let prod = &self.terms[k] * &out[n - k];
                acc += &prod.scale(&Rational::from_integer(row[k].clone()));
            }
            out.push(-&(&a0_inv * &acc));
        }
        Ok(Seq {
            tag: self.tag,
            terms: out,
        })
    }

    /// Compares on the common prefix. Returns `(first_mismatch, compared)`:
    /// the index of the first differing term if any, and how many terms were
    /// compared.
    pub fn eq_prefix(&self, b: &Seq) -> (Option<usize>, usize) {
        let len = self.len().min(b.len());
        for n in 0..len {
            if self.terms[n] != b.terms[n] {
                return (Some(n), len);
            }
        }
        (None, len)
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Poly, RatFunc};
    use num::BigInt;

    fn q(n: i64) -> FieldElem {
        FieldElem::from_int(n, FieldTag::Q)
    }

    fn rf(num: &[i64], den: &[i64]) -> FieldElem {
        let p = |v: &[i64]| {
            Poly::from_coeffs(
                v.iter()
                    .map(|&c| Rational::from_integer(BigInt::from(c)))
                    .collect(),
            )
        };
        FieldElem::Qz(RatFunc::new(p(num), p(den)).unwrap())
    }

    fn qseq(vals: &[i64]) -> Seq {
        Seq::new(FieldTag::Q, vals.iter().map(|&v| q(v)).collect()).unwrap()
    }

    #[test]
    fn target_of_inverse_z() {
        let t = Seq::target(&rf(&[1], &[0, 1]), 4);
        assert_eq!(
            t.terms(),
            &[
                rf(&[1], &[0, 1]),
                rf(&[-1], &[0, 0, 1]),
                rf(&[2], &[0, 0, 0, 1]),
                rf(&[-6], &[0, 0, 0, 0, 1]),
            ]
        );
    }

    #[test]
    fn source_and_target_agree_over_constants() {
        let x = q(7);
        assert_eq!(Seq::source(&x, 5), Seq::target(&x, 5));
    }

    #[test]
    fn product_of_embeddings_scales_derivatives() {
        // s(x) * t(y) = (x d^n(y))_n
        let x = rf(&[0, 0, 1], &[1]); // z^2
        let y = rf(&[1], &[-1, 1]); // 1/(z-1)
        let lhs = Seq::source(&x, 5).hmul(&Seq::target(&y, 5)).unwrap();
        let rhs = Seq::target(&y, 5).hscale_left(&x).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_is_source_of_one() {
        let a = qseq(&[3, 1, 4, 1, 5]);
        let one = Seq::source(&q(1), 5);
        assert_eq!(a.hmul(&one).unwrap(), a);
        assert_eq!(one.hmul(&a).unwrap(), a);
    }

    #[test]
    fn product_truncates_to_common_prefix() {
        let a = qseq(&[1, 2, 3]);
        let b = qseq(&[1, 1, 1, 1, 1]);
        assert_eq!(a.hmul(&b).unwrap().len(), 3);
        // (a*b)(2) = a0 b2 + 2 a1 b1 + a2 b0 = 1 + 4 + 3
        assert_eq!(a.hmul(&b).unwrap().term(2), &q(8));
    }

    #[test]
    fn shift_examples() {
        let x = rf(&[0, 0, 0, 1], &[1]); // z^3
        assert!(Seq::source(&x, 5).shift().unwrap().is_zero_prefix());
        let shifted = Seq::target(&x, 5).shift().unwrap();
        let (mismatch, compared) = shifted.eq_prefix(&Seq::target(&x.derive(), 4));
        assert_eq!((mismatch, compared), (None, 4));
        assert_eq!(qseq(&[1, 2, 4, 8]).shift().unwrap(), qseq(&[2, 4, 8]));
        assert_eq!(
            Seq::zeros(FieldTag::Q, 0).shift().unwrap_err(),
            Error::EmptyPrefix
        );
    }

    #[test]
    fn nabla_and_shift_agree_on_target() {
        let x = rf(&[1, 2], &[0, 1]);
        let t = Seq::target(&x, 6);
        let (mismatch, compared) = t.nabla().eq_prefix(&t.shift().unwrap());
        assert_eq!((mismatch, compared), (None, 5));
        assert!(t.ker_derivation().unwrap().is_zero_prefix());
    }

    #[test]
    fn ker_derivation_on_source_is_source_of_derivative() {
        let x = rf(&[0, 0, 1], &[1]);
        let s = Seq::source(&x, 6);
        assert_eq!(
            s.ker_derivation().unwrap(),
            Seq::source(&x.derive(), 5)
        );
        // Over the constants the derivation vanishes entirely.
        assert!(qseq(&[9, 0, 0]).ker_derivation().unwrap().is_zero_prefix());
    }

    #[test]
    fn hinv_round_trips_and_needs_a_unit() {
        let t = Seq::target(&rf(&[0, 1], &[1]), 6); // t(z) = (z, 1, 0, ...)
        let inv = t.hinv().unwrap();
        assert_eq!(inv, Seq::target(&rf(&[1], &[0, 1]), 6));
        let unit = t.hmul(&inv).unwrap();
        assert_eq!(unit, Seq::source(&FieldElem::one(FieldTag::Qz), 6));
        assert_eq!(
            qseq(&[0, 1]).hinv().unwrap_err(),
            Error::NotInvertible
        );
    }

    #[test]
    fn falling_factorial_square_matches_doubled_exponent() {
        // o(n) = c(c-1)...(c-n+1)/z^n solves the weight-c equation; its
        // Hurwitz square must be the weight-2c solution.
        let oc = |c: Rational, len: usize| -> Seq {
            let mut terms = Vec::new();
            let mut rising = FieldElem::one(FieldTag::Qz);
            let zinv = rf(&[1], &[0, 1]);
            for n in 0..len {
                if n > 0 {
                    let f = &c - Rational::from_integer(BigInt::from(n as i64 - 1));
                    rising = rising.scale(&f);
                    rising = &rising * &zinv;
                }
                terms.push(rising.clone());
            }
            Seq::new(FieldTag::Qz, terms).unwrap()
        };
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        let o = oc(half.clone(), 10);
        let sq = o.hmul(&o).unwrap();
        assert_eq!(sq, oc(&half + &half, 10));
        let o2 = oc(Rational::from_integer(BigInt::from(2)), 8);
        assert_eq!(o2.hmul(&o2).unwrap(), oc(Rational::from_integer(BigInt::from(4)), 8));
    }

    #[test]
    fn display_brackets_terms() {
        assert_eq!(qseq(&[1, -2, 3]).to_string(), "[1, -2, 3]");
    }
}
