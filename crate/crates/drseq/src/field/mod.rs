//! The two ground differential fields and exact linear algebra over them.
//!
//! * `FieldTag::Q`: rationals with the zero derivation.
//! * `FieldTag::Qz`: rational functions in `z` with the formal d/dz.
//!
//! Invariants maintained by the types here:
//!
//! * [`Rational`]: reduced, denominator positive (inherited from `num`).
//! * [`Poly`]: dense, lowest degree first, trailing coefficient nonzero.
//! * [`RatFunc`]: denominator monic and nonzero, gcd(num, den) = 1.
//! * [`Matrix`]: row-major, every entry carries the same tag.
//!
//! The derivation is a field map: additive, Leibniz on products, zero on
//! embedded constants. Everything is exact; nothing here floats.

mod display;
mod elem;
mod matrix;
mod poly;
mod ratfunc;

pub use elem::{FieldElem, FieldTag};
pub use matrix::Matrix;
pub use poly::{Poly, Rational};
pub use ratfunc::RatFunc;

use num::{BigInt, One};

/// Binomial coefficient `C(n, k)` as an exact rational, zero for `k > n`.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return num::Zero::zero();
    }
    Rational::from_integer(binomial_row(n)[k].clone())
}

/// The Pascal row `C(n, 0..=n)`.
pub(crate) fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigInt::one());
    for k in 1..=n {
        let next = &row[k - 1] * BigInt::from(n - k + 1) / BigInt::from(k);
        row.push(next);
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn q(n: i64, d: i64) -> FieldElem {
        FieldElem::from_rational(Rational::new(BigInt::from(n), BigInt::from(d)), FieldTag::Q)
    }

    /// Parse-free construction of simple rational functions for tests.
    fn over_z(num: &[i64], den: &[i64]) -> FieldElem {
        let p = |v: &[i64]| {
            Poly::from_coeffs(
                v.iter()
                    .map(|&c| Rational::from_integer(BigInt::from(c)))
                    .collect(),
            )
        };
        FieldElem::Qz(RatFunc::new(p(num), p(den)).unwrap())
    }

    #[test]
    fn constant_field_arithmetic() {
        assert_eq!(q(1, 2).try_add(&q(1, 3)).unwrap(), q(5, 6));
        assert_eq!(q(3, 4).try_div(&q(3, 2)).unwrap(), q(1, 2));
        assert_eq!(q(0, 1).inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn mixed_tags_error() {
        assert_eq!(
            q(1, 1).try_add(&FieldElem::var()).unwrap_err(),
            Error::FieldMismatch
        );
        assert_eq!(
            FieldElem::var().try_mul(&q(2, 1)).unwrap_err(),
            Error::FieldMismatch
        );
    }

    #[test]
    fn inverse_of_simple_pole() {
        let c = over_z(&[1], &[-1, 1]); // 1/(z-1)
        assert_eq!(c.inv().unwrap(), over_z(&[-1, 1], &[1]));
        assert_eq!(c.try_mul(&c).unwrap(), over_z(&[1], &[1, -2, 1]));
    }

    #[test]
    fn derivation_examples() {
        let c = over_z(&[1], &[-1, 1]); // 1/(z-1)
        assert_eq!(c.derive(), over_z(&[-1], &[1, -2, 1]));
        assert!(q(7, 2).derive().is_zero());
        let z3 = over_z(&[0, 0, 0, 1], &[1]);
        assert_eq!(z3.derive(), over_z(&[0, 0, 3], &[1]));
        assert!(z3.derive_iter(4).is_zero());
    }

    #[test]
    fn iterated_derivative_of_inverse_z() {
        // d^n (1/z) = (-1)^n n! / z^(n+1)
        let x = over_z(&[1], &[0, 1]);
        let mut fact = 1i64;
        for n in 0..=6u32 {
            if n > 0 {
                fact *= i64::from(n);
            }
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let mut den = vec![0i64; n as usize + 1];
            den.push(1);
            assert_eq!(x.derive_iter(n as usize), over_z(&[sign * fact], &den));
        }
    }

    #[test]
    fn derivation_is_leibniz_on_a_sample() {
        let a = over_z(&[1, 2], &[0, 1]);
        let b = over_z(&[-1, 0, 1], &[3, 1]);
        let lhs = a.try_mul(&b).unwrap().derive();
        let rhs = a
            .derive()
            .try_mul(&b)
            .unwrap()
            .try_add(&a.try_mul(&b.derive()).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn binomials_match_pascal() {
        assert_eq!(binomial_row(5), vec![
            BigInt::from(1),
            BigInt::from(5),
            BigInt::from(10),
            BigInt::from(10),
            BigInt::from(5),
            BigInt::from(1)
        ]);
        assert_eq!(binomial(6, 3), Rational::from_integer(BigInt::from(20)));
        assert!(num::Zero::is_zero(&binomial(3, 5)));
    }

    #[test]
    fn alternating_factorial_matrix_determinant() {
        // det of ((-1)^(i+j) (i+j)!) for 0 <= i,j < d is (prod_{i<d} i!)^2.
        for d in 1..=6usize {
            let m = Matrix::from_fn(d, d, FieldTag::Q, |i, j| {
                let mut v = Rational::one();
                for t in 1..=(i + j) {
                    v *= Rational::from_integer(BigInt::from(t));
                }
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                FieldElem::from_rational(v * Rational::from_integer(BigInt::from(sign)), FieldTag::Q)
            })
            .unwrap();
            let mut expect = Rational::one();
            for i in 1..d {
                let mut f = Rational::one();
                for t in 1..=i {
                    f *= Rational::from_integer(BigInt::from(t));
                }
                expect *= &f * &f;
            }
            assert_eq!(m.det(), FieldElem::from_rational(expect, FieldTag::Q));
        }
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(q(-3, 4).to_string(), "-3/4");
        assert_eq!(over_z(&[1], &[-1, 1]).to_string(), "1/(z - 1)");
        assert_eq!(over_z(&[-1], &[1, -2, 1]).to_string(), "-1/(z^2 - 2*z + 1)");
        assert_eq!(over_z(&[0, 1], &[2]).to_string(), "z/2");
        assert_eq!(over_z(&[1, 1], &[0, 0, 3]).to_string(), "(z + 1)/(3*z^2)");
        assert_eq!(over_z(&[0], &[1]).to_string(), "0");
        assert_eq!(over_z(&[7], &[15]).to_string(), "7/15");
        assert_eq!(over_z(&[0, 2, 4], &[1]).to_string(), "4*z^2 + 2*z");
    }
}
