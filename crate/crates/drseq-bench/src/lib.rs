//! Shared fixtures for the criterion benchmarks: a few operators and
//! sequence prefixes that exercise the hot paths at realistic sizes.

use drseq::{DRSeq, FieldElem, FieldTag, OrePoly, Poly, RatFunc, Rational, Seq};
use num::BigInt;

pub fn q(n: i64) -> FieldElem {
    FieldElem::from_int(n, FieldTag::Q)
}

/// A rational function given by integer coefficient lists, lowest power
/// first.
pub fn rf(num: &[i64], den: &[i64]) -> FieldElem {
    let poly = |v: &[i64]| {
        Poly::from_coeffs(
            v.iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    };
    FieldElem::Qz(RatFunc::new(poly(num), poly(den)).unwrap())
}

/// Fibonacci as a recursive sequence: `Y^2 - Y - 1` with seeds 0, 1.
pub fn fibonacci() -> DRSeq {
    DRSeq::new(
        OrePoly::new(FieldTag::Q, vec![q(-1), q(-1), q(1)]).unwrap(),
        vec![q(0), q(1)],
    )
    .unwrap()
}

/// An order-3 operator over rational functions with a pole at 1, stressing
/// coefficient growth in the derivative towers.
pub fn pole_operator() -> OrePoly {
    let c = rf(&[1], &[-1, 1]);
    OrePoly::new(
        FieldTag::Qz,
        vec![
            c.try_mul(&c).unwrap(),
            -&c,
            rf(&[0, 2], &[1]),
            rf(&[1], &[1]),
        ],
    )
    .unwrap()
}

/// A dense generic operator of the requested degree, coefficients
/// `(i+1) + z` over the rational-function field.
pub fn dense_operator(degree: usize) -> OrePoly {
    let mut coeffs: Vec<FieldElem> = (0..degree)
        .map(|i| rf(&[i as i64 + 1, 1], &[1]))
        .collect();
    coeffs.push(rf(&[1], &[1]));
    OrePoly::new(FieldTag::Qz, coeffs).unwrap()
}

/// A generic prefix with no short recurrence, for the search benchmarks.
pub fn generic_prefix(len: usize) -> Seq {
    Seq::new(
        FieldTag::Qz,
        (0..len).map(|n| rf(&[n as i64 - 2, 1], &[1, 1])).collect(),
    )
    .unwrap()
}
