//! Exact arithmetic for differentially recursive sequences.
//!
//! A differential field (K, d) here is either the rationals with the zero
//! derivation (tag `q`) or rational functions in `z` with the formal
//! derivative d/dz (tag `qz`). Sequences over K multiply by the binomial
//! convolution `(a*b)(n) = sum_k C(n,k) a(k) b(n-k)`, the Hurwitz product,
//! and the index shift `N(a)(n) = a(n+1)` is a derivation for it. A sequence
//! is differentially recursive when some monic skew polynomial in `Y`
//! annihilates it under the right action `a <| Y = N(a)`, `a <| x = t(x)*a`.
//!
//! Modules, bottom up:
//!
//! * [`field`]: exact rationals, polynomials, rational functions, the two
//!   differential fields, and nullspace/determinant over them.
//! * [`ore`]: the skew polynomial ring K[Y; d] with `x*Y = Y*x + d(x)`.
//! * [`hurwitz`]: length-tracked sequence prefixes with the Hurwitz product.
//! * [`drs`]: recursive sequences as (monic annihilator, initial conditions),
//!   fundamental solutions, minimal annihilators, product/sum closure.
//! * [`hopf`]: counit, comultiplication, antipode, and executable checks of
//!   the Hopf algebroid axioms these satisfy.

pub mod drs;
mod error;
pub mod field;
pub mod hopf;
pub mod hurwitz;
pub mod ore;

pub use drs::{
    act, divisibility_inclusion, find_linear_recurrence, from_initial, fundamental_matrix,
    min_annihilator, DRSeq, FundMatrix, InclusionReport,
};
pub use error::{Error, Result};
pub use field::{binomial, FieldElem, FieldTag, Matrix, Poly, RatFunc, Rational};
pub use hopf::{
    antipode, check_antipode, check_antipode_axiom, check_counit_axiom, check_takeuchi, comult,
    counit, CheckReport, CheckStatus, ComultLegs, Failure,
};
pub use hurwitz::Seq;
pub use ore::{operator_string, OrePoly};
