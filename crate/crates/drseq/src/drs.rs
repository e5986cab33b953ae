//! Differentially recursive sequences: finite data defining infinite ones.
//!
//! A sequence prefix `a` is acted on from the right by a skew polynomial
//! `P = sum_i Y^i c_i`: `Y` shifts, a coefficient acts through the target
//! embedding, so
//!
//! ```text
//! (a <| P)(n) = sum_i sum_{k<=n} C(n,k) d^k(c_i) a(n-k+i)
//! ```
//!
//! A sequence is differentially recursive when a monic `P` of degree `d`
//! kills it; the pair (P, first d terms) then determines every later term,
//! and the set of all annihilators is the right ideal generated by the
//! minimal monic one. [`DRSeq`] stores exactly that pair. The solution
//! space of a monic degree-d operator has dimension d over the constants;
//! [`fundamental_matrix`] produces the d solutions whose initial block is
//! the identity, computed by the first-order companion system
//! `v(k+1) = d(v(k)) + A v(k)`.
//!
//! [`min_annihilator`] searches for the minimal monic annihilator of a bare
//! prefix. For each candidate degree `e` it solves the linear system
//!
//! ```text
//! sum_{i<=e} x_i G(n, i) = 0,   G(n, i) = sum_{k<=n} C(n,k) (-1)^k d^k(a(n-k+i))
//! ```
//!
//! for rows `n = 0..D-1` (derivatives sit on the known terms, so the system
//! is linear in the unknown coefficients), then re-verifies any candidate
//! through the independent `act` path over the available window. For a
//! sequence whose true order is at most the bound `D`, a solution of the
//! full D-row system annihilates the whole sequence, so the certificate is
//! exact, not sampled; for a bare prefix with no known generator the result
//! is certified given that order bound only.

use crate::error::{Error, Result};
use crate::field::{binomial_row, FieldElem, FieldTag, Matrix, Rational};
use crate::hurwitz::Seq;
use crate::ore::OrePoly;
use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A differentially recursive sequence: monic annihilator plus the initial
/// conditions that pin down one solution.
///
/// Invariants: the annihilator is monic of degree `d >= 1`, the initial
/// vector has exactly `d` entries, and every entry shares the operator's
/// ground field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DRSeq {
    annihilator: OrePoly,
    inits: Vec<FieldElem>,
}

impl DRSeq {
    pub fn new(annihilator: OrePoly, inits: Vec<FieldElem>) -> Result<Self> {
        if !annihilator.is_monic() || annihilator.degree() == Some(0) {
            return Err(Error::NotMonic);
        }
        let d = annihilator.degree().unwrap();
        if inits.len() != d {
            return Err(Error::ArityMismatch {
                expected: d,
                got: inits.len(),
            });
        }
        if inits.iter().any(|x| x.tag() != annihilator.tag()) {
            return Err(Error::FieldMismatch);
        }
        Ok(DRSeq { annihilator, inits })
    }

    pub fn annihilator(&self) -> &OrePoly {
        &self.annihilator
    }

    pub fn inits(&self) -> &[FieldElem] {
        &self.inits
    }

    pub fn degree(&self) -> usize {
        self.annihilator.degree().unwrap()
    }

    pub fn tag(&self) -> FieldTag {
        self.annihilator.tag()
    }

    /// `source(x)` as recursive data: killed by `Y`.
    pub fn embed_source(x: &FieldElem) -> DRSeq {
        let tag = x.tag();
        DRSeq {
            annihilator: OrePoly::gen(tag),
            inits: vec![x.clone()],
        }
    }

    /// `target(x)` as recursive data: killed by `Y - d(x)/x` (by `Y` when
    /// `x = 0`, since the target of zero is the zero sequence).
    pub fn embed_target(x: &FieldElem) -> DRSeq {
        let tag = x.tag();
        if x.is_zero() {
            return DRSeq {
                annihilator: OrePoly::gen(tag),
                inits: vec![FieldElem::zero(tag)],
            };
        }
        let ratio = x.derive().try_div(x).expect("x is nonzero");
        let p = OrePoly::new(tag, vec![-&ratio, FieldElem::one(tag)]).expect("uniform tag");
        DRSeq {
            annihilator: p,
            inits: vec![x.clone()],
        }
    }

    /// Unrolls the recursion `a(n+d) = sum_i sum_k C(n,k) d^k(c_i) a(n-k+i)`
    /// (with `c_i` the negated lower coefficients) to the first `len` terms.
    pub fn materialize(&self, len: usize) -> Seq {
        let tag = self.tag();
        let d = self.degree();
        let mut terms: Vec<FieldElem> = self.inits.iter().take(len).cloned().collect();
        if len <= d {
            return Seq::new(tag, terms).expect("uniform tag");
        }
        // towers[i][k] = d^k(c_i), grown one derivative per step
        let mut towers: Vec<Vec<FieldElem>> = (0..d)
            .map(|i| vec![-&self.annihilator.coeff(i)])
            .collect();
        for n in 0..len - d {
            if n > 0 {
                for tower in towers.iter_mut() {
                    let next = tower.last().unwrap().derive();
                    tower.push(next);
                }
            }
            let row = binomial_row(n);
            let mut acc = FieldElem::zero(tag);
            for (i, tower) in towers.iter().enumerate() {
                for (k, w) in row.iter().enumerate() {
                    if tower[k].is_zero() {
                        continue;
                    }
                    let prod = &tower[k] * &terms[n - k + i];
                    acc += &prod.scale(&Rational::from_integer(w.clone()));
                }
            }
            terms.push(acc);
        }
        Seq::new(tag, terms).expect("uniform tag")
    }

    /// Product closure: the Hurwitz product of two recursive sequences is
    /// recursive of order at most `d1 * d2`; finds its minimal annihilator
    /// and initial terms.
    pub fn product(&self, other: &DRSeq, len: usize) -> Result<DRSeq> {
        self.closure(other, len, self.degree() * other.degree(), Seq::hmul)
    }

    /// Sum closure: order at most `d1 + d2`.
    pub fn sum(&self, other: &DRSeq, len: usize) -> Result<DRSeq> {
        self.closure(other, len, self.degree() + other.degree(), Seq::hadd)
    }

    fn closure(
        &self,
        other: &DRSeq,
        len: usize,
        bound: usize,
        combine: fn(&Seq, &Seq) -> Result<Seq>,
    ) -> Result<DRSeq> {
        if self.tag() != other.tag() {
            return Err(Error::FieldMismatch);
        }
        let window = 2 * bound + 4;
        let work_len = len.max(2 * bound).max(window);
        let combined = combine(&self.materialize(work_len), &other.materialize(work_len))?;
        let p = min_annihilator(&combined, bound, window)?
            .expect("sums and products of recursive sequences stay recursive within the bound");
        let e = p.degree().unwrap();
        DRSeq::new(p, combined.terms()[..e].to_vec())
    }
}

/// The d fundamental solutions of a monic operator, row `i` starting with
/// the i-th standard basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundMatrix {
    solutions: Vec<Seq>,
}

impl FundMatrix {
    pub fn degree(&self) -> usize {
        self.solutions.len()
    }

    pub fn len(&self) -> usize {
        self.solutions.first().map_or(0, Seq::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn solution(&self, i: usize) -> &Seq {
        &self.solutions[i]
    }

    pub fn solutions(&self) -> &[Seq] {
        &self.solutions
    }
}

/// Right action of a skew polynomial on a sequence prefix.
///
/// The result has `len(a) - deg P` terms: entry `n` needs `a` up to index
/// `n + deg P`. The zero operator sends everything to the zero prefix of
/// the input's length.
pub fn act(a: &Seq, p: &OrePoly) -> Result<Seq> {
    if a.tag() != p.tag() {
        return Err(Error::FieldMismatch);
    }
    let tag = a.tag();
    let Some(e) = p.degree() else {
        return Ok(Seq::zeros(tag, a.len()));
    };
    if a.len() <= e {
        return Err(Error::PrefixTooShort {
            needed: e + 1,
            have: a.len(),
        });
    }
    let out_len = a.len() - e;
    // towers[i][k] = d^k(c_i) for k < out_len
    let towers: Vec<Vec<FieldElem>> = (0..=e)
        .map(|i| {
            let mut tower = vec![p.coeff(i)];
            for _ in 1..out_len {
                tower.push(tower.last().unwrap().derive());
            }
            tower
        })
        .collect();
    let mut terms = Vec::with_capacity(out_len);
    for n in 0..out_len {
        let row = binomial_row(n);
        let mut acc = FieldElem::zero(tag);
        for (i, tower) in towers.iter().enumerate() {
            for (k, w) in row.iter().enumerate() {
                if tower[k].is_zero() {
                    continue;
                }
                let prod = &tower[k] * a.term(n - k + i);
                acc += &prod.scale(&Rational::from_integer(w.clone()));
            }
        }
        terms.push(acc);
    }
    Seq::new(tag, terms)
}

/// The fundamental solutions of a monic operator, `len` terms each.
///
/// Column k+1 comes from column k by `v(k+1) = d(v(k)) + A v(k)` with `A`
/// the companion matrix (ones on the subdiagonal, negated low coefficients
/// in the last column); starting from the first standard basis vector this
/// reproduces the identity initial block and then the recursion.
pub fn fundamental_matrix(p: &OrePoly, len: usize) -> Result<FundMatrix> {
    if !p.is_monic() || p.degree() == Some(0) {
        return Err(Error::NotMonic);
    }
    let tag = p.tag();
    let d = p.degree().unwrap();
    let c: Vec<FieldElem> = (0..d).map(|i| -&p.coeff(i)).collect();
    let mut rows: Vec<Vec<FieldElem>> = vec![Vec::with_capacity(len); d];
    let mut v: Vec<FieldElem> = vec![FieldElem::zero(tag); d];
    v[0] = FieldElem::one(tag);
    for k in 0..len {
        if k > 0 {
            let mut next: Vec<FieldElem> = Vec::with_capacity(d);
            for i in 0..d {
                let mut entry = v[i].derive();
                if i >= 1 {
                    entry += &v[i - 1];
                }
                entry += &(&c[i] * &v[d - 1]);
                next.push(entry);
            }
            v = next;
        }
        for i in 0..d {
            rows[i].push(v[i].clone());
        }
    }
    let solutions = rows
        .into_iter()
        .map(|terms| Seq::new(tag, terms).expect("uniform tag"))
        .collect();
    Ok(FundMatrix { solutions })
}

/// The solution of `p` with the given initial conditions, as the linear
/// combination `sum_i inits[i] * o_i` of the fundamental solutions.
pub fn from_initial(p: &OrePoly, inits: &[FieldElem], len: usize) -> Result<Seq> {
    if !p.is_monic() || p.degree() == Some(0) {
        return Err(Error::NotMonic);
    }
    let d = p.degree().unwrap();
    if inits.len() != d {
        return Err(Error::ArityMismatch {
            expected: d,
            got: inits.len(),
        });
    }
    let fund = fundamental_matrix(p, len)?;
    let mut acc = Seq::zeros(p.tag(), len);
    for (i, x) in inits.iter().enumerate() {
        acc = acc.hadd(&fund.solution(i).hscale_left(x)?)?;
    }
    Ok(acc)
}

/// Searches for the minimal monic annihilator of a prefix, trying degrees
/// `1..=bound` in order and returning the first verified hit.
///
/// Needs `len(a) >= 2*bound` terms: `bound` rows of the linear system touch
/// indices up to `2*bound - 1`. Candidates are re-verified through [`act`]
/// on all indices the prefix supports below `window` (raised to the bound
/// when smaller). `None` means no operator of degree within the bound kills
/// the prefix.
pub fn min_annihilator(a: &Seq, bound: usize, window: usize) -> Result<Option<OrePoly>> {
    if bound == 0 {
        return Ok(None);
    }
    let have = a.len();
    if have < 2 * bound {
        return Err(Error::PrefixTooShort {
            needed: 2 * bound,
            have,
        });
    }
    let tag = a.tag();
    let window = window.max(bound);
    // towers[m][k] = d^k(a(m)) for k < bound
    let towers: Vec<Vec<FieldElem>> = (0..2 * bound)
        .map(|m| {
            let mut tower = vec![a.term(m).clone()];
            for _ in 1..bound {
                tower.push(tower.last().unwrap().derive());
            }
            tower
        })
        .collect();
    // g[n][i] = sum_k C(n,k) (-1)^k d^k(a(n-k+i))
    let g: Vec<Vec<FieldElem>> = (0..bound)
        .map(|n| {
            let row = binomial_row(n);
            (0..=bound)
                .map(|i| {
                    let mut acc = FieldElem::zero(tag);
                    for (k, w) in row.iter().enumerate() {
                        let term = &towers[n - k + i][k];
                        if term.is_zero() {
                            continue;
                        }
                        let signed = if k % 2 == 0 { w.clone() } else { -w };
                        acc += &term.scale(&Rational::from_integer(signed));
                    }
                    acc
                })
                .collect()
        })
        .collect();
    for e in 1..=bound {
        let m = Matrix::from_fn(bound, e + 1, tag, |n, i| g[n][i].clone())?;
        let basis = m.nullspace();
        let Some(v) = basis.iter().find(|v| !v[e].is_zero()) else {
            continue;
        };
        let lead_inv = v[e].inv()?;
        let coeffs: Vec<FieldElem> = v.iter().map(|x| x * &lead_inv).collect();
        let p = OrePoly::new(tag, coeffs)?;
        // Verify on the window only: acting on the full prefix would build
        // derivative towers of the candidate coefficients far deeper than the
        // entries we actually check.
        let image = act(&a.prefix(have.min(window)), &p)?;
        if image.terms().iter().all(|t| t.is_zero()) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Detects an ordinary (constant-shift) linear recurrence
/// `sum_{j<=d} p_j a(n+j) = 0` holding on the first `window` rows; the
/// returned coefficients are monic in `p_d`. This ignores the derivation:
/// it asks whether shifts alone, with field-element weights, kill the
/// prefix.
pub fn find_linear_recurrence(
    a: &Seq,
    bound: usize,
    window: usize,
) -> Result<Option<Vec<FieldElem>>> {
    let needed = window + bound;
    if a.len() < needed {
        return Err(Error::PrefixTooShort {
            needed,
            have: a.len(),
        });
    }
    let m = Matrix::from_fn(window, bound + 1, a.tag(), |n, j| a.term(n + j).clone())?;
    let basis = m.nullspace();
    let Some(v) = basis.iter().find(|v| !v[bound].is_zero()) else {
        return Ok(None);
    };
    let lead_inv = v[bound].inv()?;
    Ok(Some(v.iter().map(|x| x * &lead_inv).collect()))
}

/// Outcome of a divisibility test between annihilator ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionReport {
    /// Remainder of `b` divided on the right by `a` was zero.
    pub divisible: bool,
    /// How many random solutions of `a` were pushed through `b`.
    pub samples_checked: usize,
    /// Every sampled solution of `a` was annihilated by `b`.
    pub samples_killed: bool,
}

impl InclusionReport {
    pub fn holds(&self) -> bool {
        self.divisible && self.samples_killed
    }
}

/// Tests whether every solution of monic `a` is a solution of monic `b`,
/// i.e. whether `b` lies in the right ideal of `a`. The algebraic test is
/// exact (zero remainder under right division); when it holds, `samples`
/// random initial-condition vectors are materialized and pushed through
/// `b` as a cross-check of the action itself. Sampling is deterministic in
/// `seed`.
pub fn divisibility_inclusion(
    a: &OrePoly,
    b: &OrePoly,
    samples: usize,
    seed: u64,
) -> Result<InclusionReport> {
    if !a.is_monic() || a.degree() == Some(0) || !b.is_monic() || b.degree() == Some(0) {
        return Err(Error::NotMonic);
    }
    if a.tag() != b.tag() {
        return Err(Error::FieldMismatch);
    }
    let (_, rem) = b.right_divrem(a)?;
    let divisible = rem.is_zero();
    let mut report = InclusionReport {
        divisible,
        samples_checked: 0,
        samples_killed: true,
    };
    if !divisible {
        return Ok(report);
    }
    let tag = a.tag();
    let d = a.degree().unwrap();
    let len = b.degree().unwrap() + 8;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let inits: Vec<FieldElem> = (0..d).map(|_| random_elem(&mut rng, tag)).collect();
        let sol = DRSeq::new(a.clone(), inits)?.materialize(len);
        let image = act(&sol, b)?;
        report.samples_checked += 1;
        report.samples_killed &= image.is_zero_prefix();
    }
    Ok(report)
}

/// Small deterministic field element for sampling: a rational with
/// single-digit parts, plus a degree-one numerator over `Qz`.
fn random_elem(rng: &mut ChaCha8Rng, tag: FieldTag) -> FieldElem {
    let num = BigInt::from(rng.gen_range(-3i64..=3));
    let den = BigInt::from(rng.gen_range(1i64..=3));
    let c = FieldElem::from_rational(Rational::new(num, den), tag);
    match tag {
        FieldTag::Q => c,
        FieldTag::Qz => {
            let slope = rng.gen_range(-2i64..=2);
            let lin = FieldElem::var().scale(&Rational::from_integer(BigInt::from(slope)));
            &c + &lin
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Poly, RatFunc};

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

    fn ore(coeffs: Vec<FieldElem>) -> OrePoly {
        let tag = coeffs[0].tag();
        OrePoly::new(tag, coeffs).unwrap()
    }

    fn fib() -> DRSeq {
        DRSeq::new(ore(vec![q(-1), q(-1), q(1)]), vec![q(0), q(1)]).unwrap()
    }

    #[test]
    fn act_kills_both_embeddings() {
        let x = rf(&[1], &[0, 1]); // 1/z
        let t = Seq::target(&x, 8);
        let p = ore(vec![x.derive(), -&x]); // d(x) - Y x, not monic
        assert!(act(&t, &p).unwrap().is_zero_prefix());
        let s = Seq::source(&rf(&[2, 5], &[1]), 8);
        assert!(act(&s, &OrePoly::gen(FieldTag::Qz)).unwrap().is_zero_prefix());
    }

    #[test]
    fn act_length_and_prefix_guard() {
        let a = Seq::zeros(FieldTag::Q, 5);
        let p = ore(vec![q(1), q(0), q(1)]);
        assert_eq!(act(&a, &p).unwrap().len(), 3);
        assert_eq!(act(&a, &OrePoly::zero(FieldTag::Q)).unwrap().len(), 5);
        let short = Seq::zeros(FieldTag::Q, 2);
        assert_eq!(
            act(&short, &p).unwrap_err(),
            Error::PrefixTooShort { needed: 3, have: 2 }
        );
    }

    #[test]
    fn act_is_a_right_module_action() {
        // (a <| P) <| Q = a <| (P*Q) on a generic prefix
        let a = Seq::new(
            FieldTag::Qz,
            (0..10)
                .map(|n| rf(&[n as i64 - 3, 1], &[1, 1]))
                .collect(),
        )
        .unwrap();
        let p = ore(vec![rf(&[0, 1], &[1]), rf(&[1], &[1])]);
        let r = ore(vec![rf(&[1], &[0, 1]), rf(&[2], &[1]), rf(&[1], &[1])]);
        let lhs = act(&act(&a, &p).unwrap(), &r).unwrap();
        let rhs = act(&a, &p.mul(&r).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_respects_right_scaling() {
        // a <| (P u) = t(u) * (a <| P)
        let a = Seq::target(&rf(&[1, 1], &[0, 1]), 9);
        let p = ore(vec![rf(&[2], &[1]), rf(&[0, 1], &[1])]);
        let u = rf(&[1], &[1, 1]);
        let lhs = act(&a, &p.scale_right(&u).unwrap()).unwrap();
        let rhs = act(&a, &p).unwrap().hscale_right(&u).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fibonacci_fundamental_rows() {
        let f = fundamental_matrix(fib().annihilator(), 6).unwrap();
        assert_eq!(f.solution(0).terms(), &[q(1), q(0), q(1), q(1), q(2), q(3)]);
        assert_eq!(f.solution(1).terms(), &[q(0), q(1), q(1), q(2), q(3), q(5)]);
    }

    #[test]
    fn materialize_equals_combination_of_fundamentals() {
        let r = fib();
        let m = r.materialize(10);
        assert_eq!(
            m.terms(),
            &[q(0), q(1), q(1), q(2), q(3), q(5), q(8), q(13), q(21), q(34)]
        );
        let combo = from_initial(r.annihilator(), r.inits(), 10).unwrap();
        assert_eq!(m, combo);
        assert!(act(&m, r.annihilator()).unwrap().is_zero_prefix());
    }

    #[test]
    fn geometric_and_interleaved_constant_solutions() {
        let g = fundamental_matrix(&ore(vec![q(-5), q(1)]), 5).unwrap();
        assert_eq!(g.solution(0).terms(), &[q(1), q(5), q(25), q(125), q(625)]);
        let w = fundamental_matrix(&ore(vec![q(4), q(0), q(1)]), 7).unwrap();
        assert_eq!(
            w.solution(0).terms(),
            &[q(1), q(0), q(-4), q(0), q(16), q(0), q(-64)]
        );
        assert_eq!(
            w.solution(1).terms(),
            &[q(0), q(1), q(0), q(-4), q(0), q(16), q(0)]
        );
    }

    #[test]
    fn fundamental_matrix_requires_monic() {
        assert_eq!(
            fundamental_matrix(&ore(vec![q(1), q(2)]), 4).unwrap_err(),
            Error::NotMonic
        );
        assert_eq!(
            fundamental_matrix(&OrePoly::one(FieldTag::Q), 4).unwrap_err(),
            Error::NotMonic
        );
    }

    #[test]
    fn min_annihilator_recovers_target_generator() {
        let x = rf(&[1], &[0, 1]);
        let t = Seq::target(&x, 10);
        let p = min_annihilator(&t, 3, 10).unwrap().unwrap();
        // minimal degree wins: Y + 1/z, not anything of degree 2 or 3
        assert_eq!(p, ore(vec![rf(&[1], &[0, 1]), rf(&[1], &[1])]));
    }

    #[test]
    fn min_annihilator_of_zero_prefix_is_the_shift() {
        let z = Seq::zeros(FieldTag::Q, 8);
        let p = min_annihilator(&z, 2, 8).unwrap().unwrap();
        assert_eq!(p, OrePoly::gen(FieldTag::Q));
    }

    #[test]
    fn min_annihilator_respects_prefix_guard() {
        let t = Seq::target(&q(1), 5);
        assert_eq!(
            min_annihilator(&t, 3, 10).unwrap_err(),
            Error::PrefixTooShort { needed: 6, have: 5 }
        );
    }

    #[test]
    fn powers_of_z_have_no_differential_recursion() {
        // a(n) = z^n is not differentially recursive: no bounded-degree
        // operator kills it.
        let a = Seq::new(
            FieldTag::Qz,
            (0..20)
                .map(|n| {
                    let mut num = vec![0i64; n];
                    num.push(1);
                    rf(&num, &[1])
                })
                .collect(),
        )
        .unwrap();
        for bound in 1..=4 {
            assert_eq!(min_annihilator(&a, bound, 2 * bound + 4).unwrap(), None);
        }
    }

    #[test]
    fn factorial_target_has_no_linear_recurrence() {
        // t(1/z)(n) = (-1)^n n!/z^(n+1) outruns any constant-shift relation.
        let t = Seq::target(&rf(&[1], &[0, 1]), 20);
        for bound in 1..=5 {
            assert_eq!(find_linear_recurrence(&t, bound, 12).unwrap(), None);
        }
    }

    #[test]
    fn linear_recurrences_are_detected() {
        let f = fib().materialize(12);
        let rec = find_linear_recurrence(&f, 2, 8).unwrap().unwrap();
        assert_eq!(rec, vec![q(-1), q(-1), q(1)]);
        // z^n satisfies a(n+1) = z a(n)
        let a = Seq::new(
            FieldTag::Qz,
            (0..8)
                .map(|n| {
                    let mut num = vec![0i64; n];
                    num.push(1);
                    rf(&num, &[1])
                })
                .collect(),
        )
        .unwrap();
        let rec = find_linear_recurrence(&a, 1, 6).unwrap().unwrap();
        assert_eq!(rec, vec![-&rf(&[0, 1], &[1]), rf(&[1], &[1])]);
    }

    #[test]
    fn product_of_order_one_pair_is_order_one() {
        // generators Y - p and Y - q multiply to Y - (p + q)
        let p = rf(&[0, 1], &[1]); // z
        let qq = rf(&[1], &[0, 1]); // 1/z
        let x = DRSeq::new(ore(vec![-&p, rf(&[1], &[1])]), vec![rf(&[1], &[1])]).unwrap();
        let y = DRSeq::new(ore(vec![-&qq, rf(&[1], &[1])]), vec![rf(&[1], &[1])]).unwrap();
        let prod = x.product(&y, 10).unwrap();
        assert_eq!(
            prod.annihilator(),
            &ore(vec![-&(&p + &qq), rf(&[1], &[1])])
        );
        let direct = x.materialize(10).hmul(&y.materialize(10)).unwrap();
        assert_eq!(prod.materialize(10), direct);
    }

    #[test]
    fn sum_of_source_and_target_over_constants_collapses() {
        let u = q(3);
        let s = DRSeq::embed_source(&u);
        let t = DRSeq::embed_target(&u);
        let sum = s.sum(&t, 8).unwrap();
        assert_eq!(sum.degree(), 1);
        assert_eq!(sum.materialize(4).terms(), &[q(6), q(0), q(0), q(0)]);
    }

    #[test]
    fn sum_materializes_to_entrywise_sum() {
        let a = DRSeq::embed_target(&rf(&[0, 1], &[1]));
        let b = DRSeq::embed_target(&rf(&[1], &[0, 1]));
        let sum = a.sum(&b, 10).unwrap();
        let direct = a.materialize(10).hadd(&b.materialize(10)).unwrap();
        assert_eq!(sum.materialize(10), direct);
        assert!(sum.degree() <= 2);
    }

    #[test]
    fn embeddings_round_trip_through_min_annihilator() {
        let x = rf(&[3, 1], &[0, 1]);
        let t = DRSeq::embed_target(&x);
        let m = t.materialize(8);
        let p = min_annihilator(&m, 2, 8).unwrap().unwrap();
        assert_eq!(&p, t.annihilator());
        let zero_target = DRSeq::embed_target(&FieldElem::zero(FieldTag::Qz));
        assert_eq!(zero_target.annihilator(), &OrePoly::gen(FieldTag::Qz));
    }

    #[test]
    fn divisibility_holds_for_built_factorizations() {
        let a = ore(vec![-&rf(&[0, 1], &[1]), rf(&[1], &[1])]); // Y - z
        let c = ore(vec![rf(&[1], &[1]), rf(&[1], &[1])]); // Y + 1
        let b = a.mul(&c).unwrap();
        let report = divisibility_inclusion(&a, &b, 3, 7).unwrap();
        assert!(report.holds());
        assert_eq!(report.samples_checked, 3);
    }

    #[test]
    fn divisibility_fails_across_unrelated_ideals() {
        let a = ore(vec![q(0), q(0), q(1)]); // Y^2
        let b = ore(vec![q(0), q(1)]); // Y
        let report = divisibility_inclusion(&a, &b, 2, 1).unwrap();
        assert!(!report.divisible);
        assert_eq!(report.samples_checked, 0);
        // the reverse inclusion does hold: Y^2 = Y * Y
        assert!(divisibility_inclusion(&b, &a, 2, 1).unwrap().holds());
    }

    #[test]
    fn drseq_constructor_enforces_invariants() {
        assert_eq!(
            DRSeq::new(ore(vec![q(1), q(2)]), vec![q(1)]).unwrap_err(),
            Error::NotMonic
        );
        assert_eq!(
            DRSeq::new(ore(vec![q(-1), q(-1), q(1)]), vec![q(1)]).unwrap_err(),
            Error::ArityMismatch {
                expected: 2,
                got: 1
            }
        );
    }
}
