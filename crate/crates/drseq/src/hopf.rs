//! Structure maps of the Hopf algebroid of differentially recursive
//! sequences, and executable checks that they satisfy their axioms.
//!
//! Over the ground field K, recursive sequences form an algebra with the two
//! embeddings `source` and `target`; on top of that live:
//!
//! * counit: `eps(a) = a(0)`;
//! * comultiplication: for `a` of order d,
//!   `Delta(a) = sum_{i<d} N^i(a) (x) o_i` with `o_i` the fundamental
//!   solutions of its annihilator;
//! * antipode: `S(a)(n) = sum_k C(n,k) (-1)^(n-k) d^k(a(n-k))`, an
//!   alternating binomial sum threaded through the derivation (over a
//!   trivial derivation it collapses to `(-1)^n a(n)`).
//!
//! The checks return structured reports instead of panicking, so a CLI can
//! show the first failing index. All comparisons are exact.

use crate::drs::{fundamental_matrix, DRSeq};
use crate::error::{Error, Result};
use crate::field::{binomial_row, FieldElem, Rational};
use crate::hurwitz::Seq;

/// `eps(a) = a(0)`.
pub fn counit(a: &Seq) -> Result<FieldElem> {
    if a.is_empty() {
        return Err(Error::EmptyPrefix);
    }
    Ok(a.term(0).clone())
}

/// The antipode on a prefix, same length:
/// `S(a)(n) = sum_k C(n,k) (-1)^(n-k) d^k(a(n-k))`.
///
/// Equivalently, entry n is the 0-th term of the n-fold application of
/// `nabla - shift`; the closed sum needs no length to spare, so the result
/// keeps all `len(a)` terms.
pub fn antipode(a: &Seq) -> Seq {
    let tag = a.tag();
    let len = a.len();
    // towers[m][k] = d^k(a(m)) for m + k < len
    let towers: Vec<Vec<FieldElem>> = (0..len)
        .map(|m| {
            let mut tower = vec![a.term(m).clone()];
            for _ in 1..len - m {
                tower.push(tower.last().unwrap().derive());
            }
            tower
        })
        .collect();
    let mut terms = Vec::with_capacity(len);
    for n in 0..len {
        let row = binomial_row(n);
        let mut acc = FieldElem::zero(tag);
        for (k, w) in row.iter().enumerate() {
            let term = &towers[n - k][k];
            if term.is_zero() {
                continue;
            }
            let signed = if (n - k) % 2 == 0 { w.clone() } else { -w };
            acc += &term.scale(&Rational::from_integer(signed));
        }
        terms.push(acc);
    }
    Seq::new(tag, terms).expect("uniform tag")
}

/// The two legs of the comultiplication of a recursive sequence: `d` pairs
/// `(N^i(a), o_i)`, each `len` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComultLegs {
    pairs: Vec<(Seq, Seq)>,
}

impl ComultLegs {
    pub fn degree(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, i: usize) -> (&Seq, &Seq) {
        (&self.pairs[i].0, &self.pairs[i].1)
    }

    pub fn pairs(&self) -> &[(Seq, Seq)] {
        &self.pairs
    }
}

/// `Delta(a) = sum_{i<d} N^i(a) (x) o_i`, both legs cut to `len` terms.
pub fn comult(r: &DRSeq, len: usize) -> Result<ComultLegs> {
    let d = r.degree();
    let alpha = r.materialize(len + d - 1);
    let fund = fundamental_matrix(r.annihilator(), len)?;
    let mut pairs = Vec::with_capacity(d);
    for i in 0..d {
        let left = alpha.shift_n(i)?.prefix(len);
        pairs.push((left, fund.solution(i).clone()));
    }
    Ok(ComultLegs { pairs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// Where a check first failed and what was compared there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub location: String,
    pub expected: String,
    pub actual: String,
    /// Extra context, e.g. the outcome of an alternative reading.
    pub note: Option<String>,
}

/// Outcome of one axiom check, named so reports can be aggregated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub status: CheckStatus,
    pub first_failure: Option<Failure>,
}

impl CheckReport {
    fn pass(check: &str) -> Self {
        CheckReport {
            check: check.into(),
            status: CheckStatus::Pass,
            first_failure: None,
        }
    }

    fn fail(check: &str, failure: Failure) -> Self {
        CheckReport {
            check: check.into(),
            status: CheckStatus::Fail,
            first_failure: Some(failure),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

fn mismatch(location: String, expected: &FieldElem, actual: &FieldElem) -> Failure {
    Failure {
        location,
        expected: expected.to_string(),
        actual: actual.to_string(),
        note: None,
    }
}

/// Checks `(eps (x) id) Delta = id` term by term: the sequence must equal
/// `sum_i a(i) o_i` on `len` terms, and the opposite contraction holds
/// because the fundamental block starts with the identity, which is checked
/// too.
pub fn check_counit_axiom(r: &DRSeq, len: usize) -> Result<CheckReport> {
    const NAME: &str = "counit-axiom";
    let d = r.degree();
    let alpha = r.materialize(len.max(d));
    let fund = fundamental_matrix(r.annihilator(), len)?;
    let mut recon = Seq::zeros(r.tag(), len);
    for i in 0..d {
        recon = recon.hadd(&fund.solution(i).hscale_left(alpha.term(i))?)?;
    }
    for n in 0..len {
        if recon.term(n) != alpha.term(n) {
            return Ok(CheckReport::fail(
                NAME,
                mismatch(format!("n={n}"), alpha.term(n), recon.term(n)),
            ));
        }
    }
    for i in 0..d.min(len) {
        for j in 0..d.min(len) {
            let expected = if i == j {
                FieldElem::one(r.tag())
            } else {
                FieldElem::zero(r.tag())
            };
            let actual = fund.solution(i).term(j);
            if actual != &expected {
                return Ok(CheckReport::fail(
                    NAME,
                    mismatch(format!("identity block o_{i}({j})"), &expected, actual),
                ));
            }
        }
    }
    Ok(CheckReport::pass(NAME))
}

/// Checks the translation property of the comultiplication at one index
/// pair: `a(h+k) = sum_{j<=k} C(k,j) sum_{i<d} a(i+j) d^(k-j)(o_i(h))`.
pub fn check_takeuchi(r: &DRSeq, h: usize, k: usize) -> Result<CheckReport> {
    const NAME: &str = "takeuchi";
    let d = r.degree();
    let alpha = r.materialize((h + k + 1).max(d + k));
    let fund = fundamental_matrix(r.annihilator(), h + 1)?;
    let lhs = alpha.term(h + k).clone();
    let mut rhs = FieldElem::zero(r.tag());
    let row = binomial_row(k);
    for (j, w) in row.iter().enumerate() {
        let mut inner = FieldElem::zero(r.tag());
        for i in 0..d {
            let der = fund.solution(i).term(h).derive_iter(k - j);
            inner += &(alpha.term(i + j) * &der);
        }
        rhs += &inner.scale(&Rational::from_integer(w.clone()));
    }
    if lhs == rhs {
        Ok(CheckReport::pass(NAME))
    } else {
        Ok(CheckReport::fail(
            NAME,
            mismatch(format!("h={h}, k={k}"), &lhs, &rhs),
        ))
    }
}

/// Checks three facets of the antipode on one prefix:
///
/// 1. it is an involution, `S(S(a)) = a`;
/// 2. it swaps the two embeddings of `a(0)`;
/// 3. entry n equals the 0-th term after n applications of `nabla - shift`.
pub fn check_antipode(a: &Seq) -> Result<CheckReport> {
    const NAME: &str = "antipode";
    if a.is_empty() {
        return Err(Error::EmptyPrefix);
    }
    let len = a.len();
    let s = antipode(a);
    let ss = antipode(&s);
    for n in 0..len {
        if ss.term(n) != a.term(n) {
            let mut failure = mismatch(format!("n={n}"), a.term(n), ss.term(n));
            failure.note = Some("involution S(S(a)) = a".into());
            return Ok(CheckReport::fail(NAME, failure));
        }
    }
    let x = a.term(0);
    let source_image = antipode(&Seq::source(x, len));
    let target_expected = Seq::target(x, len);
    if let (Some(n), _) = source_image.eq_prefix(&target_expected) {
        let mut failure = mismatch(format!("n={n}"), target_expected.term(n), source_image.term(n));
        failure.note = Some("S(source(x)) = target(x)".into());
        return Ok(CheckReport::fail(NAME, failure));
    }
    let target_image = antipode(&Seq::target(x, len));
    let source_expected = Seq::source(x, len);
    if let (Some(n), _) = target_image.eq_prefix(&source_expected) {
        let mut failure = mismatch(format!("n={n}"), source_expected.term(n), target_image.term(n));
        failure.note = Some("S(target(x)) = source(x)".into());
        return Ok(CheckReport::fail(NAME, failure));
    }
    let mut iterated = a.clone();
    for n in 0..len {
        if n > 0 {
            iterated = iterated.ker_derivation()?;
        }
        if iterated.term(0) != s.term(n) {
            let mut failure = mismatch(format!("n={n}"), iterated.term(0), s.term(n));
            failure.note = Some("S(a)(n) = ((nabla - shift)^n a)(0)".into());
            return Ok(CheckReport::fail(NAME, failure));
        }
    }
    Ok(CheckReport::pass(NAME))
}

/// Checks the contracted antipode axiom
/// `sum_i S(N^i(a)) * o_i = target(a(0))` on `len` terms.
///
/// If that reading fails, the report also evaluates the alternative
/// contraction `sum_i N^i(a) * S(o_i)` and records its outcome in the note
/// instead of silently picking a side.
pub fn check_antipode_axiom(r: &DRSeq, len: usize) -> Result<CheckReport> {
    const NAME: &str = "antipode-axiom";
    let legs = comult(r, len)?;
    let tag = r.tag();
    let alpha0 = r.materialize(1);
    let expected = Seq::target(alpha0.term(0), len);
    let mut lhs = Seq::zeros(tag, len);
    for (left, right) in legs.pairs() {
        lhs = lhs.hadd(&antipode(left).hmul(right)?)?;
    }
    if let (Some(n), _) = lhs.eq_prefix(&expected) {
        let mut alt = Seq::zeros(tag, len);
        for (left, right) in legs.pairs() {
            alt = alt.hadd(&left.hmul(&antipode(right))?)?;
        }
        let (alt_mismatch, _) = alt.eq_prefix(&expected);
        let mut failure = mismatch(format!("n={n}"), expected.term(n), lhs.term(n));
        failure.note = Some(match alt_mismatch {
            None => "alternative contraction sum_i N^i(a) * S(o_i) passes".into(),
            Some(m) => format!(
                "alternative contraction sum_i N^i(a) * S(o_i) also fails at n={m}"
            ),
        });
        return Ok(CheckReport::fail(NAME, failure));
    }
    Ok(CheckReport::pass(NAME))
}
