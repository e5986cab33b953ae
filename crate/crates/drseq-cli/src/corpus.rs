//! Regression corpus for the axiom suite: a dozen recursive sequences of
//! orders 1 through 3 over both ground fields, plus the batch runner that
//! aggregates one report per axiom across the whole corpus.

use crate::parse::{parse_inits, parse_ore_expr};
use drseq::{
    antipode, check_antipode, check_antipode_axiom, check_counit_axiom, check_takeuchi,
    counit, min_annihilator, CheckReport, CheckStatus, DRSeq, Failure, FieldElem, FieldTag,
    Poly, RatFunc, Rational, Seq,
};
use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct CorpusItem {
    pub label: String,
    pub value: DRSeq,
}

fn item(label: &str, tag: FieldTag, op: &str, inits: &str) -> CorpusItem {
    let p = parse_ore_expr(op, tag).expect("corpus operator parses");
    let inits = parse_inits(inits, tag).expect("corpus inits parse");
    CorpusItem {
        label: label.into(),
        value: DRSeq::new(p, inits).expect("corpus entry is well formed"),
    }
}

/// Twelve sequences: six per field, two of each order 1..3.
pub fn corpus() -> Vec<CorpusItem> {
    use FieldTag::{Q, Qz};
    vec![
        item("q geometric", Q, "Y - 5", "1"),
        item("q scaled geometric", Q, "Y - 2/3", "3"),
        item("q fibonacci", Q, "Y^2 - Y - 1", "0, 1"),
        item("q oscillator", Q, "Y^2 + 4", "1, 0"),
        item("q oscillator shifted", Q, "Y^2 + 4", "0, 1"),
        item("q order three", Q, "Y^3 - 2*Y - 1", "1, 0, 2"),
        item("qz reciprocal", Qz, "Y + 1/z", "1/z"),
        item("qz cube", Qz, "Y - 3/z", "1"),
        item("qz pole pair", Qz, "Y^2 - Y*(1/(z-1)) + 1/(z-1)^2", "1, 0"),
        item("qz pole general", Qz, "Y^2 - Y*(1/(z-1)) + 1/(z-1)^2", "2, 3"),
        item("qz split orders", Qz, "Y^2 - Y*(1/z) - z", "1, 0"),
        item("qz order three", Qz, "Y^3 - Y*z - 1", "1, 0, 1"),
    ]
}

const PREFIX: usize = 10;
const TAKEUCHI_TOTAL: usize = 8;
const SWAP_SAMPLES: usize = 20;
const SWAP_SEED: u64 = 9;

fn located(label: &str, mut failure: Failure) -> Failure {
    failure.location = format!("{label}: {}", failure.location);
    failure
}

fn fail_report(check: &str, failure: Failure) -> CheckReport {
    CheckReport {
        check: check.into(),
        status: CheckStatus::Fail,
        first_failure: Some(failure),
    }
}

fn pass_report(check: &str) -> CheckReport {
    CheckReport {
        check: check.into(),
        status: CheckStatus::Pass,
        first_failure: None,
    }
}

fn plain_failure(location: String, expected: String, actual: String) -> Failure {
    Failure {
        location,
        expected,
        actual,
        note: None,
    }
}

/// Runs every axiom check over the corpus and returns one aggregated report
/// per check, in a fixed order.
pub fn run_hopf_suite() -> Vec<CheckReport> {
    let items = corpus();
    let mut reports = Vec::new();

    // counit axiom: reconstruction from the comultiplication legs
    let mut outcome = None;
    for it in &items {
        let report = check_counit_axiom(&it.value, PREFIX).expect("well-formed corpus");
        if let Some(f) = report.first_failure {
            outcome = Some(located(&it.label, f));
            break;
        }
    }
    reports.push(match outcome {
        Some(f) => fail_report("counit-axiom", f),
        None => pass_report("counit-axiom"),
    });

    // translation property at every split h + k <= 8
    let mut outcome = None;
    'takeuchi: for it in &items {
        for h in 0..=TAKEUCHI_TOTAL {
            for k in 0..=(TAKEUCHI_TOTAL - h) {
                let report =
                    check_takeuchi(&it.value, h, k).expect("well-formed corpus");
                if let Some(f) = report.first_failure {
                    outcome = Some(located(&it.label, f));
                    break 'takeuchi;
                }
            }
        }
    }
    reports.push(match outcome {
        Some(f) => fail_report("takeuchi", f),
        None => pass_report("takeuchi"),
    });

    // antipode: involution, embedding swap at a(0), iterated-kernel identity
    let mut outcome = None;
    for it in &items {
        let report =
            check_antipode(&it.value.materialize(PREFIX)).expect("nonempty prefix");
        if let Some(f) = report.first_failure {
            outcome = Some(located(&it.label, f));
            break;
        }
    }
    reports.push(match outcome {
        Some(f) => fail_report("antipode", f),
        None => pass_report("antipode"),
    });

    // contracted antipode axiom
    let mut outcome = None;
    for it in &items {
        let report = check_antipode_axiom(&it.value, PREFIX).expect("well-formed corpus");
        if let Some(f) = report.first_failure {
            outcome = Some(located(&it.label, f));
            break;
        }
    }
    reports.push(match outcome {
        Some(f) => fail_report("antipode-axiom", f),
        None => pass_report("antipode-axiom"),
    });

    // the antipode of an order-d sequence is again recursive of order <= d
    let mut outcome = None;
    for it in &items {
        let d = it.value.degree();
        let len = (4 * d).max(PREFIX + d);
        let s = antipode(&it.value.materialize(len));
        let found = min_annihilator(&s, d, 2 * d + 4).expect("prefix long enough");
        if found.is_none() {
            outcome = Some(plain_failure(
                format!("{}: antipode prefix of length {len}", it.label),
                format!("an annihilator of degree <= {d}"),
                "none".into(),
            ));
            break;
        }
    }
    reports.push(match outcome {
        Some(f) => fail_report("antipode-annihilator", f),
        None => pass_report("antipode-annihilator"),
    });

    // S(source(x)) = target(x) and S(target(x)) = source(x) on random elements
    let mut rng = ChaCha8Rng::seed_from_u64(SWAP_SEED);
    let mut outcome = None;
    for i in 0..SWAP_SAMPLES {
        let tag = if i % 2 == 0 { FieldTag::Q } else { FieldTag::Qz };
        let x = random_elem(&mut rng, tag);
        let s_of_source = antipode(&Seq::source(&x, PREFIX));
        let target = Seq::target(&x, PREFIX);
        if let (Some(n), _) = s_of_source.eq_prefix(&target) {
            outcome = Some(plain_failure(
                format!("sample {i} ({}), S(source({x})) at n={n}", tag.name()),
                target.term(n).to_string(),
                s_of_source.term(n).to_string(),
            ));
            break;
        }
        let s_of_target = antipode(&Seq::target(&x, PREFIX));
        let source = Seq::source(&x, PREFIX);
        if let (Some(n), _) = s_of_target.eq_prefix(&source) {
            outcome = Some(plain_failure(
                format!("sample {i} ({}), S(target({x})) at n={n}", tag.name()),
                source.term(n).to_string(),
                s_of_target.term(n).to_string(),
            ));
            break;
        }
    }
    reports.push(match outcome {
        Some(f) => fail_report("antipode-embedding-swap", f),
        None => pass_report("antipode-embedding-swap"),
    });

    // counit respects the Hurwitz product
    let mut outcome = None;
    'mult: for a in &items {
        for b in &items {
            if a.value.tag() != b.value.tag() {
                continue;
            }
            let am = a.value.materialize(4);
            let bm = b.value.materialize(4);
            let lhs = counit(&am.hmul(&bm).expect("same tag")).expect("nonempty");
            let rhs = counit(&am)
                .expect("nonempty")
                .try_mul(&counit(&bm).expect("nonempty"))
                .expect("same tag");
            if lhs != rhs {
                outcome = Some(plain_failure(
                    format!("{} * {}", a.label, b.label),
                    rhs.to_string(),
                    lhs.to_string(),
                ));
                break 'mult;
            }
        }
    }
    reports.push(match outcome {
        Some(f) => fail_report("counit-multiplicative", f),
        None => pass_report("counit-multiplicative"),
    });

    reports
}

/// A random nonzero-denominator field element with small coefficients.
fn random_elem(rng: &mut ChaCha8Rng, tag: FieldTag) -> FieldElem {
    match tag {
        FieldTag::Q => {
            let num = rng.gen_range(-9i64..=9);
            let den = rng.gen_range(1i64..=9);
            FieldElem::from_rational(
                Rational::new(BigInt::from(num), BigInt::from(den)),
                tag,
            )
        }
        FieldTag::Qz => loop {
            let coeffs = |rng: &mut ChaCha8Rng, deg: usize| {
                Poly::from_coeffs(
                    (0..=deg)
                        .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-3i64..=3))))
                        .collect(),
                )
            };
            let num = coeffs(rng, 2);
            let den = coeffs(rng, 2);
            if den.is_zero() {
                continue;
            }
            break FieldElem::Qz(RatFunc::new(num, den).expect("nonzero denominator"));
        },
    }
}
