//! Generate Fibonacci from its annihilator, then recover the annihilator
//! from the raw terms alone.

use drseq::{min_annihilator, DRSeq, FieldElem, FieldTag, OrePoly};

fn main() -> drseq::Result<()> {
    // Y^2 - Y - 1 with seeds 0, 1 over the rationals (zero derivation).
    let q = |n: i64| FieldElem::from_int(n, FieldTag::Q);
    let p = OrePoly::new(FieldTag::Q, vec![q(-1), q(-1), q(1)])?;
    let fib = DRSeq::new(p.clone(), vec![q(0), q(1)])?;
    println!("{}", fib.materialize(12));

    let found = min_annihilator(&fib.materialize(12), 2, 8)?;
    assert_eq!(found, Some(p));
    println!("recovered: {}", found.unwrap());
    Ok(())
}
