//! Command-line front end for the `drseq` engine.
//!
//! Split into three parts:
//!
//! * [`parse`] — tokenizer and recursive-descent parser for field elements,
//!   skew polynomials, sequence literals, and init lists;
//! * [`corpus`] — the fixed regression corpus and the `hopf-axioms` suite
//!   runner;
//! * [`run`] — clap command definitions, dispatch, and rendering.
//!
//! The binary in `main.rs` is a thin shell over [`run::run`] so that
//! integration tests can drive complete invocations in-process.

pub mod corpus;
pub mod parse;
pub mod run;
