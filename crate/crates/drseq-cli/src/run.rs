//! Command-line surface: argument shapes, dispatch into the engine, and
//! text/JSON rendering.
//!
//! Output is deterministic: identical invocations produce byte-identical
//! bytes. Human-readable mode prints aligned tables of canonical
//! field-element strings; `--json` switches to stable-keyed JSON objects.
//! Everything is exact text; no floating point exists anywhere in the tool.

use crate::corpus::run_hopf_suite;
use crate::parse::{parse_field_expr, parse_inits, parse_ore_expr, parse_seq, SyntaxError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use drseq::{
    antipode, comult, find_linear_recurrence, from_initial, fundamental_matrix,
    min_annihilator, CheckReport, CheckStatus, DRSeq, FieldTag, OrePoly, Seq,
};
use serde_json::{json, Value};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Field {
    Q,
    Qz,
}

impl Field {
    fn tag(self) -> FieldTag {
        match self {
            Field::Q => FieldTag::Q,
            Field::Qz => FieldTag::Qz,
        }
    }
}

/// Exact engine for differentially recursive sequences: formal solutions of
/// linear ODEs as Hurwitz series, minimal annihilating skew polynomials, and
/// the Hopf-algebroid structure maps.
#[derive(Parser, Debug)]
#[command(name = "drseq", max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Where a subcommand gets its sequence from: exactly one of these.
#[derive(Args, Debug)]
pub struct SeqSource {
    /// Literal prefix in brackets, e.g. "[1, 1/z, 0]"
    #[arg(long, value_name = "TERMS")]
    pub seq: Option<String>,
    /// Embed a field element as (x, 0, 0, ...)
    #[arg(long, value_name = "EXPR")]
    pub source: Option<String>,
    /// Embed a field element as its derivative tower (x, x', x'', ...)
    #[arg(long, value_name = "EXPR")]
    pub target: Option<String>,
    /// Generate from a monic operator (requires --inits)
    #[arg(short = 'P', long = "op", value_name = "OPERATOR")]
    pub op: Option<String>,
    /// Initial conditions for --op, comma separated
    #[arg(long, value_name = "CSV")]
    pub inits: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand a field element into its source or target sequence
    Expand {
        #[arg(long, value_enum)]
        field: Field,
        /// Embed as (x, 0, 0, ...)
        #[arg(long, value_name = "EXPR")]
        source: Option<String>,
        /// Embed as the derivative tower (x, x', x'', ...)
        #[arg(long, value_name = "EXPR")]
        target: Option<String>,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long)]
        json: bool,
    },
    /// Materialize the solution of a monic operator with given initial conditions
    Solve {
        #[arg(long, value_enum)]
        field: Field,
        #[arg(short = 'P', long = "op", value_name = "OPERATOR")]
        op: String,
        #[arg(long, value_name = "CSV")]
        inits: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the fundamental matrix of solutions of a monic operator
    Fund {
        #[arg(long, value_enum)]
        field: Field,
        #[arg(short = 'P', long = "op", value_name = "OPERATOR")]
        op: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long)]
        json: bool,
    },
    /// Search for the minimal annihilating operator of a sequence
    Annihilate {
        #[arg(long, value_enum)]
        field: Field,
        #[command(flatten)]
        input: SeqSource,
        /// Largest operator degree to try
        #[arg(long, value_name = "D")]
        bound: usize,
        /// Verification window (default 2*D + 4)
        #[arg(long, value_name = "W")]
        window: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Annihilator and initial conditions of the Hurwitz product of two sequences
    Product {
        #[arg(long, value_enum)]
        field: Field,
        #[arg(long, value_name = "OPERATOR")]
        op1: String,
        #[arg(long, value_name = "CSV")]
        inits1: String,
        #[arg(long, value_name = "OPERATOR")]
        op2: String,
        #[arg(long, value_name = "CSV")]
        inits2: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long)]
        json: bool,
    },
    /// Annihilator and initial conditions of the entrywise sum of two sequences
    Sum {
        #[arg(long, value_enum)]
        field: Field,
        #[arg(long, value_name = "OPERATOR")]
        op1: String,
        #[arg(long, value_name = "CSV")]
        inits1: String,
        #[arg(long, value_name = "OPERATOR")]
        op2: String,
        #[arg(long, value_name = "CSV")]
        inits2: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long)]
        json: bool,
    },
    /// Apply the antipode to a sequence prefix
    Antipode {
        #[arg(long, value_enum)]
        field: Field,
        #[command(flatten)]
        input: SeqSource,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the comultiplication legs of a recursive sequence
    Comult {
        #[arg(long, value_enum)]
        field: Field,
        #[arg(short = 'P', long = "op", value_name = "OPERATOR")]
        op: String,
        #[arg(long, value_name = "CSV")]
        inits: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long)]
        json: bool,
    },
    /// Search for a constant-coefficient linear recurrence (no derivatives)
    Recur {
        #[arg(long, value_enum)]
        field: Field,
        #[command(flatten)]
        input: SeqSource,
        /// Largest recurrence order to try
        #[arg(long, value_name = "D")]
        bound: usize,
        /// Number of indices the recurrence must hold on (default 2*D + 4)
        #[arg(long, value_name = "W")]
        window: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run a named verification suite (currently: hopf-axioms)
    Check {
        /// Suite name
        suite: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
pub enum CliError {
    Syntax(SyntaxError),
    Core(drseq::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Syntax(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<SyntaxError> for CliError {
    fn from(e: SyntaxError) -> Self {
        CliError::Syntax(e)
    }
}

impl From<drseq::Error> for CliError {
    fn from(e: drseq::Error) -> Self {
        CliError::Core(e)
    }
}

/// Rendered output plus whether the invocation counts as a success.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn done(text: String) -> Result<Outcome, CliError> {
    Ok(Outcome { text, ok: true })
}

impl SeqSource {
    /// Builds the sequence, materializing `len` terms for derived inputs.
    /// Returns the prefix and whether it was a bare literal (no generator
    /// known), which decides the certification caveat.
    fn resolve(&self, tag: FieldTag, len: usize) -> Result<(Seq, bool), CliError> {
        let given = [
            self.seq.is_some(),
            self.source.is_some(),
            self.target.is_some(),
            self.op.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if given != 1 {
            return Err(CliError::Usage(
                "give exactly one of --seq, --source, --target, --op".into(),
            ));
        }
        if self.inits.is_some() && self.op.is_none() {
            return Err(CliError::Usage("--inits only applies with --op".into()));
        }
        if let Some(text) = &self.seq {
            return Ok((parse_seq(text, tag)?, true));
        }
        if let Some(text) = &self.source {
            let x = parse_field_expr(text, tag)?;
            return Ok((Seq::source(&x, len), false));
        }
        if let Some(text) = &self.target {
            let x = parse_field_expr(text, tag)?;
            return Ok((Seq::target(&x, len), false));
        }
        let op_text = self.op.as_ref().expect("counted above");
        let inits_text = self
            .inits
            .as_ref()
            .ok_or_else(|| CliError::Usage("--op requires --inits".into()))?;
        let p = parse_ore_expr(op_text, tag)?;
        let inits = parse_inits(inits_text, tag)?;
        let r = DRSeq::new(p, inits)?;
        Ok((r.materialize(len), false))
    }
}

fn render_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                out.push_str("  ");
            }
            if j + 1 == row.len() {
                out.push_str(cell);
            } else {
                out.push_str(&format!("{cell:<width$}", width = widths[j]));
            }
        }
        out.push('\n');
    }
    out
}

fn seq_rows(header: &str, s: &Seq) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["n".to_string(), header.to_string()]];
    for n in 0..s.len() {
        rows.push(vec![n.to_string(), s.term(n).to_string()]);
    }
    rows
}

fn term_strings(s: &Seq) -> Vec<Value> {
    s.terms().iter().map(|t| json!(t.to_string())).collect()
}

fn json_text(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn seq_output(s: &Seq, tag: FieldTag, json_mode: bool) -> String {
    if json_mode {
        json_text(&json!({
            "field": tag.name(),
            "terms": term_strings(s),
        }))
    } else {
        render_table(&seq_rows("a(n)", s))
    }
}

fn drseq_json(annihilator: &OrePoly, inits: &[String], tag: FieldTag) -> Value {
    json!({
        "annihilator": annihilator.to_string(),
        "inits": inits,
        "field": tag.name(),
    })
}

fn drseq_text(annihilator: &OrePoly, inits: &[String]) -> String {
    format!(
        "annihilator: {}\norder: {}\ninits: {}\n",
        annihilator,
        annihilator.degree().map_or(0, |d| d),
        inits.join(", ")
    )
}

fn caveat(bound: usize) -> String {
    format!("certified given order ≤ {bound}")
}

fn failure_json(report: &CheckReport) -> Value {
    match &report.first_failure {
        None => Value::Null,
        Some(f) => json!({
            "location": f.location,
            "expected": f.expected,
            "actual": f.actual,
            "note": f.note,
        }),
    }
}

fn parse_drseq(op: &str, inits: &str, tag: FieldTag) -> Result<DRSeq, CliError> {
    let p = parse_ore_expr(op, tag)?;
    let inits = parse_inits(inits, tag)?;
    Ok(DRSeq::new(p, inits)?)
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Expand {
            field,
            source,
            target,
            terms,
            json,
        } => {
            let tag = field.tag();
            let s = match (source, target) {
                (Some(x), None) => Seq::source(&parse_field_expr(&x, tag)?, terms),
                (None, Some(x)) => Seq::target(&parse_field_expr(&x, tag)?, terms),
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --source or --target".into(),
                    ))
                }
            };
            done(seq_output(&s, tag, json))
        }

        Command::Solve {
            field,
            op,
            inits,
            terms,
            json,
        } => {
            let tag = field.tag();
            let p = parse_ore_expr(&op, tag)?;
            let inits = parse_inits(&inits, tag)?;
            let s = from_initial(&p, &inits, terms)?;
            done(seq_output(&s, tag, json))
        }

        Command::Fund {
            field,
            op,
            terms,
            json,
        } => {
            let tag = field.tag();
            let p = parse_ore_expr(&op, tag)?;
            let fund = fundamental_matrix(&p, terms)?;
            if json {
                let solutions: Vec<Value> = fund
                    .solutions()
                    .iter()
                    .map(|s| Value::Array(term_strings(s)))
                    .collect();
                done(json_text(&json!({
                    "field": tag.name(),
                    "solutions": solutions,
                })))
            } else {
                let d = fund.degree();
                let mut header = vec!["n".to_string()];
                for i in 0..d {
                    header.push(format!("o_{i}"));
                }
                let mut rows = vec![header];
                for n in 0..fund.len() {
                    let mut row = vec![n.to_string()];
                    for i in 0..d {
                        row.push(fund.solution(i).term(n).to_string());
                    }
                    rows.push(row);
                }
                done(render_table(&rows))
            }
        }

        Command::Annihilate {
            field,
            input,
            bound,
            window,
            json,
        } => {
            let tag = field.tag();
            let window = window.unwrap_or(2 * bound + 4);
            let (seq, bare) = input.resolve(tag, 2 * bound + window)?;
            let found = min_annihilator(&seq, bound, window)?;
            let note = bare.then(|| caveat(bound));
            match found {
                Some(p) => {
                    let d = p.degree().expect("annihilators are nonzero");
                    let inits: Vec<String> =
                        (0..d).map(|n| seq.term(n).to_string()).collect();
                    if json {
                        let mut v = drseq_json(&p, &inits, tag);
                        if let Some(c) = &note {
                            v["caveat"] = json!(c);
                        }
                        done(json_text(&v))
                    } else {
                        let mut text = drseq_text(&p, &inits);
                        if let Some(c) = &note {
                            text.push_str(&format!("note: {c}\n"));
                        }
                        done(text)
                    }
                }
                None => {
                    if json {
                        let mut v = json!({
                            "annihilator": Value::Null,
                            "inits": Value::Null,
                            "field": tag.name(),
                        });
                        if let Some(c) = &note {
                            v["caveat"] = json!(c);
                        }
                        done(json_text(&v))
                    } else {
                        let mut text = "none\n".to_string();
                        if let Some(c) = &note {
                            text.push_str(&format!("note: {c}\n"));
                        }
                        done(text)
                    }
                }
            }
        }

        Command::Product {
            field,
            op1,
            inits1,
            op2,
            inits2,
            terms,
            json,
        } => closure_output(field, &op1, &inits1, &op2, &inits2, terms, json, true),

        Command::Sum {
            field,
            op1,
            inits1,
            op2,
            inits2,
            terms,
            json,
        } => closure_output(field, &op1, &inits1, &op2, &inits2, terms, json, false),

        Command::Antipode {
            field,
            input,
            terms,
            json,
        } => {
            let tag = field.tag();
            let (seq, _) = input.resolve(tag, terms)?;
            let s = antipode(&seq.prefix(terms.min(seq.len())));
            done(seq_output(&s, tag, json))
        }

        Command::Comult {
            field,
            op,
            inits,
            terms,
            json,
        } => {
            let tag = field.tag();
            let r = parse_drseq(&op, &inits, tag)?;
            let legs = comult(&r, terms)?;
            if json {
                let pairs: Vec<Value> = legs
                    .pairs()
                    .iter()
                    .map(|(l, r)| {
                        json!({
                            "left": term_strings(l),
                            "right": term_strings(r),
                        })
                    })
                    .collect();
                done(json_text(&json!({
                    "field": tag.name(),
                    "pairs": pairs,
                })))
            } else {
                let mut rows = vec![vec![
                    "i".to_string(),
                    "N^i(a)".to_string(),
                    "o_i".to_string(),
                ]];
                for (i, (l, r)) in legs.pairs().iter().enumerate() {
                    rows.push(vec![i.to_string(), l.to_string(), r.to_string()]);
                }
                done(render_table(&rows))
            }
        }

        Command::Recur {
            field,
            input,
            bound,
            window,
            json,
        } => {
            let tag = field.tag();
            let window = window.unwrap_or(2 * bound + 4);
            let (seq, _) = input.resolve(tag, window + bound)?;
            let found = find_linear_recurrence(&seq, bound, window)?;
            match found {
                Some(coeffs) => {
                    let strings: Vec<String> =
                        coeffs.iter().map(|c| c.to_string()).collect();
                    if json {
                        done(json_text(&json!({
                            "recurrence": strings,
                            "field": tag.name(),
                        })))
                    } else {
                        done(format!("recurrence: {}\n", strings.join(", ")))
                    }
                }
                None => {
                    if json {
                        done(json_text(&json!({
                            "recurrence": Value::Null,
                            "field": tag.name(),
                        })))
                    } else {
                        done("none\n".to_string())
                    }
                }
            }
        }

        Command::Check { suite, json } => {
            if suite != "hopf-axioms" {
                return Err(CliError::Usage(format!(
                    "unknown suite '{suite}' (available: hopf-axioms)"
                )));
            }
            let reports = run_hopf_suite();
            let all_pass = reports.iter().all(|r| r.status == CheckStatus::Pass);
            if json {
                let items: Vec<Value> = reports
                    .iter()
                    .map(|r| {
                        json!({
                            "check": r.check,
                            "status": if r.status == CheckStatus::Pass { "pass" } else { "fail" },
                            "first_failure": failure_json(r),
                        })
                    })
                    .collect();
                Ok(Outcome {
                    text: json_text(&Value::Array(items)),
                    ok: all_pass,
                })
            } else {
                let mut rows = Vec::new();
                for r in &reports {
                    rows.push(vec![
                        r.check.clone(),
                        if r.status == CheckStatus::Pass {
                            "pass".to_string()
                        } else {
                            "FAIL".to_string()
                        },
                    ]);
                }
                let mut text = render_table(&rows);
                for r in &reports {
                    if let Some(f) = &r.first_failure {
                        text.push_str(&format!(
                            "\n{} failed at {}\n  expected: {}\n  actual:   {}\n",
                            r.check, f.location, f.expected, f.actual
                        ));
                        if let Some(note) = &f.note {
                            text.push_str(&format!("  note: {note}\n"));
                        }
                    }
                }
                let passed = reports
                    .iter()
                    .filter(|r| r.status == CheckStatus::Pass)
                    .count();
                text.push_str(&format!("\n{} checks, {} passed\n", reports.len(), passed));
                Ok(Outcome {
                    text,
                    ok: all_pass,
                })
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn closure_output(
    field: Field,
    op1: &str,
    inits1: &str,
    op2: &str,
    inits2: &str,
    terms: usize,
    json: bool,
    is_product: bool,
) -> Result<Outcome, CliError> {
    let tag = field.tag();
    let r1 = parse_drseq(op1, inits1, tag)?;
    let r2 = parse_drseq(op2, inits2, tag)?;
    let combined = if is_product {
        r1.product(&r2, terms)?
    } else {
        r1.sum(&r2, terms)?
    };
    let inits: Vec<String> = combined.inits().iter().map(|x| x.to_string()).collect();
    if json {
        done(json_text(&drseq_json(combined.annihilator(), &inits, tag)))
    } else {
        done(drseq_text(combined.annihilator(), &inits))
    }
}
