//! Command-line front end.
//!
//! Every input argument is inline text, `-` for standard input, or `@path` for a file.
//! Exit codes: 0 for success or a positive answer, 1 for a well-formed negative answer,
//! 2 for malformed input or usage errors.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Read;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::braid::{
    finishing_set, is_minimal, left_weighted_factorization, monoid_equal, starting_set, underlying_permutation,
    BraidWord,
};
use crate::cubes::{verify_homotopy, NamedPath, PathId, DEFAULT_GRID, DEFAULT_SIDE, DEFAULT_TOL};
use crate::rewrite::{
    check_confluence, complete_reduce, reduce_to_canonical, verify_trace, ReductionTrace, DEFAULT_CONFLUENCE_BUDGET,
};
use crate::term::{
    coherent, pi_functor, typecheck, verify_certificate, CellExpr, Certificate, Coherence,
};

#[derive(Debug, Parser)]
#[command(name = "braidcoh", version, about = "Positive braid rewriting and coherence certificates")]
struct Cli {
    /// Emit a JSON envelope `{verb, input, result, trace?}` instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Underlying permutation of a braid word.
    Perm { word: String },
    /// Whether a positive word is a minimal braid.
    Minimal { word: String },
    /// Starting set of a positive word.
    Startset { word: String },
    /// Finishing set of a positive word.
    Finishset { word: String },
    /// Left-weighted factorization `τ ω`.
    Factor { word: String },
    /// Completely reduce a positive word to a minimal braid.
    Reduce {
        /// Write the reduction trace to this file (`-` for standard output).
        #[arg(long, value_name = "PATH")]
        trace: Option<String>,
        /// Finish at the canonical reduced word of the permutation.
        #[arg(long)]
        canonical: bool,
        word: String,
    },
    /// Equality in the positive braid monoid.
    Eq { left: String, right: String },
    /// Decide whether two parallel 1-cells are isomorphic.
    Coherent {
        /// Write the certificate to this file (`-` for standard output).
        #[arg(long, value_name = "PATH")]
        certificate: Option<String>,
        f: String,
        g: String,
    },
    /// Replay a reduction trace or a coherence certificate.
    Verify { input: String },
    /// Explore all reduction strategies from a word.
    Confluence {
        #[arg(long, default_value_t = DEFAULT_CONFLUENCE_BUDGET)]
        budget: usize,
        word: String,
    },
    /// Sweep named configuration-space paths on a grid.
    Cubes {
        /// Path id, or `all`.
        #[arg(long, default_value = "all")]
        path: String,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        #[arg(long, default_value_t = DEFAULT_SIDE)]
        side: f64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Serialize)]
struct Envelope<'a> {
    verb: &'a str,
    input: Vec<String>,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Value>,
}

struct Answer {
    text: String,
    result: Value,
    trace: Option<Value>,
    code: i32,
}

impl Answer {
    fn yes_no(ok: bool, text: impl Into<String>, result: Value) -> Self {
        Answer {
            text: text.into(),
            result,
            trace: None,
            code: if ok { 0 } else { 1 },
        }
    }

    fn ok(text: impl Into<String>, result: Value) -> Self {
        Self::yes_no(true, text, result)
    }
}

struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_text: Option<String>,
    seen: Vec<String>,
}

impl Inputs<'_> {
    fn read(&mut self, arg: &str) -> Result<String, Failure> {
        let text = if arg == "-" {
            if self.stdin_text.is_none() {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Failure(format!("reading standard input: {e}")))?;
                self.stdin_text = Some(s);
            }
            self.stdin_text.clone().unwrap_or_default()
        } else if let Some(path) = arg.strip_prefix('@') {
            std::fs::read_to_string(path).map_err(|e| Failure(format!("{path}: {e}")))?
        } else {
            arg.to_string()
        };
        self.seen.push(text.clone());
        Ok(text)
    }

    fn word(&mut self, arg: &str) -> Result<BraidWord, Failure> {
        let text = self.read(arg)?;
        BraidWord::parse(text.trim()).map_err(|e| Failure(format!("parse error at {e}")))
    }

    fn cell(&mut self, arg: &str) -> Result<CellExpr, Failure> {
        let text = self.read(arg)?;
        CellExpr::parse(&text).map_err(|e| Failure(format!("parse error at {e}")))
    }
}

fn set_text(s: &std::collections::BTreeSet<usize>) -> String {
    let items: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn trace_json(t: &ReductionTrace) -> Value {
    json!({
        "source": t.source.to_string(),
        "steps": t.steps.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "target": t.target.to_string(),
    })
}

/// Write `text` to `path`, or return it for standard output when `path` is `-`.
fn emit(path: &str, text: &str) -> Result<Option<String>, Failure> {
    if path == "-" {
        return Ok(Some(text.to_string()));
    }
    std::fs::write(path, text).map_err(|e| Failure(format!("{path}: {e}")))?;
    Ok(None)
}

fn line(s: impl Display) -> String {
    format!("{s}\n")
}

fn execute(verb: &Verb, json_mode: bool, inputs: &mut Inputs) -> Result<Answer, Failure> {
    Ok(match verb {
        Verb::Perm { word } => {
            let p = underlying_permutation(&inputs.word(word)?);
            Answer::ok(line(&p), json!(p.images()))
        }
        Verb::Minimal { word } => {
            let m = is_minimal(&inputs.word(word)?)?;
            Answer::yes_no(m, line(m), json!(m))
        }
        Verb::Startset { word } => {
            let s = starting_set(&inputs.word(word)?)?;
            Answer::ok(line(set_text(&s)), json!(s))
        }
        Verb::Finishset { word } => {
            let s = finishing_set(&inputs.word(word)?)?;
            Answer::ok(line(set_text(&s)), json!(s))
        }
        Verb::Factor { word } => {
            let f = left_weighted_factorization(&inputs.word(word)?)?;
            Answer::ok(
                format!("tau: {}\nomega: {}\n", f.tau, f.omega),
                json!({"tau": f.tau.to_string(), "omega": f.omega.to_string()}),
            )
        }
        Verb::Reduce { trace, canonical, word } => {
            let w = inputs.word(word)?;
            let t = if *canonical { reduce_to_canonical(&w)? } else { complete_reduce(&w)? };
            let result = json!({"target": t.target.to_string(), "cancellations": t.cancel_count()});
            let mut text = line(&t.target);
            let mut trace_value = None;
            if let Some(path) = trace {
                if json_mode {
                    trace_value = Some(trace_json(&t));
                }
                if let Some(out) = emit(path, &t.to_string())? {
                    text = out;
                }
            }
            Answer {
                text,
                result,
                trace: trace_value,
                code: 0,
            }
        }
        Verb::Eq { left, right } => {
            let (a, b) = (inputs.word(left)?, inputs.word(right)?);
            let eq = monoid_equal(&a, &b)?;
            Answer::yes_no(eq, if eq { "EQUAL\n" } else { "NOT EQUAL\n" }, json!(eq))
        }
        Verb::Coherent { certificate, f, g } => {
            let (f, g) = (inputs.cell(f)?, inputs.cell(g)?);
            let (sf, _) = typecheck(&f)?;
            let (sg, _) = typecheck(&g)?;
            // cells on different strand counts are rejected below as non-parallel
            if sf.width() == sg.width() {
                let (pf, pg) = (pi_functor(&f), pi_functor(&g));
                if pf != pg {
                    return Ok(Answer::yes_no(
                        false,
                        "NOT COHERENT: permutations differ\n",
                        json!({"coherent": false, "pi_f": pf.images(), "pi_g": pg.images()}),
                    ));
                }
            }
            match coherent(&f, &g)? {
                Coherence::NotCoherent { pi_f, pi_g } => Answer::yes_no(
                    false,
                    "NOT COHERENT: permutations differ\n",
                    json!({"coherent": false, "pi_f": pi_f.images(), "pi_g": pi_g.images()}),
                ),
                Coherence::Coherent(c) => {
                    let mut text = format!("COHERENT\ncommon: {}\n", c.common_target);
                    let mut trace_value = None;
                    if let Some(path) = certificate {
                        if json_mode {
                            trace_value = Some(json!(c.to_string()));
                        }
                        if let Some(out) = emit(path, &c.to_string())? {
                            text = out;
                        }
                    }
                    Answer {
                        text,
                        result: json!({"coherent": true, "common": c.common_target.to_string()}),
                        trace: trace_value,
                        code: 0,
                    }
                }
            }
        }
        Verb::Verify { input } => {
            let text = inputs.read(input)?;
            let is_cert = text.lines().find(|l| !l.trim().is_empty()).map(str::trim) == Some("certificate");
            let parse_err = |e| Failure(format!("parse error at {e}"));
            let (ok, shown, result) = if is_cert {
                let v = verify_certificate(&Certificate::parse(&text).map_err(parse_err)?);
                (v.is_valid(), v.to_string(), serde_json::to_value(&v)?)
            } else {
                let v = verify_trace(&ReductionTrace::parse(&text).map_err(parse_err)?);
                (v.is_valid(), v.to_string(), serde_json::to_value(&v)?)
            };
            Answer::yes_no(ok, line(shown), result)
        }
        Verb::Confluence { budget, word } => {
            let r = check_confluence(&inputs.word(word)?, *budget)?;
            Answer::yes_no(r.is_confluent() && !r.partial, line(&r), serde_json::to_value(&r)?)
        }
        Verb::Cubes { path, grid, side, tol } => {
            if *grid < 2 {
                return Err(Failure("grid must be at least 2".into()));
            }
            if !(*side > 0.0 && *side < 1.0) {
                return Err(Failure("side must lie strictly between 0 and 1".into()));
            }
            let ids: Vec<PathId> = if path == "all" { PathId::ALL.to_vec() } else { vec![path.parse()?] };
            let reports: Vec<_> = ids
                .iter()
                .map(|&id| verify_homotopy(&NamedPath::with_side(id, *side), *grid, *tol))
                .collect();
            let ok = reports.iter().all(|r| r.passed());
            let text: String = reports.iter().map(|r| r.to_string()).collect();
            Answer::yes_no(ok, text, serde_json::to_value(&reports)?)
        }
    })
}

fn verb_name(v: &Verb) -> &'static str {
    match v {
        Verb::Perm { .. } => "perm",
        Verb::Minimal { .. } => "minimal",
        Verb::Startset { .. } => "startset",
        Verb::Finishset { .. } => "finishset",
        Verb::Factor { .. } => "factor",
        Verb::Reduce { .. } => "reduce",
        Verb::Eq { .. } => "eq",
        Verb::Coherent { .. } => "coherent",
        Verb::Verify { .. } => "verify",
        Verb::Confluence { .. } => "confluence",
        Verb::Cubes { .. } => "cubes",
    }
}

/// Run one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Output {
                    stdout: rendered,
                    code,
                    ..Output::default()
                }
            } else {
                Output {
                    stderr: rendered,
                    code,
                    ..Output::default()
                }
            };
        }
    };
    let mut inputs = Inputs {
        stdin,
        stdin_text: None,
        seen: Vec::new(),
    };
    match execute(&cli.verb, cli.json, &mut inputs) {
        Err(Failure(msg)) => Output {
            stderr: format!("error: {msg}\n"),
            code: 2,
            ..Output::default()
        },
        Ok(a) => {
            let stdout = if cli.json {
                let env = Envelope {
                    verb: verb_name(&cli.verb),
                    input: inputs.seen,
                    result: a.result,
                    trace: a.trace,
                };
                line(serde_json::to_string(&env).expect("envelope serializes"))
            } else {
                a.text
            };
            Output {
                stdout,
                stderr: String::new(),
                code: a.code,
            }
        }
    }
}
