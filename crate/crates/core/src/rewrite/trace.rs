use std::fmt;

use serde::Serialize;

use super::{apply_basic, BasicReduction, CompositeReduction, RewriteError};
use crate::braid::BraidWord;
use crate::syntax::ParseError;

/// A composite step recorded alongside the basic steps it expands to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompositeAnnotation {
    /// Index into [`ReductionTrace::steps`] of the first step of the expansion.
    pub first_step: usize,
    pub reduction: CompositeReduction,
}

/// A replayable chain of basic reductions from `source` to `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub source: BraidWord,
    pub steps: Vec<BasicReduction>,
    pub composites: Vec<CompositeAnnotation>,
    pub target: BraidWord,
}

impl ReductionTrace {
    /// The trace with no steps.
    pub fn empty(w: &BraidWord) -> Self {
        ReductionTrace {
            source: w.clone(),
            steps: Vec::new(),
            composites: Vec::new(),
            target: w.clone(),
        }
    }

    /// Replay the steps, returning every intermediate word (source first).
    pub fn words(&self) -> Result<Vec<BraidWord>, RewriteError> {
        let mut out = vec![self.source.clone()];
        for step in &self.steps {
            let next = apply_basic(out.last().expect("non-empty"), step)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Append basic steps, updating the target. Fails without modifying `self`.
    pub fn extend(&mut self, steps: &[BasicReduction]) -> Result<(), RewriteError> {
        let mut cur = self.target.clone();
        for s in steps {
            cur = apply_basic(&cur, s)?;
        }
        self.steps.extend_from_slice(steps);
        self.target = cur;
        Ok(())
    }

    /// Append a composite step as its expansion, keeping the annotation.
    pub fn push_composite(&mut self, r: CompositeReduction) -> Result<(), RewriteError> {
        let steps = r.expand(&self.target)?;
        let first_step = self.steps.len();
        self.extend(&steps)?;
        self.composites.push(CompositeAnnotation {
            first_step,
            reduction: r,
        });
        Ok(())
    }

    pub fn cancel_count(&self) -> usize {
        self.steps.iter().filter(|s| s.is_cancel()).count()
    }

    pub fn parse(text: &str) -> Result<ReductionTrace, ParseError> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l))
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        parse_lines(&lines, 0).and_then(|(trace, used)| {
            if let Some((line, _)) = lines.get(used) {
                Err(ParseError::new(*line, 1, "unexpected text after target line"))
            } else {
                Ok(trace)
            }
        })
    }
}

/// Parse one trace starting at `lines[start]`; returns it with the index past its target line.
pub(crate) fn parse_lines(
    lines: &[(usize, &str)],
    start: usize,
) -> Result<(ReductionTrace, usize), ParseError> {
    let end_line = lines.last().map(|(l, _)| l + 1).unwrap_or(1);
    let (line, text) = *lines
        .get(start)
        .ok_or_else(|| ParseError::new(end_line, 1, "expected `source:` line"))?;
    let source = parse_word_field(line, text, "source:")?;
    let mut steps = Vec::new();
    let mut composites = Vec::new();
    let mut k = start + 1;
    loop {
        let (line, text) = *lines
            .get(k)
            .ok_or_else(|| ParseError::new(end_line, 1, "expected `target:` line"))?;
        let indent = text.len() - text.trim_start().len();
        let body = text.trim();
        if body.starts_with("target:") {
            let target = parse_word_field(line, text, "target:")?;
            let trace = ReductionTrace {
                source,
                steps,
                composites,
                target,
            };
            return Ok((trace, k + 1));
        }
        if let Some(rest) = body.strip_prefix('*') {
            let col = indent + 2 + (rest.len() - rest.trim_start().len());
            let reduction = parse_composite(rest.trim()).map_err(|m| ParseError::new(line, col, m))?;
            composites.push(CompositeAnnotation {
                first_step: steps.len(),
                reduction,
            });
        } else {
            let step = parse_basic(body).map_err(|m| ParseError::new(line, indent + 1, m))?;
            steps.push(step);
        }
        k += 1;
    }
}

fn parse_word_field(line: usize, text: &str, key: &str) -> Result<BraidWord, ParseError> {
    let indent = text.len() - text.trim_start().len();
    let body = text.trim_start();
    let Some(rest) = body.strip_prefix(key) else {
        return Err(ParseError::new(line, indent + 1, format!("expected `{key}`")));
    };
    let offset = indent + key.len();
    BraidWord::parse(rest).map_err(|e| e.offset(line - 1, offset))
}

fn number(tok: &str, what: &str) -> Result<usize, String> {
    tok.parse::<usize>()
        .map_err(|_| format!("expected {what}, found `{tok}`"))
}

fn position(tok: Option<&str>) -> Result<usize, String> {
    let tok = tok.ok_or("missing position `@k`")?;
    let digits = tok
        .strip_prefix('@')
        .ok_or_else(|| format!("expected `@k`, found `{tok}`"))?;
    number(digits, "a position")
}

fn pair(tok: Option<&str>) -> Result<(usize, usize), String> {
    let tok = tok.ok_or("missing generator pair `(i,j)`")?;
    let inner = tok
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("expected `(i,j)`, found `{tok}`"))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| format!("expected `(i,j)`, found `{tok}`"))?;
    Ok((number(a.trim(), "a generator")?, number(b.trim(), "a generator")?))
}

fn single(tok: Option<&str>) -> Result<usize, String> {
    let tok = tok.ok_or("missing generator `(i)`")?;
    let inner = tok
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("expected `(i)`, found `{tok}`"))?;
    number(inner.trim(), "a generator")
}

fn no_more<'a>(mut toks: impl Iterator<Item = &'a str>) -> Result<(), String> {
    match toks.next() {
        Some(t) => Err(format!("unexpected `{t}`")),
        None => Ok(()),
    }
}

fn parse_basic(body: &str) -> Result<BasicReduction, String> {
    let mut toks = body.split_whitespace();
    let kind = toks.next().ok_or("empty step")?;
    let step = match kind {
        "YB+" => BasicReduction::YbUp { at: position(toks.next())? },
        "YB-" => BasicReduction::YbDown { at: position(toks.next())? },
        "C" => {
            let at = position(toks.next())?;
            let (left, right) = pair(toks.next())?;
            BasicReduction::Commute { at, left, right }
        }
        "V" => {
            let at = position(toks.next())?;
            BasicReduction::Cancel { at, index: single(toks.next())? }
        }
        other => return Err(format!("unknown reduction `{other}`")),
    };
    no_more(toks)?;
    Ok(step)
}

fn power(tok: Option<&str>) -> Result<(bool, usize), String> {
    let tok = tok.ok_or("missing `head^n` or `tail^n`")?;
    let (head, n) = if let Some(n) = tok.strip_prefix("head^") {
        (true, n)
    } else if let Some(n) = tok.strip_prefix("tail^") {
        (false, n)
    } else {
        return Err(format!("expected `head^n` or `tail^n`, found `{tok}`"));
    };
    Ok((head, number(n, "a power")?))
}

fn parse_composite(body: &str) -> Result<CompositeReduction, String> {
    let mut toks = body.split_whitespace();
    let kind = toks.next().ok_or("empty composite step")?;
    let r = match kind {
        "YB+" | "YB-" => {
            let at = position(toks.next())?;
            let (head, power) = power(toks.next())?;
            match (kind, head) {
                ("YB+", true) => CompositeReduction::YbUpHead { at, power },
                ("YB+", false) => CompositeReduction::YbUpTail { at, power },
                (_, true) => CompositeReduction::YbDownHead { at, power },
                (_, false) => CompositeReduction::YbDownTail { at, power },
            }
        }
        "C" => {
            let at = position(toks.next())?;
            let (left, right) = pair(toks.next())?;
            let (head, power) = power(toks.next())?;
            if head {
                CompositeReduction::CommuteHead { at, left, right, power }
            } else {
                CompositeReduction::CommuteTail { at, left, right, power }
            }
        }
        other => return Err(format!("unknown composite reduction `{other}`")),
    };
    no_more(toks)?;
    Ok(r)
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "source: {}", self.source)?;
        let mut notes = self.composites.iter().peekable();
        for (k, step) in self.steps.iter().enumerate() {
            while let Some(c) = notes.next_if(|c| c.first_step == k) {
                writeln!(f, "* {}", c.reduction)?;
            }
            writeln!(f, "{step}")?;
        }
        for c in notes {
            writeln!(f, "* {}", c.reduction)?;
        }
        writeln!(f, "target: {}", self.target)
    }
}

/// Outcome of replaying a trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum TraceVerdict {
    Valid,
    /// `step` is the 0-based index of the first failing step; `None` when every step
    /// applies but the final word differs from the recorded target.
    Invalid { step: Option<usize>, reason: String },
}

impl TraceVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, TraceVerdict::Valid)
    }
}

impl fmt::Display for TraceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceVerdict::Valid => write!(f, "VALID"),
            TraceVerdict::Invalid { step: Some(k), reason } => write!(f, "INVALID: step {k}: {reason}"),
            TraceVerdict::Invalid { step: None, reason } => write!(f, "INVALID: {reason}"),
        }
    }
}

/// Replay every step, and check composite annotations against their expansions.
pub fn verify_trace(t: &ReductionTrace) -> TraceVerdict {
    if let Err(e) = t.source.require_positive() {
        return TraceVerdict::Invalid {
            step: None,
            reason: format!("source: {e}"),
        };
    }
    if t.source.strands() != t.target.strands() {
        return TraceVerdict::Invalid {
            step: None,
            reason: format!(
                "source has {} strands but target has {}",
                t.source.strands(),
                t.target.strands()
            ),
        };
    }
    let mut cur = t.source.clone();
    let mut notes = t.composites.iter().peekable();
    if let Some(c) = t.composites.iter().find(|c| c.first_step > t.steps.len()) {
        return TraceVerdict::Invalid {
            step: None,
            reason: format!("composite `{}` points past the last step", c.reduction),
        };
    }
    if t.composites.windows(2).any(|w| w[0].first_step > w[1].first_step) {
        return TraceVerdict::Invalid {
            step: None,
            reason: "composite annotations out of order".into(),
        };
    }
    for (k, step) in t.steps.iter().enumerate() {
        while let Some(c) = notes.next_if(|c| c.first_step == k) {
            let ok = match c.reduction.expand(&cur) {
                Ok(exp) => t.steps.get(k..k + exp.len()) == Some(exp.as_slice()),
                Err(_) => false,
            };
            if !ok {
                return TraceVerdict::Invalid {
                    step: Some(k),
                    reason: format!("steps do not expand composite `{}`", c.reduction),
                };
            }
        }
        match apply_basic(&cur, step) {
            Ok(next) => cur = next,
            Err(e) => {
                return TraceVerdict::Invalid {
                    step: Some(k),
                    reason: format!("`{step}`: {e}"),
                }
            }
        }
    }
    if let Some(c) = notes.next() {
        return TraceVerdict::Invalid {
            step: None,
            reason: format!("composite `{}` has no steps", c.reduction),
        };
    }
    if cur != t.target {
        return TraceVerdict::Invalid {
            step: None,
            reason: format!("steps end at `{cur}`, not the recorded target `{}`", t.target),
        };
    }
    TraceVerdict::Valid
}

/// Number of V steps in the trace.
pub fn reduction_length(t: &ReductionTrace) -> usize {
    t.cancel_count()
}
