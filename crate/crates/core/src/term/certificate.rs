use std::fmt;

use serde::Serialize;

use super::{pi_functor, positivize, require_parallel, rho_functor, typecheck, CellExpr, TermError};
use crate::braid::{is_minimal, underlying_permutation, BraidWord, Permutation};
use crate::rewrite::{reduce_to_canonical, trace, verify_trace, ReductionTrace};
use crate::syntax::ParseError;

/// Evidence that two parallel cells are isomorphic: reductions of their positivized braid
/// words to one minimal word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub f: CellExpr,
    pub g: CellExpr,
    pub trace_f: ReductionTrace,
    pub trace_g: ReductionTrace,
    pub common_target: BraidWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coherence {
    Coherent(Box<Certificate>),
    NotCoherent { pi_f: Permutation, pi_g: Permutation },
}

/// Decide whether parallel cells are isomorphic, with a certificate when they are.
///
/// Both positivized words are reduced to the canonical reduced word of their permutation,
/// so equal permutations give letter-for-letter equal targets.
pub fn coherent(f: &CellExpr, g: &CellExpr) -> Result<Coherence, TermError> {
    require_parallel(f, g)?;
    let (pi_f, pi_g) = (pi_functor(f), pi_functor(g));
    if pi_f != pi_g {
        return Ok(Coherence::NotCoherent { pi_f, pi_g });
    }
    let trace_f = reduce_to_canonical(&rho_functor(&positivize(f))?)?;
    let trace_g = reduce_to_canonical(&rho_functor(&positivize(g))?)?;
    debug_assert_eq!(trace_f.target, trace_g.target);
    Ok(Coherence::Coherent(Box::new(Certificate {
        f: f.clone(),
        g: g.clone(),
        common_target: trace_f.target.clone(),
        trace_f,
        trace_g,
    })))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum CertificateVerdict {
    Valid,
    /// `check` names the first check that failed.
    Invalid { check: String, reason: String },
}

impl CertificateVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, CertificateVerdict::Valid)
    }

    fn fail(check: &str, reason: impl fmt::Display) -> Self {
        CertificateVerdict::Invalid {
            check: check.to_string(),
            reason: reason.to_string(),
        }
    }
}

impl fmt::Display for CertificateVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateVerdict::Valid => write!(f, "VALID"),
            CertificateVerdict::Invalid { check, reason } => write!(f, "INVALID: {check}: {reason}"),
        }
    }
}

/// Re-check a certificate from scratch.
pub fn verify_certificate(c: &Certificate) -> CertificateVerdict {
    use CertificateVerdict as V;
    if let Err(e) = typecheck(&c.f) {
        return V::fail("typecheck f", e);
    }
    if let Err(e) = typecheck(&c.g) {
        return V::fail("typecheck g", e);
    }
    if let Err(e) = require_parallel(&c.f, &c.g) {
        return V::fail("parallel", e);
    }
    for (name, cell, trace) in [("f", &c.f, &c.trace_f), ("g", &c.g, &c.trace_g)] {
        let word = match rho_functor(&positivize(cell)) {
            Ok(w) => w,
            Err(e) => return V::fail(&format!("source {name}"), e),
        };
        if trace.source != word {
            return V::fail(
                &format!("source {name}"),
                format!("trace starts at `{}`, expected `{word}`", trace.source),
            );
        }
        let verdict = verify_trace(trace);
        if !verdict.is_valid() {
            return V::fail(&format!("trace {name}"), verdict);
        }
        if trace.target != c.common_target {
            return V::fail(
                &format!("target {name}"),
                format!("trace ends at `{}`, not `{}`", trace.target, c.common_target),
            );
        }
    }
    match is_minimal(&c.common_target) {
        Ok(true) => {}
        Ok(false) => return V::fail("common target", "not a minimal braid"),
        Err(e) => return V::fail("common target", e),
    }
    let pi = underlying_permutation(&c.common_target);
    for (name, cell) in [("f", &c.f), ("g", &c.g)] {
        let p = pi_functor(cell);
        if p != pi {
            return V::fail(
                &format!("permutation {name}"),
                format!("common target has permutation {pi}, cell has {p}"),
            );
        }
    }
    V::Valid
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate")?;
        writeln!(f, "f: {}", self.f)?;
        writeln!(f, "g: {}", self.g)?;
        writeln!(f, "common: {}", self.common_target)?;
        writeln!(f, "trace f")?;
        write!(f, "{}", self.trace_f)?;
        writeln!(f, "trace g")?;
        write!(f, "{}", self.trace_g)
    }
}

fn field<'a>(lines: &[(usize, &'a str)], k: usize, key: &str) -> Result<(usize, usize, &'a str), ParseError> {
    let eof = lines.last().map(|(l, _)| l + 1).unwrap_or(1);
    let (line, text) = *lines
        .get(k)
        .ok_or_else(|| ParseError::new(eof, 1, format!("expected `{key}`")))?;
    let indent = text.len() - text.trim_start().len();
    let rest = text
        .trim_start()
        .strip_prefix(key)
        .ok_or_else(|| ParseError::new(line, indent + 1, format!("expected `{key}`")))?;
    Ok((line, indent + key.len(), rest))
}

impl Certificate {
    /// Parse the text written by `Display`. Blank lines are ignored.
    pub fn parse(text: &str) -> Result<Certificate, ParseError> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l))
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        let (line, col, rest) = field(&lines, 0, "certificate")?;
        if !rest.trim().is_empty() {
            return Err(ParseError::new(line, col + 1, "unexpected text after `certificate`"));
        }
        let (line, col, rest) = field(&lines, 1, "f:")?;
        let f = CellExpr::parse(rest).map_err(|e| e.offset(line - 1, col))?;
        let (line, col, rest) = field(&lines, 2, "g:")?;
        let g = CellExpr::parse(rest).map_err(|e| e.offset(line - 1, col))?;
        let (line, col, rest) = field(&lines, 3, "common:")?;
        let common_target = BraidWord::parse(rest).map_err(|e| e.offset(line - 1, col))?;
        let (line, col, rest) = field(&lines, 4, "trace f")?;
        if !rest.trim().is_empty() {
            return Err(ParseError::new(line, col + 1, "unexpected text after `trace f`"));
        }
        let (trace_f, next) = trace::parse_lines(&lines, 5)?;
        let (line, col, rest) = field(&lines, next, "trace g")?;
        if !rest.trim().is_empty() {
            return Err(ParseError::new(line, col + 1, "unexpected text after `trace g`"));
        }
        let (trace_g, end) = trace::parse_lines(&lines, next + 1)?;
        if let Some((line, _)) = lines.get(end) {
            return Err(ParseError::new(*line, 1, "unexpected text after certificate"));
        }
        Ok(Certificate {
            f,
            g,
            trace_f,
            trace_g,
            common_target,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::BasicReduction;

    fn cell(s: &str) -> CellExpr {
        CellExpr::parse(s).unwrap()
    }

    fn cert(f: &str, g: &str) -> Certificate {
        match coherent(&cell(f), &cell(g)).unwrap() {
            Coherence::Coherent(c) => *c,
            other => panic!("expected a certificate, got {other:?}"),
        }
    }

    #[test]
    fn braid_against_its_positivized_inverse() {
        let c = cert("(braid a b)", "(braid* b a)");
        assert!(c.trace_f.steps.is_empty() && c.trace_g.steps.is_empty());
        assert_eq!(c.common_target.to_string(), "2: s1");
        assert!(verify_certificate(&c).is_valid());
    }

    #[test]
    fn double_braid_against_identity() {
        let c = cert("(comp (braid b a) (braid a b))", "(id (tensor a b))");
        assert_eq!(c.trace_f.steps, [BasicReduction::Cancel { at: 0, index: 1 }]);
        assert!(c.trace_g.steps.is_empty());
        assert!(c.common_target.is_empty());
        assert!(verify_certificate(&c).is_valid());
    }

    #[test]
    fn different_permutations() {
        let r = coherent(&cell("(braid a a)"), &cell("(id (tensor a a))")).unwrap();
        assert!(matches!(r, Coherence::NotCoherent { .. }));
    }

    #[test]
    fn non_parallel_is_an_error() {
        let e = coherent(&cell("(braid a b)"), &cell("(braid* a b)")).unwrap_err();
        assert!(matches!(e, TermError::NotParallel { .. }));
    }

    #[test]
    fn bracketing_and_units_are_ignored_for_parallelism() {
        let c = cert("(comp (lunit (tensor a b)) (assoc I a b))", "(ten (lunit a) (id b))");
        assert!(verify_certificate(&c).is_valid());
    }

    #[test]
    fn tampering_is_detected() {
        let good = cert("(comp (braid b a) (braid a b))", "(id (tensor a b))");
        let mut c = good.clone();
        c.common_target = BraidWord::positive(2, &[1]).unwrap();
        assert!(matches!(verify_certificate(&c), CertificateVerdict::Invalid { ref check, .. } if check == "target f"));
        let mut c = good.clone();
        c.trace_f.steps[0] = BasicReduction::Cancel { at: 1, index: 1 };
        assert!(matches!(verify_certificate(&c), CertificateVerdict::Invalid { ref check, .. } if check == "trace f"));
        let mut c = good.clone();
        c.g = cell("(id (tensor b a))");
        assert!(!verify_certificate(&c).is_valid());
    }

    #[test]
    fn text_round_trip() {
        let c = cert(
            "(comp (braid (tensor b c) a) (braid a (tensor b c)))",
            "(id (tensor a (tensor b c)))",
        );
        let text = c.to_string();
        assert!(text.starts_with("certificate\nf: (comp"));
        assert_eq!(Certificate::parse(&text).unwrap(), c);
        assert!(verify_certificate(&c).is_valid());
        let e = Certificate::parse("certificate\nf: (braid a b\n").unwrap_err();
        assert_eq!(e.line, 2);
    }
}
