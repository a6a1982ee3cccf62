//! Golden-file cases for the command-line front end. Set `BLESS=1` to rewrite the files.

use std::path::PathBuf;

use braidcoh::cli::run;

const TRACE: &str = "source: 3: s1 s2 s1 s2\nYB+ @0\nV @2 (2)\ntarget: 3: s2 s1\n";
const BAD_TRACE: &str = "source: 3: s1 s2 s1 s2\nYB+ @1\nV @2 (2)\ntarget: 3: s2 s1\n";

/// `(name, args, stdin)` for every case; each verb appears at least once.
pub fn cases() -> Vec<(&'static str, Vec<&'static str>, &'static str)> {
    vec![
        ("perm", vec!["perm", "3: s1 s2 s1"], ""),
        ("perm_signed", vec!["perm", "4: S1 s3 s2"], ""),
        ("perm_json", vec!["--json", "perm", "3: s1 s2"], ""),
        ("minimal_true", vec!["minimal", "3: s1 s2 s1"], ""),
        ("minimal_false", vec!["minimal", "3: s1 s2 s2"], ""),
        ("startset", vec!["startset", "3: s1 s2 s1"], ""),
        ("finishset", vec!["finishset", "4: s1 s2 s3"], ""),
        ("factor", vec!["factor", "3: s1 s1 s2 s2"], ""),
        ("reduce", vec!["reduce", "3: s1 s2 s1 s2"], ""),
        ("reduce_trace", vec!["reduce", "--trace", "-", "2: s1 s1"], ""),
        ("reduce_trace_stdin", vec!["reduce", "--trace", "-", "-"], "4: s1 s3 s2 s1 s3 s2 s2\n"),
        ("reduce_canonical", vec!["reduce", "--canonical", "--trace", "-", "3: s2 s1 s2 s2"], ""),
        ("reduce_json", vec!["--json", "reduce", "--trace", "-", "3: s1 s2 s1 s2"], ""),
        ("eq_true", vec!["eq", "3: s1 s2 s1", "3: s2 s1 s2"], ""),
        ("eq_false", vec!["eq", "3: s1 s2", "3: s2 s1"], ""),
        ("coherent_differ", vec!["coherent", "(id (tensor a b))", "(braid a b)"], ""),
        ("coherent_yes", vec!["coherent", "(comp (braid b a) (braid a b))", "(id (tensor a b))"], ""),
        (
            "coherent_certificate",
            vec![
                "coherent",
                "--certificate",
                "-",
                "(comp (braid (tensor b c) a) (braid a (tensor b c)))",
                "(id (tensor a (tensor b c)))",
            ],
            "",
        ),
        ("coherent_not_parallel", vec!["coherent", "(braid a b)", "(braid* a b)"], ""),
        ("coherent_parse_error", vec!["coherent", "(comp (braid a b)\n  (bogus a))", "(id a)"], ""),
        ("verify_trace", vec!["verify", "-"], TRACE),
        ("verify_tampered", vec!["verify", "-"], BAD_TRACE),
        ("verify_certificate", vec!["verify", "-"], "certificate\nf: (braid a b)\ng: (braid* b a)\ncommon: 2: s1\ntrace f\nsource: 2: s1\ntarget: 2: s1\ntrace g\nsource: 2: s1\ntarget: 2: s1\n"),
        ("confluence", vec!["confluence", "3: s1 s2 s1 s2"], ""),
        ("confluence_budget", vec!["confluence", "--budget", "5", "3: s1 s1 s2 s2 s1 s1"], ""),
        ("cubes_delta", vec!["cubes", "--path", "delta", "--grid", "8"], ""),
        ("cubes_all", vec!["cubes", "--grid", "4"], ""),
        ("cubes_large_side", vec!["cubes", "--path", "delta", "--grid", "6", "--side", "0.2"], ""),
        ("cubes_unknown_path", vec!["cubes", "--path", "nope"], ""),
        ("parse_error", vec!["perm", "3: s1 x2"], ""),
        ("unknown_flag", vec!["perm", "--bogus", "3: s1"], ""),
    ]
}

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn render(args: &[&str], stdin: &str) -> String {
    let mut full = vec!["braidcoh"];
    full.extend_from_slice(args);
    let out = run(full, &mut stdin.as_bytes());
    format!("exit: {}\n--- stdout\n{}--- stderr\n{}", out.code, out.stdout, out.stderr)
}

/// Run every case; returns `(name, matched)` pairs. Running twice also checks determinism.
pub fn check_all() -> Vec<(String, bool)> {
    let bless = std::env::var_os("BLESS").is_some();
    cases()
        .into_iter()
        .map(|(name, args, stdin)| {
            let got = render(&args, stdin);
            let again = render(&args, stdin);
            let path = dir().join(format!("{name}.out"));
            if bless {
                std::fs::write(&path, &got).unwrap();
            }
            let want = std::fs::read_to_string(&path).unwrap_or_default();
            (name.to_string(), got == want && got == again)
        })
        .collect()
}
