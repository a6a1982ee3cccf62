//! Positive-braid rewriting and coherence checking for free symmetric monoidal bicategories.
//!
//! * [`braid`]: braid words, permutations, normal forms and brute-force oracles.
//! * [`rewrite`]: the YB/C/V reduction calculus, replayable traces, markings and the
//!   confluence harness.
//! * [`term`]: object and 1-cell syntax, the functors to permutations and braids, and
//!   coherence certificates.
//! * [`cubes`]: little cubes, operad composition and numeric checks of explicit paths
//!   and homotopies in configuration spaces.
//! * [`cli`]: the command-line front end.

pub mod braid;
pub mod cli;
pub mod cubes;
pub mod rewrite;
pub mod syntax;
pub mod term;
