//! Batch checks over every labeled graph (or every `n`) up to a bound.

use graphsym::symmetry::{find_violation, satisfies, Exchange};
use graphsym::{
    antisymmetric_state, classify, cz_graph_state, enumerate_undirected, OrientedGraph,
    Permutation, StateVector, SymmetryClass, UndirectedGraph,
};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::report::round12;

/// Largest `N` for the symmetry sweep over labeled graphs.
pub const THEOREM1_MAX_N: usize = 5;
/// Largest `N` for the CZ antisymmetry sweep.
pub const IMPOSSIBILITY_MAX_N: usize = graphsym::graph::MAX_ENUMERATION_VERTICES;
/// Largest `n` for the recursive antisymmetric states.
pub const ANTISYMMETRY_MAX_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Theorem1,
    Impossibility,
    Antisymmetry,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Impossibility => "impossibility",
            Suite::Antisymmetry => "antisymmetry",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub suite: String,
    pub max_n: usize,
    pub tol: f64,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub cases: Vec<Case>,
    pub counterexamples: Vec<Counterexample>,
}

/// Per-size tallies; which fields are present depends on the suite.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Case {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graphs_checked: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric_nontrivial: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edgeless_symmetric: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antisymmetric: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: usize,
    pub directed: bool,
    pub edges: Vec<(usize, usize)>,
    /// One-line images, 1-based.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
    pub reason: String,
}

impl Counterexample {
    fn undirected(g: &UndirectedGraph, p: Option<&Permutation>, reason: String) -> Self {
        Counterexample {
            n: g.num_vertices(),
            directed: false,
            edges: g.edges().collect(),
            permutation: p.map(one_based),
            reason,
        }
    }
}

fn one_based(p: &Permutation) -> Vec<usize> {
    p.images().iter().map(|x| x + 1).collect()
}

pub fn run(suite: Suite, max_n: usize, tol: f64) -> CliResult<VerifySummary> {
    let suites = match suite {
        Suite::Theorem1 => vec![theorem1(max_n, tol)?],
        Suite::Impossibility => vec![impossibility(max_n, tol)?],
        Suite::Antisymmetry => vec![antisymmetry(max_n, tol)?],
        Suite::All => vec![
            theorem1(max_n, tol)?,
            impossibility(max_n, tol)?,
            antisymmetry(max_n, tol)?,
        ],
    };
    Ok(VerifySummary {
        suite: suite.name().to_string(),
        max_n,
        tol,
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}

fn check_bounds(suite: &str, max_n: usize, min: usize, max: usize) -> CliResult<()> {
    if max_n < min {
        return Err(CliError::Usage(format!(
            "{suite} needs --max-n >= {min}, got {max_n}"
        )));
    }
    if max_n > max {
        return Err(CliError::Capacity(format!(
            "{suite} supports --max-n up to {max}, got {max_n}"
        )));
    }
    Ok(())
}

fn finish(name: &str, cases: Vec<Case>, counterexamples: Vec<Counterexample>) -> SuiteResult {
    SuiteResult {
        name: name.to_string(),
        passed: counterexamples.is_empty() && cases.iter().all(|c| c.passed),
        cases,
        counterexamples,
    }
}

/// A nontrivial graph state is symmetric exactly when the graph is complete,
/// and each incomplete graph's witness transposition moves its state.
pub fn theorem1(max_n: usize, tol: f64) -> CliResult<SuiteResult> {
    check_bounds("theorem1", max_n, 2, THEOREM1_MAX_N)?;
    let mut cases = Vec::new();
    let mut bad = Vec::new();
    for n in 2..=max_n {
        let mut checked = 0;
        let mut symmetric = 0;
        let mut edgeless = false;
        let before = bad.len();
        for g in enumerate_undirected(n)? {
            checked += 1;
            let state = cz_graph_state(&g)?;
            let sym = classify(&state, tol) == SymmetryClass::FullySymmetric;
            if g.is_trivial() {
                edgeless = sym;
                continue;
            }
            symmetric += usize::from(sym);
            if g.is_complete() {
                if !sym {
                    let p = find_violation(&state, Exchange::Bosonic, tol);
                    bad.push(Counterexample::undirected(
                        &g,
                        p.as_ref(),
                        "complete graph state is not symmetric".into(),
                    ));
                }
                continue;
            }
            let Some(w) = g.find_witness()?.filter(|w| w.is_valid_for(&g)) else {
                bad.push(Counterexample::undirected(
                    &g,
                    None,
                    "no valid witness for an incomplete graph".into(),
                ));
                continue;
            };
            let t = w.breaking_transposition(n)?;
            if sym || satisfies(&state, &t, Exchange::Bosonic, tol) {
                bad.push(Counterexample::undirected(
                    &g,
                    Some(&t),
                    format!("incomplete graph state is left unchanged by its {:?} witness transposition", w.kind),
                ));
            }
        }
        cases.push(Case {
            n,
            graphs_checked: Some(checked),
            symmetric_nontrivial: Some(symmetric),
            edgeless_symmetric: Some(edgeless),
            passed: bad.len() == before && symmetric == 1,
            ..Case::default()
        });
    }
    Ok(finish("theorem1", cases, bad))
}

/// No CZ graph state is antisymmetric; every one has `|0..0>` amplitude
/// `+2^(-N/2)`.
pub fn impossibility(max_n: usize, tol: f64) -> CliResult<SuiteResult> {
    check_bounds("impossibility", max_n, 2, IMPOSSIBILITY_MAX_N)?;
    let mut cases = Vec::new();
    let mut bad = Vec::new();
    for n in 2..=max_n {
        let expected = 2f64.powf(-(n as f64) / 2.0);
        let mut checked = 0;
        let mut antisymmetric = 0;
        let before = bad.len();
        for g in enumerate_undirected(n)? {
            checked += 1;
            let state = cz_graph_state(&g)?;
            if classify(&state, tol) == SymmetryClass::FullyAntisymmetric {
                antisymmetric += 1;
                bad.push(Counterexample::undirected(
                    &g,
                    None,
                    "CZ graph state is fully antisymmetric".into(),
                ));
            }
            let zero = state.amplitudes()[0];
            if (zero.re - expected).abs() > 1e-12 || zero.im.abs() > 1e-12 {
                bad.push(Counterexample::undirected(
                    &g,
                    None,
                    format!(
                        "|0..0> amplitude is {}{:+}i, expected {}",
                        round12(zero.re),
                        round12(zero.im),
                        round12(expected)
                    ),
                ));
            }
        }
        cases.push(Case {
            n,
            graphs_checked: Some(checked),
            antisymmetric: Some(antisymmetric),
            passed: bad.len() == before,
            ..Case::default()
        });
    }
    Ok(finish("impossibility", cases, bad))
}

/// Recursive `A_n` (`d = n`): fully antisymmetric for odd `n`, antisymmetric
/// on the first `n - 1` qudits for even `n`.
pub fn antisymmetry(max_n: usize, tol: f64) -> CliResult<SuiteResult> {
    check_bounds("antisymmetry", max_n, 3, ANTISYMMETRY_MAX_N)?;
    let mut cases = Vec::new();
    let mut bad = Vec::new();
    for n in 3..=max_n {
        let state = antisymmetric_state(n, n)?;
        let class = classify(&state, tol);
        let expected = if n % 2 == 1 {
            SymmetryClass::FullyAntisymmetric
        } else {
            SymmetryClass::AntisymmetricOnPrefix(n - 1)
        };
        let passed = class == expected;
        if !passed {
            let g = OrientedGraph::complete_hierarchical(n)?;
            bad.push(Counterexample {
                n,
                directed: true,
                edges: g.edges().to_vec(),
                permutation: fermionic_violation(&state, class, tol)
                    .as_ref()
                    .map(one_based),
                reason: format!("recursive state classifies as {class}, expected {expected}"),
            });
        }
        cases.push(Case {
            n,
            classification: Some(class.to_string()),
            expected: Some(expected.to_string()),
            passed,
            ..Case::default()
        });
    }
    Ok(finish("antisymmetry", cases, bad))
}

/// A transposition that picks the sign up wrongly, or, for a state that is
/// antisymmetric beyond what was expected, none.
fn fermionic_violation(state: &StateVector, class: SymmetryClass, tol: f64) -> Option<Permutation> {
    match class {
        SymmetryClass::FullyAntisymmetric => None,
        _ => find_violation(state, Exchange::Fermionic, tol),
    }
}
