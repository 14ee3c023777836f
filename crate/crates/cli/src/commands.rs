use std::io::Write;
use std::path::Path;

use graphsym::{
    alternator_state, antisymmetric_state_with, check_full_group, classify, cz_graph_state,
    gr_graph_state_with, oracle_antisymmetric_state, ModulusSchedule, StateVector,
};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::graphfile::GraphFile;
use crate::report::{AmplitudeReport, Comparison, MethodComparison};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Construction {
    Cz,
    Gr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Recursive,
    Oracle,
    Alternator,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Recursive => "recursive",
            Method::Oracle => "oracle",
            Method::Alternator => "alternator",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Modulus {
    #[default]
    Growing,
    Fixed,
}

impl Modulus {
    fn schedule(self) -> ModulusSchedule {
        match self {
            Modulus::Growing => ModulusSchedule::Growing,
            Modulus::Fixed => ModulusSchedule::Fixed,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Modulus::Growing => "growing",
            Modulus::Fixed => "fixed",
        }
    }
}

pub fn build(
    graph: &Path,
    construction: Construction,
    levels: Option<usize>,
    modulus: Modulus,
    tol: f64,
) -> CliResult<AmplitudeReport> {
    let file = GraphFile::read(graph)?;
    Ok(build_from(file, construction, levels, modulus, tol)?.0)
}

fn build_from(
    file: GraphFile,
    construction: Construction,
    levels: Option<usize>,
    modulus: Modulus,
    tol: f64,
) -> CliResult<(AmplitudeReport, StateVector)> {
    match construction {
        Construction::Cz => {
            let g = file.undirected()?;
            if let Some(d) = levels.or(file.levels).filter(|&d| d != 2) {
                return Err(CliError::Usage(format!(
                    "CZ graph states are qubit states, d = {d} requested"
                )));
            }
            let state = cz_graph_state(&g)?;
            Ok((
                AmplitudeReport::new("cz", &state, tol).with_graph(file),
                state,
            ))
        }
        Construction::Gr => {
            let g = file.oriented()?;
            let n = g.num_vertices();
            let d = levels.or(file.levels).unwrap_or(n);
            let built = gr_graph_state_with(&g, d, modulus.schedule())?;
            let mut report = AmplitudeReport::new("gr", &built.state, tol)
                .with_graph(file)
                .with_trace(&built.trace);
            report.modulus = Some(modulus.name().to_string());
            if built.insufficient_levels {
                report.warnings.push(format!(
                    "complete graph on {n} vertices with only d = {d} levels: no room for {n} distinct values"
                ));
            }
            Ok((report, built.state))
        }
    }
}

/// One report per method, or all of them with pairwise comparisons.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AntisymOutput {
    Compared(MethodComparison),
    Single(AmplitudeReport),
}

pub fn antisym(
    n: usize,
    levels: Option<usize>,
    methods: &[Method],
    modulus: Modulus,
    tol: f64,
) -> CliResult<AntisymOutput> {
    if n < 2 {
        return Err(CliError::Usage(format!(
            "antisymmetric states need n >= 2, got {n}"
        )));
    }
    let d = levels.unwrap_or(n);
    if d < n {
        return Err(CliError::Usage(format!(
            "{n} qudits need at least {n} levels, got d = {d}"
        )));
    }
    let mut unique: Vec<Method> = Vec::new();
    for &m in methods {
        if !unique.contains(&m) {
            unique.push(m);
        }
    }
    if unique.is_empty() {
        unique.push(Method::Recursive);
    }

    let mut states = Vec::new();
    let mut reports = Vec::new();
    for &m in &unique {
        let state = match m {
            Method::Recursive => antisymmetric_state_with(n, d, modulus.schedule())?,
            Method::Oracle => oracle_antisymmetric_state(n, n)?.embed_levels(d)?,
            Method::Alternator => alternator_state(n, d)?,
        };
        let mut report = AmplitudeReport::new(m.name(), &state, tol);
        if m == Method::Recursive {
            report.modulus = Some(modulus.name().to_string());
        }
        reports.push(report);
        states.push(state);
    }
    if reports.len() == 1 {
        return Ok(AntisymOutput::Single(reports.remove(0)));
    }
    let mut comparisons = Vec::new();
    for i in 0..states.len() {
        for j in i + 1..states.len() {
            comparisons.push(Comparison::new(
                unique[i].name(),
                &states[i],
                unique[j].name(),
                &states[j],
                tol,
            )?);
        }
    }
    Ok(AntisymOutput::Compared(MethodComparison {
        n,
        d,
        reports,
        comparisons,
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub n: usize,
    pub d: usize,
    pub construction: String,
    pub classification: String,
    /// Same question answered by testing every permutation; absent when the
    /// group is too large.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub full_group: Option<String>,
    /// What the input report claimed, when the input was a report.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reported: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyOutput {
    pub tol: f64,
    pub results: Vec<Classification>,
}

/// Classifies the state in a report file, or the state built from a graph
/// file (`cz` for undirected files, `gr` for directed ones).
pub fn classify_file(path: &Path, levels: Option<usize>, tol: f64) -> CliResult<ClassifyOutput> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let mut results = Vec::new();
    if text.trim_start().starts_with('{') {
        let reports = match serde_json::from_str::<MethodComparison>(&text) {
            Ok(c) => c.reports,
            Err(_) => vec![AmplitudeReport::from_json(&text)?],
        };
        for r in reports {
            let state = r.to_state()?;
            results.push(classification(
                &r.construction,
                &state,
                Some(r.classification),
                tol,
            )?);
        }
    } else {
        let file = GraphFile::parse(&text, &path.display().to_string())?;
        let construction = if file.directed {
            Construction::Gr
        } else {
            Construction::Cz
        };
        let (report, state) = build_from(file, construction, levels, Modulus::default(), tol)?;
        results.push(classification(&report.construction, &state, None, tol)?);
    }
    Ok(ClassifyOutput { tol, results })
}

fn classification(
    construction: &str,
    state: &StateVector,
    reported: Option<String>,
    tol: f64,
) -> CliResult<Classification> {
    let full_group = match check_full_group(state, tol) {
        Ok(c) => Some(c.to_string()),
        Err(graphsym::Error::Capacity { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(Classification {
        n: state.num_qudits(),
        d: state.levels(),
        construction: construction.to_string(),
        classification: classify(state, tol).to_string(),
        full_group,
        reported,
    })
}

/// Writes `text` to `out`, or to stdout.
pub fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::io("<stdout>", e))
        }
    }
}
