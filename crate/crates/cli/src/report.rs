//! JSON amplitude reports.
//!
//! Values are rounded to 12 significant digits so that reports are stable
//! across platforms and diffable as golden files.

use graphsym::{Amplitude, ConstructionTrace, StateVector};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::graphfile::GraphFile;

/// Amplitudes with a smaller magnitude are left out of a report.
pub const SUPPORT_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AmplitudeReport {
    pub n: usize,
    pub d: usize,
    /// `cz`, `gr`, `recursive`, `oracle` or `alternator`.
    pub construction: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphFile>,
    pub support_size: usize,
    pub entries: Vec<Entry>,
    pub classification: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEntry>>,
    #[serde(default)]
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub basis: String,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub op: String,
    pub qudits: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<usize>,
}

impl AmplitudeReport {
    pub fn new(construction: &str, state: &StateVector, tol: f64) -> Self {
        let d = state.levels();
        let entries: Vec<Entry> = state
            .support(SUPPORT_THRESHOLD)
            .map(|(i, a)| Entry {
                basis: format_label(&state.label_of(i), d),
                re: round12(a.re),
                im: round12(a.im),
            })
            .collect();
        AmplitudeReport {
            n: state.num_qudits(),
            d,
            construction: construction.to_string(),
            modulus: None,
            graph: None,
            support_size: entries.len(),
            entries,
            classification: graphsym::classify(state, tol).to_string(),
            trace: None,
            warnings: Vec::new(),
        }
    }

    pub fn with_graph(mut self, graph: GraphFile) -> Self {
        self.graph = Some(graph);
        self
    }

    pub fn with_trace(mut self, trace: &ConstructionTrace) -> Self {
        self.trace = Some(
            trace
                .steps
                .iter()
                .map(|s| TraceEntry {
                    op: s.name().to_string(),
                    qudits: s.qudits(),
                    levels: s.levels(),
                })
                .collect(),
        );
        self
    }

    /// Rebuilds the state from the listed entries.
    pub fn to_state(&self) -> CliResult<StateVector> {
        if self.support_size != self.entries.len() {
            return Err(CliError::Report(format!(
                "support_size is {} but {} entries are listed",
                self.support_size,
                self.entries.len()
            )));
        }
        let mut state = StateVector::zeros(self.n, self.d)?;
        let mut amps = state.amplitudes().to_vec();
        for e in &self.entries {
            let label = parse_label(&e.basis, self.n, self.d)?;
            amps[state.index_of(&label)?] = Amplitude::new(e.re, e.im);
        }
        state = StateVector::from_amplitudes(self.n, self.d, amps)?;
        Ok(state)
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Report(e.to_string()))
    }
}

/// Pairwise comparison of two constructions of the same state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub left: String,
    pub right: String,
    pub fidelity: f64,
    pub max_abs_diff: f64,
    pub equal: bool,
    pub equal_up_to_phase: bool,
}

impl Comparison {
    pub fn new(
        left: &str,
        a: &StateVector,
        right: &str,
        b: &StateVector,
        tol: f64,
    ) -> CliResult<Self> {
        Ok(Comparison {
            left: left.to_string(),
            right: right.to_string(),
            fidelity: round12(a.fidelity(b)?),
            max_abs_diff: round12(a.max_abs_diff(b)?),
            equal: a.approx_eq(b, tol)?,
            equal_up_to_phase: a.eq_up_to_global_phase(b, tol)?,
        })
    }
}

/// Several methods applied to the same `n` and `d`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodComparison {
    pub n: usize,
    pub d: usize,
    pub reports: Vec<AmplitudeReport>,
    pub comparisons: Vec<Comparison>,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}

/// Rounds to 12 significant digits; `-0` becomes `0`.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return 0.0;
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Basis label as a digit string, `"021"`. With more than ten levels the
/// digits are written in decimal and separated by commas.
pub fn format_label(label: &[usize], levels: usize) -> String {
    let digits: Vec<String> = label.iter().map(|x| x.to_string()).collect();
    digits.join(if levels > 10 { "," } else { "" })
}

pub fn parse_label(s: &str, qudits: usize, levels: usize) -> CliResult<Vec<usize>> {
    let bad = || {
        CliError::Report(format!(
            "bad basis label `{s}` for {qudits} qudits of {levels} levels"
        ))
    };
    let label: Vec<usize> = if levels > 10 {
        s.split(',')
            .map(|t| t.parse().map_err(|_| bad()))
            .collect::<CliResult<_>>()?
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|x| x as usize).ok_or_else(bad))
            .collect::<CliResult<_>>()?
    };
    if label.len() != qudits || label.iter().any(|&x| x >= levels) {
        return Err(bad());
    }
    Ok(label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round12(-0.0), 0.0);
        assert!(round12(-0.0).is_sign_positive());
        assert_eq!(round12(1e-300 * 1e-300), 0.0);
        assert_eq!(
            round12(std::f64::consts::FRAC_1_SQRT_2).to_string(),
            "0.707106781187"
        );
        assert_eq!(round12(-1.0 / 6f64.sqrt()), -0.408248290464);
        assert_eq!(round12(0.5), 0.5);
    }

    #[test]
    fn labels() {
        assert_eq!(format_label(&[0, 2, 1], 3), "021");
        assert_eq!(parse_label("021", 3, 3).unwrap(), vec![0, 2, 1]);
        assert_eq!(format_label(&[10, 0], 11), "10,0");
        assert_eq!(parse_label("10,0", 2, 11).unwrap(), vec![10, 0]);
        assert!(parse_label("03", 2, 3).is_err());
        assert!(parse_label("0", 2, 3).is_err());
        assert!(parse_label("0x", 2, 3).is_err());
    }

    #[test]
    fn report_round_trips_through_json() {
        let s = graphsym::antisymmetric_state(3, 3).unwrap();
        let r = AmplitudeReport::new("recursive", &s, 1e-9);
        assert_eq!(r.support_size, 6);
        assert_eq!(r.classification, "FullyAntisymmetric");
        let back = AmplitudeReport::from_json(&to_json(&r)).unwrap();
        assert_eq!(back, r);
        assert!(back.to_state().unwrap().approx_eq(&s, 1e-12).unwrap());
    }

    #[test]
    fn inconsistent_support_size_is_rejected() {
        let s = graphsym::StateVector::plus(2).unwrap();
        let mut r = AmplitudeReport::new("cz", &s, 1e-9);
        r.support_size = 3;
        assert!(matches!(r.to_state(), Err(CliError::Report(_))));
    }
}
