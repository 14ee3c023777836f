//! State builders: CZ graph states, the recursive GR antisymmetric state, its
//! combinatorial closed form, the alternator, and GR graph states.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Result};
use crate::gates::Gate;
use crate::graph::{OrientedGraph, UndirectedGraph};
use crate::perm::{factorial, Permutation};
use crate::state::{Amplitude, StateVector};

/// Modular arithmetic used by the shift, Hadamard and GR gates at recursion
/// step `m` (the step that introduces qudit `m`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ModulusSchedule {
    /// Step `m` acts on levels `0..m` (mod `m`, capped at `d`); the state is
    /// embedded into the full `d` levels at the end. Reproduces the
    /// permutation-labelled closed form, where all arithmetic is mod `n`.
    #[default]
    Growing,
    /// Every step acts mod `d` on all `d` levels.
    Fixed,
}

impl ModulusSchedule {
    fn levels_at(self, step: usize, d: usize) -> usize {
        match self {
            ModulusSchedule::Growing => step.min(d),
            ModulusSchedule::Fixed => d,
        }
    }
}

/// `(|01> - |10>)/√2` on two qudits with `levels` levels.
pub fn singlet(levels: usize) -> Result<StateVector> {
    let r = core::f64::consts::FRAC_1_SQRT_2;
    let mut s = StateVector::zeros(2, levels)?;
    let plus = s.index_of(&[0, 1])?;
    let minus = s.index_of(&[1, 0])?;
    s.amplitudes_mut()[plus] = Amplitude::new(r, 0.0);
    s.amplitudes_mut()[minus] = Amplitude::new(-r, 0.0);
    Ok(s)
}

/// `∏_{(a,b)∈E} CZ^(a,b) |+>^{⊗N}`.
pub fn cz_graph_state(g: &UndirectedGraph) -> Result<StateVector> {
    let edges: Vec<_> = g.edges().collect();
    cz_state_from_edges(g.num_vertices(), &edges)
}

/// CZ graph state applying the gates in the given order.
pub fn cz_state_from_edges(vertices: usize, edges: &[(usize, usize)]) -> Result<StateVector> {
    let mut state = StateVector::plus(vertices)?;
    for &(a, b) in edges {
        state.apply_cz(a, b)?;
    }
    Ok(state)
}

/// Appends a fresh qudit `|0>` and applies `H` to it.
fn append_uniform(state: &StateVector) -> Result<StateVector> {
    let levels = state.levels();
    let mut out = state.tensor(&StateVector::basis(1, levels, &[0])?)?;
    let last = out.num_qudits();
    out.apply_hadamard(last)?;
    Ok(out)
}

/// The recursive antisymmetric state `|A_n>` in dimension `d`, with the
/// default [`ModulusSchedule::Growing`].
pub fn antisymmetric_state(n: usize, d: usize) -> Result<StateVector> {
    antisymmetric_state_with(n, d, ModulusSchedule::default())
}

/// `|A_n> = ∏_{i<n} GR^(n,i) (X^{⊗(n-1)} |A_{n-1}> ⊗ H|0>)`, from
/// `|A_2> = (|01> - |10>)/√2`.
pub fn antisymmetric_state_with(
    n: usize,
    d: usize,
    schedule: ModulusSchedule,
) -> Result<StateVector> {
    if n < 2 {
        return Err(domain!("the antisymmetric state needs n >= 2, got {n}"));
    }
    if d < n {
        return Err(domain!("{n} qudits need at least {n} levels, got {d}"));
    }
    crate::state::dimension(n, d)?;
    let mut state = singlet(schedule.levels_at(2, d))?;
    for m in 3..=n {
        state = state.embed_levels(schedule.levels_at(m, d))?;
        for i in 1..m {
            state.apply_shift(i)?;
        }
        state = append_uniform(&state)?;
        for i in 1..m {
            state.apply_gr(m, i)?;
        }
    }
    state.embed_levels(d)
}

/// Direct evaluation of the closed form
/// `n!^{-1/2} Σ_k Σ_{σ∈S_{n-1}} sgn(σ) |k-(σ_0+1)> .. |k-(σ_{n-2}+1)> |k>`
/// with all arithmetic mod `n`.
pub fn oracle_antisymmetric_state(n: usize, d: usize) -> Result<StateVector> {
    if n < 2 {
        return Err(domain!("the closed form needs n >= 2, got {n}"));
    }
    if d != n {
        return Err(domain!(
            "the closed form works mod n and needs d = n, got n = {n}, d = {d}"
        ));
    }
    let mut state = StateVector::zeros(n, d)?;
    let weight = 1.0 / libm::sqrt(factorial(n) as f64);
    let mut label = alloc::vec![0; n];
    for k in 0..n {
        for sigma in Permutation::all(n - 1) {
            for (slot, &s) in label.iter_mut().zip(sigma.images()) {
                *slot = (k + n - (s + 1)) % n;
            }
            label[n - 1] = k;
            let index = state.index_of(&label)?;
            state.amplitudes_mut()[index] +=
                Amplitude::new(weight * f64::from(sigma.signature()), 0.0);
        }
    }
    Ok(state)
}

/// `n!^{-1/2} Σ_{π∈S_n} sgn(π) |π(0) π(1) .. π(n-1)>` in dimension `d`.
pub fn alternator_state(n: usize, d: usize) -> Result<StateVector> {
    if n < 1 {
        return Err(domain!("the alternator needs n >= 1"));
    }
    if d < n {
        return Err(domain!("{n} qudits need at least {n} levels, got {d}"));
    }
    let mut state = StateVector::zeros(n, d)?;
    let weight = 1.0 / libm::sqrt(factorial(n) as f64);
    for pi in Permutation::all(n) {
        let index = state.index_of(pi.images())?;
        state.amplitudes_mut()[index] = Amplitude::new(weight * f64::from(pi.signature()), 0.0);
    }
    Ok(state)
}

/// One recorded step of a GR graph-state construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    /// Two-qudit base state: `(|01> - |10>)/√2` if the first two vertices are
    /// joined, `|00>` otherwise.
    Prepare {
        joined: bool,
        levels: usize,
    },
    /// Re-express the state on more levels.
    Embed {
        levels: usize,
    },
    /// Tensor a fresh `|0>` onto the right.
    Append,
    Gate(Gate),
}

impl TraceStep {
    pub fn name(&self) -> &'static str {
        match self {
            TraceStep::Prepare { joined: true, .. } => "prepare_singlet",
            TraceStep::Prepare { joined: false, .. } => "prepare_zero",
            TraceStep::Embed { .. } => "embed",
            TraceStep::Append => "append_zero",
            TraceStep::Gate(Gate::Cz(..)) => "CZ",
            TraceStep::Gate(Gate::Hadamard(_)) => "H",
            TraceStep::Gate(Gate::Shift(_)) => "X",
            TraceStep::Gate(Gate::Gr { .. }) => "GR",
            TraceStep::Gate(Gate::Permute(_)) => "P",
        }
    }

    /// Qudit indices the step touches (1-based), control first for GR.
    pub fn qudits(&self) -> Vec<usize> {
        match self {
            TraceStep::Prepare { .. } => alloc::vec![1, 2],
            TraceStep::Embed { .. } | TraceStep::Append => Vec::new(),
            TraceStep::Gate(Gate::Cz(a, b)) => alloc::vec![*a, *b],
            TraceStep::Gate(Gate::Hadamard(k)) | TraceStep::Gate(Gate::Shift(k)) => alloc::vec![*k],
            TraceStep::Gate(Gate::Gr { control, target }) => alloc::vec![*control, *target],
            TraceStep::Gate(Gate::Permute(p)) => p.images().iter().map(|x| x + 1).collect(),
        }
    }

    /// Level count after the step, where it changes.
    pub fn levels(&self) -> Option<usize> {
        match self {
            TraceStep::Prepare { levels, .. } | TraceStep::Embed { levels } => Some(*levels),
            _ => None,
        }
    }
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceStep::Prepare { joined, levels } => {
                let what = if *joined { "singlet" } else { "|00>" };
                write!(f, "prepare {what} (d={levels})")
            }
            TraceStep::Embed { levels } => write!(f, "embed d={levels}"),
            TraceStep::Append => f.write_str("append |0>"),
            TraceStep::Gate(g) => write!(f, "{g}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
}

impl ConstructionTrace {
    /// Re-executes the steps from scratch. The first step must be a
    /// `Prepare`.
    pub fn replay(&self) -> Result<StateVector> {
        let mut steps = self.steps.iter();
        let mut state = match steps.next() {
            Some(TraceStep::Prepare {
                joined: true,
                levels,
            }) => singlet(*levels)?,
            Some(TraceStep::Prepare {
                joined: false,
                levels,
            }) => StateVector::basis(2, *levels, &[0, 0])?,
            _ => return Err(domain!("a trace must start with a prepare step")),
        };
        for step in steps {
            match step {
                TraceStep::Prepare { .. } => {
                    return Err(domain!("prepare step in the middle of a trace"))
                }
                TraceStep::Embed { levels } => state = state.embed_levels(*levels)?,
                TraceStep::Append => {
                    state = state.tensor(&StateVector::basis(1, state.levels(), &[0])?)?;
                }
                TraceStep::Gate(g) => state.apply(g)?,
            }
        }
        Ok(state)
    }
}

/// Result of [`gr_graph_state`].
#[derive(Debug, Clone, PartialEq)]
pub struct GrGraphState {
    pub state: StateVector,
    pub trace: ConstructionTrace,
    /// Set when the graph is complete but `d < N`, so the levels cannot hold
    /// `N` distinct values.
    pub insufficient_levels: bool,
}

/// GR graph state with the default [`ModulusSchedule::Growing`].
pub fn gr_graph_state(g: &OrientedGraph, d: usize) -> Result<GrGraphState> {
    gr_graph_state_with(g, d, ModulusSchedule::default())
}

/// Builds the state of an oriented graph by adding vertices in index order.
///
/// At step `n` (vertex `n` with earlier neighbours `N`): shift every qudit in
/// `N`, append `H|0>` as qudit `n`, then apply one GR per edge, oriented by
/// its origin, in ascending `(target, control)` order. A vertex without
/// earlier neighbours is appended as `|0>`.
pub fn gr_graph_state_with(
    g: &OrientedGraph,
    d: usize,
    schedule: ModulusSchedule,
) -> Result<GrGraphState> {
    if d < 2 {
        return Err(domain!("levels must be at least 2, got {d}"));
    }
    let n = g.num_vertices();
    crate::state::dimension(n, d)?;

    let mut trace = ConstructionTrace::default();
    let joined = g.edge_between(1, 2).is_some();
    let base_levels = schedule.levels_at(2, d);
    trace.steps.push(TraceStep::Prepare {
        joined,
        levels: base_levels,
    });
    let mut state = if joined {
        singlet(base_levels)?
    } else {
        StateVector::basis(2, base_levels, &[0, 0])?
    };

    for m in 3..=n {
        let levels = schedule.levels_at(m, d);
        if levels != state.levels() {
            state = state.embed_levels(levels)?;
            trace.steps.push(TraceStep::Embed { levels });
        }
        let earlier: Vec<usize> = g.neighbors(m)?.into_iter().filter(|&v| v < m).collect();
        if earlier.is_empty() {
            state = state.tensor(&StateVector::basis(1, levels, &[0])?)?;
            trace.steps.push(TraceStep::Append);
            continue;
        }
        for &v in &earlier {
            state.apply_shift(v)?;
            trace.steps.push(TraceStep::Gate(Gate::Shift(v)));
        }
        state = append_uniform(&state)?;
        trace.steps.push(TraceStep::Append);
        trace.steps.push(TraceStep::Gate(Gate::Hadamard(m)));

        let mut gates: Vec<(usize, usize)> = earlier
            .iter()
            .map(|&v| match g.edge_between(m, v) {
                Some((origin, _)) if origin == m => (m, v),
                _ => (v, m),
            })
            .collect();
        gates.sort_by_key(|&(control, target)| (target, control));
        for (control, target) in gates {
            state.apply_gr(control, target)?;
            trace
                .steps
                .push(TraceStep::Gate(Gate::Gr { control, target }));
        }
    }

    if state.levels() != d {
        state = state.embed_levels(d)?;
        trace.steps.push(TraceStep::Embed { levels: d });
    }
    Ok(GrGraphState {
        state,
        trace,
        insufficient_levels: g.is_complete() && d < n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(re: f64) -> Amplitude {
        Amplitude::new(re, 0.0)
    }

    /// State with the given signed basis terms, all of weight `w`.
    fn signed(n: usize, d: usize, w: f64, plus: &[&[usize]], minus: &[&[usize]]) -> StateVector {
        let mut s = StateVector::zeros(n, d).unwrap();
        for l in plus {
            let i = s.index_of(l).unwrap();
            s.amplitudes_mut()[i] = c(w);
        }
        for l in minus {
            let i = s.index_of(l).unwrap();
            s.amplitudes_mut()[i] = c(-w);
        }
        s
    }

    fn all_qubit_labels(n: usize) -> Vec<Vec<usize>> {
        (0..1 << n)
            .map(|i| crate::state::basis_label(i, n, 2))
            .collect()
    }

    /// Every label not in `minus` gets `+w`.
    fn qubit_state(n: usize, minus: &[&[usize]]) -> StateVector {
        let w = 1.0 / libm::sqrt((1u32 << n) as f64);
        let labels = all_qubit_labels(n);
        let plus: Vec<&[usize]> = labels
            .iter()
            .map(|l| l.as_slice())
            .filter(|l| !minus.contains(l))
            .collect();
        signed(n, 2, w, &plus, minus)
    }

    #[test]
    fn cz_h1_and_h2() {
        let h1 = UndirectedGraph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        let expected = qubit_state(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(cz_graph_state(&h1)
            .unwrap()
            .approx_eq(&expected, 1e-12)
            .unwrap());

        let h2 = UndirectedGraph::from_edges(3, [(1, 2)]).unwrap();
        let expected = qubit_state(3, &[&[1, 1, 0], &[1, 1, 1]]);
        assert!(cz_graph_state(&h2)
            .unwrap()
            .approx_eq(&expected, 1e-12)
            .unwrap());

        let empty = UndirectedGraph::new(2).unwrap();
        let pp = StateVector::plus(1)
            .unwrap()
            .tensor(&StateVector::plus(1).unwrap())
            .unwrap();
        assert!(cz_graph_state(&empty)
            .unwrap()
            .approx_eq(&pp, 1e-15)
            .unwrap());
    }

    #[test]
    fn antisymmetric_small_cases() {
        let r = core::f64::consts::FRAC_1_SQRT_2;
        let a2 = antisymmetric_state(2, 2).unwrap();
        assert_eq!(a2, signed(2, 2, r, &[&[0, 1]], &[&[1, 0]]));

        let w = 1.0 / libm::sqrt(6.0);
        let a3 = antisymmetric_state(3, 3).unwrap();
        let expected = signed(
            3,
            3,
            w,
            &[&[2, 1, 0], &[0, 2, 1], &[1, 0, 2]],
            &[&[1, 2, 0], &[2, 0, 1], &[0, 1, 2]],
        );
        assert!(a3.approx_eq(&expected, 1e-12).unwrap());
        assert!(antisymmetric_state(4, 3).is_err());
        assert!(antisymmetric_state(1, 3).is_err());
    }

    #[test]
    fn antisymmetric_embeds_for_larger_d() {
        let a3 = antisymmetric_state(3, 3).unwrap();
        let a3_in_5 = antisymmetric_state(3, 5).unwrap();
        assert_eq!(a3_in_5, a3.embed_levels(5).unwrap());
    }

    #[test]
    fn fixed_schedule_leaves_permutation_support() {
        // all-mod-d arithmetic produces 32 terms at n = d = 4, not 4! = 24
        let fixed = antisymmetric_state_with(4, 4, ModulusSchedule::Fixed).unwrap();
        assert_eq!(fixed.support(1e-12).count(), 32);
        let growing = antisymmetric_state(4, 4).unwrap();
        assert_eq!(growing.support(1e-12).count(), 24);
        // the two schedules agree while n = d = 3
        assert_eq!(
            antisymmetric_state_with(3, 3, ModulusSchedule::Fixed).unwrap(),
            antisymmetric_state(3, 3).unwrap()
        );
    }

    #[test]
    fn oracle_small_cases() {
        // n = 2, hand evaluation: k = 0 gives |1 0>, k = 1 gives |0 1>, both with sgn(id) = +1
        let r = core::f64::consts::FRAC_1_SQRT_2;
        let o2 = oracle_antisymmetric_state(2, 2).unwrap();
        assert!(o2
            .approx_eq(&signed(2, 2, r, &[&[0, 1], &[1, 0]], &[]), 1e-15)
            .unwrap());

        let o5 = oracle_antisymmetric_state(5, 5).unwrap();
        let support: Vec<_> = o5.support(1e-12).collect();
        assert_eq!(support.len(), 120);
        let w = 1.0 / libm::sqrt(120.0);
        assert!(support.iter().all(|(_, a)| (a.norm() - w).abs() < 1e-15));
        assert!(oracle_antisymmetric_state(3, 4).is_err());
    }

    #[test]
    fn alternator_cases() {
        let r = core::f64::consts::FRAC_1_SQRT_2;
        let a2 = alternator_state(2, 2).unwrap();
        assert!(a2
            .approx_eq(&signed(2, 2, r, &[&[0, 1]], &[&[1, 0]]), 1e-15)
            .unwrap());
        let a34 = alternator_state(3, 4).unwrap();
        let a33 = alternator_state(3, 3).unwrap();
        assert_eq!(a34.support(0.0).count(), 6);
        assert_eq!(a34, a33.embed_levels(4).unwrap());
        assert!(alternator_state(4, 3).is_err());
    }

    #[test]
    fn gr_worked_examples() {
        let r = core::f64::consts::FRAC_1_SQRT_2;
        let g2 = OrientedGraph::from_edges(2, [(2, 1)]).unwrap();
        let built = gr_graph_state(&g2, 3).unwrap();
        assert_eq!(built.state, signed(2, 3, r, &[&[0, 1]], &[&[1, 0]]));

        let w = 1.0 / libm::sqrt(6.0);
        let one_edge = OrientedGraph::from_edges(3, [(2, 1), (3, 1)]).unwrap();
        let built = gr_graph_state(&one_edge, 3).unwrap();
        let expected = signed(
            3,
            3,
            w,
            &[&[2, 1, 0], &[0, 1, 1], &[1, 1, 2]],
            &[&[1, 0, 0], &[2, 0, 1], &[0, 0, 2]],
        );
        assert!(built.state.approx_eq(&expected, 1e-12).unwrap());
        assert!(!built.insufficient_levels);

        let complete = OrientedGraph::from_edges(3, [(2, 1), (3, 1), (3, 2)]).unwrap();
        let built = gr_graph_state(&complete, 3).unwrap();
        let expected = signed(
            3,
            3,
            w,
            &[&[2, 1, 0], &[0, 2, 1], &[1, 0, 2]],
            &[&[1, 2, 0], &[2, 0, 1], &[0, 1, 2]],
        );
        assert!(built.state.approx_eq(&expected, 1e-12).unwrap());
    }

    #[test]
    fn gr_base_cases_and_isolated_vertices() {
        let empty = OrientedGraph::new(3).unwrap();
        let built = gr_graph_state(&empty, 3).unwrap();
        assert_eq!(built.state, StateVector::basis(3, 3, &[0, 0, 0]).unwrap());

        // 1->2 orientation gets the same base state
        let g = OrientedGraph::from_edges(2, [(1, 2)]).unwrap();
        assert_eq!(gr_graph_state(&g, 2).unwrap().state, singlet(2).unwrap());

        // vertex 3 isolated: Γ_3 = Γ_2 ⊗ |0>
        let g = OrientedGraph::from_edges(3, [(2, 1)]).unwrap();
        let built = gr_graph_state(&g, 3).unwrap();
        let expected = singlet(3)
            .unwrap()
            .tensor(&StateVector::basis(1, 3, &[0]).unwrap())
            .unwrap();
        assert_eq!(built.state, expected);
    }

    #[test]
    fn mixed_orientation_trace_order() {
        // vertex 3 is the target of 1->3 and the origin of 3->2
        let g = OrientedGraph::from_edges(3, [(1, 3), (3, 2)]).unwrap();
        let built = gr_graph_state(&g, 3).unwrap();
        let gates: Vec<String> = built
            .trace
            .steps
            .iter()
            .filter(|s| s.name() == "GR")
            .map(|s| alloc::format!("{s}"))
            .collect();
        assert_eq!(gates, vec!["GR(3,2)", "GR(1,3)"]);
        assert_eq!(built.trace.replay().unwrap(), built.state);
        assert!((built.state.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn warning_flag() {
        let g = OrientedGraph::complete_hierarchical(4).unwrap();
        assert!(gr_graph_state(&g, 3).unwrap().insufficient_levels);
        assert!(!gr_graph_state(&g, 4).unwrap().insufficient_levels);
        let path = OrientedGraph::from_edges(4, [(2, 1), (3, 2), (4, 3)]).unwrap();
        assert!(!gr_graph_state(&path, 2).unwrap().insufficient_levels);
    }

    #[test]
    fn replay_rejects_malformed_traces() {
        assert!(ConstructionTrace::default().replay().is_err());
        let t = ConstructionTrace {
            steps: vec![TraceStep::Append],
        };
        assert!(t.replay().is_err());
    }

    use alloc::string::String;
}
