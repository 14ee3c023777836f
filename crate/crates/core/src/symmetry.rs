//! Exchange-symmetry classification.
//!
//! A state is bosonic if `P_σ ψ = ψ` and fermionic if `P_σ ψ = sgn(σ) ψ` for
//! every `σ ∈ S_n`. Both conditions are multiplicative under composition, so
//! checking the adjacent transpositions `(i, i+1)` suffices; the full-group
//! check exists to cross-validate that shortcut.

use core::fmt;

use crate::error::{Error, Result};
use crate::perm::{factorial, Permutation};
use crate::state::StateVector;

/// Largest group order [`check_full_group`] will iterate over.
pub const MAX_GROUP_ORDER: u128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryClass {
    FullySymmetric,
    FullyAntisymmetric,
    /// Antisymmetric under permutations of qudits `1..=k` (maximal `k`, at
    /// least 2), but not fully antisymmetric.
    AntisymmetricOnPrefix(usize),
    NoSymmetry,
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryClass::FullySymmetric => f.write_str("FullySymmetric"),
            SymmetryClass::FullyAntisymmetric => f.write_str("FullyAntisymmetric"),
            SymmetryClass::AntisymmetricOnPrefix(k) => write!(f, "AntisymmetricOnPrefix({k})"),
            SymmetryClass::NoSymmetry => f.write_str("NoSymmetry"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exchange {
    /// `P_σ ψ = ψ`
    Bosonic,
    /// `P_σ ψ = sgn(σ) ψ`
    Fermionic,
}

/// Whether `P_σ ψ` matches the exchange condition within `tol`.
pub fn satisfies(state: &StateVector, p: &Permutation, exchange: Exchange, tol: f64) -> bool {
    let mut moved = state.clone();
    if moved.apply_permutation(p).is_err() {
        return false;
    }
    let sign = match exchange {
        Exchange::Bosonic => 1.0,
        Exchange::Fermionic => f64::from(p.signature()),
    };
    moved
        .amplitudes()
        .iter()
        .zip(state.amplitudes())
        .all(|(m, a)| (m - a * sign).norm() <= tol)
}

fn adjacent(n: usize, i: usize) -> Permutation {
    Permutation::transposition(n, i, i + 1).expect("adjacent transposition in range")
}

/// First adjacent transposition violating `exchange`, if any.
pub fn find_violation(state: &StateVector, exchange: Exchange, tol: f64) -> Option<Permutation> {
    let n = state.num_qudits();
    (0..n.saturating_sub(1))
        .map(|i| adjacent(n, i))
        .find(|t| !satisfies(state, t, exchange, tol))
}

pub fn is_symmetric(state: &StateVector, tol: f64) -> bool {
    find_violation(state, Exchange::Bosonic, tol).is_none()
}

pub fn is_antisymmetric(state: &StateVector, tol: f64) -> bool {
    find_violation(state, Exchange::Fermionic, tol).is_none()
}

/// Classifies using adjacent transpositions only.
pub fn classify(state: &StateVector, tol: f64) -> SymmetryClass {
    if is_symmetric(state, tol) {
        return SymmetryClass::FullySymmetric;
    }
    let n = state.num_qudits();
    // transpositions (0 1), (1 2), ... until the first that fails
    let negated = (0..n - 1)
        .take_while(|&i| satisfies(state, &adjacent(n, i), Exchange::Fermionic, tol))
        .count();
    if negated == n - 1 {
        SymmetryClass::FullyAntisymmetric
    } else if negated >= 1 {
        SymmetryClass::AntisymmetricOnPrefix(negated + 1)
    } else {
        SymmetryClass::NoSymmetry
    }
}

/// Permutation of `0..n` acting as `p` on the first `k` positions.
fn extend(p: &Permutation, n: usize) -> Permutation {
    let mut images = p.images().to_vec();
    images.extend(p.len()..n);
    Permutation::new(images).expect("extension of a permutation is a permutation")
}

/// Classifies by testing every permutation of the group (and of each prefix
/// subgroup), independently of [`classify`].
pub fn check_full_group(state: &StateVector, tol: f64) -> Result<SymmetryClass> {
    let n = state.num_qudits();
    let order = factorial(n);
    if order > MAX_GROUP_ORDER {
        return Err(Error::Capacity {
            what: "permutations",
            requested: order,
            limit: MAX_GROUP_ORDER,
        });
    }
    if Permutation::all(n).all(|p| satisfies(state, &p, Exchange::Bosonic, tol)) {
        return Ok(SymmetryClass::FullySymmetric);
    }
    for k in (2..=n).rev() {
        let holds =
            Permutation::all(k).all(|p| satisfies(state, &extend(&p, n), Exchange::Fermionic, tol));
        if holds {
            return Ok(if k == n {
                SymmetryClass::FullyAntisymmetric
            } else {
                SymmetryClass::AntisymmetricOnPrefix(k)
            });
        }
    }
    Ok(SymmetryClass::NoSymmetry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{antisymmetric_state, cz_graph_state, gr_graph_state};
    use crate::graph::{OrientedGraph, UndirectedGraph};
    use crate::state::DEFAULT_TOL;

    #[test]
    fn symmetric_examples() {
        let k3 = cz_graph_state(&UndirectedGraph::complete(3).unwrap()).unwrap();
        assert!(is_symmetric(&k3, DEFAULT_TOL));
        let h1 =
            cz_graph_state(&UndirectedGraph::from_edges(3, [(1, 2), (2, 3)]).unwrap()).unwrap();
        assert!(!is_symmetric(&h1, DEFAULT_TOL));
        let zero = StateVector::basis(4, 3, &[0; 4]).unwrap();
        assert!(is_symmetric(&zero, DEFAULT_TOL));
    }

    #[test]
    fn antisymmetric_examples() {
        assert!(is_antisymmetric(
            &antisymmetric_state(3, 3).unwrap(),
            DEFAULT_TOL
        ));
        assert!(!is_antisymmetric(
            &antisymmetric_state(4, 4).unwrap(),
            DEFAULT_TOL
        ));
        let k3 = cz_graph_state(&UndirectedGraph::complete(3).unwrap()).unwrap();
        assert!(!is_antisymmetric(&k3, DEFAULT_TOL));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify(&antisymmetric_state(4, 4).unwrap(), DEFAULT_TOL),
            SymmetryClass::AntisymmetricOnPrefix(3)
        );
        let g = OrientedGraph::from_edges(3, [(2, 1), (3, 1)]).unwrap();
        let one_edge = gr_graph_state(&g, 3).unwrap().state;
        assert_eq!(classify(&one_edge, DEFAULT_TOL), SymmetryClass::NoSymmetry);
        assert_eq!(
            classify(&StateVector::plus(3).unwrap(), DEFAULT_TOL),
            SymmetryClass::FullySymmetric
        );
        // a single qudit is vacuously symmetric
        assert_eq!(
            classify(&StateVector::basis(1, 2, &[1]).unwrap(), DEFAULT_TOL),
            SymmetryClass::FullySymmetric
        );
    }

    #[test]
    fn full_group_examples() {
        assert_eq!(
            check_full_group(&antisymmetric_state(3, 3).unwrap(), DEFAULT_TOL).unwrap(),
            SymmetryClass::FullyAntisymmetric
        );
        let k4 = cz_graph_state(&UndirectedGraph::complete(4).unwrap()).unwrap();
        assert_eq!(
            check_full_group(&k4, DEFAULT_TOL).unwrap(),
            SymmetryClass::FullySymmetric
        );
        let big = StateVector::zeros(10, 2).unwrap();
        assert!(matches!(
            check_full_group(&big, DEFAULT_TOL),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn violation_reports_first_failing_transposition() {
        let h1 =
            cz_graph_state(&UndirectedGraph::from_edges(3, [(1, 2), (2, 3)]).unwrap()).unwrap();
        let t = find_violation(&h1, Exchange::Bosonic, DEFAULT_TOL).unwrap();
        assert_eq!(t.images(), &[1, 0, 2]);
    }
}
