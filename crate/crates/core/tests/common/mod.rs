#![allow(dead_code)]

use graphsym::{Amplitude, Permutation, StateVector};
use proptest::prelude::*;

/// Normalized random state with the given shape.
pub fn state_with_shape(n: usize, d: usize) -> impl Strategy<Value = StateVector> {
    let len = d.pow(n as u32);
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), len)
        .prop_filter("nonzero", |v| {
            v.iter().any(|(r, i)| r.abs() + i.abs() > 1e-3)
        })
        .prop_map(move |v| {
            let amps = v.into_iter().map(|(r, i)| Amplitude::new(r, i)).collect();
            let mut s = StateVector::from_amplitudes(n, d, amps).unwrap();
            s.normalize().unwrap();
            s
        })
}

/// Random state with `n <= 4` qudits of `d <= 4` levels.
pub fn any_state() -> impl Strategy<Value = StateVector> {
    (1usize..=4, 2usize..=4).prop_flat_map(|(n, d)| state_with_shape(n, d))
}

pub fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// Amplitudes sorted by (re, im), for multiset comparison.
pub fn sorted_amplitudes(s: &StateVector) -> Vec<(f64, f64)> {
    let mut v: Vec<(f64, f64)> = s.amplitudes().iter().map(|a| (a.re, a.im)).collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}
