//! Dense state vectors over `n` qudits with `d` levels each.
//!
//! A basis label `(k1, k2, ..., kn)` lists qudit 1 first and maps to the flat
//! index `sum_i k_i * d^(n - i)`, so qudit 1 is the most significant digit.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{domain, Error, Result, MAX_AMPLITUDES};

pub type Amplitude = Complex64;

/// Default tolerance for amplitude comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Number of amplitudes needed for `qudits` qudits of `levels` levels,
/// rejecting shapes above [`MAX_AMPLITUDES`].
pub fn dimension(qudits: usize, levels: usize) -> Result<usize> {
    if qudits == 0 {
        return Err(domain!("a state needs at least one qudit"));
    }
    if levels < 2 {
        return Err(domain!("levels must be at least 2, got {levels}"));
    }
    let mut total: u128 = 1;
    for _ in 0..qudits {
        total = total.saturating_mul(levels as u128);
        if total > MAX_AMPLITUDES as u128 {
            let requested = (levels as u128)
                .checked_pow(qudits.min(u32::MAX as usize) as u32)
                .unwrap_or(u128::MAX);
            return Err(Error::Capacity {
                what: "amplitudes",
                requested,
                limit: MAX_AMPLITUDES as u128,
            });
        }
    }
    Ok(total as usize)
}

/// Flat index of a basis label, checking every digit against `levels`.
pub fn flat_index(label: &[usize], levels: usize) -> Result<usize> {
    let mut index = 0usize;
    for (pos, &digit) in label.iter().enumerate() {
        if digit >= levels {
            return Err(domain!(
                "digit {digit} of qudit {} is out of range for {levels} levels",
                pos + 1
            ));
        }
        index = index * levels + digit;
    }
    Ok(index)
}

/// Inverse of [`flat_index`].
pub fn basis_label(mut index: usize, qudits: usize, levels: usize) -> Vec<usize> {
    let mut label = vec![0; qudits];
    for slot in label.iter_mut().rev() {
        *slot = index % levels;
        index /= levels;
    }
    label
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    qudits: usize,
    levels: usize,
    amps: Vec<Amplitude>,
}

impl StateVector {
    /// The all-zero vector (not a physical state); starting point for builders.
    pub fn zeros(qudits: usize, levels: usize) -> Result<Self> {
        let len = dimension(qudits, levels)?;
        Ok(StateVector {
            qudits,
            levels,
            amps: vec![Amplitude::new(0.0, 0.0); len],
        })
    }

    pub fn from_amplitudes(qudits: usize, levels: usize, amps: Vec<Amplitude>) -> Result<Self> {
        let len = dimension(qudits, levels)?;
        if amps.len() != len {
            return Err(domain!(
                "{qudits} qudits of {levels} levels need {len} amplitudes, got {}",
                amps.len()
            ));
        }
        if let Some(pos) = amps
            .iter()
            .position(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(domain!("amplitude at index {pos} is not finite"));
        }
        Ok(StateVector {
            qudits,
            levels,
            amps,
        })
    }

    /// Computational basis state `|label>`.
    pub fn basis(qudits: usize, levels: usize, label: &[usize]) -> Result<Self> {
        if label.len() != qudits {
            return Err(domain!(
                "label has {} digits but the state has {qudits} qudits",
                label.len()
            ));
        }
        let index = flat_index(label, levels)?;
        let mut state = Self::zeros(qudits, levels)?;
        state.amps[index] = Amplitude::new(1.0, 0.0);
        Ok(state)
    }

    /// `|+>^{⊗n}` on qubits.
    pub fn plus(qudits: usize) -> Result<Self> {
        let len = dimension(qudits, 2)?;
        let a = 1.0 / libm::sqrt(len as f64);
        Ok(StateVector {
            qudits,
            levels: 2,
            amps: vec![Amplitude::new(a, 0.0); len],
        })
    }

    pub fn num_qudits(&self) -> usize {
        self.qudits
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Amplitude] {
        &mut self.amps
    }

    pub(crate) fn replace_amplitudes(&mut self, amps: Vec<Amplitude>) {
        debug_assert_eq!(amps.len(), self.amps.len());
        self.amps = amps;
    }

    pub fn index_of(&self, label: &[usize]) -> Result<usize> {
        if label.len() != self.qudits {
            return Err(domain!(
                "label has {} digits but the state has {} qudits",
                label.len(),
                self.qudits
            ));
        }
        flat_index(label, self.levels)
    }

    pub fn label_of(&self, index: usize) -> Vec<usize> {
        basis_label(index, self.qudits, self.levels)
    }

    pub fn amplitude(&self, label: &[usize]) -> Result<Amplitude> {
        Ok(self.amps[self.index_of(label)?])
    }

    /// Nonzero entries (magnitude above `threshold`) in ascending index order.
    pub fn support(&self, threshold: f64) -> impl Iterator<Item = (usize, Amplitude)> + '_ {
        self.amps
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.norm_sqr() > threshold * threshold)
            .map(|(i, a)| (i, *a))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// Scales to unit norm. Fails on the zero vector.
    pub fn normalize(&mut self) -> Result<()> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(domain!("cannot normalize the zero vector"));
        }
        for a in &mut self.amps {
            *a /= norm;
        }
        Ok(())
    }

    pub fn scaled(&self, factor: Amplitude) -> Self {
        StateVector {
            qudits: self.qudits,
            levels: self.levels,
            amps: self.amps.iter().map(|a| a * factor).collect(),
        }
    }

    /// `self ⊗ other`, with the qudits of `self` first.
    pub fn tensor(&self, other: &StateVector) -> Result<Self> {
        if self.levels != other.levels {
            return Err(domain!(
                "cannot tensor states with {} and {} levels",
                self.levels,
                other.levels
            ));
        }
        let qudits = self.qudits + other.qudits;
        dimension(qudits, self.levels)?;
        let amps = self
            .amps
            .iter()
            .flat_map(|a| other.amps.iter().map(move |b| a * b))
            .collect();
        Ok(StateVector {
            qudits,
            levels: self.levels,
            amps,
        })
    }

    fn check_shape(&self, other: &StateVector) -> Result<()> {
        if self.qudits != other.qudits || self.levels != other.levels {
            return Err(domain!(
                "shape mismatch: ({} qudits, {} levels) vs ({} qudits, {} levels)",
                self.qudits,
                self.levels,
                other.qudits,
                other.levels
            ));
        }
        Ok(())
    }

    /// `<self|other>`, conjugating `self`.
    pub fn inner(&self, other: &StateVector) -> Result<Amplitude> {
        self.check_shape(other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|<self|other>|`.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        Ok(self.inner(other)?.norm())
    }

    /// Largest componentwise distance `|a_i - b_i|`.
    pub fn max_abs_diff(&self, other: &StateVector) -> Result<f64> {
        self.check_shape(other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Phase-sensitive equality: every component within `tol`.
    pub fn approx_eq(&self, other: &StateVector, tol: f64) -> Result<bool> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(domain!("tolerance must be positive, got {tol}"));
        }
        Ok(self.max_abs_diff(other)? <= tol)
    }

    /// Equality up to a global phase: `|<self|other>| >= 1 - tol` for unit vectors.
    pub fn eq_up_to_global_phase(&self, other: &StateVector, tol: f64) -> Result<bool> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(domain!("tolerance must be positive, got {tol}"));
        }
        Ok(self.fidelity(other)? >= 1.0 - tol)
    }

    /// Re-expresses the state on qudits with `levels` levels, keeping each digit.
    pub fn embed_levels(&self, levels: usize) -> Result<Self> {
        if levels < self.levels {
            return Err(domain!("cannot embed {} levels into {levels}", self.levels));
        }
        if levels == self.levels {
            return Ok(self.clone());
        }
        let mut out = Self::zeros(self.qudits, levels)?;
        for (index, amp) in self.amps.iter().enumerate() {
            if *amp == Amplitude::new(0.0, 0.0) {
                continue;
            }
            let label = self.label_of(index);
            let target = flat_index(&label, levels)?;
            out.amps[target] = *amp;
        }
        Ok(out)
    }
}
