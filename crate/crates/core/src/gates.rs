//! Matrix-free gate kernels.
//!
//! Qudit positions are 1-based (vertex labels); permutations act on 0-based
//! positions. Every gate here is diagonal or a basis permutation, except the
//! generalized Hadamard which mixes the `d` amplitudes of one qudit fibre.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::error::{domain, Result};
use crate::perm::Permutation;
use crate::state::{Amplitude, StateVector};

/// A single gate application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gate {
    /// Controlled-Z on two qubits.
    Cz(usize, usize),
    /// Generalized Hadamard `H_d`.
    Hadamard(usize),
    /// Cyclic shift `X_d |k> = |k+1 mod d>`.
    Shift(usize),
    /// `GR^(control, target)`: target digit becomes `control - target mod d`.
    Gr { control: usize, target: usize },
    /// Subsystem permutation `P_σ`.
    Permute(Permutation),
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Cz(a, b) => write!(f, "CZ({a},{b})"),
            Gate::Hadamard(k) => write!(f, "H({k})"),
            Gate::Shift(k) => write!(f, "X({k})"),
            Gate::Gr { control, target } => write!(f, "GR({control},{target})"),
            Gate::Permute(p) => write!(f, "P{p}"),
        }
    }
}

/// `ω^t` for `ω = e^{2πi/d}`, exact on the real and imaginary axes.
pub fn root_of_unity(t: usize, d: usize) -> Amplitude {
    let t = t % d;
    match (4 * t) % (4 * d) {
        0 => return Amplitude::new(1.0, 0.0),
        x if x == d => return Amplitude::new(0.0, 1.0),
        x if x == 2 * d => return Amplitude::new(-1.0, 0.0),
        x if x == 3 * d => return Amplitude::new(0.0, -1.0),
        _ => {}
    }
    let angle = 2.0 * PI * t as f64 / d as f64;
    Amplitude::new(libm::cos(angle), libm::sin(angle))
}

impl StateVector {
    /// Index stride of qudit `k` (1-based).
    fn stride(&self, k: usize) -> Result<usize> {
        let n = self.num_qudits();
        if k == 0 || k > n {
            return Err(domain!("qudit {k} out of range 1..={n}"));
        }
        Ok(self.levels().pow((n - k) as u32))
    }

    /// Moves amplitude `i` to `map(i)`; `map` must be a bijection.
    fn permute_basis(&mut self, map: impl Fn(usize) -> usize) {
        let old = self.amplitudes();
        let mut new = alloc::vec![Amplitude::new(0.0, 0.0); old.len()];
        for (i, a) in old.iter().enumerate() {
            new[map(i)] = *a;
        }
        self.replace_amplitudes(new);
    }

    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        match gate {
            Gate::Cz(a, b) => self.apply_cz(*a, *b),
            Gate::Hadamard(k) => self.apply_hadamard(*k),
            Gate::Shift(k) => self.apply_shift(*k),
            Gate::Gr { control, target } => self.apply_gr(*control, *target),
            Gate::Permute(p) => self.apply_permutation(p),
        }
    }

    /// Negates every amplitude whose digits at `a` and `b` are both 1.
    pub fn apply_cz(&mut self, a: usize, b: usize) -> Result<()> {
        if self.levels() != 2 {
            return Err(domain!(
                "CZ is defined on qubits only, got {} levels",
                self.levels()
            ));
        }
        if a == b {
            return Err(domain!("CZ needs two distinct qubits, got ({a},{b})"));
        }
        let mask = self.stride(a)? | self.stride(b)?;
        for (i, amp) in self.amplitudes_mut().iter_mut().enumerate() {
            if i & mask == mask {
                *amp = -*amp;
            }
        }
        Ok(())
    }

    /// `H_d |j> = d^{-1/2} Σ_m ω^{jm} |m>` on qudit `k`.
    pub fn apply_hadamard(&mut self, k: usize) -> Result<()> {
        let stride = self.stride(k)?;
        let d = self.levels();
        let scale = 1.0 / libm::sqrt(d as f64);
        let roots: Vec<Amplitude> = (0..d).map(|t| root_of_unity(t, d)).collect();
        let block = stride * d;
        let amps = self.amplitudes_mut();
        let mut fibre = alloc::vec![Amplitude::new(0.0, 0.0); d];
        for outer in (0..amps.len()).step_by(block) {
            for inner in 0..stride {
                let base = outer + inner;
                for (j, slot) in fibre.iter_mut().enumerate() {
                    *slot = amps[base + j * stride];
                }
                for m in 0..d {
                    let mut acc = Amplitude::new(0.0, 0.0);
                    for (j, v) in fibre.iter().enumerate() {
                        acc += roots[(j * m) % d] * v;
                    }
                    amps[base + m * stride] = acc * scale;
                }
            }
        }
        Ok(())
    }

    /// `X_d` on qudit `k`: digit `k` goes to `digit + 1 mod d`.
    pub fn apply_shift(&mut self, k: usize) -> Result<()> {
        let stride = self.stride(k)?;
        let d = self.levels();
        self.permute_basis(|i| {
            let digit = (i / stride) % d;
            if digit + 1 == d {
                i - digit * stride
            } else {
                i + stride
            }
        });
        Ok(())
    }

    /// `GR^(l,k) |i>_k |j>_l = |j ⊖ i>_k |j>_l` with subtraction mod `d`.
    pub fn apply_gr(&mut self, control: usize, target: usize) -> Result<()> {
        if control == target {
            return Err(domain!(
                "GR needs distinct qudits, got ({control},{target})"
            ));
        }
        let sc = self.stride(control)?;
        let st = self.stride(target)?;
        let d = self.levels();
        self.permute_basis(|i| {
            let j = (i / sc) % d;
            let t = (i / st) % d;
            let new = (j + d - t) % d;
            i - t * st + new * st
        });
        Ok(())
    }

    /// `P_σ`: the content of subsystem `i` moves to subsystem `σ(i)` (0-based).
    pub fn apply_permutation(&mut self, p: &Permutation) -> Result<()> {
        let n = self.num_qudits();
        if p.len() != n {
            return Err(domain!(
                "permutation of length {} applied to {n} qudits",
                p.len()
            ));
        }
        let d = self.levels();
        // weights[i] is the index stride of 0-based position i
        let weights: Vec<usize> = (0..n).map(|i| d.pow((n - 1 - i) as u32)).collect();
        let moved: Vec<usize> = (0..n).map(|i| weights[p.image(i)]).collect();
        self.permute_basis(|idx| {
            let mut rest = idx;
            let mut out = 0;
            for i in (0..n).rev() {
                out += (rest % d) * moved[i];
                rest /= d;
            }
            out
        });
        Ok(())
    }

    /// Returns a copy with `gate` applied.
    pub fn applied(&self, gate: &Gate) -> Result<StateVector> {
        let mut out = self.clone();
        out.apply(gate)?;
        Ok(out)
    }
}
