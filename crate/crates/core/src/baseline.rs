//! Generic diagonal-unitary synthesis, the comparison baseline for the
//! structured oracles, plus a dense diagonal reference operator.
//!
//! A diagonal `diag(e^{iφ_x})` factors over its Walsh spectrum:
//! `φ(x) = Σ_s α_s (−1)^{s·x}` with `α_s = 2^{−n} Σ_x (−1)^{s·x} φ_x`. Each
//! non-constant term is a parity phase: CX gates accumulate the parity of
//! `x & s` onto the highest qubit of `s`, an RZ applies the phase there, and
//! the CX ladder is walked in Gray-code order so consecutive terms share most
//! of it.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::par;
use crate::sim::StateVector;

/// Walsh coefficients below this magnitude are dropped.
pub const ZERO_TOLERANCE: f64 = 1e-12;

/// Phase angles `φ_x` (radians) of a diagonal unitary on `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalPhases {
    n: usize,
    phases: Vec<f64>,
}

impl DiagonalPhases {
    pub fn new(phases: Vec<f64>) -> Result<Self> {
        let len = phases.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::StateSize {
                expected: len.next_power_of_two().max(2),
                got: len,
            });
        }
        if let Some(&angle) = phases.iter().find(|p| !p.is_finite()) {
            return Err(Error::NonFiniteAngle {
                kind: "diagonal",
                angle,
            });
        }
        Ok(DiagonalPhases {
            n: len.trailing_zeros() as usize,
            phases,
        })
    }

    /// `π` on every state selected by `marked`, 0 elsewhere.
    pub fn marking(n: usize, marked: impl Fn(u64) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroWidth);
        }
        if n > crate::sim::MAX_QUBITS {
            return Err(Error::TooManyQubits {
                n,
                limit: crate::sim::MAX_QUBITS,
            });
        }
        let phases = (0..1u64 << n)
            .map(|i| if marked(i) { PI } else { 0.0 })
            .collect();
        Self::new(phases)
    }

    /// The less-than-`m` diagonal: `m` leading `−1` entries.
    pub fn less_than(n: usize, m: u64) -> Result<Self> {
        crate::oracle::OracleSpec::less_than(n, m)?;
        Self::marking(n, |i| i < m)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    /// Walsh spectrum `α_s`, index `s`.
    pub fn walsh_spectrum(&self) -> Vec<f64> {
        let mut a = self.phases.clone();
        fwht(&mut a);
        let scale = (self.phases.len() as f64).recip();
        a.iter_mut().for_each(|x| *x *= scale);
        a
    }
}

/// In-place unnormalized fast Walsh–Hadamard transform.
pub fn fwht(data: &mut [f64]) {
    let len = data.len();
    assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for block in data.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (a, b) = (*x, *y);
                *x = a + b;
                *y = a - b;
            }
        }
        h *= 2;
    }
}

/// `a_x ← e^{iφ_x} a_x`.
pub fn reference_apply(phases: &DiagonalPhases, state: &StateVector) -> Result<StateVector> {
    if state.num_qubits() != phases.n {
        return Err(Error::StateSize {
            expected: phases.phases.len(),
            got: state.dim(),
        });
    }
    let mut out = state.clone();
    par::for_each_indexed(out.amplitudes_mut(), |i, a| {
        *a *= Complex64::from_polar(1.0, phases.phases[i])
    });
    Ok(out)
}

/// Reflected binary Gray code of `bits` bits.
pub fn gray_code(bits: usize) -> impl Iterator<Item = usize> {
    (0..1usize << bits).map(|i| i ^ (i >> 1))
}

/// Synthesizes `diag(e^{iφ_x})` over `{RZ, CX}`, exact up to one global
/// phase (the dropped `α_0` term).
///
/// Terms are grouped by the highest set bit `h` of `s`; the parity of the
/// lower bits `s' = s ^ 2^h` is accumulated onto `q_h` by walking `s'` in
/// Gray-code order, and `q_h` is restored after each group. Each group costs
/// at most `2^h` CX gates.
pub fn synthesize_diagonal(phases: &DiagonalPhases) -> Circuit {
    let n = phases.n;
    let alpha = phases.walsh_spectrum();
    let mut c = Circuit::new(n).expect("n >= 1");
    for h in 0..n {
        let top = 1usize << h;
        // parity mask currently accumulated on q_h (beyond q_h itself)
        let mut held = 0usize;
        for lower in gray_code(h) {
            let a = alpha[top | lower];
            if a.abs() < ZERO_TOLERANCE {
                continue;
            }
            move_parity(&mut c, h, held, lower);
            held = lower;
            // RZ(θ) contributes e^{−iθ/2·(−1)^p}; we want e^{iα(−1)^p}
            c.add(Gate::RZ {
                qubit: h,
                angle: -2.0 * a,
            });
        }
        move_parity(&mut c, h, held, 0);
    }
    c
}

fn move_parity(c: &mut Circuit, target: usize, from: usize, to: usize) {
    let mut diff = from ^ to;
    while diff != 0 {
        let b = diff.trailing_zeros() as usize;
        c.add(Gate::CX { control: b, target });
        diff &= diff - 1;
    }
}
