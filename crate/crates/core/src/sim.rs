//! Dense statevector simulation and seeded shot sampling.
//!
//! Amplitude `i` belongs to the basis state whose bit `j` is the value of
//! qubit `q_j`. Simulation starts from `|0…0⟩`.
//!
//! Sampling is reproducible bit-for-bit: shots are drawn with
//! [`rand_chacha::ChaCha8Rng`] seeded through `SeedableRng::seed_from_u64`,
//! each shot consuming one `f64` uniform in `[0, 1)` which is located in the
//! cumulative probability array by binary search (inverse CDF).

use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt::Write as _;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::par;

/// Largest register the dense simulator accepts.
pub const MAX_QUBITS: usize = 30;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

fn check_width(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroWidth)
    } else if n > MAX_QUBITS {
        Err(Error::TooManyQubits {
            n,
            limit: MAX_QUBITS,
        })
    } else {
        Ok(())
    }
}

impl StateVector {
    /// `|0…0⟩` on `n` qubits.
    pub fn zero(n: usize) -> Result<Self> {
        Self::basis(n, 0)
    }

    pub fn basis(n: usize, index: usize) -> Result<Self> {
        check_width(n)?;
        let dim = 1usize << n;
        if index >= dim {
            return Err(Error::QubitOutOfRange {
                qubit: index,
                width: dim,
            });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n, amps })
    }

    /// The uniform superposition `|s⟩ = H^{⊗n}|0…0⟩`.
    pub fn uniform(n: usize) -> Result<Self> {
        check_width(n)?;
        let dim = 1usize << n;
        let a = Complex64::new((dim as f64).sqrt().recip(), 0.0);
        Ok(StateVector {
            n,
            amps: vec![a; dim],
        })
    }

    /// Wraps raw amplitudes; the length must be a power of two. No
    /// normalization is applied.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::StateSize {
                expected: len.next_power_of_two().max(2),
                got: len,
            });
        }
        let n = len.trailing_zeros() as usize;
        check_width(n)?;
        Ok(StateVector { n, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Total probability of the basis states selected by `marked`.
    pub fn probability_where(&self, marked: impl Fn(usize) -> bool) -> f64 {
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| marked(*i))
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.n)?;
        apply_unchecked(&mut self.amps, gate);
        Ok(())
    }

    pub fn apply_circuit(&mut self, c: &Circuit) -> Result<()> {
        if c.width() != self.n {
            return Err(Error::WidthMismatch {
                left: c.width(),
                right: self.n,
            });
        }
        // gates in a Circuit are validated on construction
        for g in c.gates() {
            apply_unchecked(&mut self.amps, g);
        }
        Ok(())
    }
}

fn apply_unchecked(amps: &mut [Complex64], gate: &Gate) {
    match *gate {
        Gate::H(q) => par::for_each_pair_block(amps, 1 << q, |_, lo, hi| {
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = (x + y) * FRAC_1_SQRT_2;
                *b = (x - y) * FRAC_1_SQRT_2;
            }
        }),
        Gate::X(q) => par::for_each_pair_block(amps, 1 << q, |_, lo, hi| lo.swap_with_slice(hi)),
        Gate::Z(q) => par::for_each_pair_block(amps, 1 << q, |_, _, hi| {
            hi.iter_mut().for_each(|b| *b = -*b)
        }),
        Gate::SX(q) => {
            let p = Complex64::new(0.5, 0.5);
            let m = Complex64::new(0.5, -0.5);
            par::for_each_pair_block(amps, 1 << q, |_, lo, hi| {
                for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                    let (x, y) = (*a, *b);
                    *a = p * x + m * y;
                    *b = m * x + p * y;
                }
            })
        }
        Gate::RZ { qubit, angle } => {
            let e0 = Complex64::from_polar(1.0, -angle / 2.0);
            let e1 = Complex64::from_polar(1.0, angle / 2.0);
            par::for_each_pair_block(amps, 1 << qubit, |_, lo, hi| {
                lo.iter_mut().for_each(|a| *a *= e0);
                hi.iter_mut().for_each(|b| *b *= e1);
            })
        }
        Gate::CX { control, target } => {
            let cmask = 1usize << control;
            par::for_each_pair_block(amps, 1 << target, |base, lo, hi| {
                for j in 0..lo.len() {
                    if (base + j) & cmask != 0 {
                        std::mem::swap(&mut lo[j], &mut hi[j]);
                    }
                }
            })
        }
        Gate::CP {
            control,
            target,
            angle,
        } => {
            let mask = (1usize << control) | (1usize << target);
            let phase = Complex64::from_polar(1.0, angle);
            par::for_each_indexed(amps, |i, a| {
                if i & mask == mask {
                    *a *= phase;
                }
            })
        }
        Gate::MCZ(ref qs) => {
            let mask = qs.iter().fold(0usize, |m, &q| m | (1 << q));
            par::for_each_indexed(amps, |i, a| {
                if i & mask == mask {
                    *a = -*a;
                }
            })
        }
    }
}

/// Functional form of [`StateVector::apply`].
pub fn apply(mut state: StateVector, gate: &Gate) -> Result<StateVector> {
    state.apply(gate)?;
    Ok(state)
}

/// Runs `c` from `|0…0⟩`.
pub fn run(c: &Circuit) -> Result<StateVector> {
    run_from(c, StateVector::zero(c.width())?)
}

pub fn run_from(c: &Circuit, mut state: StateVector) -> Result<StateVector> {
    state.apply_circuit(c)?;
    Ok(state)
}

/// Measurement outcome counts over repeated shots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    num_qubits: usize,
    shots: u64,
    counts: BTreeMap<usize, u64>,
}

#[derive(Serialize)]
struct HistogramRow {
    state: usize,
    count: u64,
    frequency: f64,
}

#[derive(Serialize)]
struct HistogramJson {
    shots: u64,
    counts: Vec<HistogramRow>,
}

impl Histogram {
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }

    /// Observed states in ascending order. Unobserved states are absent.
    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn count(&self, state: usize) -> u64 {
        self.counts.get(&state).copied().unwrap_or(0)
    }

    pub fn frequency(&self, state: usize) -> f64 {
        self.count(state) as f64 / self.shots as f64
    }

    /// Fraction of shots landing on states selected by `marked`.
    pub fn mass_where(&self, marked: impl Fn(usize) -> bool) -> f64 {
        let hits: u64 = self
            .counts
            .iter()
            .filter(|(s, _)| marked(**s))
            .map(|(_, c)| c)
            .sum();
        hits as f64 / self.shots as f64
    }

    /// CSV with header `state,count,frequency`; frequency has 10
    /// significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("state,count,frequency\n");
        for (&s, &c) in &self.counts {
            let f = c as f64 / self.shots as f64;
            writeln!(out, "{s},{c},{}", format_significant(f, 10)).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = HistogramJson {
            shots: self.shots,
            counts: self
                .counts
                .iter()
                .map(|(&state, &count)| HistogramRow {
                    state,
                    count,
                    frequency: format_significant(count as f64 / self.shots as f64, 10)
                        .parse()
                        .unwrap(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("histogram serialization is infallible")
    }
}

/// Draws `shots` samples from `|a_i|²`. Identical seeds give identical
/// histograms. The distribution is normalized by its total mass, so a
/// slightly unnormalized state is sampled as its normalized counterpart.
pub fn sample(state: &StateVector, shots: u64, seed: u64) -> Result<Histogram> {
    if shots == 0 {
        return Err(Error::NoShots);
    }
    let mut cdf = Vec::with_capacity(state.dim());
    let mut acc = 0.0;
    for a in &state.amps {
        acc += a.norm_sqr();
        cdf.push(acc);
    }
    if acc <= 0.0 {
        return Err(Error::ZeroNorm);
    }
    let last = cdf.len() - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dense = vec![0u64; state.dim()];
    for _ in 0..shots {
        let u: f64 = rng.random::<f64>() * acc;
        let idx = cdf.partition_point(|&c| c <= u).min(last);
        dense[idx] += 1;
    }
    let counts = dense
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c > 0)
        .collect();
    Ok(Histogram {
        num_qubits: state.n,
        shots,
        counts,
    })
}

/// Formats `x` with `digits` significant digits in positional notation.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding may carry into a new leading digit (9.99… -> 10.0…)
    let rounded: f64 = s.parse().unwrap();
    if rounded != 0.0 && (rounded.abs().log10().floor() as i64) > magnitude && decimals > 0 {
        return format!("{x:.prec$}", prec = decimals - 1);
    }
    s
}

/// Action of `c` on every computational basis state, as columns.
pub fn unitary_columns(c: &Circuit) -> Result<Vec<StateVector>> {
    let n = c.width();
    if n > 14 {
        return Err(Error::TooManyQubits { n, limit: 14 });
    }
    (0..1usize << n)
        .map(|i| run_from(c, StateVector::basis(n, i)?))
        .collect()
}

/// Largest elementwise deviation between `b` and `e^{iφ}·a`, where the
/// global phase `φ` is fixed by the largest-magnitude entry of `a`.
pub fn distance_up_to_phase(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let phase = global_phase(a, b);
    a.iter()
        .zip(b)
        .map(|(x, y)| (y - x * phase).norm())
        .fold(0.0, f64::max)
}

fn global_phase(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    let (k, _) = a
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.norm_sqr().total_cmp(&y.1.norm_sqr()))
        .expect("nonempty");
    let r = b[k] / a[k];
    if r.norm() == 0.0 || !r.norm().is_finite() {
        Complex64::new(1.0, 0.0)
    } else {
        r / r.norm()
    }
}

/// Largest deviation between the unitaries of `a` and `b` over all basis
/// inputs, allowing one global phase shared by every column.
pub fn unitary_distance_up_to_phase(a: &Circuit, b: &Circuit) -> Result<f64> {
    if a.width() != b.width() {
        return Err(Error::WidthMismatch {
            left: a.width(),
            right: b.width(),
        });
    }
    let ua = unitary_columns(a)?;
    let ub = unitary_columns(b)?;
    let phase = global_phase(ua[0].amplitudes(), ub[0].amplitudes());
    let mut worst: f64 = 0.0;
    for (ca, cb) in ua.iter().zip(&ub) {
        for (x, y) in ca.amplitudes().iter().zip(cb.amplitudes()) {
            worst = worst.max((y - x * phase).norm());
        }
    }
    Ok(worst)
}
