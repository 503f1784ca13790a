//! Grover diffuser, iteration planning and full amplification circuits.

use std::f64::consts::PI;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

/// Iteration choice for amplifying `marked` out of `total = 2^n` states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplificationPlan {
    pub num_qubits: usize,
    pub marked: u64,
    pub total: u64,
    /// `sin²θ = marked / total`.
    pub theta: f64,
    pub iterations: usize,
    /// `sin²((2k+1)θ)` for the chosen `k`.
    pub predicted_success: f64,
}

impl AmplificationPlan {
    /// The same problem amplified with a fixed iteration count.
    pub fn with_iterations(self, iterations: usize) -> Self {
        AmplificationPlan {
            iterations,
            predicted_success: success_probability(self.theta, iterations),
            ..self
        }
    }

    /// Upper end of the iteration search, `⌈π/(2θ)⌉ + 1`.
    pub fn search_bound(&self) -> usize {
        search_bound(self.theta)
    }
}

pub fn success_probability(theta: f64, iterations: usize) -> f64 {
    ((2 * iterations + 1) as f64 * theta).sin().powi(2)
}

fn search_bound(theta: f64) -> usize {
    (PI / (2.0 * theta)).ceil() as usize + 1
}

/// Improvements smaller than this do not displace an earlier `k`.
const TIE_TOLERANCE: f64 = 1e-12;

/// Picks the smallest `k` in `[0, ⌈π/(2θ)⌉ + 1]` maximizing
/// `sin²((2k+1)θ)`.
///
/// The textbook `round(π/(4θ) − 1/2)` is not used: it picks `k = 0` for
/// 42 marked states out of 64 where `k = 2` reaches 0.99992.
pub fn plan_iterations(n: usize, marked: u64) -> Result<AmplificationPlan> {
    if n == 0 {
        return Err(Error::ZeroWidth);
    }
    if n > 63 {
        return Err(Error::TooManyQubits { n, limit: 63 });
    }
    let total = 1u64 << n;
    if marked == 0 || marked > total {
        return Err(Error::MarkedCountOutOfRange { n, marked });
    }
    let theta = (marked as f64 / total as f64).sqrt().asin();
    let mut best = (0, success_probability(theta, 0));
    for k in 1..=search_bound(theta) {
        let p = success_probability(theta, k);
        if p > best.1 + TIE_TOLERANCE {
            best = (k, p);
        }
    }
    Ok(AmplificationPlan {
        num_qubits: n,
        marked,
        total,
        theta,
        iterations: best.0,
        predicted_success: best.1,
    })
}

/// `2|s⟩⟨s| − I` up to global phase: `H X MCZ X H` on every qubit, with a
/// plain `Z` standing in for the MCZ on a single qubit.
pub fn build_diffuser(n: usize) -> Result<Circuit> {
    let mut c = Circuit::new(n)?;
    for q in 0..n {
        c.add(Gate::H(q));
    }
    for q in 0..n {
        c.add(Gate::X(q));
    }
    if n == 1 {
        c.add(Gate::Z(0));
    } else {
        c.add(Gate::MCZ((0..n).rev().collect()));
    }
    for q in 0..n {
        c.add(Gate::X(q));
    }
    for q in 0..n {
        c.add(Gate::H(q));
    }
    Ok(c)
}

/// `H^{⊗n}` followed by `k` rounds of oracle then diffuser, `k` from
/// [`plan_iterations`] unless `iterations` overrides it.
pub fn build_amplification(
    oracle: &Circuit,
    marked: u64,
    iterations: Option<usize>,
) -> Result<Circuit> {
    let n = oracle.width();
    let plan = plan_iterations(n, marked)?;
    let k = iterations.unwrap_or(plan.iterations);
    let diffuser = build_diffuser(n)?;
    let mut c = Circuit::new(n)?;
    for q in 0..n {
        c.add(Gate::H(q));
    }
    for _ in 0..k {
        for g in oracle.gates().iter().chain(diffuser.gates()) {
            c.add(g.clone());
        }
    }
    Ok(c)
}
