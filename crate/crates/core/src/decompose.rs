//! Lowering to the `{CX, RZ, SX, X}` basis and depth sweeps.
//!
//! Connectivity is all-to-all. Multi-controlled Z gates are expanded without
//! ancillas as a Gray-code cascade of controlled phases: for controls
//! `c_1..c_k` and target `t`,
//!
//! ```text
//! x_t · (x_1 ∧ … ∧ x_k) = 2^{1−k} Σ_{S ≠ ∅} (−1)^{|S|−1} x_t · ⊕_{j∈S} x_j
//! ```
//!
//! so `C^kZ` is a product of `2^k − 1` gates `CP(±π/2^{k−1})` between the
//! target and a control holding the parity of `S`. Walking `S` in Gray-code
//! order keeps each parity one CX away from the previous one.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::baseline::{gray_code, synthesize_diagonal, DiagonalPhases};
use crate::circuit::{peephole_cancel_x, Circuit, DepthMetrics, Gate};
use crate::error::{Error, Result};
use crate::oracle::build_less_than;
use crate::par;

/// True for gates in the lowered basis.
pub fn is_basis_gate(g: &Gate) -> bool {
    matches!(g, Gate::CX { .. } | Gate::RZ { .. } | Gate::SX(_) | Gate::X(_))
}

/// Rewrites `c` over `{CX, RZ, SX, X}`, equal to `c` up to global phase.
pub fn lower(c: &Circuit) -> Circuit {
    let mut out = Circuit::new(c.width()).expect("width >= 1");
    for g in c.gates() {
        lower_gate(g, &mut out);
    }
    out
}

fn lower_gate(g: &Gate, out: &mut Circuit) {
    match *g {
        Gate::X(_) | Gate::SX(_) | Gate::RZ { .. } | Gate::CX { .. } => {
            out.add(g.clone());
        }
        Gate::H(q) => lower_h(q, out),
        Gate::Z(qubit) => {
            out.add(Gate::RZ { qubit, angle: PI });
        }
        Gate::CP {
            control,
            target,
            angle,
        } => lower_cp(control, target, angle, out),
        Gate::MCZ(ref qs) if qs.len() == 2 => {
            let (control, target) = (qs[0], qs[1]);
            lower_h(target, out);
            out.add(Gate::CX { control, target });
            lower_h(target, out);
        }
        Gate::MCZ(ref qs) => {
            for step in mcz_cascade(qs) {
                lower_gate(&step, out);
            }
        }
    }
}

fn lower_h(qubit: usize, out: &mut Circuit) {
    out.add(Gate::RZ {
        qubit,
        angle: FRAC_PI_2,
    })
    .add(Gate::SX(qubit))
    .add(Gate::RZ {
        qubit,
        angle: FRAC_PI_2,
    });
}

fn lower_cp(control: usize, target: usize, angle: f64, out: &mut Circuit) {
    let half = angle / 2.0;
    out.add(Gate::RZ {
        qubit: control,
        angle: half,
    })
    .add(Gate::CX { control, target })
    .add(Gate::RZ {
        qubit: target,
        angle: -half,
    })
    .add(Gate::CX { control, target })
    .add(Gate::RZ {
        qubit: target,
        angle: half,
    });
}

/// Ancilla-free expansion of `MCZ(qs)` into CP and CX gates. The last
/// listed qubit is the target. Emits `2^k − 1` CP and `2^k − 2` CX gates for
/// `k = qs.len() − 1` controls.
pub fn mcz_cascade(qs: &[usize]) -> Vec<Gate> {
    assert!(qs.len() >= 2, "MCZ needs at least 2 qubits");
    let (controls, target) = qs.split_at(qs.len() - 1);
    let target = target[0];
    let k = controls.len();
    let angle = PI / (1u64 << (k - 1)) as f64;
    // parity mask currently stored on each control
    let mut held: Vec<usize> = (0..k).map(|j| 1 << j).collect();
    let mut out = Vec::with_capacity((1 << (k + 1)) - 3);
    for code in gray_code(k).skip(1) {
        let h = usize::BITS as usize - 1 - code.leading_zeros() as usize;
        let mut diff = held[h] ^ code;
        while diff != 0 {
            let b = diff.trailing_zeros() as usize;
            out.push(Gate::CX {
                control: controls[b],
                target: controls[h],
            });
            diff &= diff - 1;
        }
        held[h] = code;
        let sign = if code.count_ones() % 2 == 1 { 1.0 } else { -1.0 };
        out.push(Gate::CP {
            control: controls[h],
            target,
            angle: sign * angle,
        });
    }
    debug_assert!(held.iter().enumerate().all(|(j, &m)| m == 1 << j));
    out
}

/// Which construction a depth figure belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Method {
    LessThanOracle,
    DiagonalBaseline,
}

impl Method {
    pub const ALL: [Method; 2] = [Method::LessThanOracle, Method::DiagonalBaseline];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::LessThanOracle => "less_than_oracle",
            Method::DiagonalBaseline => "diagonal_baseline",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DepthReport {
    pub n: usize,
    pub m: u64,
    pub method: Method,
    /// Metrics of the lowered circuit.
    pub metrics: DepthMetrics,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepOptions {
    /// Apply X-pair cancellation to the lowered circuits of both methods.
    pub peephole: bool,
}

/// The lowered less-than-`m` circuit produced by `method`.
pub fn lowered_circuit(method: Method, n: usize, m: u64, opts: SweepOptions) -> Result<Circuit> {
    let raw = match method {
        Method::LessThanOracle => build_less_than(n, m)?,
        Method::DiagonalBaseline => synthesize_diagonal(&DiagonalPhases::less_than(n, m)?),
    };
    let lowered = lower(&raw);
    Ok(if opts.peephole {
        peephole_cancel_x(&lowered)
    } else {
        lowered
    })
}

pub fn depth_report(method: Method, n: usize, m: u64, opts: SweepOptions) -> Result<DepthReport> {
    let metrics = lowered_circuit(method, n, m, opts)?.depth();
    Ok(DepthReport {
        n,
        m,
        method,
        metrics,
    })
}

/// Lowered metrics for every `n` in range and every `m` in `1..2^n`,
/// ordered by `(n, m)`. Rows are computed in parallel.
pub fn depth_sweep(
    n_range: RangeInclusive<usize>,
    method: Method,
    opts: SweepOptions,
) -> Result<Vec<DepthReport>> {
    if let Some(n) = n_range.clone().find(|&n| n < 2) {
        return Err(Error::SweepWidth(n));
    }
    let jobs: Vec<(usize, u64)> = n_range
        .flat_map(|n| (1..1u64 << n).map(move |m| (n, m)))
        .collect();
    par::map(jobs, |(n, m)| depth_report(method, n, m, opts))
        .into_iter()
        .collect()
}

/// Per-`(n, method)` depth statistics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DepthSummary {
    pub n: usize,
    pub method: Method,
    pub count: usize,
    pub mean: f64,
    pub min: usize,
    pub max: usize,
}

pub fn summarize(reports: &[DepthReport]) -> Vec<DepthSummary> {
    let mut groups: BTreeMap<(usize, Method), Vec<usize>> = BTreeMap::new();
    for r in reports {
        groups
            .entry((r.n, r.method))
            .or_default()
            .push(r.metrics.depth);
    }
    groups
        .into_iter()
        .map(|((n, method), depths)| DepthSummary {
            n,
            method,
            count: depths.len(),
            mean: depths.iter().sum::<usize>() as f64 / depths.len() as f64,
            min: *depths.iter().min().unwrap(),
            max: *depths.iter().max().unwrap(),
        })
        .collect()
}

/// CSV with header `n,m,method,depth,gate_count,two_qubit_count`.
pub fn sweep_csv(reports: &[DepthReport]) -> String {
    let mut out = String::from("n,m,method,depth,gate_count,two_qubit_count\n");
    for r in reports {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n,
            r.m,
            r.method.as_str(),
            r.metrics.depth,
            r.metrics.gate_count,
            r.metrics.two_qubit_count
        )
        .unwrap();
    }
    out
}
