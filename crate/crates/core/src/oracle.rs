//! Comparison phase oracles.
//!
//! [`build_less_than`] emits the ancilla-free less-than circuit: reading the
//! threshold `m` from its most significant bit down, every 1-bit `b_i`
//! contributes a phase flip on the prefix `b_{n-1} … b_{i+1} 0`, realized as
//! an X-conjugated Z (top bit) or MCZ over `q_{n-1} … q_i`. Qubits whose bit
//! is 0 are X-flipped up front and restored at the end.
//!
//! Greater-equal and range oracles are composed from less-than oracles.

use crate::circuit::{concat, Circuit, Gate};
use crate::error::{Error, Result};

/// Largest register for which thresholds are representable.
pub const MAX_ORACLE_QUBITS: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// Marks `i < m`.
    LessThan(u64),
    /// Marks `i >= m`.
    GreaterEqual(u64),
    /// Marks `a <= i < b`.
    Range { a: u64, b: u64 },
}

/// A validated comparison oracle request on `n` qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleSpec {
    n: usize,
    op: Comparison,
}

fn check_qubits(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroWidth);
    }
    if n > MAX_ORACLE_QUBITS {
        return Err(Error::TooManyQubits {
            n,
            limit: MAX_ORACLE_QUBITS,
        });
    }
    Ok(())
}

fn check_threshold(n: usize, m: u64) -> Result<()> {
    check_qubits(n)?;
    if m == 0 || m >= 1u64 << n {
        return Err(Error::ThresholdOutOfRange { n, m });
    }
    Ok(())
}

fn check_range(n: usize, a: u64, b: u64) -> Result<()> {
    check_qubits(n)?;
    let size = 1u64 << n;
    if a >= b || b > size || (a == 0 && b == size) {
        return Err(Error::InvalidRange { n, a, b });
    }
    Ok(())
}

impl OracleSpec {
    pub fn new(n: usize, op: Comparison) -> Result<Self> {
        match op {
            Comparison::LessThan(m) | Comparison::GreaterEqual(m) => check_threshold(n, m)?,
            Comparison::Range { a, b } => check_range(n, a, b)?,
        }
        Ok(OracleSpec { n, op })
    }

    pub fn less_than(n: usize, m: u64) -> Result<Self> {
        Self::new(n, Comparison::LessThan(m))
    }

    pub fn greater_equal(n: usize, m: u64) -> Result<Self> {
        Self::new(n, Comparison::GreaterEqual(m))
    }

    pub fn range(n: usize, a: u64, b: u64) -> Result<Self> {
        Self::new(n, Comparison::Range { a, b })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn op(&self) -> Comparison {
        self.op
    }

    pub fn is_marked(&self, i: u64) -> bool {
        match self.op {
            Comparison::LessThan(m) => i < m,
            Comparison::GreaterEqual(m) => i >= m,
            Comparison::Range { a, b } => a <= i && i < b,
        }
    }

    /// Number of marked basis states.
    pub fn marked_count(&self) -> u64 {
        match self.op {
            Comparison::LessThan(m) => m,
            Comparison::GreaterEqual(m) => (1u64 << self.n) - m,
            Comparison::Range { a, b } => b - a,
        }
    }

    pub fn build(&self) -> Circuit {
        match self.op {
            Comparison::LessThan(m) => less_than_unchecked(self.n, m),
            Comparison::GreaterEqual(m) => greater_equal_unchecked(self.n, m),
            Comparison::Range { a, b } => range_unchecked(self.n, a, b),
        }
    }
}

/// Circuit acting as `|i⟩ ↦ (−1)^{[i<m]}|i⟩` on `n` qubits, `0 < m < 2^n`.
pub fn build_less_than(n: usize, m: u64) -> Result<Circuit> {
    check_threshold(n, m)?;
    Ok(less_than_unchecked(n, m))
}

fn less_than_unchecked(n: usize, m: u64) -> Circuit {
    let bit = |i: usize| (m >> i) & 1 == 1;
    let mut c = Circuit::new(n).expect("n >= 1");
    let top = n - 1;
    if bit(top) {
        c.add(Gate::X(top)).add(Gate::Z(top)).add(Gate::X(top));
    } else {
        c.add(Gate::X(top));
    }
    for i in (0..top).rev() {
        if bit(i) {
            c.add(Gate::X(i))
                .add(Gate::MCZ((i..n).rev().collect()))
                .add(Gate::X(i));
        } else {
            c.add(Gate::X(i));
        }
    }
    for i in 0..n {
        if !bit(i) {
            c.add(Gate::X(i));
        }
    }
    c
}

/// Circuit acting as `|i⟩ ↦ (−1)^{[i≥m]}|i⟩`, up to global phase.
///
/// The less-than oracle is followed by `Z X Z X` on `q0`, which is `−I`
/// on that qubit, so the diagonal is exactly `−D_lt`.
pub fn build_greater_equal(n: usize, m: u64) -> Result<Circuit> {
    check_threshold(n, m)?;
    Ok(greater_equal_unchecked(n, m))
}

fn greater_equal_unchecked(n: usize, m: u64) -> Circuit {
    let mut c = less_than_unchecked(n, m);
    c.add(Gate::Z(0))
        .add(Gate::X(0))
        .add(Gate::Z(0))
        .add(Gate::X(0));
    c
}

/// Circuit acting as `|i⟩ ↦ (−1)^{[a≤i<b]}|i⟩`, up to global phase.
///
/// States below `a` are flipped by both less-than oracles and end unmarked.
/// `a == 0` is a plain less-than; `b == 2^n` is a greater-equal.
pub fn build_range(n: usize, a: u64, b: u64) -> Result<Circuit> {
    check_range(n, a, b)?;
    Ok(range_unchecked(n, a, b))
}

fn range_unchecked(n: usize, a: u64, b: u64) -> Circuit {
    if a == 0 {
        less_than_unchecked(n, b)
    } else if b == 1u64 << n {
        greater_equal_unchecked(n, a)
    } else {
        concat(&less_than_unchecked(n, b), &less_than_unchecked(n, a)).expect("same width")
    }
}

/// Sequential composition of oracles over the same register. Diagonal
/// oracles commute, so the order only affects the gate sequence.
pub fn compose_oracles(oracles: &[Circuit]) -> Result<Circuit> {
    let (first, rest) = oracles.split_first().ok_or(Error::EmptyComposition)?;
    rest.iter().try_fold(first.clone(), |acc, o| concat(&acc, o))
}
