//! Gate-level circuit representation.
//!
//! A [`Circuit`] is an ordered list of [`Gate`]s over a fixed number of
//! qubits. Qubit `q_j` carries bit `j` of the basis-state index, so `q_{n-1}`
//! is the most significant bit.
//!
//! Circuits serialize to a flat JSON schema:
//!
//! ```json
//! {"width": 4, "gates": [{"kind": "X", "qubits": [3]},
//!                        {"kind": "RZ", "qubits": [1], "angle": 0.7853981633974483},
//!                        {"kind": "MCZ", "qubits": [3, 2, 1]}]}
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One gate instance. Angles are in radians.
#[derive(Debug, Clone, PartialEq)]
pub enum Gate {
    H(usize),
    X(usize),
    Z(usize),
    SX(usize),
    RZ { qubit: usize, angle: f64 },
    CX { control: usize, target: usize },
    CP { control: usize, target: usize, angle: f64 },
    /// Multi-controlled Z over an ordered qubit list; negates every basis
    /// state with all listed qubits set. Symmetric in its qubits.
    MCZ(Vec<usize>),
}

impl Gate {
    pub fn kind(&self) -> &'static str {
        match self {
            Gate::H(_) => "H",
            Gate::X(_) => "X",
            Gate::Z(_) => "Z",
            Gate::SX(_) => "SX",
            Gate::RZ { .. } => "RZ",
            Gate::CX { .. } => "CX",
            Gate::CP { .. } => "CP",
            Gate::MCZ(_) => "MCZ",
        }
    }

    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::H(q) | Gate::X(q) | Gate::Z(q) | Gate::SX(q) => vec![*q],
            Gate::RZ { qubit, .. } => vec![*qubit],
            Gate::CX { control, target } | Gate::CP { control, target, .. } => {
                vec![*control, *target]
            }
            Gate::MCZ(qs) => qs.clone(),
        }
    }

    pub fn angle(&self) -> Option<f64> {
        match self {
            Gate::RZ { angle, .. } | Gate::CP { angle, .. } => Some(*angle),
            _ => None,
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Gate::MCZ(qs) => qs.len(),
            Gate::CX { .. } | Gate::CP { .. } => 2,
            _ => 1,
        }
    }

    /// True for gates whose matrix is diagonal in the computational basis.
    pub fn is_diagonal(&self) -> bool {
        matches!(
            self,
            Gate::Z(_) | Gate::RZ { .. } | Gate::CP { .. } | Gate::MCZ(_)
        )
    }

    pub fn touches(&self, qubit: usize) -> bool {
        match self {
            Gate::H(q) | Gate::X(q) | Gate::Z(q) | Gate::SX(q) => *q == qubit,
            Gate::RZ { qubit: q, .. } => *q == qubit,
            Gate::CX { control, target } | Gate::CP { control, target, .. } => {
                *control == qubit || *target == qubit
            }
            Gate::MCZ(qs) => qs.contains(&qubit),
        }
    }

    /// Checks the gate's invariants against a register of `width` qubits.
    pub fn validate(&self, width: usize) -> Result<()> {
        let kind = self.kind();
        if let Gate::MCZ(qs) = self {
            if qs.len() < 2 {
                return Err(Error::McZTooSmall(qs.len()));
            }
        }
        if let Some(angle) = self.angle() {
            if !angle.is_finite() {
                return Err(Error::NonFiniteAngle { kind, angle });
            }
        }
        let qubits = self.qubits();
        for (i, &q) in qubits.iter().enumerate() {
            if q >= width {
                return Err(Error::QubitOutOfRange { qubit: q, width });
            }
            if qubits[..i].contains(&q) {
                return Err(Error::DuplicateQubit { kind, qubit: q });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let qs = self
            .qubits()
            .iter()
            .map(|q| format!("q{q}"))
            .collect::<Vec<_>>()
            .join(",");
        match self.angle() {
            Some(a) => write!(f, "{}({a})({qs})", self.kind()),
            None => write!(f, "{}({qs})", self.kind()),
        }
    }
}

/// An ordered gate sequence over `width` qubits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCircuit", into = "RawCircuit")]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(width: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::ZeroWidth);
        }
        Ok(Circuit {
            width,
            gates: Vec::new(),
        })
    }

    pub fn from_gates(width: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self> {
        let mut c = Circuit::new(width)?;
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn push(&mut self, gate: Gate) -> Result<&mut Self> {
        gate.validate(self.width)?;
        self.gates.push(gate);
        Ok(self)
    }

    /// Appends a gate produced by one of the crate's builders. Those emit
    /// indices derived from `width`, so a failure here is a builder bug.
    pub(crate) fn add(&mut self, gate: Gate) -> &mut Self {
        debug_assert!(gate.validate(self.width).is_ok(), "invalid gate {gate}");
        self.gates.push(gate);
        self
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn depth(&self) -> DepthMetrics {
        depth(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("circuit serialization is infallible")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("circuit serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Depth and size statistics of a circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthMetrics {
    pub depth: usize,
    pub gate_count: usize,
    pub two_qubit_count: usize,
}

/// As-soon-as-possible layering: each gate lands one layer after the latest
/// layer of any qubit it touches. Every gate counts as one layer unit.
pub fn depth(c: &Circuit) -> DepthMetrics {
    let mut frontier = vec![0usize; c.width];
    let mut depth = 0;
    let mut two_qubit_count = 0;
    for g in &c.gates {
        let qs = g.qubits();
        if qs.len() >= 2 {
            two_qubit_count += 1;
        }
        let layer = 1 + qs.iter().map(|&q| frontier[q]).max().unwrap_or(0);
        for &q in &qs {
            frontier[q] = layer;
        }
        depth = depth.max(layer);
    }
    DepthMetrics {
        depth,
        gate_count: c.gates.len(),
        two_qubit_count,
    }
}

/// Gates of `a` followed by gates of `b`.
pub fn concat(a: &Circuit, b: &Circuit) -> Result<Circuit> {
    if a.width != b.width {
        return Err(Error::WidthMismatch {
            left: a.width,
            right: b.width,
        });
    }
    let mut gates = Vec::with_capacity(a.len() + b.len());
    gates.extend_from_slice(&a.gates);
    gates.extend_from_slice(&b.gates);
    Ok(Circuit {
        width: a.width,
        gates,
    })
}

/// Removes X,X pairs on a qubit when no gate between them touches that
/// qubit. Cancellation cascades, so `X X X X` on one qubit vanishes.
pub fn peephole_cancel_x(c: &Circuit) -> Circuit {
    let mut out: Vec<Option<Gate>> = Vec::with_capacity(c.len());
    // per-qubit stack of live indices into `out`
    let mut last: Vec<Vec<usize>> = vec![Vec::new(); c.width];
    for g in &c.gates {
        if let Gate::X(q) = *g {
            if let Some(&prev) = last[q].last() {
                if matches!(out[prev], Some(Gate::X(_))) {
                    out[prev] = None;
                    last[q].pop();
                    continue;
                }
            }
        }
        let idx = out.len();
        for q in g.qubits() {
            last[q].push(idx);
        }
        out.push(Some(g.clone()));
    }
    Circuit {
        width: c.width,
        gates: out.into_iter().flatten().collect(),
    }
}

#[derive(Serialize, Deserialize)]
struct RawGate {
    kind: String,
    qubits: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    angle: Option<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawCircuit {
    width: usize,
    gates: Vec<RawGate>,
}

impl From<Circuit> for RawCircuit {
    fn from(c: Circuit) -> Self {
        RawCircuit {
            width: c.width,
            gates: c
                .gates
                .iter()
                .map(|g| RawGate {
                    kind: g.kind().to_string(),
                    qubits: g.qubits(),
                    angle: g.angle(),
                })
                .collect(),
        }
    }
}

impl TryFrom<RawGate> for Gate {
    type Error = Error;

    fn try_from(raw: RawGate) -> Result<Gate> {
        let arity = |n: usize| {
            if raw.qubits.len() == n {
                Ok(())
            } else {
                Err(Error::GateArity {
                    kind: raw.kind.clone(),
                    expected: n,
                    got: raw.qubits.len(),
                })
            }
        };
        let angle = || raw.angle.ok_or_else(|| Error::MissingAngle(raw.kind.clone()));
        let q = &raw.qubits;
        let gate = match raw.kind.as_str() {
            "H" => arity(1).map(|_| Gate::H(q[0]))?,
            "X" => arity(1).map(|_| Gate::X(q[0]))?,
            "Z" => arity(1).map(|_| Gate::Z(q[0]))?,
            "SX" => arity(1).map(|_| Gate::SX(q[0]))?,
            "RZ" => {
                arity(1)?;
                Gate::RZ {
                    qubit: q[0],
                    angle: angle()?,
                }
            }
            "CX" => {
                arity(2)?;
                Gate::CX {
                    control: q[0],
                    target: q[1],
                }
            }
            "CP" => {
                arity(2)?;
                Gate::CP {
                    control: q[0],
                    target: q[1],
                    angle: angle()?,
                }
            }
            "MCZ" => Gate::MCZ(raw.qubits.clone()),
            other => return Err(Error::UnknownGateKind(other.to_string())),
        };
        Ok(gate)
    }
}

impl TryFrom<RawCircuit> for Circuit {
    type Error = Error;

    fn try_from(raw: RawCircuit) -> Result<Circuit> {
        let gates = raw
            .gates
            .into_iter()
            .map(Gate::try_from)
            .collect::<Result<Vec<_>>>()?;
        Circuit::from_gates(raw.width, gates)
    }
}
