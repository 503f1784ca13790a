use ltoracle::{Circuit, Gate};
use proptest::prelude::*;

pub fn gate(width: usize) -> BoxedStrategy<Gate> {
    let q = 0..width;
    let pair = (0..width, 1..width.max(2)).prop_map(move |(a, d)| (a, (a + d) % width));
    let angle = -7.0f64..7.0;
    let mut options: Vec<BoxedStrategy<Gate>> = vec![
        q.clone().prop_map(Gate::H).boxed(),
        q.clone().prop_map(Gate::X).boxed(),
        q.clone().prop_map(Gate::Z).boxed(),
        q.clone().prop_map(Gate::SX).boxed(),
        (q.clone(), angle.clone())
            .prop_map(|(qubit, angle)| Gate::RZ { qubit, angle })
            .boxed(),
    ];
    if width >= 2 {
        options.push(
            pair.clone()
                .prop_map(|(control, target)| Gate::CX { control, target })
                .boxed(),
        );
        options.push(
            (pair, angle)
                .prop_map(|((control, target), angle)| Gate::CP {
                    control,
                    target,
                    angle,
                })
                .boxed(),
        );
        options.push(
            proptest::sample::subsequence((0..width).collect::<Vec<_>>(), 2..=width)
                .prop_shuffle()
                .prop_map(Gate::MCZ)
                .boxed(),
        );
    }
    proptest::strategy::Union::new(options).boxed()
}

pub fn circuit(max_width: usize, max_gates: usize) -> impl Strategy<Value = Circuit> {
    (1..=max_width).prop_flat_map(move |w| {
        proptest::collection::vec(gate(w), 0..=max_gates)
            .prop_map(move |gates| Circuit::from_gates(w, gates).unwrap())
    })
}

/// Circuits biased towards X gates so the peephole pass has work to do.
pub fn x_heavy_circuit(max_width: usize, max_gates: usize) -> impl Strategy<Value = Circuit> {
    (1..=max_width).prop_flat_map(move |w| {
        let g = prop_oneof![3 => (0..w).prop_map(Gate::X), 1 => gate(w)];
        proptest::collection::vec(g, 0..=max_gates)
            .prop_map(move |gates| Circuit::from_gates(w, gates).unwrap())
    })
}
