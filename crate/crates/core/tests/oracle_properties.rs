mod common;

use common::{diagonal_by_basis, relative_signs_match};
use ltoracle::amplification::build_diffuser;
use ltoracle::oracle::compose_oracles;
use ltoracle::sim::{run, run_from, StateVector};
use ltoracle::{
    build_greater_equal, build_less_than, build_range, concat, Circuit, Gate, OracleSpec,
};

#[test]
fn less_than_signs_on_every_basis_state() {
    for n in 1..=6usize {
        for m in 1..(1u64 << n) {
            let c = build_less_than(n, m).unwrap();
            let diag = diagonal_by_basis(&c, 1e-12).expect("oracle must be diagonal");
            for (i, d) in diag.iter().enumerate() {
                let expected = if (i as u64) < m { -1.0 } else { 1.0 };
                assert!(
                    (d.re - expected).abs() <= 1e-12 && d.im.abs() <= 1e-12,
                    "n={n} m={m} i={i}: {d}"
                );
            }
        }
    }
}

#[test]
fn less_than_42_on_uniform_state() {
    let mut c = Circuit::new(6).unwrap();
    for q in 0..6 {
        c.push(Gate::H(q)).unwrap();
    }
    let c = concat(&c, &build_less_than(6, 42).unwrap()).unwrap();
    let s = run(&c).unwrap();
    for (i, a) in s.amplitudes().iter().enumerate() {
        let expected = if i < 42 { -0.125 } else { 0.125 };
        assert!((a.re - expected).abs() < 1e-12 && a.im.abs() < 1e-12);
    }
}

#[test]
fn msb_structure_matches_bit() {
    // top bit 1: X Z X on q_{n-1}; top bit 0: single X opening the circuit
    let c = build_less_than(5, 0b10110).unwrap();
    assert_eq!(&c.gates()[..3], &[Gate::X(4), Gate::Z(4), Gate::X(4)]);
    let c = build_less_than(5, 0b00110).unwrap();
    assert_eq!(c.gates()[0], Gate::X(4));
    assert_ne!(c.gates()[1], Gate::Z(4));
    // trailing X gates restore exactly the zero bits, in ascending order
    let tail: Vec<_> = c.gates()[c.len() - 3..].to_vec();
    assert_eq!(tail, vec![Gate::X(0), Gate::X(3), Gate::X(4)]);
}

#[test]
fn greater_equal_is_complement() {
    for (n, m) in [(2usize, 2u64), (4, 11), (3, 4), (5, 1), (5, 31)] {
        let diag = diagonal_by_basis(&build_greater_equal(n, m).unwrap(), 1e-12).unwrap();
        assert!(relative_signs_match(&diag, |i| i as u64 >= m, 1e-12), "n={n} m={m}");
        // the realization is exactly −D_lt
        let lt = diagonal_by_basis(&build_less_than(n, m).unwrap(), 1e-12).unwrap();
        for (a, b) in diag.iter().zip(&lt) {
            assert!((a + b).norm() < 1e-12);
        }
    }
    let spec = OracleSpec::greater_equal(3, 4).unwrap();
    assert_eq!(spec.marked_count(), 4);
}

#[test]
fn range_examples() {
    let diag = diagonal_by_basis(&build_range(4, 3, 7).unwrap(), 1e-12).unwrap();
    assert!(relative_signs_match(&diag, |i| (3..7).contains(&i), 1e-12));
    let edge = diagonal_by_basis(&build_range(4, 0, 7).unwrap(), 1e-12).unwrap();
    let lt = diagonal_by_basis(&build_less_than(4, 7).unwrap(), 1e-12).unwrap();
    assert_eq!(edge, lt);
}

#[test]
fn range_signs_exhaustive_small() {
    for n in 1..=4usize {
        let size = 1u64 << n;
        for a in 0..size {
            for b in a + 1..=size {
                if a == 0 && b == size {
                    continue;
                }
                let c = build_range(n, a, b).unwrap();
                let diag = diagonal_by_basis(&c, 1e-12).unwrap();
                assert!(
                    relative_signs_match(&diag, |i| a <= i as u64 && (i as u64) < b, 1e-12),
                    "n={n} [{a},{b})"
                );
            }
        }
    }
}

#[test]
fn oracles_commute_and_associate() {
    let n = 4;
    let specs = [
        OracleSpec::less_than(n, 3).unwrap(),
        OracleSpec::less_than(n, 11).unwrap(),
        OracleSpec::greater_equal(n, 6).unwrap(),
        OracleSpec::range(n, 2, 9).unwrap(),
    ];
    let circuits: Vec<Circuit> = specs.iter().map(|s| s.build()).collect();
    for a in &circuits {
        for b in &circuits {
            let ab = diagonal_by_basis(&concat(a, b).unwrap(), 1e-12).unwrap();
            let ba = diagonal_by_basis(&concat(b, a).unwrap(), 1e-12).unwrap();
            for (x, y) in ab.iter().zip(&ba) {
                assert!((x - y).norm() < 1e-12);
            }
        }
    }
    let left = compose_oracles(&[concat(&circuits[0], &circuits[1]).unwrap(), circuits[2].clone()])
        .unwrap();
    let right = compose_oracles(&[circuits[0].clone(), concat(&circuits[1], &circuits[2]).unwrap()])
        .unwrap();
    assert_eq!(left, right);
}

#[test]
fn ancilla_free_widths() {
    for n in 1..=10usize {
        for m in [1u64, (1 << n) - 1, (1 << n) / 2 + 1] {
            if m == 0 || m >= 1 << n {
                continue;
            }
            assert_eq!(build_less_than(n, m).unwrap().width(), n);
            assert_eq!(build_greater_equal(n, m).unwrap().width(), n);
        }
    }
}

#[test]
fn diffuser_matches_reflection_about_uniform() {
    // dense 2|s⟩⟨s| − I
    for n in 1..=3usize {
        let dim = 1usize << n;
        let d = build_diffuser(n).unwrap();
        let cols: Vec<_> = (0..dim)
            .map(|i| run_from(&d, StateVector::basis(n, i).unwrap()).unwrap())
            .collect();
        let reference = |r: usize, c: usize| 2.0 / dim as f64 - if r == c { 1.0 } else { 0.0 };
        let r0 = (0..dim)
            .max_by(|&a, &b| reference(a, 0).abs().total_cmp(&reference(b, 0).abs()))
            .unwrap();
        let phase = cols[0].amplitudes()[r0] / reference(r0, 0);
        for (c, col) in cols.iter().enumerate() {
            for (r, a) in col.amplitudes().iter().enumerate() {
                assert!((a - phase * reference(r, c)).norm() < 1e-12, "n={n} ({r},{c})");
            }
        }
    }
}

#[test]
fn diffuser_fixes_uniform_state() {
    for n in 1..=6usize {
        let s = StateVector::uniform(n).unwrap();
        let out = run_from(&build_diffuser(n).unwrap(), s.clone()).unwrap();
        let phase = out.amplitudes()[0] / s.amplitudes()[0];
        for (a, b) in out.amplitudes().iter().zip(s.amplitudes()) {
            assert!((a - phase * b).norm() < 1e-12);
        }
    }
}

#[test]
fn diffuser_columns_orthonormal() {
    for n in 1..=5usize {
        let dim = 1usize << n;
        let d = build_diffuser(n).unwrap();
        let cols: Vec<_> = (0..dim)
            .map(|i| run_from(&d, StateVector::basis(n, i).unwrap()).unwrap())
            .collect();
        for i in 0..dim {
            for j in 0..dim {
                let dot: num_complex::Complex64 = cols[i]
                    .amplitudes()
                    .iter()
                    .zip(cols[j].amplitudes())
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((dot.re - expected).abs() < 1e-10 && dot.im.abs() < 1e-10);
            }
        }
    }
}
