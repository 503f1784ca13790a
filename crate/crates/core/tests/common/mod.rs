#![allow(dead_code)]

use ltoracle::sim::{run_from, StateVector};
use ltoracle::Circuit;
use num_complex::Complex64;

/// Runs every basis state through `c` and returns the diagonal entries, or
/// `None` if some basis state is not mapped onto itself.
pub fn diagonal_by_basis(c: &Circuit, tol: f64) -> Option<Vec<Complex64>> {
    let n = c.width();
    let mut diag = Vec::with_capacity(1 << n);
    for i in 0..1usize << n {
        let out = run_from(c, StateVector::basis(n, i).unwrap()).unwrap();
        let off: f64 = out
            .amplitudes()
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, a)| a.norm())
            .fold(0.0, f64::max);
        if off > tol {
            return None;
        }
        diag.push(out.amplitudes()[i]);
    }
    Some(diag)
}

/// Checks `diag` equals `±1` (up to one global phase) with `−1` relative
/// sign exactly on `marked` states.
pub fn relative_signs_match(diag: &[Complex64], marked: impl Fn(usize) -> bool, tol: f64) -> bool {
    let reference: Vec<f64> = (0..diag.len())
        .map(|i| if marked(i) { -1.0 } else { 1.0 })
        .collect();
    let phase = diag[0] / reference[0];
    diag.iter()
        .zip(&reference)
        .all(|(d, r)| (d - phase * r).norm() <= tol)
}

/// Amplitudes with distinct magnitudes on every basis state.
pub fn probe_state(n: usize) -> StateVector {
    let dim = 1usize << n;
    let norm = ((1..=dim).map(|k| (k * k) as f64).sum::<f64>()).sqrt();
    StateVector::from_amplitudes(
        (1..=dim)
            .map(|k| Complex64::new(k as f64 / norm, 0.0))
            .collect(),
    )
    .unwrap()
}

pub mod strategies;
