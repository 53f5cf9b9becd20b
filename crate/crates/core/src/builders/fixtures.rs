//! Built-in inputs that need no external data.

use super::{build_projective_plane, complex_from_presentation, find_presentation, TrianglePresentation, VoltageAssignment};
use crate::complex::QuotientComplex;
use crate::group::Perm;

/// First presentation for `q = 2` in the deterministic search order.
pub fn q2_presentation() -> TrianglePresentation {
    let plane = build_projective_plane(2).expect("q = 2 is supported");
    find_presentation(&plane).expect("q = 2 admits a triangle presentation")
}

/// Every generator to the 3-cycle `(0 1 2)`. Each relation has three
/// factors, so it maps to the cube of the cycle.
pub fn z3_voltages(t: &TrianglePresentation) -> VoltageAssignment {
    VoltageAssignment::new(t, vec![Perm::cycle(3); t.plane().len()]).expect("3-cycle voltages satisfy every relation")
}

/// One-vertex complex for `q = 2` with trivial voltages.
pub fn q2_trivial_complex() -> QuotientComplex {
    let t = q2_presentation();
    complex_from_presentation(&t, &VoltageAssignment::trivial(&t))
}

/// One-vertex complex for `q = 2` with `Z/3` voltages.
pub fn q2_z3_complex() -> QuotientComplex {
    let t = q2_presentation();
    complex_from_presentation(&t, &z3_voltages(&t))
}
