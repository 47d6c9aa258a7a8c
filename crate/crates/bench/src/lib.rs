//! Benchmark fixtures shared by the criterion targets in `benches/`.

use weyl_pinch::optimizer::{random_unit_coords, run_rng};
use weyl_pinch::{Tensor4, WeylBasis, WeylCoords};

/// Unit Weyl coordinates and the embedded tensor for dimension `n`, drawn
/// from the run stream of `seed`.
pub fn sample(basis: &WeylBasis, seed: u64) -> (WeylCoords, Tensor4) {
    let coords = random_unit_coords(&mut run_rng(seed), basis.m()).expect("n >= 4");
    let tensor = basis.embed(&coords).expect("matching length");
    (coords, tensor)
}
