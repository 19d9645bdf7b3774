//! Shared fixtures for the benchmark targets.

use projcross_core::{build_auxiliary, AuxiliaryDrawing, Params};

/// Drawing at the balanced point `alpha = beta = 1` for the given `k`.
pub fn balanced_drawing(k: u32) -> AuxiliaryDrawing {
    build_auxiliary(Params::new(k, k, k).expect("balanced levels are admissible"))
}
