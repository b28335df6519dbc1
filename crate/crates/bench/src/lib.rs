//! Fixtures shared by the criterion benches.

use esnorm_core::field::make_field;
use esnorm_core::generators::gen_tower;
use esnorm_core::{Family, GeneratorId, MatrixFq};

/// The `V_1` tower matrix over `F_{p^e}` with `d = r^m`.
pub fn fourier_tower(p: u64, e: u32, r: u64, m: u32) -> MatrixFq {
    let field = make_field(p, e).expect("bench field");
    let id = GeneratorId::new(&field, Family::V, r, m, 1).expect("bench tower");
    gen_tower(&id).expect("bench tower")
}
