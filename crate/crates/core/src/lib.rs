//! Exact construction and determinant analysis of the diagonal (`U`),
//! Fourier (`V`) and permutation (`W`) generators that appear in normalisers
//! of extraspecial groups inside `GL(d, q)`, `d = r^m`.
//!
//! The crate is layered bottom-up:
//!
//! * [`field`]: arithmetic in `F_{p^e}`, unit-group data, power-residue tests
//!   and `d`-th root extraction.
//! * [`matrix`]: dense matrices over a field, Kronecker products,
//!   determinants by elimination and permutation matrices.
//! * [`generators`]: the `U`, `V`, `W` blocks and their towers
//!   `I ⊗ X ⊗ I`.
//! * [`det_theory`]: closed-form determinants and the `d`-th root
//!   classification for each family.
//! * [`sl_scaling`]: rescaling a generator into `SL(d, q)`.
//! * [`oracle`]: brute-force verification of everything above over a
//!   parameter sweep.

pub mod det_theory;
pub mod error;
pub mod field;
pub mod generators;
pub mod matrix;
pub mod ntheory;
pub mod oracle;
pub mod sl_scaling;

pub use det_theory::{CaseParams, RootClassification, Verdict};
pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldSpec, DEFAULT_MAX_Q};
pub use generators::{Family, GeneratorId};
pub use matrix::{MatrixFq, Permutation};
pub use oracle::{CaseRecord, SweepReport, SweepSummary};
