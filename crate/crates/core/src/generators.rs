//! The generator blocks `U` (diagonal), `V` (Fourier) and `W` (permutation)
//! and their towers `I_{r^a} ⊗ X ⊗ I_{r^b}` of total dimension `d = r^m`.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{primitive_root_of_unity, Field, FieldElement};
use crate::matrix::{permutation_matrix, MatrixFq, Permutation};
use crate::ntheory::is_prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    U,
    V,
    W,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::U, Family::V, Family::W];

    /// Smallest tower exponent for which the family is defined.
    pub fn min_m(self) -> u32 {
        match self {
            Family::W => 2,
            _ => 1,
        }
    }

    /// Valid tower positions `i` for exponent `m` (empty when `m` is too small).
    pub fn tower_positions(self, m: u32) -> RangeInclusive<u32> {
        match self {
            Family::W => 1..=m.saturating_sub(1),
            _ => 1..=m,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::U => "U",
            Family::V => "V",
            Family::W => "W",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "U" | "u" => Ok(Family::U),
            "V" | "v" => Ok(Family::V),
            "W" | "w" => Ok(Family::W),
            other => Err(Error::Parse(format!("unknown family {other:?}, expected U, V or W"))),
        }
    }
}

/// One tower matrix `U_i`, `V_i` or `W_i` over a given field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorId {
    family: Family,
    r: u64,
    m: u32,
    i: u32,
    field: Field,
}

impl GeneratorId {
    pub fn new(field: &Field, family: Family, r: u64, m: u32, i: u32) -> Result<Self> {
        validate_tower(field, family, r, m)?;
        let positions = family.tower_positions(m);
        if !positions.contains(&i) {
            return Err(Error::BadIndex {
                i,
                max: *positions.end(),
            });
        }
        Ok(Self {
            family,
            r,
            m,
            i,
            field: field.clone(),
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `d = r^m`.
    pub fn dimension(&self) -> usize {
        (self.r as usize).pow(self.m)
    }
}

/// Checks `r` prime, `r | q - 1`, `m` large enough for the family and
/// `r^m` representable.
pub(crate) fn validate_tower(field: &Field, family: Family, r: u64, m: u32) -> Result<()> {
    if !is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    if field.unit_order() % r != 0 {
        return Err(Error::OrderNotDivisible {
            r,
            unit_order: field.unit_order(),
        });
    }
    if m < family.min_m() {
        return Err(Error::BadM {
            m,
            min: family.min_m(),
        });
    }
    if usize::try_from(r).ok().and_then(|r| r.checked_pow(m)).is_none() {
        return Err(Error::DimensionMismatch(format!("{r}^{m} does not fit in memory")));
    }
    Ok(())
}

/// `diag(ω^{k(k+1)/2})` for `k = 0..r`.
pub fn gen_u(field: &Field, r: u64) -> Result<MatrixFq> {
    Ok(gen_u_with_root(&primitive_root_of_unity(field, r)?, r))
}

pub fn gen_u_with_root(omega: &FieldElement, r: u64) -> MatrixFq {
    let diag: Vec<_> = (0..r).map(|k| omega.pow(k * (k + 1) / 2 % r)).collect();
    MatrixFq::diagonal(omega.field(), &diag)
}

/// `[ω^{jk}]` for `j, k = 0..r`.
pub fn gen_v(field: &Field, r: u64) -> Result<MatrixFq> {
    Ok(gen_v_with_root(&primitive_root_of_unity(field, r)?, r))
}

pub fn gen_v_with_root(omega: &FieldElement, r: u64) -> MatrixFq {
    let powers: Vec<_> = (0..r).map(|k| omega.pow(k)).collect();
    MatrixFq::from_fn(omega.field(), r as usize, r as usize, |j, k| {
        powers[(j as u64 * k as u64 % r) as usize].clone()
    })
}

/// `a -> (a + ((a - 1) mod r)·r) mod r²` on `{0, .., r² - 1}`.
pub fn w_permutation(r: u64) -> Permutation {
    let r = r as usize;
    let images = (0..r * r).map(|a| (a + (a + r - 1) % r * r) % (r * r)).collect();
    Permutation::new(images).expect("the W map is a bijection")
}

pub fn gen_w(field: &Field, r: u64) -> MatrixFq {
    permutation_matrix(field, &w_permutation(r))
}

/// `I_{r^{m-i}} ⊗ X ⊗ I_{r^{i-1}}` for `U` and `V`,
/// `I_{r^{m-1-i}} ⊗ W ⊗ I_{r^{i-1}}` for `W`.
pub fn gen_tower(id: &GeneratorId) -> Result<MatrixFq> {
    let omega = primitive_root_of_unity(&id.field, id.r)?;
    gen_tower_with_root(id, &omega)
}

/// [`gen_tower`] with an explicit primitive `r`-th root of unity.
pub fn gen_tower_with_root(id: &GeneratorId, omega: &FieldElement) -> Result<MatrixFq> {
    if omega.field() != &id.field {
        return Err(Error::FieldMismatch);
    }
    let (block, block_exp) = match id.family {
        Family::U => (gen_u_with_root(omega, id.r), 1),
        Family::V => (gen_v_with_root(omega, id.r), 1),
        Family::W => (gen_w(&id.field, id.r), 2),
    };
    let r = id.r as usize;
    let left = MatrixFq::identity(&id.field, r.pow(id.m - block_exp - (id.i - 1)));
    let right = MatrixFq::identity(&id.field, r.pow(id.i - 1));
    left.kron(&block)?.kron(&right)
}
