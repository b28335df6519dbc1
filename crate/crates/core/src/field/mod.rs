//! Finite fields `F_{p^e}` in a polynomial basis.
//!
//! A [`Field`] is a cheap, clonable handle to an immutable [`FieldSpec`].
//! Elements are coefficient vectors, least-degree coefficient first, reduced
//! modulo a fixed monic irreducible polynomial. The canonical modulus chosen by
//! [`make_field`] is the lexicographically smallest monic irreducible of degree
//! `e` with coefficients compared from the constant term upwards, so every
//! element has the same coordinates in every run.

mod element;
mod poly;
mod roots;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ntheory;

pub use element::{arith, ArithOp, ElementRepr, FieldElement, Operand};
pub use roots::{discrete_log, dth_root, find_generator, is_dth_power, primitive_root_of_unity};
pub use crate::ntheory::legendre;

pub(crate) use element::Coeffs;

/// Default upper bound on `q` accepted by [`make_field`].
pub const DEFAULT_MAX_Q: u64 = 1 << 20;

/// Immutable description of `F_{p^e}` plus cached unit-group data.
pub struct FieldSpec {
    p: u64,
    e: u32,
    modulus: Vec<u64>,
    q: u64,
    unit_order_factorization: Vec<(u64, u32)>,
    generator: OnceLock<Coeffs>,
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Monic modulus, `e + 1` coefficients, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn unit_order(&self) -> u64 {
        self.q - 1
    }

    /// Factorisation of `q - 1` as ascending `(prime, multiplicity)` pairs.
    pub fn unit_order_factorization(&self) -> &[(u64, u32)] {
        &self.unit_order_factorization
    }

    pub fn is_prime_field(&self) -> bool {
        self.e == 1
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Shared handle to a [`FieldSpec`].
#[derive(Clone)]
pub struct Field(Arc<FieldSpec>);

/// Builds `F_{p^e}` with the canonical modulus and the default size bound.
pub fn make_field(p: u64, e: u32) -> Result<Field> {
    Field::with_bound(p, e, DEFAULT_MAX_Q)
}

impl Field {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        make_field(p, e)
    }

    pub fn with_bound(p: u64, e: u32, max_q: u64) -> Result<Self> {
        let q = check_order(p, e, max_q)?;
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            poly::smallest_irreducible(p, e as usize)
        };
        Ok(Self::assemble(p, e, modulus, q))
    }

    /// Builds a field from an explicit modulus, checking that it is monic and
    /// irreducible.
    pub fn with_modulus(p: u64, modulus: &[u64], max_q: u64) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidDegree);
        }
        let e = (modulus.len() - 1) as u32;
        let q = check_order(p, e, max_q)?;
        if modulus.last() != Some(&1) {
            return Err(Error::InvalidModulus("not monic".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus("coefficient out of range".into()));
        }
        if !poly::is_irreducible(modulus, p) {
            return Err(Error::InvalidModulus("reducible".into()));
        }
        Ok(Self::assemble(p, e, modulus.to_vec(), q))
    }

    fn assemble(p: u64, e: u32, modulus: Vec<u64>, q: u64) -> Self {
        Field(Arc::new(FieldSpec {
            p,
            e,
            modulus,
            q,
            unit_order_factorization: ntheory::factorize(q - 1),
            generator: OnceLock::new(),
        }))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::from_parts(self.clone(), Coeffs::from_elem(0, self.e as usize))
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let mut coeffs = Coeffs::from_elem(0, self.e as usize);
        coeffs[0] = n.rem_euclid(self.p as i64) as u64;
        FieldElement::from_parts(self.clone(), coeffs)
    }

    /// Element from coefficients (constant term first). Shorter inputs are
    /// zero-padded.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.e as usize {
            return Err(Error::Parse(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.e
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::Parse(format!("coefficient {c} not reduced mod {}", self.p)));
        }
        let mut out = Coeffs::from_slice(coeffs);
        out.resize(self.e as usize, 0);
        Ok(FieldElement::from_parts(self.clone(), out))
    }

    /// The `index`-th element in canonical (coefficient-lexicographic) order.
    pub fn element_at(&self, mut index: u64) -> FieldElement {
        assert!(index < self.q, "index {index} out of range for a field of order {}", self.q);
        let e = self.e as usize;
        let mut coeffs = Coeffs::from_elem(0, e);
        for k in (0..e).rev() {
            coeffs[k] = index % self.p;
            index /= self.p;
        }
        FieldElement::from_parts(self.clone(), coeffs)
    }

    /// Position of `x` in canonical order; inverse of [`Field::element_at`].
    pub fn index_of(&self, x: &FieldElement) -> u64 {
        x.coeffs().iter().fold(0, |acc, &c| acc * self.p + c)
    }

    /// All `q` elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |n| self.element_at(n))
    }

    /// The `q - 1` units in canonical order.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.q).map(move |n| self.element_at(n))
    }

    /// Parses `"3"` (prime-subfield integer) or `"[3,1]"` (coefficients).
    pub fn parse_element(&self, token: &str) -> Result<FieldElement> {
        let token = token.trim();
        if let Some(inner) = token.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let coeffs = inner
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<u64>()
                        .map_err(|err| Error::Parse(format!("bad coefficient {c:?}: {err}")))
                })
                .collect::<Result<Vec<_>>>()?;
            self.from_coeffs(&coeffs)
        } else {
            let n = token
                .parse::<u64>()
                .map_err(|err| Error::Parse(format!("bad element {token:?}: {err}")))?;
            self.from_coeffs(&[n])
        }
    }

    pub fn element_from_repr(&self, repr: &ElementRepr) -> Result<FieldElement> {
        match repr {
            ElementRepr::Scalar(n) => self.from_coeffs(&[*n]),
            ElementRepr::Coeffs(c) => self.from_coeffs(c),
        }
    }

    pub(crate) fn cached_generator(&self, init: impl FnOnce() -> Coeffs) -> &Coeffs {
        self.0.generator.get_or_init(init)
    }

    pub fn repr(&self) -> FieldRepr {
        FieldRepr {
            p: self.p,
            e: self.e,
            modulus: self.modulus.clone(),
        }
    }
}

fn check_order(p: u64, e: u32, max_q: u64) -> Result<u64> {
    if !ntheory::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::InvalidDegree);
    }
    match p.checked_pow(e) {
        Some(q) if q <= max_q => Ok(q),
        _ => Err(Error::TooLarge { p, e, max_q }),
    }
}

impl std::ops::Deref for Field {
    type Target = FieldSpec;

    fn deref(&self) -> &FieldSpec {
        &self.0
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.p == other.p && self.e == other.e && self.modulus == other.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{} mod {:?}", self.p, self.e, self.modulus)
        }
    }
}

/// Wire form of a field: `{"p":..,"e":..,"modulus":[c0,..,ce]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldRepr {
    pub p: u64,
    pub e: u32,
    pub modulus: Vec<u64>,
}

impl FieldRepr {
    pub fn into_field(self, max_q: u64) -> Result<Field> {
        if self.modulus.len() != self.e as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "degree {} modulus for e = {}",
                self.modulus.len().saturating_sub(1),
                self.e
            )));
        }
        Field::with_modulus(self.p, &self.modulus, max_q)
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.repr().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        FieldRepr::deserialize(deserializer)?
            .into_field(u64::MAX)
            .map_err(serde::de::Error::custom)
    }
}
