//! Unit-group structure: generators, roots of unity, power residues and
//! `d`-th roots.

use std::collections::HashMap;

use super::{Coeffs, Field, FieldElement};
use crate::error::{Error, Result};
use crate::ntheory::{gcd, inv_mod, is_prime};

/// The canonically smallest generator of `F_q^*`. Computed once per field
/// and cached.
pub fn find_generator(field: &Field) -> FieldElement {
    let coeffs = field.cached_generator(|| {
        let n = field.unit_order();
        field
            .units()
            .find(|g| {
                field
                    .unit_order_factorization()
                    .iter()
                    .all(|&(s, _)| !g.pow(n / s).is_one())
            })
            .expect("the unit group of a finite field is cyclic")
            .coeffs_owned()
    });
    FieldElement::from_parts(field.clone(), coeffs.clone())
}

/// `g^((q-1)/r)` for the canonical generator `g`.
pub fn primitive_root_of_unity(field: &Field, r: u64) -> Result<FieldElement> {
    if !is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    let n = field.unit_order();
    if n % r != 0 {
        return Err(Error::OrderNotDivisible { r, unit_order: n });
    }
    Ok(find_generator(field).pow(n / r))
}

/// Whether the unit `x` lies in the image of `y -> y^d`.
pub fn is_dth_power(x: &FieldElement, d: u64) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let n = x.field().unit_order();
    Ok(x.pow(n / gcd(d, n)).is_one())
}

/// Discrete logarithm of the unit `x` to the canonical generator, by
/// baby-step giant-step.
pub fn discrete_log(x: &FieldElement) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let field = x.field();
    let n = field.unit_order();
    let g = find_generator(field);
    let step = (n as f64).sqrt().ceil() as u64;
    let mut baby: HashMap<Coeffs, u64> = HashMap::with_capacity(step as usize);
    let mut cur = field.one();
    for j in 0..step {
        baby.entry(cur.coeffs_owned()).or_insert(j);
        cur = &cur * &g;
    }
    let giant = g.pow(n - step % n);
    let mut gamma = x.clone();
    for i in 0..=step {
        if let Some(&j) = baby.get(gamma.coeffs()) {
            return Ok((i * step + j) % n);
        }
        gamma = &gamma * &giant;
    }
    unreachable!("every unit is a power of the generator")
}

/// The canonically smallest `λ` with `λ^d = x`.
///
/// Solves `d·s ≡ log_g(x) (mod q - 1)` and minimises `g^s` over the
/// `gcd(d, q - 1)` solutions.
pub fn dth_root(x: &FieldElement, d: u64) -> Result<FieldElement> {
    if !is_dth_power(x, d)? {
        return Err(Error::NoRoot { d });
    }
    let field = x.field();
    let n = field.unit_order();
    let t = discrete_log(x)?;
    let common = gcd(d, n);
    debug_assert_eq!(t % common, 0);
    let reduced_n = n / common;
    let d_inv = inv_mod((d / common) % reduced_n, reduced_n).expect("d / gcd is coprime to n / gcd");
    let base = (((t / common) as u128 * d_inv as u128) % reduced_n as u128) as u64;
    let g = find_generator(field);
    let shift = g.pow(reduced_n);
    let mut cand = g.pow(base);
    let mut best = cand.clone();
    for _ in 1..common {
        cand = &cand * &shift;
        if cand < best {
            best = cand.clone();
        }
    }
    Ok(best)
}
