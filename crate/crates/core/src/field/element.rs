use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::Field;
use crate::error::{Error, Result};
use crate::ntheory::{inv_mod, mul_mod};

pub(crate) type Coeffs = SmallVec<[u64; 4]>;

/// An element of a [`Field`] in canonical coefficient form.
///
/// Equality, ordering and hashing look only at the coefficients; ordering is
/// lexicographic with the constant term most significant. The arithmetic
/// operators panic on operands from different fields; [`arith`] is the
/// checked entry point.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Coeffs,
}

impl FieldElement {
    pub(crate) fn from_parts(field: Field, coeffs: Coeffs) -> Self {
        debug_assert_eq!(coeffs.len(), field.degree() as usize);
        Self { field, coeffs }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub(crate) fn coeffs_owned(&self) -> Coeffs {
        self.coeffs.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Value in `[0, p)` if the element lies in the prime subfield.
    pub fn as_prime_subfield(&self) -> Option<u64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn assert_same(&self, other: &Self) {
        assert!(self.field == other.field, "field mismatch: {} vs {}", self.field, other.field);
    }

    fn add_raw(&self, other: &Self) -> Self {
        let p = self.field.characteristic();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| {
                let s = a + b;
                if s >= p {
                    s - p
                } else {
                    s
                }
            })
            .collect();
        Self::from_parts(self.field.clone(), coeffs)
    }

    fn sub_raw(&self, other: &Self) -> Self {
        let p = self.field.characteristic();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| if a >= b { a - b } else { a + p - b })
            .collect();
        Self::from_parts(self.field.clone(), coeffs)
    }

    fn neg_raw(&self) -> Self {
        let p = self.field.characteristic();
        let coeffs = self.coeffs.iter().map(|&a| if a == 0 { 0 } else { p - a }).collect();
        Self::from_parts(self.field.clone(), coeffs)
    }

    fn mul_raw(&self, other: &Self) -> Self {
        let p = self.field.characteristic();
        let e = self.coeffs.len();
        if e == 1 {
            let c = mul_mod(self.coeffs[0], other.coeffs[0], p);
            return Self::from_parts(self.field.clone(), Coeffs::from_elem(c, 1));
        }
        // schoolbook product, then fold the top terms back using the monic
        // modulus x^e = -(m_0 + m_1 x + ... + m_{e-1} x^{e-1})
        let mut prod: SmallVec<[u64; 8]> = SmallVec::from_elem(0, 2 * e - 1);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        let modulus = self.field.modulus();
        for top in (e..2 * e - 1).rev() {
            let lead = prod[top];
            if lead == 0 {
                continue;
            }
            prod[top] = 0;
            for (k, &mk) in modulus[..e].iter().enumerate() {
                let slot = top - e + k;
                prod[slot] = (prod[slot] + mul_mod(p - lead, mk, p)) % p;
            }
        }
        Self::from_parts(self.field.clone(), prod[..e].iter().copied().collect())
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = self.field.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_raw(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_raw(&base);
            }
        }
        acc
    }

    /// `self^exp` for a signed exponent; negative powers need a unit.
    pub fn pow_signed(&self, exp: i64) -> Result<Self> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs()))
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            let p = self.field.characteristic();
            let c = inv_mod(self.coeffs[0], p).expect("nonzero residue mod a prime is invertible");
            return Ok(Self::from_parts(self.field.clone(), Coeffs::from_elem(c, 1)));
        }
        Ok(self.pow(self.field.order() - 2))
    }

    /// Multiplicative order, computed from the factorisation of `q - 1`.
    pub fn multiplicative_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut order = self.field.unit_order();
        for &(s, _) in self.field.unit_order_factorization() {
            while order % s == 0 && self.pow(order / s).is_one() {
                order /= s;
            }
        }
        Ok(order)
    }

    pub fn repr(&self) -> ElementRepr {
        if self.field.is_prime_field() {
            ElementRepr::Scalar(self.coeffs[0])
        } else {
            ElementRepr::Coeffs(self.coeffs.to_vec())
        }
    }
}

/// The operations accepted by [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Inv,
    Neg,
    Pow,
}

/// Second operand of [`arith`]; unary operations ignore it.
#[derive(Debug, Clone)]
pub enum Operand<'a> {
    Element(&'a FieldElement),
    Exponent(i64),
    None,
}

/// Checked arithmetic: field mismatches and zero inverses become errors.
pub fn arith(op: ArithOp, x: &FieldElement, y: Operand<'_>) -> Result<FieldElement> {
    let other = |y: Operand<'_>| match y {
        Operand::Element(y) => x.check_same(y).map(|_| y.clone()),
        _ => Err(Error::Parse(format!("{op:?} needs a field element operand"))),
    };
    match op {
        ArithOp::Add => Ok(x.add_raw(&other(y)?)),
        ArithOp::Sub => Ok(x.sub_raw(&other(y)?)),
        ArithOp::Mul => Ok(x.mul_raw(&other(y)?)),
        ArithOp::Inv => x.inv(),
        ArithOp::Neg => Ok(x.neg_raw()),
        ArithOp::Pow => match y {
            Operand::Exponent(k) => x.pow_signed(k),
            _ => Err(Error::Parse("pow needs an integer exponent".into())),
        },
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_prime_field() {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(f, "[")?;
            for (k, c) in self.coeffs.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Wire form of an element: a bare integer in prime fields, a coefficient
/// list otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRepr {
    Scalar(u64),
    Coeffs(Vec<u64>),
}

impl Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.repr().serialize(serializer)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $raw:ident, $assign_trait:ident, $assign:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.assert_same(rhs);
                self.$raw(rhs)
            }
        }

        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }

        impl $assign_trait<&FieldElement> for FieldElement {
            fn $assign(&mut self, rhs: &FieldElement) {
                *self = (&*self).$method(rhs);
            }
        }
    };
}

binop!(Add, add, add_raw, AddAssign, add_assign);
binop!(Sub, sub, sub_raw, SubAssign, sub_assign);
binop!(Mul, mul, mul_raw, MulAssign, mul_assign);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_raw()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_raw()
    }
}

impl std::iter::Product for FieldElement {
    fn product<I: Iterator<Item = FieldElement>>(mut iter: I) -> FieldElement {
        let first = iter.next().expect("product of an empty iterator has no field to live in");
        iter.fold(first, |acc, x| acc * x)
    }
}
