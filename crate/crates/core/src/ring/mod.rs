//! Exact coefficient rings for series arithmetic.
//!
//! A [`Ring`] is a small context value (the integers, `Z[ζ_q]` for a prime
//! `q`, or `Z/m`) that knows how to combine its elements. Series carry their
//! ring alongside the coefficients, so two series can only be combined when
//! their rings compare equal.
//!
//! Three rings are provided:
//!
//! - [`Integers`]: arbitrary-precision `BigInt` coefficients.
//! - [`Cyclotomic`]: the cyclotomic integers `Z[ζ_q]`, elements [`CyclotomicInt`].
//! - [`Residues`]: the residue ring `Z/m`, elements [`ModInt`].
//!
//! Ring homomorphisms between them are expressed by [`Embed`].

mod cyclotomic;
mod modint;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use cyclotomic::{is_prime, Cyclotomic, CyclotomicInt};
pub use modint::{ModInt, Residues};

/// A commutative ring with identity, given as a context value.
///
/// Elements must be produced by the same context they are combined with;
/// the ring operations assume it.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    /// Short human-readable tag, used in mismatch errors and reports.
    fn tag(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under the unique ring map `Z -> self`.
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, v: &BigInt) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Multiplicative inverse if `a` is a unit.
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, b);
    }

    /// `acc += a * b`
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let p = self.mul(a, b);
        self.add_assign(acc, &p);
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_int(&BigInt::from(v))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// Checks that two ring contexts agree.
pub fn ensure_same<R: Ring>(a: &R, b: &R) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch { left: a.tag(), right: b.tag() })
    }
}

/// The rational integers with exact `BigInt` elements.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn tag(&self) -> String {
        "Z".into()
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_int(&self, v: &BigInt) -> BigInt {
        v.clone()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn unit_inverse(&self, a: &BigInt) -> Option<BigInt> {
        if a.abs().is_one() {
            Some(a.clone())
        } else {
            None
        }
    }

    fn add_assign(&self, acc: &mut BigInt, b: &BigInt) {
        *acc += b;
    }

    fn mul_add_assign(&self, acc: &mut BigInt, a: &BigInt, b: &BigInt) {
        // Multiplying by ±1 is the common case in sparse Euler products.
        if a.is_one() {
            *acc += b;
        } else if b.is_one() {
            *acc += a;
        } else if a.is_negative() && a.magnitude().is_one() {
            *acc -= b;
        } else {
            *acc += a * b;
        }
    }
}

/// A ring homomorphism from `Self` into `T`.
///
/// Fails when the element has no image, e.g. `ζ` has no image in `Z`.
pub trait Embed<T: Ring>: Ring {
    fn embed(&self, target: &T, x: &Self::Elem) -> Result<T::Elem>;
}

impl Embed<Integers> for Integers {
    fn embed(&self, _: &Integers, x: &BigInt) -> Result<BigInt> {
        Ok(x.clone())
    }
}

impl Embed<Cyclotomic> for Integers {
    fn embed(&self, target: &Cyclotomic, x: &BigInt) -> Result<CyclotomicInt> {
        Ok(target.from_int(x))
    }
}

impl Embed<Residues> for Integers {
    fn embed(&self, target: &Residues, x: &BigInt) -> Result<ModInt> {
        Ok(target.from_int(x))
    }
}

impl Embed<Integers> for Cyclotomic {
    fn embed(&self, _: &Integers, x: &CyclotomicInt) -> Result<BigInt> {
        x.to_integer()
    }
}
