use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::Ring;
use crate::error::{Error, Result};

/// The residue ring `Z/m`; the modulus is chosen at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residues {
    m: u64,
}

impl Residues {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::invalid(format!("modulus must be at least 2, got {m}")));
        }
        Ok(Residues { m })
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn from_u64(&self, v: u64) -> ModInt {
        ModInt { m: self.m, value: v % self.m }
    }
}

/// A residue class modulo `m`, stored as its representative in `[0, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModInt {
    m: u64,
    value: u64,
}

impl ModInt {
    pub fn new(value: u64, m: u64) -> Result<Self> {
        Ok(Residues::new(m)?.from_u64(value))
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Ring for Residues {
    type Elem = ModInt;

    fn tag(&self) -> String {
        format!("Z/{}", self.m)
    }

    fn zero(&self) -> ModInt {
        ModInt { m: self.m, value: 0 }
    }

    fn one(&self) -> ModInt {
        ModInt { m: self.m, value: 1 }
    }

    fn from_int(&self, v: &BigInt) -> ModInt {
        let r = v.mod_floor(&BigInt::from(self.m));
        ModInt { m: self.m, value: r.to_u64().expect("residue below modulus fits u64") }
    }

    fn add(&self, a: &ModInt, b: &ModInt) -> ModInt {
        let s = (a.value as u128 + b.value as u128) % self.m as u128;
        ModInt { m: self.m, value: s as u64 }
    }

    fn sub(&self, a: &ModInt, b: &ModInt) -> ModInt {
        let s = (a.value as u128 + (self.m - b.value) as u128) % self.m as u128;
        ModInt { m: self.m, value: s as u64 }
    }

    fn mul(&self, a: &ModInt, b: &ModInt) -> ModInt {
        let p = (a.value as u128 * b.value as u128) % self.m as u128;
        ModInt { m: self.m, value: p as u64 }
    }

    fn neg(&self, a: &ModInt) -> ModInt {
        let v = if a.value == 0 { 0 } else { self.m - a.value };
        ModInt { m: self.m, value: v }
    }

    fn is_zero(&self, a: &ModInt) -> bool {
        a.value == 0
    }

    fn unit_inverse(&self, a: &ModInt) -> Option<ModInt> {
        let eg = (a.value as i128).extended_gcd(&(self.m as i128));
        if eg.gcd != 1 {
            return None;
        }
        let v = eg.x.rem_euclid(self.m as i128) as u64;
        Some(ModInt { m: self.m, value: v })
    }
}
