use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Ring;
use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The ring of cyclotomic integers `Z[ζ_q]` for a prime `q`.
///
/// Elements are stored in the power basis `1, ζ, …, ζ^{q-2}`; the relation
/// `ζ^{q-1} = -(1 + ζ + … + ζ^{q-2})` keeps every element in that basis.
/// For `q = 2` the basis is just `1` and `ζ = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    q: u32,
}

impl Cyclotomic {
    pub fn new(q: u32) -> Result<Self> {
        if !is_prime(q as u64) {
            return Err(Error::invalid(format!("cyclotomic modulus {q} is not prime")));
        }
        Ok(Cyclotomic { q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    fn dim(&self) -> usize {
        self.q as usize - 1
    }

    /// Builds an element from its coordinates in the reduced basis.
    pub fn element(&self, coeffs: Vec<BigInt>) -> Result<CyclotomicInt> {
        if coeffs.len() != self.dim() {
            return Err(Error::invalid(format!(
                "Z[ζ{}] elements need {} coordinates, got {}",
                self.q,
                self.dim(),
                coeffs.len()
            )));
        }
        Ok(CyclotomicInt { q: self.q, coeffs })
    }

    /// `ζ^e`, with `e` taken modulo `q`.
    pub fn root_power(&self, e: i64) -> CyclotomicInt {
        let q = self.q as i64;
        let r = e.rem_euclid(q) as usize;
        let mut coeffs = vec![BigInt::zero(); self.dim()];
        if r == self.dim() {
            for c in &mut coeffs {
                *c = -BigInt::one();
            }
        } else {
            coeffs[r] = BigInt::one();
        }
        CyclotomicInt { q: self.q, coeffs }
    }

    /// Reduces a length-`q` vector (exponents `0..q`, using only `ζ^q = 1`)
    /// to the basis by eliminating `ζ^{q-1}`.
    fn reduce_full(&self, mut full: Vec<BigInt>) -> CyclotomicInt {
        debug_assert_eq!(full.len(), self.q as usize);
        let top = full.pop().expect("q >= 2");
        if !top.is_zero() {
            for c in &mut full {
                *c -= &top;
            }
        }
        CyclotomicInt { q: self.q, coeffs: full }
    }

    fn mul_unchecked(&self, a: &CyclotomicInt, b: &CyclotomicInt) -> CyclotomicInt {
        let q = self.q as usize;
        let mut full = vec![BigInt::zero(); q];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i + j) % q;
                full[k] += x * y;
            }
        }
        self.reduce_full(full)
    }
}

/// An element `a₀ + a₁ζ + … + a_{q-2}ζ^{q-2}` of `Z[ζ_q]`, always reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    q: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    /// `ζ_q^e` in reduced form. `q` must be prime.
    pub fn root_power(q: u32, e: i64) -> Result<Self> {
        Ok(Cyclotomic::new(q)?.root_power(e))
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn ring(&self) -> Cyclotomic {
        Cyclotomic { q: self.q }
    }

    /// Coordinates in the basis `1, ζ, …, ζ^{q-2}`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.q == other.q {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.ring().tag(), right: other.ring().tag() })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.ring().add(self, other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.ring().mul_unchecked(self, other))
    }

    /// The rational integer `a₀`, provided every ζ-coordinate vanishes.
    pub fn to_integer(&self) -> Result<BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRationalInteger(self.to_string()))
        }
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        f.write_str("ζ")?;
                    } else {
                        write!(f, "ζ^{i}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Ring for Cyclotomic {
    type Elem = CyclotomicInt;

    fn tag(&self) -> String {
        format!("Z[ζ{}]", self.q)
    }

    fn zero(&self) -> CyclotomicInt {
        CyclotomicInt { q: self.q, coeffs: vec![BigInt::zero(); self.dim()] }
    }

    fn one(&self) -> CyclotomicInt {
        self.root_power(0)
    }

    fn from_int(&self, v: &BigInt) -> CyclotomicInt {
        let mut x = self.zero();
        x.coeffs[0] = v.clone();
        x
    }

    fn add(&self, a: &CyclotomicInt, b: &CyclotomicInt) -> CyclotomicInt {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CyclotomicInt { q: self.q, coeffs }
    }

    fn sub(&self, a: &CyclotomicInt, b: &CyclotomicInt) -> CyclotomicInt {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        CyclotomicInt { q: self.q, coeffs }
    }

    fn mul(&self, a: &CyclotomicInt, b: &CyclotomicInt) -> CyclotomicInt {
        self.mul_unchecked(a, b)
    }

    fn neg(&self, a: &CyclotomicInt) -> CyclotomicInt {
        CyclotomicInt { q: self.q, coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }

    fn is_zero(&self, a: &CyclotomicInt) -> bool {
        a.coeffs.iter().all(Zero::is_zero)
    }

    /// Recognizes the units `±ζ^k` only. These are all the units when
    /// `q = 3`; for larger `q` other cyclotomic units are reported as
    /// non-invertible.
    fn unit_inverse(&self, a: &CyclotomicInt) -> Option<CyclotomicInt> {
        let q = self.q as i64;
        for k in 0..q {
            let root = self.root_power(k);
            for sign in [1i64, -1] {
                let cand = if sign == 1 { root.clone() } else { self.neg(&root) };
                if cand == *a {
                    let inv = self.root_power(-k);
                    return Some(if sign == 1 { inv } else { self.neg(&inv) });
                }
            }
        }
        None
    }

    fn add_assign(&self, acc: &mut CyclotomicInt, b: &CyclotomicInt) {
        for (x, y) in acc.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
    }
}
