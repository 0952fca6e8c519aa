//! Truncated formal power series `c₀ + c₁x + … + c_{N-1}x^{N-1} + O(x^N)`.
//!
//! A [`TruncatedSeries`] owns its coefficient ring and a dense coefficient
//! vector whose length is the *order* `N`. Every operation respects the
//! truncation: nothing at or above `x^N` is ever read or produced. When two
//! series of different orders meet in a binary operation, the result is
//! truncated to the smaller order, which is the only order at which the
//! result is known.
//!
//! Besides ring arithmetic the module provides the progression machinery
//! used by roots-of-unity filtering: a series is of *type `r` mod `q`* when
//! it is supported on exponents `≡ r (mod q)`, and [`TruncatedSeries::extract`]
//! pulls out that part, either in place ([`ExtractMode::Keep`]) or as the
//! compressed series `Σ b(qn + r) xⁿ` ([`ExtractMode::Compress`]).

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{ensure_same, Embed, Integers, Ring};

/// Hard ceiling on the number of coefficients a series may hold.
pub const MAX_SERIES_ORDER: usize = 10_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<R: Ring = Integers> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

/// Series with exact integer coefficients.
pub type IntSeries = TruncatedSeries<Integers>;

/// A residue class `r mod q` of exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProgressionClass {
    modulus: usize,
    residue: usize,
}

impl ProgressionClass {
    pub fn new(modulus: usize, residue: usize) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::invalid(format!("progression modulus must be at least 2, got {modulus}")));
        }
        if residue >= modulus {
            return Err(Error::invalid(format!("residue {residue} is not below modulus {modulus}")));
        }
        Ok(ProgressionClass { modulus, residue })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn residue(&self) -> usize {
        self.residue
    }

    pub fn contains(&self, exponent: usize) -> bool {
        exponent % self.modulus == self.residue
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtractMode {
    /// Zero every coefficient outside the class; the order is unchanged.
    Keep,
    /// Return `Σ c(qn + r) xⁿ`, i.e. divide by `x^r` and substitute `x^q -> x`.
    Compress,
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::invalid("series order must be at least 1"));
    }
    if order > MAX_SERIES_ORDER {
        return Err(Error::Resource { requested: order, cap: MAX_SERIES_ORDER });
    }
    Ok(())
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Result<Self> {
        check_order(coeffs.len())?;
        Ok(TruncatedSeries { ring, coeffs })
    }

    pub fn from_fn(ring: R, order: usize, mut f: impl FnMut(usize) -> R::Elem) -> Result<Self> {
        check_order(order)?;
        let coeffs = (0..order).map(&mut f).collect();
        Ok(TruncatedSeries { ring, coeffs })
    }

    pub fn zero(ring: R, order: usize) -> Result<Self> {
        let z = ring.zero();
        Self::from_fn(ring, order, |_| z.clone())
    }

    pub fn one(ring: R, order: usize) -> Result<Self> {
        Self::monomial(ring.clone(), ring.one(), 0, order)
    }

    /// `c·x^e + O(x^order)`; vanishes entirely when `e >= order`.
    pub fn monomial(ring: R, c: R::Elem, e: usize, order: usize) -> Result<Self> {
        let mut s = Self::zero(ring, order)?;
        if e < order {
            s.coeffs[e] = c;
        }
        Ok(s)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Number of retained coefficients `N` (exponents `0..N`).
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, e: usize) -> Option<&R::Elem> {
        self.coeffs.get(e)
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &R::Elem)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !self.ring.is_zero(c))
    }

    /// Restriction to `order` coefficients. Orders beyond the current one
    /// are clamped, since those coefficients are unknown.
    pub fn truncated(&self, order: usize) -> Result<Self> {
        check_order(order)?;
        let n = order.min(self.order());
        Ok(TruncatedSeries { ring: self.ring.clone(), coeffs: self.coeffs[..n].to_vec() })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R::Elem, &R::Elem) -> R::Elem) -> Result<Self> {
        ensure_same(&self.ring, &other.ring)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(&self.ring, a, b)).collect();
        Ok(TruncatedSeries { ring: self.ring.clone(), coeffs })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, R::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, R::sub)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        TruncatedSeries { ring: self.ring.clone(), coeffs }
    }

    pub fn scale(&self, k: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.mul(c, k)).collect();
        TruncatedSeries { ring: self.ring.clone(), coeffs }
    }

    /// Cauchy product truncated to the smaller order. Zero coefficients of
    /// the sparser factor are skipped, so multiplying by a lacunary series
    /// such as `E(x)` costs `O(N · #terms)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.ring, &other.ring)?;
        let n = self.order().min(other.order());
        let count = |s: &Self| s.coeffs[..n].iter().filter(|c| !s.ring.is_zero(c)).count();
        let (sparse, dense) = if count(self) <= count(other) { (self, other) } else { (other, self) };
        let mut out = vec![self.ring.zero(); n];
        for (i, a) in sparse.coeffs[..n].iter().enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in dense.coeffs[..n - i].iter().enumerate() {
                self.ring.mul_add_assign(&mut out[i + j], a, b);
            }
        }
        Ok(TruncatedSeries { ring: self.ring.clone(), coeffs: out })
    }

    /// Multiplies in place by the binomial `1 + c·x^e`.
    pub fn mul_binomial(&mut self, c: &R::Elem, e: usize) {
        let n = self.order();
        if e == 0 {
            let f = self.ring.add(&self.ring.one(), c);
            for x in &mut self.coeffs {
                *x = self.ring.mul(x, &f);
            }
            return;
        }
        for i in (e..n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            self.ring.mul_add_assign(&mut hi[0], c, &lo[i - e]);
        }
    }

    fn constant_inverse(&self) -> Result<R::Elem> {
        self.ring.unit_inverse(&self.coeffs[0]).ok_or_else(|| Error::NotInvertible(self.coeffs[0].to_string()))
    }

    /// `self / den`, by the forward recurrence
    /// `q_n = c₀⁻¹ (a_n − Σ_{k≥1} c_k q_{n−k})` over the nonzero `c_k`.
    pub fn div(&self, den: &Self) -> Result<Self> {
        ensure_same(&self.ring, &den.ring)?;
        let inv0 = den.constant_inverse()?;
        let n = self.order().min(den.order());
        let minus_support: Vec<(usize, R::Elem)> = den.coeffs[..n]
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !self.ring.is_zero(c))
            .map(|(k, c)| (k, self.ring.neg(c)))
            .collect();
        let unit_lead = self.ring.is_one(&inv0);
        let mut out: Vec<R::Elem> = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = self.coeffs[i].clone();
            for (k, minus_c) in &minus_support {
                if *k > i {
                    break;
                }
                self.ring.mul_add_assign(&mut acc, minus_c, &out[i - k]);
            }
            out.push(if unit_lead { acc } else { self.ring.mul(&acc, &inv0) });
        }
        Ok(TruncatedSeries { ring: self.ring.clone(), coeffs: out })
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        Self::one(self.ring.clone(), self.order())?.div(self)
    }

    /// `self^e` by repeated squaring; negative powers go through [`inverse`](Self::inverse).
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one(self.ring.clone(), self.order())?;
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// `s(x^k)` at the same order.
    pub fn substitute_power(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("substitution power must be at least 1"));
        }
        let mut out = Self::zero(self.ring.clone(), self.order())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            match i.checked_mul(k) {
                Some(e) if e < out.order() => out.coeffs[e] = c.clone(),
                _ => break,
            }
        }
        Ok(out)
    }

    /// `x^t · s`, truncated at the original order.
    pub fn shift(&self, t: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![self.ring.zero(); n];
        if t < n {
            coeffs[t..].clone_from_slice(&self.coeffs[..n - t]);
        }
        TruncatedSeries { ring: self.ring.clone(), coeffs }
    }

    pub fn extract(&self, class: ProgressionClass, mode: ExtractMode) -> Result<Self> {
        match mode {
            ExtractMode::Keep => {
                let coeffs = self
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if class.contains(i) { c.clone() } else { self.ring.zero() })
                    .collect();
                Ok(TruncatedSeries { ring: self.ring.clone(), coeffs })
            }
            ExtractMode::Compress => {
                if self.order() <= class.residue {
                    return Err(Error::invalid(format!(
                        "order {} holds no exponent ≡ {} (mod {})",
                        self.order(),
                        class.residue,
                        class.modulus
                    )));
                }
                let coeffs = self.coeffs[class.residue..].iter().step_by(class.modulus).cloned().collect();
                Ok(TruncatedSeries { ring: self.ring.clone(), coeffs })
            }
        }
    }

    /// Element-wise image under the homomorphism `R -> T`.
    pub fn map_ring<T: Ring>(&self, target: &T) -> Result<TruncatedSeries<T>>
    where
        R: Embed<T>,
    {
        let coeffs = self.coeffs.iter().map(|c| self.ring.embed(target, c)).collect::<Result<_>>()?;
        Ok(TruncatedSeries { ring: target.clone(), coeffs })
    }

    /// First exponent (below the common order) where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Result<Option<usize>> {
        ensure_same(&self.ring, &other.ring)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b))
    }
}

impl IntSeries {
    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(Integers, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let s = c.to_string();
            let compound = s[1..].contains([' ', '+', '-']);
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, s.clone()),
            };
            let body = if compound { format!("({body})") } else { body };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = body == "1";
            match e {
                0 => f.write_str(&body)?,
                _ => {
                    if !unit {
                        f.write_str(&body)?;
                    }
                    if e == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{e}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Cyclotomic, Residues};
    use proptest::prelude::*;

    fn s(v: &[i64]) -> IntSeries {
        IntSeries::from_i64s(v).unwrap()
    }

    fn ints(x: &IntSeries) -> Vec<i64> {
        x.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    /// Dense product of (1 - x^n) for n < order; independent of the pentagonal route.
    fn euler_product(order: usize) -> IntSeries {
        let mut e = IntSeries::one(Integers, order).unwrap();
        for n in 1..order {
            e.mul_binomial(&BigInt::from(-1), n);
        }
        e
    }

    #[test]
    fn make() {
        assert_eq!(s(&[1]).order(), 1);
        assert_eq!(s(&[1, -1]).to_string(), "1 - x + O(x^2)");
        assert_eq!(s(&[0, 1, 0]).to_string(), "x + O(x^3)");
        assert!(matches!(IntSeries::from_i64s(&[]), Err(Error::InvalidArgument(_))));
        assert!(matches!(IntSeries::zero(Integers, MAX_SERIES_ORDER + 1), Err(Error::Resource { .. })));
    }

    #[test]
    fn additive_ops() {
        assert_eq!(s(&[1, -1]).add(&s(&[0, 1])).unwrap(), s(&[1, 0]));
        let a = s(&[3, 0, -2, 5]);
        assert_eq!(a.neg().neg(), a);
        assert_eq!(a.scale(&BigInt::from(3)), s(&[9, 0, -6, 15]));
        // mixed orders truncate to the smaller one
        assert_eq!(a.sub(&s(&[1, 1])).unwrap(), s(&[2, -1]));
    }

    #[test]
    fn multiplication() {
        let geometric = s(&[1; 8]);
        assert_eq!(s(&[1, -1, 0, 0, 0, 0, 0, 0]).mul(&geometric).unwrap(), s(&[1, 0, 0, 0, 0, 0, 0, 0]));
        let a = s(&[2, -1, 7]);
        assert_eq!(a.mul(&IntSeries::one(Integers, 3).unwrap()).unwrap(), a);
    }

    #[test]
    fn e_times_e2_opening_terms() {
        let e = euler_product(12);
        let e2 = e.substitute_power(2).unwrap();
        assert_eq!(ints(&e.mul(&e2).unwrap()), [1, -1, -2, 1, 0, 2, 1, 0, 0, -2, 1, -2]);
    }

    #[test]
    fn inverse() {
        assert_eq!(s(&[1, -1, 0, 0, 0]).inverse().unwrap(), s(&[1; 5]));
        let e = euler_product(7);
        let prod = e.mul(&e.substitute_power(2).unwrap()).unwrap();
        // two-coloured partition counts, enumerated by hand for n <= 6
        assert_eq!(ints(&prod.inverse().unwrap()), [1, 1, 3, 4, 9, 12, 23]);
        assert_eq!(prod.inverse().unwrap().inverse().unwrap(), prod);
        assert!(matches!(s(&[2, 1]).inverse(), Err(Error::NotInvertible(_))));
        assert!(matches!(s(&[0, 1]).inverse(), Err(Error::NotInvertible(_))));
        assert_eq!(s(&[-1, 1, 0]).inverse().unwrap(), s(&[-1, -1, -1]));
    }

    #[test]
    fn powers() {
        assert_eq!(s(&[1, -1, 0, 0]).pow(2).unwrap(), s(&[1, -2, 1, 0]));
        assert_eq!(s(&[5, 3]).pow(0).unwrap(), s(&[1, 0]));
        assert_eq!(ints(&euler_product(7).pow(-1).unwrap()), [1, 1, 2, 3, 5, 7, 11]);
        assert!(matches!(s(&[3, 1]).pow(-2), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn substitution_and_shift() {
        assert_eq!(s(&[1, -1, 0]).substitute_power(2).unwrap(), s(&[1, 0, -1]));
        let e9 = euler_product(20).substitute_power(9).unwrap();
        assert_eq!(e9.terms().map(|(e, _)| e).collect::<Vec<_>>(), [0, 9, 18]);
        assert_eq!(e9.coeff(9), Some(&BigInt::from(-1)));
        let a = s(&[4, 5, 6]);
        assert_eq!(a.substitute_power(1).unwrap(), a);
        assert!(matches!(a.substitute_power(0), Err(Error::InvalidArgument(_))));
        assert_eq!(s(&[1, 0, 0]).shift(2), s(&[0, 0, 1]));
        assert_eq!(a.shift(0), a);
        assert_eq!(a.shift(5), s(&[0, 0, 0]));
    }

    #[test]
    fn extraction() {
        let e = euler_product(12);
        let p = e.mul(&e.substitute_power(2).unwrap()).unwrap();
        let c = |q, r| ProgressionClass::new(q, r).unwrap();
        assert_eq!(ints(&p.extract(c(3, 1), ExtractMode::Keep).unwrap()), [0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0]);
        assert_eq!(ints(&p.extract(c(3, 2), ExtractMode::Keep).unwrap()), [0, 0, -2, 0, 0, 2, 0, 0, 0, 0, 0, -2]);

        let cubic = euler_product(9).mul(&euler_product(9).substitute_power(2).unwrap()).unwrap().inverse().unwrap();
        let compressed = cubic.extract(c(3, 2), ExtractMode::Compress).unwrap();
        assert_eq!(ints(&compressed), [3, 12, 54]);

        assert_eq!(s(&[1, 2, 3, 4, 5, 6, 7]).extract(c(3, 1), ExtractMode::Compress).unwrap().order(), 2);
        assert!(s(&[1, 2]).extract(c(5, 3), ExtractMode::Compress).is_err());
        assert!(matches!(ProgressionClass::new(3, 3), Err(Error::InvalidArgument(_))));
        assert!(ProgressionClass::new(1, 0).is_err());
    }

    #[test]
    fn ring_maps() {
        let r3 = Residues::new(3).unwrap();
        let m = s(&[1, -2]).map_ring(&r3).unwrap();
        assert_eq!(m.coeffs().iter().map(|c| c.value()).collect::<Vec<_>>(), [1, 1]);

        let z3 = Cyclotomic::new(3).unwrap();
        let a = s(&[1, -1]);
        assert_eq!(a.map_ring(&z3).unwrap().map_ring(&Integers).unwrap(), a);

        let zeta = TruncatedSeries::monomial(z3, z3.root_power(1), 1, 3).unwrap();
        assert!(matches!(zeta.map_ring(&Integers), Err(Error::NotRationalInteger(_))));
    }

    #[test]
    fn ring_mismatch() {
        let r3 = Residues::new(3).unwrap();
        let r5 = Residues::new(5).unwrap();
        let a = s(&[1, 2]).map_ring(&r3).unwrap();
        let b = s(&[1, 2]).map_ring(&r5).unwrap();
        assert!(matches!(a.add(&b), Err(Error::RingMismatch { .. })));
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch { .. })));
        assert!(matches!(a.first_difference(&b), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn mul_binomial_matches_mul() {
        let a = s(&[1, 4, -2, 0, 3, 1]);
        let mut b = a.clone();
        b.mul_binomial(&BigInt::from(-3), 2);
        assert_eq!(b, a.mul(&s(&[1, 0, -3, 0, 0, 0])).unwrap());
        let mut c = a.clone();
        c.mul_binomial(&BigInt::from(1), 0);
        assert_eq!(c, a.scale(&BigInt::from(2)));
    }

    #[test]
    fn display_cyclotomic_coefficients() {
        let z3 = Cyclotomic::new(3).unwrap();
        let a = TruncatedSeries::new(z3, vec![z3.one(), z3.root_power(2), z3.neg(&z3.root_power(1))]).unwrap();
        assert_eq!(a.to_string(), "1 + (-1 - ζ)x - ζx^2 + O(x^3)");
    }

    fn arb_series(order: usize) -> impl Strategy<Value = IntSeries> {
        prop::collection::vec(-20i64..20, order).prop_map(|v| s(&v))
    }

    fn arb_unit_series(order: usize) -> impl Strategy<Value = IntSeries> {
        (prop::bool::ANY, prop::collection::vec(-20i64..20, order - 1)).prop_map(|(neg, mut v)| {
            v.insert(0, if neg { -1 } else { 1 });
            s(&v)
        })
    }

    /// Random series supported on exponents ≡ r (mod q).
    fn arb_pure(order: usize, q: usize, r: usize) -> impl Strategy<Value = IntSeries> {
        prop::collection::vec(-9i64..9, order).prop_map(move |v| {
            let v: Vec<i64> = v.iter().enumerate().map(|(i, &c)| if i % q == r { c } else { 0 }).collect();
            s(&v)
        })
    }

    fn arb_pure_pair() -> impl Strategy<Value = (usize, usize, usize, IntSeries, IntSeries)> {
        (prop::sample::select(vec![3usize, 5]), 0usize..5, 0usize..5).prop_flat_map(|(q, k, m)| {
            let (k, m) = (k % q, m % q);
            (Just(q), Just(k), Just(m), arb_pure(30, q, k), arb_pure(30, q, m))
        })
    }

    proptest! {
        #[test]
        fn type_composition((q, k, m, a, b) in arb_pure_pair()) {
            let prod = a.mul(&b).unwrap();
            let class = ProgressionClass::new(q, (k + m) % q).unwrap();
            prop_assert_eq!(prod.extract(class, ExtractMode::Keep).unwrap(), prod);
        }

        #[test]
        fn partition_of_unity(a in arb_series(25), q in 2usize..8) {
            let mut total = IntSeries::zero(Integers, a.order()).unwrap();
            for r in 0..q {
                let part = a.extract(ProgressionClass::new(q, r).unwrap(), ExtractMode::Keep).unwrap();
                total = total.add(&part).unwrap();
            }
            prop_assert_eq!(total, a);
        }

        #[test]
        fn inverse_is_two_sided(a in arb_unit_series(20)) {
            let inv = a.inverse().unwrap();
            let one = IntSeries::one(Integers, 20).unwrap();
            prop_assert_eq!(a.mul(&inv).unwrap(), one.clone());
            prop_assert_eq!(inv.mul(&a).unwrap(), one);
        }

        #[test]
        fn substitution_is_multiplicative(a in arb_series(24), b in arb_series(24), k in 1usize..6) {
            let lhs = a.mul(&b).unwrap().substitute_power(k).unwrap();
            let rhs = a.substitute_power(k).unwrap().mul(&b.substitute_power(k).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn compress_keep_consistency(a in arb_series(31), q in 2usize..6, r in 0usize..6) {
            let class = ProgressionClass::new(q, r % q).unwrap();
            let kept = a.extract(class, ExtractMode::Keep).unwrap();
            let compressed = a.extract(class, ExtractMode::Compress).unwrap();
            // lift back to the original order before substituting
            let mut lifted = compressed.coeffs().to_vec();
            lifted.resize(a.order(), BigInt::from(0));
            let rebuilt = IntSeries::new(Integers, lifted).unwrap().substitute_power(q).unwrap().shift(class.residue());
            prop_assert_eq!(rebuilt, kept);
        }

        #[test]
        fn div_agrees_with_mul_by_inverse(a in arb_series(18), b in arb_unit_series(18)) {
            prop_assert_eq!(a.div(&b).unwrap(), a.mul(&b.inverse().unwrap()).unwrap());
        }
    }
}
