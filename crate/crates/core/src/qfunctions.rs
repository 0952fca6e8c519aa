//! Named q-series: Euler products, q-Pochhammer symbols, Ramanujan's theta
//! function `f(a, b)` at monomial arguments, and the roots-of-unity products
//! that drive the mod 3 filter for cubic partitions.
//!
//! `E(x) = Π_{n≥1} (1 − xⁿ)` is never built as a dense product. The
//! pentagonal-number theorem gives it as the lacunary sum
//! `Σ_{n∈Z} (−1)ⁿ x^{n(3n+1)/2}`, so [`euler_e`] only touches
//! `O(√N)` coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::report::{compare, timed, VerificationReport};
use crate::ring::{is_prime, Cyclotomic, Integers, Ring};
use crate::series::{IntSeries, TruncatedSeries};

/// Largest prime accepted by [`roots_product_direct`].
pub const MAX_DIRECT_ROOT_PRIME: u32 = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `self^k`
    pub fn pow(self, k: u64) -> Sign {
        if self == Sign::Minus && k % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// Generalized pentagonal numbers `ω(n) = n(3n+1)/2`, `n ∈ Z`, below `limit`,
/// in increasing order together with the sign `(−1)ⁿ`.
pub fn pentagonal_terms(limit: usize) -> impl Iterator<Item = (usize, Sign)> {
    let mut k = 0usize;
    let mut pending: Option<(usize, Sign)> = None;
    std::iter::from_fn(move || {
        if let Some(t) = pending.take() {
            return (t.0 < limit).then_some(t);
        }
        if k == 0 {
            k = 1;
            return (limit > 0).then_some((0, Sign::Plus));
        }
        let sign = if k % 2 == 1 { Sign::Minus } else { Sign::Plus };
        let low = k * (3 * k - 1) / 2;
        let high = k * (3 * k + 1) / 2;
        k += 1;
        if low >= limit {
            return None;
        }
        pending = Some((high, sign));
        Some((low, sign))
    })
}

/// `E(x^j) = Π_{n≥1} (1 − x^{jn})` to `order` coefficients, over any ring.
pub fn euler_e_in<R: Ring>(ring: &R, j: usize, order: usize) -> Result<TruncatedSeries<R>> {
    if j == 0 {
        return Err(Error::invalid("E(x^j) needs j >= 1"));
    }
    let one = ring.one();
    let minus_one = ring.neg(&one);
    let mut coeffs = vec![ring.zero(); order];
    for (w, sign) in pentagonal_terms(order.div_ceil(j)) {
        let e = w * j;
        if e < order {
            coeffs[e] = if sign == Sign::Plus { one.clone() } else { minus_one.clone() };
        }
    }
    TruncatedSeries::new(ring.clone(), coeffs)
}

/// `E(x^j)` over the integers.
pub fn euler_e(j: usize, order: usize) -> Result<IntSeries> {
    euler_e_in(&Integers, j, order)
}

fn monomial(s: Sign, e: usize) -> String {
    let s = if s == Sign::Minus { "-" } else { "" };
    match e {
        0 => format!("{s}1"),
        1 => format!("{s}x"),
        e => format!("{s}x^{e}"),
    }
}

/// The q-Pochhammer symbol `(c; q)_∞ = Π_{k≥0} (1 − c·q^k)` with
/// `c = ±x^{exp}` and `q = ±x^{step}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PochhammerSpec {
    sign: Sign,
    exp: usize,
    base_sign: Sign,
    step: usize,
}

impl PochhammerSpec {
    /// `(sign·x^exp; x^step)_∞`.
    pub fn new(sign: Sign, exp: usize, step: usize) -> Result<Self> {
        Self::with_base_sign(sign, exp, Sign::Plus, step)
    }

    /// `(sign·x^exp; base_sign·x^step)_∞`.
    pub fn with_base_sign(sign: Sign, exp: usize, base_sign: Sign, step: usize) -> Result<Self> {
        if step == 0 {
            return Err(Error::invalid("pochhammer step must be at least 1"));
        }
        if sign == Sign::Plus && exp == 0 {
            return Err(Error::invalid("(1; q) has the vanishing factor 1 - 1"));
        }
        Ok(PochhammerSpec { sign, exp, base_sign, step })
    }
}

impl fmt::Display for PochhammerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", monomial(self.sign, self.exp), monomial(self.base_sign, self.step))
    }
}

pub fn pochhammer(spec: PochhammerSpec, order: usize) -> Result<IntSeries> {
    let mut s = IntSeries::one(Integers, order)?;
    for k in 0.. {
        let e = spec.exp + k * spec.step;
        if e >= order {
            break;
        }
        // factor 1 - c·q^k
        let c = spec.sign.times(spec.base_sign.pow(k as u64));
        s.mul_binomial(&BigInt::from(-c.value()), e);
    }
    Ok(s)
}

/// Ramanujan's `f(a, b) = Σ_{n∈Z} a^{n(n+1)/2} b^{n(n−1)/2}` at
/// `a = sign_a·x^{exp_a}`, `b = sign_b·x^{exp_b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaSpec {
    sign_a: Sign,
    exp_a: usize,
    sign_b: Sign,
    exp_b: usize,
}

impl ThetaSpec {
    pub fn new(sign_a: Sign, exp_a: usize, sign_b: Sign, exp_b: usize) -> Result<Self> {
        if exp_a + exp_b == 0 {
            return Err(Error::invalid("f(a, b) needs |ab| < 1, i.e. exp_a + exp_b >= 1"));
        }
        Ok(ThetaSpec { sign_a, exp_a, sign_b, exp_b })
    }

    /// `φ(±x^e) = f(±x^e, ±x^e)`
    pub fn phi(sign: Sign, e: usize) -> Result<Self> {
        Self::new(sign, e, sign, e)
    }

    /// `ψ(±x^e) = f(±x^e, ±x^{3e})`
    pub fn psi(sign: Sign, e: usize) -> Result<Self> {
        Self::new(sign, e, sign, 3 * e)
    }

    /// The six theta arguments that occur in the mod 3 analysis.
    pub fn mod3_specs() -> [ThetaSpec; 6] {
        use Sign::*;
        let t = |sa, ea, sb, eb| ThetaSpec { sign_a: sa, exp_a: ea, sign_b: sb, exp_b: eb };
        [
            t(Plus, 3, Plus, 6),
            t(Minus, 9, Minus, 9),
            t(Minus, 15, Minus, 3),
            t(Plus, 0, Plus, 9),
            t(Minus, 1, Minus, 2),
            t(Minus, 2, Minus, 4),
        ]
    }
}

impl fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f({}, {})", monomial(self.sign_a, self.exp_a), monomial(self.sign_b, self.exp_b))
    }
}

fn triangular(m: u64) -> u64 {
    m * (m + 1) / 2
}

/// Adds `Σ_{m≥start} a^{T(m)} b^{T(m−1)}` into `coeffs`, where `T` is the
/// triangular number. Both halves of the bilateral sum have this shape.
fn theta_half(coeffs: &mut [BigInt], sa: Sign, ea: u64, sb: Sign, eb: u64, start: u64) {
    let order = coeffs.len() as u64;
    let mut m = start;
    loop {
        let (ta, tb) = (triangular(m), if m == 0 { 0 } else { triangular(m - 1) });
        let e = ea.saturating_mul(ta).saturating_add(eb.saturating_mul(tb));
        if e >= order {
            // exponent is increasing from m = 1 on, so the tail is exhausted
            if m >= 1 {
                debug_assert!(ea * triangular(m + 1) + eb * triangular(m) > e);
                break;
            }
        } else {
            let sign = sa.pow(ta).times(sb.pow(tb));
            coeffs[e as usize] += sign.value();
        }
        m += 1;
    }
}

pub fn theta_f(spec: ThetaSpec, order: usize) -> Result<IntSeries> {
    let mut coeffs = IntSeries::zero(Integers, order)?.into_coeffs();
    let (ea, eb) = (spec.exp_a as u64, spec.exp_b as u64);
    // n = m >= 0 contributes a^{T(m)} b^{T(m-1)}; n = -m, m >= 1, swaps the roles of a and b.
    theta_half(&mut coeffs, spec.sign_a, ea, spec.sign_b, eb, 0);
    theta_half(&mut coeffs, spec.sign_b, eb, spec.sign_a, ea, 1);
    IntSeries::new(Integers, coeffs)
}

/// Compares `f(a, b)` with the triple product `(−a; ab)_∞ (−b; ab)_∞ (ab; ab)_∞`.
pub fn jacobi_triple_check(spec: ThetaSpec, order: usize) -> Result<VerificationReport> {
    timed(|| {
        let ab_sign = spec.sign_a.times(spec.sign_b);
        let ab_exp = spec.exp_a + spec.exp_b;
        let factor = |sign: Sign, exp: usize| PochhammerSpec::with_base_sign(sign, exp, ab_sign, ab_exp);
        let product = pochhammer(factor(spec.sign_a.flip(), spec.exp_a)?, order)?
            .mul(&pochhammer(factor(spec.sign_b.flip(), spec.exp_b)?, order)?)?
            .mul(&pochhammer(factor(ab_sign, ab_exp)?, order)?)?;
        let theta = theta_f(spec, order)?;
        let label = format!("{spec} = triple product");
        Ok(VerificationReport::from_outcome(
            format!("jacobi {spec}"),
            format!("order {order}"),
            compare(&label, &theta, &product)?,
        ))
    })
}

fn check_root_prime(q: u32) -> Result<()> {
    if !is_prime(q as u64) {
        return Err(Error::invalid(format!("{q} is not prime")));
    }
    Ok(())
}

/// How the inner product over `h` is formed in [`roots_product_direct_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RootProductMethod {
    /// Multiply every factor `1 − x^n ζ^{nh}` in the cyclotomic ring.
    #[default]
    Literal,
    /// Collapse `Π_h (1 − x^n ζ^{nh})` to its finite closed form first.
    Grouped,
}

/// `Π_{n≥1} Π_{h=1}^{q} (1 − xⁿζ^{nh})(1 − x^{2n}ζ^{nh})` for a prime `q`,
/// multiplied out literally in `Z[ζ_q]` and mapped back to `Z`.
pub fn roots_product_direct(q: u32, order: usize) -> Result<IntSeries> {
    roots_product_direct_with(q, order, RootProductMethod::Literal)
}

pub fn roots_product_direct_with(q: u32, order: usize, method: RootProductMethod) -> Result<IntSeries> {
    check_root_prime(q)?;
    if q > MAX_DIRECT_ROOT_PRIME {
        return Err(Error::invalid(format!("direct roots product limited to q <= {MAX_DIRECT_ROOT_PRIME}, got {q}")));
    }
    if method == RootProductMethod::Grouped {
        return grouped_roots_product(q as usize, order);
    }
    if q == 2 {
        // ζ₂ = −1 already lives in Z
        let roots = [BigInt::from(1), BigInt::from(-1)];
        return literal_roots_product(&Integers, &roots, order);
    }
    let ring = Cyclotomic::new(q)?;
    let roots: Vec<_> = (0..q as i64).map(|e| ring.root_power(e)).collect();
    literal_roots_product(&ring, &roots, order)?.map_ring(&Integers).map_err(|e| {
        Error::InternalInconsistency(format!("roots-of-unity product for q = {q} left a ζ-component: {e}"))
    })
}

/// `roots[i]` must be `ζ^i`.
fn literal_roots_product<R: Ring>(ring: &R, roots: &[R::Elem], order: usize) -> Result<TruncatedSeries<R>> {
    let q = roots.len();
    let mut s = TruncatedSeries::one(ring.clone(), order)?;
    for n in 1..order {
        for h in 1..=q {
            let minus_root = ring.neg(&roots[(n * h) % q]);
            s.mul_binomial(&minus_root, n);
            if 2 * n < order {
                s.mul_binomial(&minus_root, 2 * n);
            }
        }
    }
    Ok(s)
}

fn grouped_roots_product(q: usize, order: usize) -> Result<IntSeries> {
    let mut s = IntSeries::one(Integers, order)?;
    let minus_one = BigInt::from(-1);
    for n in 1..order {
        for e in [n, 2 * n] {
            if e >= order {
                continue;
            }
            if n % q == 0 {
                for _ in 0..q {
                    s.mul_binomial(&minus_one, e);
                }
            } else {
                s.mul_binomial(&minus_one, e * q);
            }
        }
    }
    Ok(s)
}

/// `E(x^q)^{q+1} E(x^{2q})^{q+1} / (E(x^{q²}) E(x^{2q²}))`.
pub fn roots_product_closed(q: u32, order: usize) -> Result<IntSeries> {
    check_root_prime(q)?;
    let q = q as usize;
    let numerator = euler_e(q, order)?.pow(q as i64 + 1)?.mul(&euler_e(2 * q, order)?.pow(q as i64 + 1)?)?;
    numerator.div(&euler_e(q * q, order)?)?.div(&euler_e(2 * q * q, order)?)
}

/// Both evaluations of `Π_{h=1}^{k} (1 − xε^{nh})(1 − x²ε^{nh})`, `ε = e^{2πi/k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteRootProduct {
    pub k: usize,
    pub n: usize,
    pub gcd: usize,
    /// Literal product over `h`, available when `k / gcd(n, k)` is 1, 2 or prime.
    pub direct: Option<IntSeries>,
    /// `(1 − x^{k/d})^d (1 − x^{2k/d})^d`
    pub closed: IntSeries,
}

pub fn finite_root_product(k: usize, n: usize, order: usize) -> Result<FiniteRootProduct> {
    if k == 0 || n == 0 {
        return Err(Error::invalid("finite root product needs k, n >= 1"));
    }
    let d = n.gcd(&k);
    let p = k / d;
    let m = n / d;

    let minus_one = BigInt::from(-1);
    let mut closed = IntSeries::one(Integers, order)?;
    for _ in 0..d {
        closed.mul_binomial(&minus_one, p);
        closed.mul_binomial(&minus_one, 2 * p);
    }

    // ε^{nh} = exp(2πi·mh/p) with gcd(m, p) = 1, a p-th root of unity
    let direct = match p {
        1 => Some(finite_literal(&Integers, &[BigInt::from(1)], m, k, order)?),
        2 => Some(finite_literal(&Integers, &[BigInt::from(1), BigInt::from(-1)], m, k, order)?),
        p if p <= u32::MAX as usize && is_prime(p as u64) => {
            let ring = Cyclotomic::new(p as u32)?;
            let roots: Vec<_> = (0..p as i64).map(|e| ring.root_power(e)).collect();
            Some(finite_literal(&ring, &roots, m, k, order)?.map_ring(&Integers)?)
        }
        _ => None,
    };
    Ok(FiniteRootProduct { k, n, gcd: d, direct, closed })
}

fn finite_literal<R: Ring>(
    ring: &R,
    roots: &[R::Elem],
    m: usize,
    k: usize,
    order: usize,
) -> Result<TruncatedSeries<R>> {
    let p = roots.len();
    let mut s = TruncatedSeries::one(ring.clone(), order)?;
    for h in 1..=k {
        let minus_root = ring.neg(&roots[(m * h) % p]);
        s.mul_binomial(&minus_root, 1);
        s.mul_binomial(&minus_root, 2);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn ints(x: &IntSeries) -> Vec<i64> {
        x.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    fn s(v: &[i64]) -> IntSeries {
        IntSeries::from_i64s(v).unwrap()
    }

    /// Dense (1 - x^n) product for n < order.
    fn dense_euler(j: usize, order: usize) -> IntSeries {
        let mut e = IntSeries::one(Integers, order).unwrap();
        for n in 1..order {
            if n * j < order {
                e.mul_binomial(&BigInt::from(-1), n * j);
            }
        }
        e
    }

    #[test]
    fn pentagonal_numbers() {
        let t: Vec<_> = pentagonal_terms(27).map(|(w, s)| (w, s.value())).collect();
        assert_eq!(t, [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1), (22, 1), (26, 1)]);
        assert_eq!(pentagonal_terms(0).count(), 0);
        assert_eq!(pentagonal_terms(2).count(), 2);
    }

    #[test]
    fn euler_e_values() {
        assert_eq!(ints(&euler_e(1, 13).unwrap()), [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
        assert_eq!(ints(&euler_e(2, 5).unwrap()), [1, 0, -1, 0, -1]);
        let p = euler_e(1, 7).unwrap().inverse().unwrap();
        assert_eq!(ints(&p), [1, 1, 2, 3, 5, 7, 11]);
        assert!(euler_e(0, 5).is_err());
        for j in 1..6 {
            for n in [1, 2, 17, 60] {
                assert_eq!(euler_e(j, n).unwrap(), dense_euler(j, n), "j={j} N={n}");
            }
        }
    }

    #[test]
    fn euler_e_is_sparse() {
        for j in 1..5usize {
            for n in [10usize, 100, 1000, 5000] {
                let count = euler_e(j, n).unwrap().terms().count() as f64;
                assert!(count <= 2.0 * (2.0 * n as f64 / (3.0 * j as f64)).sqrt() + 2.0);
            }
        }
    }

    #[test]
    fn euler_e_equals_pochhammer() {
        for n in [1, 5, 13, 40, 200] {
            let poch = pochhammer(PochhammerSpec::new(Sign::Plus, 1, 1).unwrap(), n).unwrap();
            assert_eq!(poch, euler_e(1, n).unwrap());
        }
    }

    #[test]
    fn pochhammer_values() {
        let distinct = pochhammer(PochhammerSpec::new(Sign::Minus, 1, 1).unwrap(), 6).unwrap();
        assert_eq!(ints(&distinct), [1, 1, 1, 2, 2, 3]);
        assert!(PochhammerSpec::new(Sign::Plus, 0, 1).is_err());
        assert!(PochhammerSpec::new(Sign::Minus, 1, 0).is_err());
        // (-1; x)_∞ = 2 (-x; x)_∞
        let from_one = pochhammer(PochhammerSpec::new(Sign::Minus, 0, 1).unwrap(), 10).unwrap();
        let shifted = pochhammer(PochhammerSpec::new(Sign::Minus, 1, 1).unwrap(), 10).unwrap();
        assert_eq!(from_one, shifted.scale(&BigInt::from(2)));
        // (x; -x)_∞ = (1 - x)(1 + x²)(1 - x³)…
        let alt = pochhammer(PochhammerSpec::with_base_sign(Sign::Plus, 1, Sign::Minus, 1).unwrap(), 8).unwrap();
        let mut expect = IntSeries::one(Integers, 8).unwrap();
        for e in 1..8 {
            expect.mul_binomial(&BigInt::from(if e % 2 == 1 { -1 } else { 1 }), e);
        }
        assert_eq!(alt, expect);
    }

    #[test]
    fn theta_specializations() {
        let phi = theta_f(ThetaSpec::phi(Sign::Plus, 1).unwrap(), 17).unwrap();
        assert_eq!(
            phi.terms().map(|(e, c)| (e, i64::try_from(c).unwrap())).collect::<Vec<_>>(),
            [(0, 1), (1, 2), (4, 2), (9, 2), (16, 2)]
        );
        let psi = theta_f(ThetaSpec::psi(Sign::Plus, 1).unwrap(), 16).unwrap();
        assert_eq!(psi.terms().map(|(e, _)| e).collect::<Vec<_>>(), [0, 1, 3, 6, 10, 15]);
        assert!(psi.terms().all(|(_, c)| *c == BigInt::from(1)));
        for n in [1, 10, 100] {
            let e = theta_f(ThetaSpec::new(Sign::Minus, 1, Sign::Minus, 2).unwrap(), n).unwrap();
            assert_eq!(e, euler_e(1, n).unwrap());
        }
        assert!(ThetaSpec::new(Sign::Plus, 0, Sign::Minus, 0).is_err());
    }

    #[test]
    fn theta_with_unit_argument_is_twice_psi() {
        let f = theta_f(ThetaSpec::new(Sign::Plus, 0, Sign::Plus, 9).unwrap(), 300).unwrap();
        let psi9 = theta_f(ThetaSpec::psi(Sign::Plus, 9).unwrap(), 300).unwrap();
        assert_eq!(f, psi9.scale(&BigInt::from(2)));
    }

    #[test]
    fn jacobi_triple_product_for_mod3_arguments() {
        for spec in ThetaSpec::mod3_specs() {
            let r = jacobi_triple_check(spec, 200).unwrap();
            assert!(r.is_pass(), "{spec}: {:?}", r.counterexample());
        }
    }

    #[test]
    fn jacobi_triple_product_mixed_signs() {
        for (sa, ea, sb, eb) in
            [(Sign::Plus, 1, Sign::Minus, 2), (Sign::Minus, 3, Sign::Plus, 1), (Sign::Plus, 1, Sign::Plus, 1)]
        {
            let spec = ThetaSpec::new(sa, ea, sb, eb).unwrap();
            assert!(jacobi_triple_check(spec, 120).unwrap().is_pass(), "{spec}");
        }
        // a = -1 makes (-a; ab) = (1; ab) vanish
        let bad = ThetaSpec::new(Sign::Minus, 0, Sign::Plus, 2).unwrap();
        assert!(jacobi_triple_check(bad, 10).is_err());
    }

    #[test]
    fn roots_products_agree() {
        for q in [2, 3, 5] {
            for n in [1, 2, 20, 61] {
                let direct = roots_product_direct(q, n).unwrap();
                assert_eq!(direct, roots_product_closed(q, n).unwrap(), "q={q} N={n}");
                assert_eq!(direct, roots_product_direct_with(q, n, RootProductMethod::Grouped).unwrap());
            }
        }
        assert_eq!(roots_product_direct(3, 1).unwrap(), s(&[1]));
        assert!(roots_product_direct(4, 10).is_err());
        assert!(roots_product_direct(17, 10).is_err());
        assert!(roots_product_closed(9, 10).is_err());
    }

    #[test]
    fn roots_product_closed_leading_terms() {
        let c = roots_product_closed(3, 10).unwrap();
        assert_eq!(c.coeff(0), Some(&BigInt::from(1)));
        assert!(c.coeff(1).unwrap().is_zero() && c.coeff(2).unwrap().is_zero());
        assert_eq!(c.coeff(3), Some(&BigInt::from(-4)));
    }

    #[test]
    fn finite_products() {
        let minus = |v: &[usize], order: usize| {
            let mut s = IntSeries::one(Integers, order).unwrap();
            for &e in v {
                s.mul_binomial(&BigInt::from(-1), e);
            }
            s
        };
        let r = finite_root_product(3, 1, 12).unwrap();
        assert_eq!(r.closed, minus(&[3, 6], 12));
        assert_eq!(r.direct.unwrap(), r.closed);
        let r = finite_root_product(3, 3, 12).unwrap();
        assert_eq!(r.gcd, 3);
        assert_eq!(r.closed, minus(&[1, 1, 1, 2, 2, 2], 12));
        assert_eq!(r.direct.unwrap(), r.closed);
        let r = finite_root_product(4, 2, 12).unwrap();
        assert_eq!(r.closed, minus(&[2, 2, 4, 4], 12));
        assert_eq!(r.direct.unwrap(), r.closed);
        // k/d = 4 is neither 1, 2 nor prime
        assert!(finite_root_product(4, 1, 12).unwrap().direct.is_none());
        assert!(finite_root_product(0, 1, 12).is_err());
    }
}
