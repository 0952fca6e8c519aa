//! Truncated series identities behind the mod 3 filter for cubic partitions.
//!
//! `I₀, I₁, I₂` are the type 0, 1, 2 mod 3 components of `E(x)E(x²)`, so
//! `E(xζʰ)E(x²ζ²ʰ) = I₀ + I₁ζʰ + I₂ζ²ʰ` for a primitive cube root of unity `ζ`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partitions::{cubic_series_in, cubic_table};
use crate::qfunctions::{
    euler_e, finite_root_product, jacobi_triple_check, pochhammer, roots_product_closed, roots_product_direct, theta_f,
    PochhammerSpec, Sign, ThetaSpec,
};
use crate::report::{compare, first_failure, timed, Counterexample, VerificationReport};
use crate::ring::{Cyclotomic, Integers, Ring};
use crate::series::{ExtractMode, IntSeries, ProgressionClass, TruncatedSeries};

type EisensteinSeries = TruncatedSeries<Cyclotomic>;

fn order_range(order: usize) -> String {
    format!("order {order}")
}

fn class(modulus: usize, residue: usize) -> ProgressionClass {
    ProgressionClass::new(modulus, residue).expect("residue below modulus")
}

fn eisenstein() -> Cyclotomic {
    Cyclotomic::new(3).expect("3 is prime")
}

/// `E(x)E(x²)` to `order` coefficients.
pub fn euler_pair(order: usize) -> Result<IntSeries> {
    euler_e(1, order)?.mul(&euler_e(2, order)?)
}

/// The type 0, 1 and 2 mod 3 parts `[I₀, I₁, I₂]` of `E(x)E(x²)`.
pub fn type_components(order: usize) -> Result<[IntSeries; 3]> {
    let p = euler_pair(order)?;
    let part = |r| p.extract(class(3, r), ExtractMode::Keep);
    Ok([part(0)?, part(1)?, part(2)?])
}

/// `I₀ + I₁ζʰ + I₂ζ²ʰ` in `Z[ζ₃]`.
fn component_sum(parts: &[IntSeries; 3], h: i64) -> Result<EisensteinSeries> {
    let ring = eisenstein();
    let mut acc = EisensteinSeries::zero(ring, parts[0].order())?;
    for (r, part) in parts.iter().enumerate() {
        let term = part.map_ring(&ring)?.scale(&ring.root_power(h * r as i64));
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// `Π_{n≥1} (1 − xⁿζ^{nh})(1 − x^{2n}ζ^{2nh})`, which is `E(xζʰ)E(x²ζ²ʰ)`.
///
/// With `literal` set, the second factor uses `ζ^{nh}` instead of `ζ^{2nh}`.
/// That variant is a different series for each single `h`, but the product
/// of both variants over `h = 1, 2` agrees, since `h ↦ 2h` permutes the
/// nonzero residues mod 3.
pub fn eisenstein_product(h: i64, order: usize, literal: bool) -> Result<EisensteinSeries> {
    let ring = eisenstein();
    let mut s = EisensteinSeries::one(ring, order)?;
    for n in 1..order as i64 {
        s.mul_binomial(&ring.neg(&ring.root_power(n * h)), n as usize);
        let e2 = if literal { n * h } else { 2 * n * h };
        if 2 * n < order as i64 {
            s.mul_binomial(&ring.neg(&ring.root_power(e2)), 2 * n as usize);
        }
    }
    Ok(s)
}

fn expect_prefix(label: &str, s: &IntSeries, expected: &[i64]) -> Result<Option<Counterexample>> {
    let len = expected.len().min(s.order());
    let want = IntSeries::from_i64s(&expected[..len])?;
    compare(label, &s.truncated(len)?, &want)
}

/// `E(x)E(x²) = I₀ + I₁ + I₂` with each part of pure type, and the opening terms of each part.
pub fn verify_type_decomposition(order: usize) -> Result<VerificationReport> {
    timed(|| {
        let p = euler_pair(order)?;
        let parts = type_components(order)?;
        let sum = parts[0].add(&parts[1])?.add(&parts[2])?;
        let mut checks = vec![compare("I0 + I1 + I2 = E(x)E(x^2)", &sum, &p)];
        for (r, part) in parts.iter().enumerate() {
            for other in (0..3).filter(|&o| o != r) {
                let stray = part.extract(class(3, other), ExtractMode::Keep)?;
                checks.push(compare(
                    &format!("I{r} has no terms of type {other}"),
                    &stray,
                    &IntSeries::zero(Integers, order)?,
                ));
            }
        }
        checks.push(expect_prefix("E(x)E(x^2) opening", &p, &[1, -1, -2, 1, 0, 2, 1, 0, 0, -2, 1, -2]));
        checks.push(expect_prefix("I0 opening", &parts[0], &[1, 0, 0, 1, 0, 0, 1, 0, 0, -2]));
        checks.push(expect_prefix("I1 opening", &parts[1], &[0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1]));
        checks.push(expect_prefix("I2 opening", &parts[2], &[0, 0, -2, 0, 0, 2, 0, 0, 0, 0, 0, -2]));
        Ok(VerificationReport::from_outcome("type-decomposition", order_range(order), first_failure(checks)?))
    })
}

/// `E(xζʰ)E(x²ζ²ʰ) = I₀ + I₁ζʰ + I₂ζ²ʰ` in `Z[ζ₃]` for `h ∈ {1, 2}`.
pub fn verify_eisenstein_factor(h: i64, order: usize) -> Result<VerificationReport> {
    if !(1..=2).contains(&h) {
        return Err(Error::invalid(format!("h must be 1 or 2, got {h}")));
    }
    timed(|| {
        let lhs = eisenstein_product(h, order, false)?;
        let rhs = component_sum(&type_components(order)?, h)?;
        let label = format!("E(xζ^{h})E(x^2ζ^{}) = I0 + I1ζ^{h} + I2ζ^{}", 2 * h, 2 * h);
        Ok(VerificationReport::from_outcome(
            format!("eisenstein-factor h={h}"),
            order_range(order),
            compare(&label, &lhs, &rhs)?,
        ))
    })
}

/// Both `h = 1` and `h = 2`, as a single report.
pub fn verify_eisenstein_factors(order: usize) -> Result<VerificationReport> {
    timed(|| {
        for h in 1..=2 {
            let r = verify_eisenstein_factor(h, order)?;
            if let Some(ce) = r.counterexample() {
                return Ok(VerificationReport::fail("eisenstein-factor", order_range(order), ce.clone()));
            }
        }
        Ok(VerificationReport::pass("eisenstein-factor", order_range(order)))
    })
}

fn theta(sa: Sign, ea: usize, sb: Sign, eb: usize, order: usize) -> Result<IntSeries> {
    theta_f(ThetaSpec::new(sa, ea, sb, eb)?, order)
}

/// Theta-function forms of `I₀, I₁, I₂` and the relations between them.
pub fn verify_theta_forms(order: usize) -> Result<VerificationReport> {
    use Sign::{Minus, Plus};
    timed(|| {
        let [i0, i1, i2] = type_components(order)?;
        let f36 = theta(Plus, 3, Plus, 6, order)?;
        let phi9 = theta_f(ThetaSpec::phi(Minus, 9)?, order)?;
        let psi9 = theta_f(ThetaSpec::psi(Plus, 9)?, order)?;
        let f153 = theta(Minus, 15, Minus, 3, order)?;
        let f09 = theta(Plus, 0, Plus, 9, order)?;
        let e9e18 = euler_e(9, order)?.mul(&euler_e(18, order)?)?;
        let two = BigInt::from(2);
        let three = BigInt::from(3);
        let i1_sq = i1.mul(&i1)?;
        let b2 = i1_sq.sub(&i2.mul(&i0)?)?;
        let odd_18 = pochhammer(PochhammerSpec::new(Plus, 9, 18)?, order)?;
        let e18_sq = euler_e(18, order)?.pow(2)?;

        let checks = vec![
            compare("I0 = f(x^3, x^6)φ(-x^9)", &i0, &f36.mul(&phi9)?),
            compare("I1 = -x f(x^3, x^6) f(-x^15, -x^3)", &i1, &f36.mul(&f153)?.shift(1).neg()),
            compare("I2 = -x^2 f(1, x^9) f(-x^15, -x^3)", &i2, &f09.mul(&f153)?.shift(2).neg()),
            compare("I2 = -2x^2 ψ(x^9) f(-x^15, -x^3)", &i2, &psi9.mul(&f153)?.shift(2).scale(&two).neg()),
            compare("φ(-x^9)ψ(x^9) = (x^9; x^18)(x^18; x^18)^2", &phi9.mul(&psi9)?, &odd_18.mul(&e18_sq)?),
            compare("f(x^3, x^6) f(-x^3, -x^15) = (x^9; x^9)(x^18; x^18)", &f36.mul(&f153)?, &e9e18),
            compare("I1 = -x E(x^9)E(x^18)", &i1, &e9e18.shift(1).neg()),
            compare("I0 I2 = -2 I1^2", &i0.mul(&i2)?, &i1_sq.scale(&two).neg()),
            compare("I1^2 - I2 I0 = 3 I1^2", &b2, &i1_sq.scale(&three)),
        ];
        Ok(VerificationReport::from_outcome("theta-forms", order_range(order), first_failure(checks)?))
    })
}

/// `E(x⁹)E(x¹⁸) / (E(x³)⁴E(x⁶)⁴)`, a series of type 0 mod 3.
fn eta_weight(order: usize) -> Result<IntSeries> {
    let num = euler_e(9, order)?.mul(&euler_e(18, order)?)?;
    let e3 = euler_e(3, order)?;
    let e6 = euler_e(6, order)?;
    let mut s = num;
    for _ in 0..4 {
        s = s.div(&e3)?.div(&e6)?;
    }
    Ok(s)
}

/// `Σ a(3m+2)xᵐ = 3E(x³)³E(x⁶)³ / (E(x)⁴E(x²)⁴)` to `order` coefficients.
pub fn verify_cubic_gf(order: usize) -> Result<VerificationReport> {
    if order < 2 {
        return Err(Error::invalid(format!("cubic-gf needs order >= 2, got {order}")));
    }
    timed(|| {
        let table = cubic_table(3 * order)?;
        let a = IntSeries::new(Integers, table.values().to_vec())?;
        let lhs = a.extract(class(3, 2), ExtractMode::Compress)?;
        let e1 = euler_e(1, order)?;
        let e2 = euler_e(2, order)?;
        let mut rhs = euler_e(3, order)?.pow(3)?.mul(&euler_e(6, order)?.pow(3)?)?.scale(&BigInt::from(3));
        for _ in 0..4 {
            rhs = rhs.div(&e1)?.div(&e2)?;
        }
        let label = "Σ a(3m+2)x^m = 3E(x^3)^3 E(x^6)^3 / (E(x)^4 E(x^2)^4)";
        Ok(VerificationReport::from_outcome("cubic-gf", order_range(order), compare(label, &lhs, &rhs)?))
    })
}

/// The `(k, n)` pairs checked by [`verify_lemma_finite_products`].
pub const FINITE_PRODUCT_CASES: [(usize, usize); 6] = [(3, 1), (3, 2), (3, 3), (5, 1), (5, 5), (4, 2)];

/// Literal finite products over `k`-th roots of unity against `(1 − x^{k/d})^d (1 − x^{2k/d})^d`.
pub fn verify_lemma_finite_products(order: usize) -> Result<VerificationReport> {
    timed(|| {
        let mut checks = Vec::new();
        for (k, n) in FINITE_PRODUCT_CASES {
            let fp = finite_root_product(k, n, order)?;
            let direct = fp
                .direct
                .ok_or_else(|| Error::InternalInconsistency(format!("no literal evaluation for k = {k}, n = {n}")))?;
            checks.push(compare(&format!("finite root product k={k}, n={n}"), &direct, &fp.closed));
        }
        Ok(VerificationReport::from_outcome("lemma-products", order_range(order), first_failure(checks)?))
    })
}

/// The triple product for each of the six theta arguments in [`ThetaSpec::mod3_specs`].
pub fn verify_jacobi_specs(order: usize) -> Result<VerificationReport> {
    timed(|| {
        for spec in ThetaSpec::mod3_specs() {
            let r = jacobi_triple_check(spec, order)?;
            if let Some(ce) = r.counterexample() {
                return Ok(VerificationReport::fail("jacobi", order_range(order), ce.clone()));
            }
        }
        Ok(VerificationReport::pass("jacobi", order_range(order)))
    })
}

/// Primes used by [`verify_roots_products`].
pub const ROOT_PRODUCT_PRIMES: [u32; 3] = [2, 3, 5];

/// Direct roots-of-unity products against their eta-quotient closed forms.
pub fn verify_roots_products(order: usize) -> Result<VerificationReport> {
    timed(|| {
        let mut checks = Vec::new();
        for q in ROOT_PRODUCT_PRIMES {
            let label = format!("roots product q={q}: direct = closed");
            checks.push(compare(&label, &roots_product_direct(q, order)?, &roots_product_closed(q, order)?));
        }
        Ok(VerificationReport::from_outcome("roots-product", order_range(order), first_failure(checks)?))
    })
}

/// Rational part of a series over `Z[ζ₃]`, or the first coefficient that has a ζ-component.
fn rational_part(label: &str, s: &EisensteinSeries) -> Result<std::result::Result<IntSeries, Counterexample>> {
    let mut out = Vec::with_capacity(s.order());
    for (e, c) in s.coeffs().iter().enumerate() {
        match c.to_integer() {
            Ok(v) => out.push(v),
            Err(_) => {
                return Ok(Err(Counterexample {
                    n: e as u64,
                    witness: format!("{label}: coefficient of x^{e} is {c}, not rational"),
                }))
            }
        }
    }
    Ok(Ok(IntSeries::new(Integers, out)?))
}

/// Rebuilds `Σ a(m)xᵐ` from the filtered product and isolates its type 2 mod 3 part.
pub fn verify_reconstruction(order: usize) -> Result<VerificationReport> {
    timed(|| {
        let claim = "eq3-reconstruction";
        let range = order_range(order);
        let a = cubic_series_in(&Integers, order)?;
        let [i0, i1, i2] = type_components(order)?;
        let parts = [i0.clone(), i1.clone(), i2.clone()];

        let filtered: EisensteinSeries = component_sum(&parts, 1)?.mul(&component_sum(&parts, 2)?)?;
        let literal = eisenstein_product(1, order, true)?.mul(&eisenstein_product(2, order, true)?)?;
        if let Some(ce) = compare("Π_h literal factors = Π_h (I0 + I1ζ^h + I2ζ^2h)", &literal, &filtered)? {
            return Ok(VerificationReport::fail(claim, range, ce));
        }
        let product = match rational_part("Π_h (I0 + I1ζ^h + I2ζ^2h)", &filtered)? {
            Ok(p) => p,
            Err(ce) => return Ok(VerificationReport::fail(claim, range, ce)),
        };

        let t0 = i0.mul(&i0)?.sub(&i1.mul(&i2)?)?;
        let t1 = i2.mul(&i2)?.sub(&i0.mul(&i1)?)?;
        let t2 = i1.mul(&i1)?.sub(&i2.mul(&i0)?)?;
        let weight = eta_weight(order)?;
        let one = IntSeries::one(Integers, order)?;

        let mut checks = vec![
            compare("Σ a(m)x^m · E(x)E(x^2) = 1", &a.mul(&euler_pair(order)?)?, &one),
            compare("Σ a(m)x^m = E(x^9)E(x^18)/(E(x^3)^4 E(x^6)^4) · Π_h", &a, &weight.mul(&product)?),
            compare("Π_h = T0 + T1 + T2", &product, &t0.add(&t1)?.add(&t2)?),
        ];
        for (r, t) in [&t0, &t1, &t2].into_iter().enumerate() {
            checks.push(compare(&format!("T{r} is of type {r} mod 3"), &t.extract(class(3, r), ExtractMode::Keep)?, t));
        }
        checks.push(compare(
            "type 2 part of Σ a(m)x^m = (I1^2 - I2 I0) E(x^9)E(x^18)/(E(x^3)^4 E(x^6)^4)",
            &a.extract(class(3, 2), ExtractMode::Keep)?,
            &t2.mul(&weight)?,
        ));
        Ok(VerificationReport::from_outcome(claim, range, first_failure(checks)?))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn ints(s: &IntSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn components_open_as_displayed() {
        let [i0, i1, i2] = type_components(12).unwrap();
        assert_eq!(ints(&i0), [1, 0, 0, 1, 0, 0, 1, 0, 0, -2, 0, 0]);
        assert_eq!(ints(&i1), [0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0]);
        assert_eq!(ints(&i2), [0, 0, -2, 0, 0, 2, 0, 0, 0, 0, 0, -2]);
    }

    #[test]
    fn decomposition_small_orders() {
        for order in [1, 2, 12, 60] {
            assert!(verify_type_decomposition(order).unwrap().is_pass(), "order {order}");
        }
    }

    #[test]
    fn eisenstein_factor_both_h() {
        for h in 1..=2 {
            assert!(verify_eisenstein_factor(h, 60).unwrap().is_pass());
            assert!(verify_eisenstein_factor(h, 1).unwrap().is_pass());
        }
        assert!(verify_eisenstein_factor(3, 10).is_err());
    }

    #[test]
    fn literal_factor_differs_per_h_but_not_in_product() {
        let ring = eisenstein();
        for h in 1..=2 {
            let corrected = eisenstein_product(h, 12, false).unwrap();
            let literal = eisenstein_product(h, 12, true).unwrap();
            assert_eq!(literal.first_difference(&corrected).unwrap(), Some(2));
            // coefficient of x^2: 1 in the literal form, -2ζ^{2h} in the corrected one
            assert_eq!(literal.coeffs()[2], ring.one());
            assert_eq!(corrected.coeffs()[2], ring.mul(&ring.from_i64(-2), &ring.root_power(2 * h)));
        }
        let p = |lit| eisenstein_product(1, 40, lit).unwrap().mul(&eisenstein_product(2, 40, lit).unwrap()).unwrap();
        assert_eq!(p(true), p(false));
    }

    #[test]
    fn theta_forms_pass() {
        assert!(verify_theta_forms(120).unwrap().is_pass());
    }

    #[test]
    fn cubic_gf_opening() {
        let r = verify_cubic_gf(3).unwrap();
        assert!(r.is_pass());
        assert!(verify_cubic_gf(1).is_err());
        assert!(verify_cubic_gf(120).unwrap().is_pass());
    }

    #[test]
    fn products_and_specs() {
        assert!(verify_lemma_finite_products(24).unwrap().is_pass());
        assert!(verify_jacobi_specs(100).unwrap().is_pass());
        assert!(verify_roots_products(40).unwrap().is_pass());
    }

    #[test]
    fn reconstruction_passes() {
        let r = verify_reconstruction(60).unwrap();
        assert_eq!(r.status(), Status::Pass, "{r:?}");
    }

    #[test]
    fn rational_part_flags_zeta() {
        let ring = eisenstein();
        let s = EisensteinSeries::new(ring, vec![ring.one(), ring.root_power(1)]).unwrap();
        let ce = rational_part("s", &s).unwrap().unwrap_err();
        assert_eq!(ce.n, 1);
    }
}
