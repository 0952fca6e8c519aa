//! Checks of the identities, congruences, inequality and bound for cubic
//! partitions, each producing a [`VerificationReport`].
//!
//! Series identities are exact coefficient comparisons up to a truncation
//! order. Scans over `n` report the first failing index.

mod bound;
mod identities;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

pub use bound::check_bound;
pub use identities::{
    eisenstein_product, euler_pair, type_components, verify_cubic_gf, verify_eisenstein_factor,
    verify_eisenstein_factors, verify_jacobi_specs, verify_lemma_finite_products, verify_reconstruction,
    verify_roots_products, verify_theta_forms, verify_type_decomposition, FINITE_PRODUCT_CASES, ROOT_PRODUCT_PRIMES,
};

use crate::error::{Error, Result};
use crate::limits::MAX_ENUMERATION_N;
use crate::partitions::{cubic_table, cubic_table_mod, enumerate_cubic, injection_map, ColoredPartition};
use crate::report::{timed, Counterexample, VerificationReport};

/// Exact values are quoted in scan witnesses up to this index.
const EXACT_WITNESS_LIMIT: usize = 2000;

/// The claim `a(Mn + r) ≡ 0 (mod d)` for every `n ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CongruenceClaim {
    m: usize,
    r: usize,
    d: u64,
}

impl CongruenceClaim {
    pub fn new(m: usize, r: usize, d: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("progression modulus must be at least 1"));
        }
        if r >= m {
            return Err(Error::invalid(format!("residue {r} must be below the modulus {m}")));
        }
        if d < 2 {
            return Err(Error::invalid(format!("divisor must be at least 2, got {d}")));
        }
        Ok(CongruenceClaim { m, r, d })
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn residue(&self) -> usize {
        self.r
    }

    pub fn divisor(&self) -> u64 {
        self.d
    }
}

impl fmt::Display for CongruenceClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({}n+{}) = 0 mod {}", self.m, self.r, self.d)
    }
}

/// Checks `a(Mn + r) ≡ 0 (mod d)` for `0 <= n <= n_max` with a table over `Z/d`.
pub fn scan_congruence(claim: CongruenceClaim, n_max: usize) -> Result<VerificationReport> {
    let len = n_max
        .checked_mul(claim.m)
        .and_then(|v| v.checked_add(claim.r + 1))
        .ok_or_else(|| Error::invalid("scan range overflows"))?;
    timed(|| {
        let table = cubic_table_mod(len, claim.d)?;
        let range = format!("0 <= n <= {n_max}");
        let first = (0..=n_max).find(|n| table.values()[claim.m * n + claim.r].value() != 0);
        let Some(n) = first else {
            return Ok(VerificationReport::pass(format!("scan {claim}"), range));
        };
        let idx = claim.m * n + claim.r;
        let witness = if idx <= EXACT_WITNESS_LIMIT {
            let exact = cubic_table(idx + 1)?.values()[idx].clone();
            format!("a({idx}) = {exact}, not divisible by {}", claim.d)
        } else {
            format!("a({idx}) = {} mod {}", table.values()[idx].value(), claim.d)
        };
        Ok(VerificationReport::fail(format!("scan {claim}"), range, Counterexample { n: n as u64, witness }))
    })
}

/// Checks `a(n+2) + a(n−2) > 2a(n)` for `2 <= n <= n_max` with exact values.
pub fn check_inequality(n_max: usize) -> Result<VerificationReport> {
    if n_max < 2 {
        return Err(Error::invalid(format!("inequality check needs n_max >= 2, got {n_max}")));
    }
    timed(|| {
        let table = cubic_table(n_max + 3)?;
        let a = table.values();
        let range = format!("2 <= n <= {n_max}");
        for n in 2..=n_max {
            let lhs = &a[n + 2] + &a[n - 2];
            let rhs: BigInt = &a[n] * 2u32;
            if lhs <= rhs {
                let witness = format!("a({}) + a({}) = {lhs}, 2a({n}) = {rhs}", n + 2, n - 2);
                return Ok(VerificationReport::fail("inequality", range, Counterexample { n: n as u64, witness }));
            }
        }
        Ok(VerificationReport::pass("inequality", range))
    })
}

fn without_two_one(n: usize) -> Result<Vec<ColoredPartition>> {
    Ok(enumerate_cubic(n)?.into_iter().filter(|p| !p.contains_two_one()).collect())
}

/// Checks the injection from partitions of `n` without `2₁` into those of
/// `n + 2` without `2₁`, by enumeration for `2 <= n <= n_max`: both set sizes
/// against the table, membership of every image, injectivity, and that the
/// all-ones partition is missed.
pub fn check_injection(n_max: usize) -> Result<VerificationReport> {
    if n_max < 2 {
        return Err(Error::invalid(format!("injection check needs n_max >= 2, got {n_max}")));
    }
    if n_max + 2 > MAX_ENUMERATION_N {
        return Err(Error::Resource { requested: n_max + 2, cap: MAX_ENUMERATION_N });
    }
    timed(|| {
        let table = cubic_table(n_max + 3)?;
        let a = table.values();
        let range = format!("2 <= n <= {n_max}");
        let fail = |n: usize, witness: String| {
            Ok(VerificationReport::fail("injection", range.clone(), Counterexample { n: n as u64, witness }))
        };
        for n in 2..=n_max {
            let y = without_two_one(n)?;
            let x: HashSet<ColoredPartition> = without_two_one(n + 2)?.into_iter().collect();
            let x_expected = &a[n + 2] - &a[n];
            let y_expected = &a[n] - &a[n - 2];
            if BigInt::from(x.len()) != x_expected {
                return fail(n, format!("|X({})| = {}, a({}) - a({n}) = {x_expected}", n + 2, x.len(), n + 2));
            }
            if BigInt::from(y.len()) != y_expected {
                return fail(n, format!("|Y({n})| = {}, a({n}) - a({}) = {y_expected}", y.len(), n - 2));
            }
            let mut images = HashSet::with_capacity(y.len());
            for p in &y {
                let img = injection_map(p)?;
                if !x.contains(&img) {
                    return fail(n, format!("image of {p} is {img}, outside X({})", n + 2));
                }
                if !images.insert(img.clone()) {
                    return fail(n, format!("{img} has two preimages"));
                }
            }
            let ones = ColoredPartition::all_ones(n + 2);
            if !x.contains(&ones) || images.contains(&ones) {
                return fail(n, format!("{ones} should lie in X({}) outside the image", n + 2));
            }
        }
        Ok(VerificationReport::pass("injection", range))
    })
}

/// The named series checks run by `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    TypeDecomposition,
    EisensteinFactor,
    ThetaForms,
    CubicGf,
    LemmaProducts,
    Jacobi,
    RootsProduct,
    Reconstruction,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::TypeDecomposition,
        Claim::EisensteinFactor,
        Claim::ThetaForms,
        Claim::CubicGf,
        Claim::LemmaProducts,
        Claim::Jacobi,
        Claim::RootsProduct,
        Claim::Reconstruction,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::TypeDecomposition => "type-decomposition",
            Claim::EisensteinFactor => "eisenstein-factor",
            Claim::ThetaForms => "theta-forms",
            Claim::CubicGf => "cubic-gf",
            Claim::LemmaProducts => "lemma-products",
            Claim::Jacobi => "jacobi",
            Claim::RootsProduct => "roots-product",
            Claim::Reconstruction => "eq3-reconstruction",
        }
    }

    /// 120 for the checks that multiply in a cyclotomic ring, 500 otherwise.
    pub fn default_order(self) -> usize {
        match self {
            Claim::EisensteinFactor | Claim::RootsProduct | Claim::Reconstruction => 120,
            _ => 500,
        }
    }

    pub fn run(self, order: usize) -> Result<VerificationReport> {
        match self {
            Claim::TypeDecomposition => verify_type_decomposition(order),
            Claim::EisensteinFactor => verify_eisenstein_factors(order),
            Claim::ThetaForms => verify_theta_forms(order),
            Claim::CubicGf => verify_cubic_gf(order),
            Claim::LemmaProducts => verify_lemma_finite_products(order),
            Claim::Jacobi => verify_jacobi_specs(order),
            Claim::RootsProduct => verify_roots_products(order),
            Claim::Reconstruction => verify_reconstruction(order),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| Error::invalid(format!("unknown claim {s:?}")))
    }
}

/// Runs `claims` in parallel, each at `order` or its default, and returns
/// the reports in the order given.
pub fn run_suite(claims: &[Claim], order: Option<usize>) -> Result<Vec<VerificationReport>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> =
            claims.iter().map(|&c| scope.spawn(move || c.run(order.unwrap_or_else(|| c.default_order())))).collect();
        handles
            .into_iter()
            .map(|h| {
                h.join().unwrap_or_else(|_| Err(Error::InternalInconsistency("verification thread panicked".into())))
            })
            .collect()
    })
}
