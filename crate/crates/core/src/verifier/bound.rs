//! Rigorous check of `a(n) < exp(π√n)`.
//!
//! Each comparison `ln a(n) < π√n` is made with correctly rounded
//! arbitrary-precision arithmetic: `ln a(n)` is rounded up, and `π` and
//! `√n` (hence their product, all positive) are rounded down. A pass at
//! some `n` is therefore a proof for that `n`. When the rounded values
//! cannot separate the two sides, the precision is doubled once before the
//! check gives up with [`Status::FailPrecision`](crate::report::Status).

use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::partitions::cubic_table;
use crate::report::{timed, Counterexample, VerificationReport};

/// Outcome of a single `ln a(n)` vs `π√n` comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// `ln a(n) < π√n` proven.
    Below,
    /// `ln a(n) >= π√n` proven.
    NotBelow,
    /// The enclosures overlap at this precision.
    Undecided,
}

pub(crate) struct BoundChecker {
    consts: Consts,
}

/// Exact conversion of a positive integer.
pub(crate) fn exact_float(v: &BigInt) -> Result<BigFloat> {
    if !v.is_positive() {
        return Err(Error::invalid(format!("expected a positive integer, got {v}")));
    }
    let words: Vec<Word> = v.magnitude().to_u64_digits();
    let exp = i32::try_from(words.len() * Word::BITS as usize).map_err(|_| Error::invalid("integer too large"))?;
    let f = BigFloat::from_words(&words, Sign::Pos, exp);
    if f.is_nan() {
        return Err(Error::invalid("integer out of floating-point range"));
    }
    Ok(f)
}

impl BoundChecker {
    pub(crate) fn new() -> Result<Self> {
        let consts = Consts::new().map_err(|e| Error::InternalInconsistency(format!("constants cache: {e:?}")))?;
        Ok(BoundChecker { consts })
    }

    fn pi_sqrt(&mut self, n: u64, bits: usize, rm: RoundingMode) -> BigFloat {
        let pi = self.consts.pi(bits, rm);
        let root = BigFloat::from_u64(n, bits).sqrt(bits, rm);
        pi.mul(&root, bits, rm)
    }

    /// Compares `ln value` against `π√n` at `bits` of significand.
    pub(crate) fn compare(&mut self, value: &BigInt, n: u64, bits: usize) -> Result<Comparison> {
        let a = exact_float(value)?;
        let ln_up = a.ln(bits, RoundingMode::Up, &mut self.consts);
        let rhs_down = self.pi_sqrt(n, bits, RoundingMode::Down);
        if ln_up.is_nan() || rhs_down.is_nan() {
            return Err(Error::InternalInconsistency(format!("NaN while bounding a({n})")));
        }
        // cmp returns a signed magnitude, not just -1, 0 or 1
        if ln_up.cmp(&rhs_down).is_some_and(|c| c < 0) {
            return Ok(Comparison::Below);
        }
        let ln_down = a.ln(bits, RoundingMode::Down, &mut self.consts);
        let rhs_up = self.pi_sqrt(n, bits, RoundingMode::Up);
        if ln_down.cmp(&rhs_up).is_some_and(|c| c >= 0) {
            return Ok(Comparison::NotBelow);
        }
        Ok(Comparison::Undecided)
    }
}

/// `ln a(n) / (π√n)` in double precision, for reporting only.
fn approx_ratio(value: &BigInt, n: u64) -> f64 {
    let bits = value.bits();
    let ln = if bits < 1000 {
        value.to_f64().unwrap_or(f64::INFINITY).ln()
    } else {
        let shift = bits - 60;
        let top: BigInt = value >> shift;
        top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
    };
    ln / (std::f64::consts::PI * (n as f64).sqrt())
}

/// Checks `a(n) < exp(π√n)` for `1 <= n <= n_max`.
pub fn check_bound(n_max: usize, precision_bits: usize) -> Result<VerificationReport> {
    if n_max < 1 {
        return Err(Error::invalid("bound check needs n_max >= 1"));
    }
    if precision_bits < 64 {
        return Err(Error::invalid(format!("precision must be at least 64 bits, got {precision_bits}")));
    }
    timed(|| {
        let table = cubic_table(n_max + 1)?;
        let mut checker = BoundChecker::new()?;
        let claim = "bound";
        let range = format!("1 <= n <= {n_max}, {precision_bits} bits");
        let mut max_ratio = 0f64;
        for (n, value) in table.values().iter().enumerate().skip(1) {
            let n64 = n as u64;
            let mut outcome = checker.compare(value, n64, precision_bits)?;
            if outcome == Comparison::Undecided {
                outcome = checker.compare(value, n64, 2 * precision_bits)?;
            }
            match outcome {
                Comparison::Below => max_ratio = max_ratio.max(approx_ratio(value, n64)),
                Comparison::NotBelow => {
                    let ce = Counterexample { n: n64, witness: format!("ln a({n}) >= π√{n}, a({n}) = {value}") };
                    return Ok(VerificationReport::fail(claim, range, ce).with_max_ratio(approx_ratio(value, n64)));
                }
                Comparison::Undecided => {
                    let ce = Counterexample {
                        n: n64,
                        witness: format!("ln a({n}) vs π√{n} undecided at {} bits", 2 * precision_bits),
                    };
                    return Ok(VerificationReport::fail_precision(claim, range, ce));
                }
            }
        }
        Ok(VerificationReport::pass(claim, range).with_max_ratio(max_ratio))
    })
}
