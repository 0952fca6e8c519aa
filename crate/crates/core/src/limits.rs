//! Resource caps for table sizes and brute-force enumeration.

use crate::error::{Error, Result};

/// Environment variable overriding [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "QPARTITION_MAX_ORDER";

pub const DEFAULT_MAX_ORDER: usize = 1_000_000;

/// Largest `n` accepted by colored-partition enumeration; the output has `a(n)` entries.
pub const MAX_ENUMERATION_N: usize = 30;

/// Largest table length or series order accepted, honouring the environment override.
pub fn max_order() -> usize {
    std::env::var(MAX_ORDER_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_ORDER)
}

pub(crate) fn check_table_len(n: usize) -> Result<()> {
    let cap = max_order();
    if n > cap {
        return Err(Error::Resource { requested: n, cap });
    }
    Ok(())
}
