use crate::error::{resource_err, Result};

pub const ENV_MAX_GENS: &str = "MONRES_MAX_GENS";
pub const ENV_MAX_VARS: &str = "MONRES_MAX_VARS";

/// Size caps for the exponential-time routines.
///
/// Exceeding a cap is always reported as [`crate::Error::Resource`]; nothing is
/// silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Generators allowed in the homology oracle.
    pub oracle_gens: usize,
    /// Variables (occurring in some generator) allowed in the homology oracle.
    pub oracle_vars: usize,
    /// Generators allowed when enumerating Taylor or Scarf complexes.
    pub complex_gens: usize,
    /// Generators allowed in the exhaustive linear-quotient search.
    pub order_search_gens: usize,
    /// Variables allowed in the exhaustive weakly polymatroidal order search.
    pub order_search_vars: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            oracle_gens: 12,
            oracle_vars: 12,
            complex_gens: 20,
            order_search_gens: 8,
            order_search_vars: 8,
        }
    }
}

impl Limits {
    /// Defaults, with the oracle caps overridden by `MONRES_MAX_GENS` and
    /// `MONRES_MAX_VARS` when those are set to integers.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = read_env(ENV_MAX_GENS) {
            limits.oracle_gens = n;
        }
        if let Some(n) = read_env(ENV_MAX_VARS) {
            limits.oracle_vars = n;
        }
        limits
    }

    /// Caps large enough for any input the oracle can realistically finish.
    pub fn generous() -> Self {
        Limits {
            oracle_gens: 16,
            oracle_vars: 64,
            complex_gens: 20,
            order_search_gens: 9,
            order_search_vars: 12,
        }
    }

    pub(crate) fn check(what: &str, actual: usize, cap: usize) -> Result<()> {
        if actual > cap {
            return Err(resource_err!("{what}: {actual} exceeds the cap of {cap}"));
        }
        Ok(())
    }
}

fn read_env(key: &str) -> Option<usize> {
    std::env::var(key).ok()?.trim().parse().ok()
}
