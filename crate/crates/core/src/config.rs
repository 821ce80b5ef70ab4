//! Size limits and timeouts, overridable through environment variables.
//!
//! | variable              | default |
//! |-----------------------|---------|
//! | `POWMON_MAX_THRESHOLD`| 2^20    |
//! | `POWMON_ELEMENT_CAP`  | 2^14    |
//! | `POWMON_SUBSET_CAP`   | 24      |
//! | `POWMON_TIMEOUT_SECS` | 60      |

use std::sync::OnceLock;
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest tail threshold a set may carry.
    pub max_threshold: usize,
    /// Largest truncated power monoid we build.
    pub element_cap: usize,
    /// Largest candidate pool enumerated by brute-force subset searches.
    pub subset_cap: usize,
    pub timeout: Duration,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_threshold: 1 << 20,
            element_cap: 1 << 14,
            subset_cap: 24,
            timeout: Duration::from_secs(60),
        }
    }
}

fn env_usize(key: &str) -> Option<usize> {
    std::env::var(key).ok()?.trim().parse().ok()
}

impl Limits {
    pub fn from_env() -> Self {
        let d = Self::default();
        Self {
            max_threshold: env_usize("POWMON_MAX_THRESHOLD").unwrap_or(d.max_threshold),
            element_cap: env_usize("POWMON_ELEMENT_CAP").unwrap_or(d.element_cap),
            subset_cap: env_usize("POWMON_SUBSET_CAP").unwrap_or(d.subset_cap),
            timeout: env_usize("POWMON_TIMEOUT_SECS")
                .map(|s| Duration::from_secs(s as u64))
                .unwrap_or(d.timeout),
        }
    }

    /// Process-wide limits, read from the environment on first use.
    pub fn global() -> &'static Limits {
        static LIMITS: OnceLock<Limits> = OnceLock::new();
        LIMITS.get_or_init(Limits::from_env)
    }
}
