//! Size caps and solver policy.
//!
//! Every potentially expensive operation takes a [`Caps`] value instead of
//! relying on hard-coded constants. The defaults are sized so that the whole
//! test suite runs in minutes on a laptop.

use serde::{Deserialize, Serialize};

/// Configurable resource limits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Largest group order for which elements are enumerated.
    pub max_group_order: u64,
    /// Largest group order for which automorphisms/isomorphisms are enumerated.
    pub max_aut_group_order: u64,
    /// Largest number of entries in a dense cochain table.
    pub max_table_entries: u64,
    /// Largest number of unknowns in a coboundary linear system.
    pub max_solver_unknowns: u64,
    /// Largest group order accepted by the prime decomposer.
    pub max_decompose_order: u64,
    /// Extra factor applied to the solving modulus M' = lcm-denominator x |A|.
    pub modulus_scale: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_group_order: 4096,
            max_aut_group_order: 64,
            max_table_entries: 10_000_000,
            max_solver_unknowns: 256,
            max_decompose_order: 256,
            modulus_scale: 1,
        }
    }
}

impl Caps {
    pub(crate) fn check(&self, what: &'static str, requested: u64, limit: u64) -> crate::Result<()> {
        if requested > limit {
            Err(crate::Error::CapExceeded {
                what,
                requested,
                limit,
            })
        } else {
            Ok(())
        }
    }
}
