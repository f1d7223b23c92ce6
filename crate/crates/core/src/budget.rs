use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Resource limits shared by the table builders, enumerators and the
/// good-path dynamic program.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of cells in a count table or DP state space.
    pub max_cells: u64,
    /// Maximum number of paths an exhaustive enumeration may visit.
    pub max_enum: u64,
    /// Maximum number of labels tracked by the good-path bitmask.
    pub max_label_bits: u32,
}

impl Budget {
    pub const DEFAULT_MAX_CELLS: u64 = 10_000_000;
    pub const DEFAULT_MAX_ENUM: u64 = 10_000_000;
    pub const DEFAULT_LABEL_BITS: u32 = 24;

    pub fn with_max_cells(mut self, max_cells: u64) -> Self {
        self.max_cells = max_cells;
        self
    }

    pub fn with_max_enum(mut self, max_enum: u64) -> Self {
        self.max_enum = max_enum;
        self
    }

    pub(crate) fn check_cells(&self, what: &'static str, cells: u128) -> Result<()> {
        if cells > u128::from(self.max_cells) {
            return Err(Error::Resource {
                what,
                needed: format!("{cells} cells"),
                limit: self.max_cells,
            });
        }
        Ok(())
    }

    pub(crate) fn check_enum(&self, count: &BigUint) -> Result<()> {
        if *count > BigUint::from(self.max_enum) {
            return Err(Error::Resource {
                what: "path enumeration",
                needed: format!("{count} paths"),
                limit: self.max_enum,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_cells: Self::DEFAULT_MAX_CELLS,
            max_enum: Self::DEFAULT_MAX_ENUM,
            max_label_bits: Self::DEFAULT_LABEL_BITS,
        }
    }
}
