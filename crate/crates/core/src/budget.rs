use crate::error::{Error, Result};

/// Evaluation budget for enumeration-heavy operations. Every operation that
/// loops over a product domain checks its exact cost against this before
/// doing any work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(1 << 26);

    pub fn check(self, need: u128) -> Result<()> {
        if need > self.0 as u128 {
            Err(Error::BudgetExceeded { need, budget: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// `base^exp` as u128 without overflow surprises; saturates at u128::MAX.
pub fn pow_u128(base: u64, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
