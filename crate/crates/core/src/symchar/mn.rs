//! Murnaghan–Nakayama evaluation of `σ_λ(w_μ)` on beta-sets.
//!
//! Removing a border strip of length `r` from `λ` is the same as sliding one
//! bead of the beta-set down by `r` onto an empty position; the strip's
//! height parity is the number of beads jumped over.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::scalar::ExactInt;

/// Memoized evaluator keyed by (remaining diagram, remaining cycles).
/// Cycles are consumed in decreasing order.
#[derive(Debug, Default)]
pub struct MnEvaluator<T> {
    memo: HashMap<(Partition, Partition), T>,
}

impl<T: ExactInt> MnEvaluator<T> {
    pub fn new() -> Self {
        MnEvaluator {
            memo: HashMap::new(),
        }
    }

    pub fn character(&mut self, shape: &Partition, cycle_type: &Partition) -> Result<T> {
        if shape.size() != cycle_type.size() {
            return Err(Error::SizeMismatch {
                expected: shape.size(),
                found: cycle_type.size(),
            });
        }
        Ok(self.eval(shape, cycle_type.parts()))
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn eval(&mut self, shape: &Partition, cycles: &[usize]) -> T {
        let Some((&r, rest)) = cycles.split_first() else {
            return T::one();
        };
        if rest.is_empty() {
            // a single strip of length n exists only for hooks
            return hook_value(shape, r);
        }
        let key = (
            shape.clone(),
            Partition::from_multiset(cycles.iter().copied()),
        );
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let beta = shape.beta_set(shape.rows());
        let mut total = T::zero();
        for (i, &b) in beta.iter().enumerate() {
            if b < r {
                continue;
            }
            let target = b - r;
            if beta.contains(&target) {
                continue;
            }
            let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut moved = beta.clone();
            moved[i] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let smaller = Partition::from_beta_set(&moved);
            let v = self.eval(&smaller, rest);
            if jumped % 2 == 0 {
                total = total + v;
            } else {
                total = total - v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `σ_λ` on an `n`-cycle: `(−1)^{leg}` for a hook, zero otherwise.
fn hook_value<T: ExactInt>(shape: &Partition, n: usize) -> T {
    debug_assert_eq!(shape.size(), n);
    if shape.is_empty() {
        return T::one();
    }
    let arm = shape.first_part() - 1;
    let leg = shape.rows() - 1;
    if arm + leg + 1 != n {
        T::zero()
    } else if leg.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// One-off evaluation of `σ_λ(w_μ)` with a fresh memo.
pub fn mn_character<T: ExactInt>(shape: &Partition, cycle_type: &Partition) -> Result<T> {
    MnEvaluator::new().character(shape, cycle_type)
}
