//! Exact symmetric-group characters.
//!
//! `σ_λ(w_μ)` is the value of the irreducible character labelled by `λ ⊢ n`
//! on a permutation of cycle type `μ ⊢ n` (the labelling where `[n]` is the
//! trivial character and `[1ⁿ]` the sign).

mod class_function;
mod mn;
mod oracle;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_rational::Ratio;

pub use class_function::ClassFunction;
pub use mn::{mn_character, MnEvaluator};
pub use oracle::{kostka_number, oracle_character, oracle_table, DEFAULT_ORACLE_BOUND};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::scalar::{ratio_to_int, ExactInt};

/// The character table of `S_n`; rows and columns follow the canonical
/// (reverse-lexicographic) partition order.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable<T> {
    n: usize,
    labels: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<T>,
}

impl<T: ExactInt> CharacterTable<T> {
    /// Builds the table by Murnaghan–Nakayama with one shared memo.
    pub fn build(n: usize) -> Self {
        let labels: Vec<Partition> = partitions_of(n).collect();
        let mut mn = MnEvaluator::new();
        let mut values = Vec::with_capacity(labels.len() * labels.len());
        for shape in &labels {
            for mu in &labels {
                values.push(mn.character(shape, mu).expect("labels share a size"));
            }
        }
        Self::assemble(n, labels, values)
    }

    /// Wraps precomputed rows, e.g. loaded from a cache file.
    pub fn from_rows(n: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let labels: Vec<Partition> = partitions_of(n).collect();
        if rows.len() != labels.len() || rows.iter().any(|r| r.len() != labels.len()) {
            return Err(Error::Precondition(format!(
                "character table of S_{n} must be {0}×{0}",
                labels.len()
            )));
        }
        Ok(Self::assemble(
            n,
            labels,
            rows.into_iter().flatten().collect(),
        ))
    }

    fn assemble(n: usize, labels: Vec<Partition>, values: Vec<T>) -> Self {
        let index = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();
        CharacterTable {
            n,
            labels,
            index,
            values,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    fn position(&self, label: &Partition) -> Result<usize> {
        self.index.get(label).copied().ok_or(Error::SizeMismatch {
            expected: self.n,
            found: label.size(),
        })
    }

    pub fn value(&self, shape: &Partition, cycle_type: &Partition) -> Result<&T> {
        let i = self.position(shape)?;
        let j = self.position(cycle_type)?;
        Ok(&self.values[i * self.labels.len() + j])
    }

    pub fn row(&self, shape: &Partition) -> Result<&[T]> {
        let i = self.position(shape)?;
        let p = self.labels.len();
        Ok(&self.values[i * p..(i + 1) * p])
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Partition, &[T])> {
        let p = self.labels.len();
        self.labels
            .iter()
            .enumerate()
            .map(move |(i, l)| (l, &self.values[i * p..(i + 1) * p]))
    }
}

/// Character tables by `n`, built on demand.
///
/// A table is built outside the lock and published once; published tables
/// are immutable and shared through `Arc`.
#[derive(Debug, Default)]
pub struct CharacterCache<T> {
    tables: RwLock<BTreeMap<usize, Arc<CharacterTable<T>>>>,
}

impl<T: ExactInt> CharacterCache<T> {
    pub fn new() -> Self {
        CharacterCache {
            tables: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn table(&self, n: usize) -> Arc<CharacterTable<T>> {
        if let Some(t) = self.tables.read().expect("cache lock").get(&n) {
            return Arc::clone(t);
        }
        let built = Arc::new(CharacterTable::build(n));
        let mut guard = self.tables.write().expect("cache lock");
        Arc::clone(guard.entry(n).or_insert(built))
    }

    /// Seeds the cache; an existing table for the same `n` is kept.
    pub fn insert(&self, table: CharacterTable<T>) {
        self.tables
            .write()
            .expect("cache lock")
            .entry(table.n())
            .or_insert_with(|| Arc::new(table));
    }

    pub fn contains(&self, n: usize) -> bool {
        self.tables.read().expect("cache lock").contains_key(&n)
    }

    /// Published tables in increasing `n`.
    pub fn tables(&self) -> Vec<Arc<CharacterTable<T>>> {
        self.tables
            .read()
            .expect("cache lock")
            .values()
            .cloned()
            .collect()
    }

    /// `σ_λ(w_μ)`.
    pub fn character(&self, shape: &Partition, cycle_type: &Partition) -> Result<T> {
        if shape.size() != cycle_type.size() {
            return Err(Error::SizeMismatch {
                expected: shape.size(),
                found: cycle_type.size(),
            });
        }
        self.table(shape.size()).value(shape, cycle_type).cloned()
    }

    /// `⟨Res_{S_{n−m}×S_m} σ_λ, σ_ν ⊗ 1⟩` for `ν ⊢ n − m`:
    /// `Σ_{ρ⊢n−m, τ⊢m} σ_λ(w_{ρ∪τ})·σ_ν(w_ρ)/(z_ρ·z_τ)`.
    pub fn restriction_multiplicity(
        &self,
        shape: &Partition,
        nu: &Partition,
        m: usize,
    ) -> Result<T> {
        let n = shape.size();
        if m > n {
            return Err(Error::Precondition(format!("m = {m} exceeds n = {n}")));
        }
        if nu.size() != n - m {
            return Err(Error::SizeMismatch {
                expected: n - m,
                found: nu.size(),
            });
        }
        let big = self.table(n);
        let small = self.table(n - m);
        let mut total = Ratio::from_integer(T::zero());
        for rho in partitions_of(n - m) {
            let inner = small.value(nu, &rho)?;
            if inner.is_zero() {
                continue;
            }
            let z_rho = rho.centralizer_order::<T>();
            for tau in partitions_of(m) {
                let outer = big.value(shape, &rho.union(&tau))?;
                total = total
                    + Ratio::new(
                        outer.clone() * inner.clone(),
                        z_rho.clone() * tau.centralizer_order::<T>(),
                    );
            }
        }
        ratio_to_int(&total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn table_shape_and_lookup() {
        let t = CharacterTable::<i64>::build(4);
        assert_eq!(t.labels().len(), 5);
        assert_eq!(*t.value(&p(&[2, 2]), &p(&[1, 1, 1, 1])).unwrap(), 2);
        assert_eq!(*t.value(&p(&[2, 2]), &p(&[3, 1])).unwrap(), -1);
        assert_eq!(t.row(&p(&[4])).unwrap(), &[1, 1, 1, 1, 1]);
        assert!(t.value(&p(&[3]), &p(&[4])).is_err());
    }

    #[test]
    fn from_rows_validates_dimensions() {
        assert!(CharacterTable::<i64>::from_rows(2, vec![vec![1, 1], vec![-1]]).is_err());
        let t = CharacterTable::<i64>::from_rows(2, vec![vec![1, 1], vec![-1, 1]]).unwrap();
        assert_eq!(t, CharacterTable::build(2));
    }

    #[test]
    fn cache_publishes_once() {
        let cache = CharacterCache::<i64>::new();
        let a = cache.table(5);
        let b = cache.table(5);
        assert!(Arc::ptr_eq(&a, &b));
        assert!(cache.contains(5));
        assert_eq!(cache.character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert!(cache.character(&p(&[2, 1]), &p(&[3, 1])).is_err());
    }

    #[test]
    fn branching_by_first_row() {
        let cache = CharacterCache::<i64>::new();
        let lambda = p(&[3, 2, 1]);
        assert_eq!(
            cache
                .restriction_multiplicity(&lambda, &p(&[2, 1]), 3)
                .unwrap(),
            1
        );
        assert_eq!(
            cache
                .restriction_multiplicity(&lambda, &p(&[3]), 3)
                .unwrap(),
            0
        );
        assert_eq!(
            cache
                .restriction_multiplicity(&lambda, &p(&[1, 1, 1]), 3)
                .unwrap(),
            0
        );
        assert_eq!(
            cache.restriction_multiplicity(&lambda, &lambda, 0).unwrap(),
            1
        );
        // m > λ₁: no S_m-invariants
        assert_eq!(
            cache
                .restriction_multiplicity(&lambda, &p(&[2]), 4)
                .unwrap(),
            0
        );
        assert!(cache
            .restriction_multiplicity(&lambda, &p(&[2]), 3)
            .is_err());
    }
}
