use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::scalar::{int, ExactInt};
use crate::symchar::CharacterCache;

/// A rational-valued class function on `S_n`, indexed by cycle type.
/// Absent keys are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassFunction<T: ExactInt> {
    n: usize,
    values: BTreeMap<Partition, Ratio<T>>,
}

impl<T: ExactInt> ClassFunction<T> {
    pub fn new(n: usize, values: BTreeMap<Partition, Ratio<T>>) -> Result<Self> {
        if let Some(bad) = values.keys().find(|k| k.size() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                found: bad.size(),
            });
        }
        Ok(ClassFunction { n, values })
    }

    pub fn zero(n: usize) -> Self {
        ClassFunction {
            n,
            values: BTreeMap::new(),
        }
    }

    fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> T) -> Self {
        let values = partitions_of(n)
            .map(|mu| {
                let v = f(&mu);
                (mu, Ratio::from_integer(v))
            })
            .collect();
        ClassFunction { n, values }
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| T::one())
    }

    pub fn sign(n: usize) -> Self {
        Self::from_fn(n, |mu| int(mu.perm_sign()))
    }

    /// The irreducible character `σ_λ`.
    pub fn irreducible(cache: &CharacterCache<T>, shape: &Partition) -> Result<Self> {
        let table = cache.table(shape.size());
        let row = table.row(shape)?;
        let values = table
            .labels()
            .iter()
            .zip(row)
            .map(|(mu, v)| (mu.clone(), Ratio::from_integer(v.clone())))
            .collect();
        Ok(ClassFunction {
            n: shape.size(),
            values,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, cycle_type: &Partition) -> Ratio<T> {
        self.values
            .get(cycle_type)
            .cloned()
            .unwrap_or_else(|| Ratio::from_integer(T::zero()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Ratio<T>)> {
        self.values.iter()
    }

    /// `⟨f, g⟩ = Σ_μ f(μ)·g(μ)/z_μ`.
    pub fn inner_product(&self, other: &Self) -> Result<Ratio<T>> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut total = Ratio::from_integer(T::zero());
        for (mu, f) in &self.values {
            if let Some(g) = other.values.get(mu) {
                total = total + f.clone() * g.clone() / Ratio::from_integer(mu.centralizer_order());
            }
        }
        Ok(total)
    }

    fn combine(mut self, other: &Self, sign: bool) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        for (mu, g) in &other.values {
            let slot = self
                .values
                .entry(mu.clone())
                .or_insert_with(|| Ratio::from_integer(T::zero()));
            *slot = if sign {
                slot.clone() + g.clone()
            } else {
                slot.clone() - g.clone()
            };
        }
        Ok(self)
    }

    pub fn try_add(self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    pub fn try_sub(self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn scale(mut self, c: &Ratio<T>) -> Self {
        for v in self.values.values_mut() {
            *v = v.clone() * c.clone();
        }
        self
    }
}

/// Panics on mismatched `n`; use [`ClassFunction::try_add`] otherwise.
impl<T: ExactInt> Add for ClassFunction<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("class functions on the same S_n")
    }
}

impl<T: ExactInt> Sub for ClassFunction<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.try_sub(&rhs).expect("class functions on the same S_n")
    }
}

/// Pointwise product.
impl<T: ExactInt> Mul for &ClassFunction<T> {
    type Output = ClassFunction<T>;
    fn mul(self, rhs: Self) -> ClassFunction<T> {
        assert_eq!(self.n, rhs.n, "class functions on the same S_n");
        let values = self
            .values
            .iter()
            .filter_map(|(mu, f)| {
                rhs.values
                    .get(mu)
                    .map(|g| (mu.clone(), f.clone() * g.clone()))
            })
            .collect();
        ClassFunction { n: self.n, values }
    }
}
