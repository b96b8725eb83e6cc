//! Young-diagram and multiset calculus on integer partitions.
//!
//! A [`Partition`] doubles as three things: the label of a unipotent
//! representation `π_λ`, the class label of a maximal torus `T_μ`, and a
//! conjugacy class (cycle type) of `S_n`. The operations below are exactly
//! the ones the multiplicity formulas consume.
//!
//! Canonical text form: comma-separated decreasing parts (`3,2,1`), and `[]`
//! for the empty partition.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial, from_usize, ExactInt};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validating constructor: parts must be positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}: zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?}: parts must be weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from an unordered multiset of parts; zeros are dropped.
    pub fn from_multiset<I: IntoIterator<Item = usize>>(parts: I) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `n`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `k`, the number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ₁`, or 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The `i`-th part, zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate diagram `ᵗλ`.
    pub fn transpose(&self) -> Partition {
        let parts = (0..self.first_part())
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// `[λ₁−1, …, λ_k−1]` with zeros dropped; a partition of `n − k`.
    pub fn remove_first_column(&self) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .filter(|&&p| p > 1)
                .map(|p| p - 1)
                .collect(),
        }
    }

    /// `[λ₂, …, λ_k]`; a partition of `n − λ₁`.
    pub fn remove_first_row(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Prepends a column of `len` boxes: the inverse of
    /// [`remove_first_column`](Self::remove_first_column) when
    /// `len ≥ rows(self)`.
    pub fn add_first_column(&self, len: usize) -> Result<Partition> {
        if len < self.rows() {
            return Err(Error::Precondition(format!(
                "column of length {len} is shorter than the {} rows of {self}",
                self.rows()
            )));
        }
        Ok(Partition {
            parts: (0..len).map(|i| self.part(i) + 1).collect(),
        })
    }

    /// Multiset union of parts, `[α, β]`.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_multiset(self.parts.iter().chain(other.parts.iter()).copied())
    }

    /// `(part value, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    fn multiplicity_map(&self) -> BTreeMap<usize, usize> {
        self.multiplicities().into_iter().collect()
    }

    /// Multiplicity of the part value `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    /// Every distinct sub-multiset of the parts, including `[]` and `self`,
    /// ordered by size and then lexicographically descending.
    pub fn sub_multisets(&self) -> impl Iterator<Item = Partition> {
        let mults = self.multiplicities();
        let mut out = Vec::with_capacity(mults.iter().map(|(_, c)| c + 1).product());
        let mut counts = vec![0usize; mults.len()];
        loop {
            out.push(Partition::from_multiset(
                mults
                    .iter()
                    .zip(&counts)
                    .flat_map(|(&(v, _), &c)| std::iter::repeat_n(v, c)),
            ));
            // odometer over 0..=a_i
            let mut i = 0;
            while i < counts.len() && counts[i] == mults[i].1 {
                counts[i] = 0;
                i += 1;
            }
            if i == counts.len() {
                break;
            }
            counts[i] += 1;
        }
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts)));
        out.into_iter()
    }

    /// `z_μ = ∏_j j^{m_j}·m_j!`, the order of the centralizer in `S_n` of a
    /// permutation of cycle type `μ`.
    pub fn centralizer_order<T: ExactInt>(&self) -> T {
        self.multiplicities()
            .into_iter()
            .fold(T::one(), |acc, (j, m)| {
                let jm = (0..m).fold(T::one(), |a, _| a * from_usize::<T>(j));
                acc * jm * factorial::<T>(m)
            })
    }

    /// `n!/z_μ`, the number of permutations of cycle type `μ`.
    pub fn class_size<T: ExactInt>(&self) -> T {
        factorial::<T>(self.size()) / self.centralizer_order::<T>()
    }

    /// Sign of a permutation of cycle type `μ`: `(−1)^{n−k}`.
    pub fn perm_sign(&self) -> i64 {
        if (self.size() - self.rows()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Every part value occurs with even multiplicity.
    pub fn is_even(&self) -> bool {
        self.multiplicities().iter().all(|&(_, c)| c % 2 == 0)
    }

    /// Beta-set of `λ` with `len` beads: `λ_i + (len − 1 − i)`.
    pub(crate) fn beta_set(&self, len: usize) -> Vec<usize> {
        debug_assert!(len >= self.rows());
        (0..len).map(|i| self.part(i) + (len - 1 - i)).collect()
    }

    /// Inverse of [`beta_set`](Self::beta_set); `beta` must be strictly decreasing.
    pub(crate) fn from_beta_set(beta: &[usize]) -> Partition {
        let len = beta.len();
        Partition {
            parts: beta
                .iter()
                .enumerate()
                .map(|(i, &b)| b - (len - 1 - i))
                .filter(|&p| p > 0)
                .collect(),
        }
    }
}

/// `μ′ ⊂ μ` as multisets of parts.
pub fn contains(sub: &Partition, sup: &Partition) -> bool {
    let have = sup.multiplicity_map();
    sub.multiplicities()
        .into_iter()
        .all(|(v, c)| have.get(&v).copied().unwrap_or(0) >= c)
}

/// `C_{λ,λ′} = ∏_i C(a_i, b_i)`, the number of ways to embed the multiset
/// `λ′` into `λ`, where `a_i`, `b_i` are the multiplicities of each part value.
pub fn binom_embeddings<T: ExactInt>(sup: &Partition, sub: &Partition) -> Result<T> {
    if !contains(sub, sup) {
        return Err(Error::NotContained {
            sub: sub.to_string(),
            sup: sup.to_string(),
        });
    }
    let sub_counts = sub.multiplicity_map();
    Ok(sup
        .multiplicities()
        .into_iter()
        .fold(T::one(), |acc, (v, a)| {
            acc * binomial::<T>(a, sub_counts.get(&v).copied().unwrap_or(0))
        }))
}

fn padded(a: &Partition, b: &Partition) -> (Vec<usize>, Vec<usize>) {
    let len = a.rows().max(b.rows());
    (
        (0..len).map(|i| a.part(i)).collect(),
        (0..len).map(|i| b.part(i)).collect(),
    )
}

/// `|μ_i − μ′_i| ≤ 1` for every row, zero-padding the shorter partition.
pub fn is_close(a: &Partition, b: &Partition) -> bool {
    let (x, y) = padded(a, b);
    x.iter().zip(&y).all(|(p, q)| p.abs_diff(*q) <= 1)
}

/// `μ ∩ μ′`: the parts `μ_i` at the rows where `μ_i = μ′_i`.
pub fn meet(a: &Partition, b: &Partition) -> Partition {
    let (x, y) = padded(a, b);
    Partition::from_multiset(x.into_iter().zip(y).filter(|(p, q)| p == q).map(|(p, _)| p))
}

/// Close with an even meet.
pub fn is_2transverse(a: &Partition, b: &Partition) -> bool {
    is_close(a, b) && meet(a, b).is_even()
}

/// Close with an empty meet.
pub fn is_transverse(a: &Partition, b: &Partition) -> bool {
    is_close(a, b) && meet(a, b).is_empty()
}

/// All partitions of `n` in reverse-lexicographic order, starting at `[n]`.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

/// Next partition in reverse-lex order: decrement the last part larger than
/// one and refill greedily.
fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let pos = parts.iter().rposition(|&p| p > 1)?;
    let mut out = parts[..pos].to_vec();
    let top = parts[pos] - 1;
    let mut rest = parts[pos..].iter().sum::<usize>();
    while rest > 0 {
        let p = top.min(rest);
        out.push(p);
        rest -= p;
    }
    Some(out)
}

/// Reverse-lexicographic comparison: `[n]` first, `[1^n]` last.
pub fn canonical_cmp(a: &Partition, b: &Partition) -> Ordering {
    b.parts.cmp(&a.parts)
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by size, then reverse-lexicographically, so that sorted
/// collections follow the canonical enumeration order.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| canonical_cmp(self, other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("[]");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,1`, `[3,2,1]`, `[]` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
