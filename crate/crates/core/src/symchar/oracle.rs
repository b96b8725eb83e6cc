//! Independent character oracle through symmetric functions.
//!
//! `p_μ = Σ_λ χ_λ(μ)·s_λ`. Both sides are expanded in the monomial basis:
//! the Schur side through Kostka numbers (semistandard tableaux counted by
//! horizontal strips) and the power-sum side by literally multiplying the
//! polynomials `p_j = Σ_i x_i^j` in `n` variables. The Kostka matrix is
//! unitriangular in the canonical order, so the system is solved by forward
//! substitution over exact rationals. Nothing here touches border strips.

use std::collections::HashMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::scalar::{from_usize, ratio_to_int, ExactInt};
use crate::symchar::CharacterTable;

pub const DEFAULT_ORACLE_BOUND: usize = 7;

/// Number of semistandard tableaux of the given shape and content.
pub fn kostka_number(shape: &Partition, content: &[usize]) -> u64 {
    if shape.size() != content.iter().sum::<usize>() {
        return 0;
    }
    kostka_rec(shape.parts(), content)
}

fn kostka_rec(shape: &[usize], content: &[usize]) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    // the boxes holding the largest letter form a horizontal strip of size `last`
    let mut inner = vec![0usize; shape.len()];
    let mut count = 0;
    strips(shape, 0, last, &mut inner, &mut |inner| {
        let trimmed: Vec<usize> = inner.iter().copied().filter(|&x| x > 0).collect();
        count += kostka_rec(&trimmed, rest);
    });
    count
}

/// Enumerates inner shapes `μ` with `shape/μ` a horizontal strip of `remaining` boxes.
fn strips(
    shape: &[usize],
    row: usize,
    remaining: usize,
    inner: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if row == shape.len() {
        if remaining == 0 {
            visit(inner);
        }
        return;
    }
    let lower = shape.get(row + 1).copied().unwrap_or(0);
    let upper = shape[row];
    for keep in (lower..=upper).rev() {
        let removed = upper - keep;
        if removed > remaining {
            break;
        }
        inner[row] = keep;
        strips(shape, row + 1, remaining - removed, inner, visit);
    }
}

/// Coefficients of `p_μ` on the monomials `m_ν`, `ν` in `labels`.
fn power_sum_in_monomials<T: ExactInt>(mu: &Partition, labels: &[Partition]) -> Vec<T> {
    let vars = mu.size().max(1);
    let mut poly: HashMap<Vec<u8>, T> = HashMap::new();
    poly.insert(vec![0u8; vars], T::one());
    for &j in mu.parts() {
        let mut next: HashMap<Vec<u8>, T> = HashMap::with_capacity(poly.len() * vars);
        for (mono, coeff) in &poly {
            for i in 0..vars {
                let mut m = mono.clone();
                m[i] += j as u8;
                let slot = next.entry(m).or_insert_with(T::zero);
                *slot = slot.clone() + coeff.clone();
            }
        }
        poly = next;
    }
    labels
        .iter()
        .map(|nu| {
            let key: Vec<u8> = (0..vars).map(|i| nu.part(i) as u8).collect();
            poly.get(&key).cloned().unwrap_or_else(T::zero)
        })
        .collect()
}

/// The full character table of `S_n`, computed without Murnaghan–Nakayama.
pub fn oracle_table<T: ExactInt>(n: usize, bound: usize) -> Result<CharacterTable<T>> {
    if n > bound {
        return Err(Error::OracleBound { n, bound });
    }
    let labels: Vec<Partition> = partitions_of(n).collect();
    let kostka: Vec<Vec<T>> = labels
        .iter()
        .map(|shape| {
            labels
                .iter()
                .map(|content| from_usize::<T>(kostka_number(shape, content.parts()) as usize))
                .collect()
        })
        .collect();
    let mut columns: Vec<Vec<T>> = Vec::with_capacity(labels.len());
    for mu in &labels {
        let rhs = power_sum_in_monomials::<T>(mu, &labels);
        let mut coeffs: Vec<Ratio<T>> = Vec::with_capacity(labels.len());
        for (j, r) in rhs.iter().enumerate() {
            let mut acc = Ratio::from_integer(r.clone());
            for (i, c) in coeffs.iter().enumerate() {
                acc = acc - c.clone() * Ratio::from_integer(kostka[i][j].clone());
            }
            coeffs.push(acc / Ratio::from_integer(kostka[j][j].clone()));
        }
        columns.push(coeffs.iter().map(ratio_to_int).collect::<Result<_>>()?);
    }
    let rows = (0..labels.len())
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect();
    CharacterTable::from_rows(n, rows)
}

/// `σ_λ(w_μ)` through the oracle; `n` must not exceed `bound`.
pub fn oracle_character<T: ExactInt>(
    shape: &Partition,
    cycle_type: &Partition,
    bound: usize,
) -> Result<T> {
    if shape.size() != cycle_type.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            found: cycle_type.size(),
        });
    }
    let table = oracle_table::<T>(shape.size(), bound)?;
    table.value(shape, cycle_type).cloned()
}
