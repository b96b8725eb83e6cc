//! Exhaustive identity checks at desk scale.
//!
//! Each [`Criterion`] enumerates every case up to a size bound and compares
//! engine output against an independent computation or a theorem value. The
//! bound used is the smaller of the criterion's own bound and the caller's
//! `max_n`. A run stops at the first counterexample, which is reported.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::dlmult::{CaseTag, DlEngine};
use crate::error::Error;
use crate::ggp::{theta_lift, theta_multiplicity, Ell0, FjMode, Ggp, Model};
use crate::partitions::{partitions_of, Partition};
use crate::scalar::{factorial, ExactInt};
use crate::symchar::{oracle_table, CharacterCache, CharacterTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Criterion {
    Oracle,
    Orthogonality,
    Branching,
    Vanishing,
    ClosedForm,
    Bessel,
    Theta,
    Seesaw,
    Cuspidal,
    InnerSumOracle,
}

impl Criterion {
    pub const ALL: [Criterion; 10] = [
        Criterion::Oracle,
        Criterion::Orthogonality,
        Criterion::Branching,
        Criterion::Vanishing,
        Criterion::ClosedForm,
        Criterion::Bessel,
        Criterion::Theta,
        Criterion::Seesaw,
        Criterion::Cuspidal,
        Criterion::InnerSumOracle,
    ];

    pub fn number(self) -> usize {
        Criterion::ALL
            .iter()
            .position(|&c| c == self)
            .expect("listed")
            + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Oracle => "oracle",
            Criterion::Orthogonality => "orthogonality",
            Criterion::Branching => "branching",
            Criterion::Vanishing => "vanishing",
            Criterion::ClosedForm => "closed-form",
            Criterion::Bessel => "bessel",
            Criterion::Theta => "theta",
            Criterion::Seesaw => "seesaw",
            Criterion::Cuspidal => "cuspidal",
            Criterion::InnerSumOracle => "inner-sum-oracle",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Criterion::Oracle => "Murnaghan–Nakayama agrees with the Kostka/power-sum oracle",
            Criterion::Orthogonality => "row and column orthogonality of character tables",
            Criterion::Branching => "restriction to S_{n−m}×S_m against σ_ν⊗1",
            Criterion::Vanishing => "inner_sum vanishes for |μ′| < n − k",
            Criterion::ClosedForm => "dl_multiplicity matches the closed form at |μ²| = n − k",
            Criterion::Bessel => "Bessel multiplicities at and below the first descent",
            Criterion::Theta => "theta lifts: 2-transverse table, first occurrence, vanishing",
            Criterion::Seesaw => "Fourier–Jacobi declarative vs see-saw, μ₀ independence",
            Criterion::Cuspidal => "descents of staircase partitions",
            Criterion::InnerSumOracle => "inner_sum against a literal sum over S_q",
        }
    }

    /// Largest `n` the criterion is stated for.
    pub fn stated_bound(self) -> usize {
        match self {
            Criterion::Oracle => 7,
            Criterion::Theta | Criterion::Cuspidal => 10,
            Criterion::Seesaw | Criterion::InnerSumOracle => 6,
            _ => 8,
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        Criterion::ALL
            .into_iter()
            .find(|c| c.name() == s || c.number().to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub criterion: Criterion,
    pub bound: usize,
    pub checked: usize,
    pub failure: Option<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} [{}] {} (n ≤ {}, {} checks, {:.2?})",
            self.criterion.number(),
            self.criterion.description(),
            self.bound,
            self.checked,
            self.elapsed
        )?;
        if let Some(msg) = &self.failure {
            write!(f, ": {msg}")?;
        }
        Ok(())
    }
}

type Check = std::result::Result<usize, String>;
/// Case count and the signs seen, for one `λ`.
type SignCheck = std::result::Result<(usize, Vec<i8>), String>;

fn err(e: Error) -> String {
    e.to_string()
}

/// Runs `f` over `items` in parallel; returns the total count or the first
/// failure in item order.
fn check_all<I, F>(items: Vec<I>, f: F) -> Check
where
    I: Send + Sync,
    F: Fn(&I) -> Check + Send + Sync,
{
    let outcomes: Vec<Check> = items.par_iter().map(f).collect();
    outcomes.into_iter().sum()
}

fn partitions_up_to(bound: usize) -> Vec<Partition> {
    (0..=bound).flat_map(partitions_of).collect()
}

pub fn run<T: ExactInt>(
    criterion: Criterion,
    max_n: usize,
    cache: &Arc<CharacterCache<T>>,
) -> SuiteReport {
    let bound = criterion.stated_bound().min(max_n);
    let start = Instant::now();
    let outcome = match criterion {
        Criterion::Oracle => oracle_suite::<T>(bound),
        Criterion::Orthogonality => orthogonality_suite(bound, cache),
        Criterion::Branching => branching_suite(bound, cache),
        Criterion::Vanishing => vanishing_suite(bound, &DlEngine::new(Arc::clone(cache))),
        Criterion::ClosedForm => closed_form_suite(bound, &DlEngine::new(Arc::clone(cache))),
        Criterion::Bessel => bessel_suite(bound, &Ggp::new(Arc::clone(cache))),
        Criterion::Theta => theta_suite(bound),
        Criterion::Seesaw => seesaw_suite(bound, &Ggp::new(Arc::clone(cache))),
        Criterion::Cuspidal => cuspidal_suite(bound, &Ggp::new(Arc::clone(cache))),
        Criterion::InnerSumOracle => inner_sum_suite(bound, &DlEngine::new(Arc::clone(cache))),
    };
    let (checked, failure) = match outcome {
        Ok(c) => (c, None),
        Err(msg) => (0, Some(msg)),
    };
    SuiteReport {
        criterion,
        bound,
        checked,
        failure,
        elapsed: start.elapsed(),
    }
}

/// Runs `criteria` in order with one shared character cache.
pub fn run_all<T: ExactInt>(criteria: &[Criterion], max_n: usize) -> Vec<SuiteReport> {
    let cache = Arc::new(CharacterCache::<T>::new());
    criteria.iter().map(|&c| run(c, max_n, &cache)).collect()
}

fn oracle_suite<T: ExactInt>(bound: usize) -> Check {
    let mut checked = 0;
    for n in 0..=bound {
        let oracle = oracle_table::<T>(n, bound).map_err(err)?;
        let mn = CharacterTable::<T>::build(n);
        for (shape, row) in mn.rows() {
            for (mu, v) in mn.labels().iter().zip(row) {
                let o = oracle.value(shape, mu).map_err(err)?;
                if o != v {
                    return Err(format!(
                        "σ_{shape}(w_{mu}): Murnaghan–Nakayama {v}, oracle {o}"
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn orthogonality_suite<T: ExactInt>(bound: usize, cache: &CharacterCache<T>) -> Check {
    let mut checked = 0;
    for n in 0..=bound {
        let table = cache.table(n);
        let labels = table.labels();
        let z: Vec<T> = labels.iter().map(|mu| mu.centralizer_order()).collect();
        let rows: Vec<(&Partition, &[T])> = table.rows().collect();
        for (a, ra) in &rows {
            for (b, rb) in &rows {
                let s = ra
                    .iter()
                    .zip(rb.iter())
                    .zip(&z)
                    .fold(Ratio::from_integer(T::zero()), |acc, ((x, y), zz)| {
                        acc + Ratio::new(x.clone() * y.clone(), zz.clone())
                    });
                let expected = Ratio::from_integer(if a == b { T::one() } else { T::zero() });
                if s != expected {
                    return Err(format!("row orthogonality fails for ({a}, {b}): {s}"));
                }
                checked += 1;
            }
        }
        for (i, mu) in labels.iter().enumerate() {
            for (j, rho) in labels.iter().enumerate() {
                let s = rows
                    .iter()
                    .fold(T::zero(), |acc, (_, r)| acc + r[i].clone() * r[j].clone());
                let expected = if i == j { z[i].clone() } else { T::zero() };
                if s != expected {
                    return Err(format!("column orthogonality fails for ({mu}, {rho}): {s}"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn branching_suite<T: ExactInt>(bound: usize, cache: &CharacterCache<T>) -> Check {
    check_all(partitions_up_to(bound), |lambda| {
        let n = lambda.size();
        let l1 = lambda.first_part();
        let target = lambda.remove_first_row();
        let mut checked = 0;
        for nu in partitions_of(n - l1) {
            let r = cache
                .restriction_multiplicity(lambda, &nu, l1)
                .map_err(err)?;
            let expected = if nu == target { T::one() } else { T::zero() };
            if r != expected {
                return Err(format!(
                    "restriction of σ_{lambda} to σ_{nu}⊗1 (m = {l1}) is {r}"
                ));
            }
            checked += 1;
        }
        for m in l1 + 1..=n {
            for nu in partitions_of(n - m) {
                let r = cache
                    .restriction_multiplicity(lambda, &nu, m)
                    .map_err(err)?;
                if !r.is_zero() {
                    return Err(format!(
                        "restriction of σ_{lambda} to σ_{nu}⊗1 is {r} although m = {m} > λ₁"
                    ));
                }
                checked += 1;
            }
        }
        Ok(checked)
    })
}

fn vanishing_suite<T: ExactInt>(bound: usize, dl: &DlEngine<T>) -> Check {
    check_all(partitions_up_to(bound), |lambda| {
        let gap = lambda.size() - lambda.rows();
        let mut checked = 0;
        for size in 0..gap {
            for mu in partitions_of(size) {
                let s = dl.inner_sum(lambda, &mu).map_err(err)?;
                if !s.is_zero() {
                    return Err(format!("inner_sum({lambda}, {mu}) = {s}, expected 0"));
                }
                checked += 1;
            }
        }
        Ok(checked)
    })
}

fn closed_form_suite<T: ExactInt>(bound: usize, dl: &DlEngine<T>) -> Check {
    // sign of dl_multiplicity / closed_form, per (n, k), over all nonzero cases
    let per_lambda: Vec<(Partition, SignCheck)> = partitions_up_to(bound)
        .into_par_iter()
        .map(|lambda| {
            let run = || {
                let mut signs = Vec::new();
                let mut checked = 0;
                for mu2 in partitions_of(lambda.size() - lambda.rows()) {
                    let s = dl.dl_multiplicity(&lambda, &mu2).map_err(err)?;
                    let c = dl.closed_form(&lambda, &mu2).map_err(err)?;
                    if s.abs() != c.abs() {
                        return Err(format!(
                            "|dl_multiplicity({lambda}, {mu2})| = {} but closed form gives {}",
                            s.abs(),
                            c.abs()
                        ));
                    }
                    if !c.is_zero() {
                        signs.push(if s == c { 1 } else { -1 });
                    }
                    checked += 1;
                }
                Ok((checked, signs))
            };
            let r = run();
            (lambda, r)
        })
        .collect();
    let mut sign_of: BTreeMap<(usize, usize), i8> = BTreeMap::new();
    let mut checked = 0;
    for (lambda, outcome) in per_lambda {
        let (c, signs) = outcome?;
        checked += c;
        let key = (lambda.size(), lambda.rows());
        for s in signs {
            let first = *sign_of.entry(key).or_insert(s);
            if first != s {
                return Err(format!("sign of dl_multiplicity/closed_form is not constant for (n, k) = {key:?}, e.g. at λ = {lambda}"));
            }
        }
    }
    Ok(checked)
}

fn bessel_suite<T: ExactInt>(bound: usize, ggp: &Ggp<T>) -> Check {
    check_all(partitions_up_to(bound), |lambda| {
        let (n, k) = (lambda.size(), lambda.rows());
        let target = lambda.remove_first_column();
        let mut checked = 0;
        if k % 2 == 1 {
            for nu in partitions_of(n - k) {
                let r = ggp.bessel_multiplicity(lambda, &nu).map_err(err)?;
                let expected = if nu == target { T::one() } else { T::zero() };
                if r.value != expected || r.case != CaseTag::FirstDescent {
                    return Err(format!(
                        "m(π_{lambda}, π_{nu}) = {} ({:?}), expected {expected}",
                        r.value, r.case
                    ));
                }
                checked += 1;
            }
        }
        for m in (0..n.saturating_sub(k)).filter(|m| (n - m) % 2 == 1) {
            for nu in partitions_of(m) {
                let r = ggp.bessel_multiplicity(lambda, &nu).map_err(err)?;
                if !r.value.is_zero() || r.case != CaseTag::VanishingBelow {
                    return Err(format!(
                        "m(π_{lambda}, π_{nu}) = {} below the first descent",
                        r.value
                    ));
                }
                checked += 1;
            }
        }
        Ok(checked)
    })
}

/// Column lengths read off the diagram cell by cell.
fn columns(p: &Partition) -> Vec<usize> {
    let width = p.parts().iter().copied().max().unwrap_or(0);
    (0..width)
        .map(|c| p.parts().iter().filter(|&&row| row > c).count())
        .collect()
}

/// 2-transversality straight from the definitions.
fn brute_2transverse(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let at = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    let mut meet_counts: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..len {
        let (x, y) = (at(a, i), at(b, i));
        if x.abs_diff(y) > 1 {
            return false;
        }
        if x == y && x > 0 {
            *meet_counts.entry(x).or_default() += 1;
        }
    }
    meet_counts.values().all(|c| c % 2 == 0)
}

fn theta_suite(bound: usize) -> Check {
    let all = partitions_up_to(bound);
    let cols: Vec<Vec<usize>> = all.iter().map(columns).collect();
    let mut checked = 0;
    for (lambda, lc) in all.iter().zip(&cols) {
        for (target, tc) in all.iter().zip(&cols) {
            let engine = theta_multiplicity(lambda, target) == 1;
            if engine != brute_2transverse(lc, tc) {
                return Err(format!(
                    "theta multiplicity of ({lambda}, {target}) disagrees with the definition"
                ));
            }
            checked += 1;
        }
    }
    for lambda in &all {
        let first = lambda.size() - lambda.first_part();
        let lift = theta_lift(lambda, first);
        if lift.components != vec![lambda.remove_first_row()] {
            return Err(format!(
                "Θ_{{n,{first}}}(π_{lambda}) = {:?}",
                lift.components
            ));
        }
        for below in 0..first {
            if !theta_lift(lambda, below).is_zero() {
                return Err(format!(
                    "Θ_{{n,{below}}}(π_{lambda}) is nonzero below n − λ₁"
                ));
            }
        }
        checked += first + 1;
    }
    Ok(checked)
}

fn seesaw_suite<T: ExactInt>(bound: usize, ggp: &Ggp<T>) -> Check {
    let mut pairs = Vec::new();
    for lambda in partitions_up_to(bound) {
        let n = lambda.size();
        for m in (0..n).filter(|m| (n - m) % 2 == 0) {
            pairs.extend(partitions_of(m).map(|nu| (lambda.clone(), nu)));
        }
    }
    check_all(pairs, |(lambda, nu)| {
        let floor = lambda.first_part().max(nu.first_part());
        let decl = ggp
            .fj_multiplicity(lambda, nu, FjMode::Declarative)
            .map_err(err)?;
        let mut values = Vec::new();
        for mu0 in floor..=floor + 2 {
            let r = ggp
                .fj_multiplicity(lambda, nu, FjMode::Seesaw { mu0: Some(mu0) })
                .map_err(err)?;
            values.push(r.value);
        }
        if decl.covered && decl.value != values[0] {
            return Err(format!(
                "FJ m(π_{lambda}, π_{nu}): declarative {}, see-saw {}",
                decl.value, values[0]
            ));
        }
        if values.iter().any(|v| *v != values[0]) {
            return Err(format!(
                "FJ see-saw m(π_{lambda}, π_{nu}) depends on μ₀: {values:?}"
            ));
        }
        Ok(values.len())
    })
}

fn staircase(k: usize) -> Partition {
    Partition::from_multiset(1..=k)
}

fn cuspidal_suite<T: ExactInt>(bound: usize, ggp: &Ggp<T>) -> Check {
    let mut checked = 0;
    for k in (1..=4).filter(|k| k * (k + 1) / 2 <= bound) {
        let lambda = staircase(k);
        let (model, ell0) = if k % 2 == 1 {
            (Model::Bessel, (k - 1) / 2)
        } else {
            (Model::FourierJacobi, k / 2)
        };
        let d = ggp.descend_with(&lambda, model, true).map_err(err)?;
        if d.ell0 != Ell0::Exact(ell0) || d.descent != Some(staircase(k - 1)) {
            return Err(format!(
                "{model} descent of π_{lambda}: ℓ₀ = {:?}, descent {:?}",
                d.ell0, d.descent
            ));
        }
        if d.verified != Some(true) {
            return Err(format!(
                "{model} descent of π_{lambda} is not confirmed by the multiplicity sweep"
            ));
        }
        let pair = ggp
            .first_occurrence_pair_with(&lambda, false)
            .map_err(err)?;
        let kb = 2 * pair.bessel.ell0.value() + 1;
        let kfj = 2 * pair.fourier_jacobi.ell0.value();
        if pair.k != k || kb.max(kfj) != k {
            return Err(format!(
                "k reconstruction for π_{lambda}: {} / max({kb}, {kfj})",
                pair.k
            ));
        }
        checked += 1;
    }
    Ok(checked)
}

/// Cycle type of a permutation in one-line notation.
fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    Partition::from_multiset(lengths)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `(n!/(z_{μ′}·q!))·Σ_{w∈S_q} σ_{ᵗλ}(w_{μ′} ⊕ w)` with `q = n − |μ′|`.
fn brute_inner_sum<T: ExactInt>(
    lambda: &Partition,
    mu: &Partition,
    table: &CharacterTable<T>,
) -> std::result::Result<Ratio<T>, String> {
    let n = lambda.size();
    let q = n - mu.size();
    let t = lambda.transpose();
    let mut perm: Vec<usize> = (0..q).collect();
    let mut sum = T::zero();
    loop {
        let ty = mu.union(&cycle_type(&perm));
        sum = sum + table.value(&t, &ty).map_err(err)?.clone();
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let weight = Ratio::new(
        factorial::<T>(n),
        mu.centralizer_order::<T>() * factorial::<T>(q),
    );
    Ok(weight * Ratio::from_integer(sum))
}

fn inner_sum_suite<T: ExactInt>(bound: usize, dl: &DlEngine<T>) -> Check {
    check_all(partitions_up_to(bound), |lambda| {
        let n = lambda.size();
        let table = dl.characters().table(n);
        let mut checked = 0;
        for mu in partitions_up_to(n) {
            let engine = dl.inner_sum(lambda, &mu).map_err(err)?;
            let brute = brute_inner_sum(lambda, &mu, &table)?;
            if brute != Ratio::from_integer(engine.clone()) {
                return Err(format!(
                    "inner_sum({lambda}, {mu}) = {engine}, literal group sum {brute}"
                ));
            }
            checked += 1;
        }
        Ok(checked)
    })
}
