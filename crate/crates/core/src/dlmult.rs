//! Multiplicities of Deligne–Lusztig characters against unipotent ones.
//!
//! Conventions:
//!
//! - The torus `T_w` of `U_n` is labelled by the cycle type of `w·w₀`.
//!   Re-indexing the defining sum of `R_λ` by `v = w·w₀` turns it into a
//!   class sum, so `R_λ = Σ_μ (σ_λ(w_μ)/z_μ)·R_{T_μ,1}` with no `w₀` left.
//! - Global signs such as `(−1)^{rk T}` are not evaluated. [`dl_multiplicity`]
//!   returns the sign-stripped value `S(λ, μ²)` and final multiplicities are
//!   normalized to be nonnegative.
//! - Inside a sum over `μ²` the sign does depend on `μ²`:
//!   `(−1)^{rk(T₁×T_{μ²})} = ±sgn(w_{μ²})`, the F_q-rank of `T_μ` being the
//!   number of even parts of `μ`. [`DlEngine::induced_multiplicity`] carries
//!   that factor.
//! - The cuspidal datum on `GL_ℓ(F_{q²})` enters only through `ℓ`.
//!
//! [`dl_multiplicity`]: DlEngine::dl_multiplicity

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{binom_embeddings, partitions_of, Partition};
use crate::scalar::{exact_div, factorial, int, ratio_to_int, ExactInt};
use crate::symchar::CharacterCache;

/// `π_λ` expanded over class-indexed Deligne–Lusztig terms `R_{T_μ,1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct VirtualUnipotentChar<T: ExactInt> {
    n: usize,
    coeff: BTreeMap<Partition, Ratio<T>>,
}

impl<T: ExactInt> VirtualUnipotentChar<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, mu: &Partition) -> Ratio<T> {
        self.coeff
            .get(mu)
            .cloned()
            .unwrap_or_else(|| Ratio::from_integer(T::zero()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Ratio<T>)> {
        self.coeff.iter()
    }

    /// `Σ_μ z_μ·coeff(μ)²`; equals 1 for an irreducible label.
    pub fn norm(&self) -> Ratio<T> {
        self.coeff
            .iter()
            .fold(Ratio::from_integer(T::zero()), |acc, (mu, c)| {
                acc + Ratio::from_integer(mu.centralizer_order::<T>()) * c.clone() * c.clone()
            })
    }
}

/// Which theorem regime a multiplicity falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    /// `m < n − k`: the multiplicity vanishes.
    VanishingBelow,
    /// `m = n − k` with the right parity of `k`: the first descent.
    FirstDescent,
    /// No theorem applies; the formula value is reported as is.
    FormulaOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityResult<T> {
    /// Formula value before sign normalization.
    pub raw: T,
    /// `|raw|`.
    pub value: T,
    /// A theorem pins this case.
    pub covered: bool,
    pub case: CaseTag,
}

impl<T: ExactInt> MultiplicityResult<T> {
    pub(crate) fn from_raw(raw: T, case: CaseTag) -> Self {
        MultiplicityResult {
            value: raw.abs(),
            raw,
            covered: case != CaseTag::FormulaOnly,
            case,
        }
    }
}

/// Parabolic datum `GL_ℓ(F_{q²}) × U_m`. For the Bessel chain the Levi sits
/// in `U_{n+1}` (`n + 1 = m + 2ℓ`), for the Fourier–Jacobi chain in `U_n`
/// (`n = m + 2ℓ`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedDatum {
    pub ell: usize,
    pub nu: Partition,
}

impl InducedDatum {
    pub fn new(ell: usize, nu: Partition) -> Result<Self> {
        if ell == 0 {
            return Err(Error::Precondition("ℓ must be at least 1".into()));
        }
        Ok(InducedDatum { ell, nu })
    }

    /// The Bessel datum for `U_n ⊃ U_m`, `n − m` odd.
    pub fn bessel(n: usize, nu: Partition) -> Result<Self> {
        let m = nu.size();
        if m >= n || (n - m).is_multiple_of(2) {
            return Err(Error::Parity(format!(
                "Bessel datum needs n > m with n − m odd (n = {n}, m = {m})"
            )));
        }
        Self::new((n - m).div_ceil(2), nu)
    }

    /// The Fourier–Jacobi datum for `U_n ⊃ U_m`, `n − m` even and positive.
    pub fn fourier_jacobi(n: usize, nu: Partition) -> Result<Self> {
        let m = nu.size();
        if m >= n || (n - m) % 2 == 1 {
            return Err(Error::Parity(format!(
                "Fourier–Jacobi datum needs n > m with n − m even (n = {n}, m = {m})"
            )));
        }
        Self::new((n - m) / 2, nu)
    }

    pub fn m(&self) -> usize {
        self.nu.size()
    }
}

/// Multiplicity engine over a shared character cache.
///
/// `inner_sum` and `dl_multiplicity` are memoized; both memos are safe for
/// concurrent use.
#[derive(Debug)]
pub struct DlEngine<T: ExactInt> {
    chars: Arc<CharacterCache<T>>,
    inner: RwLock<HashMap<(Partition, Partition), T>>,
    dl: RwLock<HashMap<(Partition, Partition), T>>,
}

impl<T: ExactInt> Default for DlEngine<T> {
    fn default() -> Self {
        Self::new(Arc::new(CharacterCache::new()))
    }
}

fn check_size(n: usize, found: usize, what: &str) -> Result<()> {
    if found > n {
        return Err(Error::Precondition(format!(
            "|{what}| = {found} exceeds n = {n}"
        )));
    }
    Ok(())
}

impl<T: ExactInt> DlEngine<T> {
    pub fn new(chars: Arc<CharacterCache<T>>) -> Self {
        DlEngine {
            chars,
            inner: RwLock::new(HashMap::new()),
            dl: RwLock::new(HashMap::new()),
        }
    }

    pub fn characters(&self) -> &Arc<CharacterCache<T>> {
        &self.chars
    }

    /// Coefficients `σ_λ(w_μ)/z_μ` of `π_λ` on the terms `R_{T_μ,1}`.
    pub fn unipotent_decomposition(&self, lambda: &Partition) -> VirtualUnipotentChar<T> {
        let n = lambda.size();
        let table = self.chars.table(n);
        let row = table.row(lambda).expect("λ labels a row of its own table");
        let coeff = table
            .labels()
            .iter()
            .zip(row)
            .map(|(mu, v)| (mu.clone(), Ratio::new(v.clone(), mu.centralizer_order())))
            .collect();
        VirtualUnipotentChar { n, coeff }
    }

    /// `Σ_{μ*⊢n−|μ′|} n!/(z_{μ′}·z_{μ*}) · σ_{ᵗλ}(w_{[μ′,μ*]})`.
    ///
    /// Each summand is a class size of `S_n` times an embedding count times a
    /// character value, hence an integer.
    pub fn inner_sum(&self, lambda: &Partition, mu_prime: &Partition) -> Result<T> {
        let n = lambda.size();
        check_size(n, mu_prime.size(), "μ′")?;
        let key = (lambda.clone(), mu_prime.clone());
        if let Some(v) = self.inner.read().expect("memo lock").get(&key) {
            return Ok(v.clone());
        }
        let table = self.chars.table(n);
        let t = lambda.transpose();
        let n_fact = factorial::<T>(n);
        let z_prime = mu_prime.centralizer_order::<T>();
        let mut total = T::zero();
        for star in partitions_of(n - mu_prime.size()) {
            let chi = table.value(&t, &mu_prime.union(&star))?;
            if chi.is_zero() {
                continue;
            }
            let weight = exact_div(&n_fact, &(z_prime.clone() * star.centralizer_order::<T>()))?;
            total = total + weight * chi.clone();
        }
        self.inner
            .write()
            .expect("memo lock")
            .insert(key, total.clone());
        Ok(total)
    }

    /// `S(λ, μ²) = (1/n!)·Σ_{μ′⊂μ²} (−1)^{n−|μ′|}·C_{μ²,μ′}·z_{μ′}·inner_sum(λ, μ′)`.
    ///
    /// The bracket `⟨R_{T₁×T₂,θ⊗1}, R_λ⟩` with `T₂` of type `μ²` equals
    /// `(−1)^{rk T}·S(λ, μ²)`.
    pub fn dl_multiplicity(&self, lambda: &Partition, mu2: &Partition) -> Result<T> {
        let n = lambda.size();
        check_size(n, mu2.size(), "μ²")?;
        let key = (lambda.clone(), mu2.clone());
        if let Some(v) = self.dl.read().expect("memo lock").get(&key) {
            return Ok(v.clone());
        }
        let mut total = T::zero();
        for mu_prime in mu2.sub_multisets() {
            let inner = self.inner_sum(lambda, &mu_prime)?;
            if inner.is_zero() {
                continue;
            }
            let term =
                binom_embeddings::<T>(mu2, &mu_prime)? * mu_prime.centralizer_order::<T>() * inner;
            if (n - mu_prime.size()).is_multiple_of(2) {
                total = total + term;
            } else {
                total = total - term;
            }
        }
        let value = exact_div(&total, &factorial::<T>(n))?;
        self.dl
            .write()
            .expect("memo lock")
            .insert(key, value.clone());
        Ok(value)
    }

    /// `σ_{ᵗλ′}(w_{μ²})` with `λ′` the first column of `λ` removed; requires
    /// `|μ²| = n − k`. Agrees with `dl_multiplicity` up to the sign `(−1)^k`.
    pub fn closed_form(&self, lambda: &Partition, mu2: &Partition) -> Result<T> {
        let expected = lambda.size() - lambda.rows();
        if mu2.size() != expected {
            return Err(Error::Precondition(format!(
                "closed form needs |μ²| = n − k = {expected}, got {}",
                mu2.size()
            )));
        }
        self.chars
            .character(&lambda.remove_first_column().transpose(), mu2)
    }

    /// `⟨I_P^{U_{n+1}}(τ ⊗ π_ν), π_λ⟩` for the Bessel datum `n + 1 = m + 2ℓ`:
    ///
    /// `raw = Σ_{μ²⊢m} sgn(w_{μ²})·(σ_ν(w_{μ²})/z_{μ²})·S(λ, μ²)`, up to a global sign.
    pub fn induced_multiplicity(
        &self,
        lambda: &Partition,
        datum: &InducedDatum,
    ) -> Result<MultiplicityResult<T>> {
        let n = lambda.size();
        let m = datum.m();
        if datum.ell == 0 || m + 2 * datum.ell != n + 1 {
            return Err(Error::Parity(format!(
                "Bessel datum needs n + 1 = m + 2ℓ with ℓ ≥ 1 (n = {n}, m = {m}, ℓ = {})",
                datum.ell
            )));
        }
        let small = self.chars.table(m);
        let mut total = Ratio::from_integer(T::zero());
        for mu2 in partitions_of(m) {
            let chi = small.value(&datum.nu, &mu2)?;
            if chi.is_zero() {
                continue;
            }
            let s = self.dl_multiplicity(lambda, &mu2)?;
            if s.is_zero() {
                continue;
            }
            let signed = chi.clone() * s * int::<T>(mu2.perm_sign());
            total = total + Ratio::new(signed, mu2.centralizer_order());
        }
        let raw = ratio_to_int(&total)?;
        let k = lambda.rows();
        let case = if m + k < n {
            CaseTag::VanishingBelow
        } else if m + k == n && k % 2 == 1 {
            CaseTag::FirstDescent
        } else {
            CaseTag::FormulaOnly
        };
        Ok(MultiplicityResult::from_raw(raw, case))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symchar::ClassFunction;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn engine() -> DlEngine<i64> {
        DlEngine::default()
    }

    fn q(a: i64, b: i64) -> Ratio<i64> {
        Ratio::new(a, b)
    }

    #[test]
    fn decomposition_examples() {
        let e = engine();
        let one = e.unipotent_decomposition(&p(&[1]));
        assert_eq!(one.coeff(&p(&[1])), q(1, 1));
        let triv = e.unipotent_decomposition(&p(&[2]));
        assert_eq!(triv.coeff(&p(&[1, 1])), q(1, 2));
        assert_eq!(triv.coeff(&p(&[2])), q(1, 2));
        let sign = e.unipotent_decomposition(&p(&[1, 1]));
        assert_eq!(sign.coeff(&p(&[1, 1])), q(1, 2));
        assert_eq!(sign.coeff(&p(&[2])), q(-1, 2));
    }

    #[test]
    fn decomposition_is_normalized() {
        let e = engine();
        for n in 0..=8 {
            for lambda in partitions_of(n) {
                assert_eq!(
                    e.unipotent_decomposition(&lambda).norm(),
                    q(1, 1),
                    "{lambda}"
                );
            }
        }
    }

    /// `Σ_{w∈S_n} σ_{ᵗλ}(w)` from class sizes: `n!·⟨σ_{ᵗλ}, 1⟩`.
    fn full_group_sum(e: &DlEngine<i64>, lambda: &Partition) -> i64 {
        let f = ClassFunction::irreducible(e.characters(), &lambda.transpose()).unwrap();
        let pairing = f
            .inner_product(&ClassFunction::trivial(lambda.size()))
            .unwrap();
        (pairing * Ratio::from_integer(factorial::<i64>(lambda.size()))).to_integer()
    }

    #[test]
    fn inner_sum_examples() {
        let e = engine();
        assert_eq!(e.inner_sum(&p(&[2, 1]), &Partition::empty()).unwrap(), 0);
        assert_eq!(full_group_sum(&e, &p(&[2, 1])), 0);
        for n in 2..=5 {
            let row = p(&[n]);
            assert_eq!(
                e.inner_sum(&row, &Partition::empty()).unwrap(),
                full_group_sum(&e, &row)
            );
            assert_eq!(e.inner_sum(&row, &Partition::empty()).unwrap(), 0);
        }
        // |μ′| = n: the single term μ* = []
        let lambda = p(&[3, 1]);
        for mu in partitions_of(4) {
            let expected = mu.class_size::<i64>()
                * e.characters().character(&lambda.transpose(), &mu).unwrap();
            assert_eq!(e.inner_sum(&lambda, &mu).unwrap(), expected);
        }
        assert!(e.inner_sum(&p(&[2]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn dl_multiplicity_examples() {
        let e = engine();
        assert_eq!(
            e.dl_multiplicity(&p(&[1]), &Partition::empty()).unwrap(),
            -1
        );
        // k = 3 rows, n − k = 3; |μ²| = 2 < 3 vanishes
        for mu2 in partitions_of(2) {
            assert_eq!(e.dl_multiplicity(&p(&[3, 2, 1]), &mu2).unwrap(), 0);
        }
        for lambda in [p(&[3, 2, 1]), p(&[4, 1, 1]), p(&[2, 2])] {
            let k = lambda.rows();
            for mu2 in partitions_of(lambda.size() - k) {
                let s = e.dl_multiplicity(&lambda, &mu2).unwrap();
                let c = e.closed_form(&lambda, &mu2).unwrap();
                let sign = if k % 2 == 0 { 1 } else { -1 };
                assert_eq!(s, sign * c, "{lambda} {mu2}");
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let e = engine();
        assert_eq!(e.closed_form(&p(&[3, 2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(e.closed_form(&p(&[2, 1]), &p(&[1])).unwrap(), 1);
        assert_eq!(e.closed_form(&p(&[1, 1]), &Partition::empty()).unwrap(), 1);
        assert!(matches!(
            e.closed_form(&p(&[2, 1]), &p(&[2])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn induced_multiplicity_examples() {
        let e = engine();
        let lambda = p(&[3, 2, 1]);
        let hit = e
            .induced_multiplicity(&lambda, &InducedDatum::new(2, p(&[2, 1])).unwrap())
            .unwrap();
        assert_eq!(
            (hit.value, hit.covered, hit.case),
            (1, true, CaseTag::FirstDescent)
        );
        let miss = e
            .induced_multiplicity(&lambda, &InducedDatum::new(2, p(&[3])).unwrap())
            .unwrap();
        assert_eq!((miss.value, miss.covered), (0, true));
        let below = e
            .induced_multiplicity(&p(&[4, 3, 2]), &InducedDatum::new(4, p(&[2])).unwrap())
            .unwrap();
        assert_eq!(
            (below.value, below.covered, below.case),
            (0, true, CaseTag::VanishingBelow)
        );
        // λ′ = [2] is not self-conjugate: the descent is [2], not ᵗ[2]
        let lambda = p(&[3, 1, 1]);
        let d = InducedDatum::bessel(5, p(&[2])).unwrap();
        assert_eq!(e.induced_multiplicity(&lambda, &d).unwrap().value, 1);
        let d = InducedDatum::bessel(5, p(&[1, 1])).unwrap();
        assert_eq!(e.induced_multiplicity(&lambda, &d).unwrap().value, 0);
    }

    #[test]
    fn induced_multiplicity_rejects_bad_data() {
        let e = engine();
        assert!(InducedDatum::new(0, p(&[1])).is_err());
        assert!(InducedDatum::bessel(4, p(&[2])).is_err());
        assert!(InducedDatum::bessel(2, p(&[2])).is_err());
        assert!(InducedDatum::fourier_jacobi(3, p(&[2])).is_err());
        assert_eq!(InducedDatum::fourier_jacobi(5, p(&[2, 1])).unwrap().ell, 1);
        let wrong = InducedDatum::new(1, p(&[2, 1])).unwrap();
        assert!(matches!(
            e.induced_multiplicity(&p(&[3, 2, 1]), &wrong),
            Err(Error::Parity(_))
        ));
    }

    #[test]
    fn big_integers_agree_with_machine_integers() {
        let small = engine();
        let big = DlEngine::<num_bigint::BigInt>::default();
        for lambda in partitions_of(6) {
            for mu2 in partitions_of(4) {
                assert_eq!(
                    big.dl_multiplicity(&lambda, &mu2).unwrap(),
                    small.dl_multiplicity(&lambda, &mu2).unwrap().into()
                );
            }
        }
    }
}
