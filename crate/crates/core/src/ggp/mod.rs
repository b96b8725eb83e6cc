//! Gan–Gross–Prasad layer: Bessel and Fourier–Jacobi multiplicities between
//! unipotent representations, first occurrence indices and descents.
//!
//! Only unipotent labels can be passed in. For a non-unipotent `π′` both
//! theorems give multiplicity 0 in their covered regimes; nothing is computed
//! for that case.

mod theta;

pub use theta::{theta_lift, theta_multiplicity, ThetaLift};

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dlmult::{CaseTag, DlEngine, InducedDatum, MultiplicityResult};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::scalar::ExactInt;
use crate::symchar::CharacterCache;

/// Descent verification runs by default up to this size.
pub const DEFAULT_VERIFY_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Model {
    #[serde(rename = "bessel")]
    Bessel,
    #[serde(rename = "fj")]
    FourierJacobi,
}

impl Model {
    /// Parity of `n − m` this model pairs: odd for Bessel, even for FJ.
    pub fn gap_is_odd(self) -> bool {
        self == Model::Bessel
    }

    /// Regime of `(n, k, m)` under the matching theorem.
    pub fn case(self, n: usize, k: usize, m: usize) -> CaseTag {
        let right_parity = (k % 2 == 1) == self.gap_is_odd();
        if m + k < n {
            CaseTag::VanishingBelow
        } else if m + k == n && right_parity {
            CaseTag::FirstDescent
        } else {
            CaseTag::FormulaOnly
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Bessel => "bessel",
            Model::FourierJacobi => "fj",
        })
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "bessel" | "b" => Ok(Model::Bessel),
            "fj" | "fourier-jacobi" | "fourier_jacobi" => Ok(Model::FourierJacobi),
            other => Err(Error::Parse(format!("unknown model {other:?}"))),
        }
    }
}

/// How the Fourier–Jacobi multiplicity is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FjMode {
    /// Theorem values where a theorem applies, the see-saw sum elsewhere.
    #[default]
    Declarative,
    /// `m(π_λ, π_ν) = Σ_{λ̃} m_{λ,λ̃}·m(π_{λ̃}, π_{μ*})` with `μ* = [μ₀] ∪ ν`,
    /// `λ̃ ⊢ n + μ₀ + 1`. `mu0` defaults to `max(λ₁, ν₁)`.
    Seesaw { mu0: Option<usize> },
}

/// A first occurrence index, exact or only bounded above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Ell0 {
    Exact(usize),
    AtMost(usize),
}

impl Ell0 {
    pub fn value(self) -> usize {
        match self {
            Ell0::Exact(v) | Ell0::AtMost(v) => v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentResult {
    pub model: Model,
    pub ell0: Ell0,
    /// `None` when the parity of `k` leaves the descent open.
    pub descent: Option<Partition>,
    pub determined: bool,
    /// Outcome of the multiplicity sweep at level `ℓ₀`; `None` if skipped.
    pub verified: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstOccurrencePair {
    pub bessel: DescentResult,
    pub fourier_jacobi: DescentResult,
    /// `max(2ℓ₀^B + 1, 2ℓ₀^FJ)` evaluated on the determined side.
    pub k: usize,
}

/// Multiplicity engine for both models, sharing one character cache.
#[derive(Debug, Default)]
pub struct Ggp<T: ExactInt> {
    dl: DlEngine<T>,
}

impl<T: ExactInt> Ggp<T> {
    pub fn new(chars: Arc<CharacterCache<T>>) -> Self {
        Ggp {
            dl: DlEngine::new(chars),
        }
    }

    pub fn engine(&self) -> &DlEngine<T> {
        &self.dl
    }

    pub fn bessel_multiplicity(
        &self,
        lambda: &Partition,
        nu: &Partition,
    ) -> Result<MultiplicityResult<T>> {
        let datum = InducedDatum::bessel(lambda.size(), nu.clone())?;
        self.dl.induced_multiplicity(lambda, &datum)
    }

    pub fn fj_multiplicity(
        &self,
        lambda: &Partition,
        nu: &Partition,
        mode: FjMode,
    ) -> Result<MultiplicityResult<T>> {
        let (n, m) = (lambda.size(), nu.size());
        InducedDatum::fourier_jacobi(n, nu.clone())?;
        let case = Model::FourierJacobi.case(n, lambda.rows(), m);
        match mode {
            FjMode::Declarative => match case {
                CaseTag::VanishingBelow => Ok(MultiplicityResult::from_raw(T::zero(), case)),
                CaseTag::FirstDescent => {
                    let hit = *nu == lambda.remove_first_column();
                    Ok(MultiplicityResult::from_raw(
                        if hit { T::one() } else { T::zero() },
                        case,
                    ))
                }
                CaseTag::FormulaOnly => self.seesaw(lambda, nu, None, case),
            },
            FjMode::Seesaw { mu0 } => self.seesaw(lambda, nu, mu0, case),
        }
    }

    fn seesaw(
        &self,
        lambda: &Partition,
        nu: &Partition,
        mu0: Option<usize>,
        case: CaseTag,
    ) -> Result<MultiplicityResult<T>> {
        let floor = lambda.first_part().max(nu.first_part());
        let mu0 = mu0.unwrap_or(floor);
        if mu0 < floor {
            return Err(Error::Precondition(format!(
                "μ₀ = {mu0} is below max(λ₁, ν₁) = {floor}"
            )));
        }
        let mu_star = nu.union(&Partition::from_multiset(vec![mu0]));
        let lift = theta_lift(lambda, lambda.size() + mu0 + 1);
        let values = lift
            .components
            .par_iter()
            .map(|big| self.bessel_multiplicity(big, &mu_star).map(|r| r.value))
            .collect::<Result<Vec<T>>>()?;
        let total = values.into_iter().fold(T::zero(), |a, b| a + b);
        Ok(MultiplicityResult::from_raw(total, case))
    }

    /// Multiplicity under `model`; FJ uses [`FjMode::Declarative`].
    pub fn multiplicity(
        &self,
        lambda: &Partition,
        nu: &Partition,
        model: Model,
    ) -> Result<MultiplicityResult<T>> {
        match model {
            Model::Bessel => self.bessel_multiplicity(lambda, nu),
            Model::FourierJacobi => self.fj_multiplicity(lambda, nu, FjMode::Declarative),
        }
    }

    /// Descent with verification on for `n ≤ DEFAULT_VERIFY_LIMIT`.
    pub fn descend(&self, lambda: &Partition, model: Model) -> Result<DescentResult> {
        self.descend_with(lambda, model, lambda.size() <= DEFAULT_VERIFY_LIMIT)
    }

    pub fn descend_with(
        &self,
        lambda: &Partition,
        model: Model,
        verify: bool,
    ) -> Result<DescentResult> {
        let k = lambda.rows();
        let determined = (k % 2 == 1) == model.gap_is_odd();
        let bound = match model {
            Model::Bessel => k.saturating_sub(1) / 2,
            Model::FourierJacobi => k / 2,
        };
        if !determined {
            return Ok(DescentResult {
                model,
                ell0: Ell0::AtMost(bound),
                descent: None,
                determined,
                verified: None,
            });
        }
        let target = lambda.remove_first_column();
        let verified = if verify && target.size() < lambda.size() {
            Some(self.sweep_is_indicator(lambda, &target, model)?)
        } else {
            None
        };
        Ok(DescentResult {
            model,
            ell0: Ell0::Exact(bound),
            descent: Some(target),
            determined,
            verified,
        })
    }

    /// Whether `ν ↦ m(π_λ, π_ν)` over `ν ⊢ |target|` is the indicator of
    /// `target`. FJ values come from the see-saw sum.
    fn sweep_is_indicator(
        &self,
        lambda: &Partition,
        target: &Partition,
        model: Model,
    ) -> Result<bool> {
        let level: Vec<Partition> = partitions_of(target.size()).collect();
        let hits = level
            .par_iter()
            .map(|nu| {
                let r = match model {
                    Model::Bessel => self.bessel_multiplicity(lambda, nu)?,
                    Model::FourierJacobi => {
                        self.fj_multiplicity(lambda, nu, FjMode::Seesaw { mu0: None })?
                    }
                };
                let expected = if nu == target { T::one() } else { T::zero() };
                Ok(r.value == expected)
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(hits.into_iter().all(|ok| ok))
    }

    pub fn first_occurrence_pair(&self, lambda: &Partition) -> Result<FirstOccurrencePair> {
        self.first_occurrence_pair_with(lambda, lambda.size() <= DEFAULT_VERIFY_LIMIT)
    }

    pub fn first_occurrence_pair_with(
        &self,
        lambda: &Partition,
        verify: bool,
    ) -> Result<FirstOccurrencePair> {
        let bessel = self.descend_with(lambda, Model::Bessel, verify)?;
        let fourier_jacobi = self.descend_with(lambda, Model::FourierJacobi, verify)?;
        let k = if bessel.determined {
            2 * bessel.ell0.value() + 1
        } else {
            2 * fourier_jacobi.ell0.value()
        };
        if k != lambda.rows() {
            return Err(Error::Precondition(format!(
                "first occurrence indices give k = {k}, λ has {} rows",
                lambda.rows()
            )));
        }
        Ok(FirstOccurrencePair {
            bessel,
            fourier_jacobi,
            k,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ggp() -> Ggp<i64> {
        Ggp::default()
    }

    #[test]
    fn model_parsing() {
        assert_eq!("bessel".parse::<Model>().unwrap(), Model::Bessel);
        assert_eq!("FJ".parse::<Model>().unwrap(), Model::FourierJacobi);
        assert!("gl".parse::<Model>().is_err());
        assert_eq!(Model::FourierJacobi.to_string(), "fj");
    }

    #[test]
    fn bessel_examples() {
        let g = ggp();
        let lambda = p(&[3, 2, 1]);
        assert_eq!(
            g.bessel_multiplicity(&lambda, &p(&[2, 1])).unwrap().value,
            1
        );
        assert_eq!(
            g.bessel_multiplicity(&lambda, &p(&[1, 1, 1]))
                .unwrap()
                .value,
            0
        );
        let below = g.bessel_multiplicity(&p(&[4, 3, 2]), &p(&[2])).unwrap();
        assert_eq!((below.value, below.case), (0, CaseTag::VanishingBelow));
        assert!(matches!(
            g.bessel_multiplicity(&lambda, &p(&[2, 2])),
            Err(Error::Parity(_))
        ));
        assert!(matches!(
            g.bessel_multiplicity(&p(&[1]), &p(&[2])),
            Err(Error::Parity(_))
        ));
    }

    #[test]
    fn fj_examples() {
        let g = ggp();
        let (lambda, nu) = (p(&[2, 1]), p(&[1]));
        let decl = g
            .fj_multiplicity(&lambda, &nu, FjMode::Declarative)
            .unwrap();
        assert_eq!((decl.value, decl.covered), (1, true));
        let seesaw = g
            .fj_multiplicity(&lambda, &nu, FjMode::Seesaw { mu0: Some(2) })
            .unwrap();
        assert_eq!(seesaw.value, 1);
        let below = g
            .fj_multiplicity(&p(&[3, 3, 2]), &p(&[2]), FjMode::Declarative)
            .unwrap();
        assert_eq!((below.value, below.case), (0, CaseTag::VanishingBelow));
        assert!(matches!(
            g.fj_multiplicity(&lambda, &p(&[2]), FjMode::Declarative),
            Err(Error::Parity(_))
        ));
        assert!(matches!(
            g.fj_multiplicity(&lambda, &nu, FjMode::Seesaw { mu0: Some(1) }),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn fj_declarative_falls_back_outside_theorem() {
        let g = ggp();
        // m = 1 > n − k = 0: no theorem applies
        let r = g
            .fj_multiplicity(&p(&[1, 1, 1]), &p(&[1]), FjMode::Declarative)
            .unwrap();
        assert!(!r.covered);
        assert_eq!(r.case, CaseTag::FormulaOnly);
        let s = g
            .fj_multiplicity(&p(&[1, 1, 1]), &p(&[1]), FjMode::Seesaw { mu0: None })
            .unwrap();
        assert_eq!(r.value, s.value);
    }

    #[test]
    fn descend_examples() {
        let g = ggp();
        let b = g.descend(&p(&[3, 2, 1]), Model::Bessel).unwrap();
        assert_eq!(b.ell0, Ell0::Exact(1));
        assert_eq!(b.descent, Some(p(&[2, 1])));
        assert_eq!(b.verified, Some(true));
        let fj = g.descend(&p(&[2, 1]), Model::FourierJacobi).unwrap();
        assert_eq!(fj.ell0, Ell0::Exact(1));
        assert_eq!(fj.descent, Some(p(&[1])));
        assert_eq!(fj.verified, Some(true));
        let open = g.descend(&p(&[2, 2]), Model::Bessel).unwrap();
        assert_eq!(
            (open.determined, open.ell0, open.descent),
            (false, Ell0::AtMost(0), None)
        );
        let skipped = g
            .descend_with(&p(&[3, 2, 1]), Model::Bessel, false)
            .unwrap();
        assert_eq!(skipped.verified, None);
    }

    #[test]
    fn first_occurrence_examples() {
        let g = ggp();
        let pair = g.first_occurrence_pair(&p(&[3, 2, 1])).unwrap();
        assert_eq!((pair.k, pair.bessel.ell0), (3, Ell0::Exact(1)));
        let pair = g.first_occurrence_pair(&p(&[2, 1])).unwrap();
        assert_eq!((pair.k, pair.fourier_jacobi.ell0), (2, Ell0::Exact(1)));
        let pair = g.first_occurrence_pair(&p(&[1])).unwrap();
        assert_eq!(pair.k, 1);
        assert_eq!(pair.bessel.ell0, Ell0::Exact(0));
        assert_eq!(pair.bessel.descent, Some(Partition::empty()));
        let pair = g.first_occurrence_pair(&Partition::empty()).unwrap();
        assert_eq!(pair.k, 0);
        assert_eq!(pair.fourier_jacobi.descent, Some(Partition::empty()));
    }
}
