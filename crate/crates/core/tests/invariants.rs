use std::sync::Arc;

use num_rational::Ratio;
use proptest::prelude::*;
use unidescent::dlmult::{CaseTag, InducedDatum};
use unidescent::ggp::{DescentResult, Ggp, Model};
use unidescent::{partitions_of, CharacterCache, DlEngine, Int, Partition};

fn partition_upto(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all: Vec<Partition> = partitions_of(n).collect();
        proptest::sample::select(all)
    })
}

fn pair_same_size(max: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (0..=max).prop_flat_map(|n| {
        let all: Vec<Partition> = partitions_of(n).collect();
        (
            proptest::sample::select(all.clone()),
            proptest::sample::select(all),
        )
    })
}

proptest! {
    #[test]
    fn transpose_twists_by_sign((lambda, mu) in pair_same_size(8)) {
        let cache = CharacterCache::new();
        let a = cache.character(&lambda.transpose(), &mu).unwrap();
        let b = cache.character(&lambda, &mu).unwrap();
        prop_assert_eq!(a, b * Int::from(mu.perm_sign()));
    }

    #[test]
    fn decomposition_has_norm_one(lambda in partition_upto(8)) {
        let dl = DlEngine::default();
        prop_assert_eq!(dl.unipotent_decomposition(&lambda).norm(), Ratio::from_integer(Int::from(1)));
    }

    #[test]
    fn dl_multiplicity_vanishes_below(lambda in partition_upto(8)) {
        let dl = DlEngine::default();
        let gap = lambda.size() - lambda.rows();
        for m in 0..gap {
            for mu2 in partitions_of(m) {
                prop_assert_eq!(dl.dl_multiplicity(&lambda, &mu2).unwrap(), Int::from(0));
            }
        }
    }

    #[test]
    fn machine_and_big_integers_agree(lambda in partition_upto(7)) {
        let small = Ggp::<i128>::default();
        let big = Ggp::<Int>::default();
        let n = lambda.size();
        for m in (0..n).filter(|m| (n - m) % 2 == 1) {
            for nu in partitions_of(m) {
                let a = small.bessel_multiplicity(&lambda, &nu).unwrap();
                let b = big.bessel_multiplicity(&lambda, &nu).unwrap();
                prop_assert_eq!(Int::from(a.raw), b.raw);
                prop_assert_eq!(a.case, b.case);
            }
        }
    }
}

#[test]
fn first_descent_raw_is_signed_indicator() {
    let dl = DlEngine::default();
    for n in 1..=8 {
        for lambda in partitions_of(n).filter(|l| l.rows() % 2 == 1) {
            let k = lambda.rows();
            let target = lambda.remove_first_column();
            for nu in partitions_of(n - k) {
                let r = dl
                    .induced_multiplicity(&lambda, &InducedDatum::bessel(n, nu.clone()).unwrap())
                    .unwrap();
                // k odd: raw = (−1)^k δ = −δ
                let expected = if nu == target {
                    Int::from(-1)
                } else {
                    Int::from(0)
                };
                assert_eq!(r.raw, expected, "λ = {lambda}, ν = {nu}");
            }
        }
    }
}

#[test]
fn uncovered_cases_are_flagged() {
    let g = Ggp::<Int>::default();
    // m = 3 > n − k = 2: no Bessel theorem
    let lambda: Partition = "2,2".parse().unwrap();
    let r = g
        .bessel_multiplicity(&lambda, &"2,1".parse().unwrap())
        .unwrap();
    assert!(!r.covered);
    assert_eq!(r.case, CaseTag::FormulaOnly);
    assert!(r.value >= Int::from(0));
}

#[test]
fn engines_share_one_cache() {
    let cache = Arc::new(CharacterCache::new());
    let g = Ggp::new(Arc::clone(&cache));
    g.bessel_multiplicity(&"3,2,1".parse().unwrap(), &"2,1".parse().unwrap())
        .unwrap();
    assert!(cache.contains(6) && cache.contains(3));
}

#[test]
fn concurrent_queries_agree() {
    let g = Arc::new(Ggp::<Int>::default());
    let lambda: Partition = "3,2,1,1,1".parse().unwrap();
    let handles: Vec<_> = partitions_of(3)
        .map(|nu| {
            let g = Arc::clone(&g);
            let lambda = lambda.clone();
            std::thread::spawn(move || {
                (
                    nu.clone(),
                    g.bessel_multiplicity(&lambda, &nu).unwrap().value,
                )
            })
        })
        .collect();
    for h in handles {
        let (nu, value) = h.join().unwrap();
        let fresh = Ggp::<Int>::default()
            .bessel_multiplicity(&lambda, &nu)
            .unwrap()
            .value;
        assert_eq!(value, fresh);
    }
}

#[test]
fn descent_results_round_trip_through_json() {
    let g = Ggp::<Int>::default();
    for lambda in partitions_of(6) {
        for model in [Model::Bessel, Model::FourierJacobi] {
            let d = g.descend_with(&lambda, model, false).unwrap();
            let text = serde_json::to_string(&d).unwrap();
            let back: DescentResult = serde_json::from_str(&text).unwrap();
            assert_eq!(back, d);
        }
    }
}
