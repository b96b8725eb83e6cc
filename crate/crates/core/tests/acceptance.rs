//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Each criterion runs its exhaustive sweep from `verify` at the full
//! stated bound, plus a few spot values pinned here.

use std::process::ExitCode;
use std::sync::Arc;

use unidescent::dlmult::CaseTag;
use unidescent::ggp::{theta_lift, Ell0, FjMode, Ggp, Model};
use unidescent::verify::{self, Criterion};
use unidescent::{partitions_of, CharacterCache, Int, Partition};

fn p(s: &str) -> Partition {
    s.parse().expect("partition literal")
}

fn int(v: i64) -> Int {
    Int::from(v)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Degree via the hook length formula.
fn hook_degree(shape: &Partition) -> Int {
    let cols = shape.transpose();
    let mut hooks = Int::from(1);
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            hooks *= Int::from(row - j + cols.part(j) - i - 1);
        }
    }
    (1..=shape.size()).fold(Int::from(1), |acc, k| acc * Int::from(k)) / hooks
}

fn spot_checks(c: Criterion, cache: &Arc<CharacterCache>, ggp: &Ggp<Int>) -> Result<(), String> {
    let e = |err: unidescent::Error| err.to_string();
    match c {
        Criterion::Oracle => {
            ensure(
                cache.character(&p("2,1"), &p("3")).map_err(e)? == int(-1),
                "σ_[2,1](w_[3]) ≠ −1",
            )?;
            ensure(
                cache.character(&p("1,1,1"), &p("2,1")).map_err(e)? == int(-1),
                "σ_[1³](w_[2,1]) ≠ −1",
            )
        }
        Criterion::Orthogonality => {
            for n in 0..=8 {
                let ones = Partition::from_multiset(vec![1; n]);
                for shape in partitions_of(n) {
                    let deg = cache.character(&shape, &ones).map_err(e)?;
                    ensure(deg == hook_degree(&shape), format!("degree of σ_{shape}"))?;
                }
            }
            Ok(())
        }
        Criterion::Branching => {
            let lambda = p("3,2,1");
            let r = cache
                .restriction_multiplicity(&lambda, &p("2,1"), 3)
                .map_err(e)?;
            ensure(r == int(1), "restriction of σ_[3,2,1] to σ_[2,1]⊗1")?;
            let r = cache
                .restriction_multiplicity(&lambda, &lambda, 0)
                .map_err(e)?;
            ensure(r == int(1), "restriction with m = 0")
        }
        Criterion::Vanishing => {
            let s = ggp
                .engine()
                .inner_sum(&p("2,1"), &Partition::empty())
                .map_err(e)?;
            ensure(s == int(0), "inner_sum([2,1], []) ≠ 0")
        }
        Criterion::ClosedForm => {
            let dl = ggp.engine();
            ensure(
                dl.dl_multiplicity(&p("1"), &Partition::empty())
                    .map_err(e)?
                    == int(-1),
                "S([1], [])",
            )?;
            ensure(
                dl.closed_form(&p("2,1"), &p("1")).map_err(e)? == int(1),
                "closed form at ([2,1], [1])",
            )?;
            ensure(
                dl.closed_form(&p("3,2,1"), &p("2,1")).map_err(e)? == int(0),
                "closed form at ([3,2,1], [2,1])",
            )
        }
        Criterion::Bessel => {
            let hit = ggp.bessel_multiplicity(&p("3,2,1"), &p("2,1")).map_err(e)?;
            ensure(
                hit.value == int(1) && hit.covered,
                "m(π_[3,2,1], π_[2,1]) ≠ 1",
            )?;
            let miss = ggp
                .bessel_multiplicity(&p("3,2,1"), &p("1,1,1"))
                .map_err(e)?;
            ensure(
                miss.value == int(0) && miss.covered,
                "m(π_[3,2,1], π_[1³]) ≠ 0",
            )?;
            let below = ggp.bessel_multiplicity(&p("4,3,2"), &p("2")).map_err(e)?;
            ensure(
                below.value == int(0) && below.case == CaseTag::VanishingBelow,
                "m(π_[4,3,2], π_[2]) ≠ 0",
            )
        }
        Criterion::Theta => {
            ensure(
                theta_lift(&p("2,1"), 1).components == vec![p("1")],
                "Θ(π_[2,1]) at n′ = 1",
            )?;
            ensure(
                theta_lift(&p("1,1"), 2)
                    .components
                    .iter()
                    .all(|t| *t != p("1,1")),
                "[1,1] in Θ(π_[1,1])",
            )
        }
        Criterion::Seesaw => {
            let decl = ggp
                .fj_multiplicity(&p("2,1"), &p("1"), FjMode::Declarative)
                .map_err(e)?;
            let see = ggp
                .fj_multiplicity(&p("2,1"), &p("1"), FjMode::Seesaw { mu0: Some(2) })
                .map_err(e)?;
            ensure(
                decl.value == int(1) && see.value == int(1),
                "FJ m(π_[2,1], π_[1]) ≠ 1",
            )
        }
        Criterion::Cuspidal => {
            let d = ggp.descend(&p("2,2"), Model::Bessel).map_err(e)?;
            ensure(
                !d.determined && d.ell0 == Ell0::AtMost(0),
                "Bessel descent of π_[2,2] should be open",
            )?;
            let pair = ggp.first_occurrence_pair(&p("1")).map_err(e)?;
            ensure(
                pair.k == 1 && pair.bessel.descent == Some(Partition::empty()),
                "π_[1] descends to U_0",
            )
        }
        Criterion::InnerSumOracle => {
            let lambda = p("3,1");
            for mu in partitions_of(4) {
                let expected = mu.class_size::<Int>()
                    * cache.character(&lambda.transpose(), &mu).map_err(e)?;
                ensure(
                    ggp.engine().inner_sum(&lambda, &mu).map_err(e)? == expected,
                    format!("inner_sum([3,1], {mu})"),
                )?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cache = Arc::new(CharacterCache::new());
    let ggp = Ggp::new(Arc::clone(&cache));
    let mut failed = 0;
    for c in Criterion::ALL {
        let mut report = verify::run::<Int>(c, usize::MAX, &cache);
        if report.passed() {
            if let Err(msg) = spot_checks(c, &cache, &ggp) {
                report.failure = Some(format!("spot check: {msg}"));
            }
        }
        if !report.passed() {
            failed += 1;
        }
        println!("{report}");
    }
    println!(
        "{} of {} criteria passed",
        Criterion::ALL.len() - failed,
        Criterion::ALL.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
