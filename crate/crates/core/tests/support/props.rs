//! Property suites. Each runs `CASES` random trials and returns the first
//! failure, so both the property tests and the acceptance run can use them.

use artinian::apolar::GradedAlgebraModel;
use artinian::jordan::{
    conjugate_partition, degree_type_from_profile, jordan_strings, lefschetz_check, partition_from_profile,
    rank_profile, strings_degree_type, Partition,
};
use artinian::poly::{LinearForm, Side};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use super::*;

pub const CASES: u32 = 1000;

type Outcome = Result<(), String>;

fn runner(name: &str) -> TestRunner {
    // fixed per-suite seed so failures reproduce
    let mut seed = [0u8; 32];
    for (i, b) in name.bytes().enumerate() {
        seed[i % 32] ^= b;
    }
    TestRunner::new_with_rng(
        Config { cases: CASES, failure_persistence: None, ..Config::default() },
        proptest::test_runner::TestRng::from_seed(proptest::test_runner::RngAlgorithm::ChaCha, &seed),
    )
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn report<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Outcome {
    r.map_err(|e| e.to_string())
}

fn dual_model(n: usize, d: usize, coeffs: &[i64]) -> (GradedAlgebraModel, LinearForm, LinearForm) {
    let vars = generic_vars(n);
    let f = form(&vars, Side::Dual, P, d, coeffs);
    let model = GradedAlgebraModel::from_dual(&f).unwrap();
    let l1 = linear(&vars, P, &coeffs[..n]);
    let l1 = if l1.is_zero() { linear(&vars, P, &vec![1; n]) } else { l1 };
    let l2 = linear(&vars, P, &coeffs[coeffs.len() - n..]);
    let l2 = if l2.is_zero() { linear(&vars, P, &vec![1; n]) } else { l2 };
    (model, l1, l2)
}

/// `(g·h)∘F = g∘(h∘F)` for random `g, h ∈ R` and `F ∈ S`.
pub fn module_action_law() -> Outcome {
    let strat = (2usize..=3).prop_flat_map(|n| {
        (Just(n), 0usize..=2, 0usize..=2, 2usize..=5, sparse_coeffs(12), sparse_coeffs(12), sparse_coeffs(24))
    });
    report(runner("module_action").run(&strat, |(n, dg, dh, df, cg, ch, cf)| {
        let vars = generic_vars(n);
        let g = form(&vars, Side::Ring, P, dg, &cg);
        let h = form(&vars, Side::Ring, P, dh, &ch);
        let f = form(&vars, Side::Dual, P, df, &cf);
        let lhs = g.mul(&h).unwrap().contract(&f).unwrap();
        let rhs = g.contract(&h.contract(&f).unwrap()).unwrap();
        check(lhs == rhs, || format!("({g})({h}) on {f}: {lhs} vs {rhs}"))?;
        // and contraction is additive in the dual argument
        let f2 = form(&vars, Side::Dual, P, df, &ch);
        let split = g.contract(&f).unwrap().add(&g.contract(&f2).unwrap()).unwrap();
        check(g.contract(&f.add(&f2).unwrap()).unwrap() == split, || "additivity".into())
    }))
}

/// `r[i][k+1] ≤ r[i][k]` and `r[i][k+1] ≤ r[i+1][k]`, plus `r[i][0] = h_i`.
pub fn rank_monotonicity() -> Outcome {
    report(runner("rank_monotonicity").run(&dual_generator(), |(n, d, c)| {
        let (model, l1, _) = dual_model(n, d, &c);
        let prof = rank_profile(&model, &l1).unwrap();
        let h = model.hvector();
        for i in 0..=d {
            check(prof.get(i as isize, 0) == h.get(i), || format!("r[{i}][0] != h_{i}"))?;
            for k in 0..=d {
                let next = prof.get(i as isize, k + 1);
                check(next <= prof.get(i as isize, k), || format!("r[{i}][{}] > r[{i}][{k}]", k + 1))?;
                check(next <= prof.get(i as isize + 1, k), || format!("r[{i}][{}] > r[{}][{k}]", k + 1, i + 1))?;
            }
        }
        Ok(())
    }))
}

/// The rank-formula degree type equals the one read off explicit strings.
pub fn jdt_formula_vs_strings() -> Outcome {
    let perazzo = perazzo_linear_form().prop_map(|(p, c)| (None, p, c));
    let dual = dual_generator().prop_map(|(n, d, c)| (Some((n, d)), PerazzoParams::new(2, 3).unwrap(), c));
    let strat = prop_oneof![perazzo, dual];
    report(runner("jdt_strings").run(&strat, |(shape, params, c)| {
        let (model, ell) = match shape {
            Some((n, d)) => {
                let (m, l, _) = dual_model(n, d, &c);
                (m, l)
            }
            None => (perazzo_model(&params, P), linear(&params.vars(), P, &c)),
        };
        let by_ranks = degree_type_from_profile(&rank_profile(&model, &ell).unwrap()).unwrap();
        let by_strings = strings_degree_type(&jordan_strings(&model, &ell).unwrap());
        check(by_ranks == by_strings, || format!("ranks {by_ranks} vs strings {by_strings}"))
    }))
}

/// Every degree holds exactly `h_i` beads.
pub fn bead_conservation() -> Outcome {
    report(runner("beads").run(&perazzo_linear_form(), |(params, c)| {
        let model = perazzo_model(&params, P);
        let ell = linear(&params.vars(), P, &c);
        let jdt = degree_type_from_profile(&rank_profile(&model, &ell).unwrap()).unwrap();
        let h = model.hvector();
        let beads = jdt.bead_counts(h.entries().len());
        check(beads == h.entries(), || format!("{jdt} against {h}"))
    }))
}

/// Parts sum to `dim A`, and the partition agrees with a brute-force count.
pub fn partition_sum() -> Outcome {
    report(runner("partition_sum").run(&dual_generator(), |(n, d, c)| {
        let (model, l1, l2) = dual_model(n, d, &c);
        for ell in [&l1, &l2] {
            let p = partition_from_profile(&rank_profile(&model, ell).unwrap());
            check(p.total() == model.dim(), || format!("{p} has total {} != {}", p.total(), model.dim()))?;
            let brute = brute_force_jordan(&model, ell);
            check(p == brute, || format!("{p} vs brute force {brute}"))?;
        }
        Ok(())
    }))
}

/// No linear form has the strong Lefschetz property on a full Perazzo algebra.
pub fn perazzo_never_strong() -> Outcome {
    report(runner("never_strong").run(&perazzo_linear_form(), |(params, c)| {
        let model = perazzo_model(&params, P);
        let ell = linear(&params.vars(), P, &c);
        let l = lefschetz_check(&model, &ell).unwrap();
        check(!l.strong, || format!("strong Lefschetz for {} on {params}", ell.to_assignments()))
    }))
}

/// On monomial complete intersections strong implies weak, and the sum of
/// the variables is strong (characteristic far above the socle degree).
pub fn strong_implies_weak() -> Outcome {
    let strat = prop::collection::vec(1u32..=4, 1..=3).prop_flat_map(|e| {
        let n = e.len();
        (Just(e), sparse_coeffs(n).prop_map(nonzero))
    });
    report(runner("strong_weak").run(&strat, |(exps, c)| {
        let model = monomial_ci(&exps, P);
        let ell = linear(model.vars(), P, &c);
        let l = lefschetz_check(&model, &ell).unwrap();
        check(!l.strong || l.weak, || format!("strong but not weak: {exps:?} {c:?}"))?;
        let sum = linear(model.vars(), P, &vec![1; exps.len()]);
        let l = lefschetz_check(&model, &sum).unwrap();
        check(l.strong && l.weak, || format!("sum of variables not strong on {exps:?}"))
    }))
}

/// Conjugation is an involution and preserves the total.
pub fn conjugate_involution() -> Outcome {
    let strat = prop::collection::vec(1usize..=12, 0..=12);
    report(runner("conjugate").run(&strat, |parts| {
        let p = Partition::from_unsorted(parts);
        let c = conjugate_partition(&p);
        check(c.total() == p.total(), || format!("{p} -> {c}"))?;
        check(c.num_parts() == p.largest(), || format!("{p} -> {c}"))?;
        check(conjugate_partition(&c) == p, || format!("{p} -> {c} -> {}", conjugate_partition(&c)))
    }))
}

pub const SUITES: [(&str, fn() -> Outcome); 8] = [
    ("module-action law", module_action_law),
    ("rank-profile monotonicity", rank_monotonicity),
    ("degree type: rank formula vs strings", jdt_formula_vs_strings),
    ("bead conservation", bead_conservation),
    ("partition sum equals dim", partition_sum),
    ("no strong Lefschetz on full Perazzo", perazzo_never_strong),
    ("strong implies weak on monomial CIs", strong_implies_weak),
    ("conjugate involution", conjugate_involution),
];
