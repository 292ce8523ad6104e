//! Exact-density laws checked over a seeded population of random
//! primality-free formulas, plus consistency between the exact and
//! estimated routes.

use num_rational::Ratio;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quantscope::arith::{
    estimate_density, exact_density, sieve_count, ArithFormula, CmpOp, DEFAULT_EPSILON,
    DEFAULT_SIEVE_CAP,
};

fn random_atom(rng: &mut ChaCha8Rng) -> ArithFormula {
    match rng.gen_range(0..3) {
        0 => ArithFormula::Divides(rng.gen_range(1..=12)),
        1 => {
            let modulus = rng.gen_range(1..=12);
            ArithFormula::Congruence {
                modulus,
                residue: rng.gen_range(0..modulus),
            }
        }
        _ => {
            let op = match rng.gen_range(0..4) {
                0 => CmpOp::Lt,
                1 => CmpOp::Le,
                2 => CmpOp::Gt,
                _ => CmpOp::Ge,
            };
            ArithFormula::Compare(op, rng.gen_range(0..=50))
        }
    }
}

fn random_formula(rng: &mut ChaCha8Rng, depth: u32) -> ArithFormula {
    if depth == 0 {
        return random_atom(rng);
    }
    match rng.gen_range(0..6) {
        0 => ArithFormula::not(random_formula(rng, depth - 1)),
        1 | 2 => ArithFormula::and(
            random_formula(rng, depth - 1),
            random_formula(rng, depth - 1),
        ),
        3 | 4 => ArithFormula::or(
            random_formula(rng, depth - 1),
            random_formula(rng, depth - 1),
        ),
        _ => random_atom(rng),
    }
}

#[test]
fn complement_law_and_estimator_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let one = Ratio::new(1u64, 1u64);
    for case in 0..200 {
        let formula = random_formula(&mut rng, 3);
        let direct = exact_density(&formula).unwrap().exact().unwrap();
        let complement = exact_density(&ArithFormula::not(formula.clone()))
            .unwrap()
            .exact()
            .unwrap();
        assert_eq!(
            direct + complement,
            one,
            "complement law fails for case {case}: {formula}"
        );

        let estimate = estimate_density(&formula, &[100_000], DEFAULT_EPSILON, DEFAULT_SIEVE_CAP)
            .unwrap()
            .last_ratio()
            .unwrap();
        let exact_value = *direct.numer() as f64 / *direct.denom() as f64;
        assert!(
            (estimate - exact_value).abs() <= 0.01,
            "estimator off for case {case}: {formula} (exact {exact_value}, estimate {estimate})"
        );
    }
}

#[test]
fn counts_of_a_set_and_its_complement_partition_every_checkpoint() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let schedule = [100, 1_000, 10_000];
    for _ in 0..20 {
        let formula = random_formula(&mut rng, 2);
        let direct = estimate_density(&formula, &schedule, DEFAULT_EPSILON, DEFAULT_SIEVE_CAP)
            .unwrap();
        let complement = estimate_density(
            &ArithFormula::not(formula.clone()),
            &schedule,
            DEFAULT_EPSILON,
            DEFAULT_SIEVE_CAP,
        )
        .unwrap();
        let direct_points = match direct.kind {
            quantscope::DensityKind::Estimated { points, .. } => points,
            _ => unreachable!(),
        };
        let complement_points = match complement.kind {
            quantscope::DensityKind::Estimated { points, .. } => points,
            _ => unreachable!(),
        };
        for (a, b) in direct_points.iter().zip(complement_points.iter()) {
            assert_eq!(a.count + b.count, a.bound);
        }
    }
}

#[test]
fn prime_counts_are_nondecreasing_and_their_ratios_thin_out() {
    let schedule = [1_000u64, 10_000, 100_000, 1_000_000];
    let mut previous_count = 0;
    let mut previous_ratio = f64::MAX;
    for n in schedule {
        let count = sieve_count(n, DEFAULT_SIEVE_CAP).unwrap();
        assert!(count >= previous_count);
        let ratio = count as f64 / n as f64;
        assert!(ratio < previous_ratio, "prime ratio should fall along the schedule");
        previous_count = count;
        previous_ratio = ratio;
    }
}

#[test]
fn exact_density_majority_is_exclusive() {
    // If a set holds a strict density majority, its complement never does.
    use quantscope::judge::{majority_by_density, EvalConfig, Verdict};
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let cfg = EvalConfig::default();
    for _ in 0..50 {
        let formula = random_formula(&mut rng, 3);
        let direct = majority_by_density(&formula, None, &cfg).unwrap().verdict;
        let complement =
            majority_by_density(&ArithFormula::not(formula.clone()), None, &cfg)
                .unwrap()
                .verdict;
        if direct == Verdict::Asserted {
            assert_eq!(
                complement,
                Verdict::Refuted,
                "both {formula} and its complement claim a majority"
            );
        }
    }
}

#[test]
fn estimator_outputs_are_bit_reproducible() {
    let formula = ArithFormula::or(
        ArithFormula::Prime,
        ArithFormula::Congruence {
            modulus: 7,
            residue: 3,
        },
    );
    let a = estimate_density(&formula, &[1_000, 10_000], DEFAULT_EPSILON, DEFAULT_SIEVE_CAP)
        .unwrap();
    let b = estimate_density(&formula, &[1_000, 10_000], DEFAULT_EPSILON, DEFAULT_SIEVE_CAP)
        .unwrap();
    assert_eq!(a, b);
}
