//! Acceptance suite: every release criterion as one test, each printing a
//! single PASS line with the measured values (run with `--nocapture` to
//! see them). Criteria exercise the shipped binary where the contract is
//! the command line, and the library where it is the engine itself.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use num_rational::Ratio;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quantscope::arith::{estimate_density, exact_density, ArithFormula, CmpOp, DEFAULT_EPSILON,
    DEFAULT_SIEVE_CAP};
use quantscope::judge::{evaluate, explain, EvalConfig, Evidence, MajoritySemantics, Verdict};
use quantscope::kb::KnowledgeBase;
use quantscope::parse::{parse_kb, parse_statement};

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_quantscope"))
        .args(args)
        .current_dir(workspace_root())
        .output()
        .expect("binary should run");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
    )
}

fn load_checked_kb(name: &str) -> KnowledgeBase {
    let path = workspace_root().join("kbs").join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
    let kb = parse_kb(&text).unwrap_or_else(|e| panic!("{name} should parse: {e:?}"));
    assert!(kb.validate().is_valid(), "{name} should validate");
    kb
}

fn judge(statement: &str, kb: &KnowledgeBase, cfg: &EvalConfig) -> quantscope::Judgment {
    evaluate(&parse_statement(statement).unwrap(), kb, cfg).unwrap()
}

#[test]
fn criterion_1_prime_density_reproduction() {
    let started = Instant::now();
    let (code, stdout, stderr) = run(&["density", "prime", "--format", "machine"]);
    let elapsed = started.elapsed();
    assert_eq!(code, 0, "stderr: {stderr}");

    let field = |key: &str| -> String {
        stdout
            .lines()
            .find_map(|l| l.strip_prefix(&format!("{key} ")))
            .unwrap_or_else(|| panic!("missing key {key} in:\n{stdout}"))
            .to_string()
    };
    let expected = [
        (1_000u64, 168u64),
        (10_000, 1_229),
        (100_000, 9_592),
        (1_000_000, 78_498),
    ];
    let mut ratios = Vec::new();
    for (i, (bound, count)) in expected.iter().enumerate() {
        assert_eq!(field(&format!("point.{i}.bound")), bound.to_string());
        assert_eq!(field(&format!("point.{i}.count")), count.to_string());
        ratios.push(field(&format!("point.{i}.ratio")).parse::<f64>().unwrap());
    }
    assert!(
        ratios.windows(2).all(|w| w[1] < w[0]),
        "ratios must strictly decrease: {ratios:?}"
    );
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "density run took {elapsed:?}, limit is 5s"
    );
    println!(
        "criterion 1: PASS - counts (168, 1229, 9592, 78498), ratios strictly decreasing, {:?}",
        elapsed
    );
}

#[test]
fn criterion_2_paper_sentence_pair() {
    let (code_prime, _, _) = run(&["eval", "--semantics", "density", "-", "majority Nat prime"]);
    assert_eq!(code_prime, 1, "majority Nat prime under density must be Refuted");

    let (code_nonprime, _, _) =
        run(&["eval", "--semantics", "density", "-", "majority Nat !prime"]);
    assert_eq!(
        code_nonprime, 0,
        "majority Nat !prime under density must be Asserted"
    );

    for statement in ["majority Nat prime", "majority Nat !prime"] {
        let (code, stdout, _) = run(&["eval", "--semantics", "cardinality", "-", statement]);
        assert_eq!(code, 3, "{statement} under cardinality must be Degenerate");
        assert!(
            stdout.contains("equal infinite cardinality"),
            "missing equal-infinite-cardinality note for {statement}:\n{stdout}"
        );
    }
    println!("criterion 2: PASS - exit codes 1/0/3/3 with the equal-infinite-cardinality note");
}

#[test]
fn criterion_3_dog_dialogue_golden_trace() {
    let kb = load_checked_kb("dogs.qkb");
    let cfg = EvalConfig::default();

    let every = judge("every Dog may_bite", &kb, &cfg);
    assert_eq!(every.verdict, Verdict::Refuted);
    match &every.evidence {
        Evidence::ConceptualCounterexample { concept, .. } => {
            assert_eq!(concept.as_str(), "BassetHound");
        }
        other => panic!("primary evidence must be conceptual, got {other:?}"),
    }
    assert!(
        every
            .notes
            .iter()
            .any(|n| n.contains("individual refutation: Rex")),
        "Rex must appear in the notes"
    );

    let each = judge("each Dog may_bite", &kb, &cfg);
    assert_eq!(each.verdict, Verdict::Refuted);
    match &each.evidence {
        Evidence::IndividualCounterexample { witness, .. } => {
            assert_eq!(witness.to_string(), "Rex");
        }
        other => panic!("primary evidence must be Rex, got {other:?}"),
    }

    // Byte-stable golden files, shared with the engine's own test suite.
    let golden_dir = workspace_root().join("crates/core/tests/golden");
    let every_golden = std::fs::read_to_string(golden_dir.join("every_dog.txt")).unwrap();
    let each_golden = std::fs::read_to_string(golden_dir.join("each_dog.txt")).unwrap();
    assert_eq!(explain(&every), every_golden);
    assert_eq!(explain(&each), each_golden);

    // The CLI text envelope is the statement line plus the same trace.
    let (code, stdout, _) = run(&["eval", "kbs/dogs.qkb", "every Dog may_bite"]);
    assert_eq!(code, 1);
    assert_eq!(stdout, format!("statement: every Dog may_bite\n{every_golden}"));
    println!("criterion 3: PASS - byte-stable golden traces for both universal readings");
}

fn assignments(n: usize) -> Vec<Vec<bool>> {
    (0..1usize << n)
        .map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect())
        .collect()
}

fn total_kb(facts: &[bool]) -> KnowledgeBase {
    let mut kb = KnowledgeBase::new();
    kb.declare_concept("C");
    for (i, &sign) in facts.iter().enumerate() {
        let name = format!("x{i}");
        kb.add_individual(name.clone(), "C");
        kb.add_fact(name, "p", sign);
    }
    kb
}

fn oracle_truth(statement: &str, facts: &[bool]) -> bool {
    match statement {
        "each C p" => facts.iter().all(|&b| b),
        "some C p" => facts.iter().any(|&b| b),
        "no C p" => facts.iter().all(|&b| !b),
        "not_all C p" => facts.iter().any(|&b| !b),
        "majority C p" => {
            let satisfying = facts.iter().filter(|&&b| b).count();
            satisfying > facts.len() - satisfying
        }
        other => panic!("no oracle for {other}"),
    }
}

#[test]
fn criterion_4_oracle_equivalence() {
    let started = Instant::now();
    let cfg = EvalConfig {
        majority_semantics: Some(MajoritySemantics::Cardinality),
        ..EvalConfig::default()
    };
    let statements = ["each C p", "some C p", "no C p", "not_all C p", "majority C p"];
    let mut mismatches = 0;
    let mut cases = 0;
    for n in 0..=4 {
        for facts in assignments(n) {
            let kb = total_kb(&facts);
            for statement in statements {
                let expected = if oracle_truth(statement, &facts) {
                    Verdict::Asserted
                } else {
                    Verdict::Refuted
                };
                if judge(statement, &kb, &cfg).verdict != expected {
                    mismatches += 1;
                    eprintln!("mismatch: `{statement}` on {facts:?}");
                }
                cases += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    assert_eq!(mismatches, 0, "{mismatches} oracle mismatches");
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}, limit 10s");
    println!("criterion 4: PASS - {cases} verdicts match the truth-table oracle in {elapsed:?}");
}

#[test]
fn criterion_5_opposition_coherence() {
    let cfg = EvalConfig::default();
    let mut violations = 0;
    for n in 0..=4 {
        for facts in assignments(n) {
            let kb = total_kb(&facts);
            let a = judge("each C p", &kb, &cfg).verdict;
            let o = judge("not_all C p", &kb, &cfg).verdict;
            let e = judge("no C p", &kb, &cfg).verdict;
            let i = judge("some C p", &kb, &cfg).verdict;
            if a == o || e == i {
                violations += 1;
                eprintln!("corner clash on {facts:?}: A={a} O={o} E={e} I={i}");
            }
        }
    }
    assert_eq!(violations, 0);
    println!("criterion 5: PASS - contradictory corners never share a verdict (31 models)");
}

fn random_prime_free_formula(rng: &mut ChaCha8Rng, depth: u32) -> ArithFormula {
    if depth == 0 {
        return match rng.gen_range(0..3) {
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
        };
    }
    match rng.gen_range(0..6) {
        0 => ArithFormula::not(random_prime_free_formula(rng, depth - 1)),
        1 | 2 => ArithFormula::and(
            random_prime_free_formula(rng, depth - 1),
            random_prime_free_formula(rng, depth - 1),
        ),
        3 | 4 => ArithFormula::or(
            random_prime_free_formula(rng, depth - 1),
            random_prime_free_formula(rng, depth - 1),
        ),
        _ => random_prime_free_formula(rng, 0),
    }
}

#[test]
fn criterion_6_exact_density_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let one = Ratio::new(1u64, 1u64);
    for case in 0..200 {
        let formula = random_prime_free_formula(&mut rng, 3);
        let direct = exact_density(&formula).unwrap().exact().unwrap();
        let complement = exact_density(&ArithFormula::not(formula.clone()))
            .unwrap()
            .exact()
            .unwrap();
        assert_eq!(direct + complement, one, "case {case}: {formula}");

        let estimate = estimate_density(&formula, &[100_000], DEFAULT_EPSILON, DEFAULT_SIEVE_CAP)
            .unwrap()
            .last_ratio()
            .unwrap();
        let exact_value = *direct.numer() as f64 / *direct.denom() as f64;
        assert!(
            (estimate - exact_value).abs() <= 0.01,
            "case {case}: {formula} exact {exact_value} vs estimate {estimate}"
        );
    }
    println!("criterion 6: PASS - 200 formulas satisfy the complement law and 0.01 agreement");
}

#[test]
fn criterion_7_strict_majority_boundary() {
    // Exact density one half over Nat.
    let (code, _, _) = run(&["eval", "-", "majority Nat (2 | n)"]);
    assert_eq!(code, 1, "an exact one-half density must refute");

    let cfg = EvalConfig::default();
    let empty = KnowledgeBase::new();
    let j = judge("majority Nat (2 | n)", &empty, &cfg);
    assert_eq!(j.verdict, Verdict::Refuted);
    match &j.evidence {
        Evidence::DensityEvidence { relative_exact, .. } => {
            assert_eq!(relative_exact, &Some(Ratio::new(1, 2)));
        }
        other => panic!("expected exact density evidence, got {other:?}"),
    }

    // A five/five split over a finite concept.
    let mut kb = KnowledgeBase::new();
    kb.declare_concept("C");
    for i in 0..10 {
        let name = format!("x{i}");
        kb.add_individual(name.clone(), "C");
        kb.add_fact(name, "p", i < 5);
    }
    let card = EvalConfig {
        majority_semantics: Some(MajoritySemantics::Cardinality),
        ..EvalConfig::default()
    };
    assert_eq!(judge("majority C p", &kb, &card).verdict, Verdict::Refuted);

    // No boundary case is ever asserted: every exact one-half split refutes.
    for boundary in ["majority Nat (2 | n)", "majority Nat n mod 2 == 1"] {
        assert_eq!(judge(boundary, &empty, &cfg).verdict, Verdict::Refuted);
    }
    println!("criterion 7: PASS - exact one-half splits refute under density and cardinality");
}

#[test]
fn criterion_8_generic_distributive_divergence() {
    let kb = load_checked_kb("divergence.qkb");
    let cfg = EvalConfig::default();
    assert_eq!(
        judge("each Dog may_bite", &kb, &cfg).verdict,
        Verdict::Asserted,
        "distributive reading must hold on the divergence kb"
    );
    assert_eq!(
        judge("every Dog may_bite", &kb, &cfg).verdict,
        Verdict::Refuted,
        "generic reading must fail on the divergence kb"
    );

    // Reverse divergence is absent across the exhaustive family extended
    // with one exception subconcept.
    for n in 0..=4 {
        for facts in assignments(n) {
            let mut kb = total_kb(&facts);
            kb.add_axiom("C", "p", true);
            kb.declare_subconcept("E", "C");
            kb.add_axiom("E", "p", false);
            let each = judge("each C p", &kb, &cfg).verdict;
            let every = judge("every C p", &kb, &cfg).verdict;
            assert!(
                !(each == Verdict::Refuted && every == Verdict::Asserted),
                "reverse divergence on {facts:?}"
            );
        }
    }
    println!("criterion 8: PASS - forward divergence exhibited, reverse divergence absent");
}

#[test]
fn criterion_9_proof_theoretic_majority_rules() {
    // All majority properties encounter the claim.
    let (code, stdout, _) = run(&[
        "eval",
        "--semantics",
        "proof_theoretic",
        "kbs/majority_encounter.qkb",
        "majority Bird active",
    ]);
    assert_eq!(code, 0, "encounter kb must assert:\n{stdout}");
    assert!(stdout.contains("encounter witnesses"));

    // A majority property is incompatible with the claim.
    let (code, stdout, _) = run(&[
        "eval",
        "--semantics",
        "proof_theoretic",
        "kbs/majority_incompatible.qkb",
        "majority Animal cold_blooded",
    ]);
    assert_eq!(code, 1, "incompatible kb must refute:\n{stdout}");
    assert!(stdout.contains("incompatibility"));

    // No declared majority properties: some knowledge is required.
    let (code, stdout, _) = run(&[
        "eval",
        "--semantics",
        "proof_theoretic",
        "kbs/majority_no_knowledge.qkb",
        "majority Crowd happy",
    ]);
    assert_eq!(code, 2, "knowledge-free kb must stay undetermined:\n{stdout}");
    assert!(
        stdout.contains("some knowledge is required"),
        "missing note:\n{stdout}"
    );
    println!("criterion 9: PASS - encounter assertion, incompatibility and dual refutations, knowledge-free undetermined");
}
