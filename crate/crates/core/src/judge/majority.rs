//! The three semantics for `majority` claims.
//!
//! Cardinality compares how many instances are known to satisfy the claim
//! against how many are known to violate it; over the arithmetic domain it
//! degenerates, because a definable set and its complement are usually both
//! countably infinite. Density compares the natural density of the claimed
//! set against one half, exactly for eventually periodic sets and by a
//! monotone prefix-ratio argument otherwise. The proof-theoretic rules
//! assert from declared majority properties that all encounter the claim,
//! and refute through the dual quantifier or an incompatible majority
//! property.

use num_rational::Ratio;

use crate::arith::{
    cardinality_class, estimate_density, exact_density, ratios_converged, ArithFormula,
    Cardinality, DensityKind, DensityResult,
};
use crate::kb::{GenericEntailment, KnowledgeBase};
use crate::logic::{ConceptId, Literal, PredicateId};

use super::{
    kb_err, resolve_sign, DisjointnessSource, Encounter, EncounterWitness, EvalConfig, EvalError,
    Evidence, Judgment, ResolvedSign, SemanticsTag, SignSource, Verdict,
};

/// The note attached to every degenerate cardinality judgment.
pub const EQUAL_INFINITE_NOTE: &str =
    "equal infinite cardinality — cardinality semantics cannot decide";

/// `majority <concept> <claim>` by counting. With `s` instances known to
/// satisfy, `v` known to violate and `u` unknown: asserted when
/// `s > v + u`, refuted when `v >= s + u`, otherwise the unknowns could
/// swing the outcome. Exactly half is never a majority.
pub fn majority_by_cardinality(
    concept: &ConceptId,
    claim: &Literal,
    kb: &KnowledgeBase,
) -> Result<Judgment, EvalError> {
    let (satisfying, violating, unknown, notes) = count_instances(concept, claim, kb)?;
    let mut judgment = if satisfying > violating + unknown {
        Judgment::new(
            Verdict::Asserted,
            Evidence::CardinalityComparison {
                satisfying,
                violating,
                unknown,
            },
            SemanticsTag::MajorityCardinality,
        )
    } else if violating >= satisfying + unknown {
        Judgment::new(
            Verdict::Refuted,
            Evidence::CardinalityComparison {
                satisfying,
                violating,
                unknown,
            },
            SemanticsTag::MajorityCardinality,
        )
    } else {
        Judgment::new(
            Verdict::Undetermined,
            Evidence::Inconclusive {
                reason: format!(
                    "{satisfying} known to satisfy, {violating} known to violate, {unknown} \
                     unknown: the unknowns could swing the count either way"
                ),
            },
            SemanticsTag::MajorityCardinality,
        )
    };
    judgment.notes.extend(notes);
    Ok(judgment)
}

fn count_instances(
    concept: &ConceptId,
    claim: &Literal,
    kb: &KnowledgeBase,
) -> Result<(usize, usize, usize, Vec<String>), EvalError> {
    let instances = kb.instances_of(concept).map_err(kb_err)?;
    let mut satisfying = 0;
    let mut violating = 0;
    let mut unknown = 0;
    let mut notes = Vec::new();
    for x in &instances {
        match resolve_sign(kb, x, &claim.predicate) {
            ResolvedSign::Known { positive, source } => {
                if let SignSource::Axiom(derivation) = &source {
                    notes.push(format!("{x}: no explicit fact; sign inherited from {derivation}"));
                }
                if positive == claim.positive {
                    satisfying += 1;
                } else {
                    violating += 1;
                }
            }
            ResolvedSign::Unknown => unknown += 1,
            ResolvedSign::Ambiguous => {
                notes.push(format!(
                    "warning: ambiguous inheritance for {x}; treated as unknown"
                ));
                unknown += 1;
            }
        }
    }
    Ok((satisfying, violating, unknown, notes))
}

/// `majority Nat <formula>` by cardinality. Classifies the defined set and
/// its complement; two countably infinite classes cannot be compared, so
/// the verdict is degenerate.
pub fn majority_by_cardinality_nat(formula: &ArithFormula, probe_bound: u64) -> Judgment {
    let body = cardinality_class(formula, probe_bound);
    let complement = cardinality_class(&ArithFormula::not(formula.clone()), probe_bound);
    match (&body, &complement) {
        (Cardinality::CountablyInfinite, Cardinality::CountablyInfinite) => Judgment::new(
            Verdict::Degenerate,
            Evidence::DegenerateCardinality { body, complement },
            SemanticsTag::MajorityCardinality,
        )
        .with_note(EQUAL_INFINITE_NOTE),
        (Cardinality::CountablyInfinite, Cardinality::Finite(_)) => Judgment::new(
            Verdict::Asserted,
            Evidence::CardinalityClassComparison { body, complement },
            SemanticsTag::MajorityCardinality,
        ),
        (Cardinality::Finite(_), Cardinality::CountablyInfinite) => Judgment::new(
            Verdict::Refuted,
            Evidence::CardinalityClassComparison { body, complement },
            SemanticsTag::MajorityCardinality,
        ),
        (Cardinality::Finite(a), Cardinality::Finite(b)) => {
            let verdict = if a > b {
                Verdict::Asserted
            } else {
                Verdict::Refuted
            };
            Judgment::new(
                verdict,
                Evidence::CardinalityClassComparison { body, complement },
                SemanticsTag::MajorityCardinality,
            )
        }
        _ => Judgment::new(
            Verdict::Undetermined,
            Evidence::Inconclusive {
                reason: format!(
                    "cardinality class undecided: body is {body}, complement is {complement}"
                ),
            },
            SemanticsTag::MajorityCardinality,
        ),
    }
}

/// `majority Nat <body>` (relative to an optional restriction formula) by
/// natural density against the one-half threshold.
///
/// When every formula is primality-free the relative density
/// `density(body AND restriction) / density(restriction)` is an exact
/// rational: asserted when strictly above one half, refuted at or below it.
/// With the primality atom the prefix ratios along `cfg.schedule` decide:
/// a sequence that has converged, or that drifts monotonically, certifies
/// the side of the threshold its last value sits on, provided that value
/// clears the margin. A zero-density restriction leaves the relative
/// density undefined.
pub fn majority_by_density(
    body: &ArithFormula,
    restriction: Option<&ArithFormula>,
    cfg: &EvalConfig,
) -> Result<Judgment, EvalError> {
    let combined = match restriction {
        Some(m) => ArithFormula::and(body.clone(), m.clone()),
        None => body.clone(),
    };
    if !combined.contains_prime() {
        let restriction_density = match restriction {
            Some(m) => Some(exact_density(m)?),
            None => None,
        };
        let denominator = restriction_density
            .as_ref()
            .and_then(|d| d.exact())
            .unwrap_or_else(|| Ratio::new(1, 1));
        if denominator == Ratio::new(0, 1) {
            return Ok(Judgment::new(
                Verdict::Degenerate,
                Evidence::Inconclusive {
                    reason: "the restriction formula has exact density 0, so the relative \
                             density is undefined"
                        .into(),
                },
                SemanticsTag::MajorityDensity,
            ));
        }
        let body_density = exact_density(&combined)?;
        let relative = body_density.exact().expect("exact path") / denominator;
        let half = Ratio::new(1, 2);
        let verdict = if relative > half {
            Verdict::Asserted
        } else {
            Verdict::Refuted
        };
        let mut judgment = Judgment::new(
            verdict,
            Evidence::DensityEvidence {
                body: body_density,
                restriction: restriction_density,
                relative_points: vec![],
                relative_exact: Some(relative),
            },
            SemanticsTag::MajorityDensity,
        );
        if relative == half {
            judgment
                .notes
                .push("relative density is exactly 1/2; a strict majority needs more".into());
        }
        return Ok(judgment);
    }

    let body_estimate = estimate_density(&combined, &cfg.schedule, cfg.epsilon, cfg.sieve_cap)?;
    let restriction_estimate = match restriction {
        Some(m) => Some(estimate_density(m, &cfg.schedule, cfg.epsilon, cfg.sieve_cap)?),
        None => None,
    };
    let relative_points = relative_ratios(&body_estimate, restriction_estimate.as_ref());
    if relative_points.is_empty() {
        return Ok(Judgment::new(
            Verdict::Degenerate,
            Evidence::Inconclusive {
                reason: "the restriction formula matched nothing at any checkpoint, so the \
                         relative ratio is undefined"
                    .into(),
            },
            SemanticsTag::MajorityDensity,
        ));
    }
    let ratios: Vec<f64> = relative_points.iter().map(|(_, r)| *r).collect();
    let last = *ratios.last().expect("nonempty");
    let converged = ratios_converged(&ratios, cfg.epsilon);
    let nonincreasing = ratios.windows(2).all(|w| w[1] <= w[0]);
    let nondecreasing = ratios.windows(2).all(|w| w[1] >= w[0]);

    let (verdict, note) = if (converged || nondecreasing) && last >= 0.5 + cfg.margin {
        (
            Verdict::Asserted,
            format!(
                "last relative ratio {last} is at least 1/2 + margin {} and the sequence is {}",
                cfg.margin,
                if converged { "converged" } else { "nondecreasing" }
            ),
        )
    } else if (converged || nonincreasing) && last <= 0.5 - cfg.margin {
        (
            Verdict::Refuted,
            format!(
                "last relative ratio {last} is at most 1/2 - margin {} and the sequence is {}",
                cfg.margin,
                if converged { "converged" } else { "nonincreasing" }
            ),
        )
    } else {
        (
            Verdict::Undetermined,
            format!(
                "the ratio sequence (last {last}) is neither converged nor monotone clear of \
                 the 1/2 threshold by margin {}",
                cfg.margin
            ),
        )
    };
    Ok(Judgment::new(
        verdict,
        Evidence::DensityEvidence {
            body: body_estimate,
            restriction: restriction_estimate,
            relative_points,
            relative_exact: None,
        },
        SemanticsTag::MajorityDensity,
    )
    .with_note(note))
}

fn relative_ratios(
    body: &DensityResult,
    restriction: Option<&DensityResult>,
) -> Vec<(u64, f64)> {
    let body_points = match &body.kind {
        DensityKind::Estimated { points, .. } => points,
        _ => return vec![],
    };
    match restriction {
        None => body_points
            .iter()
            .map(|p| (p.bound, p.ratio))
            .collect(),
        Some(r) => {
            let restriction_points = match &r.kind {
                DensityKind::Estimated { points, .. } => points,
                _ => return vec![],
            };
            body_points
                .iter()
                .zip(restriction_points.iter())
                .filter(|(_, m)| m.count > 0)
                .map(|(a, m)| (a.bound, a.count as f64 / m.count as f64))
                .collect()
        }
    }
}

/// `majority <concept> <claim>` by the proof-theoretic rules over the
/// declared majority properties B_i of the concept.
///
/// Refutation is tried first: a B_i that can never meet the claim
/// (declared disjoint, or the complementary sign of the same predicate)
/// is an incompatibility refutation, and instance counts establishing
/// that at most half satisfy give the dual-quantifier refutation.
/// Assertion needs every B_i to encounter the claim through a shared
/// positive witness: an individual with matching facts, or a concept
/// whose generic entailments match. Without declared majority properties
/// nothing can be asserted: some knowledge is required.
pub fn majority_proof_theoretic(
    concept: &ConceptId,
    claim: &Literal,
    kb: &KnowledgeBase,
) -> Result<Judgment, EvalError> {
    let properties = kb.majority_properties(concept).map_err(kb_err)?;

    for property in &properties {
        let property_literal = Literal {
            predicate: property.clone(),
            positive: true,
        };
        if kb.entailed_disjoint(&property_literal, claim) {
            let source = if property == &claim.predicate {
                DisjointnessSource::ComplementarySigns
            } else {
                DisjointnessSource::Declared
            };
            return Ok(Judgment::new(
                Verdict::Refuted,
                Evidence::IncompatibilityRefutation {
                    property: property.clone(),
                    source,
                },
                SemanticsTag::MajorityProofTheoretic,
            )
            .with_note(format!(
                "majority property {property} does not meet the claim {claim}"
            )));
        }
    }

    let (satisfying, violating, unknown, count_notes) = count_instances(concept, claim, kb)?;
    if violating >= satisfying + unknown && !kb.instances_of(concept).map_err(kb_err)?.is_empty()
    {
        let mut judgment = Judgment::new(
            Verdict::Refuted,
            Evidence::DualRefutation {
                satisfying,
                violating,
                unknown,
            },
            SemanticsTag::MajorityProofTheoretic,
        )
        .with_note("dual quantifier: at most half of the instances can satisfy the claim");
        judgment.notes.extend(count_notes);
        return Ok(judgment);
    }

    if !properties.is_empty() {
        let mut encounters = Vec::new();
        let mut missing = None;
        for property in &properties {
            match find_encounter(kb, property, claim) {
                Some(witness) => encounters.push(Encounter {
                    property: property.clone(),
                    witness,
                }),
                None => {
                    missing = Some(property.clone());
                    break;
                }
            }
        }
        return Ok(match missing {
            None => Judgment::new(
                Verdict::Asserted,
                Evidence::EncounterProof { encounters },
                SemanticsTag::MajorityProofTheoretic,
            )
            .with_note(
                "each majority property is checked for an encounter separately; joint \
                 coverage of the concept is not required",
            ),
            Some(property) => Judgment::new(
                Verdict::Undetermined,
                Evidence::Inconclusive {
                    reason: format!(
                        "majority property {property} has no encounter witness with the claim \
                         {claim}"
                    ),
                },
                SemanticsTag::MajorityProofTheoretic,
            ),
        });
    }

    Ok(Judgment::new(
        Verdict::Undetermined,
        Evidence::Inconclusive {
            reason: format!("no majority properties are declared for {concept}"),
        },
        SemanticsTag::MajorityProofTheoretic,
    )
    .with_note(format!(
        "some knowledge is required: no majority properties are declared for {concept}"
    )))
}

/// A positive witness shared by the property and the claim: individuals in
/// declaration order first, then concepts in declaration order.
fn find_encounter(
    kb: &KnowledgeBase,
    property: &PredicateId,
    claim: &Literal,
) -> Option<EncounterWitness> {
    for (individual, _) in kb.individuals() {
        if kb.fact(individual, property) == Some(true)
            && kb.fact(individual, &claim.predicate) == Some(claim.positive)
        {
            return Some(EncounterWitness::Individual(individual.clone()));
        }
    }
    for concept in kb.concepts() {
        let has_property = matches!(
            kb.entails_generic(concept, property),
            Ok(GenericEntailment::Entailed { positive: true, .. })
        );
        let meets_claim = match kb.entails_generic(concept, &claim.predicate) {
            Ok(GenericEntailment::Entailed { positive, .. }) => positive == claim.positive,
            _ => false,
        };
        if has_property && meets_claim {
            return Some(EncounterWitness::Concept(concept.clone()));
        }
    }
    None
}
