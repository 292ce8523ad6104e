//! Deterministic text rendering of judgments.
//!
//! Notes come before the evidence block so that a defeated generic claim
//! reads in dialogue order: the assertion source, the individual
//! refutation, then the conceptual refutation as the primary evidence.

use std::fmt::Write;

use crate::arith::{DensityKind, DensityResult};

use super::{Entity, Evidence, Judgment, SignSource, WitnessBasis};

/// Render a judgment as stable, human-readable text: one line per proof
/// step, byte-identical across runs for identical inputs.
pub fn explain(judgment: &Judgment) -> String {
    let mut out = String::new();
    writeln!(out, "verdict: {}", judgment.verdict).unwrap();
    writeln!(out, "semantics: {}", judgment.semantics).unwrap();
    if !judgment.notes.is_empty() {
        writeln!(out, "notes:").unwrap();
        for note in &judgment.notes {
            writeln!(out, "  - {note}").unwrap();
        }
    }
    writeln!(out, "evidence:").unwrap();
    for line in evidence_lines(&judgment.evidence) {
        writeln!(out, "  {line}").unwrap();
    }
    out
}

/// The evidence block, one entry per line, without indentation.
pub fn evidence_lines(evidence: &Evidence) -> Vec<String> {
    match evidence {
        Evidence::OmegaProof { checked } if checked.is_empty() => {
            vec!["omega check: no instances to check".into()]
        }
        Evidence::OmegaProof { checked } => {
            let mut lines = vec![format!("omega check over {} instance(s):", checked.len())];
            for c in checked {
                match &c.source {
                    SignSource::Fact => {
                        lines.push(format!("  {}: fact {}", c.individual, c.literal))
                    }
                    SignSource::Axiom(derivation) => lines.push(format!(
                        "  {}: {} (inherited)",
                        c.individual, derivation
                    )),
                }
            }
            lines
        }
        Evidence::GenericProof { derivation } => vec![
            format!("generic proof: {derivation}"),
            "no exception subconcept contradicts the axiom".into(),
        ],
        Evidence::ExistentialWitness { witness, basis } => {
            vec![format!("witness: {}", describe_witness(witness, basis))]
        }
        Evidence::IndividualCounterexample { witness, basis } => vec![format!(
            "individual counterexample: {}",
            describe_witness(witness, basis)
        )],
        Evidence::ConceptualCounterexample {
            concept,
            derivation,
        } => vec![format!("conceptual counterexample: {concept} ({derivation})")],
        Evidence::CardinalityComparison {
            satisfying,
            violating,
            unknown,
        } => vec![format!(
            "cardinality count: {satisfying} satisfy, {violating} violate, {unknown} unknown \
             (strict majority needs satisfy > violate + unknown)"
        )],
        Evidence::DensityEvidence {
            body,
            restriction,
            relative_points,
            relative_exact,
        } => {
            let mut lines = vec!["density of the claimed set:".into()];
            for line in density_lines(body) {
                lines.push(format!("  {line}"));
            }
            if let Some(r) = restriction {
                lines.push("density of the restriction set:".into());
                for line in density_lines(r) {
                    lines.push(format!("  {line}"));
                }
            }
            if let Some(rel) = relative_exact {
                lines.push(format!("relative density: exactly {rel} (threshold 1/2)"));
            }
            if !relative_points.is_empty() && restriction.is_some() {
                lines.push("relative ratio sequence:".into());
                for (bound, ratio) in relative_points {
                    lines.push(format!("  N={bound} ratio={ratio}"));
                }
            }
            lines
        }
        Evidence::EncounterProof { encounters } => {
            let mut lines = vec!["encounter witnesses per majority property:".into()];
            for e in encounters {
                match &e.witness {
                    super::EncounterWitness::Individual(x) => {
                        lines.push(format!("  {}: individual {x}", e.property))
                    }
                    super::EncounterWitness::Concept(c) => {
                        lines.push(format!("  {}: concept {c}", e.property))
                    }
                }
            }
            lines
        }
        Evidence::DualRefutation {
            satisfying,
            violating,
            unknown,
        } => vec![format!(
            "dual quantifier: at most half satisfy ({satisfying} satisfy, {violating} violate, \
             {unknown} unknown)"
        )],
        Evidence::IncompatibilityRefutation { property, source } => vec![format!(
            "incompatibility: majority property {property} never meets the claim ({source})"
        )],
        Evidence::DegenerateCardinality { body, complement } => vec![format!(
            "body is {body}; complement is {complement}"
        )],
        Evidence::CardinalityClassComparison { body, complement } => vec![format!(
            "body is {body}; complement is {complement}"
        )],
        Evidence::Inconclusive { reason } => vec![format!("explanation: {reason}")],
    }
}

fn describe_witness(witness: &Entity, basis: &WitnessBasis) -> String {
    match basis {
        WitnessBasis::Fact(literal) => format!("{witness} (fact {literal})"),
        WitnessBasis::Formula { formula, holds } => {
            if *holds {
                format!("{witness} (satisfies {formula})")
            } else {
                format!("{witness} (violates {formula})")
            }
        }
    }
}

fn density_lines(result: &DensityResult) -> Vec<String> {
    match &result.kind {
        DensityKind::Exact(ratio) => vec![format!(
            "exact {ratio} (one period scanned up to {})",
            result.sample_bound
        )],
        DensityKind::Estimated { points, converged } => {
            let mut lines: Vec<String> = points
                .iter()
                .map(|p| format!("N={} count={} ratio={}", p.bound, p.count, p.ratio))
                .collect();
            lines.push(format!("converged: {converged}"));
            lines
        }
        DensityKind::DivergentOrUnknown => vec!["divergent or unknown".into()],
    }
}
