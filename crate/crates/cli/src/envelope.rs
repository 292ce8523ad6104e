//! Output rendering: a text format that wraps the engine's trace, and a
//! line-oriented machine format (`key value` per line, dotted keys for
//! nesting) stable enough for golden files and scripting.

use quantscope::judge::{explain, Evidence, Judgment, Verdict};
use quantscope::DensityKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Machine,
}

pub fn verdict_exit_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Asserted => 0,
        Verdict::Refuted => 1,
        Verdict::Undetermined => 2,
        Verdict::Degenerate => 3,
    }
}

fn evidence_kind(evidence: &Evidence) -> &'static str {
    match evidence {
        Evidence::OmegaProof { .. } => "omega-proof",
        Evidence::GenericProof { .. } => "generic-proof",
        Evidence::ExistentialWitness { .. } => "existential-witness",
        Evidence::IndividualCounterexample { .. } => "individual-counterexample",
        Evidence::ConceptualCounterexample { .. } => "conceptual-counterexample",
        Evidence::CardinalityComparison { .. } => "cardinality-comparison",
        Evidence::DensityEvidence { .. } => "density",
        Evidence::EncounterProof { .. } => "encounter-proof",
        Evidence::DualRefutation { .. } => "dual-refutation",
        Evidence::IncompatibilityRefutation { .. } => "incompatibility-refutation",
        Evidence::DegenerateCardinality { .. } => "degenerate-cardinality",
        Evidence::CardinalityClassComparison { .. } => "cardinality-class-comparison",
        Evidence::Inconclusive { .. } => "inconclusive",
    }
}

/// Render one judgment envelope. Text output is the statement line followed
/// by the engine trace verbatim; machine output flattens the same content
/// into key-value lines.
pub fn render_judgment(statement: &str, judgment: &Judgment, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            format!("statement: {statement}\n{}", explain(judgment))
        }
        OutputFormat::Machine => {
            let mut out = String::new();
            out.push_str(&format!("statement {statement}\n"));
            out.push_str(&format!("verdict {}\n", judgment.verdict));
            out.push_str(&format!("semantics {}\n", judgment.semantics));
            out.push_str(&format!("exit {}\n", verdict_exit_code(judgment.verdict)));
            for (i, note) in judgment.notes.iter().enumerate() {
                out.push_str(&format!("note.{i} {note}\n"));
            }
            out.push_str(&format!("evidence.kind {}\n", evidence_kind(&judgment.evidence)));
            for (i, line) in quantscope::judge::evidence_lines(&judgment.evidence)
                .iter()
                .enumerate()
            {
                out.push_str(&format!("evidence.line.{i} {}\n", line.trim_start()));
            }
            out
        }
    }
}

/// Render a density analysis.
pub fn render_density(
    formula: &str,
    exact_rejection: Option<&str>,
    result: &quantscope::DensityResult,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = format!("formula: {formula}\n");
            if let Some(reason) = exact_rejection {
                out.push_str(&format!("exact density unavailable: {reason}\n"));
            }
            match &result.kind {
                DensityKind::Exact(ratio) => {
                    out.push_str(&format!(
                        "density: exact {ratio} (one period scanned up to {})\n",
                        result.sample_bound
                    ));
                }
                DensityKind::Estimated { points, converged } => {
                    for p in points {
                        out.push_str(&format!(
                            "N={} count={} ratio={}\n",
                            p.bound, p.count, p.ratio
                        ));
                    }
                    out.push_str(&format!("converged: {converged}\n"));
                }
                DensityKind::DivergentOrUnknown => {
                    out.push_str("density: divergent or unknown\n");
                }
            }
            out
        }
        OutputFormat::Machine => {
            let mut out = format!("formula {formula}\n");
            if let Some(reason) = exact_rejection {
                out.push_str(&format!("exact.rejected {reason}\n"));
            }
            match &result.kind {
                DensityKind::Exact(ratio) => {
                    out.push_str(&format!("density.exact {ratio}\n"));
                    out.push_str(&format!("density.sample_bound {}\n", result.sample_bound));
                }
                DensityKind::Estimated { points, converged } => {
                    for (i, p) in points.iter().enumerate() {
                        out.push_str(&format!("point.{i}.bound {}\n", p.bound));
                        out.push_str(&format!("point.{i}.count {}\n", p.count));
                        out.push_str(&format!("point.{i}.ratio {}\n", p.ratio));
                    }
                    out.push_str(&format!("converged {converged}\n"));
                }
                DensityKind::DivergentOrUnknown => {
                    out.push_str("density.kind divergent-or-unknown\n");
                }
            }
            out
        }
    }
}
