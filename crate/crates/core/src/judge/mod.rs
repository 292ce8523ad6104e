//! Judgment rendering for quantified statements.
//!
//! Each semantics answers the same two questions: when can the statement be
//! asserted, and how can it be refuted? Universal claims split into the
//! omega-rule distributive reading (one premise per individual) and the
//! generic reading (concept-level derivation with two refutation modes:
//! an individual without the property, or a subconcept whose generic
//! properties contradict it). Majority claims are judged by cardinality
//! comparison, by natural density against the one-half threshold, or by
//! the proof-theoretic encounter/dual/incompatibility rules.
//!
//! Facts are three-valued: an unknown fact blocks both assertion and
//! refutation, except that universals over empty collections hold
//! vacuously (flagged in the trace).

mod explain;
mod majority;

use std::fmt;

use thiserror::Error;

pub use explain::{evidence_lines, explain};
pub use majority::{
    majority_by_cardinality, majority_by_cardinality_nat, majority_by_density,
    majority_proof_theoretic,
};

use crate::arith::{self, ArithFormula, Cardinality, DensityResult, Sieve};
use crate::kb::{GenericDerivation, GenericEntailment, KbError, KnowledgeBase};
use crate::logic::{
    Body, ConceptId, IndividualId, Literal, PredicateId, QuantifierKind, Restriction, Statement,
};

use num_rational::Ratio;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum EvalError {
    #[error("unresolvable symbol: {0}")]
    UnresolvableSymbol(String),
    #[error("semantics unavailable: {0}")]
    SemanticsUnavailable(String),
    #[error("infinite restriction: {0}")]
    InfiniteRestriction(String),
    #[error("knowledge base failed validation with {issues} issue(s)")]
    InvalidKnowledgeBase { issues: usize },
    #[error(transparent)]
    Arith(#[from] arith::ArithError),
}

fn kb_err(e: KbError) -> EvalError {
    EvalError::UnresolvableSymbol(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Asserted,
    Refuted,
    Undetermined,
    Degenerate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Asserted => write!(f, "Asserted"),
            Verdict::Refuted => write!(f, "Refuted"),
            Verdict::Undetermined => write!(f, "Undetermined"),
            Verdict::Degenerate => write!(f, "Degenerate"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MajoritySemantics {
    Cardinality,
    Density,
    ProofTheoretic,
}

impl fmt::Display for MajoritySemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MajoritySemantics::Cardinality => write!(f, "cardinality"),
            MajoritySemantics::Density => write!(f, "density"),
            MajoritySemantics::ProofTheoretic => write!(f, "proof_theoretic"),
        }
    }
}

/// Evaluator configuration. `majority_semantics: None` picks the default
/// for the restriction: cardinality over finite concepts, density over Nat.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalConfig {
    pub majority_semantics: Option<MajoritySemantics>,
    /// Upper bound for witness search over the arithmetic domain.
    pub search_bound: u64,
    /// Checkpoint schedule for density estimation.
    pub schedule: Vec<u64>,
    /// Convergence tolerance for ratio sequences.
    pub epsilon: f64,
    /// Decision margin around the one-half threshold for estimated ratios.
    pub margin: f64,
    /// Largest sieve the arithmetic backend may build.
    pub sieve_cap: u64,
}

impl Default for EvalConfig {
    fn default() -> EvalConfig {
        EvalConfig {
            majority_semantics: None,
            search_bound: 1_000_000,
            schedule: arith::default_schedule(),
            epsilon: arith::DEFAULT_EPSILON,
            margin: 0.02,
            sieve_cap: arith::DEFAULT_SIEVE_CAP,
        }
    }
}

/// Which evaluator produced a judgment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemanticsTag {
    Distributive,
    Generic,
    Existential,
    NegativeUniversal,
    NegativeExistential,
    MajorityCardinality,
    MajorityDensity,
    MajorityProofTheoretic,
}

impl fmt::Display for SemanticsTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            SemanticsTag::Distributive => "distributive",
            SemanticsTag::Generic => "generic",
            SemanticsTag::Existential => "existential",
            SemanticsTag::NegativeUniversal => "negative-universal",
            SemanticsTag::NegativeExistential => "negative-existential",
            SemanticsTag::MajorityCardinality => "majority-cardinality",
            SemanticsTag::MajorityDensity => "majority-density",
            SemanticsTag::MajorityProofTheoretic => "majority-proof-theoretic",
        };
        write!(f, "{tag}")
    }
}

/// A witness: a declared individual or a number from the arithmetic domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entity {
    Individual(IndividualId),
    Number(u64),
}

impl fmt::Display for Entity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entity::Individual(x) => write!(f, "{x}"),
            Entity::Number(n) => write!(f, "{n}"),
        }
    }
}

/// Where an individual's sign came from: an explicit fact, or a generic
/// axiom inherited from its declared concept (always flagged in traces).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignSource {
    Fact,
    Axiom(GenericDerivation),
}

/// One premise of an omega-rule check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckedInstance {
    pub individual: IndividualId,
    pub literal: Literal,
    pub source: SignSource,
}

/// What a witness was checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessBasis {
    Fact(Literal),
    Formula { formula: ArithFormula, holds: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EncounterWitness {
    Individual(IndividualId),
    Concept(ConceptId),
}

/// A shared positive witness between a majority property and the claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Encounter {
    pub property: PredicateId,
    pub witness: EncounterWitness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DisjointnessSource {
    Declared,
    ComplementarySigns,
}

impl fmt::Display for DisjointnessSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DisjointnessSource::Declared => write!(f, "declared disjoint"),
            DisjointnessSource::ComplementarySigns => write!(f, "complementary signs"),
        }
    }
}

/// The proof or refutation backing a verdict.
#[derive(Debug, Clone, PartialEq)]
pub enum Evidence {
    /// Every instance checked, one premise each.
    OmegaProof { checked: Vec<CheckedInstance> },
    /// Concept-level derivation; exception subconcepts were checked and
    /// none contradicts it.
    GenericProof { derivation: GenericDerivation },
    ExistentialWitness {
        witness: Entity,
        basis: WitnessBasis,
    },
    IndividualCounterexample {
        witness: Entity,
        basis: WitnessBasis,
    },
    ConceptualCounterexample {
        concept: ConceptId,
        derivation: GenericDerivation,
    },
    CardinalityComparison {
        satisfying: usize,
        violating: usize,
        unknown: usize,
    },
    DensityEvidence {
        body: DensityResult,
        restriction: Option<DensityResult>,
        /// Relative ratio per checkpoint on the estimated path.
        relative_points: Vec<(u64, f64)>,
        /// Relative density on the exact path.
        relative_exact: Option<Ratio<u64>>,
    },
    EncounterProof { encounters: Vec<Encounter> },
    DualRefutation {
        satisfying: usize,
        violating: usize,
        unknown: usize,
    },
    IncompatibilityRefutation {
        property: PredicateId,
        source: DisjointnessSource,
    },
    /// Both the body and its complement are countably infinite.
    DegenerateCardinality {
        body: Cardinality,
        complement: Cardinality,
    },
    /// Asymmetric cardinality classes decide the comparison outright.
    CardinalityClassComparison {
        body: Cardinality,
        complement: Cardinality,
    },
    /// Explanation for verdicts that carry no proof or refutation.
    Inconclusive { reason: String },
}

/// A three-valued (plus degenerate) verdict together with its evidence.
#[derive(Debug, Clone, PartialEq)]
pub struct Judgment {
    pub verdict: Verdict,
    pub evidence: Evidence,
    pub semantics: SemanticsTag,
    pub notes: Vec<String>,
}

impl Judgment {
    pub fn new(verdict: Verdict, evidence: Evidence, semantics: SemanticsTag) -> Judgment {
        Judgment {
            verdict,
            evidence,
            semantics,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Judgment {
        self.notes.push(note.into());
        self
    }
}

const O_CORNER_NOTE: &str = "the not-all form and the negative existential form (`some ... do \
                             not`) are logically equivalent; the difference is theme and focus, \
                             which is extra-logical";

/// Evaluate a statement against a knowledge base.
///
/// Dispatches on the quantifier kind; a `Nat` restriction routes to the
/// arithmetic domain (bounded witness search for the existential corners,
/// measure comparison for majority). Majority claims follow
/// `cfg.majority_semantics`, defaulting to cardinality over concepts and
/// density over Nat.
pub fn evaluate(s: &Statement, kb: &KnowledgeBase, cfg: &EvalConfig) -> Result<Judgment, EvalError> {
    let report = kb.validate();
    if !report.is_valid() {
        return Err(EvalError::InvalidKnowledgeBase {
            issues: report.issues.len(),
        });
    }
    match &s.restriction {
        Restriction::Concept(concept) => {
            if !kb.has_concept(concept) {
                return Err(EvalError::UnresolvableSymbol(format!(
                    "unknown concept {concept}"
                )));
            }
            let claim = s.body_literal().ok_or_else(|| {
                EvalError::UnresolvableSymbol(
                    "arithmetic formula bodies require the Nat restriction".into(),
                )
            })?;
            match s.quantifier {
                QuantifierKind::EachDistributive => evaluate_distributive(concept, &claim, kb),
                QuantifierKind::EveryGeneric => evaluate_generic(concept, &claim, kb),
                QuantifierKind::Exists => evaluate_exists(concept, &claim, kb),
                QuantifierKind::NoNeg => evaluate_no(concept, &claim, kb),
                QuantifierKind::NotAll => {
                    Ok(evaluate_not_all(concept, &claim, kb)?.with_note(O_CORNER_NOTE))
                }
                QuantifierKind::Majority => {
                    let semantics = cfg
                        .majority_semantics
                        .unwrap_or(MajoritySemantics::Cardinality);
                    match semantics {
                        MajoritySemantics::Cardinality => {
                            majority_by_cardinality(concept, &claim, kb)
                        }
                        MajoritySemantics::Density => {
                            let mut judgment = majority_by_cardinality(concept, &claim, kb)?;
                            judgment.notes.insert(
                                0,
                                "density semantics is unavailable on a finite concept; \
                                 remapped to cardinality"
                                    .into(),
                            );
                            Ok(judgment)
                        }
                        MajoritySemantics::ProofTheoretic => {
                            majority_proof_theoretic(concept, &claim, kb)
                        }
                    }
                }
            }
        }
        Restriction::Nat => {
            let formula = resolve_nat_body(s)?;
            match s.quantifier {
                QuantifierKind::EachDistributive => Err(EvalError::InfiniteRestriction(
                    "the omega rule over all of Nat is not executable; use majority density \
                     semantics or a bounded existential check"
                        .into(),
                )),
                QuantifierKind::EveryGeneric => Err(EvalError::SemanticsUnavailable(
                    "the generic reading needs concept-level axioms and the arithmetic domain \
                     has none"
                        .into(),
                )),
                QuantifierKind::Exists => bounded_exists(&formula, cfg),
                QuantifierKind::NoNeg => bounded_no(&formula, cfg),
                QuantifierKind::NotAll => Ok(bounded_not_all(&formula, cfg)?.with_note(O_CORNER_NOTE)),
                QuantifierKind::Majority => {
                    let semantics = cfg.majority_semantics.unwrap_or(MajoritySemantics::Density);
                    match semantics {
                        MajoritySemantics::Density => majority_by_density(&formula, None, cfg),
                        MajoritySemantics::Cardinality => {
                            Ok(majority_by_cardinality_nat(&formula, cfg.search_bound))
                        }
                        MajoritySemantics::ProofTheoretic => {
                            Err(EvalError::SemanticsUnavailable(
                                "proof-theoretic majority needs a concept restriction with \
                                 declared majority properties"
                                    .into(),
                            ))
                        }
                    }
                }
            }
        }
    }
}

/// The arithmetic set claimed by a Nat-restricted statement, with the body
/// polarity applied. The only named predicate on the domain is `prime`.
fn resolve_nat_body(s: &Statement) -> Result<ArithFormula, EvalError> {
    let base = match &s.body {
        Body::Arith(f) => f.clone(),
        Body::Predicate(p) if p.as_str() == "prime" => ArithFormula::Prime,
        Body::Predicate(p) => {
            return Err(EvalError::UnresolvableSymbol(format!(
                "predicate {p} is not defined on the arithmetic domain (only `prime` is)"
            )))
        }
    };
    Ok(if s.positive {
        base
    } else {
        ArithFormula::not(base)
    })
}

/// An individual's sign for a predicate: explicit fact first, then the
/// generic axiom of its declared concept.
pub(crate) enum ResolvedSign {
    Known { positive: bool, source: SignSource },
    Unknown,
    Ambiguous,
}

pub(crate) fn resolve_sign(
    kb: &KnowledgeBase,
    individual: &IndividualId,
    predicate: &PredicateId,
) -> ResolvedSign {
    if let Some(positive) = kb.fact(individual, predicate) {
        return ResolvedSign::Known {
            positive,
            source: SignSource::Fact,
        };
    }
    match kb.declared_concept_of(individual) {
        Some(concept) => match kb.entails_generic(concept, predicate) {
            Ok(GenericEntailment::Entailed {
                positive,
                derivation,
            }) => ResolvedSign::Known {
                positive,
                source: SignSource::Axiom(derivation),
            },
            Ok(GenericEntailment::Unknown) => ResolvedSign::Unknown,
            Err(KbError::AmbiguousInheritance { .. }) => ResolvedSign::Ambiguous,
            Err(_) => ResolvedSign::Unknown,
        },
        None => ResolvedSign::Unknown,
    }
}

/// Omega-rule evaluation of `each <concept> <claim>`: one premise per
/// instance. Assertion may lean on inherited axiom signs (flagged in the
/// trace); refutation demands an explicit opposite fact. The empty
/// collection asserts vacuously.
pub fn evaluate_distributive(
    concept: &ConceptId,
    claim: &Literal,
    kb: &KnowledgeBase,
) -> Result<Judgment, EvalError> {
    let instances = kb.instances_of(concept).map_err(kb_err)?;
    if instances.is_empty() {
        return Ok(Judgment::new(
            Verdict::Asserted,
            Evidence::OmegaProof { checked: vec![] },
            SemanticsTag::Distributive,
        )
        .with_note(format!(
            "concept {concept} has no declared individuals; the universal claim holds vacuously"
        )));
    }
    for x in &instances {
        if kb.fact(x, &claim.predicate) == Some(!claim.positive) {
            return Ok(Judgment::new(
                Verdict::Refuted,
                Evidence::IndividualCounterexample {
                    witness: Entity::Individual(x.clone()),
                    basis: WitnessBasis::Fact(claim.negated()),
                },
                SemanticsTag::Distributive,
            ));
        }
    }
    let mut checked = Vec::new();
    let mut notes = Vec::new();
    let mut blocker: Option<String> = None;
    for x in &instances {
        match resolve_sign(kb, x, &claim.predicate) {
            ResolvedSign::Known { positive, source } if positive == claim.positive => {
                if let SignSource::Axiom(derivation) = &source {
                    notes.push(format!("{x}: no explicit fact; sign inherited from {derivation}"));
                }
                checked.push(CheckedInstance {
                    individual: x.clone(),
                    literal: claim.clone(),
                    source,
                });
            }
            ResolvedSign::Known { .. } => {
                blocker.get_or_insert(format!(
                    "instance {x} inherits the opposite sign generically but has no explicit \
                     fact, which blocks assertion without refuting"
                ));
            }
            ResolvedSign::Unknown => {
                blocker.get_or_insert(format!(
                    "no known fact or axiom settles {} for instance {x}",
                    claim.predicate
                ));
            }
            ResolvedSign::Ambiguous => {
                notes.push(format!(
                    "warning: ambiguous inheritance for {x}; treated as unknown"
                ));
                blocker.get_or_insert(format!(
                    "inheritance for instance {x} is ambiguous, so its sign is unknown"
                ));
            }
        }
    }
    let mut judgment = match blocker {
        Some(reason) => Judgment::new(
            Verdict::Undetermined,
            Evidence::Inconclusive { reason },
            SemanticsTag::Distributive,
        ),
        None => Judgment::new(
            Verdict::Asserted,
            Evidence::OmegaProof { checked },
            SemanticsTag::Distributive,
        ),
    };
    judgment.notes.extend(notes);
    Ok(judgment)
}

/// Generic evaluation of `every <concept> <claim>`: derive the sign of the
/// generic element, then search for refutations. A subconcept entailing
/// the opposite sign is a conceptual refutation and outranks an individual
/// counterexample in the primary evidence slot (both are reported).
pub fn evaluate_generic(
    concept: &ConceptId,
    claim: &Literal,
    kb: &KnowledgeBase,
) -> Result<Judgment, EvalError> {
    let entailment = match kb.entails_generic(concept, &claim.predicate) {
        Ok(e) => e,
        Err(KbError::AmbiguousInheritance {
            positive_source,
            negative_source,
            ..
        }) => {
            return Ok(Judgment::new(
                Verdict::Undetermined,
                Evidence::Inconclusive {
                    reason: format!(
                        "ambiguous inheritance: {positive_source} entails + while \
                         {negative_source} entails - at equal distance"
                    ),
                },
                SemanticsTag::Generic,
            )
            .with_note("warning: ambiguous inheritance treated as unknown"))
        }
        Err(e) => return Err(kb_err(e)),
    };
    let (positive, derivation) = match entailment {
        GenericEntailment::Unknown => {
            return Ok(Judgment::new(
                Verdict::Undetermined,
                Evidence::Inconclusive {
                    reason: format!(
                        "no generic axiom for {} is reachable from {concept}",
                        claim.predicate
                    ),
                },
                SemanticsTag::Generic,
            ))
        }
        GenericEntailment::Entailed {
            positive,
            derivation,
        } => (positive, derivation),
    };
    if positive != claim.positive {
        // The generic element of the concept itself carries the opposite sign.
        return Ok(Judgment::new(
            Verdict::Refuted,
            Evidence::ConceptualCounterexample {
                concept: concept.clone(),
                derivation,
            },
            SemanticsTag::Generic,
        ));
    }
    let exceptions = kb
        .exceptions_to_claim(concept, &claim.predicate, claim.positive)
        .map_err(kb_err)?;
    let individual_counterexample = kb
        .instances_of(concept)
        .map_err(kb_err)?
        .into_iter()
        .find(|x| kb.fact(x, &claim.predicate) == Some(!claim.positive));

    if let Some((exception, exception_derivation)) = exceptions.first() {
        let mut judgment = Judgment::new(
            Verdict::Refuted,
            Evidence::ConceptualCounterexample {
                concept: exception.clone(),
                derivation: exception_derivation.clone(),
            },
            SemanticsTag::Generic,
        );
        judgment.notes.push(format!("assertion source: {derivation}"));
        if let Some(x) = &individual_counterexample {
            judgment
                .notes
                .push(format!("individual refutation: {x} (fact {})", claim.negated()));
        }
        if kb.instances_of(exception).map_err(kb_err)?.is_empty() {
            judgment.notes.push(format!(
                "exception concept {exception} has no declared individuals; the conceptual \
                 refutation applies regardless"
            ));
        }
        judgment.notes.push(
            "conceptual refutation is reported as the primary evidence (presentation choice)"
                .into(),
        );
        return Ok(judgment);
    }
    if let Some(x) = individual_counterexample {
        return Ok(Judgment::new(
            Verdict::Refuted,
            Evidence::IndividualCounterexample {
                witness: Entity::Individual(x),
                basis: WitnessBasis::Fact(claim.negated()),
            },
            SemanticsTag::Generic,
        )
        .with_note(format!("assertion source: {derivation}")));
    }
    Ok(Judgment::new(
        Verdict::Asserted,
        Evidence::GenericProof { derivation },
        SemanticsTag::Generic,
    ))
}

/// `some <concept> <claim>`: asserted by the first instance with a known
/// matching fact, refuted only when every instance has a known opposite
/// fact (vacuously on the empty collection).
pub fn evaluate_exists(
    concept: &ConceptId,
    claim: &Literal,
    kb: &KnowledgeBase,
) -> Result<Judgment, EvalError> {
    let instances = kb.instances_of(concept).map_err(kb_err)?;
    if let Some(x) = instances
        .iter()
        .find(|x| kb.fact(x, &claim.predicate) == Some(claim.positive))
    {
        return Ok(Judgment::new(
            Verdict::Asserted,
            Evidence::ExistentialWitness {
                witness: Entity::Individual(x.clone()),
                basis: WitnessBasis::Fact(claim.clone()),
            },
            SemanticsTag::Existential,
        ));
    }
    if instances
        .iter()
        .all(|x| kb.fact(x, &claim.predicate) == Some(!claim.positive))
    {
        let checked = instances
            .iter()
            .map(|x| CheckedInstance {
                individual: x.clone(),
                literal: claim.negated(),
                source: SignSource::Fact,
            })
            .collect();
        let mut judgment = Judgment::new(
            Verdict::Refuted,
            Evidence::OmegaProof { checked },
            SemanticsTag::Existential,
        );
        if instances.is_empty() {
            judgment.notes.push(format!(
                "concept {concept} has no declared individuals; no witness exists"
            ));
        }
        return Ok(judgment);
    }
    Ok(Judgment::new(
        Verdict::Undetermined,
        Evidence::Inconclusive {
            reason: format!(
                "no instance of {concept} has a known fact {claim}, and open-world absence \
                 refutes nothing"
            ),
        },
        SemanticsTag::Existential,
    ))
}

/// `no <concept> <claim>`: asserted when every instance has a known
/// opposite fact, refuted by the first instance known to satisfy the claim.
pub fn evaluate_no(
    concept: &ConceptId,
    claim: &Literal,
    kb: &KnowledgeBase,
) -> Result<Judgment, EvalError> {
    let instances = kb.instances_of(concept).map_err(kb_err)?;
    if let Some(x) = instances
        .iter()
        .find(|x| kb.fact(x, &claim.predicate) == Some(claim.positive))
    {
        return Ok(Judgment::new(
            Verdict::Refuted,
            Evidence::IndividualCounterexample {
                witness: Entity::Individual(x.clone()),
                basis: WitnessBasis::Fact(claim.clone()),
            },
            SemanticsTag::NegativeUniversal,
        ));
    }
    if instances
        .iter()
        .all(|x| kb.fact(x, &claim.predicate) == Some(!claim.positive))
    {
        let checked = instances
            .iter()
            .map(|x| CheckedInstance {
                individual: x.clone(),
                literal: claim.negated(),
                source: SignSource::Fact,
            })
            .collect();
        let mut judgment = Judgment::new(
            Verdict::Asserted,
            Evidence::OmegaProof { checked },
            SemanticsTag::NegativeUniversal,
        );
        if instances.is_empty() {
            judgment.notes.push(format!(
                "concept {concept} has no declared individuals; the negative universal holds \
                 vacuously"
            ));
        }
        return Ok(judgment);
    }
    Ok(Judgment::new(
        Verdict::Undetermined,
        Evidence::Inconclusive {
            reason: format!(
                "some instance of {concept} has no known fact for {}, which blocks both \
                 assertion and refutation",
                claim.predicate
            ),
        },
        SemanticsTag::NegativeUniversal,
    ))
}

/// `not_all <concept> <claim>`: the O corner. Asserted by one instance
/// with a known opposite fact, refuted only when every instance is known
/// to satisfy the claim (vacuously on the empty collection).
pub fn evaluate_not_all(
    concept: &ConceptId,
    claim: &Literal,
    kb: &KnowledgeBase,
) -> Result<Judgment, EvalError> {
    let instances = kb.instances_of(concept).map_err(kb_err)?;
    if let Some(x) = instances
        .iter()
        .find(|x| kb.fact(x, &claim.predicate) == Some(!claim.positive))
    {
        return Ok(Judgment::new(
            Verdict::Asserted,
            Evidence::IndividualCounterexample {
                witness: Entity::Individual(x.clone()),
                basis: WitnessBasis::Fact(claim.negated()),
            },
            SemanticsTag::NegativeExistential,
        ));
    }
    if instances
        .iter()
        .all(|x| kb.fact(x, &claim.predicate) == Some(claim.positive))
    {
        let checked = instances
            .iter()
            .map(|x| CheckedInstance {
                individual: x.clone(),
                literal: claim.clone(),
                source: SignSource::Fact,
            })
            .collect();
        let mut judgment = Judgment::new(
            Verdict::Refuted,
            Evidence::OmegaProof { checked },
            SemanticsTag::NegativeExistential,
        );
        if instances.is_empty() {
            judgment.notes.push(format!(
                "concept {concept} has no declared individuals; no counterexample exists"
            ));
        }
        return Ok(judgment);
    }
    Ok(Judgment::new(
        Verdict::Undetermined,
        Evidence::Inconclusive {
            reason: format!(
                "no instance of {concept} is known to violate {}, and some signs are unknown",
                claim.predicate
            ),
        },
        SemanticsTag::NegativeExistential,
    ))
}

/// First n in [1, bound] satisfying the formula.
fn bounded_search(formula: &ArithFormula, bound: u64, sieve_cap: u64) -> Option<u64> {
    let sieve = if formula.contains_prime() && bound <= sieve_cap && bound > 1_000 {
        Some(Sieve::new(bound))
    } else {
        None
    };
    (1..=bound).find(|&n| match &sieve {
        Some(s) => formula.eval_with(n, &|m| s.is_prime(m)),
        None => formula.eval(n),
    })
}

fn bounded_exists(formula: &ArithFormula, cfg: &EvalConfig) -> Result<Judgment, EvalError> {
    match bounded_search(formula, cfg.search_bound, cfg.sieve_cap) {
        Some(n) => Ok(Judgment::new(
            Verdict::Asserted,
            Evidence::ExistentialWitness {
                witness: Entity::Number(n),
                basis: WitnessBasis::Formula {
                    formula: formula.clone(),
                    holds: true,
                },
            },
            SemanticsTag::Existential,
        )),
        None => Ok(Judgment::new(
            Verdict::Undetermined,
            Evidence::Inconclusive {
                reason: format!(
                    "no witness at or below the search bound {}; a bounded search never \
                     refutes an existential over Nat",
                    cfg.search_bound
                ),
            },
            SemanticsTag::Existential,
        )),
    }
}

fn bounded_no(formula: &ArithFormula, cfg: &EvalConfig) -> Result<Judgment, EvalError> {
    match bounded_search(formula, cfg.search_bound, cfg.sieve_cap) {
        Some(n) => Ok(Judgment::new(
            Verdict::Refuted,
            Evidence::IndividualCounterexample {
                witness: Entity::Number(n),
                basis: WitnessBasis::Formula {
                    formula: formula.clone(),
                    holds: true,
                },
            },
            SemanticsTag::NegativeUniversal,
        )),
        None => Ok(Judgment::new(
            Verdict::Undetermined,
            Evidence::Inconclusive {
                reason: format!(
                    "no counterexample at or below the search bound {}; the negative \
                     universal over Nat cannot be verified by search",
                    cfg.search_bound
                ),
            },
            SemanticsTag::NegativeUniversal,
        )),
    }
}

fn bounded_not_all(formula: &ArithFormula, cfg: &EvalConfig) -> Result<Judgment, EvalError> {
    let complement = ArithFormula::not(formula.clone());
    match bounded_search(&complement, cfg.search_bound, cfg.sieve_cap) {
        Some(n) => Ok(Judgment::new(
            Verdict::Asserted,
            Evidence::IndividualCounterexample {
                witness: Entity::Number(n),
                basis: WitnessBasis::Formula {
                    formula: formula.clone(),
                    holds: false,
                },
            },
            SemanticsTag::NegativeExistential,
        )),
        None => Ok(Judgment::new(
            Verdict::Undetermined,
            Evidence::Inconclusive {
                reason: format!(
                    "every n at or below the search bound {} satisfies the body; the \
                     universal over Nat still cannot be asserted by search",
                    cfg.search_bound
                ),
            },
            SemanticsTag::NegativeExistential,
        )),
    }
}
