//! Knowledge bases: a concept taxonomy with generic axioms, individuals
//! with three-valued facts, majority-property declarations and predicate
//! disjointness.
//!
//! Facts are open-world: an absent fact means unknown, never false. Generic
//! axioms are defeasible concept-level claims inherited along subsumption
//! with a most-specific-wins override, which is what lets a subconcept
//! contradict its ancestor without invalidating the knowledge base.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::logic::{ConceptId, IndividualId, Literal, PredicateId};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum KbError {
    #[error("unknown concept: {0}")]
    UnknownConcept(ConceptId),
    #[error(
        "ambiguous inheritance for {predicate} at {concept}: {positive_source} says + while {negative_source} says - at equal distance"
    )]
    AmbiguousInheritance {
        concept: ConceptId,
        predicate: PredicateId,
        positive_source: ConceptId,
        negative_source: ConceptId,
    },
}

/// A concept-level signed claim: the generic element of `concept` has
/// `predicate` with the given sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axiom {
    pub concept: ConceptId,
    pub predicate: PredicateId,
    pub positive: bool,
}

/// An explicit signed fact about an individual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub individual: IndividualId,
    pub predicate: PredicateId,
    pub positive: bool,
}

/// How a concept-level sign was derived: the axiom-bearing ancestor first,
/// then the subsumption path down to the queried concept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericDerivation {
    pub concept: ConceptId,
    pub predicate: PredicateId,
    pub positive: bool,
    /// Axiom bearer first, queried concept last. A single element means
    /// the concept carries the axiom itself.
    pub chain: Vec<ConceptId>,
}

impl GenericDerivation {
    pub fn bearer(&self) -> &ConceptId {
        &self.chain[0]
    }
}

impl fmt::Display for GenericDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.positive { "+" } else { "-" };
        write!(f, "axiom {sign}{} at {}", self.predicate, self.bearer())?;
        if self.chain.len() > 1 {
            write!(f, " via ")?;
            for (i, c) in self.chain.iter().enumerate() {
                if i > 0 {
                    write!(f, " > ")?;
                }
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

/// Result of a generic entailment query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenericEntailment {
    Entailed {
        positive: bool,
        derivation: GenericDerivation,
    },
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    SubsumptionCycle { concept: ConceptId },
    UnknownConceptRef { concept: ConceptId, context: String },
    SameConceptContradiction { concept: ConceptId, predicate: PredicateId },
    UnknownIndividualRef { individual: IndividualId },
    ContradictoryFacts { individual: IndividualId, predicate: PredicateId },
    DuplicateIndividual { individual: IndividualId },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::SubsumptionCycle { concept } => {
                write!(f, "subsumption cycle through concept {concept}")
            }
            ValidationIssue::UnknownConceptRef { concept, context } => {
                write!(f, "unknown concept {concept} referenced by {context}")
            }
            ValidationIssue::SameConceptContradiction { concept, predicate } => {
                write!(
                    f,
                    "concept {concept} carries contradictory axioms for {predicate}"
                )
            }
            ValidationIssue::UnknownIndividualRef { individual } => {
                write!(f, "fact about undeclared individual {individual}")
            }
            ValidationIssue::ContradictoryFacts { individual, predicate } => {
                write!(
                    f,
                    "individual {individual} has contradictory facts for {predicate}"
                )
            }
            ValidationIssue::DuplicateIndividual { individual } => {
                write!(f, "individual {individual} declared more than once")
            }
        }
    }
}

/// Outcome of validating a knowledge base. A base with any issue is
/// rejected by every evaluator.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

/// An immutable-after-construction knowledge base. All collections keep
/// declaration order, which fixes witness choice and trace output.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct KnowledgeBase {
    concepts: Vec<ConceptId>,
    /// (child, parent) subsumption edges in declaration order.
    parent_edges: Vec<(ConceptId, ConceptId)>,
    axioms: Vec<Axiom>,
    individuals: Vec<(IndividualId, ConceptId)>,
    facts: Vec<Fact>,
    majority_props: Vec<(ConceptId, Vec<PredicateId>)>,
    disjoint_pairs: Vec<(PredicateId, PredicateId)>,
}

impl KnowledgeBase {
    pub fn new() -> KnowledgeBase {
        KnowledgeBase::default()
    }

    pub fn declare_concept(&mut self, concept: impl Into<String>) -> ConceptId {
        let concept = ConceptId::new(concept);
        if !self.concepts.contains(&concept) {
            self.concepts.push(concept.clone());
        }
        concept
    }

    pub fn declare_subconcept(
        &mut self,
        concept: impl Into<String>,
        parent: impl Into<String>,
    ) -> ConceptId {
        let child = self.declare_concept(concept);
        let parent = ConceptId::new(parent);
        self.parent_edges.push((child.clone(), parent));
        child
    }

    pub fn add_axiom(
        &mut self,
        concept: impl Into<String>,
        predicate: impl Into<String>,
        positive: bool,
    ) {
        self.axioms.push(Axiom {
            concept: ConceptId::new(concept),
            predicate: PredicateId::new(predicate),
            positive,
        });
    }

    pub fn add_individual(&mut self, individual: impl Into<String>, concept: impl Into<String>) {
        self.individuals
            .push((IndividualId::new(individual), ConceptId::new(concept)));
    }

    pub fn add_fact(
        &mut self,
        individual: impl Into<String>,
        predicate: impl Into<String>,
        positive: bool,
    ) {
        self.facts.push(Fact {
            individual: IndividualId::new(individual),
            predicate: PredicateId::new(predicate),
            positive,
        });
    }

    pub fn declare_majority_props(
        &mut self,
        concept: impl Into<String>,
        predicates: Vec<PredicateId>,
    ) {
        self.majority_props
            .push((ConceptId::new(concept), predicates));
    }

    pub fn declare_disjoint(&mut self, p: impl Into<String>, q: impl Into<String>) {
        self.disjoint_pairs
            .push((PredicateId::new(p), PredicateId::new(q)));
    }

    pub fn concepts(&self) -> &[ConceptId] {
        &self.concepts
    }

    pub fn individuals(&self) -> &[(IndividualId, ConceptId)] {
        &self.individuals
    }

    pub fn has_concept(&self, concept: &ConceptId) -> bool {
        self.concepts.contains(concept)
    }

    pub fn declared_concept_of(&self, individual: &IndividualId) -> Option<&ConceptId> {
        self.individuals
            .iter()
            .find(|(x, _)| x == individual)
            .map(|(_, c)| c)
    }

    /// The explicit fact sign for (individual, predicate), if declared.
    /// A later declaration overrides an earlier one.
    pub fn fact(&self, individual: &IndividualId, predicate: &PredicateId) -> Option<bool> {
        self.facts
            .iter()
            .rev()
            .find(|f| &f.individual == individual && &f.predicate == predicate)
            .map(|f| f.positive)
    }

    fn parents_of<'a>(&'a self, concept: &'a ConceptId) -> impl Iterator<Item = &'a ConceptId> {
        self.parent_edges
            .iter()
            .filter(move |(child, _)| child == concept)
            .map(|(_, parent)| parent)
    }

    fn direct_axiom(&self, concept: &ConceptId, predicate: &PredicateId) -> Vec<&Axiom> {
        self.axioms
            .iter()
            .filter(|a| &a.concept == concept && &a.predicate == predicate)
            .collect()
    }

    /// Structural checks: cycles, dangling concept references, directly
    /// contradictory axioms, facts about undeclared individuals and
    /// contradictory or duplicated declarations.
    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();

        for (child, parent) in &self.parent_edges {
            if !self.has_concept(parent) {
                issues.push(ValidationIssue::UnknownConceptRef {
                    concept: parent.clone(),
                    context: format!("subsumption {child} <: {parent}"),
                });
            }
        }
        for axiom in &self.axioms {
            if !self.has_concept(&axiom.concept) {
                issues.push(ValidationIssue::UnknownConceptRef {
                    concept: axiom.concept.clone(),
                    context: format!("axiom about {}", axiom.predicate),
                });
            }
        }
        for (individual, concept) in &self.individuals {
            if !self.has_concept(concept) {
                issues.push(ValidationIssue::UnknownConceptRef {
                    concept: concept.clone(),
                    context: format!("individual {individual}"),
                });
            }
        }
        for (concept, _) in &self.majority_props {
            if !self.has_concept(concept) {
                issues.push(ValidationIssue::UnknownConceptRef {
                    concept: concept.clone(),
                    context: "majority_props declaration".into(),
                });
            }
        }

        // Cycle check over edges between declared concepts.
        for concept in &self.concepts {
            if self.reaches(concept, concept, true) {
                issues.push(ValidationIssue::SubsumptionCycle {
                    concept: concept.clone(),
                });
            }
        }

        let mut seen_axioms: HashMap<(&ConceptId, &PredicateId), bool> = HashMap::new();
        let mut reported: HashSet<(&ConceptId, &PredicateId)> = HashSet::new();
        for axiom in &self.axioms {
            let key = (&axiom.concept, &axiom.predicate);
            if let Some(sign) = seen_axioms.get(&key) {
                if *sign != axiom.positive && reported.insert(key) {
                    issues.push(ValidationIssue::SameConceptContradiction {
                        concept: axiom.concept.clone(),
                        predicate: axiom.predicate.clone(),
                    });
                }
            } else {
                seen_axioms.insert(key, axiom.positive);
            }
        }

        let declared: HashSet<&IndividualId> =
            self.individuals.iter().map(|(x, _)| x).collect();
        for fact in &self.facts {
            if !declared.contains(&fact.individual) {
                issues.push(ValidationIssue::UnknownIndividualRef {
                    individual: fact.individual.clone(),
                });
            }
        }

        let mut seen_facts: HashMap<(&IndividualId, &PredicateId), bool> = HashMap::new();
        let mut fact_reported: HashSet<(&IndividualId, &PredicateId)> = HashSet::new();
        for fact in &self.facts {
            let key = (&fact.individual, &fact.predicate);
            if let Some(sign) = seen_facts.get(&key) {
                if *sign != fact.positive && fact_reported.insert(key) {
                    issues.push(ValidationIssue::ContradictoryFacts {
                        individual: fact.individual.clone(),
                        predicate: fact.predicate.clone(),
                    });
                }
            } else {
                seen_facts.insert(key, fact.positive);
            }
        }

        let mut seen_individuals: HashSet<&IndividualId> = HashSet::new();
        for (individual, _) in &self.individuals {
            if !seen_individuals.insert(individual) {
                issues.push(ValidationIssue::DuplicateIndividual {
                    individual: individual.clone(),
                });
            }
        }

        ValidationReport { issues }
    }

    /// Whether `start` reaches `target` through one or more parent edges.
    fn reaches(&self, start: &ConceptId, target: &ConceptId, strict: bool) -> bool {
        if !strict && start == target {
            return true;
        }
        let mut queue: VecDeque<&ConceptId> = self.parents_of(start).collect();
        let mut visited: HashSet<&ConceptId> = HashSet::new();
        while let Some(c) = queue.pop_front() {
            if c == target {
                return true;
            }
            if visited.insert(c) {
                queue.extend(self.parents_of(c));
            }
        }
        false
    }

    /// Reflexive-transitive subsumption: does `descendant` reach `ancestor`?
    pub fn subsumes(&self, ancestor: &ConceptId, descendant: &ConceptId) -> Result<bool, KbError> {
        if !self.has_concept(ancestor) {
            return Err(KbError::UnknownConcept(ancestor.clone()));
        }
        if !self.has_concept(descendant) {
            return Err(KbError::UnknownConcept(descendant.clone()));
        }
        Ok(self.reaches(descendant, ancestor, false))
    }

    /// All individuals whose declared concept is subsumed by `concept`,
    /// in declaration order.
    pub fn instances_of(&self, concept: &ConceptId) -> Result<Vec<IndividualId>, KbError> {
        if !self.has_concept(concept) {
            return Err(KbError::UnknownConcept(concept.clone()));
        }
        Ok(self
            .individuals
            .iter()
            .filter(|(_, c)| self.has_concept(c) && self.reaches(c, concept, false))
            .map(|(x, _)| x.clone())
            .collect())
    }

    /// The sign of the most specific axiom for `predicate` on `concept` or
    /// its ancestors. Specificity is the number of subsumption steps from
    /// `concept`, so a concept's own axiom always beats anything inherited.
    /// Opposite signs at equal minimal distance are ambiguous.
    pub fn entails_generic(
        &self,
        concept: &ConceptId,
        predicate: &PredicateId,
    ) -> Result<GenericEntailment, KbError> {
        if !self.has_concept(concept) {
            return Err(KbError::UnknownConcept(concept.clone()));
        }
        // Breadth-first over ancestors in declaration order; track one
        // predecessor per node to rebuild the derivation chain.
        let mut level: Vec<ConceptId> = vec![concept.clone()];
        let mut visited: HashSet<ConceptId> = level.iter().cloned().collect();
        let mut predecessor: HashMap<ConceptId, ConceptId> = HashMap::new();
        while !level.is_empty() {
            let mut found: Vec<(&ConceptId, bool)> = Vec::new();
            for node in &level {
                for axiom in self.direct_axiom(node, predicate) {
                    found.push((node, axiom.positive));
                }
            }
            if !found.is_empty() {
                let (first, sign) = found[0];
                if let Some((neg, _)) = found.iter().find(|(_, s)| *s != sign) {
                    let (pos_src, neg_src) = if sign {
                        (first.clone(), (*neg).clone())
                    } else {
                        ((*neg).clone(), first.clone())
                    };
                    return Err(KbError::AmbiguousInheritance {
                        concept: concept.clone(),
                        predicate: predicate.clone(),
                        positive_source: pos_src,
                        negative_source: neg_src,
                    });
                }
                let mut chain = vec![first.clone()];
                let mut cursor = first;
                while let Some(prev) = predecessor.get(cursor) {
                    chain.push(prev.clone());
                    cursor = prev;
                }
                return Ok(GenericEntailment::Entailed {
                    positive: sign,
                    derivation: GenericDerivation {
                        concept: concept.clone(),
                        predicate: predicate.clone(),
                        positive: sign,
                        chain,
                    },
                });
            }
            let mut next: Vec<ConceptId> = Vec::new();
            for node in &level {
                for parent in self.parents_of(node) {
                    if self.has_concept(parent) && visited.insert(parent.clone()) {
                        predecessor.insert(parent.clone(), node.clone());
                        next.push(parent.clone());
                    }
                }
            }
            level = next;
        }
        Ok(GenericEntailment::Unknown)
    }

    /// Strict subconcepts of `concept` whose own most specific sign for
    /// `predicate` is negative, in concept declaration order. These are the
    /// conceptual refutations of the positive generic claim.
    pub fn exception_subconcepts(
        &self,
        concept: &ConceptId,
        predicate: &PredicateId,
    ) -> Result<Vec<(ConceptId, GenericDerivation)>, KbError> {
        self.exceptions_to_claim(concept, predicate, true)
    }

    /// Strict subconcepts entailing the opposite of a signed claim.
    pub fn exceptions_to_claim(
        &self,
        concept: &ConceptId,
        predicate: &PredicateId,
        claim_positive: bool,
    ) -> Result<Vec<(ConceptId, GenericDerivation)>, KbError> {
        if !self.has_concept(concept) {
            return Err(KbError::UnknownConcept(concept.clone()));
        }
        let mut exceptions = Vec::new();
        for candidate in &self.concepts {
            if candidate == concept || !self.reaches(candidate, concept, false) {
                continue;
            }
            // Ambiguous subconcepts contribute no refutation.
            if let Ok(GenericEntailment::Entailed {
                positive,
                derivation,
            }) = self.entails_generic(candidate, predicate)
            {
                if positive != claim_positive {
                    exceptions.push((candidate.clone(), derivation));
                }
            }
        }
        Ok(exceptions)
    }

    /// Whether two signed predicates can never hold together: either they
    /// are the same predicate with opposite signs, or both are positive and
    /// the pair is declared disjoint.
    pub fn entailed_disjoint(&self, p: &Literal, q: &Literal) -> bool {
        if p.predicate == q.predicate {
            return p.positive != q.positive;
        }
        p.positive
            && q.positive
            && self.disjoint_pairs.iter().any(|(a, b)| {
                (a == &p.predicate && b == &q.predicate)
                    || (a == &q.predicate && b == &p.predicate)
            })
    }

    /// The declared majority properties of `concept` itself, in declaration
    /// order. Declarations are not inherited from ancestors.
    pub fn majority_properties(&self, concept: &ConceptId) -> Result<Vec<PredicateId>, KbError> {
        if !self.has_concept(concept) {
            return Err(KbError::UnknownConcept(concept.clone()));
        }
        Ok(self
            .majority_props
            .iter()
            .filter(|(c, _)| c == concept)
            .flat_map(|(_, ps)| ps.iter().cloned())
            .collect())
    }
}

/// The taxonomy and facts of the reasoning-about-dogs scenario: dogs may
/// bite as a rule, basset-hounds are dogs that do not, and Rex is a dog
/// with an explicit fact that he does not.
#[cfg(test)]
pub(crate) fn dog_kb() -> KnowledgeBase {
    let mut kb = KnowledgeBase::new();
    kb.declare_concept("Dog");
    kb.declare_subconcept("BassetHound", "Dog");
    kb.add_axiom("Dog", "may_bite", true);
    kb.add_axiom("BassetHound", "may_bite", false);
    kb.add_individual("Rex", "Dog");
    kb.add_fact("Rex", "may_bite", false);
    kb
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cid(s: &str) -> ConceptId {
        ConceptId::new(s)
    }

    fn pid(s: &str) -> PredicateId {
        PredicateId::new(s)
    }

    #[test]
    fn dog_kb_is_valid() {
        assert!(dog_kb().validate().is_valid());
    }

    #[test]
    fn direct_axiom_contradiction_is_rejected() {
        let mut kb = KnowledgeBase::new();
        kb.declare_concept("Dog");
        kb.add_axiom("Dog", "may_bite", true);
        kb.add_axiom("Dog", "may_bite", false);
        let report = kb.validate();
        assert!(report.issues.contains(&ValidationIssue::SameConceptContradiction {
            concept: cid("Dog"),
            predicate: pid("may_bite"),
        }));
    }

    #[test]
    fn two_cycle_is_rejected() {
        let mut kb = KnowledgeBase::new();
        kb.declare_concept("D");
        kb.declare_subconcept("C", "D");
        kb.declare_subconcept("D", "C");
        let report = kb.validate();
        assert!(report
            .issues
            .iter()
            .any(|i| matches!(i, ValidationIssue::SubsumptionCycle { .. })));
    }

    #[test]
    fn fact_about_unknown_individual_is_rejected() {
        let mut kb = KnowledgeBase::new();
        kb.declare_concept("Dog");
        kb.add_fact("Ghost", "may_bite", true);
        let report = kb.validate();
        assert!(report.issues.contains(&ValidationIssue::UnknownIndividualRef {
            individual: IndividualId::new("Ghost"),
        }));
    }

    #[test]
    fn subsumption_closure() {
        let kb = dog_kb();
        assert!(kb.subsumes(&cid("Dog"), &cid("BassetHound")).unwrap());
        assert!(kb.subsumes(&cid("Dog"), &cid("Dog")).unwrap());
        assert!(!kb.subsumes(&cid("BassetHound"), &cid("Dog")).unwrap());
        assert_eq!(
            kb.subsumes(&cid("Cat"), &cid("Dog")).unwrap_err(),
            KbError::UnknownConcept(cid("Cat"))
        );
    }

    #[test]
    fn instances_follow_subsumption() {
        let mut kb = KnowledgeBase::new();
        kb.declare_concept("Animal");
        kb.declare_subconcept("Dog", "Animal");
        kb.add_individual("Rex", "Dog");
        assert_eq!(
            kb.instances_of(&cid("Animal")).unwrap(),
            vec![IndividualId::new("Rex")]
        );
        assert_eq!(
            kb.instances_of(&cid("Dog")).unwrap(),
            vec![IndividualId::new("Rex")]
        );

        let mut empty = KnowledgeBase::new();
        empty.declare_concept("C");
        assert!(empty.instances_of(&cid("C")).unwrap().is_empty());
    }

    #[test]
    fn generic_entailment_with_override() {
        let kb = dog_kb();
        match kb.entails_generic(&cid("Dog"), &pid("may_bite")).unwrap() {
            GenericEntailment::Entailed { positive, derivation } => {
                assert!(positive);
                assert_eq!(derivation.chain, vec![cid("Dog")]);
            }
            other => panic!("expected entailment, got {other:?}"),
        }
        // The basset-hound's own axiom beats the inherited one.
        match kb
            .entails_generic(&cid("BassetHound"), &pid("may_bite"))
            .unwrap()
        {
            GenericEntailment::Entailed { positive, derivation } => {
                assert!(!positive);
                assert_eq!(derivation.chain, vec![cid("BassetHound")]);
            }
            other => panic!("expected entailment, got {other:?}"),
        }
        assert_eq!(
            kb.entails_generic(&cid("Dog"), &pid("barks")).unwrap(),
            GenericEntailment::Unknown
        );
    }

    #[test]
    fn inherited_chain_is_reported() {
        let mut kb = KnowledgeBase::new();
        kb.declare_concept("Animal");
        kb.declare_subconcept("Dog", "Animal");
        kb.declare_subconcept("Puppy", "Dog");
        kb.add_axiom("Animal", "breathes", true);
        match kb.entails_generic(&cid("Puppy"), &pid("breathes")).unwrap() {
            GenericEntailment::Entailed { derivation, .. } => {
                assert_eq!(
                    derivation.chain,
                    vec![cid("Animal"), cid("Dog"), cid("Puppy")]
                );
            }
            other => panic!("expected entailment, got {other:?}"),
        }
    }

    #[test]
    fn equal_distance_conflict_is_ambiguous() {
        let mut kb = KnowledgeBase::new();
        kb.declare_concept("Pet");
        kb.declare_concept("Hunter");
        kb.declare_subconcept("Dog", "Pet");
        kb.declare_subconcept("Dog", "Hunter");
        kb.add_axiom("Pet", "tame", true);
        kb.add_axiom("Hunter", "tame", false);
        assert!(matches!(
            kb.entails_generic(&cid("Dog"), &pid("tame")),
            Err(KbError::AmbiguousInheritance { .. })
        ));
    }

    #[test]
    fn exception_subconcepts_find_the_basset_hound() {
        let kb = dog_kb();
        let exceptions = kb
            .exception_subconcepts(&cid("Dog"), &pid("may_bite"))
            .unwrap();
        assert_eq!(exceptions.len(), 1);
        assert_eq!(exceptions[0].0, cid("BassetHound"));

        assert!(kb
            .exception_subconcepts(&cid("BassetHound"), &pid("may_bite"))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn diamond_with_one_negative_leaf() {
        let mut kb = KnowledgeBase::new();
        kb.declare_concept("Top");
        kb.declare_subconcept("Left", "Top");
        kb.declare_subconcept("Right", "Top");
        kb.declare_subconcept("Bottom", "Left");
        kb.declare_subconcept("Bottom", "Right");
        kb.add_axiom("Top", "p", true);
        kb.add_axiom("Bottom", "p", false);
        let exceptions = kb.exception_subconcepts(&cid("Top"), &pid("p")).unwrap();
        assert_eq!(exceptions.len(), 1);
        assert_eq!(exceptions[0].0, cid("Bottom"));
    }

    #[test]
    fn disjointness_queries() {
        let mut kb = KnowledgeBase::new();
        kb.declare_disjoint("prime_like", "composite_like");
        assert!(kb.entailed_disjoint(
            &Literal::positive("prime_like"),
            &Literal::positive("composite_like")
        ));
        assert!(kb.entailed_disjoint(&Literal::positive("p"), &Literal::negative("p")));
        assert!(!kb.entailed_disjoint(&Literal::positive("p"), &Literal::positive("q")));
    }

    #[test]
    fn majority_properties_are_not_inherited() {
        let mut kb = KnowledgeBase::new();
        kb.declare_concept("Number");
        kb.declare_subconcept("SmallNumber", "Number");
        kb.declare_majority_props("Number", vec![pid("b1"), pid("b2")]);
        assert_eq!(
            kb.majority_properties(&cid("Number")).unwrap(),
            vec![pid("b1"), pid("b2")]
        );
        assert!(kb
            .majority_properties(&cid("SmallNumber"))
            .unwrap()
            .is_empty());
    }
}
