//! A judgment engine for quantified statements.
//!
//! Statements like `every Dog may_bite`, `not_all Laureate deserves_award`
//! or `majority Nat !prime` are evaluated against a knowledge base (a
//! concept taxonomy with generic axioms, individuals and three-valued
//! facts) or against the built-in arithmetic domain, under competing
//! semantics:
//!
//! - distributive universals follow the omega rule, one premise per
//!   individual;
//! - generic universals are derived at the concept level and can be
//!   refuted by an individual counterexample or by a whole subconcept;
//! - majority claims are judged by cardinality comparison, by natural
//!   density against the one-half threshold, or by proof-theoretic
//!   encounter/dual/incompatibility rules over declared majority
//!   properties.
//!
//! Every verdict (`Asserted`, `Refuted`, `Undetermined`, `Degenerate`)
//! comes with an evidence trace that renders to stable text.

pub mod arith;
pub mod judge;
pub mod kb;
pub mod logic;
pub mod parse;

pub use arith::{ArithFormula, Cardinality, DensityKind, DensityResult};
pub use judge::{
    evaluate, explain, EvalConfig, EvalError, Evidence, Judgment, MajoritySemantics,
    SemanticsTag, Verdict,
};
pub use kb::{KnowledgeBase, ValidationReport};
pub use logic::{
    contradictory, o_corner_paraphrases, opposition_corner, Body, ConceptId, IndividualId,
    Literal, OppositionCorner, PredicateId, QuantifierKind, Restriction, Statement,
};
pub use parse::{parse_arith_formula, parse_kb, parse_statement, ParseError, SourceSpan};
