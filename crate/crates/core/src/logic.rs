//! Statement AST, quantifier taxonomy and the square of opposition.
//!
//! Statements are immutable values of the shape quantifier / restriction /
//! body. The six quantifier kinds split the universal corner into a
//! distributive reading (element by element) and a generic reading (about
//! the generic element of a concept); the fourth corner of the square has
//! no single word in natural language and is spelled `not_all` here.

use std::fmt;

use thiserror::Error;

use crate::arith::ArithFormula;

macro_rules! string_id {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(String);

        impl $name {
            pub fn new(name: impl Into<String>) -> Self {
                Self(name.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                Self::new(s)
            }
        }
    };
}

string_id!(
    /// Name of a concept in a knowledge base taxonomy.
    ConceptId
);
string_id!(
    /// Name of a predicate. Predicates are implicit: any identifier
    /// mentioned by an axiom, fact or declaration names one.
    PredicateId
);
string_id!(
    /// Name of a declared individual.
    IndividualId
);

/// A predicate with a sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Literal {
    pub predicate: PredicateId,
    pub positive: bool,
}

impl Literal {
    pub fn positive(predicate: impl Into<String>) -> Literal {
        Literal {
            predicate: PredicateId::new(predicate),
            positive: true,
        }
    }

    pub fn negative(predicate: impl Into<String>) -> Literal {
        Literal {
            predicate: PredicateId::new(predicate),
            positive: false,
        }
    }

    pub fn negated(&self) -> Literal {
        Literal {
            predicate: self.predicate.clone(),
            positive: !self.positive,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "+{}", self.predicate)
        } else {
            write!(f, "-{}", self.predicate)
        }
    }
}

/// The six statement-forming quantifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuantifierKind {
    /// `each`: universal over the elements of a collection (omega rule).
    EachDistributive,
    /// `every`: universal about the generic element of a concept.
    EveryGeneric,
    /// `some`: existential.
    Exists,
    /// `no`: negated existential.
    NoNeg,
    /// `not_all`: the non-lexicalised fourth corner.
    NotAll,
    /// `majority`: more than half; not first-order definable, no corner.
    Majority,
}

impl QuantifierKind {
    pub fn keyword(&self) -> &'static str {
        match self {
            QuantifierKind::EachDistributive => "each",
            QuantifierKind::EveryGeneric => "every",
            QuantifierKind::Exists => "some",
            QuantifierKind::NoNeg => "no",
            QuantifierKind::NotAll => "not_all",
            QuantifierKind::Majority => "majority",
        }
    }
}

impl fmt::Display for QuantifierKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// What a statement quantifies over: a named concept or the built-in
/// arithmetic domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Restriction {
    Concept(ConceptId),
    Nat,
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Restriction::Concept(c) => write!(f, "{c}"),
            Restriction::Nat => write!(f, "Nat"),
        }
    }
}

/// The claimed property: a named predicate, or an arithmetic formula when
/// the restriction is the arithmetic domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Body {
    Predicate(PredicateId),
    Arith(ArithFormula),
}

/// A parsed quantified claim. Negation is shallow: one polarity flag on
/// the body rather than a formula algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Statement {
    pub quantifier: QuantifierKind,
    pub restriction: Restriction,
    pub body: Body,
    pub positive: bool,
}

impl Statement {
    pub fn new(
        quantifier: QuantifierKind,
        restriction: Restriction,
        body: Body,
        positive: bool,
    ) -> Statement {
        Statement {
            quantifier,
            restriction,
            body,
            positive,
        }
    }

    /// Convenience constructor for concept-restricted predicate claims.
    pub fn over_concept(
        quantifier: QuantifierKind,
        concept: impl Into<String>,
        predicate: impl Into<String>,
        positive: bool,
    ) -> Statement {
        Statement {
            quantifier,
            restriction: Restriction::Concept(ConceptId::new(concept)),
            body: Body::Predicate(PredicateId::new(predicate)),
            positive,
        }
    }

    /// The signed predicate claimed by the body, when the body is a
    /// named predicate.
    pub fn body_literal(&self) -> Option<Literal> {
        match &self.body {
            Body::Predicate(p) => Some(Literal {
                predicate: p.clone(),
                positive: self.positive,
            }),
            Body::Arith(_) => None,
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} ", self.quantifier, self.restriction)?;
        match &self.body {
            Body::Predicate(p) => {
                if self.positive {
                    write!(f, "{p}")
                } else {
                    write!(f, "!{p}")
                }
            }
            Body::Arith(formula) => {
                if self.positive {
                    write!(f, "{formula}")
                } else {
                    write!(f, "!({formula})")
                }
            }
        }
    }
}

/// The four corners of the square of opposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OppositionCorner {
    /// A: universal affirmative.
    Universal,
    /// E: universal negative.
    NegativeUniversal,
    /// I: existential affirmative.
    Existential,
    /// O: negated universal; not lexicalised in English.
    NegativeExistential,
}

impl OppositionCorner {
    pub fn letter(&self) -> char {
        match self {
            OppositionCorner::Universal => 'A',
            OppositionCorner::NegativeUniversal => 'E',
            OppositionCorner::Existential => 'I',
            OppositionCorner::NegativeExistential => 'O',
        }
    }
}

impl fmt::Display for OppositionCorner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LogicError {
    #[error("majority statements have no corner on the square of opposition")]
    MajorityHasNoContradictoryCorner,
    #[error("statement is not at the O corner")]
    NotOCorner,
}

/// The corner a statement occupies, if any. Both universal readings share
/// the A corner; majority claims are outside the square.
pub fn opposition_corner(s: &Statement) -> Option<OppositionCorner> {
    match s.quantifier {
        QuantifierKind::EachDistributive | QuantifierKind::EveryGeneric => {
            Some(OppositionCorner::Universal)
        }
        QuantifierKind::NoNeg => Some(OppositionCorner::NegativeUniversal),
        QuantifierKind::Exists => Some(OppositionCorner::Existential),
        QuantifierKind::NotAll => Some(OppositionCorner::NegativeExistential),
        QuantifierKind::Majority => None,
    }
}

/// The statement at the contradictory corner over the same restriction and
/// body: A and O exchange, E and I exchange.
///
/// The A corner is canonically spelled `each`, so the generic reading also
/// contradicts to `not_all` and double contradiction lands on the
/// distributive form. On the four canonical kinds the operation is an
/// involution.
pub fn contradictory(s: &Statement) -> Result<Statement, LogicError> {
    let quantifier = match s.quantifier {
        QuantifierKind::EachDistributive | QuantifierKind::EveryGeneric => QuantifierKind::NotAll,
        QuantifierKind::NotAll => QuantifierKind::EachDistributive,
        QuantifierKind::Exists => QuantifierKind::NoNeg,
        QuantifierKind::NoNeg => QuantifierKind::Exists,
        QuantifierKind::Majority => return Err(LogicError::MajorityHasNoContradictoryCorner),
    };
    Ok(Statement {
        quantifier,
        restriction: s.restriction.clone(),
        body: s.body.clone(),
        positive: s.positive,
    })
}

/// Both surface forms of an O-corner statement: the `not_all` spelling and
/// the logically equivalent negative existential (`some ... do not`). The
/// difference between them is theme and focus, not truth conditions.
pub fn o_corner_paraphrases(s: &Statement) -> Result<(Statement, Statement), LogicError> {
    if opposition_corner(s) != Some(OppositionCorner::NegativeExistential) {
        return Err(LogicError::NotOCorner);
    }
    let not_all_form = s.clone();
    let some_not_form = Statement {
        quantifier: QuantifierKind::Exists,
        restriction: s.restriction.clone(),
        body: s.body.clone(),
        positive: !s.positive,
    };
    Ok((not_all_form, some_not_form))
}
