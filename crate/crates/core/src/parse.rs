//! Deterministic parsers for the statement DSL, the line-based knowledge
//! base format and arithmetic formulas, with positioned error reporting.
//!
//! Parsing is total: the same input always yields the same AST or the same
//! error. The knowledge base parser keeps going after a malformed line and
//! reports every bad line exactly once.

use std::fmt;

use thiserror::Error;

use crate::arith::{ArithFormula, CmpOp};
use crate::kb::KnowledgeBase;
use crate::logic::{Body, ConceptId, PredicateId, QuantifierKind, Restriction, Statement};

/// A 1-based position and width inside the input text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub line: u32,
    pub column: u32,
    pub length: u32,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub span: SourceSpan,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at {}: expected {}, found {}",
            self.span,
            self.expected.join(" or "),
            self.found
        )
    }
}

/// A syntactically well-formed atom with an out-of-range value, such as a
/// zero modulus or a residue at or above its modulus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("domain error at {span}: {message}")]
pub struct DomainError {
    pub span: SourceSpan,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseFailure {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] DomainError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Ident(String),
    Int(u64),
    Bang,
    Amp,
    Pipe,
    LParen,
    RParen,
    Lt,
    Le,
    Gt,
    Ge,
    EqEq,
    Colon,
    Comma,
    Subsumes,
    Eof,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Ident(s) => format!("identifier `{s}`"),
            TokenKind::Int(n) => format!("integer `{n}`"),
            TokenKind::Bang => "`!`".into(),
            TokenKind::Amp => "`&`".into(),
            TokenKind::Pipe => "`|`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::Lt => "`<`".into(),
            TokenKind::Le => "`<=`".into(),
            TokenKind::Gt => "`>`".into(),
            TokenKind::Ge => "`>=`".into(),
            TokenKind::EqEq => "`==`".into(),
            TokenKind::Colon => "`:`".into(),
            TokenKind::Comma => "`,`".into(),
            TokenKind::Subsumes => "`<:`".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    span: SourceSpan,
}

fn lex(text: &str, first_line: u32) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut line = first_line;
    let mut column: u32 = 1;
    let mut chars = text.chars().peekable();

    let span = |line: u32, column: u32, length: u32| SourceSpan {
        line,
        column,
        length,
    };

    while let Some(&c) = chars.peek() {
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let start = column;
        if c.is_ascii_alphabetic() || c == '_' {
            let mut ident = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    ident.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            let len = ident.chars().count() as u32;
            tokens.push(Token {
                kind: TokenKind::Ident(ident),
                span: span(line, start, len),
            });
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            let len = digits.len() as u32;
            let value = digits.parse::<u64>().map_err(|_| ParseError {
                span: span(line, start, len),
                expected: vec!["an integer that fits in 64 bits".into()],
                found: format!("`{digits}`"),
            })?;
            tokens.push(Token {
                kind: TokenKind::Int(value),
                span: span(line, start, len),
            });
            continue;
        }
        chars.next();
        column += 1;
        let kind = match c {
            '!' => TokenKind::Bang,
            '&' => TokenKind::Amp,
            '|' => TokenKind::Pipe,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            ',' => TokenKind::Comma,
            ':' => TokenKind::Colon,
            '<' => match chars.peek() {
                Some(':') => {
                    chars.next();
                    column += 1;
                    TokenKind::Subsumes
                }
                Some('=') => {
                    chars.next();
                    column += 1;
                    TokenKind::Le
                }
                _ => TokenKind::Lt,
            },
            '>' => match chars.peek() {
                Some('=') => {
                    chars.next();
                    column += 1;
                    TokenKind::Ge
                }
                _ => TokenKind::Gt,
            },
            '=' => match chars.peek() {
                Some('=') => {
                    chars.next();
                    column += 1;
                    TokenKind::EqEq
                }
                _ => {
                    return Err(ParseError {
                        span: span(line, start, 1),
                        expected: vec!["`==`".into()],
                        found: "`=`".into(),
                    })
                }
            },
            other => {
                return Err(ParseError {
                    span: span(line, start, 1),
                    expected: vec!["a token".into()],
                    found: format!("`{other}`"),
                })
            }
        };
        tokens.push(Token {
            kind,
            span: span(line, start, column - start),
        });
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        span: span(line, column, 1),
    });
    Ok(tokens)
}

struct TokenStream {
    tokens: Vec<Token>,
    pos: usize,
}

impl TokenStream {
    fn new(tokens: Vec<Token>) -> TokenStream {
        TokenStream { tokens, pos: 0 }
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn peek_at(&self, offset: usize) -> &TokenKind {
        let idx = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[idx].kind
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos.min(self.tokens.len() - 1)].clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let tok = self.peek();
        ParseError {
            span: tok.span,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.kind.describe(),
        }
    }

    fn expect(&mut self, kind: &TokenKind, expected: &str) -> Result<Token, ParseError> {
        if &self.peek().kind == kind {
            Ok(self.advance())
        } else {
            Err(self.error(&[expected]))
        }
    }

    fn expect_ident(&mut self, expected: &str) -> Result<(String, SourceSpan), ParseError> {
        match self.peek().kind.clone() {
            TokenKind::Ident(name) => {
                let span = self.peek().span;
                self.advance();
                Ok((name, span))
            }
            _ => Err(self.error(&[expected])),
        }
    }

    fn expect_int(&mut self, expected: &str) -> Result<(u64, SourceSpan), ParseError> {
        match self.peek().kind {
            TokenKind::Int(value) => {
                let span = self.peek().span;
                self.advance();
                Ok((value, span))
            }
            _ => Err(self.error(&[expected])),
        }
    }

    fn expect_eof(&mut self, context: &str) -> Result<(), ParseError> {
        if self.peek().kind == TokenKind::Eof {
            Ok(())
        } else {
            Err(self.error(&[context]))
        }
    }
}

const QUANTIFIER_KEYWORDS: [(&str, QuantifierKind); 6] = [
    ("each", QuantifierKind::EachDistributive),
    ("every", QuantifierKind::EveryGeneric),
    ("some", QuantifierKind::Exists),
    ("no", QuantifierKind::NoNeg),
    ("not_all", QuantifierKind::NotAll),
    ("majority", QuantifierKind::Majority),
];

/// Parse one statement: `quant restriction body`.
///
/// The body is a possibly negated predicate name, or an arithmetic formula
/// when the restriction is `Nat`. A body that consists of a single
/// (possibly negated) identifier is always read as a predicate reference,
/// so `majority Nat prime` names the built-in predicate rather than the
/// formula atom; the two resolve to the same set.
pub fn parse_statement(text: &str) -> Result<Statement, ParseFailure> {
    let mut ts = TokenStream::new(lex(text, 1)?);

    let quantifier = match ts.peek().kind.clone() {
        TokenKind::Ident(word) => match QUANTIFIER_KEYWORDS.iter().find(|(kw, _)| *kw == word) {
            Some((_, q)) => {
                ts.advance();
                *q
            }
            None => {
                return Err(ts
                    .error(&["a quantifier keyword (each, every, some, no, not_all, majority)"])
                    .into())
            }
        },
        _ => {
            return Err(ts
                .error(&["a quantifier keyword (each, every, some, no, not_all, majority)"])
                .into())
        }
    };

    let (restriction_name, _) = ts.expect_ident("a restriction (concept name or Nat)")?;
    let restriction = if restriction_name == "Nat" {
        Restriction::Nat
    } else {
        Restriction::Concept(ConceptId::new(restriction_name))
    };

    // A bare [!]IDENT body is a predicate reference; anything else must be
    // an arithmetic formula, which requires the Nat restriction.
    let ident_body = match (ts.peek_at(0), ts.peek_at(1), ts.peek_at(2)) {
        (TokenKind::Ident(name), TokenKind::Eof, _) => Some((name.clone(), true)),
        (TokenKind::Bang, TokenKind::Ident(name), TokenKind::Eof) => {
            Some((name.clone(), false))
        }
        _ => None,
    };
    let (body, positive) = match ident_body {
        Some((name, positive)) => {
            if !positive {
                ts.advance();
            }
            ts.advance();
            (Body::Predicate(PredicateId::new(name)), positive)
        }
        None => {
            if restriction != Restriction::Nat {
                return Err(ts
                    .error(&["a predicate name (arithmetic formulas require the Nat restriction)"])
                    .into());
            }
            let formula = parse_or(&mut ts)?;
            (Body::Arith(formula), true)
        }
    };
    ts.expect_eof("end of statement")?;

    Ok(Statement {
        quantifier,
        restriction,
        body,
        positive,
    })
}

/// Parse an arithmetic formula over the domain variable `n`.
pub fn parse_arith_formula(text: &str) -> Result<ArithFormula, ParseFailure> {
    let mut ts = TokenStream::new(lex(text, 1)?);
    let formula = parse_or(&mut ts)?;
    ts.expect_eof("end of formula")?;
    Ok(formula)
}

fn parse_or(ts: &mut TokenStream) -> Result<ArithFormula, ParseFailure> {
    let mut lhs = parse_and(ts)?;
    while ts.peek().kind == TokenKind::Pipe {
        ts.advance();
        let rhs = parse_and(ts)?;
        lhs = ArithFormula::or(lhs, rhs);
    }
    Ok(lhs)
}

fn parse_and(ts: &mut TokenStream) -> Result<ArithFormula, ParseFailure> {
    let mut lhs = parse_not(ts)?;
    while ts.peek().kind == TokenKind::Amp {
        ts.advance();
        let rhs = parse_not(ts)?;
        lhs = ArithFormula::and(lhs, rhs);
    }
    Ok(lhs)
}

fn parse_not(ts: &mut TokenStream) -> Result<ArithFormula, ParseFailure> {
    if ts.peek().kind == TokenKind::Bang {
        ts.advance();
        Ok(ArithFormula::not(parse_not(ts)?))
    } else {
        parse_primary(ts)
    }
}

const PRIMARY_EXPECTED: [&str; 5] = ["`prime`", "`n`", "an integer divisor", "`(`", "`!`"];

fn parse_primary(ts: &mut TokenStream) -> Result<ArithFormula, ParseFailure> {
    match ts.peek().kind.clone() {
        TokenKind::Ident(word) if word == "prime" => {
            ts.advance();
            Ok(ArithFormula::Prime)
        }
        TokenKind::Ident(word) if word == "n" => {
            ts.advance();
            parse_variable_tail(ts)
        }
        TokenKind::Int(k) => {
            let span = ts.peek().span;
            ts.advance();
            ts.expect(&TokenKind::Pipe, "`|` (divisibility)")?;
            let (var, var_span) = ts.expect_ident("`n`")?;
            if var != "n" {
                return Err(ParseError {
                    span: var_span,
                    expected: vec!["`n`".into()],
                    found: format!("identifier `{var}`"),
                }
                .into());
            }
            if k == 0 {
                return Err(DomainError {
                    span,
                    message: "divisor must be >= 1".into(),
                }
                .into());
            }
            Ok(ArithFormula::Divides(k))
        }
        TokenKind::LParen => {
            ts.advance();
            let inner = parse_or(ts)?;
            ts.expect(&TokenKind::RParen, "`)`")?;
            Ok(inner)
        }
        _ => Err(ts.error(&PRIMARY_EXPECTED).into()),
    }
}

fn parse_variable_tail(ts: &mut TokenStream) -> Result<ArithFormula, ParseFailure> {
    match ts.peek().kind.clone() {
        TokenKind::Ident(word) if word == "mod" => {
            ts.advance();
            let (modulus, mod_span) = ts.expect_int("a modulus")?;
            ts.expect(&TokenKind::EqEq, "`==`")?;
            let (residue, res_span) = ts.expect_int("a residue")?;
            if modulus == 0 {
                return Err(DomainError {
                    span: mod_span,
                    message: "modulus must be >= 1".into(),
                }
                .into());
            }
            if residue >= modulus {
                return Err(DomainError {
                    span: res_span,
                    message: format!("residue {residue} must be below the modulus {modulus}"),
                }
                .into());
            }
            Ok(ArithFormula::Congruence { modulus, residue })
        }
        TokenKind::Lt | TokenKind::Le | TokenKind::Gt | TokenKind::Ge => {
            let op = match ts.advance().kind {
                TokenKind::Lt => CmpOp::Lt,
                TokenKind::Le => CmpOp::Le,
                TokenKind::Gt => CmpOp::Gt,
                TokenKind::Ge => CmpOp::Ge,
                _ => unreachable!(),
            };
            let (constant, _) = ts.expect_int("a comparison constant")?;
            Ok(ArithFormula::Compare(op, constant))
        }
        _ => Err(ts.error(&["`mod`", "`<`", "`<=`", "`>`", "`>=`"]).into()),
    }
}

enum Directive {
    Concept {
        name: String,
        parent: Option<String>,
    },
    Axiom {
        concept: String,
        predicate: String,
        positive: bool,
    },
    Individual {
        name: String,
        concept: String,
    },
    Fact {
        individual: String,
        predicate: String,
        positive: bool,
    },
    MajorityProps {
        concept: String,
        predicates: Vec<String>,
    },
    Disjoint {
        p: String,
        q: String,
    },
}

/// Parse the line-based knowledge base format. `#` starts a comment and
/// blank lines are ignored. Malformed lines are collected (one error per
/// line) while the remaining lines still contribute to the result.
///
/// The directives are order-independent; run the result through
/// [`KnowledgeBase::validate`] before evaluating against it.
pub fn parse_kb(text: &str) -> Result<KnowledgeBase, Vec<ParseError>> {
    let mut kb = KnowledgeBase::new();
    let mut errors = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx as u32 + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        match parse_directive(content, line_no) {
            Ok(directive) => apply_directive(&mut kb, directive),
            Err(e) => errors.push(e),
        }
    }
    if errors.is_empty() {
        Ok(kb)
    } else {
        Err(errors)
    }
}

fn parse_directive(line: &str, line_no: u32) -> Result<Directive, ParseError> {
    let mut ts = TokenStream::new(lex(line, line_no)?);
    const DIRECTIVES: [&str; 6] = [
        "concept",
        "axiom",
        "individual",
        "fact",
        "majority_props",
        "disjoint",
    ];
    let keyword = match ts.peek().kind.clone() {
        TokenKind::Ident(word) if DIRECTIVES.contains(&word.as_str()) => {
            ts.advance();
            word
        }
        _ => {
            return Err(ts.error(&[
                "a directive (concept, axiom, individual, fact, majority_props, disjoint)",
            ]))
        }
    };
    let directive = match keyword.as_str() {
        "concept" => {
            let (name, _) = ts.expect_ident("a concept name")?;
            let parent = if ts.peek().kind == TokenKind::Subsumes {
                ts.advance();
                Some(ts.expect_ident("a parent concept name")?.0)
            } else {
                None
            };
            Directive::Concept { name, parent }
        }
        "axiom" => {
            let (concept, _) = ts.expect_ident("a concept name")?;
            ts.expect(&TokenKind::Colon, "`:`")?;
            let (predicate, positive) = parse_signed_predicate(&mut ts)?;
            Directive::Axiom {
                concept,
                predicate,
                positive,
            }
        }
        "individual" => {
            let (name, _) = ts.expect_ident("an individual name")?;
            ts.expect(&TokenKind::Colon, "`:`")?;
            let (concept, _) = ts.expect_ident("a concept name")?;
            Directive::Individual { name, concept }
        }
        "fact" => {
            let (individual, _) = ts.expect_ident("an individual name")?;
            ts.expect(&TokenKind::Colon, "`:`")?;
            let (predicate, positive) = parse_signed_predicate(&mut ts)?;
            Directive::Fact {
                individual,
                predicate,
                positive,
            }
        }
        "majority_props" => {
            let (concept, _) = ts.expect_ident("a concept name")?;
            ts.expect(&TokenKind::Colon, "`:`")?;
            let mut predicates = vec![ts.expect_ident("a predicate name")?.0];
            while ts.peek().kind == TokenKind::Comma {
                ts.advance();
                predicates.push(ts.expect_ident("a predicate name")?.0);
            }
            Directive::MajorityProps {
                concept,
                predicates,
            }
        }
        "disjoint" => {
            let (p, _) = ts.expect_ident("a predicate name")?;
            let (q, _) = ts.expect_ident("a predicate name")?;
            Directive::Disjoint { p, q }
        }
        _ => unreachable!(),
    };
    ts.expect_eof("end of directive")?;
    Ok(directive)
}

fn parse_signed_predicate(ts: &mut TokenStream) -> Result<(String, bool), ParseError> {
    let positive = if ts.peek().kind == TokenKind::Bang {
        ts.advance();
        false
    } else {
        true
    };
    let (predicate, _) = ts.expect_ident("a predicate name")?;
    Ok((predicate, positive))
}

fn apply_directive(kb: &mut KnowledgeBase, directive: Directive) {
    match directive {
        Directive::Concept { name, parent } => match parent {
            Some(parent) => {
                kb.declare_subconcept(name, parent);
            }
            None => {
                kb.declare_concept(name);
            }
        },
        Directive::Axiom {
            concept,
            predicate,
            positive,
        } => kb.add_axiom(concept, predicate, positive),
        Directive::Individual { name, concept } => kb.add_individual(name, concept),
        Directive::Fact {
            individual,
            predicate,
            positive,
        } => kb.add_fact(individual, predicate, positive),
        Directive::MajorityProps {
            concept,
            predicates,
        } => kb.declare_majority_props(
            concept,
            predicates.into_iter().map(PredicateId::new).collect(),
        ),
        Directive::Disjoint { p, q } => kb.declare_disjoint(p, q),
    }
}
