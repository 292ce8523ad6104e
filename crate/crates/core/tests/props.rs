//! Property tests: parser round-trips and the partial-order laws of
//! subsumption on random acyclic taxonomies.

#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;

use quantscope::arith::ArithFormula;
use quantscope::kb::KnowledgeBase;
use quantscope::logic::{Body, ConceptId, PredicateId, QuantifierKind, Restriction, Statement};
use quantscope::parse::parse_statement;

fn ident() -> impl Strategy<Value = String> {
    "[a-zA-Z_][a-zA-Z0-9_]{0,8}".prop_filter("Nat is the built-in domain", |s| s != "Nat")
}

fn quantifier() -> impl Strategy<Value = QuantifierKind> {
    prop_oneof![
        Just(QuantifierKind::EachDistributive),
        Just(QuantifierKind::EveryGeneric),
        Just(QuantifierKind::Exists),
        Just(QuantifierKind::NoNeg),
        Just(QuantifierKind::NotAll),
        Just(QuantifierKind::Majority),
    ]
}

fn arith_atom() -> impl Strategy<Value = ArithFormula> {
    prop_oneof![
        Just(ArithFormula::Prime),
        (1u64..=12).prop_map(ArithFormula::Divides),
        (1u64..=12).prop_flat_map(|m| (Just(m), 0..m)).prop_map(|(modulus, residue)| {
            ArithFormula::Congruence { modulus, residue }
        }),
        (0u64..=100).prop_map(|c| ArithFormula::Compare(quantscope::arith::CmpOp::Lt, c)),
        (0u64..=100).prop_map(|c| ArithFormula::Compare(quantscope::arith::CmpOp::Ge, c)),
    ]
}

fn arith_formula() -> impl Strategy<Value = ArithFormula> {
    arith_atom().prop_recursive(3, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(ArithFormula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ArithFormula::and(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| ArithFormula::or(a, b)),
        ]
    })
}

/// Statements the parser itself could have produced: a lone (possibly
/// negated) identifier is always read as a predicate reference, so
/// generated arithmetic bodies avoid exactly those two shapes.
fn parser_canonical_statement() -> impl Strategy<Value = Statement> {
    let predicate_body = (quantifier(), ident(), ident(), any::<bool>()).prop_map(
        |(quantifier, restriction, predicate, positive)| Statement {
            quantifier,
            restriction: Restriction::Concept(ConceptId::new(restriction)),
            body: Body::Predicate(PredicateId::new(predicate)),
            positive,
        },
    );
    let nat_predicate_body =
        (quantifier(), any::<bool>()).prop_map(|(quantifier, positive)| Statement {
            quantifier,
            restriction: Restriction::Nat,
            body: Body::Predicate(PredicateId::new("prime")),
            positive,
        });
    let nat_arith_body = (quantifier(), arith_formula())
        .prop_filter("bare prime renders as a predicate reference", |(_, f)| {
            f != &ArithFormula::Prime && f != &ArithFormula::not(ArithFormula::Prime)
        })
        .prop_map(|(quantifier, formula)| Statement {
            quantifier,
            restriction: Restriction::Nat,
            body: Body::Arith(formula),
            positive: true,
        });
    prop_oneof![predicate_body, nat_predicate_body, nat_arith_body]
}

proptest! {
    #[test]
    fn rendered_statements_reparse_to_the_same_ast(statement in parser_canonical_statement()) {
        let rendered = statement.to_string();
        let reparsed = parse_statement(&rendered)
            .unwrap_or_else(|e| panic!("`{rendered}` failed to reparse: {e:?}"));
        prop_assert_eq!(&reparsed, &statement, "render/parse mismatch for `{}`", rendered);
    }
}

/// A random DAG: node i may only have parents with smaller indices.
fn random_dag() -> impl Strategy<Value = Vec<Vec<usize>>> {
    (2usize..=12).prop_flat_map(|n| {
        let parents_per_node: Vec<_> = (0..n)
            .map(|i| proptest::collection::vec(0..i.max(1), 0..=2.min(i)))
            .collect();
        parents_per_node
    })
}

fn kb_from_dag(parents: &[Vec<usize>]) -> KnowledgeBase {
    let mut kb = KnowledgeBase::new();
    for i in 0..parents.len() {
        kb.declare_concept(format!("c{i}"));
    }
    for (i, ps) in parents.iter().enumerate() {
        for &p in ps {
            kb.declare_subconcept(format!("c{i}"), format!("c{p}"));
        }
    }
    kb
}

/// Reflexive-transitive closure by saturation.
#[allow(clippy::needless_range_loop)]
fn brute_force_closure(parents: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let n = parents.len();
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    loop {
        let mut changed = false;
        for i in 0..n {
            for &p in &parents[i] {
                for j in 0..n {
                    if reach[p][j] && !reach[i][j] {
                        reach[i][j] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    reach
}

proptest! {
    #[test]
    fn subsumption_matches_the_brute_force_closure(parents in random_dag()) {
        let kb = kb_from_dag(&parents);
        prop_assert!(kb.validate().is_valid());
        let reach = brute_force_closure(&parents);
        let n = parents.len();
        for i in 0..n {
            for j in 0..n {
                let ancestor = ConceptId::new(format!("c{j}"));
                let descendant = ConceptId::new(format!("c{i}"));
                prop_assert_eq!(
                    kb.subsumes(&ancestor, &descendant).unwrap(),
                    reach[i][j],
                    "closure mismatch for c{} <=? c{}", j, i
                );
            }
        }
        // Partial-order laws on the closure relation.
        for i in 0..n {
            prop_assert!(reach[i][i]);
            for j in 0..n {
                if i != j && reach[i][j] {
                    prop_assert!(!reach[j][i], "antisymmetry violated between {} and {}", i, j);
                }
                for k in 0..n {
                    if reach[i][j] && reach[j][k] {
                        prop_assert!(reach[i][k], "transitivity violated");
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn instances_grow_along_subsumption(parents in random_dag(), members in proptest::collection::vec(0usize..12, 0..6)) {
        let mut kb = kb_from_dag(&parents);
        let n = parents.len();
        for (idx, &home) in members.iter().enumerate() {
            kb.add_individual(format!("x{idx}"), format!("c{}", home % n));
        }
        for i in 0..n {
            for j in 0..n {
                let broader = ConceptId::new(format!("c{j}"));
                let narrower = ConceptId::new(format!("c{i}"));
                if kb.subsumes(&broader, &narrower).unwrap() {
                    let narrow_instances = kb.instances_of(&narrower).unwrap();
                    let broad_instances = kb.instances_of(&broader).unwrap();
                    for x in kb.instances_of(&narrower).unwrap() {
                        prop_assert!(
                            broad_instances.contains(&x),
                            "instance {} of c{} missing from c{}", x, i, j
                        );
                    }
                    prop_assert!(narrow_instances.len() <= broad_instances.len());
                }
            }
        }
    }
}
