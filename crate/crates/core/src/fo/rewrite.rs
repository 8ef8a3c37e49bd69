use std::collections::BTreeSet;

use super::ast::*;
use super::FoError;

/// The vertex classifier, with free variable `x`:
/// `forall y. (E(x,y) -> exists z. (~z=x & E(y,z)))`.
pub fn phi_v() -> Formula {
    forall("y", implies(edge("x", "y"), exists("z", and(not(eq("z", "x")), edge("y", "z")))))
}

struct Fresh {
    used: BTreeSet<String>,
}

impl Fresh {
    fn name(&mut self, base: &str) -> String {
        let base = base.trim_end_matches(|c: char| c.is_ascii_digit());
        let name = (1..)
            .map(|i| format!("{base}{i}"))
            .find(|n| !self.used.contains(n))
            .expect("unbounded supply");
        self.used.insert(name.clone());
        name
    }
}

/// Relativises quantifiers to the classifier and replaces each edge atom by
/// a path of length two:
///
/// * `exists x. p` becomes `exists x. (C(x) & p')`
/// * `forall x. p` becomes `forall x. (C(x) -> p')`
/// * `E(x,y)` becomes `exists s. ((E(x,s) & E(s,y)) & ~x=y)`, `s` fresh
///
/// Each instance of the classifier gets fresh names for its bound variables,
/// so nothing is captured.
pub fn rewrite_fo(phi: &Formula, classifier: &Formula) -> Result<Formula, FoError> {
    if let Some(v) = phi.free_vars().into_iter().next() {
        return Err(FoError::Unbound(v));
    }
    let free = classifier.free_vars();
    if free.len() != 1 {
        return Err(FoError::ClassifierArity(free.len()));
    }
    let param = free.into_iter().next().expect("one free variable");
    let mut fresh = Fresh {
        used: phi.variables().into_iter().chain(classifier.variables()).collect(),
    };
    Ok(Rewriter {
        classifier,
        param: &param,
        fresh: &mut fresh,
    }
    .go(phi))
}

struct Rewriter<'a> {
    classifier: &'a Formula,
    param: &'a str,
    fresh: &'a mut Fresh,
}

impl Rewriter<'_> {
    fn go(&mut self, f: &Formula) -> Formula {
        match f {
            Formula::Edge(x, y) => {
                let s = self.fresh.name("s");
                exists(&s, and(and(edge(x, &s), edge(&s, y)), not(eq(x, y))))
            }
            Formula::Eq(..) => f.clone(),
            Formula::Not(g) => not(self.go(g)),
            Formula::And(a, b) => and(self.go(a), self.go(b)),
            Formula::Or(a, b) => or(self.go(a), self.go(b)),
            Formula::Implies(a, b) => implies(self.go(a), self.go(b)),
            Formula::Exists(x, g) => exists(x, and(self.classify(x), self.go(g))),
            Formula::Forall(x, g) => forall(x, implies(self.classify(x), self.go(g))),
        }
    }

    /// The classifier with its parameter replaced by `x`.
    fn classify(&mut self, x: &str) -> Formula {
        let mut renames = vec![(self.param.to_string(), x.to_string())];
        instantiate(self.classifier, &mut renames, self.fresh)
    }
}

fn instantiate(f: &Formula, renames: &mut Vec<(String, String)>, fresh: &mut Fresh) -> Formula {
    let var = |v: &String, renames: &Vec<(String, String)>| {
        renames
            .iter()
            .rev()
            .find(|(from, _)| from == v)
            .map_or_else(|| v.clone(), |(_, to)| to.clone())
    };
    match f {
        Formula::Edge(a, b) => Formula::Edge(var(a, renames), var(b, renames)),
        Formula::Eq(a, b) => Formula::Eq(var(a, renames), var(b, renames)),
        Formula::Not(g) => not(instantiate(g, renames, fresh)),
        Formula::And(a, b) => and(instantiate(a, renames, fresh), instantiate(b, renames, fresh)),
        Formula::Or(a, b) => or(instantiate(a, renames, fresh), instantiate(b, renames, fresh)),
        Formula::Implies(a, b) => implies(instantiate(a, renames, fresh), instantiate(b, renames, fresh)),
        Formula::Exists(v, g) | Formula::Forall(v, g) => {
            let to = fresh.name(v);
            renames.push((v.clone(), to.clone()));
            let body = instantiate(g, renames, fresh);
            renames.pop();
            if matches!(f, Formula::Exists(..)) {
                exists(&to, body)
            } else {
                forall(&to, body)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fo::{parse_fo, parse_formula, satisfying_vertices};
    use crate::reductions::{distance_graph, embed_subdivided, Graph};

    #[test]
    fn classifier_shape() {
        let c = phi_v();
        assert_eq!(c.size(), 8);
        assert_eq!(c.free_vars().into_iter().collect::<Vec<_>>(), ["x"]);
    }

    #[test]
    fn edge_atom_rule() {
        let f = parse_fo("exists x. exists y. E(x,y)").unwrap();
        let g = rewrite_fo(&f, &phi_v()).unwrap();
        let text = g.to_string();
        assert!(text.contains("exists s1. ((E(x,s1) & E(s1,y)) & ~x=y)"), "{text}");
        assert_eq!(g.size(), 1 + 1 + 8 + 1 + 1 + 8 + 7);
        assert!(g.is_sentence());
    }

    #[test]
    fn classifier_bound_names_do_not_capture() {
        // the sentence itself uses y and z, which the classifier also binds
        let f = parse_fo("exists y. exists z. E(y,z)").unwrap();
        let g = rewrite_fo(&f, &phi_v()).unwrap();
        assert!(g.is_sentence());
        let c = parse_formula("exists y. E(y,y)").unwrap();
        assert_eq!(rewrite_fo(&f, &c), Err(FoError::ClassifierArity(0)));
    }

    #[test]
    fn classifier_on_embedded_k2() {
        // rows 100, 010, 110, 111: v1, v2, subdivision vertex, leaf
        let g = distance_graph(&embed_subdivided(&Graph::complete(2)), 1).unwrap();
        assert_eq!(satisfying_vertices(&g, &phi_v()).unwrap(), [1, 2, 4]);
    }
}
