//! First-order sentences over graphs: parsing, evaluation, and the rewriting
//! that transfers a sentence about `H` to one about the distance-1 graph of
//! its hypercube embedding.

mod ast;
mod corpus;
mod eval;
pub mod harness;
mod parse;
mod rewrite;

use thiserror::Error;

pub use ast::{and, edge, eq, exists, forall, implies, not, or, Formula};
pub use corpus::CORPUS;
pub use eval::{eval_fo, satisfying_vertices};
pub use parse::{parse_fo, parse_formula};
pub use rewrite::{phi_v, rewrite_fo};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoError {
    #[error("syntax error at offset {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("variable {0} is not bound")]
    Unbound(String),
    #[error("classifier must have exactly one free variable, has {0}")]
    ClassifierArity(usize),
}

impl FoError {
    pub(crate) fn syntax(pos: usize, message: impl Into<String>) -> Self {
        FoError::Syntax {
            pos,
            message: message.into(),
        }
    }
}

/// Parses the built-in sentence corpus.
pub fn corpus() -> Vec<Formula> {
    CORPUS.iter().map(|s| parse_fo(s).expect("corpus sentences parse")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_well_formed() {
        let c = corpus();
        assert_eq!(c.len(), 20);
        for f in &c {
            assert!(f.is_sentence());
            assert!(f.quantifier_depth() <= 3, "{f}");
            let g = rewrite_fo(f, &phi_v()).unwrap();
            assert!(g.is_sentence());
            assert!(g.size() <= 20 * f.size());
        }
    }
}
