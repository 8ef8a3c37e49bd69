//! Model checking by direct evaluation.
//!
//! The formula is compiled into an arena in which every quantifier owns a
//! slot of the assignment and every variable occurrence points at the slot of
//! its binder. Subformulas with at most two free variables are memoised on
//! the values of those variables, which keeps the relativised formulas
//! produced by the rewriter (whose classifier and edge gadgets have one or
//! two free variables) cheap to evaluate.

use super::{FoError, Formula};
use crate::reductions::Graph;

#[derive(Debug, Clone, Copy)]
enum Node {
    Edge(usize, usize),
    Eq(usize, usize),
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
    Implies(usize, usize),
    Exists(usize, usize),
    Forall(usize, usize),
}

/// Largest graph for which two-variable subformulas get a dense memo table.
const MEMO2_MAX_N: usize = 512;

struct Compiled {
    nodes: Vec<Node>,
    /// Free slots of each node, ascending.
    free: Vec<Vec<usize>>,
    slots: usize,
}

/// Compiles `phi`; the variables in `free` get slots `0..free.len()`.
fn compile(phi: &Formula, free: &[&str]) -> Result<(Compiled, usize), FoError> {
    fn go<'a>(f: &'a Formula, scope: &mut Vec<(&'a str, usize)>, c: &mut Compiled) -> Result<usize, FoError> {
        let lookup = |v: &str, scope: &Vec<(&str, usize)>| {
            scope
                .iter()
                .rev()
                .find(|(n, _)| *n == v)
                .map(|&(_, s)| s)
                .ok_or_else(|| FoError::Unbound(v.to_string()))
        };
        let (node, free) = match f {
            Formula::Edge(x, y) | Formula::Eq(x, y) => {
                let (a, b) = (lookup(x, scope)?, lookup(y, scope)?);
                let mut free = vec![a, b];
                free.sort_unstable();
                free.dedup();
                let node = if matches!(f, Formula::Edge(..)) { Node::Edge(a, b) } else { Node::Eq(a, b) };
                (node, free)
            }
            Formula::Not(g) => {
                let i = go(g, scope, c)?;
                (Node::Not(i), c.free[i].clone())
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                let (i, j) = (go(a, scope, c)?, go(b, scope, c)?);
                let mut free = [c.free[i].as_slice(), c.free[j].as_slice()].concat();
                free.sort_unstable();
                free.dedup();
                let node = match f {
                    Formula::And(..) => Node::And(i, j),
                    Formula::Or(..) => Node::Or(i, j),
                    _ => Node::Implies(i, j),
                };
                (node, free)
            }
            Formula::Exists(x, g) | Formula::Forall(x, g) => {
                let slot = c.slots;
                c.slots += 1;
                scope.push((x, slot));
                let i = go(g, scope, c)?;
                scope.pop();
                let free = c.free[i].iter().copied().filter(|&s| s != slot).collect();
                let node = if matches!(f, Formula::Exists(..)) { Node::Exists(slot, i) } else { Node::Forall(slot, i) };
                (node, free)
            }
        };
        c.nodes.push(node);
        c.free.push(free);
        Ok(c.nodes.len() - 1)
    }
    let mut c = Compiled {
        nodes: Vec::new(),
        free: Vec::new(),
        slots: free.len(),
    };
    let mut scope = free.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let root = go(phi, &mut scope, &mut c)?;
    Ok((c, root))
}

struct Evaluator<'a> {
    c: &'a Compiled,
    n: usize,
    adj: Vec<bool>,
    env: Vec<usize>,
    /// Per node: empty (no memo) or a dense table of 0 = unknown, 1 = false, 2 = true.
    memo: Vec<Vec<u8>>,
}

impl Evaluator<'_> {
    fn key(&self, id: usize) -> usize {
        self.c.free[id].iter().fold(0, |acc, &s| acc * self.n + self.env[s])
    }

    fn eval(&mut self, id: usize) -> bool {
        let memoised = !self.memo[id].is_empty();
        let key = if memoised { self.key(id) } else { 0 };
        if memoised && self.memo[id][key] != 0 {
            return self.memo[id][key] == 2;
        }
        let value = match self.c.nodes[id] {
            Node::Edge(a, b) => self.adj[self.env[a] * self.n + self.env[b]],
            Node::Eq(a, b) => self.env[a] == self.env[b],
            Node::Not(i) => !self.eval(i),
            Node::And(i, j) => self.eval(i) && self.eval(j),
            Node::Or(i, j) => self.eval(i) || self.eval(j),
            Node::Implies(i, j) => !self.eval(i) || self.eval(j),
            Node::Exists(s, i) => (0..self.n).any(|v| {
                self.env[s] = v;
                self.eval(i)
            }),
            Node::Forall(s, i) => (0..self.n).all(|v| {
                self.env[s] = v;
                self.eval(i)
            }),
        };
        if memoised {
            self.memo[id][key] = 1 + value as u8;
        }
        value
    }
}

/// Whether `g` satisfies the sentence `phi`. Vertices are the domain; `E` is
/// the (symmetric, irreflexive) edge relation.
pub fn eval_fo(g: &Graph, phi: &Formula) -> Result<bool, FoError> {
    if let Some(v) = phi.free_vars().into_iter().next() {
        return Err(FoError::Unbound(v));
    }
    let (c, root) = compile(phi, &[])?;
    Ok(Evaluator::new(&c, g).eval(root))
}

/// Vertices (1-based) satisfying a formula with exactly one free variable.
pub fn satisfying_vertices(g: &Graph, phi: &Formula) -> Result<Vec<usize>, FoError> {
    let free = phi.free_vars();
    if free.len() != 1 {
        return Err(FoError::ClassifierArity(free.len()));
    }
    let x = free.first().expect("one free variable");
    let (c, root) = compile(phi, &[x.as_str()])?;
    let mut ev = Evaluator::new(&c, g);
    Ok((0..g.n())
        .filter(|&v| {
            ev.env[0] = v;
            ev.eval(root)
        })
        .map(|v| v + 1)
        .collect())
}

impl<'a> Evaluator<'a> {
    fn new(c: &'a Compiled, g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![false; n * n];
        for &(u, v) in g.edges() {
            adj[(u - 1) * n + (v - 1)] = true;
            adj[(v - 1) * n + (u - 1)] = true;
        }
        let memo = c
            .free
            .iter()
            .enumerate()
            .map(|(id, free)| {
                let cheap = matches!(c.nodes[id], Node::Edge(..) | Node::Eq(..));
                match free.len() {
                    1 | 2 if !cheap && (free.len() == 1 || n <= MEMO2_MAX_N) => vec![0u8; n.pow(free.len() as u32)],
                    _ => Vec::new(),
                }
            })
            .collect();
        Self {
            c,
            n,
            adj,
            env: vec![0; c.slots],
            memo,
        }
    }
}
