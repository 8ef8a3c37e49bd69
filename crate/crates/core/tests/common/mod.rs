//! Independent reference implementations used only by the tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use wildcard_diversity::fo::Formula;
use wildcard_diversity::reductions::Graph;

/// Truth-table evaluator: each subformula is tabulated over every assignment
/// of every variable name in the sentence, bottom-up, with no sharing of code
/// with the library evaluator.
pub fn truth_table(g: &Graph, phi: &Formula) -> bool {
    let vars: Vec<String> = phi.variables().into_iter().collect();
    let n = g.n();
    let assignments: Vec<Vec<usize>> = if vars.is_empty() {
        vec![vec![]]
    } else {
        (0..vars.len()).map(|_| 0..n).multi_cartesian_product().collect()
    };
    let index: BTreeMap<Vec<usize>, usize> = assignments.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
    let pos = |v: &str| vars.iter().position(|x| x == v).unwrap();
    let adjacent = |a: usize, b: usize| g.edges().contains(&(a.min(b) + 1, a.max(b) + 1));

    fn table(
        f: &Formula,
        asg: &[Vec<usize>],
        index: &BTreeMap<Vec<usize>, usize>,
        n: usize,
        pos: &dyn Fn(&str) -> usize,
        adjacent: &dyn Fn(usize, usize) -> bool,
    ) -> Vec<bool> {
        let sub = |g: &Formula| table(g, asg, index, n, pos, adjacent);
        match f {
            Formula::Edge(x, y) => asg.iter().map(|a| adjacent(a[pos(x)], a[pos(y)]) && a[pos(x)] != a[pos(y)]).collect(),
            Formula::Eq(x, y) => asg.iter().map(|a| a[pos(x)] == a[pos(y)]).collect(),
            Formula::Not(g) => sub(g).into_iter().map(|b| !b).collect(),
            Formula::And(p, q) => sub(p).into_iter().zip(sub(q)).map(|(a, b)| a && b).collect(),
            Formula::Or(p, q) => sub(p).into_iter().zip(sub(q)).map(|(a, b)| a || b).collect(),
            Formula::Implies(p, q) => sub(p).into_iter().zip(sub(q)).map(|(a, b)| !a || b).collect(),
            Formula::Exists(x, g) | Formula::Forall(x, g) => {
                let inner = sub(g);
                let i = pos(x);
                let is_exists = matches!(f, Formula::Exists(..));
                asg.iter()
                    .map(|a| {
                        let mut values = (0..n).map(|v| {
                            let mut b = a.clone();
                            b[i] = v;
                            inner[index[&b]]
                        });
                        if is_exists {
                            values.any(|t| t)
                        } else {
                            values.all(|t| t)
                        }
                    })
                    .collect()
            }
        }
    }

    if n == 0 {
        // no assignments at all: evaluate structurally on the empty domain
        return empty_domain(phi);
    }
    let t = table(phi, &assignments, &index, n, &pos, &adjacent);
    t[0]
}

fn empty_domain(f: &Formula) -> bool {
    match f {
        Formula::Exists(..) => false,
        Formula::Forall(..) => true,
        Formula::Not(g) => !empty_domain(g),
        Formula::And(a, b) => empty_domain(a) && empty_domain(b),
        Formula::Or(a, b) => empty_domain(a) || empty_domain(b),
        Formula::Implies(a, b) => !empty_domain(a) || empty_domain(b),
        Formula::Edge(..) | Formula::Eq(..) => unreachable!("sentences have no free atoms"),
    }
}

/// Independence number by trying subsets from the largest size down.
pub fn independence_number(g: &Graph) -> usize {
    let edges: BTreeSet<(usize, usize)> = g.edge_set();
    (0..=g.n())
        .rev()
        .find(|&s| {
            (1..=g.n())
                .combinations(s)
                .any(|c| c.iter().tuple_combinations().all(|(&a, &b)| !edges.contains(&(a, b))))
        })
        .unwrap_or(0)
}

/// Hamming distance between complete rows given as strings.
pub fn hamming(a: &str, b: &str) -> usize {
    a.bytes().zip(b.bytes()).filter(|(x, y)| x != y).count()
}

/// `3^(c) * sum_{alpha=1}^{c+r} alpha! * B^alpha` with `c = (k-1)(r+1)` and
/// `B = (k-1) * 2 * (3c + 2r)`, in u128 with overflow reported as `None`.
pub fn zeta_u128(k: u128, r: u128) -> Option<u128> {
    let c = (k - 1) * (r + 1);
    let b = (k - 1) * 2 * (3 * c + 2 * r);
    let mut sum: u128 = 0;
    let mut fact: u128 = 1;
    let mut pow: u128 = 1;
    for alpha in 1..=c + r {
        fact = fact.checked_mul(alpha)?;
        pow = pow.checked_mul(b)?;
        sum = sum.checked_add(fact.checked_mul(pow)?)?;
    }
    3u128.checked_pow(c as u32)?.checked_mul(sum)
}

/// Pairwise intersections of the chosen members all equal `core`.
pub fn is_sunflower(members: &[&[u32]], core: &[u32]) -> bool {
    members.iter().tuple_combinations().all(|(a, b)| {
        let inter: Vec<u32> = a.iter().filter(|x| b.contains(x)).copied().collect();
        inter == core
    })
}
