//! Exhaustive checks of the reductions against independent set.

use serde::Serialize;

use super::{reduce_is_to_r2, Graph, R2Mode};
use crate::solver::{oracle_solve_with, OracleLimits, SolverError};
use crate::vector::PartialVector;

/// Size of a maximum independent set, by branching on a vertex of the
/// remaining set. Requires `n <= 64`.
pub fn max_independent_set(g: &Graph) -> usize {
    fn go(adj: &[u64], left: u64) -> usize {
        if left == 0 {
            return 0;
        }
        let v = left.trailing_zeros() as usize;
        let rest = left & !(1 << v);
        let with = 1 + go(adj, rest & !adj[v]);
        if adj[v] & rest == 0 {
            return with;
        }
        with.max(go(adj, rest))
    }
    let adj = g.adjacency_masks();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    go(&adj, all)
}

pub fn has_independent_set(g: &Graph, k: usize) -> bool {
    max_independent_set(g) >= k
}

/// One (graph, mode, k) comparison of the threshold-2 reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct R2Cell {
    pub graph: usize,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub mode: R2Mode,
    pub k: usize,
    pub independent_set: bool,
    pub diversity: bool,
    pub agree: bool,
    /// Row pairs whose "distance at most 2" status differs from adjacency in
    /// the twice-subdivided graph.
    pub adjacency_mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct R2Report {
    pub cells: Vec<R2Cell>,
    pub total: usize,
    pub agreements: usize,
    pub discrepancies: Vec<usize>,
}

/// Runs both coordinate modes and every `k` in `ks` on each graph.
pub fn r2_harness(graphs: &[Graph], ks: &[usize]) -> Result<R2Report, SolverError> {
    let mut cells = Vec::new();
    for (gi, g) in graphs.iter().enumerate() {
        let mis = max_independent_set(g);
        for mode in R2Mode::ALL {
            let mismatches = adjacency_mismatches(g, mode);
            for &k in ks {
                let inst = reduce_is_to_r2(g, k, mode);
                let limits = OracleLimits {
                    max_rows: inst.len().max(OracleLimits::default().max_rows),
                    ..OracleLimits::default()
                };
                let diversity = oracle_solve_with(&inst, limits)?.is_yes();
                let independent_set = mis >= k;
                cells.push(R2Cell {
                    graph: gi,
                    n: g.n(),
                    edges: g.edges().to_vec(),
                    mode,
                    k,
                    independent_set,
                    diversity,
                    agree: independent_set == diversity,
                    adjacency_mismatches: mismatches,
                });
            }
        }
    }
    let discrepancies: Vec<usize> = cells.iter().enumerate().filter(|(_, c)| !c.agree).map(|(i, _)| i).collect();
    Ok(R2Report {
        total: cells.len(),
        agreements: cells.len() - discrepancies.len(),
        discrepancies,
        cells,
    })
}

/// The twice-subdivided graph in row order: vertex `i` is row `i`, and the
/// `l`-th edge `{u, v}` becomes the path `u - e1 - e2 - v` with `e1`, `e2` at
/// rows `n + 2l - 1`, `n + 2l` (1-based).
pub fn twice_subdivided(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::new();
    for (l, &(u, v)) in g.edges().iter().enumerate() {
        let e1 = n + 2 * l + 1;
        edges.extend([(u, e1), (e1, e1 + 1), (v, e1 + 1)]);
    }
    Graph::new(n + 2 * g.m(), edges).expect("simple")
}

fn adjacency_mismatches(g: &Graph, mode: R2Mode) -> usize {
    let rows: Vec<PartialVector> = reduce_is_to_r2(g, 0, mode).rows().to_vec();
    let target = twice_subdivided(g);
    let mut count = 0;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let close = rows[i].delta_unchecked(&rows[j]) <= 2;
            if close != target.has_edge(i + 1, j + 1) {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independence_numbers() {
        assert_eq!(max_independent_set(&Graph::complete(4)), 1);
        assert_eq!(max_independent_set(&Graph::path(5)), 3);
        assert_eq!(max_independent_set(&Graph::empty(6)), 6);
        assert_eq!(max_independent_set(&Graph::empty(0)), 0);
    }

    #[test]
    fn k2_harness() {
        let report = r2_harness(&[Graph::complete(2)], &[0, 1, 2]).unwrap();
        assert_eq!(report.total, 6);
        let pairs: Vec<&R2Cell> = report.cells.iter().filter(|c| c.mode == R2Mode::DisjointPairs).collect();
        assert!(pairs.iter().all(|c| c.agree && c.adjacency_mismatches == 0));
        // verbatim: e1 coincides with v1, which sits at distance 0
        let verbatim = report.cells.iter().find(|c| c.mode == R2Mode::Verbatim).unwrap();
        assert!(verbatim.adjacency_mismatches > 0);
    }
}
