//! Instance generators from graph problems, and the graph side of the
//! hypercube embedding.
//!
//! * [`reduce_is_to_diversity`]: independent sets of `G` become diversity
//!   sets at threshold `2n - 4`.
//! * [`reduce_is_to_r2`]: the same at threshold 2, via a twice-subdivided `G`.
//! * [`embed_subdivided`] and [`distance_graph`]: `H` with every edge
//!   subdivided and a leaf on each subdivision vertex, realised as rows whose
//!   distance-1 graph is exactly that graph.
//!
//! Vertex and edge orderings are taken from the input graph, so every
//! generator is a deterministic function of its input.

mod graph;
pub mod harness;

use serde::Serialize;
use thiserror::Error;

pub use graph::{Graph, GraphError};

use crate::error::ModelError;
use crate::instance::Instance;
use crate::vector::PartialVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("the reduction needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("row {0} has unknown entries")]
    Incomplete(usize),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Coordinate scheme for [`reduce_is_to_r2`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum R2Mode {
    /// Vertex `i` owns coordinates `i` and `i + 1`; consecutive vertices overlap.
    Verbatim,
    /// Vertex `i` owns coordinates `2i - 1` and `2i`.
    DisjointPairs,
}

impl R2Mode {
    pub const ALL: [R2Mode; 2] = [R2Mode::Verbatim, R2Mode::DisjointPairs];

    /// The two coordinates owned by vertex `i` (both 1-based).
    fn pair(self, i: usize) -> (usize, usize) {
        match self {
            R2Mode::Verbatim => (i, i + 1),
            R2Mode::DisjointPairs => (2 * i - 1, 2 * i),
        }
    }
}

fn ones(d: usize, coords: impl IntoIterator<Item = usize>) -> PartialVector {
    PartialVector::with_ones(d, coords.into_iter().map(|c| c - 1))
}

/// `(M, k, 2n - 4)` over `d = m + n(n - 1)` coordinates. Row `i` has ones at
/// the edges incident to `v_i`, then pads its private block of `n - 1`
/// coordinates with `n - 1 - deg(v_i)` leading ones. All rows have weight
/// `n - 1`, so adjacent vertices are at distance `2n - 4` and the others at
/// `2n - 2`.
pub fn reduce_is_to_diversity(g: &Graph, k: usize) -> Result<Instance, ReductionError> {
    let (n, m) = (g.n(), g.m());
    if n < 2 {
        return Err(ReductionError::TooFewVertices(n));
    }
    let d = m + n * (n - 1);
    let rows = (1..=n)
        .map(|i| {
            let incident = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| u == i || v == i)
                .map(|(j, _)| j + 1);
            let block = m + (i - 1) * (n - 1);
            let pad = (block + 1..).take(n - 1 - g.degree(i));
            ones(d, incident.chain(pad).collect::<Vec<_>>())
        })
        .collect();
    Ok(Instance::new(d, k, 2 * n - 4, rows)?)
}

/// `(M, |E| + k, 2)` over `d = 2n` coordinates. Rows: one per vertex, then
/// for each edge `{v_i, v_j}` (`i < j`) the two subdivision rows
/// `e1 = pair(i) + first(j)` and `e2 = pair(j) + first(i)`.
pub fn reduce_is_to_r2(g: &Graph, k: usize, mode: R2Mode) -> Instance {
    let d = 2 * g.n();
    let mut rows: Vec<PartialVector> = (1..=g.n())
        .map(|i| {
            let (a, b) = mode.pair(i);
            ones(d, [a, b])
        })
        .collect();
    for &(i, j) in g.edges() {
        let (pi, pj) = (mode.pair(i), mode.pair(j));
        rows.push(ones(d, [pi.0, pi.1, pj.0]));
        rows.push(ones(d, [pj.0, pj.1, pi.0]));
    }
    Instance::new(d, g.m() + k, 2, rows).expect("rows have length 2n")
}

/// Rows over `{0,1}^(n+m)`: the unit vectors `r_1..r_n`, then per edge
/// `e_l = {v_i, v_j}` the rows `{i, j}` and `{i, j, n + l}`.
pub fn embed_subdivided(h: &Graph) -> Vec<PartialVector> {
    let (n, m) = (h.n(), h.m());
    let d = n + m;
    let mut rows: Vec<PartialVector> = (1..=n).map(|i| ones(d, [i])).collect();
    for (l, &(i, j)) in h.edges().iter().enumerate() {
        rows.push(ones(d, [i, j]));
        rows.push(ones(d, [i, j, n + l + 1]));
    }
    rows
}

/// Graph on the rows (row `i` is vertex `i + 1`) with an edge whenever the
/// Hamming distance lies in `1..=r`. Rows must be fully known.
pub fn distance_graph(rows: &[PartialVector], r: usize) -> Result<Graph, ReductionError> {
    if let Some(i) = rows.iter().position(|x| !x.is_complete()) {
        return Err(ReductionError::Incomplete(i));
    }
    let mut edges = Vec::new();
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate().skip(i + 1) {
            let dist = a.delta(b)?;
            if (1..=r).contains(&dist) {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Ok(Graph::new(rows.len(), edges).expect("simple"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(rows: &[PartialVector]) -> Vec<String> {
        rows.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn is_reduction_on_p3() {
        let inst = reduce_is_to_diversity(&Graph::path(3), 2).unwrap();
        assert_eq!((inst.d(), inst.k(), inst.r()), (8, 2, 2));
        assert_eq!(strings(inst.rows()), ["10100000", "11000000", "01000010"]);
        assert_eq!(inst.row(0).delta_unchecked(inst.row(1)), 2);
        assert_eq!(inst.row(0).delta_unchecked(inst.row(2)), 4);
    }

    #[test]
    fn is_reduction_degenerate_sizes() {
        let k2 = reduce_is_to_diversity(&Graph::complete(2), 1).unwrap();
        assert_eq!(k2.r(), 0);
        assert_eq!(k2.row(0).delta_unchecked(k2.row(1)), 0);
        assert_eq!(
            reduce_is_to_diversity(&Graph::empty(1), 1),
            Err(ReductionError::TooFewVertices(1))
        );
    }

    #[test]
    fn r2_reduction_on_k2() {
        let k2 = Graph::complete(2);
        let pairs = reduce_is_to_r2(&k2, 1, R2Mode::DisjointPairs);
        assert_eq!(strings(pairs.rows()), ["1100", "0011", "1110", "1011"]);
        assert_eq!((pairs.k(), pairs.r()), (2, 2));
        let g = distance_graph(pairs.rows(), 2).unwrap();
        assert_eq!(g.edges(), &[(1, 3), (2, 4), (3, 4)]);

        assert_eq!(pairs.row(2).delta_unchecked(pairs.row(3)), 2);

        // With overlapping pairs and j = i + 1, e1 = {i, i+1} collapses onto
        // v_i and sits at distance 1 from e2.
        let verbatim = reduce_is_to_r2(&k2, 1, R2Mode::Verbatim);
        assert_eq!(verbatim.row(0), verbatim.row(2));
        assert_eq!(verbatim.row(2).delta_unchecked(verbatim.row(3)), 1);
        let far = reduce_is_to_r2(&Graph::new(3, [(1, 3)]).unwrap(), 1, R2Mode::Verbatim);
        assert_eq!(far.row(3).delta_unchecked(far.row(4)), 2);
    }

    #[test]
    fn embedding_of_k2() {
        let rows = embed_subdivided(&Graph::complete(2));
        assert_eq!(strings(&rows), ["100", "010", "110", "111"]);
        let g = distance_graph(&rows, 1).unwrap();
        assert_eq!(g.edge_set(), Graph::complete(2).subdivided_with_leaves().edge_set());
    }

    #[test]
    fn distance_graph_extremes() {
        let rows = embed_subdivided(&Graph::path(3));
        assert_eq!(distance_graph(&rows, 0).unwrap().m(), 0);
        let all = distance_graph(&rows, rows[0].len()).unwrap();
        assert_eq!(all.m(), rows.len() * (rows.len() - 1) / 2);
        let partial = vec!["0?".parse().unwrap()];
        assert_eq!(distance_graph(&partial, 1), Err(ReductionError::Incomplete(0)));
    }
}
