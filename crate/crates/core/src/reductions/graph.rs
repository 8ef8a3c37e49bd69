use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::Rng;
use thiserror::Error;

use crate::error::ParseError;
use crate::instance::{content_lines, parse_count};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {{{u}, {v}}} leaves the vertex range 1..={n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {{{0}, {1}}} occurs twice")]
    DuplicateEdge(usize, usize),
}

/// A simple undirected graph on vertices `1..=n`.
///
/// Edges keep their input order, which the reductions use as the edge
/// ordering; each edge is stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(GraphError::VertexOutOfRange { u: a, v: b, n });
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            out.push(e);
        }
        Ok(Self { n, edges: out })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Self::new(n, edges).expect("simple")
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|u| (u, u + 1))).expect("simple")
    }

    /// Uniformly random graph with `n` vertices and exactly `m` edges,
    /// listed in lexicographic order. Panics if `m > n(n-1)/2`.
    pub fn random_with_edges(n: usize, m: usize, rng: &mut impl Rng) -> Self {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        let mut picked = sample(rng, pairs.len(), m).into_vec();
        picked.sort_unstable();
        Self::new(n, picked.into_iter().map(|i| pairs[i])).expect("simple")
    }

    /// Random graph where each pair is an edge with probability `p`.
    pub fn random_gnp(n: usize, p: f64, rng: &mut impl Rng) -> Self {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Self::new(n, edges).expect("simple")
    }

    /// One representative of every isomorphism class of graphs on `n`
    /// vertices: the one whose edge set, read as a bitmask over the
    /// lexicographically ordered vertex pairs, is smallest. Enumerates all
    /// labelled graphs against all permutations, so only practical for
    /// `n <= 6`.
    pub fn all_up_to_isomorphism(n: usize) -> Vec<Self> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        assert!(pairs.len() < 64, "too many vertex pairs");
        let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).expect("pair");
        let maps: Vec<Vec<usize>> = permutations(n)
            .iter()
            .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
            .collect();
        let permute = |mask: u64, map: &[usize]| {
            map.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).fold(0u64, |acc, (_, &j)| acc | 1 << j)
        };
        (0..1u64 << pairs.len())
            .filter(|&mask| maps.iter().all(|m| permute(mask, m) >= mask))
            .map(|mask| {
                let edges = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| (pairs[i].0 + 1, pairs[i].1 + 1));
                Self::new(n, edges).expect("simple")
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Adjacency bitmasks, bit `j - 1` of entry `i - 1` set iff `{i, j}` is an
    /// edge. Requires `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "adjacency masks need n <= 64");
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        adj
    }

    /// Every edge subdivided once, with a leaf hung on each subdivision
    /// vertex. Vertex `i` keeps its number; for the `l`-th edge (1-based) the
    /// subdivision vertex is `n + 2l - 1` and its leaf `n + 2l`.
    pub fn subdivided_with_leaves(&self) -> Self {
        let n = self.n;
        let mut edges = Vec::with_capacity(3 * self.m());
        for (l, &(u, v)) in self.edges.iter().enumerate() {
            let w = n + 2 * l + 1;
            edges.extend([(u, w), (v, w), (w, w + 1)]);
        }
        Self::new(n + 2 * self.m(), edges).expect("simple")
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.m())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Format: `n m`, then `m` lines `u v` with `1 <= u < v <= n`. Blank lines and
/// lines starting with `#` are skipped.
impl FromStr for Graph {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut lines = content_lines(text);
        let (hl, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing header `n m`"))?;
        let two = |line: usize, s: &str, a: &str, b: &str| -> Result<(usize, usize), ParseError> {
            let toks: Vec<&str> = s.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(ParseError::new(line, format!("expected `{a} {b}`, got {s:?}")));
            }
            Ok((parse_count(toks[0], line, a)?, parse_count(toks[1], line, b)?))
        };
        let (n, m) = two(hl, header, "n", "m")?;
        let mut seen = BTreeSet::new();
        let mut edges = Vec::with_capacity(m);
        for (line, s) in lines {
            let (u, v) = two(line, s, "u", "v")?;
            if !(1 <= u && u < v && v <= n) {
                return Err(ParseError::new(line, format!("edge must satisfy 1 <= u < v <= {n}, got {u} {v}")));
            }
            if !seen.insert((u, v)) {
                return Err(ParseError::new(line, format!("duplicate edge {u} {v}")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(ParseError::new(hl, format!("header announces {m} edges, found {}", edges.len())));
        }
        Ok(Self { n, edges })
    }
}
