//! Simple undirected graphs stored as adjacency bit rows, plus the structural
//! predicates used throughout the crate: degrees, connectivity, cut vertices,
//! induced subgraphs and the named families.

mod bitset;
mod connectivity;
mod families;

use std::fmt;

pub use bitset::VertexSet;
pub(crate) use bitset::{bits, BitIter};
pub(crate) use connectivity::reach_word;
pub use families::{matches_bn, matches_ln, Family};

use bitset::words_for;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph of order {0} is too small for this operation")]
    TooSmall(usize),
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("adjacency rows are not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
}

/// A simple undirected graph on vertices `0..n`.
///
/// Each vertex owns a row of `words` 64-bit words; bit `v` of row `u` is set
/// iff `uv` is an edge. Rows are kept symmetric and loop-free by every
/// constructor and mutator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph of order `n <= 64` from single-word adjacency rows.
    pub fn from_rows(rows: &[u64]) -> Result<Self, GraphError> {
        let n = rows.len();
        assert!(n <= 64, "single-word rows only cover n <= 64");
        for (u, &row) in rows.iter().enumerate() {
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            if n < 64 && row >> n != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: 63 - row.leading_zeros() as usize,
                    n,
                });
            }
            for v in bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    /// Like [`Graph::from_rows`] without validation; callers guarantee symmetry.
    pub(crate) fn from_rows_unchecked(rows: &[u64]) -> Self {
        Graph {
            n: rows.len(),
            words: 1,
            rows: if rows.is_empty() { Vec::new() } else { rows.to_vec() },
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let w = self.words;
        self.rows[u * w + v / 64] |= 1 << (v % 64);
        self.rows[v * w + u / 64] |= 1 << (u % 64);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let w = self.words;
        self.rows[u * w + v / 64] &= !(1 << (v % 64));
        self.rows[v * w + u / 64] &= !(1 << (u % 64));
        Ok(())
    }

    /// Copy of the graph with the edge `uv` deleted.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        Ok(g)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).max().unwrap_or(0)
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).min().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.deg(v)).collect()
    }

    /// Neighbours of `v` in increasing order. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(v))
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_vertices(self.n, self.neighbors(v))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Single-word adjacency rows, available when `n <= 64`.
    pub fn word_rows(&self) -> Option<&[u64]> {
        (self.words == 1).then_some(&self.rows[..])
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// G[S], relabelled so that the members of `s` become `0..|s|` in order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if let Some(v) = s.iter().find(|&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let members: Vec<usize> = s.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(members.len());
        for (i, &v) in members.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// True iff `s` induces a complete subgraph.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let members: Vec<usize> = s.iter().collect();
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True iff `s` contains no edge.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|u| self.row(u).iter().zip(s.words()).all(|(a, b)| a & b == 0))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
