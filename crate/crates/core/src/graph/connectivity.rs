use super::{Graph, GraphError, VertexSet};

/// Vertices reachable from `start` inside the single-word vertex mask `alive`.
#[inline]
pub(crate) fn reach_word(rows: &[u64], alive: u64, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        next &= alive & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

#[inline]
fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Breadth-first reachability from vertex 0. The order-0 graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        if let Some(rows) = self.word_rows() {
            let all = full_mask(self.n);
            return reach_word(rows, all, 0) == all;
        }
        let mut seen = VertexSet::empty(self.n);
        seen.insert(0);
        let mut queue = vec![0usize];
        let mut count = 1;
        while let Some(v) = queue.pop() {
            for w in self.neighbors(v) {
                if !seen.contains(w) {
                    seen.insert(w);
                    count += 1;
                    queue.push(w);
                }
            }
        }
        count == self.n
    }

    /// Articulation vertices, by the iterative low-link depth-first search.
    pub fn cut_vertices(&self) -> Result<VertexSet, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = self.n;
        let mut cuts = VertexSet::empty(n);
        if n <= 2 {
            return Ok(cuts);
        }
        let adj: Vec<Vec<usize>> = (0..n).map(|v| self.neighbors(v).collect()).collect();
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![UNSEEN; n];
        let mut next_edge = vec![0usize; n];
        let mut root_children = 0;
        let mut time = 0;

        let root = 0;
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack = vec![root];
        while let Some(&v) = stack.last() {
            if next_edge[v] < adj[v].len() {
                let w = adj[v][next_edge[v]];
                next_edge[v] += 1;
                if disc[w] == UNSEEN {
                    parent[w] = v;
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push(w);
                } else if w != parent[v] {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                let p = parent[v];
                if p != UNSEEN {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        cuts.insert(p);
                    }
                }
            }
        }
        if root_children > 1 {
            cuts.insert(root);
        }
        Ok(cuts)
    }

    /// Connected with no cut vertex. Defined for `n >= 3` only.
    pub fn is_2_connected(&self) -> Result<bool, GraphError> {
        if self.n < 3 {
            return Err(GraphError::TooSmall(self.n));
        }
        if let Some(rows) = self.word_rows() {
            let all = full_mask(self.n);
            if reach_word(rows, all, 0) != all {
                return Ok(false);
            }
            for v in 0..self.n {
                let alive = all & !(1 << v);
                let start = alive.trailing_zeros() as usize;
                if reach_word(rows, alive, start) != alive {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        if !self.is_connected() {
            return Ok(false);
        }
        Ok(self.cut_vertices()?.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
        (0..g.order())
            .filter(|&v| {
                let rest = VertexSet::from_vertices(g.order(), (0..g.order()).filter(|&w| w != v));
                !g.induced_subgraph(&rest).unwrap().is_connected()
            })
            .collect()
    }

    #[test]
    fn connectivity_examples() {
        assert!(Family::Complete(5).build().unwrap().is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.cut_vertices(), Err(GraphError::Disconnected));
        assert!(Family::B(8).build().unwrap().is_connected());
    }

    #[test]
    fn cut_vertex_examples() {
        let l7 = Family::L(7).build().unwrap();
        let cuts: Vec<_> = l7.cut_vertices().unwrap().iter().collect();
        assert_eq!(cuts, brute_cut_vertices(&l7));
        // path interior vertex 1 and clique attachment 2; pendant 0 is not a cut vertex
        assert_eq!(cuts, vec![1, 2]);
        assert!(Family::Complete(6).build().unwrap().cut_vertices().unwrap().is_empty());
        let p4 = Family::Path(4).build().unwrap();
        assert_eq!(p4.cut_vertices().unwrap().iter().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn two_connectivity_examples() {
        assert_eq!(Family::B(8).build().unwrap().is_2_connected(), Ok(true));
        assert_eq!(Family::L(7).build().unwrap().is_2_connected(), Ok(false));
        assert_eq!(Family::Cycle(5).build().unwrap().is_2_connected(), Ok(true));
        assert_eq!(
            Family::Complete(2).build().unwrap().is_2_connected(),
            Err(GraphError::TooSmall(2))
        );
    }

    #[test]
    fn multiword_paths_agree_with_brute_force() {
        let mut g = Family::L(70).build().unwrap();
        g.add_edge(0, 40).unwrap();
        assert!(g.word_rows().is_none());
        let cuts: Vec<_> = g.cut_vertices().unwrap().iter().collect();
        assert_eq!(cuts, brute_cut_vertices(&g));
        assert_eq!(g.is_2_connected(), Ok(true));
        assert_eq!(Family::L(70).build().unwrap().is_2_connected(), Ok(false));
    }

    #[test]
    fn exhaustive_small_graphs_match_brute_force() {
        for n in 3..=6usize {
            let pairs: Vec<(usize, usize)> =
                (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for mask in 0u64..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let connected = g.is_connected();
                let brute = connected && brute_cut_vertices(&g).is_empty();
                assert_eq!(g.is_2_connected().unwrap(), brute, "{g:?}");
                if connected {
                    let cuts: Vec<_> = g.cut_vertices().unwrap().iter().collect();
                    assert_eq!(cuts, brute_cut_vertices(&g), "{g:?}");
                }
            }
        }
    }
}
