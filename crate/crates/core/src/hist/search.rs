use crate::graph::{bits, Graph};

use super::{no_hist_certificate, Certificate, Edge, HistOutcome, SearchError};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Abort with [`SearchError::BudgetExceeded`] after this many search nodes.
    pub node_budget: Option<u64>,
}

/// Exact HIST decision with an unlimited node budget.
pub fn find_hist(g: &Graph) -> Result<HistOutcome, SearchError> {
    find_hist_with(g, &SearchOptions::default())
}

/// Exact HIST decision: structural certificates first, then a complete
/// backtracking search over spanning trees grown from a maximum-degree root.
///
/// The tree is grown one frontier edge at a time, each edge either taken or
/// excluded. A branch dies when a tree vertex is stuck at tree degree 2 with
/// no frontier edges left, or when the excluded edges disconnect the graph.
/// Trees on one or two vertices are HISTs; connected graphs on three vertices
/// never have one.
pub fn find_hist_with(g: &Graph, opts: &SearchOptions) -> Result<HistOutcome, SearchError> {
    let n = g.order();
    let Some(rows) = g.word_rows() else {
        return Err(SearchError::TooLarge(n));
    };
    if n == 0 || !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    if n == 1 {
        return Ok(HistOutcome::Found(Vec::new()));
    }
    if let Some(c) = no_hist_certificate(g) {
        return Ok(HistOutcome::NoHist(c));
    }
    let mut s = Search::new(rows, opts.node_budget);
    if s.run()? {
        Ok(HistOutcome::Found(s.tree))
    } else {
        Ok(HistOutcome::NoHist(Certificate::ExhaustedSearch))
    }
}

struct Search {
    n: usize,
    all: u64,
    /// Neighbours whose edge has not been excluded.
    avail: [u64; 64],
    tree_degree: [u8; 64],
    in_tree: u64,
    tree: Vec<Edge>,
    /// Vertices by decreasing graph degree, ties by id.
    priority: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl Search {
    fn new(rows: &[u64], budget: Option<u64>) -> Self {
        let n = rows.len();
        let mut avail = [0u64; 64];
        avail[..n].copy_from_slice(rows);
        let mut priority: Vec<usize> = (0..n).collect();
        priority.sort_by_key(|&v| (std::cmp::Reverse(rows[v].count_ones()), v));
        let root = priority[0];
        Search {
            n,
            all: u64::MAX >> (64 - n),
            avail,
            tree_degree: [0; 64],
            in_tree: 1 << root,
            tree: Vec::with_capacity(n - 1),
            priority,
            nodes: 0,
            budget,
        }
    }

    fn run(&mut self) -> Result<bool, SearchError> {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                return Err(SearchError::BudgetExceeded(b));
            }
        }
        if self.in_tree == self.all {
            return Ok(self.tree_degree[..self.n].iter().all(|&d| d != 2));
        }
        if !self.feasible() {
            return Ok(false);
        }

        let outside = !self.in_tree;
        // a tree vertex at degree 2 must grow again; otherwise pick the hub
        let stuck = bits(self.in_tree)
            .find(|&v| self.tree_degree[v] == 2 && self.avail[v] & outside != 0);
        let v = match stuck {
            Some(v) => v,
            None => *self
                .priority
                .iter()
                .find(|&&v| self.in_tree >> v & 1 == 1 && self.avail[v] & outside != 0)
                .expect("feasible state has a frontier edge"),
        };
        let frontier = self.avail[v] & outside;
        let w = *self
            .priority
            .iter()
            .find(|&&w| frontier >> w & 1 == 1)
            .expect("frontier is nonempty");
        let forced = self.tree_degree[v] == 2 && frontier.count_ones() == 1;

        self.in_tree |= 1 << w;
        self.tree_degree[v] += 1;
        self.tree_degree[w] += 1;
        self.tree.push((v.min(w), v.max(w)));
        if self.run()? {
            return Ok(true);
        }
        self.tree.pop();
        self.tree_degree[v] -= 1;
        self.tree_degree[w] -= 1;
        self.in_tree &= !(1 << w);

        if forced {
            return Ok(false);
        }
        self.avail[v] &= !(1 << w);
        self.avail[w] &= !(1 << v);
        let found = self.run()?;
        self.avail[v] |= 1 << w;
        self.avail[w] |= 1 << v;
        Ok(found)
    }

    fn feasible(&self) -> bool {
        let outside = !self.in_tree;
        for v in bits(self.in_tree) {
            if self.tree_degree[v] == 2 && self.avail[v] & outside == 0 {
                return false;
            }
        }
        // every vertex must still be reachable from the tree through
        // non-excluded edges
        let mut seen = self.in_tree;
        let mut frontier = self.in_tree;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.avail[v];
            }
            next &= !seen;
            seen |= next;
            frontier = next;
        }
        seen == self.all
    }
}
