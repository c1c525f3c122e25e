use std::ops::ControlFlow;

use crate::graph::Graph;

use super::{is_hist, Edge, HistOutcome, SearchError};
use super::Certificate;

/// Default cap on the number of spanning trees the oracle will visit.
pub const DEFAULT_TREE_CAP: u64 = 10_000_000;

/// Calls `visit` on every spanning tree of `g`, each given as `n - 1` edges
/// in edge-list order. Returns the number of trees visited.
///
/// Trees are generated by include/exclude branching over the edge list: an
/// edge is included only if it joins two components, and excluded only if the
/// remaining edges can still span. Stops early when `visit` breaks; fails
/// once more than `cap` trees have been seen.
pub fn for_each_spanning_tree<F>(g: &Graph, cap: u64, mut visit: F) -> Result<u64, SearchError>
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    let n = g.order();
    if n == 0 || !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    let edges: Vec<Edge> = g.edges().collect();
    let mut e = Enumerator {
        n,
        edges: &edges,
        chosen: Vec::with_capacity(n.saturating_sub(1)),
        excluded: vec![false; edges.len()],
        count: 0,
        cap,
    };
    if n == 1 {
        e.count = 1;
        let _ = visit(&[]);
        return Ok(1);
    }
    let _ = e.recurse(0, &mut visit)?;
    Ok(e.count)
}

struct Enumerator<'a> {
    n: usize,
    edges: &'a [Edge],
    chosen: Vec<Edge>,
    excluded: Vec<bool>,
    count: u64,
    cap: u64,
}

impl Enumerator<'_> {
    fn components(&self, upto_chosen: bool, from: usize) -> (Vec<usize>, usize) {
        let mut parent: Vec<usize> = (0..self.n).collect();
        let mut parts = self.n;
        let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra] = rb;
                true
            } else {
                false
            }
        };
        for &(a, b) in &self.chosen {
            if union(&mut parent, a, b) {
                parts -= 1;
            }
        }
        if !upto_chosen {
            for (i, &(a, b)) in self.edges.iter().enumerate().skip(from) {
                if !self.excluded[i] && union(&mut parent, a, b) {
                    parts -= 1;
                }
            }
        }
        (parent, parts)
    }

    fn recurse<F>(&mut self, i: usize, visit: &mut F) -> Result<ControlFlow<()>, SearchError>
    where
        F: FnMut(&[Edge]) -> ControlFlow<()>,
    {
        if self.chosen.len() == self.n - 1 {
            self.count += 1;
            if self.count > self.cap {
                return Err(SearchError::TreeCapExceeded(self.cap));
            }
            return Ok(visit(&self.chosen));
        }
        if i == self.edges.len() {
            return Ok(ControlFlow::Continue(()));
        }
        let (a, b) = self.edges[i];
        let (mut parent, _) = self.components(true, 0);
        if find(&mut parent, a) != find(&mut parent, b) {
            self.chosen.push((a, b));
            let flow = self.recurse(i + 1, visit)?;
            self.chosen.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        self.excluded[i] = true;
        let (_, parts) = self.components(false, i + 1);
        let flow = if parts == 1 {
            self.recurse(i + 1, visit)?
        } else {
            ControlFlow::Continue(())
        };
        self.excluded[i] = false;
        Ok(flow)
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Number of spanning trees of `g`, or an error past `cap`.
pub fn spanning_tree_count(g: &Graph, cap: u64) -> Result<u64, SearchError> {
    for_each_spanning_tree(g, cap, |_| ControlFlow::Continue(()))
}

/// Reference HIST decision by exhaustive spanning-tree enumeration.
pub fn oracle_hist(g: &Graph, cap: u64) -> Result<HistOutcome, SearchError> {
    let mut found = None;
    for_each_spanning_tree(g, cap, |t| {
        if is_hist(g, t) {
            found = Some(t.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(match found {
        Some(t) => HistOutcome::Found(t),
        None => HistOutcome::NoHist(Certificate::ExhaustedSearch),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn count(f: Family) -> u64 {
        spanning_tree_count(&f.build().unwrap(), DEFAULT_TREE_CAP).unwrap()
    }

    #[test]
    fn cayley_and_classic_counts() {
        for n in 1..=7u32 {
            let expected = if n == 1 { 1 } else { (n as u64).pow(n - 2) };
            assert_eq!(count(Family::Complete(n as usize)), expected, "K_{n}");
        }
        assert_eq!(count(Family::Cycle(9)), 9);
        assert_eq!(count(Family::Path(6)), 1);
        // p^(q-1) q^(p-1)
        assert_eq!(count(Family::CompleteBipartite(3, 4)), 27 * 16);
    }

    #[test]
    fn claws_of_k4() {
        let k4 = Family::Complete(4).build().unwrap();
        let mut claws = 0;
        let total = for_each_spanning_tree(&k4, DEFAULT_TREE_CAP, |t| {
            if is_hist(&k4, t) {
                claws += 1;
            }
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!((total, claws), (16, 4));
    }

    #[test]
    fn oracle_decisions() {
        let l7 = Family::L(7).build().unwrap();
        assert!(!oracle_hist(&l7, DEFAULT_TREE_CAP).unwrap().is_found());
        let k6 = Family::Complete(6).build().unwrap();
        let t = oracle_hist(&k6, DEFAULT_TREE_CAP).unwrap();
        assert!(is_hist(&k6, t.tree().unwrap()));
    }

    #[test]
    fn cap_and_disconnected() {
        let k6 = Family::Complete(6).build().unwrap();
        assert_eq!(
            spanning_tree_count(&k6, 100),
            Err(SearchError::TreeCapExceeded(100))
        );
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_count(&split, 10), Err(SearchError::Disconnected));
    }
}
