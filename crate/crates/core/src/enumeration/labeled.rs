use crate::graph::{bits, Graph};

use super::{Prescreen, VerifyError};

/// Largest order for which all `2^C(n,2)` labelled graphs are enumerated.
pub const MAX_LABELED_ORDER: usize = 8;

/// Vertex pairs in graph6 column order: `(i, j)` with `i < j`, by `j` then `i`.
pub(crate) fn pair_table(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Adjacency rows of the labelled graph whose edge set is `mask`.
#[inline]
pub(crate) fn mask_rows(pairs: &[(usize, usize)], mask: u64, rows: &mut [u64]) {
    rows.fill(0);
    for k in bits(mask) {
        let (i, j) = pairs[k];
        rows[i] |= 1 << j;
        rows[j] |= 1 << i;
    }
}

/// Every labelled graph of order `n` passing `filter`, in increasing
/// edge-mask order (bit `k` is the `k`-th pair in graph6 column order).
pub fn enumerate_labeled(n: usize, filter: &Prescreen) -> Result<LabeledGraphs, VerifyError> {
    if n > MAX_LABELED_ORDER {
        return Err(VerifyError::Unsupported(n));
    }
    let pairs = pair_table(n);
    Ok(LabeledGraphs {
        end: 1 << pairs.len(),
        pairs,
        next: 0,
        filter: *filter,
        rows: vec![0; n],
    })
}

pub struct LabeledGraphs {
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    filter: Prescreen,
    rows: Vec<u64>,
}

impl LabeledGraphs {
    /// Like [`Iterator::next`], also returning the edge mask.
    pub fn next_with_mask(&mut self) -> Option<(u64, Graph)> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let m = mask.count_ones() as usize;
            if m < self.filter.min_edges {
                continue;
            }
            mask_rows(&self.pairs, mask, &mut self.rows);
            if self.filter.admits_rows(&self.rows, m) {
                return Some((mask, Graph::from_rows_unchecked(&self.rows)));
            }
        }
        None
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.next_with_mask().map(|(_, g)| g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::Connectivity;
    use crate::graph::Family;
    use crate::graph6::{encode_graph6, encode_mask};

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_labeled(4, &Prescreen::default()).unwrap().count(), 64);
        assert_eq!(enumerate_labeled(4, &Prescreen::connected()).unwrap().count(), 38);
        assert_eq!(enumerate_labeled(0, &Prescreen::default()).unwrap().count(), 1);
        let k3: Vec<Graph> = enumerate_labeled(
            3,
            &Prescreen {
                min_edges: 3,
                ..Prescreen::default()
            },
        )
        .unwrap()
        .collect();
        assert_eq!(k3, vec![Family::Complete(3).build().unwrap()]);
    }

    #[test]
    fn two_connected_small_counts() {
        // labelled 2-connected graphs: 1, 10, 238 on 3, 4, 5 vertices
        let p = Prescreen {
            connectivity: Connectivity::TwoConnected,
            ..Prescreen::default()
        };
        let counts: Vec<usize> = (3..=5).map(|n| enumerate_labeled(n, &p).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 10, 238]);
    }

    #[test]
    fn mask_order_matches_graph6() {
        let mut it = enumerate_labeled(5, &Prescreen::default()).unwrap();
        while let Some((mask, g)) = it.next_with_mask() {
            assert_eq!(encode_graph6(&g).unwrap(), encode_mask(5, mask));
        }
    }

    #[test]
    fn rejects_large_orders() {
        assert!(matches!(
            enumerate_labeled(9, &Prescreen::default()),
            Err(VerifyError::Unsupported(9))
        ));
    }
}
