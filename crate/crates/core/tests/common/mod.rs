#![allow(dead_code)]

use rand::Rng;
use spectral_hist::Graph;

/// G(n, p) conditioned on connectivity by rejection.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(p) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

/// Random connected graph with a random order in `lo..=hi` and a random density.
pub fn random_graph<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.15..0.95);
    random_connected(rng, n, p)
}

/// Heap's algorithm over all permutations of `0..n`.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Number of permutations mapping `g` onto itself.
pub fn automorphism_count(g: &Graph) -> u64 {
    let mut count = 0;
    for_each_permutation(g.order(), |p| {
        if g.edges().all(|(u, v)| g.has_edge(p[u], p[v])) {
            count += 1;
        }
    });
    count
}

/// Brute-force isomorphism test.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut found = false;
    for_each_permutation(a.order(), |p| {
        if !found && a.edges().all(|(u, v)| b.has_edge(p[u], p[v])) {
            found = true;
        }
    });
    found
}

/// All labelled graphs of order `n <= 6` in mask order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::empty(n);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge(i, j).unwrap();
            }
        }
        g
    })
}

/// Labelled connected graph counts from the exponential-formula recurrence.
pub fn connected_labeled_count(n: usize) -> u128 {
    let binom = |a: usize, b: usize| -> u128 {
        (0..b).fold(1u128, |acc, i| acc * (a - i) as u128 / (i + 1) as u128)
    };
    let total = |k: usize| -> u128 { 1u128 << (k * k.saturating_sub(1) / 2) };
    let mut c = vec![0u128; n + 1];
    for m in 1..=n {
        let mut disconnected = 0u128;
        for (k, &ck) in c.iter().enumerate().take(m).skip(1) {
            disconnected += binom(m - 1, k - 1) * ck * total(m - k);
        }
        c[m] = total(m) - disconnected;
    }
    c[n]
}
