mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectral_hist::{enumerate_labeled, matches_bn, matches_ln, Family, Prescreen};

#[test]
fn l7_recognition_matches_brute_force_isomorphism() {
    let l7 = Family::L(7).build().unwrap();
    let filter = Prescreen {
        min_edges: 12,
        ..Prescreen::default()
    };
    let mut copies = 0;
    for g in enumerate_labeled(7, &filter).unwrap() {
        if g.edge_count() != 12 {
            continue;
        }
        let iso = common::isomorphic(&g, &l7);
        assert_eq!(matches_ln(&g), iso, "{g:?}");
        copies += iso as u64;
    }
    assert_eq!(copies, 5040 / common::automorphism_count(&l7));
}

#[test]
fn automorphism_groups() {
    assert_eq!(common::automorphism_count(&Family::L(7).build().unwrap()), 24);
    assert_eq!(common::automorphism_count(&Family::B(8).build().unwrap()), 12);
}

#[test]
fn b_n_recognition_under_relabelling_and_perturbation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 6..=12 {
        let b = Family::B(n).build().unwrap();
        for _ in 0..50 {
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let g = b.relabel(&perm).unwrap();
            assert!(matches_bn(&g));
            assert!(!matches_ln(&g));
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v {
                let mut h = g.clone();
                if h.has_edge(u, v) {
                    h.remove_edge(u, v).unwrap();
                } else {
                    h.add_edge(u, v).unwrap();
                }
                assert!(!matches_bn(&h));
            }
        }
    }
}

#[test]
fn b8_recognition_matches_isomorphism_on_near_misses() {
    // every single-edge swap of B_8 keeps the edge count; only automorphic images stay B_8
    let b8 = Family::B(8).build().unwrap();
    let edges: Vec<_> = b8.edges().collect();
    let non_edges: Vec<_> = (1..8)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| !b8.has_edge(i, j))
        .collect();
    for &(a, b) in &edges {
        for &(c, d) in &non_edges {
            let mut g = b8.without_edge(a, b).unwrap();
            g.add_edge(c, d).unwrap();
            assert_eq!(matches_bn(&g), common::isomorphic(&g, &b8), "{g:?}");
        }
    }
}
