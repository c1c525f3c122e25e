mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectral_hist::spectral::{
    extremal_root, hong_bound, spectral_radius, threshold_side, ExtremalFamily, PowerOptions,
    ThresholdSide, THRESHOLD_GUARD,
};
use spectral_hist::Graph;

fn rho(g: &Graph) -> f64 {
    spectral_radius(g, &PowerOptions::default()).unwrap().rho
}

/// Edges whose removal keeps the graph connected.
fn removable_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|&(u, v)| g.without_edge(u, v).unwrap().is_connected())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn classical_bounds(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, 2, 12);
        let r = rho(&g);
        let n = g.order() as f64;
        prop_assert!(r <= g.max_degree() as f64 + 1e-9);
        prop_assert!(r <= hong_bound(&g) + 1e-9);
        prop_assert!(r >= 2.0 * g.edge_count() as f64 / n - 1e-9);
        prop_assert!(r >= (g.max_degree() as f64).sqrt() - 1e-9);
    }

    #[test]
    fn edge_removal_strictly_decreases(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, 3, 12);
        let edges = removable_edges(&g);
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        prop_assert!(rho(&g.without_edge(u, v).unwrap()) < rho(&g));
    }

    #[test]
    fn threshold_side_agrees_with_eigensolver(seed in any::<u64>(), offset in -0.5f64..0.5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, 2, 12);
        let r = rho(&g);
        let theta = r + offset;
        prop_assume!((r - (theta - THRESHOLD_GUARD)).abs() > 1e-7);
        let side = threshold_side(&g, theta, &PowerOptions::default()).unwrap();
        let expected = if r >= theta - THRESHOLD_GUARD { ThresholdSide::Above } else { ThresholdSide::Below };
        prop_assert_eq!(side, expected);
    }

    #[test]
    fn relabelling_preserves_rho(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, 2, 12);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        prop_assert!((rho(&g.relabel(&perm).unwrap()) - rho(&g)).abs() < 1e-9);
    }
}

#[test]
fn quartic_roots_match_eigensolver() {
    for n in 7..=50 {
        for family in [ExtremalFamily::L, ExtremalFamily::B] {
            if n < family.min_order() {
                continue;
            }
            let g = family.family(n).build().unwrap();
            let r = rho(&g);
            let p = family.charpoly(n).unwrap();
            assert!(p.eval(r).abs() <= 1e-6, "{family}_{n}: P(rho) = {}", p.eval(r));
            assert!((extremal_root(family, n).unwrap() - r).abs() <= 1e-8);
        }
    }
}

#[test]
fn extremal_graphs_sit_at_their_threshold() {
    for n in 8..=20 {
        let b = ExtremalFamily::B.family(n).build().unwrap();
        let l = ExtremalFamily::L.family(n).build().unwrap();
        // rho(B_n) < rho(L_n): B_n is not a threshold-beating connected graph
        assert!(rho(&b) < rho(&l));
        assert_eq!(
            threshold_side(&b, rho(&b), &PowerOptions::default()).unwrap(),
            ThresholdSide::Above
        );
    }
}
