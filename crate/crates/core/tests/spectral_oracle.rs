//! Cross-checks of the iterative solver against a dense eigendecomposition,
//! over the deterministic families and a seeded random corpus.

mod common;

use expander_growth::generators::{erdos_renyi_gnp, polygon_flip_graph};
use expander_growth::spectral::{lambda_regular, mu_normalized};

const TOL: f64 = 1e-8;

#[test]
fn lambda_matches_dense_oracle_on_regular_family() {
    for g in common::regular_family() {
        let want = common::dense_lambda(&g);
        let got = lambda_regular(&g, TOL, 1_000_000).unwrap();
        assert!(
            (got - want).abs() <= 1e-6,
            "n={} m={}: {got} vs dense {want}",
            g.vertex_count(),
            g.edge_count()
        );
    }
}

#[test]
fn mu_matches_dense_oracle_on_connected_corpus() {
    let mut checked = 0;
    let mut seed = 0;
    while checked < 150 {
        seed += 1;
        for n in 4..=8 {
            let g = erdos_renyi_gnp(n, 0.55, seed * 31 + n as u64).unwrap();
            if !g.is_connected() {
                continue;
            }
            let want = common::dense_mu(&g).clamp(0.0, 1.0);
            let got = mu_normalized(&g, TOL, 1_000_000).unwrap();
            assert!(
                (got - want).abs() <= 1e-6,
                "seed={seed} n={n}: {got} vs dense {want}"
            );
            checked += 1;
        }
    }
}

#[test]
fn bipartite_graphs_have_mu_one() {
    for g in common::named_family() {
        if !g.is_connected() || !g.is_bipartite() || g.vertex_count() < 2 {
            continue;
        }
        let mu = mu_normalized(&g, TOL, 1_000_000).unwrap();
        assert!(
            mu >= 1.0 - 1e-6,
            "bipartite graph n={} has mu {mu}",
            g.vertex_count()
        );
    }
}

#[test]
fn flip_graph_lambda_matches_dense_oracle_midsize() {
    // k=8 has 132 nodes: big enough to be interesting, small enough for a
    // dense solve.
    let g = polygon_flip_graph(8).unwrap().into_graph();
    let want = common::dense_lambda(&g);
    let got = lambda_regular(&g, TOL, 1_000_000).unwrap();
    assert!((got - want).abs() <= 1e-6, "{got} vs {want}");
    assert!((want - 4.3834).abs() <= 1e-3);
}
