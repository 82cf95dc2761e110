//! Shared helpers for integration tests: a dense eigenvalue oracle
//! (independent of the crate's iterative solver) and a seeded corpus of
//! small connected graphs.
#![allow(dead_code)] // each integration test compiles its own copy

use expander_growth::generators::{erdos_renyi_gnp, small};
use expander_growth::Graph;
use nalgebra::DMatrix;

/// Exact λ(G) = max(|λ₂|, |λ_n|) by dense symmetric eigendecomposition.
pub fn dense_lambda(g: &Graph) -> f64 {
    let n = g.vertex_count();
    let mut a = DMatrix::<f64>::zeros(n, n);
    for v in 0..n {
        for &u in g.neighbors(v) {
            a[(v, u as usize)] = 1.0;
        }
    }
    let mut eig: Vec<f64> = a.symmetric_eigen().eigenvalues.iter().copied().collect();
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    eig[1..]
        .iter()
        .map(|l| l.abs())
        .fold(0.0f64, f64::max)
}

/// Exact μ(G) = max(μ₂, −μ_n) of the normalized adjacency matrix.
pub fn dense_mu(g: &Graph) -> f64 {
    let n = g.vertex_count();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for v in 0..n {
        let dv = g.degree(v) as f64;
        for &u in g.neighbors(v) {
            let du = g.degree(u as usize) as f64;
            m[(v, u as usize)] = 1.0 / (dv * du).sqrt();
        }
    }
    let mut eig: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    let mu2 = eig[1];
    let mun = *eig.last().unwrap();
    mu2.max(-mun)
}

/// Deterministic connected regular graphs for exhaustive mixing sweeps.
pub fn regular_family() -> Vec<Graph> {
    let mut graphs = Vec::new();
    for n in 3..=8 {
        graphs.push(small::cycle(n));
        graphs.push(small::complete(n));
    }
    for a in 1..=4 {
        graphs.push(small::complete_bipartite(a, a));
    }
    graphs.push(small::hypercube(2));
    graphs.push(small::hypercube(3));
    graphs.push(small::circulant(6, &[1, 2]));
    graphs.push(small::circulant(7, &[1, 2]));
    graphs.push(small::circulant(8, &[1, 3]));
    graphs.push(small::circulant(8, &[2, 3]));
    graphs
}

/// Regular graphs up to 12 vertices, for the wider exhaustive mixing sweep.
pub fn regular_family_extended() -> Vec<Graph> {
    let mut graphs = regular_family();
    graphs.push(small::petersen());
    graphs.push(small::cycle(11));
    graphs.push(small::circulant(12, &[1, 3]));
    graphs.push(small::complete_bipartite(5, 5));
    graphs
}

/// Deterministic connected graphs, not necessarily regular.
pub fn named_family() -> Vec<Graph> {
    let mut graphs = regular_family();
    for n in 2..=8 {
        graphs.push(small::path(n));
    }
    for n in 3..=8 {
        graphs.push(small::star(n));
    }
    for a in 1..=3 {
        for b in (a + 1)..=5 {
            graphs.push(small::complete_bipartite(a, b));
        }
    }
    graphs
}

/// Fixed corpus of at least `target` small connected graphs on ≤ 8
/// vertices: the named families plus seeded G(n, p) samples.
pub fn small_connected_corpus(target: usize) -> Vec<Graph> {
    let mut graphs = named_family();
    let mut seed = 0u64;
    'outer: loop {
        for n in 4..=8usize {
            for p in [0.3, 0.5, 0.8] {
                let g = erdos_renyi_gnp(n, p, seed).unwrap();
                if g.is_connected() {
                    graphs.push(g);
                    if graphs.len() >= target {
                        break 'outer;
                    }
                }
            }
        }
        seed += 1;
    }
    graphs
}
