//! Erdős–Rényi random graphs: G(n, p) with independent edges and G(n, m)
//! with a uniform m-subset of pairs.

use rand::Rng;
use rand_distr::{Distribution, Geometric};
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::seeded_rng;

/// Number of unordered pairs over n vertices.
fn pair_count(n: usize) -> u64 {
    let n = n as u64;
    n * (n - 1) / 2
}

/// Decodes a linear pair index into the unordered pair (u, v), u < v, under
/// the row-major order (0,1), (0,2), …, (0,n−1), (1,2), …
fn decode_pair(index: u64, n: usize) -> (u32, u32) {
    let nf = n as u64;
    // Row u starts at S(u) = u·(2n−1−u)/2; invert by the quadratic formula,
    // then repair float error by stepping.
    let start = |u: u64| u * (2 * nf - 1 - u) / 2;
    let approx = (nf as f64) - 0.5
        - (((nf as f64) - 0.5) * ((nf as f64) - 0.5) - 2.0 * index as f64).max(0.0).sqrt();
    let mut u = (approx as i64).clamp(0, nf as i64 - 2) as u64;
    while start(u) > index {
        u -= 1;
    }
    while u + 1 < nf - 1 && start(u + 1) <= index {
        u += 1;
    }
    let v = u + 1 + (index - start(u));
    debug_assert!(v < nf);
    (u as u32, v as u32)
}

/// G(n, p): each of the n(n−1)/2 pairs appears independently with
/// probability p. Sampling skips between present edges with a geometric
/// draw, so the cost is O(n + m_expected) rather than O(n²). Deterministic
/// for a fixed seed.
pub fn erdos_renyi_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!("p={p} outside [0,1]")));
    }
    if p == 0.0 {
        return Graph::from_edges(n, &[]);
    }
    let total = pair_count(n);
    let mut edges = Vec::new();
    let mut rng = seeded_rng(seed);
    if p == 1.0 {
        for idx in 0..total {
            edges.push(decode_pair(idx, n));
        }
        return Graph::from_edges(n, &edges);
    }
    let skip = Geometric::new(p).expect("0 < p < 1");
    let mut pos: u64 = 0;
    loop {
        let s = skip.sample(&mut rng);
        pos = match pos.checked_add(s) {
            Some(x) => x,
            None => break,
        };
        if pos >= total {
            break;
        }
        edges.push(decode_pair(pos, n));
        pos += 1;
    }
    Graph::from_edges(n, &edges)
}

/// G(n, m): a uniform m-subset of the n(n−1)/2 pairs, by rejection sampling
/// of distinct pair indices. Deterministic for a fixed seed.
pub fn erdos_renyi_gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let total = pair_count(n);
    if m as u64 > total {
        return Err(Error::invalid(format!(
            "m={m} exceeds the {total} available pairs for n={n}"
        )));
    }
    let mut rng = seeded_rng(seed);
    let mut chosen: HashSet<u64> = HashSet::with_capacity(m * 2);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let idx = rng.gen_range(0..total);
        if chosen.insert(idx) {
            edges.push(decode_pair(idx, n));
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_pair_is_a_bijection() {
        for n in [2usize, 3, 5, 17, 64] {
            let mut seen = HashSet::new();
            for idx in 0..pair_count(n) {
                let (u, v) = decode_pair(idx, n);
                assert!(u < v && (v as usize) < n, "n={n} idx={idx} -> ({u},{v})");
                assert!(seen.insert((u, v)));
            }
            assert_eq!(seen.len() as u64, pair_count(n));
        }
    }

    #[test]
    fn gnp_extremes() {
        let empty = erdos_renyi_gnp(20, 0.0, 7).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let full = erdos_renyi_gnp(10, 1.0, 7).unwrap();
        assert_eq!(full.edge_count(), 45);
        assert!(erdos_renyi_gnp(10, 1.5, 7).is_err());
    }

    #[test]
    fn gnp_deterministic_for_seed() {
        let a = erdos_renyi_gnp(100, 0.07, 99).unwrap();
        let b = erdos_renyi_gnp(100, 0.07, 99).unwrap();
        assert_eq!(a, b);
        let c = erdos_renyi_gnp(100, 0.07, 100).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn gnp_mean_edge_count_within_three_sigma() {
        // Empirical mean of the edge count over seeded runs vs p·C(n,2),
        // allowing 3 standard deviations of the *mean*.
        let (n, p, runs) = (60usize, 0.3f64, 200u64);
        let total = pair_count(n) as f64;
        let mean: f64 = (0..runs)
            .map(|s| erdos_renyi_gnp(n, p, s).unwrap().edge_count() as f64)
            .sum::<f64>()
            / runs as f64;
        let sigma = (total * p * (1.0 - p)).sqrt();
        let tol = 3.0 * sigma / (runs as f64).sqrt();
        assert!(
            (mean - p * total).abs() <= tol,
            "mean {mean} vs {} ± {tol}",
            p * total
        );
    }

    #[test]
    fn gnm_exact_edge_count() {
        for m in [0usize, 1, 17, 45] {
            let g = erdos_renyi_gnm(10, m, 3).unwrap();
            assert_eq!(g.edge_count(), m);
        }
        assert!(erdos_renyi_gnm(10, 46, 3).is_err());
    }

    #[test]
    fn gnm_deterministic_for_seed() {
        let a = erdos_renyi_gnm(50, 120, 5).unwrap();
        let b = erdos_renyi_gnm(50, 120, 5).unwrap();
        assert_eq!(a, b);
    }
}
