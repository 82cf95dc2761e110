//! Small named graphs, mostly for tests and spot checks.

use crate::graph::Graph;

/// Path on n vertices (n ≥ 1).
pub fn path(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path is simple")
}

/// Cycle on n vertices (n ≥ 3).
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
    edges.push((0, n as u32 - 1));
    Graph::from_edges(n, &edges).expect("cycle is simple")
}

/// Complete graph on n vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete graph is simple")
}

/// Star with vertex 0 as the center and n−1 leaves.
pub fn star(n: usize) -> Graph {
    assert!(n >= 1);
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges).expect("star is simple")
}

/// Complete bipartite graph K_{a,b}; part A is 0..a, part B is a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a as u32 {
        for v in 0..b as u32 {
            edges.push((u, a as u32 + v));
        }
    }
    Graph::from_edges(a + b, &edges).expect("complete bipartite is simple")
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5)); // outer cycle
        edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
        edges.push((i, 5 + i)); // spokes
    }
    Graph::from_edges(10, &edges).expect("Petersen is simple")
}

/// Hypercube graph on 2^dim vertices.
pub fn hypercube(dim: usize) -> Graph {
    let n = 1usize << dim;
    let mut edges = Vec::new();
    for u in 0..n {
        for b in 0..dim {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u as u32, v as u32));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("hypercube is simple")
}

/// Circulant graph: vertex v adjacent to v ± s for each step s.
pub fn circulant(n: usize, steps: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for &s in steps {
            assert!(s >= 1 && 2 * s <= n, "step {s} invalid for n={n}");
            let w = (v + s) % n;
            let (a, b) = if v < w { (v, w) } else { (w, v) };
            edges.push((a as u32, b as u32));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges).expect("circulant is simple")
}
