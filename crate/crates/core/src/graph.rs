//! Immutable undirected simple graphs in compressed adjacency (CSR) form,
//! with the counting primitives every mixing bound consumes.
//!
//! The central convention, easy to trip over: [`edge_count_between`] counts
//! *ordered incidences*. An edge with both endpoints in `S ∩ T` contributes
//! twice, so `e(V, V) = 2m` and `e(S, V) = vol(S)`.

use crate::error::{Error, Result};

/// Immutable undirected simple graph. Vertices are `0..n-1`; each undirected
/// edge is stored once in the edge count `m` and twice in the adjacency.
///
/// Safe to share across threads: construction validates all invariants
/// (no self-loops, no duplicate neighbors, symmetric adjacency) and the
/// structure never changes afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    /// CSR row offsets, length n+1.
    offsets: Vec<usize>,
    /// Concatenated neighbor lists, each sorted ascending; length 2m.
    adj: Vec<u32>,
}

impl Graph {
    /// Builds a graph from undirected edge pairs. Pairs may be in any order
    /// and orientation; self-loops, duplicates, and out-of-range endpoints
    /// are rejected.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        if n > u32::MAX as usize {
            return Err(Error::invalid(format!("vertex count {n} too large")));
        }
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::invalid(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        let mut adj = vec![0u32; acc];
        let mut cursor: Vec<usize> = offsets[..n].to_vec();
        for &(u, v) in edges {
            adj[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            adj[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..n {
            let row = &mut adj[offsets[v]..offsets[v + 1]];
            row.sort_unstable();
            if row.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(Graph { offsets, adj })
    }

    /// Builds a graph from per-vertex neighbor lists. Lists must be strictly
    /// increasing and mutually symmetric; used by generators that produce
    /// adjacency directly.
    pub fn from_adjacency(lists: Vec<Vec<u32>>) -> Result<Self> {
        let n = lists.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for (v, row) in lists.iter().enumerate() {
            for w in row.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::invalid(format!(
                        "neighbor list of {v} not strictly increasing"
                    )));
                }
            }
            for &u in row {
                if u as usize >= n {
                    return Err(Error::invalid(format!(
                        "neighbor {u} of {v} out of range"
                    )));
                }
                if u as usize == v {
                    return Err(Error::invalid(format!("self-loop at vertex {v}")));
                }
            }
            acc += row.len();
            offsets.push(acc);
        }
        let mut adj = Vec::with_capacity(acc);
        for row in &lists {
            adj.extend_from_slice(row);
        }
        let g = Graph { offsets, adj };
        for v in 0..n {
            for &u in g.neighbors(v) {
                if g.neighbors(u as usize).binary_search(&(v as u32)).is_err() {
                    return Err(Error::invalid(format!(
                        "asymmetric adjacency: {v} lists {u} but not vice versa"
                    )));
                }
            }
        }
        Ok(g)
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.adj.len() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Edges as canonical `(u, v)` pairs with `u < v`, lexicographic order.
    pub fn edge_pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| (u as u32) < v)
                .map(move |&v| (u as u32, v))
        })
    }

    /// BFS reachability from vertex 0. Empty graphs are not connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1usize;
        while let Some(v) = stack.pop() {
            for &u in self.neighbors(v as usize) {
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    /// Standard 2-coloring over all components.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            stack.push(s as u32);
            while let Some(v) = stack.pop() {
                let c = color[v as usize];
                for &u in self.neighbors(v as usize) {
                    if color[u as usize] == u8::MAX {
                        color[u as usize] = 1 - c;
                        stack.push(u);
                    } else if color[u as usize] == c {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Exact degree statistics; errors on the empty graph.
    pub fn degree_stats(&self) -> Result<DegreeStats> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(Error::invalid("degree_stats on empty graph"));
        }
        let d_bar = 2.0 * self.edge_count() as f64 / n as f64;
        let mut sigma2 = 0.0;
        let mut d_min = usize::MAX;
        let mut d_max = 0usize;
        for v in 0..n {
            let d = self.degree(v);
            d_min = d_min.min(d);
            d_max = d_max.max(d);
            let diff = d as f64 - d_bar;
            sigma2 += diff * diff;
        }
        sigma2 /= n as f64;
        let regular = d_min == d_max;
        if regular {
            // Population variance of a constant sequence is exactly zero;
            // clear float dust from the accumulation.
            sigma2 = 0.0;
        }
        Ok(DegreeStats {
            d_bar,
            sigma2,
            d_min,
            d_max,
            regular,
        })
    }
}

/// Degree statistics of a graph. `sigma2` is the population variance of the
/// degree sequence (not the sample variance).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeStats {
    pub d_bar: f64,
    pub sigma2: f64,
    pub d_min: usize,
    pub d_max: usize,
    pub regular: bool,
}

/// Subset of the vertices of a graph on a fixed universe `0..n-1`, stored as
/// a dense indicator with a cached cardinality. Sets in this workload (the
/// processed / queued / unvisited classes) are Θ(n)-sized, so dense storage
/// wins over hashing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    bits: Vec<bool>,
    size: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            bits: vec![false; universe],
            size: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            bits: vec![true; universe],
            size: universe,
        }
    }

    pub fn from_indices(universe: usize, indices: &[usize]) -> Result<Self> {
        let mut s = VertexSet::new(universe);
        for &i in indices {
            if i >= universe {
                return Err(Error::invalid(format!(
                    "index {i} out of range for universe {universe}"
                )));
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Returns true if the vertex was newly inserted.
    pub fn insert(&mut self, v: usize) -> bool {
        if !self.bits[v] {
            self.bits[v] = true;
            self.size += 1;
            true
        } else {
            false
        }
    }

    /// Returns true if the vertex was present.
    pub fn remove(&mut self, v: usize) -> bool {
        if self.bits[v] {
            self.bits[v] = false;
            self.size -= 1;
            true
        } else {
            false
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits[v]
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }
}

/// Ordered edge-incidence count e(S, T): the number of pairs (u, v) with
/// {u, v} an edge, u ∈ S, v ∈ T. An edge with both endpoints in S ∩ T
/// contributes 2, so e(V, V) = 2m. This matches the convention in which the
/// Expander Mixing Lemma is stated; do not "fix" the factor of two.
pub fn edge_count_between(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<u64> {
    let n = g.vertex_count();
    if s.universe() != n || t.universe() != n {
        return Err(Error::invalid(format!(
            "vertex set universe ({}, {}) does not match graph size {n}",
            s.universe(),
            t.universe()
        )));
    }
    let mut count = 0u64;
    for u in s.iter() {
        for &v in g.neighbors(u) {
            if t.contains(v as usize) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// vol(S) = Σ_{v ∈ S} deg(v); vol(V) = 2m.
pub fn volume(g: &Graph, s: &VertexSet) -> Result<u64> {
    if s.universe() != g.vertex_count() {
        return Err(Error::invalid(format!(
            "vertex set universe {} does not match graph size {}",
            s.universe(),
            g.vertex_count()
        )));
    }
    Ok(s.iter().map(|v| g.degree(v) as u64).sum())
}

/// Parses the edge-list text format: first line `n m`, then exactly m lines
/// `u v` with `0 <= u < v < n`. Lines starting with `#` are skipped so that
/// files carrying a provenance header load unchanged.
pub fn load_edge_list(text: &str) -> Result<Graph> {
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut header: Option<(usize, usize)> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let a = it.next();
        let b = it.next();
        if it.next().is_some() {
            return Err(Error::Parse {
                line: lineno,
                message: "expected exactly two fields".into(),
            });
        }
        let (a, b) = match (a, b) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    message: "expected two fields".into(),
                })
            }
        };
        let parse = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("not an integer: {s:?}"),
            })
        };
        if header.is_none() {
            header = Some((parse(a)?, parse(b)?));
            continue;
        }
        let (n, _) = header.unwrap();
        let (u, v) = (parse(a)?, parse(b)?);
        if u == v {
            return Err(Error::Parse {
                line: lineno,
                message: format!("self-loop {u} {v}"),
            });
        }
        if u > v {
            return Err(Error::Parse {
                line: lineno,
                message: format!("edge {u} {v} not in canonical u < v order"),
            });
        }
        if v >= n {
            return Err(Error::Parse {
                line: lineno,
                message: format!("endpoint {v} out of range for n={n}"),
            });
        }
        edges.push((u as u32, v as u32));
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header promises {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

/// Canonical edge-list text: `n m` header, then the m edges as `u v` with
/// `u < v`, sorted lexicographically, one per line, newline-terminated.
pub fn store_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.vertex_count(), g.edge_count()));
    for (u, v) in g.edge_pairs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
