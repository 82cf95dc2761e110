//! The randomized growth process: a breadth-first search that removes a
//! *uniformly random* vertex from the queue at each step, partitioning the
//! vertices into processed (P), queued (Q), and unvisited (U) classes.
//!
//! Key structural fact used by every bound downstream: no edge ever joins
//! P and U, because a vertex is only processed after all of its neighbors
//! have been discovered. The discoverer of each vertex is recorded as its
//! parent; since the discoverer is the first processed neighbor, the parent
//! links form the spanning tree with p(t) the minimal-index processed
//! neighbor.

use rand::Rng;
use rand_distr::{Binomial, Distribution};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{seeded_rng, SeededRng};

const NO_PARENT: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    Unvisited,
    Queued,
    Processed,
}

/// A single in-flight run of the growth process. Strictly sequential;
/// independent runs with distinct seeds can execute concurrently over a
/// shared graph.
pub struct GrowthProcess<'g> {
    graph: &'g Graph,
    class: Vec<Class>,
    /// Dense queue storage: uniform removal is swap-with-last, O(1).
    queue: Vec<u32>,
    processed: Vec<u32>,
    unvisited: usize,
    parent: Vec<u32>,
    start: usize,
    seed: u64,
    rng: SeededRng,
}

impl<'g> GrowthProcess<'g> {
    pub fn new(graph: &'g Graph, start: usize, seed: u64) -> Result<Self> {
        let n = graph.vertex_count();
        if start >= n {
            return Err(Error::invalid(format!(
                "start vertex {start} out of range for n={n}"
            )));
        }
        let mut class = vec![Class::Unvisited; n];
        class[start] = Class::Queued;
        Ok(GrowthProcess {
            graph,
            class,
            queue: vec![start as u32],
            processed: Vec::new(),
            unvisited: n - 1,
            parent: vec![NO_PARENT; n],
            start,
            seed,
            rng: seeded_rng(seed),
        })
    }

    /// Processes one uniformly chosen queue vertex; its still-unvisited
    /// neighbors enter the queue in adjacency (sorted) order. Returns the
    /// processed vertex, or None once the queue is empty.
    pub fn step(&mut self) -> Option<u32> {
        if self.queue.is_empty() {
            return None;
        }
        let idx = self.rng.gen_range(0..self.queue.len());
        let v = self.queue.swap_remove(idx);
        for &w in self.graph.neighbors(v as usize) {
            if self.class[w as usize] == Class::Unvisited {
                self.class[w as usize] = Class::Queued;
                self.parent[w as usize] = v;
                self.queue.push(w);
                self.unvisited -= 1;
            }
        }
        self.class[v as usize] = Class::Processed;
        self.processed.push(v);
        debug_assert_eq!(
            self.processed.len() + self.queue.len() + self.unvisited,
            self.graph.vertex_count(),
            "P, Q, U must partition the vertices"
        );
        Some(v)
    }

    /// Number of steps taken, |P|.
    pub fn steps(&self) -> usize {
        self.processed.len()
    }

    pub fn processed_count(&self) -> usize {
        self.processed.len()
    }

    pub fn queued_count(&self) -> usize {
        self.queue.len()
    }

    pub fn unvisited_count(&self) -> usize {
        self.unvisited
    }

    pub fn is_finished(&self) -> bool {
        self.queue.is_empty()
    }

    /// Current queue contents (unordered).
    pub fn queue(&self) -> &[u32] {
        &self.queue
    }

    /// Vertices in processing order.
    pub fn processed_order(&self) -> &[u32] {
        &self.processed
    }

    pub fn is_unvisited(&self, v: usize) -> bool {
        self.class[v] == Class::Unvisited
    }

    pub fn is_queued(&self, v: usize) -> bool {
        self.class[v] == Class::Queued
    }

    pub fn is_processed(&self, v: usize) -> bool {
        self.class[v] == Class::Processed
    }

    /// Tree parent (discoverer) of a visited vertex; None for the start
    /// vertex and for unvisited vertices.
    pub fn parent_of(&self, v: usize) -> Option<u32> {
        (self.parent[v] != NO_PARENT).then_some(self.parent[v])
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn snapshot(&self) -> Snapshot {
        Snapshot {
            step: self.steps(),
            processed: self.processed_count(),
            queued: self.queued_count(),
            unvisited: self.unvisited_count(),
        }
    }
}

/// Sizes of the three classes after `step` steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Snapshot {
    pub step: usize,
    pub processed: usize,
    pub queued: usize,
    pub unvisited: usize,
}

impl Snapshot {
    /// Densities (π, κ, υ) relative to a graph on n vertices.
    pub fn densities(&self, n: usize) -> (f64, f64, f64) {
        let n = n as f64;
        (
            self.processed as f64 / n,
            self.queued as f64 / n,
            self.unvisited as f64 / n,
        )
    }
}

/// Record of one growth run: class sizes at snapshot steps plus the
/// spanning tree of the visited region.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthTrajectory {
    pub n: usize,
    pub start: usize,
    pub seed: u64,
    /// Taken at step 0, every `snapshot_every` steps, at termination, and
    /// (padded runs) frozen through the padded horizon.
    pub snapshots: Vec<Snapshot>,
    /// parent[v] is the discoverer of v; None for the start vertex and for
    /// vertices outside the start component.
    pub parent: Vec<Option<u32>>,
}

fn run_growth_inner(
    g: &Graph,
    start: usize,
    seed: u64,
    snapshot_every: usize,
    padded_to: Option<usize>,
) -> Result<GrowthTrajectory> {
    if snapshot_every == 0 {
        return Err(Error::invalid("snapshot_every must be >= 1"));
    }
    let mut process = GrowthProcess::new(g, start, seed)?;
    let mut snapshots = vec![process.snapshot()];
    while process.step().is_some() {
        if process.steps() % snapshot_every == 0 {
            snapshots.push(process.snapshot());
        }
    }
    let end = process.snapshot();
    if snapshots.last() != Some(&end) {
        snapshots.push(end);
    }
    if let Some(total) = padded_to {
        // Nothing happens after the queue empties; later snapshots repeat
        // the terminal sizes with an advancing step counter.
        let mut t = end.step;
        loop {
            t += 1;
            if t > total {
                break;
            }
            if t % snapshot_every == 0 || t == total {
                snapshots.push(Snapshot { step: t, ..end });
            }
        }
    }
    let parent = process.parent.iter().map(|&p| (p != NO_PARENT).then_some(p)).collect();
    Ok(GrowthTrajectory {
        n: g.vertex_count(),
        start,
        seed,
        snapshots,
        parent,
    })
}

/// Runs the growth process from `start` until the queue empties (the whole
/// component of `start` is processed). Snapshots at step 0, every
/// `snapshot_every` steps, and at termination.
pub fn run_growth(
    g: &Graph,
    start: usize,
    seed: u64,
    snapshot_every: usize,
) -> Result<GrowthTrajectory> {
    run_growth_inner(g, start, seed, snapshot_every, None)
}

/// As [`run_growth`], but keeps emitting frozen snapshots through step
/// `total_steps` (typically n) after the queue first empties.
pub fn run_growth_padded(
    g: &Graph,
    start: usize,
    seed: u64,
    snapshot_every: usize,
    total_steps: usize,
) -> Result<GrowthTrajectory> {
    run_growth_inner(g, start, seed, snapshot_every, Some(total_steps))
}

/// How [`boundary_estimate`] reads the queue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundarySampling {
    /// Exact e(U, W): every queue vertex is scanned once.
    Census,
    /// Uniform with-replacement sample of queue vertices.
    Sample { count: usize },
}

/// Estimates e(U, W), where W = P ∪ Q, from the current state of a run.
/// Every U–W edge has its W endpoint in Q, so the average number of
/// unvisited neighbors over queue vertices, times |Q|, is an unbiased
/// estimate, and a census over Q is exact.
pub fn boundary_estimate(
    process: &GrowthProcess,
    sampling: BoundarySampling,
    seed: u64,
) -> Result<f64> {
    let queue = process.queue();
    if queue.is_empty() {
        return Err(Error::invalid("boundary estimate requires a nonempty queue"));
    }
    let unvisited_degree = |v: u32| -> u64 {
        process
            .graph()
            .neighbors(v as usize)
            .iter()
            .filter(|&&w| process.is_unvisited(w as usize))
            .count() as u64
    };
    match sampling {
        BoundarySampling::Census => {
            Ok(queue.iter().map(|&v| unvisited_degree(v)).sum::<u64>() as f64)
        }
        BoundarySampling::Sample { count } => {
            if count == 0 {
                return Err(Error::invalid("sample count must be >= 1"));
            }
            let mut rng = seeded_rng(seed);
            let mut total = 0u64;
            for _ in 0..count {
                let v = queue[rng.gen_range(0..queue.len())];
                total += unvisited_degree(v);
            }
            Ok(total as f64 / count as f64 * queue.len() as f64)
        }
    }
}

/// One row of the numeric companion process.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NumericStep {
    pub t: usize,
    pub unvisited: u64,
    /// q_t = n − t − u_t; may go negative and is reported as-is.
    pub queue: i64,
}

/// The pure numeric process mirroring growth on G(n, d/n):
/// u_t = u_{t−1} − X with X ~ Bin(u_{t−1}, d/n), u₀ = n, q_t = n − t − u_t,
/// simulated for t = 0..=n.
pub fn numeric_process(n: usize, d: f64, seed: u64) -> Result<Vec<NumericStep>> {
    if n == 0 {
        return Err(Error::invalid("n must be >= 1"));
    }
    if !(d > 0.0 && d < n as f64) {
        return Err(Error::invalid(format!("requires 0 < d < n, got d={d}, n={n}")));
    }
    let p = d / n as f64;
    let mut rng = seeded_rng(seed);
    let mut u = n as u64;
    let mut rows = Vec::with_capacity(n + 1);
    rows.push(NumericStep {
        t: 0,
        unvisited: u,
        queue: 0,
    });
    for t in 1..=n {
        let x = Binomial::new(u, p)
            .expect("0 < p < 1")
            .sample(&mut rng);
        u -= x;
        rows.push(NumericStep {
            t,
            unvisited: u,
            queue: n as i64 - t as i64 - u as i64,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::small;
    use crate::graph::{edge_count_between, Graph, VertexSet};

    #[test]
    fn path_from_center_is_deterministic_in_sizes() {
        let g = small::path(3);
        let tr = run_growth(&g, 1, 7, 1).unwrap();
        let sizes: Vec<(usize, usize, usize, usize)> = tr
            .snapshots
            .iter()
            .map(|s| (s.step, s.processed, s.queued, s.unvisited))
            .collect();
        assert_eq!(
            sizes,
            vec![(0, 0, 1, 2), (1, 1, 2, 0), (2, 2, 1, 0), (3, 3, 0, 0)]
        );
    }

    #[test]
    fn complete_graph_queue_sizes() {
        let n = 7;
        let g = small::complete(n);
        let tr = run_growth(&g, 3, 11, 1).unwrap();
        for s in &tr.snapshots {
            if s.step >= 1 {
                assert_eq!(s.queued, n - s.step, "at step {}", s.step);
                assert_eq!(s.unvisited, 0);
            }
        }
        assert_eq!(tr.snapshots.last().unwrap().processed, n);
    }

    #[test]
    fn growth_confined_to_start_component() {
        let mut edges = vec![(0u32, 1), (1, 2), (0, 2)];
        edges.extend([(3, 4), (4, 5), (3, 5)]);
        let g = Graph::from_edges(6, &edges).unwrap();
        let tr = run_growth(&g, 0, 5, 1).unwrap();
        let end = tr.snapshots.last().unwrap();
        assert_eq!(end.processed, 3);
        assert_eq!(end.unvisited, 3);
        assert_eq!(end.queued, 0);
        // Padded run freezes the terminal sizes through step n.
        let padded = run_growth_padded(&g, 0, 5, 1, 6).unwrap();
        let tail: Vec<&Snapshot> = padded.snapshots.iter().filter(|s| s.step >= 4).collect();
        assert_eq!(tail.len(), 3);
        for s in tail {
            assert_eq!((s.processed, s.queued, s.unvisited), (3, 0, 3));
        }
        // On a connected graph padding adds only the no-op tail.
        let g2 = small::cycle(5);
        let a = run_growth(&g2, 0, 9, 2).unwrap();
        let b = run_growth_padded(&g2, 0, 9, 2, 5).unwrap();
        assert_eq!(a.snapshots, b.snapshots);
        assert_eq!(a.parent, b.parent);
    }

    #[test]
    fn identical_inputs_identical_trajectories() {
        let g = small::petersen();
        let a = run_growth(&g, 2, 42, 3).unwrap();
        let b = run_growth(&g, 2, 42, 3).unwrap();
        assert_eq!(a, b);
        let c = run_growth(&g, 2, 43, 3).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn parent_links_form_spanning_tree_of_visited() {
        let g = small::petersen();
        let tr = run_growth(&g, 0, 1234, 1).unwrap();
        let mut edge_count = 0;
        for v in 0..10 {
            match tr.parent[v] {
                None => assert_eq!(v, 0),
                Some(p) => {
                    assert!(g.has_edge(v, p as usize), "parent edge must exist");
                    edge_count += 1;
                }
            }
        }
        assert_eq!(edge_count, 9);
        // Acyclic and rooted: walking parents terminates at the start.
        for v in 0..10 {
            let mut cur = v;
            let mut hops = 0;
            while let Some(p) = tr.parent[cur] {
                cur = p as usize;
                hops += 1;
                assert!(hops <= 10, "parent chain must terminate");
            }
            assert_eq!(cur, 0);
        }
    }

    #[test]
    fn parent_is_minimal_index_processed_neighbor() {
        let g = small::petersen();
        let mut process = GrowthProcess::new(&g, 4, 77).unwrap();
        while process.step().is_some() {}
        let order = process.processed_order().to_vec();
        let rank: std::collections::HashMap<u32, usize> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for &v in &order {
            if v as usize == process.start() {
                assert!(process.parent_of(v as usize).is_none());
                continue;
            }
            let p = process.parent_of(v as usize).unwrap();
            let min_processed_neighbor = g
                .neighbors(v as usize)
                .iter()
                .filter(|&&w| rank[&w] < rank[&v])
                .min_by_key(|&&w| rank[&w])
                .copied()
                .unwrap();
            assert_eq!(p, min_processed_neighbor);
        }
    }

    #[test]
    fn no_edges_between_processed_and_unvisited() {
        let mut edges = vec![(0u32, 1), (1, 2), (0, 2)];
        edges.extend([(2, 3), (3, 4), (4, 5), (5, 3)]);
        let g = Graph::from_edges(6, &edges).unwrap();
        let mut process = GrowthProcess::new(&g, 0, 3).unwrap();
        loop {
            let n = g.vertex_count();
            let mut p = VertexSet::new(n);
            let mut u = VertexSet::new(n);
            for v in 0..n {
                if process.is_processed(v) {
                    p.insert(v);
                } else if process.is_unvisited(v) {
                    u.insert(v);
                }
            }
            assert_eq!(edge_count_between(&g, &p, &u).unwrap(), 0);
            if process.step().is_none() {
                break;
            }
        }
    }

    #[test]
    fn boundary_census_matches_exact_count() {
        let g = small::petersen();
        let mut process = GrowthProcess::new(&g, 0, 21).unwrap();
        for _ in 0..4 {
            process.step();
        }
        let n = g.vertex_count();
        let mut w = VertexSet::new(n);
        let mut u = VertexSet::new(n);
        for v in 0..n {
            if process.is_unvisited(v) {
                u.insert(v);
            } else {
                w.insert(v);
            }
        }
        let exact = edge_count_between(&g, &u, &w).unwrap() as f64;
        let census = boundary_estimate(&process, BoundarySampling::Census, 0).unwrap();
        assert_eq!(census, exact);
        // The with-replacement estimator is exact when the queue is scanned
        // uniformly and U is empty.
        let gc = small::complete(5);
        let mut pc = GrowthProcess::new(&gc, 0, 2).unwrap();
        pc.step();
        pc.step();
        assert_eq!(
            boundary_estimate(&pc, BoundarySampling::Sample { count: 50 }, 9).unwrap(),
            0.0
        );
    }

    #[test]
    fn boundary_estimate_requires_nonempty_queue() {
        let g = small::complete(3);
        let mut process = GrowthProcess::new(&g, 0, 2).unwrap();
        while process.step().is_some() {}
        assert!(boundary_estimate(&process, BoundarySampling::Census, 0).is_err());
    }

    #[test]
    fn numeric_process_zero_rate_limit() {
        // d so small that no trial ever succeeds at this scale: u stays n,
        // q_t = -t.
        let rows = numeric_process(100, 1e-9, 5).unwrap();
        assert_eq!(rows.len(), 101);
        for row in &rows {
            assert_eq!(row.unvisited, 100);
            assert_eq!(row.queue, -(row.t as i64));
        }
        assert!(numeric_process(10, 0.0, 1).is_err());
        assert!(numeric_process(10, 10.0, 1).is_err());
    }

    #[test]
    fn numeric_process_is_seeded() {
        let a = numeric_process(500, 4.0, 11).unwrap();
        let b = numeric_process(500, 4.0, 11).unwrap();
        assert_eq!(a, b);
    }
}
