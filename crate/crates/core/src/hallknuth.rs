//! Tree-size estimation by random root-to-leaf probing, and the implicit
//! reverse-search spanning tree over polygon triangulations it is applied
//! to.
//!
//! A probe walks from the root, at each node choosing one of its c children
//! uniformly, and accumulates 1 + c₁ + c₁c₂ + c₁c₂c₃ + …; the expectation of
//! this product-sum is exactly the number of nodes. The exact-expectation
//! oracle recomputes that expectation by full traversal: the unbiasedness
//! identity made executable.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generators::polygon::PolygonGeom;
use crate::generators::Triangulation;
use crate::rng::{seeded_rng, subseed};
use rand::Rng;

/// A rooted tree given implicitly by a root and a children function. The
/// reachable structure must be a finite tree and the children ordering must
/// be deterministic.
pub trait TreeOracle {
    type Node: Clone;
    fn root(&self) -> Self::Node;
    fn children(&self, node: &Self::Node) -> Vec<Self::Node>;
}

/// Outcome of a single random probe.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeResult {
    /// Product-sum estimate of the node count; always an integer-valued
    /// real ≥ 1.
    pub estimate: f64,
    /// Number of edges walked from root to the terminating leaf.
    pub depth: usize,
    pub seed: u64,
}

/// One random root-to-leaf walk. A leaf root yields estimate 1.
pub fn hk_probe<T: TreeOracle>(tree: &T, seed: u64) -> ProbeResult {
    let mut rng = seeded_rng(seed);
    let mut node = tree.root();
    let mut estimate = 1.0;
    let mut product = 1.0;
    let mut depth = 0usize;
    loop {
        let children = tree.children(&node);
        if children.is_empty() {
            break;
        }
        product *= children.len() as f64;
        estimate += product;
        node = children[rng.gen_range(0..children.len())].clone();
        depth += 1;
    }
    debug_assert_eq!(estimate.fract(), 0.0);
    ProbeResult {
        estimate,
        depth,
        seed,
    }
}

/// All probes of a batch, with per-probe seeds `seed + index`. Probes run
/// concurrently; the returned order is by index, so the batch is
/// deterministic.
pub fn hk_probes<T>(tree: &T, probes: usize, seed: u64) -> Result<Vec<ProbeResult>>
where
    T: TreeOracle + Sync,
    T::Node: Send,
{
    if probes == 0 {
        return Err(Error::invalid("probe count must be >= 1"));
    }
    Ok((0..probes)
        .into_par_iter()
        .map(|i| hk_probe(tree, subseed(seed, i as u64)))
        .collect())
}

/// Sample mean and standard error of a probe batch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimateSummary {
    pub mean: f64,
    pub stderr: f64,
    pub probes: usize,
}

/// Mean and standard error over `probes` independent seeded probes.
pub fn hk_estimate<T>(tree: &T, probes: usize, seed: u64) -> Result<EstimateSummary>
where
    T: TreeOracle + Sync,
    T::Node: Send,
{
    let results = hk_probes(tree, probes, seed)?;
    Ok(summarize(&results))
}

/// Summary statistics of an existing probe batch.
pub fn summarize(results: &[ProbeResult]) -> EstimateSummary {
    let n = results.len();
    let mean = results.iter().map(|r| r.estimate).sum::<f64>() / n as f64;
    let stderr = if n >= 2 {
        let var = results
            .iter()
            .map(|r| {
                let d = r.estimate - mean;
                d * d
            })
            .sum::<f64>()
            / (n as f64 - 1.0);
        (var / n as f64).sqrt()
    } else {
        0.0
    };
    EstimateSummary {
        mean,
        stderr,
        probes: n,
    }
}

/// Exact expected probe estimate, Σ over root-to-leaf paths of
/// P(path)·estimate(path), by full traversal. Must equal the node count.
/// Errors once more than `max_nodes` nodes have been visited.
pub fn hk_exact_expectation<T: TreeOracle>(tree: &T, max_nodes: usize) -> Result<f64> {
    struct Frame<N> {
        node: N,
        prob: f64,
        product: f64,
        partial: f64,
    }
    let mut stack = vec![Frame {
        node: tree.root(),
        prob: 1.0,
        product: 1.0,
        partial: 1.0,
    }];
    let mut visited = 0usize;
    let mut total = 0.0;
    while let Some(frame) = stack.pop() {
        visited += 1;
        if visited > max_nodes {
            return Err(Error::invalid(format!(
                "traversal budget of {max_nodes} nodes exceeded"
            )));
        }
        let children = tree.children(&frame.node);
        if children.is_empty() {
            total += frame.prob * frame.partial;
            continue;
        }
        let c = children.len() as f64;
        let product = frame.product * c;
        let partial = frame.partial + product;
        let prob = frame.prob / c;
        for child in children {
            stack.push(Frame {
                node: child,
                prob,
                product,
                partial,
            });
        }
    }
    Ok(total)
}

/// Rooted spanning tree of the polygon flip graph, given implicitly for
/// memoryless traversal and probing.
///
/// Root: the fan at vertex 0. Parent rule for T ≠ root: among the triangles
/// (0, a, b) incident to vertex 0 whose far edge (a, b) is a diagonal of T,
/// take the lexicographically smallest (a, b) and flip it; the flip creates
/// a diagonal at vertex 0, so the number of diagonals incident to 0 strictly
/// increases along parent links and the walk reaches the fan. Children of T
/// are the flip neighbors N with parent(N) = T, scanned in sorted-diagonal
/// order.
pub struct ReverseSearchTree {
    geom: PolygonGeom,
}

/// Builds the reverse-search tree oracle for the convex k-gon.
pub fn reverse_search_tree(k: usize) -> Result<ReverseSearchTree> {
    Ok(ReverseSearchTree {
        geom: PolygonGeom::new(k)?,
    })
}

impl ReverseSearchTree {
    /// Diagonals incident to vertex 0: the rank that increases along
    /// parent links; maximal (k−3) exactly at the fan root.
    pub fn rank(&self, t: &Triangulation) -> usize {
        t.diagonals().iter().filter(|&&(i, _)| i == 0).count()
    }

    fn parent_key(&self, key: u128, masks: &[u32]) -> Option<u128> {
        // Neighbors of vertex 0 in ascending order; consecutive pairs are
        // the triangles at 0. The first pair with a gap has a diagonal far
        // edge, and it is the lexicographically smallest such pair.
        let mask0 = masks[0] & !1u32;
        let mut prev: Option<usize> = None;
        let mut bits = mask0;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if let Some(a) = prev {
                if v > a + 1 {
                    let bit = self
                        .geom
                        .diag_index(a, v)
                        .expect("far edge of a triangle at 0 is a diagonal");
                    debug_assert!(key >> bit & 1 == 1);
                    return Some(self.geom.flip_key(key, bit, masks));
                }
            }
            prev = Some(v);
        }
        None
    }

    /// The parent of a non-root triangulation.
    pub fn parent(&self, t: &Triangulation) -> Result<Option<Triangulation>> {
        let key = self.geom.to_key(t)?;
        let mut masks = vec![0u32; self.geom.k];
        self.geom.fill_vertex_masks(key, &mut masks);
        Ok(self.parent_key(key, &masks).map(|k| self.geom.from_key(k)))
    }
}

impl TreeOracle for ReverseSearchTree {
    type Node = Triangulation;

    fn root(&self) -> Triangulation {
        self.geom.from_key(self.geom.fan_key())
    }

    fn children(&self, node: &Triangulation) -> Vec<Triangulation> {
        let key = self.geom.to_key(node).expect("node belongs to this polygon");
        let mut masks = vec![0u32; self.geom.k];
        self.geom.fill_vertex_masks(key, &mut masks);
        let mut out = Vec::new();
        let mut nb_masks = vec![0u32; self.geom.k];
        let mut bits = key;
        while bits != 0 {
            let bit = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let neighbor = self.geom.flip_key(key, bit, &masks);
            self.geom.fill_vertex_masks(neighbor, &mut nb_masks);
            if self.parent_key(neighbor, &nb_masks) == Some(key) {
                out.push(self.geom.from_key(neighbor));
            }
        }
        out
    }
}
