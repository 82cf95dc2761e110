//! Triangulations of a convex polygon, their flip graph, and quotients by
//! the rotation / dihedral symmetry groups.
//!
//! A triangulation of a convex k-gon is a maximal set of k−3 pairwise
//! non-crossing diagonals. Internally a triangulation is a u128 bitset over
//! the k(k−3)/2 possible diagonals, which caps this machinery at k ≤ 17,
//! already past the point where the Catalan-sized node set exhausts memory.
//!
//! Flip convention: the diagonal (i,j) lies in a unique quadrilateral
//! (i,a,j,b) formed by its two incident triangles, and flips to
//! (min(a,b), max(a,b)). Crossing test: diagonals with disjoint endpoints
//! cross iff exactly one of a,b lies strictly inside the cyclic interval
//! (i,j); diagonals sharing an endpoint never cross.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_K: usize = 17;

/// A triangulation of the convex k-gon: exactly k−3 pairwise non-crossing
/// diagonals (i, j) with i < j, j − i ≥ 2, (i, j) ≠ (0, k−1), kept in
/// canonical sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangulation {
    k: usize,
    diagonals: Vec<(usize, usize)>,
}

fn is_diagonal(k: usize, i: usize, j: usize) -> bool {
    i < j && j < k && j - i >= 2 && !(i == 0 && j == k - 1)
}

/// Diagonals sharing an endpoint never cross; otherwise they cross iff
/// exactly one endpoint of the second lies strictly inside the interval
/// spanned by the first.
fn crosses(d1: (usize, usize), d2: (usize, usize)) -> bool {
    if d1.0 == d2.0 || d1.0 == d2.1 || d1.1 == d2.0 || d1.1 == d2.1 {
        return false;
    }
    let (i, j) = d1;
    let inside = |x: usize| i < x && x < j;
    inside(d2.0) != inside(d2.1)
}

impl Triangulation {
    /// Validates diagonal count, ranges, and pairwise non-crossing; sorts
    /// into canonical order.
    pub fn new(k: usize, mut diagonals: Vec<(usize, usize)>) -> Result<Self> {
        if k < 4 {
            return Err(Error::invalid(format!("polygon size {k} < 4")));
        }
        if diagonals.len() != k - 3 {
            return Err(Error::invalid(format!(
                "expected {} diagonals for a {k}-gon, got {}",
                k - 3,
                diagonals.len()
            )));
        }
        for &(i, j) in &diagonals {
            if !is_diagonal(k, i, j) {
                return Err(Error::invalid(format!("({i},{j}) is not a diagonal")));
            }
        }
        diagonals.sort_unstable();
        for a in 0..diagonals.len() {
            for b in a + 1..diagonals.len() {
                if diagonals[a] == diagonals[b] {
                    return Err(Error::invalid(format!(
                        "duplicate diagonal {:?}",
                        diagonals[a]
                    )));
                }
                if crosses(diagonals[a], diagonals[b]) {
                    return Err(Error::invalid(format!(
                        "diagonals {:?} and {:?} cross",
                        diagonals[a], diagonals[b]
                    )));
                }
            }
        }
        Ok(Triangulation { k, diagonals })
    }

    /// The fan at vertex 0: diagonals (0, 2), …, (0, k−2).
    pub fn fan(k: usize) -> Result<Self> {
        Triangulation::new(k, (2..k - 1).map(|j| (0, j)).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Sorted diagonals.
    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    /// Replaces `diagonal` by the other diagonal of its quadrilateral.
    pub fn flip(&self, diagonal: (usize, usize)) -> Result<Triangulation> {
        if !self.diagonals.contains(&diagonal) {
            return Err(Error::invalid(format!(
                "{diagonal:?} is not a diagonal of this triangulation"
            )));
        }
        let geom = PolygonGeom::new(self.k)?;
        let bit = geom
            .diag_index(diagonal.0, diagonal.1)
            .expect("contained diagonal is valid");
        let key = geom.to_key(self)?;
        let mut masks = vec![0u32; self.k];
        geom.fill_vertex_masks(key, &mut masks);
        Ok(geom.from_key(geom.flip_key(key, bit, &masks)))
    }
}

/// Number of triangulations of the convex k-gon: (1/(k−1))·C(2k−4, k−2).
pub fn triangulation_count(k: usize) -> u64 {
    assert!(k >= 3);
    // C(2n, n)/(n+1) with n = k−2, built up without overflow for k ≤ 35.
    let n = (k - 2) as u128;
    let mut c: u128 = 1;
    for i in 0..n {
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    c as u64
}

/// Diagonal indexing shared by the flip machinery: bit b of a key is the
/// b-th diagonal in lexicographic order.
pub(crate) struct PolygonGeom {
    pub k: usize,
    pairs: Vec<(u8, u8)>,
    index: Vec<u16>,
}

impl PolygonGeom {
    pub fn new(k: usize) -> Result<Self> {
        if k < 4 {
            return Err(Error::invalid(format!("polygon size {k} < 4")));
        }
        if k > MAX_K {
            return Err(Error::invalid(format!(
                "polygon size {k} > {MAX_K}: diagonal set exceeds the 128-bit key"
            )));
        }
        let mut pairs = Vec::new();
        let mut index = vec![u16::MAX; k * k];
        for i in 0..k {
            for j in i + 2..k {
                if is_diagonal(k, i, j) {
                    index[i * k + j] = pairs.len() as u16;
                    pairs.push((i as u8, j as u8));
                }
            }
        }
        debug_assert_eq!(pairs.len(), k * (k - 3) / 2);
        Ok(PolygonGeom { k, pairs, index })
    }

    #[inline]
    pub fn diag_index(&self, i: usize, j: usize) -> Option<usize> {
        let v = self.index[i * self.k + j];
        (v != u16::MAX).then_some(v as usize)
    }

    #[inline]
    pub fn pair(&self, bit: usize) -> (usize, usize) {
        let (i, j) = self.pairs[bit];
        (i as usize, j as usize)
    }

    pub fn fan_key(&self) -> u128 {
        let mut key = 0u128;
        for j in 2..self.k - 1 {
            key |= 1 << self.diag_index(0, j).unwrap();
        }
        key
    }

    /// Per-vertex adjacency bitmask over polygon vertices: the two sides
    /// plus the diagonals present in `key`.
    pub fn fill_vertex_masks(&self, key: u128, masks: &mut [u32]) {
        let k = self.k;
        for (v, m) in masks.iter_mut().enumerate().take(k) {
            *m = (1 << ((v + 1) % k)) | (1 << ((v + k - 1) % k));
        }
        let mut bits = key;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (i, j) = self.pair(b);
            masks[i] |= 1 << j;
            masks[j] |= 1 << i;
        }
    }

    /// Flips the diagonal at `bit`; `masks` must describe `key`.
    pub fn flip_key(&self, key: u128, bit: usize, masks: &[u32]) -> u128 {
        let (i, j) = self.pair(bit);
        let common = masks[i] & masks[j];
        debug_assert_eq!(common.count_ones(), 2, "diagonal borders two triangles");
        let a = common.trailing_zeros() as usize;
        let b = (31 - common.leading_zeros()) as usize;
        let new_bit = self
            .diag_index(a.min(b), a.max(b))
            .expect("opposite corners of a quadrilateral form a diagonal");
        (key & !(1u128 << bit)) | (1u128 << new_bit)
    }

    pub fn to_key(&self, t: &Triangulation) -> Result<u128> {
        if t.k != self.k {
            return Err(Error::invalid(format!(
                "triangulation is for a {}-gon, geometry for a {}-gon",
                t.k, self.k
            )));
        }
        let mut key = 0u128;
        for &(i, j) in &t.diagonals {
            key |= 1 << self.diag_index(i, j).expect("validated diagonal");
        }
        Ok(key)
    }

    pub fn from_key(&self, key: u128) -> Triangulation {
        let mut diagonals = Vec::with_capacity(self.k - 3);
        let mut bits = key;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            diagonals.push(self.pair(b));
        }
        // Bit order is lexicographic pair order, so this is already sorted.
        Triangulation {
            k: self.k,
            diagonals,
        }
    }

    /// Image of `key` under a vertex permutation.
    pub fn transform_key(&self, key: u128, perm: &[u8]) -> u128 {
        let mut out = 0u128;
        let mut bits = key;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (i, j) = self.pair(b);
            let (a, b2) = (perm[i] as usize, perm[j] as usize);
            let (lo, hi) = (a.min(b2), a.max(b2));
            out |= 1 << self.diag_index(lo, hi).expect("diagonals map to diagonals");
        }
        out
    }
}

/// Breadth-first closure of the flip moves from the fan at vertex 0.
/// Returns node keys in discovery order, the key → index map, and the edge
/// list with each undirected flip recorded once.
pub(crate) fn enumerate_flip_graph(
    geom: &PolygonGeom,
) -> (Vec<u128>, HashMap<u128, u32>, Vec<(u32, u32)>) {
    let root = geom.fan_key();
    let mut keys = vec![root];
    let mut index: HashMap<u128, u32> = HashMap::new();
    index.insert(root, 0);
    let mut edges = Vec::new();
    let mut masks = vec![0u32; geom.k];
    let mut head = 0usize;
    while head < keys.len() {
        let key = keys[head];
        let u = head as u32;
        head += 1;
        geom.fill_vertex_masks(key, &mut masks);
        let mut bits = key;
        while bits != 0 {
            let bit = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let neighbor = geom.flip_key(key, bit, &masks);
            let v = *index.entry(neighbor).or_insert_with(|| {
                keys.push(neighbor);
                (keys.len() - 1) as u32
            });
            // BFS processes nodes in index order, so recording only u < v
            // captures each undirected flip exactly once.
            if u < v {
                edges.push((u, v));
            }
        }
    }
    (keys, index, edges)
}

/// The flip graph of the convex k-gon together with its node table.
/// Node indices are deterministic: breadth-first discovery order from the
/// fan at vertex 0, with flips scanned in sorted-diagonal order.
pub struct PolygonFlipGraph {
    graph: Graph,
    keys: Vec<u128>,
    index: HashMap<u128, u32>,
    geom: PolygonGeom,
}

impl PolygonFlipGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn node_count(&self) -> usize {
        self.keys.len()
    }

    /// The triangulation at a node index.
    pub fn triangulation(&self, index: usize) -> Triangulation {
        self.geom.from_key(self.keys[index])
    }

    /// The node index of a triangulation, if it belongs to this graph.
    pub fn index_of(&self, t: &Triangulation) -> Option<usize> {
        let key = self.geom.to_key(t).ok()?;
        self.index.get(&key).map(|&i| i as usize)
    }
}

/// Builds the flip graph of the convex k-gon: nodes are all triangulations,
/// edges are flips. (k−3)-regular with (1/(k−1))·C(2k−4, k−2) nodes.
pub fn polygon_flip_graph(k: usize) -> Result<PolygonFlipGraph> {
    let geom = PolygonGeom::new(k)?;
    let (keys, index, edges) = enumerate_flip_graph(&geom);
    let graph = Graph::from_edges(keys.len(), &edges)?;
    Ok(PolygonFlipGraph {
        graph,
        keys,
        index,
        geom,
    })
}

/// Symmetry group for [`polygon_flip_quotient`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientGroup {
    /// Rotations i ↦ i + 1 (mod k); order k.
    Cyclic,
    /// Rotations and reflections i ↦ k − 1 − i (mod k); order 2k.
    Dihedral,
}

fn group_perms(k: usize, group: QuotientGroup) -> Vec<Vec<u8>> {
    let mut perms = Vec::new();
    for r in 0..k {
        perms.push((0..k).map(|x| ((x + r) % k) as u8).collect());
    }
    if group == QuotientGroup::Dihedral {
        for r in 0..k {
            perms.push((0..k).map(|x| ((k - 1 - x + r) % k) as u8).collect());
        }
    }
    perms
}

/// Flip graph on orbits of triangulations under the chosen symmetry group.
/// Two distinct orbits are joined if any representatives differ by a flip;
/// orbit self-flips and parallel orbit edges are collapsed, so the result
/// is again a simple graph.
pub fn polygon_flip_quotient(k: usize, group: QuotientGroup) -> Result<Graph> {
    if k < 5 {
        return Err(Error::invalid(format!(
            "quotient flip graph requires k >= 5, got {k}"
        )));
    }
    let geom = PolygonGeom::new(k)?;
    let (keys, _, edges) = enumerate_flip_graph(&geom);
    let perms = group_perms(k, group);
    let canon = |key: u128| -> u128 {
        perms
            .iter()
            .map(|p| geom.transform_key(key, p))
            .min()
            .expect("group is nonempty")
    };
    let mut orbit_index: HashMap<u128, u32> = HashMap::new();
    let mut orbit_of = Vec::with_capacity(keys.len());
    for &key in &keys {
        let rep = canon(key);
        let next = orbit_index.len() as u32;
        let id = *orbit_index.entry(rep).or_insert(next);
        orbit_of.push(id);
    }
    let mut quotient_edges: Vec<(u32, u32)> = edges
        .iter()
        .filter_map(|&(u, v)| {
            let (a, b) = (orbit_of[u as usize], orbit_of[v as usize]);
            if a == b {
                None
            } else {
                Some((a.min(b), a.max(b)))
            }
        })
        .collect();
    quotient_edges.sort_unstable();
    quotient_edges.dedup();
    Graph::from_edges(orbit_index.len(), &quotient_edges)
}
