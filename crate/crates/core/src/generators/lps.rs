//! Lubotzky–Phillips–Sarnak Ramanujan graphs: Cayley graphs of
//! PSL(2, Z/qZ) or PGL(2, Z/qZ) on p+1 generators, for distinct primes
//! p ≡ q ≡ 1 (mod 4).
//!
//! Generator recipe: every integer quadruple (a₀, a₁, a₂, a₃) with
//! a₀² + a₁² + a₂² + a₃² = p, a₀ > 0 odd and a₁, a₂, a₃ even, maps to the
//! matrix [[a₀+ıa₁, a₂+ıa₃], [−a₂+ıa₃, a₀−ıa₁]] mod q, where ı is the
//! smallest square root of −1 mod q. Exactly p+1 such quadruples exist and
//! the set is closed under inversion, so the Cayley graph is undirected.
//! When p is a quadratic residue mod q the graph lives on PSL with
//! (q³−q)/2 vertices and is nonbipartite; otherwise on PGL with q³−q
//! vertices, bipartite between the PSL coset classes.
//!
//! Vertex ids are canonical: group elements are represented by canonical
//! matrices (det scaled to 1 and sign fixed by first-nonzero-entry < q/2
//! for PSL; first nonzero entry scaled to 1 for PGL), packed into u32
//! codes and sorted lexicographically.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Enumeration cost is O(q³) and adjacency is n·(p+1); this cap keeps both
/// at desk scale while covering every published instance we target.
const MAX_Q: u64 = 199;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Modular arithmetic tables for Z/qZ, q an odd prime.
struct Zq {
    q: u32,
    inv: Vec<u32>,
    /// Smallest square root of each quadratic residue; 0 for non-residues.
    sqrt: Vec<u32>,
}

impl Zq {
    fn new(q: u32) -> Self {
        let mut inv = vec![0u32; q as usize];
        if q > 1 {
            inv[1] = 1;
            for i in 2..q as usize {
                inv[i] = (q as u64 - (q as u64 / i as u64) * inv[q as usize % i] as u64 % q as u64)
                    as u32
                    % q;
            }
        }
        let mut sqrt = vec![0u32; q as usize];
        for x in 1..q {
            let s = (x as u64 * x as u64 % q as u64) as usize;
            if sqrt[s] == 0 {
                sqrt[s] = x;
            }
        }
        Zq { q, inv, sqrt }
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.q as u64) as u32
    }

    #[inline]
    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    fn is_square(&self, a: u32) -> bool {
        a != 0 && self.sqrt[a as usize] != 0
    }

    fn reduce(&self, a: i64) -> u32 {
        let q = self.q as i64;
        (((a % q) + q) % q) as u32
    }
}

type Mat = [u32; 4];

fn mat_mul(z: &Zq, a: &Mat, b: &Mat) -> Mat {
    [
        (z.mul(a[0], b[0]) + z.mul(a[1], b[2])) % z.q,
        (z.mul(a[0], b[1]) + z.mul(a[1], b[3])) % z.q,
        (z.mul(a[2], b[0]) + z.mul(a[3], b[2])) % z.q,
        (z.mul(a[2], b[1]) + z.mul(a[3], b[3])) % z.q,
    ]
}

fn mat_det(z: &Zq, m: &Mat) -> u32 {
    (z.mul(m[0], m[3]) + z.neg(z.mul(m[1], m[2]))) % z.q
}

fn mat_scale(z: &Zq, m: &Mat, s: u32) -> Mat {
    [z.mul(m[0], s), z.mul(m[1], s), z.mul(m[2], s), z.mul(m[3], s)]
}

/// PGL canonical form: first nonzero entry scaled to 1.
fn canon_pgl(z: &Zq, m: &Mat) -> Mat {
    let e = *m.iter().find(|&&x| x != 0).expect("invertible matrix");
    mat_scale(z, m, z.inv[e as usize])
}

/// PSL canonical form for a det-1 matrix: of M and −M, keep the one whose
/// first nonzero entry is < q/2.
fn canon_psl_sign(z: &Zq, m: &Mat) -> Mat {
    let e = *m.iter().find(|&&x| x != 0).expect("invertible matrix");
    if e > z.q / 2 {
        [z.neg(m[0]), z.neg(m[1]), z.neg(m[2]), z.neg(m[3])]
    } else {
        *m
    }
}

fn pack(m: &Mat) -> u32 {
    debug_assert!(m.iter().all(|&x| x < 256));
    (m[0] << 24) | (m[1] << 16) | (m[2] << 8) | m[3]
}

fn unpack(code: u32) -> Mat {
    [code >> 24, (code >> 16) & 0xff, (code >> 8) & 0xff, code & 0xff]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GroupKind {
    Psl,
    Pgl,
}

/// All canonical codes of the group, sorted lexicographically. PGL elements
/// are enumerated directly in canonical form; PSL elements via SL(2,q)
/// followed by sign canonicalization and deduplication.
fn enumerate_group(z: &Zq, kind: GroupKind) -> Vec<u32> {
    let q = z.q;
    let mut codes = Vec::new();
    match kind {
        GroupKind::Pgl => {
            // [1, b, c, d] with d − bc ≠ 0, then [0, 1, c, d] with c ≠ 0.
            for b in 0..q {
                for c in 0..q {
                    let bc = z.mul(b, c);
                    for d in 0..q {
                        if d != bc {
                            codes.push(pack(&[1, b, c, d]));
                        }
                    }
                }
            }
            for c in 1..q {
                for d in 0..q {
                    codes.push(pack(&[0, 1, c, d]));
                }
            }
        }
        GroupKind::Psl => {
            // SL(2,q): a ≠ 0 rows have d = (1 + bc)/a; a = 0 forces bc = −1.
            for a in 1..q {
                let ia = z.inv[a as usize];
                for b in 0..q {
                    for c in 0..q {
                        let d = z.mul(ia, (1 + z.mul(b, c)) % q);
                        codes.push(pack(&canon_psl_sign(z, &[a, b, c, d])));
                    }
                }
            }
            for b in 1..q {
                let c = z.neg(z.inv[b as usize]);
                for d in 0..q {
                    codes.push(pack(&canon_psl_sign(z, &[0, b, c, d])));
                }
            }
        }
    }
    codes.sort_unstable();
    codes.dedup();
    codes
}

/// Integer quadruples (a₀, a₁, a₂, a₃) with a₀²+a₁²+a₂²+a₃² = p, a₀ > 0 odd,
/// the rest even.
fn generator_quadruples(p: i64) -> Vec<[i64; 4]> {
    let r = (p as f64).sqrt() as i64 + 1;
    let mut out = Vec::new();
    let evens = |limit: i64| (-limit..=limit).filter(|x| x % 2 == 0).collect::<Vec<_>>();
    let ev = evens(r);
    let mut a0 = 1i64;
    while a0 * a0 <= p {
        for &a1 in &ev {
            for &a2 in &ev {
                for &a3 in &ev {
                    if a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == p {
                        out.push([a0, a1, a2, a3]);
                    }
                }
            }
        }
        a0 += 2;
    }
    out
}

/// Builds LPS(p, q). Preconditions: p, q distinct primes, both ≡ 1 (mod 4),
/// q > 2√p (which guarantees a simple Cayley graph). Any self-loop or
/// duplicate edge is a construction failure, never silently collapsed.
pub fn lps_graph(p: u64, q: u64) -> Result<Graph> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("p={p} is not prime")));
    }
    if !is_prime(q) {
        return Err(Error::invalid(format!("q={q} is not prime")));
    }
    if p == q {
        return Err(Error::invalid("p and q must be distinct"));
    }
    if p % 4 != 1 || q % 4 != 1 {
        return Err(Error::invalid(format!(
            "p={p} and q={q} must both be congruent to 1 mod 4"
        )));
    }
    if q * q <= 4 * p {
        return Err(Error::invalid(format!(
            "q={q} must exceed 2*sqrt(p) for a simple graph (p={p})"
        )));
    }
    if q > MAX_Q {
        return Err(Error::invalid(format!("q={q} exceeds supported bound {MAX_Q}")));
    }

    let z = Zq::new(q as u32);
    // ı: smallest square root of −1 mod q; exists since q ≡ 1 (mod 4).
    let i_unit = z.sqrt[(q - 1) as usize];
    debug_assert!(z.mul(i_unit, i_unit) == z.q - 1);

    let quads = generator_quadruples(p as i64);
    if quads.len() != (p + 1) as usize {
        return Err(Error::ConstructionFailure(format!(
            "expected {} generator quadruples, found {}",
            p + 1,
            quads.len()
        )));
    }

    let p_mod = z.reduce(p as i64);
    let kind = if z.is_square(p_mod) {
        GroupKind::Psl
    } else {
        GroupKind::Pgl
    };

    // Quadruple -> matrix mod q, then canonicalize within the group.
    let mut gens: Vec<Mat> = Vec::with_capacity(quads.len());
    for [a0, a1, a2, a3] in &quads {
        let m: Mat = [
            z.reduce(a0 + *a1 as i64 * i_unit as i64),
            z.reduce(a2 + *a3 as i64 * i_unit as i64),
            z.reduce(-a2 + *a3 as i64 * i_unit as i64),
            z.reduce(a0 - *a1 as i64 * i_unit as i64),
        ];
        debug_assert_eq!(mat_det(&z, &m), p_mod);
        let canon = match kind {
            GroupKind::Psl => {
                let s = z.inv[z.sqrt[p_mod as usize] as usize];
                let scaled = mat_scale(&z, &m, s);
                debug_assert_eq!(mat_det(&z, &scaled), 1);
                canon_psl_sign(&z, &scaled)
            }
            GroupKind::Pgl => canon_pgl(&z, &m),
        };
        gens.push(canon);
    }
    {
        let mut codes: Vec<u32> = gens.iter().map(pack).collect();
        codes.sort_unstable();
        codes.dedup();
        if codes.len() != gens.len() {
            return Err(Error::ConstructionFailure(
                "generator set contains projectively equal elements".into(),
            ));
        }
        // Closure under inversion makes the Cayley graph undirected.
        for g in &gens {
            let det = mat_det(&z, g);
            let adj: Mat = [g[3], z.neg(g[1]), z.neg(g[2]), g[0]];
            let inv = mat_scale(&z, &adj, z.inv[det as usize]);
            let canon_inv = match kind {
                GroupKind::Psl => canon_psl_sign(&z, &inv),
                GroupKind::Pgl => canon_pgl(&z, &inv),
            };
            if !codes.binary_search(&pack(&canon_inv)).is_ok() {
                return Err(Error::ConstructionFailure(
                    "generator set is not closed under inversion".into(),
                ));
            }
        }
    }

    let codes = enumerate_group(&z, kind);
    let expected_n = match kind {
        GroupKind::Psl => (q * q * q - q) / 2,
        GroupKind::Pgl => q * q * q - q,
    };
    if codes.len() as u64 != expected_n {
        return Err(Error::ConstructionFailure(format!(
            "group enumeration found {} elements, expected {expected_n}",
            codes.len()
        )));
    }
    let n = codes.len();
    if n.checked_mul((p + 1) as usize).map_or(true, |t| t > 400_000_000) {
        return Err(Error::invalid(format!(
            "adjacency of {n} x {} entries exceeds the memory budget",
            p + 1
        )));
    }

    let index: HashMap<u32, u32> = codes
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i as u32))
        .collect();

    let mut adjacency: Vec<Vec<u32>> = Vec::with_capacity(n);
    for &code in &codes {
        let v = unpack(code);
        let mut neighbors = Vec::with_capacity(gens.len());
        for g in &gens {
            let prod = mat_mul(&z, &v, g);
            let canon = match kind {
                GroupKind::Psl => canon_psl_sign(&z, &prod),
                GroupKind::Pgl => canon_pgl(&z, &prod),
            };
            let idx = *index
                .get(&pack(&canon))
                .ok_or_else(|| Error::ConstructionFailure("product left the group".into()))?;
            neighbors.push(idx);
        }
        neighbors.sort_unstable();
        if neighbors.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::ConstructionFailure(
                "duplicate edge in Cayley graph (q too small relative to p?)".into(),
            ));
        }
        if neighbors.binary_search(&index[&code]).is_ok() {
            return Err(Error::ConstructionFailure(
                "self-loop in Cayley graph (q too small relative to p?)".into(),
            ));
        }
        adjacency.push(neighbors);
    }
    Graph::from_adjacency(adjacency)
}
