//! Extreme nontrivial spectrum of the adjacency matrix (λ, regular graphs)
//! and of the normalized adjacency matrix (μ, general graphs), Ramanujan
//! classification, and the mixing-bound calculators.
//!
//! Matrix-vector products may be parallelized internally, but only across
//! disjoint output ranges with serial inner reductions, so results are
//! bit-identical for any thread count.

mod mixing;
mod solver;

pub use mixing::{mixing_interval_nonregular, mixing_interval_regular, mixing_lower_hybrid};

use crate::error::{Error, Result};
use crate::graph::{DegreeStats, Graph};
use solver::{dominant_deflated, ShiftedAdjacency, ShiftedNormalized};

/// Default relative tolerance (scaled by d for the adjacency matrix, by 1
/// for the normalized matrix).
pub const DEFAULT_TOL: f64 = 1e-6;
pub const DEFAULT_MAX_ITER: usize = 100_000;

/// Outcome of a two-sided extreme-eigenvalue solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveDetail {
    pub value: f64,
    /// Total iterations across both shifted solves.
    pub iterations: usize,
    /// Largest residual ‖Mx − θx‖ among the two certificates.
    pub residual: f64,
}

/// λ(G) = max{|λ₂|, |λ_n|} of the adjacency matrix of a connected regular
/// graph, to within ±tol·d (residual-certified).
pub fn lambda_regular(g: &Graph, tol: f64, max_iter: usize) -> Result<f64> {
    Ok(lambda_regular_detailed(g, tol, max_iter)?.value)
}

/// As [`lambda_regular`], with iteration count and residual.
pub fn lambda_regular_detailed(g: &Graph, tol: f64, max_iter: usize) -> Result<SolveDetail> {
    let stats = g.degree_stats()?;
    if !stats.regular {
        return Err(Error::invalid(format!(
            "lambda_regular requires a regular graph (degrees {}..{})",
            stats.d_min, stats.d_max
        )));
    }
    let d = stats.d_min as f64;
    if stats.d_min == 0 {
        return Err(Error::invalid("graph has isolated vertices"));
    }
    if !g.is_connected() {
        return Err(Error::invalid("lambda_regular requires a connected graph"));
    }
    let n = g.vertex_count();
    let principal = vec![1.0 / (n as f64).sqrt(); n];
    let tol_abs = tol * d;

    // Spectrum of A + dI on the deflated subspace is {λ_i + d : i ≥ 2} ⊂
    // [0, 2d]; its maximum is λ₂ + d, so no sign ambiguity can occur.
    let hi = dominant_deflated(
        &ShiftedAdjacency {
            graph: g,
            shift: d,
            negate: false,
        },
        &principal,
        tol_abs,
        max_iter,
    )?;
    let lambda_2 = hi.value - d;
    // dI − A: dominant deflated eigenvalue is d − λ_n.
    let lo = dominant_deflated(
        &ShiftedAdjacency {
            graph: g,
            shift: d,
            negate: true,
        },
        &principal,
        tol_abs,
        max_iter,
    )?;
    let lambda_n = d - lo.value;
    Ok(SolveDetail {
        value: lambda_2.abs().max(lambda_n.abs()),
        iterations: hi.iterations + lo.iterations,
        residual: hi.residual.max(lo.residual),
    })
}

/// μ(G) = max(μ₂, −μ_n) of the normalized adjacency matrix
/// N = D^{-1/2} A D^{-1/2} of a connected graph, to within ±tol.
pub fn mu_normalized(g: &Graph, tol: f64, max_iter: usize) -> Result<f64> {
    Ok(mu_normalized_detailed(g, tol, max_iter)?.value)
}

/// As [`mu_normalized`], with iteration count and residual.
pub fn mu_normalized_detailed(g: &Graph, tol: f64, max_iter: usize) -> Result<SolveDetail> {
    let stats = g.degree_stats()?;
    if stats.d_min == 0 {
        return Err(Error::invalid("graph has isolated vertices"));
    }
    if !g.is_connected() {
        return Err(Error::invalid("mu_normalized requires a connected graph"));
    }
    let n = g.vertex_count();
    let two_m = (2 * g.edge_count()) as f64;
    // f(v) = √deg(v) is the eigenvector for the eigenvalue 1.
    let principal: Vec<f64> = (0..n).map(|v| (g.degree(v) as f64 / two_m).sqrt()).collect();
    let inv_sqrt_deg: Vec<f64> = (0..n).map(|v| 1.0 / (g.degree(v) as f64).sqrt()).collect();

    let hi = dominant_deflated(
        &ShiftedNormalized {
            graph: g,
            inv_sqrt_deg: inv_sqrt_deg.clone(),
            shift: 1.0,
            negate: false,
        },
        &principal,
        tol,
        max_iter,
    )?;
    let mu_2 = hi.value - 1.0;
    let lo = dominant_deflated(
        &ShiftedNormalized {
            graph: g,
            inv_sqrt_deg,
            shift: 1.0,
            negate: true,
        },
        &principal,
        tol,
        max_iter,
    )?;
    let mu_n = 1.0 - lo.value;
    // Eigenvalues of N lie in [−1, 1]; clamp estimator dust at the ends.
    let mu = mu_2.max(-mu_n).clamp(0.0, 1.0);
    Ok(SolveDetail {
        value: mu,
        iterations: hi.iterations + lo.iterations,
        residual: hi.residual.max(lo.residual),
    })
}

/// Whether λ(G) ≤ 2√(d−1) + tol for a connected regular graph.
pub fn ramanujan_check(g: &Graph, tol: f64) -> Result<bool> {
    let stats = g.degree_stats()?;
    if !stats.regular {
        return Err(Error::invalid("ramanujan_check requires a regular graph"));
    }
    let d = stats.d_min as f64;
    let lambda = lambda_regular(g, tol, DEFAULT_MAX_ITER)?;
    Ok(lambda <= 2.0 * (d - 1.0).sqrt() + tol)
}

/// Spectral profile of a graph: counts, degree statistics, λ (regular
/// graphs only), μ, and the Ramanujan flag.
#[derive(Debug, Clone)]
pub struct SpectralSummary {
    pub n: usize,
    pub m: usize,
    pub stats: DegreeStats,
    /// Present iff the graph is regular.
    pub lambda: Option<f64>,
    pub mu: f64,
    /// Present iff the graph is regular: λ ≤ 2√(d−1) + tol.
    pub ramanujan: Option<bool>,
    /// Largest residual among the certificates at termination.
    pub tol_achieved: f64,
    pub iterations: usize,
}

impl SpectralSummary {
    /// The Ramanujan threshold 2√(d̄−1); equals 2√(d−1) on regular graphs.
    pub fn two_sqrt_dm1(&self) -> f64 {
        2.0 * (self.stats.d_bar - 1.0).max(0.0).sqrt()
    }
}

/// Computes λ (if regular) and μ independently on a connected graph.
pub fn spectral_summary(g: &Graph, tol: f64, max_iter: usize) -> Result<SpectralSummary> {
    let stats = g.degree_stats()?;
    let mu = mu_normalized_detailed(g, tol, max_iter)?;
    let mut iterations = mu.iterations;
    let mut residual = mu.residual;
    let (lambda, ramanujan) = if stats.regular {
        let det = lambda_regular_detailed(g, tol, max_iter)?;
        iterations += det.iterations;
        residual = residual.max(det.residual);
        let d = stats.d_min as f64;
        (
            Some(det.value),
            Some(det.value <= 2.0 * (d - 1.0).sqrt() + tol),
        )
    } else {
        (None, None)
    };
    Ok(SpectralSummary {
        n: g.vertex_count(),
        m: g.edge_count(),
        stats,
        lambda,
        mu: mu.value,
        ramanujan,
        tol_achieved: residual,
        iterations,
    })
}
