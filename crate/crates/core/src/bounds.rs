//! Closed-form evaluators for the queue-density and vertex-count bounds and
//! the asymptotic random-graph curves. Everything here is a pure function of
//! real arguments; graph data never enters.

use crate::error::{Error, Result};

/// Structural lower bound on the queue density κ at processed density `pi`
/// for a d-regular graph with second eigenvalue `lambda`:
///
///   κ ≥ 1 − π − λ²(1−π) / (d²π + λ²(1−π))
///
/// Holds at every step of *any* growth process on the graph, regardless of
/// how the next queue vertex is picked.
pub fn structural_queue_lower(pi: f64, d: f64, lambda: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&pi) {
        return Err(Error::invalid(format!("pi={pi} outside [0,1]")));
    }
    if !(lambda >= 0.0) {
        return Err(Error::invalid(format!("lambda={lambda} negative")));
    }
    if !(lambda < d) {
        return Err(Error::invalid(format!(
            "requires lambda < d, got lambda={lambda}, d={d}"
        )));
    }
    if pi == 0.0 {
        // λ²·1/(0 + λ²·1) = 1 for every λ > 0; the λ = 0 corner is 0/0 and
        // the bound is vacuous (κ₀ = 1/n), so return the limit value 0.
        return Ok(0.0);
    }
    let correction = lambda * lambda * (1.0 - pi) / (d * d * pi + lambda * lambda * (1.0 - pi));
    Ok(1.0 - pi - correction)
}

/// Lower bound on the *expected* queue density for the randomized growth
/// process on a d-regular graph:
///
///   β(π, d, λ) = 1 − π − exp(−(d − λ)(1 + 1/(d−1)) π)
///
/// `d` may be non-integral (average-degree heuristic); values may be
/// negative and are returned unclamped.
pub fn beta(pi: f64, d: f64, lambda: f64) -> Result<f64> {
    if !(d > 1.0) {
        return Err(Error::invalid(format!("beta requires d > 1, got {d}")));
    }
    if !(0.0..=1.0).contains(&pi) {
        return Err(Error::invalid(format!("pi={pi} outside [0,1]")));
    }
    if !(0.0..d).contains(&lambda) {
        return Err(Error::invalid(format!(
            "requires 0 <= lambda < d, got lambda={lambda}, d={d}"
        )));
    }
    Ok(1.0 - pi - (-(d - lambda) * (1.0 + 1.0 / (d - 1.0)) * pi).exp())
}

/// Two-sided estimate of the vertex count from growth-process data: `visited`
/// is |W| = |P| + |Q|, `boundary` an estimate of e(U, W).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SizeInterval {
    pub lower: f64,
    /// `f64::INFINITY` when the data admits no finite upper bound yet: an
    /// expected regime early in the process, not a fault.
    pub upper: f64,
    pub visited: u64,
    pub boundary: f64,
    pub d: f64,
    pub lambda: f64,
}

/// Bounds on the total vertex count n:
///
///   (d−λ)|W|² / ((d−λ)|W| − e(U,W))  ≥  n  ≥  (d+λ)|W|² / ((d+λ)|W| − e(U,W))
///
/// The upper bound is +∞ when (d−λ)|W| ≤ e(U,W).
pub fn vertex_count_bounds(visited: u64, boundary: f64, d: f64, lambda: f64) -> Result<SizeInterval> {
    if visited == 0 {
        return Err(Error::invalid("visited count must be >= 1"));
    }
    if !(boundary >= 0.0) {
        return Err(Error::invalid(format!("boundary={boundary} negative")));
    }
    if !(lambda >= 0.0 && lambda < d) {
        return Err(Error::invalid(format!(
            "requires 0 <= lambda < d, got lambda={lambda}, d={d}"
        )));
    }
    let w = visited as f64;
    let lower = (d + lambda) * w * w / ((d + lambda) * w - boundary);
    let upper_den = (d - lambda) * w - boundary;
    let upper = if upper_den > 0.0 {
        (d - lambda) * w * w / upper_den
    } else {
        f64::INFINITY
    };
    Ok(SizeInterval {
        lower,
        upper,
        visited,
        boundary,
        d,
        lambda,
    })
}

/// Density δ₀ of the giant component of G(n, d/n) for d > 1: the unique root
/// of 1 − x = e^{−dx} in (0, 1), found by bracketed bisection to ±tol.
pub fn giant_component_density(d: f64, tol: f64) -> Result<f64> {
    if !(d > 1.0) {
        return Err(Error::invalid(format!(
            "no root in (0,1) for d={d}; requires d > 1"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::invalid(format!("tol={tol} must be positive")));
    }
    let f = |x: f64| 1.0 - x - (-d * x).exp();
    // f(ε) ≈ (d−1)ε > 0 and f(1) = −e^{−d} < 0 bracket the root.
    let mut lo = f64::MIN_POSITIVE;
    let mut hi = 1.0;
    // 1075 halvings reach subnormal widths from (0,1); stop early at tol.
    for _ in 0..1100 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Asymptotic expected queue density of the growth process on the giant
/// component of G(n, d/n): 1 − π − e^{−dπ} for π < δ₀(d), and 0 beyond.
/// The curve is continuous at δ₀ (that is the defining equation) but its
/// derivative is not; no smoothing is applied here.
pub fn er_queue_density(pi: f64, d: f64) -> Result<f64> {
    if !(d > 1.0) {
        return Err(Error::invalid(format!("requires d > 1, got {d}")));
    }
    if !(0.0..=1.0).contains(&pi) {
        return Err(Error::invalid(format!("pi={pi} outside [0,1]")));
    }
    let delta0 = giant_component_density(d, 1e-14)?;
    if pi < delta0 {
        Ok(1.0 - pi - (-d * pi).exp())
    } else {
        Ok(0.0)
    }
}

/// Asymptotic expected density of unvisited vertices at time density `pi`:
/// e^{−d·π}.
pub fn expected_unvisited_density(pi: f64, d: f64) -> f64 {
    (-d * pi).exp()
}
