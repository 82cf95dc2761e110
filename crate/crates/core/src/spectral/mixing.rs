//! Mixing-bound calculators: the regular Expander Mixing Lemma interval, its
//! volume-based analogue for partitions of a non-regular graph, and the
//! hybrid average-degree lower bound.

use crate::error::{Error, Result};

/// Expander Mixing Lemma interval for a d-regular graph on n vertices:
/// e(S,T) lies in `center ± radius` with
/// center = d|S||T|/n and radius = λ·√(|S||T|(1−|S|/n)(1−|T|/n)).
pub fn mixing_interval_regular(
    size_s: u64,
    size_t: u64,
    n: u64,
    d: f64,
    lambda: f64,
) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(Error::invalid("n must be >= 1"));
    }
    if size_s > n || size_t > n {
        return Err(Error::invalid(format!(
            "subset sizes ({size_s}, {size_t}) exceed n={n}"
        )));
    }
    if !(d > 0.0) {
        return Err(Error::invalid(format!("d={d} must be positive")));
    }
    if !(lambda >= 0.0) {
        return Err(Error::invalid(format!("lambda={lambda} negative")));
    }
    let (s, t, nf) = (size_s as f64, size_t as f64, n as f64);
    let center = d * s * t / nf;
    let radius = lambda * (s * t * (1.0 - s / nf) * (1.0 - t / nf)).sqrt();
    Ok((center - radius, center + radius))
}

/// Volume form of the mixing bound, valid only for partitions V = S ⊔ T of
/// a graph with normalized second eigenvalue `mu`: e(S,T) lies in
/// `c(1−μ) .. c(1+μ)` with c = vol(S)·vol(T)/vol(V). The partition
/// requirement vol(S) + vol(T) = vol(V) is enforced, not assumed.
pub fn mixing_interval_nonregular(
    vol_s: u64,
    vol_t: u64,
    vol_v: u64,
    mu: f64,
) -> Result<(f64, f64)> {
    if vol_s == 0 || vol_t == 0 {
        return Err(Error::invalid("both parts must have positive volume"));
    }
    if vol_s + vol_t != vol_v {
        return Err(Error::invalid(format!(
            "not a partition: vol(S)={vol_s} + vol(T)={vol_t} != vol(V)={vol_v}"
        )));
    }
    if !(0.0..=1.0).contains(&mu) {
        return Err(Error::invalid(format!("mu={mu} outside [0,1]")));
    }
    let c = vol_s as f64 * vol_t as f64 / vol_v as f64;
    Ok((c * (1.0 - mu), c * (1.0 + mu)))
}

/// Hybrid lower bound on e(S,T) for a partition of a graph with average
/// degree `d_bar`, degree-sequence standard deviation `sigma`, and
/// normalized second eigenvalue `mu`:
///
///   e(S,T) ≥ (1−μ)(d̄|S| − σ√(|S|n))(d̄|T| − σ√(|T|n)) / (d̄n)
///
/// May be negative; returned unclamped.
pub fn mixing_lower_hybrid(
    size_s: u64,
    size_t: u64,
    n: u64,
    d_bar: f64,
    sigma: f64,
    mu: f64,
) -> Result<f64> {
    if !(d_bar > 0.0) {
        return Err(Error::invalid(format!("d_bar={d_bar} must be positive")));
    }
    if n == 0 || size_s > n || size_t > n {
        return Err(Error::invalid(format!(
            "subset sizes ({size_s}, {size_t}) invalid for n={n}"
        )));
    }
    if !(sigma >= 0.0) {
        return Err(Error::invalid(format!("sigma={sigma} negative")));
    }
    if !(0.0..=1.0).contains(&mu) {
        return Err(Error::invalid(format!("mu={mu} outside [0,1]")));
    }
    let (s, t, nf) = (size_s as f64, size_t as f64, n as f64);
    let fs = d_bar * s - sigma * (s * nf).sqrt();
    let ft = d_bar * t - sigma * (t * nf).sqrt();
    Ok((1.0 - mu) * fs * ft / (d_bar * nf))
}
