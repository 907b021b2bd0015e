//! Thresholds for multiples and adjoints of a fixed bundle `B`.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::{div_ceil, ell_floor, rational_ceil, BoundReport, Outcome, TheoremId};
use crate::error::{Result, SyzygyError};

/// Minimal `ℓ` with `(m_q)` and with `(M_q)` for `L = ℓB`.
///
/// `reg_k` is the regularity of `K_X` with respect to `B` (at most `n + 1`),
/// `rho` the regularity of `O_X`.
pub fn predict_multiple(n: i64, q: i64, reg_k: i64, rho: i64) -> Result<BoundReport> {
    if n <= 1 {
        return Err(SyzygyError::DimensionTooSmall(n));
    }
    let report = BoundReport::new(TheoremId::MultipleBundle)
        .echo("n", n)
        .echo("q", q)
        .echo("reg_B(K_X)", reg_k)
        .echo("rho", rho);
    if reg_k > n + 1 {
        return Err(SyzygyError::HypothesisViolation(format!("reg_B(K_X) = {reg_k} exceeds n + 1 = {}", n + 1)));
    }
    if rho < 0 {
        return Err(SyzygyError::HypothesisViolation(format!("rho = {rho} is negative")));
    }
    let m_q = div_ceil(q - n + reg_k, n - 1);
    Ok(report.with(Outcome::Thresholds { m_q, big_m_q: m_q.max(rho) }))
}

/// `(M_2)` for `L = ℓB` on a surface from `(L·B)`, `(B²)` and `h⁰(B)`.
pub fn predict_m2_surface(lb: i64, b2: i64, h0b: i64) -> BoundReport {
    let report = BoundReport::new(TheoremId::M2Surface).echo("L.B", lb).echo("B^2", b2).echo("h0(B)", h0b);
    if lb > 2 * b2 {
        report.verdict(true, "L.B > 2 B^2")
    } else if lb == 2 * b2 && h0b >= 4 {
        report.verdict(true, "L.B = 2 B^2 and h0(B) >= 4")
    } else {
        report.verdict(false, "neither L.B > 2 B^2 nor equality with h0(B) >= 4")
    }
}

/// Data of `(X, B)` with `dB - K_X` nef.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NefData {
    pub n: i64,
    pub d: Rational64,
    /// `(B^n)`, when known.
    pub b_top: Option<i64>,
    /// `((2d-1)B - 2K_X · Λ) > 0` with `Λ = K_X + B`.
    pub first_positive: bool,
    /// `((2d-1)B - 2K_X · Λ) >= 0`.
    pub first_nonnegative: bool,
    pub h0_lambda_at_least_4: bool,
}

impl NefData {
    pub fn new(n: i64, d: Rational64) -> Self {
        NefData { n, d, b_top: None, first_positive: false, first_nonnegative: false, h0_lambda_at_least_4: false }
    }

    fn check(&self) -> Result<()> {
        if self.d < Rational64::from_integer(1) {
            return Err(SyzygyError::HypothesisViolation(format!("d = {} is below 1", self.d)));
        }
        if self.n < 2 {
            return Err(SyzygyError::DimensionTooSmall(self.n));
        }
        Ok(())
    }
}

/// Minimal `ℓ` with `(M_q)` for `K_X + ℓB`.
pub fn predict_adjoint_nef(data: &NefData, q: i64) -> Result<BoundReport> {
    data.check()?;
    let d = rational_ceil(data.d);
    let mut report = BoundReport::new(TheoremId::AdjointNef).echo("n", data.n).echo("d", data.d).echo("q", q);
    if let Some(b) = data.b_top {
        report = report.echo("B^n", b);
    }
    let ell = if data.n == 2 {
        match data.b_top {
            Some(b2) if b2 >= 2 => (d + 2).max(2 + (2 * q + 1).div_euclid(b2)),
            Some(b2) => {
                report = report.note(format!("B^2 = {b2} < 2; using the bound without B^2"));
                (d + 2).max(q + 2)
            }
            None => (d + 2).max(q + 2),
        }
    } else {
        (d + data.n).max(ell_floor(q, data.n)?)
    };
    Ok(report.with(Outcome::MinimalEll(ell)))
}

/// Enriques (or K3) surface. With `b2 = Some((B²))`, `B` is ample and base
/// point free; with `None`, only ample.
pub fn enriques_bound(q: i64, b2: Option<i64>) -> Result<BoundReport> {
    surface_bound(TheoremId::Enriques, q, b2, 6)
}

/// Abelian or bielliptic surface, conventions as [`enriques_bound`].
pub fn abelian_bound(q: i64, b2: Option<i64>) -> Result<BoundReport> {
    surface_bound(TheoremId::Abelian, q, b2, 5)
}

fn surface_bound(theorem: TheoremId, q: i64, b2: Option<i64>, floor: i64) -> Result<BoundReport> {
    if q < 2 {
        return Err(SyzygyError::HypothesisViolation(format!("q = {q} is below 2")));
    }
    let report = BoundReport::new(theorem).echo("q", q);
    Ok(match b2 {
        Some(b2) => {
            let report = report.echo("B^2", b2);
            if b2 < floor {
                report.not_applicable(format!("needs B^2 >= {floor}"))
            } else {
                report.with(Outcome::MinimalEll(q - 1))
            }
        }
        None => report.echo("positivity", "ample").with(Outcome::MinimalEll(2 * q - 2)),
    })
}

/// Minimal `ℓ` with `K_X + ℓB` normally generated on a surface with nef `K_X`.
pub fn appendix_normal_generation(data: &NefData) -> Result<BoundReport> {
    data.check()?;
    let d = rational_ceil(data.d);
    let first = data.first_positive || (data.first_nonnegative && data.h0_lambda_at_least_4);
    let report = BoundReport::new(TheoremId::NormalGeneration)
        .echo("d", data.d)
        .echo("((2d-1)B-2K).Λ > 0", data.first_positive)
        .echo("((2d-1)B-2K).Λ >= 0", data.first_nonnegative)
        .echo("h0(Λ) >= 4", data.h0_lambda_at_least_4);
    Ok(if first {
        report.with(Outcome::MinimalEll(d + 1)).note("first clause")
    } else {
        report.with(Outcome::MinimalEll(d + 2)).note("second clause: (dB-K).Λ >= 0 holds since dB-K is nef")
    })
}
