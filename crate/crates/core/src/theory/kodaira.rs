//! Criteria on varieties of Kodaira dimension `-∞`.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::{ell_ceil, BoundReport, TheoremId};
use crate::combinatorics::binomial;
use crate::error::{Result, SyzygyError};

/// Exceptional conditions of the boundary cases, asserted by the caller.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFlags {
    /// `-K_X|_C` embeds `C` as a plane curve of degree `q + 1`.
    pub plane_curve: bool,
    /// `-K_X|_C` is a `g^1_q` on `C`.
    pub pencil: bool,
}

/// `(M_q)` for an ample bpf `L` on a rational surface, from `(-K_X·L)` and
/// `gon_max(L)`. Cases `(-K_X·L) >= q+2`, `= q+1`, `= q` are equivalences.
pub fn rational_criterion(kdotl: i64, q: i64, gon_max: i64, flags: RationalFlags) -> BoundReport {
    let report = BoundReport::new(TheoremId::RationalSurface)
        .echo("-K.L", kdotl)
        .echo("q", q)
        .echo("gon_max", gon_max)
        .echo("plane_curve", flags.plane_curve)
        .echo("pencil", flags.pencil);
    if q < 2 {
        return report.not_applicable("needs q >= 2");
    }
    if kdotl >= q + 2 {
        let report = report.verdict(q <= gon_max, "-K.L >= q+2: (M_q) iff q <= gon_max");
        let k = q - 2;
        return report.note(format!(
            "on a del Pezzo surface with -K.L >= {}: (M_{q}) iff K+L birationally {k}-very ample iff K+L birationally {k}-spanned iff gon(C) >= {q} for smooth C in |L|",
            k + 4
        ));
    }
    if kdotl == q + 1 {
        return if q >= gon_max {
            report.verdict(false, "-K.L = q+1 and q >= gon_max")
        } else if flags.plane_curve {
            report.verdict(false, "-K.L = q+1 and C is a plane curve of degree q+1 via -K")
        } else {
            report.verdict(true, "-K.L = q+1, q < gon_max, no plane-curve embedding asserted")
        };
    }
    if kdotl == q {
        if q < 3 {
            return report.not_applicable("-K.L = q needs q >= 3");
        }
        return if q >= gon_max {
            report.verdict(false, "-K.L = q and q >= gon_max")
        } else if flags.pencil {
            report.verdict(false, "-K.L = q and -K restricts to a g^1_q")
        } else {
            report.verdict(true, "-K.L = q, q < gon_max, no g^1_q asserted")
        };
    }
    report.not_applicable("-K.L < q")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoData {
    pub n: i64,
    pub lambda: i64,
    /// `(B^n)`.
    pub bn: i64,
    pub gon_max: i64,
}

/// `(M_q)` for `B` with `-K_X = λB`.
pub fn fano_criterion(data: &FanoData, q: i64) -> Result<BoundReport> {
    let FanoData { n, lambda, bn, gon_max } = *data;
    if n < 3 {
        return Err(SyzygyError::HypothesisViolation(format!("n = {n} is below 3")));
    }
    if lambda < n - 1 {
        return Err(SyzygyError::HypothesisViolation(format!("index {lambda} is below n-1 = {}", n - 1)));
    }
    let report = BoundReport::new(TheoremId::Fano)
        .echo("n", n)
        .echo("lambda", lambda)
        .echo("B^n", bn)
        .echo("gon_max", gon_max)
        .echo("q", q);
    if q > (n - 2) + gon_max {
        return Ok(report.verdict(false, format!("q > (n-2)+gon_max = {}", n - 2 + gon_max)));
    }
    let ratio = Rational64::new(q - n + 4, lambda - n + 2);
    let needed = ratio.max(Rational64::from_integer(3));
    let holds = Rational64::from_integer(bn) >= needed;
    Ok(report.verdict(holds, format!("B^n >= max(3, {ratio}) = {needed}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuledData {
    pub n: i64,
    pub g: i64,
    pub e: i64,
    pub mu_minus: Rational64,
    pub a: i64,
    pub b: i64,
}

impl RuledData {
    /// `k_L = C(n+a-1, a) - 1`.
    pub fn k_l(&self) -> i64 {
        if self.a < 0 {
            return -1;
        }
        binomial((self.n + self.a - 1) as u64, self.a as u64) as i64 - 1
    }
}

/// `(M_q)` for `L ≡ aC_0 + bf` on `P(E) -> C`.
pub fn ruled_mq_bound(data: &RuledData, q: i64) -> Result<BoundReport> {
    if data.n < 2 {
        return Err(SyzygyError::DimensionTooSmall(data.n));
    }
    if data.g < 0 {
        return Err(SyzygyError::HypothesisViolation(format!("genus {} is negative", data.g)));
    }
    let k_l = data.k_l();
    let report = BoundReport::new(TheoremId::Ruled)
        .echo("n", data.n)
        .echo("g", data.g)
        .echo("e", data.e)
        .echo("mu_minus", data.mu_minus)
        .echo("a", data.a)
        .echo("b", data.b)
        .echo("k_L", k_l)
        .echo("q", q);
    if q < data.n || q > data.n + k_l - 1 {
        return Ok(report.not_applicable(format!("q outside [n, n+k_L-1] = [{}, {}]", data.n, data.n + k_l - 1)));
    }
    let ell = Rational64::from_integer(ell_ceil(q, data.n)?);
    let x = Rational64::from_integer(data.b) + Rational64::from_integer(data.a) * data.mu_minus;
    let g = Rational64::from_integer(data.g);
    let one = Rational64::from_integer(1);
    let checks = [
        (x >= Rational64::from_integer(2) * g + one, format!("b+a*mu = {x} >= 2g+1")),
        (Rational64::from_integer(data.a) >= ell, format!("a >= ell_ceil = {ell}")),
        (x + one - g >= ell, format!("b+a*mu+(1-g) = {} >= ell_ceil = {ell}", x + one - g)),
    ];
    match checks.iter().find(|(ok, _)| !ok) {
        Some((_, what)) => Ok(report.verdict(false, format!("fails: {what}"))),
        None => Ok(report.verdict(true, "all three conditions hold")),
    }
}

fn butler_cap(n: i64, a: i64) -> i64 {
    n + binomial((n + a - 1).max(0) as u64, a.max(0) as u64) as i64 - 2
}

/// `(M_q)` for `A_1 + ... + A_t`, ample `A_i`. `a` is the `C_0`-coefficient
/// of the sum (at least `t`; defaults to `t`).
pub fn butler_multiple(t: i64, n: i64, q: i64, a: Option<i64>) -> Result<BoundReport> {
    if t < 1 {
        return Err(SyzygyError::HypothesisViolation(format!("t = {t} is below 1")));
    }
    let a = a.unwrap_or(t);
    let cap = butler_cap(n, a);
    let report = BoundReport::new(TheoremId::ButlerMultiple).echo("t", t).echo("n", n).echo("q", q).echo("a", a);
    if q > cap {
        return Ok(report.not_applicable(format!("q above the cap n+C(n+a-1,a)-2 = {cap}")));
    }
    let ell = ell_ceil(q, n)?;
    let uniform = t >= 2 * q + 2;
    let sharp = Rational64::new(t, n) >= Rational64::from_integer(ell);
    let clause = if uniform {
        format!("t >= 2q+2 = {}", 2 * q + 2)
    } else if sharp {
        format!("t/n >= ell_ceil = {ell}")
    } else {
        format!("t < 2q+2 and t/n < ell_ceil = {ell}")
    };
    Ok(report
        .verdict(uniform || sharp, clause)
        .note(format!("uniform form t >= {}: {uniform}", 2 * q + 2))
        .note(format!("sharp form t/n >= {ell}: {sharp}")))
}

/// `(M_q)` for `K_X + A_1 + ... + A_t`. `a` defaults to `t - n`.
pub fn butler_adjoint(t: i64, n: i64, q: i64, e: i64, g: i64, a: Option<i64>) -> Result<BoundReport> {
    if t < 1 {
        return Err(SyzygyError::HypothesisViolation(format!("t = {t} is below 1")));
    }
    let a = a.unwrap_or(t - n);
    let cap = butler_cap(n, a);
    let report = BoundReport::new(TheoremId::ButlerAdjoint)
        .echo("t", t)
        .echo("n", n)
        .echo("q", q)
        .echo("e", e)
        .echo("g", g)
        .echo("a", a);
    if q > cap {
        return Ok(report.not_applicable(format!("q above the cap n+C(n+a-1,a)-2 = {cap}")));
    }
    let ell = ell_ceil(q, n)?;
    let shift = 1.max(e + 1 - g);
    let uniform = t >= 2 * q + 1 + shift;
    let sharp = Rational64::new(t, n) >= Rational64::from_integer(ell + shift);
    let clause = if uniform {
        format!("t >= 2q+1+max(1,e+1-g) = {}", 2 * q + 1 + shift)
    } else if sharp {
        format!("t/n >= ell_ceil+max(1,e+1-g) = {}", ell + shift)
    } else {
        "neither form holds".to_string()
    };
    Ok(report
        .verdict(uniform || sharp, clause)
        .note(format!("uniform form t >= {}: {uniform}", 2 * q + 1 + shift))
        .note(format!("sharp form t/n >= {}: {sharp}", ell + shift)))
}
