//! Maximal gonality in a linear system and the predicted mixed-weight length.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SyzygyError};
use crate::variety::{canonical_class, h0, intersect, DivisorClass, SurfaceModel};

/// Maximal gonality of smooth curves in `|D|`.
///
/// `(P², dH) -> d-1`; `(F_e, aC_0+bf) -> a` for `e >= 1`; on `F_0` the two
/// rulings are symmetric and the value is `min(a, b)`.
pub fn gon_max(model: &SurfaceModel, class: &DivisorClass) -> Result<i64> {
    model.check(class)?;
    if h0(model, class) == 0 {
        return Err(SyzygyError::EmptySystem(class.to_string()));
    }
    match (*model, *class) {
        (SurfaceModel::ProjectiveSpace { n: 2 }, DivisorClass::Hyperplane(d)) => Ok(d - 1),
        (SurfaceModel::Hirzebruch { e: 0 }, DivisorClass::Ruled(a, b)) => Ok(a.min(b)),
        (SurfaceModel::Hirzebruch { .. }, DivisorClass::Ruled(a, _)) => Ok(a),
        _ => Err(SyzygyError::DimensionMismatch(model.to_string())),
    }
}

/// Set when the `F_0` convention departs from the value `a`.
pub fn gon_max_note(model: &SurfaceModel, class: &DivisorClass) -> Option<String> {
    match (*model, *class) {
        (SurfaceModel::Hirzebruch { e: 0 }, DivisorClass::Ruled(a, b)) if a > b => {
            Some(format!("gon_max on F_0 taken as min(a, b) = {b}, not a = {a}"))
        }
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjecturePrediction {
    /// `h⁰(K+L) - gon_max(L) + 1`.
    pub delta: i64,
    /// `(r-1) - gon_max - delta`, taking `q_max = gon_max`.
    pub p_max: i64,
    pub h0_adjoint: u64,
    pub gon_max: i64,
    /// `(-K·L) >= gon_max + 2`.
    pub hypothesis_holds: bool,
    /// On `F_0`: `(a'-1)(b'-2)` and `2a'+2b'-3` with `a' = min(a,b)`, `b' = max(a,b)`.
    pub f0_closed_form: Option<(i64, i64)>,
    pub notes: Vec<String>,
}

pub fn conjecture_delta(model: &SurfaceModel, class: &DivisorClass) -> Result<ConjecturePrediction> {
    if !model.is_surface() {
        return Err(SyzygyError::DimensionMismatch(model.to_string()));
    }
    let gon = gon_max(model, class)?;
    let k = canonical_class(model);
    let adjoint = class.add(&k).expect("same model");
    let h0_adjoint = h0(model, &adjoint);
    let delta = h0_adjoint as i64 - gon + 1;
    let r = h0(model, class) as i64 - 1;
    let minus_k_dot_l = -intersect(model, &k, class)?;
    let mut notes: Vec<String> = gon_max_note(model, class).into_iter().collect();
    let hypothesis_holds = minus_k_dot_l >= gon + 2;
    if !hypothesis_holds {
        notes.push(format!("-K.L = {minus_k_dot_l} < gon_max + 2 = {}", gon + 2));
    }
    let f0_closed_form = match (*model, *class) {
        (SurfaceModel::Hirzebruch { e: 0 }, DivisorClass::Ruled(a, b)) => {
            let (lo, hi) = (a.min(b), a.max(b));
            Some(((lo - 1) * (hi - 2), 2 * lo + 2 * hi - 3))
        }
        _ => None,
    };
    Ok(ConjecturePrediction {
        delta,
        p_max: r - 1 - gon - delta,
        h0_adjoint,
        gon_max: gon,
        hypothesis_holds,
        f0_closed_form,
        notes,
    })
}
