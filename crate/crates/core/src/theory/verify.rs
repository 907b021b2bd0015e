//! Scores a computed table against every applicable theorem and conjecture.

use serde::{Deserialize, Serialize};

use super::{conjecture_delta, ell_ceil, gon_max, gon_max_note, predict_m2_surface, rational_criterion, RationalFlags};
use crate::betti::{profile, satisfies_Mq, satisfies_mq, table_height, BettiTable};
use crate::error::{Result, SyzygyError};
use crate::variety::{canonical_class, genus_in_system, h0, intersect, DivisorClass, SurfaceModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClaimOutcome {
    Pass,
    /// A theorem's guarantee contradicts the table.
    Violation,
    /// A conjectural prediction differs from the table.
    Mismatch,
    /// The prediction depends on conditions that cannot be computed here.
    Inconclusive,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub predicted: String,
    pub observed: String,
    pub outcome: ClaimOutcome,
}

impl Claim {
    fn new(
        id: impl Into<String>,
        predicted: impl Into<String>,
        observed: impl Into<String>,
        outcome: ClaimOutcome,
    ) -> Self {
        Claim { id: id.into(), predicted: predicted.into(), observed: observed.into(), outcome }
    }
}

fn holds(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

// Every surface model supported here (P², F_e) is rational.
fn is_rational_surface(model: &SurfaceModel) -> bool {
    model.is_surface()
}

/// Checks a certified table. Only [`ClaimOutcome::Violation`] indicates a
/// contradiction with a theorem.
pub fn verify_instances(table: &BettiTable, model: &SurfaceModel, class: &DivisorClass) -> Result<Vec<Claim>> {
    if !table.certified {
        return Err(SyzygyError::UncertifiedTable);
    }
    if table.model != *model || table.class != *class {
        return Err(SyzygyError::ModelMismatch { model: model.to_string(), class: class.to_string() });
    }
    let mut claims = Vec::new();
    let r = table.r as i64;
    let prof = profile(table)?;

    // K_{p,1}: (m_q) for q <= n - 1.
    for q in 1..model.dimension().min(table.r) {
        let ok = satisfies_mq(table, q);
        claims.push(Claim::new(
            format!("kp1/m_{q}"),
            "holds",
            holds(ok),
            if ok { ClaimOutcome::Pass } else { ClaimOutcome::Violation },
        ));
    }

    multiple_bundle_claims(table, model, class, &mut claims)?;

    if is_rational_surface(model) {
        let gon = gon_max(model, class)?;
        let kdotl = -intersect(model, &canonical_class(model), class)?;
        let genus = genus_in_system(model, class)?;
        for q in 2..r {
            let rep = rational_criterion(kdotl, q, gon, RationalFlags::default());
            let observed = satisfies_Mq(table, q as usize);
            let id = format!("rational/M_{q}");
            let Some(predicted) = rep.holds() else {
                claims.push(Claim::new(id, "n/a", holds(observed), ClaimOutcome::NotApplicable));
                continue;
            };
            let clause = rep.clause().unwrap_or_default().to_string();
            let outcome = if genus < 1 {
                ClaimOutcome::NotApplicable
            } else if predicted == observed {
                ClaimOutcome::Pass
            } else if predicted && kdotl < q + 2 {
                // boundary cases assume the exceptional conditions are absent
                ClaimOutcome::Inconclusive
            } else {
                ClaimOutcome::Violation
            };
            claims.push(Claim::new(id, format!("{} [{clause}]", holds(predicted)), holds(observed), outcome));
        }

        let conj = conjecture_delta(model, class)?;
        let outcome = if conj.delta == prof.delta { ClaimOutcome::Pass } else { ClaimOutcome::Mismatch };
        let mut predicted = format!("delta = {}", conj.delta);
        if !conj.hypothesis_holds {
            predicted.push_str(" (hypothesis -K.L >= gon_max+2 fails)");
        }
        if let Some(note) = gon_max_note(model, class) {
            predicted.push_str(&format!(" ({note})"));
        }
        claims.push(Claim::new("conjecture/delta", predicted, format!("delta = {}", prof.delta), outcome));
        if let Some((delta, p_max)) = conj.f0_closed_form {
            let ok = delta == prof.delta && p_max == prof.p_max as i64;
            claims.push(Claim::new(
                "conjecture/f0",
                format!("delta = {delta}, p_max = {p_max}"),
                format!("delta = {}, p_max = {}", prof.delta, prof.p_max),
                if ok { ClaimOutcome::Pass } else { ClaimOutcome::Mismatch },
            ));
        }
    }
    Ok(claims)
}

/// `L = ℓB` with `B` primitive: `(m_q)` for `ℓ >= ℓ^ceil_q` and `(M_q)` for
/// `ℓ >= max(ρ, ℓ^ceil_q)`, `ρ` the top row of the table of `B`. On surfaces
/// also the `(M_2)` criterion in terms of `(L·B)`.
fn multiple_bundle_claims(
    table: &BettiTable,
    model: &SurfaceModel,
    class: &DivisorClass,
    claims: &mut Vec<Claim>,
) -> Result<()> {
    let n = model.dimension() as i64;
    if n < 2 {
        return Ok(());
    }
    let (ell, base) = class.primitive_part();
    let rho = table_height(model, &base)? as i64;
    for q in 1..table.r {
        let lc = ell_ceil(q as i64, n)?;
        if ell >= lc {
            let ok = satisfies_mq(table, q);
            claims.push(Claim::new(
                format!("multiple/m_{q}"),
                format!("holds (ell = {ell} >= {lc})"),
                holds(ok),
                if ok { ClaimOutcome::Pass } else { ClaimOutcome::Violation },
            ));
        }
        let threshold = lc.max(rho);
        if ell >= threshold {
            let ok = satisfies_Mq(table, q);
            claims.push(Claim::new(
                format!("multiple/M_{q}"),
                format!("holds (ell = {ell} >= max(rho = {rho}, {lc}))"),
                holds(ok),
                if ok { ClaimOutcome::Pass } else { ClaimOutcome::Violation },
            ));
        }
    }
    if model.is_surface() && table.r >= 3 {
        let b2 = intersect(model, &base, &base)?;
        let lb = ell * b2;
        let h0b = h0(model, &base) as i64;
        let rep = predict_m2_surface(lb, b2, h0b);
        if rep.holds() == Some(true) && ell >= rho {
            let ok = satisfies_Mq(table, 2);
            claims.push(Claim::new(
                "m2-surface/M_2",
                format!("holds [{}]", rep.clause().unwrap_or_default()),
                holds(ok),
                if ok { ClaimOutcome::Pass } else { ClaimOutcome::Violation },
            ));
        }
    }
    Ok(())
}
