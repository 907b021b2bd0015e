//! Closed-form bounds and criteria for `(M_q)`, and a verifier that checks
//! them against computed tables.
//!
//! Every bound is a sufficient condition unless it is stated as an
//! equivalence. Rational inputs are exact.

mod bounds;
mod gonality;
mod kodaira;
mod verify;

use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SyzygyError};

pub use bounds::{
    abelian_bound, appendix_normal_generation, enriques_bound, predict_adjoint_nef, predict_m2_surface,
    predict_multiple, NefData,
};
pub use gonality::{conjecture_delta, gon_max, gon_max_note, ConjecturePrediction};
pub use kodaira::{
    butler_adjoint, butler_multiple, fano_criterion, rational_criterion, ruled_mq_bound, FanoData, RationalFlags,
    RuledData,
};
pub use verify::{verify_instances, Claim, ClaimOutcome};

/// `⌈(q+1)/(n-1)⌉`.
pub fn ell_ceil(q: i64, n: i64) -> Result<i64> {
    if n <= 1 {
        return Err(SyzygyError::DimensionTooSmall(n));
    }
    Ok(div_ceil(q + 1, n - 1))
}

/// `⌊(q+1)/(n-1)⌋`.
pub fn ell_floor(q: i64, n: i64) -> Result<i64> {
    if n <= 1 {
        return Err(SyzygyError::DimensionTooSmall(n));
    }
    Ok((q + 1).div_euclid(n - 1))
}

/// Ceiling division for a positive divisor.
pub(crate) fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}

pub(crate) fn rational_ceil(x: Rational64) -> i64 {
    x.ceil().to_integer()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    MultipleBundle,
    M2Surface,
    AdjointNef,
    Enriques,
    Abelian,
    RationalSurface,
    Fano,
    Ruled,
    ButlerMultiple,
    ButlerAdjoint,
    NormalGeneration,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::MultipleBundle,
        TheoremId::M2Surface,
        TheoremId::AdjointNef,
        TheoremId::Enriques,
        TheoremId::Abelian,
        TheoremId::RationalSurface,
        TheoremId::Fano,
        TheoremId::Ruled,
        TheoremId::ButlerMultiple,
        TheoremId::ButlerAdjoint,
        TheoremId::NormalGeneration,
    ];

    /// Identifier accepted on the command line.
    pub fn key(&self) -> &'static str {
        match self {
            TheoremId::MultipleBundle => "cm",
            TheoremId::M2Surface => "m2-surface",
            TheoremId::AdjointNef => "adjoint-nef",
            TheoremId::Enriques => "enriques",
            TheoremId::Abelian => "abelian",
            TheoremId::RationalSurface => "rational",
            TheoremId::Fano => "fano",
            TheoremId::Ruled => "ruled",
            TheoremId::ButlerMultiple => "butler-multiple",
            TheoremId::ButlerAdjoint => "butler-adjoint",
            TheoremId::NormalGeneration => "normal-generation",
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            TheoremId::MultipleBundle => "multiples of an ample bpf bundle",
            TheoremId::M2Surface => "(M_2) for multiples on surfaces",
            TheoremId::AdjointNef => "adjoint bundles with nef canonical class",
            TheoremId::Enriques => "Enriques and K3 surfaces",
            TheoremId::Abelian => "abelian and bielliptic surfaces",
            TheoremId::RationalSurface => "rational surfaces, gonality criterion",
            TheoremId::Fano => "Fano varieties of index at least n-1",
            TheoremId::Ruled => "ruled varieties over a curve",
            TheoremId::ButlerMultiple => "ruled varieties, sums of ample bundles",
            TheoremId::ButlerAdjoint => "ruled varieties, adjoint sums of ample bundles",
            TheoremId::NormalGeneration => "normal generation with nef canonical class",
        }
    }

    pub fn from_key(key: &str) -> Option<TheoremId> {
        TheoremId::ALL.into_iter().find(|t| t.key() == key)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// What a bound guarantees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    /// `(M_q)` (or normal generation) holds for every `ℓ` at least this.
    MinimalEll(i64),
    /// Separate thresholds for `(m_q)` and `(M_q)`.
    Thresholds {
        m_q: i64,
        big_m_q: i64,
    },
    Verdict {
        holds: bool,
        clause: String,
    },
}

/// Result of evaluating one theorem on user-supplied data.
///
/// `applicable == false` implies `outcome == None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub hypotheses: Vec<(String, String)>,
    pub applicable: bool,
    pub outcome: Option<Outcome>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub(crate) fn new(theorem: TheoremId) -> Self {
        BoundReport { theorem, hypotheses: Vec::new(), applicable: true, outcome: None, notes: Vec::new() }
    }

    pub(crate) fn echo(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.hypotheses.push((name.to_string(), value.to_string()));
        self
    }

    pub(crate) fn not_applicable(mut self, why: impl Into<String>) -> Self {
        self.applicable = false;
        self.outcome = None;
        self.notes.push(why.into());
        self
    }

    pub(crate) fn with(mut self, outcome: Outcome) -> Self {
        self.outcome = Some(outcome);
        self
    }

    pub(crate) fn verdict(self, holds: bool, clause: impl Into<String>) -> Self {
        self.with(Outcome::Verdict { holds, clause: clause.into() })
    }

    pub(crate) fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    /// Minimal `ℓ` for `(M_q)`, if the report carries one.
    pub fn min_ell(&self) -> Option<i64> {
        match self.outcome {
            Some(Outcome::MinimalEll(l)) => Some(l),
            Some(Outcome::Thresholds { big_m_q, .. }) => Some(big_m_q),
            _ => None,
        }
    }

    pub fn holds(&self) -> Option<bool> {
        match &self.outcome {
            Some(Outcome::Verdict { holds, .. }) => Some(*holds),
            _ => None,
        }
    }

    pub fn clause(&self) -> Option<&str> {
        match &self.outcome {
            Some(Outcome::Verdict { clause, .. }) => Some(clause),
            _ => None,
        }
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem: {} ({})", self.theorem.key(), self.theorem.label())?;
        for (k, v) in &self.hypotheses {
            writeln!(f, "  {k} = {v}")?;
        }
        match &self.outcome {
            None => writeln!(f, "result: not applicable")?,
            Some(Outcome::MinimalEll(l)) => writeln!(f, "result: ℓ ≥ {l}")?,
            Some(Outcome::Thresholds { m_q, big_m_q }) => {
                writeln!(f, "result: (m_q) for ℓ ≥ {m_q}; (M_q) for ℓ ≥ {big_m_q}")?
            }
            Some(Outcome::Verdict { holds, clause }) => {
                writeln!(f, "result: {} [{clause}]", if *holds { "satisfied" } else { "not guaranteed" })?
            }
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ell_examples() {
        assert_eq!(ell_ceil(2, 2).unwrap(), 3);
        assert_eq!(ell_ceil(5, 3).unwrap(), 3);
        assert_eq!(ell_floor(5, 3).unwrap(), 3);
        assert_eq!(ell_ceil(4, 4).unwrap(), 2);
        assert_eq!(ell_floor(4, 4).unwrap(), 1);
        assert_eq!(ell_ceil(3, 1), Err(SyzygyError::DimensionTooSmall(1)));
        assert_eq!(ell_floor(3, 0), Err(SyzygyError::DimensionTooSmall(0)));
    }

    #[test]
    fn theorem_keys_roundtrip() {
        for t in TheoremId::ALL {
            assert_eq!(TheoremId::from_key(t.key()), Some(t));
        }
        assert_eq!(TheoremId::from_key("nope"), None);
    }

    #[test]
    fn not_applicable_has_no_outcome() {
        let r = BoundReport::new(TheoremId::Fano).verdict(true, "x").not_applicable("because");
        assert!(!r.applicable);
        assert_eq!(r.outcome, None);
    }

    proptest! {
        #[test]
        fn ceil_floor_gap(q in 1i64..200, n in 2i64..=10) {
            let gap = ell_ceil(q, n).unwrap() - ell_floor(q, n).unwrap();
            prop_assert!(gap == 0 || gap == 1);
            // brute-force ceiling
            let c = (1..).find(|k| k * (n - 1) > q).unwrap();
            prop_assert_eq!(ell_ceil(q, n).unwrap(), c);
        }
    }
}
