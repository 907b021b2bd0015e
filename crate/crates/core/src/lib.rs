//! Graded Betti tables of ample line bundles on toric surfaces and projective
//! spaces, computed from Koszul cohomology over prime fields, together with
//! checkers for the properties `(N_p)`, `(M_q)`, `(m_q)` and calculators for
//! the classical bounds on them.

pub mod betti;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exactla;
pub mod koszul;
pub mod theory;
pub mod variety;

pub use error::{Result, SyzygyError};
