//! Verification of the counting statements, random instance synthesis and
//! structure recovery.

pub mod checks;
pub mod chordal;
pub mod ramsey;
pub mod random;
pub mod structure;
pub mod suite;
