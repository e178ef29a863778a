//! Hilbert functions of standard graded algebras: binomial expansions and
//! growth bounds, linear-form decompositions and socle tests, extremal
//! restrictions, lexsegment Betti numbers, a prime-field ideal engine, and a
//! replayable proof trace for Gorenstein h-vector elimination.

pub mod decomposition;
pub mod engine;
pub mod exec;
pub mod extremal;
pub mod lex;
pub mod macaulay;
pub mod prover;

pub use exec::Execution;
