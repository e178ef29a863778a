//! Mechanized elimination of `(1,19,17,19,1)` as a Gorenstein sequence, with
//! a replayable trace, and a classifier for socle-degree-4 h-vectors driven
//! by a versioned fact base.
//!
//! Every machine-checked step of a trace is recomputed on replay. Cited steps
//! carry a bibliography key and are grouped, so the trust boundary of a trace
//! is the set of its cited groups.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomposition::DecompositionError;
use crate::engine::EngineError;
use crate::extremal::ExtremalError;
use crate::lex::LexError;
use crate::macaulay::MacaulayError;

pub mod bibliography;
pub mod classify;
pub mod nineteen;
pub mod render;
pub mod replay;
pub mod trace;

pub use bibliography::Bibliography;
pub use classify::{classify_socle4, extension_closure, ClassificationResult, FactBase, Provenance, SocleFour};
pub use nineteen::prove_not_gorenstein_19;
pub use replay::{replay, replay_json, replay_with, ReplayReport};
pub use trace::{ProofTrace, Rule, Status, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Gorenstein,
    NotGorenstein,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProverError {
    #[error("step {step} failed: {reason}")]
    StepFailed { step: String, reason: String },
    #[error("building step {step}: {reason}")]
    Construction { step: String, reason: String },
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("{owner} refers to unknown branch {branch}")]
    UnknownBranch { owner: String, branch: String },
    #[error("{owner} refers to unknown or out-of-scope step {step}")]
    UnknownStep { owner: String, step: String },
    #[error("split {0} has fewer than two branches")]
    DegenerateSplit(String),
    #[error("branch {0} is not closed")]
    BranchNotClosed(String),
    #[error("the recorded conclusion does not follow")]
    ConclusionMismatch,
    #[error("step {step} cites unknown key {key}")]
    UnknownCitation { step: String, key: String },
    #[error("re-serialized trace differs from the input")]
    NotByteIdentical,
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("unsupported fact base version {0}")]
    UnsupportedVersion(u32),
    #[error("fact base conflict at (1,{a},{b},{a},1): {gorenstein} says Gorenstein, {not} says not")]
    FactConflict {
        a: u64,
        b: u64,
        gorenstein: String,
        not: String,
    },
    #[error("fact {id}: {reason}")]
    InvalidFact { id: String, reason: String },
    #[error(transparent)]
    Macaulay(#[from] MacaulayError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

pub type Result<T> = std::result::Result<T, ProverError>;
