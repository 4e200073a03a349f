//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = 1")]
    PoleAtUnity,
    #[error("denominator divisible by the cyclotomic polynomial of level {level}")]
    NotInLocalRing { level: u32 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatumError {
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("invalid iroot datum: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("highest weight is not dominant")]
    NonDominant,
    #[error("vector leaves the explored window")]
    OutOfWindow,
    #[error("weight mismatch between words")]
    WeightMismatch,
    #[error("modules built from different data")]
    DatumMismatch,
    #[error("coordinate {index} not specializable: {source}")]
    Specialize {
        index: usize,
        #[source]
        source: RingError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("no exact matrix realization for datum `{0}`")]
    NoRealization(String),
    #[error("representative not of the admissible form: {0}")]
    BadRepresentative(String),
}
