use thiserror::Error;

use crate::weights::Window;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("ball positions {0:?} are not distinct")]
    RepeatedBall(Vec<i64>),
    #[error("rank must be positive")]
    ZeroRank,
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("expected j < i, got j = {j}, i = {i}")]
    BadRange { i: i64, j: i64 },
    #[error("negative coordinate in {0:?}")]
    NegativeCoordinate(Vec<i64>),
    #[error("search box [{lo}, {hi}] is not contained in window {window}")]
    WindowTooSmall { lo: i64, hi: i64, window: Window },
    #[error("expected {expected} family, got {found}")]
    FamilyMismatch { expected: &'static str, found: &'static str },
    #[error("invalid block label (p = {p}, n = {n})")]
    BadBlock { p: i64, n: usize },
    #[error("{0}")]
    Parse(String),
    #[error("contradiction: {0}")]
    Contradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
