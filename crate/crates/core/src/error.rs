// Copyright 2026 The whamp Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid dimension vector: {0}")]
    InvalidDims(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("dense dimension {dim} exceeds cap {cap}")]
    DenseCapExceeded { dim: usize, cap: usize },
    #[error("enumeration of {count} items exceeds cap {cap}")]
    EnumerationCapExceeded { count: u128, cap: u128 },
    #[error("sparse operator with {nnz} nonzeros exceeds cap {cap}")]
    SparseCapExceeded { nnz: usize, cap: usize },
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("{0} is prime; no nontrivial commuting partition")]
    PrimeDimension(usize),
    #[error("state is not positive semidefinite (min eigenvalue {0:e})")]
    NotPsd(f64),
    #[error("probabilities do not sum to one (sum = {0})")]
    NotNormalized(f64),
    #[error("unsupported state for this path: {0}")]
    UnsupportedState(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("support violation: q_j = 0 where p_j > 0 at index {0}")]
    SupportViolation(usize),
    #[error("dimension pattern is not square-free: {0:?}")]
    NotSquareFree(Vec<usize>),
    #[error("bound is void: {0}")]
    VoidBound(String),
    #[error("power iteration did not converge after {restarts} restarts")]
    NoConvergence { restarts: usize },
    #[error("no accepted sample size up to ceiling {0}")]
    NoAccept(usize),
    #[error("no grid point reached the target success probability")]
    NoGridPoint,
    #[error("mimicking-state loop reached T = {0} without a clean exit")]
    MimickingNotTerminated(usize),
    #[error("unknown gate `{0}`")]
    UnknownGate(String),
    #[error("malformed gate: {0}")]
    MalformedGate(String),
    #[error("circuit parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("config error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
