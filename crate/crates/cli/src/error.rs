//! One error type spanning file ingestion and the domain errors bubbling up
//! from the kernels, each with a stable machine-readable kind for reports.

use std::path::PathBuf;

use thiserror::Error;

use covercount::cd4::ArcError;
use covercount::covers::CoversError;
use covercount::diagram::DiagramError;
use covercount::roots::RootSystemError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{location}: {message}")]
    Parse { location: String, message: String },
    #[error("{location}: {message}")]
    Schema { location: String, message: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Root(#[from] RootSystemError),
    #[error(transparent)]
    Covers(#[from] CoversError),
    #[error(transparent)]
    Arc(#[from] ArcError),
    #[error("instanton numbers are not all integral; non-integral degrees: {degrees:?}")]
    NonIntegral { degrees: Vec<u64> },
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "Io",
            CliError::Parse { .. } => "ParseError",
            CliError::Schema { .. } => "SchemaError",
            CliError::Diagram(e) => match e {
                DiagramError::UnknownKind(_) => "UnknownKind",
                DiagramError::MarkedOutOfRange { .. } => "MarkedOutOfRange",
                DiagramError::EmptyMarked => "EmptyMarked",
            },
            CliError::Root(e) => match e {
                RootSystemError::IndexOutOfRange { .. } => "IndexOutOfRange",
                RootSystemError::NotAContractionCase { .. } => "NotAContractionCase",
                RootSystemError::OrderOutOfRange { .. } => "OutOfRange",
                RootSystemError::IrreducibilityViolation { .. } => "IrreducibilityViolation",
            },
            CliError::Covers(e) => match e {
                CoversError::MissingDegree(_) => "MissingDegree",
                CoversError::TooManyMultiplicities(_)
                | CoversError::EmptyMultiplicities
                | CoversError::DegreeZero => "SchemaError",
            },
            CliError::Arc(e) => match e {
                ArcError::Series(_) => "TruncationExceeded",
                ArcError::MixedTruncation | ArcError::NonzeroConstantTerm { .. } => "SchemaError",
                ArcError::NotSmooth => "NotSmooth",
                ArcError::IdentityMismatch => "IdentityMismatch",
            },
            CliError::NonIntegral { .. } => "NonIntegral",
        }
    }
}
