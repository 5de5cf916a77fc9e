//! File formats, reports and the command-line front end for
//! [`hypertile_core`].

pub use hypertile_core as core;

pub mod cli;
pub mod document;
pub mod report;
pub mod svg;

pub use cli::run_command;
pub use document::ProblemDocument;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Math(#[from] hypertile_core::Error),
    #[error("unsupported rank {0}: only planar tilings can be drawn")]
    UnsupportedRank(usize),
}
