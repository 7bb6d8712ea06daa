use std::path::PathBuf;

/// Crate-wide error type. Every variant maps to one stable category string
/// so batch tooling can match on the first token of a failure line.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("format: {0}")]
    Format(String),
    #[error("data: {0}")]
    Data(String),
    #[error("resample: {0}")]
    Resample(String),
    #[error("empty-dataset: {0}")]
    EmptyDataset(String),
    #[error("coord: {0}")]
    Coord(String),
    #[error("degenerate-graph: {0}")]
    DegenerateGraph(String),
    #[error("window: {0}")]
    Window(String),
    #[error("shape: {0}")]
    Shape(String),
    #[error("attention-mask: {0}")]
    AttentionMask(String),
    #[error("config: {0}")]
    Config(String),
    #[error("revin: {0}")]
    Revin(String),
    #[error("split: {0}")]
    Split(String),
    #[error("divergence: non-finite loss at step {step}")]
    Divergence { step: usize },
    #[error("eval: {0}")]
    Eval(String),
    #[error("impute: fully missing node/channel slices: {0:?}")]
    Impute(Vec<(usize, usize)>),
    #[error("io: {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Stable machine-parsable category, used as the first token of CLI
    /// failure lines.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Format(_) => "format",
            Error::Data(_) => "data",
            Error::Resample(_) => "resample",
            Error::EmptyDataset(_) => "empty-dataset",
            Error::Coord(_) => "coord",
            Error::DegenerateGraph(_) => "degenerate-graph",
            Error::Window(_) => "window",
            Error::Shape(_) => "shape",
            Error::AttentionMask(_) => "attention-mask",
            Error::Config(_) => "config",
            Error::Revin(_) => "revin",
            Error::Split(_) => "split",
            Error::Divergence { .. } => "divergence",
            Error::Eval(_) => "eval",
            Error::Impute(_) => "impute",
            Error::Io { .. } => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn io_err(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> Error {
    let path = path.into();
    move |source| Error::Io { path, source }
}
