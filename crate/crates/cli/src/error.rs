use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] sturmian_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error("render cap exceeded: {what} = {requested} > {limit}")]
    RenderCap {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
}

impl CliError {
    /// 3 for resource caps, 2 for everything caused by the input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_resource_cap() => 3,
            CliError::RenderCap { .. } => 3,
            _ => 2,
        }
    }
}
