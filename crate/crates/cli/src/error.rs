use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {msg}")]
    Syntax { line: usize, column: usize, msg: String },
    #[error("{path}: {msg}")]
    Field { path: String, msg: String },
    #[error("{}: {inner}", file.display())]
    InFile {
        file: PathBuf,
        #[source]
        inner: Box<CliError>,
    },
    #[error(transparent)]
    Core(#[from] qmst::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn syntax(e: serde_json::Error) -> Self {
        CliError::Syntax {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        }
    }

    pub fn in_file(self, file: &Path) -> Self {
        CliError::InFile {
            file: file.to_path_buf(),
            inner: Box::new(self),
        }
    }

    /// Stable machine-readable category.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Syntax { .. } => "parse",
            CliError::Field { .. } => "validation",
            CliError::InFile { inner, .. } => inner.kind(),
            CliError::Core(qmst::Error::TooManyTrees { .. } | qmst::Error::TooLarge { .. }) => "limit",
            CliError::Core(_) => "invalid-input",
            CliError::Usage(_) => "usage",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = json!({"kind": self.kind(), "message": self.to_string()});
        let mut cur = self;
        while let CliError::InFile { file, inner } = cur {
            obj["file"] = Value::String(file.display().to_string());
            cur = inner;
        }
        match cur {
            CliError::Field { path, .. } => obj["field"] = Value::String(path.clone()),
            CliError::Syntax { line, column, .. } => {
                obj["line"] = json!(line);
                obj["column"] = json!(column);
            }
            _ => {}
        }
        json!({ "error": obj })
    }
}
