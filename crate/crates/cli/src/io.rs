use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use homjordan::document::parse_algebra;
use homjordan::exactlin::parse_scalar;
use homjordan::{HomAlgebra, Subspace};
use serde_json::Value;
use thiserror::Error;

/// Failures that map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Algebra {
        path: PathBuf,
        #[source]
        source: homjordan::Error,
    },
    #[error(transparent)]
    Core(#[from] homjordan::Error),
    #[error("invalid ideal: {0}")]
    Ideal(String),
    #[error("{0}")]
    Usage(String),
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// One algebra from a file, or every `*.json` in a directory sorted by
/// file name.
pub fn load_inputs(path: Option<&Path>) -> Result<Vec<HomAlgebra>, CliError> {
    let path = path.ok_or_else(|| CliError::Usage("--input is required".into()))?;
    let files = if path.is_dir() {
        let mut files: Vec<PathBuf> = fs::read_dir(path)
            .map_err(io_err(path))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        files
    } else {
        vec![path.to_path_buf()]
    };
    files
        .iter()
        .map(|f| {
            let text = fs::read_to_string(f).map_err(io_err(f))?;
            parse_algebra(&text).map_err(|source| CliError::Algebra {
                path: f.clone(),
                source,
            })
        })
        .collect()
}

pub fn is_directory(path: Option<&Path>) -> bool {
    path.is_some_and(Path::is_dir)
}

/// Basis rows given inline as JSON or as a path to a JSON file. Entries are
/// `"p/q"` strings or integers.
pub fn parse_subspace(arg: &str, n: usize) -> Result<Subspace, CliError> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        let p = Path::new(arg);
        fs::read_to_string(p).map_err(io_err(p))?
    };
    let value: Value = serde_json::from_str(&text).map_err(|e| CliError::Ideal(e.to_string()))?;
    let rows = value
        .as_array()
        .ok_or_else(|| CliError::Ideal("expected a list of rows".into()))?;
    let mut vectors = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| CliError::Ideal("each row must be a list".into()))?;
        if row.len() != n {
            return Err(CliError::Ideal(format!(
                "row has length {}, expected {n}",
                row.len()
            )));
        }
        let parsed = row
            .iter()
            .map(|x| match x {
                Value::String(s) => parse_scalar(s).map_err(|e| CliError::Ideal(e.to_string())),
                Value::Number(num) if num.is_i64() => {
                    parse_scalar(&num.to_string()).map_err(|e| CliError::Ideal(e.to_string()))
                }
                other => Err(CliError::Ideal(format!("unsupported entry {other}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        vectors.push(parsed);
    }
    Ok(Subspace::span(n, vectors))
}

/// Writes `contents` to `path` through a sibling temporary file and a rename,
/// so readers never see a partial report.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let name = path
        .file_name()
        .ok_or_else(|| CliError::Usage(format!("{} is not a file path", path.display())))?;
    let tmp = dir.join(format!(".{}.tmp", name.to_string_lossy()));
    let mut f = fs::File::create(&tmp).map_err(io_err(&tmp))?;
    f.write_all(contents.as_bytes()).map_err(io_err(&tmp))?;
    f.sync_all().map_err(io_err(&tmp))?;
    fs::rename(&tmp, path).map_err(io_err(path))
}
