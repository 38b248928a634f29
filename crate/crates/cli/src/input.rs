//! Input-file handling: poset files, quiver files, and field arguments.
//!
//! Poset files use `elem <name>` / `<a> < <b>` lines. Quiver files start
//! with a `vertices <n>` line followed by `arrow <label> <source> <target>`
//! lines with 0-based vertex indices; `#` comments and blank lines are
//! allowed in both. The first non-comment token decides the format.

use trivext_core::algebra::{incidence_algebra, path_algebra, Arrow, BasedAlgebra, Quiver};
use trivext_core::field::FieldSpec;
use trivext_core::poset::{parse_poset, Poset};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Syntax { path: String, message: String },
    #[error("bad field argument {0:?}: expected q or a prime")]
    BadField(String),
    #[error("{0}")]
    Build(String),
}

/// A parsed input file: either a poset (incidence algebra) or an acyclic
/// quiver (path algebra).
pub enum LoadedInput {
    Poset(Poset),
    Quiver(Quiver),
}

impl LoadedInput {
    pub fn describe(&self) -> String {
        match self {
            LoadedInput::Poset(p) => format!("poset {} ({} elements)", p.name(), p.size()),
            LoadedInput::Quiver(q) => format!("quiver ({} vertices)", q.vertices),
        }
    }

    pub fn vertex_names(&self) -> Vec<String> {
        match self {
            LoadedInput::Poset(p) => {
                (0..p.size()).map(|v| p.element_name(v).to_string()).collect()
            }
            LoadedInput::Quiver(q) => (0..q.vertices).map(|v| format!("v{v}")).collect(),
        }
    }

    pub fn base_algebra_name(&self) -> String {
        match self {
            LoadedInput::Poset(p) => format!("k[{}]", p.name()),
            LoadedInput::Quiver(_) => "kQ".into(),
        }
    }

    pub fn algebra(&self, field: FieldSpec) -> Result<BasedAlgebra, InputError> {
        let built = match self {
            LoadedInput::Poset(p) => incidence_algebra(field, p),
            LoadedInput::Quiver(q) => path_algebra(field, q),
        };
        built.map_err(|e| InputError::Build(e.to_string()))
    }
}

pub fn load_input(path: &str) -> Result<LoadedInput, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.into(),
        source,
    })?;
    let first_token = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .and_then(|l| l.split_whitespace().next())
        .unwrap_or("");
    if first_token == "vertices" {
        parse_quiver(&text).map(LoadedInput::Quiver).map_err(|message| {
            InputError::Syntax {
                path: path.into(),
                message,
            }
        })
    } else {
        parse_poset(&text)
            .map(|p| LoadedInput::Poset(p.rename(stem(path))))
            .map_err(|e| InputError::Syntax {
                path: path.into(),
                message: e.to_string(),
            })
    }
}

fn stem(path: &str) -> String {
    std::path::Path::new(path)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.into())
}

fn parse_quiver(text: &str) -> Result<Quiver, String> {
    let mut vertices: Option<usize> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let head = parts.next().unwrap();
        match head {
            "vertices" => {
                let n: usize = parts
                    .next()
                    .ok_or_else(|| format!("line {}: vertices needs a count", lineno + 1))?
                    .parse()
                    .map_err(|_| format!("line {}: bad vertex count", lineno + 1))?;
                if vertices.replace(n).is_some() {
                    return Err(format!("line {}: repeated vertices line", lineno + 1));
                }
            }
            "arrow" => {
                let n = vertices
                    .ok_or_else(|| format!("line {}: arrow before vertices", lineno + 1))?;
                let label = parts
                    .next()
                    .ok_or_else(|| format!("line {}: arrow needs label src tgt", lineno + 1))?;
                let src: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| format!("line {}: bad source index", lineno + 1))?;
                let tgt: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| format!("line {}: bad target index", lineno + 1))?;
                if src >= n || tgt >= n {
                    return Err(format!(
                        "line {}: vertex index out of range (have {n} vertices)",
                        lineno + 1
                    ));
                }
                arrows.push(Arrow {
                    source: src,
                    target: tgt,
                    label: label.into(),
                });
            }
            other => {
                return Err(format!("line {}: unknown directive {other:?}", lineno + 1));
            }
        }
    }
    let n = vertices.ok_or("missing vertices line")?;
    Quiver::new(n, arrows).map_err(|e| e.to_string())
}

/// `q` (or `Q`, `0`) for the rationals, otherwise a prime for GF(p).
pub fn parse_field(arg: &str) -> Result<FieldSpec, InputError> {
    match arg {
        "q" | "Q" | "0" => Ok(FieldSpec::Rationals),
        other => other
            .parse::<u64>()
            .ok()
            .and_then(|p| FieldSpec::prime_field(p).ok())
            .ok_or_else(|| InputError::BadField(arg.into())),
    }
}

/// Comma-separated list for `--fields`, e.g. `q,2,3`.
pub fn parse_field_list(arg: &str) -> Result<Vec<FieldSpec>, InputError> {
    arg.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_field)
        .collect()
}
