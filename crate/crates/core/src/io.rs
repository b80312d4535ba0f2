//! JSON file formats.
//!
//! * group: `{"order": n, "table": [[…]…], "names": […]}`
//! * extension: `{"N": g, "E": g, "G": g, "j": […], "p": […]}` where each
//!   group is inline, a path relative to the file, or a catalogue name
//! * coefficients: `{"cyclic_orders": […], "action": [matrix, …]}`, or an
//!   abelian group file (trivial action)
//! * space: `{"points": n, "opens": [[…]…]}`
//! * cover: `{"sets": [[…]…], "leq": [[i, j]…]}`
//! * pair: `{"G": g, "N": g, "L": [[…]…], "f": [[…]…]}`

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohomology::{abelian_type, CoefficientModule, CohomologyError};
use crate::extension::{build_extension, ExtensionError, FactorSet, GroupExtension, QuasiAction};
use crate::group::{FiniteGroup, GroupError, GroupRef};
use crate::smallgroups;
use crate::topology::{Cover, FiniteSpace, TopologyError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: PathBuf, line: usize, column: usize, message: String },
    #[error("{0:?} is neither a file nor a known group name")]
    UnknownGroup(String),
    #[error("{path}: {source}")]
    Group { path: PathBuf, source: GroupError },
    #[error("{path}: {source}")]
    Extension { path: PathBuf, source: ExtensionError },
    #[error("{path}: {source}")]
    Coefficients { path: PathBuf, source: CohomologyError },
    #[error("{path}: {source}")]
    Topology { path: PathBuf, source: TopologyError },
    #[error("{path}: coefficient group is not abelian")]
    NotAbelian { path: PathBuf },
    #[error("{path}: declared order {declared} but the table has {rows} rows")]
    OrderMismatch { path: PathBuf, declared: usize, rows: usize },
}

impl IoError {
    /// True for well-formed input that fails a mathematical check.
    pub fn is_validation(&self) -> bool {
        !matches!(self, IoError::Read { .. } | IoError::Parse { .. })
    }
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_path_buf(), source })
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl GroupFile {
    pub fn validate(self, path: &Path) -> Result<FiniteGroup, IoError> {
        if self.order != self.table.len() {
            return Err(IoError::OrderMismatch {
                path: path.to_path_buf(),
                declared: self.order,
                rows: self.table.len(),
            });
        }
        FiniteGroup::from_table(&self.table, self.names)
            .map_err(|source| IoError::Group { path: path.to_path_buf(), source })
    }
}

impl From<&FiniteGroup> for GroupFile {
    fn from(g: &FiniteGroup) -> Self {
        GroupFile { order: g.order(), table: g.rows(), names: g.names().map(<[String]>::to_vec) }
    }
}

/// A group given inline or by reference.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Inline(GroupFile),
    Reference(String),
}

impl GroupSpec {
    fn resolve(self, base: &Path) -> Result<GroupRef, IoError> {
        match self {
            GroupSpec::Inline(file) => Ok(Arc::new(file.validate(base)?)),
            GroupSpec::Reference(name) => {
                let dir = base.parent().unwrap_or(Path::new("."));
                let candidate = dir.join(&name);
                if candidate.is_file() {
                    load_group(&candidate)
                } else {
                    named_group(&name).ok_or(IoError::UnknownGroup(name))
                }
            }
        }
    }
}

/// Catalogue names (`Z4`, `S3`, `D4`, …), `K4`/`V4` for the Klein group,
/// plus `Zn` for any `n` and `Sn` up to `S6`.
pub fn named_group(name: &str) -> Option<GroupRef> {
    let name = match name {
        "K4" | "V4" => "Z2xZ2",
        other => other,
    };
    if let Some(g) = smallgroups::by_name(name) {
        return Some(Arc::new(g.clone()));
    }
    let (head, tail) = name.split_at(1.min(name.len()));
    let n: usize = tail.parse().ok().filter(|&n| n > 0)?;
    match head {
        "Z" => Some(Arc::new(FiniteGroup::cyclic(n))),
        "S" if n <= 6 => Some(Arc::new(FiniteGroup::symmetric(n))),
        _ => None,
    }
}

pub fn load_group(path: &Path) -> Result<GroupRef, IoError> {
    let file: GroupFile = parse(path, &read(path)?)?;
    Ok(Arc::new(file.validate(path)?))
}

/// A group file path, or failing that a group name.
pub fn resolve_group(arg: &str) -> Result<GroupRef, IoError> {
    let path = Path::new(arg);
    if path.is_file() {
        load_group(path)
    } else {
        named_group(arg).ok_or_else(|| IoError::UnknownGroup(arg.to_string()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExtensionFile {
    #[serde(rename = "N")]
    pub n: GroupSpec,
    #[serde(rename = "E")]
    pub e: GroupSpec,
    #[serde(rename = "G")]
    pub g: GroupSpec,
    pub j: Vec<usize>,
    pub p: Vec<usize>,
}

pub fn load_extension(path: &Path) -> Result<GroupExtension, IoError> {
    let file: ExtensionFile = parse(path, &read(path)?)?;
    let (n, e, g) = (file.n.resolve(path)?, file.e.resolve(path)?, file.g.resolve(path)?);
    build_extension(n, e, g, file.j, file.p)
        .map_err(|source| IoError::Extension { path: path.to_path_buf(), source })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoefficientFile {
    pub cyclic_orders: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<i64>>>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum CoefficientInput {
    Module(CoefficientFile),
    Group(GroupFile),
}

/// Coefficients for cohomology of `g`. A group file is read as its
/// invariant-factor decomposition with trivial action; a bare group name
/// is accepted too.
pub fn load_coefficients(arg: &str, g: &GroupRef) -> Result<CoefficientModule, IoError> {
    let path = Path::new(arg);
    let (orders, action) = if path.is_file() {
        match parse::<CoefficientInput>(path, &read(path)?)? {
            CoefficientInput::Module(file) => (file.cyclic_orders, file.action),
            CoefficientInput::Group(file) => {
                let a = file.validate(path)?;
                (abelian_type(&a).ok_or(IoError::NotAbelian { path: path.to_path_buf() })?, None)
            }
        }
    } else {
        let a = named_group(arg).ok_or_else(|| IoError::UnknownGroup(arg.to_string()))?;
        (abelian_type(&a).ok_or(IoError::NotAbelian { path: path.to_path_buf() })?, None)
    };
    CoefficientModule::new(g.clone(), orders, action)
        .map_err(|source| IoError::Coefficients { path: path.to_path_buf(), source })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceFile {
    pub points: usize,
    pub opens: Vec<Vec<usize>>,
}

pub fn load_space(path: &Path) -> Result<FiniteSpace, IoError> {
    let file: SpaceFile = parse(path, &read(path)?)?;
    FiniteSpace::new(file.points, file.opens)
        .map_err(|source| IoError::Topology { path: path.to_path_buf(), source })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoverFile {
    pub sets: Vec<Vec<usize>>,
    /// Pairs `[i, j]` with `i ≤ j`; reflexive pairs may be omitted. Defaults
    /// to inclusion.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<[usize; 2]>>,
}

pub fn load_cover(path: &Path, space: &FiniteSpace) -> Result<Cover, IoError> {
    let file: CoverFile = parse(path, &read(path)?)?;
    let err = |source| IoError::Topology { path: path.to_path_buf(), source };
    let sets = file
        .sets
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if s.iter().any(|&p| p >= space.point_count()) {
                return Err(TopologyError::NotOpen(i));
            }
            space.open_index(crate::topology::bits_of(s)).ok_or(TopologyError::NotOpen(i))
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let k = sets.len();
    let leq = match file.leq {
        None => None,
        Some(pairs) => {
            let mut leq: Vec<Vec<bool>> = (0..k).map(|i| (0..k).map(|j| i == j).collect()).collect();
            for [i, j] in pairs {
                if i >= k || j >= k {
                    return Err(err(TopologyError::BadOrder("out of range")));
                }
                leq[i][j] = true;
            }
            Some(leq)
        }
    };
    Cover::new(space, sets, leq, false).map_err(err)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairFile {
    #[serde(rename = "G")]
    pub g: GroupSpec,
    #[serde(rename = "N")]
    pub n: GroupSpec,
    #[serde(rename = "L")]
    pub l: Vec<Vec<usize>>,
    pub f: Vec<Vec<usize>>,
}

/// `(L, f)` data; shapes, normalization and automorphism checks applied,
/// the cocycle law is not.
pub fn load_pair(path: &Path) -> Result<(QuasiAction, FactorSet), IoError> {
    let file: PairFile = parse(path, &read(path)?)?;
    let (g, n) = (file.g.resolve(path)?, file.n.resolve(path)?);
    let err = |source| IoError::Extension { path: path.to_path_buf(), source };
    let l = QuasiAction::new(g.clone(), n.clone(), file.l).map_err(err)?;
    let k = g.order();
    if file.f.len() != k || file.f.iter().any(|row| row.len() != k) {
        return Err(err(ExtensionError::ShapeMismatch));
    }
    let f = FactorSet::new(g, n, file.f.concat()).map_err(err)?;
    Ok((l, f))
}

/// Pair JSON with inline groups.
pub fn pair_to_json(l: &QuasiAction, f: &FactorSet) -> serde_json::Value {
    serde_json::json!({
        "G": GroupFile::from(&**l.g()),
        "N": GroupFile::from(&**l.n()),
        "L": l.maps(),
        "f": f.rows(),
    })
}
