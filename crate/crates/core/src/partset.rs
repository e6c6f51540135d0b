//! Part sets: which positive integers are allowed as summands.
//!
//! A [`PartSet`] is immutable after construction and is consumed through
//! [`PartSet::parts_up_to`], which lists the members up to a bound in
//! ascending order. The string grammar accepted by [`PartSet::parse`] is
//! `naturals | primes | squares | odds | list:<c1>,<c2>,... | file:<path>`,
//! and [`PartSet::label`] renders the same grammar back, so labels survive a
//! parse/render round trip.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PartSetError {
    #[error("unknown part set `{0}` (expected naturals, primes, squares, odds, list:c1,c2,..., or file:path)")]
    UnknownName(String),
    #[error("invalid part list: {0}")]
    InvalidList(String),
    #[error("cannot read part file `{}`: {reason}", path.display())]
    UnreadableFile { path: PathBuf, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Naturals,
    Primes,
    Squares,
    Odds,
    Explicit(Vec<usize>),
    // Elements are read once at construction; the path is kept so the label
    // still round-trips through parse().
    FileBacked { path: PathBuf, elements: Vec<usize> },
}

/// A set of allowed parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartSet {
    kind: Kind,
}

impl PartSet {
    /// All positive integers 1, 2, 3, ...
    pub fn naturals() -> Self {
        PartSet {
            kind: Kind::Naturals,
        }
    }

    /// The primes 2, 3, 5, 7, ...
    pub fn primes() -> Self {
        PartSet { kind: Kind::Primes }
    }

    /// The perfect squares 1, 4, 9, 16, ...
    pub fn squares() -> Self {
        PartSet {
            kind: Kind::Squares,
        }
    }

    /// The odd numbers 1, 3, 5, 7, ...
    pub fn odds() -> Self {
        PartSet { kind: Kind::Odds }
    }

    /// The four builtin families, in the order they are usually tabled.
    pub fn builtins() -> [PartSet; 4] {
        [
            Self::naturals(),
            Self::primes(),
            Self::squares(),
            Self::odds(),
        ]
    }

    /// A finite explicit set. Elements must be positive, strictly increasing.
    pub fn explicit(elements: Vec<usize>) -> Result<Self, PartSetError> {
        validate_elements(&elements)?;
        Ok(PartSet {
            kind: Kind::Explicit(elements),
        })
    }

    /// Reads one positive integer per line; blank lines are ignored. The same
    /// ordering rules as [`PartSet::explicit`] apply.
    pub fn from_file(path: impl AsRef<Path>) -> Result<Self, PartSetError> {
        let path = path.as_ref().to_path_buf();
        let text = fs::read_to_string(&path).map_err(|e| PartSetError::UnreadableFile {
            path: path.clone(),
            reason: e.to_string(),
        })?;
        let mut elements = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let value: usize = line.parse().map_err(|_| PartSetError::UnreadableFile {
                path: path.clone(),
                reason: format!("line {}: `{line}` is not a positive integer", idx + 1),
            })?;
            elements.push(value);
        }
        validate_elements(&elements).map_err(|e| PartSetError::UnreadableFile {
            path: path.clone(),
            reason: e.to_string(),
        })?;
        Ok(PartSet {
            kind: Kind::FileBacked { path, elements },
        })
    }

    /// Accepts the grammar documented at module level.
    pub fn parse(spec: &str) -> Result<Self, PartSetError> {
        spec.parse()
    }

    /// Members of the set that are `<= bound`, ascending.
    pub fn parts_up_to(&self, bound: usize) -> Vec<usize> {
        match &self.kind {
            Kind::Naturals => (1..=bound).collect(),
            Kind::Primes => primes_up_to(bound),
            Kind::Squares => (1..)
                .map(|k: usize| k * k)
                .take_while(|&s| s <= bound)
                .collect(),
            Kind::Odds => (1..=bound).step_by(2).collect(),
            Kind::Explicit(elements) | Kind::FileBacked { elements, .. } => elements
                .iter()
                .copied()
                .take_while(|&a| a <= bound)
                .collect(),
        }
    }

    /// Canonical spec string; feeding it back to [`PartSet::parse`] rebuilds
    /// an equal set.
    pub fn label(&self) -> String {
        match &self.kind {
            Kind::Naturals => "naturals".to_owned(),
            Kind::Primes => "primes".to_owned(),
            Kind::Squares => "squares".to_owned(),
            Kind::Odds => "odds".to_owned(),
            Kind::Explicit(elements) => {
                let items: Vec<String> = elements.iter().map(|a| a.to_string()).collect();
                format!("list:{}", items.join(","))
            }
            Kind::FileBacked { path, .. } => format!("file:{}", path.display()),
        }
    }
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for PartSet {
    type Err = PartSetError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        match spec {
            "naturals" => return Ok(Self::naturals()),
            "primes" => return Ok(Self::primes()),
            "squares" => return Ok(Self::squares()),
            "odds" => return Ok(Self::odds()),
            _ => {}
        }
        if let Some(body) = spec.strip_prefix("list:") {
            let mut elements = Vec::new();
            for item in body.split(',') {
                let item = item.trim();
                if item.is_empty() {
                    return Err(PartSetError::InvalidList("empty entry".to_owned()));
                }
                let value: usize = item.parse().map_err(|_| {
                    PartSetError::InvalidList(format!("`{item}` is not a positive integer"))
                })?;
                elements.push(value);
            }
            return Self::explicit(elements);
        }
        if let Some(path) = spec.strip_prefix("file:") {
            return Self::from_file(path);
        }
        Err(PartSetError::UnknownName(spec.to_owned()))
    }
}

fn validate_elements(elements: &[usize]) -> Result<(), PartSetError> {
    if elements.is_empty() {
        return Err(PartSetError::InvalidList("no elements".to_owned()));
    }
    if elements[0] == 0 {
        return Err(PartSetError::InvalidList(
            "parts must be positive".to_owned(),
        ));
    }
    for window in elements.windows(2) {
        if window[1] == window[0] {
            return Err(PartSetError::InvalidList(format!(
                "duplicate part {}",
                window[0]
            )));
        }
        if window[1] < window[0] {
            return Err(PartSetError::InvalidList(
                "parts must be listed in increasing order".to_owned(),
            ));
        }
    }
    Ok(())
}

fn primes_up_to(bound: usize) -> Vec<usize> {
    if bound < 2 {
        return Vec::new();
    }
    let mut is_prime = vec![true; bound + 1];
    is_prime[0] = false;
    is_prime[1] = false;
    let mut p = 2;
    while p * p <= bound {
        if is_prime[p] {
            let mut m = p * p;
            while m <= bound {
                is_prime[m] = false;
                m += p;
            }
        }
        p += 1;
    }
    (2..=bound).filter(|&k| is_prime[k]).collect()
}
