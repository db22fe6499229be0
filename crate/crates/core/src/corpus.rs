//! Built-in models.

use thiserror::Error;

use crate::model::{Model, ModelError};

macro_rules! entries {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../models/", $name, ".model")))),*]
    };
}

/// `(name, model file text)`.
pub const ENTRIES: &[(&str, &str)] = entries![
    "abelian-torus-2",
    "abelian-torus-4",
    "abelian-torus-6",
    "abelian-torus-2-bfield",
    "abelian-complex-2",
    "heisenberg3",
    "heisenberg-center",
    "complex-heisenberg",
    "kodaira-thurston",
    "kodaira-thurston-6",
    "wade-example",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("unknown model '{0}'")]
    Unknown(String),
    #[error("corpus model '{name}' is invalid: {source}")]
    Invalid { name: String, source: ModelError },
}

pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|e| e.0)
}

pub fn source(name: &str) -> Result<&'static str, CorpusError> {
    ENTRIES
        .iter()
        .find(|e| e.0 == name)
        .map(|e| e.1)
        .ok_or_else(|| CorpusError::Unknown(name.to_string()))
}

pub fn load(name: &str) -> Result<Model, CorpusError> {
    Model::parse(source(name)?).map_err(|source| CorpusError::Invalid {
        name: name.to_string(),
        source,
    })
}
