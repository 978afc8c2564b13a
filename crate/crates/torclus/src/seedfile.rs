//! JSON seed files: a portable description of a toroidal seed (backend,
//! variables as expression strings, exchange matrix) with stable round-trip
//! rendering.

use crate::cartan::{CartanData, DynkinType};
use crate::cluster::{ClusterError, ToroidalSeed};
use crate::params::QuotientContext;
use crate::parse::{parse_element, parse_param_monomial, ParseError};
use crate::torus::Backend;
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SeedFileError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown Dynkin type {0:?}")]
    UnknownType(String),
    #[error("bad expression: {0}")]
    Parse(#[from] ParseError),
    #[error("bad seed: {0}")]
    Cluster(#[from] ClusterError),
    #[error("backend spec does not match declared type")]
    BackendMismatch,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum BackendSpec {
    /// Finite torus: skew matrices per parameter index.
    Finite {
        rank: usize,
        lambdas: Vec<(i64, Vec<Vec<i64>>)>,
    },
    /// Cartan torus: Dynkin type name.
    Cartan { dynkin: String },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum QuotientSpec {
    Named(String),
    Relations(Vec<String>),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SeedFile {
    /// "finite" or "cartan".
    #[serde(rename = "type")]
    pub ty: String,
    pub backend: BackendSpec,
    pub variables: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    pub exchangeable: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient: Option<QuotientSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub project: Option<Vec<i64>>,
}

impl SeedFile {
    pub fn from_json(text: &str) -> Result<SeedFile, SeedFileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("seed files always serialize")
    }

    fn quotient_context(&self) -> Result<QuotientContext, SeedFileError> {
        match &self.quotient {
            None => Ok(QuotientContext::None),
            Some(QuotientSpec::Named(name)) => match name.as_str() {
                "none" => Ok(QuotientContext::None),
                "standard" => Ok(QuotientContext::Standard),
                other => Err(SeedFileError::UnknownType(other.to_string())),
            },
            Some(QuotientSpec::Relations(rels)) => {
                let parsed = rels
                    .iter()
                    .map(|r| parse_param_monomial(r))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(QuotientContext::custom(parsed))
            }
        }
    }

    pub fn build_backend(&self) -> Result<Arc<Backend>, SeedFileError> {
        let ctx = self.quotient_context()?;
        match (&self.backend, self.ty.as_str()) {
            (BackendSpec::Finite { rank, lambdas }, "finite") => {
                Ok(Backend::finite(*rank, lambdas.clone(), ctx))
            }
            (BackendSpec::Cartan { dynkin }, "cartan") => {
                let ty = DynkinType::parse(dynkin)
                    .map_err(|_| SeedFileError::UnknownType(dynkin.clone()))?;
                let data = CartanData::new(ty);
                Ok(match &self.project {
                    None => Backend::cartan(data, ctx),
                    Some(keep) => Backend::cartan_projected(data, ctx, keep.clone()),
                })
            }
            _ => Err(SeedFileError::BackendMismatch),
        }
    }

    pub fn build_seed(&self) -> Result<ToroidalSeed, SeedFileError> {
        let backend = self.build_backend()?;
        let vars = self
            .variables
            .iter()
            .map(|v| parse_element(&backend, v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ToroidalSeed::new(backend, vars, self.b.clone(), self.exchangeable)?)
    }

    /// Canonical rendering of a seed back into a file (variables re-rendered
    /// through the canonical Display).
    pub fn from_seed(seed: &ToroidalSeed, template: &SeedFile) -> SeedFile {
        SeedFile {
            ty: template.ty.clone(),
            backend: template.backend.clone(),
            variables: seed.vars.iter().map(|v| v.to_string()).collect(),
            b: seed.b.clone(),
            exchangeable: seed.m,
            quotient: template.quotient.clone(),
            project: template.project.clone(),
        }
    }

    /// Canonicalize: build the seed and re-render.
    pub fn canonical(&self) -> Result<SeedFile, SeedFileError> {
        Ok(SeedFile::from_seed(&self.build_seed()?, self))
    }
}

/// The three-variable two-parameter reference example as a seed file.
pub fn example_seed_file() -> SeedFile {
    SeedFile {
        ty: "finite".into(),
        backend: BackendSpec::Finite {
            rank: 3,
            lambdas: vec![
                (1, vec![vec![0, 1, -1], vec![-1, 0, 0], vec![1, 0, 0]]),
                (2, vec![vec![0, 0, -1], vec![0, 0, 0], vec![1, 0, 0]]),
            ],
        },
        variables: vec!["X[1]".into(), "X[2]".into(), "X[3]".into()],
        b: vec![vec![0], vec![-1], vec![1]],
        exchangeable: 1,
        quotient: None,
        project: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_stability() {
        let f = example_seed_file();
        let text = f.to_json();
        let parsed = SeedFile::from_json(&text).unwrap();
        assert_eq!(parsed, f);
        let canon = parsed.canonical().unwrap();
        assert_eq!(canon.to_json(), canon.canonical().unwrap().to_json());
    }

    #[test]
    fn builds_the_example_seed() {
        let f = example_seed_file();
        let seed = f.build_seed().unwrap();
        let reference = crate::cluster::example_seed();
        assert_eq!(seed.b, reference.b);
        assert_eq!(seed.q, reference.q);
        assert_eq!(
            seed.exchange_rhs(0).unwrap().to_string(),
            reference.exchange_rhs(0).unwrap().to_string()
        );
    }

    #[test]
    fn cartan_seed_file() {
        let f = SeedFile {
            ty: "cartan".into(),
            backend: BackendSpec::Cartan { dynkin: "A2".into() },
            variables: vec![
                "Y[1,2]".into(),
                "Y[2,3]".into(),
                "Y[1,0] Y[1,2]".into(),
                "Y[2,1] Y[2,3]".into(),
            ],
            b: vec![vec![0, 1], vec![-1, 0], vec![-1, 0], vec![1, -1]],
            exchangeable: 2,
            quotient: Some(QuotientSpec::Named("none".into())),
            project: None,
        };
        let seed = f.build_seed().unwrap();
        let reference = crate::groth::sl3::c1_ob_a2_seed();
        assert_eq!(seed.q, reference.q);
        let mutated = seed.mutate(0).unwrap();
        assert_eq!(mutated.vars[0], reference.mutate(0).unwrap().vars[0]);
    }

    #[test]
    fn custom_quotient_parses() {
        let mut f = example_seed_file();
        f.quotient = Some(QuotientSpec::Relations(vec![
            "t[1]^{1} t[2]^{-1}".into(),
        ]));
        assert!(f.build_seed().is_ok());
    }
}
