//! JSON module files:
//! `{"p":2,"r":2,"field":{...},"flavor":"grouplike","dim":4,"actions":[[...],[...]]}`
//! with each action a row-major list of field-element strings.

use serde::{Deserialize, Serialize};

use super::{AlgebraSpec, HopfFlavor, LambdaModule, ModuleError};
use crate::field::{AnyField, Field, FieldSpec, GaloisField, PrimeField, RatFunc};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub p: u32,
    pub r: usize,
    pub field: FieldSpec,
    pub flavor: HopfFlavor,
    pub dim: usize,
    pub actions: Vec<Vec<String>>,
}

/// A module whose coefficient field is only known at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyModule {
    Prime(LambdaModule<PrimeField>),
    Galois(LambdaModule<GaloisField>),
    RatFunc(LambdaModule<RatFunc<GaloisField>>),
}

/// Fields that can be written into a module file.
pub trait DescribeField: Field {
    fn describe(&self) -> FieldSpec;
}

impl DescribeField for PrimeField {
    fn describe(&self) -> FieldSpec {
        FieldSpec::of_prime(self)
    }
}

impl DescribeField for GaloisField {
    fn describe(&self) -> FieldSpec {
        FieldSpec::of_galois(self)
    }
}

impl DescribeField for RatFunc<GaloisField> {
    fn describe(&self) -> FieldSpec {
        FieldSpec::of_ratfunc(self)
    }
}

fn format_err(msg: impl Into<String>) -> ModuleError {
    ModuleError::Format(msg.into())
}

fn build<F: Field>(file: &ModuleFile, field: F) -> Result<LambdaModule<F>, ModuleError> {
    if field.characteristic() != file.p {
        return Err(format_err(format!("p = {} but field has characteristic {}", file.p, field.characteristic())));
    }
    if file.r == 0 {
        return Err(format_err("r must be at least 1"));
    }
    if file.actions.len() != file.r {
        return Err(ModuleError::Shape { expected: file.r, dim: file.dim });
    }
    let spec = AlgebraSpec::new(field.clone(), file.r, file.flavor);
    let mut actions = Vec::with_capacity(file.r);
    for (i, entries) in file.actions.iter().enumerate() {
        if entries.len() != file.dim * file.dim {
            return Err(format_err(format!(
                "action {} has {} entries, expected {}",
                i + 1,
                entries.len(),
                file.dim * file.dim
            )));
        }
        let data = entries
            .iter()
            .enumerate()
            .map(|(k, s)| {
                field
                    .parse_elem(s)
                    .map_err(|e| format_err(format!("action {} entry ({}, {}): {e}", i + 1, k / file.dim, k % file.dim)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        actions.push(Matrix::from_vec(&field, file.dim, file.dim, data)?);
    }
    if file.dim == 0 {
        return Ok(LambdaModule::zero(spec));
    }
    LambdaModule::new(spec, actions)
}

impl ModuleFile {
    pub fn from_module<F: DescribeField>(m: &LambdaModule<F>) -> Self {
        let f = m.field();
        ModuleFile {
            p: m.spec().p(),
            r: m.spec().r(),
            field: f.describe(),
            flavor: m.spec().flavor(),
            dim: m.dim(),
            actions: m.actions().iter().map(|a| a.data().iter().map(|x| f.format_elem(x)).collect()).collect(),
        }
    }

    pub fn to_module(&self) -> Result<AnyModule, ModuleError> {
        Ok(match self.field.build()? {
            AnyField::Prime(f) => AnyModule::Prime(build(self, f)?),
            AnyField::Galois(f) => AnyModule::Galois(build(self, f)?),
            AnyField::RatFunc(f) => AnyModule::RatFunc(build(self, f)?),
        })
    }
}

pub fn read_module(json: &str) -> Result<AnyModule, ModuleError> {
    let file: ModuleFile = serde_json::from_str(json).map_err(|e| format_err(e.to_string()))?;
    file.to_module()
}

pub fn write_module<F: DescribeField>(m: &LambdaModule<F>) -> String {
    serde_json::to_string(&ModuleFile::from_module(m)).expect("serializable")
}

impl AnyModule {
    pub fn dim(&self) -> usize {
        match self {
            AnyModule::Prime(m) => m.dim(),
            AnyModule::Galois(m) => m.dim(),
            AnyModule::RatFunc(m) => m.dim(),
        }
    }
}
