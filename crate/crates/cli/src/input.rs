//! The JSON input document.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use reesmod::groebner::Ideal;
use reesmod::invariants::ModuleSpec;
use reesmod::poly::{parse_polynomial, FieldSpec, PolyRing};
use reesmod::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldInput {
    Name(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingInput {
    pub variables: Vec<String>,
    pub field: FieldInput,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleInput {
    pub ambient_rank: usize,
    pub generators: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDocument {
    pub ring: RingInput,
    pub module: ModuleInput,
    #[serde(default, alias = "asserted_primes", skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<Vec<String>>>,
}

/// A primes file is either a bare list of generator lists or an object
/// with a `primes` field.
#[derive(Deserialize)]
#[serde(untagged)]
enum PrimesInput {
    List(Vec<Vec<String>>),
    Doc {
        #[serde(alias = "asserted_primes")]
        primes: Vec<Vec<String>>,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

impl InputDocument {
    pub fn load(path: &Path) -> Result<Self> {
        json(path)
    }

    pub fn ring(&self) -> Result<Arc<PolyRing>> {
        let field = match &self.ring.field {
            FieldInput::Name(n) if n == "Q" => FieldSpec::Rationals,
            FieldInput::Name(n) => return Err(Error::Input(format!("unknown field {n:?}"))),
            FieldInput::Prime { fp } => FieldSpec::prime(*fp)?,
        };
        PolyRing::new(self.ring.variables.clone(), field)
    }

    pub fn module_in(&self, ring: &Arc<PolyRing>) -> Result<ModuleSpec> {
        ModuleSpec::parse(ring, self.module.ambient_rank, &self.module.generators)
    }

    pub fn module(&self) -> Result<ModuleSpec> {
        self.module_in(&self.ring()?)
    }

    pub fn primes_in(&self, ring: &Arc<PolyRing>) -> Result<Option<Vec<Ideal>>> {
        self.primes.as_deref().map(|p| ideals(ring, p)).transpose()
    }
}

pub fn load_primes(path: &Path, ring: &Arc<PolyRing>) -> Result<Vec<Ideal>> {
    let lists = match json::<PrimesInput>(path)? {
        PrimesInput::List(l) => l,
        PrimesInput::Doc { primes } => primes,
    };
    ideals(ring, &lists)
}

fn ideals(ring: &Arc<PolyRing>, lists: &[Vec<String>]) -> Result<Vec<Ideal>> {
    lists
        .iter()
        .map(|gens| {
            let polys = gens
                .iter()
                .map(|s| parse_polynomial(ring, s))
                .collect::<Result<Vec<_>>>()?;
            Ideal::new(ring, polys)
        })
        .collect()
}
