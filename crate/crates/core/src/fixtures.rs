//! Named inputs: cocycle parameters, a Morita witness, the six `D_8` modules, and the cyclic grid.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cocycles::CocycleParams;
use crate::groups::FiniteAbelianGroup;
use crate::morita::{example_3_7_params, example_3_7_witness, MoritaWitness};
use crate::nichols::{d8, ModuleSpec};

pub const CATALOG_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixtureError {
    #[error("unknown fixture {0:?}")]
    Unknown(String),
    #[error("fixture {name} is a {kind}, expected {expected}")]
    WrongKind { name: String, kind: &'static str, expected: &'static str },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FixtureData {
    Cocycle { params: CocycleParams },
    MoritaWitness { params: CocycleParams, witness: MoritaWitness },
    Module { spec: ModuleSpec },
    CyclicGrid { pairs: Vec<(u64, u64)> },
}

impl FixtureData {
    fn kind(&self) -> &'static str {
        match self {
            FixtureData::Cocycle { .. } => "cocycle",
            FixtureData::MoritaWitness { .. } => "morita_witness",
            FixtureData::Module { .. } => "module",
            FixtureData::CyclicGrid { .. } => "cyclic_grid",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub version: u32,
    pub description: String,
    #[serde(flatten)]
    pub data: FixtureData,
}

impl Fixture {
    /// Cocycle parameters, for fixtures that carry them.
    pub fn params(&self) -> Result<CocycleParams, FixtureError> {
        match &self.data {
            FixtureData::Cocycle { params } | FixtureData::MoritaWitness { params, .. } => Ok(params.clone()),
            other => Err(FixtureError::WrongKind { name: self.name.clone(), kind: other.kind(), expected: "cocycle" }),
        }
    }

    pub fn witness(&self) -> Result<MoritaWitness, FixtureError> {
        match &self.data {
            FixtureData::MoritaWitness { witness, .. } => Ok(witness.clone()),
            other => Err(FixtureError::WrongKind { name: self.name.clone(), kind: other.kind(), expected: "morita_witness" }),
        }
    }
}

pub const NAMES: [&str; 10] = ["z2cubed-a123", "example-3-7", "trivial", "M1", "M2", "M3", "M4", "M5", "M6", "cyclic-grid"];

/// `ω(g, h, k) = (-1)^{k_1 j_2 i_3}` on `Z_2^3`.
pub fn z2cubed_a123() -> CocycleParams {
    let g = FiniteAbelianGroup::new(vec![2, 2, 2]).expect("valid group");
    CocycleParams::new(g, vec![0; 3], Default::default(), [((0, 1, 2), 1)].into_iter().collect()).expect("valid parameters")
}

/// All `(m, a)` with `2 ≤ m ≤ 12`, `1 ≤ a < m`.
pub fn cyclic_grid() -> Vec<(u64, u64)> {
    (2..=12).flat_map(|m| (1..m).map(move |a| (m, a))).collect()
}

fn make(name: &str, description: &str, data: FixtureData) -> Fixture {
    Fixture { name: name.into(), version: CATALOG_VERSION, description: description.into(), data }
}

pub fn fixture(name: &str) -> Result<Fixture, FixtureError> {
    let f = match name {
        "z2cubed-a123" => make("z2cubed-a123", "Z2^3 with a_123 = 1, all other parameters 0", FixtureData::Cocycle { params: z2cubed_a123() }),
        "example-3-7" => make(
            "example-3-7",
            "Z2^3 with a = (0,1,0,1,1,1,0) and its witness H = <g1>, K = <g1 g2> x <g3>",
            FixtureData::MoritaWitness { params: example_3_7_params(), witness: example_3_7_witness() },
        ),
        "trivial" => make(
            "trivial",
            "Z2 with a = 0",
            FixtureData::Cocycle { params: CocycleParams::zero(FiniteAbelianGroup::cyclic(2).expect("valid group")) },
        ),
        "cyclic-grid" => make("cyclic-grid", "all (m, a) with m <= 12, 1 <= a < m", FixtureData::CyclicGrid { pairs: cyclic_grid() }),
        other => {
            let k = d8::MODULE_NAMES.iter().position(|&n| n == other).ok_or_else(|| FixtureError::Unknown(other.into()))?;
            let spec = d8::spec(k + 1).expect("fixed modules are valid");
            let desc = format!("D8 module M(O_{}, rho)", spec.class_rep);
            make(other, &desc, FixtureData::Module { spec })
        }
    };
    Ok(f)
}

pub fn catalog() -> Vec<Fixture> {
    NAMES.iter().map(|n| fixture(n).expect("catalog names resolve")).collect()
}
