use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    Commutant,
    Der,
    Gder,
    Qder,
    C,
    Qc,
    Zder,
}

impl SpaceKind {
    /// The six derivation-type kinds, in report order.
    pub const DERIVATION_TYPES: [SpaceKind; 6] = [
        SpaceKind::Der,
        SpaceKind::Gder,
        SpaceKind::Qder,
        SpaceKind::C,
        SpaceKind::Qc,
        SpaceKind::Zder,
    ];

    /// Number of `n × n` unknown blocks in the linear system.
    pub fn blocks(self) -> usize {
        match self {
            SpaceKind::Gder => 3,
            SpaceKind::Qder => 2,
            _ => 1,
        }
    }

    /// Whether membership is decided pointwise by the identity alone (no
    /// existentially quantified companion maps).
    pub fn is_pointwise(self) -> bool {
        self.blocks() == 1
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SpaceKind::Commutant => "commutant",
            SpaceKind::Der => "der",
            SpaceKind::Gder => "gder",
            SpaceKind::Qder => "qder",
            SpaceKind::C => "c",
            SpaceKind::Qc => "qc",
            SpaceKind::Zder => "zder",
        }
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SpaceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "commutant" => Ok(SpaceKind::Commutant),
            "der" => Ok(SpaceKind::Der),
            "gder" => Ok(SpaceKind::Gder),
            "qder" => Ok(SpaceKind::Qder),
            "c" => Ok(SpaceKind::C),
            "qc" => Ok(SpaceKind::Qc),
            "zder" => Ok(SpaceKind::Zder),
            other => Err(format!("unknown space kind {other:?}")),
        }
    }
}
