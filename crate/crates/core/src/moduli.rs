use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    SL2,
    PGL2,
    GL2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Betti,
    Dolbeault,
}

impl Group {
    pub const ALL: [Group; 3] = [Group::SL2, Group::PGL2, Group::GL2];

    pub fn name(self) -> &'static str {
        match self {
            Group::SL2 => "sl2",
            Group::PGL2 => "pgl2",
            Group::GL2 => "gl2",
        }
    }

    /// Coefficient counting the torsion points: `2^{2g}` for SL2, `1` once
    /// the torsion action has been quotiented out.
    pub fn torsion(self, genus: u32) -> BigInt {
        match self {
            Group::SL2 => BigInt::from(1) << (2 * genus),
            Group::PGL2 | Group::GL2 => BigInt::from(1),
        }
    }
}

impl Side {
    pub const ALL: [Side; 2] = [Side::Betti, Side::Dolbeault];

    pub fn name(self) -> &'static str {
        match self {
            Side::Betti => "betti",
            Side::Dolbeault => "dolbeault",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Group::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown group {s:?}")))
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Side::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown side {s:?}")))
    }
}

/// Rejects genera below `min`.
pub fn check_genus(genus: u32, min: u32) -> Result<()> {
    if genus < min {
        return Err(Error::InvalidGenus { genus, min });
    }
    Ok(())
}

/// A moduli space `M(C, G)` on one side of non-abelian Hodge theory.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuliSpec {
    pub group: Group,
    pub side: Side,
    pub genus: u32,
}

impl ModuliSpec {
    pub fn new(group: Group, side: Side, genus: u32) -> Result<Self> {
        check_genus(genus, 2)?;
        Ok(ModuliSpec { group, side, genus })
    }

    /// Complex dimension.
    pub fn dimension(&self) -> u32 {
        dimension(self.group, self.genus)
    }

    pub fn torsion(&self) -> BigInt {
        self.group.torsion(self.genus)
    }
}

pub fn dimension(group: Group, genus: u32) -> u32 {
    match group {
        Group::SL2 | Group::PGL2 => 6 * genus - 6,
        Group::GL2 => 8 * genus - 6,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_and_torsion() {
        let s = ModuliSpec::new(Group::SL2, Side::Betti, 3).unwrap();
        assert_eq!(s.dimension(), 12);
        assert_eq!(s.torsion(), BigInt::from(64));
        assert_eq!(dimension(Group::GL2, 2), 10);
        assert_eq!(Group::PGL2.torsion(7), BigInt::from(1));
        assert!(ModuliSpec::new(Group::SL2, Side::Betti, 1).is_err());
    }

    #[test]
    fn names_round_trip() {
        for g in Group::ALL {
            assert_eq!(g.name().parse::<Group>().unwrap(), g);
        }
        for s in Side::ALL {
            assert_eq!(s.name().parse::<Side>().unwrap(), s);
        }
        assert!("so3".parse::<Group>().is_err());
    }
}
