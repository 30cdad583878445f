use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use super::{enumerate_box_pp, BoxSpec, PlanePartition};
use crate::error::{Error, Result};

/// Generators of the symmetry subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Generator {
    /// Cycle the axes, `(i, j, k) -> (j, k, i)`.
    Rho,
    /// Transpose the base, `(i, j, k) -> (j, i, k)`.
    Tau,
    /// Complement inside the box.
    Kappa,
    /// Transpose followed by complement.
    TauKappa,
}

impl Generator {
    pub fn apply(&self, p: &PlanePartition) -> PlanePartition {
        let bx = p.bx();
        match self {
            Generator::Rho => p.map_cubes(bx, |i, j, k| (j, k, i)),
            Generator::Tau => p.map_cubes(bx, |i, j, k| (j, i, k)),
            Generator::Kappa => p.complement(),
            Generator::TauKappa => Generator::Tau.apply(p).complement(),
        }
    }
}

/// The ten symmetry classes, numbered 1 to 10.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SymmetryClass(u8);

impl SymmetryClass {
    pub const PP: Self = Self(1);
    pub const SPP: Self = Self(2);
    pub const CSPP: Self = Self(3);
    pub const TSPP: Self = Self(4);
    pub const SCPP: Self = Self(5);
    pub const TCPP: Self = Self(6);
    pub const SSCPP: Self = Self(7);
    pub const CSTCPP: Self = Self(8);
    pub const CSSCPP: Self = Self(9);
    pub const TSSCPP: Self = Self(10);

    const NAMES: [&'static str; 10] = [
        "PP", "SPP", "CSPP", "TSPP", "SCPP", "TCPP", "SSCPP", "CSTCPP", "CSSCPP", "TSSCPP",
    ];

    pub fn new(id: u8) -> Result<Self> {
        if (1..=10).contains(&id) {
            Ok(Self(id))
        } else {
            Err(Error::Parse(format!("symmetry classes are numbered 1..=10, got {id}")))
        }
    }

    pub fn all() -> impl Iterator<Item = Self> {
        (1..=10).map(Self)
    }

    pub fn id(&self) -> u8 {
        self.0
    }

    pub fn name(&self) -> &'static str {
        Self::NAMES[self.0 as usize - 1]
    }

    pub fn generators(&self) -> &'static [Generator] {
        use Generator::*;
        match self.0 {
            1 => &[],
            2 => &[Tau],
            3 => &[Rho],
            4 => &[Rho, Tau],
            5 => &[Kappa],
            6 => &[TauKappa],
            7 => &[Tau, Kappa],
            8 => &[Rho, TauKappa],
            9 => &[Rho, Kappa],
            _ => &[Rho, Tau, Kappa],
        }
    }

    /// Box shapes on which the class is defined: `rho` needs a cube, `tau`
    /// needs `a = b`; transpose-complement classes also need an even volume
    /// (class 8 an even side).
    pub fn check(&self, bx: BoxSpec) -> Result<()> {
        let gens = self.generators();
        let cube = bx.a == bx.b && bx.b == bx.c;
        let square = bx.a == bx.b;
        let needs_tau = gens.iter().any(|g| matches!(g, Generator::Tau | Generator::TauKappa));
        let ok = (!gens.contains(&Generator::Rho) || cube)
            && (!needs_tau || square)
            && match self.0 {
                6 => bx.volume().is_multiple_of(2),
                8 => bx.a.is_multiple_of(2),
                _ => true,
            };
        if ok {
            Ok(())
        } else {
            Err(Error::Constraint(format!("{} is not defined for the box {bx}", self.name())))
        }
    }

    pub fn fixes(&self, p: &PlanePartition) -> bool {
        self.generators().iter().all(|g| g.apply(p) == *p)
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts a number `1..=10` or an abbreviation such as `cspp`.
impl FromStr for SymmetryClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(id) = s.parse::<u8>() {
            return Self::new(id);
        }
        Self::NAMES
            .iter()
            .position(|n| n.eq_ignore_ascii_case(s))
            .map(|i| Self(i as u8 + 1))
            .ok_or_else(|| Error::Parse(format!("unknown symmetry class {s:?}")))
    }
}

/// Brute-force count of plane partitions in the box fixed by the class.
pub fn symmetry_count(bx: BoxSpec, cls: SymmetryClass, limit: u32) -> Result<BigInt> {
    cls.check(bx)?;
    let all = enumerate_box_pp(bx, limit)?;
    Ok(BigInt::from(all.iter().filter(|p| cls.fixes(p)).count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::ENUMERATION_LIMIT;

    fn count(a: u32, b: u32, c: u32, cls: SymmetryClass) -> BigInt {
        symmetry_count(BoxSpec::new(a, b, c).unwrap(), cls, ENUMERATION_LIMIT).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(count(2, 2, 2, SymmetryClass::CSPP), BigInt::from(5));
        assert_eq!(count(1, 1, 2, SymmetryClass::TCPP), BigInt::from(1));
        assert_eq!(count(2, 2, 2, SymmetryClass::CSTCPP), BigInt::from(1));
        assert_eq!(count(2, 2, 2, SymmetryClass::PP), BigInt::from(20));
    }

    #[test]
    fn constraints() {
        let bx = BoxSpec::new(1, 2, 2).unwrap();
        assert!(matches!(symmetry_count(bx, SymmetryClass::CSPP, 64), Err(Error::Constraint(_))));
        assert!(symmetry_count(BoxSpec::new(1, 1, 1).unwrap(), SymmetryClass::TCPP, 64).is_err());
        assert!(symmetry_count(BoxSpec::new(1, 1, 1).unwrap(), SymmetryClass::CSTCPP, 64).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!("cspp".parse::<SymmetryClass>().unwrap(), SymmetryClass::CSPP);
        assert_eq!("8".parse::<SymmetryClass>().unwrap(), SymmetryClass::CSTCPP);
        assert!("11".parse::<SymmetryClass>().is_err());
        assert!("xpp".parse::<SymmetryClass>().is_err());
    }
}
