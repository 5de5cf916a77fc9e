use alloc::vec::Vec;
use core::fmt;

use crate::tiling::Violation;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A vector or matrix had the wrong length.
    DimensionMismatch { expected: usize, found: usize },
    /// A sign vector was required to be a covector of a configuration.
    NotACovector,
    /// The operation needs a configuration spanning the ambient space.
    NonSpanning,
    /// The operation needs every vector to be nonzero with coprime entries.
    NonPrimitive,
    /// Input is larger than the exhaustive algorithm accepts.
    ScaleGuard { what: &'static str, limit: usize, found: usize },
    /// A tile was looked up that does not belong to the tiling.
    TileNotInTiling,
    /// Two tilings were compared that do not tile the same zonotope.
    DifferentBase,
    /// A vector was required to lie in the support-function lattice.
    NotInSupportLattice,
    /// A point was required to lie in the zonotope.
    OutsideZonotope,
    /// The tile data does not form a tiling.
    InvalidTiling(Vec<Violation>),
    /// An intermediate value left the machine-integer range.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotACovector => f.write_str("sign vector is not a covector of the configuration"),
            Error::NonSpanning => f.write_str("configuration does not span the ambient space"),
            Error::NonPrimitive => f.write_str("configuration contains a zero or non-primitive vector"),
            Error::ScaleGuard { what, limit, found } => {
                write!(f, "scale guard: {what} is {found}, limit {limit}")
            }
            Error::TileNotInTiling => f.write_str("tile is not part of the tiling"),
            Error::DifferentBase => f.write_str("tilings have different base zonotopes"),
            Error::NotInSupportLattice => f.write_str("vector is not in the support-function lattice"),
            Error::OutsideZonotope => f.write_str("point lies outside the zonotope"),
            Error::InvalidTiling(v) => write!(f, "invalid tiling ({} violations)", v.len()),
            Error::Overflow => f.write_str("intermediate value overflowed"),
        }
    }
}

impl core::error::Error for Error {}
