//! The JSON problem document.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use hypertile_core::tiling::{tiling_from_lift, Tiling};
use hypertile_core::zonotope::{Sign, SignVector, VectorConfig, Zonotope};
use hypertile_core::BigInt;

use crate::CliError;

/// A configuration with optional sign vector, lift, translation and tiles.
///
/// Tiles are sign strings over `+`, `-`, `0`, either of length `|E|` or
/// restricted to the free elements of `sign`. `tiles` lists every tile;
/// `maximal_tiles` lists top-dimensional ones and is closed under faces;
/// `tile_vertices` gives tiles as vertex lists, matched to sign vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub rank: usize,
    pub vectors: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub translation: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tiles: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maximal_tiles: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tile_vertices: Option<Vec<Vec<Vec<i64>>>>,
}

/// Largest number of free elements for which vertex-list tiles are matched.
pub const MATCH_MAX_FREE: usize = 10;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn parse_sign(s: &str) -> Result<SignVector, CliError> {
    s.parse().map_err(|c| CliError::Input(format!("invalid sign character {c:?} in {s:?}")))
}

impl ProblemDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn config(&self) -> Result<VectorConfig, CliError> {
        Ok(VectorConfig::new(self.rank, self.vectors.iter().map(|v| big(v)).collect())?)
    }

    pub fn sign_vector(&self) -> Result<SignVector, CliError> {
        match &self.sign {
            Some(s) => parse_sign(s),
            None => Ok(SignVector::zero(self.vectors.len())),
        }
    }

    pub fn base(&self) -> Result<Zonotope, CliError> {
        let translation = match &self.translation {
            Some(t) => big(t),
            None => vec![BigInt::from(0); self.rank],
        };
        Ok(Zonotope::new(self.config()?, self.sign_vector()?, translation)?)
    }

    pub fn lift_vector(&self) -> Result<Option<Vec<BigInt>>, CliError> {
        match &self.lift {
            None => Ok(None),
            Some(l) if l.len() != self.vectors.len() => Err(CliError::Input(format!(
                "lift has {} entries, expected {}",
                l.len(),
                self.vectors.len()
            ))),
            Some(l) => Ok(Some(big(l))),
        }
    }

    fn full_sign(&self, base: &Zonotope, s: &str) -> Result<SignVector, CliError> {
        let v = parse_sign(s)?;
        let free = base.free_elements();
        if v.len() == base.sign().len() {
            Ok(v)
        } else if v.len() == free.len() {
            Ok(base.sign().fill(&free, &v))
        } else {
            Err(CliError::Input(format!(
                "tile {s:?} has length {}, expected {} or {}",
                v.len(),
                base.sign().len(),
                free.len()
            )))
        }
    }

    /// Whether the document specifies a tiling rather than just a zonotope.
    pub fn has_tiling(&self) -> bool {
        self.tiles.is_some() || self.maximal_tiles.is_some() || self.tile_vertices.is_some() || self.lift.is_some()
    }

    /// The tiling described by the document: explicit tiles if present,
    /// else the tiling of the lift, else the trivial tiling of the base.
    pub fn tiling(&self) -> Result<Tiling, CliError> {
        let base = self.base()?;
        if let Some(tiles) = &self.tiles {
            let tiles = tiles.iter().map(|s| self.full_sign(&base, s)).collect::<Result<Vec<_>, _>>()?;
            return Ok(Tiling::new(base, tiles));
        }
        if let Some(tiles) = &self.maximal_tiles {
            let tiles = tiles.iter().map(|s| self.full_sign(&base, s)).collect::<Result<Vec<_>, _>>()?;
            return Ok(Tiling::from_maximal(base, tiles));
        }
        if let Some(polys) = &self.tile_vertices {
            let tiles = polys.iter().map(|p| match_polytope(&base, p)).collect::<Result<Vec<_>, _>>()?;
            return Ok(Tiling::from_maximal(base, tiles));
        }
        if let Some(lift) = self.lift_vector()? {
            if !base.sign().support().is_empty() {
                return Err(CliError::Input("a lift tiles Z(a) itself; drop the sign or give tiles".into()));
            }
            return Ok(tiling_from_lift(base.config(), &lift)?.0.translated(base.translation())?);
        }
        Ok(Tiling::trivial(base))
    }
}

/// The sign vector `w` (agreeing with the base) whose zonotope has exactly
/// the given vertices.
fn match_polytope(base: &Zonotope, vertices: &[Vec<i64>]) -> Result<SignVector, CliError> {
    let mut wanted: Vec<Vec<BigInt>> = vertices.iter().map(|v| big(v)).collect();
    wanted.sort();
    wanted.dedup();
    let free = base.free_elements();
    if free.len() > MATCH_MAX_FREE {
        return Err(hypertile_core::Error::ScaleGuard { what: "free elements", limit: MATCH_MAX_FREE, found: free.len() }.into());
    }
    let n = wanted.len();
    if n == 0 || wanted.iter().any(|v| v.len() != base.config().rank()) {
        return Err(CliError::Input("tile vertex list is empty or has wrong dimension".into()));
    }
    // The center of a zonotope is the mean of its vertices.
    let d = base.config().rank();
    let sums: Vec<BigInt> = (0..d).map(|i| wanted.iter().map(|v| &v[i]).sum()).collect();
    let count = BigInt::from(n);
    if sums.iter().any(|s| s % &count != BigInt::from(0)) {
        return Err(CliError::Input(format!("tile with vertices {vertices:?} matches no sign vector")));
    }
    let center: Vec<BigInt> = sums.iter().map(|s| s / &count).collect();
    let mut digits = vec![0u8; free.len()];
    loop {
        let mut w = base.sign().clone();
        for (k, &e) in free.iter().enumerate() {
            w.set(e, [Sign::Minus, Sign::Zero, Sign::Plus][digits[k] as usize]);
        }
        let z = base.sibling(w.clone());
        if z.center() == center && z.vertices() == wanted {
            return Ok(w);
        }
        let Some(k) = digits.iter().position(|&x| x < 2) else { break };
        digits[k] += 1;
        for x in &mut digits[..k] {
            *x = 0;
        }
    }
    Err(CliError::Input(format!("tile with vertices {vertices:?} matches no sign vector")))
}
