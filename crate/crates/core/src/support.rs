//! Support functions of a tiling and the regularity test.
//!
//! A lift `r` in `P_T` defines a function on the base that is linear on each
//! tile: at `eta = sum t_e a_e` inside `Z(a, v)` with `t_e = v_e` off `E_v`,
//! its value is `r . t`. Orthogonality to `Lambda_T` makes this independent
//! of the choice of `t`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{hermite_basis, kernel_lattice, perp_lattice, primitive_integer, solve_rational, to_rational, IntMatrix, SubLattice};
use crate::lp::{feasible_strict, LinearSystem};
use crate::tiling::Tiling;
use crate::zonotope::{contains_point, SignVector, VectorConfig};

/// The lattices `Lambda`, `Lambda_T` and `P_T` of a tiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingLattices {
    /// Integer relations among the vectors.
    pub relations: SubLattice,
    /// Sum of the relation lattices of the tiles.
    pub tile_relations: SubLattice,
    /// Lifts orthogonal to `tile_relations`.
    pub support: SubLattice,
}

/// Relations supported on `elements`, embedded in `Z^E`.
pub fn relations_on(c: &VectorConfig, elements: &[usize]) -> SubLattice {
    let n = c.len();
    let sub = IntMatrix::from_rows(&c.matrix().row_vecs(), n).expect("consistent").select_columns(elements);
    let k = kernel_lattice(&sub);
    let vectors: Vec<Vec<BigInt>> = k
        .basis()
        .iter()
        .map(|b| {
            let mut v = vec![BigInt::zero(); n];
            for (x, &e) in b.iter().zip(elements) {
                v[e] = x.clone();
            }
            v
        })
        .collect();
    hermite_basis(&vectors, n).expect("lengths match")
}

pub fn tiling_lattices(t: &Tiling) -> TilingLattices {
    let c = t.config();
    let n = c.len();
    let relations = kernel_lattice(&c.matrix());
    let mut gens = Vec::new();
    for m in t.maximal_tiles() {
        gens.extend(relations_on(c, &m.zero_set()).basis().iter().cloned());
    }
    let tile_relations = hermite_basis(&gens, n).expect("lengths match");
    let support = perp_lattice(&tile_relations);
    TilingLattices { relations, tile_relations, support }
}

/// A support function `phi(a, r)` on a tiling.
#[derive(Clone, Debug)]
pub struct SupportFunction<'a> {
    tiling: &'a Tiling,
    r: Vec<BigInt>,
}

impl<'a> SupportFunction<'a> {
    pub fn new(tiling: &'a Tiling, r: Vec<BigInt>) -> Result<Self> {
        check_lift(tiling, &r)?;
        Ok(SupportFunction { tiling, r })
    }

    pub fn lift(&self) -> &[BigInt] {
        &self.r
    }

    pub fn eval(&self, eta: &[BigRational]) -> Result<BigRational> {
        eval_support(self.tiling, &self.r, eta)
    }

    /// Values at the vertices of the tiling.
    pub fn vertex_values(&self) -> BTreeMap<Vec<BigInt>, BigInt> {
        vertex_values(self.tiling, &self.r)
    }
}

fn check_lift(t: &Tiling, r: &[BigInt]) -> Result<()> {
    if r.len() != t.config().len() {
        return Err(Error::DimensionMismatch { expected: t.config().len(), found: r.len() });
    }
    if !tiling_lattices(t).support.contains(r) {
        return Err(Error::NotInSupportLattice);
    }
    Ok(())
}

/// Coefficients `t` with `t_e = v_e` off `E_v` and `sum t_e a_e = eta`,
/// if any (the free part is any rational solution).
fn coefficients(t: &Tiling, v: &SignVector, eta: &[BigRational]) -> Option<Vec<BigRational>> {
    let c = t.config();
    let d = c.rank();
    let free = v.zero_set();
    let mut rhs: Vec<BigRational> = eta
        .iter()
        .zip(t.base().translation())
        .map(|(x, s)| x - BigRational::from_integer(s.clone()))
        .collect();
    for e in v.support() {
        let s = v.get(e).to_int();
        for (i, x) in c.vector(e).iter().enumerate() {
            rhs[i] -= BigRational::from_integer(x * &s);
        }
    }
    let rows: Vec<Vec<BigRational>> =
        (0..d).map(|i| free.iter().map(|&e| BigRational::from_integer(c.vector(e)[i].clone())).collect()).collect();
    let x = solve_rational(&rows, &rhs, free.len())?;
    let mut out: Vec<BigRational> = (0..c.len()).map(|e| BigRational::from_integer(v.get(e).to_int())).collect();
    for (val, &e) in x.into_iter().zip(&free) {
        out[e] = val;
    }
    Some(out)
}

fn weigh(r: &[BigInt], t: &[BigRational]) -> BigRational {
    r.iter().zip(t).map(|(a, b)| b * BigRational::from_integer(a.clone())).sum()
}

/// `phi(a, r)(eta)`.
pub fn eval_support(t: &Tiling, r: &[BigInt], eta: &[BigRational]) -> Result<BigRational> {
    check_lift(t, r)?;
    if eta.len() != t.config().rank() {
        return Err(Error::DimensionMismatch { expected: t.config().rank(), found: eta.len() });
    }
    for m in t.maximal_tiles() {
        if contains_point(&t.tile(&m), eta) {
            let coeffs = coefficients(t, &m, eta).expect("point lies in the tile's affine span");
            return Ok(weigh(r, &coeffs));
        }
    }
    Err(Error::OutsideZonotope)
}

/// `phi(a, r)` at every vertex of the tiling (no membership check on `r`).
pub fn vertex_values(t: &Tiling, r: &[BigInt]) -> BTreeMap<Vec<BigInt>, BigInt> {
    t.vertex_tiles()
        .iter()
        .map(|w| {
            let value = (0..r.len()).map(|e| w.get(e).to_int() * &r[e]).sum();
            (t.tile(w).center(), value)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Convexity {
    NonConvex,
    Convex,
    StrictlyConvex,
}

/// For each pair of adjacent maximal tiles `(F, F')`, the difference
/// `t' - t` where `eta = sum t_e a_e` is the lexicographically least vertex
/// of `F` off the common wall, `t` is read from its sign vector and `t'` is a
/// decomposition of `eta` along `F'`.
pub fn bending_rows(t: &Tiling) -> Vec<Vec<BigRational>> {
    let mut rows = Vec::new();
    for (f, g, wall) in t.adjacent_pairs() {
        let tile = t.tile(&f);
        let eta = tile
            .vertex_signs()
            .into_iter()
            .filter(|s| !wall.conforms_to(s))
            .map(|s| (t.tile(&s).center(), s))
            .min()
            .expect("a full-dimensional tile has a vertex off each facet");
        let point = to_rational(&eta.0);
        let here: Vec<BigRational> = (0..t.config().len()).map(|e| BigRational::from_integer(eta.1.get(e).to_int())).collect();
        let there = coefficients(t, &g, &point).expect("adjacent tiles span the same space");
        rows.push(there.iter().zip(&here).map(|(a, b)| a - b).collect());
    }
    rows
}

pub fn convexity(t: &Tiling, r: &[BigInt]) -> Result<Convexity> {
    check_lift(t, r)?;
    let mut strict = true;
    for row in bending_rows(t) {
        let delta = weigh(r, &row);
        if delta.is_negative() {
            return Ok(Convexity::NonConvex);
        }
        strict &= delta.is_positive();
    }
    Ok(if strict { Convexity::StrictlyConvex } else { Convexity::Convex })
}

/// A primitive lift whose support function is strictly convex, if the
/// tiling is regular.
pub fn regularity(t: &Tiling) -> Option<Vec<BigInt>> {
    let n = t.config().len();
    let lattices = tiling_lattices(t);
    let mut sys = LinearSystem::new(n);
    for b in lattices.tile_relations.basis() {
        sys.equality(b.clone());
    }
    let mut rows: Vec<Vec<BigInt>> = bending_rows(t).iter().map(|r| primitive_integer(r)).collect();
    rows.sort();
    rows.dedup();
    for row in rows {
        sys.strict(row);
    }
    let x = feasible_strict(&sys)?;
    Some(primitive_integer(&x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int_vec;
    use crate::tiling::tiling_from_lift;
    use crate::zonotope::Zonotope;
    use num_bigint::BigInt;

    fn hexagon() -> VectorConfig {
        VectorConfig::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]])
    }

    fn tp1() -> Tiling {
        let c = VectorConfig::from_i64(1, &[&[1], &[-1]]);
        Tiling::from_maximal(Zonotope::centered(c), ["0+".parse().unwrap(), "+0".parse().unwrap()])
    }

    fn q(v: &[i64]) -> Vec<BigRational> {
        to_rational(&int_vec(v))
    }

    #[test]
    fn lattices() {
        let triv = Tiling::trivial(Zonotope::centered(hexagon()));
        let l = tiling_lattices(&triv);
        assert_eq!(l.tile_relations, l.relations);
        assert_eq!(l.relations.basis(), &[int_vec(&[1, 1, -1])]);
        assert_eq!(l.support.basis(), &[int_vec(&[1, 0, 1]), int_vec(&[0, 1, 1])]);
        let cubes = tiling_from_lift(&hexagon(), &int_vec(&[1, 0, 0])).unwrap().0;
        let l = tiling_lattices(&cubes);
        assert!(l.tile_relations.is_zero());
        assert_eq!(l.support, SubLattice::full(3));
        let l = tiling_lattices(&tp1());
        assert_eq!(l.relations.basis(), &[int_vec(&[1, 1])]);
        assert!(l.tile_relations.is_zero());
    }

    #[test]
    fn evaluation() {
        let triv = Tiling::trivial(Zonotope::centered(hexagon()));
        let v = eval_support(&triv, &int_vec(&[1, 0, 1]), &q(&[2, 2])).unwrap();
        assert_eq!(v, BigRational::from_integer(BigInt::from(2)));
        assert_eq!(eval_support(&triv, &int_vec(&[1, 0, 0]), &q(&[0, 0])), Err(Error::NotInSupportLattice));
        assert_eq!(eval_support(&triv, &int_vec(&[1, 0, 1]), &q(&[3, 0])), Err(Error::OutsideZonotope));
        let t = tp1();
        let v = eval_support(&t, &int_vec(&[2, 5]), &q(&[0])).unwrap();
        assert_eq!(v, BigRational::from_integer(BigInt::from(7)));
    }

    #[test]
    fn convexity_on_tp1() {
        let t = tp1();
        assert_eq!(convexity(&t, &int_vec(&[1, 1])), Ok(Convexity::StrictlyConvex));
        assert_eq!(convexity(&t, &int_vec(&[1, -1])), Ok(Convexity::Convex));
        assert_eq!(convexity(&t, &int_vec(&[-1, -1])), Ok(Convexity::NonConvex));
        let w = regularity(&t).unwrap();
        assert_eq!(convexity(&t, &w), Ok(Convexity::StrictlyConvex));
    }

    #[test]
    fn regular_hexagon_tilings() {
        let cubes = tiling_from_lift(&hexagon(), &int_vec(&[1, 0, 0])).unwrap().0;
        assert_eq!(convexity(&cubes, &int_vec(&[1, 0, 0])), Ok(Convexity::StrictlyConvex));
        assert_eq!(convexity(&cubes, &int_vec(&[0, 0, 0])), Ok(Convexity::Convex));
        let w = regularity(&cubes).unwrap();
        assert_eq!(tiling_from_lift(&hexagon(), &w).unwrap().0, cubes);
        let triv = Tiling::trivial(Zonotope::centered(hexagon()));
        assert_eq!(regularity(&triv), Some(int_vec(&[0, 0, 0])));
    }
}
