//! Invariants of the hypertoric variety attached to a tiling, computed
//! combinatorially: weights, the extended core, class and Picard groups,
//! divisor positivity, the Lawrence fan and generators of the ring of
//! invariants.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    echelonize, hermite_basis, kernel_lattice, perp_lattice, primitive, smith_invariants, solve_rational,
    to_rational, SubLattice,
};
use crate::lp::{feasible_strict, LinearSystem};
use crate::support::{convexity, regularity, tiling_lattices, Convexity};
use crate::tiling::{local_fan, Cone, Fan, LocalFan, Tiling};
use crate::zonotope::{classify_block, BlockKind, FacetDescription, Location, ShapeKey, SignVector, VectorConfig, Zonotope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeightProfile {
    Mixed,
    Nonnegative,
    Positive,
}

/// Sign of the weights of the scaling action, read off the position of the
/// origin: it lies in `Z` iff it lies in `eta + T_eta` for every vertex
/// `eta` with tangent cone `T_eta`, and in the interior iff it lies in the
/// interior of each of these cones.
pub fn weight_profile(z: &Zonotope) -> WeightProfile {
    let d = z.config().rank();
    let free = z.free_elements();
    let full = z.is_full_dimensional();
    let mut nonneg = true;
    let mut positive = full;
    for w in z.vertex_signs() {
        let eta = z.sibling(w.clone()).center();
        let gens: Vec<Vec<BigInt>> = free
            .iter()
            .map(|&e| {
                let s = -w.get(e).to_int();
                z.config().vector(e).iter().map(|x| x * &s).collect()
            })
            .collect();
        let k = gens.len();
        let build = |strict: bool| {
            let mut sys = LinearSystem::new(k + 1);
            for i in 0..d {
                let mut row: Vec<BigInt> = gens.iter().map(|g| g[i].clone()).collect();
                row.push(eta[i].clone());
                sys.equality(row);
            }
            let mut s = vec![BigInt::zero(); k + 1];
            s[k] = BigInt::one();
            sys.strict(s);
            for j in 0..k {
                let mut l = vec![BigInt::zero(); k + 1];
                l[j] = BigInt::one();
                if strict {
                    sys.strict(l);
                } else {
                    sys.weak(l);
                }
            }
            sys
        };
        if nonneg && feasible_strict(&build(false)).is_none() {
            nonneg = false;
        }
        if positive && feasible_strict(&build(true)).is_none() {
            positive = false;
        }
    }
    if nonneg && positive {
        WeightProfile::Positive
    } else if nonneg {
        WeightProfile::Nonnegative
    } else {
        WeightProfile::Mixed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypertoricCheck {
    pub holds: bool,
    pub reasons: Vec<&'static str>,
}

/// Whether the tiling satisfies the hypotheses under which it defines a
/// hypertoric variety, with the failed hypotheses listed.
pub fn is_hypertoric(t: &Tiling) -> HypertoricCheck {
    let mut reasons = Vec::new();
    if !t.config().is_spanning() {
        reasons.push("configuration does not span");
    }
    if weight_profile(t.base()) != WeightProfile::Positive {
        reasons.push("origin is not in the interior of the zonotope");
    }
    HypertoricCheck { holds: reasons.is_empty(), reasons }
}

/// The stratum of the extended core attached to a tile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreComponent {
    pub tile: SignVector,
    pub dim: usize,
    pub local_fan: LocalFan,
    pub is_proper: bool,
    pub in_core: bool,
    /// The vertex, for zero-dimensional tiles.
    pub gm_weight: Option<Vec<BigInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedCore {
    /// One record per tile, in tile order.
    pub components: Vec<CoreComponent>,
    /// `(i, j)` when tile `j` is a facet of tile `i`, so that stratum `i`
    /// lies in the closure of stratum `j`.
    pub covers: Vec<(usize, usize)>,
    /// Indices of the irreducible components (the vertices).
    pub irreducible: Vec<usize>,
    pub core_nonempty: bool,
}

pub fn extended_core(t: &Tiling) -> Result<ExtendedCore> {
    let base = t.base();
    let facets = base.is_full_dimensional().then(|| FacetDescription::new(base.center(), &base.generators()));
    let tiles: Vec<SignVector> = t.tiles().iter().cloned().collect();
    let mut components = Vec::with_capacity(tiles.len());
    for v in &tiles {
        let dim = t.tile_dim(v);
        let lf = local_fan(t, v)?;
        let center = t.tile(v).center();
        let in_core = facets.as_ref().is_some_and(|f| f.locate_int(&center) == Location::Interior);
        components.push(CoreComponent {
            tile: v.clone(),
            dim,
            is_proper: lf.complete,
            local_fan: lf,
            in_core,
            gm_weight: (dim == 0).then_some(center),
        });
    }
    let mut covers = Vec::new();
    for (i, a) in components.iter().enumerate() {
        for (j, b) in components.iter().enumerate() {
            if b.dim + 1 == a.dim && a.tile.conforms_to(&b.tile) {
                covers.push((i, j));
            }
        }
    }
    let irreducible = (0..components.len()).filter(|&i| components[i].dim == 0).collect();
    let core_nonempty = components.iter().any(|c| c.in_core);
    Ok(ExtendedCore { components, covers, irreducible, core_nonempty })
}

/// Rebuilds the tile polytopes from the vertex components alone: each cone
/// of the local fan at `eta` with generators `g_i` gives the tile
/// `eta + sum [0, 2] g_i`.
pub fn reconstruct_tiles(core: &ExtendedCore) -> BTreeSet<ShapeKey> {
    let mut out = BTreeSet::new();
    for &i in &core.irreducible {
        let comp = &core.components[i];
        let eta = comp.gm_weight.as_ref().expect("vertex components carry their weight");
        let d = eta.len();
        for cone in &comp.local_fan.fan.cones {
            let mut center = eta.clone();
            for g in &cone.generators {
                for (c, x) in center.iter_mut().zip(g) {
                    *c += x;
                }
            }
            let config = VectorConfig::new(d, cone.generators.clone()).expect("generators have length d");
            let sign = SignVector::zero(cone.generators.len());
            out.insert(Zonotope::new(config, sign, center).expect("consistent lengths").shape_key());
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroups {
    /// Rank of the equivariant class group, with basis the classes of the
    /// divisors `D_e^+`.
    pub equivariant_rank: usize,
    /// Kernel of forgetting the torus action.
    pub ker_forget: SubLattice,
    /// Invariant factors greater than one of `Z^E / ker_forget`.
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
    /// Equivariant Picard group inside the equivariant class group.
    pub pic: SubLattice,
}

pub fn class_groups(t: &Tiling) -> Result<ClassGroups> {
    let c = t.config();
    if !c.is_spanning() {
        return Err(Error::NonSpanning);
    }
    let n = c.len();
    let lattices = tiling_lattices(t);
    let ker_forget = perp_lattice(&lattices.relations);
    let inv = smith_invariants(&ker_forget.matrix());
    let torsion = inv.iter().filter(|x| !x.is_one()).cloned().collect();
    Ok(ClassGroups { equivariant_rank: n, free_rank: n - inv.len(), ker_forget, torsion, pic: lattices.support })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DivisorKind {
    NotCartier,
    Trivial,
    Ample,
    Nef,
    NoneOfThese,
}

/// Positivity of the divisor `sum r_e D_e^+`, reporting the strongest label.
pub fn classify_divisor(t: &Tiling, r: &[BigInt]) -> Result<DivisorKind> {
    let c = t.config();
    if !c.is_spanning() {
        return Err(Error::NonSpanning);
    }
    if r.len() != c.len() {
        return Err(Error::DimensionMismatch { expected: c.len(), found: r.len() });
    }
    let lattices = tiling_lattices(t);
    if !lattices.support.contains(r) {
        return Ok(DivisorKind::NotCartier);
    }
    if lattices.relations.is_orthogonal_to(r) {
        return Ok(DivisorKind::Trivial);
    }
    Ok(match convexity(t, r)? {
        Convexity::StrictlyConvex => DivisorKind::Ample,
        Convexity::Convex => DivisorKind::Nef,
        Convexity::NonConvex => DivisorKind::NoneOfThese,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryFlags {
    pub smooth: bool,
    pub qfactorial_terminal_sufficient: bool,
    pub projective_over_affinization: bool,
}

pub fn geometry_flags(t: &Tiling) -> GeometryFlags {
    let kinds: Vec<BlockKind> = t.tiles().iter().map(|v| classify_block(&t.tile(v))).collect();
    GeometryFlags {
        smooth: kinds.iter().all(|k| *k == BlockKind::Cube),
        qfactorial_terminal_sufficient: kinds.iter().all(|k| *k != BlockKind::General),
        projective_over_affinization: regularity(t).is_some(),
    }
}

/// The Lawrence fan of a tiling.
///
/// `(Z^E + Z^E) / Lambda`, with `Lambda` embedded by `l -> (l, -l)`, is
/// identified with `Z^k` through a basis of the orthogonal complement of
/// that embedding; `rho_e^+` and `rho_e^-` are the images of the unit
/// vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawrenceData {
    pub ambient_rank: usize,
    /// Rows giving the coordinates of the quotient.
    pub quotient_basis: Vec<Vec<BigInt>>,
    pub rays_plus: Vec<Vec<BigInt>>,
    pub rays_minus: Vec<Vec<BigInt>>,
    /// The cone `sigma(a, u)` of the base.
    pub base_cone: Cone,
    /// One cone per tile, in tile order.
    pub fan: Fan,
    pub cone_tiles: Vec<SignVector>,
    /// Every cone of the fan lies in the base cone.
    pub refines_base: bool,
    /// Every ray of the fan is an extremal ray of the base cone.
    pub rays_extremal: bool,
}

impl LawrenceData {
    /// Cone generators `-rho_e^eps` for `eps != v_e`, in the order
    /// `(e, +), (e, -)`.
    fn cone_of(&self, v: &SignVector) -> Cone {
        let mut generators = Vec::new();
        for e in 0..v.len() {
            for (plus, rays) in [(true, &self.rays_plus), (false, &self.rays_minus)] {
                let skip = if plus { v.get(e).value() == 1 } else { v.get(e).value() == -1 };
                if !skip {
                    generators.push(rays[e].iter().map(|x| -x).collect());
                }
            }
        }
        Cone { generators, lineality: SubLattice::zero(self.ambient_rank) }
    }

    /// Whether the divisor `sum r_e^+ D_e^+ + r_e^- D_e^-` is given by a
    /// rational linear function on each maximal cone.
    pub fn extends_linearly(&self, t: &Tiling, r_plus: &[BigInt], r_minus: &[BigInt]) -> bool {
        let n = r_plus.len();
        for v in t.maximal_tiles() {
            // Unknown m in Q^k with m . (-rho) = r on every generator.
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for e in 0..n {
                if v.get(e).value() != 1 {
                    rows.push(to_rational(&self.rays_plus[e].iter().map(|x| -x).collect::<Vec<_>>()));
                    rhs.push(num_rational::BigRational::from_integer(r_plus[e].clone()));
                }
                if v.get(e).value() != -1 {
                    rows.push(to_rational(&self.rays_minus[e].iter().map(|x| -x).collect::<Vec<_>>()));
                    rhs.push(num_rational::BigRational::from_integer(r_minus[e].clone()));
                }
            }
            if solve_rational(&rows, &rhs, self.ambient_rank).is_none() {
                return false;
            }
        }
        true
    }
}

pub fn lawrence_fan(t: &Tiling) -> LawrenceData {
    let c = t.config();
    let n = c.len();
    let relations = kernel_lattice(&c.matrix());
    let anti: Vec<Vec<BigInt>> = relations
        .basis()
        .iter()
        .map(|l| l.iter().cloned().chain(l.iter().map(|x| -x)).collect())
        .collect();
    let q = perp_lattice(&hermite_basis(&anti, 2 * n).expect("lengths match"));
    let k = q.rank();
    let column = |j: usize| -> Vec<BigInt> { q.basis().iter().map(|row| row[j].clone()).collect() };
    let mut data = LawrenceData {
        ambient_rank: k,
        quotient_basis: q.basis().to_vec(),
        rays_plus: (0..n).map(column).collect(),
        rays_minus: (0..n).map(|e| column(n + e)).collect(),
        base_cone: Cone { generators: Vec::new(), lineality: SubLattice::zero(k) },
        fan: Fan { ambient_dim: k, cones: Vec::new() },
        cone_tiles: t.tiles().iter().cloned().collect(),
        refines_base: true,
        rays_extremal: true,
    };
    data.base_cone = data.cone_of(t.base().sign());
    data.fan.cones = data.cone_tiles.iter().map(|v| data.cone_of(v)).collect();
    let base_gens: BTreeSet<Vec<BigInt>> = data.base_cone.generators.iter().cloned().collect();
    data.refines_base = data.fan.cones.iter().all(|cone| cone.generators.iter().all(|g| base_gens.contains(g)));
    let fan_rays: BTreeSet<Vec<BigInt>> = data.fan.cones.iter().flat_map(|cone| cone.rays()).collect();
    data.rays_extremal = fan_rays.iter().all(|r| is_extremal(r, &data.base_cone.generators, k));
    data
}

/// Whether the primitive vector `ray` spans an extremal ray of the pointed
/// cone generated by `gens`: it is not a nonnegative combination of the
/// generators pointing elsewhere.
fn is_extremal(ray: &[BigInt], gens: &[Vec<BigInt>], k: usize) -> bool {
    if !gens.iter().any(|g| primitive(g) == ray) {
        return false;
    }
    let others: Vec<&Vec<BigInt>> = gens.iter().filter(|g| primitive(g) != ray).collect();
    let m = others.len();
    let mut sys = LinearSystem::new(m + 1);
    for i in 0..k {
        let mut row: Vec<BigInt> = others.iter().map(|g| g[i].clone()).collect();
        row.push(-&ray[i]);
        sys.equality(row);
    }
    for j in 0..m {
        let mut l = vec![BigInt::zero(); m + 1];
        l[j] = BigInt::one();
        sys.weak(l);
    }
    let mut s = vec![BigInt::zero(); m + 1];
    s[m] = BigInt::one();
    sys.strict(s);
    feasible_strict(&sys).is_none()
}

/// A monomial `z^p w^q` invariant under the kernel torus.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialGen {
    pub p: Vec<BigInt>,
    pub q: Vec<BigInt>,
    /// The character `m` with `q - p = m o a`.
    pub t_weight: Vec<BigInt>,
    /// Total degree `sum p_e + q_e`.
    pub gm_weight: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingData {
    /// Exponent pairs `(p, q)` of invertible monomials, in `Z^E + Z^E`.
    pub units: SubLattice,
    /// Generators of the monoid of exponents modulo units.
    pub generators: Vec<MonomialGen>,
    /// Coefficient vectors `l` of the relations `sum l_e z_e w_e = 0`.
    pub moment_relations: Vec<Vec<BigInt>>,
}

/// Largest number of vectors accepted by [`invariant_ring_data`].
pub const RING_MAX_ELEMENTS: usize = 8;

/// Exponent data for the ring of invariants of the localized affine
/// variety at the sign vector `u`.
///
/// Exponents are parametrized by `(p, m)` with `q = p + m o a`. The monoid
/// is cut out by the forms `p_e` (`u_e != +`) and `q_e` (`u_e != -`); its
/// units are the kernel of those forms, and modulo units it is the
/// nonnegative part of their image lattice, whose Hilbert basis is read off
/// the Graver basis.
pub fn invariant_ring_data(c: &VectorConfig, u: &SignVector) -> Result<RingData> {
    let n = c.len();
    let d = c.rank();
    if u.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: u.len() });
    }
    if !c.is_primitive() {
        return Err(Error::NonPrimitive);
    }
    if n > RING_MAX_ELEMENTS {
        return Err(Error::ScaleGuard { what: "number of vectors", limit: RING_MAX_ELEMENTS, found: n });
    }
    let vars = n + d;
    // Forms as rows over (p, m).
    let mut forms: Vec<Vec<BigInt>> = Vec::new();
    for e in 0..n {
        if u.get(e).value() != 1 {
            let mut row = vec![BigInt::zero(); vars];
            row[e] = BigInt::one();
            forms.push(row);
        }
        if u.get(e).value() != -1 {
            let mut row = vec![BigInt::zero(); vars];
            row[e] = BigInt::one();
            for (i, x) in c.vector(e).iter().enumerate() {
                row[n + i] = x.clone();
            }
            forms.push(row);
        }
    }
    let f = forms.len();
    // Tagged rows (B x_i | x_i) for the unit vectors x_i of (p, m).
    let mut tagged: Vec<Vec<BigInt>> = (0..vars)
        .map(|i| {
            let mut row: Vec<BigInt> = forms.iter().map(|fr| fr[i].clone()).collect();
            row.extend((0..vars).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let rank = echelonize(&mut tagged, f, false);
    let image: Vec<Vec<BigInt>> = tagged[..rank].iter().map(|r| r[..f].to_vec()).collect();
    let kernel: Vec<Vec<BigInt>> = tagged[rank..].iter().map(|r| r[f..].to_vec()).collect();
    let kernel = hermite_basis(&kernel, vars).expect("lengths match").basis().to_vec();

    let to_pair = |x: &[BigInt]| -> (Vec<BigInt>, Vec<BigInt>) {
        let p = x[..n].to_vec();
        let q = (0..n).map(|e| &p[e] + c.vector(e).iter().zip(&x[n..]).map(|(a, m)| a * m).sum::<BigInt>()).collect();
        (p, q)
    };
    let unit_pairs: Vec<Vec<BigInt>> = kernel
        .iter()
        .map(|x| {
            let (p, q) = to_pair(x);
            p.into_iter().chain(q).collect()
        })
        .collect();
    let units = hermite_basis(&unit_pairs, 2 * n).expect("lengths match");

    let graver = graver_basis(&image)?;
    let mut generators = Vec::new();
    for y in graver.iter().filter(|g| g.iter().all(|&x| x >= 0)) {
        let y: Vec<BigInt> = y.iter().map(|&x| BigInt::from(x)).collect();
        let mut x = vec![BigInt::zero(); vars];
        let mut rest = y.clone();
        for row in &tagged[..rank] {
            let pc = row[..f].iter().position(|v| !v.is_zero()).expect("pivot rows are nonzero");
            let coef = &rest[pc] / &row[pc];
            debug_assert!((&coef * &row[pc]) == rest[pc]);
            for j in 0..f {
                rest[j] -= &coef * &row[j];
            }
            for j in 0..vars {
                x[j] += &coef * &row[f + j];
            }
        }
        debug_assert!(rest.iter().all(Zero::is_zero));
        let x = descend(x, &kernel, n, &to_pair);
        let (p, q) = to_pair(&x);
        let gm_weight = p.iter().chain(&q).sum();
        generators.push(MonomialGen { t_weight: x[n..].to_vec(), gm_weight, p, q });
    }
    generators.sort_by(|a, b| (&a.gm_weight, &a.t_weight, &a.p, &a.q).cmp(&(&b.gm_weight, &b.t_weight, &b.p, &b.q)));
    let moment_relations = kernel_lattice(&c.matrix()).basis().to_vec();
    Ok(RingData { units, generators, moment_relations })
}

/// Canonical representative of `x` modulo the unit lattice: repeatedly
/// moves by a unit basis vector while that lowers the key
/// `(|(p, q)|_1, |m|_1, (p, q))`.
fn descend(
    mut x: Vec<BigInt>,
    units: &[Vec<BigInt>],
    n: usize,
    pair: &impl Fn(&[BigInt]) -> (Vec<BigInt>, Vec<BigInt>),
) -> Vec<BigInt> {
    let key = |x: &[BigInt]| {
        let (p, q) = pair(x);
        let l1: BigInt = p.iter().chain(&q).map(|v| v.abs()).sum();
        let m1: BigInt = x[n..].iter().map(|v| v.abs()).sum();
        (l1, m1, p, q)
    };
    let mut best = key(&x);
    'outer: loop {
        for u in units {
            for sign in [1i32, -1] {
                let y: Vec<BigInt> = x.iter().zip(u).map(|(a, b)| if sign > 0 { a + b } else { a - b }).collect();
                let k = key(&y);
                if k < best {
                    x = y;
                    best = k;
                    continue 'outer;
                }
            }
        }
        return x;
    }
}

/// Graver basis of the lattice spanned by `basis` in `Z^k`, by completion:
/// sums of pairs are reduced by conformal subtraction until every sum
/// reduces to zero.
fn graver_basis(basis: &[Vec<BigInt>]) -> Result<Vec<Vec<i64>>> {
    let small = |v: &Vec<BigInt>| -> Result<Vec<i64>> {
        v.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect()
    };
    let mut g: Vec<Vec<i64>> = Vec::new();
    for b in basis {
        let b = small(b)?;
        g.push(b.iter().map(|x| -x).collect());
        g.push(b);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..g.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let s = g[i].iter().zip(&g[j]).map(|(a, b)| a.checked_add(*b)).collect::<Option<Vec<i64>>>().ok_or(Error::Overflow)?;
        let r = reduce(s, &g);
        if r.iter().any(|&x| x != 0) {
            let idx = g.len();
            for other in 0..idx {
                pairs.push((other, idx));
            }
            g.push(r);
        }
    }
    let mut out: Vec<Vec<i64>> = Vec::new();
    for (i, v) in g.iter().enumerate() {
        let minimal = g.iter().enumerate().all(|(j, w)| j == i || !conformal_le(w, v) || w == v);
        if minimal && v.iter().any(|&x| x != 0) {
            out.push(v.clone());
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn conformal_le(a: &[i64], b: &[i64]) -> bool {
    a.iter().any(|&x| x != 0) && a.iter().zip(b).all(|(&x, &y)| x == 0 || (x.signum() == y.signum() && x.abs() <= y.abs()))
}

fn reduce(mut s: Vec<i64>, g: &[Vec<i64>]) -> Vec<i64> {
    'outer: loop {
        if s.iter().all(|&x| x == 0) {
            return s;
        }
        for h in g {
            if conformal_le(h, &s) {
                for (x, y) in s.iter_mut().zip(h) {
                    *x -= y;
                }
                continue 'outer;
            }
        }
        return s;
    }
}
