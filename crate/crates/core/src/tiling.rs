//! Tilings of zonotopes in sign-vector form.
//!
//! A tiling of `Z(a, u) + eta` is stored as the set of sign vectors `v̂`
//! (agreeing with `u` where `u` is nonzero) whose zonotopes `Z(a, v̂) + eta`
//! are its tiles.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{hermite_basis, rational_rank, to_rational, SubLattice};
use crate::zonotope::{
    boxes_meet, contains_point, face_signs, normalize_direction, sweep_covectors, AffineBox,
    FacetDescription, Location, ShapeKey, Sign, SignVector, Sweep, VectorConfig, Zonotope,
};

/// Integer lift `r` of a configuration.
pub type Lift = Vec<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tiling {
    base: Zonotope,
    tiles: BTreeSet<SignVector>,
}

/// A failed tiling axiom, naming the tiles involved.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    /// The tile has the wrong number of entries.
    WrongLength { tile: SignVector },
    /// The tile disagrees with the base sign vector where that is nonzero.
    SignMismatch { tile: SignVector },
    /// Two tiles describe the same polytope.
    DuplicatePolytope { first: SignVector, second: SignVector },
    /// A face of a tile is missing from the tile set.
    MissingFace { tile: SignVector, face: SignVector },
    /// A lower-dimensional tile lies in no full-dimensional tile.
    Stray { tile: SignVector },
    /// The full-dimensional tiles do not add up to the base volume.
    VolumeMismatch { expected: BigInt, found: BigInt },
    /// Two full-dimensional tiles share interior points.
    InteriorOverlap { first: SignVector, second: SignVector },
    /// Two tiles meet in a set that is not a face of both.
    ImproperIntersection { first: SignVector, second: SignVector },
}

impl Violation {
    fn map_tiles(self, f: &impl Fn(SignVector) -> SignVector) -> Violation {
        use Violation::*;
        match self {
            WrongLength { tile } => WrongLength { tile: f(tile) },
            SignMismatch { tile } => SignMismatch { tile: f(tile) },
            DuplicatePolytope { first, second } => DuplicatePolytope { first: f(first), second: f(second) },
            MissingFace { tile, face } => MissingFace { tile: f(tile), face: f(face) },
            Stray { tile } => Stray { tile: f(tile) },
            VolumeMismatch { expected, found } => VolumeMismatch { expected, found },
            InteriorOverlap { first, second } => InteriorOverlap { first: f(first), second: f(second) },
            ImproperIntersection { first, second } => ImproperIntersection { first: f(first), second: f(second) },
        }
    }
}

impl Tiling {
    /// Wraps tile sign vectors (full length `|E|`) without validating them.
    pub fn new(base: Zonotope, tiles: impl IntoIterator<Item = SignVector>) -> Self {
        Tiling { base, tiles: tiles.into_iter().collect() }
    }

    /// Tiles given over `E_u` only are completed with the base signs.
    pub fn from_restricted(base: Zonotope, tiles: impl IntoIterator<Item = SignVector>) -> Result<Self> {
        let free = base.free_elements();
        let mut out = BTreeSet::new();
        for t in tiles {
            if t.len() != free.len() {
                return Err(Error::DimensionMismatch { expected: free.len(), found: t.len() });
            }
            out.insert(base.sign().fill(&free, &t));
        }
        Ok(Tiling { base, tiles: out })
    }

    /// The tiling consisting of the base and all of its faces.
    pub fn trivial(base: Zonotope) -> Self {
        let tiles = face_signs(&base);
        Tiling::new(base, tiles)
    }

    /// Closes a set of tiles under taking faces.
    pub fn from_maximal(base: Zonotope, maximal: impl IntoIterator<Item = SignVector>) -> Self {
        let mut tiles = BTreeSet::new();
        for m in maximal {
            tiles.extend(face_signs(&base.sibling(m)));
        }
        Tiling { base, tiles }
    }

    pub fn base(&self) -> &Zonotope {
        &self.base
    }

    pub fn config(&self) -> &VectorConfig {
        self.base.config()
    }

    pub fn tiles(&self) -> &BTreeSet<SignVector> {
        &self.tiles
    }

    pub fn contains_tile(&self, v: &SignVector) -> bool {
        self.tiles.contains(v)
    }

    pub fn tile(&self, v: &SignVector) -> Zonotope {
        self.base.sibling(v.clone())
    }

    pub fn tile_dim(&self, v: &SignVector) -> usize {
        rational_rank(&self.config().subset(&v.zero_set()), self.config().rank())
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// Tiles of the same dimension as the base.
    pub fn maximal_tiles(&self) -> Vec<SignVector> {
        let d = self.dim();
        self.tiles.iter().filter(|v| self.tile_dim(v) == d).cloned().collect()
    }

    pub fn tiles_of_dim(&self, k: usize) -> Vec<SignVector> {
        self.tiles.iter().filter(|v| self.tile_dim(v) == k).cloned().collect()
    }

    /// Zero-dimensional tiles.
    pub fn vertex_tiles(&self) -> Vec<SignVector> {
        self.tiles_of_dim(0)
    }

    /// Points of the zero-dimensional tiles, sorted.
    pub fn vertices(&self) -> Vec<Vec<BigInt>> {
        let set: BTreeSet<Vec<BigInt>> = self.vertex_tiles().iter().map(|v| self.tile(v).center()).collect();
        set.into_iter().collect()
    }

    /// Tiles having `v` as a face (including `v`).
    pub fn tiles_containing(&self, v: &SignVector) -> Vec<SignVector> {
        self.tiles.iter().filter(|w| w.conforms_to(v)).cloned().collect()
    }

    /// The set of tile polytopes.
    pub fn polytopes(&self) -> BTreeSet<ShapeKey> {
        self.tiles.iter().map(|v| self.tile(v).shape_key()).collect()
    }

    /// Same base and same tile polytopes, ignoring the sign presentation.
    pub fn same_polytopes(&self, other: &Tiling) -> bool {
        self.base.same_polytope(&other.base) && self.polytopes() == other.polytopes()
    }

    /// The tiling moved by an integer vector.
    pub fn translated(&self, shift: &[BigInt]) -> Result<Tiling> {
        let t: Vec<BigInt> = self.base.translation().iter().zip(shift).map(|(a, b)| a + b).collect();
        let base = Zonotope::new(self.config().clone(), self.base.sign().clone(), t)?;
        Ok(Tiling { base, tiles: self.tiles.clone() })
    }

    /// The same tiling written over the free elements of the base, in
    /// coordinates of their span, so that the base is full-dimensional.
    /// Translations are dropped; they do not affect the combinatorics.
    pub(crate) fn reduced(&self) -> Tiling {
        let free = self.base.free_elements();
        let sub = VectorConfig::new(self.config().rank(), self.config().subset(&free)).expect("same rank");
        let (config, _) = sub.reduce_to_span();
        let base = Zonotope::centered(config);
        Tiling { base, tiles: self.tiles.iter().map(|v| v.restrict(&free)).collect() }
    }

    /// Pairs of adjacent full-dimensional tiles with their common wall.
    pub fn adjacent_pairs(&self) -> Vec<(SignVector, SignVector, SignVector)> {
        let d = self.dim();
        if d == 0 {
            return Vec::new();
        }
        let maximal = self.maximal_tiles();
        let mut out = Vec::new();
        for wall in self.tiles_of_dim(d - 1) {
            let around: Vec<&SignVector> = maximal.iter().filter(|m| m.conforms_to(&wall)).collect();
            if around.len() == 2 {
                out.push((around[0].clone(), around[1].clone(), wall));
            }
        }
        out.sort();
        out
    }
}

/// Checks the tiling axioms, listing every violation found.
pub fn validate_tiling(t: &Tiling) -> core::result::Result<(), Vec<Violation>> {
    let n = t.config().len();
    let mut bad = Vec::new();
    for v in t.tiles() {
        if v.len() != n {
            bad.push(Violation::WrongLength { tile: v.clone() });
        } else if !t.base.sign().conforms_to(v) {
            bad.push(Violation::SignMismatch { tile: v.clone() });
        }
    }
    if !bad.is_empty() {
        return Err(bad);
    }
    if !t.base.is_full_dimensional() {
        let free = t.base.free_elements();
        let lift = |v: SignVector| t.base.sign().fill(&free, &v);
        return validate_tiling(&t.reduced()).map_err(|vs| {
            let mut out: Vec<Violation> = vs.into_iter().map(|v| v.map_tiles(&lift)).collect();
            out.sort();
            out
        });
    }
    let work = t.clone();

    let mut seen: BTreeMap<ShapeKey, &SignVector> = BTreeMap::new();
    for v in work.tiles() {
        if let Some(prev) = seen.insert(work.tile(v).shape_key(), v) {
            bad.push(Violation::DuplicatePolytope { first: prev.clone(), second: v.clone() });
        }
    }

    let mut faces_of: BTreeMap<SignVector, Vec<SignVector>> = BTreeMap::new();
    for v in work.tiles() {
        let fs = face_signs(&work.tile(v));
        for f in &fs {
            if !work.contains_tile(f) {
                bad.push(Violation::MissingFace { tile: v.clone(), face: f.clone() });
            }
        }
        faces_of.insert(v.clone(), fs);
    }

    let maximal = work.maximal_tiles();
    for v in work.tiles() {
        if !maximal.iter().any(|m| m.conforms_to(v)) {
            bad.push(Violation::Stray { tile: v.clone() });
        }
    }

    let expected = work.base.volume();
    let found: BigInt = maximal.iter().map(|m| work.tile(m).volume()).sum();
    if expected != found {
        bad.push(Violation::VolumeMismatch { expected, found });
    }

    let geo: Vec<TileGeometry> = maximal.iter().map(|m| TileGeometry::new(&work, m)).collect();
    for i in 0..maximal.len() {
        for j in i + 1..maximal.len() {
            match pair_relation(&work, &geo[i], &geo[j], &faces_of) {
                PairRelation::Disjoint | PairRelation::FaceToFace => {}
                PairRelation::Overlap => bad.push(Violation::InteriorOverlap {
                    first: maximal[i].clone(),
                    second: maximal[j].clone(),
                }),
                PairRelation::Improper => bad.push(Violation::ImproperIntersection {
                    first: maximal[i].clone(),
                    second: maximal[j].clone(),
                }),
            }
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        bad.sort();
        bad.dedup();
        Err(bad)
    }
}

/// Cached geometry of a full-dimensional tile of a full-dimensional base.
struct TileGeometry {
    sign: SignVector,
    center: Vec<BigInt>,
    gens: Vec<Vec<BigInt>>,
    facets: FacetDescription,
    /// Vertex sign vectors with their points.
    vertices: Vec<(SignVector, Vec<BigInt>)>,
}

impl TileGeometry {
    fn new(t: &Tiling, v: &SignVector) -> Self {
        let z = t.tile(v);
        let center = z.center();
        let gens = z.generators();
        let facets = FacetDescription::new(center.clone(), &gens);
        let vertices = z.vertex_signs().into_iter().map(|s| (s.clone(), z.sibling(s).center())).collect();
        TileGeometry { sign: v.clone(), center, gens, facets, vertices }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PairRelation {
    Disjoint,
    FaceToFace,
    Overlap,
    Improper,
}

/// Relative position of two full-dimensional zonotopes.
///
/// Closed and open intersection reduce to locating the difference of the
/// centers in the zonotope generated by both generator sets. For touching
/// tiles, the intersection is a face of `F` iff every face of `F` whose
/// relative interior meets `G` lies inside `G` (the largest such face is the
/// intersection itself).
fn pair_relation(
    t: &Tiling,
    a: &TileGeometry,
    b: &TileGeometry,
    faces_of: &BTreeMap<SignVector, Vec<SignVector>>,
) -> PairRelation {
    let mut gens = a.gens.clone();
    gens.extend(b.gens.iter().cloned());
    let sum = FacetDescription::new(vec![BigInt::zero(); a.center.len()], &gens);
    let diff: Vec<BigInt> = b.center.iter().zip(&a.center).map(|(x, y)| x - y).collect();
    match sum.locate_int(&diff) {
        Location::Outside => PairRelation::Disjoint,
        Location::Interior => PairRelation::Overlap,
        Location::Boundary => {
            if face_inside(t, a, b, faces_of) && face_inside(t, b, a, faces_of) {
                PairRelation::FaceToFace
            } else {
                PairRelation::Improper
            }
        }
    }
}

fn face_inside(
    t: &Tiling,
    a: &TileGeometry,
    b: &TileGeometry,
    faces_of: &BTreeMap<SignVector, Vec<SignVector>>,
) -> bool {
    let other = AffineBox::of(&t.tile(&b.sign), false);
    let empty = Vec::new();
    for h in faces_of.get(&a.sign).unwrap_or(&empty) {
        let inside = a
            .vertices
            .iter()
            .filter(|(s, _)| h.conforms_to(s))
            .all(|(_, p)| b.facets.locate_int(p) != Location::Outside);
        if inside {
            continue;
        }
        if boxes_meet(&AffineBox::of(&t.tile(h), true), &other) {
            return false;
        }
    }
    true
}

/// The tiling `T(a, r)` cut out by the lift `r`, and the values of the
/// upper envelope `psi(a, r)` at its vertices.
///
/// The tiles are the sign vectors of `(m . a_e + s r_e)_e` with `s > 0`,
/// found as covectors of the lifted configuration `(a_e, r_e)` together with
/// `(0, ..., 0, 1)` forced positive.
pub fn tiling_from_lift(c: &VectorConfig, r: &[BigInt]) -> Result<(Tiling, BTreeMap<Vec<BigInt>, BigInt>)> {
    if r.len() != c.len() {
        return Err(Error::DimensionMismatch { expected: c.len(), found: r.len() });
    }
    if !c.is_spanning() {
        return Err(Error::NonSpanning);
    }
    let d = c.rank();
    let n = c.len();
    let mut lifted: Vec<Vec<BigInt>> = c
        .vectors()
        .iter()
        .zip(r)
        .map(|(a, re)| {
            let mut v = a.clone();
            v.push(re.clone());
            v
        })
        .collect();
    let mut inf = vec![BigInt::zero(); d + 1];
    inf[d] = BigInt::one();
    lifted.push(inf);
    let cov = sweep_covectors(&lifted, d + 1, Sweep { forced: Some((n, Sign::Plus)), full_support: false });
    let all: Vec<usize> = (0..n).collect();
    let tiles: BTreeSet<SignVector> = cov.iter().map(|v| v.restrict(&all)).collect();
    let base = Zonotope::centered(c.clone());
    let tiling = Tiling::new(base, tiles);
    let mut psi = BTreeMap::new();
    for v in tiling.vertex_tiles() {
        let value: BigInt = (0..n).map(|e| v.get(e).to_int() * &r[e]).sum();
        psi.insert(tiling.tile(&v).center(), value);
    }
    Ok((tiling, psi))
}

/// Largest inputs accepted by [`enumerate_tilings`].
pub const ENUMERATION_MAX_RANK: usize = 3;
pub const ENUMERATION_MAX_ELEMENTS: usize = 6;

struct Candidate {
    reps: Vec<SignVector>,
    geometry: TileGeometry,
    volume: BigInt,
}

/// All tilings of `Z(a)`, up to equality of tile polytopes.
///
/// Full-dimensional candidates `Z(a, w)` are grouped by polytope. A
/// backtracking search repeatedly picks the first candidate center not yet
/// covered and branches over the compatible candidates containing it, until
/// the volumes add up. Each cover is then given a consistent sign-vector
/// presentation and closed under faces.
pub fn enumerate_tilings(c: &VectorConfig) -> Result<Vec<Tiling>> {
    if c.rank() > ENUMERATION_MAX_RANK {
        return Err(Error::ScaleGuard { what: "rank", limit: ENUMERATION_MAX_RANK, found: c.rank() });
    }
    if c.len() > ENUMERATION_MAX_ELEMENTS {
        return Err(Error::ScaleGuard { what: "number of vectors", limit: ENUMERATION_MAX_ELEMENTS, found: c.len() });
    }
    let original = Zonotope::centered(c.clone());
    let work_config = if c.is_spanning() { c.clone() } else { c.reduce_to_span().0 };
    let base = Zonotope::centered(work_config.clone());
    let n = c.len();
    let d = work_config.rank();
    if d == 0 {
        return Ok(vec![Tiling::trivial(original)]);
    }
    let work = Tiling::new(base.clone(), []);

    let mut groups: BTreeMap<ShapeKey, Vec<SignVector>> = BTreeMap::new();
    for w in all_sign_vectors(n) {
        let z = base.sibling(w.clone());
        if z.dim() == d {
            groups.entry(z.shape_key()).or_default().push(w);
        }
    }
    let candidates: Vec<Candidate> = groups
        .into_values()
        .map(|reps| {
            let geometry = TileGeometry::new(&work, &reps[0]);
            let volume = base.sibling(reps[0].clone()).volume();
            Candidate { reps, geometry, volume }
        })
        .collect();
    let points: Vec<Vec<BigInt>> = candidates.iter().map(|c| c.geometry.center.clone()).collect();
    let covers: Vec<Vec<bool>> = candidates
        .iter()
        .map(|c| points.iter().map(|p| c.geometry.facets.locate_int(p) != Location::Outside).collect())
        .collect();
    let total = base.volume();

    let mut search = CoverSearch {
        work: &work,
        candidates: &candidates,
        covers: &covers,
        total: &total,
        compat: BTreeMap::new(),
        faces: BTreeMap::new(),
        found: BTreeSet::new(),
    };
    search.run(&mut Vec::new(), BigInt::zero());
    let found = core::mem::take(&mut search.found);

    let mut out = Vec::new();
    for cover in found {
        let groups: Vec<&Vec<SignVector>> = cover.iter().map(|&i| &candidates[i].reps).collect();
        let mut assigned = BTreeMap::new();
        let mut face_cache = BTreeMap::new();
        if let Some(maximal) = choose_presentation(&work, &groups, 0, &mut assigned, &mut face_cache) {
            let tiling = Tiling::from_maximal(original.clone(), maximal);
            if validate_tiling(&tiling).is_ok() {
                out.push(tiling);
            }
        }
    }
    out.sort_by(|a, b| (a.maximal_tiles().len(), a.tiles()).cmp(&(b.maximal_tiles().len(), b.tiles())));
    Ok(out)
}

fn all_sign_vectors(n: usize) -> Vec<SignVector> {
    let mut out = vec![SignVector::zero(0)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * 3);
        for v in &out {
            for s in [Sign::Minus, Sign::Zero, Sign::Plus] {
                let mut e = v.entries().to_vec();
                e.push(s);
                next.push(SignVector::new(e));
            }
        }
        out = next;
    }
    out
}

struct CoverSearch<'a> {
    work: &'a Tiling,
    candidates: &'a [Candidate],
    covers: &'a [Vec<bool>],
    total: &'a BigInt,
    compat: BTreeMap<(usize, usize), bool>,
    faces: BTreeMap<SignVector, Vec<SignVector>>,
    found: BTreeSet<Vec<usize>>,
}

impl CoverSearch<'_> {
    fn compatible(&mut self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        if let Some(&v) = self.compat.get(&key) {
            return v;
        }
        let (a, b) = (&self.candidates[key.0].geometry, &self.candidates[key.1].geometry);
        for g in [a, b] {
            if !self.faces.contains_key(&g.sign) {
                self.faces.insert(g.sign.clone(), face_signs(&self.work.tile(&g.sign)));
            }
        }
        let ok = matches!(
            pair_relation(self.work, a, b, &self.faces),
            PairRelation::Disjoint | PairRelation::FaceToFace
        );
        self.compat.insert(key, ok);
        ok
    }

    fn run(&mut self, chosen: &mut Vec<usize>, volume: BigInt) {
        if &volume == self.total {
            let mut c = chosen.clone();
            c.sort_unstable();
            self.found.insert(c);
            return;
        }
        let Some(p) = (0..self.covers.len()).find(|&p| !chosen.iter().any(|&i| self.covers[i][p])) else {
            return;
        };
        for i in 0..self.candidates.len() {
            if !self.covers[i][p] || chosen.contains(&i) {
                continue;
            }
            let v = &volume + &self.candidates[i].volume;
            if &v > self.total {
                continue;
            }
            if (0..chosen.len()).all(|k| self.compatible(i, chosen[k])) {
                chosen.push(i);
                self.run(chosen, v);
                chosen.pop();
            }
        }
    }
}

/// Picks one sign vector per polytope so that faces shared between tiles
/// get the same sign vector.
fn choose_presentation(
    work: &Tiling,
    groups: &[&Vec<SignVector>],
    k: usize,
    assigned: &mut BTreeMap<ShapeKey, SignVector>,
    face_cache: &mut BTreeMap<SignVector, Vec<(ShapeKey, SignVector)>>,
) -> Option<Vec<SignVector>> {
    if k == groups.len() {
        return Some(Vec::new());
    }
    for rep in groups[k] {
        let faces = face_cache
            .entry(rep.clone())
            .or_insert_with(|| {
                face_signs(&work.tile(rep)).into_iter().map(|f| (work.tile(&f).shape_key(), f)).collect()
            })
            .clone();
        if faces.iter().any(|(key, f)| assigned.get(key).is_some_and(|g| g != f)) {
            continue;
        }
        let added: Vec<ShapeKey> =
            faces.iter().filter(|(key, _)| !assigned.contains_key(key)).map(|(key, _)| key.clone()).collect();
        for (key, f) in &faces {
            assigned.entry(key.clone()).or_insert_with(|| f.clone());
        }
        if let Some(mut rest) = choose_presentation(work, groups, k + 1, assigned, face_cache) {
            rest.insert(0, rep.clone());
            return Some(rest);
        }
        for key in added {
            assigned.remove(&key);
        }
    }
    None
}

/// A rational polyhedral cone `cone(generators) + span(lineality)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    pub generators: Vec<Vec<BigInt>>,
    pub lineality: SubLattice,
}

impl Cone {
    pub fn ambient_dim(&self) -> usize {
        self.lineality.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        let mut all = self.generators.clone();
        all.extend(self.lineality.basis().iter().cloned());
        rational_rank(&all, self.ambient_dim())
    }

    /// Distinct primitive generator directions.
    pub fn rays(&self) -> BTreeSet<Vec<BigInt>> {
        self.generators.iter().filter(|g| g.iter().any(|x| !x.is_zero())).map(|g| crate::lattice::primitive(g)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub ambient_dim: usize,
    pub cones: Vec<Cone>,
}

/// The fan seen from a tile `F`: one cone `R_{>=0}(F' - F)` per tile
/// `F' ⊇ F`, listed together with `F'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFan {
    pub tile: SignVector,
    pub fan: Fan,
    pub cone_tiles: Vec<SignVector>,
    pub complete: bool,
}

/// Local fan of `t` at the tile `f`.
///
/// For `F = Z(a, v)` and `F' = Z(a, w)`, the cone `R_{>=0}(F' - F)` is
/// generated by `-v_e a_e` for `v_e != 0 = w_e`, with lineality
/// `span(a_e : v_e = 0)`. Completeness is decided by walls: the fan is
/// nonempty, every codimension-one cone lies in exactly two
/// full-dimensional cones, and full-dimensional cones are connected
/// through walls.
pub fn local_fan(t: &Tiling, f: &SignVector) -> Result<LocalFan> {
    if !t.contains_tile(f) {
        return Err(Error::TileNotInTiling);
    }
    let d = t.config().rank();
    let lineality = hermite_basis(&t.config().subset(&f.zero_set()), d)?;
    let containing = t.tiles_containing(f);
    let mut cones = Vec::new();
    for w in &containing {
        let generators = (0..t.config().len())
            .filter(|&e| f.get(e) != Sign::Zero && w.get(e) == Sign::Zero)
            .map(|e| {
                let s = f.get(e).neg().to_int();
                t.config().vector(e).iter().map(|x| x * &s).collect()
            })
            .collect();
        cones.push(Cone { generators, lineality: lineality.clone() });
    }
    let dims: Vec<usize> = containing.iter().map(|w| t.tile_dim(w)).collect();
    let full: Vec<usize> = (0..containing.len()).filter(|&i| dims[i] == d).collect();
    let mut complete = !full.is_empty();
    if complete && d > 0 {
        let walls: Vec<usize> = (0..containing.len()).filter(|&i| dims[i] + 1 == d).collect();
        let mut parent: Vec<usize> = (0..containing.len()).collect();
        for &wi in &walls {
            let around: Vec<usize> =
                full.iter().copied().filter(|&m| containing[m].conforms_to(&containing[wi])).collect();
            if around.len() != 2 {
                complete = false;
                break;
            }
            let (x, y) = (find(&mut parent, around[0]), find(&mut parent, around[1]));
            parent[x] = y;
        }
        if complete {
            let root = find(&mut parent, full[0]);
            complete = full.iter().all(|&m| find(&mut parent, m) == root);
        }
    }
    Ok(LocalFan { tile: f.clone(), fan: Fan { ambient_dim: d, cones }, cone_tiles: containing, complete })
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut j = i;
    while parent[j] != r {
        let next = parent[j];
        parent[j] = r;
        j = next;
    }
    r
}

/// Does every tile of `finer` lie in some tile of `coarser`?
pub fn is_refinement(finer: &Tiling, coarser: &Tiling) -> Result<bool> {
    if !finer.base().same_polytope(coarser.base()) {
        return Err(Error::DifferentBase);
    }
    let big: Vec<Zonotope> = coarser.maximal_tiles().iter().map(|m| coarser.tile(m)).collect();
    for m in finer.maximal_tiles() {
        let verts: Vec<Vec<BigRational>> = finer.tile(&m).vertices().iter().map(|p| to_rational(p)).collect();
        if !big.iter().any(|z| verts.iter().all(|p| contains_point(z, p))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of faces of the affine arrangement `{m : m . a_e + r_e = 0}`,
/// counted by testing every sign pattern of `m . a_e + r_e` directly.
pub fn arrangement_face_count(c: &VectorConfig, r: &[BigInt]) -> usize {
    let d = c.rank();
    let mut count = 0;
    for v in all_sign_vectors(c.len()) {
        let mut sys = crate::lp::LinearSystem::new(d + 1);
        let mut s_pos = vec![BigInt::zero(); d + 1];
        s_pos[d] = BigInt::one();
        sys.strict(s_pos);
        for e in 0..c.len() {
            let mut row = c.vector(e).to_vec();
            row.push(r[e].clone());
            match v.get(e) {
                Sign::Zero => {
                    sys.equality(row);
                }
                Sign::Plus => {
                    sys.strict(row);
                }
                Sign::Minus => {
                    sys.strict(row.iter().map(|x| -x).collect());
                }
            }
        }
        if crate::lp::feasible_strict(&sys).is_some() {
            count += 1;
        }
    }
    count
}

/// Directions of the edges of a tiling (primitive, first nonzero positive).
pub fn edge_directions(t: &Tiling) -> BTreeSet<Vec<BigInt>> {
    t.tiles_of_dim(1)
        .iter()
        .map(|v| normalize_direction(&t.config().subset(&v.zero_set())[0]))
        .collect()
}
