//! Vector configurations, sign vectors, covectors and zonotopes.
//!
//! For a configuration `a = (a_e)` in `Z^d`, a sign vector `u` and a lattice
//! point `eta`, the zonotope `Z(a, u) + eta` is
//! `eta + sum_{u_e = +} a_e - sum_{u_e = -} a_e + sum_{u_e = 0} [-1, 1] a_e`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    content, determinant, dot, hermite_basis, int_vec, kernel_lattice, rational_rank, saturation,
    solve_rational, to_rational, IntMatrix,
};
use crate::lp::{feasible_strict, LinearSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(x: &BigInt) -> Sign {
        match x.sign() {
            num_bigint::Sign::Minus => Sign::Minus,
            num_bigint::Sign::NoSign => Sign::Zero,
            num_bigint::Sign::Plus => Sign::Plus,
        }
    }

    pub fn of_rational(x: &BigRational) -> Sign {
        if x.is_positive() {
            Sign::Plus
        } else if x.is_negative() {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Zero => 0,
            Sign::Plus => 1,
        }
    }

    pub fn to_int(self) -> BigInt {
        BigInt::from(self.value())
    }

    pub fn neg(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }
}

/// An element of `{+, -, 0}^E`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(entries: Vec<Sign>) -> Self {
        SignVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        SignVector(vec![Sign::Zero; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Sign] {
        &self.0
    }

    pub fn get(&self, e: usize) -> Sign {
        self.0[e]
    }

    pub fn set(&mut self, e: usize, s: Sign) {
        self.0[e] = s;
    }

    /// Elements with a nonzero sign.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.0[e] != Sign::Zero).collect()
    }

    /// Elements with sign zero (the set `E_u`).
    pub fn zero_set(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.0[e] == Sign::Zero).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&s| s == Sign::Zero)
    }

    pub fn has_full_support(&self) -> bool {
        self.0.iter().all(|&s| s != Sign::Zero)
    }

    pub fn negate(&self) -> SignVector {
        SignVector(self.0.iter().map(|s| s.neg()).collect())
    }

    /// Conformal order: every nonzero entry of `self` agrees with `other`.
    ///
    /// For tiles this says that `Z(a, other)` is a face of `Z(a, self)`.
    pub fn conforms_to(&self, other: &SignVector) -> bool {
        self.len() == other.len()
            && self.0.iter().zip(&other.0).all(|(&s, &t)| s == Sign::Zero || s == t)
    }

    /// `self` where nonzero, `other` elsewhere.
    pub fn compose(&self, other: &SignVector) -> SignVector {
        SignVector(self.0.iter().zip(&other.0).map(|(&s, &t)| if s == Sign::Zero { t } else { s }).collect())
    }

    /// Replaces the entries on `positions` by the entries of `v`.
    pub fn fill(&self, positions: &[usize], v: &SignVector) -> SignVector {
        let mut out = self.clone();
        for (i, &e) in positions.iter().enumerate() {
            out.0[e] = v.0[i];
        }
        out
    }

    pub fn restrict(&self, positions: &[usize]) -> SignVector {
        SignVector(positions.iter().map(|&e| self.0[e]).collect())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|s| s.as_char()).collect();
        f.write_str(&s)
    }
}

impl FromStr for SignVector {
    type Err = char;

    /// Parses a string over `+`, `-`, `0`; the error is the first bad char.
    fn from_str(s: &str) -> core::result::Result<Self, char> {
        s.chars().map(|c| Sign::from_char(c).ok_or(c)).collect::<core::result::Result<Vec<_>, _>>().map(SignVector)
    }
}

/// A configuration of vectors `a_e` in `Z^rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorConfig {
    rank: usize,
    vectors: Vec<Vec<BigInt>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConfigFlags {
    pub primitive: bool,
    pub spanning: bool,
}

impl VectorConfig {
    pub fn new(rank: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != rank) {
            return Err(Error::DimensionMismatch { expected: rank, found: v.len() });
        }
        Ok(VectorConfig { rank, vectors })
    }

    /// # Panics
    /// If a vector does not have length `rank`.
    pub fn from_i64(rank: usize, vectors: &[&[i64]]) -> Self {
        Self::new(rank, vectors.iter().map(|v| int_vec(v)).collect()).expect("vector length differs from rank")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of elements `|E|`.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn vector(&self, e: usize) -> &[BigInt] {
        &self.vectors[e]
    }

    /// The `rank x |E|` matrix whose columns are the `a_e`.
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.vectors, self.rank).expect("checked lengths").transpose()
    }

    pub fn subset(&self, elements: &[usize]) -> Vec<Vec<BigInt>> {
        elements.iter().map(|&e| self.vectors[e].clone()).collect()
    }

    pub fn flags(&self) -> ConfigFlags {
        validate_config(self)
    }

    pub fn is_spanning(&self) -> bool {
        rational_rank(&self.vectors, self.rank) == self.rank
    }

    pub fn is_primitive(&self) -> bool {
        self.vectors.iter().all(|v| content(v).is_one())
    }

    /// Rewrites the vectors in a basis of the saturated lattice
    /// `Z^rank ∩ span(a)`, giving a spanning configuration of lower rank.
    ///
    /// Returns the new configuration and the basis (rows) used.
    pub fn reduce_to_span(&self) -> (VectorConfig, Vec<Vec<BigInt>>) {
        let span = hermite_basis(&self.vectors, self.rank).expect("checked lengths");
        let (sat, _) = saturation(&span);
        let basis = sat.basis().to_vec();
        let k = basis.len();
        let cols: Vec<Vec<BigRational>> = (0..self.rank).map(|i| basis.iter().map(|b| BigRational::from_integer(b[i].clone())).collect()).collect();
        let vectors = self
            .vectors
            .iter()
            .map(|v| {
                let x = solve_rational(&cols, &to_rational(v), k).expect("vector lies in its own span");
                x.into_iter().map(|c| c.to_integer()).collect()
            })
            .collect();
        (VectorConfig { rank: k, vectors }, basis)
    }
}

pub fn validate_config(c: &VectorConfig) -> ConfigFlags {
    ConfigFlags { primitive: c.is_primitive(), spanning: c.is_spanning() }
}

/// The set `V*(a)` of sign patterns of linear functionals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovectorSet {
    pub members: BTreeSet<SignVector>,
}

impl CovectorSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &SignVector) -> bool {
        self.members.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &SignVector> {
        self.members.iter()
    }
}

/// System in `m` whose solutions have sign pattern `u` on `vectors`.
pub(crate) fn sign_pattern_system(vectors: &[Vec<BigInt>], dim: usize, u: &SignVector) -> LinearSystem {
    let mut sys = LinearSystem::new(dim);
    for (v, &s) in vectors.iter().zip(u.entries()) {
        match s {
            Sign::Zero => {
                sys.equality(v.clone());
            }
            Sign::Plus => {
                sys.strict(v.clone());
            }
            Sign::Minus => {
                sys.strict(v.iter().map(|x| -x).collect());
            }
        }
    }
    sys
}

/// Is `u` the sign pattern of some linear functional on `vectors`?
pub fn is_covector(vectors: &[Vec<BigInt>], dim: usize, u: &SignVector) -> bool {
    u.len() == vectors.len() && feasible_strict(&sign_pattern_system(vectors, dim, u)).is_some()
}

/// Options for the covector sweep.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Sweep {
    /// Force one element to a sign (it is decided first).
    pub forced: Option<(usize, Sign)>,
    /// Only covectors with full support.
    pub full_support: bool,
}

/// All sign patterns `sign(m . v)` of functionals `m` on `vectors`.
///
/// Elements are decided one at a time; a partial pattern is extended only
/// while it stays feasible, so the work is bounded by `3^|E|` systems but is
/// proportional to the number of covectors of the prefixes in practice.
pub(crate) fn sweep_covectors(vectors: &[Vec<BigInt>], dim: usize, opts: Sweep) -> BTreeSet<SignVector> {
    let n = vectors.len();
    let mut order: Vec<usize> = (0..n).collect();
    if let Some((f, _)) = opts.forced {
        order.retain(|&e| e != f);
        order.insert(0, f);
    }
    let mut out = BTreeSet::new();
    let mut assign = vec![Sign::Zero; n];
    let mut sys = LinearSystem::new(dim);
    let witness = vec![BigRational::zero(); dim];
    sweep(vectors, &order, 0, &opts, &mut assign, &mut sys, &witness, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn sweep(
    vectors: &[Vec<BigInt>],
    order: &[usize],
    depth: usize,
    opts: &Sweep,
    assign: &mut Vec<Sign>,
    sys: &mut LinearSystem,
    witness: &[BigRational],
    out: &mut BTreeSet<SignVector>,
) {
    if depth == order.len() {
        out.insert(SignVector(assign.clone()));
        return;
    }
    let e = order[depth];
    let v = &vectors[e];
    let current: BigRational = v.iter().zip(witness).map(|(a, x)| x * BigRational::from_integer(a.clone())).sum();
    let known = Sign::of_rational(&current);
    let choices: &[Sign] = match opts.forced {
        Some((f, s)) if f == e => match s {
            Sign::Minus => &[Sign::Minus],
            Sign::Zero => &[Sign::Zero],
            Sign::Plus => &[Sign::Plus],
        },
        _ if opts.full_support => &[Sign::Minus, Sign::Plus],
        _ => &[Sign::Minus, Sign::Zero, Sign::Plus],
    };
    for &s in choices {
        match s {
            Sign::Zero => sys.equalities.push(v.clone()),
            Sign::Plus => sys.strict.push(v.clone()),
            Sign::Minus => sys.strict.push(v.iter().map(|x| -x).collect()),
        }
        let next = if s == known { Some(witness.to_vec()) } else { feasible_strict(sys) };
        if let Some(w) = next {
            assign[e] = s;
            sweep(vectors, order, depth + 1, opts, assign, sys, &w, out);
            assign[e] = Sign::Zero;
        }
        match s {
            Sign::Zero => {
                sys.equalities.pop();
            }
            _ => {
                sys.strict.pop();
            }
        }
    }
}

/// `V*(a)`: all covectors of the configuration.
pub fn covectors(c: &VectorConfig) -> CovectorSet {
    CovectorSet { members: sweep_covectors(&c.vectors, c.rank, Sweep::default()) }
}

/// A zonotope `Z(a, u) + translation`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Zonotope {
    config: VectorConfig,
    sign: SignVector,
    translation: Vec<BigInt>,
}

impl Zonotope {
    pub fn new(config: VectorConfig, sign: SignVector, translation: Vec<BigInt>) -> Result<Self> {
        if sign.len() != config.len() {
            return Err(Error::DimensionMismatch { expected: config.len(), found: sign.len() });
        }
        if translation.len() != config.rank() {
            return Err(Error::DimensionMismatch { expected: config.rank(), found: translation.len() });
        }
        Ok(Zonotope { config, sign, translation })
    }

    /// `Z(a)` itself: sign zero, no translation.
    pub fn centered(config: VectorConfig) -> Self {
        let n = config.len();
        let d = config.rank();
        Zonotope { config, sign: SignVector::zero(n), translation: vec![BigInt::zero(); d] }
    }

    pub fn with_sign(config: VectorConfig, sign: SignVector) -> Result<Self> {
        let d = config.rank();
        Self::new(config, sign, vec![BigInt::zero(); d])
    }

    pub fn config(&self) -> &VectorConfig {
        &self.config
    }

    pub fn sign(&self) -> &SignVector {
        &self.sign
    }

    pub fn translation(&self) -> &[BigInt] {
        &self.translation
    }

    /// The same configuration and translation with another sign vector.
    pub fn sibling(&self, sign: SignVector) -> Zonotope {
        Zonotope { config: self.config.clone(), sign, translation: self.translation.clone() }
    }

    /// Elements whose segment is not collapsed (`E_u`).
    pub fn free_elements(&self) -> Vec<usize> {
        self.sign.zero_set()
    }

    pub fn generators(&self) -> Vec<Vec<BigInt>> {
        self.config.subset(&self.free_elements())
    }

    pub fn center(&self) -> Vec<BigInt> {
        let mut c = self.translation.clone();
        for e in self.sign.support() {
            let s = self.sign.get(e).to_int();
            for (ci, ai) in c.iter_mut().zip(self.config.vector(e)) {
                *ci += &s * ai;
            }
        }
        c
    }

    pub fn dim(&self) -> usize {
        rational_rank(&self.generators(), self.config.rank())
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.config.rank()
    }

    /// Sign vectors `v̂` of the vertices (full support on `E_u`).
    pub fn vertex_signs(&self) -> Vec<SignVector> {
        let free = self.free_elements();
        let gens = self.config.subset(&free);
        sweep_covectors(&gens, self.config.rank(), Sweep { full_support: true, ..Sweep::default() })
            .into_iter()
            .map(|v| self.sign.fill(&free, &v))
            .collect()
    }

    /// Vertices, sorted.
    pub fn vertices(&self) -> Vec<Vec<BigInt>> {
        let set: BTreeSet<Vec<BigInt>> = self.vertex_signs().into_iter().map(|s| self.sibling(s).center()).collect();
        set.into_iter().collect()
    }

    /// Compares the underlying point sets.
    pub fn same_polytope(&self, other: &Zonotope) -> bool {
        self.shape_key() == other.shape_key()
    }

    /// A key that identifies the point set: the center together with the
    /// total length of the generators in each direction. A zonotope is the
    /// sum of its centered edge segments in a unique way, so two zonotopes
    /// are equal iff their keys are.
    pub fn shape_key(&self) -> ShapeKey {
        let mut lengths: BTreeMap<Vec<BigInt>, BigInt> = BTreeMap::new();
        for g in self.generators() {
            let dir = normalize_direction(&g);
            let len = content(&g);
            *lengths.entry(dir).or_insert_with(BigInt::zero) += len;
        }
        ShapeKey { center: self.center(), lengths: lengths.into_iter().collect() }
    }

    /// Volume relative to the lattice `Z^d ∩ span`, see [`vertices_and_volume`].
    pub fn volume(&self) -> BigInt {
        let gens = self.generators();
        let d = self.config.rank();
        let k = rational_rank(&gens, d);
        if k == 0 {
            return BigInt::one();
        }
        let coords: Vec<Vec<BigInt>> = if k == d {
            gens
        } else {
            let span = hermite_basis(&gens, d).expect("checked lengths");
            let basis = saturation(&span).0.basis().to_vec();
            let cols: Vec<Vec<BigRational>> =
                (0..d).map(|i| basis.iter().map(|b| BigRational::from_integer(b[i].clone())).collect()).collect();
            gens.iter()
                .map(|g| {
                    solve_rational(&cols, &to_rational(g), k)
                        .expect("generator lies in its span")
                        .into_iter()
                        .map(|x| x.to_integer())
                        .collect()
                })
                .collect()
        };
        let mut total = BigInt::zero();
        for subset in combinations(coords.len(), k) {
            let rows: Vec<Vec<BigInt>> = subset.iter().map(|&i| coords[i].clone()).collect();
            total += determinant(&IntMatrix::from_rows(&rows, k).expect("square")).abs();
        }
        total << k
    }
}

/// Identity of a zonotope as a point set, see [`Zonotope::shape_key`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeKey {
    pub center: Vec<BigInt>,
    pub lengths: Vec<(Vec<BigInt>, BigInt)>,
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { break };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// Every face `Z(a, v̂) + eta` of `z`, where `v` runs over the covectors of
/// the configuration restricted to `E_u`.
pub fn faces(z: &Zonotope) -> Result<Vec<Zonotope>> {
    if !z.sign.is_zero() && !is_covector(&z.config.vectors, z.config.rank, &z.sign) {
        return Err(Error::NotACovector);
    }
    Ok(face_signs(z).into_iter().map(|s| z.sibling(s)).collect())
}

/// Sign vectors `v̂` of all faces of `z` (no covector check on `z` itself).
pub fn face_signs(z: &Zonotope) -> Vec<SignVector> {
    let free = z.free_elements();
    let gens = z.config.subset(&free);
    // Distinct covectors of the restriction give distinct faces, so the
    // sign vectors are already deduplicated by vertex set.
    sweep_covectors(&gens, z.config.rank, Sweep::default()).into_iter().map(|v| z.sign.fill(&free, &v)).collect()
}

pub fn vertices_and_volume(z: &Zonotope) -> (Vec<Vec<BigInt>>, BigInt) {
    (z.vertices(), z.volume())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockKind {
    Cube,
    Parallelotope,
    General,
}

/// Cube if the free vectors form a basis of the lattice points of their
/// span, parallelotope if they are linearly independent, general otherwise.
pub fn classify_block(z: &Zonotope) -> BlockKind {
    let gens = z.generators();
    if gens.is_empty() {
        return BlockKind::Cube;
    }
    let d = z.config.rank();
    if rational_rank(&gens, d) < gens.len() {
        return BlockKind::General;
    }
    let span = hermite_basis(&gens, d).expect("checked lengths");
    if saturation(&span).1.is_one() {
        BlockKind::Cube
    } else {
        BlockKind::Parallelotope
    }
}

/// Outer facet description of a full-dimensional zonotope.
#[derive(Clone, Debug)]
pub struct FacetDescription {
    center: Vec<BigInt>,
    /// Pairs `(n, h)`: the zonotope satisfies `|n . (x - center)| <= h`.
    facets: Vec<(Vec<BigInt>, BigInt)>,
}

/// Where a point sits relative to a full-dimensional zonotope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Outside,
}

impl FacetDescription {
    /// # Panics
    /// If the generators do not span `Z^d`.
    pub fn new(center: Vec<BigInt>, gens: &[Vec<BigInt>]) -> Self {
        let d = center.len();
        assert_eq!(rational_rank(gens, d), d, "facet description needs a full-dimensional zonotope");
        let mut dirs: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        for g in gens {
            dirs.insert(normalize_direction(g));
        }
        let dirs: Vec<Vec<BigInt>> = dirs.into_iter().collect();
        let mut normals: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        for subset in combinations(dirs.len(), d - 1) {
            let rows: Vec<Vec<BigInt>> = subset.iter().map(|&i| dirs[i].clone()).collect();
            if rational_rank(&rows, d) != d - 1 {
                continue;
            }
            let m = IntMatrix::from_rows(&rows, d).expect("rows of length d");
            let ker = kernel_lattice(&m);
            normals.insert(normalize_direction(&ker.basis()[0]));
        }
        let facets = normals
            .into_iter()
            .map(|n| {
                let h: BigInt = gens.iter().map(|g| dot(&n, g).abs()).sum();
                (n, h)
            })
            .collect();
        FacetDescription { center, facets }
    }

    pub fn locate(&self, x: &[BigRational]) -> Location {
        let mut boundary = false;
        for (n, h) in &self.facets {
            let v: BigRational = n
                .iter()
                .zip(x.iter().zip(&self.center))
                .map(|(ni, (xi, ci))| (xi - BigRational::from_integer(ci.clone())) * BigRational::from_integer(ni.clone()))
                .sum();
            let h = BigRational::from_integer(h.clone());
            match v.abs().cmp(&h) {
                Ordering::Greater => return Location::Outside,
                Ordering::Equal => boundary = true,
                Ordering::Less => {}
            }
        }
        if boundary {
            Location::Boundary
        } else {
            Location::Interior
        }
    }

    pub fn locate_int(&self, x: &[BigInt]) -> Location {
        self.locate(&to_rational(x))
    }
}

/// Primitive vector with first nonzero entry positive.
pub fn normalize_direction(v: &[BigInt]) -> Vec<BigInt> {
    let g = content(v);
    if g.is_zero() {
        return v.to_vec();
    }
    let first_negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if first_negative { -g } else { g };
    v.iter().map(|x| x.div_floor(&g)).collect()
}

/// A relatively open or closed box image `center + sum [-1,1] g`.
#[derive(Clone, Debug)]
pub(crate) struct AffineBox {
    pub center: Vec<BigRational>,
    pub gens: Vec<Vec<BigInt>>,
    pub open: bool,
}

impl AffineBox {
    pub fn of(z: &Zonotope, open: bool) -> AffineBox {
        AffineBox { center: to_rational(&z.center()), gens: z.generators(), open }
    }

    pub fn point(p: &[BigRational]) -> AffineBox {
        AffineBox { center: p.to_vec(), gens: Vec::new(), open: false }
    }
}

/// Do the two sets intersect?
///
/// Unknowns are the box coordinates of both sides and a homogenizing
/// `lambda > 0`; open sides use strict bounds.
pub(crate) fn boxes_meet(a: &AffineBox, b: &AffineBox) -> bool {
    let d = a.center.len();
    let na = a.gens.len();
    let nb = b.gens.len();
    let dim = na + nb + 1;
    let diff: Vec<BigRational> = a.center.iter().zip(&b.center).map(|(x, y)| x - y).collect();
    let denom = diff.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut sys = LinearSystem::new(dim);
    for i in 0..d {
        let mut row = vec![BigInt::zero(); dim];
        for (j, g) in a.gens.iter().enumerate() {
            row[j] = &g[i] * &denom;
        }
        for (j, g) in b.gens.iter().enumerate() {
            row[na + j] = -(&g[i] * &denom);
        }
        row[dim - 1] = (&diff[i] * BigRational::from_integer(denom.clone())).to_integer();
        sys.equality(row);
    }
    let mut lam = vec![BigInt::zero(); dim];
    lam[dim - 1] = BigInt::one();
    sys.strict(lam);
    for (offset, count, open) in [(0, na, a.open), (na, nb, b.open)] {
        for j in 0..count {
            for s in [1i64, -1] {
                let mut row = vec![BigInt::zero(); dim];
                row[dim - 1] = BigInt::one();
                row[offset + j] = BigInt::from(s);
                if open {
                    sys.strict(row);
                } else {
                    sys.weak(row);
                }
            }
        }
    }
    feasible_strict(&sys).is_some()
}

/// Is the point in the closed zonotope?
pub fn contains_point(z: &Zonotope, p: &[BigRational]) -> bool {
    boxes_meet(&AffineBox::of(z, false), &AffineBox::point(p))
}

/// Is the point in the relative interior of the zonotope?
pub fn relint_contains_point(z: &Zonotope, p: &[BigRational]) -> bool {
    boxes_meet(&AffineBox::of(z, true), &AffineBox::point(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    fn hexagon() -> VectorConfig {
        VectorConfig::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]])
    }

    #[test]
    fn config_flags() {
        assert_eq!(validate_config(&hexagon()), ConfigFlags { primitive: true, spanning: true });
        let c = VectorConfig::from_i64(2, &[&[2, 0], &[0, 1]]);
        assert_eq!(validate_config(&c), ConfigFlags { primitive: false, spanning: true });
        let c = VectorConfig::from_i64(2, &[&[1, 0], &[-1, 0]]);
        assert_eq!(validate_config(&c), ConfigFlags { primitive: true, spanning: false });
        let c = VectorConfig::new(2, Vec::new()).unwrap();
        assert!(!validate_config(&c).spanning);
    }

    #[test]
    fn covector_examples() {
        let c = VectorConfig::from_i64(1, &[&[1], &[-1]]);
        let cov: Vec<String> = covectors(&c).iter().map(|v| v.to_string()).collect();
        assert_eq!(cov, ["-+", "00", "+-"]);
        assert_eq!(covectors(&hexagon()).len(), 13);
        assert_eq!(covectors(&VectorConfig::from_i64(2, &[&[1, 0], &[0, 1]])).len(), 9);
    }

    #[test]
    fn face_examples() {
        assert_eq!(faces(&Zonotope::centered(hexagon())).unwrap().len(), 13);
        let square = Zonotope::centered(VectorConfig::from_i64(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(faces(&square).unwrap().len(), 9);
        let interval = Zonotope::centered(VectorConfig::from_i64(1, &[&[1], &[1]]));
        let f: Vec<Vec<Vec<BigInt>>> = faces(&interval).unwrap().iter().map(|z| z.vertices()).collect();
        assert_eq!(f.len(), 3);
        assert!(f.contains(&vec![int_vec(&[-2]), int_vec(&[2])]));
        let bad = Zonotope::with_sign(hexagon(), sv("++-")).unwrap();
        assert_eq!(faces(&bad), Err(Error::NotACovector));
    }

    #[test]
    fn hexagon_vertices_and_volume() {
        let (v, vol) = vertices_and_volume(&Zonotope::centered(hexagon()));
        let expected: BTreeSet<Vec<BigInt>> =
            [[2, 2], [2, 0], [0, -2], [-2, -2], [-2, 0], [0, 2]].iter().map(|p| int_vec(p)).collect();
        assert_eq!(v.into_iter().collect::<BTreeSet<_>>(), expected);
        assert_eq!(vol, BigInt::from(12));
    }

    #[test]
    fn volumes() {
        let square = Zonotope::centered(VectorConfig::from_i64(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(square.volume(), BigInt::from(4));
        for r in 1..5 {
            let c = VectorConfig::new(1, vec![int_vec(&[1]); r]).unwrap();
            assert_eq!(Zonotope::centered(c).volume(), BigInt::from(2 * r));
        }
        // An edge of the hexagon in direction (1,1) has lattice length 2.
        let edge = Zonotope::with_sign(hexagon(), sv("+-0")).unwrap();
        assert_eq!(edge.volume(), BigInt::from(2));
        let point = Zonotope::with_sign(hexagon(), sv("+-+")).unwrap();
        assert_eq!(point.volume(), BigInt::one());
    }

    #[test]
    fn block_kinds() {
        let cube = Zonotope::centered(VectorConfig::from_i64(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(classify_block(&cube), BlockKind::Cube);
        let par = Zonotope::centered(VectorConfig::from_i64(2, &[&[1, 1], &[1, -1]]));
        assert_eq!(classify_block(&par), BlockKind::Parallelotope);
        assert_eq!(classify_block(&Zonotope::centered(hexagon())), BlockKind::General);
        let vertex = Zonotope::with_sign(hexagon(), sv("+++")).unwrap();
        assert_eq!(classify_block(&vertex), BlockKind::Cube);
    }

    #[test]
    fn reduce_to_span_keeps_geometry() {
        let c = VectorConfig::from_i64(3, &[&[1, 1, 0], &[0, 0, 1], &[1, 1, 2]]);
        let (r, basis) = c.reduce_to_span();
        assert_eq!(r.rank(), 2);
        assert_eq!(basis.len(), 2);
        assert_eq!(Zonotope::centered(r).volume(), Zonotope::centered(c).volume());
    }

    #[test]
    fn facet_description_locates() {
        let fd = FacetDescription::new(int_vec(&[0, 0]), hexagon().vectors());
        assert_eq!(fd.locate_int(&int_vec(&[0, 0])), Location::Interior);
        assert_eq!(fd.locate_int(&int_vec(&[2, 2])), Location::Boundary);
        assert_eq!(fd.locate_int(&int_vec(&[2, -1])), Location::Outside);
        let fd = FacetDescription::new(int_vec(&[1]), &[int_vec(&[1])]);
        assert_eq!(fd.locate_int(&int_vec(&[0])), Location::Boundary);
    }

    #[test]
    fn point_membership() {
        let z = Zonotope::centered(hexagon());
        let p = to_rational(&int_vec(&[2, 2]));
        assert!(contains_point(&z, &p));
        assert!(!relint_contains_point(&z, &p));
        assert!(!contains_point(&z, &to_rational(&int_vec(&[2, -1]))));
    }

    #[test]
    fn sign_vector_order() {
        assert!(sv("0+0").conforms_to(&sv("-+0")));
        assert!(!sv("0+0").conforms_to(&sv("--0")));
        assert_eq!(sv("0+0").compose(&sv("-+-")), sv("-+-"));
        assert_eq!("+x".parse::<SignVector>(), Err('x'));
    }
}
