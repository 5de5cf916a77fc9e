//! Shared fixtures and the brute-force oracles used by the integration tests.

#![allow(dead_code)]

pub mod fm;

use hypertile_core::lattice::int_vec;
use hypertile_core::tiling::{tiling_from_lift, Tiling};
use hypertile_core::zonotope::{Sign, SignVector, VectorConfig, Zonotope};

pub fn sv(s: &str) -> SignVector {
    s.parse().unwrap()
}

pub fn hexagon() -> VectorConfig {
    VectorConfig::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]])
}

/// The hexagon tiled by three rhombi around the origin.
pub fn hexagon_cubes() -> Tiling {
    tiling_from_lift(&hexagon(), &int_vec(&[1, 0, 0])).unwrap().0
}

pub fn hexagon_trivial() -> Tiling {
    Tiling::trivial(Zonotope::centered(hexagon()))
}

/// `Z((1, -1))` cut at the origin into `[-2, 0]` and `[0, 2]`.
pub fn tp1() -> Tiling {
    let c = VectorConfig::from_i64(1, &[&[1], &[-1]]);
    Tiling::from_maximal(Zonotope::centered(c), [sv("0+"), sv("+0")])
}

/// `[-r, r]` cut into `r` segments of length two.
pub fn chain(r: usize) -> Tiling {
    let c = VectorConfig::new(1, vec![int_vec(&[1]); r]).unwrap();
    let lift: Vec<_> = (0..r as i64).map(num_bigint::BigInt::from).collect();
    tiling_from_lift(&c, &lift).unwrap().0
}

/// The hexagon configuration with each vector taken three times.
pub fn triple_hexagon() -> VectorConfig {
    let mut v: Vec<&[i64]> = Vec::new();
    for a in [&[1i64, 0][..], &[0, 1], &[1, 1]] {
        for _ in 0..3 {
            v.push(a);
        }
    }
    VectorConfig::from_i64(2, &v)
}

fn sign_of(x: i64) -> Sign {
    Sign::of(&num_bigint::BigInt::from(x))
}

/// An irregular tiling of the triple hexagon by 27 unit rhombi.
///
/// Each rhombus is spanned by one line from each of two families; the sign
/// of every line of the third family is read off a height function `h`
/// (line `k` passes above the pair `(i, j)` when `k >= h(i, j)`).
pub fn figure2() -> Tiling {
    const H: [[i64; 3]; 3] = [[3, 2, 2], [3, 1, 0], [1, 1, 0]];
    let sigma = |i: usize, j: usize, k: usize| if k as i64 >= H[2 - i][2 - j] { Sign::Plus } else { Sign::Minus };
    let step = |x: usize, y: usize| sign_of(x as i64 - y as i64);
    let (a, b, c) = (0usize, 3usize, 6usize);
    let mut maximal = Vec::new();
    for x in 0..3 {
        for y in 0..3 {
            let mut ab = vec![Sign::Zero; 9];
            let mut ac = vec![Sign::Zero; 9];
            let mut bc = vec![Sign::Zero; 9];
            for z in 0..3 {
                ab[a + z] = step(z, x);
                ab[b + z] = step(z, y);
                ab[c + z] = sigma(x, y, z);
                ac[a + z] = step(z, x);
                ac[c + z] = step(z, y);
                ac[b + z] = sigma(x, z, y).neg();
                bc[b + z] = step(z, x);
                bc[c + z] = step(z, y);
                bc[a + z] = sigma(z, x, y).neg();
            }
            maximal.extend([ab, ac, bc].map(SignVector::new));
        }
    }
    Tiling::from_maximal(Zonotope::centered(triple_hexagon()), maximal)
}

pub fn parallelogram() -> Tiling {
    Tiling::trivial(Zonotope::centered(VectorConfig::from_i64(2, &[&[1, 1], &[1, -1]])))
}

/// Every named tiling used across the suites.
pub fn fixture_tilings() -> Vec<(&'static str, Tiling)> {
    let mut out = vec![
        ("hexagon trivial", hexagon_trivial()),
        ("hexagon cubes", hexagon_cubes()),
        ("hexagon cubes mirrored", tiling_from_lift(&hexagon(), &int_vec(&[-1, 0, 0])).unwrap().0),
        ("figure 2", figure2()),
        ("T*P^1", tp1()),
        ("parallelogram", parallelogram()),
    ];
    for (r, name) in [(2, "chain 2"), (3, "chain 3"), (4, "chain 4"), (5, "chain 5"), (6, "chain 6")] {
        out.push((name, chain(r)));
    }
    out
}

/// Random nonzero vectors with entries in `-2..=2` spanning `Q^d`.
pub fn random_spanning_config(rng: &mut impl rand::Rng, d: usize, n: usize) -> VectorConfig {
    assert!(n >= d, "{n} vectors cannot span rank {d}");
    loop {
        let vectors: Vec<Vec<num_bigint::BigInt>> = (0..n)
            .map(|_| loop {
                let v: Vec<i64> = (0..d).map(|_| rng.gen_range(-2..=2)).collect();
                if v.iter().any(|&x| x != 0) {
                    break int_vec(&v);
                }
            })
            .collect();
        let c = VectorConfig::new(d, vectors).unwrap();
        if c.is_spanning() {
            return c;
        }
    }
}

pub fn random_vector(rng: &mut impl rand::Rng, n: usize, bound: i64) -> Vec<num_bigint::BigInt> {
    (0..n).map(|_| num_bigint::BigInt::from(rng.gen_range(-bound..=bound))).collect()
}

/// Every sign vector of length `n`.
pub fn all_signs(n: usize) -> Vec<SignVector> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<Sign>| {
                [Sign::Minus, Sign::Zero, Sign::Plus].into_iter().map(move |s| {
                    let mut w = v.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(SignVector::new).collect()
}

/// Sign patterns `sign(m . a_e + s r_e)` realized with `s > 0`, decided by
/// Fourier–Motzkin elimination. With `r = 0` these are the covectors.
pub fn oracle_patterns(c: &VectorConfig, r: &[num_bigint::BigInt]) -> std::collections::BTreeSet<SignVector> {
    use num_bigint::BigInt;
    let d = c.rank();
    let mut out = std::collections::BTreeSet::new();
    for v in all_signs(c.len()) {
        let mut strict = Vec::new();
        let mut eq = Vec::new();
        let mut s = vec![BigInt::from(0); d + 1];
        s[d] = BigInt::from(1);
        strict.push(s);
        for e in 0..c.len() {
            let mut row = c.vector(e).to_vec();
            row.push(r[e].clone());
            match v.get(e) {
                Sign::Zero => eq.push(row),
                Sign::Plus => strict.push(row),
                Sign::Minus => strict.push(row.iter().map(|x| -x).collect()),
            }
        }
        if fm::feasible(d + 1, &strict, &[], &eq) {
            out.insert(v);
        }
    }
    out
}

/// Spanning configurations of rank `1..=max_d` with `d..=max_n` nonzero
/// vectors (entries in `-2..=2`) and a lift with entries in `-3..=3`.
pub fn arb_lifted_config(
    max_d: usize,
    max_n: usize,
) -> impl proptest::strategy::Strategy<Value = (VectorConfig, Vec<num_bigint::BigInt>)> {
    use proptest::prelude::*;
    (1..=max_d)
        .prop_flat_map(move |d| (Just(d), d..=max_n))
        .prop_flat_map(|(d, n)| {
            let v = prop::collection::vec(-2i64..=2, d).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0));
            (Just(d), prop::collection::vec(v, n), prop::collection::vec(-3i64..=3, n))
        })
        .prop_filter_map("spanning", |(d, vs, r)| {
            let c = VectorConfig::new(d, vs.iter().map(|v| int_vec(v)).collect()).unwrap();
            c.is_spanning().then(|| (c, int_vec(&r)))
        })
}

/// A point `sum t_e a_e` of `Z(a)` with each `t_e` a multiple of `1/4`.
pub fn quarter_point(c: &VectorConfig, ks: &[i64]) -> Vec<num_rational::BigRational> {
    use num_rational::BigRational;
    let mut p = vec![BigRational::from_integer(0.into()); c.rank()];
    for (e, &k) in ks.iter().enumerate() {
        let t = BigRational::new(k.into(), 4.into());
        for (x, y) in p.iter_mut().zip(c.vector(e)) {
            *x += &t * BigRational::from_integer(y.clone());
        }
    }
    p
}
