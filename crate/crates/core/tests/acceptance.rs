//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypertile_core::hypertoric::{
    classify_divisor, extended_core, geometry_flags, invariant_ring_data, lawrence_fan, reconstruct_tiles,
    weight_profile, DivisorKind, WeightProfile,
};
use hypertile_core::lattice::{
    hermite_basis, int_vec, perp_lattice, saturation, smith_invariants, to_rational, SubLattice,
};
use hypertile_core::support::{bending_rows, convexity, eval_support, regularity, tiling_lattices, Convexity};
use hypertile_core::tiling::{enumerate_tilings, tiling_from_lift, validate_tiling, Tiling};
use hypertile_core::zonotope::{
    classify_block, covectors, BlockKind, FacetDescription, Location, SignVector, VectorConfig, Zonotope,
};

use common::*;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn witness_ok(t: &Tiling, w: &[BigInt]) -> Outcome {
    ensure(convexity(t, w) == Ok(Convexity::StrictlyConvex), || format!("witness {w:?} is not strictly convex"))?;
    let back = tiling_from_lift(t.config(), w).map_err(|e| e.to_string())?.0;
    ensure(back.tiles() == t.tiles(), || format!("witness {w:?} lifts to a different tiling"))
}

fn hexagon_census() -> Outcome {
    let tilings = enumerate_tilings(&hexagon()).map_err(|e| e.to_string())?;
    ensure(tilings.len() == 3, || format!("{} tilings", tilings.len()))?;
    for t in &tilings {
        validate_tiling(t).map_err(|v| format!("invalid: {v:?}"))?;
        let w = regularity(t).ok_or("irregular tiling")?;
        witness_ok(t, &w)?;
    }
    Ok(())
}

fn figure2_irregular() -> Outcome {
    let t = figure2();
    validate_tiling(&t).map_err(|v| format!("invalid: {v:?}"))?;
    ensure(t.maximal_tiles().len() == 27, || "expected 27 rhombi".into())?;
    ensure(t.tiles().iter().all(|v| classify_block(&t.tile(v)) == BlockKind::Cube), || "non-cube tile".into())?;
    ensure(regularity(&t).is_none(), || "a witness was found".into())?;
    // Independent check of the same strict system.
    let mut rows: Vec<Vec<BigInt>> = bending_rows(&t).iter().map(|r| hypertile_core::lattice::primitive_integer(r)).collect();
    rows.sort();
    rows.dedup();
    let eq = tiling_lattices(&t).tile_relations.basis().to_vec();
    ensure(!fm::feasible(9, &rows, &[], &eq), || "elimination oracle finds a solution".into())?;
    let f = geometry_flags(&t);
    ensure(
        f.smooth && f.qfactorial_terminal_sufficient && !f.projective_over_affinization,
        || format!("flags {f:?}"),
    )
}

fn divisor_table() -> Outcome {
    let t = tp1();
    for r1 in -3i64..=3 {
        for r2 in -3i64..=3 {
            let k = classify_divisor(&t, &int_vec(&[r1, r2])).map_err(|e| e.to_string())?;
            let s = r1 + r2;
            let ample = k == DivisorKind::Ample;
            let nef = matches!(k, DivisorKind::Ample | DivisorKind::Nef | DivisorKind::Trivial);
            let trivial = k == DivisorKind::Trivial;
            ensure(ample == (s > 0) && nef == (s >= 0) && trivial == (s == 0), || format!("r = ({r1}, {r2}) gave {k:?}"))?;
        }
    }
    Ok(())
}

fn kleinian_ring() -> Outcome {
    for r in 2..=5usize {
        let rows: Vec<&[i64]> = vec![&[1][..]; r];
        let c = VectorConfig::from_i64(1, &rows);
        let data = invariant_ring_data(&c, &SignVector::zero(r)).map_err(|e| e.to_string())?;
        ensure(data.generators.len() == r + 2, || format!("r = {r}: {} generators", data.generators.len()))?;
        let mut weights: Vec<(BigInt, BigInt)> =
            data.generators.iter().map(|g| (g.t_weight[0].clone(), g.gm_weight.clone())).collect();
        weights.sort();
        let mut expected = vec![(BigInt::zero(), BigInt::from(2)); r];
        expected.push((BigInt::from(-1), BigInt::from(r)));
        expected.push((BigInt::from(1), BigInt::from(r)));
        expected.sort();
        ensure(weights == expected, || format!("r = {r}: weights {weights:?}"))?;
        ensure(data.moment_relations.len() == r - 1, || format!("r = {r}: relation count"))?;
        let consecutive: Vec<Vec<BigInt>> = (0..r - 1)
            .map(|i| (0..r).map(|e| BigInt::from((e == i) as i64 - (e == i + 1) as i64)).collect())
            .collect();
        ensure(
            hermite_basis(&data.moment_relations, r).unwrap() == hermite_basis(&consecutive, r).unwrap(),
            || format!("r = {r}: relations span a different lattice"),
        )?;
        // (z_1 w_1) ... (z_r w_r) = (z_1 ... z_r)(w_1 ... w_r) at exponent level.
        let ones = vec![BigInt::one(); r];
        let zeros = vec![BigInt::zero(); r];
        let b = data.generators.iter().find(|g| g.t_weight[0] == BigInt::from(-1)).ok_or("missing b")?;
        let cc = data.generators.iter().find(|g| g.t_weight[0] == BigInt::from(1)).ok_or("missing c")?;
        ensure(b.p == ones && b.q == zeros && cc.p == zeros && cc.q == ones, || format!("r = {r}: b, c exponents"))?;
        let a_product: Vec<BigInt> = ones.iter().chain(&ones).cloned().collect();
        let bc: Vec<BigInt> = b.p.iter().zip(&cc.p).map(|(x, y)| x + y).chain(b.q.iter().zip(&cc.q).map(|(x, y)| x + y)).collect();
        ensure(a_product == bc, || format!("r = {r}: a^r != bc"))?;
        for g in data.generators.iter().filter(|g| g.t_weight[0].is_zero()) {
            ensure(g.p == g.q && g.p.iter().map(|x| x.clone()).sum::<BigInt>() == BigInt::one(), || format!("r = {r}: {g:?}"))?;
        }
    }
    Ok(())
}

fn chain_core() -> Outcome {
    for r in 2..=6i64 {
        let t = chain(r as usize);
        let core = extended_core(&t).map_err(|e| e.to_string())?;
        ensure(core.irreducible.len() == (r + 1) as usize, || format!("r = {r}: component count"))?;
        let mut proper = BTreeSet::new();
        let mut improper = BTreeSet::new();
        for &i in &core.irreducible {
            let c = &core.components[i];
            let w = c.gm_weight.clone().ok_or("missing weight")?[0].clone();
            if c.is_proper {
                let full = c.local_fan.fan.cones.iter().filter(|k| k.dim() == 1).count();
                ensure(full == 2 && c.local_fan.complete, || format!("r = {r}: fan at {w}"))?;
                proper.insert(w);
            } else {
                improper.insert(w);
            }
        }
        let expected: BTreeSet<BigInt> = (-r + 2..=r - 2).step_by(2).map(BigInt::from).collect();
        ensure(proper == expected, || format!("r = {r}: proper weights {proper:?}"))?;
        let ends: BTreeSet<BigInt> = [BigInt::from(-r), BigInt::from(r)].into_iter().collect();
        ensure(improper == ends, || format!("r = {r}: improper weights {improper:?}"))?;
    }
    Ok(())
}

fn positivity() -> Outcome {
    for r in 1..=5i64 {
        for l in -6i64..=6 {
            let c = VectorConfig::new(1, vec![int_vec(&[1]); r as usize]).unwrap();
            let z = Zonotope::new(c, SignVector::zero(r as usize), int_vec(&[l])).unwrap();
            let p = weight_profile(&z);
            let ok = (p == WeightProfile::Positive) == (l.abs() < r)
                && (p != WeightProfile::Mixed) == (l.abs() <= r);
            ensure(ok, || format!("l = {l}, r = {r}: {p:?}"))?;
        }
    }
    Ok(())
}

fn boundary_edges_simple(c: &VectorConfig) -> bool {
    if c.rank() != 2 {
        return c.rank() == 1;
    }
    let n = c.len();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let (a, b) = (c.vector(i), c.vector(j));
            &a[0] * &b[1] != &a[1] * &b[0]
        })
    })
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a11);
    // (a) covectors against elimination.
    for i in 0..100 {
        let d = rng.gen_range(1..=3);
        let n = rng.gen_range(d..=5);
        let c = random_spanning_config(&mut rng, d, n);
        let fast: BTreeSet<SignVector> = covectors(&c).iter().cloned().collect();
        let slow = oracle_patterns(&c, &vec![BigInt::zero(); n]);
        ensure(fast == slow, || format!("(a) sample {i}: {c:?}"))?;
    }
    // (b)-(d) on random lifts.
    let mut rng = ChaCha8Rng::seed_from_u64(0x11f7);
    let mut odd_checked = 0;
    for i in 0..100 {
        let d = rng.gen_range(1..=2);
        let n = rng.gen_range(d..=4);
        let c = random_spanning_config(&mut rng, d, n);
        let r = random_vector(&mut rng, n, 3);
        let (t, _) = tiling_from_lift(&c, &r).map_err(|e| e.to_string())?;
        let w = regularity(&t).ok_or_else(|| format!("(b) sample {i}: no witness"))?;
        let back = tiling_from_lift(&c, &w).unwrap().0;
        ensure(back.tiles() == t.tiles(), || format!("(b) sample {i}: round trip changed the tiling"))?;

        let total: BigInt = t.maximal_tiles().iter().map(|m| t.tile(m).volume()).sum();
        ensure(total == t.base().volume(), || format!("(c) sample {i}: volume"))?;
        let faces = oracle_patterns(&c, &r);
        ensure(&faces == t.tiles(), || format!("(c) sample {i}: {} tiles, {} faces", t.tiles().len(), faces.len()))?;

        // Oddness needs centrally symmetric boundary tilings, which holds
        // when no boundary edge carries two parallel vectors.
        if !boundary_edges_simple(&c) {
            continue;
        }
        odd_checked += 1;
        let support = tiling_lattices(&t).support;
        let coeffs = random_vector(&mut rng, support.rank(), 3);
        let mut phi = vec![BigInt::zero(); n];
        for (k, b) in coeffs.iter().zip(support.basis()) {
            for (x, y) in phi.iter_mut().zip(b) {
                *x += k * y;
            }
        }
        let base = t.base();
        let facets = FacetDescription::new(base.center(), &base.generators());
        for v in t.vertices() {
            if facets.locate_int(&v) != Location::Boundary {
                continue;
            }
            let p = to_rational(&v);
            let q: Vec<BigRational> = p.iter().map(|x| -x).collect();
            let a = eval_support(&t, &phi, &p).map_err(|e| e.to_string())?;
            let b = eval_support(&t, &phi, &q).map_err(|e| e.to_string())?;
            ensure(a == -&b, || format!("(d) sample {i}: phi({v:?}) = {a}, phi(-v) = {b}"))?;
        }
    }
    ensure(odd_checked >= 30, || format!("(d) only {odd_checked} samples"))?;
    // (e) saturation.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a7);
    for i in 0..100 {
        let n = rng.gen_range(1..=5);
        let k = rng.gen_range(0..=n);
        let gens: Vec<Vec<BigInt>> = (0..k).map(|_| random_vector(&mut rng, n, 4)).collect();
        let l = hermite_basis(&gens, n).unwrap();
        let twice = perp_lattice(&perp_lattice(&l));
        let (sat, index) = saturation(&l);
        ensure(twice == sat, || format!("(e) sample {i}"))?;
        ensure(sat.rank() == l.rank() && l.is_subset_of(&sat), || format!("(e) sample {i}: not an overlattice"))?;
        ensure(smith_invariants(&sat.matrix()).iter().all(|x| x.is_one()), || format!("(e) sample {i}: not saturated"))?;
        let product: BigInt = smith_invariants(&l.matrix()).iter().product();
        ensure(product == index, || format!("(e) sample {i}: index {index} vs {product}"))?;
    }
    Ok(())
}

fn reconstruction() -> Outcome {
    for (name, t) in fixture_tilings() {
        let core = extended_core(&t).map_err(|e| e.to_string())?;
        ensure(reconstruct_tiles(&core) == t.polytopes(), || format!("{name}: tiles differ"))?;
    }
    Ok(())
}

fn lawrence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a3);
    for (name, t) in fixture_tilings() {
        let l = lawrence_fan(&t);
        ensure(l.rays_extremal && l.refines_base, || format!("{name}: rays or cones leave the base cone"))?;
        ensure(l.fan.cones.len() == t.tiles().len(), || format!("{name}: cone count"))?;
        let n = t.config().len();
        let support: SubLattice = tiling_lattices(&t).support;
        let mut samples = Vec::new();
        for _ in 0..12 {
            samples.push((random_vector(&mut rng, n, 2), random_vector(&mut rng, n, 2)));
        }
        for _ in 0..12 {
            let minus = random_vector(&mut rng, n, 2);
            let mut plus = minus.clone();
            for b in support.basis() {
                let k = BigInt::from(rng.gen_range(-2..=2));
                for (x, y) in plus.iter_mut().zip(b) {
                    *x += &k * y;
                }
            }
            samples.push((plus, minus));
        }
        for (plus, minus) in samples {
            let diff: Vec<BigInt> = plus.iter().zip(&minus).map(|(a, b)| a - b).collect();
            ensure(
                l.extends_linearly(&t, &plus, &minus) == support.contains(&diff),
                || format!("{name}: extension test disagrees for {plus:?}, {minus:?}"),
            )?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("hexagon census", hexagon_census),
        ("irregularity of the triple-hexagon tiling", figure2_irregular),
        ("T*P^1 divisor table", divisor_table),
        ("Kleinian ring", kleinian_ring),
        ("chain core", chain_core),
        ("positivity criterion", positivity),
        ("property suites", property_suites),
        ("reconstruction", reconstruction),
        ("Lawrence consistency", lawrence),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS {} {name} ({:.2?})", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
