//! Fourier–Motzkin elimination with strictness tracking.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Scales a row to coprime integers.
fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

/// Decides whether the homogeneous system `strict > 0, weak >= 0, eq = 0`
/// has a real solution by eliminating one variable at a time. Equalities
/// become pairs of weak inequalities; rows are kept primitive and
/// deduplicated (a strict copy absorbs a weak one).
pub fn feasible(dim: usize, strict: &[Vec<BigInt>], weak: &[Vec<BigInt>], eq: &[Vec<BigInt>]) -> bool {
    let mut sys: BTreeMap<Vec<BigInt>, bool> = BTreeMap::new();
    let add = |sys: &mut BTreeMap<Vec<BigInt>, bool>, row: Vec<BigInt>, s: bool| {
        let row = primitive(row);
        let e = sys.entry(row).or_insert(s);
        *e |= s;
    };
    for r in strict {
        add(&mut sys, r.clone(), true);
    }
    for r in weak {
        add(&mut sys, r.clone(), false);
    }
    for r in eq {
        add(&mut sys, r.clone(), false);
        add(&mut sys, r.iter().map(|x| -x).collect(), false);
    }
    let mut alive: Vec<usize> = (0..dim).collect();
    while !alive.is_empty() {
        // Eliminate the variable producing the fewest new rows.
        let cost = |k: usize| {
            let p = sys.keys().filter(|r| r[k].is_positive()).count();
            let n = sys.keys().filter(|r| r[k].is_negative()).count();
            p * n
        };
        let (pos_in_alive, &k) = alive.iter().enumerate().min_by_key(|(_, &k)| cost(k)).unwrap();
        alive.remove(pos_in_alive);
        let mut next: BTreeMap<Vec<BigInt>, bool> = BTreeMap::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (row, s) in sys {
            if row[k].is_positive() {
                pos.push((row, s));
            } else if row[k].is_negative() {
                neg.push((row, s));
            } else {
                add(&mut next, row, s);
            }
        }
        for (p, ps) in &pos {
            for (n, ns) in &neg {
                let (cp, cn) = (p[k].clone(), -n[k].clone());
                let row: Vec<BigInt> = p.iter().zip(n).map(|(x, y)| x * &cn + y * &cp).collect();
                add(&mut next, row, *ps || *ns);
            }
        }
        let zero_strict = next.iter().any(|(r, &s)| s && r.iter().all(Zero::is_zero));
        if zero_strict {
            return false;
        }
        next.retain(|r, _| r.iter().any(|x| !x.is_zero()));
        sys = next;
    }
    true
}
