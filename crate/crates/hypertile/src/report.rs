//! Report builders: each runs one library call and renders its result as a
//! one-line summary and a JSON value.

use serde_json::{json, Value};

use hypertile_core::hypertoric::{
    class_groups, classify_divisor, extended_core, geometry_flags, invariant_ring_data, is_hypertoric,
    lawrence_fan, weight_profile, DivisorKind, WeightProfile,
};
use hypertile_core::lattice::SubLattice;
use hypertile_core::support::{regularity, tiling_lattices};
use hypertile_core::tiling::{enumerate_tilings, tiling_from_lift, validate_tiling, Tiling, Violation};
use hypertile_core::zonotope::{covectors, faces, SignVector};
use hypertile_core::{BigInt, Error};

use crate::document::ProblemDocument;
use crate::CliError;

/// Result of one subcommand.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub summary: String,
    pub data: Value,
    /// A mathematical negative (irregular, invalid, not Cartier, ...),
    /// turned into exit code 1 by `--strict`.
    pub negative: bool,
}

impl Report {
    fn new(summary: String, data: Value) -> Self {
        Report { summary, data, negative: false }
    }
}

pub fn num(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn vector(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(num).collect())
}

pub fn lattice(l: &SubLattice) -> Value {
    Value::Array(l.basis().iter().map(|b| vector(b)).collect())
}

pub fn sign(v: &SignVector) -> Value {
    json!(v.to_string())
}

fn signs<'a>(vs: impl IntoIterator<Item = &'a SignVector>) -> Value {
    Value::Array(vs.into_iter().map(sign).collect())
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// The document's tiling, validated when it was given tile by tile.
pub fn checked_tiling(doc: &ProblemDocument) -> Result<Tiling, CliError> {
    let t = doc.tiling()?;
    if doc.tiles.is_some() || doc.maximal_tiles.is_some() || doc.tile_vertices.is_some() {
        validate_tiling(&t).map_err(Error::InvalidTiling)?;
    }
    Ok(t)
}

pub fn faces_report(doc: &ProblemDocument) -> Result<Report, CliError> {
    let z = doc.base()?;
    let fs = faces(&z)?;
    let top = z.dim();
    let mut f_vector = vec![0usize; top + 1];
    let list: Vec<Value> = fs
        .iter()
        .map(|f| {
            f_vector[f.dim()] += 1;
            json!({ "sign": sign(f.sign()), "dim": f.dim(), "center": vector(&f.center()) })
        })
        .collect();
    let summary = format!(
        "{} (f-vector {})",
        plural(fs.len(), "face"),
        f_vector.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    );
    Ok(Report::new(
        summary,
        json!({ "faces": list, "f_vector": f_vector, "volume": num(&z.volume()), "vertices": z.vertices().iter().map(|v| vector(v)).collect::<Vec<_>>() }),
    ))
}

pub fn covectors_report(doc: &ProblemDocument) -> Result<Report, CliError> {
    let cov = covectors(&doc.config()?);
    Ok(Report::new(plural(cov.len(), "covector"), json!({ "covectors": signs(cov.iter()) })))
}

pub fn tile_from_lift_report(doc: &ProblemDocument) -> Result<Report, CliError> {
    let lift = doc.lift_vector()?.ok_or_else(|| CliError::Input("the document has no lift".into()))?;
    let (t, psi) = tiling_from_lift(&doc.config()?, &lift)?;
    let maximal = t.maximal_tiles();
    let summary = format!("{}, {} maximal", plural(t.tiles().len(), "tile"), maximal.len());
    let envelope: Vec<Value> = psi.iter().map(|(k, v)| json!({ "vertex": vector(k), "value": num(v) })).collect();
    Ok(Report::new(summary, json!({ "tiles": signs(t.tiles()), "maximal_tiles": signs(&maximal), "envelope": envelope })))
}

pub fn enumerate_report(doc: &ProblemDocument) -> Result<Report, CliError> {
    let c = doc.config()?;
    let tilings = enumerate_tilings(&c)?;
    let (mut trivial, mut cubical, mut other, mut irregular) = (0, 0, 0, 0);
    let mut list = Vec::new();
    for t in &tilings {
        let is_trivial = t.maximal_tiles().len() == 1;
        let flags = geometry_flags(t);
        let witness = if flags.projective_over_affinization { regularity(t) } else { None };
        if is_trivial {
            trivial += 1;
        } else if flags.smooth {
            cubical += 1;
        } else {
            other += 1;
        }
        if witness.is_none() {
            irregular += 1;
        }
        list.push(json!({
            "maximal_tiles": signs(&t.maximal_tiles()),
            "tile_count": t.tiles().len(),
            "trivial": is_trivial,
            "cubical": flags.smooth,
            "witness": witness.as_ref().map(|w| vector(w)),
        }));
    }
    let mut kinds = format!("{trivial} trivial, {cubical} cubical");
    if other > 0 {
        kinds.push_str(&format!(", {other} other"));
    }
    let regular = if irregular == 0 { "all regular".to_string() } else { format!("{irregular} irregular") };
    let summary = format!("{} ({kinds}; {regular})", plural(tilings.len(), "tiling"));
    let mut r = Report::new(summary, json!({ "count": tilings.len(), "tilings": list }));
    r.negative = irregular > 0;
    Ok(r)
}

fn violation_json(v: &Violation) -> Value {
    match v {
        Violation::WrongLength { tile } => json!({ "kind": "wrong_length", "tile": sign(tile) }),
        Violation::SignMismatch { tile } => json!({ "kind": "sign_mismatch", "tile": sign(tile) }),
        Violation::DuplicatePolytope { first, second } => {
            json!({ "kind": "duplicate_polytope", "tiles": [sign(first), sign(second)] })
        }
        Violation::MissingFace { tile, face } => json!({ "kind": "missing_face", "tile": sign(tile), "face": sign(face) }),
        Violation::Stray { tile } => json!({ "kind": "stray", "tile": sign(tile) }),
        Violation::VolumeMismatch { expected, found } => {
            json!({ "kind": "volume_mismatch", "expected": num(expected), "found": num(found) })
        }
        Violation::InteriorOverlap { first, second } => {
            json!({ "kind": "interior_overlap", "tiles": [sign(first), sign(second)] })
        }
        Violation::ImproperIntersection { first, second } => {
            json!({ "kind": "improper_intersection", "tiles": [sign(first), sign(second)] })
        }
    }
}

pub fn validate_report(doc: &ProblemDocument) -> Result<Report, CliError> {
    let t = doc.tiling()?;
    Ok(match validate_tiling(&t) {
        Ok(()) => {
            let summary = format!("valid tiling: {}, {} maximal", plural(t.tiles().len(), "tile"), t.maximal_tiles().len());
            Report::new(summary, json!({ "valid": true, "violations": [] }))
        }
        Err(vs) => Report {
            summary: format!("invalid tiling: {}", plural(vs.len(), "violation")),
            data: json!({ "valid": false, "violations": vs.iter().map(violation_json).collect::<Vec<_>>() }),
            negative: true,
        },
    })
}

pub fn regularity_report(doc: &ProblemDocument) -> Result<Report, CliError> {
    let t = checked_tiling(doc)?;
    Ok(match regularity(&t) {
        Some(w) => Report::new(format!("regular: witness r = ({})", join(&w)), json!({ "regular": true, "witness": vector(&w) })),
        None => Report {
            summary: "irregular: strict system infeasible".into(),
            data: json!({ "regular": false, "witness": null }),
            negative: true,
        },
    })
}

pub fn support_lattice_report(doc: &ProblemDocument) -> Result<Report, CliError> {
    let t = checked_tiling(doc)?;
    let l = tiling_lattices(&t);
    let summary = format!(
        "relations rank {}, tile relations rank {}, support lattice rank {}",
        l.relations.rank(),
        l.tile_relations.rank(),
        l.support.rank()
    );
    Ok(Report::new(
        summary,
        json!({ "relations": lattice(&l.relations), "tile_relations": lattice(&l.tile_relations), "support": lattice(&l.support) }),
    ))
}

pub fn classify_divisor_report(doc: &ProblemDocument, r: &[BigInt]) -> Result<Report, CliError> {
    let t = checked_tiling(doc)?;
    let kind = classify_divisor(&t, r)?;
    let label = match kind {
        DivisorKind::NotCartier => "not_cartier",
        DivisorKind::Trivial => "trivial",
        DivisorKind::Ample => "ample",
        DivisorKind::Nef => "nef",
        DivisorKind::NoneOfThese => "none_of_these",
    };
    let cartier = kind != DivisorKind::NotCartier;
    let summary = if cartier { format!("cartier, {label}") } else { label.replace('_', " ") };
    let mut rep = Report::new(summary, json!({ "r": vector(r), "cartier": cartier, "class": label }));
    rep.negative = !cartier;
    Ok(rep)
}

pub fn core_report(doc: &ProblemDocument) -> Result<Report, CliError> {
    let t = checked_tiling(doc)?;
    let core = extended_core(&t)?;
    let check = is_hypertoric(&t);
    let profile = match weight_profile(t.base()) {
        WeightProfile::Positive => "positive",
        WeightProfile::Nonnegative => "nonnegative",
        WeightProfile::Mixed => "mixed",
    };
    let components: Vec<Value> = core
        .components
        .iter()
        .map(|c| {
            let cones: Vec<Value> = c
                .local_fan
                .fan
                .cones
                .iter()
                .zip(&c.local_fan.cone_tiles)
                .map(|(cone, w)| {
                    json!({
                        "tile": sign(w),
                        "generators": cone.generators.iter().map(|g| vector(g)).collect::<Vec<_>>(),
                        "lineality": lattice(&cone.lineality),
                    })
                })
                .collect();
            json!({
                "tile": sign(&c.tile),
                "dim": c.dim,
                "proper": c.is_proper,
                "in_core": c.in_core,
                "gm_weight": c.gm_weight.as_ref().map(|w| vector(w)),
                "local_fan": cones,
            })
        })
        .collect();
    let in_core = core.components.iter().filter(|c| c.in_core).count();
    let proper = core.irreducible.iter().filter(|&&i| core.components[i].is_proper).count();
    let summary = format!(
        "{}, {} in the core; {} ({proper} proper); weights {profile}",
        plural(core.components.len(), "stratum").replace("stratums", "strata"),
        in_core,
        plural(core.irreducible.len(), "component"),
    );
    let mut rep = Report::new(
        summary,
        json!({
            "components": components,
            "covers": core.covers,
            "irreducible": core.irreducible,
            "core_nonempty": core.core_nonempty,
            "weight_profile": profile,
            "hypertoric": check.holds,
            "reasons": check.reasons,
        }),
    );
    rep.negative = !check.holds;
    Ok(rep)
}

pub fn class_groups_report(doc: &ProblemDocument) -> Result<Report, CliError> {
    let t = checked_tiling(doc)?;
    let g = class_groups(&t)?;
    let torsion: String = g.torsion.iter().map(|x| format!(" + Z/{x}")).collect();
    let summary = format!(
        "equivariant class group Z^{}, class group Z^{}{torsion}, equivariant Picard rank {}",
        g.equivariant_rank,
        g.free_rank,
        g.pic.rank()
    );
    Ok(Report::new(
        summary,
        json!({
            "equivariant_rank": g.equivariant_rank,
            "ker_forget": lattice(&g.ker_forget),
            "class_group": { "free_rank": g.free_rank, "torsion": g.torsion.iter().map(num).collect::<Vec<_>>() },
            "pic": lattice(&g.pic),
        }),
    ))
}

pub fn geometry_flags_report(doc: &ProblemDocument) -> Result<Report, CliError> {
    let t = checked_tiling(doc)?;
    let f = geometry_flags(&t);
    let summary = format!(
        "smooth {}, qfactorial terminal (sufficient) {}, projective {}",
        f.smooth, f.qfactorial_terminal_sufficient, f.projective_over_affinization
    );
    let mut rep = Report::new(
        summary,
        json!({
            "smooth": f.smooth,
            "qfactorial_terminal_sufficient": f.qfactorial_terminal_sufficient,
            "projective_over_affinization": f.projective_over_affinization,
        }),
    );
    rep.negative = !f.projective_over_affinization;
    Ok(rep)
}

pub fn lawrence_report(doc: &ProblemDocument) -> Result<Report, CliError> {
    let t = checked_tiling(doc)?;
    let l = lawrence_fan(&t);
    let maximal = t.maximal_tiles();
    let cones: Vec<Value> = l
        .fan
        .cones
        .iter()
        .zip(&l.cone_tiles)
        .map(|(c, v)| json!({ "tile": sign(v), "generators": c.generators.iter().map(|g| vector(g)).collect::<Vec<_>>() }))
        .collect();
    let summary = format!(
        "rank {}, {}, {} ({} maximal); rays extremal {}",
        l.ambient_rank,
        plural(2 * t.config().len(), "ray"),
        plural(l.fan.cones.len(), "cone"),
        maximal.len(),
        l.rays_extremal
    );
    let mut rep = Report::new(
        summary,
        json!({
            "ambient_rank": l.ambient_rank,
            "quotient_basis": l.quotient_basis.iter().map(|b| vector(b)).collect::<Vec<_>>(),
            "rays_plus": l.rays_plus.iter().map(|b| vector(b)).collect::<Vec<_>>(),
            "rays_minus": l.rays_minus.iter().map(|b| vector(b)).collect::<Vec<_>>(),
            "base_cone": l.base_cone.generators.iter().map(|g| vector(g)).collect::<Vec<_>>(),
            "cones": cones,
            "refines_base": l.refines_base,
            "rays_extremal": l.rays_extremal,
        }),
    );
    rep.negative = !(l.refines_base && l.rays_extremal);
    Ok(rep)
}

pub fn ring_report(doc: &ProblemDocument) -> Result<Report, CliError> {
    let data = invariant_ring_data(&doc.config()?, &doc.sign_vector()?)?;
    let gens: Vec<Value> = data
        .generators
        .iter()
        .map(|g| json!({ "p": vector(&g.p), "q": vector(&g.q), "t_weight": vector(&g.t_weight), "gm_weight": num(&g.gm_weight) }))
        .collect();
    let summary = format!(
        "{}, unit rank {}, {}",
        plural(data.generators.len(), "generator"),
        data.units.rank(),
        plural(data.moment_relations.len(), "moment relation")
    );
    Ok(Report::new(
        summary,
        json!({
            "units": lattice(&data.units),
            "generators": gens,
            "moment_relations": data.moment_relations.iter().map(|b| vector(b)).collect::<Vec<_>>(),
        }),
    ))
}
