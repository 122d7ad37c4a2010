//! Sample clusters and the verification suites for the two diagrams of
//! embeddings, plus the pinned failures of the literal fillers.

use crate::embeddings::named::*;
use crate::embeddings::{commutes_on_window, compose, verify_embedding, EmbeddingSpec};
pub use crate::embeddings::Report;
use crate::error::{Error, Result};
use crate::kernel::{bounded_max_check, ArcSet, Endpoint, Model, Verdict, Window};
use crate::models::line::Line;
use crate::models::polygon::enumerate_clusters_capped;
use crate::models::seq::{apex_fan, zigzag, Coord, FanSide, Generator, SeqFamily};
use crate::structures::{in_structure, Predicate, StructureTag};

pub const DEFAULT_RADIUS: u32 = 25;

/// Every cluster of `A_4` and `A_5`, or of one of them.
pub fn polygon_samples(n: Option<u32>) -> Result<Vec<ArcSet>> {
    let sizes: Vec<u32> = n.map_or(vec![4, 5], |n| vec![n]);
    let mut out = Vec::new();
    for n in sizes {
        out.extend(enumerate_clusters_capped(n, n.max(12))?);
    }
    Ok(out)
}

fn push(e: &EmbeddingSpec, ts: &[ArcSet]) -> Result<Vec<ArcSet>> {
    ts.iter().map(|t| e.apply(t)).collect()
}

/// Images of the `A_4` and `A_5` clusters in `model`, pushed along the
/// diagram: into `Z`, onto level 1, up the levels, completed, collapsed.
pub fn samples_for(model: Model) -> Result<Vec<ArcSet>> {
    let inf = || -> Result<Vec<ArcSet>> {
        let mut out = push(&f_to_inf(4)?, &polygon_samples(Some(4))?)?;
        out.extend(push(&f_to_inf(5)?, &polygon_samples(Some(5))?)?);
        Ok(out)
    };
    let lev = |i: u32| -> Result<Vec<ArcSet>> {
        let one = push(&iso_lev()?, &inf()?)?;
        if i == 1 {
            Ok(one)
        } else {
            push(&f_lev(1, i)?, &one)
        }
    };
    match model {
        Model::Polygon(n) => enumerate_clusters_capped(n, n.max(12)),
        Model::Infinity => inf(),
        Model::Leveled(i) => {
            let mut out = lev(i)?;
            if i >= 2 {
                out.push(star_cluster(i)?);
            }
            Ok(out)
        }
        Model::CompletedLeveled(i) => push(&f_prufer(i)?, &samples_for(Model::Leveled(i))?),
        Model::CompletedInfinity => push(&f_adic()?, &samples_for(Model::CompletedLeveled(1))?),
        Model::PrimedLeveled(i) => {
            let one = push(&iso_primed()?, &inf()?)?;
            if i == 1 {
                Ok(one)
            } else {
                push(&h_primed(1, i)?, &one)
            }
        }
        Model::Hyperbolic => push(&h_pi()?, &inf()?),
    }
}

/// `{(k, 0) : k ≤ −2} ∪ {(0, k) : k ≥ 2}`: a two-sided fountain at 0.
pub fn fountain_cluster() -> Result<ArcSet> {
    let m = Model::Infinity;
    ArcSet::new(m)
        .with_family(apex_fan(m, Line::Z, 0, FanSide::Left)?.shared())?
        .with_family(apex_fan(m, Line::Z, 0, FanSide::Right)?.shared())
}

/// Every arc to `(0, i)`: the lower levels join the top one.
pub fn star_cluster(i: u32) -> Result<ArcSet> {
    let model = Model::Leveled(i);
    let apex = || Coord::Fixed(Endpoint::lev(0, i));
    let mut gens = Vec::new();
    for l in 1..i {
        gens.push(Generator::new(Coord::on(Line::Lev(l), 0, -1), apex(), 0, 1));
        gens.push(Generator::new(Coord::on(Line::Lev(l), 1, 1), apex(), 0, 1));
    }
    gens.push(Generator::new(Coord::on(Line::Lev(i), 0, -1), apex(), 2, 1));
    gens.push(Generator::new(apex(), Coord::on(Line::Lev(i), 0, 1), 2, 1));
    ArcSet::new(model).with_family(SeqFamily::new(format!("star@{i}"), model, gens)?.shared())
}

/// `{(−k, k), (−k, k + 1) : k ≥ 1}`.
pub fn zigzag_cluster() -> Result<ArcSet> {
    ArcSet::new(Model::Infinity).with_family(zigzag(Model::Infinity, Line::Z)?.shared())
}

fn limited(model: Model, limit: Option<usize>) -> Result<Vec<ArcSet>> {
    let mut v = samples_for(model)?;
    if let Some(k) = limit {
        v.truncate(k);
    }
    Ok(v)
}

/// [`verify_embedding`] on the samples of the source model.
pub fn verify_on(e: &EmbeddingSpec, r: u32, limit: Option<usize>) -> Result<Report> {
    let samples = limited(e.source(), limit)?;
    Ok(verify_embedding(e, &samples, &Window::radius(e.target(), r)))
}

fn commutes(p1: Vec<EmbeddingSpec>, p2: Vec<EmbeddingSpec>, r: u32, limit: Option<usize>) -> Result<Report> {
    let source = p1[0].source();
    let target = p1[p1.len() - 1].target();
    Ok(commutes_on_window(&p1, &p2, &limited(source, limit)?, &Window::radius(target, r)))
}

/// The edges of the first diagram.
pub fn theorem1_edges() -> Result<Vec<EmbeddingSpec>> {
    Ok(vec![
        f_poly(4, 5)?,
        f_poly(5, 6)?,
        f_to_inf(4)?,
        f_to_inf(5)?,
        iso_lev()?,
        f_lev(1, 2)?,
        f_lev(2, 3)?,
        f_prufer(1)?,
        f_prufer(2)?,
        f_levbar(1, 2)?,
        f_levbar(2, 3)?,
        f_adic()?,
        f_zbar_to_levbar2()?,
        f_pi(1)?,
        f_pi(2)?,
    ])
}

/// The composite identities of the first diagram, as pairs of paths.
pub fn theorem1_identities() -> Result<Vec<(Vec<EmbeddingSpec>, Vec<EmbeddingSpec>)>> {
    let mut out = vec![
        (vec![f_poly(4, 6)?], vec![f_poly(4, 5)?, f_poly(5, 6)?]),
        (vec![f_to_inf(4)?], vec![f_poly(4, 5)?, f_to_inf(5)?]),
        (vec![f_to_inf(4)?], vec![f_poly(4, 6)?, f_to_inf(6)?]),
        (vec![f_to_inf(5)?], vec![f_poly(5, 6)?, f_to_inf(6)?]),
        (vec![f_poly_to_levbar(5)?], vec![f_to_inf(5)?, iso_lev()?, f_prufer(1)?]),
        (vec![f_levbar(1, 3)?], vec![f_adic()?, f_zbar_to_levbar2()?, f_levbar(2, 3)?]),
    ];
    for i in 1..=2 {
        out.push((vec![f_lev(i, i + 1)?, f_prufer(i + 1)?], vec![f_prufer(i)?, f_levbar(i, i + 1)?]));
    }
    for j in 1..=2 {
        out.push((vec![f_lev_to_pi(j)?], vec![f_prufer(j)?, f_pi(j)?]));
    }
    Ok(out)
}

/// Verifies every edge and identity of the first diagram at radius `r`.
pub fn verify_theorem1(r: u32, limit: Option<usize>) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for e in theorem1_edges()? {
        out.push(verify_on(&e, r, limit)?);
    }
    for (p1, p2) in theorem1_identities()? {
        out.push(commutes(p1, p2, r, limit)?);
    }
    Ok(out)
}

fn structure_of(model: Model) -> StructureTag {
    let p = match model {
        Model::Polygon(_) => Predicate::All,
        Model::Infinity => Predicate::NoFountain,
        Model::PrimedLeveled(_) => Predicate::LimitConditionProxy,
        Model::Hyperbolic => Predicate::DiscreteProxy,
        _ => Predicate::FunctoriallyFiniteProxy,
    };
    StructureTag::on(model, p)
}

/// The six edges of the structure diagram.
pub fn theorem2_edges() -> Result<Vec<EmbeddingSpec>> {
    Ok(vec![f_poly(4, 5)?, f_to_inf(5)?, iso_primed()?, h_primed(1, 2)?, h_primed(2, 3)?, h_pi()?])
}

/// Structure preservation along one edge: samples inside the source
/// structure land inside the target structure.
pub fn preserves_structure(e: &EmbeddingSpec, samples: &[ArcSet]) -> Report {
    let (src, dst) = (structure_of(e.source()), structure_of(e.target()));
    let mut report = Report::new(format!("{} preserves {src} -> {dst}", e.name), None, samples.len());
    for (k, t) in samples.iter().enumerate() {
        let detail = (|| -> Result<Option<String>> {
            if !in_structure(src, t)? {
                return Ok(Some(format!("sample is not in {src}")));
            }
            let img = e.apply(t)?;
            Ok((!in_structure(dst, &img)?).then(|| format!("image {img} is not in {dst}")))
        })();
        report.checks += 1;
        if let Some(d) = detail.unwrap_or_else(|err| Some(err.to_string())) {
            report.failures.push(crate::embeddings::Finding { check: "structure", sample: k, detail: d });
        }
    }
    report
}

pub fn verify_theorem2(r: u32, limit: Option<usize>) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for e in theorem2_edges()? {
        out.push(preserves_structure(&e, &limited(e.source(), limit)?));
        out.push(verify_on(&e, r, limit)?);
    }
    out.push(commutes(vec![f_to_inf(4)?], vec![f_poly(4, 5)?, f_to_inf(5)?], r, limit)?);
    out.push(commutes(vec![h_primed(1, 3)?], vec![h_primed(1, 2)?, h_primed(2, 3)?], r, limit)?);
    Ok(out)
}

/// A pinned failure of a literal filler.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pin {
    pub name: String,
    pub witness: String,
}

/// The literal polygon filler misses `(1, m+1)`.
pub fn pin_polygon_filler(m: u32) -> Result<Pin> {
    let e = f_poly_step_literal(m)?;
    let w = Window::polygon(m + 1);
    let mut witnesses = Vec::new();
    for t in enumerate_clusters_capped(m, m.max(12))? {
        match bounded_max_check(&e.apply(&t)?, &w)? {
            Verdict::Ok => return Err(Error::Unresolved { family: e.name, reason: format!("{t} maps to a cluster") }),
            v => witnesses.push(v.to_string()),
        }
    }
    witnesses.sort();
    witnesses.dedup();
    Ok(Pin { name: e.name, witness: witnesses.join("; ") })
}

/// The odd-indexed fan leaves gaps next to the polygon.
pub fn pin_odd_fan(n: u32, r: u32) -> Result<Pin> {
    let e = f_to_inf_literal(n)?;
    let w = Window::radius(Model::Infinity, r);
    let mut witnesses = Vec::new();
    for t in enumerate_clusters_capped(n, n.max(12))? {
        let v = bounded_max_check(&e.apply(&t)?, &w)?;
        if v.is_ok() {
            return Err(Error::Unresolved { family: e.name, reason: format!("{t} maps to a cluster") });
        }
        witnesses.push(v.to_string());
    }
    witnesses.sort();
    witnesses.dedup();
    Ok(Pin { name: e.name, witness: witnesses.join("; ") })
}

/// The literal `D` is not a set of arcs.
pub fn pin_literal_d() -> Pin {
    let name = "H:i-inf->j-inf-literal@i=1,j=2".to_string();
    let witness = match h_primed_literal(1, 2) {
        Ok(_) => "constructed".to_string(),
        Err(e) => e.to_string(),
    };
    Pin { name, witness }
}

/// Builds a composite from a list of names, applied first to last.
pub fn compose_names(names: &[&str]) -> Result<EmbeddingSpec> {
    let mut it = names.iter();
    let first = it.next().ok_or_else(|| Error::Parameters("no embeddings to compose".into()))?;
    it.try_fold(named_embedding(first)?, |acc, n| compose(&named_embedding(n)?, &acc))
}
