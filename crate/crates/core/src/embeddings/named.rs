//! The registry of concrete embeddings, addressed by ASCII names such as
//! `F:4->5`, `F:i-inf->j-inf@i=1,j=3` or `H:inf->pi`.

use std::collections::BTreeMap;

use crate::embeddings::{compose, EmbeddingSpec, PointMap, Step};
use crate::error::{Error, Result};
use crate::kernel::{Arc, ArcSet, Endpoint, Ext, Model};
use crate::models::line::Line;
use crate::models::pifam::{DyadicFamily, DyadicKind, FanKind, PiFan};
use crate::models::seq::{zigzag, zigzag_around, zigzag_in, zigzag_odd, Coord, Generator, SeqFamily};

/// Registered names; parameters go after `@` as `key=value` pairs.
pub const NAMES: &[&str] = &[
    "F:m->n",
    "F:m->n-literal",
    "F:n->inf",
    "F:n->inf-literal",
    "F:n->1-inf-bar",
    "F:inf->1-inf",
    "F:i-inf->j-inf@i,j",
    "F:i-inf-bar->j-inf-bar@i,j",
    "F:i-inf->i-inf-bar@i",
    "F:1-inf-bar->inf-bar",
    "F:inf-bar->2-inf-bar",
    "F:i-inf-bar->pi@i",
    "F:j-inf->pi@j",
    "F:inf->inf-bar",
    "F:inf->primed",
    "H:i-inf->j-inf@i,j",
    "H:i-inf->j-inf-literal@i,j",
    "H:inf->pi",
];

const OUT_OF_SCOPE: &[(&str, &str)] = &[
    ("G:", "the embeddings G_m^n, G_m^Z and G_n^Z are defined in external work and not built here"),
    ("F:pi->R", "the embedding of the hyperbolic theory into the real line is cited, not constructed"),
    ("F:j-inf-bar->R", "its last factor is the cited embedding of the hyperbolic theory into the real line"),
];

fn arcs(model: Model, arcs: impl IntoIterator<Item = Arc>) -> Result<ArcSet> {
    ArcSet::from_arcs(model, arcs)
}

fn top(level: u32) -> Endpoint {
    Endpoint::lev_bar_top(level)
}

/// `F_m^{m+1}`: shift so that the new vertex is the odd one out, add `(1, m+1)`.
pub fn f_poly_step(m: u32) -> Result<EmbeddingSpec> {
    let map = PointMap::PolyShift { m, by: if m.is_multiple_of(2) { 1 } else { 0 } };
    let fill = arcs(map.target(), [Arc::poly(1, m as i64 + 1)])?;
    EmbeddingSpec::new(format!("F:{m}->{}", m + 1), vec![Step::new(map).with_fill(fill)?])
}

/// `F_m^{m+1}` with the filler read literally: the image of the long arc only.
pub fn f_poly_step_literal(m: u32) -> Result<EmbeddingSpec> {
    let by = if m.is_multiple_of(2) { 1 } else { 0 };
    let map = PointMap::PolyShift { m, by };
    let fill = arcs(map.target(), [Arc::poly(1 + by, m as i64 + by)])?;
    EmbeddingSpec::new(format!("F:{m}->{}-literal", m + 1), vec![Step::new(map).with_fill(fill)?])
}

pub fn f_poly(m: u32, n: u32) -> Result<EmbeddingSpec> {
    if !(2 <= m && m < n) {
        return Err(Error::Parameters(format!("F:m->n needs 2 ≤ m < n, got m={m}, n={n}")));
    }
    let mut e = f_poly_step(m)?;
    for k in m + 1..n {
        e = compose(&f_poly_step(k)?, &e)?;
    }
    e.name = format!("F:{m}->{n}");
    Ok(e)
}

fn half_up(n: u32) -> i64 {
    (n as i64 + 1) / 2
}

fn to_inf_step(n: u32, literal: bool) -> Result<Step> {
    if n < 2 {
        return Err(Error::Parameters(format!("F:n->inf needs n ≥ 2, got {n}")));
    }
    let map = PointMap::PolyToZ { n };
    let (a, b) = (1 - half_up(n), n as i64 - half_up(n));
    let mut fill = ArcSet::new(Model::Infinity);
    if n >= 3 {
        fill.insert(Arc::z(a, b))?;
    }
    let fan = if literal {
        zigzag_odd(Model::Infinity, Line::Z, half_up(n))?
    } else {
        zigzag_around(Model::Infinity, Line::Z, a, b)?
    };
    fill.add_family(fan.shared())?;
    Step::new(map).with_fill(fill)
}

/// `F_n^∞`: centre the polygon on `Z` and surround it with a zig-zag.
pub fn f_to_inf(n: u32) -> Result<EmbeddingSpec> {
    EmbeddingSpec::new(format!("F:{n}->inf"), vec![to_inf_step(n, false)?])
}

pub fn f_to_inf_literal(n: u32) -> Result<EmbeddingSpec> {
    EmbeddingSpec::new(format!("F:{n}->inf-literal"), vec![to_inf_step(n, true)?])
}

/// `N_∞ ≅ N_{1,∞}`.
pub fn iso_lev() -> Result<EmbeddingSpec> {
    EmbeddingSpec::new("F:inf->1-inf", vec![Step::new(PointMap::ZToLev)])
}

fn check_ij(name: &str, i: u32, j: u32) -> Result<()> {
    if 1 <= i && i < j {
        Ok(())
    } else {
        Err(Error::Parameters(format!("{name} needs 1 ≤ i < j, got i={i}, j={j}")))
    }
}

/// `F_{i,∞}^{j,∞}`: move up `j − i` levels and fill the new bottom levels.
pub fn f_lev(i: u32, j: u32) -> Result<EmbeddingSpec> {
    check_ij("F:i-inf->j-inf", i, j)?;
    let model = Model::Leveled(j);
    let mut fill = ArcSet::new(model);
    for l in 1..=j - i {
        fill.add_family(zigzag(model, Line::Lev(l))?.shared())?;
    }
    let step = Step::new(PointMap::LevShift { i, j }).with_fill(fill)?;
    EmbeddingSpec::new(format!("F:i-inf->j-inf@i={i},j={j}"), vec![step])
}

/// `F_{\bar i}^{\bar j}`: as [`f_lev`], plus arcs between the new `+∞` points
/// and a completion at the highest new one.
pub fn f_levbar(i: u32, j: u32) -> Result<EmbeddingSpec> {
    check_ij("F:i-inf-bar->j-inf-bar", i, j)?;
    let model = Model::CompletedLeveled(j);
    let d = j - i;
    let mut fill = ArcSet::new(model);
    for l in 1..=d {
        fill.add_family(zigzag(model, Line::LevBar(l))?.shared())?;
        fill.insert(Arc { lo: top(l), hi: top(j) })?;
        if l < d {
            fill.insert(Arc { lo: top(l), hi: top(l + 1) })?;
        }
    }
    let step = Step::new(PointMap::LevBarShift { i, j }).with_fill(fill)?.completing(top(d))?;
    EmbeddingSpec::new(format!("F:i-inf-bar->j-inf-bar@i={i},j={j}"), vec![step])
}

/// `F_{i,∞}^{\bar i}`: include, then complete at `(+∞, i), …, (+∞, 1)`.
pub fn f_prufer(i: u32) -> Result<EmbeddingSpec> {
    if i < 1 {
        return Err(Error::Parameters("F:i-inf->i-inf-bar needs i ≥ 1".into()));
    }
    let mut step = Step::new(PointMap::LevToLevBar { i });
    for l in (1..=i).rev() {
        step = step.completing(top(l))?;
    }
    EmbeddingSpec::new(format!("F:i-inf->i-inf-bar@i={i}"), vec![step])
}

/// `F_{\bar 1}^{\bar ∞}`: collapse to the completed line, complete at `−∞`.
pub fn f_adic() -> Result<EmbeddingSpec> {
    let step = Step::new(PointMap::LevBarToZBar).completing(Endpoint::ZBar(Ext::NegInf))?;
    EmbeddingSpec::new("F:1-inf-bar->inf-bar", vec![step])
}

/// `F_{\bar ∞}^{\bar 2}`: the completed line becomes level 2, `−∞` becomes `(+∞, 1)`.
pub fn f_zbar_to_levbar2() -> Result<EmbeddingSpec> {
    let model = Model::CompletedLeveled(2);
    let mut fill = ArcSet::new(model);
    fill.add_family(zigzag(model, Line::LevBar(1))?.shared())?;
    fill.insert(Arc { lo: top(1), hi: top(2) })?;
    let step = Step::new(PointMap::ZBarToLevBar2).with_fill(fill)?;
    EmbeddingSpec::new("F:inf-bar->2-inf-bar", vec![step])
}

/// `F_{\bar i}^π`: levels go to `(−i, 0]` through the sequences `a^ℓ`;
/// the rest is filled by the families A, B and C.
pub fn f_pi(i: u32) -> Result<EmbeddingSpec> {
    if i < 1 {
        return Err(Error::Parameters("F:i-inf-bar->pi needs i ≥ 1".into()));
    }
    let mut fill = ArcSet::new(Model::Hyperbolic);
    fill.add_family(DyadicFamily::new(DyadicKind::A).shared())?;
    fill.add_family(PiFan::new(FanKind::B).shared())?;
    fill.add_family(PiFan::new(FanKind::C(i as i64)).shared())?;
    let mut step = Step::new(PointMap::LevBarToPi { i }).with_fill(fill)?;
    if i >= 2 {
        // atan(−i) is a limit of level 1 with no preimage
        step = step.completing(Endpoint::atan_int(-(i as i64)))?;
    }
    EmbeddingSpec::new(format!("F:i-inf-bar->pi@i={i}"), vec![step])
}

/// `H_∞^π`: integers to arctangents, gaps filled by the dyadic family E.
pub fn h_pi() -> Result<EmbeddingSpec> {
    let mut fill = ArcSet::new(Model::Hyperbolic);
    fill.add_family(DyadicFamily::new(DyadicKind::E).shared())?;
    EmbeddingSpec::new("H:inf->pi", vec![Step::new(PointMap::ZToPi).with_fill(fill)?])
}

/// `N_∞ ≅ N'_{1,∞}`: the line read cyclically from 0.
pub fn iso_primed() -> Result<EmbeddingSpec> {
    EmbeddingSpec::new(
        "F:inf->primed",
        vec![Step::new(PointMap::ZToLev), Step::new(PointMap::LevToPrimed { i: 1 })],
    )
}

fn h_primed_step(i: u32, literal: bool) -> Result<Step> {
    let j = i + 1;
    let model = Model::PrimedLeveled(j);
    let mut fill = ArcSet::new(model);
    if literal {
        // consecutive points of level 1, then the bridge to (−1, i)
        let d = SeqFamily::new(
            "D-literal",
            model,
            vec![Generator::new(
                Coord::on(Line::PrimedPos(1), -1, 1),
                Coord::on(Line::PrimedPos(1), 0, 1),
                1,
                1,
            )],
        )?;
        fill.add_family(d.shared())?;
        fill.insert(Arc { lo: Endpoint::primed(0, 2), hi: Endpoint::primed(-1, i) })?;
    } else {
        fill.add_family(zigzag_in(model, 1)?.shared())?;
        fill.insert(Arc { lo: Endpoint::primed(0, 2), hi: Endpoint::primed(-1, j) })?;
        fill.insert(Arc { lo: Endpoint::primed(-1, 1), hi: Endpoint::primed(-1, j) })?;
    }
    Step::new(PointMap::PrimedShift { i, j }).with_fill(fill)
}

/// `H_{i,∞}^{j,∞}` on primed models, one level at a time.
pub fn h_primed(i: u32, j: u32) -> Result<EmbeddingSpec> {
    check_ij("H:i-inf->j-inf", i, j)?;
    let steps = (i..j).map(|k| h_primed_step(k, false)).collect::<Result<Vec<_>>>()?;
    EmbeddingSpec::new(format!("H:i-inf->j-inf@i={i},j={j}"), steps)
}

pub fn h_primed_literal(i: u32, j: u32) -> Result<EmbeddingSpec> {
    check_ij("H:i-inf->j-inf-literal", i, j)?;
    let steps = (i..j).map(|k| h_primed_step(k, true)).collect::<Result<Vec<_>>>()?;
    EmbeddingSpec::new(format!("H:i-inf->j-inf-literal@i={i},j={j}"), steps)
}

fn renamed(mut e: EmbeddingSpec, name: String) -> EmbeddingSpec {
    e.name = name;
    e
}

/// `F_n^{\bar 1}`: into `Z`, onto level 1, complete at `(+∞, 1)`.
pub fn f_poly_to_levbar(n: u32) -> Result<EmbeddingSpec> {
    let e = compose(&f_prufer(1)?, &compose(&iso_lev()?, &f_to_inf(n)?)?)?;
    Ok(renamed(e, format!("F:{n}->1-inf-bar")))
}

/// `F_{j,∞}^π = F_{\bar j}^π ∘ F_{j,∞}^{\bar j}`.
pub fn f_lev_to_pi(j: u32) -> Result<EmbeddingSpec> {
    let e = compose(&f_pi(j)?, &f_prufer(j)?)?;
    Ok(renamed(e, format!("F:j-inf->pi@j={j}")))
}

/// `N_∞ → N_{\bar ∞}` through level 1 and both completions.
pub fn f_inf_to_infbar() -> Result<EmbeddingSpec> {
    let e = compose(&f_adic()?, &compose(&f_prufer(1)?, &iso_lev()?)?)?;
    Ok(renamed(e, "F:inf->inf-bar".into()))
}

fn parse_params(name: &str, text: &str) -> Result<BTreeMap<String, u32>> {
    let mut out = BTreeMap::new();
    for kv in text.split(',').filter(|s| !s.is_empty()) {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad parameter `{kv}` in `{name}`")))?;
        let v = v.trim().parse().map_err(|_| Error::Parse(format!("bad value `{v}` in `{name}`")))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

/// Looks up an embedding by name.
pub fn named_embedding(name: &str) -> Result<EmbeddingSpec> {
    let name = name.trim();
    for (prefix, reason) in OUT_OF_SCOPE {
        if name.starts_with(prefix) {
            return Err(Error::OutOfScope { name: name.into(), reason: (*reason).into() });
        }
    }
    let (base, params) = match name.split_once('@') {
        Some((b, p)) => (b, parse_params(name, p)?),
        None => (name, BTreeMap::new()),
    };
    let get = |k: &str| {
        params
            .get(k)
            .copied()
            .ok_or_else(|| Error::Parameters(format!("`{base}` needs parameter {k}")))
    };
    let num = |s: &str| s.parse::<u32>().ok();
    let Some(rest) = base.strip_prefix("F:").or_else(|| base.strip_prefix("H:")) else {
        return Err(Error::Unknown(name.into()));
    };
    let h = base.starts_with("H:");
    let Some((from, to)) = rest.split_once("->") else {
        return Err(Error::Unknown(name.into()));
    };
    match (h, from, to) {
        (false, m, "inf") if num(m).is_some() => f_to_inf(num(m).unwrap()),
        (false, m, "inf-literal") if num(m).is_some() => f_to_inf_literal(num(m).unwrap()),
        (false, m, "1-inf-bar") if num(m).is_some() => f_poly_to_levbar(num(m).unwrap()),
        (false, m, n) if num(m).is_some() && num(n).is_some() => f_poly(num(m).unwrap(), num(n).unwrap()),
        (false, m, n) if num(m).is_some() && n.strip_suffix("-literal").and_then(num).is_some() => {
            let (m, n) = (num(m).unwrap(), n.strip_suffix("-literal").and_then(num).unwrap());
            if n != m + 1 {
                return Err(Error::Parameters("the literal filler is a single step m -> m+1".into()));
            }
            f_poly_step_literal(m)
        }
        (false, "inf", "1-inf") => iso_lev(),
        (false, "i-inf", "j-inf") => f_lev(get("i")?, get("j")?),
        (false, "i-inf-bar", "j-inf-bar") => f_levbar(get("i")?, get("j")?),
        (false, "i-inf", "i-inf-bar") => f_prufer(get("i")?),
        (false, "1-inf-bar", "inf-bar") => f_adic(),
        (false, "inf-bar", "2-inf-bar") => f_zbar_to_levbar2(),
        (false, "i-inf-bar", "pi") => f_pi(get("i")?),
        (false, "j-inf", "pi") => f_lev_to_pi(get("j")?),
        (false, "inf", "inf-bar") => f_inf_to_infbar(),
        (false, "inf", "primed") => iso_primed(),
        (true, "i-inf", "j-inf") => h_primed(get("i")?, get("j")?),
        (true, "i-inf", "j-inf-literal") => h_primed_literal(get("i")?, get("j")?),
        (true, "inf", "pi") => h_pi(),
        _ => Err(Error::Unknown(name.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_step_adds_the_long_arc() {
        let e = named_embedding("F:4->5").unwrap();
        let t = arcs(Model::Polygon(4), [Arc::poly(1, 3), Arc::poly(1, 4)]).unwrap();
        let img = e.apply(&t).unwrap();
        let want: Vec<Arc> = vec![Arc::poly(1, 5), Arc::poly(2, 4), Arc::poly(2, 5)];
        assert_eq!(img.explicit().iter().cloned().collect::<Vec<_>>(), want);
    }

    #[test]
    fn names_resolve() {
        for name in [
            "F:4->6",
            "F:4->5-literal",
            "F:5->inf",
            "F:4->inf-literal",
            "F:5->1-inf-bar",
            "F:inf->1-inf",
            "F:i-inf->j-inf@i=1,j=3",
            "F:i-inf-bar->j-inf-bar@i=2,j=3",
            "F:i-inf->i-inf-bar@i=2",
            "F:1-inf-bar->inf-bar",
            "F:inf-bar->2-inf-bar",
            "F:i-inf-bar->pi@i=1",
            "F:j-inf->pi@j=2",
            "F:inf->inf-bar",
            "F:inf->primed",
            "H:i-inf->j-inf@i=1,j=3",
            "H:inf->pi",
        ] {
            let e = named_embedding(name).unwrap_or_else(|err| panic!("{name}: {err}"));
            assert!(!e.steps.is_empty());
        }
    }

    #[test]
    fn stubs_and_bad_names() {
        assert!(matches!(named_embedding("G:4->Z"), Err(Error::OutOfScope { .. })));
        assert!(matches!(named_embedding("F:pi->R"), Err(Error::OutOfScope { .. })));
        assert!(matches!(named_embedding("F:5->4"), Err(Error::Parameters(_))));
        assert!(matches!(named_embedding("F:i-inf->j-inf"), Err(Error::Parameters(_))));
        assert!(matches!(named_embedding("X:1->2"), Err(Error::Unknown(_))));
    }

    #[test]
    fn literal_d_is_not_a_set_of_arcs() {
        let err = named_embedding("H:i-inf->j-inf-literal@i=1,j=2").unwrap_err();
        assert_eq!(
            err,
            Error::InvalidArc(Arc { lo: Endpoint::primed(0, 1), hi: Endpoint::primed(1, 1) })
        );
    }
}
