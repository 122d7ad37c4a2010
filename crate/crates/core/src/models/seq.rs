//! Families whose members are produced by finitely many linear generators:
//! member `k` of a generator joins two coordinates, each either a fixed
//! endpoint or the point of index `c + s·k` on a [`Line`].

use std::fmt;
use std::sync::Arc as Shared;

use crate::embeddings::{LineImage, PointMap};
use crate::error::{Error, Result};
use crate::kernel::{interleaved, Arc, ArcFamily, Endpoint, FamilyRef, Incidence, Model, Window};
use crate::models::line::{Line, Loc};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coord {
    /// Index `c + s·k` on `line`, with `s = ±1`.
    On { line: Line, c: i64, s: i64 },
    Fixed(Endpoint),
}

impl Coord {
    pub fn on(line: Line, c: i64, s: i64) -> Self {
        Coord::On { line, c, s }
    }

    fn at(&self, k: i64) -> Endpoint {
        match self {
            Coord::On { line, c, s } => line.point(c + s * k),
            Coord::Fixed(e) => e.clone(),
        }
    }

    fn is_on(&self) -> bool {
        matches!(self, Coord::On { .. })
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::On { line, c, s } => write!(f, "on:{line}:{c}:{s}"),
            Coord::Fixed(e) => write!(f, "at:{e}"),
        }
    }
}

/// Members `(lo(k), hi(k))` for `k = k0, k0 + step, …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub lo: Coord,
    pub hi: Coord,
    pub k0: i64,
    pub step: i64,
}

impl Generator {
    pub fn new(lo: Coord, hi: Coord, k0: i64, step: i64) -> Self {
        Generator { lo, hi, k0, step }
    }

    pub fn member(&self, k: i64) -> Arc {
        Arc { lo: self.lo.at(k), hi: self.hi.at(k) }
    }

    fn ks(&self, upto: i64) -> impl Iterator<Item = i64> {
        (self.k0..=upto.max(self.k0 - 1)).step_by(self.step as usize)
    }

    fn on_lattice(&self, k: i64) -> bool {
        k >= self.k0 && (k - self.k0) % self.step == 0
    }

    fn coords(&self) -> [&Coord; 2] {
        [&self.lo, &self.hi]
    }

    fn max_c(&self) -> i64 {
        self.coords()
            .iter()
            .filter_map(|c| match c {
                Coord::On { c, .. } => Some(c.abs()),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// The parameter `k` placing `coord` at `e`, if any.
    fn solve(&self, coord: &Coord, e: &Endpoint) -> Option<i64> {
        match coord {
            Coord::On { line, c, s } => {
                let Loc::At(m) = line.locate(e)? else { return None };
                let k = (m - c) * s;
                self.on_lattice(k).then_some(k)
            }
            Coord::Fixed(_) => None,
        }
    }

    fn contains(&self, arc: &Arc) -> bool {
        let k = match (&self.lo, &self.hi) {
            (Coord::On { .. }, _) => self.solve(&self.lo, &arc.lo),
            (_, Coord::On { .. }) => self.solve(&self.hi, &arc.hi),
            _ => Some(self.k0),
        };
        k.is_some_and(|k| self.member(k) == *arc)
    }

    /// Beyond this parameter every comparison between a member endpoint and
    /// any of `pts` is constant.
    fn settle_bound(&self, pts: &[&Endpoint]) -> i64 {
        let mut bound = self.k0;
        for coord in self.coords() {
            if let Coord::On { line, c, .. } = coord {
                for p in pts {
                    if let Some(m) = line.locate(p).and_then(|l| l.index()) {
                        bound = bound.max(m.abs() + c.abs() + 2);
                    }
                }
            }
        }
        bound
    }

    fn crossing_member(&self, arc: &Arc) -> Option<Arc> {
        let bound = self.settle_bound(&[&arc.lo, &arc.hi]) + self.step;
        self.ks(bound).map(|k| self.member(k)).find(|m| interleaved(m, arc))
    }

    fn enumerate_in_window(&self, w: &Window) -> Vec<Arc> {
        let mut bound = i64::MAX;
        for coord in self.coords() {
            if let Coord::On { line, c, .. } = coord {
                let reach = w
                    .points()
                    .iter()
                    .filter_map(|p| match line.locate(p) {
                        Some(Loc::At(m)) => Some(m.abs()),
                        _ => None,
                    })
                    .max();
                match reach {
                    Some(r) => bound = bound.min(r + c.abs()),
                    None => return Vec::new(),
                }
            }
        }
        if bound == i64::MAX {
            bound = self.k0;
        }
        self.ks(bound).map(|k| self.member(k)).filter(|a| w.contains_arc(a)).collect()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gen={};{};{};{}", self.lo, self.hi, self.k0, self.step)
    }
}

/// A lazily represented family given by linear generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqFamily {
    name: String,
    model: Model,
    gens: Vec<Generator>,
}

/// Number of leading members checked for validity at construction.
const CHECKED_PREFIX: i64 = 12;

impl SeqFamily {
    /// Checks that generators stay inside their lines and that leading members
    /// are valid arcs.
    pub fn new(name: impl Into<String>, model: Model, gens: Vec<Generator>) -> Result<Self> {
        let name = name.into();
        for g in &gens {
            if g.step < 1 || !(g.lo.is_on() || g.hi.is_on()) {
                return Err(Error::Parameters(format!("degenerate generator {g} in `{name}`")));
            }
            for coord in g.coords() {
                if let Coord::On { line, c, s } = coord {
                    let first = c + s * g.k0;
                    let stays = match line {
                        Line::PrimedPos(_) => *s > 0 && first >= 0,
                        Line::PrimedNeg(_) => *s < 0 && first < 0,
                        _ => s.abs() == 1,
                    };
                    if !stays || s.abs() != 1 {
                        return Err(Error::Parameters(format!(
                            "generator {g} of `{name}` leaves line {line}"
                        )));
                    }
                }
            }
            for k in g.ks(g.k0 + CHECKED_PREFIX * g.step) {
                let a = g.member(k);
                model.ensure(&a.lo)?;
                model.ensure(&a.hi)?;
                if a.lo >= a.hi || !model.is_arc(&a.lo, &a.hi) {
                    return Err(Error::InvalidArc(a));
                }
            }
        }
        Ok(SeqFamily { name, model, gens })
    }

    pub fn shared(self) -> FamilyRef {
        Shared::new(self)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    fn candidate(&self, p: &Endpoint, apex: &Endpoint) -> bool {
        if p == apex {
            return false;
        }
        let arc = Arc::sorted(p.clone(), apex.clone());
        self.model.is_arc(&arc.lo, &arc.hi) && !self.crosses(&arc)
    }

    pub(crate) fn parse_generator(
        text: &str,
        parse_endpoint: &dyn Fn(&str) -> Result<Endpoint>,
    ) -> Result<Generator> {
        let bad = || Error::Parse(format!("bad generator `{text}`"));
        let parts: Vec<&str> = text.split(';').collect();
        if parts.len() != 4 {
            return Err(bad());
        }
        let coord = |s: &str| -> Result<Coord> {
            if let Some(rest) = s.strip_prefix("on:") {
                let f: Vec<&str> = rest.split(':').collect();
                if f.len() != 3 {
                    return Err(bad());
                }
                Ok(Coord::On {
                    line: Line::parse(f[0])?,
                    c: f[1].parse().map_err(|_| bad())?,
                    s: f[2].parse().map_err(|_| bad())?,
                })
            } else if let Some(rest) = s.strip_prefix("at:") {
                Ok(Coord::Fixed(parse_endpoint(rest)?))
            } else {
                Err(bad())
            }
        };
        Ok(Generator {
            lo: coord(parts[0])?,
            hi: coord(parts[1])?,
            k0: parts[2].parse().map_err(|_| bad())?,
            step: parts[3].parse().map_err(|_| bad())?,
        })
    }
}

impl ArcFamily for SeqFamily {
    fn name(&self) -> &str {
        &self.name
    }

    fn model(&self) -> Model {
        self.model
    }

    fn contains(&self, arc: &Arc) -> bool {
        self.gens.iter().any(|g| g.contains(arc))
    }

    fn crossing_member(&self, arc: &Arc) -> Option<Arc> {
        self.gens.iter().find_map(|g| g.crossing_member(arc))
    }

    fn enumerate_in_window(&self, w: &Window) -> Vec<Arc> {
        if w.model() != self.model {
            return Vec::new();
        }
        let mut out: Vec<Arc> = self.gens.iter().flat_map(|g| g.enumerate_in_window(w)).collect();
        out.sort();
        out.dedup();
        out
    }

    fn incidence(&self, e: &Endpoint) -> Incidence {
        let (mut below, mut above) = (false, false);
        let mut finite = Vec::new();
        for g in &self.gens {
            for (coord, other, is_lo) in [(&g.lo, &g.hi, true), (&g.hi, &g.lo, false)] {
                match coord {
                    Coord::Fixed(p) if p == e => {
                        if other.is_on() {
                            if is_lo {
                                above = true;
                            } else {
                                below = true;
                            }
                        } else {
                            finite.push(g.member(g.k0));
                        }
                    }
                    Coord::Fixed(_) => {}
                    Coord::On { .. } => finite.extend(g.solve(coord, e).map(|k| g.member(k))),
                }
            }
        }
        if below || above {
            Incidence::Infinite { below, above }
        } else {
            finite.sort();
            finite.dedup();
            Incidence::Finite(finite)
        }
    }

    fn neighbors_within(&self, e: &Endpoint, depth: u32) -> Vec<Arc> {
        let mut out = Vec::new();
        for g in &self.gens {
            for (coord, other) in [(&g.lo, &g.hi), (&g.hi, &g.lo)] {
                match coord {
                    Coord::Fixed(p) if p == e => {
                        let last = if other.is_on() { g.k0 + depth as i64 * g.step } else { g.k0 };
                        out.extend(g.ks(last).map(|k| g.member(k)));
                    }
                    Coord::Fixed(_) => {}
                    Coord::On { .. } => out.extend(g.solve(coord, e).map(|k| g.member(k))),
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn infinite_points(&self) -> Vec<Endpoint> {
        let mut out = Vec::new();
        for g in &self.gens {
            match (&g.lo, &g.hi) {
                (Coord::Fixed(p), Coord::On { .. }) | (Coord::On { .. }, Coord::Fixed(p)) => {
                    out.push(p.clone())
                }
                _ => {}
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn apex_candidates(&self, apex: &Endpoint) -> Result<Vec<Endpoint>> {
        let mut out = Vec::new();
        for g in &self.gens {
            let settle = g.settle_bound(&[apex]).max(g.k0 + g.max_c()) + 4;
            for k in g.ks(settle) {
                let m = g.member(k);
                for p in [m.lo, m.hi] {
                    if self.candidate(&p, apex) {
                        out.push(p);
                    }
                }
            }
            // past the settling point the run must be closed off from the apex
            for k in g.ks(settle + 3 * g.step).filter(|k| *k > settle) {
                for coord in g.coords().into_iter().filter(|c| c.is_on()) {
                    if self.candidate(&coord.at(k), apex) {
                        return Err(Error::Unresolved {
                            family: self.name.clone(),
                            reason: format!("unbounded run of arcs to {apex} is uncrossed"),
                        });
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn descriptor(&self) -> String {
        let mut s = format!("seq {}", self.name);
        for g in &self.gens {
            s.push(' ');
            s.push_str(&g.to_string());
        }
        s
    }

    fn map_through(&self, map: &PointMap) -> Result<(Vec<Arc>, Vec<FamilyRef>)> {
        let target = map.target();
        let mut explicit = Vec::new();
        let mut gens = Vec::new();
        for g in &self.gens {
            let (prefix, tail) = map_generator(g, map)?;
            explicit.extend(prefix);
            gens.push(tail);
        }
        let fam = SeqFamily::new(self.name.clone(), target, gens)?;
        Ok((explicit, vec![fam.shared()]))
    }
}

/// Image of one generator: the members materialised before the image settles,
/// and a generator for the rest.
fn map_generator(g: &Generator, map: &PointMap) -> Result<(Vec<Arc>, Generator)> {
    let image_of = |coord: &Coord| -> Result<Coord> {
        Ok(match coord {
            Coord::Fixed(p) => Coord::Fixed(map.apply(p)?),
            Coord::On { line, c, s } => {
                let img = map.line_image(*line).ok_or_else(|| Error::OutsideDomain(
                    map.name(),
                    line.point(c + s * g.k0),
                ))?;
                let (l, off) = match img {
                    LineImage::Shift(l, off) => (l, off),
                    LineImage::BySign { nonneg, neg } => {
                        if *s > 0 {
                            nonneg
                        } else {
                            neg
                        }
                    }
                };
                Coord::On { line: l, c: c + off, s: *s }
            }
        })
    };
    let split = g.coords().iter().any(|c| match c {
        Coord::On { line, .. } => matches!(map.line_image(*line), Some(LineImage::BySign { .. })),
        _ => false,
    });
    let mut start = g.k0;
    if split || !map.order_preserving() {
        // wait until every split coordinate has reached its final sign and the
        // relative order of the two ends is settled
        start = start.max(g.k0 + g.max_c() + 2);
        while !g.on_lattice(start) {
            start += 1;
        }
    }
    let mut prefix = Vec::new();
    for k in g.ks(start - 1) {
        let m = g.member(k);
        prefix.push(Arc::sorted(map.apply(&m.lo)?, map.apply(&m.hi)?));
    }
    let (mut lo, mut hi) = (image_of(&g.lo)?, image_of(&g.hi)?);
    let probe = Generator::new(lo.clone(), hi.clone(), start, g.step).member(start);
    if probe.lo > probe.hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    Ok((prefix, Generator::new(lo, hi, start, g.step)))
}

/// The zig-zag `{(−k, k), (−k, k + 1)}` on `line`, restricted to members whose
/// span strictly contains `[a, b]` (with `a ≤ 0 < b`).
pub fn zigzag_around(model: Model, line: Line, a: i64, b: i64) -> Result<SeqFamily> {
    let mut k1 = (-a).max(b).max(1);
    if (-k1, k1) == (a, b) {
        k1 += 1;
    }
    let mut k2 = (-a).max(b - 1).max(1);
    if (-k2, k2 + 1) == (a, b) {
        k2 += 1;
    }
    SeqFamily::new(
        format!("zigzag@{line}"),
        model,
        vec![
            Generator::new(Coord::on(line, 0, -1), Coord::on(line, 0, 1), k1, 1),
            Generator::new(Coord::on(line, 0, -1), Coord::on(line, 1, 1), k2, 1),
        ],
    )
}

/// The full zig-zag `{(−k, k), (−k, k + 1) : k ≥ 1}` on `line`.
pub fn zigzag(model: Model, line: Line) -> Result<SeqFamily> {
    zigzag_around(model, line, 0, 1)
}

/// `{(a − k, b + k − 1), (a − k, b + k) : k ≥ 1}`: triangulates everything
/// outside the segment `[a, b]`.
pub fn zigzag_out(model: Model, line: Line, a: i64, b: i64) -> Result<SeqFamily> {
    if b < a {
        return Err(Error::Parameters(format!("zigzag_out needs a ≤ b, got {a} > {b}")));
    }
    SeqFamily::new(
        format!("zigzag-out({a},{b})@{line}"),
        model,
        vec![
            Generator::new(Coord::on(line, a, -1), Coord::on(line, b - 1, 1), 1, 1),
            Generator::new(Coord::on(line, a, -1), Coord::on(line, b, 1), 1, 1),
        ],
    )
}

/// The odd-indexed fan `{(−i, i), (−i, i + 1) : i ≥ from, i odd}`.
pub fn zigzag_odd(model: Model, line: Line, from: i64) -> Result<SeqFamily> {
    let k0 = if from.rem_euclid(2) == 1 { from } else { from + 1 };
    SeqFamily::new(
        format!("odd-fan@{line}"),
        model,
        vec![
            Generator::new(Coord::on(line, 0, -1), Coord::on(line, 0, 1), k0, 2),
            Generator::new(Coord::on(line, 0, -1), Coord::on(line, 1, 1), k0, 2),
        ],
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FanSide {
    /// Arcs `(i, k)` with `i ≤ k − 2`.
    Left,
    /// Arcs `(k, i)` with `i ≥ k + 2`.
    Right,
}

/// All arcs from the point of index `k` on `line` to one side of it.
pub fn apex_fan(model: Model, line: Line, k: i64, side: FanSide) -> Result<SeqFamily> {
    let apex = Coord::Fixed(line.point(k));
    let gen = match side {
        FanSide::Left => Generator::new(Coord::on(line, k, -1), apex, 2, 1),
        FanSide::Right => Generator::new(apex, Coord::on(line, k, 1), 2, 1),
    };
    SeqFamily::new(format!("fan-{side:?}({k})@{line}").to_lowercase(), model, vec![gen])
}

/// `{((n, ℓ), (−n−1, ℓ)), ((n+1, ℓ), (−n−1, ℓ)) : n ≥ 0}` on a primed level:
/// a zig-zag converging to the middle of the level.
pub fn zigzag_in(model: Model, level: u32) -> Result<SeqFamily> {
    let (pos, neg) = (Line::PrimedPos(level), Line::PrimedNeg(level));
    SeqFamily::new(
        format!("zigzag-in@{level}"),
        model,
        vec![
            Generator::new(Coord::on(pos, 0, 1), Coord::on(neg, -1, -1), 0, 1),
            Generator::new(Coord::on(pos, 1, 1), Coord::on(neg, -1, -1), 0, 1),
        ],
    )
}
