//! Families of the hyperbolic model: dyadic subdivisions and fans to a point.

use std::sync::Arc as Shared;

use num::{One, Zero};

use crate::embeddings::PointMap;
use crate::error::{Error, Result};
use crate::kernel::{
    floor_q, interleaved, is_dyadic, is_integer, Arc, ArcFamily, Endpoint, FamilyRef, Incidence,
    Model, PiPoint, Window, Q,
};
use crate::models::line::Loc;
use crate::models::pi::{a_point_above_limit, a_seq, is_a_point, locate_in_level};

/// Deepest subdivision level explored for a non-dyadic query point.
const MAX_DEPTH: u32 = 64;

fn qi(n: i64) -> Q {
    Q::from_integer(n as i128)
}

fn atan_arg(e: &Endpoint) -> Option<&Q> {
    match e {
        Endpoint::Pi(PiPoint::Atan(q)) => Some(q),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DyadicKind {
    /// Subdivisions of every `[a_m^ℓ, a_{m+1}^ℓ]`.
    A,
    /// Subdivisions of every `[n, n + 1]`.
    E,
}

/// Where a rational sits relative to the base intervals of a dyadic family.
enum Pos {
    /// Strictly inside the base interval `[lo, hi]`.
    Inside { lo: Q, hi: Q },
    /// An endpoint of two adjacent base intervals.
    Base,
    /// Neither: a limit point of base points.
    Limit,
}

/// All arcs `(x_{j,k}, x_{j+1,k})` of the dyadic subdivisions of a family of
/// base intervals, read through `atan`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicFamily {
    kind: DyadicKind,
}

impl DyadicFamily {
    pub fn new(kind: DyadicKind) -> Self {
        DyadicFamily { kind }
    }

    pub fn shared(self) -> FamilyRef {
        Shared::new(self)
    }

    fn pos(&self, x: &Q) -> Pos {
        let f = floor_q(x) as i64;
        match self.kind {
            DyadicKind::E if is_integer(x) => Pos::Base,
            DyadicKind::E => Pos::Inside { lo: qi(f), hi: qi(f + 1) },
            DyadicKind::A if is_integer(x) => Pos::Limit,
            DyadicKind::A => match locate_in_level(x, f) {
                Loc::At(_) => Pos::Base,
                Loc::Gap(m) => Pos::Inside { lo: a_seq(m, f), hi: a_seq(m + 1, f) },
                _ => unreachable!("x lies strictly inside its level"),
            },
        }
    }

    fn base_of_pair(&self, x: &Q, y: &Q) -> Option<(Q, Q)> {
        match self.pos(&((x + y) / qi(2))) {
            Pos::Inside { lo, hi } if lo <= *x && *y <= hi => Some((lo, hi)),
            _ => None,
        }
    }

    fn to_arc(lo: &Q, hi: &Q, s: &Q, t: &Q) -> Arc {
        let w = hi - lo;
        Arc { lo: Endpoint::atan(lo + w * s), hi: Endpoint::atan(lo + w * t) }
    }

    /// A subdivision arc of `[lo, hi]` strictly containing the normalised
    /// point `s ∈ (0, 1)` but not the normalised point `t`.
    fn separating(lo: &Q, hi: &Q, s: &Q, t: Option<&Q>) -> Option<Arc> {
        let outside = |p: &Q, q: &Q| match t {
            None => true,
            Some(t) => t < p || t > q,
        };
        let mut scale = Q::one();
        for _ in 0..=MAX_DEPTH {
            let j = (s * scale).floor();
            let p = j / scale;
            let q = (j + Q::one()) / scale;
            if p == *s {
                // s is a subdivision point from this depth on
                return None;
            }
            if outside(&p, &q) {
                return Some(Self::to_arc(lo, hi, &p, &q));
            }
            scale *= qi(2);
        }
        None
    }
}

impl ArcFamily for DyadicFamily {
    fn name(&self) -> &str {
        match self.kind {
            DyadicKind::A => "A",
            DyadicKind::E => "E",
        }
    }

    fn model(&self) -> Model {
        Model::Hyperbolic
    }

    fn contains(&self, arc: &Arc) -> bool {
        let (Some(x), Some(y)) = (atan_arg(&arc.lo), atan_arg(&arc.hi)) else {
            return false;
        };
        let Some((lo, hi)) = self.base_of_pair(x, y) else {
            return false;
        };
        let w = hi - lo;
        let s = (x - lo) / w;
        let d = (y - x) / w;
        d.numer().is_one() && is_dyadic(&d) && (s / d).is_integer()
    }

    fn crossing_member(&self, arc: &Arc) -> Option<Arc> {
        let ends = [atan_arg(&arc.lo), atan_arg(&arc.hi)];
        for (k, z) in ends.iter().enumerate() {
            let Some(z) = z else { continue };
            let Pos::Inside { lo, hi } = self.pos(z) else { continue };
            let w = hi - lo;
            let s = (*z - lo) / w;
            // the other end in the same coordinates; π/2 lies above everything
            let t = ends[1 - k].map(|o| (o - lo) / w);
            if let Some(m) = Self::separating(&lo, &hi, &s, t.as_ref()) {
                debug_assert!(interleaved(&m, arc));
                return Some(m);
            }
        }
        None
    }

    fn enumerate_in_window(&self, w: &Window) -> Vec<Arc> {
        let pts: Vec<&Endpoint> = w.points().iter().filter(|p| atan_arg(p).is_some()).collect();
        let mut out = Vec::new();
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                let arc = Arc { lo: (*a).clone(), hi: (*b).clone() };
                if self.contains(&arc) {
                    out.push(arc);
                }
            }
        }
        out
    }

    fn incidence(&self, e: &Endpoint) -> Incidence {
        let Some(x) = atan_arg(e) else { return Incidence::Finite(Vec::new()) };
        match self.pos(x) {
            Pos::Base => Incidence::Infinite { below: true, above: true },
            Pos::Limit => Incidence::Finite(Vec::new()),
            Pos::Inside { lo, hi } => {
                if is_dyadic(&((x - lo) / (hi - lo))) {
                    Incidence::Infinite { below: true, above: true }
                } else {
                    Incidence::Finite(Vec::new())
                }
            }
        }
    }

    fn neighbors_within(&self, e: &Endpoint, depth: u32) -> Vec<Arc> {
        let Some(x) = atan_arg(e) else { return Vec::new() };
        let depth = depth.min(8);
        let mut out = Vec::new();
        let mut push_sides = |lo: &Q, hi: &Q, s: &Q, from: u32| {
            for k in from..=from + depth {
                let step = Q::new(1, 1i128 << k);
                if *s > Q::zero() {
                    out.push(Self::to_arc(lo, hi, &(s - step), s));
                }
                if *s < Q::one() {
                    out.push(Self::to_arc(lo, hi, s, &(s + step)));
                }
            }
        };
        match self.pos(x) {
            Pos::Inside { lo, hi } => {
                let s = (x - lo) / (hi - lo);
                if is_dyadic(&s) {
                    let k = s.denom().trailing_zeros();
                    push_sides(&lo, &hi, &s, k);
                }
            }
            Pos::Base => {
                // the base intervals on either side of x
                let (below, above) = match self.kind {
                    DyadicKind::E => ((x - qi(1), *x), (*x, x + qi(1))),
                    DyadicKind::A => {
                        let f = floor_q(x) as i64;
                        let Loc::At(m) = locate_in_level(x, f) else { unreachable!() };
                        ((a_seq(m - 1, f), *x), (*x, a_seq(m + 1, f)))
                    }
                };
                push_sides(&below.0, &below.1, &Q::one(), 0);
                push_sides(&above.0, &above.1, &Q::zero(), 0);
            }
            Pos::Limit => {}
        }
        out.sort();
        out.dedup();
        out
    }

    fn infinite_points(&self) -> Vec<Endpoint> {
        // every subdivision point qualifies; there is no finite list
        Vec::new()
    }

    fn locally_finite(&self) -> bool {
        false
    }

    /// Points of a dyadic family are crossed from outside or already joined.
    fn apex_candidates(&self, _apex: &Endpoint) -> Result<Vec<Endpoint>> {
        Ok(Vec::new())
    }

    fn descriptor(&self) -> String {
        match self.kind {
            DyadicKind::A => "dyadic-a".into(),
            DyadicKind::E => "dyadic-e".into(),
        }
    }

    fn map_through(&self, map: &PointMap) -> Result<(Vec<Arc>, Vec<FamilyRef>)> {
        Err(Error::OutsideDomain(map.name(), Endpoint::half_pi()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FanKind {
    /// Arcs to `π/2` from every `a_m^ℓ` with `ℓ ≥ 0` and every integer `≥ 0`.
    B,
    /// Arcs to `atan 0` from every `a_m^ℓ` with `ℓ < −i` and every integer `≤ −i`.
    C(i64),
}

/// A fan of arcs into one apex from a discrete set of sources.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiFan {
    kind: FanKind,
}

impl PiFan {
    pub fn new(kind: FanKind) -> Self {
        PiFan { kind }
    }

    pub fn shared(self) -> FamilyRef {
        Shared::new(self)
    }

    pub fn apex(&self) -> Endpoint {
        match self.kind {
            FanKind::B => Endpoint::half_pi(),
            FanKind::C(_) => Endpoint::atan_int(0),
        }
    }

    /// Whether `x` is a source of the fan.
    fn is_source(&self, x: &Q) -> bool {
        match self.kind {
            FanKind::B => *x >= Q::zero() && (is_integer(x) || is_a_point(x)),
            FanKind::C(i) => {
                (is_integer(x) && *x <= qi(-i)) || (is_a_point(x) && floor_q(x) < -(i as i128))
            }
        }
    }

    /// A source strictly between `u` and `v`: the successor of `u` among the
    /// sources, or any nearby source when `u` is a limit of sources.
    fn source_between(&self, u: &Q, v: &Q) -> Option<Q> {
        let l = floor_q(u) as i64;
        let next_in_level = || match locate_in_level(u, l) {
            Loc::At(m) | Loc::Gap(m) => a_seq(m + 1, l),
            _ => unreachable!("u lies strictly inside its level"),
        };
        let s = match self.kind {
            FanKind::B if *u < Q::zero() => Q::zero(),
            FanKind::C(i) if *u >= qi(-i) => return None,
            _ if is_integer(u) => a_point_above_limit(l, v),
            _ => next_in_level(),
        };
        (s < *v).then_some(s)
    }
}

impl ArcFamily for PiFan {
    fn name(&self) -> &str {
        match self.kind {
            FanKind::B => "B",
            FanKind::C(_) => "C",
        }
    }

    fn model(&self) -> Model {
        Model::Hyperbolic
    }

    fn contains(&self, arc: &Arc) -> bool {
        arc.hi == self.apex() && atan_arg(&arc.lo).is_some_and(|x| self.is_source(x))
    }

    fn crossing_member(&self, arc: &Arc) -> Option<Arc> {
        let member = |s: Q| Arc { lo: Endpoint::atan(s), hi: self.apex() };
        let u = atan_arg(&arc.lo)?;
        match self.kind {
            FanKind::B => {
                let v = atan_arg(&arc.hi)?;
                self.source_between(u, v).map(member)
            }
            FanKind::C(i) => {
                let above_zero = match &arc.hi {
                    Endpoint::Pi(PiPoint::HalfPi) => true,
                    Endpoint::Pi(PiPoint::Atan(v)) => *v > Q::zero(),
                    _ => false,
                };
                if *u < Q::zero() && above_zero {
                    let s = Q::from_integer(((u.ceil() - Q::one()).to_integer()).min(-(i as i128)));
                    return Some(member(s));
                }
                let v = atan_arg(&arc.hi)?;
                if *v < Q::zero() {
                    self.source_between(u, v).map(member)
                } else {
                    None
                }
            }
        }
    }

    fn enumerate_in_window(&self, w: &Window) -> Vec<Arc> {
        let apex = self.apex();
        if !w.contains(&apex) {
            return Vec::new();
        }
        w.points()
            .iter()
            .filter(|p| atan_arg(p).is_some_and(|x| self.is_source(x)))
            .map(|p| Arc { lo: p.clone(), hi: apex.clone() })
            .collect()
    }

    fn incidence(&self, e: &Endpoint) -> Incidence {
        if *e == self.apex() {
            return Incidence::Infinite { below: true, above: false };
        }
        match atan_arg(e) {
            Some(x) if self.is_source(x) => {
                Incidence::Finite(vec![Arc { lo: e.clone(), hi: self.apex() }])
            }
            _ => Incidence::Finite(Vec::new()),
        }
    }

    fn neighbors_within(&self, e: &Endpoint, depth: u32) -> Vec<Arc> {
        if *e != self.apex() {
            return match self.incidence(e) {
                Incidence::Finite(v) => v,
                Incidence::Infinite { .. } => Vec::new(),
            };
        }
        let d = depth.min(16) as i64;
        let levels: Vec<i64> = match self.kind {
            FanKind::B => (0..d.min(4)).collect(),
            FanKind::C(i) => (-i - d.min(4)..-i).collect(),
        };
        let mut out: Vec<Arc> = Vec::new();
        for l in levels {
            for m in -d..=d {
                out.push(Arc { lo: Endpoint::atan(a_seq(m, l)), hi: self.apex() });
            }
        }
        let ints: Vec<i64> = match self.kind {
            FanKind::B => (0..=d).collect(),
            FanKind::C(i) => (-i - d..=-i).collect(),
        };
        out.extend(ints.into_iter().map(|n| Arc { lo: Endpoint::atan_int(n), hi: self.apex() }));
        out.sort();
        out
    }

    fn infinite_points(&self) -> Vec<Endpoint> {
        vec![self.apex()]
    }

    fn apex_candidates(&self, _apex: &Endpoint) -> Result<Vec<Endpoint>> {
        Ok(vec![self.apex()])
    }

    /// Sources accumulate at integers, so members next to them cannot flip.
    fn flip_closed(&self) -> bool {
        false
    }

    fn descriptor(&self) -> String {
        match self.kind {
            FanKind::B => "fan-b".into(),
            FanKind::C(i) => format!("fan-c {i}"),
        }
    }

    fn map_through(&self, map: &PointMap) -> Result<(Vec<Arc>, Vec<FamilyRef>)> {
        Err(Error::OutsideDomain(map.name(), self.apex()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::pi::{a_sub, b_sub};

    fn arc(x: Q, y: Q) -> Arc {
        Arc { lo: Endpoint::atan(x), hi: Endpoint::atan(y) }
    }

    #[test]
    fn dyadic_membership() {
        let a = DyadicFamily::new(DyadicKind::A);
        assert!(a.contains(&arc(a_seq(0, -2), a_seq(1, -2))));
        assert!(a.contains(&arc(a_sub(3, 1, 2, 5), a_sub(3, 2, 2, 5))));
        assert!(!a.contains(&arc(a_sub(3, 1, 2, 5), a_sub(3, 3, 2, 5))));
        assert!(!a.contains(&arc(a_seq(0, 1), a_seq(2, 1))));
        let e = DyadicFamily::new(DyadicKind::E);
        assert!(e.contains(&arc(b_sub(2, 3, 3), b_sub(2, 4, 3))));
        assert!(e.contains(&arc(qi(-1), qi(0))));
        assert!(!e.contains(&arc(qi(-1), qi(1))));
    }

    #[test]
    fn dyadic_crossing() {
        let e = DyadicFamily::new(DyadicKind::E);
        // a non-dyadic end is always crossed
        assert!(e.crosses(&arc(Q::new(1, 3), qi(1))));
        // dyadic ends at matching scales are not
        assert!(!e.crosses(&arc(qi(0), Q::new(1, 2))));
        assert!(!e.crosses(&arc(qi(0), qi(3))));
        let m = e.crossing_member(&arc(Q::new(1, 4), qi(3))).unwrap();
        assert_eq!(m, arc(qi(0), qi(1)));
        let m = e.crossing_member(&arc(Q::new(1, 4), Q::new(3, 4))).unwrap();
        assert_eq!(m, arc(qi(0), Q::new(1, 2)));
    }

    #[test]
    fn fan_b_crossing() {
        let b = PiFan::new(FanKind::B);
        assert!(b.crosses(&arc(qi(-1), Q::new(1, 10))));
        assert!(!b.crosses(&arc(qi(-1), qi(0))));
        // integers are limits of sources from above
        assert!(b.crosses(&arc(qi(2), Q::new(2001, 1000))));
        assert!(!b.crosses(&Arc { lo: Endpoint::atan_int(3), hi: Endpoint::half_pi() }));
        assert!(b.contains(&Arc { lo: Endpoint::atan_int(0), hi: Endpoint::half_pi() }));
    }

    #[test]
    fn fan_c_crossing() {
        let c = PiFan::new(FanKind::C(1));
        assert!(c.crosses(&Arc { lo: Endpoint::atan_int(-1), hi: Endpoint::half_pi() }));
        assert!(!c.crosses(&arc(qi(-1), qi(0))));
        assert!(c.crosses(&arc(Q::new(-1, 2), Q::new(1, 2))));
        assert!(c.crosses(&arc(qi(-3), Q::new(-5, 2))));
        assert!(c.crosses(&arc(a_seq(4, -2), qi(-1))));
        assert!(!c.crosses(&arc(a_seq(4, -2), a_seq(5, -2))));
        assert!(!c.crosses(&arc(qi(-1), Q::new(-1, 2))));
        assert!(c.contains(&arc(a_seq(4, -2), qi(0))));
        assert!(!c.contains(&arc(a_seq(4, -1), qi(0))));
    }
}
