use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{Arc, Endpoint, Ext, Model, PiPoint, Q};
use crate::models::line::Line;
use crate::models::pi::a_seq;

/// The endpoint injections between models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointMap {
    /// `{1..m} → {1..m+1}`, `v ↦ v + by`.
    PolyShift { m: u32, by: i64 },
    /// `{1..n} → Z`, `v ↦ v − ⌈n/2⌉`.
    PolyToZ { n: u32 },
    /// `Z → Z × {1}`.
    ZToLev,
    /// `(k, ℓ) ↦ (k, ℓ + j − i)` between leveled models.
    LevShift { i: u32, j: u32 },
    /// The same shift between completed leveled models.
    LevBarShift { i: u32, j: u32 },
    /// The inclusion into the completion.
    LevToLevBar { i: u32 },
    /// `(m, 1) ↦ m`, `(+∞, 1) ↦ +∞`.
    LevBarToZBar,
    /// `m ↦ (m, 2)`, `−∞ ↦ (+∞, 1)`, `+∞ ↦ (+∞, 2)`.
    ZBarToLevBar2,
    /// `(m, L) ↦ atan(a_m^{L−i−1})`, `(+∞, L) ↦ atan(L − i)`.
    LevBarToPi { i: u32 },
    /// `m ↦ atan m`.
    ZToPi,
    /// `(m, k) ↦ (m, k + j − i)` between primed models.
    PrimedShift { i: u32, j: u32 },
    /// The cyclic relabelling of `Z × {1..i}` as the primed model: the
    /// negative half of level 1 moves to the top.
    LevToPrimed { i: u32 },
}

/// How a map acts on a [`Line`]: index shift onto another line, possibly
/// depending on the sign of the index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineImage {
    Shift(Line, i64),
    BySign { nonneg: (Line, i64), neg: (Line, i64) },
}

impl PointMap {
    pub fn source(&self) -> Model {
        match *self {
            PointMap::PolyShift { m, .. } => Model::Polygon(m),
            PointMap::PolyToZ { n } => Model::Polygon(n),
            PointMap::ZToLev | PointMap::ZToPi => Model::Infinity,
            PointMap::LevShift { i, .. } | PointMap::LevToLevBar { i } | PointMap::LevToPrimed { i } => {
                Model::Leveled(i)
            }
            PointMap::LevBarShift { i, .. } | PointMap::LevBarToPi { i } => Model::CompletedLeveled(i),
            PointMap::LevBarToZBar => Model::CompletedLeveled(1),
            PointMap::ZBarToLevBar2 => Model::CompletedInfinity,
            PointMap::PrimedShift { i, .. } => Model::PrimedLeveled(i),
        }
    }

    pub fn target(&self) -> Model {
        match *self {
            PointMap::PolyShift { m, .. } => Model::Polygon(m + 1),
            PointMap::PolyToZ { .. } => Model::Infinity,
            PointMap::ZToLev => Model::Leveled(1),
            PointMap::LevShift { j, .. } => Model::Leveled(j),
            PointMap::LevBarShift { j, .. } => Model::CompletedLeveled(j),
            PointMap::LevToLevBar { i } => Model::CompletedLeveled(i),
            PointMap::LevBarToZBar => Model::CompletedInfinity,
            PointMap::ZBarToLevBar2 => Model::CompletedLeveled(2),
            PointMap::LevBarToPi { .. } | PointMap::ZToPi => Model::Hyperbolic,
            PointMap::PrimedShift { j, .. } => Model::PrimedLeveled(j),
            PointMap::LevToPrimed { i } => Model::PrimedLeveled(i),
        }
    }

    /// Whether the map is strictly increasing; the cyclic relabelling only
    /// preserves the cyclic order.
    pub fn order_preserving(&self) -> bool {
        !matches!(self, PointMap::LevToPrimed { .. })
    }

    pub fn name(&self) -> String {
        format!("{}->{}", self.source(), self.target())
    }

    pub fn apply(&self, e: &Endpoint) -> Result<Endpoint> {
        self.source().ensure(e)?;
        let outside = || Error::OutsideDomain(self.name(), e.clone());
        Ok(match (*self, e) {
            (PointMap::PolyShift { by, .. }, Endpoint::Poly(v)) => Endpoint::Poly(v + by),
            (PointMap::PolyToZ { n }, Endpoint::Poly(v)) => Endpoint::Z(v - (n as i64 + 1) / 2),
            (PointMap::ZToLev, Endpoint::Z(m)) => Endpoint::lev(*m, 1),
            (PointMap::ZToPi, Endpoint::Z(m)) => Endpoint::atan_int(*m),
            (PointMap::LevShift { i, j }, Endpoint::Lev { m, level }) => {
                Endpoint::lev(*m, level + j - i)
            }
            (PointMap::LevBarShift { i, j }, Endpoint::LevBar { m, level }) => {
                Endpoint::LevBar { m: *m, level: level + j - i }
            }
            (PointMap::LevToLevBar { .. }, Endpoint::Lev { m, level }) => Endpoint::lev_bar(*m, *level),
            (PointMap::LevBarToZBar, Endpoint::LevBar { m, .. }) => Endpoint::ZBar(*m),
            (PointMap::ZBarToLevBar2, Endpoint::ZBar(m)) => match m {
                Ext::NegInf => Endpoint::lev_bar_top(1),
                _ => Endpoint::LevBar { m: *m, level: 2 },
            },
            (PointMap::LevBarToPi { i }, Endpoint::LevBar { m, level }) => {
                let shift = *level as i64 - i as i64;
                match m {
                    Ext::Fin(m) => Endpoint::atan(a_seq(*m, shift - 1)),
                    Ext::PosInf => Endpoint::atan_int(shift),
                    Ext::NegInf => return Err(outside()),
                }
            }
            (PointMap::PrimedShift { i, j }, Endpoint::Primed { m, level }) => {
                Endpoint::primed(*m, level + j - i)
            }
            (PointMap::LevToPrimed { i }, Endpoint::Lev { m, level }) => {
                let level = match (*m < 0, *level) {
                    (false, l) => l,
                    (true, 1) => i,
                    (true, l) => l - 1,
                };
                Endpoint::primed(*m, level)
            }
            _ => return Err(outside()),
        })
    }

    /// The partial inverse on target endpoints.
    pub fn invert(&self, e: &Endpoint) -> Option<Endpoint> {
        if !self.target().contains(e) {
            return None;
        }
        let pre = match (*self, e) {
            (PointMap::PolyShift { by, .. }, Endpoint::Poly(v)) => Endpoint::Poly(v - by),
            (PointMap::PolyToZ { n }, Endpoint::Z(v)) => Endpoint::Poly(v + (n as i64 + 1) / 2),
            (PointMap::ZToLev, Endpoint::Lev { m, .. }) => Endpoint::Z(*m),
            (PointMap::ZToPi, Endpoint::Pi(PiPoint::Atan(q))) if q.is_integer() => {
                Endpoint::Z(q.to_integer() as i64)
            }
            (PointMap::LevShift { i, j }, Endpoint::Lev { m, level }) => {
                Endpoint::lev(*m, level.checked_sub(j - i)?)
            }
            (PointMap::LevBarShift { i, j }, Endpoint::LevBar { m, level }) => {
                Endpoint::LevBar { m: *m, level: level.checked_sub(j - i)? }
            }
            (PointMap::LevToLevBar { .. }, Endpoint::LevBar { m: Ext::Fin(m), level }) => {
                Endpoint::lev(*m, *level)
            }
            (PointMap::LevBarToZBar, Endpoint::ZBar(m)) if *m != Ext::NegInf => {
                Endpoint::LevBar { m: *m, level: 1 }
            }
            (PointMap::ZBarToLevBar2, Endpoint::LevBar { m, level: 2 }) => Endpoint::ZBar(*m),
            (PointMap::ZBarToLevBar2, Endpoint::LevBar { m: Ext::PosInf, level: 1 }) => {
                Endpoint::ZBar(Ext::NegInf)
            }
            (PointMap::LevBarToPi { i }, Endpoint::Pi(PiPoint::Atan(q))) => {
                return invert_pi(i, q);
            }
            (PointMap::PrimedShift { i, j }, Endpoint::Primed { m, level }) => {
                Endpoint::primed(*m, level.checked_sub(j - i)?)
            }
            (PointMap::LevToPrimed { i }, Endpoint::Primed { m, level }) => {
                let level = match (*m < 0, *level) {
                    (false, l) => l,
                    (true, l) if l == i => 1,
                    (true, l) => l + 1,
                };
                Endpoint::lev(*m, level)
            }
            _ => return None,
        };
        (self.source().contains(&pre) && self.apply(&pre).ok().as_ref() == Some(e)).then_some(pre)
    }

    /// The action on a line of the source, or `None` if the line is not in
    /// the domain.
    pub fn line_image(&self, line: Line) -> Option<LineImage> {
        use LineImage::Shift;
        Some(match (*self, line) {
            (PointMap::ZToLev, Line::Z) => Shift(Line::Lev(1), 0),
            (PointMap::ZToPi, Line::Z) => Shift(Line::PiInt, 0),
            (PointMap::PolyToZ { .. } | PointMap::PolyShift { .. }, _) => return None,
            (PointMap::LevShift { i, j }, Line::Lev(l)) if l <= i => Shift(Line::Lev(l + j - i), 0),
            (PointMap::LevBarShift { i, j }, Line::LevBar(l)) if l <= i => {
                Shift(Line::LevBar(l + j - i), 0)
            }
            (PointMap::LevToLevBar { i }, Line::Lev(l)) if l <= i => Shift(Line::LevBar(l), 0),
            (PointMap::LevBarToZBar, Line::LevBar(1)) => Shift(Line::ZBar, 0),
            (PointMap::ZBarToLevBar2, Line::ZBar) => Shift(Line::LevBar(2), 0),
            (PointMap::LevBarToPi { i }, Line::LevBar(l)) if l <= i => {
                Shift(Line::PiSeq(l as i64 - i as i64 - 1), 0)
            }
            (PointMap::PrimedShift { i, j }, Line::PrimedPos(l)) if l <= i => {
                Shift(Line::PrimedPos(l + j - i), 0)
            }
            (PointMap::PrimedShift { i, j }, Line::PrimedNeg(l)) if l <= i => {
                Shift(Line::PrimedNeg(l + j - i), 0)
            }
            (PointMap::LevToPrimed { i }, Line::Lev(l)) if l <= i => LineImage::BySign {
                nonneg: (Line::PrimedPos(l), 0),
                neg: (Line::PrimedNeg(if l == 1 { i } else { l - 1 }), 0),
            },
            _ => return None,
        })
    }

    /// `Φ(α) = (φ(lo), φ(hi))`, reordered when the map reverses the pair,
    /// and checked to be an arc of the target.
    pub fn map_arc(&self, a: &Arc) -> Result<Arc> {
        let image = Arc::sorted(self.apply(&a.lo)?, self.apply(&a.hi)?);
        if self.target().is_arc(&image.lo, &image.hi) {
            Ok(image)
        } else {
            Err(Error::InvalidArc(image))
        }
    }
}

fn invert_pi(i: u32, q: &Q) -> Option<Endpoint> {
    use crate::models::line::Loc;
    use crate::models::pi::locate_in_level;
    let f = q.floor().to_integer() as i64;
    let level = |shift: i64| u32::try_from(shift + i as i64).ok().filter(|l| (1..=i).contains(l));
    if q.is_integer() {
        return Some(Endpoint::lev_bar_top(level(f)?));
    }
    match locate_in_level(q, f) {
        Loc::At(m) => Some(Endpoint::lev_bar(m, level(f + 1)?)),
        _ => None,
    }
}

impl fmt::Display for PointMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}
