use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exact rationals used by the hyperbolic model and the continuous predicates.
pub type Q = num::rational::Ratio<i128>;

/// The seven type-A endpoint domains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    /// `{1..n}`.
    Polygon(u32),
    /// `Z`.
    Infinity,
    /// `Z ∪ {−∞, +∞}` without the arc `(−∞, +∞)`.
    CompletedInfinity,
    /// `Z × {1..i}` ordered level first.
    Leveled(u32),
    /// `(Z ∪ {+∞}) × {1..i}` ordered level first.
    CompletedLeveled(u32),
    /// `Z × {1..i}` with each level ordered `0 < 1 < 2 < … < −2 < −1`.
    PrimedLeveled(u32),
    /// `(−π/2, π/2]`, realised on arctangents of rationals plus `π/2`.
    Hyperbolic,
}

/// Integers extended by the two infinities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ext {
    NegInf,
    Fin(i64),
    PosInf,
}

/// A point of the hyperbolic boundary: `atan(q)` or `π/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PiPoint {
    Atan(Q),
    HalfPi,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    Poly(i64),
    Z(i64),
    ZBar(Ext),
    Lev { m: i64, level: u32 },
    LevBar { m: Ext, level: u32 },
    Primed { m: i64, level: u32 },
    Pi(PiPoint),
}

/// Position of `m` inside a primed level, where nonnegatives precede negatives.
pub(crate) fn primed_rank(m: i64) -> (bool, i64) {
    (m < 0, m)
}

impl Endpoint {
    pub fn atan(q: Q) -> Self {
        Endpoint::Pi(PiPoint::Atan(q))
    }

    pub fn atan_int(n: i64) -> Self {
        Endpoint::Pi(PiPoint::Atan(Q::from_integer(n as i128)))
    }

    pub fn half_pi() -> Self {
        Endpoint::Pi(PiPoint::HalfPi)
    }

    pub fn lev(m: i64, level: u32) -> Self {
        Endpoint::Lev { m, level }
    }

    pub fn lev_bar(m: i64, level: u32) -> Self {
        Endpoint::LevBar { m: Ext::Fin(m), level }
    }

    pub fn lev_bar_top(level: u32) -> Self {
        Endpoint::LevBar { m: Ext::PosInf, level }
    }

    pub fn primed(m: i64, level: u32) -> Self {
        Endpoint::Primed { m, level }
    }

    fn tag(&self) -> u8 {
        match self {
            Endpoint::Poly(_) => 0,
            Endpoint::Z(_) => 1,
            Endpoint::ZBar(_) => 2,
            Endpoint::Lev { .. } => 3,
            Endpoint::LevBar { .. } => 4,
            Endpoint::Primed { .. } => 5,
            Endpoint::Pi(_) => 6,
        }
    }

    /// Order within one model; `None` when the endpoints live in different domains.
    pub fn try_cmp(&self, other: &Endpoint) -> Option<Ordering> {
        use Endpoint::*;
        Some(match (self, other) {
            (Poly(a), Poly(b)) | (Z(a), Z(b)) => a.cmp(b),
            (ZBar(a), ZBar(b)) => a.cmp(b),
            (Lev { m: a, level: l }, Lev { m: b, level: p }) => (l, a).cmp(&(p, b)),
            (LevBar { m: a, level: l }, LevBar { m: b, level: p }) => (l, a).cmp(&(p, b)),
            (Primed { m: a, level: l }, Primed { m: b, level: p }) => {
                (l, primed_rank(*a)).cmp(&(p, primed_rank(*b)))
            }
            (Pi(a), Pi(b)) => a.cmp(b),
            _ => return None,
        })
    }
}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used for containers: domain tag first, then the model order.
impl Ord for Endpoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.try_cmp(other).unwrap_or_else(|| self.tag().cmp(&other.tag()))
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::NegInf => write!(f, "-inf"),
            Ext::Fin(m) => write!(f, "{m}"),
            Ext::PosInf => write!(f, "+inf"),
        }
    }
}

impl fmt::Display for PiPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PiPoint::Atan(q) => write!(f, "atan({}/{})", q.numer(), q.denom()),
            PiPoint::HalfPi => write!(f, "pi/2"),
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Poly(v) | Endpoint::Z(v) => write!(f, "{v}"),
            Endpoint::ZBar(e) => write!(f, "{e}"),
            Endpoint::Lev { m, level } | Endpoint::Primed { m, level } => {
                write!(f, "({m}@{level})")
            }
            Endpoint::LevBar { m, level } => write!(f, "({m}@{level})"),
            Endpoint::Pi(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Polygon(n) => write!(f, "polygon:{n}"),
            Model::Infinity => write!(f, "inf"),
            Model::CompletedInfinity => write!(f, "inf-bar"),
            Model::Leveled(i) => write!(f, "lev:{i}"),
            Model::CompletedLeveled(i) => write!(f, "lev-bar:{i}"),
            Model::PrimedLeveled(i) => write!(f, "primed:{i}"),
            Model::Hyperbolic => write!(f, "pi"),
        }
    }
}

impl std::str::FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let num = |a: Option<&str>| -> Result<u32> {
            a.ok_or_else(|| Error::Parse(format!("model `{s}` needs a size")))?
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("model `{s}`: {e}")))
        };
        let model = match head {
            "polygon" => Model::Polygon(num(arg)?),
            "inf" => Model::Infinity,
            "inf-bar" => Model::CompletedInfinity,
            "lev" => Model::Leveled(num(arg)?),
            "lev-bar" => Model::CompletedLeveled(num(arg)?),
            "primed" => Model::PrimedLeveled(num(arg)?),
            "pi" => Model::Hyperbolic,
            _ => return Err(Error::Parse(format!("unknown model `{s}`"))),
        };
        model.check_params()?;
        Ok(model)
    }
}

impl Model {
    pub(crate) fn check_params(&self) -> Result<()> {
        match *self {
            Model::Polygon(n) if n < 2 => Err(Error::Parameters(format!("polygon size {n} < 2"))),
            Model::Leveled(0) | Model::CompletedLeveled(0) | Model::PrimedLeveled(0) => {
                Err(Error::Parameters("level count must be positive".into()))
            }
            _ => Ok(()),
        }
    }

    /// Whether `e` is a point of this model.
    pub fn contains(&self, e: &Endpoint) -> bool {
        match (self, e) {
            (Model::Polygon(n), Endpoint::Poly(v)) => 1 <= *v && *v <= *n as i64,
            (Model::Infinity, Endpoint::Z(_)) => true,
            (Model::CompletedInfinity, Endpoint::ZBar(_)) => true,
            (Model::Leveled(i), Endpoint::Lev { level, .. })
            | (Model::PrimedLeveled(i), Endpoint::Primed { level, .. }) => {
                1 <= *level && level <= i
            }
            (Model::CompletedLeveled(i), Endpoint::LevBar { m, level }) => {
                *m != Ext::NegInf && 1 <= *level && level <= i
            }
            (Model::Hyperbolic, Endpoint::Pi(_)) => true,
            _ => false,
        }
    }

    pub fn ensure(&self, e: &Endpoint) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::ForeignEndpoint(e.clone(), *self))
        }
    }

    /// The excluded minimum–maximum pair, which acts as a closing side.
    pub fn closing_side(&self) -> Option<(Endpoint, Endpoint)> {
        match *self {
            Model::CompletedInfinity => {
                Some((Endpoint::ZBar(Ext::NegInf), Endpoint::ZBar(Ext::PosInf)))
            }
            Model::PrimedLeveled(i) => Some((Endpoint::primed(0, 1), Endpoint::primed(-1, i))),
            _ => None,
        }
    }

    /// Whether some endpoint of the model lies strictly between `lo < hi`.
    fn has_between(&self, lo: &Endpoint, hi: &Endpoint) -> bool {
        use Endpoint::*;
        match (lo, hi) {
            (Poly(a), Poly(b)) | (Z(a), Z(b)) => b - a >= 2,
            (ZBar(Ext::Fin(a)), ZBar(Ext::Fin(b))) => b - a >= 2,
            (ZBar(_), ZBar(_)) => true,
            (Lev { m: a, level: l }, Lev { m: b, level: p }) => l != p || b - a >= 2,
            (LevBar { m: a, level: l }, LevBar { m: b, level: p }) => match (a, b) {
                (Ext::Fin(a), Ext::Fin(b)) if l == p => b - a >= 2,
                _ => true,
            },
            (Primed { m: a, level: l }, Primed { m: b, level: p }) => {
                if l != p {
                    // the only adjacent cross-level pair is (−1, ℓ) < (0, ℓ+1)
                    !(*a == -1 && *b == 0 && *p == l + 1)
                } else if (*a >= 0) != (*b >= 0) {
                    true
                } else {
                    b - a >= 2
                }
            }
            (Pi(_), Pi(_)) => true,
            _ => false,
        }
    }

    /// Arc validity: ordered, a strictly intermediate point, not the excluded pair.
    pub fn valid_arc(&self, lo: &Endpoint, hi: &Endpoint) -> Result<bool> {
        self.ensure(lo)?;
        self.ensure(hi)?;
        if lo >= hi {
            return Err(Error::OrderViolation(lo.clone(), hi.clone()));
        }
        if let Some((a, b)) = self.closing_side() {
            if *lo == a && *hi == b {
                return Ok(false);
            }
        }
        Ok(self.has_between(lo, hi))
    }

    /// Like [`Model::valid_arc`] but false instead of an error for disordered input.
    pub fn is_arc(&self, lo: &Endpoint, hi: &Endpoint) -> bool {
        self.valid_arc(lo, hi).unwrap_or(false)
    }

    /// Immediate successor, when one exists.
    pub fn successor(&self, e: &Endpoint) -> Option<Endpoint> {
        use Endpoint::*;
        let next = match (*self, e) {
            (Model::Polygon(n), Poly(v)) => (*v < n as i64).then(|| Poly(v + 1))?,
            (Model::Infinity, Z(v)) => Z(v + 1),
            (Model::CompletedInfinity, ZBar(Ext::Fin(v))) => ZBar(Ext::Fin(v + 1)),
            (Model::Leveled(_), Lev { m, level }) => Lev { m: m + 1, level: *level },
            (Model::CompletedLeveled(_), LevBar { m: Ext::Fin(m), level }) => {
                LevBar { m: Ext::Fin(m + 1), level: *level }
            }
            (Model::PrimedLeveled(i), Primed { m, level }) => {
                if *m == -1 {
                    if *level < i {
                        Primed { m: 0, level: level + 1 }
                    } else {
                        return None;
                    }
                } else {
                    Primed { m: m + 1, level: *level }
                }
            }
            _ => return None,
        };
        Some(next)
    }

    /// Immediate predecessor, when one exists.
    pub fn predecessor(&self, e: &Endpoint) -> Option<Endpoint> {
        use Endpoint::*;
        let prev = match (*self, e) {
            (Model::Polygon(_), Poly(v)) => (*v > 1).then(|| Poly(v - 1))?,
            (Model::Infinity, Z(v)) => Z(v - 1),
            (Model::CompletedInfinity, ZBar(Ext::Fin(v))) => ZBar(Ext::Fin(v - 1)),
            (Model::Leveled(_), Lev { m, level }) => Lev { m: m - 1, level: *level },
            (Model::CompletedLeveled(_), LevBar { m: Ext::Fin(m), level }) => {
                LevBar { m: Ext::Fin(m - 1), level: *level }
            }
            (Model::PrimedLeveled(_), Primed { m, level }) => {
                if *m == 0 {
                    if *level > 1 {
                        Primed { m: -1, level: level - 1 }
                    } else {
                        return None;
                    }
                } else {
                    Primed { m: m - 1, level: *level }
                }
            }
            _ => return None,
        };
        Some(prev)
    }

    /// Sides of the surface: consecutive endpoints plus the closing side.
    pub fn is_boundary(&self, lo: &Endpoint, hi: &Endpoint) -> bool {
        if self.successor(lo).as_ref() == Some(hi) {
            return true;
        }
        matches!(self.closing_side(), Some((a, b)) if a == *lo && b == *hi)
    }

    /// Endpoints joined to `e` by a boundary side.
    pub fn boundary_neighbors(&self, e: &Endpoint) -> Vec<Endpoint> {
        let mut out = Vec::new();
        out.extend(self.predecessor(e));
        out.extend(self.successor(e));
        if let Some((a, b)) = self.closing_side() {
            if *e == a {
                out.push(b);
            } else if *e == b {
                out.push(a);
            }
        }
        out
    }
}

/// `⌊q⌋` for an exact rational.
pub(crate) fn floor_q(q: &Q) -> i128 {
    q.floor().to_integer()
}

pub(crate) fn is_integer(q: &Q) -> bool {
    q.is_integer()
}

pub(crate) fn is_dyadic(q: &Q) -> bool {
    let d = *q.denom();
    d > 0 && (d & (d - 1)) == 0
}
