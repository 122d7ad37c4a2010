use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{floor_q, is_integer, Endpoint, Ext, PiPoint};
use crate::models::pi::{a_seq, locate_in_level};

/// An order-embedded copy of (part of) `Z` inside a model: index `m` maps to
/// [`Line::point`], strictly increasing in `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Line {
    Z,
    ZBar,
    Lev(u32),
    LevBar(u32),
    /// Nonnegative part `0 < 1 < 2 < …` of a primed level.
    PrimedPos(u32),
    /// Negative part `… < −2 < −1` of a primed level.
    PrimedNeg(u32),
    /// `m ↦ atan(a_m^ℓ)`.
    PiSeq(i64),
    /// `m ↦ atan(m)`.
    PiInt,
}

/// Where an endpoint sits relative to a line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Loc {
    Below,
    At(i64),
    /// Strictly between the points of index `m` and `m + 1`.
    Gap(i64),
    Above,
}

impl Loc {
    pub fn index(&self) -> Option<i64> {
        match self {
            Loc::At(m) | Loc::Gap(m) => Some(*m),
            _ => None,
        }
    }
}

impl Line {
    pub fn in_domain(&self, m: i64) -> bool {
        match self {
            Line::PrimedPos(_) => m >= 0,
            Line::PrimedNeg(_) => m < 0,
            _ => true,
        }
    }

    pub fn point(&self, m: i64) -> Endpoint {
        debug_assert!(self.in_domain(m));
        match *self {
            Line::Z => Endpoint::Z(m),
            Line::ZBar => Endpoint::ZBar(Ext::Fin(m)),
            Line::Lev(l) => Endpoint::lev(m, l),
            Line::LevBar(l) => Endpoint::lev_bar(m, l),
            Line::PrimedPos(l) | Line::PrimedNeg(l) => Endpoint::primed(m, l),
            Line::PiSeq(l) => Endpoint::atan(a_seq(m, l)),
            Line::PiInt => Endpoint::atan_int(m),
        }
    }

    /// Position of `e`; `None` for an endpoint of another domain.
    pub fn locate(&self, e: &Endpoint) -> Option<Loc> {
        use std::cmp::Ordering::*;
        let by_level = |level: u32, l: u32| match level.cmp(&l) {
            Less => Some(Loc::Below),
            Greater => Some(Loc::Above),
            Equal => None,
        };
        Some(match (*self, e) {
            (Line::Z, Endpoint::Z(v)) | (Line::ZBar, Endpoint::ZBar(Ext::Fin(v))) => Loc::At(*v),
            (Line::ZBar, Endpoint::ZBar(Ext::NegInf)) => Loc::Below,
            (Line::ZBar, Endpoint::ZBar(Ext::PosInf)) => Loc::Above,
            (Line::Lev(l), Endpoint::Lev { m, level }) => by_level(*level, l).unwrap_or(Loc::At(*m)),
            (Line::LevBar(l), Endpoint::LevBar { m, level }) => {
                by_level(*level, l).unwrap_or(match m {
                    Ext::Fin(v) => Loc::At(*v),
                    Ext::NegInf => Loc::Below,
                    Ext::PosInf => Loc::Above,
                })
            }
            (Line::PrimedPos(l), Endpoint::Primed { m, level }) => {
                by_level(*level, l).unwrap_or(if *m >= 0 { Loc::At(*m) } else { Loc::Above })
            }
            (Line::PrimedNeg(l), Endpoint::Primed { m, level }) => {
                by_level(*level, l).unwrap_or(if *m < 0 { Loc::At(*m) } else { Loc::Below })
            }
            (Line::PiSeq(_) | Line::PiInt, Endpoint::Pi(PiPoint::HalfPi)) => Loc::Above,
            (Line::PiSeq(l), Endpoint::Pi(PiPoint::Atan(q))) => locate_in_level(q, l),
            (Line::PiInt, Endpoint::Pi(PiPoint::Atan(q))) => {
                let f = floor_q(q) as i64;
                if is_integer(q) {
                    Loc::At(f)
                } else {
                    Loc::Gap(f)
                }
            }
            _ => return None,
        })
    }

    pub(crate) fn parse(s: &str) -> Result<Line> {
        let num = |t: &str| -> Result<u32> {
            t.parse().map_err(|_| Error::Parse(format!("bad line `{s}`")))
        };
        Ok(match s {
            "z" => Line::Z,
            "zbar" => Line::ZBar,
            "piint" => Line::PiInt,
            _ if s.starts_with("levbar") => Line::LevBar(num(&s[6..])?),
            _ if s.starts_with("lev") => Line::Lev(num(&s[3..])?),
            _ if s.starts_with("ppos") => Line::PrimedPos(num(&s[4..])?),
            _ if s.starts_with("pneg") => Line::PrimedNeg(num(&s[4..])?),
            _ if s.starts_with("piseq") => Line::PiSeq(
                s[5..].parse().map_err(|_| Error::Parse(format!("bad line `{s}`")))?,
            ),
            _ => return Err(Error::Parse(format!("unknown line `{s}`"))),
        })
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Z => write!(f, "z"),
            Line::ZBar => write!(f, "zbar"),
            Line::Lev(l) => write!(f, "lev{l}"),
            Line::LevBar(l) => write!(f, "levbar{l}"),
            Line::PrimedPos(l) => write!(f, "ppos{l}"),
            Line::PrimedNeg(l) => write!(f, "pneg{l}"),
            Line::PiSeq(l) => write!(f, "piseq{l}"),
            Line::PiInt => write!(f, "piint"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Q;

    fn midpoint(a: &Q, b: &Q) -> Q {
        (a + b) / Q::from_integer(2)
    }

    #[test]
    fn lines_are_increasing_and_locate_their_points() {
        let lines = [
            Line::Z,
            Line::ZBar,
            Line::Lev(2),
            Line::LevBar(1),
            Line::PrimedPos(1),
            Line::PrimedNeg(2),
            Line::PiSeq(-2),
            Line::PiInt,
        ];
        for line in lines {
            let ms: Vec<i64> = (-6..6).filter(|m| line.in_domain(*m)).collect();
            for w in ms.windows(2) {
                assert!(line.point(w[0]) < line.point(w[1]), "{line} at {}", w[0]);
            }
            for m in ms {
                assert_eq!(line.locate(&line.point(m)), Some(Loc::At(m)));
            }
        }
    }

    #[test]
    fn gaps_on_pi_lines() {
        let q = midpoint(&a_seq(1, 0), &a_seq(2, 0));
        assert_eq!(Line::PiSeq(0).locate(&Endpoint::atan(q)), Some(Loc::Gap(1)));
        assert_eq!(Line::PiSeq(0).locate(&Endpoint::atan_int(0)), Some(Loc::Below));
        assert_eq!(Line::PiSeq(0).locate(&Endpoint::atan_int(1)), Some(Loc::Above));
        assert_eq!(Line::PiInt.locate(&Endpoint::half_pi()), Some(Loc::Above));
    }

    #[test]
    fn parse_round_trip() {
        for line in [Line::Lev(3), Line::LevBar(2), Line::PrimedNeg(1), Line::PiSeq(-4), Line::Z] {
            assert_eq!(Line::parse(&line.to_string()).unwrap(), line);
        }
    }
}
