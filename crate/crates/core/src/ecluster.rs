//! E-compatibility for the continuous type-A category: indecomposables,
//! g-vectors from projective resolutions and the Euler form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kernel::Q;

/// Labels of the indecomposable projectives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProjLabel {
    /// `P_{x)}`.
    Before(Q),
    /// `P_x`.
    At(Q),
    /// `P_{+∞)}`.
    BeforePlusInf,
}

impl ProjLabel {
    fn key(&self) -> (u8, Option<(&Q, u8)>) {
        match self {
            ProjLabel::Before(x) => (0, Some((x, 0))),
            ProjLabel::At(x) => (0, Some((x, 1))),
            ProjLabel::BeforePlusInf => (1, None),
        }
    }
}

/// `P_{a)} < P_a < P_{b)} < P_b < P_{+∞)}` for `a < b`.
impl Ord for ProjLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for ProjLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjLabel::Before(x) => write!(f, "P({x}-)"),
            ProjLabel::At(x) => write!(f, "P({x})"),
            ProjLabel::BeforePlusInf => write!(f, "P(+inf-)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Indec {
    /// `M_{[a,b)}`, `M_{(a,b]}`, `M_{[a,b]}` or `M_{(a,b)}`.
    Interval { a: Q, b: Q, left_closed: bool, right_closed: bool },
    Projective(ProjLabel),
    /// `I_x` when closed, `I_{(x}` otherwise.
    Injective { x: Q, closed: bool },
    /// `I_{(−∞} = P_{+∞)}`.
    InjectiveMinusInf,
}

impl Indec {
    pub fn interval(a: Q, b: Q, left_closed: bool, right_closed: bool) -> Result<Self> {
        if a >= b {
            return Err(Error::Parameters(format!("interval needs a < b, got {a} ≥ {b}")));
        }
        Ok(Indec::Interval { a, b, left_closed, right_closed })
    }

    /// `M_{[a,b)}`.
    pub fn half_open(a: Q, b: Q) -> Result<Self> {
        Self::interval(a, b, true, false)
    }
}

impl fmt::Display for Indec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Indec::Interval { a, b, left_closed, right_closed } => {
                let l = if *left_closed { '[' } else { '(' };
                let r = if *right_closed { ']' } else { ')' };
                write!(f, "{l}{a},{b}{r}")
            }
            Indec::Projective(p) => write!(f, "{p}"),
            Indec::Injective { x, closed: true } => write!(f, "I({x})"),
            Indec::Injective { x, closed: false } => write!(f, "I({x}-)"),
            Indec::InjectiveMinusInf => write!(f, "I(-inf)"),
        }
    }
}

fn parse_q(s: &str) -> Result<Q> {
    Q::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad rational `{s}`")))
}

impl FromStr for Indec {
    type Err = Error;

    /// `[a,b)`, `(a,b]`, `[a,b]`, `(a,b)`, `P(x)`, `P(x-)`, `P(+inf-)`,
    /// `I(x)`, `I(x-)`, `I(-inf)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad indecomposable `{s}`"));
        if let Some(body) = s.strip_prefix("P(").and_then(|r| r.strip_suffix(')')) {
            return Ok(Indec::Projective(match body {
                "+inf-" => ProjLabel::BeforePlusInf,
                _ => match body.strip_suffix('-') {
                    Some(x) => ProjLabel::Before(parse_q(x)?),
                    None => ProjLabel::At(parse_q(body)?),
                },
            }));
        }
        if let Some(body) = s.strip_prefix("I(").and_then(|r| r.strip_suffix(')')) {
            return Ok(match body {
                "-inf" => Indec::InjectiveMinusInf,
                _ => match body.strip_suffix('-') {
                    Some(x) => Indec::Injective { x: parse_q(x)?, closed: false },
                    None => Indec::Injective { x: parse_q(body)?, closed: true },
                },
            });
        }
        let left_closed = match s.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(bad()),
        };
        let right_closed = match s.chars().last() {
            Some(']') => true,
            Some(')') => false,
            _ => return Err(bad()),
        };
        let (a, b) = s[1..s.len() - 1].split_once(',').ok_or_else(bad)?;
        Indec::interval(parse_q(a)?, parse_q(b)?, left_closed, right_closed)
    }
}

/// `[pos] − [neg]`, with `neg` absent for a projective.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GVector {
    pub pos: ProjLabel,
    pub neg: Option<ProjLabel>,
}

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.neg {
            Some(n) => write!(f, "[{}]-[{n}]", self.pos),
            None => write!(f, "[{}]", self.pos),
        }
    }
}

pub fn g_vector(v: &Indec) -> GVector {
    use ProjLabel::*;
    let (pos, neg) = match v {
        Indec::Interval { a, b, left_closed, right_closed } => {
            let pos = if *right_closed { At(*b) } else { Before(*b) };
            let neg = if *left_closed { Before(*a) } else { At(*a) };
            (pos, Some(neg))
        }
        Indec::Projective(p) => (p.clone(), None),
        Indec::Injective { x, closed } => {
            (BeforePlusInf, Some(if *closed { Before(*x) } else { At(*x) }))
        }
        Indec::InjectiveMinusInf => (BeforePlusInf, None),
    };
    GVector { pos, neg }
}

/// `dim Hom(P, P')`: 1 when `p ≤ q`, else 0.
pub fn hom_proj(p: &ProjLabel, q: &ProjLabel) -> i64 {
    (p <= q) as i64
}

/// The Euler form extended bilinearly with signs to formal differences.
pub fn euler(g1: &GVector, g2: &GVector) -> i64 {
    let h = |p: Option<&ProjLabel>, q: Option<&ProjLabel>| match (p, q) {
        (Some(p), Some(q)) => hom_proj(p, q),
        _ => 0,
    };
    let (p1, n1) = (Some(&g1.pos), g1.neg.as_ref());
    let (p2, n2) = (Some(&g2.pos), g2.neg.as_ref());
    h(p1, p2) - h(p1, n2) - h(n1, p2) + h(n1, n2)
}

pub fn e_compatible(v: &Indec, w: &Indec) -> bool {
    let (gv, gw) = (g_vector(v), g_vector(w));
    euler(&gv, &gw) >= 0 && euler(&gw, &gv) >= 0
}
