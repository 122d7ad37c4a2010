use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{Arc, ArcSet, Endpoint, Model};

/// Search limits for the flip: neighbor runs are explored `radius` steps deep,
/// doubling until `cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlipConfig {
    pub radius: u32,
    pub cap: u32,
}

impl Default for FlipConfig {
    fn default() -> Self {
        FlipConfig { radius: 64, cap: 1024 }
    }
}

/// Which triangle of the quadrilateral is missing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Apex strictly between the ends of the arc.
    Inside,
    /// Apex outside the arc's span.
    Outside,
}

#[derive(Clone, Debug)]
pub enum MutateOutcome {
    Mutable { y: Arc, t: ArcSet },
    /// No triangle of the set closes `x` on `side`.
    NotMutable { side: Side },
    Unresolved { radius: u32 },
}

impl MutateOutcome {
    pub fn partner(&self) -> Option<&Arc> {
        match self {
            MutateOutcome::Mutable { y, .. } => Some(y),
            _ => None,
        }
    }

    pub fn is_not_mutable(&self) -> bool {
        matches!(self, MutateOutcome::NotMutable { .. })
    }
}

impl fmt::Display for MutateOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MutateOutcome::Mutable { y, .. } => write!(f, "Mutable {y}"),
            MutateOutcome::NotMutable { side } => write!(f, "NotMutable ({side:?} side cannot close)"),
            MutateOutcome::Unresolved { radius } => write!(f, "Unresolved (radius {radius})"),
        }
    }
}

pub fn mutate(t: &ArcSet, x: &Arc) -> Result<MutateOutcome> {
    mutate_with(t, x, FlipConfig::default())
}

/// Quadrilateral flip of the explicit arc `x` inside `t`.
pub fn mutate_with(t: &ArcSet, x: &Arc, cfg: FlipConfig) -> Result<MutateOutcome> {
    let model = t.model();
    model.valid_arc(&x.lo, &x.hi)?;
    if !t.explicit().contains(x) {
        return Err(match t.family_of(x) {
            Some(f) => Error::NotExplicit(x.clone(), f.name().to_string()),
            None => Error::NotInSet(x.clone()),
        });
    }
    let mut depth = cfg.radius.max(1);
    loop {
        let inside = find_apex(t, x, Side::Inside, depth);
        let outside = find_apex(t, x, Side::Outside, depth);
        match (inside, outside) {
            (Search::Found(r), Search::Found(s)) => {
                let y = Arc::sorted(r, s);
                if !model.is_arc(&y.lo, &y.hi) {
                    return Err(Error::InvalidArc(y));
                }
                let mut next = t.clone();
                next.remove(x);
                next.insert(y.clone())?;
                return Ok(MutateOutcome::Mutable { y, t: next });
            }
            (Search::Absent, _) => return Ok(MutateOutcome::NotMutable { side: Side::Inside }),
            (_, Search::Absent) => return Ok(MutateOutcome::NotMutable { side: Side::Outside }),
            _ if depth >= cfg.cap => return Ok(MutateOutcome::Unresolved { radius: depth }),
            _ => depth = (depth * 2).min(cfg.cap),
        }
    }
}

enum Search {
    Found(Endpoint),
    /// Every neighbor was examined and none closes a triangle.
    Absent,
    Open,
}

/// Membership in the set extended by its boundary sides.
fn in_closure(t: &ArcSet, model: Model, a: &Endpoint, b: &Endpoint) -> bool {
    let arc = Arc::sorted(a.clone(), b.clone());
    model.is_boundary(&arc.lo, &arc.hi) || t.contains(&arc)
}

fn neighbors(t: &ArcSet, e: &Endpoint, depth: u32) -> (Vec<Endpoint>, bool) {
    let model = t.model();
    let (arcs, complete) = t.neighbors(e, depth);
    let mut out: Vec<Endpoint> = arcs.iter().filter_map(|a| a.other(e).cloned()).collect();
    out.extend(model.boundary_neighbors(e));
    out.sort();
    out.dedup();
    (out, complete)
}

fn find_apex(t: &ArcSet, x: &Arc, side: Side, depth: u32) -> Search {
    let model = t.model();
    let (p, q) = (&x.lo, &x.hi);
    let on_side = |r: &Endpoint| match side {
        Side::Inside => p < r && r < q,
        Side::Outside => r < p || q < r,
    };
    let mut complete = false;
    for (from, to) in [(p, q), (q, p)] {
        let (cands, full) = neighbors(t, from, depth);
        complete |= full;
        for r in cands.into_iter().filter(|r| on_side(r)) {
            if in_closure(t, model, &r, to) {
                return Search::Found(r);
            }
        }
    }
    if complete {
        Search::Absent
    } else {
        Search::Open
    }
}
