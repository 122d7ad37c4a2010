//! Concrete arc models: lines of endpoints, sequence families, the hyperbolic
//! families and the finite polygons.

pub mod line;
pub mod pi;
pub mod pifam;
pub mod polygon;
pub mod seq;

use crate::kernel::{Arc, ArcSet, Endpoint, Incidence};

pub use line::{Line, Loc};
pub use seq::FanSide as Side;

/// Number of arcs of `t` ending at `k` from one side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Finite(usize),
    Infinite,
}

/// Counts the arcs `(i, k)` (left) or `(k, j)` (right) of `t`.
pub fn fountain_candidates(t: &ArcSet, k: &Endpoint, side: Side) -> Count {
    let on_side = |a: &Arc| match side {
        Side::Left => a.hi == *k,
        Side::Right => a.lo == *k,
    };
    let mut arcs: Vec<_> = t.explicit().iter().filter(|a| on_side(a)).cloned().collect();
    for f in t.families() {
        match f.incidence(k) {
            Incidence::Finite(v) => arcs.extend(v.into_iter().filter(|a| on_side(a))),
            Incidence::Infinite { below, above } => {
                if (side == Side::Left && below) || (side == Side::Right && above) {
                    return Count::Infinite;
                }
            }
        }
    }
    arcs.sort();
    arcs.dedup();
    Count::Finite(arcs.len())
}
