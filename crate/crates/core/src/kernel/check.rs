use std::fmt;

use crate::error::Result;
use crate::kernel::arc::interleaved;
use crate::kernel::{Arc, ArcSet, Window};

/// Outcome of a bounded maximality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Compatible on the window and nothing can be added there.
    Ok,
    CrossingWitness(Arc, Arc),
    AddableWitness(Arc),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        *self == Verdict::Ok
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Ok => write!(f, "ok"),
            Verdict::CrossingWitness(a, b) => write!(f, "crossing {a} {b}"),
            Verdict::AddableWitness(c) => write!(f, "addable {c}"),
        }
    }
}

/// Checks compatibility and maximality of `t` restricted to `w`.
///
/// Witnesses are reported in lexicographic order of `(lo, hi)`.
pub fn bounded_max_check(t: &ArcSet, w: &Window) -> Result<Verdict> {
    w.ensure_model(t.model())?;
    if w.len() < 2 {
        return Ok(Verdict::Ok);
    }
    let inside: Vec<Arc> = t.arcs_in_window(w).into_iter().collect();
    for (k, a) in inside.iter().enumerate() {
        if let Some(b) = inside[k + 1..].iter().find(|b| interleaved(a, b)) {
            return Ok(Verdict::CrossingWitness(a.clone(), b.clone()));
        }
    }
    for a in &inside {
        if let Some(b) = t.families().iter().find_map(|f| f.crossing_member(a)) {
            return Ok(Verdict::CrossingWitness(a.clone().min(b.clone()), a.clone().max(b)));
        }
    }
    for c in w.valid_arcs() {
        if t.contains(&c) {
            continue;
        }
        let crossed = t.explicit().iter().any(|b| interleaved(&c, b))
            || t.families().iter().any(|f| f.crosses(&c));
        if !crossed {
            return Ok(Verdict::AddableWitness(c));
        }
    }
    Ok(Verdict::Ok)
}

/// Whether both sets contain the same valid arcs with ends in `w`.
pub fn arcset_equal_on_window(t1: &ArcSet, t2: &ArcSet, w: &Window) -> Result<bool> {
    Ok(first_difference(t1, t2, w)?.is_none())
}

/// The first window arc on which the two sets disagree.
pub fn first_difference(t1: &ArcSet, t2: &ArcSet, w: &Window) -> Result<Option<Arc>> {
    w.ensure_model(t1.model())?;
    w.ensure_model(t2.model())?;
    let a = t1.arcs_in_window(w);
    let b = t2.arcs_in_window(w);
    Ok(a.symmetric_difference(&b).next().cloned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Model;

    fn set(n: u32, arcs: &[(i64, i64)]) -> ArcSet {
        ArcSet::from_arcs(Model::Polygon(n), arcs.iter().map(|&(i, j)| Arc::poly(i, j))).unwrap()
    }

    #[test]
    fn missing_long_arc_is_addable() {
        let t = set(5, &[(2, 4), (2, 5)]);
        assert_eq!(
            bounded_max_check(&t, &Window::polygon(5)).unwrap(),
            Verdict::AddableWitness(Arc::poly(1, 5))
        );
    }

    #[test]
    fn crossing_pair_is_reported() {
        let t = set(5, &[(1, 3), (2, 4)]);
        assert_eq!(
            bounded_max_check(&t, &Window::polygon(5)).unwrap(),
            Verdict::CrossingWitness(Arc::poly(1, 3), Arc::poly(2, 4))
        );
    }

    #[test]
    fn fan_is_maximal() {
        let t = set(5, &[(1, 3), (1, 4), (1, 5)]);
        assert!(bounded_max_check(&t, &Window::polygon(5)).unwrap().is_ok());
    }

    #[test]
    fn window_equality() {
        let w = Window::polygon(4);
        let a = set(4, &[(1, 3)]);
        assert!(arcset_equal_on_window(&a, &a, &w).unwrap());
        assert!(!arcset_equal_on_window(&a, &set(4, &[(2, 4)]), &w).unwrap());
    }

    #[test]
    fn degenerate_window_passes() {
        let t = set(5, &[(1, 3), (2, 4)]);
        let w = Window::from_points(Model::Polygon(5), [crate::kernel::Endpoint::Poly(1)]).unwrap();
        assert!(bounded_max_check(&t, &w).unwrap().is_ok());
    }
}
