use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{Endpoint, Model};

/// An arc `(lo, hi)` with `lo < hi` in its model's order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Arc {
    /// A validated arc of `model`.
    pub fn new(model: Model, lo: Endpoint, hi: Endpoint) -> Result<Self> {
        let arc = Arc { lo, hi };
        if model.valid_arc(&arc.lo, &arc.hi)? {
            Ok(arc)
        } else {
            Err(Error::InvalidArc(arc))
        }
    }

    /// An arc from two endpoints in either order, unchecked.
    pub fn sorted(a: Endpoint, b: Endpoint) -> Self {
        if a <= b {
            Arc { lo: a, hi: b }
        } else {
            Arc { lo: b, hi: a }
        }
    }

    pub fn poly(i: i64, j: i64) -> Self {
        Arc { lo: Endpoint::Poly(i), hi: Endpoint::Poly(j) }
    }

    pub fn z(i: i64, j: i64) -> Self {
        Arc { lo: Endpoint::Z(i), hi: Endpoint::Z(j) }
    }

    pub fn has_endpoint(&self, e: &Endpoint) -> bool {
        self.lo == *e || self.hi == *e
    }

    /// The other end of the arc, if `e` is one of its ends.
    pub fn other(&self, e: &Endpoint) -> Option<&Endpoint> {
        if self.lo == *e {
            Some(&self.hi)
        } else if self.hi == *e {
            Some(&self.lo)
        } else {
            None
        }
    }

    pub fn is_valid_in(&self, model: Model) -> bool {
        model.is_arc(&self.lo, &self.hi)
    }

    fn same_domain(&self, other: &Arc) -> Result<()> {
        if self.lo.try_cmp(&other.lo).is_some() {
            Ok(())
        } else {
            Err(Error::ModelMismatch {
                expected: model_hint(&self.lo),
                found: other.to_string(),
            })
        }
    }
}

fn model_hint(e: &Endpoint) -> Model {
    match e {
        Endpoint::Poly(_) => Model::Polygon(0),
        Endpoint::Z(_) => Model::Infinity,
        Endpoint::ZBar(_) => Model::CompletedInfinity,
        Endpoint::Lev { .. } => Model::Leveled(0),
        Endpoint::LevBar { .. } => Model::CompletedLeveled(0),
        Endpoint::Primed { .. } => Model::PrimedLeveled(0),
        Endpoint::Pi(_) => Model::Hyperbolic,
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// Strict interleaving `i < i' < j < j'` in either direction.
#[inline]
pub(crate) fn interleaved(a: &Arc, b: &Arc) -> bool {
    (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) || (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi)
}

/// Type-A crossing function; every arc crosses itself.
pub fn cross(a: &Arc, b: &Arc) -> Result<u8> {
    a.same_domain(b)?;
    Ok(u8::from(a == b || interleaved(a, b)))
}

/// Pairwise encoding of the crossing function.
pub fn compatible(a: &Arc, b: &Arc) -> Result<bool> {
    Ok(a == b || cross(a, b)? == 0)
}

/// Dimension of `Hom(a, b)` in the additive categorification.
pub fn hom_dim(a: &Arc, b: &Arc) -> Result<u32> {
    cross(a, b).map(u32::from)
}

pub fn is_compatible_set(arcs: &[Arc]) -> Result<bool> {
    for (k, a) in arcs.iter().enumerate() {
        for b in &arcs[k + 1..] {
            if !compatible(a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_examples() {
        assert_eq!(cross(&Arc::poly(1, 3), &Arc::poly(2, 4)).unwrap(), 1);
        assert_eq!(cross(&Arc::poly(1, 3), &Arc::poly(1, 3)).unwrap(), 1);
        assert_eq!(cross(&Arc::poly(1, 3), &Arc::poly(3, 5)).unwrap(), 0);
    }

    #[test]
    fn compatibility_examples() {
        assert!(!compatible(&Arc::poly(1, 3), &Arc::poly(2, 4)).unwrap());
        assert!(compatible(&Arc::poly(1, 3), &Arc::poly(1, 3)).unwrap());
        assert!(compatible(&Arc::poly(1, 4), &Arc::poly(2, 3)).unwrap());
    }

    #[test]
    fn hom_dimensions() {
        assert_eq!(hom_dim(&Arc::poly(1, 3), &Arc::poly(2, 4)).unwrap(), 1);
        assert_eq!(hom_dim(&Arc::poly(1, 4), &Arc::poly(2, 3)).unwrap(), 0);
        assert_eq!(hom_dim(&Arc::poly(2, 4), &Arc::poly(2, 4)).unwrap(), 1);
    }

    #[test]
    fn compatible_sets() {
        assert!(is_compatible_set(&[Arc::poly(1, 3), Arc::poly(1, 4)]).unwrap());
        assert!(!is_compatible_set(&[Arc::poly(1, 3), Arc::poly(2, 4)]).unwrap());
        assert!(is_compatible_set(&[]).unwrap());
    }

    #[test]
    fn model_mismatch_is_an_error() {
        assert!(cross(&Arc::poly(1, 3), &Arc::z(1, 3)).is_err());
        assert!(compatible(&Arc::poly(1, 3), &Arc::z(1, 3)).is_err());
    }
}
