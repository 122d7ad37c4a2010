//! T-compatibility on the triangular region `C_Z`, in units of π.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kernel::Q;

fn half() -> Q {
    Q::new(1, 2)
}

/// A point of `C_Z`: `−1/2 < y < 1/2` and `y ≤ x ≤ 1 − y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CZPoint {
    pub x: Q,
    pub y: Q,
}

impl CZPoint {
    pub fn new(x: Q, y: Q) -> Result<Self> {
        let inside = -half() < y && y < half() && y <= x && x <= Q::from_integer(1) - y;
        if inside {
            Ok(CZPoint { x, y })
        } else {
            Err(Error::Parameters(format!("({x}, {y}) is not a point of C_Z")))
        }
    }
}

impl fmt::Display for CZPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The closed triangle: `C_Z` with its top corner and bottom side.
pub fn in_augmented_region(x: &Q, y: &Q) -> bool {
    -half() <= *y && *y <= half() && y <= x && *x <= Q::from_integer(1) - y
}

/// A rectangle with sides of slope ±1 spanned by its left and right corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopedRectangle {
    pub left: CZPoint,
    pub right: CZPoint,
}

impl SlopedRectangle {
    /// `None` unless `|w − y| < z − x` for left `(x, y)` and right `(z, w)`.
    pub fn new(left: CZPoint, right: CZPoint) -> Option<Self> {
        let width = right.x - left.x;
        let rise = right.y - left.y;
        (num::Signed::abs(&rise) < width).then_some(SlopedRectangle { left, right })
    }

    pub fn top(&self) -> (Q, Q) {
        let (x, y, z, w) = (&self.left.x, &self.left.y, &self.right.x, &self.right.y);
        ((x - y + z + w) / Q::from_integer(2), (z + w - x + y) / Q::from_integer(2))
    }

    pub fn bottom(&self) -> (Q, Q) {
        let (x, y, z, w) = (&self.left.x, &self.left.y, &self.right.x, &self.right.y);
        ((x + y + z - w) / Q::from_integer(2), (x + y - z + w) / Q::from_integer(2))
    }

    pub fn fits(&self) -> bool {
        let (t, b) = (self.top(), self.bottom());
        in_augmented_region(&t.0, &t.1) && in_augmented_region(&b.0, &b.1)
    }
}

/// Incompatible exactly when the two points span a nondegenerate sloped
/// rectangle whose top and bottom corners lie in the augmented region.
pub fn t_compatible(p: &CZPoint, q: &CZPoint) -> bool {
    let (l, r) = if p.x <= q.x { (p, q) } else { (q, p) };
    !SlopedRectangle::new(l.clone(), r.clone()).is_some_and(|rect| rect.fits())
}

/// Reads `p/q` in π units, or with `radians` set, `pπ/q` (also `pi`, `-pi/2`, `0`).
pub fn parse_coord(s: &str, radians: bool) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad coordinate `{s}`"));
    if !radians {
        return Q::from_str(s).map_err(|_| bad());
    }
    if s == "0" {
        return Ok(Q::from_integer(0));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d.parse::<i128>().map_err(|_| bad())?),
        None => (s, 1),
    };
    let coeff = num.strip_suffix("pi").ok_or_else(|| {
        Error::Parse(format!("`{s}` is not a rational multiple of pi"))
    })?;
    let coeff = match coeff {
        "" => 1,
        "-" => -1,
        c => c.trim_end_matches('*').parse::<i128>().map_err(|_| bad())?,
    };
    if den == 0 {
        return Err(bad());
    }
    Ok(Q::new(coeff, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: (i128, i128), y: (i128, i128)) -> CZPoint {
        CZPoint::new(Q::new(x.0, x.1), Q::new(y.0, y.1)).unwrap()
    }

    #[test]
    fn region() {
        assert!(in_augmented_region(&half(), &half()));
        assert!(in_augmented_region(&Q::from_integer(0), &-half()));
        assert!(!in_augmented_region(&Q::from_integer(2), &Q::from_integer(0)));
        assert!(CZPoint::new(half(), half()).is_err());
        assert!(CZPoint::new(Q::from_integer(0), -half()).is_err());
    }

    #[test]
    fn rectangle_example() {
        let (a, b) = (p((1, 4), (0, 1)), p((3, 4), (0, 1)));
        let r = SlopedRectangle::new(a.clone(), b.clone()).unwrap();
        assert_eq!(r.top(), (half(), Q::new(1, 4)));
        assert_eq!(r.bottom(), (half(), Q::new(-1, 4)));
        assert!(!t_compatible(&a, &b));
        assert!(!t_compatible(&b, &a));
    }

    #[test]
    fn degenerate_pairs() {
        let a = p((0, 1), (-1, 4));
        let b = p((1, 4), (0, 1));
        assert!(t_compatible(&a, &b));
        assert!(t_compatible(&a, &a));
    }

    #[test]
    fn radians() {
        assert_eq!(parse_coord("pi/4", true).unwrap(), Q::new(1, 4));
        assert_eq!(parse_coord("-pi/2", true).unwrap(), -half());
        assert_eq!(parse_coord("3pi/4", true).unwrap(), Q::new(3, 4));
        assert!(parse_coord("0.7", true).is_err());
        assert_eq!(parse_coord("1/3", false).unwrap(), Q::new(1, 3));
    }
}
