//! The hyperbolic model: the monotone sequences `a_m^ℓ` and standard windows.

use crate::kernel::{floor_q, is_integer, Endpoint, Model, Window, Q};
use crate::models::line::Loc;

/// Largest radius honoured by [`standard_window`].
pub const MAX_PI_RADIUS: u32 = 12;

fn q(n: i64) -> Q {
    Q::from_integer(n as i128)
}

/// `a_m^ℓ = ℓ + 1/2 + m / (2(|m| + 1))`: strictly increasing in `m`, with
/// limits `ℓ` and `ℓ + 1`.
pub fn a_seq(m: i64, level: i64) -> Q {
    q(level) + Q::new(1, 2) + Q::new(m as i128, 2 * (m.unsigned_abs() as i128 + 1))
}

/// `a_{m,j,k}^ℓ`: the point `j / 2^k` of the way from `a_m^ℓ` to `a_{m+1}^ℓ`.
pub fn a_sub(m: i64, j: i64, k: u32, level: i64) -> Q {
    let lo = a_seq(m, level);
    let hi = a_seq(m + 1, level);
    lo + (hi - lo) * Q::new(j as i128, 1i128 << k)
}

/// `b_{i,j,k} = i + j / 2^k`.
pub fn b_sub(i: i64, j: i64, k: u32) -> Q {
    q(i) + Q::new(j as i128, 1i128 << k)
}

/// Position of the rational `x` relative to the sequence `(a_m^ℓ)_m`.
pub fn locate_in_level(x: &Q, level: i64) -> Loc {
    let l = q(level);
    if *x <= l {
        return Loc::Below;
    }
    if *x >= l + q(1) {
        return Loc::Above;
    }
    let r = x - l - Q::new(1, 2);
    let two_r = r * q(2);
    let y = if r >= q(0) { two_r / (q(1) - two_r) } else { two_r / (q(1) + two_r) };
    let m = floor_q(&y) as i64;
    if a_seq(m, level) == *x {
        Loc::At(m)
    } else {
        Loc::Gap(m)
    }
}

/// Whether `x` is some `a_m^ℓ`.
pub fn is_a_point(x: &Q) -> bool {
    !is_integer(x) && matches!(locate_in_level(x, floor_q(x) as i64), Loc::At(_))
}

/// An element of `{a_m^ℓ : m ∈ Z}` inside `(ℓ, v)`, for `v > ℓ`.
pub(crate) fn a_point_above_limit(level: i64, v: &Q) -> Q {
    // a_m^ℓ = ℓ + 1 / (2(1 − m)) for m ≤ 0
    let t = v - q(level);
    if t > Q::new(1, 2) {
        return a_seq(0, level);
    }
    let mut m = floor_q(&(q(1) - (t * q(2)).recip())) as i64;
    while a_seq(m, level) >= *v {
        m -= 1;
    }
    a_seq(m, level)
}

/// The standard finite window of the hyperbolic model: arctangents of small
/// integers, of `a_m^ℓ` for small `|m|` and `|ℓ|`, of a few first-level
/// subdivision points, and `π/2`. The radius is capped at [`MAX_PI_RADIUS`].
pub fn standard_window(r: u32) -> Window {
    let r = r.min(MAX_PI_RADIUS) as i64;
    let levels = r.min(5);
    let ms = r.min(4);
    let ints = r.min(6);
    let mut pts: Vec<Endpoint> = (-ints..=ints).map(Endpoint::atan_int).collect();
    for level in -levels..levels {
        for m in -ms..=ms {
            pts.push(Endpoint::atan(a_seq(m, level)));
        }
        for m in -1..=1 {
            pts.push(Endpoint::atan(a_sub(m, 1, 1, level)));
        }
    }
    pts.push(Endpoint::half_pi());
    Window::from_points(Model::Hyperbolic, pts)
        .expect("hyperbolic points")
        .with_radius(r as u32)
}
