use cluster_arcs::kernel::Q;
use cluster_arcs::tcluster::*;

fn r(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

fn pt(x: Q, y: Q) -> CZPoint {
    CZPoint::new(x, y).unwrap()
}

#[test]
fn augmented_region_examples() {
    assert!(in_augmented_region(&r(1, 2), &r(1, 2)));
    assert!(in_augmented_region(&r(0, 1), &r(-1, 2)));
    assert!(!in_augmented_region(&r(2, 1), &r(0, 1)));
    assert!(in_augmented_region(&r(3, 2), &r(-1, 2)));
    assert!(!in_augmented_region(&r(0, 1), &r(-3, 4)));
}

#[test]
fn cz_point_boundaries() {
    assert!(CZPoint::new(r(1, 2), r(1, 2)).is_err());
    assert!(CZPoint::new(r(0, 1), r(-1, 2)).is_err());
    assert!(CZPoint::new(r(-1, 4), r(-1, 4)).is_ok());
    assert!(CZPoint::new(r(5, 4), r(-1, 4)).is_ok());
    assert!(CZPoint::new(r(-1, 2), r(-1, 4)).is_err());
}

#[test]
fn t_compatible_examples() {
    let p = pt(r(1, 4), r(0, 1));
    assert!(t_compatible(&p, &p));

    let q = pt(r(3, 4), r(0, 1));
    let rect = SlopedRectangle::new(p.clone(), q.clone()).unwrap();
    assert_eq!(rect.top(), (r(1, 2), r(1, 4)));
    assert_eq!(rect.bottom(), (r(1, 2), r(-1, 4)));
    assert!(rect.fits());
    assert!(!t_compatible(&p, &q));
    assert!(!t_compatible(&q, &p));

    let a = pt(r(0, 1), r(-1, 4));
    let b = pt(r(1, 4), r(0, 1));
    assert!(SlopedRectangle::new(a.clone(), b.clone()).is_none());
    assert!(t_compatible(&a, &b));
}

#[test]
fn rectangle_leaving_the_region_is_compatible() {
    // the top corner can reach the added corner but never pass it
    let p = pt(r(1, 4), r(1, 4));
    let q = pt(r(3, 4), r(1, 4));
    assert_eq!(SlopedRectangle::new(p.clone(), q.clone()).unwrap().top(), (r(1, 2), r(1, 2)));
    assert!(!t_compatible(&p, &q));
    // a wide pair drops its bottom corner below y = -1/2
    let p = pt(r(0, 1), r(-1, 4));
    let q = pt(r(1, 1), r(-1, 4));
    let rect = SlopedRectangle::new(p.clone(), q.clone()).unwrap();
    assert_eq!(rect.bottom(), (r(1, 2), r(-3, 4)));
    assert!(!rect.fits());
    assert!(t_compatible(&p, &q));
    // narrower, the bottom corner sits on the added side
    let q = pt(r(1, 2), r(-1, 4));
    assert_eq!(SlopedRectangle::new(p.clone(), q.clone()).unwrap().bottom(), (r(1, 4), r(-1, 2)));
    assert!(!t_compatible(&p, &q));
}

#[test]
fn coordinate_parsing() {
    assert_eq!(parse_coord("1/4", false).unwrap(), r(1, 4));
    assert_eq!(parse_coord("pi/4", true).unwrap(), r(1, 4));
    assert_eq!(parse_coord("-pi/2", true).unwrap(), r(-1, 2));
    assert_eq!(parse_coord("3pi/4", true).unwrap(), r(3, 4));
    assert_eq!(parse_coord("0", true).unwrap(), r(0, 1));
    assert!(parse_coord("1/4", true).is_err());
    assert!(parse_coord("x", false).is_err());
}
