use cluster_arcs::kernel::*;
use cluster_arcs::models::polygon::enumerate_clusters;

fn p(i: i64, j: i64) -> Arc {
    Arc::poly(i, j)
}

fn poly_set(n: u32, arcs: &[(i64, i64)]) -> ArcSet {
    ArcSet::from_arcs(Model::Polygon(n), arcs.iter().map(|&(i, j)| p(i, j))).unwrap()
}

#[test]
fn cross_examples() {
    assert_eq!(cross(&p(1, 3), &p(2, 4)).unwrap(), 1);
    assert_eq!(cross(&p(1, 3), &p(1, 3)).unwrap(), 1);
    assert_eq!(cross(&p(1, 3), &p(3, 5)).unwrap(), 0);
    assert!(cross(&p(1, 3), &Arc::z(1, 3)).is_err());
}

#[test]
fn compatible_examples() {
    assert!(!compatible(&p(1, 3), &p(2, 4)).unwrap());
    assert!(compatible(&p(1, 3), &p(1, 3)).unwrap());
    assert!(compatible(&p(1, 4), &p(2, 3)).unwrap());
}

#[test]
fn hom_dim_examples() {
    assert_eq!(hom_dim(&p(1, 3), &p(2, 4)).unwrap(), 1);
    assert_eq!(hom_dim(&p(1, 4), &p(2, 3)).unwrap(), 0);
    assert_eq!(hom_dim(&p(2, 4), &p(2, 4)).unwrap(), 1);
}

#[test]
fn compatible_set_examples() {
    assert!(is_compatible_set(&[p(1, 3), p(1, 4)]).unwrap());
    assert!(!is_compatible_set(&[p(1, 3), p(2, 4)]).unwrap());
    assert!(is_compatible_set(&[]).unwrap());
}

#[test]
fn bounded_max_check_examples() {
    for t in enumerate_clusters(6).unwrap() {
        assert_eq!(bounded_max_check(&t, &Window::polygon(6)).unwrap(), Verdict::Ok);
    }
    let t = poly_set(5, &[(2, 4), (2, 5)]);
    assert_eq!(bounded_max_check(&t, &Window::polygon(5)).unwrap(), Verdict::AddableWitness(p(1, 5)));
    let t = poly_set(5, &[(1, 3), (2, 4)]);
    assert_eq!(
        bounded_max_check(&t, &Window::polygon(5)).unwrap(),
        Verdict::CrossingWitness(p(1, 3), p(2, 4))
    );
    assert!(bounded_max_check(&t, &Window::radius(Model::Infinity, 3)).is_err());
}

#[test]
fn mutate_examples() {
    let t = poly_set(5, &[(1, 3), (1, 4), (1, 5)]);
    match mutate(&t, &p(1, 3)).unwrap() {
        MutateOutcome::Mutable { y, t: t2 } => {
            assert_eq!(y, p(2, 4));
            assert_eq!(t2, poly_set(5, &[(2, 4), (1, 4), (1, 5)]));
        }
        other => panic!("expected a flip, got {other}"),
    }
    for n in 4..=7 {
        for t in enumerate_clusters(n).unwrap() {
            assert!(mutate(&t, &p(1, n as i64)).unwrap().is_not_mutable());
        }
    }
    assert!(matches!(mutate(&t, &p(2, 5)), Err(cluster_arcs::Error::NotInSet(_))));
}

#[test]
fn window_equality_examples() {
    let w = Window::polygon(4);
    let t = poly_set(4, &[(1, 3), (1, 4)]);
    assert!(arcset_equal_on_window(&t, &t, &w).unwrap());
    assert!(!arcset_equal_on_window(&poly_set(4, &[(1, 3)]), &poly_set(4, &[(2, 4)]), &w).unwrap());
    let a = poly_set(5, &[(1, 3), (1, 4), (1, 5)]);
    let b = poly_set(5, &[(1, 5), (1, 4), (1, 3)]);
    assert!(arcset_equal_on_window(&a, &b, &Window::polygon(5)).unwrap());
}
