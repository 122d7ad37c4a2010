use cluster_arcs::diagram::{fountain_cluster, samples_for, zigzag_cluster};
use cluster_arcs::embeddings::named::*;
use cluster_arcs::kernel::*;
use cluster_arcs::models::line::Line;
use cluster_arcs::models::polygon::enumerate_clusters;
use cluster_arcs::models::seq::{apex_fan, FanSide};
use cluster_arcs::structures::*;

#[test]
fn fountain_classification() {
    assert_eq!(has_fountain(&zigzag_cluster().unwrap()), Fountain::None);
    assert_eq!(has_fountain(&fountain_cluster().unwrap()), Fountain::Fountain(Endpoint::Z(0)));
    let m = Model::Infinity;
    let left = ArcSet::new(m).with_family(apex_fan(m, Line::Z, 3, FanSide::Left).unwrap().shared()).unwrap();
    assert_eq!(has_fountain(&left), Fountain::LeftOnly(Endpoint::Z(3)));
    for n in 4..=6 {
        let e = f_to_inf(n).unwrap();
        for t in enumerate_clusters(n).unwrap() {
            assert_eq!(has_fountain(&e.apply(&t).unwrap()), Fountain::None);
        }
    }
}

#[test]
fn local_finiteness() {
    for t in samples_for(Model::PrimedLeveled(2)).unwrap() {
        assert!(is_locally_finite(&t), "{t}");
    }
    let m = Model::Infinity;
    let fan = ArcSet::new(m).with_family(apex_fan(m, Line::Z, 0, FanSide::Right).unwrap().shared()).unwrap();
    assert!(!is_locally_finite(&fan));
    assert!(is_locally_finite(&ArcSet::from_arcs(m, [Arc::z(0, 2), Arc::z(0, 3)]).unwrap()));
}

#[test]
fn structure_membership() {
    for n in 4..=7 {
        for t in enumerate_clusters(n).unwrap() {
            assert!(in_structure("all".parse().unwrap(), &t).unwrap());
        }
    }
    let tag: StructureTag = "no_fountain@inf".parse().unwrap();
    assert!(!in_structure(tag, &fountain_cluster().unwrap()).unwrap());
    assert!(in_structure(tag, &zigzag_cluster().unwrap()).unwrap());

    let discrete = StructureTag::on(Model::Hyperbolic, Predicate::DiscreteProxy);
    let h = h_pi().unwrap();
    for t in samples_for(Model::Infinity).unwrap().into_iter().chain([zigzag_cluster().unwrap()]) {
        assert!(in_structure(tag, &t).unwrap());
        assert!(in_structure(discrete, &h.apply(&t).unwrap()).unwrap(), "{t}");
    }

    assert!("nonsense".parse::<StructureTag>().is_err());
    let t = enumerate_clusters(4).unwrap().remove(0);
    assert!(in_structure(tag, &t).is_err());
}

#[test]
fn fountain_to_completed_infinity() {
    match nonexample_fountain_to_infinity(&fountain_cluster().unwrap()).unwrap() {
        InfinityWitness::NotMutable { arc, .. } => {
            let inf = |e: &Endpoint| matches!(e, Endpoint::ZBar(Ext::NegInf | Ext::PosInf));
            assert!(inf(&arc.lo) || inf(&arc.hi));
        }
        other => panic!("expected an unflippable arc, got {other:?}"),
    }

    assert_eq!(
        nonexample_fountain_to_infinity(&zigzag_cluster().unwrap()).unwrap(),
        InfinityWitness::NoInfiniteArc
    );
    let image = f_inf_to_infbar().unwrap().apply(&zigzag_cluster().unwrap()).unwrap();
    let w = Window::radius(Model::CompletedInfinity, 50);
    for p in w.points() {
        for q in [Endpoint::ZBar(Ext::NegInf), Endpoint::ZBar(Ext::PosInf)] {
            let a = Arc::sorted(p.clone(), q);
            assert!(!image.contains(&a), "{a}");
        }
    }

    for n in 4..=6 {
        let e = f_poly_to_levbar(n).unwrap();
        let top = Endpoint::lev_bar_top(1);
        for t in enumerate_clusters(n).unwrap() {
            let image = e.apply(&t).unwrap();
            for x in image.explicit().iter().filter(|a| a.lo != top && a.hi != top) {
                assert!(matches!(mutate(&image, x).unwrap(), MutateOutcome::Mutable { .. }), "{x} in {image}");
            }
        }
    }
}

#[test]
fn membership_is_closed_under_flips() {
    let cases = [
        (StructureTag::on(Model::Polygon(6), Predicate::All), enumerate_clusters(6).unwrap()),
        (StructureTag::on(Model::Infinity, Predicate::NoFountain), samples_for(Model::Infinity).unwrap()),
        (StructureTag::on(Model::PrimedLeveled(2), Predicate::LimitConditionProxy), samples_for(Model::PrimedLeveled(2)).unwrap()),
        (StructureTag::on(Model::Hyperbolic, Predicate::DiscreteProxy), samples_for(Model::Hyperbolic).unwrap()),
    ];
    for (tag, samples) in cases {
        for t in samples {
            assert!(in_structure(tag, &t).unwrap(), "{tag}: {t}");
            // (1, n) is the frozen side of the polygon model
            for x in t.explicit().iter().filter(|x| **x != Arc::poly(1, 6)) {
                match mutate(&t, x).unwrap() {
                    MutateOutcome::Mutable { t: t2, .. } => assert!(in_structure(tag, &t2).unwrap(), "{tag}: flip {x}"),
                    other => panic!("{tag}: {x} gave {other}"),
                }
            }
        }
    }
}
