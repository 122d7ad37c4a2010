mod common;

use std::collections::BTreeSet;

use cluster_arcs::kernel::{Arc, Endpoint};
use cluster_arcs::models::polygon::enumerate_clusters;
use common::oracle_clusters;

fn pair(a: &Arc) -> (i64, i64) {
    match (&a.lo, &a.hi) {
        (Endpoint::Poly(i), Endpoint::Poly(j)) => (*i, *j),
        _ => panic!("not a polygon arc: {a}"),
    }
}

#[test]
fn oracle_counts_are_catalan() {
    let want = [2, 5, 14, 42, 132, 429];
    for (n, c) in (4..=9).zip(want) {
        assert_eq!(oracle_clusters(n).len(), c, "n = {n}");
    }
}

#[test]
fn enumeration_matches_oracle() {
    for n in 4..=9u32 {
        let got: BTreeSet<BTreeSet<(i64, i64)>> = enumerate_clusters(n)
            .unwrap()
            .iter()
            .map(|t| t.explicit().iter().map(pair).collect())
            .collect();
        assert_eq!(got, oracle_clusters(n as i64), "n = {n}");
    }
}
