//! Shared helpers for integration tests. The oracle here uses none of the
//! crate's arc machinery.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Arcs `(i, j)` on vertices `1..=n` with `j − i ≥ 2`.
pub fn oracle_arcs(n: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 2..=n {
            out.push((i, j));
        }
    }
    out
}

pub fn oracle_cross(a: (i64, i64), b: (i64, i64)) -> bool {
    (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
}

/// Maximal pairwise non-crossing sets, by Bron–Kerbosch with pivoting.
pub fn oracle_clusters(n: i64) -> BTreeSet<BTreeSet<(i64, i64)>> {
    let arcs = oracle_arcs(n);
    let k = arcs.len();
    let adj: Vec<Vec<bool>> =
        (0..k).map(|a| (0..k).map(|b| a != b && !oracle_cross(arcs[a], arcs[b])).collect()).collect();
    let mut out = BTreeSet::new();
    bron_kerbosch(&adj, Vec::new(), (0..k).collect(), Vec::new(), &mut |clique| {
        out.insert(clique.iter().map(|&i| arcs[i]).collect());
    });
    out
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if p.is_empty() && x.is_empty() {
        emit(&r);
        return;
    }
    let pivot = *p.iter().chain(&x).max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count()).unwrap();
    let mut p = p;
    let mut x = x;
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x2 = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r2, p2, x2, emit);
        p.retain(|&u| u != v);
        x.push(v);
    }
}
