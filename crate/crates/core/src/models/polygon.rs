//! Clusters of the `n`-gon and their exchange graph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::kernel::{mutate, Arc, ArcSet, Model, MutateOutcome};

pub const DEFAULT_CAP: u32 = 12;

/// The polygon cap, from `CLUSTER_ARCS_CAP` when set.
pub fn polygon_cap() -> u32 {
    std::env::var("CLUSTER_ARCS_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

/// Arcs of the triangulations of the sub-polygon `i..=j`, excluding `(i, j)`.
fn triangulations(i: i64, j: i64) -> Vec<Vec<Arc>> {
    if j - i < 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in i + 1..j {
        let left = triangulations(i, k);
        let right = triangulations(k, j);
        for l in &left {
            for r in &right {
                let mut t = Vec::with_capacity(l.len() + r.len() + 2);
                if k - i >= 2 {
                    t.push(Arc::poly(i, k));
                }
                if j - k >= 2 {
                    t.push(Arc::poly(k, j));
                }
                t.extend(l.iter().cloned());
                t.extend(r.iter().cloned());
                out.push(t);
            }
        }
    }
    out
}

/// Every cluster of `A_n`, with `n` up to [`polygon_cap`].
pub fn enumerate_clusters(n: u32) -> Result<Vec<ArcSet>> {
    enumerate_clusters_capped(n, polygon_cap())
}

pub fn enumerate_clusters_capped(n: u32, cap: u32) -> Result<Vec<ArcSet>> {
    if n < 2 {
        return Err(Error::Parameters(format!("a polygon needs at least 2 vertices, got {n}")));
    }
    if n > cap {
        return Err(Error::Parameters(format!(
            "n = {n} exceeds the polygon cap {cap}; set CLUSTER_ARCS_CAP to raise it"
        )));
    }
    let model = Model::Polygon(n);
    if n == 2 {
        return Ok(vec![ArcSet::new(model)]);
    }
    let n = n as i64;
    triangulations(1, n)
        .into_iter()
        .map(|mut t| {
            t.push(Arc::poly(1, n));
            ArcSet::from_arcs(model, t)
        })
        .collect()
}

/// Clusters as vertices, single flips as edges.
#[derive(Clone, Debug)]
pub struct ExchangeGraph {
    pub clusters: Vec<ArcSet>,
    /// `(u, v, x, y)` with `u < v`: flipping `x` in cluster `u` gives `y` and cluster `v`.
    pub edges: Vec<(usize, usize, Arc, Arc)>,
}

pub fn exchange_graph(n: u32) -> Result<ExchangeGraph> {
    let clusters = enumerate_clusters(n)?;
    let index: BTreeMap<BTreeSet<Arc>, usize> =
        clusters.iter().enumerate().map(|(i, c)| (c.explicit().clone(), i)).collect();
    let mut edges = Vec::new();
    for (u, c) in clusters.iter().enumerate() {
        for x in c.explicit() {
            if let MutateOutcome::Mutable { y, t } = mutate(c, x)? {
                let v = index[t.explicit()];
                if u < v {
                    edges.push((u, v, x.clone(), y));
                }
            }
        }
    }
    Ok(ExchangeGraph { clusters, edges })
}

impl ExchangeGraph {
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.clusters.len()];
        for (u, v, ..) in &self.edges {
            deg[*u] += 1;
            deg[*v] += 1;
        }
        deg
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.degrees().iter().all(|&k| k == d)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.clusters.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v, ..) in &self.edges {
            adj[*u].push(*v);
            adj[*v].push(*u);
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// DOT text: one node per cluster labelled by its arcs, one edge per flip.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph exchange {\n");
        for (i, c) in self.clusters.iter().enumerate() {
            let label: Vec<String> = c.explicit().iter().map(|a| a.to_string()).collect();
            let _ = writeln!(s, "  c{i} [label=\"{}\"];", label.join(" "));
        }
        for (u, v, x, y) in &self.edges {
            let _ = writeln!(s, "  c{u} -- c{v} [label=\"{x} <-> {y}\"];");
        }
        s.push_str("}\n");
        s
    }
}
