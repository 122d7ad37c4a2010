use std::collections::BTreeSet;
use std::fmt;

use crate::embeddings::PointMap;
use crate::error::{Error, Result};
use num::Signed;

use crate::kernel::{Arc, ArcSet, Endpoint, Ext, Model, PiPoint};

/// One stage of an embedding: push arcs through `map`, add `fill`, then run
/// the apex completions in order.
#[derive(Clone, Debug)]
pub struct Step {
    pub map: PointMap,
    pub fill: ArcSet,
    pub complete: Vec<Endpoint>,
}

impl Step {
    pub fn new(map: PointMap) -> Self {
        Step { map, fill: ArcSet::new(map.target()), complete: Vec::new() }
    }

    pub fn with_fill(mut self, fill: ArcSet) -> Result<Self> {
        if fill.model() != self.map.target() {
            return Err(Error::ModelMismatch {
                expected: self.map.target(),
                found: format!("filler on {}", fill.model()),
            });
        }
        self.fill = fill;
        Ok(self)
    }

    pub fn completing(mut self, apex: Endpoint) -> Result<Self> {
        self.map.target().ensure(&apex)?;
        self.complete.push(apex);
        Ok(self)
    }
}

/// A named embedding of cluster theories as a chain of steps.
#[derive(Clone, Debug)]
pub struct EmbeddingSpec {
    pub name: String,
    pub steps: Vec<Step>,
}

impl EmbeddingSpec {
    pub fn new(name: impl Into<String>, steps: Vec<Step>) -> Result<Self> {
        let name = name.into();
        if steps.is_empty() {
            return Err(Error::Parameters(format!("embedding `{name}` has no steps")));
        }
        for w in steps.windows(2) {
            if w[0].map.target() != w[1].map.source() {
                return Err(Error::ModelMismatch {
                    expected: w[1].map.source(),
                    found: format!("step into {}", w[0].map.target()),
                });
            }
        }
        Ok(EmbeddingSpec { name, steps })
    }

    pub fn source(&self) -> Model {
        self.steps[0].map.source()
    }

    pub fn target(&self) -> Model {
        self.steps[self.steps.len() - 1].map.target()
    }

    /// Whether some step runs a completion, so the filler depends on `T`.
    pub fn is_cluster_dependent(&self) -> bool {
        self.steps.iter().any(|s| !s.complete.is_empty())
    }

    /// `Φ(α)` through every step.
    pub fn map_arc(&self, a: &Arc) -> Result<Arc> {
        self.steps.iter().try_fold(a.clone(), |a, s| s.map.map_arc(&a))
    }

    pub fn map_point(&self, e: &Endpoint) -> Result<Endpoint> {
        self.steps.iter().try_fold(e.clone(), |e, s| s.map.apply(&e))
    }

    pub fn apply(&self, t: &ArcSet) -> Result<ArcSet> {
        if t.model() != self.source() {
            return Err(Error::ModelMismatch {
                expected: self.source(),
                found: t.model().to_string(),
            });
        }
        let mut x = t.clone();
        for step in &self.steps {
            x = push_forward(&step.map, &x)?;
            x.extend(&step.fill)?;
            for apex in &step.complete {
                x = apex_complete(&x, apex)?;
            }
        }
        Ok(x)
    }
}

impl fmt::Display for EmbeddingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.source(), self.target())
    }
}

/// `Φ(X)`: explicit arcs mapped one by one, families mapped in closed form.
pub fn push_forward(map: &PointMap, x: &ArcSet) -> Result<ArcSet> {
    if x.model() != map.source() {
        return Err(Error::ModelMismatch { expected: map.source(), found: x.model().to_string() });
    }
    let mut out = ArcSet::new(map.target());
    for a in x.explicit() {
        out.insert(map.map_arc(a)?)?;
    }
    for f in x.families() {
        let (arcs, fams) = f.map_through(map)?;
        for a in arcs {
            out.insert(a)?;
        }
        for g in fams {
            out.add_family(g)?;
        }
    }
    Ok(out)
}

/// `e2 ∘ e1`.
pub fn compose(e2: &EmbeddingSpec, e1: &EmbeddingSpec) -> Result<EmbeddingSpec> {
    if e1.target() != e2.source() {
        return Err(Error::ModelMismatch {
            expected: e2.source(),
            found: format!("`{}` lands in {}", e1.name, e1.target()),
        });
    }
    let steps = e1.steps.iter().chain(&e2.steps).cloned().collect();
    EmbeddingSpec::new(format!("{}∘{}", e2.name, e1.name), steps)
}

/// `X ∪ {arcs between apex and p : compatible with X}`. Candidates are the
/// endpoints of explicit arcs, the closed-form candidates of each family, and
/// the completion points of the model.
pub fn apex_complete(x: &ArcSet, apex: &Endpoint) -> Result<ArcSet> {
    let model = x.model();
    model.ensure(apex)?;
    let mut cands: BTreeSet<Endpoint> = BTreeSet::new();
    for a in x.explicit() {
        cands.insert(a.lo.clone());
        cands.insert(a.hi.clone());
    }
    for f in x.families() {
        cands.extend(f.apex_candidates(apex)?);
    }
    cands.extend(completion_points(model, apex));
    let mut out = x.clone();
    for p in cands {
        if p == *apex {
            continue;
        }
        let arc = Arc::sorted(p, apex.clone());
        if model.is_arc(&arc.lo, &arc.hi) && !out.contains(&arc) && out.crossing_member(&arc).is_none()
        {
            out.insert(arc)?;
        }
    }
    Ok(out)
}

fn completion_points(model: Model, apex: &Endpoint) -> Vec<Endpoint> {
    match (model, apex) {
        // images of the level tops lie at the integers between the apex and 0
        (Model::Hyperbolic, Endpoint::Pi(PiPoint::Atan(x))) if x.is_integer() && x.is_negative() => {
            (x.to_integer() as i64 + 1..=0).map(Endpoint::atan_int).collect()
        }
        (Model::CompletedLeveled(i), _) => (1..=i).map(Endpoint::lev_bar_top).collect(),
        (Model::CompletedInfinity, _) => vec![Endpoint::ZBar(Ext::NegInf), Endpoint::ZBar(Ext::PosInf)],
        _ => Vec::new(),
    }
}

/// Completion at `(+∞, n)`.
pub fn prufer_complete(x: &ArcSet, n: u32) -> Result<ArcSet> {
    apex_complete(x, &Endpoint::lev_bar_top(n))
}

/// Completion at `−∞`.
pub fn adic_complete(x: &ArcSet) -> Result<ArcSet> {
    apex_complete(x, &Endpoint::ZBar(Ext::NegInf))
}
