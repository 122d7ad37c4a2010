use std::fmt::Debug;
use std::sync::Arc as Shared;

use crate::embeddings::PointMap;
use crate::error::Result;
use crate::kernel::{Arc, Endpoint, Model, Window};

/// Members of a family meeting one endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Incidence {
    Finite(Vec<Arc>),
    /// Infinitely many members end at the point, from below and/or from above.
    Infinite { below: bool, above: bool },
}

impl Incidence {
    pub fn is_finite(&self) -> bool {
        matches!(self, Incidence::Finite(_))
    }
}

/// A lazily represented, possibly infinite, pairwise compatible set of arcs.
///
/// Implementations answer every query exactly: either in closed form or by a
/// scan whose length is bounded by the coordinates of the query.
pub trait ArcFamily: Debug + Send + Sync {
    fn name(&self) -> &str;

    fn model(&self) -> Model;

    fn contains(&self, arc: &Arc) -> bool;

    /// A member other than `arc` that crosses `arc`, if any.
    fn crossing_member(&self, arc: &Arc) -> Option<Arc>;

    fn crosses(&self, arc: &Arc) -> bool {
        self.crossing_member(arc).is_some()
    }

    /// Exactly the members with both endpoints in `w`, sorted.
    fn enumerate_in_window(&self, w: &Window) -> Vec<Arc>;

    fn incidence(&self, e: &Endpoint) -> Incidence;

    /// Members ending at `e`, truncated to the first `depth` steps of every
    /// infinite run.
    fn neighbors_within(&self, e: &Endpoint, depth: u32) -> Vec<Arc>;

    /// Endpoints met by infinitely many members (empty for locally finite families).
    fn infinite_points(&self) -> Vec<Endpoint>;

    fn locally_finite(&self) -> bool {
        self.infinite_points().is_empty()
    }

    /// Member endpoints `p` for which the arc between `p` and `apex` is valid
    /// and crossed by no member.
    fn apex_candidates(&self, apex: &Endpoint) -> Result<Vec<Endpoint>>;

    /// Whether every member is flippable inside any cluster containing the family.
    fn flip_closed(&self) -> bool {
        true
    }

    /// One-line description that [`crate::io::parse_family`] turns back into the family.
    fn descriptor(&self) -> String;

    /// Image under an endpoint map: finitely many explicit arcs plus families.
    fn map_through(&self, map: &PointMap) -> Result<(Vec<Arc>, Vec<FamilyRef>)>;
}

pub type FamilyRef = Shared<dyn ArcFamily>;
