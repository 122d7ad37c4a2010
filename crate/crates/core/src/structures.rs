//! Membership predicates for cluster structures, decided from explicit arcs
//! and family closed forms.

use std::fmt;
use std::str::FromStr;

use crate::embeddings::named::f_inf_to_infbar;
use crate::error::{Error, Result};
use crate::kernel::{mutate, Arc, ArcSet, Endpoint, Ext, Model, MutateOutcome, Side};
use crate::models::{fountain_candidates, Count, Side as FanSide};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fountain {
    None,
    LeftOnly(Endpoint),
    RightOnly(Endpoint),
    Fountain(Endpoint),
    /// A left-fountain and a right-fountain at different points.
    Split { left: Endpoint, right: Endpoint },
}

/// Only points met by infinitely many arcs of some family can be fountains.
pub fn has_fountain(t: &ArcSet) -> Fountain {
    let mut pts: Vec<Endpoint> = t.families().iter().flat_map(|f| f.infinite_points()).collect();
    pts.sort();
    pts.dedup();
    let find = |side| {
        pts.iter().find(|k| fountain_candidates(t, k, side) == Count::Infinite).cloned()
    };
    match (find(FanSide::Left), find(FanSide::Right)) {
        (None, None) => Fountain::None,
        (Some(l), None) => Fountain::LeftOnly(l),
        (None, Some(r)) => Fountain::RightOnly(r),
        (Some(l), Some(r)) if l == r => Fountain::Fountain(l),
        (Some(left), Some(right)) => Fountain::Split { left, right },
    }
}

pub fn is_locally_finite(t: &ArcSet) -> bool {
    t.families().iter().all(|f| f.locally_finite())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    All,
    NoFountain,
    FunctoriallyFiniteProxy,
    LocallyFinite,
    LimitConditionProxy,
    DiscreteProxy,
}

/// A predicate, optionally pinned to a model; written `pred` or `pred@model`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StructureTag {
    pub model: Option<Model>,
    pub predicate: Predicate,
}

impl StructureTag {
    pub fn new(predicate: Predicate) -> Self {
        StructureTag { model: None, predicate }
    }

    pub fn on(model: Model, predicate: Predicate) -> Self {
        StructureTag { model: Some(model), predicate }
    }
}

const PREDICATES: &[(&str, Predicate)] = &[
    ("all", Predicate::All),
    ("no_fountain", Predicate::NoFountain),
    ("functorially_finite_proxy", Predicate::FunctoriallyFiniteProxy),
    ("locally_finite", Predicate::LocallyFinite),
    ("limit_condition_proxy", Predicate::LimitConditionProxy),
    ("discrete_proxy", Predicate::DiscreteProxy),
];

impl FromStr for StructureTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, model) = match s.trim().split_once('@') {
            Some((n, m)) => (n, Some(m.parse::<Model>()?)),
            None => (s.trim(), None),
        };
        let predicate = PREDICATES
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, p)| *p)
            .ok_or_else(|| Error::Unknown(format!("structure tag `{name}`")))?;
        Ok(StructureTag { model, predicate })
    }
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = PREDICATES.iter().find(|(_, p)| *p == self.predicate).unwrap().0;
        match self.model {
            Some(m) => write!(f, "{name}@{m}"),
            None => write!(f, "{name}"),
        }
    }
}

pub fn in_structure(tag: StructureTag, t: &ArcSet) -> Result<bool> {
    if let Some(m) = tag.model {
        if m != t.model() {
            return Err(Error::ModelMismatch { expected: m, found: t.model().to_string() });
        }
    }
    Ok(match tag.predicate {
        Predicate::All => true,
        Predicate::NoFountain => has_fountain(t) == Fountain::None,
        Predicate::FunctoriallyFiniteProxy => {
            is_locally_finite(t) || matches!(has_fountain(t), Fountain::Fountain(_))
        }
        Predicate::LocallyFinite | Predicate::LimitConditionProxy => is_locally_finite(t),
        Predicate::DiscreteProxy => {
            t.families().iter().all(|f| f.flip_closed())
                && t.explicit()
                    .iter()
                    .all(|x| matches!(mutate(t, x), Ok(MutateOutcome::Mutable { .. })))
        }
    })
}

/// What the completed image of a cluster shows about arcs to `±∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfinityWitness {
    /// An arc to `±∞` in the image that cannot be flipped.
    NotMutable { arc: Arc, side: Side, image: ArcSet },
    /// Every arc to `±∞` in the image flips.
    AllMutable(Vec<Arc>),
    /// No arc to `±∞` in the image: no witness expected.
    NoInfiniteArc,
}

/// Pushes `t` to the completed infinity-gon through level 1 and both
/// completions, and looks for an unflippable arc to `±∞`.
pub fn nonexample_fountain_to_infinity(t: &ArcSet) -> Result<InfinityWitness> {
    let image = f_inf_to_infbar()?.apply(t)?;
    let at_infinity = |e: &Endpoint| matches!(e, Endpoint::ZBar(Ext::NegInf | Ext::PosInf));
    let arcs: Vec<Arc> = image
        .explicit()
        .iter()
        .filter(|a| at_infinity(&a.lo) || at_infinity(&a.hi))
        .cloned()
        .collect();
    if arcs.is_empty() {
        return Ok(InfinityWitness::NoInfiniteArc);
    }
    for a in &arcs {
        if let MutateOutcome::NotMutable { side } = mutate(&image, a)? {
            return Ok(InfinityWitness::NotMutable { arc: a.clone(), side, image });
        }
    }
    Ok(InfinityWitness::AllMutable(arcs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::line::Line;
    use crate::models::seq::{apex_fan, zigzag, FanSide};

    fn fountain_at_zero() -> ArcSet {
        let m = Model::Infinity;
        ArcSet::new(m)
            .with_family(apex_fan(m, Line::Z, 0, FanSide::Left).unwrap().shared())
            .unwrap()
            .with_family(apex_fan(m, Line::Z, 0, FanSide::Right).unwrap().shared())
            .unwrap()
    }

    fn zigzag_cluster() -> ArcSet {
        ArcSet::new(Model::Infinity)
            .with_family(zigzag(Model::Infinity, Line::Z).unwrap().shared())
            .unwrap()
    }

    #[test]
    fn fountains() {
        assert_eq!(has_fountain(&fountain_at_zero()), Fountain::Fountain(Endpoint::Z(0)));
        assert_eq!(has_fountain(&zigzag_cluster()), Fountain::None);
        assert!(!is_locally_finite(&fountain_at_zero()));
        assert!(is_locally_finite(&zigzag_cluster()));
    }

    #[test]
    fn tags() {
        let tag: StructureTag = "no_fountain@inf".parse().unwrap();
        assert_eq!(tag, StructureTag::on(Model::Infinity, Predicate::NoFountain));
        assert_eq!(tag.to_string(), "no_fountain@inf");
        assert!(!in_structure(tag, &fountain_at_zero()).unwrap());
        assert!(in_structure(tag, &zigzag_cluster()).unwrap());
        let ff = StructureTag::new(Predicate::FunctoriallyFiniteProxy);
        assert!(in_structure(ff, &fountain_at_zero()).unwrap());
        assert!("bogus".parse::<StructureTag>().is_err());
    }

    #[test]
    fn fountain_gives_an_unflippable_arc_to_infinity() {
        match nonexample_fountain_to_infinity(&fountain_at_zero()).unwrap() {
            InfinityWitness::NotMutable { arc, .. } => {
                assert!(arc.has_endpoint(&Endpoint::ZBar(Ext::PosInf))
                    || arc.has_endpoint(&Endpoint::ZBar(Ext::NegInf)));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            nonexample_fountain_to_infinity(&zigzag_cluster()).unwrap(),
            InfinityWitness::NoInfiniteArc
        );
    }
}
