use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::arc::interleaved;
use crate::kernel::{Arc, Endpoint, FamilyRef, Incidence, Model, Window};

/// A cluster candidate: finitely many explicit arcs together with lazy families.
#[derive(Clone, Debug)]
pub struct ArcSet {
    model: Model,
    explicit: BTreeSet<Arc>,
    families: Vec<FamilyRef>,
}

impl ArcSet {
    pub fn new(model: Model) -> Self {
        ArcSet { model, explicit: BTreeSet::new(), families: Vec::new() }
    }

    pub fn from_arcs(model: Model, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut set = ArcSet::new(model);
        for a in arcs {
            set.insert(a)?;
        }
        Ok(set)
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn explicit(&self) -> &BTreeSet<Arc> {
        &self.explicit
    }

    pub fn families(&self) -> &[FamilyRef] {
        &self.families
    }

    pub fn insert(&mut self, arc: Arc) -> Result<()> {
        if !self.model.valid_arc(&arc.lo, &arc.hi)? {
            return Err(Error::InvalidArc(arc));
        }
        self.explicit.insert(arc);
        Ok(())
    }

    pub fn remove(&mut self, arc: &Arc) -> bool {
        self.explicit.remove(arc)
    }

    pub fn add_family(&mut self, family: FamilyRef) -> Result<()> {
        if family.model() != self.model {
            return Err(Error::ModelMismatch {
                expected: self.model,
                found: format!("family `{}` on {}", family.name(), family.model()),
            });
        }
        self.families.push(family);
        Ok(())
    }

    pub fn with_family(mut self, family: FamilyRef) -> Result<Self> {
        self.add_family(family)?;
        Ok(self)
    }

    /// Union of two sets of the same model.
    pub fn extend(&mut self, other: &ArcSet) -> Result<()> {
        if other.model != self.model {
            return Err(Error::ModelMismatch { expected: self.model, found: other.model.to_string() });
        }
        self.explicit.extend(other.explicit.iter().cloned());
        self.families.extend(other.families.iter().cloned());
        Ok(())
    }

    pub fn is_finite(&self) -> bool {
        self.families.is_empty()
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.explicit.contains(arc) || self.families.iter().any(|f| f.contains(arc))
    }

    /// The family holding `arc`, when it is not explicit.
    pub fn family_of(&self, arc: &Arc) -> Option<&FamilyRef> {
        if self.explicit.contains(arc) {
            return None;
        }
        self.families.iter().find(|f| f.contains(arc))
    }

    /// First member (explicit arcs first, lexicographically) other than `arc`
    /// that crosses `arc`.
    pub fn crossing_member(&self, arc: &Arc) -> Option<Arc> {
        self.explicit
            .iter()
            .find(|b| *b != arc && interleaved(arc, b))
            .cloned()
            .or_else(|| self.families.iter().find_map(|f| f.crossing_member(arc)))
    }

    /// Members with both endpoints in `w`.
    pub fn arcs_in_window(&self, w: &Window) -> BTreeSet<Arc> {
        let mut out: BTreeSet<Arc> =
            self.explicit.iter().filter(|a| w.contains_arc(a)).cloned().collect();
        for f in &self.families {
            out.extend(f.enumerate_in_window(w));
        }
        out
    }

    /// Copies the window's family members into the explicit part.
    pub fn materialize(&mut self, w: &Window) {
        for f in &self.families {
            self.explicit.extend(f.enumerate_in_window(w));
        }
    }

    /// Members ending at `e`, plus whether that list is complete.
    pub fn neighbors(&self, e: &Endpoint, depth: u32) -> (Vec<Arc>, bool) {
        let mut out: Vec<Arc> = self.explicit.iter().filter(|a| a.has_endpoint(e)).cloned().collect();
        let mut complete = true;
        for f in &self.families {
            match f.incidence(e) {
                Incidence::Finite(arcs) => out.extend(arcs),
                Incidence::Infinite { .. } => {
                    complete = false;
                    out.extend(f.neighbors_within(e, depth));
                }
            }
        }
        out.sort();
        out.dedup();
        (out, complete)
    }

    pub fn descriptors(&self) -> Vec<String> {
        self.families.iter().map(|f| f.descriptor()).collect()
    }

    /// Structural equality: same explicit arcs and the same family descriptors.
    pub fn same_representation(&self, other: &ArcSet) -> bool {
        self.model == other.model
            && self.explicit == other.explicit
            && self.descriptors() == other.descriptors()
    }
}

/// Equality of representations; see [`ArcSet::same_representation`].
impl PartialEq for ArcSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_representation(other)
    }
}

impl Eq for ArcSet {}

impl fmt::Display for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, a) in self.explicit.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        for fam in &self.families {
            write!(f, " ∪ {}", fam.name())?;
        }
        write!(f, "}}")
    }
}
