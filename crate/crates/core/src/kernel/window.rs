use crate::error::{Error, Result};
use crate::kernel::{Arc, Endpoint, Ext, Model};

/// A finite set of endpoints of one model on which infinite sets are compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    model: Model,
    points: Vec<Endpoint>,
    radius: Option<u32>,
}

impl Window {
    pub fn from_points(model: Model, points: impl IntoIterator<Item = Endpoint>) -> Result<Self> {
        let mut points: Vec<Endpoint> = points.into_iter().collect();
        for p in &points {
            model.ensure(p)?;
        }
        points.sort();
        points.dedup();
        Ok(Window { model, points, radius: None })
    }

    /// All endpoints of a polygon.
    pub fn polygon(n: u32) -> Self {
        Window {
            model: Model::Polygon(n),
            points: (1..=n as i64).map(Endpoint::Poly).collect(),
            radius: None,
        }
    }

    /// The standard window of radius `r`: integer coordinates in `[-r, r]` on
    /// every level, plus the model's infinite points.
    pub fn radius(model: Model, r: u32) -> Self {
        let r = r as i64;
        let mut points = Vec::new();
        match model {
            Model::Polygon(n) => return Window::polygon(n),
            Model::Infinity => points.extend((-r..=r).map(Endpoint::Z)),
            Model::CompletedInfinity => {
                points.push(Endpoint::ZBar(Ext::NegInf));
                points.extend((-r..=r).map(|m| Endpoint::ZBar(Ext::Fin(m))));
                points.push(Endpoint::ZBar(Ext::PosInf));
            }
            Model::Leveled(i) => {
                for level in 1..=i {
                    points.extend((-r..=r).map(|m| Endpoint::lev(m, level)));
                }
            }
            Model::CompletedLeveled(i) => {
                for level in 1..=i {
                    points.extend((-r..=r).map(|m| Endpoint::lev_bar(m, level)));
                    points.push(Endpoint::lev_bar_top(level));
                }
            }
            Model::PrimedLeveled(i) => {
                for level in 1..=i {
                    points.extend((-r..=r).map(|m| Endpoint::primed(m, level)));
                }
            }
            Model::Hyperbolic => return crate::models::pi::standard_window(r as u32),
        }
        points.sort();
        Window { model, points, radius: Some(r as u32) }
    }

    pub(crate) fn with_radius(mut self, r: u32) -> Self {
        self.radius = Some(r);
        self
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn radius_hint(&self) -> Option<u32> {
        self.radius
    }

    pub fn points(&self) -> &[Endpoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, e: &Endpoint) -> bool {
        self.points.binary_search(e).is_ok()
    }

    pub fn contains_arc(&self, a: &Arc) -> bool {
        self.contains(&a.lo) && self.contains(&a.hi)
    }

    /// Every valid arc with both endpoints in the window, lexicographically.
    pub fn valid_arcs(&self) -> Vec<Arc> {
        let mut out = Vec::new();
        for (k, lo) in self.points.iter().enumerate() {
            for hi in &self.points[k + 1..] {
                if self.model.is_arc(lo, hi) {
                    out.push(Arc { lo: lo.clone(), hi: hi.clone() });
                }
            }
        }
        out
    }

    pub(crate) fn ensure_model(&self, model: Model) -> Result<()> {
        if self.model == model {
            Ok(())
        } else {
            Err(Error::ModelMismatch { expected: model, found: self.model.to_string() })
        }
    }

    /// Union with another window of the same model.
    pub fn union(&self, other: &Window) -> Result<Window> {
        other.ensure_model(self.model)?;
        let mut w = Window::from_points(
            self.model,
            self.points.iter().chain(other.points.iter()).cloned(),
        )?;
        w.radius = self.radius.max(other.radius);
        Ok(w)
    }
}
