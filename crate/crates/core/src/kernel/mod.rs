//! Model-agnostic arcs, crossing, arc sets, flips and bounded checks.

mod arc;
mod arcset;
mod check;
mod endpoint;
mod family;
mod mutate;
mod window;

pub(crate) use arc::interleaved;
pub use arc::{compatible, cross, hom_dim, is_compatible_set, Arc};
pub use arcset::ArcSet;
pub use check::{arcset_equal_on_window, bounded_max_check, first_difference, Verdict};
pub(crate) use endpoint::{floor_q, is_dyadic, is_integer};
pub use endpoint::{Endpoint, Ext, Model, PiPoint, Q};
pub use family::{ArcFamily, FamilyRef, Incidence};
pub use mutate::{mutate, mutate_with, FlipConfig, MutateOutcome, Side};
pub use window::Window;
