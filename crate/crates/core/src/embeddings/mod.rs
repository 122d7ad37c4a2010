//! Embeddings of cluster theories: endpoint maps, their induced arc maps,
//! fillers and completions, the named registry and window verification.

mod map;
pub mod named;
mod spec;
mod verify;

pub use map::{LineImage, PointMap};
pub use named::named_embedding;
pub use spec::{adic_complete, apex_complete, compose, prufer_complete, push_forward, EmbeddingSpec, Step};
pub use verify::{commutes_on_window, verify_embedding, Finding, Report, PAIR_CHECK_RADIUS};
