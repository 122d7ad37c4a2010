//! Type-A cluster theories as arc models: exact crossing, clusters and flips,
//! embeddings between the finite polygons, the infinity-gon and its completed,
//! leveled and hyperbolic relatives, and the continuous predicates.

pub mod embeddings;
pub mod error;
pub mod kernel;
pub mod models;

pub use error::{Error, Result};
pub mod diagram;
pub mod ecluster;
pub mod io;
pub mod structures;
pub mod tcluster;
