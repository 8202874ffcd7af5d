//! Coherent event structures: relations, the orthogonality graph, the
//! domain of configurations, nice labellings, random generation and a text
//! format.

pub mod chains;
pub mod cli;
pub mod domain;
pub mod error;
pub mod fixtures;
pub mod gen;
pub mod graph;
pub mod io;
pub mod label;
pub mod model;
pub mod theory;

pub use error::{Error, Result};
pub use model::{Ev, EventId, EventStructure, RelationKind};
