//! Homological computations for schurian quotients of poset incidence algebras:
//! minimal projective resolutions, global dimension, and detection of critical
//! full subcategories that obstruct global dimension at most two.

pub mod combinatorics;
pub mod compare;
pub mod criteria;
pub mod dsl;
pub mod error;
pub mod homology;
pub mod iso;
pub mod linalg;
pub mod presentation;
pub mod random;
pub mod report;
pub mod vertex_set;

pub use error::{Error, Result};
