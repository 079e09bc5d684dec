//! Graded pieces of the first cotangent cohomology `T¹` of Stanley–Reisner
//! rings, with matroid recognition and reconstruction built on top.
//!
//! Complexes live on a fixed ground set `[n]` with `n ≤ 64`; faces are
//! [`VertexSet`] bitmasks.

pub mod census;
pub mod complex;
pub mod cotangent;
pub mod error;
pub mod io;
pub mod matroid;
pub mod recognition;
pub mod reconstruction;
pub mod verify;
pub mod vertex_set;

pub use complex::SimplicialComplex;
pub use cotangent::{dim_t1, t1_table, MultiDegree, T1Table};
pub use error::{Error, Result};
pub use vertex_set::VertexSet;
