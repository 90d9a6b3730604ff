//! Exact SL(n) contravariant vector valuations on convex polytopes with
//! rational vertices, and a seeded harness that checks their identities.

pub mod error;
mod hull;
pub mod io;
pub mod linear;
pub mod polytope;
pub mod valuations;
pub mod harness;

pub use error::{Error, Result};
pub use linear::{rat, Matrix, Rat, Vector};
pub use polytope::{convex_hull, CutPieces, Facet, Hyperplane, Polytope, Simplex};
pub use valuations::{Params2D, Valuation, Zeta};
