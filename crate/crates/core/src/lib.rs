//! Box complexes of graphs and the homological chromatic bounds derived from them.
//!
//! The crate is organised bottom-up:
//!
//! * [`simplicial`] and [`z2`]: finite simplicial complexes, free involutions and the usual
//!   constructions (subdivision, suspension, cones, stars, nerves).
//! * [`graph`] and [`coloring`]: simple graphs on at most 64 vertices, generators, and an exact
//!   chromatic number solver.
//! * [`builders`]: the neighborhood complex, the box complexes `B(G)`, `B₀(G)`, `B_C(G)` and
//!   the order complex of `Hom(K₂, G)`, together with the graph `G_K` of a free Z₂-complex.
//! * [`homology`]: integer reduced homology through Smith normal form, elementary collapses,
//!   homological connectivity and a fundamental-group triviality test.
//! * [`bounds`] and [`verify`]: Lovász / Sarkaria lower bounds and the equivalence checks.
//! * [`io`]: the JSON and edge-list file formats.

pub mod bounds;
pub mod builders;
pub mod coloring;
pub mod corpus;
mod error;
pub mod graph;
pub mod homology;
pub mod io;
pub mod simplicial;
pub mod verify;
pub mod z2;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use homology::HomologyProfile;
pub use simplicial::{Face, SimplicialComplex, Vertex};
pub use z2::{Involution, Z2Complex};
