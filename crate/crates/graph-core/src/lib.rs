//! Simple undirected graphs over dense integer vertex ids, a library of
//! named small graphs, induced-pattern detection, and the class
//! recognizers (neighborhood-star-free, cricket-free) used by the rest of
//! the workspace.

pub mod cycles;
pub mod graph;
pub mod induced;
pub mod io;
pub mod patterns;
pub mod random;
pub mod recognize;

pub use cycles::{enumerate_triangles, induced_cycles_up_to};
pub use graph::{Edge, Graph, GraphError, Role};
pub use induced::{find_induced, is_isomorphic};
pub use patterns::{named_graph, PatternId};
pub use recognize::{cricket_witness, is_cricket_free, is_nsf, nsf_witness};
