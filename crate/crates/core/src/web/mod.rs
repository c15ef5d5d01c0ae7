//! The abstract web W(F*, J*), its self-map, lifting, the Levy diagnostic and
//! arc pullbacks.

mod graph;
mod levy;
mod lift;
mod map;
mod pullback;

pub use graph::{Edge, EdgeKey, Vertex, Web};
pub use levy::{check_levy, LevyReport};
pub use lift::lift_classes;
pub use map::{EdgeClass, WebMap};
pub use pullback::{pullback_arcs, ArcSet, PullbackReport};
