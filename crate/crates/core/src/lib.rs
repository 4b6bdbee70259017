//! Polyomino ideals, computed exactly.
//!
//! A polyomino is a finite edge-connected set of unit cells on the
//! nonnegative grid. This crate decides whether it has holes, traces the
//! border of a simple polyomino as a rectilinear polygon with its convex,
//! concave and good corners, works with admissible labelings of the vertex
//! set, and decides membership of a labeling's binomial in the ideal of
//! inner 2-minors by searching the fiber graph of the inner-interval moves.
//! Every positive answer comes with a move sequence that can be replayed by
//! [`ideal::verify_witness`].
//!
//! A polyomino is balanced (every admissible binomial lies in the ideal)
//! exactly when it is simple; [`ideal::is_balanced_certified`] reports the
//! verdict and, for a polyomino with a hole, a labeling whose search fails.

pub mod enumerate;
pub mod error;
pub mod grid;
pub mod ideal;
pub mod labeling;
pub mod polygon;
pub mod topology;

pub use error::{Error, Result};
pub use grid::{Cell, EdgeInterval, Interval, Orientation, Point, Polyomino};
pub use labeling::{Labeling, Sign};
pub use polygon::{CornerInfo, CornerKind, RectilinearPolygon};
