use thiserror::Error;

use crate::grid::{Cell, Interval, Point};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a polyomino needs at least one cell")]
    EmptyInput,

    #[error("cells are not edge-connected ({} components)", components.len())]
    Disconnected { components: Vec<Vec<Cell>> },

    #[error("coordinate {value} exceeds the cap {cap}")]
    CoordinateTooLarge { value: u32, cap: u32 },

    #[error("interval {0} is degenerate")]
    DegenerateInterval(Interval),

    #[error("interval {0} is not an inner interval")]
    NotInnerInterval(Interval),

    #[error("polyomino is not simple")]
    NotSimple,

    #[error("polyomino is simple (it has no hole)")]
    IsSimple,

    #[error("labeling domain differs from the vertex set (first offending point {0})")]
    DomainMismatch(Point),

    #[error("labeling is not admissible")]
    NotAdmissible,

    #[error("labeling is identically zero")]
    ZeroLabeling,

    #[error("point {0} lies outside the ambient frame")]
    OutOfBounds(Point),

    #[error("invalid rectilinear polygon: {0}")]
    InvalidPolygon(&'static str),

    #[error("requested size {requested} exceeds the enumeration cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
