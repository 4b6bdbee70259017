//! Lattice primitives: points, intervals, cells, polyominoes and their edge
//! intervals.
//!
//! Everything lives on the nonnegative integer grid. Collections are kept in
//! the canonical row-major order (by `y`, then `x`) so every listing is
//! deterministic.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Largest coordinate accepted by [`Polyomino::new`].
pub const DEFAULT_COORD_CAP: u32 = 1_000_000;

/// A point of the nonnegative integer lattice.
///
/// The total order is row-major (`y` first, then `x`). The componentwise
/// partial order is available through [`Point::le_componentwise`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: u32,
    pub y: u32,
}

impl Point {
    pub const fn new(x: u32, y: u32) -> Self {
        Point { x, y }
    }

    pub fn le_componentwise(self, other: Point) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// Translate by a signed offset, returning `None` if the result would
    /// leave the nonnegative quadrant.
    pub fn offset(self, dx: i64, dy: i64) -> Option<Point> {
        let x = i64::from(self.x) + dx;
        let y = i64::from(self.y) + dy;
        Some(Point::new(u32::try_from(x).ok()?, u32::try_from(y).ok()?))
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(u32, u32)> for Point {
    fn from((x, y): (u32, u32)) -> Self {
        Point::new(x, y)
    }
}

/// The lattice rectangle `[lo, hi]` with `lo <= hi` componentwise.
///
/// Construction normalizes its two corners, so `Interval::new(b, a)` equals
/// `Interval::new(a, b)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: Point,
    pub hi: Point,
}

impl Interval {
    pub fn new(a: Point, b: Point) -> Self {
        Interval {
            lo: Point::new(a.x.min(b.x), a.y.min(b.y)),
            hi: Point::new(a.x.max(b.x), a.y.max(b.y)),
        }
    }

    pub fn width(&self) -> u32 {
        self.hi.x - self.lo.x
    }

    pub fn height(&self) -> u32 {
        self.hi.y - self.lo.y
    }

    /// True when the interval spans a positive area.
    pub fn is_proper(&self) -> bool {
        self.lo.x < self.hi.x && self.lo.y < self.hi.y
    }

    pub fn diagonal_corners(&self) -> [Point; 2] {
        [self.lo, self.hi]
    }

    pub fn anti_diagonal_corners(&self) -> [Point; 2] {
        [
            Point::new(self.lo.x, self.hi.y),
            Point::new(self.hi.x, self.lo.y),
        ]
    }

    pub fn contains(&self, p: Point) -> bool {
        self.lo.le_componentwise(p) && p.le_componentwise(self.hi)
    }

    /// Lattice points of the interval in canonical order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (self.lo.y..=self.hi.y)
            .flat_map(move |y| (self.lo.x..=self.hi.x).map(move |x| Point::new(x, y)))
    }

    /// Unit cells whose closed square lies inside the closed rectangle.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.lo.y..self.hi.y)
            .flat_map(move |y| (self.lo.x..self.hi.x).map(move |x| Cell::new(x, y)))
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// A unit square identified by its lower-left corner.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub anchor: Point,
}

impl Cell {
    pub const fn new(x: u32, y: u32) -> Self {
        Cell {
            anchor: Point::new(x, y),
        }
    }

    pub fn interval(&self) -> Interval {
        Interval {
            lo: self.anchor,
            hi: Point::new(self.anchor.x + 1, self.anchor.y + 1),
        }
    }

    /// The four vertices: lower-left, lower-right, upper-left, upper-right.
    pub fn vertices(&self) -> [Point; 4] {
        let Point { x, y } = self.anchor;
        [
            Point::new(x, y),
            Point::new(x + 1, y),
            Point::new(x, y + 1),
            Point::new(x + 1, y + 1),
        ]
    }

    /// Edge-adjacent cells that stay in the nonnegative quadrant.
    pub fn neighbors(&self) -> impl Iterator<Item = Cell> {
        let a = self.anchor;
        [(1i64, 0i64), (-1, 0), (0, 1), (0, -1)]
            .into_iter()
            .filter_map(move |(dx, dy)| a.offset(dx, dy).map(|anchor| Cell { anchor }))
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.anchor)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

impl Orientation {
    pub fn other(self) -> Orientation {
        match self {
            Orientation::Horizontal => Orientation::Vertical,
            Orientation::Vertical => Orientation::Horizontal,
        }
    }
}

/// A horizontal or vertical segment of the lattice made of unit cell edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeInterval {
    pub interval: Interval,
    pub orientation: Orientation,
}

impl EdgeInterval {
    pub fn len(&self) -> u32 {
        match self.orientation {
            Orientation::Horizontal => self.interval.width(),
            Orientation::Vertical => self.interval.height(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn endpoints(&self) -> [Point; 2] {
        [self.interval.lo, self.interval.hi]
    }

    pub fn contains(&self, p: Point) -> bool {
        self.interval.contains(p)
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.interval.points()
    }
}

/// Unit edges are keyed by their smaller endpoint.
pub(crate) fn unit_edges(cell: Cell, orientation: Orientation) -> [Point; 2] {
    let Point { x, y } = cell.anchor;
    match orientation {
        Orientation::Horizontal => [Point::new(x, y), Point::new(x, y + 1)],
        Orientation::Vertical => [Point::new(x, y), Point::new(x + 1, y)],
    }
}

/// Merge a set of unit edges (keyed by smaller endpoint) into maximal runs.
pub(crate) fn merge_unit_edges(
    starts: &BTreeSet<Point>,
    orientation: Orientation,
) -> Vec<EdgeInterval> {
    // Group by the fixed coordinate, then sweep along the free one.
    let mut lines: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for p in starts {
        let (line, pos) = match orientation {
            Orientation::Horizontal => (p.y, p.x),
            Orientation::Vertical => (p.x, p.y),
        };
        lines.entry(line).or_default().push(pos);
    }
    let mut out = Vec::new();
    for (line, mut positions) in lines {
        positions.sort_unstable();
        let mut i = 0;
        while i < positions.len() {
            let start = positions[i];
            let mut end = start + 1;
            i += 1;
            while i < positions.len() && positions[i] == end {
                end += 1;
                i += 1;
            }
            let (a, b) = match orientation {
                Orientation::Horizontal => (Point::new(start, line), Point::new(end, line)),
                Orientation::Vertical => (Point::new(line, start), Point::new(line, end)),
            };
            out.push(EdgeInterval {
                interval: Interval::new(a, b),
                orientation,
            });
        }
    }
    out.sort();
    out
}

/// A finite, edge-connected, nonempty set of cells.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polyomino {
    cells: BTreeSet<Cell>,
    vertices: BTreeSet<Point>,
}

impl Polyomino {
    /// Validate and build a polyomino with the default coordinate cap.
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        Self::with_cap(cells, DEFAULT_COORD_CAP)
    }

    pub fn with_cap(cells: impl IntoIterator<Item = Cell>, cap: u32) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(Error::EmptyInput);
        }
        for c in &cells {
            let value = c.anchor.x.max(c.anchor.y);
            if value >= cap {
                return Err(Error::CoordinateTooLarge { value, cap });
            }
        }
        let components = components(&cells);
        if components.len() > 1 {
            return Err(Error::Disconnected { components });
        }
        let vertices = cells.iter().flat_map(|c| c.vertices()).collect();
        Ok(Polyomino { cells, vertices })
    }

    /// Convenience constructor from anchor coordinates.
    pub fn from_anchors(anchors: &[(u32, u32)]) -> Result<Self> {
        Self::new(anchors.iter().map(|&(x, y)| Cell::new(x, y)))
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn vertices(&self) -> &BTreeSet<Point> {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn contains_anchor(&self, x: i64, y: i64) -> bool {
        match (u32::try_from(x), u32::try_from(y)) {
            (Ok(x), Ok(y)) => self.cells.contains(&Cell::new(x, y)),
            _ => false,
        }
    }

    /// Smallest interval containing every vertex.
    pub fn bounding_interval(&self) -> Interval {
        let min_x = self.cells.iter().map(|c| c.anchor.x).min().unwrap();
        let max_x = self.cells.iter().map(|c| c.anchor.x).max().unwrap();
        let min_y = self.cells.iter().map(|c| c.anchor.y).min().unwrap();
        let max_y = self.cells.iter().map(|c| c.anchor.y).max().unwrap();
        Interval::new(Point::new(min_x, min_y), Point::new(max_x + 1, max_y + 1))
    }

    /// Maximal edge intervals of one orientation, sorted canonically.
    pub fn maximal_edge_intervals(&self, orientation: Orientation) -> Vec<EdgeInterval> {
        let starts: BTreeSet<Point> = self
            .cells
            .iter()
            .flat_map(|&c| unit_edges(c, orientation))
            .collect();
        merge_unit_edges(&starts, orientation)
    }

    /// Whether every cell of the (non-degenerate) interval belongs to `self`.
    pub fn is_inner_interval(&self, interval: &Interval) -> Result<bool> {
        if !interval.is_proper() {
            return Err(Error::DegenerateInterval(*interval));
        }
        Ok(interval.cells().all(|c| self.cells.contains(&c)))
    }

    /// All inner intervals, in canonical `(lo, hi)` order.
    pub fn inner_intervals(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        for &lo in &self.vertices {
            for &hi in self.vertices.range(lo..) {
                if lo.x < hi.x && lo.y < hi.y {
                    let interval = Interval { lo, hi };
                    if interval.cells().all(|c| self.cells.contains(&c)) {
                        out.push(interval);
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// The same cells translated so the smallest coordinates are zero.
    pub fn normalized(&self) -> Polyomino {
        let b = self.bounding_interval();
        let cells = self
            .cells
            .iter()
            .map(|c| Cell::new(c.anchor.x - b.lo.x, c.anchor.y - b.lo.y));
        Polyomino::with_cap(cells, u32::MAX).expect("translation preserves validity")
    }
}

impl fmt::Debug for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.cells.iter().map(|c| c.anchor)).finish()
    }
}

/// Edge-connected components of a cell set, each sorted, in order of their
/// smallest cell.
pub fn components(cells: &BTreeSet<Cell>) -> Vec<Vec<Cell>> {
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut out = Vec::new();
    for &start in cells {
        if !seen.insert(start) {
            continue;
        }
        let mut component = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for n in c.neighbors() {
                if cells.contains(&n) && seen.insert(n) {
                    component.push(n);
                    queue.push_back(n);
                }
            }
        }
        component.sort();
        out.push(component);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn one_hole() -> Polyomino {
        Polyomino::from_anchors(&[
            (1, 0),
            (2, 0),
            (0, 1),
            (1, 1),
            (3, 1),
            (0, 2),
            (1, 2),
            (2, 2),
            (3, 2),
            (4, 2),
            (1, 3),
            (2, 3),
            (3, 3),
        ])
        .unwrap()
    }

    fn zigzag() -> Polyomino {
        Polyomino::from_anchors(&[
            (1, 0),
            (0, 1),
            (1, 1),
            (2, 1),
            (1, 2),
            (2, 2),
            (0, 3),
            (1, 3),
        ])
        .unwrap()
    }

    fn iv(a: (u32, u32), b: (u32, u32)) -> Interval {
        Interval::new(a.into(), b.into())
    }

    #[test]
    fn one_hole_builds() {
        assert_eq!(one_hole().len(), 13);
    }

    #[test]
    fn single_cell_builds() {
        let p = Polyomino::from_anchors(&[(0, 0)]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn disconnected_reports_components() {
        match Polyomino::from_anchors(&[(0, 0), (2, 0)]) {
            Err(Error::Disconnected { components }) => assert_eq!(components.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn diagonal_touch_is_disconnected() {
        assert!(matches!(
            Polyomino::from_anchors(&[(0, 0), (1, 1)]),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn empty_input_rejected() {
        assert_eq!(Polyomino::new([]), Err(Error::EmptyInput));
    }

    #[test]
    fn coordinate_cap_enforced() {
        assert!(matches!(
            Polyomino::with_cap([Cell::new(10, 0)], 10),
            Err(Error::CoordinateTooLarge { value: 10, cap: 10 })
        ));
        assert!(Polyomino::with_cap([Cell::new(9, 0)], 10).is_ok());
    }

    #[test]
    fn interval_normalizes() {
        let a = Point::new(3, 1);
        let b = Point::new(1, 0);
        let i = Interval::new(a, b);
        assert_eq!(i.lo, Point::new(1, 0));
        assert_eq!(i.hi, Point::new(3, 1));
        assert_eq!(Interval::new(i.lo, i.hi), i);
        assert_eq!(i.anti_diagonal_corners(), [Point::new(1, 1), Point::new(3, 0)]);
    }

    #[test]
    fn single_cell_horizontal_intervals() {
        let p = Polyomino::from_anchors(&[(0, 0)]).unwrap();
        let h: Vec<Interval> = p
            .maximal_edge_intervals(Orientation::Horizontal)
            .into_iter()
            .map(|e| e.interval)
            .collect();
        assert_eq!(h, vec![iv((0, 0), (1, 0)), iv((0, 1), (1, 1))]);
    }

    #[test]
    fn zigzag_row_one_is_single_interval() {
        let row: Vec<Interval> = zigzag()
            .maximal_edge_intervals(Orientation::Horizontal)
            .into_iter()
            .filter(|e| e.interval.lo.y == 1)
            .map(|e| e.interval)
            .collect();
        assert_eq!(row, vec![iv((0, 1), (3, 1))]);
    }

    #[test]
    fn square_vertical_intervals() {
        let p = Polyomino::from_anchors(&[(0, 0), (1, 0), (0, 1), (1, 1)]).unwrap();
        let v = p.maximal_edge_intervals(Orientation::Vertical);
        assert_eq!(v.len(), 3);
        assert!(v.iter().all(|e| e.len() == 2));
    }

    #[test]
    fn one_hole_inner_intervals() {
        let p = one_hole();
        assert_eq!(p.is_inner_interval(&iv((1, 0), (3, 1))), Ok(true));
        assert_eq!(p.is_inner_interval(&iv((1, 0), (3, 2))), Ok(false));
        for c in p.cells() {
            assert_eq!(p.is_inner_interval(&c.interval()), Ok(true));
        }
    }

    #[test]
    fn degenerate_interval_rejected() {
        let p = one_hole();
        let seg = iv((1, 0), (3, 0));
        assert_eq!(p.is_inner_interval(&seg), Err(Error::DegenerateInterval(seg)));
        let pt = iv((1, 1), (1, 1));
        assert!(p.is_inner_interval(&pt).is_err());
    }

    #[test]
    fn inner_interval_counts() {
        assert_eq!(Polyomino::from_anchors(&[(0, 0)]).unwrap().inner_intervals().len(), 1);
        let domino = Polyomino::from_anchors(&[(0, 0), (1, 0)]).unwrap();
        assert_eq!(
            domino.inner_intervals(),
            vec![iv((0, 0), (1, 1)), iv((0, 0), (2, 1)), iv((1, 0), (2, 1))]
        );
    }

    #[test]
    fn canonical_order_is_row_major() {
        assert!(Point::new(5, 0) < Point::new(0, 1));
        assert!(Cell::new(1, 0) < Cell::new(0, 1));
    }
}
