//! Simple rectilinear polygons on the lattice and their corner geometry.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{Cell, Interval, Point};

/// A simple, counterclockwise rectilinear polygon given by its corners.
///
/// Consecutive corners differ in exactly one coordinate, edges alternate
/// between horizontal and vertical, and no two non-adjacent edges meet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RectilinearPolygon {
    corners: Vec<Point>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CornerKind {
    /// Interior angle of 90 degrees.
    Convex,
    /// Interior angle of 270 degrees.
    Concave,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CornerInfo {
    pub point: Point,
    pub kind: CornerKind,
    pub good: bool,
}

/// Closed axis-parallel segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    fn bounds(&self) -> Interval {
        Interval::new(self.a, self.b)
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.y == self.b.y
    }

    pub fn intersects(&self, other: &Segment) -> bool {
        let s = self.bounds();
        let o = other.bounds();
        s.lo.x.max(o.lo.x) <= s.hi.x.min(o.hi.x) && s.lo.y.max(o.lo.y) <= s.hi.y.min(o.hi.y)
    }

    /// Points of `self ∩ other`, as the overlapping sub-interval.
    pub fn intersection(&self, other: &Segment) -> Option<Interval> {
        if !self.intersects(other) {
            return None;
        }
        let s = self.bounds();
        let o = other.bounds();
        Some(Interval::new(
            Point::new(s.lo.x.max(o.lo.x), s.lo.y.max(o.lo.y)),
            Point::new(s.hi.x.min(o.hi.x), s.hi.y.min(o.hi.y)),
        ))
    }
}

fn cross(o: Point, a: Point, b: Point) -> i64 {
    let (ax, ay) = (i64::from(a.x) - i64::from(o.x), i64::from(a.y) - i64::from(o.y));
    let (bx, by) = (i64::from(b.x) - i64::from(a.x), i64::from(b.y) - i64::from(a.y));
    ax * by - ay * bx
}

impl RectilinearPolygon {
    /// Validate a corner cycle. The cycle must already be counterclockwise;
    /// it is rotated to start at its least corner in canonical order.
    pub fn new(mut corners: Vec<Point>) -> Result<Self> {
        let k = corners.len();
        if k < 4 || !k.is_multiple_of(2) {
            return Err(Error::InvalidPolygon("corner count must be even and at least 4"));
        }
        for i in 0..k {
            let a = corners[i];
            let b = corners[(i + 1) % k];
            if (a.x == b.x) == (a.y == b.y) {
                return Err(Error::InvalidPolygon(
                    "consecutive corners must differ in exactly one coordinate",
                ));
            }
        }
        let first = (0..k).min_by_key(|&i| corners[i]).unwrap();
        corners.rotate_left(first);
        let polygon = RectilinearPolygon { corners };
        let edges = polygon.edges();
        for i in 0..k {
            if edges[i].is_horizontal() == edges[(i + 1) % k].is_horizontal() {
                return Err(Error::InvalidPolygon("edges must alternate orientation"));
            }
        }
        for i in 0..k {
            for j in i + 1..k {
                let adjacent = j == i + 1 || (i == 0 && j == k - 1);
                match edges[i].intersection(&edges[j]) {
                    None => {}
                    Some(meet) if adjacent && meet.lo == meet.hi => {}
                    Some(_) => {
                        return Err(Error::InvalidPolygon("polygon self-intersects"));
                    }
                }
            }
        }
        if polygon.twice_signed_area() <= 0 {
            return Err(Error::InvalidPolygon("corners must run counterclockwise"));
        }
        Ok(polygon)
    }

    /// Like [`RectilinearPolygon::new`] but accepts either orientation,
    /// reversing a clockwise cycle.
    pub fn from_cycle(mut corners: Vec<Point>) -> Result<Self> {
        if shoelace(&corners) < 0 {
            corners.reverse();
        }
        Self::new(corners)
    }

    /// Axis-aligned rectangle with the given opposite corners.
    pub fn rectangle(interval: Interval) -> Result<Self> {
        let Interval { lo, hi } = interval;
        Self::new(vec![
            lo,
            Point::new(hi.x, lo.y),
            hi,
            Point::new(lo.x, hi.y),
        ])
    }

    pub fn corners(&self) -> &[Point] {
        &self.corners
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub(crate) fn edges(&self) -> Vec<Segment> {
        let k = self.corners.len();
        (0..k)
            .map(|i| Segment::new(self.corners[i], self.corners[(i + 1) % k]))
            .collect()
    }

    pub fn twice_signed_area(&self) -> i64 {
        shoelace(&self.corners)
    }

    fn neighbors(&self, i: usize) -> (Point, Point) {
        let k = self.corners.len();
        (self.corners[(i + k - 1) % k], self.corners[(i + 1) % k])
    }

    pub fn corner_kind(&self, i: usize) -> CornerKind {
        let (prev, next) = self.neighbors(i);
        if cross(prev, self.corners[i], next) > 0 {
            CornerKind::Convex
        } else {
            CornerKind::Concave
        }
    }

    /// Rectangle spanned by corner `i` and its two neighboring corners.
    pub fn spanned_rectangle(&self, i: usize) -> Interval {
        let (prev, next) = self.neighbors(i);
        let c = self.corners[i];
        let xs = [prev.x, c.x, next.x];
        let ys = [prev.y, c.y, next.y];
        Interval::new(
            Point::new(*xs.iter().min().unwrap(), *ys.iter().min().unwrap()),
            Point::new(*xs.iter().max().unwrap(), *ys.iter().max().unwrap()),
        )
    }

    /// Whether the lattice point `(cx, cy) / 2` lies strictly inside.
    /// Callers pass odd doubled coordinates, so the ray never grazes a vertex.
    fn contains_doubled(&self, cx: i64, cy: i64) -> bool {
        let mut inside = false;
        for e in self.edges() {
            if e.is_horizontal() {
                continue;
            }
            let ex = 2 * i64::from(e.a.x);
            let (y1, y2) = (2 * i64::from(e.a.y), 2 * i64::from(e.b.y));
            if ex > cx && y1.min(y2) < cy && cy < y1.max(y2) {
                inside = !inside;
            }
        }
        inside
    }

    /// Unit cells inside the polygon.
    pub fn interior_cells(&self) -> BTreeSet<Cell> {
        let min_x = self.corners.iter().map(|p| p.x).min().unwrap();
        let max_x = self.corners.iter().map(|p| p.x).max().unwrap();
        let min_y = self.corners.iter().map(|p| p.y).min().unwrap();
        let max_y = self.corners.iter().map(|p| p.y).max().unwrap();
        let mut out = BTreeSet::new();
        for y in min_y..max_y {
            for x in min_x..max_x {
                if self.contains_doubled(2 * i64::from(x) + 1, 2 * i64::from(y) + 1) {
                    out.insert(Cell::new(x, y));
                }
            }
        }
        out
    }

    fn is_good_with(&self, i: usize, interior: &BTreeSet<Cell>) -> bool {
        self.corner_kind(i) == CornerKind::Convex
            && self.spanned_rectangle(i).cells().all(|c| interior.contains(&c))
    }

    /// Each corner tagged convex or concave, together with its good flag.
    pub fn classify_corners(&self) -> Vec<CornerInfo> {
        let interior = self.interior_cells();
        (0..self.corners.len())
            .map(|i| CornerInfo {
                point: self.corners[i],
                kind: self.corner_kind(i),
                good: self.is_good_with(i, &interior),
            })
            .collect()
    }

    /// Good corners paired with their spanned rectangles.
    pub fn good_rectangles(&self) -> Vec<(Point, Interval)> {
        let interior = self.interior_cells();
        (0..self.corners.len())
            .filter(|&i| self.is_good_with(i, &interior))
            .map(|i| (self.corners[i], self.spanned_rectangle(i)))
            .collect()
    }

    /// Convex corners whose neighbor-spanned rectangle lies in the interior.
    pub fn good_corners(&self) -> Vec<Point> {
        let interior = self.interior_cells();
        (0..self.corners.len())
            .filter(|&i| self.is_good_with(i, &interior))
            .map(|i| self.corners[i])
            .collect()
    }
}

fn shoelace(corners: &[Point]) -> i64 {
    let k = corners.len();
    (0..k)
        .map(|i| {
            let a = corners[i];
            let b = corners[(i + 1) % k];
            i64::from(a.x) * i64::from(b.y) - i64::from(b.x) * i64::from(a.y)
        })
        .sum()
}

impl fmt::Debug for RectilinearPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.corners).finish()
    }
}
