//! Border edges, holes and the border polygon of a polyomino.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::grid::{self, Cell, EdgeInterval, Orientation, Point, Polyomino};
use crate::polygon::RectilinearPolygon;

/// A unit edge that belongs to exactly one cell of the polyomino.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorderEdge {
    pub a: Point,
    pub b: Point,
    pub orientation: Orientation,
}

/// Border edges in canonical order (by smaller endpoint, horizontal first).
pub fn border_edges(p: &Polyomino) -> Vec<BorderEdge> {
    let mut out = Vec::new();
    for orientation in [Orientation::Horizontal, Orientation::Vertical] {
        for a in border_edge_starts(p, orientation) {
            let b = match orientation {
                Orientation::Horizontal => Point::new(a.x + 1, a.y),
                Orientation::Vertical => Point::new(a.x, a.y + 1),
            };
            out.push(BorderEdge { a, b, orientation });
        }
    }
    out.sort_by_key(|e| (e.a, e.orientation));
    out
}

fn border_edge_starts(p: &Polyomino, orientation: Orientation) -> BTreeSet<Point> {
    let mut count: BTreeMap<Point, u8> = BTreeMap::new();
    for &c in p.cells() {
        for start in grid::unit_edges(c, orientation) {
            *count.entry(start).or_default() += 1;
        }
    }
    count
        .into_iter()
        .filter(|&(_, n)| n == 1)
        .map(|(s, _)| s)
        .collect()
}

/// Inclusion-maximal runs of collinear border edges, horizontal ones first.
pub fn maximal_border_edge_intervals(p: &Polyomino) -> Vec<EdgeInterval> {
    let mut out = Vec::new();
    for orientation in [Orientation::Horizontal, Orientation::Vertical] {
        out.extend(grid::merge_unit_edges(&border_edge_starts(p, orientation), orientation));
    }
    out
}

/// The holes of `p`: components of the cells that cannot reach the outside
/// through cells not in `p`.
///
/// The complement is flood-filled inside the bounding box grown by one cell
/// on every side, starting from a margin cell.
pub fn holes(p: &Polyomino) -> Vec<Polyomino> {
    let b = p.bounding_interval();
    let (x0, y0) = (i64::from(b.lo.x) - 1, i64::from(b.lo.y) - 1);
    let (x1, y1) = (i64::from(b.hi.x), i64::from(b.hi.y));
    let w = (x1 - x0 + 1) as usize;
    let h = (y1 - y0 + 1) as usize;
    let idx = |x: i64, y: i64| (y - y0) as usize * w + (x - x0) as usize;

    let mut reached = vec![false; w * h];
    let mut queue = VecDeque::from([(x0, y0)]);
    reached[idx(x0, y0)] = true;
    while let Some((x, y)) = queue.pop_front() {
        for (nx, ny) in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
            if nx < x0 || nx > x1 || ny < y0 || ny > y1 {
                continue;
            }
            if reached[idx(nx, ny)] || p.contains_anchor(nx, ny) {
                continue;
            }
            reached[idx(nx, ny)] = true;
            queue.push_back((nx, ny));
        }
    }

    let trapped: BTreeSet<Cell> = b
        .cells()
        .filter(|c| {
            !p.contains(*c) && !reached[idx(i64::from(c.anchor.x), i64::from(c.anchor.y))]
        })
        .collect();
    grid::components(&trapped)
        .into_iter()
        .map(|component| Polyomino::with_cap(component, u32::MAX).expect("component is connected"))
        .collect()
}

pub fn is_simple(p: &Polyomino) -> bool {
    holes(p).is_empty()
}

/// Directed border edges with the polyomino on their left.
fn directed_border(p: &Polyomino) -> BTreeMap<Point, Vec<Point>> {
    let mut out: BTreeMap<Point, Vec<Point>> = BTreeMap::new();
    for c in p.cells() {
        let (x, y) = (i64::from(c.anchor.x), i64::from(c.anchor.y));
        let [ll, lr, ul, ur] = c.vertices();
        let sides = [
            ((x, y - 1), ll, lr),
            ((x + 1, y), lr, ur),
            ((x, y + 1), ur, ul),
            ((x - 1, y), ul, ll),
        ];
        for ((nx, ny), from, to) in sides {
            if !p.contains_anchor(nx, ny) {
                out.entry(from).or_default().push(to);
            }
        }
    }
    out
}

fn direction(a: Point, b: Point) -> (i64, i64) {
    (
        (i64::from(b.x) - i64::from(a.x)).signum(),
        (i64::from(b.y) - i64::from(a.y)).signum(),
    )
}

/// Trace the border of a simple polyomino as a counterclockwise polygon.
///
/// The corner list starts at the least border vertex in canonical order,
/// which is always a convex corner left by an eastward edge. Straight runs
/// are merged, so every corner is a genuine turn.
pub fn border_polygon(p: &Polyomino) -> Result<RectilinearPolygon> {
    if !is_simple(p) {
        return Err(Error::NotSimple);
    }
    let mut outgoing = directed_border(p);
    let total: usize = outgoing.values().map(Vec::len).sum();
    let start = *outgoing.keys().next().expect("nonempty border");

    let mut walk = vec![start];
    let mut current = start;
    let mut heading = (0, -1);
    loop {
        let options = outgoing.get_mut(&current).ok_or(Error::NotSimple)?;
        // At a pinch point prefer the left-most turn; simple polyominoes have
        // none, so this only matters for malformed input.
        let pick = (0..options.len())
            .max_by_key(|&i| {
                let d = direction(current, options[i]);
                heading.0 * d.1 - heading.1 * d.0
            })
            .ok_or(Error::NotSimple)?;
        let next = options.swap_remove(pick);
        heading = direction(current, next);
        current = next;
        if current == start {
            break;
        }
        walk.push(current);
    }
    if walk.len() != total {
        return Err(Error::NotSimple);
    }

    let k = walk.len();
    let corners: Vec<Point> = (0..k)
        .filter(|&i| {
            let prev = walk[(i + k - 1) % k];
            let next = walk[(i + 1) % k];
            direction(prev, walk[i]) != direction(walk[i], next)
        })
        .map(|i| walk[i])
        .collect();
    RectilinearPolygon::new(corners)
}
