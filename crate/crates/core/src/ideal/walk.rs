use std::cmp::Reverse;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::grid::{EdgeInterval, Orientation, Point, Polyomino};
use crate::labeling::Labeling;
use crate::polygon::{RectilinearPolygon, Segment};

use super::check_admissible;

/// A sign-alternating path `a_0, a_1, ...` along edge intervals, together
/// with the simple polygon cut out at its first self-intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingWalk {
    /// `a_0, ..., a_{r+1}`: `[a_i, a_{i+1}]` is horizontal for even `i`.
    pub steps: Vec<Point>,
    /// Sign of the label at each step; `signs[i] == (-1)^i`.
    pub signs: Vec<i8>,
    pub polygon: RectilinearPolygon,
}

fn line_index(p: &Polyomino, orientation: Orientation) -> HashMap<Point, EdgeInterval> {
    p.maximal_edge_intervals(orientation)
        .into_iter()
        .flat_map(|e| e.points().map(move |q| (q, e)).collect::<Vec<_>>())
        .collect()
}

fn distance(a: Point, b: Point) -> u32 {
    a.x.abs_diff(b.x) + a.y.abs_diff(b.y)
}

/// Walk from the canonically least positively labeled vertex, alternating
/// horizontal and vertical edge intervals and landing each time on the
/// nearest vertex of the required sign (ties go to the smaller coordinate).
///
/// The walk stops at the first segment `[a_r, a_{r+1}]` that meets an earlier
/// non-adjacent segment `[a_j, a_{j+1}]`. With `q` the meeting point closest
/// to `a_r` (the latest such `j` on ties), the polygon is
/// `q, a_{j+1}, ..., a_r`, with `q` dropped when it is not a turn.
pub fn alternating_walk(p: &Polyomino, alpha: &Labeling) -> Result<AlternatingWalk> {
    check_admissible(p, alpha)?;
    let start = alpha
        .iter()
        .find(|&(_, v)| v > 0)
        .map(|(q, _)| q)
        .ok_or(Error::ZeroLabeling)?;

    let rows = line_index(p, Orientation::Horizontal);
    let columns = line_index(p, Orientation::Vertical);
    let limit = 4 * p.vertices().len() + 8;

    let mut steps = vec![start];
    let mut segments: Vec<Segment> = Vec::new();
    for r in 0.. {
        assert!(r < limit, "alternating walk failed to close");
        let here = steps[r];
        let line = if r % 2 == 0 { &rows[&here] } else { &columns[&here] };
        let want_positive = r % 2 == 1;
        let next = line
            .points()
            .filter(|&q| {
                let v = alpha.get(q);
                if want_positive {
                    v > 0
                } else {
                    v < 0
                }
            })
            .min_by_key(|&q| (distance(here, q), q))
            .ok_or(Error::NotAdmissible)?;
        let seg = Segment::new(here, next);
        steps.push(next);

        let hit = segments
            .iter()
            .enumerate()
            .take(r.saturating_sub(1))
            .filter_map(|(j, earlier)| {
                let meet = seg.intersection(earlier)?;
                let q = if distance(here, meet.lo) <= distance(here, meet.hi) {
                    meet.lo
                } else {
                    meet.hi
                };
                Some((distance(here, q), Reverse(j), q))
            })
            .min();
        if let Some((_, Reverse(j), q)) = hit {
            let mut cycle = vec![q];
            cycle.extend_from_slice(&steps[j + 1..=r]);
            let polygon = RectilinearPolygon::from_cycle(drop_straight(cycle))?;
            let signs = steps
                .iter()
                .map(|&a| alpha.get(a).signum() as i8)
                .collect();
            return Ok(AlternatingWalk {
                steps,
                signs,
                polygon,
            });
        }
        segments.push(seg);
    }
    unreachable!()
}

fn drop_straight(cycle: Vec<Point>) -> Vec<Point> {
    let k = cycle.len();
    (0..k)
        .filter(|&i| {
            let prev = cycle[(i + k - 1) % k];
            let next = cycle[(i + 1) % k];
            let c = cycle[i];
            !((prev.x == c.x && c.x == next.x) || (prev.y == c.y && c.y == next.y))
        })
        .map(|i| cycle[i])
        .collect()
}
