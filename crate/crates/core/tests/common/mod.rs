#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use polyomino::labeling::Labeling;
use polyomino::{Cell, Point, Polyomino};

pub fn one_hole() -> Polyomino {
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

pub fn zigzag() -> Polyomino {
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

/// Seven-cell simple polyomino with a worked admissible labeling.
pub fn simple7() -> Polyomino {
    Polyomino::from_anchors(&[(1, 0), (0, 1), (1, 1), (1, 2), (2, 2), (0, 3), (1, 3)]).unwrap()
}

pub fn simple7_labeling(p: &Polyomino) -> Labeling {
    let entries = [
        ((1, 0), 1),
        ((2, 0), -1),
        ((0, 1), 1),
        ((1, 1), -1),
        ((0, 2), -1),
        ((1, 2), 3),
        ((3, 2), -2),
        ((0, 3), -1),
        ((1, 3), -3),
        ((2, 3), 2),
        ((3, 3), 2),
        ((0, 4), 1),
        ((2, 4), -1),
    ];
    Labeling::from_sparse(p, entries.map(|(q, v)| (Point::from(q), v))).unwrap()
}

pub fn ring() -> Polyomino {
    Polyomino::from_anchors(&[
        (0, 0),
        (1, 0),
        (2, 0),
        (0, 1),
        (2, 1),
        (0, 2),
        (1, 2),
        (2, 2),
    ])
    .unwrap()
}

/// Fixed n-ominoes by brute force: every n-subset of an n×n box, kept when
/// edge-connected, deduplicated by translation.
pub fn subset_oracle_count(n: usize) -> usize {
    let side = n as u32;
    let all: Vec<(u32, u32)> = (0..side).flat_map(|y| (0..side).map(move |x| (x, y))).collect();
    let mut found: HashSet<Vec<(u32, u32)>> = HashSet::new();
    let mut choose = vec![0usize; n];
    fn rec(
        all: &[(u32, u32)],
        start: usize,
        depth: usize,
        choose: &mut Vec<usize>,
        found: &mut HashSet<Vec<(u32, u32)>>,
    ) {
        if depth == choose.len() {
            let cells: Vec<(u32, u32)> = choose.iter().map(|&i| all[i]).collect();
            if connected(&cells) {
                let mx = cells.iter().map(|c| c.0).min().unwrap();
                let my = cells.iter().map(|c| c.1).min().unwrap();
                let mut shifted: Vec<(u32, u32)> =
                    cells.iter().map(|&(x, y)| (x - mx, y - my)).collect();
                shifted.sort();
                found.insert(shifted);
            }
            return;
        }
        for i in start..all.len() {
            choose[depth] = i;
            rec(all, i + 1, depth + 1, choose, found);
        }
    }
    rec(&all, 0, 0, &mut choose, &mut found);
    found.len()
}

fn connected(cells: &[(u32, u32)]) -> bool {
    let set: HashSet<(u32, u32)> = cells.iter().copied().collect();
    let mut seen = HashSet::from([cells[0]]);
    let mut stack = vec![cells[0]];
    while let Some((x, y)) = stack.pop() {
        let mut push = |c: (u32, u32)| {
            if set.contains(&c) && seen.insert(c) {
                stack.push(c);
            }
        };
        push((x + 1, y));
        push((x, y + 1));
        if x > 0 {
            push((x - 1, y));
        }
        if y > 0 {
            push((x, y - 1));
        }
    }
    seen.len() == set.len()
}

/// Cells of `p`'s complement that cannot escape a box with a wide margin,
/// found by a depth-first search from the far corner.
pub fn trapped_cells_oracle(p: &Polyomino) -> BTreeSet<Cell> {
    let margin = 3i64;
    let b = p.bounding_interval();
    let (x0, y0) = (i64::from(b.lo.x) - margin, i64::from(b.lo.y) - margin);
    let (x1, y1) = (i64::from(b.hi.x) + margin, i64::from(b.hi.y) + margin);
    let mut outside: HashSet<(i64, i64)> = HashSet::from([(x1, y1)]);
    let mut stack = vec![(x1, y1)];
    while let Some((x, y)) = stack.pop() {
        for (nx, ny) in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
            if nx < x0 || nx > x1 || ny < y0 || ny > y1 || p.contains_anchor(nx, ny) {
                continue;
            }
            if outside.insert((nx, ny)) {
                stack.push((nx, ny));
            }
        }
    }
    b.cells()
        .filter(|c| !p.contains(*c))
        .filter(|c| !outside.contains(&(i64::from(c.anchor.x), i64::from(c.anchor.y))))
        .collect()
}
