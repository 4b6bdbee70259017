//! Exhaustive generation of fixed polyominoes (translation classes only).

use std::collections::HashSet;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::grid::{Cell, Polyomino};
use crate::topology;

pub const DEFAULT_MAX_CELLS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_cells: usize,
    pub simple_only: bool,
    /// Largest `max_cells` that will be honored.
    pub cap: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            max_cells: DEFAULT_MAX_CELLS,
            simple_only: false,
            cap: DEFAULT_MAX_CELLS,
        }
    }
}

type Shape = Vec<(i32, i32)>;

fn canonical(mut cells: Shape) -> Shape {
    let min_x = cells.iter().map(|c| c.0).min().unwrap();
    let min_y = cells.iter().map(|c| c.1).min().unwrap();
    for c in &mut cells {
        c.0 -= min_x;
        c.1 -= min_y;
    }
    // Row-major, matching the canonical cell order.
    cells.sort_unstable_by_key(|&(x, y)| (y, x));
    cells
}

fn grow(shapes: &[Shape]) -> Vec<Shape> {
    let mut seen: HashSet<Shape> = HashSet::new();
    for shape in shapes {
        let occupied: HashSet<(i32, i32)> = shape.iter().copied().collect();
        for &(x, y) in shape {
            for n in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                if occupied.contains(&n) {
                    continue;
                }
                let mut bigger = shape.clone();
                bigger.push(n);
                seen.insert(canonical(bigger));
            }
        }
    }
    let mut out: Vec<Shape> = seen.into_iter().collect();
    out.sort_unstable_by(|a, b| a.iter().map(|&(x, y)| (y, x)).cmp(b.iter().map(|&(x, y)| (y, x))));
    out
}

fn to_polyomino(shape: &Shape) -> Polyomino {
    Polyomino::new(shape.iter().map(|&(x, y)| Cell::new(x as u32, y as u32)))
        .expect("grown shapes are connected")
}

fn shapes_by_size(max: usize) -> Vec<Vec<Shape>> {
    let mut levels = vec![vec![vec![(0, 0)]]];
    while levels.len() < max {
        let next = grow(levels.last().unwrap());
        levels.push(next);
    }
    levels
}

/// All fixed polyominoes with exactly `n` cells, translated so their
/// smallest coordinates are zero, in canonical order.
pub fn enumerate_polyominoes(n: usize) -> Result<Vec<Polyomino>> {
    enumerate_polyominoes_capped(n, DEFAULT_MAX_CELLS)
}

pub fn enumerate_polyominoes_capped(n: usize, cap: usize) -> Result<Vec<Polyomino>> {
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(shapes_by_size(n)
        .pop()
        .unwrap()
        .iter()
        .map(to_polyomino)
        .collect())
}

/// Every polyomino with `1..=max_cells` cells, smallest first.
pub fn enumerate(config: &EnumerationConfig) -> Result<Vec<Polyomino>> {
    if config.max_cells > config.cap {
        return Err(Error::CapExceeded {
            requested: config.max_cells,
            cap: config.cap,
        });
    }
    Ok(shapes_by_size(config.max_cells)
        .iter()
        .flatten()
        .map(to_polyomino)
        .filter(|p| !config.simple_only || topology::is_simple(p))
        .collect())
}

/// The first polyomino with a hole, scanning sizes in increasing order.
pub fn first_nonsimple(sizes: RangeInclusive<usize>, cap: usize) -> Result<Option<Polyomino>> {
    if *sizes.end() > cap {
        return Err(Error::CapExceeded {
            requested: *sizes.end(),
            cap,
        });
    }
    for n in sizes {
        if let Some(p) = enumerate_polyominoes_capped(n, cap)?
            .into_iter()
            .find(|p| !topology::is_simple(p))
        {
            return Ok(Some(p));
        }
    }
    Ok(None)
}
