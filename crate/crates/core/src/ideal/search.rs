use std::collections::{HashMap, HashSet};

use crate::error::Result;
use crate::grid::{Interval, Point, Polyomino};
use crate::labeling::{Labeling, Sign};

use super::{alternating_walk, check_admissible, MoveVector, Witness};

pub const DEFAULT_MAX_NODES: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Upper bound on the number of distinct states discovered.
    pub max_nodes: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_nodes: DEFAULT_MAX_NODES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalanceOutcome {
    /// `alpha⁺` is reachable; the witness is a shortest move sequence.
    Connected(Witness),
    /// The whole component of `alpha⁻` was explored without meeting `alpha⁺`.
    Exhausted { states: usize },
    /// The node cap was hit first; nothing can be concluded.
    Capped { states: usize },
}

impl BalanceOutcome {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            BalanceOutcome::Connected(w) => Some(w),
            _ => None,
        }
    }
}

/// Decide whether `f_alpha` lies in the polyomino ideal by breadth-first
/// search over nonnegative vectors reachable from `alpha⁻`.
///
/// Both ends have the same total, so the search always starts from `alpha⁻`.
/// Every move keeps all line sums fixed, hence each entry stays below the
/// starting sum of its row and the reachable set is finite.
///
/// Moves spanned by a good corner of the labeling's alternating-walk polygon
/// are tried first; this only changes which shortest witness is returned.
pub fn is_labeling_balanced(
    p: &Polyomino,
    alpha: &Labeling,
    config: &SearchConfig,
) -> Result<BalanceOutcome> {
    check_admissible(p, alpha)?;

    let vertices: Vec<Point> = p.vertices().iter().copied().collect();
    let index: HashMap<Point, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let to_state = |f: &dyn Fn(i64) -> i64| -> Box<[u32]> {
        vertices
            .iter()
            .map(|&v| u32::try_from(f(alpha.get(v))).expect("label fits in u32"))
            .collect()
    };
    let start = to_state(&|v| (-v).max(0));
    let target = to_state(&|v| v.max(0));
    if start == target {
        return Ok(BalanceOutcome::Connected(Witness::default()));
    }

    let moves = ordered_moves(p, alpha);
    // [decrement, decrement, increment, increment] vertex indices per move.
    let steps: Vec<[usize; 4]> = moves
        .iter()
        .map(|m| {
            let diag = m.source.diagonal_corners().map(|q| index[&q]);
            let anti = m.source.anti_diagonal_corners().map(|q| index[&q]);
            match m.sign {
                Sign::Plus => [diag[0], diag[1], anti[0], anti[1]],
                Sign::Minus => [anti[0], anti[1], diag[0], diag[1]],
            }
        })
        .collect();

    let mut row_total: HashMap<u32, u64> = HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        *row_total.entry(v.y).or_default() += u64::from(start[i]);
    }
    let row_bound: Vec<u64> = vertices.iter().map(|v| row_total[&v.y]).collect();

    let mut states: Vec<Box<[u32]>> = vec![start.clone()];
    let mut parent: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX)];
    let mut seen: HashSet<Box<[u32]>> = HashSet::from([start]);
    let mut head = 0;
    while head < states.len() {
        if states.len() >= config.max_nodes {
            return Ok(BalanceOutcome::Capped {
                states: states.len(),
            });
        }
        let current = states[head].clone();
        for (k, &[d0, d1, i0, i1]) in steps.iter().enumerate() {
            if current[d0] == 0 || current[d1] == 0 {
                continue;
            }
            let mut next = current.clone();
            next[d0] -= 1;
            next[d1] -= 1;
            next[i0] += 1;
            next[i1] += 1;
            if seen.contains(&next) {
                continue;
            }
            debug_assert!(next
                .iter()
                .zip(&row_bound)
                .all(|(&e, &bound)| u64::from(e) <= bound));
            seen.insert(next.clone());
            let found = next == target;
            states.push(next);
            parent.push((head, k));
            if found {
                let mut path = Vec::new();
                let mut at = states.len() - 1;
                while at != 0 {
                    let (prev, mv) = parent[at];
                    path.push(moves[mv]);
                    at = prev;
                }
                path.reverse();
                return Ok(BalanceOutcome::Connected(Witness { moves: path }));
            }
        }
        head += 1;
    }
    Ok(BalanceOutcome::Exhausted {
        states: states.len(),
    })
}

fn ordered_moves(p: &Polyomino, alpha: &Labeling) -> Vec<MoveVector> {
    let preferred: HashSet<Interval> = match alternating_walk(p, alpha) {
        Ok(walk) => walk
            .polygon
            .good_rectangles()
            .into_iter()
            .map(|(_, rect)| rect)
            .collect(),
        Err(_) => HashSet::new(),
    };
    let mut moves = super::move_vectors(p);
    moves.sort_by_key(|m| !preferred.contains(&m.source));
    moves
}
