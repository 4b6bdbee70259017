//! Inner-minor moves and membership of `f_alpha` in the polyomino ideal.
//!
//! `f_alpha` lies in the ideal generated by the inner minors exactly when
//! `alpha⁻` can be carried to `alpha⁺` by moves `±u_I` (one per inner
//! interval `I`) without any entry going negative. [`is_labeling_balanced`]
//! searches that fiber breadth-first and returns the move sequence as a
//! [`Witness`]; [`verify_witness`] replays one independently.

mod search;
mod walk;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use crate::error::Result;
use crate::grid::{Interval, Point, Polyomino};
use crate::labeling::{self, enumerate_admissible, Binomial, ExponentVector, Frame, Labeling, Sign};
use crate::topology;

pub use search::{is_labeling_balanced, BalanceOutcome, SearchConfig, DEFAULT_MAX_NODES};
pub use walk::{alternating_walk, AlternatingWalk};

/// `sign · u_I`: `-sign` on the diagonal corners of `source`, `+sign` on its
/// anti-diagonal corners.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveVector {
    pub source: Interval,
    pub sign: Sign,
}

impl MoveVector {
    pub fn new(source: Interval, sign: Sign) -> Self {
        MoveVector { source, sign }
    }

    pub fn negated(self) -> Self {
        MoveVector {
            source: self.source,
            sign: self.sign.flip(),
        }
    }

    /// Entry at a polyomino vertex (original coordinates).
    pub fn value_at(&self, q: Point) -> i64 {
        if self.source.diagonal_corners().contains(&q) {
            -self.sign.value()
        } else if self.source.anti_diagonal_corners().contains(&q) {
            self.sign.value()
        } else {
            0
        }
    }

    /// Nonzero entries, keyed by original coordinates.
    pub fn support(&self) -> [(Point, i64); 4] {
        let [d0, d1] = self.source.diagonal_corners();
        let [a0, a1] = self.source.anti_diagonal_corners();
        let s = self.sign.value();
        [(d0, -s), (d1, -s), (a0, s), (a1, s)]
    }

    /// The move as a dense `m × n` integer matrix on `frame`.
    pub fn to_grid(&self, frame: &Frame) -> Option<IntGrid> {
        let mut grid = IntGrid::zeros(frame.m, frame.n);
        for (q, v) in self.support() {
            let at = frame.to_frame(q)?;
            *grid.at_mut(at) += v;
        }
        Some(grid)
    }
}

impl fmt::Debug for MoveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "{s}u{}", self.source)
    }
}

/// Dense integer matrix indexed by frame points `(i, j)`, `1 <= i <= m`,
/// `1 <= j <= n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntGrid {
    pub m: u32,
    pub n: u32,
    data: Vec<i64>,
}

impl IntGrid {
    pub fn zeros(m: u32, n: u32) -> Self {
        IntGrid {
            m,
            n,
            data: vec![0; (m * n) as usize],
        }
    }

    fn offset(&self, at: Point) -> usize {
        assert!(at.x >= 1 && at.x <= self.m && at.y >= 1 && at.y <= self.n);
        ((at.y - 1) * self.m + (at.x - 1)) as usize
    }

    pub fn at(&self, at: Point) -> i64 {
        self.data[self.offset(at)]
    }

    pub fn at_mut(&mut self, at: Point) -> &mut i64 {
        let k = self.offset(at);
        &mut self.data[k]
    }

    /// Sums along each horizontal line `j = 1..=n`.
    pub fn row_sums(&self) -> Vec<i64> {
        self.data.chunks(self.m as usize).map(|r| r.iter().sum()).collect()
    }

    /// Sums along each vertical line `i = 1..=m`.
    pub fn column_sums(&self) -> Vec<i64> {
        (0..self.m as usize)
            .map(|i| self.data.iter().skip(i).step_by(self.m as usize).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }
}

impl Add for &IntGrid {
    type Output = IntGrid;

    fn add(self, rhs: &IntGrid) -> IntGrid {
        assert_eq!((self.m, self.n), (rhs.m, rhs.n));
        IntGrid {
            m: self.m,
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

/// `M(P)`: `+u_I` and `-u_I` for every inner interval, in that order.
pub fn move_vectors(p: &Polyomino) -> Vec<MoveVector> {
    p.inner_intervals()
        .into_iter()
        .flat_map(|i| [MoveVector::new(i, Sign::Plus), MoveVector::new(i, Sign::Minus)])
        .collect()
}

/// One binomial per inner interval: anti-diagonal corners in `plus`,
/// diagonal corners in `minus`. This is the inner minor up to sign, and it
/// coincides with the binomial of the labeling `alpha_I`.
pub fn inner_minor_generators(p: &Polyomino) -> Vec<(Interval, Binomial)> {
    let frame = Frame::of(p);
    let exps = |pts: [Point; 2]| {
        ExponentVector::from_entries(pts.map(|q| (frame.to_frame(q).expect("vertex in frame"), 1)))
    };
    p.inner_intervals()
        .into_iter()
        .map(|i| {
            let b = Binomial {
                plus: exps(i.anti_diagonal_corners()),
                minus: exps(i.diagonal_corners()),
            };
            (i, b)
        })
        .collect()
}

/// Moves `u_1, ..., u_t` carrying `alpha⁻` to `alpha⁺`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Witness {
    pub moves: Vec<MoveVector>,
}

impl Witness {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// Replays `w` from `alpha⁻`: every move must come from an inner interval of
/// `p`, every prefix must stay nonnegative, and the end must be `alpha⁺`.
pub fn verify_witness(p: &Polyomino, alpha: &Labeling, w: &Witness) -> bool {
    if alpha.check_domain(p).is_err() {
        return false;
    }
    let mut state: BTreeMap<Point, i64> = alpha.iter().map(|(q, v)| (q, (-v).max(0))).collect();
    for m in &w.moves {
        if !matches!(p.is_inner_interval(&m.source), Ok(true)) {
            return false;
        }
        for (q, v) in m.support() {
            let entry = state.entry(q).or_insert(0);
            *entry += v;
            if *entry < 0 {
                return false;
            }
        }
    }
    alpha.iter().all(|(q, v)| state.get(&q).copied().unwrap_or(0) == v.max(0))
}

/// Non-balancedness evidence: an admissible labeling whose fiber search
/// found no path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonBalanceCertificate {
    pub labeling: Labeling,
    pub search: BalanceOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceVerdict {
    pub balanced: bool,
    pub certificate: Option<NonBalanceCertificate>,
}

/// A polyomino is balanced exactly when it is simple. For a polyomino with
/// holes the verdict carries the hole labeling and its failed search.
pub fn is_balanced_certified(p: &Polyomino, config: &SearchConfig) -> BalanceVerdict {
    if topology::is_simple(p) {
        return BalanceVerdict {
            balanced: true,
            certificate: None,
        };
    }
    let labeling = labeling::hole_witness_labeling(p).expect("non-simple polyomino has a hole");
    let search =
        is_labeling_balanced(p, &labeling, config).expect("hole labeling is admissible");
    BalanceVerdict {
        balanced: false,
        certificate: Some(NonBalanceCertificate { labeling, search }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    Agrees,
    Disagrees,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckEntry {
    pub labeling: Labeling,
    pub outcome: BalanceOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub simple: bool,
    pub entries: Vec<CrossCheckEntry>,
}

impl CrossCheckReport {
    fn count(&self, f: impl Fn(&BalanceOutcome) -> bool) -> usize {
        self.entries.iter().filter(|e| f(&e.outcome)).count()
    }

    pub fn connected(&self) -> usize {
        self.count(|o| matches!(o, BalanceOutcome::Connected(_)))
    }

    pub fn exhausted(&self) -> usize {
        self.count(|o| matches!(o, BalanceOutcome::Exhausted { .. }))
    }

    pub fn capped(&self) -> usize {
        self.count(|o| matches!(o, BalanceOutcome::Capped { .. }))
    }

    /// Simple polyominoes must connect every labeling; polyominoes with a
    /// hole must fail on at least one.
    pub fn agreement(&self) -> Agreement {
        match (self.simple, self.exhausted() > 0, self.capped() > 0) {
            (true, true, _) => Agreement::Disagrees,
            (true, false, true) => Agreement::Inconclusive,
            (true, false, false) => Agreement::Agrees,
            (false, true, _) => Agreement::Agrees,
            (false, false, true) => Agreement::Inconclusive,
            (false, false, false) => Agreement::Disagrees,
        }
    }
}

/// Run the fiber search on every admissible labeling with entries bounded by
/// `max_abs`.
pub fn cross_check_balanced(p: &Polyomino, max_abs: u32, config: &SearchConfig) -> CrossCheckReport {
    let entries = enumerate_admissible(p, max_abs)
        .into_iter()
        .map(|labeling| {
            let outcome =
                is_labeling_balanced(p, &labeling, config).expect("enumerated labelings are admissible");
            CrossCheckEntry { labeling, outcome }
        })
        .collect();
    CrossCheckReport {
        simple: topology::is_simple(p),
        entries,
    }
}

/// `u_I` for a single cell, as a dense grid on `frame`.
pub fn cell_move_grid(cell: crate::grid::Cell, frame: &Frame) -> Option<IntGrid> {
    MoveVector::new(cell.interval(), Sign::Plus).to_grid(frame)
}

pub(crate) fn check_admissible(p: &Polyomino, alpha: &Labeling) -> Result<()> {
    if labeling::is_admissible(p, alpha)? {
        Ok(())
    } else {
        Err(crate::error::Error::NotAdmissible)
    }
}
