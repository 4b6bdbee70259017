//! Integer labelings of the vertex set, admissibility, and the binomials
//! attached to labelings.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{EdgeInterval, Interval, Orientation, Point, Polyomino};
use crate::topology;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// An integer label for every vertex of a polyomino.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    values: BTreeMap<Point, i64>,
}

impl Labeling {
    pub fn zero(p: &Polyomino) -> Labeling {
        Labeling {
            values: p.vertices().iter().map(|&v| (v, 0)).collect(),
        }
    }

    /// Build from a total map; the keys must be exactly `V(p)`.
    pub fn from_values(p: &Polyomino, values: BTreeMap<Point, i64>) -> Result<Labeling> {
        let labeling = Labeling { values };
        labeling.check_domain(p)?;
        Ok(labeling)
    }

    /// Build from a partial map; absent vertices are labeled 0.
    pub fn from_sparse(
        p: &Polyomino,
        entries: impl IntoIterator<Item = (Point, i64)>,
    ) -> Result<Labeling> {
        let mut labeling = Labeling::zero(p);
        for (point, value) in entries {
            match labeling.values.get_mut(&point) {
                Some(slot) => *slot = value,
                None => return Err(Error::DomainMismatch(point)),
            }
        }
        Ok(labeling)
    }

    pub fn check_domain(&self, p: &Polyomino) -> Result<()> {
        if let Some(&v) = p.vertices().iter().find(|v| !self.values.contains_key(v)) {
            return Err(Error::DomainMismatch(v));
        }
        if let Some(&v) = self.values.keys().find(|v| !p.vertices().contains(v)) {
            return Err(Error::DomainMismatch(v));
        }
        Ok(())
    }

    pub fn get(&self, p: Point) -> i64 {
        self.values.get(&p).copied().unwrap_or(0)
    }

    pub fn values(&self) -> &BTreeMap<Point, i64> {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point, i64)> + '_ {
        self.values.iter().map(|(&p, &v)| (p, v))
    }

    /// Vertices with a nonzero label.
    pub fn support(&self) -> impl Iterator<Item = (Point, i64)> + '_ {
        self.iter().filter(|&(_, v)| v != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|&v| v == 0)
    }

    pub fn negated(&self) -> Labeling {
        Labeling {
            values: self.values.iter().map(|(&p, &v)| (p, -v)).collect(),
        }
    }

    /// Degree of the attached binomial: the sum of positive labels.
    pub fn degree(&self) -> u64 {
        self.values.values().filter(|&&v| v > 0).map(|&v| v as u64).sum()
    }
}

impl fmt::Debug for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.support()).finish()
    }
}

fn maximal_edge_intervals_both(p: &Polyomino) -> Vec<EdgeInterval> {
    let mut all = p.maximal_edge_intervals(Orientation::Horizontal);
    all.extend(p.maximal_edge_intervals(Orientation::Vertical));
    all
}

/// Maximal edge intervals whose label sum is nonzero, with that sum.
pub fn admissibility_violations(p: &Polyomino, alpha: &Labeling) -> Result<Vec<(EdgeInterval, i64)>> {
    alpha.check_domain(p)?;
    Ok(maximal_edge_intervals_both(p)
        .into_iter()
        .filter_map(|e| {
            let sum: i64 = e.points().map(|a| alpha.get(a)).sum();
            (sum != 0).then_some((e, sum))
        })
        .collect())
}

/// Every maximal horizontal and vertical edge interval sums to zero.
pub fn is_admissible(p: &Polyomino, alpha: &Labeling) -> Result<bool> {
    Ok(admissibility_violations(p, alpha)?.is_empty())
}

/// `-1` on the diagonal corners of `interval`, `+1` on the anti-diagonal
/// corners, zero elsewhere.
pub fn inner_interval_labeling(p: &Polyomino, interval: &Interval) -> Result<Labeling> {
    if !interval.is_proper() || !p.is_inner_interval(interval)? {
        return Err(Error::NotInnerInterval(*interval));
    }
    let mut labeling = Labeling::zero(p);
    for d in interval.diagonal_corners() {
        labeling.values.insert(d, -1);
    }
    for a in interval.anti_diagonal_corners() {
        labeling.values.insert(a, 1);
    }
    Ok(labeling)
}

/// Alternating `phase, -phase, ...` on the corners of the border polygon,
/// walked counterclockwise from its canonical start corner.
pub fn border_labeling(p: &Polyomino, phase: Sign) -> Result<Labeling> {
    let polygon = topology::border_polygon(p)?;
    let mut labeling = Labeling::zero(p);
    let mut sign = phase;
    for &corner in polygon.corners() {
        labeling.values.insert(corner, sign.value());
        sign = sign.flip();
    }
    Ok(labeling)
}

/// The border labeling (phase `+1`) of the first hole, extended by zero.
pub fn hole_witness_labeling(p: &Polyomino) -> Result<Labeling> {
    let hole = topology::holes(p).into_iter().next().ok_or(Error::IsSimple)?;
    let inner = border_labeling(&hole, Sign::Plus)?;
    Labeling::from_sparse(p, inner.support())
}

/// The ambient rectangle `[(1,1),(m,n)]` that exponent vectors live on.
/// A point `q` of the polyomino sits at `q - origin + (1,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Frame {
    pub origin: Point,
    pub m: u32,
    pub n: u32,
}

impl Frame {
    pub fn new(origin: Point, m: u32, n: u32) -> Frame {
        Frame { origin, m, n }
    }

    /// The smallest frame holding `V(p)`.
    pub fn of(p: &Polyomino) -> Frame {
        let b = p.bounding_interval();
        Frame {
            origin: b.lo,
            m: b.width() + 1,
            n: b.height() + 1,
        }
    }

    pub fn to_frame(&self, q: Point) -> Option<Point> {
        let i = i64::from(q.x) - i64::from(self.origin.x) + 1;
        let j = i64::from(q.y) - i64::from(self.origin.y) + 1;
        if (1..=i64::from(self.m)).contains(&i) && (1..=i64::from(self.n)).contains(&j) {
            Some(Point::new(i as u32, j as u32))
        } else {
            None
        }
    }

    pub fn from_frame(&self, q: Point) -> Point {
        Point::new(q.x + self.origin.x - 1, q.y + self.origin.y - 1)
    }
}

/// A nonnegative integer vector on the frame, stored sparsely.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    entries: BTreeMap<Point, u64>,
}

impl ExponentVector {
    pub fn from_entries(entries: impl IntoIterator<Item = (Point, u64)>) -> ExponentVector {
        ExponentVector {
            entries: entries.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }

    pub fn get(&self, p: Point) -> u64 {
        self.entries.get(&p).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<Point, u64> {
        &self.entries
    }

    pub fn degree(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(&self.entries).finish()
    }
}

/// `x^plus - x^minus`, as a pair of exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub plus: ExponentVector,
    pub minus: ExponentVector,
}

/// Split a labeling into its positive and negative parts on `frame`.
pub fn exponent_vectors(alpha: &Labeling, frame: &Frame) -> Result<(ExponentVector, ExponentVector)> {
    let mut plus = BTreeMap::new();
    let mut minus = BTreeMap::new();
    for (q, v) in alpha.iter() {
        let at = frame.to_frame(q).ok_or(Error::OutOfBounds(q))?;
        if v > 0 {
            plus.insert(at, v as u64);
        } else if v < 0 {
            minus.insert(at, v.unsigned_abs());
        }
    }
    Ok((
        ExponentVector { entries: plus },
        ExponentVector { entries: minus },
    ))
}

pub fn binomial(alpha: &Labeling, frame: &Frame) -> Result<Binomial> {
    let (plus, minus) = exponent_vectors(alpha, frame)?;
    Ok(Binomial { plus, minus })
}

/// Every nonzero admissible labeling with entries in `[-max_abs, max_abs]`,
/// in lexicographic order of the label vector (canonical vertex order).
///
/// Depth-first assignment; a branch is cut as soon as some edge interval's
/// partial sum can no longer be cancelled by its unassigned vertices.
pub fn enumerate_admissible(p: &Polyomino, max_abs: u32) -> Vec<Labeling> {
    let vertices: Vec<Point> = p.vertices().iter().copied().collect();
    let index: HashMap<Point, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let intervals = maximal_edge_intervals_both(p);

    // Each vertex lies on exactly one maximal interval per orientation.
    let mut membership = vec![[usize::MAX; 2]; vertices.len()];
    let mut remaining = vec![0i64; intervals.len()];
    for (k, e) in intervals.iter().enumerate() {
        let slot = match e.orientation {
            Orientation::Horizontal => 0,
            Orientation::Vertical => 1,
        };
        for q in e.points() {
            membership[index[&q]][slot] = k;
            remaining[k] += 1;
        }
    }
    debug_assert!(membership.iter().all(|m| m[0] != usize::MAX && m[1] != usize::MAX));

    let mut search = AdmissibleSearch {
        bound: i64::from(max_abs),
        membership,
        sums: vec![0; intervals.len()],
        remaining,
        current: vec![0; vertices.len()],
        found: Vec::new(),
    };
    search.descend(0);

    search
        .found
        .into_iter()
        .map(|values| Labeling {
            values: vertices.iter().copied().zip(values).collect(),
        })
        .collect()
}

struct AdmissibleSearch {
    bound: i64,
    membership: Vec<[usize; 2]>,
    sums: Vec<i64>,
    remaining: Vec<i64>,
    current: Vec<i64>,
    found: Vec<Vec<i64>>,
}

impl AdmissibleSearch {
    fn feasible(&self, k: usize) -> bool {
        self.sums[k].abs() <= self.remaining[k] * self.bound
    }

    fn descend(&mut self, i: usize) {
        if i == self.current.len() {
            if self.current.iter().any(|&v| v != 0) {
                self.found.push(self.current.clone());
            }
            return;
        }
        let [h, v] = self.membership[i];
        for value in -self.bound..=self.bound {
            self.current[i] = value;
            for k in [h, v] {
                self.sums[k] += value;
                self.remaining[k] -= 1;
            }
            if self.feasible(h) && self.feasible(v) {
                self.descend(i + 1);
            }
            for k in [h, v] {
                self.sums[k] -= value;
                self.remaining[k] += 1;
            }
        }
        self.current[i] = 0;
    }
}
