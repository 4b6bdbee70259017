//! Exit-gate checks. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use polyomino::enumerate::enumerate_polyominoes;
use polyomino::ideal::{
    inner_minor_generators, is_labeling_balanced, verify_witness, BalanceOutcome, IntGrid,
    MoveVector, SearchConfig,
};
use polyomino::labeling::{
    binomial, border_labeling, enumerate_admissible, hole_witness_labeling, inner_interval_labeling,
    is_admissible, Frame,
};
use polyomino::topology::{border_edges, border_polygon, holes, is_simple, maximal_border_edge_intervals};
use polyomino::{Cell, CornerKind, Point, Polyomino, RectilinearPolygon, Sign};

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn polyominoes_up_to(n: usize) -> Vec<Polyomino> {
    (1..=n).flat_map(|k| enumerate_polyominoes(k).unwrap()).collect()
}

fn simple_up_to(n: usize) -> Vec<Polyomino> {
    polyominoes_up_to(n).into_iter().filter(is_simple).collect()
}

fn reference_shapes() -> Outcome {
    let limit = Duration::from_millis(1);

    let one_hole = common::one_hole();
    let t = Instant::now();
    let h1 = holes(&one_hole);
    let simple1 = h1.is_empty();
    let e1 = t.elapsed();

    let zigzag = common::zigzag();
    let t = Instant::now();
    let simple2 = is_simple(&zigzag);
    let e2 = t.elapsed();

    let one_cell_hole = h1.len() == 1
        && h1[0].cells().iter().copied().collect::<Vec<_>>() == vec![Cell::new(2, 1)];
    let detail = format!("one_hole holes={:?} ({e1:?}), zigzag simple={simple2} ({e2:?})", h1);
    if !simple1 && one_cell_hole && simple2 && e1 < limit && e2 < limit {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// Polygon invariants checked without going through the polygon type's own
/// validation: lattice walk of the edges visits no point twice.
fn polygon_violation(r: &RectilinearPolygon) -> Option<&'static str> {
    let c = r.corners();
    let k = c.len();
    if k < 4 || k % 2 == 1 {
        return Some("odd or short corner cycle");
    }
    let mut area = 0i64;
    let mut visited: BTreeSet<Point> = BTreeSet::new();
    for i in 0..k {
        let (a, b, n) = (c[i], c[(i + 1) % k], c[(i + 2) % k]);
        if (a.x == b.x) == (a.y == b.y) {
            return Some("step not axis-parallel");
        }
        if (a.x == b.x) == (b.x == n.x) {
            return Some("edges do not alternate");
        }
        area += i64::from(a.x) * i64::from(b.y) - i64::from(b.x) * i64::from(a.y);
        let (dx, dy) = ((b.x as i64 - a.x as i64).signum(), (b.y as i64 - a.y as i64).signum());
        let mut q = a;
        while q != b {
            if !visited.insert(q) {
                return Some("self-intersection");
            }
            q = q.offset(dx, dy).unwrap();
        }
    }
    if area <= 0 {
        return Some("not counterclockwise");
    }
    None
}

fn unit_edges_of(r: &RectilinearPolygon) -> BTreeSet<(Point, Point)> {
    let c = r.corners();
    let k = c.len();
    let mut out = BTreeSet::new();
    for i in 0..k {
        let (a, b) = (c[i], c[(i + 1) % k]);
        let (dx, dy) = ((b.x as i64 - a.x as i64).signum(), (b.y as i64 - a.y as i64).signum());
        let mut q = a;
        while q != b {
            let next = q.offset(dx, dy).unwrap();
            out.insert((q.min(next), q.max(next)));
            q = next;
        }
    }
    out
}

fn border_structure(simple: &[Polyomino]) -> Outcome {
    let t = Instant::now();
    let mut violations = Vec::new();
    for p in simple {
        // (a) border polygon
        match border_polygon(p) {
            Ok(r) => {
                if let Some(why) = polygon_violation(&r) {
                    violations.push(format!("{p:?}: {why}"));
                }
                let borders: BTreeSet<(Point, Point)> =
                    border_edges(p).into_iter().map(|e| (e.a, e.b)).collect();
                if unit_edges_of(&r) != borders {
                    violations.push(format!("{p:?}: polygon is not the whole border"));
                }
            }
            Err(e) => violations.push(format!("{p:?}: {e}")),
        }
        // (b) no vertex shared by exactly two diagonally touching cells
        for &v in p.vertices() {
            let around: Vec<Cell> = [(-1i64, -1i64), (0, -1), (-1, 0), (0, 0)]
                .iter()
                .filter_map(|&(dx, dy)| v.offset(dx, dy).map(|a| Cell { anchor: a }))
                .filter(|c| p.contains(*c))
                .collect();
            if around.len() == 2 {
                let (a, b) = (around[0].anchor, around[1].anchor);
                if a.x != b.x && a.y != b.y {
                    violations.push(format!("{p:?}: diagonal touch at {v}"));
                }
            }
        }
        // (c) border intervals meet only in common endpoints, at most two per point
        let intervals = maximal_border_edge_intervals(p);
        let mut incidence: HashMap<Point, usize> = HashMap::new();
        for e in &intervals {
            for q in e.points() {
                *incidence.entry(q).or_default() += 1;
            }
        }
        for (i, a) in intervals.iter().enumerate() {
            for b in &intervals[i + 1..] {
                let shared: Vec<Point> = a.points().filter(|&q| b.contains(q)).collect();
                if shared.is_empty() {
                    continue;
                }
                let ok = shared.len() == 1
                    && a.endpoints().contains(&shared[0])
                    && b.endpoints().contains(&shared[0]);
                if !ok {
                    violations.push(format!("{p:?}: {a:?} meets {b:?} at {shared:?}"));
                }
            }
        }
        if let Some((q, n)) = incidence.iter().find(|(_, &n)| n > 2) {
            violations.push(format!("{p:?}: {n} border intervals at {q}"));
        }
    }
    let elapsed = t.elapsed();
    let detail = format!(
        "{} simple polyominoes, {} violations, {elapsed:?}",
        simple.len(),
        violations.len()
    );
    if violations.is_empty() && elapsed < Duration::from_secs(10) {
        pass(detail)
    } else {
        fail(format!("{detail}; first: {:?}", violations.first()))
    }
}

fn corner_geometry(simple: &[Polyomino]) -> Outcome {
    let mut bad = Vec::new();
    let mut min_good = usize::MAX;
    for p in simple {
        let r = border_polygon(p).unwrap();
        let info = r.classify_corners();
        let convex = info.iter().filter(|c| c.kind == CornerKind::Convex).count();
        let concave = info.len() - convex;
        let good = r.good_corners().len();
        min_good = min_good.min(good);
        if convex != concave + 4 || good < 4 {
            bad.push(format!("{p:?}: convex={convex} concave={concave} good={good}"));
        }
    }
    let detail = format!("{} polygons, min good corners {min_good}", simple.len());
    if bad.is_empty() {
        pass(detail)
    } else {
        fail(format!("{detail}; {:?}", bad.first()))
    }
}

fn border_labelings(simple: &[Polyomino]) -> Outcome {
    let mut bad = 0;
    for p in simple {
        for phase in [Sign::Plus, Sign::Minus] {
            let alpha = border_labeling(p, phase).unwrap();
            if is_admissible(p, &alpha) != Ok(true) {
                bad += 1;
            }
        }
    }
    let detail = format!("{} labelings, {bad} not admissible", 2 * simple.len());
    if bad == 0 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn forward_direction() -> Outcome {
    let t = Instant::now();
    let config = SearchConfig::default();
    let (mut labelings, mut failures, mut capped) = (0usize, Vec::new(), 0usize);
    for p in simple_up_to(5) {
        for alpha in enumerate_admissible(&p, 1) {
            labelings += 1;
            match is_labeling_balanced(&p, &alpha, &config) {
                Ok(BalanceOutcome::Connected(w)) if verify_witness(&p, &alpha, &w) => {}
                Ok(BalanceOutcome::Capped { .. }) => capped += 1,
                other => failures.push(format!("{p:?} {alpha:?}: {other:?}")),
            }
        }
    }
    let elapsed = t.elapsed();
    let detail = format!(
        "{labelings} labelings, {} failures, {capped} capped, {elapsed:?}",
        failures.len()
    );
    if failures.is_empty() && capped == 0 && elapsed < Duration::from_secs(60) {
        pass(detail)
    } else {
        fail(format!("{detail}; first: {:?}", failures.first()))
    }
}

fn converse_direction() -> Outcome {
    let t = Instant::now();
    let config = SearchConfig::default();
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut capped = 0;
    for p in polyominoes_up_to(8).into_iter().filter(|p| !is_simple(p)) {
        checked += 1;
        let beta = hole_witness_labeling(&p).unwrap();
        if is_admissible(&p, &beta) != Ok(true) {
            bad.push(format!("{p:?}: hole labeling not admissible"));
            continue;
        }
        match is_labeling_balanced(&p, &beta, &config) {
            Ok(BalanceOutcome::Exhausted { .. }) => {}
            Ok(BalanceOutcome::Capped { .. }) => capped += 1,
            other => bad.push(format!("{p:?}: {other:?}")),
        }
    }
    let elapsed = t.elapsed();
    let detail = format!(
        "{checked} polyominoes with holes, {} failures, {capped} capped, {elapsed:?}",
        bad.len()
    );
    if checked > 0 && bad.is_empty() && capped == 0 && elapsed < Duration::from_secs(120) {
        pass(detail)
    } else {
        fail(format!("{detail}; first: {:?}", bad.first()))
    }
}

fn algebra_identities() -> Outcome {
    let mut intervals = 0;
    let mut bad = Vec::new();
    for p in polyominoes_up_to(5) {
        let frame = Frame::of(&p);
        let generators: BTreeMap<_, _> = inner_minor_generators(&p).into_iter().collect();
        for iv in p.inner_intervals() {
            intervals += 1;
            let whole = MoveVector::new(iv, Sign::Plus).to_grid(&frame).unwrap();
            let mut sum = IntGrid::zeros(frame.m, frame.n);
            for c in iv.cells() {
                sum = &sum + &MoveVector::new(c.interval(), Sign::Plus).to_grid(&frame).unwrap();
            }
            if whole != sum {
                bad.push(format!("{p:?} {iv:?}: telescoping"));
            }
            let alpha = inner_interval_labeling(&p, &iv).unwrap();
            if binomial(&alpha, &frame).ok().as_ref() != generators.get(&iv) {
                bad.push(format!("{p:?} {iv:?}: binomial"));
            }
        }
    }
    let detail = format!("{intervals} inner intervals, {} mismatches", bad.len());
    if bad.is_empty() {
        pass(detail)
    } else {
        fail(format!("{detail}; {:?}", bad.first()))
    }
}

fn enumeration_oracle() -> Outcome {
    let ours: Vec<usize> = (1..=4).map(|n| enumerate_polyominoes(n).unwrap().len()).collect();
    let oracle: Vec<usize> = (1..=4).map(common::subset_oracle_count).collect();
    let detail = format!("enumerated {ours:?}, oracle {oracle:?}");
    if ours == [1, 2, 6, 19] && oracle == ours {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn main() -> ExitCode {
    let simple6 = simple_up_to(6);
    let criteria: Vec<Criterion> = vec![
        ("AC1 hole detection", Box::new(reference_shapes)),
        ("AC2 border polygon structure (n<=6)", Box::new(|| border_structure(&simple6))),
        ("AC3 corner geometry (n<=6)", Box::new(|| corner_geometry(&simple6))),
        ("AC4 border labelings admissible (n<=6)", Box::new(|| border_labelings(&simple6))),
        ("AC5 simple => balanced (n<=5, |label|<=1)", Box::new(forward_direction)),
        ("AC6 hole => not balanced (n<=8)", Box::new(converse_direction)),
        ("AC7 algebra identities (n<=5)", Box::new(algebra_identities)),
        ("AC8 enumeration oracle (n<=4)", Box::new(enumeration_oracle)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let outcome = check();
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {name}: {}", outcome.detail);
        if !outcome.ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
