//! Reading and writing polyomino documents, and the command implementations
//! behind the `polyomino` binary.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};
use thiserror::Error;

use polyomino::enumerate::{enumerate_polyominoes_capped, DEFAULT_MAX_CELLS};
use polyomino::ideal::{
    cross_check_balanced, inner_minor_generators, is_balanced_certified, is_labeling_balanced,
    verify_witness, Agreement, BalanceOutcome, MoveVector, SearchConfig,
};
use polyomino::labeling::{
    admissibility_violations, border_labeling, ExponentVector, Frame, Labeling,
};
use polyomino::topology::{border_polygon, holes, is_simple};
use polyomino::{Cell, CornerKind, Interval, Orientation, Point, Polyomino, Sign};

pub const CAP_ENV: &str = "POLYOMINO_CAP";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Polyomino(#[from] polyomino::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Exit status of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Computed,
    False,
    Inconclusive,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Computed => 0,
            Status::False => 1,
            Status::Inconclusive => 3,
        }
    }
}

/// Exit code for input and usage errors.
pub const INPUT_ERROR: u8 = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub status: Status,
}

impl Report {
    fn new(text: String, json: Value, status: Status) -> Self {
        Report { text, json, status }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

/// Parse a grid (`#` present, `.` absent, first line is the top row) or a
/// JSON list of `[x, y]` anchors.
pub fn parse_polyomino(text: &str) -> CliResult<Polyomino> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(polyomino::Error::EmptyInput.into());
    }
    let anchors: Vec<(u32, u32)> = if trimmed.starts_with('[') {
        serde_json::from_str::<Vec<[u32; 2]>>(trimmed)
            .map_err(|e| CliError::Parse(e.to_string()))?
            .into_iter()
            .map(|[x, y]| (x, y))
            .collect()
    } else {
        let rows: Vec<&str> = trimmed.lines().map(str::trim_end).collect();
        let height = rows.len() as u32;
        let mut anchors = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            let y = height - 1 - r as u32;
            for (x, ch) in row.chars().enumerate() {
                match ch {
                    '#' => anchors.push((x as u32, y)),
                    '.' | ' ' => {}
                    other => {
                        return Err(CliError::Parse(format!(
                            "unexpected character {other:?} on line {}",
                            r + 1
                        )))
                    }
                }
            }
        }
        anchors
    };
    Ok(Polyomino::from_anchors(&anchors)?)
}

/// Grid text covering the bounding box of `p`, top row first.
pub fn render_grid(p: &Polyomino) -> String {
    let b = p.bounding_interval();
    let mut out = String::new();
    for y in (b.lo.y..b.hi.y).rev() {
        for x in b.lo.x..b.hi.x {
            out.push(if p.contains(Cell::new(x, y)) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

/// Read a labeling file: a JSON object from `"x,y"` to integers. Vertices
/// not mentioned are labeled 0.
pub fn parse_labeling(text: &str, p: &Polyomino) -> CliResult<Labeling> {
    let raw: BTreeMap<String, i64> =
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut entries = Vec::with_capacity(raw.len());
    for (key, value) in raw {
        let point = key
            .split_once(',')
            .and_then(|(x, y)| Some(Point::new(x.trim().parse().ok()?, y.trim().parse().ok()?)))
            .ok_or_else(|| CliError::Parse(format!("bad vertex key {key:?}")))?;
        entries.push((point, value));
    }
    Ok(Labeling::from_sparse(p, entries)?)
}

fn labeling_json(alpha: &Labeling) -> Value {
    Value::Object(
        alpha
            .support()
            .map(|(q, v)| (format!("{},{}", q.x, q.y), json!(v)))
            .collect(),
    )
}

/// The labeling file for `alpha`, listing only nonzero labels.
pub fn render_labeling(alpha: &Labeling) -> String {
    serde_json::to_string(&labeling_json(alpha)).expect("values serialize")
}

fn point_json(q: Point) -> Value {
    json!([q.x, q.y])
}

fn interval_json(iv: Interval) -> Value {
    json!([point_json(iv.lo), point_json(iv.hi)])
}

fn anchors_json(p: &Polyomino) -> Value {
    Value::Array(p.cells().iter().map(|c| point_json(c.anchor)).collect())
}

fn sign_str(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

fn move_json(m: &MoveVector) -> Value {
    json!({ "interval": interval_json(m.source), "sign": sign_str(m.sign) })
}

fn outcome_name(o: &BalanceOutcome) -> &'static str {
    match o {
        BalanceOutcome::Connected(_) => "connected",
        BalanceOutcome::Exhausted { .. } => "exhausted",
        BalanceOutcome::Capped { .. } => "capped",
    }
}

fn outcome_json(o: &BalanceOutcome) -> Value {
    match o {
        BalanceOutcome::Connected(w) => json!({
            "status": "connected",
            "moves": w.moves.iter().map(move_json).collect::<Vec<_>>(),
        }),
        BalanceOutcome::Exhausted { states } | BalanceOutcome::Capped { states } => {
            json!({ "status": outcome_name(o), "states": states })
        }
    }
}

fn exponents_json(e: &ExponentVector) -> Value {
    Value::Array(
        e.entries()
            .iter()
            .map(|(q, k)| json!([q.x, q.y, k]))
            .collect(),
    )
}

fn monomial(e: &ExponentVector) -> String {
    let factors: Vec<String> = e
        .entries()
        .iter()
        .map(|(q, &k)| {
            if k == 1 {
                format!("x{}_{}", q.x, q.y)
            } else {
                format!("x{}_{}^{k}", q.x, q.y)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

fn points_text(points: impl IntoIterator<Item = Point>) -> String {
    points
        .into_iter()
        .map(|q| q.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn validate(p: &Polyomino) -> Report {
    let text = format!("valid polyomino with {} cells\n{}", p.len(), render_grid(p));
    let json = json!({ "valid": true, "cells": p.len(), "anchors": anchors_json(p) });
    Report::new(text, json, Status::Computed)
}

pub fn simple(p: &Polyomino) -> Report {
    let s = is_simple(p);
    let status = if s { Status::Computed } else { Status::False };
    Report::new(format!("{s}\n"), json!({ "simple": s }), status)
}

pub fn holes_report(p: &Polyomino) -> Report {
    let hs = holes(p);
    let mut text = format!("{} hole(s)\n", hs.len());
    for h in &hs {
        let _ = writeln!(text, "{}", points_text(h.cells().iter().map(|c| c.anchor)));
    }
    let json = json!({ "holes": hs.iter().map(anchors_json).collect::<Vec<_>>() });
    Report::new(text, json, Status::Computed)
}

pub fn border(p: &Polyomino) -> CliResult<Report> {
    let r = border_polygon(p)?;
    let corners = r.corners().to_vec();
    let text = format!("{}\n", points_text(corners.iter().copied()));
    let json = json!({ "corners": corners.into_iter().map(point_json).collect::<Vec<_>>() });
    Ok(Report::new(text, json, Status::Computed))
}

pub fn corners(p: &Polyomino) -> CliResult<Report> {
    let r = border_polygon(p)?;
    let info = r.classify_corners();
    let mut text = String::from("corner     kind     good\n");
    let mut rows = Vec::new();
    for c in &info {
        let kind = match c.kind {
            CornerKind::Convex => "convex",
            CornerKind::Concave => "concave",
        };
        let _ = writeln!(text, "{:<10} {kind:<8} {}", c.point.to_string(), c.good);
        rows.push(json!({ "point": point_json(c.point), "kind": kind, "good": c.good }));
    }
    let convex = info.iter().filter(|c| c.kind == CornerKind::Convex).count();
    let good = info.iter().filter(|c| c.good).count();
    let _ = writeln!(
        text,
        "convex {convex}, concave {}, good {good}",
        info.len() - convex
    );
    Ok(Report::new(text, json!({ "corners": rows }), Status::Computed))
}

pub fn labeling_check(p: &Polyomino, alpha: &Labeling) -> CliResult<Report> {
    let violations = admissibility_violations(p, alpha)?;
    let ok = violations.is_empty();
    let mut text = format!("{}\n", if ok { "admissible" } else { "not admissible" });
    let mut rows = Vec::new();
    for (e, sum) in &violations {
        let orientation = match e.orientation {
            Orientation::Horizontal => "horizontal",
            Orientation::Vertical => "vertical",
        };
        let _ = writeln!(text, "{orientation} {} sums to {sum}", e.interval);
        rows.push(json!({
            "interval": interval_json(e.interval),
            "orientation": orientation,
            "sum": sum,
        }));
    }
    let json = json!({ "admissible": ok, "violations": rows });
    let status = if ok { Status::Computed } else { Status::False };
    Ok(Report::new(text, json, status))
}

pub fn border_labeling_report(p: &Polyomino, phase: Sign) -> CliResult<Report> {
    let alpha = border_labeling(p, phase)?;
    let text = format!("{}\n", render_labeling(&alpha));
    Ok(Report::new(text, labeling_json(&alpha), Status::Computed))
}

/// Inner 2-minors as exponent pairs, in the 1-based frame of the bounding box.
pub fn generators(p: &Polyomino) -> Report {
    let gens = inner_minor_generators(p);
    let frame = Frame::of(p);
    let mut text = format!("{} inner minors in a {}x{} frame\n", gens.len(), frame.m, frame.n);
    let mut rows = Vec::new();
    for (iv, b) in &gens {
        let _ = writeln!(text, "{iv}  {} - {}", monomial(&b.plus), monomial(&b.minus));
        rows.push(json!({
            "interval": interval_json(*iv),
            "plus": exponents_json(&b.plus),
            "minus": exponents_json(&b.minus),
        }));
    }
    let json = json!({ "frame": [frame.m, frame.n], "generators": rows });
    Report::new(text, json, Status::Computed)
}

pub fn balanced(p: &Polyomino, config: &SearchConfig) -> Report {
    let verdict = is_balanced_certified(p, config);
    match &verdict.certificate {
        None => Report::new(
            "balanced\n".to_string(),
            json!({ "balanced": true, "certificate": null }),
            Status::Computed,
        ),
        Some(cert) => {
            let status = match cert.search {
                BalanceOutcome::Exhausted { .. } => Status::False,
                _ => Status::Inconclusive,
            };
            let text = format!(
                "not balanced\ncertificate labeling {}\nsearch {}\n",
                render_labeling(&cert.labeling),
                search_summary(&cert.search)
            );
            let json = json!({
                "balanced": false,
                "certificate": {
                    "labeling": labeling_json(&cert.labeling),
                    "search": outcome_json(&cert.search),
                },
            });
            Report::new(text, json, status)
        }
    }
}

fn search_summary(o: &BalanceOutcome) -> String {
    match o {
        BalanceOutcome::Connected(w) => format!("connected after {} moves", w.len()),
        BalanceOutcome::Exhausted { states } => format!("exhausted after {states} states"),
        BalanceOutcome::Capped { states } => format!("capped at {states} states"),
    }
}

pub fn decompose(p: &Polyomino, alpha: &Labeling, config: &SearchConfig) -> CliResult<Report> {
    let outcome = is_labeling_balanced(p, alpha, config)?;
    let (text, status) = match &outcome {
        BalanceOutcome::Connected(w) => {
            let mut text = format!("{} moves\n", w.len());
            for m in &w.moves {
                let _ = writeln!(text, "{} {}", sign_str(m.sign), m.source);
            }
            debug_assert!(verify_witness(p, alpha, w));
            (text, Status::Computed)
        }
        BalanceOutcome::Exhausted { .. } => ("NO WITNESS (exhausted)\n".to_string(), Status::False),
        BalanceOutcome::Capped { .. } => {
            ("INCONCLUSIVE (capped)\n".to_string(), Status::Inconclusive)
        }
    };
    Ok(Report::new(text, outcome_json(&outcome), status))
}

pub fn cross_check(p: &Polyomino, max_abs: u32, config: &SearchConfig) -> Report {
    let report = cross_check_balanced(p, max_abs, config);
    let mut text = String::new();
    let mut rows = Vec::new();
    for e in &report.entries {
        let _ = writeln!(text, "{} {}", render_labeling(&e.labeling), outcome_name(&e.outcome));
        rows.push(json!({
            "labeling": labeling_json(&e.labeling),
            "outcome": outcome_name(&e.outcome),
        }));
    }
    let (agreement, status) = match report.agreement() {
        Agreement::Agrees => ("agrees", Status::Computed),
        Agreement::Disagrees => ("disagrees", Status::False),
        Agreement::Inconclusive => ("inconclusive", Status::Inconclusive),
    };
    let _ = writeln!(
        text,
        "simple {}: {} labelings, {} connected, {} exhausted, {} capped; {agreement}",
        report.simple,
        report.entries.len(),
        report.connected(),
        report.exhausted(),
        report.capped()
    );
    let json = json!({
        "simple": report.simple,
        "entries": rows,
        "connected": report.connected(),
        "exhausted": report.exhausted(),
        "capped": report.capped(),
        "agreement": agreement,
    });
    Report::new(text, json, status)
}

/// Cap on enumeration size, from the environment when set.
pub fn enumeration_cap(env: Option<&str>) -> CliResult<usize> {
    match env {
        None => Ok(DEFAULT_MAX_CELLS),
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("{CAP_ENV} must be a nonnegative integer, got {s:?}"))),
    }
}

pub fn enumerate(n: usize, simple_only: bool, cap: usize) -> CliResult<Report> {
    let all: Vec<Polyomino> = enumerate_polyominoes_capped(n, cap)?
        .into_iter()
        .filter(|p| !simple_only || is_simple(p))
        .collect();
    let text = all
        .iter()
        .map(render_grid)
        .collect::<Vec<_>>()
        .join("\n");
    let json = json!({ "n": n, "polyominoes": all.iter().map(anchors_json).collect::<Vec<_>>() });
    Ok(Report::new(text, json, Status::Computed))
}
