//! The adic (Vershik) transformation on finite root paths.
//!
//! Edges entering a vertex are totally ordered: first the bundle from the
//! horizontal parent `(x-1, y)`, then the bundle from the vertical parent
//! `(x, y-1)`, each by ascending edge index. Two paths to the same vertex
//! compare by the last edge where they differ, and the successor of a path
//! is the smallest path above it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::budget::Budget;
use crate::eulerian::{dim, Vertex};
use crate::error::{Error, Result};
use crate::path::{multiplicity, Direction, EulerPath, Step};
use crate::ratio::{inverse_factorial, normalized_dim_ratio, Ratio};

/// One edge entering a vertex: the parent it leaves and its index within
/// that parent's bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IncomingEdge {
    pub parent: Vertex,
    pub direction: Direction,
    pub edge_index: usize,
}

impl IncomingEdge {
    pub fn step(&self) -> Step {
        Step::new(self.direction, self.edge_index)
    }
}

fn horizontal_in(v: Vertex) -> usize {
    if v.x > 0 {
        multiplicity(Vertex::new(v.x - 1, v.y), Direction::Horizontal)
    } else {
        0
    }
}

fn vertical_in(v: Vertex) -> usize {
    if v.y > 0 {
        multiplicity(Vertex::new(v.x, v.y - 1), Direction::Vertical)
    } else {
        0
    }
}

/// Number of edges entering `v`.
pub fn in_degree(v: Vertex) -> usize {
    horizontal_in(v) + vertical_in(v)
}

/// Edges entering `v`, in order.
pub fn incoming_order(v: Vertex) -> Result<Vec<IncomingEdge>> {
    if v == Vertex::ROOT {
        return Err(Error::domain("the root has no incoming edges"));
    }
    Ok((0..in_degree(v)).map(|r| incoming_at(v, r)).collect())
}

/// Position of `step`, taken into `v`, within `incoming_order(v)`.
pub fn incoming_rank(v: Vertex, step: Step) -> usize {
    match step.direction {
        Direction::Horizontal => step.edge_index - 1,
        Direction::Vertical => horizontal_in(v) + step.edge_index - 1,
    }
}

fn incoming_at(v: Vertex, rank: usize) -> IncomingEdge {
    let h = horizontal_in(v);
    if rank < h {
        IncomingEdge {
            parent: Vertex::new(v.x - 1, v.y),
            direction: Direction::Horizontal,
            edge_index: rank + 1,
        }
    } else {
        IncomingEdge {
            parent: Vertex::new(v.x, v.y - 1),
            direction: Direction::Vertical,
            edge_index: rank - h + 1,
        }
    }
}

fn parent(v: Vertex, step: Step) -> Vertex {
    match step.direction {
        Direction::Horizontal => Vertex::new(v.x - 1, v.y),
        Direction::Vertical => Vertex::new(v.x, v.y - 1),
    }
}

/// A path that starts at the root `(0,0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootPath(EulerPath);

impl RootPath {
    pub fn new(path: EulerPath) -> Result<Self> {
        if path.start != Vertex::ROOT {
            return Err(Error::domain(format!(
                "root paths start at (0,0), not {}",
                path.start
            )));
        }
        path.validate()?;
        Ok(RootPath(path))
    }

    pub fn as_path(&self) -> &EulerPath {
        &self.0
    }

    pub fn into_path(self) -> EulerPath {
        self.0
    }

    pub fn steps(&self) -> &[Step] {
        &self.0.steps
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn end(&self) -> Vertex {
        self.0.end()
    }

    /// The first `n` steps.
    pub fn prefix(&self, n: usize) -> RootPath {
        RootPath(EulerPath::new(Vertex::ROOT, self.0.steps[..n].to_vec()))
    }
}

impl fmt::Display for RootPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for RootPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RootPath::new(s.parse()?)
    }
}

/// Order of two paths to the same vertex, decided at the highest level where
/// their edges differ.
pub fn compare(a: &RootPath, b: &RootPath) -> Result<Ordering> {
    let end = a.end();
    if end != b.end() {
        return Err(Error::domain(format!(
            "paths end at {} and {}; only paths to one vertex are comparable",
            end,
            b.end()
        )));
    }
    let mut v = end;
    for (sa, sb) in a.steps().iter().zip(b.steps()).rev() {
        if sa != sb {
            return Ok(incoming_rank(v, *sa).cmp(&incoming_rank(v, *sb)));
        }
        v = parent(v, *sa);
    }
    Ok(Ordering::Equal)
}

fn extreme_path(v: Vertex, pick_last: bool) -> RootPath {
    let mut steps = Vec::with_capacity(v.level());
    let mut at = v;
    while at != Vertex::ROOT {
        let rank = if pick_last { in_degree(at) - 1 } else { 0 };
        let edge = incoming_at(at, rank);
        steps.push(edge.step());
        at = edge.parent;
    }
    steps.reverse();
    RootPath(EulerPath::new(Vertex::ROOT, steps))
}

/// Least path to `v`: the first incoming edge at every level.
pub fn minimal_path(v: Vertex) -> RootPath {
    extreme_path(v, false)
}

/// Greatest path to `v`: the last incoming edge at every level.
pub fn maximal_path(v: Vertex) -> RootPath {
    extreme_path(v, true)
}

/// The smallest path to the same vertex that is larger than `x`.
///
/// Finds the lowest level whose entering edge is not the last one in its
/// vertex's order, advances that edge, and resets everything below it to the
/// minimal path into the new edge's parent.
pub fn successor(x: &RootPath) -> Result<RootPath> {
    let vertices = x.as_path().vertices();
    for (m, (&v, &step)) in vertices[1..].iter().zip(x.steps()).enumerate() {
        let rank = incoming_rank(v, step);
        if rank + 1 < in_degree(v) {
            let edge = incoming_at(v, rank + 1);
            let mut steps = minimal_path(edge.parent).0.steps;
            steps.push(edge.step());
            steps.extend_from_slice(&x.steps()[m + 1..]);
            return Ok(RootPath(EulerPath::new(Vertex::ROOT, steps)));
        }
    }
    Err(Error::MaximalPath)
}

/// Every path to `v`, from minimal to maximal, by iterating [`successor`].
pub fn orbit(v: Vertex) -> Result<Vec<RootPath>> {
    orbit_with(v, &Budget::default())
}

pub fn orbit_with(v: Vertex, budget: &Budget) -> Result<Vec<RootPath>> {
    budget.check_enum(&dim(Vertex::ROOT, v))?;
    let mut out = vec![minimal_path(v)];
    loop {
        match successor(out.last().unwrap()) {
            Ok(next) => out.push(next),
            Err(Error::MaximalPath) => return Ok(out),
            Err(e) => return Err(e),
        }
    }
}

/// The measure giving every cylinder of length `n` mass `1/(n+1)!`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SymmetricMeasure;

impl SymmetricMeasure {
    pub fn cylinder(&self, prefix: &RootPath) -> Ratio {
        cylinder_measure(prefix.len())
    }
}

/// `1/(n+1)!`.
pub fn cylinder_measure(n: usize) -> Ratio {
    inverse_factorial(n + 1)
}

/// Fraction of root paths to `v` that begin with `prefix`; depends only on
/// the prefix's end vertex.
pub fn cylinder_frequency(prefix: &RootPath, v: Vertex) -> Ratio {
    normalized_dim_ratio(prefix.end(), v)
}
