//! Finite paths in the Euler graph and their exhaustive enumeration.
//!
//! A path is a start vertex plus steps; each step names a direction and the
//! 1-based index of the edge inside that parallel bundle. The text form is
//! `(p,q):H1,V2,H3`.

use std::fmt;
use std::str::FromStr;

use crate::budget::Budget;
use crate::eulerian::{closed_form, Count, Offset, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Horizontal,
    Vertical,
}

impl Direction {
    pub fn letter(self) -> char {
        match self {
            Direction::Horizontal => 'H',
            Direction::Vertical => 'V',
        }
    }
}

/// Number of parallel edges leaving `v` in direction `d`.
pub fn multiplicity(v: Vertex, d: Direction) -> usize {
    match d {
        Direction::Horizontal => v.y + 1,
        Direction::Vertical => v.x + 1,
    }
}

/// Ordered by direction first (`H < V`), then by edge index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub direction: Direction,
    pub edge_index: usize,
}

impl Step {
    pub const fn new(direction: Direction, edge_index: usize) -> Self {
        Step {
            direction,
            edge_index,
        }
    }

    pub const fn h(edge_index: usize) -> Self {
        Step::new(Direction::Horizontal, edge_index)
    }

    pub const fn v(edge_index: usize) -> Self {
        Step::new(Direction::Vertical, edge_index)
    }

    /// Vertex reached by taking this step from `from`.
    pub fn target(self, from: Vertex) -> Vertex {
        match self.direction {
            Direction::Horizontal => Vertex::new(from.x + 1, from.y),
            Direction::Vertical => Vertex::new(from.x, from.y + 1),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.direction.letter(), self.edge_index)
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let direction = match chars.next() {
            Some('H') => Direction::Horizontal,
            Some('V') => Direction::Vertical,
            _ => return Err(Error::parse(format!("step {s:?} must start with H or V"))),
        };
        let edge_index = parse_positive(chars.as_str())
            .ok_or_else(|| Error::parse(format!("step {s:?} needs a positive edge index")))?;
        Ok(Step::new(direction, edge_index))
    }
}

/// Canonical decimal only: no sign, no leading zeros.
fn parse_positive(s: &str) -> Option<usize> {
    if s.is_empty() || s.starts_with('0') || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_natural(s: &str) -> Option<usize> {
    if s == "0" {
        Some(0)
    } else {
        parse_positive(s)
    }
}

/// Parses `(x,y)`.
pub fn parse_vertex(s: &str) -> Result<Vertex> {
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::parse(format!("vertex {s:?} must look like (x,y)")))?;
    let (x, y) = inner
        .split_once(',')
        .ok_or_else(|| Error::parse(format!("vertex {s:?} must look like (x,y)")))?;
    match (parse_natural(x), parse_natural(y)) {
        (Some(x), Some(y)) => Ok(Vertex::new(x, y)),
        _ => Err(Error::parse(format!("vertex {s:?} has a bad coordinate"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EulerPath {
    pub start: Vertex,
    pub steps: Vec<Step>,
}

impl EulerPath {
    pub fn new(start: Vertex, steps: Vec<Step>) -> Self {
        EulerPath { start, steps }
    }

    pub fn empty(start: Vertex) -> Self {
        EulerPath::new(start, Vec::new())
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Checks every edge index against the bundle size at the vertex the
    /// step leaves from, and returns the end vertex.
    pub fn validate(&self) -> Result<Vertex> {
        let mut at = self.start;
        for (k, step) in self.steps.iter().enumerate() {
            let mult = multiplicity(at, step.direction);
            if step.edge_index == 0 || step.edge_index > mult {
                return Err(Error::InvalidStep {
                    step: k + 1,
                    reason: format!(
                        "{step} at {at}: the {} bundle has {mult} edge(s)",
                        step.direction.letter()
                    ),
                });
            }
            at = step.target(at);
        }
        Ok(at)
    }

    /// End vertex from step directions alone, without validating indices.
    pub fn end(&self) -> Vertex {
        self.steps.iter().fold(self.start, |at, s| s.target(at))
    }

    /// Vertices visited, `x_0 = start` through `x_r = end`.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut at = self.start;
        out.push(at);
        for s in &self.steps {
            at = s.target(at);
            out.push(at);
        }
        out
    }
}

impl fmt::Display for EulerPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.start)?;
        for (k, step) in self.steps.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{step}")?;
        }
        Ok(())
    }
}

impl FromStr for EulerPath {
    type Err = Error;

    /// Parses the syntax only; call [`EulerPath::validate`] to check edges.
    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("path {s:?} is missing ':'")))?;
        let start = parse_vertex(head)?;
        let steps = if tail.is_empty() {
            Vec::new()
        } else {
            tail.split(',').map(Step::from_str).collect::<Result<_>>()?
        };
        Ok(EulerPath { start, steps })
    }
}

/// Depth-first walk over every path from `base` to `base + off`, in
/// lexicographic order of step sequences. `visit` sees the step slice of
/// each complete path; nothing is allocated per path.
pub fn walk_paths<F: FnMut(&[Step])>(base: Vertex, off: Offset, mut visit: F) {
    fn rec<F: FnMut(&[Step])>(
        at: Vertex,
        rem_i: usize,
        rem_j: usize,
        steps: &mut Vec<Step>,
        visit: &mut F,
    ) {
        if rem_i == 0 && rem_j == 0 {
            visit(steps);
            return;
        }
        if rem_i > 0 {
            let next = Vertex::new(at.x + 1, at.y);
            for idx in 1..=multiplicity(at, Direction::Horizontal) {
                steps.push(Step::h(idx));
                rec(next, rem_i - 1, rem_j, steps, visit);
                steps.pop();
            }
        }
        if rem_j > 0 {
            let next = Vertex::new(at.x, at.y + 1);
            for idx in 1..=multiplicity(at, Direction::Vertical) {
                steps.push(Step::v(idx));
                rec(next, rem_i, rem_j - 1, steps, visit);
                steps.pop();
            }
        }
    }
    let mut steps = Vec::with_capacity(off.len());
    rec(base, off.di, off.dj, &mut steps, &mut visit);
}

/// Every path from `base` to `base + off`, in lexicographic order
/// (`H` before `V`, ascending edge index).
pub fn enumerate_paths(base: Vertex, off: Offset) -> Result<Vec<EulerPath>> {
    enumerate_paths_with(base, off, &Budget::default())
}

pub fn enumerate_paths_with(base: Vertex, off: Offset, budget: &Budget) -> Result<Vec<EulerPath>> {
    let expected = closed_form(base, off);
    budget.check_enum(&expected)?;
    let mut out = Vec::new();
    walk_paths(base, off, |steps| out.push(EulerPath::new(base, steps.to_vec())));
    Ok(out)
}

/// `A_{p,q}(i,j)` by visiting every path.
pub fn count_paths_enumeration(base: Vertex, off: Offset) -> Result<Count> {
    count_paths_enumeration_with(base, off, &Budget::default())
}

pub fn count_paths_enumeration_with(base: Vertex, off: Offset, budget: &Budget) -> Result<Count> {
    budget.check_enum(&closed_form(base, off))?;
    let mut n: u64 = 0;
    walk_paths(base, off, |_| n += 1);
    Ok(Count::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicity_rule() {
        assert_eq!(multiplicity(Vertex::ROOT, Direction::Horizontal), 1);
        assert_eq!(multiplicity(Vertex::ROOT, Direction::Vertical), 1);
        assert_eq!(multiplicity(Vertex::new(3, 2), Direction::Horizontal), 3);
        assert_eq!(multiplicity(Vertex::new(3, 2), Direction::Vertical), 4);
    }

    #[test]
    fn validate_examples() {
        let p = EulerPath::new(Vertex::ROOT, vec![Step::h(1), Step::v(2)]);
        assert_eq!(p.validate().unwrap(), Vertex::new(1, 1));
        assert_eq!(EulerPath::empty(Vertex::ROOT).validate().unwrap(), Vertex::ROOT);
        let bad = EulerPath::new(Vertex::ROOT, vec![Step::v(2)]);
        assert!(matches!(bad.validate(), Err(Error::InvalidStep { step: 1, .. })));
        let zero = EulerPath::new(Vertex::ROOT, vec![Step::h(1), Step::h(0)]);
        assert!(matches!(zero.validate(), Err(Error::InvalidStep { step: 2, .. })));
    }

    #[test]
    fn text_format() {
        let p = EulerPath::new(Vertex::new(2, 1), vec![Step::h(1), Step::v(2), Step::h(3)]);
        assert_eq!(p.to_string(), "(2,1):H1,V2,H3");
        assert_eq!("(2,1):H1,V2,H3".parse::<EulerPath>().unwrap(), p);
        assert_eq!("(0,0):".parse::<EulerPath>().unwrap(), EulerPath::empty(Vertex::ROOT));
        for bad in ["(0,0)", "0,0:H1", "(0,0):H", "(0,0):X1", "(0,0):H01", "(0,0):H1,", "(0,-1):", "(00,1):"] {
            assert!(bad.parse::<EulerPath>().is_err(), "{bad}");
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_paths(Vertex::ROOT, Offset::new(1, 1)).unwrap().len(), 4);
        for (p, q) in [(0, 0), (1, 2), (3, 1)] {
            let n = enumerate_paths(Vertex::new(p, q), Offset::new(3, 0)).unwrap().len();
            assert_eq!(n, (q + 1).pow(3));
        }
        let base = Vertex::new(1, 1);
        let all = enumerate_paths(base, Offset::new(2, 2)).unwrap();
        assert_eq!(Count::from(all.len()), closed_form(base, Offset::new(2, 2)));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_paths_enumeration(Vertex::ROOT, Offset::new(2, 2)).unwrap(), Count::from(66u32));
        assert_eq!(count_paths_enumeration(Vertex::ROOT, Offset::ZERO).unwrap(), Count::from(1u32));
        let base = Vertex::new(2, 1);
        let off = Offset::new(3, 2);
        assert_eq!(count_paths_enumeration(base, off).unwrap(), closed_form(base, off));
    }

    #[test]
    fn enumeration_is_strictly_increasing_and_valid() {
        let base = Vertex::new(1, 0);
        let off = Offset::new(2, 3);
        let all = enumerate_paths(base, off).unwrap();
        for w in all.windows(2) {
            assert!(w[0].steps < w[1].steps);
        }
        for p in &all {
            assert_eq!(p.validate().unwrap(), base + off);
        }
    }

    #[test]
    fn enumeration_budget() {
        let tight = Budget::default().with_max_enum(65);
        assert!(matches!(
            enumerate_paths_with(Vertex::ROOT, Offset::new(2, 2), &tight),
            Err(Error::Resource { .. })
        ));
        assert!(count_paths_enumeration_with(Vertex::ROOT, Offset::new(2, 2), &tight.with_max_enum(66)).is_ok());
    }

    #[test]
    fn level_sums_are_factorials() {
        let mut fact: u64 = 1;
        for n in 0..=8usize {
            fact *= n as u64 + 1;
            let total: Count = (0..=n)
                .map(|i| count_paths_enumeration(Vertex::ROOT, Offset::new(i, n - i)).unwrap())
                .sum();
            assert_eq!(total, Count::from(fact), "level {n}");
        }
    }
}
