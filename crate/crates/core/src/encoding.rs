//! Encoding sequences and the transport of good paths between base points
//! of the same level.
//!
//! While walking a path, an exiting edge is *marked* if it still carries a
//! label that the path has not consumed yet. Each step is recorded as
//! `s_a` when it traverses the marked edge with label `s_a`, and otherwise
//! as `h_a` / `v_a` when it is the `a`-th unmarked horizontal / vertical edge
//! (in ascending edge-index order). Two bases at the same level see the same
//! counts of marked and unmarked edges after equal code prefixes, so a code
//! from one base decodes to a path from the other.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::eulerian::Vertex;
use crate::good::{LabelScheme, LabelSet};
use crate::path::{multiplicity, Direction, EulerPath, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolKind {
    S,
    H,
    V,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EncodingSymbol {
    pub kind: SymbolKind,
    pub index: usize,
}

impl EncodingSymbol {
    pub const fn s(index: usize) -> Self {
        EncodingSymbol {
            kind: SymbolKind::S,
            index,
        }
    }

    pub const fn h(index: usize) -> Self {
        EncodingSymbol {
            kind: SymbolKind::H,
            index,
        }
    }

    pub const fn v(index: usize) -> Self {
        EncodingSymbol {
            kind: SymbolKind::V,
            index,
        }
    }
}

impl fmt::Display for EncodingSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            SymbolKind::S => 's',
            SymbolKind::H => 'h',
            SymbolKind::V => 'v',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for EncodingSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('s') => SymbolKind::S,
            Some('h') => SymbolKind::H,
            Some('v') => SymbolKind::V,
            _ => return Err(Error::parse(format!("symbol {s:?} must start with s, h or v"))),
        };
        let digits = chars.as_str();
        if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(format!("symbol {s:?} needs a positive index")));
        }
        let index = digits
            .parse()
            .map_err(|_| Error::parse(format!("symbol {s:?} index out of range")))?;
        Ok(EncodingSymbol { kind, index })
    }
}

/// A code together with the level of the base it was taken from.
/// Text form: `n=<level>;s1,v1,h2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EncodingSequence {
    pub base_level: usize,
    pub symbols: Vec<EncodingSymbol>,
}

impl fmt::Display for EncodingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.base_level)?;
        for (k, sym) in self.symbols.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{sym}")?;
        }
        Ok(())
    }
}

impl FromStr for EncodingSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rest = s
            .strip_prefix("n=")
            .ok_or_else(|| Error::parse(format!("code {s:?} must start with n=")))?;
        let (level, body) = rest
            .split_once(';')
            .ok_or_else(|| Error::parse(format!("code {s:?} is missing ';'")))?;
        if level.is_empty()
            || (level.len() > 1 && level.starts_with('0'))
            || !level.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(Error::parse(format!("code {s:?} has a bad level")));
        }
        let base_level = level
            .parse()
            .map_err(|_| Error::parse(format!("code {s:?} has a bad level")))?;
        let symbols = if body.is_empty() {
            Vec::new()
        } else {
            body.split(',').map(EncodingSymbol::from_str).collect::<Result<_>>()?
        };
        Ok(EncodingSequence {
            base_level,
            symbols,
        })
    }
}

/// Marked/unmarked bookkeeping while walking from a base.
#[derive(Debug, Clone)]
struct Walker {
    scheme: LabelScheme,
    at: Vertex,
    consumed: LabelSet,
}

impl Walker {
    fn new(scheme: LabelScheme) -> Self {
        Walker {
            scheme,
            at: scheme.base,
            consumed: LabelSet::EMPTY,
        }
    }

    fn is_marked(&self, step: Step) -> Option<usize> {
        self.scheme
            .label_of(step)
            .filter(|&a| !self.consumed.contains(a))
    }

    fn labeled_in(&self, d: Direction) -> usize {
        match d {
            Direction::Horizontal => self.scheme.horizontal_labels(),
            Direction::Vertical => self.scheme.vertical_labels(),
        }
    }

    /// Marked edges in direction `d` with edge index below `idx`.
    fn marked_below(&self, d: Direction, idx: usize) -> usize {
        (1..idx.min(self.labeled_in(d) + 1))
            .filter(|&k| self.is_marked(Step::new(d, k)).is_some())
            .count()
    }

    fn unmarked(&self, d: Direction) -> usize {
        let mult = multiplicity(self.at, d);
        mult - self.marked_below(d, mult + 1)
    }

    fn symbol_for(&self, step: Step) -> EncodingSymbol {
        match self.is_marked(step) {
            Some(a) => EncodingSymbol::s(a),
            None => {
                let rank = step.edge_index - self.marked_below(step.direction, step.edge_index);
                match step.direction {
                    Direction::Horizontal => EncodingSymbol::h(rank),
                    Direction::Vertical => EncodingSymbol::v(rank),
                }
            }
        }
    }

    /// Edge matching `sym` at the current vertex.
    fn step_for(&self, sym: EncodingSymbol) -> std::result::Result<Step, String> {
        match sym.kind {
            SymbolKind::S => {
                let a = sym.index;
                if a == 0 || a > self.scheme.label_count() {
                    return Err(format!(
                        "label s{a} does not exist for a level-{} base",
                        self.scheme.base.level()
                    ));
                }
                if self.consumed.contains(a) {
                    return Err(format!("label s{a} was already consumed"));
                }
                let h = self.scheme.horizontal_labels();
                Ok(if a <= h { Step::h(a) } else { Step::v(a - h) })
            }
            SymbolKind::H | SymbolKind::V => {
                let d = if sym.kind == SymbolKind::H {
                    Direction::Horizontal
                } else {
                    Direction::Vertical
                };
                let wanted = sym.index;
                let mut seen = 0;
                for idx in 1..=multiplicity(self.at, d) {
                    let step = Step::new(d, idx);
                    if self.is_marked(step).is_none() {
                        seen += 1;
                        if seen == wanted {
                            return Ok(step);
                        }
                    }
                }
                Err(format!(
                    "only {seen} unmarked {} edge(s) leave {}",
                    d.letter(),
                    self.at
                ))
            }
        }
    }

    fn advance(&mut self, step: Step) {
        if let Some(a) = self.scheme.label_of(step) {
            self.consumed.insert(a);
        }
        self.at = step.target(self.at);
    }
}

/// The encoding sequence of `path` relative to `scheme`.
pub fn encode(scheme: &LabelScheme, path: &EulerPath) -> Result<EncodingSequence> {
    scheme.check_start(path)?;
    path.validate()?;
    let mut walker = Walker::new(*scheme);
    let symbols = path
        .steps
        .iter()
        .map(|&step| {
            let sym = walker.symbol_for(step);
            walker.advance(step);
            sym
        })
        .collect();
    Ok(EncodingSequence {
        base_level: scheme.base.level(),
        symbols,
    })
}

/// Numbers of unmarked horizontal and vertical edges leaving the vertex
/// reached after the first `m` steps.
pub fn unmarked_counts(scheme: &LabelScheme, path: &EulerPath, m: usize) -> Result<(usize, usize)> {
    scheme.check_start(path)?;
    path.validate()?;
    if m > path.len() {
        return Err(Error::domain(format!(
            "step index {m} exceeds path length {}",
            path.len()
        )));
    }
    let mut walker = Walker::new(*scheme);
    for &step in &path.steps[..m] {
        walker.advance(step);
    }
    Ok((
        walker.unmarked(Direction::Horizontal),
        walker.unmarked(Direction::Vertical),
    ))
}

/// The unique path from `scheme.base` whose code is `code`.
pub fn decode(scheme: &LabelScheme, code: &EncodingSequence) -> Result<EulerPath> {
    if code.base_level != scheme.base.level() {
        return Err(Error::domain(format!(
            "code was taken at level {} but base {} is at level {}",
            code.base_level,
            scheme.base,
            scheme.base.level()
        )));
    }
    scheme.check_width()?;
    let mut walker = Walker::new(*scheme);
    let mut steps = Vec::with_capacity(code.symbols.len());
    for (k, &sym) in code.symbols.iter().enumerate() {
        let step = walker.step_for(sym).map_err(|reason| Error::Decode {
            position: k + 1,
            symbol: sym.to_string(),
            reason,
        })?;
        walker.advance(step);
        steps.push(step);
    }
    Ok(EulerPath::new(scheme.base, steps))
}

/// Moves a good path from `from.base` to the good path from `to.base` with
/// the same code. Both bases must share a level `n`, and the path must end
/// at `(i,j)` with `i, j >= n + 2`.
pub fn transport(from: &LabelScheme, to: &LabelScheme, path: &EulerPath) -> Result<EulerPath> {
    let n = from.base.level();
    if to.base.level() != n {
        return Err(Error::domain(format!(
            "bases {} and {} are at different levels",
            from.base, to.base
        )));
    }
    let (good, _) = from.is_good(path)?;
    if !good {
        return Err(Error::domain(format!("{path} is not good for base {}", from.base)));
    }
    let end = path.end();
    if end.x < n + 2 || end.y < n + 2 {
        return Err(Error::domain(format!(
            "endpoint {end} needs both coordinates >= {}",
            n + 2
        )));
    }
    let moved = decode(to, &encode(from, path)?)?;
    if moved.end() != end {
        return Err(Error::domain(format!(
            "transported path ends at {} instead of {end}",
            moved.end()
        )));
    }
    Ok(moved)
}
