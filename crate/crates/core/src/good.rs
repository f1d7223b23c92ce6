//! Good paths relative to a base point.
//!
//! Fix a base `(p,q)`. At every vertex `(p+k, q+l)` the first `q+1`
//! horizontal edges carry labels `s_1..s_{q+1}` and the first `p+1` vertical
//! edges carry `s_{q+2}..s_{p+q+2}`. A path from the base is good when it
//! traverses an edge with each of the `p+q+2` labels.
//!
//! A label is consumed the first time an edge carrying it is traversed;
//! later edges with the same label behave as unlabeled. Goodness depends on
//! the history only through the consumed set, which is what makes the
//! dynamic program below possible.

use std::fmt;

use num_traits::Zero;

use crate::budget::Budget;
use crate::eulerian::{closed_form, Count, CountTable, Offset, Vertex};
use crate::error::{Error, Result};
use crate::path::{multiplicity, walk_paths, Direction, EulerPath, Step};
use crate::ratio::{ratio_of, Ratio};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LabelScheme {
    pub base: Vertex,
}

impl LabelScheme {
    pub const fn new(base: Vertex) -> Self {
        LabelScheme { base }
    }

    /// `p + q + 2`.
    pub fn label_count(&self) -> usize {
        self.base.x + self.base.y + 2
    }

    pub fn horizontal_labels(&self) -> usize {
        self.base.y + 1
    }

    pub fn vertical_labels(&self) -> usize {
        self.base.x + 1
    }

    /// Label (1-based) carried by a step, ignoring whether it is consumed.
    /// The caller guarantees the step exists.
    pub fn label_of(&self, step: Step) -> Option<usize> {
        match step.direction {
            Direction::Horizontal if step.edge_index <= self.horizontal_labels() => {
                Some(step.edge_index)
            }
            Direction::Vertical if step.edge_index <= self.vertical_labels() => {
                Some(self.horizontal_labels() + step.edge_index)
            }
            _ => None,
        }
    }

    /// Label of edge `idx` of the `d` bundle leaving `at`.
    pub fn edge_label(&self, at: Vertex, d: Direction, idx: usize) -> Result<Option<usize>> {
        if !self.base.reaches(at) {
            return Err(Error::domain(format!(
                "{at} is not reachable from base {}",
                self.base
            )));
        }
        let mult = multiplicity(at, d);
        if idx == 0 || idx > mult {
            return Err(Error::domain(format!(
                "edge {}{idx} does not exist at {at} ({mult} edge(s))",
                d.letter()
            )));
        }
        Ok(self.label_of(Step::new(d, idx)))
    }

    pub fn full_set(&self) -> LabelSet {
        LabelSet::full(self.label_count())
    }

    /// Walks `path`, consuming labels, and reports whether all were seen.
    pub fn is_good(&self, path: &EulerPath) -> Result<(bool, LabelSet)> {
        self.check_start(path)?;
        path.validate()?;
        let mut seen = LabelSet::EMPTY;
        for &step in &path.steps {
            if let Some(a) = self.label_of(step) {
                seen.insert(a);
            }
        }
        Ok((seen == self.full_set(), seen))
    }

    pub(crate) fn check_width(&self) -> Result<()> {
        if self.label_count() > LabelSet::CAPACITY {
            return Err(Error::Resource {
                what: "label set",
                needed: format!("{} labels", self.label_count()),
                limit: LabelSet::CAPACITY as u64,
            });
        }
        Ok(())
    }

    pub(crate) fn check_start(&self, path: &EulerPath) -> Result<()> {
        self.check_width()?;
        if path.start != self.base {
            return Err(Error::domain(format!(
                "path starts at {} but the scheme's base is {}",
                path.start, self.base
            )));
        }
        Ok(())
    }
}

/// Consumed labels as a bitmask; bit `a-1` stands for label `s_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelSet(pub u32);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);
    pub const CAPACITY: usize = 32;

    pub fn full(labels: usize) -> Self {
        assert!(labels <= 32, "at most 32 labels fit in a LabelSet");
        LabelSet(if labels == 32 { u32::MAX } else { (1u32 << labels) - 1 })
    }

    pub fn contains(self, label: usize) -> bool {
        self.0 & (1 << (label - 1)) != 0
    }

    /// Returns `true` if the label was not yet present.
    pub fn insert(&mut self, label: usize) -> bool {
        let fresh = !self.contains(label);
        self.0 |= 1 << (label - 1);
        fresh
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for a in 1..=32 {
            if self.contains(a) {
                if !first {
                    f.write_str(",")?;
                }
                write!(f, "s{a}")?;
                first = false;
            }
        }
        f.write_str("}")
    }
}

/// `G_{p,q}(i,j)` by filtering every path.
pub fn count_good_enumeration(base: Vertex, off: Offset) -> Result<Count> {
    count_good_enumeration_with(base, off, &Budget::default())
}

pub fn count_good_enumeration_with(base: Vertex, off: Offset, budget: &Budget) -> Result<Count> {
    budget.check_enum(&closed_form(base, off))?;
    let scheme = LabelScheme::new(base);
    let full = scheme.full_set();
    let mut good: u64 = 0;
    walk_paths(base, off, |steps| {
        let mut seen = LabelSet::EMPTY;
        for &s in steps {
            if let Some(a) = scheme.label_of(s) {
                seen.insert(a);
            }
        }
        if seen == full {
            good += 1;
        }
    });
    Ok(Count::from(good))
}

/// `G_{p,q}(i,j)` for the whole window `i <= imax`, `j <= jmax` by a dynamic
/// program over `(vertex, consumed labels)`.
///
/// From a vertex with consumed set `S`, a horizontal step either consumes
/// one of the unconsumed horizontal labels (one edge each) or takes one of
/// the remaining edges, leaving `S` unchanged; vertical steps likewise.
/// Levels are processed in order, each holding a dense array over
/// `(k, S)`.
pub fn good_count_table(base: Vertex, imax: usize, jmax: usize) -> Result<CountTable> {
    good_count_table_with(base, imax, jmax, &Budget::default())
}

pub fn good_count_table_with(
    base: Vertex,
    imax: usize,
    jmax: usize,
    budget: &Budget,
) -> Result<CountTable> {
    let scheme = LabelScheme::new(base);
    let labels = scheme.label_count();
    if labels as u32 > budget.max_label_bits.min(32) {
        return Err(Error::Resource {
            what: "good-path label bitmask",
            needed: format!("{labels} bits"),
            limit: u64::from(budget.max_label_bits),
        });
    }
    let states = 1usize << labels;
    budget.check_cells(
        "good-path state space",
        (imax as u128 + 1) * (jmax as u128 + 1) * states as u128,
    )?;

    let h_labels = scheme.horizontal_labels();
    let v_labels = scheme.vertical_labels();
    let h_mask = (1u32 << h_labels) - 1;
    let v_mask = ((1u32 << v_labels) - 1) << h_labels;
    let full = scheme.full_set().0 as usize;

    let width = jmax + 1;
    let mut result = vec![Count::zero(); (imax + 1) * width];

    // level[k - k_lo][S] holds the number of paths to (k, d - k) with
    // consumed set S.
    let mut k_lo = 0usize;
    let mut level: Vec<Vec<Count>> = vec![vec![Count::zero(); states]];
    level[0][0] = Count::from(1u32);

    for d in 0..=(imax + jmax) {
        let k_hi = k_lo + level.len() - 1;
        for (slot, cell) in level.iter().enumerate() {
            let k = k_lo + slot;
            result[k * width + (d - k)] = cell[full].clone();
        }
        if d == imax + jmax {
            break;
        }
        let next_lo = (d + 1).saturating_sub(jmax);
        let next_hi = (d + 1).min(imax);
        let mut next: Vec<Vec<Count>> = vec![vec![Count::zero(); states]; next_hi - next_lo + 1];

        for (slot, cell) in level.iter().enumerate() {
            let k = k_lo + slot;
            let l = d - k;
            let at = base + Offset::new(k, l);
            let h_mult = multiplicity(at, Direction::Horizontal);
            let v_mult = multiplicity(at, Direction::Vertical);
            for (set, count) in cell.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                let set32 = set as u32;
                if k < imax {
                    let dst = &mut next[k + 1 - next_lo];
                    let open = h_mask & !set32;
                    let unmarked = h_mult - open.count_ones() as usize;
                    if unmarked > 0 {
                        dst[set] += count * unmarked;
                    }
                    let mut bits = open;
                    while bits != 0 {
                        let bit = bits & bits.wrapping_neg();
                        dst[(set32 | bit) as usize] += count;
                        bits ^= bit;
                    }
                }
                if l < jmax {
                    let dst = &mut next[k - next_lo];
                    let open = v_mask & !set32;
                    let unmarked = v_mult - open.count_ones() as usize;
                    if unmarked > 0 {
                        dst[set] += count * unmarked;
                    }
                    let mut bits = open;
                    while bits != 0 {
                        let bit = bits & bits.wrapping_neg();
                        dst[(set32 | bit) as usize] += count;
                        bits ^= bit;
                    }
                }
            }
        }
        debug_assert!(k_hi <= imax);
        k_lo = next_lo;
        level = next;
    }
    Ok(CountTable::from_cells(base, imax, jmax, result))
}

/// `G_{p,q}(i,j)` by the dynamic program.
pub fn count_good_dp(base: Vertex, off: Offset) -> Result<Count> {
    count_good_dp_with(base, off, &Budget::default())
}

pub fn count_good_dp_with(base: Vertex, off: Offset, budget: &Budget) -> Result<Count> {
    let table = good_count_table_with(base, off.di, off.dj, budget)?;
    Ok(table.get(off.di, off.dj).clone())
}

/// `G_{p,q}(i,j) / A_{p,q}(i,j)`.
pub fn good_fraction(base: Vertex, off: Offset) -> Result<Ratio> {
    let good = count_good_dp(base, off)?;
    Ok(ratio_of(&good, &closed_form(base, off)))
}

/// Union bound on bad paths, `(q+1) A_{p,q-1}(i,j) + (p+1) A_{p-1,q}(i,j)`.
/// A term whose base would have a negative coordinate is dropped.
pub fn bad_path_bound(base: Vertex, off: Offset) -> Count {
    let (p, q) = (base.x, base.y);
    let mut bound = Count::zero();
    if q >= 1 {
        bound += closed_form(Vertex::new(p, q - 1), off) * (q + 1);
    }
    if p >= 1 {
        bound += closed_form(Vertex::new(p - 1, q), off) * (p + 1);
    }
    bound
}
