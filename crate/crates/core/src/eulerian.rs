//! Generalized Eulerian numbers.
//!
//! `A_{p,q}(i,j)` counts the paths in the Euler graph from `(p,q)` to
//! `(p+i, q+j)`. The graph has `y+1` parallel edges `(x,y) -> (x+1,y)` and
//! `x+1` parallel edges `(x,y) -> (x,y+1)`.
//!
//! Counts are computed two ways: by the two-term recurrence
//!
//! ```text
//! A(i,j) = (j+q+1) A(i-1,j) + (i+p+1) A(i,j-1),
//! A(i,0) = (q+1)^i,   A(0,j) = (p+1)^j,   A(0,0) = 1
//! ```
//!
//! and by alternating binomial sums. Everything is exact; there is no
//! floating point in this module.

use std::fmt;
use std::ops::Add;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};

/// Path counts grow factorially, so they are always arbitrary precision.
pub type Count = BigUint;

/// A vertex `(x, y)` of the Euler graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vertex {
    pub x: usize,
    pub y: usize,
}

impl Vertex {
    pub const ROOT: Vertex = Vertex { x: 0, y: 0 };

    pub const fn new(x: usize, y: usize) -> Self {
        Vertex { x, y }
    }

    pub const fn level(self) -> usize {
        self.x + self.y
    }

    /// Displacement from `self` to `other`, if `other` is reachable.
    pub fn offset_to(self, other: Vertex) -> Option<Offset> {
        Some(Offset {
            di: other.x.checked_sub(self.x)?,
            dj: other.y.checked_sub(self.y)?,
        })
    }

    /// Componentwise `self <= other`.
    pub fn reaches(self, other: Vertex) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl From<(usize, usize)> for Vertex {
    fn from((x, y): (usize, usize)) -> Self {
        Vertex { x, y }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A displacement `(i, j)`; `(0,0)` is the empty displacement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Offset {
    pub di: usize,
    pub dj: usize,
}

impl Offset {
    pub const ZERO: Offset = Offset { di: 0, dj: 0 };

    pub const fn new(di: usize, dj: usize) -> Self {
        Offset { di, dj }
    }

    pub const fn len(self) -> usize {
        self.di + self.dj
    }

    pub const fn is_empty(self) -> bool {
        self.di == 0 && self.dj == 0
    }

    /// The offset under the `(p,q,i,j) -> (q,p,j,i)` symmetry.
    pub const fn transposed(self) -> Self {
        Offset {
            di: self.dj,
            dj: self.di,
        }
    }
}

impl From<(usize, usize)> for Offset {
    fn from((di, dj): (usize, usize)) -> Self {
        Offset { di, dj }
    }
}

impl fmt::Display for Offset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.di, self.dj)
    }
}

impl Vertex {
    pub const fn transposed(self) -> Self {
        Vertex {
            x: self.y,
            y: self.x,
        }
    }
}

impl Add<Offset> for Vertex {
    type Output = Vertex;

    fn add(self, off: Offset) -> Vertex {
        Vertex {
            x: self.x + off.di,
            y: self.y + off.dj,
        }
    }
}

/// Dense grid of counts `cells[(i,j)]` for `0 <= i <= imax`, `0 <= j <= jmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    base: Vertex,
    imax: usize,
    jmax: usize,
    cells: Vec<Count>,
}

impl CountTable {
    pub(crate) fn from_cells(base: Vertex, imax: usize, jmax: usize, cells: Vec<Count>) -> Self {
        debug_assert_eq!(cells.len(), (imax + 1) * (jmax + 1));
        CountTable {
            base,
            imax,
            jmax,
            cells,
        }
    }

    pub fn base(&self) -> Vertex {
        self.base
    }

    pub fn imax(&self) -> usize {
        self.imax
    }

    pub fn jmax(&self) -> usize {
        self.jmax
    }

    fn index(&self, i: usize, j: usize) -> usize {
        assert!(
            i <= self.imax && j <= self.jmax,
            "cell ({i},{j}) outside table {}x{}",
            self.imax,
            self.jmax
        );
        i * (self.jmax + 1) + j
    }

    /// Panics if `(i, j)` lies outside the table.
    pub fn get(&self, i: usize, j: usize) -> &Count {
        &self.cells[self.index(i, j)]
    }

    pub fn try_get(&self, off: Offset) -> Option<&Count> {
        if off.di <= self.imax && off.dj <= self.jmax {
            Some(self.get(off.di, off.dj))
        } else {
            None
        }
    }

    /// Overwrites one cell. The result no longer satisfies the recurrence;
    /// this exists so checkers can be exercised against corrupted data.
    pub fn set(&mut self, i: usize, j: usize, value: Count) {
        let idx = self.index(i, j);
        self.cells[idx] = value;
    }

    /// Cells in row-major order (`i` outer, `j` inner).
    pub fn iter(&self) -> impl Iterator<Item = (Offset, &Count)> + '_ {
        let width = self.jmax + 1;
        self.cells
            .iter()
            .enumerate()
            .map(move |(k, c)| (Offset::new(k / width, k % width), c))
    }
}

/// `A_{p,q}(i,j)` for the whole window `i <= imax`, `j <= jmax`, with the
/// default cell budget.
pub fn recurrence_table(base: Vertex, imax: usize, jmax: usize) -> Result<CountTable> {
    recurrence_table_with(base, imax, jmax, &Budget::default())
}

pub fn recurrence_table_with(
    base: Vertex,
    imax: usize,
    jmax: usize,
    budget: &Budget,
) -> Result<CountTable> {
    let cells_needed = (imax as u128 + 1) * (jmax as u128 + 1);
    budget.check_cells("count table", cells_needed)?;

    let (p, q) = (base.x, base.y);
    let width = jmax + 1;
    let mut cells: Vec<Count> = Vec::with_capacity(cells_needed as usize);
    for i in 0..=imax {
        for j in 0..=jmax {
            let value = match (i, j) {
                (0, 0) => Count::one(),
                (_, 0) => Count::from(q + 1).pow(i as u32),
                (0, _) => Count::from(p + 1).pow(j as u32),
                _ => {
                    let up = &cells[(i - 1) * width + j];
                    let left = &cells[i * width + j - 1];
                    up * (j + q + 1) + left * (i + p + 1)
                }
            };
            cells.push(value);
        }
    }
    Ok(CountTable::from_cells(base, imax, jmax, cells))
}

/// Exact binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

/// `C(x, k) = x (x-1) ... (x-k+1) / k!` for any integer `x`.
pub fn binomial_poly(x: i64, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc *= x - t as i64;
        acc /= t as i64 + 1;
    }
    acc
}

/// Alternating sum split into positive and negative halves.
#[derive(Default)]
struct SignedSum {
    pos: Count,
    neg: Count,
}

impl SignedSum {
    fn add(&mut self, negative: bool, term: Count) {
        if negative {
            self.neg += term;
        } else {
            self.pos += term;
        }
    }

    fn finish(self, what: &str) -> Count {
        assert!(
            self.pos >= self.neg,
            "{what}: alternating sum is negative, the implementation is wrong"
        );
        self.pos - self.neg
    }
}

/// `A_{p,q}(i,j)` as the alternating sum over `t = 0..=i` of
/// `(-1)^(i-t) C(p+q+t+1, t) C(p+q+i+j+2, i-t) (p+1+t)^(i+j)`.
///
/// At `(0,0)` the sum collapses to 1, matching the empty-path convention.
pub fn closed_form(base: Vertex, off: Offset) -> Count {
    let (p, q) = (base.x, base.y);
    let (i, j) = (off.di, off.dj);
    let n = p + q;
    let mut sum = SignedSum::default();
    for t in 0..=i {
        let term = binomial(n + t + 1, t)
            * binomial(n + i + j + 2, i - t)
            * Count::from(p + 1 + t).pow((i + j) as u32);
        sum.add((i - t) % 2 == 1, term);
    }
    sum.finish("closed_form")
}

/// The same count summed over `t = 0..=j`, obtained from [`closed_form`]
/// under the `(p,q,i,j) -> (q,p,j,i)` symmetry of the recurrence.
pub fn closed_form_sym(base: Vertex, off: Offset) -> Count {
    let (p, q) = (base.x, base.y);
    let (i, j) = (off.di, off.dj);
    let n = p + q;
    let mut sum = SignedSum::default();
    for t in 0..=j {
        let term = binomial(n + t + 1, t)
            * binomial(n + i + j + 2, j - t)
            * Count::from(q + 1 + t).pow((i + j) as u32);
        sum.add((j - t) % 2 == 1, term);
    }
    sum.finish("closed_form_sym")
}

/// Comtet's formula for `A_{0,0}(i,j)`:
/// `sum_{t=0}^{i} (-1)^(i-t) C(i+j+2, i-t) (1+t)^(i+j+1)`.
pub fn comtet_a00(off: Offset) -> Count {
    let (i, j) = (off.di, off.dj);
    let mut sum = SignedSum::default();
    for t in 0..=i {
        let term = binomial(i + j + 2, i - t) * Count::from(1 + t).pow((i + j + 1) as u32);
        sum.add((i - t) % 2 == 1, term);
    }
    sum.finish("comtet_a00")
}

/// Largest `n` accepted by [`classical_eulerian_oracle`].
pub const MAX_PERMUTATION_N: usize = 10;

/// Number of permutations of `1..=n` with exactly `k` descents, by
/// generating all `n!` permutations.
pub fn classical_eulerian_oracle(n: usize, k: usize) -> Result<Count> {
    if n == 0 || k >= n {
        return Err(Error::domain(format!(
            "descent count needs 0 <= k < n, got n={n}, k={k}"
        )));
    }
    if n > MAX_PERMUTATION_N {
        return Err(Error::Resource {
            what: "permutation generation",
            needed: format!("{n}! permutations"),
            limit: MAX_PERMUTATION_N as u64,
        });
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut hits: u64 = 0;
    loop {
        let descents = perm.windows(2).filter(|w| w[0] > w[1]).count();
        if descents == k {
            hits += 1;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(Count::from(hits))
}

/// Lexicographic successor in place; `false` once the last permutation is
/// reached.
fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(pivot) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let swap = xs.iter().rposition(|&v| v > xs[pivot]).unwrap();
    xs.swap(pivot, swap);
    xs[pivot + 1..].reverse();
    true
}

/// Both sides of
/// `sum_{t=0}^{i} (-1)^(i-t) C(p+q+t+1, t) C(p+q+i+2, i-t) (p+1+t)^i = (q+1)^i`,
/// the identity that fixes the coefficients of the closed form.
///
/// Binomials are read as polynomials in `q`, so any integer `q` is allowed.
pub fn coefficient_identity_check(p: u64, q: i64, i: u32) -> (BigInt, BigInt) {
    let p = p as i64;
    let i_us = i as usize;
    let mut lhs = BigInt::zero();
    for t in 0..=i_us {
        let sign = if (i_us - t) % 2 == 1 { -1 } else { 1 };
        let term = binomial_poly(p + q + t as i64 + 1, t)
            * binomial_poly(p + q + i as i64 + 2, i_us - t)
            * BigInt::from(p + 1 + t as i64).pow(i);
        lhs += term * sign;
    }
    let rhs = BigInt::from(q + 1).pow(i);
    (lhs, rhs)
}

/// `dim(from, to)`: the number of paths between two vertices, zero when `to`
/// is not reachable from `from`.
pub fn dim(from: Vertex, to: Vertex) -> Count {
    match from.offset_to(to) {
        Some(off) => closed_form(from, off),
        None => Count::zero(),
    }
}
