//! Exact ratios of generalized Eulerian numbers: the monotone ratios
//! `A_{p,q}/A_{p,q-1}` and `A_{p,q}/A_{p-1,q}`, their limits, and the
//! normalized dimension ratio `dim(P,Q)/dim(R,Q)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::budget::Budget;
use crate::eulerian::{closed_form, dim, recurrence_table_with, Count, CountTable, Offset, Vertex};
use crate::error::{Error, Result};

/// Exact rational, always in lowest terms with a positive denominator.
pub type Ratio = num_rational::BigRational;

pub fn ratio_of(num: &Count, den: &Count) -> Ratio {
    Ratio::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

pub fn ratio_from(num: u64, den: u64) -> Ratio {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

/// `1/m!`.
pub fn inverse_factorial(m: usize) -> Ratio {
    let fact: BigUint = (1..=m).map(BigUint::from).product();
    Ratio::new(BigInt::one(), BigInt::from(fact))
}

/// Formats a ratio as `num/den`, keeping the denominator even when it is 1.
pub struct Exact<'a>(pub &'a Ratio);

impl fmt::Display for Exact<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Decimal rendering with `digits` significant digits, e.g. `1.23e-4`.
/// Rounds half away from zero; computed from the exact value.
pub fn to_significant(r: &Ratio, digits: usize) -> String {
    assert!(digits >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let num = r.numer().abs();
    let den = r.denom().clone();
    let ten = BigInt::from(10);

    // Exponent estimate from digit counts, corrected below.
    let mut exp = num.to_string().len() as i64 - den.to_string().len() as i64;
    let scaled = |exp: i64| -> BigInt {
        let shift = digits as i64 - 1 - exp;
        let (n, d) = if shift >= 0 {
            (&num * ten.pow(shift as u32), den.clone())
        } else {
            (num.clone(), &den * ten.pow((-shift) as u32))
        };
        let (q, rem) = n.div_rem(&d);
        if rem * 2 >= d {
            q + 1
        } else {
            q
        }
    };
    let lower = ten.pow(digits as u32 - 1);
    let upper = ten.pow(digits as u32);
    let mut mantissa = scaled(exp);
    while mantissa >= upper {
        exp += 1;
        mantissa = scaled(exp);
    }
    while mantissa < lower {
        exp -= 1;
        mantissa = scaled(exp);
    }
    // Rounding up can carry into an extra digit.
    if mantissa >= upper {
        exp += 1;
        mantissa = scaled(exp);
    }
    let m = mantissa.to_string();
    let (head, tail) = m.split_at(1);
    let tail = tail.trim_end_matches('0');
    if tail.is_empty() {
        format!("{sign}{head}e{exp}")
    } else {
        format!("{sign}{head}.{tail}e{exp}")
    }
}

fn require_q(base: Vertex) -> Result<()> {
    if base.y == 0 {
        return Err(Error::domain(format!("base {base} needs q >= 1")));
    }
    Ok(())
}

/// `A_{p,q}(i,j) / A_{p,q-1}(i,j)`.
pub fn ratio_down_q(base: Vertex, off: Offset) -> Result<Ratio> {
    require_q(base)?;
    let lower = Vertex::new(base.x, base.y - 1);
    Ok(ratio_of(&closed_form(base, off), &closed_form(lower, off)))
}

/// `A_{p,q}(i,j) / A_{p-1,q}(i,j)`.
pub fn ratio_down_p(base: Vertex, off: Offset) -> Result<Ratio> {
    if base.x == 0 {
        return Err(Error::domain(format!("base {base} needs p >= 1")));
    }
    let lower = Vertex::new(base.x - 1, base.y);
    Ok(ratio_of(&closed_form(base, off), &closed_form(lower, off)))
}

/// Which of the two monotonicity inequalities failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inequality {
    /// `r(i,j+1) <= r(i,j)`.
    DecreasingInJ,
    /// `r(i,j) <= (q+j)/(q+1+j) * r(i+1,j)`.
    SpeedInI,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub off: Offset,
    pub inequality: Inequality,
}

/// Scans `0 <= i <= imax`, `0 <= j <= jmax` for cells where
/// `r = A_{p,q}/A_{p,q-1}` breaks either
/// `r(i,j+1) <= r(i,j)` or `r(i,j) <= (q+j)/(q+1+j) r(i+1,j)`.
pub fn check_monotonicity(base: Vertex, imax: usize, jmax: usize) -> Result<Vec<Violation>> {
    check_monotonicity_with(base, imax, jmax, &Budget::default())
}

pub fn check_monotonicity_with(
    base: Vertex,
    imax: usize,
    jmax: usize,
    budget: &Budget,
) -> Result<Vec<Violation>> {
    require_q(base)?;
    let numer = recurrence_table_with(base, imax + 1, jmax + 1, budget)?;
    let denom = recurrence_table_with(Vertex::new(base.x, base.y - 1), imax + 1, jmax + 1, budget)?;
    Ok(monotonicity_violations(base.y, &numer, &denom, imax, jmax))
}

/// The comparison behind [`check_monotonicity`], on caller-supplied tables.
/// Both tables must cover `(imax+1, jmax+1)`. All comparisons are done by
/// cross-multiplication of exact integers.
pub fn monotonicity_violations(
    q: usize,
    numer: &CountTable,
    denom: &CountTable,
    imax: usize,
    jmax: usize,
) -> Vec<Violation> {
    let mut out = Vec::new();
    for i in 0..=imax {
        for j in 0..=jmax {
            let (a, b) = (numer.get(i, j), denom.get(i, j));
            let (a_up, b_up) = (numer.get(i, j + 1), denom.get(i, j + 1));
            let (a_right, b_right) = (numer.get(i + 1, j), denom.get(i + 1, j));
            if a_up * b > a * b_up {
                out.push(Violation {
                    off: Offset::new(i, j),
                    inequality: Inequality::DecreasingInJ,
                });
            }
            if a * b_right * (q + 1 + j) > a_right * b * (q + j) {
                out.push(Violation {
                    off: Offset::new(i, j),
                    inequality: Inequality::SpeedInI,
                });
            }
        }
    }
    out
}

/// `lim_{j -> inf} A_{p,q}(i,j)/A_{p,q-1}(i,j) = (p+q+i+1)/(p+q+1)`,
/// approached from above.
pub fn directional_limit_q(base: Vertex, i: usize) -> Result<Ratio> {
    require_q(base)?;
    let n = (base.x + base.y) as u64;
    Ok(ratio_from(n + i as u64 + 1, n + 1))
}

/// `lim_{i -> inf} A_{p,q}(i,j)/A_{p-1,q}(i,j) = (p+q+j+1)/(p+q+1)`.
pub fn directional_limit_p(base: Vertex, j: usize) -> Result<Ratio> {
    if base.x == 0 {
        return Err(Error::domain(format!("base {base} needs p >= 1")));
    }
    let n = (base.x + base.y) as u64;
    Ok(ratio_from(n + j as u64 + 1, n + 1))
}

/// An index `I` with `A_{p,q}(i,j)/A_{p,q-1}(i,j) > bound` for every
/// `i >= I` and every `j >= 0`.
///
/// The ratio decreases in `j` towards `(p+q+i+1)/(p+q+1)`, and that limit
/// grows with `i`, so `I` is the smallest index whose limit exceeds the bound.
/// Below `I` the limit is at most `bound`.
pub fn divergence_threshold(base: Vertex, bound: &Ratio) -> Result<usize> {
    require_q(base)?;
    let n1 = BigInt::from(base.x + base.y + 1);
    // (n+1+I)/(n+1) > M  <=>  I > (M-1)(n+1)
    let excess = (bound - Ratio::one()) * Ratio::from_integer(n1);
    if excess.is_negative() {
        return Ok(0);
    }
    let floor: BigInt = excess.floor().to_integer();
    let threshold: BigInt = floor + 1u32;
    threshold
        .to_usize()
        .ok_or_else(|| Error::domain("divergence threshold does not fit in usize"))
}

/// `dim(P,Q) / dim(R,Q)`, zero when `Q` is not reachable from `P`.
pub fn normalized_dim_ratio(from: Vertex, to: Vertex) -> Ratio {
    ratio_of(&dim(from, to), &dim(Vertex::ROOT, to))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRecord {
    pub base: Vertex,
    pub off: Offset,
    pub ratio: Ratio,
    pub target: Ratio,
    pub abs_gap: Ratio,
}

/// Evaluates `dim(P, P+off)/dim(R, P+off)` at each sample against the
/// symmetric-measure value `1/(n+1)!`, `n` the level of `P`.
///
/// Samples must be strictly increasing in both coordinates.
pub fn convergence_report(base: Vertex, samples: &[Offset]) -> Result<Vec<ConvergenceRecord>> {
    for pair in samples.windows(2) {
        if !(pair[0].di < pair[1].di && pair[0].dj < pair[1].dj) {
            return Err(Error::domain(format!(
                "samples must increase in both coordinates: {} then {}",
                pair[0], pair[1]
            )));
        }
    }
    let target = inverse_factorial(base.level() + 1);
    Ok(samples
        .iter()
        .map(|&off| {
            let ratio = normalized_dim_ratio(base, base + off);
            let abs_gap = (&ratio - &target).abs();
            ConvergenceRecord {
                base,
                off,
                ratio,
                target: target.clone(),
                abs_gap,
            }
        })
        .collect())
}
