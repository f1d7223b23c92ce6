//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; exits non-zero if any fails.

use std::collections::{HashMap, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use euler_adic::adic::{compare, cylinder_measure, maximal_path, orbit_with, successor, RootPath};
use euler_adic::encoding::{decode, encode, transport, unmarked_counts, EncodingSymbol, SymbolKind};
use euler_adic::eulerian::{
    classical_eulerian_oracle, closed_form, closed_form_sym, coefficient_identity_check, comtet_a00, dim,
    recurrence_table_with,
};
use euler_adic::good::{count_good_dp_with, count_good_enumeration_with, good_count_table_with, good_fraction};
use euler_adic::path::{enumerate_paths_with, multiplicity, walk_paths};
use euler_adic::ratio::{check_monotonicity_with, directional_limit_q, normalized_dim_ratio, ratio_down_q};
use euler_adic::{Budget, Direction, Error, EulerPath, LabelScheme, Offset, Ratio, Step, Vertex};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn big() -> Budget {
    Budget::default().with_max_enum(200_000_000).with_max_cells(100_000_000)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, elapsed: Duration) -> Outcome {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn frac(n: i64, d: i64) -> Ratio {
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

fn level(n: usize) -> Vec<Vertex> {
    (0..=n).map(|p| Vertex::new(p, n - p)).collect()
}

fn offsets_up_to(total: usize) -> impl Iterator<Item = Offset> {
    (0..=total).flat_map(move |i| (0..=total - i).map(move |j| Offset::new(i, j)))
}

fn closed_forms_match_recurrence() -> Outcome {
    let start = Instant::now();
    for p in 0..=4 {
        for q in 0..=4 {
            let base = Vertex::new(p, q);
            let table = recurrence_table_with(base, 12, 12, &big()).map_err(|e| e.to_string())?;
            for (off, count) in table.iter().filter(|(o, _)| !o.is_empty()) {
                let a = closed_form(base, off);
                let b = closed_form_sym(base, off);
                ensure(a == *count && b == *count, || {
                    format!("base {base} offset {off}: recurrence {count}, sums {a} / {b}")
                })?;
            }
        }
    }
    within(Duration::from_secs(10), start.elapsed())
}

fn enumeration_matches_closed_form() -> Outcome {
    let start = Instant::now();
    for p in 0..=2 {
        for q in 0..=2 {
            let base = Vertex::new(p, q);
            for off in offsets_up_to(8) {
                let mut n: u64 = 0;
                walk_paths(base, off, |_| n += 1);
                let expect = closed_form(base, off);
                ensure(BigUint::from(n) == expect, || {
                    format!("base {base} offset {off}: enumerated {n}, closed form {expect}")
                })?;
            }
        }
    }
    within(Duration::from_secs(30), start.elapsed())
}

/// Eulerian numbers by `E(n,k) = (k+1)E(n-1,k) + (n-k)E(n-1,k-1)`.
fn eulerian_triangle(nmax: usize) -> Vec<Vec<BigUint>> {
    let mut rows = vec![vec![BigUint::one()]];
    for n in 2..=nmax {
        let prev = &rows[n - 2];
        let row = (0..n)
            .map(|k| {
                let stay = prev.get(k).map_or(BigUint::zero(), |e| e * (k + 1));
                let climb = if k > 0 { &prev[k - 1] * (n - k) } else { BigUint::zero() };
                stay + climb
            })
            .collect();
        rows.push(row);
    }
    rows
}

fn classical_cross_check() -> Outcome {
    let triangle = eulerian_triangle(9);
    for off in offsets_up_to(8) {
        let n = off.len() + 1;
        let comtet = comtet_a00(off);
        let descents = classical_eulerian_oracle(n, off.di).map_err(|e| e.to_string())?;
        let recurrence = &triangle[n - 1][off.di];
        ensure(comtet == descents && descents == *recurrence, || {
            format!("{off}: comtet {comtet}, permutations {descents}, triangle {recurrence}")
        })?;
    }
    for n in 0..=8 {
        let sum: BigUint = (0..=n).map(|i| closed_form(Vertex::ROOT, Offset::new(i, n - i))).sum();
        ensure(sum == factorial(n + 1), || format!("level {n} sums to {sum}"))?;
    }
    Ok(())
}

fn coefficient_identity() -> Outcome {
    for p in 0..=4u64 {
        for i in 0..=10u32 {
            for q in -15..=15i64 {
                let (lhs, rhs) = coefficient_identity_check(p, q, i);
                ensure(lhs == rhs, || format!("p={p} q={q} i={i}: {lhs} != {rhs}"))?;
            }
        }
    }
    Ok(())
}

fn monotonicity() -> Outcome {
    let start = Instant::now();
    for p in 0..=3 {
        for q in 1..=4 {
            let found = check_monotonicity_with(Vertex::new(p, q), 15, 15, &big()).map_err(|e| e.to_string())?;
            ensure(found.is_empty(), || format!("base ({p},{q}): {:?}", found[0]))?;
        }
    }
    within(Duration::from_secs(10), start.elapsed())
}

fn directional_limit() -> Outcome {
    for n in 1..=5usize {
        for q in 1..=n {
            let base = Vertex::new(n - q, q);
            for i in 0..=5 {
                let limit = frac((n + i + 1) as i64, (n + 1) as i64);
                let lib = directional_limit_q(base, i).map_err(|e| e.to_string())?;
                ensure(lib == limit, || format!("base {base} i={i}: limit {lib}, expected {limit}"))?;
                let seq: Vec<Ratio> = (0..=40)
                    .map(|j| ratio_down_q(base, Offset::new(i, j)))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                for (j, pair) in seq.windows(2).enumerate() {
                    ensure(pair[1] <= pair[0], || format!("base {base} i={i}: increases at j={}", j + 1))?;
                }
                if let Some((j, r)) = seq.iter().enumerate().find(|(_, r)| **r < limit) {
                    return Err(format!("base {base} i={i} j={j}: {r} below limit {limit}"));
                }
            }
        }
    }
    Ok(())
}

fn good_path_counts() -> Outcome {
    let budget = big();
    for p in 0..=2 {
        for q in 0..=2 {
            let base = Vertex::new(p, q);
            let table = good_count_table_with(base, 8, 8, &budget).map_err(|e| e.to_string())?;
            for off in offsets_up_to(8) {
                let dp = table.get(off.di, off.dj);
                let enumerated = count_good_enumeration_with(base, off, &budget).map_err(|e| e.to_string())?;
                ensure(*dp == enumerated, || format!("base {base} {off}: dp {dp}, enumeration {enumerated}"))?;
                let nonempty = off.di > q && off.dj > p;
                ensure(dp.is_zero() != nonempty, || format!("base {base} {off}: G = {dp}"))?;
            }
        }
    }
    for p in 1..=3 {
        for q in 1..=3 {
            let base = Vertex::new(p, q);
            let table = good_count_table_with(base, 12, 12, &budget).map_err(|e| e.to_string())?;
            for (off, good) in table.iter() {
                let all = closed_form(base, off);
                let bound = closed_form(Vertex::new(p, q - 1), off) * (q + 1)
                    + closed_form(Vertex::new(p - 1, q), off) * (p + 1);
                ensure(&all - good <= bound, || format!("base {base} {off}: {} bad paths, bound {bound}", &all - good))?;
            }
        }
    }
    Ok(())
}

fn good_fraction_at_scale() -> Outcome {
    let start = Instant::now();
    let f = good_fraction(Vertex::new(1, 1), Offset::new(100, 100)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let approx = euler_adic::ratio::to_significant(&f, 6);
    ensure(f >= frac(99, 100), || format!("G/A = {approx} < 99/100"))?;
    within(Duration::from_secs(5), elapsed)
}

/// Per-step encoding model used as an oracle for transport: where each
/// label sits, which edges are marked, and how unmarked edges are ranked.
#[derive(Clone, Copy)]
struct Model {
    base: Vertex,
}

impl Model {
    fn labeled(&self, d: Direction) -> usize {
        match d {
            Direction::Horizontal => self.base.y + 1,
            Direction::Vertical => self.base.x + 1,
        }
    }

    fn label(&self, d: Direction, idx: usize) -> Option<usize> {
        (idx <= self.labeled(d)).then(|| match d {
            Direction::Horizontal => idx,
            Direction::Vertical => self.base.y + 1 + idx,
        })
    }

    fn full(&self) -> u32 {
        (1u32 << (self.base.x + self.base.y + 2)) - 1
    }

    fn marked(&self, consumed: u32, d: Direction, idx: usize) -> bool {
        self.label(d, idx).is_some_and(|a| consumed & (1 << (a - 1)) == 0)
    }

    fn symbol(&self, at: Vertex, consumed: u32, step: Step) -> EncodingSymbol {
        let d = step.direction;
        if self.marked(consumed, d, step.edge_index) {
            return EncodingSymbol::s(self.label(d, step.edge_index).unwrap());
        }
        let rank = (1..=step.edge_index).filter(|&k| !self.marked(consumed, d, k)).count();
        debug_assert!(step.edge_index <= multiplicity(at, d));
        match d {
            Direction::Horizontal => EncodingSymbol::h(rank),
            Direction::Vertical => EncodingSymbol::v(rank),
        }
    }

    fn step(&self, at: Vertex, consumed: u32, sym: EncodingSymbol) -> Option<Step> {
        let d = match sym.kind {
            SymbolKind::S => {
                let a = sym.index;
                if consumed & (1 << (a - 1)) != 0 {
                    return None;
                }
                let h = self.labeled(Direction::Horizontal);
                return Some(if a <= h { Step::h(a) } else { Step::v(a - h) });
            }
            SymbolKind::H => Direction::Horizontal,
            SymbolKind::V => Direction::Vertical,
        };
        (1..=multiplicity(at, d))
            .filter(|&k| !self.marked(consumed, d, k))
            .nth(sym.index - 1)
            .map(|k| Step::new(d, k))
    }

    fn consume(&self, consumed: u32, step: Step) -> u32 {
        match self.label(step.direction, step.edge_index) {
            Some(a) => consumed | (1 << (a - 1)),
            None => consumed,
        }
    }
}

fn out_steps(at: Vertex, end: Vertex) -> Vec<Step> {
    let mut steps = Vec::new();
    if at.x < end.x {
        steps.extend((1..=multiplicity(at, Direction::Horizontal)).map(Step::h));
    }
    if at.y < end.y {
        steps.extend((1..=multiplicity(at, Direction::Vertical)).map(Step::v));
    }
    steps
}

/// Every good path from `src.base` to `end`, grouped by the joint state of
/// the source walk and its transported image. Returns
/// `(good source paths, paths whose image is a good path ending at end)`
/// and fails on any state where the per-step map is not injective or not
/// inverted by the reverse step.
struct Joint {
    src: Model,
    dst: Model,
    end: Vertex,
    memo: HashMap<(Vertex, u32, Vertex, u32), (u128, u128)>,
    solo: HashMap<(Vertex, u32), u128>,
}

impl Joint {
    fn run(&mut self, at: Vertex, s: u32, img: Vertex, t: u32) -> Result<(u128, u128), String> {
        if at == self.end {
            let good = s == self.src.full();
            let ok = good && img == self.end && t == self.dst.full();
            return Ok((good as u128, ok as u128));
        }
        if let Some(&hit) = self.memo.get(&(at, s, img, t)) {
            return Ok(hit);
        }
        let (mut good, mut ok) = (0u128, 0u128);
        let mut images = HashSet::new();
        for step in out_steps(at, self.end) {
            let sym = self.src.symbol(at, s, step);
            let next = (step.target(at), self.src.consume(s, step));
            match self.dst.step(img, t, sym) {
                Some(moved) => {
                    ensure(images.insert(moved), || format!("two edges at {at} map to {moved}"))?;
                    let back = self.src.step(at, s, self.dst.symbol(img, t, moved));
                    ensure(back == Some(step), || format!("{step} at {at} does not come back"))?;
                    let r = self.run(next.0, next.1, moved.target(img), self.dst.consume(t, moved))?;
                    good += r.0;
                    ok += r.1;
                }
                None => {
                    // An undecodable prefix only matters if it extends to a good path.
                    good += self.good_completions(next.0, next.1);
                }
            }
        }
        self.memo.insert((at, s, img, t), (good, ok));
        Ok((good, ok))
    }

    fn good_completions(&mut self, at: Vertex, s: u32) -> u128 {
        if at == self.end {
            return (s == self.src.full()) as u128;
        }
        if let Some(&hit) = self.solo.get(&(at, s)) {
            return hit;
        }
        let total = out_steps(at, self.end)
            .into_iter()
            .map(|step| self.good_completions(step.target(at), self.src.consume(s, step)))
            .sum();
        self.solo.insert((at, s), total);
        total
    }
}

fn bijection() -> Outcome {
    let budget = big();
    for n in 0..=3 {
        for &from in &level(n) {
            for &to in &level(n) {
                let (src, dst) = (LabelScheme::new(from), LabelScheme::new(to));
                for i in n + 2..=7 {
                    for j in n + 2..=7 {
                        let end = Vertex::new(i, j);
                        let mut joint = Joint {
                            src: Model { base: from },
                            dst: Model { base: to },
                            end,
                            memo: HashMap::new(),
                            solo: HashMap::new(),
                        };
                        let (good, ok) = joint.run(from, 0, to, 0).map_err(|e| format!("{from}->{to}: {e}"))?;
                        ensure(good == ok, || format!("{from}->{to} at {end}: {good} good paths, {ok} mapped"))?;
                        let g_src = count_good_dp_with(from, from.offset_to(end).unwrap(), &budget).map_err(|e| e.to_string())?;
                        let g_dst = count_good_dp_with(to, to.offset_to(end).unwrap(), &budget).map_err(|e| e.to_string())?;
                        ensure(g_src == BigUint::from(good) && g_src == g_dst, || {
                            format!("{from}->{to} at {end}: model {good}, G {g_src} / {g_dst}")
                        })?;
                        if dim(from, end) <= BigUint::from(3_000u32) {
                            transport_each_path(&src, &dst, end, &budget)?;
                        }
                    }
                }
            }
        }
    }
    for n in 1..=4 {
        let tables = level(n)
            .into_iter()
            .map(|b| good_count_table_with(b, 40 - b.x, 40 - b.y, &budget).map(|t| (b, t)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        for i in n + 2..=40 {
            for j in n + 2..=40 {
                let counts: Vec<_> = tables.iter().map(|(b, t)| t.get(i - b.x, j - b.y)).collect();
                ensure(counts.windows(2).all(|c| c[0] == c[1]), || format!("level {n} at ({i},{j}): {counts:?}"))?;
            }
        }
    }
    Ok(())
}

/// Library transport on every path to `end`, checked against the model.
fn transport_each_path(src: &LabelScheme, dst: &LabelScheme, end: Vertex, budget: &Budget) -> Outcome {
    let paths = enumerate_paths_with(src.base, src.base.offset_to(end).unwrap(), budget).map_err(|e| e.to_string())?;
    let mut images = HashSet::new();
    let mut good = 0usize;
    for x in paths {
        if !src.is_good(&x).map_err(|e| e.to_string())?.0 {
            ensure(transport(src, dst, &x).is_err(), || format!("bad path {x} was transported"))?;
            continue;
        }
        good += 1;
        let y = transport(src, dst, &x).map_err(|e| format!("{x}: {e}"))?;
        ensure(y.end() == end && dst.is_good(&y).unwrap().0, || format!("{x} -> {y}"))?;
        ensure(transport(dst, src, &y).as_ref() == Ok(&x), || format!("{x} -> {y} does not invert"))?;
        ensure(y == model_transport(src.base, dst.base, &x), || format!("{x} -> {y} disagrees with the model"))?;
        images.insert(y);
    }
    ensure(images.len() == good, || format!("{good} good paths, {} images", images.len()))
}

fn model_transport(from: Vertex, to: Vertex, x: &EulerPath) -> EulerPath {
    let (src, dst) = (Model { base: from }, Model { base: to });
    let (mut at, mut s, mut img, mut t) = (from, 0, to, 0);
    let mut steps = Vec::new();
    for &step in &x.steps {
        let moved = dst.step(img, t, src.symbol(at, s, step)).expect("decodable");
        s = src.consume(s, step);
        at = step.target(at);
        t = dst.consume(t, moved);
        img = moved.target(img);
        steps.push(moved);
    }
    EulerPath::new(to, steps)
}

fn encoding_recursion() -> Outcome {
    let mut failure = None;
    for p in 0..=2 {
        for q in 0..=2 {
            let base = Vertex::new(p, q);
            let scheme = LabelScheme::new(base);
            for off in offsets_up_to(8) {
                // Every prefix of a path in this window is itself a path in the
                // window, so checking the last step of each path covers all steps.
                walk_paths(base, off, |steps| {
                    if failure.is_some() {
                        return;
                    }
                    let x = EulerPath::new(base, steps.to_vec());
                    if let Err(e) = check_last_step(&scheme, &x) {
                        failure = Some(e);
                    }
                });
                if let Some(e) = failure.take() {
                    return Err(format!("base {base}: {e}"));
                }
            }
        }
    }
    Ok(())
}

fn check_last_step(scheme: &LabelScheme, x: &EulerPath) -> Outcome {
    let code = encode(scheme, x).map_err(|e| e.to_string())?;
    let back = decode(scheme, &code).map_err(|e| format!("{x}: {e}"))?;
    ensure(back == *x, || format!("{x} decodes to {back}"))?;
    let m = x.len();
    let now = unmarked_counts(scheme, x, m).map_err(|e| e.to_string())?;
    if m == 0 {
        return ensure(now == (0, 0), || format!("{now:?} unmarked edges at the base"));
    }
    let (h, v) = unmarked_counts(scheme, x, m - 1).map_err(|e| e.to_string())?;
    let expect = match code.symbols[m - 1].kind {
        SymbolKind::S => (h + 1, v + 1),
        SymbolKind::H => (h, v + 1),
        SymbolKind::V => (h + 1, v),
    };
    ensure(now == expect, || format!("{x}: counts {now:?} after {}, expected {expect:?}", code.symbols[m - 1]))
}

fn convergence() -> Outcome {
    let start = Instant::now();
    for n in 0..=3 {
        let scale = Ratio::from_integer(BigInt::from(factorial(n + 1)));
        for &p in &level(n) {
            let gap = |k: usize| {
                let r = normalized_dim_ratio(p, p + Offset::new(k, k)) * &scale - Ratio::one();
                if r < Ratio::zero() {
                    -r
                } else {
                    r
                }
            };
            let gaps: Vec<Ratio> = [10, 20, 40, 60].into_iter().map(gap).collect();
            ensure(gaps[3] < frac(1, 10), || format!("base {p}: gap {} at k=60", gaps[3]))?;
            if n == 0 {
                // From the root the ratio is exactly 1: nothing left to decrease.
                ensure(gaps.iter().all(Zero::is_zero), || "root ratio differs from 1".to_string())?;
            } else {
                ensure(gaps.windows(2).all(|g| g[1] < g[0]), || format!("base {p}: gaps not strictly decreasing"))?;
            }
        }
    }
    within(Duration::from_secs(5), start.elapsed())
}

fn adic_orbits() -> Outcome {
    let budget = big();
    for n in 0..=6 {
        for v in level(n) {
            let orbit = orbit_with(v, &budget).map_err(|e| e.to_string())?;
            ensure(BigUint::from(orbit.len()) == dim(Vertex::ROOT, v), || format!("{v}: orbit of {}", orbit.len()))?;
            for pair in orbit.windows(2) {
                let ord = compare(&pair[0], &pair[1]).map_err(|e| e.to_string())?;
                ensure(ord.is_lt(), || format!("{v}: {} !< {}", pair[0], pair[1]))?;
            }
            let all: HashSet<RootPath> = enumerate_paths_with(Vertex::ROOT, Offset::new(v.x, v.y), &budget)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|x| RootPath::new(x).unwrap())
                .collect();
            let top = maximal_path(v);
            for x in &orbit {
                ensure(all.contains(x), || format!("{x} is not a path to {v}"))?;
                match successor(x) {
                    Err(Error::MaximalPath) => ensure(*x == top, || format!("{x} has no successor"))?,
                    Err(e) => return Err(format!("{x}: {e}")),
                    Ok(_) => ensure(*x != top, || format!("maximal {x} has a successor"))?,
                }
            }
            ensure(all.len() == orbit.len(), || format!("{v}: orbit misses paths"))?;
        }
    }
    for n in 0..=8 {
        let total: Ratio = level(n)
            .into_iter()
            .map(|v| Ratio::from_integer(BigInt::from(dim(Vertex::ROOT, v))) * cylinder_measure(n))
            .sum();
        ensure(total.is_one(), || format!("level {n}: total mass {total}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("closed forms agree with the recurrence", closed_forms_match_recurrence),
        ("path enumeration agrees with the closed form", enumeration_matches_closed_form),
        ("root counts are the classical Eulerian numbers", classical_cross_check),
        ("coefficient identity", coefficient_identity),
        ("ratio monotonicity", monotonicity),
        ("directional limit", directional_limit),
        ("good-path counts and bad-path bound", good_path_counts),
        ("good fraction at (100,100) from (1,1)", good_fraction_at_scale),
        ("transport is a bijection of good paths", bijection),
        ("unmarked-edge recursion and encode/decode round trip", encoding_recursion),
        ("normalized dimension ratios converge", convergence),
        ("adic orbits and symmetric measure", adic_orbits),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.2}s)", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {e}", k + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
