//! Brute-force generators for every family the correspondence touches.
//!
//! These are oracles: none of them calls into the bijection code. `ParMat`,
//! `BCM`, flagged biwords and semistandard multitableaux are each generated
//! straight from their definitions, so cardinality and image checks compare
//! independent computations.
//!
//! All generators return their elements in a fixed order (lexicographic in
//! the order choices are made), so failures are reproducible.

use std::fmt;
use std::str::FromStr;

use crate::bijection::FlaggedBiword;
use crate::blocks::{Coord, FlaggedBCM, ParMatFlat};
use crate::combinatorics::{
    Composition, Letter, MultiComposition, MultiPartition, Multitableau, Partition, Tableau,
};
use crate::error::{Error, Result};
use crate::rsk::{Biword, NMatrix};

/// Bounds for exhaustive sweeps.
///
/// Canonical compositions may contain internal zeros, so the set of
/// compositions of `n` is infinite; `max_parts` caps each component's
/// length and therefore every block's row and column extent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_n: u32,
    pub max_level: usize,
    pub max_parts: usize,
}

impl EnumerationBudget {
    /// Sweeps grow roughly like `(max_parts · max_level)^(2 · max_n)`; past
    /// these limits a sweep no longer finishes in reasonable time.
    pub const LIMIT_N: u32 = 8;
    pub const LIMIT_LEVEL: usize = 4;
    pub const LIMIT_PARTS: usize = 8;

    pub fn new(max_n: u32, max_level: usize, max_parts: usize) -> Result<Self> {
        let b = EnumerationBudget {
            max_n,
            max_level,
            max_parts,
        };
        b.check()?;
        Ok(b)
    }

    fn check(&self) -> Result<()> {
        if self.max_level == 0 || self.max_parts == 0 {
            return Err(Error::Budget("level and parts must be positive".into()));
        }
        if self.max_n > Self::LIMIT_N
            || self.max_level > Self::LIMIT_LEVEL
            || self.max_parts > Self::LIMIT_PARTS
        {
            return Err(Error::Budget(format!(
                "{self} exceeds the limit n={},level={},parts={}",
                Self::LIMIT_N,
                Self::LIMIT_LEVEL,
                Self::LIMIT_PARTS
            )));
        }
        Ok(())
    }
}

impl fmt::Display for EnumerationBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={},level={},parts={}",
            self.max_n, self.max_level, self.max_parts
        )
    }
}

/// Parses `n=4,level=3,parts=3`. Omitted `parts` defaults to `n` (at least 1).
impl FromStr for EnumerationBudget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut n = None;
        let mut level = None;
        let mut parts = None;
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("budget item {item:?} is not key=value")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("budget value {value:?} is not an integer")))?;
            match key.trim() {
                "n" => n = Some(value as u32),
                "level" | "l" => level = Some(value as usize),
                "parts" => parts = Some(value as usize),
                other => return Err(Error::Parse(format!("unknown budget key {other:?}"))),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("budget needs n=".into()))?;
        let level = level.ok_or_else(|| Error::Parse("budget needs level=".into()))?;
        let parts = parts.unwrap_or((n as usize).max(1));
        Self::new(n, level, parts)
    }
}

/// Canonical compositions of `k` with at most `max_parts` parts.
pub fn enum_compositions(k: u32, max_parts: usize) -> Vec<Composition> {
    fn go(rem: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rem == 0 {
            if prefix.last() != Some(&0) {
                out.push(Composition::new(prefix.clone()).unwrap());
            }
            return;
        }
        if slots == 0 {
            return;
        }
        for x in 0..=rem {
            prefix.push(x);
            go(rem - x, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, max_parts, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `k`, largest first part first.
pub fn enum_partitions(k: u32) -> Vec<Partition> {
    partitions_in_box(k, k, usize::MAX)
        .into_iter()
        .filter(|p| p.weight() == k)
        .collect()
}

/// Partitions with largest part at most `max_part`, length at most
/// `max_len` and weight at most `max_weight`, including the empty one.
fn partitions_in_box(max_weight: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn go(rem: u32, cap: u32, len_left: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(prefix.clone()).unwrap());
        if len_left == 0 {
            return;
        }
        for x in (1..=cap.min(rem)).rev() {
            prefix.push(x);
            go(rem - x, x, len_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(max_weight, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// Splits `n` into `level` ordered weights and takes the product of the
/// per-component families.
fn tuples<T: Clone>(n: u32, level: usize, family: impl Fn(u32) -> Vec<T>) -> Vec<Vec<T>> {
    let cache: Vec<Vec<T>> = (0..=n).map(family).collect();
    let mut out = Vec::new();
    fn go<T: Clone>(
        rem: u32,
        left: usize,
        cache: &[Vec<T>],
        prefix: &mut Vec<T>,
        out: &mut Vec<Vec<T>>,
    ) {
        if left == 0 {
            if rem == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for k in (0..=rem).rev() {
            for x in &cache[k as usize] {
                prefix.push(x.clone());
                go(rem - k, left - 1, cache, prefix, out);
                prefix.pop();
            }
        }
    }
    go(n, level, &cache, &mut Vec::new(), &mut out);
    out
}

pub fn enum_multicompositions(n: u32, level: usize, max_parts: usize) -> Vec<MultiComposition> {
    if level == 0 {
        return Vec::new();
    }
    tuples(n, level, |k| enum_compositions(k, max_parts))
        .into_iter()
        .map(|c| MultiComposition::new(c).unwrap())
        .collect()
}

pub fn enum_multipartitions(n: u32, level: usize) -> Vec<MultiPartition> {
    if level == 0 {
        return Vec::new();
    }
    tuples(n, level, enum_partitions)
        .into_iter()
        .map(|c| MultiPartition::new(c).unwrap())
        .collect()
}

/// The row (or column) lines of a block matrix with prescribed sums: one
/// `(block, index, sum)` per part of each component, zero parts included.
fn lines(x: &MultiComposition) -> Vec<(usize, usize, u32)> {
    x.components()
        .iter()
        .enumerate()
        .flat_map(|(b, c)| {
            c.parts()
                .iter()
                .enumerate()
                .map(move |(t, &s)| (b + 1, t + 1, s))
        })
        .collect()
}

/// Calls `f` with every nonnegative table (row-major, `rows.len() ×
/// cols.len()`) having the given row and column sums.
fn for_each_table(rows: &[u32], cols: &[u32], f: &mut dyn FnMut(&[u32])) {
    fn fill_row(
        r: usize,
        c: usize,
        rem: u32,
        rows: &[u32],
        colrem: &mut [u32],
        table: &mut [u32],
        f: &mut dyn FnMut(&[u32]),
    ) {
        let width = colrem.len();
        if c == width {
            if rem == 0 {
                next_row(r + 1, rows, colrem, table, f);
            }
            return;
        }
        let room: u32 = colrem[c..].iter().sum();
        if room < rem {
            return;
        }
        for x in (0..=rem.min(colrem[c])).rev() {
            table[r * width + c] = x;
            colrem[c] -= x;
            fill_row(r, c + 1, rem - x, rows, colrem, table, f);
            colrem[c] += x;
        }
        table[r * width + c] = 0;
    }
    fn next_row(
        r: usize,
        rows: &[u32],
        colrem: &mut [u32],
        table: &mut [u32],
        f: &mut dyn FnMut(&[u32]),
    ) {
        if r == rows.len() {
            if colrem.iter().all(|&x| x == 0) {
                f(table);
            }
            return;
        }
        fill_row(r, 0, rows[r], rows, colrem, table, f);
    }
    if rows.iter().sum::<u32>() != cols.iter().sum::<u32>() {
        return;
    }
    let mut colrem = cols.to_vec();
    let mut table = vec![0; rows.len() * cols.len()];
    next_row(0, rows, &mut colrem, &mut table, f);
}

/// Calls `f` once per element of the product of `choices`.
fn for_each_product<T>(choices: &[Vec<T>], f: &mut dyn FnMut(&[&T])) {
    fn go<'a, T>(k: usize, choices: &'a [Vec<T>], pick: &mut Vec<&'a T>, f: &mut dyn FnMut(&[&T])) {
        if k == choices.len() {
            f(pick);
            return;
        }
        for x in &choices[k] {
            pick.push(x);
            go(k + 1, choices, pick, f);
            pick.pop();
        }
    }
    go(0, choices, &mut Vec::new(), f);
}

fn check_params(nu: &MultiComposition, mu: &MultiComposition) -> Result<()> {
    if nu.level() != mu.level() {
        return Err(Error::LevelMismatch {
            left: nu.level(),
            right: mu.level(),
        });
    }
    if nu.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: nu.weight(),
            right: mu.weight(),
        });
    }
    Ok(())
}

/// Every `(A, P)` with `row(A) = ν`, `col(A) = μ` and admissible
/// decorations, each exactly once.
pub fn enum_parmat(nu: &MultiComposition, mu: &MultiComposition) -> Result<Vec<ParMatFlat>> {
    check_params(nu, mu)?;
    let level = nu.level();
    let rows = lines(nu);
    let cols = lines(mu);
    let row_sums: Vec<u32> = rows.iter().map(|r| r.2).collect();
    let col_sums: Vec<u32> = cols.iter().map(|c| c.2).collect();
    let mut out = Vec::new();
    for_each_table(&row_sums, &col_sums, &mut |table| {
        let mut cells = Vec::new();
        let mut choices = Vec::new();
        for (k, &a) in table.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let (p, i, _) = rows[k / cols.len()];
            let (q, j, _) = cols[k % cols.len()];
            let coord = Coord::new(p, q, i, j);
            cells.push((coord, a));
            // largest part at most a, length at most min(p, q) - 1
            choices.push(partitions_in_box(u32::MAX / 2, a, coord.depth() - 1));
        }
        for_each_product(&choices, &mut |pick| {
            let mut x = ParMatFlat::new(level).unwrap();
            for (&(coord, a), eta) in cells.iter().zip(pick) {
                x.set(coord, a, (*eta).clone()).unwrap();
            }
            out.push(x);
        });
    });
    Ok(out)
}

/// Canonical compositions of `a > 0` with at most `max_len` parts.
fn bounded_length_compositions(a: u32, max_len: usize) -> Vec<Composition> {
    enum_compositions(a, max_len)
}

/// Every flagged block composition matrix with `row(B) = ν`, `col(B) = μ`.
/// Incompatible parameters give an empty list.
pub fn enum_bcm(nu: &MultiComposition, mu: &MultiComposition) -> Vec<FlaggedBCM> {
    if check_params(nu, mu).is_err() {
        return Vec::new();
    }
    let level = nu.level();
    let rows = lines(nu);
    let cols = lines(mu);
    let row_sums: Vec<u32> = rows.iter().map(|r| r.2).collect();
    let col_sums: Vec<u32> = cols.iter().map(|c| c.2).collect();
    let mut out = Vec::new();
    for_each_table(&row_sums, &col_sums, &mut |table| {
        let mut coords = Vec::new();
        let mut choices = Vec::new();
        for (k, &a) in table.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let (p, i, _) = rows[k / cols.len()];
            let (q, j, _) = cols[k % cols.len()];
            let coord = Coord::new(p, q, i, j);
            coords.push(coord);
            choices.push(bounded_length_compositions(a, coord.depth()));
        }
        for_each_product(&choices, &mut |pick| {
            let mut b = FlaggedBCM::new(level).unwrap();
            for (&coord, c) in coords.iter().zip(pick) {
                b.set(coord, (*c).clone()).unwrap();
            }
            out.push(b);
        });
    });
    out
}

/// Every `(ν, μ)`-flagged biword, built by distributing each top letter's
/// copies over (bottom letter, component) slots allowed by the flags.
/// Incompatible parameters give an empty list.
pub fn enum_flagged_biwords(nu: &MultiComposition, mu: &MultiComposition) -> Vec<FlaggedBiword> {
    if check_params(nu, mu).is_err() {
        return Vec::new();
    }
    let level = nu.level();
    let tops: Vec<(Letter, u32)> = nu.alphabet().into_iter().collect();
    let bottoms: Vec<(Letter, u32)> = mu.alphabet().into_iter().collect();

    // (top index, bottom index, component) in lexicographic order
    let slots: Vec<Vec<(usize, usize)>> = tops
        .iter()
        .map(|(x, _)| {
            bottoms
                .iter()
                .enumerate()
                .flat_map(|(yk, (y, _))| {
                    let depth = x.flag.min(y.flag) as usize;
                    (1..=depth).map(move |t| (yk, t))
                })
                .collect()
        })
        .collect();

    struct State<'a> {
        tops: &'a [(Letter, u32)],
        bottoms: &'a [(Letter, u32)],
        slots: &'a [Vec<(usize, usize)>],
        bottom_left: Vec<u32>,
        // (top, bottom, component, multiplicity)
        chosen: Vec<(usize, usize, usize, u32)>,
        level: usize,
        out: Vec<FlaggedBiword>,
    }

    fn assemble(s: &State) -> FlaggedBiword {
        let mut comps = vec![Vec::new(); s.level];
        for &(xk, yk, t, m) in &s.chosen {
            let pair = (s.tops[xk].0, s.bottoms[yk].0);
            comps[t - 1].extend(std::iter::repeat_n(pair, m as usize));
        }
        FlaggedBiword::new(
            comps
                .into_iter()
                .map(|c| Biword::new(c).expect("slots are visited in sorted order"))
                .collect(),
        )
        .unwrap()
    }

    fn go(s: &mut State, xk: usize, sk: usize, rem: u32) {
        if xk == s.tops.len() {
            if s.bottom_left.iter().all(|&x| x == 0) {
                let w = assemble(s);
                s.out.push(w);
            }
            return;
        }
        if sk == s.slots[xk].len() {
            if rem == 0 {
                let next = s.tops.get(xk + 1).map_or(0, |t| t.1);
                go(s, xk + 1, 0, next);
            }
            return;
        }
        let (yk, t) = s.slots[xk][sk];
        for m in (0..=rem.min(s.bottom_left[yk])).rev() {
            s.bottom_left[yk] -= m;
            if m > 0 {
                s.chosen.push((xk, yk, t, m));
            }
            go(s, xk, sk + 1, rem - m);
            if m > 0 {
                s.chosen.pop();
            }
            s.bottom_left[yk] += m;
        }
    }

    let mut state = State {
        tops: &tops,
        bottoms: &bottoms,
        slots: &slots,
        bottom_left: bottoms.iter().map(|b| b.1).collect(),
        chosen: Vec::new(),
        level,
        out: Vec::new(),
    };
    let first = tops.first().map_or(0, |t| t.1);
    go(&mut state, 0, 0, first);
    // Components are filled slot by slot, so a component's biletters arrive
    // in (top, bottom) order; the sort order of each biword is guaranteed.
    state.out
}

/// Every semistandard, flagged multitableau of shape `λ` and content `μ`.
/// Incompatible parameters give an empty list.
pub fn enum_sst(lambda: &MultiPartition, mu: &MultiComposition) -> Vec<Multitableau> {
    if lambda.level() != mu.level() || lambda.weight() != mu.weight() {
        return Vec::new();
    }
    let letters: Vec<(Letter, u32)> = mu.alphabet().into_iter().collect();
    let cells: Vec<(usize, usize, usize)> = lambda
        .components()
        .iter()
        .enumerate()
        .flat_map(|(t, shape)| {
            shape
                .parts()
                .iter()
                .enumerate()
                .flat_map(move |(r, &len)| (0..len as usize).map(move |c| (t, r, c)))
        })
        .collect();

    struct State<'a> {
        letters: &'a [(Letter, u32)],
        left: Vec<u32>,
        cells: &'a [(usize, usize, usize)],
        rows: Vec<Vec<Vec<Letter>>>,
        out: Vec<Multitableau>,
    }

    fn go(s: &mut State, k: usize) {
        if k == s.cells.len() {
            let comps = s
                .rows
                .iter()
                .map(|rows| Tableau::new(rows.clone()).unwrap())
                .collect();
            s.out.push(Multitableau::new(comps).unwrap());
            return;
        }
        let (t, r, c) = s.cells[k];
        for li in 0..s.letters.len() {
            if s.left[li] == 0 {
                continue;
            }
            let x = s.letters[li].0;
            if (x.flag as usize) < t + 1 {
                continue;
            }
            let comp = &s.rows[t];
            if c > 0 && comp[r][c - 1] > x {
                continue;
            }
            if r > 0 && comp[r - 1][c] >= x {
                continue;
            }
            s.left[li] -= 1;
            if c == 0 {
                s.rows[t].push(vec![x]);
            } else {
                s.rows[t][r].push(x);
            }
            go(s, k + 1);
            if c == 0 {
                s.rows[t].pop();
            } else {
                s.rows[t][r].pop();
            }
            s.left[li] += 1;
        }
    }

    let mut state = State {
        letters: &letters,
        left: letters.iter().map(|l| l.1).collect(),
        cells: &cells,
        rows: vec![Vec::new(); lambda.level()],
        out: Vec::new(),
    };
    go(&mut state, 0);
    state.out
}

/// Every ℕ-matrix on the index grid `1..=rows × 1..=cols` with total at
/// most `max_total`.
pub fn enum_nmatrices(rows: u32, cols: u32, max_total: u32) -> Vec<NMatrix<u32>> {
    let cells: Vec<(u32, u32)> = (1..=rows)
        .flat_map(|i| (1..=cols).map(move |j| (i, j)))
        .collect();
    fn go(
        k: usize,
        rem: u32,
        cells: &[(u32, u32)],
        cur: &mut Vec<u32>,
        out: &mut Vec<NMatrix<u32>>,
    ) {
        if k == cells.len() {
            out.push(
                cells
                    .iter()
                    .zip(cur.iter())
                    .map(|(&c, &a)| (c, a))
                    .collect(),
            );
            return;
        }
        for a in 0..=rem {
            cur.push(a);
            go(k + 1, rem - a, cells, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, max_total, &cells, &mut Vec::new(), &mut out);
    out
}
