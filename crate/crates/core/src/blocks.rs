//! `ℓ × ℓ` block matrices: plain, partition-decorated, and composition-valued.
//!
//! Storage is sparse, keyed by [`Coord`]; absent entries are zero (or the
//! empty partition/composition). Construction only checks that coordinates
//! lie inside the block grid. The bound and flag conditions are checked by
//! the `validate` methods so that invalid data can be reported in full.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::{Composition, MultiComposition, Partition};
use crate::error::{Error, Result};

/// Entry `(i, j)` of block `(p, q)`, all 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coord {
    pub p: usize,
    pub q: usize,
    pub i: usize,
    pub j: usize,
}

impl Coord {
    pub const fn new(p: usize, q: usize, i: usize, j: usize) -> Self {
        Coord { p, q, i, j }
    }

    /// `min(p, q)`, the number of biword components this entry feeds.
    pub fn depth(&self) -> usize {
        self.p.min(self.q)
    }

    fn check(&self, level: usize) -> Result<()> {
        let ok = (1..=level).contains(&self.p)
            && (1..=level).contains(&self.q)
            && self.i >= 1
            && self.j >= 1;
        if ok {
            Ok(())
        } else {
            Err(Error::Invalid(vec![Violation::OutOfRange {
                coord: *self,
                level,
            }]))
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(p={}, q={}, i={}, j={})",
            self.p, self.q, self.i, self.j
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OutOfRange {
        coord: Coord,
        level: usize,
    },
    /// A decoration's largest part exceeds its entry.
    Bound {
        coord: Coord,
        largest: u32,
        entry: u32,
    },
    /// A decoration or composition is longer than its block allows.
    Flag {
        coord: Coord,
        length: usize,
        max: usize,
    },
    /// Block row or column sums differ from the prescribed multicomposition.
    Sums {
        axis: &'static str,
        expected: String,
        found: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { coord, level } => {
                write!(f, "{coord} lies outside the level-{level} block grid")
            }
            Violation::Bound {
                coord,
                largest,
                entry,
            } => write!(f, "{coord}: largest part {largest} exceeds entry {entry}"),
            Violation::Flag { coord, length, max } => {
                write!(f, "{coord}: length {length} exceeds {max}")
            }
            Violation::Sums {
                axis,
                expected,
                found,
            } => write!(f, "{axis} sums are {found}, expected {expected}"),
        }
    }
}

fn sums(level: usize, cells: impl Iterator<Item = (usize, usize, u32)>) -> MultiComposition {
    let mut raw = vec![Vec::<u32>::new(); level];
    for (block, idx, a) in cells {
        let comp = &mut raw[block - 1];
        if comp.len() < idx {
            comp.resize(idx, 0);
        }
        comp[idx - 1] += a;
    }
    MultiComposition::new(raw.into_iter().map(Composition::trimmed).collect())
        .expect("level is positive")
}

/// An `ℓ × ℓ` block matrix of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockNMatrix {
    level: usize,
    entries: BTreeMap<Coord, u32>,
}

impl BlockNMatrix {
    pub fn new(level: usize) -> Result<Self> {
        if level == 0 {
            return Err(Error::ZeroLevel);
        }
        Ok(BlockNMatrix {
            level,
            entries: BTreeMap::new(),
        })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn set(&mut self, coord: Coord, a: u32) -> Result<()> {
        coord.check(self.level)?;
        if a == 0 {
            self.entries.remove(&coord);
        } else {
            self.entries.insert(coord, a);
        }
        Ok(())
    }

    pub fn get(&self, coord: &Coord) -> u32 {
        self.entries.get(coord).copied().unwrap_or(0)
    }

    /// Nonzero entries in coordinate order.
    pub fn entries(&self) -> impl Iterator<Item = (Coord, u32)> + '_ {
        self.entries.iter().map(|(&c, &a)| (c, a))
    }

    pub fn total(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn row_sum(&self) -> MultiComposition {
        sums(self.level, self.entries().map(|(c, a)| (c.p, c.i, a)))
    }

    pub fn col_sum(&self) -> MultiComposition {
        sums(self.level, self.entries().map(|(c, a)| (c.q, c.j, a)))
    }
}

pub fn block_row_sum(a: &BlockNMatrix) -> MultiComposition {
    a.row_sum()
}

pub fn block_col_sum(a: &BlockNMatrix) -> MultiComposition {
    a.col_sum()
}

/// A block ℕ-matrix with a partition decorating each entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParMatFlat {
    matrix: BlockNMatrix,
    decorations: BTreeMap<Coord, Partition>,
}

impl ParMatFlat {
    pub fn new(level: usize) -> Result<Self> {
        Ok(ParMatFlat {
            matrix: BlockNMatrix::new(level)?,
            decorations: BTreeMap::new(),
        })
    }

    pub fn level(&self) -> usize {
        self.matrix.level
    }

    pub fn matrix(&self) -> &BlockNMatrix {
        &self.matrix
    }

    /// Sets both the matrix entry and its decoration.
    pub fn set(&mut self, coord: Coord, a: u32, eta: Partition) -> Result<()> {
        self.matrix.set(coord, a)?;
        if eta.is_empty() {
            self.decorations.remove(&coord);
        } else {
            self.decorations.insert(coord, eta);
        }
        Ok(())
    }

    pub fn decoration(&self, coord: &Coord) -> Partition {
        self.decorations.get(coord).cloned().unwrap_or_default()
    }

    /// Every coordinate carrying a nonzero entry or a nonempty decoration,
    /// in coordinate order.
    pub fn entries(&self) -> Vec<(Coord, u32, Partition)> {
        let mut coords: Vec<Coord> = self
            .matrix
            .entries
            .keys()
            .chain(self.decorations.keys())
            .copied()
            .collect();
        coords.sort();
        coords.dedup();
        coords
            .into_iter()
            .map(|c| (c, self.matrix.get(&c), self.decoration(&c)))
            .collect()
    }

    pub fn row_sum(&self) -> MultiComposition {
        self.matrix.row_sum()
    }

    pub fn col_sum(&self) -> MultiComposition {
        self.matrix.col_sum()
    }

    /// Every bound and flag violation, in coordinate order.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (coord, a, eta) in self.entries() {
            if eta.largest() > a {
                out.push(Violation::Bound {
                    coord,
                    largest: eta.largest(),
                    entry: a,
                });
            }
            let max = coord.depth() - 1;
            if eta.len() > max {
                out.push(Violation::Flag {
                    coord,
                    length: eta.len(),
                    max,
                });
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(v))
        }
    }

    /// Same entries viewed at level `level + extra`.
    pub fn extended(&self, extra: usize) -> Self {
        let mut out = self.clone();
        out.matrix.level += extra;
        out
    }
}

pub fn validate_parmat(x: &ParMatFlat) -> std::result::Result<(), Vec<Violation>> {
    let v = x.violations();
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}

/// A flagged block composition matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlaggedBCM {
    level: usize,
    entries: BTreeMap<Coord, Composition>,
}

impl FlaggedBCM {
    pub fn new(level: usize) -> Result<Self> {
        if level == 0 {
            return Err(Error::ZeroLevel);
        }
        Ok(FlaggedBCM {
            level,
            entries: BTreeMap::new(),
        })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn set(&mut self, coord: Coord, b: Composition) -> Result<()> {
        coord.check(self.level)?;
        if b.is_empty() {
            self.entries.remove(&coord);
        } else {
            self.entries.insert(coord, b);
        }
        Ok(())
    }

    pub fn get(&self, coord: &Coord) -> Composition {
        self.entries.get(coord).cloned().unwrap_or_default()
    }

    /// Nonempty entries in coordinate order.
    pub fn entries(&self) -> impl Iterator<Item = (Coord, &Composition)> + '_ {
        self.entries.iter().map(|(&c, b)| (c, b))
    }

    pub fn row_sum(&self) -> MultiComposition {
        sums(
            self.level,
            self.entries().map(|(c, b)| (c.p, c.i, b.weight())),
        )
    }

    pub fn col_sum(&self) -> MultiComposition {
        sums(
            self.level,
            self.entries().map(|(c, b)| (c.q, c.j, b.weight())),
        )
    }

    pub fn violations(&self) -> Vec<Violation> {
        self.entries()
            .filter(|(c, b)| b.len() > c.depth())
            .map(|(coord, b)| Violation::Flag {
                coord,
                length: b.len(),
                max: coord.depth(),
            })
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(v))
        }
    }

    pub fn extended(&self, extra: usize) -> Self {
        let mut out = self.clone();
        out.level += extra;
        out
    }
}

/// Compositions are canonical by construction, so only the flag condition
/// can fail here.
pub fn validate_bcm(x: &FlaggedBCM) -> std::result::Result<(), Vec<Violation>> {
    let v = x.violations();
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}

/// Checks prescribed block row and column sums.
pub fn check_sums(
    row: &MultiComposition,
    col: &MultiComposition,
    nu: &MultiComposition,
    mu: &MultiComposition,
) -> Vec<Violation> {
    let mut out = Vec::new();
    if row != nu {
        out.push(Violation::Sums {
            axis: "row",
            expected: nu.to_string(),
            found: row.to_string(),
        });
    }
    if col != mu {
        out.push(Violation::Sums {
            axis: "column",
            expected: mu.to_string(),
            found: col.to_string(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn mc(v: Vec<Vec<u32>>) -> MultiComposition {
        MultiComposition::from_parts(v).unwrap()
    }

    #[test]
    fn sums_of_worked_example() {
        let x = fixtures::example_parmat();
        assert_eq!(
            block_row_sum(x.matrix()),
            mc(vec![vec![2, 1, 2], vec![3], vec![2, 3]])
        );
        assert_eq!(
            block_col_sum(x.matrix()),
            mc(vec![vec![1, 3], vec![3], vec![2, 2, 2]])
        );

        let b = fixtures::example_bcm();
        assert_eq!(b.row_sum(), mc(vec![vec![2, 1, 2], vec![3], vec![2, 3]]));
        assert_eq!(b.col_sum(), mc(vec![vec![1, 3], vec![3], vec![2, 2, 2]]));

        let empty = BlockNMatrix::new(3).unwrap();
        assert_eq!(empty.row_sum(), MultiComposition::empty(3).unwrap());
        assert_eq!(empty.col_sum(), MultiComposition::empty(3).unwrap());
    }

    #[test]
    fn parmat_validation() {
        assert_eq!(validate_parmat(&fixtures::example_parmat()), Ok(()));

        let mut x = ParMatFlat::new(3).unwrap();
        let c = Coord::new(1, 1, 1, 1);
        x.set(c, 1, Partition::new(vec![1]).unwrap()).unwrap();
        assert_eq!(
            validate_parmat(&x),
            Err(vec![Violation::Flag {
                coord: c,
                length: 1,
                max: 0
            }])
        );

        let mut x = ParMatFlat::new(2).unwrap();
        let c = Coord::new(2, 2, 1, 1);
        x.set(c, 3, Partition::new(vec![4]).unwrap()).unwrap();
        assert_eq!(
            validate_parmat(&x),
            Err(vec![Violation::Bound {
                coord: c,
                largest: 4,
                entry: 3
            }])
        );
    }

    #[test]
    fn bcm_validation() {
        assert_eq!(validate_bcm(&fixtures::example_bcm()), Ok(()));

        let mut b = FlaggedBCM::new(3).unwrap();
        let c = Coord::new(1, 3, 1, 1);
        b.set(c, Composition::new(vec![0, 0, 1]).unwrap()).unwrap();
        assert_eq!(
            validate_bcm(&b),
            Err(vec![Violation::Flag {
                coord: c,
                length: 3,
                max: 1
            }])
        );

        let empty = FlaggedBCM::new(3).unwrap();
        assert_eq!(validate_bcm(&empty), Ok(()));
        assert_eq!(empty.row_sum().weight(), 0);
        assert_eq!(empty.col_sum().weight(), 0);
    }

    #[test]
    fn coordinates_outside_the_grid_are_rejected() {
        let mut x = BlockNMatrix::new(2).unwrap();
        assert!(x.set(Coord::new(3, 1, 1, 1), 1).is_err());
        assert!(x.set(Coord::new(1, 1, 0, 1), 1).is_err());
        assert!(BlockNMatrix::new(0).is_err());
    }

    #[test]
    fn level_one_bcm_is_a_plain_matrix() {
        let mut b = FlaggedBCM::new(1).unwrap();
        b.set(Coord::new(1, 1, 1, 1), Composition::new(vec![3]).unwrap())
            .unwrap();
        assert!(b.validate().is_ok());
        b.set(
            Coord::new(1, 1, 1, 2),
            Composition::new(vec![0, 1]).unwrap(),
        )
        .unwrap();
        assert!(b.validate().is_err());
    }
}
