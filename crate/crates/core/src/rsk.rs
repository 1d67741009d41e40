//! Classical Robinson–Schensted–Knuth over any totally ordered alphabet.
//!
//! Nothing here knows about flags: the level-`ℓ` maps feed flagged letters
//! straight into these functions, since insertion only ever compares letters.

use std::collections::BTreeMap;

use crate::combinatorics::Tableau;
use crate::error::{Error, Result};

/// A two-row array with lexicographically weakly increasing columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Biword<L> {
    columns: Vec<(L, L)>,
}

impl<L> Default for Biword<L> {
    fn default() -> Self {
        Biword {
            columns: Vec::new(),
        }
    }
}

impl<L: Ord + Clone> Biword<L> {
    /// Columns are `(top, bottom)` pairs and must already be sorted.
    pub fn new(columns: Vec<(L, L)>) -> Result<Self> {
        if let Some(k) = columns.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::MalformedBiword(format!(
                "columns {} and {} are out of order",
                k + 1,
                k + 2
            )));
        }
        Ok(Biword { columns })
    }

    pub fn from_unsorted(mut columns: Vec<(L, L)>) -> Self {
        columns.sort();
        Biword { columns }
    }

    /// Builds from separate top and bottom rows.
    pub fn from_rows(top: Vec<L>, bottom: Vec<L>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::MalformedBiword(format!(
                "top has {} letters, bottom has {}",
                top.len(),
                bottom.len()
            )));
        }
        Self::new(top.into_iter().zip(bottom).collect())
    }

    pub fn empty() -> Self {
        Biword::default()
    }

    pub fn columns(&self) -> &[(L, L)] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn top(&self) -> impl Iterator<Item = &L> {
        self.columns.iter().map(|(t, _)| t)
    }

    pub fn bottom(&self) -> impl Iterator<Item = &L> {
        self.columns.iter().map(|(_, b)| b)
    }

    /// Applies an order-preserving map to every letter.
    pub fn map<M: Ord + Clone>(&self, f: impl Fn(&L) -> M) -> Biword<M> {
        Biword {
            columns: self.columns.iter().map(|(t, b)| (f(t), f(b))).collect(),
        }
    }
}

/// A finitely supported matrix of nonnegative integers; zero entries are not
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NMatrix<I: Ord> {
    entries: BTreeMap<(I, I), u32>,
}

impl<I: Ord> Default for NMatrix<I> {
    fn default() -> Self {
        NMatrix {
            entries: BTreeMap::new(),
        }
    }
}

impl<I: Ord + Clone> NMatrix<I> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` to entry `(i, j)`.
    pub fn add(&mut self, i: I, j: I, count: u32) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: &I, j: &I) -> u32 {
        // BTreeMap::get needs an owned tuple key
        self.entries
            .get(&(i.clone(), j.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&I, &I, u32)> {
        self.entries.iter().map(|((i, j), &a)| (i, j, a))
    }

    pub fn total(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn row_sums(&self) -> BTreeMap<I, u32> {
        let mut out = BTreeMap::new();
        for ((i, _), &a) in &self.entries {
            *out.entry(i.clone()).or_insert(0) += a;
        }
        out
    }

    pub fn col_sums(&self) -> BTreeMap<I, u32> {
        let mut out = BTreeMap::new();
        for ((_, j), &a) in &self.entries {
            *out.entry(j.clone()).or_insert(0) += a;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        NMatrix {
            entries: self
                .entries
                .iter()
                .map(|((i, j), &a)| ((j.clone(), i.clone()), a))
                .collect(),
        }
    }
}

impl<I: Ord + Clone> FromIterator<((I, I), u32)> for NMatrix<I> {
    fn from_iter<T: IntoIterator<Item = ((I, I), u32)>>(iter: T) -> Self {
        let mut m = NMatrix::new();
        for ((i, j), a) in iter {
            m.add(i, j, a);
        }
        m
    }
}

/// Biletter `(i / j)` repeated `a_ij` times, in sorted order.
pub fn biword_from_matrix<I: Ord + Clone>(a: &NMatrix<I>) -> Biword<I> {
    let columns = a
        .entries()
        .flat_map(|(i, j, m)| std::iter::repeat_n((i.clone(), j.clone()), m as usize))
        .collect();
    // BTreeMap iteration is already lexicographic in (i, j).
    Biword { columns }
}

pub fn matrix_from_biword<I: Ord + Clone>(w: &Biword<I>) -> NMatrix<I> {
    let mut m = NMatrix::new();
    for (i, j) in w.columns() {
        m.add(i.clone(), j.clone(), 1);
    }
    m
}

impl<L: Ord + Clone> Tableau<L> {
    /// Schensted row insertion. Returns the 1-based `(row, column)` of the
    /// new cell.
    pub fn row_insert(&mut self, x: L) -> (usize, usize) {
        let rows = self.rows_mut();
        let mut carry = x;
        for (r, row) in rows.iter_mut().enumerate() {
            let k = row.partition_point(|y| *y <= carry);
            if k == row.len() {
                row.push(carry);
                return (r + 1, k + 1);
            }
            carry = std::mem::replace(&mut row[k], carry);
        }
        rows.push(vec![carry]);
        (rows.len(), 1)
    }

    /// Undoes the insertion that created the corner at `row` (1-based) and
    /// returns the letter bumped out of the first row.
    fn reverse_bump(&mut self, row: usize) -> L {
        let rows = self.rows_mut();
        let mut carry = rows[row - 1].pop().expect("reverse bump from an empty row");
        if rows[row - 1].is_empty() {
            rows.pop();
        }
        for r in (0..row - 1).rev() {
            let upper = &mut rows[r];
            let k = upper.partition_point(|y| *y < carry);
            // column strictness guarantees k > 0
            carry = std::mem::replace(&mut upper[k - 1], carry);
        }
        carry
    }
}

pub fn row_insert<L: Ord + Clone>(t: &Tableau<L>, x: L) -> (Tableau<L>, (usize, usize)) {
    let mut out = t.clone();
    let cell = out.row_insert(x);
    (out, cell)
}

/// Inserts the bottom row into `P`, recording each new cell in `Q` with the
/// matching top letter.
pub fn rsk<L: Ord + Clone>(w: &Biword<L>) -> (Tableau<L>, Tableau<L>) {
    let mut p = Tableau::empty();
    let mut q: Tableau<L> = Tableau::empty();
    for (top, bottom) in w.columns() {
        let (r, _) = p.row_insert(bottom.clone());
        let rows = q.rows_mut();
        if r > rows.len() {
            rows.push(Vec::new());
        }
        rows[r - 1].push(top.clone());
    }
    (p, q)
}

pub fn rsk_inverse<L: Ord + Clone>(p: &Tableau<L>, q: &Tableau<L>) -> Result<Biword<L>> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch {
            left: p.shape().parts().to_vec(),
            right: q.shape().parts().to_vec(),
        });
    }
    p.check_semistandard()?;
    q.check_semistandard()?;

    let mut p = p.clone();
    let mut q = q.clone();
    let mut columns = Vec::with_capacity(p.size());
    while !q.is_empty() {
        // The largest Q entry, rightmost among ties, sits at the end of the
        // longest row whose last entry is maximal.
        let row = {
            let rows = q.rows();
            let max = rows.iter().filter_map(|r| r.last()).max().unwrap();
            rows.iter()
                .enumerate()
                .filter(|(_, r)| r.last() == Some(max))
                .max_by_key(|(_, r)| r.len())
                .map(|(k, _)| k + 1)
                .unwrap()
        };
        let rows = q.rows_mut();
        let top = rows[row - 1].pop().unwrap();
        if rows[row - 1].is_empty() {
            rows.pop();
        }
        let bottom = p.reverse_bump(row);
        columns.push((top, bottom));
    }
    columns.reverse();
    Biword::new(columns)
}

/// Order-preserving relabeling of every letter occurring in `w` (top and
/// bottom jointly) onto `1..=k`. Returns the relabeled biword and the
/// preimage of each label, so `preimages[label - 1]` recovers the letter.
pub fn relabel<L: Ord + Clone>(w: &Biword<L>) -> (Biword<u32>, Vec<L>) {
    let mut letters: Vec<L> = w.top().chain(w.bottom()).cloned().collect();
    letters.sort();
    letters.dedup();
    let label = |x: &L| letters.binary_search(x).unwrap() as u32 + 1;
    let relabeled = Biword {
        columns: w
            .columns()
            .iter()
            .map(|(t, b)| (label(t), label(b)))
            .collect(),
    };
    (relabeled, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Letter;

    fn l(a: u32, b: u32) -> Letter {
        Letter::new(a, b)
    }

    fn t<L: Ord + Clone>(rows: Vec<Vec<L>>) -> Tableau<L> {
        Tableau::new(rows).unwrap()
    }

    #[test]
    fn matrix_to_biword() {
        let a: NMatrix<u32> = [((1, 2), 2), ((2, 1), 1)].into_iter().collect();
        let w = biword_from_matrix(&a);
        assert_eq!(w.columns(), &[(1, 2), (1, 2), (2, 1)]);
        assert_eq!(matrix_from_biword(&w), a);

        assert!(biword_from_matrix(&NMatrix::<u32>::new()).is_empty());
        let one: NMatrix<u32> = [((1, 1), 1)].into_iter().collect();
        assert_eq!(biword_from_matrix(&one).columns(), &[(1, 1)]);
    }

    #[test]
    fn biword_to_matrix() {
        let w = Biword::new(vec![(l(1, 3), l(1, 3)), (l(2, 3), l(2, 3))]).unwrap();
        let m = matrix_from_biword(&w);
        assert_eq!(m.get(&l(1, 3), &l(1, 3)), 1);
        assert_eq!(m.get(&l(2, 3), &l(2, 3)), 1);
        assert_eq!(m.total(), 2);

        assert_eq!(matrix_from_biword(&Biword::<u32>::empty()).total(), 0);
        let w = Biword::new(vec![(1u32, 1u32), (1, 1)]).unwrap();
        assert_eq!(matrix_from_biword(&w).get(&1, &1), 2);
    }

    #[test]
    fn unsorted_biword_is_rejected() {
        assert!(matches!(
            Biword::new(vec![(2u32, 1u32), (1, 1)]),
            Err(Error::MalformedBiword(_))
        ));
        assert!(matches!(
            Biword::new(vec![(1u32, 2u32), (1, 1)]),
            Err(Error::MalformedBiword(_))
        ));
        assert!(Biword::from_rows(vec![1u32], vec![]).is_err());
    }

    #[test]
    fn row_insertion() {
        let (out, cell) = row_insert(&t(vec![vec![1u32, 1, 1], vec![4]]), 1);
        assert_eq!(out, t(vec![vec![1, 1, 1, 1], vec![4]]));
        assert_eq!(cell, (1, 4));

        let (out, cell) = row_insert(&Tableau::empty(), l(2, 2));
        assert_eq!(out, t(vec![vec![l(2, 2)]]));
        assert_eq!(cell, (1, 1));

        let (out, cell) = row_insert(&t(vec![vec![1u32, 1, 1]]), 3);
        assert_eq!(out, t(vec![vec![1, 1, 1, 3]]));
        assert_eq!(cell, (1, 4));

        // bump cascades into a new row
        let (out, cell) = row_insert(&t(vec![vec![1u32, 1, 1, 4]]), 3);
        assert_eq!(out, t(vec![vec![1, 1, 1, 3], vec![4]]));
        assert_eq!(cell, (2, 1));
    }

    #[test]
    fn relabeled_component_two() {
        let w = Biword::from_rows(
            vec![l(1, 2), l(1, 2), l(1, 2), l(1, 3), l(2, 3)],
            vec![l(1, 2), l(1, 2), l(1, 2), l(3, 3), l(2, 3)],
        )
        .unwrap();
        let (relabeled, pre) = relabel(&w);
        assert_eq!(
            relabeled.top().copied().collect::<Vec<_>>(),
            vec![1, 1, 1, 2, 3]
        );
        assert_eq!(
            relabeled.bottom().copied().collect::<Vec<_>>(),
            vec![1, 1, 1, 4, 3]
        );

        let (p, q) = rsk(&relabeled);
        assert_eq!(p, t(vec![vec![1, 1, 1, 3], vec![4]]));
        assert_eq!(q, t(vec![vec![1, 1, 1, 2], vec![3]]));

        let back = |x: &u32| pre[*x as usize - 1];
        let (pf, qf) = rsk(&w);
        assert_eq!(p.map(back), pf);
        assert_eq!(q.map(back), qf);
        assert_eq!(
            pf,
            t(vec![
                vec![l(1, 2), l(1, 2), l(1, 2), l(2, 3)],
                vec![l(3, 3)]
            ])
        );
        assert_eq!(
            qf,
            t(vec![
                vec![l(1, 2), l(1, 2), l(1, 2), l(1, 3)],
                vec![l(2, 3)]
            ])
        );
    }

    #[test]
    fn rsk_component_one_of_worked_example() {
        let w = Biword::from_rows(
            vec![l(1, 1), l(1, 1), l(2, 1), l(3, 1), l(3, 1), l(2, 3)],
            vec![l(2, 1), l(2, 1), l(1, 3), l(1, 1), l(3, 3), l(2, 1)],
        )
        .unwrap();
        let (p, q) = rsk(&w);
        assert_eq!(
            p,
            t(vec![
                vec![l(1, 1), l(2, 1), l(2, 1), l(3, 3)],
                vec![l(2, 1), l(1, 3)]
            ])
        );
        assert_eq!(
            q,
            t(vec![
                vec![l(1, 1), l(1, 1), l(2, 1), l(3, 1)],
                vec![l(3, 1), l(2, 3)]
            ])
        );
        assert_eq!(rsk_inverse(&p, &q).unwrap(), w);
    }

    #[test]
    fn rsk_of_empty() {
        let (p, q) = rsk(&Biword::<u32>::empty());
        assert!(p.is_empty() && q.is_empty());
        assert!(rsk_inverse(&p, &q).unwrap().is_empty());
    }

    #[test]
    fn inverse_examples() {
        let w = rsk_inverse(
            &t(vec![vec![l(1, 2), l(2, 3)]]),
            &t(vec![vec![l(2, 2), l(1, 3)]]),
        )
        .unwrap();
        assert_eq!(w.columns(), &[(l(2, 2), l(1, 2)), (l(1, 3), l(2, 3))]);

        let w = rsk_inverse(
            &t(vec![vec![l(1, 3), l(1, 3)], vec![l(3, 3)]]),
            &t(vec![vec![l(1, 3), l(2, 3)], vec![l(2, 3)]]),
        )
        .unwrap();
        assert_eq!(
            w.columns(),
            &[(l(1, 3), l(3, 3)), (l(2, 3), l(1, 3)), (l(2, 3), l(1, 3))]
        );
    }

    #[test]
    fn inverse_rejects_bad_input() {
        let p = t(vec![vec![1u32, 2]]);
        let q = t(vec![vec![1u32], vec![2]]);
        assert!(matches!(
            rsk_inverse(&p, &q),
            Err(Error::ShapeMismatch { .. })
        ));
        let bad = t(vec![vec![2u32, 1]]);
        assert!(matches!(
            rsk_inverse(&bad, &p),
            Err(Error::NotSemistandard { .. })
        ));
    }
}
