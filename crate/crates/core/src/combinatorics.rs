//! Compositions, partitions, the flagged alphabet and (multi)tableaux.
//!
//! Every value here is immutable once built. Constructors enforce the
//! structural invariants (canonical compositions, weakly decreasing positive
//! partitions, Ferrers-shaped tableaux) while order conditions such as
//! semistandardness or flagging are exposed as separate checks so that
//! malformed user data can be diagnosed rather than rejected wholesale.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A letter `a_b` of the flagged alphabet.
///
/// Letters are ordered flag-major: `1_1 < 2_1 < 3_1 < ... < 1_2 < 2_2 < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub value: u32,
    pub flag: u32,
}

impl Letter {
    pub const fn new(value: u32, flag: u32) -> Self {
        Letter { value, flag }
    }

    pub fn is_valid(&self) -> bool {
        self.value >= 1 && self.flag >= 1
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.flag
            .cmp(&other.flag)
            .then(self.value.cmp(&other.value))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.flag)
    }
}

pub fn letter_compare(x: Letter, y: Letter) -> Ordering {
    x.cmp(&y)
}

/// A composition of nonnegative parts, stored without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Rejects a trailing zero part.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.last() == Some(&0) {
            return Err(Error::NonCanonicalComposition(parts));
        }
        Ok(Composition { parts })
    }

    /// Strips trailing zeros instead of rejecting them.
    pub fn trimmed(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition { parts }
    }

    pub fn empty() -> Self {
        Composition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `t`-th part (1-based), zero past the end.
    pub fn part(&self, t: usize) -> u32 {
        if t == 0 {
            return 0;
        }
        self.parts.get(t - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// An integer partition: positive, weakly decreasing parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&x| x > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `t`-th part (1-based), zero past the end.
    pub fn part(&self, t: usize) -> u32 {
        if t == 0 {
            return 0;
        }
        self.parts.get(t - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "()");
    }
    write!(f, "(")?;
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// Maps a partition with largest part at most `bound` to a composition of
/// `bound` by taking successive differences, with `bound` prepended and an
/// implicit trailing zero appended.
///
/// `(3), 3 -> (0,3)`, `(2,1), 2 -> (0,1,1)`, `(), 2 -> (2)`, `(), 0 -> ()`.
pub fn partition_to_bounded_composition(eta: &Partition, bound: u32) -> Result<Composition> {
    if eta.largest() > bound {
        return Err(Error::BoundViolation {
            largest: eta.largest(),
            bound,
        });
    }
    if bound == 0 {
        return Ok(Composition::empty());
    }
    let parts = (1..=eta.len() + 1)
        .map(|t| {
            let prev = if t == 1 { bound } else { eta.part(t - 1) };
            prev - eta.part(t)
        })
        .collect();
    Ok(Composition { parts })
}

/// Inverse of [`partition_to_bounded_composition`]: returns the weight of `c`
/// and the partition of tail sums.
pub fn bounded_composition_to_partition(c: &Composition) -> (u32, Partition) {
    let bound = c.weight();
    let mut parts = Vec::with_capacity(c.len().saturating_sub(1));
    let mut tail = 0;
    for &x in c.parts().iter().skip(1).rev() {
        tail += x;
        parts.push(tail);
    }
    parts.reverse();
    // Tail sums of a canonical composition are positive and weakly decreasing.
    (bound, Partition { parts })
}

/// A multiset of letters, keyed in alphabet order.
pub type LetterMultiset = BTreeMap<Letter, u32>;

/// Total size of a letter multiset.
pub fn multiset_size(m: &LetterMultiset) -> u32 {
    m.values().sum()
}

/// An `ℓ`-tuple of canonical compositions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiComposition {
    components: Vec<Composition>,
}

impl MultiComposition {
    pub fn new(components: Vec<Composition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::ZeroLevel);
        }
        Ok(MultiComposition { components })
    }

    /// Builds from raw part lists, rejecting trailing zeros.
    pub fn from_parts(parts: Vec<Vec<u32>>) -> Result<Self> {
        let comps = parts
            .into_iter()
            .map(Composition::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn empty(level: usize) -> Result<Self> {
        Self::new(vec![Composition::empty(); level])
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Composition] {
        &self.components
    }

    /// Component `b` (1-based).
    pub fn component(&self, b: usize) -> &Composition {
        &self.components[b - 1]
    }

    pub fn weight(&self) -> u32 {
        self.components.iter().map(Composition::weight).sum()
    }

    /// The `μ`-alphabet: letter `a_b` with multiplicity `μ^(b)_a`.
    pub fn alphabet(&self) -> LetterMultiset {
        let mut out = LetterMultiset::new();
        for (b, comp) in self.components.iter().enumerate() {
            for (a, &m) in comp.parts().iter().enumerate() {
                if m > 0 {
                    out.insert(Letter::new(a as u32 + 1, b as u32 + 1), m);
                }
            }
        }
        out
    }

    /// Recovers the canonical multicomposition whose alphabet is `letters`.
    pub fn from_alphabet(level: usize, letters: &LetterMultiset) -> Result<Self> {
        if level == 0 {
            return Err(Error::ZeroLevel);
        }
        let mut raw = vec![Vec::<u32>::new(); level];
        for (&x, &m) in letters {
            if !x.is_valid() {
                return Err(Error::InvalidLetter(x));
            }
            let b = x.flag as usize;
            if b > level {
                return Err(Error::LevelMismatch {
                    left: b,
                    right: level,
                });
            }
            let comp = &mut raw[b - 1];
            let a = x.value as usize;
            if comp.len() < a {
                comp.resize(a, 0);
            }
            comp[a - 1] += m;
        }
        Self::new(raw.into_iter().map(Composition::trimmed).collect())
    }

    /// Appends `extra` empty components.
    pub fn extended(&self, extra: usize) -> Self {
        let mut components = self.components.clone();
        components.extend(std::iter::repeat_n(Composition::empty(), extra));
        MultiComposition { components }
    }
}

impl fmt::Display for MultiComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn mu_alphabet(mu: &MultiComposition) -> LetterMultiset {
    mu.alphabet()
}

/// An `ℓ`-tuple of partitions, any of which may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::ZeroLevel);
        }
        Ok(MultiPartition { components })
    }

    pub fn from_parts(parts: Vec<Vec<u32>>) -> Result<Self> {
        let comps = parts
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn weight(&self) -> u32 {
        self.components.iter().map(Partition::weight).sum()
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A filling of a Ferrers diagram, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau<L = Letter> {
    rows: Vec<Vec<L>>,
}

impl<L> Default for Tableau<L> {
    fn default() -> Self {
        Tableau { rows: Vec::new() }
    }
}

impl<L: Ord + Clone> Tableau<L> {
    /// Rows must be nonempty and weakly decreasing in length.
    pub fn new(rows: Vec<Vec<L>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::MalformedTableau("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::MalformedTableau(
                "row lengths are not weakly decreasing".into(),
            ));
        }
        Ok(Tableau { rows })
    }

    /// Like [`Tableau::new`] but also checks the rows against a declared shape.
    pub fn with_shape(shape: &Partition, rows: Vec<Vec<L>>) -> Result<Self> {
        let lens: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        if lens != shape.parts() {
            return Err(Error::MalformedTableau(format!(
                "row lengths {lens:?} do not match shape {shape}"
            )));
        }
        Self::new(rows)
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<L>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<L>> {
        &mut self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(|r| r.len() as u32).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &L> {
        self.rows.iter().flatten()
    }

    /// Reports the first cell (1-based) where a row or column condition fails.
    pub fn check_semistandard(&self) -> Result<()> {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                let row_ok = row.get(c + 1).is_none_or(|y| x <= y);
                let col_ok = self
                    .rows
                    .get(r + 1)
                    .and_then(|below| below.get(c))
                    .is_none_or(|y| x < y);
                if !(row_ok && col_ok) {
                    return Err(Error::NotSemistandard {
                        row: r + 1,
                        col: c + 1,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_semistandard(&self) -> bool {
        self.check_semistandard().is_ok()
    }

    pub fn map<M: Ord + Clone>(&self, f: impl Fn(&L) -> M) -> Tableau<M> {
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }
}

pub fn tableau_is_semistandard<L: Ord + Clone>(t: &Tableau<L>) -> bool {
    t.is_semistandard()
}

impl<L: fmt::Display> fmt::Display for Tableau<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, " / ")?;
            }
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

/// An `ℓ`-tuple of tableaux over the flagged alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multitableau {
    components: Vec<Tableau<Letter>>,
}

impl Multitableau {
    pub fn new(components: Vec<Tableau<Letter>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::ZeroLevel);
        }
        Ok(Multitableau { components })
    }

    pub fn empty(level: usize) -> Result<Self> {
        Self::new(vec![Tableau::empty(); level])
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Tableau<Letter>] {
        &self.components
    }

    pub fn shape(&self) -> MultiPartition {
        MultiPartition {
            components: self.components.iter().map(Tableau::shape).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Tableau::size).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = &Letter> {
        self.components.iter().flat_map(Tableau::entries)
    }

    /// Multiset of all entries across components.
    pub fn letters(&self) -> LetterMultiset {
        let mut out = LetterMultiset::new();
        for &x in self.entries() {
            *out.entry(x).or_insert(0) += 1;
        }
        out
    }

    /// The content `μ`: the unique canonical multicomposition whose alphabet
    /// is the multiset of entries.
    pub fn content(&self) -> Result<MultiComposition> {
        MultiComposition::from_alphabet(self.level(), &self.letters())
    }

    /// The first entry (component, letter) that breaks the flagging
    /// condition, if any.
    pub fn flagging_violation(&self) -> Option<(usize, Letter)> {
        self.components.iter().enumerate().find_map(|(i, t)| {
            t.entries()
                .find(|x| (x.flag as usize) < i + 1)
                .map(|&x| (i + 1, x))
        })
    }

    pub fn check_flagging(&self) -> bool {
        self.flagging_violation().is_none()
    }

    pub fn is_semistandard(&self) -> bool {
        self.components.iter().all(Tableau::is_semistandard)
    }

    /// Semistandard components, valid letters and flagging.
    pub fn validate(&self) -> Result<()> {
        for t in &self.components {
            t.check_semistandard()?;
            if let Some(&x) = t.entries().find(|x| !x.is_valid()) {
                return Err(Error::InvalidLetter(x));
            }
        }
        if let Some((component, letter)) = self.flagging_violation() {
            return Err(Error::Flagging { component, letter });
        }
        Ok(())
    }

    /// Appends `extra` empty components.
    pub fn extended(&self, extra: usize) -> Self {
        let mut components = self.components.clone();
        components.extend(std::iter::repeat_n(Tableau::empty(), extra));
        Multitableau { components }
    }
}

pub fn multitableau_content(t: &Multitableau) -> Result<MultiComposition> {
    t.content()
}

pub fn multitableau_check_flagging(t: &Multitableau) -> bool {
    t.check_flagging()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(a: u32, b: u32) -> Letter {
        Letter::new(a, b)
    }

    fn example_r() -> Multitableau {
        Multitableau::new(vec![
            Tableau::new(vec![
                vec![l(1, 1), l(2, 1), l(2, 1)],
                vec![l(2, 1), l(1, 2)],
            ])
            .unwrap(),
            Tableau::new(vec![vec![l(2, 2), l(1, 3)]]).unwrap(),
            Tableau::new(vec![vec![l(1, 3), l(2, 3)], vec![l(2, 3)]]).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn alphabet_of_worked_example() {
        let mu = MultiComposition::from_parts(vec![vec![2, 3], vec![1], vec![2, 1, 1]]).unwrap();
        let got = mu_alphabet(&mu);
        let want: LetterMultiset = [
            (l(1, 1), 2),
            (l(2, 1), 3),
            (l(1, 2), 1),
            (l(1, 3), 2),
            (l(2, 3), 1),
            (l(3, 3), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
        assert_eq!(multiset_size(&got), mu.weight());
    }

    #[test]
    fn alphabet_edge_cases() {
        let empty = MultiComposition::empty(3).unwrap();
        assert!(mu_alphabet(&empty).is_empty());
        let mu = MultiComposition::from_parts(vec![vec![0, 1], vec![]]).unwrap();
        let got: Vec<_> = mu_alphabet(&mu).into_iter().collect();
        assert_eq!(got, vec![(l(2, 1), 1)]);
    }

    #[test]
    fn letter_order() {
        assert_eq!(letter_compare(l(2, 1), l(1, 2)), Ordering::Less);
        assert_eq!(letter_compare(l(1, 3), l(1, 3)), Ordering::Equal);
        assert_eq!(letter_compare(l(3, 3), l(2, 3)), Ordering::Greater);
    }

    #[test]
    fn letter_order_is_total_on_small_grid() {
        let letters: Vec<Letter> = (1..=5)
            .flat_map(|b| (1..=5).map(move |a| l(a, b)))
            .collect();
        for &x in &letters {
            for &y in &letters {
                let xy = letter_compare(x, y);
                assert_eq!(xy.reverse(), letter_compare(y, x));
                assert_eq!(xy == Ordering::Equal, x == y);
                for &z in &letters {
                    if xy != Ordering::Greater && letter_compare(y, z) != Ordering::Greater {
                        assert_ne!(letter_compare(x, z), Ordering::Greater);
                    }
                }
            }
        }
        // the list above was generated in increasing order
        assert!(letters.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn semistandard_checks() {
        let r = example_r();
        let t = &r.components()[0];
        assert!(tableau_is_semistandard(t));
        let bad = Tableau::new(vec![vec![l(1, 1)], vec![l(1, 1)]]).unwrap();
        assert!(!bad.is_semistandard());
        assert_eq!(
            bad.check_semistandard(),
            Err(Error::NotSemistandard { row: 1, col: 1 })
        );
        assert!(Tableau::<Letter>::empty().is_semistandard());
    }

    #[test]
    fn malformed_tableaux_are_rejected() {
        assert!(matches!(
            Tableau::new(vec![vec![1], vec![1, 2]]),
            Err(Error::MalformedTableau(_))
        ));
        assert!(matches!(
            Tableau::<u32>::new(vec![vec![]]),
            Err(Error::MalformedTableau(_))
        ));
        let shape = Partition::new(vec![2]).unwrap();
        assert!(matches!(
            Tableau::with_shape(&shape, vec![vec![1, 2, 3]]),
            Err(Error::MalformedTableau(_))
        ));
    }

    #[test]
    fn content_of_worked_multitableau() {
        let r = example_r();
        assert!(r.is_semistandard());
        assert!(multitableau_check_flagging(&r));
        assert_eq!(
            r.shape(),
            MultiPartition::from_parts(vec![vec![3, 2], vec![2], vec![2, 1]]).unwrap()
        );
        assert_eq!(
            multitableau_content(&r).unwrap(),
            MultiComposition::from_parts(vec![vec![1, 3], vec![1, 1], vec![2, 2]]).unwrap()
        );
    }

    #[test]
    fn content_edge_cases() {
        let e = Multitableau::empty(2).unwrap();
        assert_eq!(e.content().unwrap(), MultiComposition::empty(2).unwrap());
        let single = Multitableau::new(vec![Tableau::new(vec![vec![l(3, 1)]]).unwrap()]).unwrap();
        assert_eq!(
            single.content().unwrap(),
            MultiComposition::from_parts(vec![vec![0, 0, 1]]).unwrap()
        );
    }

    #[test]
    fn flagging_checks() {
        let bad = Multitableau::new(vec![
            Tableau::empty(),
            Tableau::new(vec![vec![l(1, 1)]]).unwrap(),
        ])
        .unwrap();
        assert!(!bad.check_flagging());
        assert_eq!(
            bad.validate(),
            Err(Error::Flagging {
                component: 2,
                letter: l(1, 1)
            })
        );
        let level_one =
            Multitableau::new(vec![Tableau::new(vec![vec![l(5, 1), l(2, 4)]]).unwrap()]).unwrap();
        assert!(level_one.check_flagging());
    }

    #[test]
    fn bounded_composition_examples() {
        let p = |v: Vec<u32>| Partition::new(v).unwrap();
        let c = |v: Vec<u32>| Composition::new(v).unwrap();
        assert_eq!(
            partition_to_bounded_composition(&p(vec![3]), 3).unwrap(),
            c(vec![0, 3])
        );
        assert_eq!(
            partition_to_bounded_composition(&p(vec![2, 1]), 2).unwrap(),
            c(vec![0, 1, 1])
        );
        assert_eq!(
            partition_to_bounded_composition(&p(vec![]), 2).unwrap(),
            c(vec![2])
        );
        assert_eq!(
            partition_to_bounded_composition(&p(vec![]), 0).unwrap(),
            c(vec![])
        );
        assert_eq!(
            partition_to_bounded_composition(&p(vec![4]), 3),
            Err(Error::BoundViolation {
                largest: 4,
                bound: 3
            })
        );

        assert_eq!(
            bounded_composition_to_partition(&c(vec![0, 0, 1])),
            (1, p(vec![1, 1]))
        );
        assert_eq!(
            bounded_composition_to_partition(&c(vec![1])),
            (1, p(vec![]))
        );
        assert_eq!(bounded_composition_to_partition(&c(vec![])), (0, p(vec![])));
        assert_eq!(
            Composition::new(vec![0, 1, 0]),
            Err(Error::NonCanonicalComposition(vec![0, 1, 0]))
        );
    }

    fn partitions_fitting(max_part: u32, max_len: usize) -> Vec<Partition> {
        fn go(prefix: &mut Vec<u32>, cap: u32, max_len: usize, out: &mut Vec<Partition>) {
            out.push(Partition::new(prefix.clone()).unwrap());
            if prefix.len() == max_len {
                return;
            }
            for x in 1..=cap {
                prefix.push(x);
                go(prefix, x, max_len, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), max_part, max_len, &mut out);
        out
    }

    #[test]
    fn partition_round_trip_exhaustive() {
        for bound in 0..=6 {
            for eta in partitions_fitting(bound, 4) {
                let c = partition_to_bounded_composition(&eta, bound).unwrap();
                assert_eq!(c.weight(), bound);
                if bound > 0 {
                    assert_eq!(c.len(), eta.len() + 1);
                    assert!(c.parts().last().unwrap() > &0);
                }
                assert_eq!(bounded_composition_to_partition(&c), (bound, eta));
            }
        }
    }

    #[test]
    fn composition_round_trip_exhaustive() {
        fn comps(weight: u32, max_len: usize) -> Vec<Vec<u32>> {
            let mut out = vec![];
            fn go(rem: u32, left: usize, pre: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
                if rem == 0 {
                    out.push(pre.clone());
                }
                if left == 0 || rem == 0 {
                    return;
                }
                // zeros may only be followed by more parts
                for x in 0..=rem {
                    pre.push(x);
                    if x > 0 || left > 1 {
                        go(rem - x, left - 1, pre, out);
                    }
                    pre.pop();
                }
            }
            go(weight, max_len, &mut vec![], &mut out);
            out.retain(|v| v.last() != Some(&0));
            out.sort();
            out.dedup();
            out
        }
        for w in 0..=6 {
            for raw in comps(w, 5) {
                let c = Composition::new(raw).unwrap();
                let (a, eta) = bounded_composition_to_partition(&c);
                assert_eq!(a, w);
                assert_eq!(partition_to_bounded_composition(&eta, a).unwrap(), c);
            }
        }
    }

    #[test]
    fn alphabet_is_injective_and_inverted_by_content() {
        let comps: Vec<Composition> = [
            vec![],
            vec![1],
            vec![0, 1],
            vec![2],
            vec![1, 1],
            vec![0, 2],
            vec![1, 0, 1],
        ]
        .into_iter()
        .map(|v| Composition::new(v).unwrap())
        .collect();
        let mut seen = std::collections::HashSet::new();
        for x in &comps {
            for y in &comps {
                let mu = MultiComposition::new(vec![x.clone(), y.clone()]).unwrap();
                let alpha = mu.alphabet();
                assert!(seen.insert(alpha.clone()));
                assert_eq!(MultiComposition::from_alphabet(2, &alpha).unwrap(), mu);
            }
        }
    }
}
