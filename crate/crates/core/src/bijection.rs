//! The level-`ℓ` correspondence as a chain of three bijections:
//!
//! ```text
//! ParMatFlat ──parmat_to_bcm──▶ FlaggedBCM ──bcm_to_biwords──▶ FlaggedBiword
//!                                                                   │
//!                                      TableauPair ◀──biwords_to_tableaux
//! ```
//!
//! [`psi`] is the composite and [`psi_inverse`] runs the chain backwards.
//! Every intermediate is a public type so each step can be used and checked
//! on its own.
//!
//! Biword tops are row letters `i_p` and bottoms are column letters `j_q`, so
//! the top alphabet is the block row sum `ν` and the bottom alphabet the
//! block column sum `μ`. Accordingly `P` has content `μ` and `Q` content `ν`.

use std::collections::BTreeMap;

use crate::blocks::{Coord, FlaggedBCM, ParMatFlat};
use crate::combinatorics::{
    bounded_composition_to_partition, partition_to_bounded_composition, Composition, Letter,
    LetterMultiset, MultiComposition, MultiPartition, Multitableau,
};
use crate::error::{Error, Result};
use crate::rsk::{rsk, rsk_inverse, Biword};

/// An `ℓ`-tuple of biwords over the flagged alphabet where component `i`
/// only uses letters of flag at least `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlaggedBiword {
    components: Vec<Biword<Letter>>,
}

impl FlaggedBiword {
    pub fn new(components: Vec<Biword<Letter>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::ZeroLevel);
        }
        for (k, w) in components.iter().enumerate() {
            let i = k + 1;
            for &x in w.top().chain(w.bottom()) {
                if !x.is_valid() {
                    return Err(Error::InvalidLetter(x));
                }
                if (x.flag as usize) < i {
                    return Err(Error::Flagging {
                        component: i,
                        letter: x,
                    });
                }
            }
        }
        Ok(FlaggedBiword { components })
    }

    pub fn empty(level: usize) -> Result<Self> {
        Self::new(vec![Biword::empty(); level])
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Biword<Letter>] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.iter().map(Biword::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn check_flagging(&self) -> bool {
        self.components
            .iter()
            .enumerate()
            .all(|(k, w)| w.top().chain(w.bottom()).all(|x| x.flag as usize > k))
    }

    /// Multiset union of the top rows.
    pub fn top_letters(&self) -> LetterMultiset {
        count(self.components.iter().flat_map(|w| w.top()))
    }

    /// Multiset union of the bottom rows.
    pub fn bottom_letters(&self) -> LetterMultiset {
        count(self.components.iter().flat_map(|w| w.bottom()))
    }

    /// The multicomposition whose alphabet is the top rows (`ν`).
    pub fn top_content(&self) -> Result<MultiComposition> {
        MultiComposition::from_alphabet(self.level(), &self.top_letters())
    }

    /// The multicomposition whose alphabet is the bottom rows (`μ`).
    pub fn bottom_content(&self) -> Result<MultiComposition> {
        MultiComposition::from_alphabet(self.level(), &self.bottom_letters())
    }

    pub fn extended(&self, extra: usize) -> Self {
        let mut components = self.components.clone();
        components.extend(std::iter::repeat_n(Biword::empty(), extra));
        FlaggedBiword { components }
    }
}

fn count<'a>(letters: impl Iterator<Item = &'a Letter>) -> LetterMultiset {
    let mut out = LetterMultiset::new();
    for &x in letters {
        *out.entry(x).or_insert(0) += 1;
    }
    out
}

/// A pair of semistandard multitableaux of common shape, both flagged.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TableauPair {
    p: Multitableau,
    q: Multitableau,
}

impl TableauPair {
    pub fn new(p: Multitableau, q: Multitableau) -> Result<Self> {
        if p.level() != q.level() {
            return Err(Error::LevelMismatch {
                left: p.level(),
                right: q.level(),
            });
        }
        for (tp, tq) in p.components().iter().zip(q.components()) {
            if tp.shape() != tq.shape() {
                return Err(Error::ShapeMismatch {
                    left: tp.shape().parts().to_vec(),
                    right: tq.shape().parts().to_vec(),
                });
            }
        }
        p.validate()?;
        q.validate()?;
        Ok(TableauPair { p, q })
    }

    pub fn empty(level: usize) -> Result<Self> {
        Ok(TableauPair {
            p: Multitableau::empty(level)?,
            q: Multitableau::empty(level)?,
        })
    }

    pub fn level(&self) -> usize {
        self.p.level()
    }

    /// The insertion multitableau, content `μ`.
    pub fn p(&self) -> &Multitableau {
        &self.p
    }

    /// The recording multitableau, content `ν`.
    pub fn q(&self) -> &Multitableau {
        &self.q
    }

    pub fn shape(&self) -> MultiPartition {
        self.p.shape()
    }

    pub fn extended(&self, extra: usize) -> Self {
        TableauPair {
            p: self.p.extended(extra),
            q: self.q.extended(extra),
        }
    }
}

pub fn parmat_to_bcm(x: &ParMatFlat) -> Result<FlaggedBCM> {
    x.validate()?;
    let mut out = FlaggedBCM::new(x.level())?;
    for (coord, a, eta) in x.entries() {
        out.set(coord, partition_to_bounded_composition(&eta, a)?)?;
    }
    Ok(out)
}

pub fn bcm_to_parmat(b: &FlaggedBCM) -> Result<ParMatFlat> {
    b.validate()?;
    let mut out = ParMatFlat::new(b.level())?;
    for (coord, c) in b.entries() {
        let (a, eta) = bounded_composition_to_partition(c);
        out.set(coord, a, eta)?;
    }
    Ok(out)
}

/// Part `t` of entry `b^(pq)_ij` becomes the multiplicity of the biletter
/// `(i_p / j_q)` in component `t`.
pub fn bcm_to_biwords(b: &FlaggedBCM) -> Result<FlaggedBiword> {
    b.validate()?;
    let mut columns = vec![Vec::new(); b.level()];
    for (coord, c) in b.entries() {
        let top = Letter::new(coord.i as u32, coord.p as u32);
        let bottom = Letter::new(coord.j as u32, coord.q as u32);
        for (t, &m) in c.parts().iter().enumerate() {
            columns[t].extend(std::iter::repeat_n((top, bottom), m as usize));
        }
    }
    FlaggedBiword::new(columns.into_iter().map(Biword::from_unsorted).collect())
}

pub fn biwords_to_bcm(w: &FlaggedBiword) -> Result<FlaggedBCM> {
    let level = w.level();
    let mut parts: BTreeMap<Coord, Vec<u32>> = BTreeMap::new();
    for (t, comp) in w.components().iter().enumerate() {
        for &(top, bottom) in comp.columns() {
            let coord = Coord::new(
                top.flag as usize,
                bottom.flag as usize,
                top.value as usize,
                bottom.value as usize,
            );
            let entry = parts.entry(coord).or_default();
            if entry.len() <= t {
                entry.resize(t + 1, 0);
            }
            entry[t] += 1;
        }
    }
    let mut out = FlaggedBCM::new(level)?;
    for (coord, v) in parts {
        out.set(coord, Composition::trimmed(v))?;
    }
    // flagging on w forces the length condition; re-check rather than trust
    out.validate()?;
    Ok(out)
}

/// Classical RSK in each component, comparing flagged letters directly.
pub fn biwords_to_tableaux(w: &FlaggedBiword) -> Result<TableauPair> {
    let (ps, qs): (Vec<_>, Vec<_>) = w.components().iter().map(rsk).unzip();
    TableauPair::new(Multitableau::new(ps)?, Multitableau::new(qs)?)
}

pub fn tableaux_to_biwords(x: &TableauPair) -> Result<FlaggedBiword> {
    let comps = x
        .p()
        .components()
        .iter()
        .zip(x.q().components())
        .map(|(p, q)| rsk_inverse(p, q))
        .collect::<Result<Vec<_>>>()?;
    FlaggedBiword::new(comps)
}

/// The level-`ℓ` RSK correspondence.
pub fn psi(x: &ParMatFlat) -> Result<TableauPair> {
    let b = parmat_to_bcm(x)?;
    let w = bcm_to_biwords(&b)?;
    biwords_to_tableaux(&w)
}

pub fn psi_inverse(x: &TableauPair) -> Result<ParMatFlat> {
    let w = tableaux_to_biwords(x)?;
    let b = biwords_to_bcm(&w)?;
    bcm_to_parmat(&b)
}
