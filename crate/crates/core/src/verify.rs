//! Exhaustive verification sweeps.
//!
//! Each sweep cell `(ν, μ)` compares the bijection chain against the
//! independent enumerators in [`crate::enumerate`]. Cells run in parallel;
//! results are merged in cell order, so reports are deterministic.

use std::collections::BTreeMap;

use rayon::prelude::*;
use rustc_hash::{FxHashMap as HashMap, FxHashSet as HashSet};
use serde::Serialize;

use crate::bijection::{
    bcm_to_biwords, biwords_to_tableaux, parmat_to_bcm, psi, psi_inverse, TableauPair,
};
use crate::blocks::{Coord, ParMatFlat};
use crate::combinatorics::{Letter, MultiComposition, MultiPartition, Multitableau, Partition};
use crate::enumerate::{
    enum_bcm, enum_flagged_biwords, enum_multicompositions, enum_multipartitions, enum_nmatrices,
    enum_parmat, enum_sst, EnumerationBudget,
};
use crate::rsk::{biword_from_matrix, matrix_from_biword, rsk, rsk_inverse};

pub const CHAIN_CARDINALITY: &str = "chain-cardinality";
pub const CARDINALITY_IDENTITY: &str = "cardinality-identity";
pub const BCM_IMAGE: &str = "parmat-to-bcm-image";
pub const BIWORD_IMAGE: &str = "bcm-to-biword-image";
pub const BIWORD_FLAGGING: &str = "biword-flagging-and-content";
pub const TABLEAU_FLAGGING: &str = "tableau-flagging-and-semistandard";
pub const CONTENT_LAW: &str = "content-law";
pub const PSI_INJECTIVE: &str = "psi-injective";
pub const PSI_IMAGE: &str = "psi-image";
pub const PSI_ROUND_TRIP: &str = "psi-inverse-after-psi";
pub const PSI_INVERSE_ROUND_TRIP: &str = "psi-after-psi-inverse";
pub const SPECIALIZATION: &str = "level-one-specialization";
pub const CLASSICAL_LAWS: &str = "classical-rsk-laws";
pub const TRANSPOSE_SYMMETRY: &str = "transpose-symmetry";
pub const MATRIX_BIWORD_ROUND_TRIP: &str = "matrix-biword-round-trip";
pub const RESTRICTION: &str = "restriction";

const MAX_MESSAGES: usize = 20;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
}

/// Outcome of a sweep: per-check tallies and the first few failure messages.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub cells: u64,
    pub elements: u64,
    pub checks: BTreeMap<&'static str, Tally>,
    pub failures: Vec<String>,
}

impl Report {
    pub fn check(&mut self, name: &'static str, ok: bool, msg: impl FnOnce() -> String) {
        let t = self.checks.entry(name).or_default();
        if ok {
            t.passed += 1;
        } else {
            t.failed += 1;
            if self.failures.len() < MAX_MESSAGES {
                self.failures.push(format!("{name}: {}", msg()));
            }
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.cells += other.cells;
        self.elements += other.elements;
        for (k, t) in other.checks {
            let e = self.checks.entry(k).or_default();
            e.passed += t.passed;
            e.failed += t.failed;
        }
        let room = MAX_MESSAGES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }

    pub fn total_failed(&self) -> u64 {
        self.checks.values().map(|t| t.failed).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.total_failed() == 0
    }

    /// Failures recorded under `name`, zero if the check never ran.
    pub fn failed(&self, name: &str) -> u64 {
        self.checks.get(name).map_or(0, |t| t.failed)
    }

    pub fn passed(&self, name: &str) -> u64 {
        self.checks.get(name).map_or(0, |t| t.passed)
    }
}

/// Semistandard multitableaux of one content, grouped by shape.
struct SstIndex {
    by_shape: BTreeMap<MultiPartition, Vec<Multitableau>>,
    all: HashSet<Multitableau>,
}

impl SstIndex {
    fn build(mu: &MultiComposition) -> Self {
        let mut by_shape = BTreeMap::new();
        let mut all = HashSet::default();
        for lambda in enum_multipartitions(mu.weight(), mu.level()) {
            let ts = enum_sst(&lambda, mu);
            if !ts.is_empty() {
                all.extend(ts.iter().cloned());
                by_shape.insert(lambda, ts);
            }
        }
        SstIndex { by_shape, all }
    }

    fn count(&self, lambda: &MultiPartition) -> u64 {
        self.by_shape.get(lambda).map_or(0, |v| v.len() as u64)
    }
}

/// Bijectivity, cardinality and flag-preservation checks on one `(ν, μ)`.
fn check_cell(
    nu: &MultiComposition,
    mu: &MultiComposition,
    sst_nu: &SstIndex,
    sst_mu: &SstIndex,
) -> Report {
    let mut rep = Report {
        cells: 1,
        ..Report::default()
    };
    let cell = || format!("ν={nu} μ={mu}");

    let parmats = match enum_parmat(nu, mu) {
        Ok(v) => v,
        Err(e) => {
            rep.check(CHAIN_CARDINALITY, false, || format!("{}: {e}", cell()));
            return rep;
        }
    };
    let bcms: HashSet<_> = enum_bcm(nu, mu).into_iter().collect();
    let biwords: HashSet<_> = enum_flagged_biwords(nu, mu).into_iter().collect();
    rep.elements = parmats.len() as u64;

    let n = parmats.len();
    rep.check(
        CHAIN_CARDINALITY,
        n == bcms.len() && n == biwords.len(),
        || {
            format!(
                "{}: {n} parmat, {} bcm, {} biwords",
                cell(),
                bcms.len(),
                biwords.len()
            )
        },
    );

    let expected: u64 = sst_mu
        .by_shape
        .keys()
        .map(|lambda| sst_mu.count(lambda) * sst_nu.count(lambda))
        .sum();
    rep.check(CARDINALITY_IDENTITY, n as u64 == expected, || {
        format!("{}: |ParMat| = {n}, Σ|SST||SST| = {expected}", cell())
    });

    let mut bcm_image = HashSet::default();
    let mut biword_image = HashSet::default();
    let mut image: HashSet<TableauPair> = HashSet::default();
    for x in &parmats {
        let chain = parmat_to_bcm(x).and_then(|b| {
            let w = bcm_to_biwords(&b)?;
            let pair = biwords_to_tableaux(&w)?;
            Ok((b, w, pair))
        });
        let (b, w, pair) = match chain {
            Ok(v) => v,
            Err(e) => {
                rep.check(PSI_IMAGE, false, || format!("{}: {e}", cell()));
                continue;
            }
        };

        rep.check(BCM_IMAGE, bcms.contains(&b), || {
            format!("{}: image {b:?} not enumerated", cell())
        });
        bcm_image.insert(b);

        let w_ok = w.check_flagging()
            && w.top_content().as_ref() == Ok(nu)
            && w.bottom_content().as_ref() == Ok(mu);
        rep.check(BIWORD_FLAGGING, w_ok, || format!("{}: {w:?}", cell()));
        rep.check(BIWORD_IMAGE, biwords.contains(&w), || {
            format!("{}: image {w:?} not enumerated", cell())
        });
        biword_image.insert(w);

        let (p, q) = (pair.p(), pair.q());
        let flag_ok =
            p.check_flagging() && q.check_flagging() && p.is_semistandard() && q.is_semistandard();
        rep.check(TABLEAU_FLAGGING, flag_ok, || {
            format!("{}: {pair:?}", cell())
        });

        let content_ok = p.content().as_ref() == Ok(mu)
            && q.content().as_ref() == Ok(nu)
            && p.shape() == q.shape()
            && pair.shape().weight() == nu.weight();
        rep.check(CONTENT_LAW, content_ok, || format!("{}: {pair:?}", cell()));

        rep.check(
            PSI_IMAGE,
            sst_mu.all.contains(p) && sst_nu.all.contains(q),
            || format!("{}: {pair:?} not an enumerated tableau pair", cell()),
        );

        let back = psi_inverse(&pair);
        rep.check(PSI_ROUND_TRIP, back.as_ref() == Ok(x), || {
            format!("{}: {x:?} came back as {back:?}", cell())
        });

        let fresh = image.insert(pair);
        rep.check(PSI_INJECTIVE, fresh, || {
            format!("{}: repeated image", cell())
        });
    }

    // With injectivity and membership, equal sizes mean equal images.
    rep.check(BCM_IMAGE, bcm_image.len() == bcms.len(), || {
        format!(
            "{}: image size {} vs {}",
            cell(),
            bcm_image.len(),
            bcms.len()
        )
    });
    rep.check(BIWORD_IMAGE, biword_image.len() == biwords.len(), || {
        format!(
            "{}: image size {} vs {}",
            cell(),
            biword_image.len(),
            biwords.len()
        )
    });
    rep.check(PSI_IMAGE, image.len() as u64 == expected, || {
        format!("{}: image size {} vs {expected}", cell(), image.len())
    });

    rep
}

/// `psi(psi_inverse(P, Q)) = (P, Q)` for every pair of enumerated tableaux
/// of equal shape, contents `μ` and `ν` ranging over `⊨_ℓ n` for all
/// `n ≤ max_n`, `ℓ ≤ max_level`.
pub fn check_inverse(budget: &EnumerationBudget) -> Report {
    let mut out = Report::default();
    for level in 1..=budget.max_level {
        for n in 0..=budget.max_n {
            let all = enum_multicompositions(n, level, budget.max_parts);
            let index: Vec<SstIndex> = all.par_iter().map(SstIndex::build).collect();
            let reports: Vec<Report> = (0..all.len())
                .flat_map(|a| (0..all.len()).map(move |b| (a, b)))
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|(a, b)| {
                    let (nu, mu) = (&all[a], &all[b]);
                    let mut rep = Report {
                        cells: 1,
                        ..Report::default()
                    };
                    for (lambda, ps) in &index[b].by_shape {
                        let Some(qs) = index[a].by_shape.get(lambda) else {
                            continue;
                        };
                        for p in ps {
                            for q in qs {
                                rep.elements += 1;
                                let ok =
                                    TableauPair::new(p.clone(), q.clone())
                                        .ok()
                                        .and_then(|pair| {
                                            let x = psi_inverse(&pair).ok()?;
                                            let sums_ok = x.row_sum() == *nu && x.col_sum() == *mu;
                                            (sums_ok && psi(&x).ok()? == pair).then_some(())
                                        });
                                rep.check(PSI_INVERSE_ROUND_TRIP, ok.is_some(), || {
                                    format!("ν={nu} μ={mu}: P={p:?} Q={q:?}")
                                });
                            }
                        }
                    }
                    rep
                })
                .collect();
            for r in reports {
                out.merge(r);
            }
        }
    }
    out
}

fn pairs(all: &[MultiComposition]) -> Vec<(&MultiComposition, &MultiComposition)> {
    all.iter()
        .flat_map(|nu| all.iter().map(move |mu| (nu, mu)))
        .collect()
}

/// Runs [`check_cell`] over every `ν, μ ⊨_ℓ n` with components of at most
/// `max_parts` parts, for one `(n, ℓ)`.
pub fn sweep_level(n: u32, level: usize, max_parts: usize) -> Report {
    let all = enum_multicompositions(n, level, max_parts);
    let index: HashMap<&MultiComposition, SstIndex> =
        all.par_iter().map(|mu| (mu, SstIndex::build(mu))).collect();
    let reports: Vec<Report> = pairs(&all)
        .into_par_iter()
        .map(|(nu, mu)| check_cell(nu, mu, &index[nu], &index[mu]))
        .collect();
    let mut out = Report::default();
    for r in reports {
        out.merge(r);
    }
    out
}

/// The bijectivity sweep for every `n ≤ max_n`, `ℓ ≤ max_level`.
pub fn sweep(budget: &EnumerationBudget) -> Report {
    let mut out = Report::default();
    for level in 1..=budget.max_level {
        for n in 0..=budget.max_n {
            out.merge(sweep_level(n, level, budget.max_parts));
        }
    }
    out
}

fn level_one_parmat(a: &crate::rsk::NMatrix<u32>) -> ParMatFlat {
    let mut x = ParMatFlat::new(1).unwrap();
    for (&i, &j, m) in a.entries() {
        x.set(
            Coord::new(1, 1, i as usize, j as usize),
            m,
            Partition::empty(),
        )
        .unwrap();
    }
    x
}

fn content<'a>(letters: impl Iterator<Item = &'a u32>) -> BTreeMap<u32, u32> {
    let mut out = BTreeMap::new();
    for &x in letters {
        *out.entry(x).or_insert(0) += 1;
    }
    out
}

/// Level one against classical RSK on every ℕ-matrix over a
/// `size × size` grid with total at most `max_total`.
pub fn check_specialization(size: u32, max_total: u32) -> Report {
    let mats = enum_nmatrices(size, size, max_total);
    let reports: Vec<Report> = mats
        .par_iter()
        .map(|a| {
            let mut rep = Report {
                elements: 1,
                ..Report::default()
            };
            let w = biword_from_matrix(a);
            rep.check(
                MATRIX_BIWORD_ROUND_TRIP,
                matrix_from_biword(&w) == *a,
                || format!("{a:?}"),
            );
            let (p, q) = rsk(&w);

            let laws = content(p.entries()) == content(w.bottom())
                && content(q.entries()) == content(w.top())
                && p.shape() == q.shape()
                && p.size() == w.len()
                && p.is_semistandard()
                && q.is_semistandard()
                && rsk_inverse(&p, &q).as_ref() == Ok(&w);
            rep.check(CLASSICAL_LAWS, laws, || format!("{a:?}"));

            let (pt, qt) = rsk(&biword_from_matrix(&a.transpose()));
            rep.check(TRANSPOSE_SYMMETRY, pt == q && qt == p, || format!("{a:?}"));

            let lift = |v: &u32| Letter::new(*v, 1);
            let ok = psi(&level_one_parmat(a)).is_ok_and(|pair| {
                pair.p().components() == [p.map(lift)] && pair.q().components() == [q.map(lift)]
            });
            rep.check(SPECIALIZATION, ok, || format!("{a:?}"));
            rep
        })
        .collect();
    let mut out = Report::default();
    for r in reports {
        out.merge(r);
    }
    out
}

/// Embeds every level-`ℓ` instance (`ℓ < max_level`, `n ≤ max_n`) into level
/// `ℓ + 1` and compares the two correspondences.
pub fn check_restriction(budget: &EnumerationBudget) -> Report {
    let mut out = Report::default();
    for level in 1..budget.max_level {
        for n in 0..=budget.max_n {
            let all = enum_multicompositions(n, level, budget.max_parts);
            let reports: Vec<Report> = pairs(&all)
                .into_par_iter()
                .map(|(nu, mu)| {
                    let mut rep = Report {
                        cells: 1,
                        ..Report::default()
                    };
                    let lower = enum_parmat(nu, mu).unwrap_or_default();
                    let upper = enum_parmat(&nu.extended(1), &mu.extended(1)).unwrap_or_default();
                    rep.check(RESTRICTION, lower.len() == upper.len(), || {
                        format!("ν={nu} μ={mu}: {} vs {} elements", lower.len(), upper.len())
                    });
                    for x in &lower {
                        rep.elements += 1;
                        let up = x.extended(1);
                        let ok = match (psi(x), psi(&up)) {
                            (Ok(a), Ok(b)) => {
                                b == a.extended(1) && psi_inverse(&b).as_ref() == Ok(&up)
                            }
                            _ => false,
                        };
                        rep.check(RESTRICTION, ok, || format!("ν={nu} μ={mu}: {x:?}"));
                    }
                    rep
                })
                .collect();
            for r in reports {
                out.merge(r);
            }
        }
    }
    out
}

/// Pretty-printed JSON form of a report.
pub fn report_json(report: &Report) -> serde_json::Result<String> {
    serde_json::to_string_pretty(report)
}

/// Everything `verify` runs: the bijectivity sweep, the inverse round trip,
/// level-one specialization on a 3×3 grid with total ≤ 5, and restriction.
pub fn verify_all(budget: &EnumerationBudget) -> Report {
    let mut out = sweep(budget);
    out.merge(check_inverse(budget));
    out.merge(check_specialization(3, 5));
    out.merge(check_restriction(budget));
    out
}
