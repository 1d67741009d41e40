//! The worked examples, shipped as documents under `fixtures/`.

use crate::bijection::{FlaggedBiword, TableauPair};
use crate::blocks::{FlaggedBCM, ParMatFlat};
use crate::combinatorics::MultiComposition;
use crate::document::{parse, Document};

pub const EXAMPLE_ALPHABET: &str = include_str!("../fixtures/example_alphabet.json");
pub const EXAMPLE_PARMAT: &str = include_str!("../fixtures/example_parmat.json");
pub const EXAMPLE_BCM: &str = include_str!("../fixtures/example_bcm.json");
pub const EXAMPLE_BIWORD: &str = include_str!("../fixtures/example_biword.json");
pub const EXAMPLE_TABLEAUX: &str = include_str!("../fixtures/example_tableaux.json");
pub const INVERSE_TABLEAUX: &str = include_str!("../fixtures/inverse_tableaux.json");
pub const INVERSE_BIWORD: &str = include_str!("../fixtures/inverse_biword.json");
pub const INVERSE_BCM: &str = include_str!("../fixtures/inverse_bcm.json");
pub const INVERSE_PARMAT: &str = include_str!("../fixtures/inverse_parmat.json");

/// `(file name, contents)` for every shipped fixture.
pub const ALL: &[(&str, &str)] = &[
    ("example_alphabet.json", EXAMPLE_ALPHABET),
    ("example_parmat.json", EXAMPLE_PARMAT),
    ("example_bcm.json", EXAMPLE_BCM),
    ("example_biword.json", EXAMPLE_BIWORD),
    ("example_tableaux.json", EXAMPLE_TABLEAUX),
    ("inverse_tableaux.json", INVERSE_TABLEAUX),
    ("inverse_biword.json", INVERSE_BIWORD),
    ("inverse_bcm.json", INVERSE_BCM),
    ("inverse_parmat.json", INVERSE_PARMAT),
];

fn load(text: &str) -> Document {
    parse(text).expect("shipped fixture parses")
}

pub fn all_documents() -> Vec<Document> {
    ALL.iter().map(|(_, text)| load(text)).collect()
}

pub fn example_alphabet() -> MultiComposition {
    match load(EXAMPLE_ALPHABET) {
        Document::MultiComposition(x) => x,
        _ => unreachable!(),
    }
}

fn parmat(text: &str) -> ParMatFlat {
    match load(text) {
        Document::ParMat(x) => x,
        _ => unreachable!(),
    }
}

fn bcm(text: &str) -> FlaggedBCM {
    match load(text) {
        Document::Bcm(x) => x,
        _ => unreachable!(),
    }
}

fn biword(text: &str) -> FlaggedBiword {
    match load(text) {
        Document::FlaggedBiword(x) => x,
        _ => unreachable!(),
    }
}

fn tableaux(text: &str) -> TableauPair {
    match load(text) {
        Document::TableauPair(x) => x,
        _ => unreachable!(),
    }
}

pub fn example_parmat() -> ParMatFlat {
    parmat(EXAMPLE_PARMAT)
}

pub fn example_bcm() -> FlaggedBCM {
    bcm(EXAMPLE_BCM)
}

pub fn example_biword() -> FlaggedBiword {
    biword(EXAMPLE_BIWORD)
}

pub fn example_tableaux() -> TableauPair {
    tableaux(EXAMPLE_TABLEAUX)
}

pub fn inverse_tableaux() -> TableauPair {
    tableaux(INVERSE_TABLEAUX)
}

pub fn inverse_biword() -> FlaggedBiword {
    biword(INVERSE_BIWORD)
}

pub fn inverse_bcm() -> FlaggedBCM {
    bcm(INVERSE_BCM)
}

pub fn inverse_parmat() -> ParMatFlat {
    parmat(INVERSE_PARMAT)
}
