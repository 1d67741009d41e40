//! Level-`ℓ` Robinson–Schensted–Knuth correspondence.
//!
//! Partition-decorated block matrices ([`ParMatFlat`]) are taken to pairs of
//! flagged semistandard multitableaux ([`TableauPair`]) by three explicit
//! bijections: decorations become bounded compositions ([`FlaggedBCM`]),
//! composition parts become biletter multiplicities in an `ℓ`-tuple of
//! biwords ([`FlaggedBiword`]), and classical RSK runs on each component.
//! At level one this is ordinary RSK on ℕ-matrices.
//!
//! [`enumerate`] holds brute-force generators for every family involved and
//! [`verify`] uses them to certify bijectivity exhaustively on small sizes.

pub mod bijection;
pub mod blocks;
pub mod combinatorics;
pub mod document;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod pretty;
pub mod rsk;
pub mod verify;

pub use bijection::{
    bcm_to_biwords, bcm_to_parmat, biwords_to_bcm, biwords_to_tableaux, parmat_to_bcm, psi,
    psi_inverse, tableaux_to_biwords, FlaggedBiword, TableauPair,
};
pub use blocks::{
    block_col_sum, block_row_sum, validate_bcm, validate_parmat, BlockNMatrix, Coord, FlaggedBCM,
    ParMatFlat, Violation,
};
pub use combinatorics::{
    bounded_composition_to_partition, letter_compare, mu_alphabet, multitableau_check_flagging,
    multitableau_content, partition_to_bounded_composition, tableau_is_semistandard, Composition,
    Letter, LetterMultiset, MultiComposition, MultiPartition, Multitableau, Partition, Tableau,
};
pub use document::{convert, parse, serialize, Document, Kind};
pub use enumerate::EnumerationBudget;
pub use error::{Error, Result};
pub use rsk::{
    biword_from_matrix, matrix_from_biword, relabel, row_insert, rsk, rsk_inverse, Biword, NMatrix,
};
