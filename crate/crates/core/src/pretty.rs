//! Human-readable block-matrix and tableau layouts. Display only; the JSON
//! documents are the interchange format.

use std::fmt::Write;

use crate::bijection::{FlaggedBiword, TableauPair};
use crate::blocks::{Coord, FlaggedBCM, ParMatFlat};
use crate::combinatorics::{Composition, Letter, MultiComposition, Multitableau, Partition};
use crate::document::Document;

const EMPTY: &str = "∅";

/// Juxtaposed parts (`03`, `011`), comma-separated if any part has two digits.
fn digits(parts: &[u32]) -> String {
    if parts.is_empty() {
        return EMPTY.to_string();
    }
    let sep = if parts.iter().any(|&x| x >= 10) {
        ","
    } else {
        ""
    };
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn multicomposition(x: &MultiComposition) -> String {
    let parts: Vec<String> = x
        .components()
        .iter()
        .map(|c| {
            if c.is_empty() {
                EMPTY.into()
            } else {
                digits(c.parts())
            }
        })
        .collect();
    format!("({})", parts.join(", "))
}

/// Number of lines per block: the longer of the prescribed sum and the
/// largest index actually used.
fn extents(
    level: usize,
    sums: &MultiComposition,
    used: impl Iterator<Item = (usize, usize)>,
) -> Vec<usize> {
    let mut out: Vec<usize> = sums.components().iter().map(Composition::len).collect();
    out.resize(level, 0);
    for (block, idx) in used {
        out[block - 1] = out[block - 1].max(idx);
    }
    out
}

fn grid(level: usize, rows: &[usize], cols: &[usize], cell: impl Fn(Coord) -> String) -> String {
    let mut lines: Vec<Vec<String>> = Vec::new();
    for p in 1..=level {
        for i in 1..=rows[p - 1] {
            let mut line = Vec::new();
            for q in 1..=level {
                for j in 1..=cols[q - 1] {
                    line.push(cell(Coord::new(p, q, i, j)));
                }
            }
            lines.push(line);
        }
    }
    let width = lines
        .iter()
        .flatten()
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    let mut row_index = 0;
    for (p, &height) in rows.iter().enumerate() {
        if p > 0 && height > 0 && row_index > 0 {
            let total: usize = cols.iter().sum::<usize>() * (width + 1)
                + 2 * cols.iter().filter(|&&c| c > 0).count().saturating_sub(1);
            out.push_str(&"─".repeat(total));
            out.push('\n');
        }
        for _ in 0..height {
            let line = &lines[row_index];
            let mut k = 0;
            let mut first_block = true;
            for &w in cols {
                if w == 0 {
                    continue;
                }
                if !first_block {
                    out.push_str("│ ");
                }
                first_block = false;
                for _ in 0..w {
                    let s = &line[k];
                    let pad = width - s.chars().count();
                    let _ = write!(out, "{}{} ", " ".repeat(pad), s);
                    k += 1;
                }
            }
            out.push('\n');
            row_index += 1;
        }
    }
    out
}

pub fn parmat(x: &ParMatFlat) -> String {
    let entries = x.entries();
    let rows = extents(
        x.level(),
        &x.row_sum(),
        entries.iter().map(|e| (e.0.p, e.0.i)),
    );
    let cols = extents(
        x.level(),
        &x.col_sum(),
        entries.iter().map(|e| (e.0.q, e.0.j)),
    );
    let a = grid(x.level(), &rows, &cols, |c| x.matrix().get(&c).to_string());
    let p = grid(x.level(), &rows, &cols, |c| {
        let eta: Partition = x.decoration(&c);
        digits(eta.parts())
    });
    format!(
        "A =\n{a}P =\n{p}row(A) = {}\ncol(A) = {}\n",
        multicomposition(&x.row_sum()),
        multicomposition(&x.col_sum())
    )
}

pub fn bcm(x: &FlaggedBCM) -> String {
    let rows = extents(
        x.level(),
        &x.row_sum(),
        x.entries().map(|(c, _)| (c.p, c.i)),
    );
    let cols = extents(
        x.level(),
        &x.col_sum(),
        x.entries().map(|(c, _)| (c.q, c.j)),
    );
    let b = grid(x.level(), &rows, &cols, |c| digits(x.get(&c).parts()));
    format!(
        "B =\n{b}row(B) = {}\ncol(B) = {}\n",
        multicomposition(&x.row_sum()),
        multicomposition(&x.col_sum())
    )
}

fn letters<'a>(xs: impl Iterator<Item = &'a Letter>) -> String {
    xs.map(Letter::to_string).collect::<Vec<_>>().join(" ")
}

pub fn biword(x: &FlaggedBiword) -> String {
    let mut out = String::new();
    for (t, w) in x.components().iter().enumerate() {
        let _ = writeln!(out, "w^({}) top:    {}", t + 1, letters(w.top()));
        let _ = writeln!(out, "      bottom: {}", letters(w.bottom()));
    }
    out
}

fn multitableau(name: &str, x: &Multitableau) -> String {
    let mut out = String::new();
    for (t, tab) in x.components().iter().enumerate() {
        let _ = writeln!(out, "{name}^({}):", t + 1);
        if tab.is_empty() {
            let _ = writeln!(out, "  {EMPTY}");
        }
        for row in tab.rows() {
            let _ = writeln!(out, "  {}", letters(row.iter()));
        }
    }
    out
}

pub fn tableau_pair(x: &TableauPair) -> String {
    format!(
        "shape = {}\n{}{}",
        x.shape(),
        multitableau("P", x.p()),
        multitableau("Q", x.q())
    )
}

pub fn document(doc: &Document) -> String {
    match doc {
        Document::MultiComposition(x) => format!("{}\n", multicomposition(x)),
        Document::MultiPartition(x) => format!("{x}\n"),
        Document::ParMat(x) => parmat(x),
        Document::Bcm(x) => bcm(x),
        Document::FlaggedBiword(x) => biword(x),
        Document::TableauPair(x) => tableau_pair(x),
        Document::Multitableau(x) => multitableau("T", x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn bcm_layout_uses_juxtaposed_parts() {
        let s = bcm(&fixtures::example_bcm());
        assert!(s.contains("011"));
        assert!(s.contains("001"));
        assert!(s.contains("03"));
        assert!(s.contains("row(B) = (212, 3, 23)"));
        assert!(s.contains("col(B) = (13, 3, 222)"));
        // six entry rows, two block separators
        assert_eq!(s.lines().filter(|l| l.contains('│')).count(), 6);
        assert_eq!(s.lines().filter(|l| l.starts_with('─')).count(), 2);
    }

    #[test]
    fn tableau_layout() {
        let s = tableau_pair(&fixtures::example_tableaux());
        assert!(s.contains("P^(1):\n  1_1 2_1 2_1 3_3\n  2_1 1_3\n"));
    }

    #[test]
    fn wide_parts_are_separated() {
        assert_eq!(digits(&[1, 12]), "1,12");
        assert_eq!(digits(&[0, 1, 1]), "011");
        assert_eq!(digits(&[]), "∅");
    }
}
