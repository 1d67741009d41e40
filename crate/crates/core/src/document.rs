//! JSON documents for every object the CLI reads or writes.
//!
//! A document is an envelope `{"kind": ..., "level": ℓ, "payload": {...}}`.
//! Letters are `[a, b]` pairs, compositions and partitions are integer
//! arrays, and block entries are sparse records keyed by `p, q, i, j`.
//! Output is deterministic: keys sorted, entries in coordinate order, and a
//! fixed layout that keeps short arrays and records on one line.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bijection::{FlaggedBiword, TableauPair};
use crate::blocks::{Coord, FlaggedBCM, ParMatFlat};
use crate::combinatorics::{
    Composition, Letter, MultiComposition, MultiPartition, Multitableau, Partition, Tableau,
};
use crate::error::{Error, Result};
use crate::rsk::Biword;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    MultiComposition(MultiComposition),
    MultiPartition(MultiPartition),
    ParMat(ParMatFlat),
    Bcm(FlaggedBCM),
    FlaggedBiword(FlaggedBiword),
    TableauPair(TableauPair),
    Multitableau(Multitableau),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Kind {
    #[value(name = "multicomposition")]
    MultiComposition,
    #[value(name = "multipartition")]
    MultiPartition,
    #[value(name = "parmat")]
    ParMat,
    #[value(name = "bcm")]
    Bcm,
    #[value(name = "flagged-biword")]
    FlaggedBiword,
    #[value(name = "tableau-pair")]
    TableauPair,
    #[value(name = "multitableau")]
    Multitableau,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::MultiComposition => "multicomposition",
            Kind::MultiPartition => "multipartition",
            Kind::ParMat => "parmat",
            Kind::Bcm => "bcm",
            Kind::FlaggedBiword => "flagged-biword",
            Kind::TableauPair => "tableau-pair",
            Kind::Multitableau => "multitableau",
        }
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::MultiComposition(_) => Kind::MultiComposition,
            Document::MultiPartition(_) => Kind::MultiPartition,
            Document::ParMat(_) => Kind::ParMat,
            Document::Bcm(_) => Kind::Bcm,
            Document::FlaggedBiword(_) => Kind::FlaggedBiword,
            Document::TableauPair(_) => Kind::TableauPair,
            Document::Multitableau(_) => Kind::Multitableau,
        }
    }

    pub fn level(&self) -> usize {
        match self {
            Document::MultiComposition(x) => x.level(),
            Document::MultiPartition(x) => x.level(),
            Document::ParMat(x) => x.level(),
            Document::Bcm(x) => x.level(),
            Document::FlaggedBiword(x) => x.level(),
            Document::TableauPair(x) => x.level(),
            Document::Multitableau(x) => x.level(),
        }
    }
}

type WireLetter = [u32; 2];
type WireTableau = Vec<Vec<WireLetter>>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    kind: String,
    level: usize,
    payload: Value,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentsPayload {
    components: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParMatEntry {
    p: usize,
    q: usize,
    i: usize,
    j: usize,
    a: u32,
    #[serde(default)]
    eta: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParMatPayload {
    entries: Vec<ParMatEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BcmEntry {
    p: usize,
    q: usize,
    i: usize,
    j: usize,
    parts: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BcmPayload {
    entries: Vec<BcmEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireBiword {
    top: Vec<WireLetter>,
    bottom: Vec<WireLetter>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BiwordPayload {
    components: Vec<WireBiword>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableauPairPayload {
    shape: Vec<Vec<u32>>,
    p: Vec<WireTableau>,
    q: Vec<WireTableau>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MultitableauPayload {
    components: Vec<WireTableau>,
}

fn letter_to_wire(x: &Letter) -> WireLetter {
    [x.value, x.flag]
}

fn letter_from_wire(w: WireLetter) -> Result<Letter> {
    let x = Letter::new(w[0], w[1]);
    if !x.is_valid() {
        return Err(Error::InvalidLetter(x));
    }
    Ok(x)
}

fn tableau_to_wire(t: &Tableau<Letter>) -> WireTableau {
    t.rows()
        .iter()
        .map(|r| r.iter().map(letter_to_wire).collect())
        .collect()
}

fn tableau_from_wire(rows: WireTableau, shape: Option<&Partition>) -> Result<Tableau<Letter>> {
    let rows = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(letter_from_wire)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    match shape {
        Some(s) => Tableau::with_shape(s, rows),
        None => Tableau::new(rows),
    }
}

fn multitableau_from_wire(
    comps: Vec<WireTableau>,
    shape: Option<&MultiPartition>,
) -> Result<Multitableau> {
    let comps = comps
        .into_iter()
        .enumerate()
        .map(|(k, rows)| tableau_from_wire(rows, shape.map(|s| &s.components()[k])))
        .collect::<Result<Vec<_>>>()?;
    Multitableau::new(comps)
}

fn check_level(declared: usize, found: usize) -> Result<()> {
    if declared != found {
        return Err(Error::Parse(format!(
            "declared level {declared} but payload has {found} components"
        )));
    }
    Ok(())
}

fn payload<T: serde::de::DeserializeOwned>(kind: &str, v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("{kind} payload: {e}")))
}

/// Parses one document. Syntax and schema problems come back as
/// [`Error::Parse`] (with line and column where available); well-formed
/// documents that break an invariant come back as the matching validation
/// error.
pub fn parse(text: &str) -> Result<Document> {
    let env: Envelope = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let level = env.level;
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    let kind = env.kind.as_str();
    match kind {
        "multicomposition" => {
            let p: ComponentsPayload = payload(kind, env.payload)?;
            check_level(level, p.components.len())?;
            Ok(Document::MultiComposition(MultiComposition::from_parts(
                p.components,
            )?))
        }
        "multipartition" => {
            let p: ComponentsPayload = payload(kind, env.payload)?;
            check_level(level, p.components.len())?;
            Ok(Document::MultiPartition(MultiPartition::from_parts(
                p.components,
            )?))
        }
        "parmat" => {
            let p: ParMatPayload = payload(kind, env.payload)?;
            let mut x = ParMatFlat::new(level)?;
            let mut seen = std::collections::HashSet::new();
            for e in p.entries {
                let c = Coord::new(e.p, e.q, e.i, e.j);
                if !seen.insert(c) {
                    return Err(Error::Parse(format!("duplicate entry at {c}")));
                }
                x.set(c, e.a, Partition::new(e.eta)?)?;
            }
            x.validate()?;
            Ok(Document::ParMat(x))
        }
        "bcm" => {
            let p: BcmPayload = payload(kind, env.payload)?;
            let mut x = FlaggedBCM::new(level)?;
            let mut seen = std::collections::HashSet::new();
            for e in p.entries {
                let c = Coord::new(e.p, e.q, e.i, e.j);
                if !seen.insert(c) {
                    return Err(Error::Parse(format!("duplicate entry at {c}")));
                }
                x.set(c, Composition::new(e.parts)?)?;
            }
            x.validate()?;
            Ok(Document::Bcm(x))
        }
        "flagged-biword" => {
            let p: BiwordPayload = payload(kind, env.payload)?;
            check_level(level, p.components.len())?;
            let comps = p
                .components
                .into_iter()
                .map(|w| {
                    let top = w
                        .top
                        .into_iter()
                        .map(letter_from_wire)
                        .collect::<Result<Vec<_>>>()?;
                    let bottom = w
                        .bottom
                        .into_iter()
                        .map(letter_from_wire)
                        .collect::<Result<Vec<_>>>()?;
                    Biword::from_rows(top, bottom)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Document::FlaggedBiword(FlaggedBiword::new(comps)?))
        }
        "tableau-pair" => {
            let p: TableauPairPayload = payload(kind, env.payload)?;
            check_level(level, p.shape.len())?;
            check_level(level, p.p.len())?;
            check_level(level, p.q.len())?;
            let shape = MultiPartition::from_parts(p.shape)?;
            let ptab = multitableau_from_wire(p.p, Some(&shape))?;
            let qtab = multitableau_from_wire(p.q, Some(&shape))?;
            Ok(Document::TableauPair(TableauPair::new(ptab, qtab)?))
        }
        "multitableau" => {
            let p: MultitableauPayload = payload(kind, env.payload)?;
            check_level(level, p.components.len())?;
            Ok(Document::Multitableau(multitableau_from_wire(
                p.components,
                None,
            )?))
        }
        other => Err(Error::Parse(format!("unknown document kind {other:?}"))),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("wire types always serialize")
}

fn payload_value(doc: &Document) -> Value {
    match doc {
        Document::MultiComposition(x) => to_value(&ComponentsPayload {
            components: x.components().iter().map(|c| c.parts().to_vec()).collect(),
        }),
        Document::MultiPartition(x) => to_value(&ComponentsPayload {
            components: x.components().iter().map(|c| c.parts().to_vec()).collect(),
        }),
        Document::ParMat(x) => to_value(&ParMatPayload {
            entries: x
                .entries()
                .into_iter()
                .map(|(c, a, eta)| ParMatEntry {
                    p: c.p,
                    q: c.q,
                    i: c.i,
                    j: c.j,
                    a,
                    eta: eta.parts().to_vec(),
                })
                .collect(),
        }),
        Document::Bcm(x) => to_value(&BcmPayload {
            entries: x
                .entries()
                .map(|(c, b)| BcmEntry {
                    p: c.p,
                    q: c.q,
                    i: c.i,
                    j: c.j,
                    parts: b.parts().to_vec(),
                })
                .collect(),
        }),
        Document::FlaggedBiword(x) => to_value(&BiwordPayload {
            components: x
                .components()
                .iter()
                .map(|w| WireBiword {
                    top: w.top().map(letter_to_wire).collect(),
                    bottom: w.bottom().map(letter_to_wire).collect(),
                })
                .collect(),
        }),
        Document::TableauPair(x) => to_value(&TableauPairPayload {
            shape: x
                .shape()
                .components()
                .iter()
                .map(|s| s.parts().to_vec())
                .collect(),
            p: x.p().components().iter().map(tableau_to_wire).collect(),
            q: x.q().components().iter().map(tableau_to_wire).collect(),
        }),
        Document::Multitableau(x) => to_value(&MultitableauPayload {
            components: x.components().iter().map(tableau_to_wire).collect(),
        }),
    }
}

/// The document as a JSON tree (keys sorted).
pub fn to_json(doc: &Document) -> Value {
    to_value(&Envelope {
        kind: doc.kind().name().to_string(),
        level: doc.level(),
        payload: payload_value(doc),
    })
}

/// Canonical multi-line rendering, newline-terminated.
pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    render(&to_json(doc), 0, &mut out);
    out.push('\n');
    out
}

/// Canonical single-line rendering, for streams.
pub fn serialize_line(doc: &Document) -> String {
    inline(&to_json(doc))
}

const WIDTH: usize = 72;

fn inline(v: &Value) -> String {
    match v {
        Value::Array(xs) => {
            let parts: Vec<String> = xs.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(m) => {
            let parts: Vec<String> = m
                .iter()
                .map(|(k, x)| format!("{}: {}", Value::String(k.clone()), inline(x)))
                .collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let flat = inline(v);
    if flat.len() + indent <= WIDTH {
        out.push_str(&flat);
        return;
    }
    let pad = " ".repeat(indent + 2);
    match v {
        Value::Array(xs) => {
            out.push_str("[\n");
            for (k, x) in xs.iter().enumerate() {
                out.push_str(&pad);
                render(x, indent + 2, out);
                if k + 1 < xs.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&" ".repeat(indent));
            out.push(']');
        }
        Value::Object(m) => {
            out.push_str("{\n");
            for (k, (key, x)) in m.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                render(x, indent + 2, out);
                if k + 1 < m.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&" ".repeat(indent));
            out.push('}');
        }
        _ => out.push_str(&flat),
    }
}

/// Position on the chain parmat → bcm → flagged-biword → tableau-pair.
fn stage(kind: Kind) -> Option<usize> {
    match kind {
        Kind::ParMat => Some(0),
        Kind::Bcm => Some(1),
        Kind::FlaggedBiword => Some(2),
        Kind::TableauPair => Some(3),
        _ => None,
    }
}

fn step(doc: Document, forward: bool) -> Result<Document> {
    use crate::bijection as b;
    Ok(match (doc, forward) {
        (Document::ParMat(x), true) => Document::Bcm(b::parmat_to_bcm(&x)?),
        (Document::Bcm(x), true) => Document::FlaggedBiword(b::bcm_to_biwords(&x)?),
        (Document::FlaggedBiword(x), true) => Document::TableauPair(b::biwords_to_tableaux(&x)?),
        (Document::Bcm(x), false) => Document::ParMat(b::bcm_to_parmat(&x)?),
        (Document::FlaggedBiword(x), false) => Document::Bcm(b::biwords_to_bcm(&x)?),
        (Document::TableauPair(x), false) => Document::FlaggedBiword(b::tableaux_to_biwords(&x)?),
        (doc, _) => {
            return Err(Error::Unsupported {
                from: doc.kind().to_string(),
                to: String::from("the next stage"),
            })
        }
    })
}

/// Moves a document along the chain of bijections to the requested kind.
pub fn convert(doc: &Document, to: Kind) -> Result<Document> {
    let unsupported = || Error::Unsupported {
        from: doc.kind().to_string(),
        to: to.to_string(),
    };
    if doc.kind() == to {
        return Ok(doc.clone());
    }
    let (mut here, target) = match (stage(doc.kind()), stage(to)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(unsupported()),
    };
    let mut cur = doc.clone();
    while here != target {
        let forward = here < target;
        cur = step(cur, forward)?;
        here = if forward { here + 1 } else { here - 1 };
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_round_trip() {
        for doc in fixtures::all_documents() {
            let text = serialize(&doc);
            let back = parse(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(serialize(&back), text);
            assert_eq!(parse(&serialize_line(&doc)).unwrap(), doc);
        }
    }

    #[test]
    fn empty_parmat_document() {
        let doc = parse(r#"{"kind": "parmat", "level": 2, "payload": {"entries": []}}"#).unwrap();
        match doc {
            Document::ParMat(x) => {
                assert_eq!(x.level(), 2);
                assert_eq!(x.matrix().total(), 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn trailing_zero_is_rejected() {
        let text = r#"{"kind": "bcm", "level": 1, "payload": {"entries": [
            {"p": 1, "q": 1, "i": 1, "j": 1, "parts": [0, 1, 0]}]}}"#;
        assert_eq!(
            parse(text),
            Err(Error::NonCanonicalComposition(vec![0, 1, 0]))
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse("{\"kind\": \"parmat\",\n \"level\": }").unwrap_err();
        match err {
            Error::Parse(msg) => assert!(msg.contains("line 2"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn validation_errors_list_coordinates() {
        let text = r#"{"kind": "parmat", "level": 2, "payload": {"entries": [
            {"p": 1, "q": 2, "i": 1, "j": 1, "a": 1, "eta": [1]},
            {"p": 2, "q": 2, "i": 1, "j": 1, "a": 1, "eta": [2]}]}}"#;
        match parse(text).unwrap_err() {
            Error::Invalid(v) => {
                assert_eq!(v.len(), 2);
                let msg = Error::Invalid(v).to_string();
                assert!(msg.contains("(p=1, q=2, i=1, j=1)"), "{msg}");
                assert!(msg.contains("(p=2, q=2, i=1, j=1)"), "{msg}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(
            parse(r#"{"kind": "nope", "level": 1, "payload": {}}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse(r#"{"kind": "multicomposition", "level": 2, "payload": {"components": [[1]]}}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse(
                r#"{"kind": "multicomposition", "level": 1, "payload": {"components": [[1]], "x": 1}}"#
            ),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse(
                r#"{"kind": "flagged-biword", "level": 1, "payload": {"components": [{"top": [[0, 1]], "bottom": [[1, 1]]}]}}"#
            ),
            Err(Error::InvalidLetter(_))
        ));
    }

    #[test]
    fn keys_are_sorted() {
        let text = serialize(&Document::ParMat(fixtures::example_parmat()));
        let a = text.find("\"a\"").unwrap();
        let eta = text.find("\"eta\"").unwrap();
        let i = text.find("\"i\"").unwrap();
        assert!(a < eta && eta < i);
        assert!(text.find("\"kind\"").unwrap() < text.find("\"level\"").unwrap());
    }
}
