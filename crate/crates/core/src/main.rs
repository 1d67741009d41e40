use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use levelrsk::combinatorics::{mu_alphabet, LetterMultiset, MultiComposition, MultiPartition};
use levelrsk::document::{self, Document, Kind};
use levelrsk::enumerate::{self, EnumerationBudget};
use levelrsk::{bijection, fixtures, pretty, verify};

#[global_allocator]
static GLOBAL: mimalloc::MiMalloc = mimalloc::MiMalloc;

#[derive(Parser)]
#[command(name = "levelrsk", version, about = "Level-ℓ RSK correspondence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Io {
    /// Input document, `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// Output destination, `-` for stdout.
    #[arg(long, default_value = "-")]
    output: String,
}

#[derive(Subcommand)]
enum Command {
    /// parmat document to tableau-pair document.
    Forward(Io),
    /// tableau-pair document to parmat document.
    Inverse(Io),
    /// Move a document along parmat, bcm, flagged-biword, tableau-pair.
    Convert {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        to: Kind,
    },
    /// List or count a family, one document per line.
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long)]
        level: Option<usize>,
        /// Cap on component length for multicompositions (default: n).
        #[arg(long)]
        max_parts: Option<usize>,
        /// Row sums, e.g. `[[2,1,2],[3],[2,3]]`.
        #[arg(long)]
        nu: Option<String>,
        /// Column sums or tableau content.
        #[arg(long)]
        mu: Option<String>,
        /// Multipartition shape for `sst`.
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        count: bool,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Exhaustive bijectivity sweep; prints a JSON report.
    Verify {
        /// `n=N,level=L[,parts=K]`
        #[arg(long, default_value = "n=3,level=2,parts=3")]
        budget: EnumerationBudget,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Recompute the worked examples and compare with the shipped fixtures.
    Demo {
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Block-matrix and tableau layout of a document.
    Show(Io),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Multicompositions,
    Multipartitions,
    Parmat,
    Bcm,
    FlaggedBiwords,
    Sst,
}

enum Failure {
    Internal(String),
    Input(String),
    Verification(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<levelrsk::Error> for Failure {
    fn from(e: levelrsk::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(PathBuf::from(path))
            .map_err(|e| Failure::Internal(format!("{path}: {e}")))
    }
}

fn write_output(path: &str, text: &str) -> Outcome {
    if path == "-" {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes())?;
        out.flush()?;
    } else {
        fs::write(path, text).map_err(|e| Failure::Internal(format!("{path}: {e}")))?;
    }
    Ok(())
}

fn load(path: &str) -> Result<Document, Failure> {
    Ok(document::parse(&read_input(path)?)?)
}

fn expect_kind(doc: &Document, kind: Kind) -> Outcome {
    if doc.kind() == kind {
        Ok(())
    } else {
        Err(Failure::Input(format!(
            "expected a {kind} document, got {}",
            doc.kind()
        )))
    }
}

fn json_arg<T: serde::de::DeserializeOwned>(flag: &str, text: Option<&str>) -> Result<T, Failure> {
    let text = text.ok_or_else(|| Failure::Input(format!("--{flag} is required")))?;
    serde_json::from_str(text).map_err(|e| Failure::Input(format!("--{flag}: {e}")))
}

fn multicomposition_arg(flag: &str, text: Option<&str>) -> Result<MultiComposition, Failure> {
    Ok(MultiComposition::from_parts(json_arg(flag, text)?)?)
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    family: Family,
    n: u32,
    level: Option<usize>,
    max_parts: Option<usize>,
    nu: Option<&str>,
    mu: Option<&str>,
    shape: Option<&str>,
    count: bool,
) -> Result<String, Failure> {
    let level_arg = || level.ok_or_else(|| Failure::Input("--level is required".into()));
    let docs: Vec<Document> = match family {
        Family::Multicompositions => {
            let parts = max_parts.unwrap_or(n.max(1) as usize);
            enumerate::enum_multicompositions(n, level_arg()?, parts)
                .into_iter()
                .map(Document::MultiComposition)
                .collect()
        }
        Family::Multipartitions => enumerate::enum_multipartitions(n, level_arg()?)
            .into_iter()
            .map(Document::MultiPartition)
            .collect(),
        Family::Parmat | Family::Bcm | Family::FlaggedBiwords => {
            let nu = multicomposition_arg("nu", nu)?;
            let mu = multicomposition_arg("mu", mu)?;
            match family {
                Family::Parmat => enumerate::enum_parmat(&nu, &mu)?
                    .into_iter()
                    .map(Document::ParMat)
                    .collect(),
                Family::Bcm => enumerate::enum_bcm(&nu, &mu)
                    .into_iter()
                    .map(Document::Bcm)
                    .collect(),
                _ => enumerate::enum_flagged_biwords(&nu, &mu)
                    .into_iter()
                    .map(Document::FlaggedBiword)
                    .collect(),
            }
        }
        Family::Sst => {
            let lambda = MultiPartition::from_parts(json_arg("shape", shape)?)?;
            let mu = multicomposition_arg("mu", mu)?;
            enumerate::enum_sst(&lambda, &mu)
                .into_iter()
                .map(Document::Multitableau)
                .collect()
        }
    };
    if count {
        return Ok(format!("{}\n", docs.len()));
    }
    let mut out = String::new();
    for d in &docs {
        out.push_str(&document::serialize_line(d));
        out.push('\n');
    }
    Ok(out)
}

struct Demo {
    text: String,
    mismatches: usize,
}

impl Demo {
    fn compare(&mut self, label: &str, got: &Document, want: &Document) {
        if got == want {
            self.text.push_str(&format!("ok       {label}\n"));
        } else {
            self.mismatches += 1;
            self.text.push_str(&format!(
                "MISMATCH {label}\n  expected: {}\n  got:      {}\n",
                document::serialize_line(want),
                document::serialize_line(got)
            ));
        }
    }

    fn run(&mut self, label: &str, f: impl FnOnce() -> levelrsk::Result<(Document, Document)>) {
        match f() {
            Ok((got, want)) => self.compare(label, &got, &want),
            Err(e) => {
                self.mismatches += 1;
                self.text.push_str(&format!("ERROR    {label}: {e}\n"));
            }
        }
    }
}

fn demo() -> Demo {
    use Document as D;
    let mut d = Demo {
        text: String::new(),
        mismatches: 0,
    };
    let parmat = fixtures::example_parmat();
    let bcm = fixtures::example_bcm();
    let biword = fixtures::example_biword();
    let tableaux = fixtures::example_tableaux();

    let mu = fixtures::example_alphabet();
    let letters = mu_alphabet(&mu);
    d.text.push_str(&format!(
        "alphabet of {mu}: {}\n",
        letters
            .iter()
            .map(|(x, m)| format!("{x}^{m}"))
            .collect::<Vec<_>>()
            .join(" ")
    ));
    d.run("alphabet round trip", || {
        let back = MultiComposition::from_alphabet(mu.level(), &letters)?;
        Ok((D::MultiComposition(back), D::MultiComposition(mu.clone())))
    });
    let content: LetterMultiset = bcm.col_sum().alphabet();
    d.run(
        "alphabet of the column sums is the bottom-row content",
        || {
            let bottoms = biword.bottom_letters();
            let got = MultiComposition::from_alphabet(3, &bottoms)?;
            let want = MultiComposition::from_alphabet(3, &content)?;
            Ok((D::MultiComposition(got), D::MultiComposition(want)))
        },
    );

    d.text.push_str(&pretty::parmat(&parmat));
    d.run("(A,P) -> B", || {
        Ok((
            D::Bcm(bijection::parmat_to_bcm(&parmat)?),
            D::Bcm(bcm.clone()),
        ))
    });
    d.run("B -> (A,P)", || {
        Ok((
            D::ParMat(bijection::bcm_to_parmat(&bcm)?),
            D::ParMat(parmat.clone()),
        ))
    });
    d.text.push_str(&pretty::bcm(&bcm));
    d.run("B -> w", || {
        Ok((
            D::FlaggedBiword(bijection::bcm_to_biwords(&bcm)?),
            D::FlaggedBiword(biword.clone()),
        ))
    });
    d.run("w -> B", || {
        Ok((
            D::Bcm(bijection::biwords_to_bcm(&biword)?),
            D::Bcm(bcm.clone()),
        ))
    });
    d.text.push_str(&pretty::biword(&biword));
    d.run("w -> (P,Q) componentwise", || {
        Ok((
            D::TableauPair(bijection::biwords_to_tableaux(&biword)?),
            D::TableauPair(tableaux.clone()),
        ))
    });
    d.run("psi (A,P)", || {
        Ok((
            D::TableauPair(bijection::psi(&parmat)?),
            D::TableauPair(tableaux.clone()),
        ))
    });
    d.text.push_str(&pretty::tableau_pair(&tableaux));

    let inv_t = fixtures::inverse_tableaux();
    let inv_w = fixtures::inverse_biword();
    let inv_b = fixtures::inverse_bcm();
    let inv_a = fixtures::inverse_parmat();
    d.text.push_str(&pretty::tableau_pair(&inv_t));
    d.run("(P,Q) -> w (inverse example)", || {
        Ok((
            D::FlaggedBiword(bijection::tableaux_to_biwords(&inv_t)?),
            D::FlaggedBiword(inv_w.clone()),
        ))
    });
    d.run("w -> B (inverse example)", || {
        Ok((
            D::Bcm(bijection::biwords_to_bcm(&inv_w)?),
            D::Bcm(inv_b.clone()),
        ))
    });
    d.text.push_str(&pretty::bcm(&inv_b));
    d.run("psi^-1 (inverse example)", || {
        Ok((
            D::ParMat(bijection::psi_inverse(&inv_t)?),
            D::ParMat(inv_a.clone()),
        ))
    });
    d.run("content of Q (inverse example)", || {
        let want = MultiComposition::from_parts(vec![vec![1, 3], vec![1, 1], vec![2, 2]])?;
        Ok((
            D::MultiComposition(inv_t.q().content()?),
            D::MultiComposition(want),
        ))
    });
    d.text.push_str(&format!("{} mismatches\n", d.mismatches));
    d
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Forward(io) => {
            let doc = load(&io.input)?;
            expect_kind(&doc, Kind::ParMat)?;
            let out = document::convert(&doc, Kind::TableauPair)?;
            write_output(&io.output, &document::serialize(&out))
        }
        Command::Inverse(io) => {
            let doc = load(&io.input)?;
            expect_kind(&doc, Kind::TableauPair)?;
            let out = document::convert(&doc, Kind::ParMat)?;
            write_output(&io.output, &document::serialize(&out))
        }
        Command::Convert { io, to } => {
            let doc = load(&io.input)?;
            let out = document::convert(&doc, to)?;
            write_output(&io.output, &document::serialize(&out))
        }
        Command::Enumerate {
            family,
            n,
            level,
            max_parts,
            nu,
            mu,
            shape,
            count,
            output,
        } => {
            let text = cmd_enumerate(
                family,
                n,
                level,
                max_parts,
                nu.as_deref(),
                mu.as_deref(),
                shape.as_deref(),
                count,
            )?;
            write_output(&output, &text)
        }
        Command::Verify { budget, output } => {
            let report = verify::verify_all(&budget);
            let text =
                verify::report_json(&report).map_err(|e| Failure::Internal(e.to_string()))?;
            write_output(&output, &format!("{text}\n"))?;
            if report.is_clean() {
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "{} failed checks",
                    report.total_failed()
                )))
            }
        }
        Command::Demo { output } => {
            let d = demo();
            write_output(&output, &d.text)?;
            if d.mismatches == 0 {
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "{} examples differ from the fixtures",
                    d.mismatches
                )))
            }
        }
        Command::Show(io) => {
            let doc = load(&io.input)?;
            write_output(&io.output, &pretty::document(&doc))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("invalid input: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}
