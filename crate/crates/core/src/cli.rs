//! Command-line interface. Every command renders forms with
//! [`render_form`](crate::render::render_form) and prints either plain text
//! or JSON with sorted keys.

use std::path::{Path, PathBuf};

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cap::is_special_imaginary;
use crate::chern_weil::{eval_poly, InvPoly};
use crate::document::{load_form, render_rows, Document};
use crate::error::{Error, Result};
use crate::ktheory::{borel_additive, borel_star, normalize_add, normalize_mult, Term};
use crate::matrix::FormMatrix;
use crate::render::render_form;
use crate::transgression::{cs_additive, cs_hat};
use crate::verify::{run_verify, suite_names, Profile};

#[derive(Parser, Debug)]
#[command(name = "ctot", version, about = "Exact exterior calculus for smooth K-theory on R^m")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Additive,
    Multiplicative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Flavor {
    Mult,
    Add,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Curvature matrix F = dA + A∧A of a connection document.
    Curvature { doc: PathBuf },
    /// Chern–Weil form of an invariant polynomial (ctot, ch, ck:K, inv(P), (P)*(Q)).
    Chern {
        doc: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Transgression form between the connections of two documents.
    Transgress {
        doc0: PathBuf,
        doc1: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Defaults to ch (additive) or ctot (multiplicative).
        #[arg(long)]
        poly: Option<String>,
        /// `affine`, or a document whose entries depend on t and dt.
        #[arg(long, default_value = "affine")]
        path: String,
    },
    /// Normal form (rank, α) of a formal sum of triples.
    Normalize {
        #[arg(required = true)]
        docs: Vec<PathBuf>,
        #[arg(long, value_enum)]
        flavor: Flavor,
        /// Triples entering with a minus sign.
        #[arg(long)]
        minus: Vec<PathBuf>,
    },
    /// Borel classes ℬ* and ℬ of a triple.
    Borel {
        doc: PathBuf,
        /// JSON matrix of expressions: the unimodular factor g of H = gᴴg.
        #[arg(long)]
        metric: Option<PathBuf>,
    },
    /// A primitive of a closed form, read as JSON {dimension, form} or plain text.
    Primitive {
        form_file: PathBuf,
        /// Dimension for plain-text form files.
        #[arg(long, default_value_t = 4)]
        dim: usize,
    },
    /// Seeded randomized verification of the algebraic identities.
    Verify {
        #[arg(long, value_parser = PossibleValuesParser::new(suite_names()))]
        suite: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "default", value_parser = PossibleValuesParser::new(["small", "default", "large"]))]
        profile: String,
    },
}

/// What a command printed and the process exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub status: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn text_lines(pairs: &[(&str, String)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

fn emit(format: OutputFormat, value: Value, text: String) -> Outcome {
    let stdout = match format {
        OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("json values serialize")),
        OutputFormat::Text => text,
    };
    Outcome { stdout, status: EXIT_OK }
}

fn matrix_text(name: &str, m: &FormMatrix) -> String {
    let mut out = String::new();
    for (i, row) in m.rows().iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            out += &format!("{name}[{},{}] = {}\n", i + 1, j + 1, render_form(e));
        }
    }
    out
}

fn load_metric(path: &Path, doc: &Document) -> Result<crate::chern_weil::Metric> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Document(format!("{}: {e}", path.display())))?;
    let rows: Vec<Vec<String>> = serde_json::from_str(&text).map_err(|e| Error::Document(e.to_string()))?;
    let with_metric = Document { metric: Some(rows), ..doc.clone() };
    Document::from_json(&with_metric.to_json())?.metric()
}

/// Executes a parsed command. Errors are usage or input errors.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.output;
    match &cli.command {
        Command::Curvature { doc } => {
            let conn = Document::load(doc)?.connection()?;
            let f = conn.curvature();
            Ok(emit(fmt, json!({ "curvature": render_rows(&f) }), matrix_text("F", &f)))
        }
        Command::Chern { doc, poly } => {
            let p: InvPoly = poly.parse()?;
            let conn = Document::load(doc)?.connection()?;
            let form = render_form(&eval_poly(&p, &conn.curvature())?);
            let text = text_lines(&[("poly", p.to_string()), ("form", form.clone())]);
            Ok(emit(fmt, json!({ "poly": p.to_string(), "form": form }), text))
        }
        Command::Transgress { doc0, doc1, mode, poly, path } => {
            let (d0, d1) = (Document::load(doc0)?, Document::load(doc1)?);
            let (c0, c1) = (d0.connection()?, d1.connection()?);
            let explicit = match path.as_str() {
                "affine" => None,
                file => Some(Document::load(Path::new(file))?.path()?),
            };
            let default = match mode {
                Mode::Additive => InvPoly::ChernChar,
                Mode::Multiplicative => InvPoly::TotalChern,
            };
            let p = poly.as_deref().map(str::parse).transpose()?.unwrap_or(default);
            let value = match mode {
                Mode::Additive => cs_additive(&p, &c0, &c1, explicit.as_ref())?,
                Mode::Multiplicative => cs_hat(&p, &c0, &c1, explicit.as_ref())?,
            };
            let mode_name = match mode {
                Mode::Additive => "additive",
                Mode::Multiplicative => "multiplicative",
            };
            let (form, d) = (render_form(value.form()), render_form(&value.d()));
            let text = text_lines(&[("mode", mode_name.into()), ("poly", p.to_string()), ("form", form.clone()), ("d", d.clone())]);
            Ok(emit(fmt, json!({ "mode": mode_name, "poly": p.to_string(), "form": form, "d": d }), text))
        }
        Command::Normalize { docs, flavor, minus } => {
            let mut terms = vec![];
            for p in docs {
                terms.push(Term::Plus(Document::load(p)?.triple()?));
            }
            for p in minus {
                terms.push(Term::Minus(Document::load(p)?.triple()?));
            }
            let dim = terms[0].triple().dim();
            if let Some(t) = terms.iter().find(|t| t.triple().dim() != dim) {
                return Err(Error::DimensionMismatch(dim, t.triple().dim()));
            }
            let (rank, alpha, name) = match flavor {
                Flavor::Mult => {
                    let k = normalize_mult(dim, &terms);
                    (k.rank, k.alpha, "mult")
                }
                Flavor::Add => {
                    let k = normalize_add(dim, &terms);
                    (k.rank, k.alpha, "add")
                }
            };
            let alpha = render_form(alpha.form());
            let text = text_lines(&[("flavor", name.into()), ("rank", rank.to_string()), ("alpha", alpha.clone())]);
            Ok(emit(fmt, json!({ "flavor": name, "rank": rank, "alpha": alpha }), text))
        }
        Command::Borel { doc, metric } => {
            let d = Document::load(doc)?;
            let t = d.triple()?;
            let h = match metric {
                Some(path) => load_metric(path, &d)?,
                None => d.metric()?,
            };
            let star = borel_star(&t, &h)?;
            let additive = borel_additive(&t, &h)?;
            let special = is_special_imaginary(&star);
            let (s, a) = (render_form(star.form()), render_form(additive.form()));
            let text = text_lines(&[
                ("borel_star", s.clone()),
                ("borel_additive", a.clone()),
                ("special_imaginary", special.to_string()),
            ]);
            Ok(emit(fmt, json!({ "borel_star": s, "borel_additive": a, "special_imaginary": special }), text))
        }
        Command::Primitive { form_file, dim } => {
            let form = load_form(form_file, *dim)?;
            let eta = form.poincare_primitive()?;
            let (f, p) = (render_form(&form), render_form(&eta));
            let text = text_lines(&[("form", f.clone()), ("primitive", p.clone())]);
            Ok(emit(fmt, json!({ "form": f, "primitive": p }), text))
        }
        Command::Verify { suite, seed, profile } => {
            let profile = Profile::by_name(profile).expect("clap restricts profile names");
            let report = run_verify(suite, *seed, profile)?;
            let stdout = match fmt {
                OutputFormat::Json => format!("{}\n", report.to_json()),
                OutputFormat::Text => report.to_text(),
            };
            let status = if report.passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
            Ok(Outcome { stdout, status })
        }
    }
}
