//! JSON documents describing connections, triples, metrics and gauges.
//!
//! ```json
//! {"dimension": 4, "rank": 2,
//!  "entries": [["x1*dx2", "0"], ["dx3", "-x2*dx1"]],
//!  "alpha": "x3*dx1",
//!  "metric": [["1", "x1"], ["0", "1"]],
//!  "gauge": [["1", "x2"], ["0", "1"]]}
//! ```
//!
//! `metric` is the unimodular factor `g` of `H = gᴴg`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chern_weil::{Connection, Gauge, Metric};
use crate::error::{Error, Result};
use crate::form::Form;
use crate::ktheory::Triple;
use crate::lambda::LambdaRep;
use crate::matrix::FormMatrix;
use crate::parse::parse_form;
use crate::render::render_form;
use crate::transgression::ConnectionPath;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub dimension: usize,
    pub rank: usize,
    pub entries: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gauge: Option<Vec<Vec<String>>>,
}

/// A single form with its ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormDocument {
    pub dimension: usize,
    pub form: String,
}

impl FormDocument {
    pub fn parse(&self) -> Result<Form> {
        parse_form(&self.form, self.dimension)
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Document(format!("{}: {e}", path.display())))
}

impl Document {
    pub fn from_json(src: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(src).map_err(|e| Error::Document(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&read(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    fn validate(&self) -> Result<()> {
        if self.rank == 0 {
            return Err(Error::Document("rank must be positive".into()));
        }
        check_shape("entries", &self.entries, self.rank)?;
        if let Some(m) = &self.metric {
            check_shape("metric", m, self.rank)?;
        }
        if let Some(g) = &self.gauge {
            check_shape("gauge", g, self.rank)?;
        }
        Ok(())
    }

    fn matrix(&self, rows: &[Vec<String>]) -> Result<FormMatrix> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_form(s, self.dimension)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FormMatrix::from_rows(self.dimension, parsed)
    }

    pub fn connection(&self) -> Result<Connection> {
        let m = self.matrix(&self.entries)?;
        if m.entries().iter().any(|e| e.is_cylinder()) {
            return Err(Error::Document("connection entries may not involve t or dt".into()));
        }
        Connection::new(m)
    }

    /// The entries read as a path of connections on the cylinder.
    pub fn path(&self) -> Result<ConnectionPath> {
        ConnectionPath::new(self.matrix(&self.entries)?)
    }

    pub fn alpha(&self) -> Result<LambdaRep> {
        match &self.alpha {
            None => Ok(LambdaRep::zero(self.dimension)),
            Some(src) => LambdaRep::new(parse_form(src, self.dimension)?),
        }
    }

    pub fn triple(&self) -> Result<Triple> {
        Triple::new(self.connection()?, self.alpha()?)
    }

    pub fn metric(&self) -> Result<Metric> {
        match &self.metric {
            None => Ok(Metric::identity(self.rank, self.dimension)),
            Some(rows) => Metric::new(self.matrix(rows)?),
        }
    }

    pub fn gauge(&self) -> Result<Option<Gauge>> {
        self.gauge.as_ref().map(|rows| Gauge::new(self.matrix(rows)?)).transpose()
    }

    /// A document describing a triple, rendered canonically.
    pub fn from_triple(t: &Triple) -> Document {
        Document {
            dimension: t.dim(),
            rank: t.rank(),
            entries: render_rows(t.connection().matrix()),
            alpha: (!t.alpha().is_zero()).then(|| render_form(t.alpha().form())),
            metric: None,
            gauge: None,
        }
    }
}

pub fn render_rows(m: &FormMatrix) -> Vec<Vec<String>> {
    m.rows().iter().map(|r| r.iter().map(render_form).collect()).collect()
}

fn check_shape(what: &str, rows: &[Vec<String>], rank: usize) -> Result<()> {
    if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
        return Err(Error::Document(format!("{what} must be a {rank}x{rank} matrix")));
    }
    Ok(())
}

/// Reads a form file: either a JSON `{"dimension", "form"}` object or plain
/// expression text in dimension `default_dim`.
pub fn load_form(path: &Path, default_dim: usize) -> Result<Form> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let doc: FormDocument = serde_json::from_str(&text).map_err(|e| Error::Document(e.to_string()))?;
        doc.parse()
    } else {
        parse_form(&text, default_dim)
    }
}
