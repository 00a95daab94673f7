//! Tabular output shared by all subcommands.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Markdown,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub command: String,
    pub q: Option<u32>,
    pub version: String,
}

/// Column schema plus rows of already formatted cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub metadata: Metadata,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, thiserror::Error)]
pub enum OutputError {
    #[error("row {row} has {got} cells, schema has {expected}")]
    Arity { row: usize, expected: usize, got: usize },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl OutputDocument {
    pub fn new(command: impl Into<String>, q: Option<u32>, columns: &[&str]) -> OutputDocument {
        OutputDocument {
            metadata: Metadata { command: command.into(), q, version: env!("CARGO_PKG_VERSION").to_string() },
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row arity");
        self.rows.push(row);
    }

    pub fn validate(&self) -> Result<(), OutputError> {
        for (i, r) in self.rows.iter().enumerate() {
            if r.len() != self.columns.len() {
                return Err(OutputError::Arity { row: i, expected: self.columns.len(), got: r.len() });
            }
        }
        Ok(())
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn render(&self, format: Format) -> Result<String, OutputError> {
        self.validate()?;
        match format {
            Format::Csv => self.to_csv(),
            Format::Markdown => Ok(self.to_markdown()),
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
        }
    }

    fn to_csv(&self) -> Result<String, OutputError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("cells are UTF-8"))
    }

    fn to_markdown(&self) -> String {
        let esc = |s: &str| s.replace('|', "\\|");
        let mut out = String::new();
        let q = self.metadata.q.map(|q| format!(" q={q}")).unwrap_or_default();
        out.push_str(&format!("<!-- {}{q} v{} -->\n", self.metadata.command, self.metadata.version));
        out.push_str(&format!("| {} |\n", self.columns.iter().map(|c| esc(c)).collect::<Vec<_>>().join(" | ")));
        out.push_str(&format!("|{}\n", "---|".repeat(self.columns.len())));
        for r in &self.rows {
            out.push_str(&format!("| {} |\n", r.iter().map(|c| esc(c)).collect::<Vec<_>>().join(" | ")));
        }
        out
    }

    pub fn from_json(text: &str) -> Result<OutputDocument, OutputError> {
        let doc: OutputDocument = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    /// Parses CSV produced by [`OutputDocument::render`]; metadata is not
    /// part of the CSV form.
    pub fn from_csv(text: &str, metadata: Metadata) -> Result<OutputDocument, OutputError> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let columns = r.headers()?.iter().map(String::from).collect();
        let rows = r
            .records()
            .map(|rec| rec.map(|rec| rec.iter().map(String::from).collect()))
            .collect::<Result<_, _>>()?;
        let doc = OutputDocument { metadata, columns, rows };
        doc.validate()?;
        Ok(doc)
    }
}
