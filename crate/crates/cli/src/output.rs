use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

/// A command result in every output format, plus whether it verified.
pub struct Output {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub plain: String,
    pub verified: bool,
}

impl Output {
    pub fn new(json: impl Serialize, header: Vec<&'static str>, rows: Vec<Vec<String>>, plain: String) -> Self {
        Output {
            json: serde_json::to_value(json).expect("serializable output"),
            header,
            rows,
            plain,
            verified: true,
        }
    }

    pub fn verified(mut self, ok: bool) -> Self {
        self.verified = ok;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
            Format::Plain => {
                let mut s = self.plain.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
        }
    }
}
