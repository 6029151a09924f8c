use std::collections::BTreeMap;
use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

use polyharmonic::ExactRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One emitted value. `value` is the exact rational as `num/den`, or an
/// integer when the denominator is 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub value: String,
}

impl OutputRecord {
    pub fn new(name: &str, params: &[(&str, i64)], value: &ExactRational) -> Self {
        OutputRecord {
            name: name.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            value: value.to_string(),
        }
    }
}

pub fn emit(records: &[OutputRecord], format: Format, out: impl Write) -> io::Result<()> {
    match format {
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, records)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let keys: Vec<&String> = records
                .first()
                .map(|r| r.params.keys().collect())
                .unwrap_or_default();
            let mut header = vec!["name"];
            header.extend(keys.iter().map(|k| k.as_str()));
            header.push("value");
            w.write_record(&header)?;
            for rec in records {
                let mut row = vec![rec.name.clone()];
                row.extend(keys.iter().map(|k| rec.params[*k].to_string()));
                row.push(rec.value.clone());
                w.write_record(&row)?;
            }
            w.flush()
        }
    }
}
