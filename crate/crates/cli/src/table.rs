use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use s3bundle::bundles::{enumerate_homotopy_types, homotopy_modulus};
use s3bundle::linkforms::square_class_count;
use s3bundle::modcore::factor;

use crate::commands::pl_regime;

pub const MAX_TABLE_N: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    JsonLines,
    Csv,
}

/// Fields are declared in alphabetical order so that CSV columns and JSON
/// keys line up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub g: u64,
    pub homotopy_type_count: usize,
    pub n: u64,
    pub pl_regime: &'static str,
    pub square_class_count: u64,
    pub theorem4_applies: bool,
}

pub fn row(n: u64) -> Row {
    let big = BigInt::from(n);
    let f = factor(&big).expect("n >= 1");
    let theorem4_applies = f
        .as_prime_power()
        .is_some_and(|(p, _)| (p % 4u32) == BigInt::from(3));
    let to_u64 = |v: BigInt| u64::try_from(v).expect("fits: n <= 10^6");
    Row {
        g: to_u64(homotopy_modulus(&big)),
        homotopy_type_count: enumerate_homotopy_types(&big).expect("n >= 1").len(),
        n,
        pl_regime: pl_regime(&big),
        square_class_count: to_u64(square_class_count(&big).expect("n >= 1")),
        theorem4_applies,
    }
}

/// Rows for `1..=max_n`, computed in parallel and returned in order of `n`.
pub fn rows(max_n: u64) -> Vec<Row> {
    (1..=max_n).into_par_iter().map(row).collect()
}

pub fn write(rows: &[Row], format: TableFormat, output: Option<&Path>) -> io::Result<()> {
    let sink: Box<dyn Write> = match output {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    match format {
        TableFormat::JsonLines => {
            for r in rows {
                serde_json::to_writer(&mut sink, r)?;
                sink.write_all(b"\n")?;
            }
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut sink);
            for r in rows {
                w.serialize(r).map_err(io::Error::other)?;
            }
            w.flush()?;
        }
    }
    sink.flush()
}
