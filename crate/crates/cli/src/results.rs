//! The results table shared by `analyze` and `stats`.

use std::io::{Read, Write};

use anyhow::{bail, Context, Result};
use lexorder_core::format::sig6;
use lexorder_core::measures::{BookMeasurement, ReplicateSeeds};

pub const HEADER: [&str; 10] = [
    "translation_id",
    "language",
    "book_id",
    "replicate",
    "N",
    "h_original",
    "h_order",
    "h_structure",
    "d_order",
    "d_structure",
];

pub fn write_results<W: Write>(out: W, rows: &[BookMeasurement]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(HEADER)?;
    for m in rows {
        w.write_record([
            m.translation_id.clone(),
            m.language.clone(),
            m.book_id.to_string(),
            m.replicate.to_string(),
            m.n.to_string(),
            sig6(m.h_original),
            sig6(m.h_order),
            sig6(m.h_structure),
            sig6(m.d_order),
            sig6(m.d_structure),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a results table, rejecting files whose header differs from
/// [`HEADER`]. Seeds are not stored in the table and come back as zero.
pub fn read_results<R: Read>(input: R) -> Result<Vec<BookMeasurement>> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header = r.headers().context("reading header")?.clone();
    if header.iter().ne(HEADER) {
        bail!("schema violation: header {:?}, expected {:?}", header.iter().collect::<Vec<_>>(), HEADER);
    }
    let mut rows = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let line = i + 2;
        let rec = rec.with_context(|| format!("results line {line}"))?;
        if rec.len() != HEADER.len() {
            bail!("schema violation: line {line} has {} fields", rec.len());
        }
        let num = |idx: usize| -> Result<f64> {
            rec[idx]
                .parse::<f64>()
                .with_context(|| format!("schema violation: line {line}, {} = {:?}", HEADER[idx], &rec[idx]))
        };
        let int = |idx: usize| -> Result<u64> {
            rec[idx]
                .parse::<u64>()
                .with_context(|| format!("schema violation: line {line}, {} = {:?}", HEADER[idx], &rec[idx]))
        };
        rows.push(BookMeasurement {
            translation_id: rec[0].to_string(),
            language: rec[1].to_string(),
            book_id: int(2)? as u32,
            replicate: int(3)? as u32,
            n: int(4)? as usize,
            h_original: num(5)?,
            h_order: num(6)?,
            h_structure: num(7)?,
            d_order: num(8)?,
            d_structure: num(9)?,
            seeds: ReplicateSeeds {
                verse_shuffle: 0,
                order_shuffle: 0,
                mask_draw: 0,
            },
        });
    }
    Ok(rows)
}
