//! The `stats` command: everything computed from a results table.
//!
//! Files written to the output directory:
//!
//! * `fits.csv`: reciprocal fit and Spearman r_s per book over groups
//! * `corr_matrix.csv`: (book x dimension) Spearman matrix over groups
//! * `ranks.csv`: book ranks per translation
//! * `interbook.csv`: per translation, r_s between order and structure ranks
//!   with its exact permutation p-value
//! * `rank_hist.csv`: marginal and joint rank frequencies
//! * `rank_agreement.csv`: pairwise agreement of translations' rankings

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use lexorder_core::books;
use lexorder_core::format::sig6;
use lexorder_core::measures::{aggregate, BookMeasurement, GroupBy};
use lexorder_core::stats::{
    book_fits, correlation_matrix, exact_perm_test, rank_histograms, rank_tables, Alternative,
    RankTable,
};
use log::warn;

use crate::results::read_results;

#[derive(Debug, Clone)]
pub struct StatsOptions {
    pub group_by: GroupBy,
    pub books: Vec<u32>,
    /// Fit `d_structure = c / d_order` instead of the free model.
    pub constrained: bool,
    /// Pairwise rank agreement is skipped above this many rank tables.
    pub max_agreement_tables: usize,
}

impl Default for StatsOptions {
    fn default() -> Self {
        Self {
            group_by: GroupBy::Language,
            books: books::DEFAULT_BOOKS.to_vec(),
            constrained: false,
            max_agreement_tables: 60,
        }
    }
}

#[derive(Debug, Default)]
pub struct StatsReport {
    pub written: Vec<PathBuf>,
    pub notices: Vec<String>,
}

impl StatsReport {
    fn notice(&mut self, msg: String) {
        warn!("{msg}");
        self.notices.push(msg);
    }
}

fn csv_writer(path: &Path) -> Result<csv::Writer<fs::File>> {
    Ok(csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_path(path)
        .with_context(|| format!("creating {}", path.display()))?)
}

pub fn run(results: &Path, opts: &StatsOptions, out_dir: &Path) -> Result<StatsReport> {
    let file = fs::File::open(results).with_context(|| format!("opening {}", results.display()))?;
    let rows = read_results(std::io::BufReader::new(file))?;
    fs::create_dir_all(out_dir)?;
    compute(&rows, opts, out_dir)
}

pub fn compute(rows: &[BookMeasurement], opts: &StatsOptions, out_dir: &Path) -> Result<StatsReport> {
    let mut report = StatsReport::default();
    if rows.is_empty() {
        report.notice("results table is empty; nothing to fit".into());
    }
    let agg = if rows.is_empty() {
        Vec::new()
    } else {
        aggregate(rows, opts.group_by)?
    };

    // fits.csv
    let path = out_dir.join("fits.csv");
    let mut w = csv_writer(&path)?;
    w.write_record(["book_id", "beta0", "beta1", "r_squared", "n", "r_s"])?;
    let present: Vec<u32> = opts
        .books
        .iter()
        .copied()
        .filter(|b| agg.iter().any(|a| a.book_id == *b))
        .collect();
    for b in opts.books.iter().filter(|b| !present.contains(b)) {
        report.notice(format!("fit for book {b} skipped: no data"));
    }
    for (book_id, fit) in book_fits(&agg, &present, opts.constrained) {
        match fit {
            Ok(f) => w.write_record([
                book_id.to_string(),
                sig6(f.fit.beta0),
                sig6(f.fit.beta1),
                sig6(f.fit.r_squared),
                f.fit.n_points.to_string(),
                f.r_s.map(sig6).unwrap_or_default(),
            ])?,
            Err(e) => report.notice(format!("fit for book {book_id} skipped: {e}")),
        }
    }
    w.flush()?;
    report.written.push(path);

    // corr_matrix.csv
    match correlation_matrix(&agg, &opts.books) {
        Ok(m) => {
            let path = out_dir.join("corr_matrix.csv");
            let mut w = csv_writer(&path)?;
            let mut header = vec!["label".to_string()];
            header.extend(m.labels.iter().cloned());
            w.write_record(&header)?;
            for (label, row) in m.labels.iter().zip(&m.values) {
                let mut rec = vec![label.clone()];
                rec.extend(row.iter().map(|&v| sig6(v)));
                w.write_record(&rec)?;
            }
            w.flush()?;
            report.written.push(path);
        }
        Err(e) => report.notice(format!("corr_matrix skipped: {e}")),
    }

    // rank tables
    let (tables, excluded) = if rows.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        rank_tables(rows, &opts.books)?
    };
    for (tid, why) in &excluded {
        report.notice(format!("ranks: {tid} excluded ({why})"));
    }
    report.written.push(write_ranks(&tables, out_dir)?);
    report.written.push(write_interbook(&tables, out_dir)?);
    report.written.push(write_rank_hist(&tables, out_dir)?);
    if tables.len() <= opts.max_agreement_tables {
        report.written.push(write_agreement(&tables, out_dir)?);
    } else {
        report.notice(format!(
            "rank_agreement skipped: {} translations exceed the pairwise limit of {}",
            tables.len(),
            opts.max_agreement_tables
        ));
    }
    Ok(report)
}

fn write_ranks(tables: &[RankTable], out_dir: &Path) -> Result<PathBuf> {
    let path = out_dir.join("ranks.csv");
    let mut w = csv_writer(&path)?;
    w.write_record(["translation_id", "book_id", "order_rank", "structure_rank", "order_tied", "structure_tied"])?;
    for t in tables {
        for (i, b) in t.book_ids.iter().enumerate() {
            w.write_record([
                t.translation_id.clone(),
                b.to_string(),
                t.order_ranks[i].to_string(),
                t.structure_ranks[i].to_string(),
                t.order_tied.to_string(),
                t.structure_tied.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(path)
}

fn as_f64(ranks: &[u32]) -> Vec<f64> {
    ranks.iter().map(|&r| f64::from(r)).collect()
}

/// Trade-off across books inside one translation: a negative r_s means books
/// with more order information carry less structure information. The p-value
/// is for the alternative `r_s < 0`.
fn write_interbook(tables: &[RankTable], out_dir: &Path) -> Result<PathBuf> {
    let path = out_dir.join("interbook.csv");
    let mut w = csv_writer(&path)?;
    w.write_record(["translation_id", "r_s", "p_less", "p_less_value"])?;
    for t in tables {
        let test = exact_perm_test(&as_f64(&t.order_ranks), &as_f64(&t.structure_ranks), Alternative::Less);
        match test {
            Ok(p) => w.write_record([t.translation_id.clone(), sig6(p.r_s), p.rational(), sig6(p.p_value())])?,
            Err(e) => warn!("interbook {}: {e}", t.translation_id),
        }
    }
    w.flush()?;
    Ok(path)
}

fn write_rank_hist(tables: &[RankTable], out_dir: &Path) -> Result<PathBuf> {
    let path = out_dir.join("rank_hist.csv");
    let mut w = csv_writer(&path)?;
    w.write_record([
        "book_id",
        "kind",
        "order_rank",
        "structure_rank",
        "count",
        "total",
        "fraction",
        "percent",
        "percent_rounded",
    ])?;
    if tables.is_empty() {
        w.flush()?;
        return Ok(path);
    }
    let h = rank_histograms(tables)?;
    let k = h.book_ids.len();
    let row = |w: &mut csv::Writer<fs::File>, b: usize, kind: &str, ro: String, rs: String, count: u64| {
        let pct = h.percent(count);
        w.write_record([
            h.book_ids[b].to_string(),
            kind.to_string(),
            ro,
            rs,
            count.to_string(),
            h.tables.to_string(),
            format!("{count}/{}", h.tables),
            sig6(pct),
            format!("{}", pct.round() as i64),
        ])
    };
    for b in 0..k {
        for r in 0..k {
            row(&mut w, b, "order", (r + 1).to_string(), String::new(), h.order[b][r])?;
        }
        for r in 0..k {
            row(&mut w, b, "structure", String::new(), (r + 1).to_string(), h.structure[b][r])?;
        }
        for ro in 0..k {
            for rs in 0..k {
                row(&mut w, b, "joint", (ro + 1).to_string(), (rs + 1).to_string(), h.joint[b][ro][rs])?;
            }
        }
    }
    w.flush()?;
    Ok(path)
}

/// How similarly two translations rank the books; `greater` alternative.
fn write_agreement(tables: &[RankTable], out_dir: &Path) -> Result<PathBuf> {
    let path = out_dir.join("rank_agreement.csv");
    let mut w = csv_writer(&path)?;
    w.write_record(["translation_a", "translation_b", "dimension", "r_s", "p_greater", "p_greater_value"])?;
    for (i, a) in tables.iter().enumerate() {
        for b in &tables[i + 1..] {
            for (dim, ra, rb) in [
                ("order", &a.order_ranks, &b.order_ranks),
                ("structure", &a.structure_ranks, &b.structure_ranks),
            ] {
                if let Ok(p) = exact_perm_test(&as_f64(ra), &as_f64(rb), Alternative::Greater) {
                    w.write_record([
                        a.translation_id.clone(),
                        b.translation_id.clone(),
                        dim.to_string(),
                        sig6(p.r_s),
                        p.rational(),
                        sig6(p.p_value()),
                    ])?;
                }
            }
        }
    }
    w.flush()?;
    Ok(path)
}
