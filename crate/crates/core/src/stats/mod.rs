//! Statistics over measured books: rank correlation, exact permutation tests,
//! reciprocal fits, cross-book correlation matrices and rank tables.

mod permutation;
mod ranks;
mod regression;
mod spearman;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::books;
use crate::error::{Error, Result};
use crate::measures::{aggregate, AggregateMeasurement, BookMeasurement, GroupBy};

pub use permutation::{exact_perm_test, Alternative, PermutationTest, MAX_EXACT_N};
pub use ranks::{rank_books, rank_descending, rank_histograms, RankHistograms, RankTable};
pub use regression::{fit_reciprocal, RegressionFit};
pub use spearman::{average_ranks, pearson, spearman};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationMatrix {
    /// `order:<book>` labels for every book, then `structure:<book>`.
    pub labels: Vec<String>,
    pub values: Vec<Vec<f64>>,
    /// Number of groups the correlations were computed over.
    pub groups: usize,
}

/// Spearman correlations between every (book, dimension) pair across groups.
/// Only groups that have all `book_ids` take part.
pub fn correlation_matrix(agg: &[AggregateMeasurement], book_ids: &[u32]) -> Result<CorrelationMatrix> {
    let mut by_group: BTreeMap<&str, BTreeMap<u32, (f64, f64)>> = BTreeMap::new();
    for a in agg {
        by_group
            .entry(a.key.as_str())
            .or_default()
            .insert(a.book_id, (a.d_order_mean, a.d_structure_mean));
    }
    let complete: Vec<&BTreeMap<u32, (f64, f64)>> = by_group
        .values()
        .filter(|m| book_ids.iter().all(|b| m.contains_key(b)))
        .collect();
    if complete.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "correlation matrix needs >= 2 groups with all books, found {}",
            complete.len()
        )));
    }

    let mut labels = Vec::new();
    let mut columns: Vec<Vec<f64>> = Vec::new();
    for (dim, pick) in [("order", 0usize), ("structure", 1)] {
        for &b in book_ids {
            labels.push(format!("{dim}:{}", books::abbrev(b)));
            columns.push(
                complete
                    .iter()
                    .map(|m| if pick == 0 { m[&b].0 } else { m[&b].1 })
                    .collect(),
            );
        }
    }

    let k = columns.len();
    let mut values = vec![vec![0.0; k]; k];
    for i in 0..k {
        values[i][i] = 1.0;
        for j in i + 1..k {
            let r = spearman(&columns[i], &columns[j])?;
            values[i][j] = r;
            values[j][i] = r;
        }
    }
    Ok(CorrelationMatrix {
        labels,
        values,
        groups: complete.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BookFit {
    pub book_id: u32,
    pub fit: RegressionFit,
    /// Spearman correlation of `d_order` and `d_structure` over the groups;
    /// `None` when either is constant.
    pub r_s: Option<f64>,
}

/// Reciprocal fit and rank correlation per book, one point per group.
pub fn book_fits(
    agg: &[AggregateMeasurement],
    book_ids: &[u32],
    constrained: bool,
) -> Vec<(u32, Result<BookFit>)> {
    book_ids
        .iter()
        .map(|&book_id| {
            let points: Vec<(f64, f64)> = agg
                .iter()
                .filter(|a| a.book_id == book_id)
                .map(|a| (a.d_order_mean, a.d_structure_mean))
                .collect();
            let result = fit_reciprocal(&points, constrained).map(|fit| {
                let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
                let ys: Vec<f64> = points.iter().map(|p| p.1).collect();
                BookFit {
                    book_id,
                    fit,
                    r_s: spearman(&xs, &ys).ok(),
                }
            });
            (book_id, result)
        })
        .collect()
}

/// Rank tables for every translation holding all `book_ids`, replicates
/// averaged first. Returns the tables and the translations left out together
/// with the reason.
pub fn rank_tables(
    measurements: &[BookMeasurement],
    book_ids: &[u32],
) -> Result<(Vec<RankTable>, Vec<(String, String)>)> {
    let per_translation = aggregate(measurements, GroupBy::Translation)?;
    let mut values: BTreeMap<&str, BTreeMap<u32, (f64, f64)>> = BTreeMap::new();
    for a in &per_translation {
        values
            .entry(a.key.as_str())
            .or_default()
            .insert(a.book_id, (a.d_order_mean, a.d_structure_mean));
    }
    let mut tables = Vec::new();
    let mut excluded = Vec::new();
    for (tid, vals) in values {
        match rank_books(tid, &vals, book_ids) {
            Ok(t) => tables.push(t),
            Err(e) => excluded.push((tid.to_string(), e.to_string())),
        }
    }
    Ok((tables, excluded))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn agg(key: &str, book: u32, o: f64, s: f64) -> AggregateMeasurement {
        AggregateMeasurement {
            key: key.into(),
            book_id: book,
            d_order_mean: o,
            d_order_std: None,
            d_structure_mean: s,
            d_structure_std: None,
            count: 1,
        }
    }

    fn table() -> Vec<AggregateMeasurement> {
        let mut rows = Vec::new();
        for (g, base) in [("a", 0.1), ("b", 0.4), ("c", 0.2), ("d", 0.8)] {
            for (i, &b) in books::DEFAULT_BOOKS.iter().enumerate() {
                let o = base + 0.01 * i as f64 + 0.003 * (g.as_bytes()[0] as f64 * i as f64).sin();
                rows.push(agg(g, b, o, 1.0 / o));
            }
        }
        rows
    }

    #[test]
    fn matrix_is_symmetric_with_unit_diagonal() {
        let m = correlation_matrix(&table(), &books::DEFAULT_BOOKS).unwrap();
        assert_eq!(m.labels.len(), 12);
        assert_eq!(m.labels[0], "order:Mt");
        assert_eq!(m.labels[11], "structure:Re");
        for i in 0..12 {
            assert_eq!(m.values[i][i], 1.0);
            for j in 0..12 {
                assert_eq!(m.values[i][j], m.values[j][i]);
                assert!((-1.0..=1.0).contains(&m.values[i][j]));
            }
        }
        // structure = 1/order within each group: perfectly inverse rankings
        assert!((m.values[0][6] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn matrix_needs_two_complete_groups() {
        let rows: Vec<_> = table().into_iter().filter(|a| a.key == "a").collect();
        assert!(correlation_matrix(&rows, &books::DEFAULT_BOOKS).is_err());
    }

    #[test]
    fn fits_per_book() {
        let fits = book_fits(&table(), &books::DEFAULT_BOOKS, false);
        assert_eq!(fits.len(), 6);
        for (_, f) in fits {
            let f = f.unwrap();
            assert!((f.fit.beta1 - 1.0).abs() < 1e-9);
            assert!(f.fit.beta0.abs() < 1e-9);
            assert_eq!(f.r_s, Some(-1.0));
        }
    }
}
