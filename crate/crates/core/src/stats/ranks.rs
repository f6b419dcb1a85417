//! Per-translation book rankings and their histograms.
//!
//! Rank 1 is the book with the largest value. Equal values are broken by
//! canonical book order (lower book id first) and the table records that a
//! tie occurred.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTable {
    pub translation_id: String,
    /// Books in canonical order; rank vectors are aligned with it.
    pub book_ids: Vec<u32>,
    pub order_ranks: Vec<u32>,
    pub structure_ranks: Vec<u32>,
    pub order_tied: bool,
    pub structure_tied: bool,
}

/// Descending ranks with canonical tie-break. `values` must be sorted by book
/// id. Returns the ranks and whether any two values were equal.
pub fn rank_descending(values: &[f64]) -> (Vec<u32>, bool) {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
    let mut ranks = vec![0u32; values.len()];
    for (pos, &i) in idx.iter().enumerate() {
        ranks[i] = pos as u32 + 1;
    }
    let tied = idx.windows(2).any(|w| values[w[0]] == values[w[1]]);
    (ranks, tied)
}

/// Ranks the `required` books of one translation. `values` maps book id to
/// `(d_order, d_structure)`.
pub fn rank_books(
    translation_id: &str,
    values: &BTreeMap<u32, (f64, f64)>,
    required: &[u32],
) -> Result<RankTable> {
    let mut book_ids = required.to_vec();
    book_ids.sort_unstable();
    book_ids.dedup();
    let missing: Vec<u32> = book_ids.iter().copied().filter(|b| !values.contains_key(b)).collect();
    if !missing.is_empty() {
        return Err(Error::InsufficientData(format!(
            "translation {translation_id} lacks books {missing:?}"
        )));
    }
    let order: Vec<f64> = book_ids.iter().map(|b| values[b].0).collect();
    let structure: Vec<f64> = book_ids.iter().map(|b| values[b].1).collect();
    let (order_ranks, order_tied) = rank_descending(&order);
    let (structure_ranks, structure_tied) = rank_descending(&structure);
    Ok(RankTable {
        translation_id: translation_id.to_string(),
        book_ids,
        order_ranks,
        structure_ranks,
        order_tied,
        structure_tied,
    })
}

/// Rank frequencies over many translations, as integer counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankHistograms {
    pub book_ids: Vec<u32>,
    pub tables: u64,
    /// `order[b][r]`: tables where book `b` had order rank `r + 1`.
    pub order: Vec<Vec<u64>>,
    pub structure: Vec<Vec<u64>>,
    /// `joint[b][ro][rs]`: order rank `ro + 1` and structure rank `rs + 1`.
    pub joint: Vec<Vec<Vec<u64>>>,
}

impl RankHistograms {
    pub fn percent(&self, count: u64) -> f64 {
        100.0 * count as f64 / self.tables as f64
    }
}

pub fn rank_histograms(tables: &[RankTable]) -> Result<RankHistograms> {
    let first = tables
        .first()
        .ok_or_else(|| Error::InsufficientData("no rank tables".into()))?;
    let book_ids = first.book_ids.clone();
    let k = book_ids.len();
    let mut order = vec![vec![0u64; k]; k];
    let mut structure = vec![vec![0u64; k]; k];
    let mut joint = vec![vec![vec![0u64; k]; k]; k];
    for t in tables {
        if t.book_ids != book_ids {
            return Err(Error::InvalidArgument(format!(
                "rank table {} covers books {:?}, expected {:?}",
                t.translation_id, t.book_ids, book_ids
            )));
        }
        for b in 0..k {
            let ro = t.order_ranks[b] as usize - 1;
            let rs = t.structure_ranks[b] as usize - 1;
            order[b][ro] += 1;
            structure[b][rs] += 1;
            joint[b][ro][rs] += 1;
        }
    }
    Ok(RankHistograms {
        book_ids,
        tables: tables.len() as u64,
        order,
        structure,
        joint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::books::*;

    fn values(order: [f64; 6], structure: [f64; 6]) -> BTreeMap<u32, (f64, f64)> {
        // order of arguments: Re, Jn, Mr, Mt, Lk, Ac
        let ids = [REVELATION, JOHN, MARK, MATTHEW, LUKE, ACTS];
        ids.iter().zip(order.iter().zip(structure)).map(|(&b, (&o, s))| (b, (o, s))).collect()
    }

    #[test]
    fn ranks_follow_descending_values() {
        let v = values([0.5, 0.4, 0.3, 0.2, 0.15, 0.1], [0.1, 0.2, 0.3, 0.4, 0.5, 0.6]);
        let t = rank_books("t", &v, &DEFAULT_BOOKS).unwrap();
        assert_eq!(t.book_ids, DEFAULT_BOOKS);
        // canonical order Mt Mr Lk Jn Ac Re
        assert_eq!(t.order_ranks, [4, 3, 5, 2, 6, 1]);
        assert_eq!(t.structure_ranks, [3, 4, 2, 5, 1, 6]);
        assert!(!t.order_tied);
    }

    #[test]
    fn ties_go_to_earlier_book() {
        let v = values([0.5, 0.4, 0.3, 0.3, 0.15, 0.1], [0.1, 0.2, 0.3, 0.4, 0.5, 0.6]);
        let t = rank_books("t", &v, &DEFAULT_BOOKS).unwrap();
        // Mt (id 40) and Mr (id 41) tie at 0.3 -> Mt gets rank 3
        assert_eq!(t.order_ranks[0], 3);
        assert_eq!(t.order_ranks[1], 4);
        assert!(t.order_tied);
    }

    #[test]
    fn missing_book_excluded() {
        let mut v = values([0.5, 0.4, 0.3, 0.2, 0.15, 0.1], [0.0; 6]);
        v.remove(&ACTS);
        assert!(rank_books("t", &v, &DEFAULT_BOOKS).is_err());
    }

    #[test]
    fn single_table_histogram() {
        let v = values([0.5, 0.4, 0.3, 0.2, 0.15, 0.1], [0.1, 0.2, 0.3, 0.4, 0.5, 0.6]);
        let t = rank_books("t", &v, &DEFAULT_BOOKS).unwrap();
        let h = rank_histograms(&[t.clone(), t]).unwrap();
        for b in 0..6 {
            assert_eq!(h.order[b].iter().filter(|&&c| c == 2).count(), 1);
            assert_eq!(h.order[b].iter().sum::<u64>(), 2);
            for r in 0..6 {
                let row: u64 = h.joint[b][r].iter().sum();
                assert_eq!(row, h.order[b][r]);
                let col: u64 = (0..6).map(|ro| h.joint[b][ro][r]).sum();
                assert_eq!(col, h.structure[b][r]);
            }
        }
        assert_eq!(h.percent(2), 100.0);
        assert!(rank_histograms(&[]).is_err());
    }
}
