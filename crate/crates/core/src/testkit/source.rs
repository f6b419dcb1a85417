//! i.i.d. and first-order Markov sources with known entropy rates.

use crate::corpus::SymbolSequence;
use crate::error::{Error, Result};
use crate::transforms::XorShift64Star;

const NORMALIZATION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum SyntheticSource {
    Iid { probs: Vec<f64> },
    Markov1 { transition: Vec<Vec<f64>> },
}

fn check_distribution(p: &[f64], what: &str) -> Result<()> {
    if p.is_empty() {
        return Err(Error::InvalidDistribution(format!("{what} is empty")));
    }
    if p.iter().any(|&x| !(0.0..=1.0).contains(&x) || x.is_nan()) {
        return Err(Error::InvalidDistribution(format!("{what} has entries outside [0, 1]")));
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::InvalidDistribution(format!("{what} sums to {sum}")));
    }
    Ok(())
}

fn plogp(p: f64) -> f64 {
    if p > 0.0 {
        -p * p.log2()
    } else {
        0.0
    }
}

impl SyntheticSource {
    pub fn iid(probs: Vec<f64>) -> Result<Self> {
        check_distribution(&probs, "distribution")?;
        Ok(Self::Iid { probs })
    }

    pub fn uniform(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidDistribution("alphabet size 0".into()));
        }
        Self::iid(vec![1.0 / k as f64; k])
    }

    pub fn markov1(transition: Vec<Vec<f64>>) -> Result<Self> {
        let k = transition.len();
        for (i, row) in transition.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidDistribution(format!(
                    "row {i} has {} entries, expected {k}",
                    row.len()
                )));
            }
            check_distribution(row, &format!("row {i}"))?;
        }
        if k == 0 {
            return Err(Error::InvalidDistribution("empty transition matrix".into()));
        }
        Ok(Self::Markov1 { transition })
    }

    pub fn alphabet_size(&self) -> usize {
        match self {
            Self::Iid { probs } => probs.len(),
            Self::Markov1 { transition } => transition.len(),
        }
    }

    /// Stationary distribution; for i.i.d. sources the distribution itself.
    pub fn stationary(&self) -> Vec<f64> {
        match self {
            Self::Iid { probs } => probs.clone(),
            Self::Markov1 { transition } => stationary(transition),
        }
    }

    /// Entropy rate in bits per symbol.
    pub fn entropy_rate(&self) -> f64 {
        match self {
            Self::Iid { probs } => probs.iter().map(|&p| plogp(p)).sum(),
            Self::Markov1 { transition } => {
                let pi = stationary(transition);
                pi.iter()
                    .zip(transition)
                    .map(|(w, row)| w * row.iter().map(|&p| plogp(p)).sum::<f64>())
                    .sum()
            }
        }
    }
}

/// Power iteration on the lazy chain `(I + P) / 2`, which has the same
/// fixed point as `P` and converges for periodic chains too.
fn stationary(p: &[Vec<f64>]) -> Vec<f64> {
    let k = p.len();
    let mut pi = vec![1.0 / k as f64; k];
    for _ in 0..1_000_000 {
        let mut next = vec![0.0; k];
        for (i, row) in p.iter().enumerate() {
            for (j, &pij) in row.iter().enumerate() {
                next[j] += pi[i] * pij;
            }
        }
        for j in 0..k {
            next[j] = 0.5 * (next[j] + pi[j]);
        }
        let diff = next.iter().zip(&pi).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        pi = next;
        if diff < 1e-12 {
            break;
        }
    }
    let total: f64 = pi.iter().sum();
    pi.iter().map(|x| x / total).collect()
}

/// Character used for symbol `i`: `a..z`, then code points from U+0100.
pub fn symbol_char(i: usize) -> char {
    if i < 26 {
        (b'a' + i as u8) as char
    } else {
        char::from_u32(0x100 + i as u32).expect("valid scalar")
    }
}

fn draw(rng: &mut XorShift64Star, cdf: &[f64]) -> usize {
    let u = rng.next_f64();
    cdf.iter().position(|&c| u < c).unwrap_or(cdf.len() - 1)
}

fn cdf(p: &[f64]) -> Vec<f64> {
    p.iter()
        .scan(0.0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// Symbol indices drawn from the source.
pub fn generate_indices(source: &SyntheticSource, n: usize, seed: u64) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be >= 1".into()));
    }
    let mut rng = XorShift64Star::new(seed);
    Ok(match source {
        SyntheticSource::Iid { probs } => {
            let c = cdf(probs);
            (0..n).map(|_| draw(&mut rng, &c)).collect()
        }
        SyntheticSource::Markov1 { transition } => {
            let rows: Vec<Vec<f64>> = transition.iter().map(|r| cdf(r)).collect();
            let mut state = draw(&mut rng, &cdf(&stationary(transition)));
            let mut out = Vec::with_capacity(n);
            out.push(state);
            for _ in 1..n {
                state = draw(&mut rng, &rows[state]);
                out.push(state);
            }
            out
        }
    })
}

pub fn generate(source: &SyntheticSource, n: usize, seed: u64) -> Result<SymbolSequence> {
    let idx = generate_indices(source, n, seed)?;
    Ok(SymbolSequence::from_chars(idx.into_iter().map(symbol_char).collect()))
}
