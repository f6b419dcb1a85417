//! Two toy languages expressing the same stream of messages.
//!
//! A message is a short sequence of clauses, each an (agent, verb, patient)
//! triple. Verbs prefer a few patients, which gives the stream some
//! collocational structure. The positional language writes every clause as
//! `agent verb patient` with bare roots. The affixal language marks the agent
//! and patient with suffixes and writes the three constituents in random
//! order. Roots are uniform random strings, so they carry no internal
//! structure of their own.

use serde::{Deserialize, Serialize};

use crate::corpus::Book;
use crate::error::{Error, Result};
use crate::transforms::XorShift64Star;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Marking {
    /// Fixed agent-verb-patient order, bare roots.
    Positional,
    /// Random constituent order, role suffixes on agent and patient.
    Affixal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToyLanguageSpec {
    pub nouns: Vec<String>,
    pub verbs: Vec<String>,
    /// For each verb, nouns it usually takes as patient.
    pub preferred_patients: Vec<Vec<usize>>,
    pub agent_suffix: String,
    pub patient_suffix: String,
    pub mode: Marking,
    /// Clauses per sentence are uniform in `1..=max_clauses`.
    pub max_clauses: usize,
    /// Probability that a clause uses one of its verb's preferred patients.
    pub preference: f64,
}

const ROOT_LETTERS: &str = "abdefgilmnoprstuvwyz";

impl ToyLanguageSpec {
    /// Draws a vocabulary of random roots. Roots never end in a suffix.
    pub fn generate(seed: u64, n_nouns: usize, n_verbs: usize, mode: Marking) -> Self {
        let letters: Vec<char> = ROOT_LETTERS.chars().collect();
        let agent_suffix = "ka".to_string();
        let patient_suffix = "ma".to_string();
        let mut rng = XorShift64Star::new(seed);
        let mut seen = std::collections::HashSet::new();
        let mut root = |rng: &mut XorShift64Star| loop {
            let len = 3 + rng.below(4) as usize;
            let r: String = (0..len)
                .map(|_| letters[rng.below(letters.len() as u64) as usize])
                .collect();
            if !r.ends_with(&agent_suffix) && !r.ends_with(&patient_suffix) && seen.insert(r.clone()) {
                break r;
            }
        };
        let nouns: Vec<String> = (0..n_nouns).map(|_| root(&mut rng)).collect();
        let verbs: Vec<String> = (0..n_verbs).map(|_| root(&mut rng)).collect();
        let preferred_patients = (0..n_verbs)
            .map(|_| (0..3).map(|_| rng.below(n_nouns as u64) as usize).collect())
            .collect();
        Self {
            nouns,
            verbs,
            preferred_patients,
            agent_suffix,
            patient_suffix,
            mode,
            max_clauses: 2,
            preference: 0.8,
        }
    }

    pub fn with_mode(&self, mode: Marking) -> Self {
        Self {
            mode,
            ..self.clone()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.nouns.is_empty() || self.verbs.is_empty() {
            return Err(Error::InvalidArgument("toy vocabulary is empty".into()));
        }
        if self.preferred_patients.len() != self.verbs.len()
            || self.preferred_patients.iter().flatten().any(|&p| p >= self.nouns.len())
        {
            return Err(Error::InvalidArgument("bad patient preferences".into()));
        }
        if self.max_clauses == 0 {
            return Err(Error::InvalidArgument("max_clauses must be >= 1".into()));
        }
        for affix in [&self.agent_suffix, &self.patient_suffix] {
            if affix.is_empty() || affix.contains(' ') {
                return Err(Error::InvalidArgument(format!("bad affix {affix:?}")));
            }
            if let Some(root) = self.nouns.iter().chain(&self.verbs).find(|r| r.ends_with(affix.as_str())) {
                return Err(Error::AffixCollision {
                    affix: affix.clone(),
                    root: root.clone(),
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Clause {
    pub agent: usize,
    pub verb: usize,
    pub patient: usize,
}

fn zipf_cdf(n: usize) -> Vec<f64> {
    let weights: Vec<f64> = (1..=n).map(|r| 1.0 / r as f64).collect();
    let total: f64 = weights.iter().sum();
    weights
        .iter()
        .scan(0.0, |acc, w| {
            *acc += w / total;
            Some(*acc)
        })
        .collect()
}

fn sample(rng: &mut XorShift64Star, cdf: &[f64]) -> usize {
    let u = rng.next_f64();
    cdf.partition_point(|&c| c <= u).min(cdf.len() - 1)
}

/// The message stream shared by both renderings.
pub fn messages(spec: &ToyLanguageSpec, n_sentences: usize, seed: u64) -> Vec<Vec<Clause>> {
    let mut rng = XorShift64Star::new(seed);
    let nouns = zipf_cdf(spec.nouns.len());
    let verbs = zipf_cdf(spec.verbs.len());
    (0..n_sentences)
        .map(|_| {
            let clauses = 1 + rng.below(spec.max_clauses as u64) as usize;
            (0..clauses)
                .map(|_| {
                    let agent = sample(&mut rng, &nouns);
                    let verb = sample(&mut rng, &verbs);
                    let prefs = &spec.preferred_patients[verb];
                    let patient = if rng.next_f64() < spec.preference {
                        prefs[rng.below(prefs.len() as u64) as usize]
                    } else {
                        sample(&mut rng, &nouns)
                    };
                    Clause { agent, verb, patient }
                })
                .collect()
        })
        .collect()
}

/// Renders `n_sentences` messages as a book with one sentence per verse.
/// The message stream depends only on `seed`; the affixal constituent order
/// comes from a separate stream derived from it.
pub fn render_toy_corpus(spec: &ToyLanguageSpec, n_sentences: usize, seed: u64) -> Result<Book> {
    if n_sentences == 0 {
        return Err(Error::InvalidArgument("n_sentences must be >= 1".into()));
    }
    spec.validate()?;
    let mut order_rng = XorShift64Star::new(seed ^ 0xA5A5_A5A5_A5A5_A5A5);
    let texts: Vec<String> = messages(spec, n_sentences, seed)
        .into_iter()
        .map(|clauses| {
            let mut words: Vec<String> = Vec::with_capacity(clauses.len() * 3);
            for c in clauses {
                let agent = &spec.nouns[c.agent];
                let verb = &spec.verbs[c.verb];
                let patient = &spec.nouns[c.patient];
                match spec.mode {
                    Marking::Positional => {
                        words.extend([agent.clone(), verb.clone(), patient.clone()]);
                    }
                    Marking::Affixal => {
                        let mut parts = [
                            format!("{agent}{}", spec.agent_suffix),
                            verb.clone(),
                            format!("{patient}{}", spec.patient_suffix),
                        ];
                        order_rng.shuffle(&mut parts);
                        words.extend(parts);
                    }
                }
            }
            words.join(" ")
        })
        .collect();
    let (tid, lang) = match spec.mode {
        Marking::Positional => (format!("toy-positional-{seed}"), "toy-pos"),
        Marking::Affixal => (format!("toy-affixal-{seed}"), "toy-aff"),
    };
    Ok(Book::from_texts(crate::books::MATTHEW, &tid, lang, &texts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(mode: Marking) -> ToyLanguageSpec {
        ToyLanguageSpec::generate(7, 40, 15, mode)
    }

    #[test]
    fn positional_follows_template() {
        let s = spec(Marking::Positional);
        let book = render_toy_corpus(&s, 50, 1).unwrap();
        let msgs = messages(&s, 50, 1);
        for (verse, clauses) in book.verses.iter().zip(&msgs) {
            let toks: Vec<&str> = verse.tokens().collect();
            assert_eq!(toks.len(), 3 * clauses.len());
            for (chunk, c) in toks.chunks(3).zip(clauses) {
                assert_eq!(chunk[0], s.nouns[c.agent]);
                assert_eq!(chunk[1], s.verbs[c.verb]);
                assert_eq!(chunk[2], s.nouns[c.patient]);
            }
        }
    }

    #[test]
    fn affixal_marks_every_argument() {
        let s = spec(Marking::Affixal);
        let book = render_toy_corpus(&s, 50, 1).unwrap();
        let msgs = messages(&s, 50, 1);
        for (verse, clauses) in book.verses.iter().zip(&msgs) {
            let toks: Vec<&str> = verse.tokens().collect();
            for (chunk, c) in toks.chunks(3).zip(clauses) {
                let mut got: Vec<&str> = chunk.to_vec();
                got.sort();
                let agent = format!("{}ka", s.nouns[c.agent]);
                let patient = format!("{}ma", s.nouns[c.patient]);
                let mut want = vec![agent.as_str(), s.verbs[c.verb].as_str(), patient.as_str()];
                want.sort();
                assert_eq!(got, want);
                let marked = chunk.iter().filter(|t| t.ends_with("ka") || t.ends_with("ma")).count();
                assert_eq!(marked, 2);
            }
        }
    }

    #[test]
    fn same_messages_comparable_size() {
        let p = render_toy_corpus(&spec(Marking::Positional), 200, 3).unwrap();
        let a = render_toy_corpus(&spec(Marking::Affixal), 200, 3).unwrap();
        assert_eq!(p.token_count(), a.token_count());
        let ratio = a.char_len() as f64 / p.char_len() as f64;
        assert!(ratio > 1.0 && ratio < 1.6, "{ratio}");
        assert_eq!(p, render_toy_corpus(&spec(Marking::Positional), 200, 3).unwrap());
    }

    #[test]
    fn collision_is_rejected() {
        let mut s = spec(Marking::Affixal);
        s.nouns[0] = "toka".into();
        assert!(matches!(
            render_toy_corpus(&s, 5, 0).unwrap_err(),
            Error::AffixCollision { .. }
        ));
        assert!(render_toy_corpus(&spec(Marking::Positional), 0, 0).is_err());
    }
}
