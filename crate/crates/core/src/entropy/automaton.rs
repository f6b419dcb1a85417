//! Match lengths in linear time with an online suffix automaton.
//!
//! The automaton always holds exactly the prefix `seq[..p]`. At position `p`
//! the current match is extended by walking transitions; afterwards the
//! matched string loses its first character (one suffix-link step at most)
//! and `seq[p]` is appended to the automaton. A match that survives into
//! position `p + 1` is never shorter than the previous one minus one, so the
//! walk does amortized constant work per symbol.
//!
//! Appending can split a state by cloning. When the tracked state is split
//! and the tracked match is short enough to move into the clone, the tracked
//! state follows it.

use std::collections::HashMap;
use std::hash::Hash;

use super::MatchLengths;
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

struct SuffixAutomaton {
    len: Vec<u32>,
    link: Vec<u32>,
    next: Vec<Vec<(u32, u32)>>,
    last: u32,
}

impl SuffixAutomaton {
    fn with_capacity(n: usize) -> Self {
        let cap = 2 * n.max(1);
        let mut sa = Self {
            len: Vec::with_capacity(cap),
            link: Vec::with_capacity(cap),
            next: Vec::with_capacity(cap),
            last: 0,
        };
        sa.push_state(0, NONE, Vec::new());
        sa
    }

    fn push_state(&mut self, len: u32, link: u32, next: Vec<(u32, u32)>) -> u32 {
        self.len.push(len);
        self.link.push(link);
        self.next.push(next);
        (self.len.len() - 1) as u32
    }

    #[inline]
    fn get(&self, state: u32, sym: u32) -> Option<u32> {
        self.next[state as usize]
            .iter()
            .find(|&&(s, _)| s == sym)
            .map(|&(_, t)| t)
    }

    #[inline]
    fn set(&mut self, state: u32, sym: u32, target: u32) {
        let edges = &mut self.next[state as usize];
        match edges.iter_mut().find(|(s, _)| *s == sym) {
            Some(e) => e.1 = target,
            None => edges.push((sym, target)),
        }
    }

    /// Appends `sym`, keeping `tracked` (a state holding a string of length
    /// `tracked_len`) pointing at the state that holds that string afterwards.
    fn extend(&mut self, sym: u32, tracked: &mut u32, tracked_len: u32) {
        let cur = self.push_state(self.len[self.last as usize] + 1, NONE, Vec::new());
        let mut p = self.last;
        while p != NONE && self.get(p, sym).is_none() {
            self.set(p, sym, cur);
            p = self.link[p as usize];
        }
        if p == NONE {
            self.link[cur as usize] = 0;
        } else {
            let q = self.get(p, sym).expect("transition exists");
            if self.len[p as usize] + 1 == self.len[q as usize] {
                self.link[cur as usize] = q;
            } else {
                let clone_len = self.len[p as usize] + 1;
                let clone = self.push_state(
                    clone_len,
                    self.link[q as usize],
                    self.next[q as usize].clone(),
                );
                while p != NONE && self.get(p, sym) == Some(q) {
                    self.set(p, sym, clone);
                    p = self.link[p as usize];
                }
                self.link[q as usize] = clone;
                self.link[cur as usize] = clone;
                if *tracked == q && tracked_len <= clone_len {
                    *tracked = clone;
                }
            }
        }
        self.last = cur;
    }
}

/// Maps symbols to dense ids in order of first appearance.
fn densify<T: Eq + Hash + Copy>(seq: &[T]) -> Vec<u32> {
    let mut ids: HashMap<T, u32> = HashMap::new();
    seq.iter()
        .map(|s| {
            let next = ids.len() as u32;
            *ids.entry(*s).or_insert(next)
        })
        .collect()
}

pub fn match_lengths<T: Eq + Hash + Copy>(seq: &[T]) -> Result<MatchLengths> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    if seq.len() >= (u32::MAX / 2) as usize {
        return Err(Error::InvalidArgument("sequence too long".into()));
    }
    let syms = densify(seq);
    let n = syms.len();
    let mut sa = SuffixAutomaton::with_capacity(n);
    let mut values = Vec::with_capacity(n);
    let mut state = 0u32;
    let mut matched = 0usize;
    for p in 0..n {
        while p + matched < n {
            match sa.get(state, syms[p + matched]) {
                Some(t) => {
                    state = t;
                    matched += 1;
                }
                None => break,
            }
        }
        values.push(matched as u32 + 1);
        if matched > 0 {
            matched -= 1;
            let link = sa.link[state as usize];
            if matched as u32 <= sa.len[link as usize] {
                state = link;
            }
        }
        sa.extend(syms[p], &mut state, matched as u32);
    }
    Ok(MatchLengths::from_values(values))
}
