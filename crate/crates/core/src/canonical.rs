//! The canonical reduced word of a boolean permutation.
//!
//! Runs are peeled off starting from the smallest letter: decreasing runs
//! (and singletons) collect on the left in increasing order, increasing runs
//! collect on the right in decreasing order. The first letters of the runs
//! determine the second row of the insertion tableau and the last letters the
//! second row of the recording tableau.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::heap::{heap_of, Cover, Heap};
use crate::permutation::Permutation;
use crate::words::{concat_runs, display_runs, RunWord, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CanonicalWord {
    /// Decreasing runs and singletons, smaller letters first.
    dec_runs: Vec<RunWord>,
    /// Increasing runs, larger letters first.
    inc_runs: Vec<RunWord>,
    degree: usize,
}

impl CanonicalWord {
    pub(crate) fn from_parts(dec_runs: Vec<RunWord>, inc_runs: Vec<RunWord>, degree: usize) -> Self {
        CanonicalWord {
            dec_runs,
            inc_runs,
            degree,
        }
    }

    pub fn empty(degree: usize) -> Self {
        CanonicalWord::from_parts(Vec::new(), Vec::new(), degree)
    }

    pub fn dec_runs(&self) -> &[RunWord] {
        &self.dec_runs
    }

    pub fn inc_runs(&self) -> &[RunWord] {
        &self.inc_runs
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// All runs in word order.
    pub fn runs(&self) -> impl Iterator<Item = &RunWord> {
        self.dec_runs.iter().chain(&self.inc_runs)
    }

    pub fn run_count(&self) -> usize {
        self.dec_runs.len() + self.inc_runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.run_count() == 0
    }

    /// The assembled reduced word.
    pub fn word(&self) -> Word {
        concat_runs(self.runs(), self.degree).expect("letters fit the degree")
    }

    pub fn evaluate(&self) -> Permutation {
        self.word().evaluate()
    }

    pub fn leftmost_letters(&self) -> BTreeSet<usize> {
        self.runs().map(RunWord::first).collect()
    }

    pub fn rightmost_letters(&self) -> BTreeSet<usize> {
        self.runs().map(RunWord::last).collect()
    }

    /// Builds the canonical word from the heap by scanning its elements from
    /// the smallest up.
    pub fn from_heap(heap: &Heap) -> Self {
        let mut remaining: BTreeSet<usize> = heap.elements().clone();
        let mut dec_runs = Vec::new();
        let mut inc_stack = Vec::new();
        while let Some(&a) = remaining.first() {
            let run = match heap.cover(a).filter(|_| remaining.contains(&(a + 1))) {
                None => RunWord::descending(a, a),
                Some(direction) => {
                    // walk right while the fence keeps going the same way; the
                    // first element where it turns (or ends) is extremal
                    let mut b = a + 1;
                    while remaining.contains(&(b + 1)) && heap.cover(b) == Some(direction) {
                        b += 1;
                    }
                    match direction {
                        Cover::Down => RunWord::descending(b, a),
                        Cover::Up => RunWord::ascending(a, b),
                    }
                }
            };
            for x in run.letters() {
                remaining.remove(x);
            }
            match run.direction() {
                crate::words::Direction::Increasing => inc_stack.push(run),
                _ => dec_runs.push(run),
            }
        }
        inc_stack.reverse();
        CanonicalWord::from_parts(dec_runs, inc_stack, heap.degree())
    }

    /// Builds the canonical word by peeling runs off a reduced word, pushing
    /// decreasing runs to the left and increasing runs to the right.
    pub fn from_word(word: &Word) -> Result<Self> {
        word.ensure_reduced()?;
        word.evaluate().ensure_boolean()?;

        let mut rest: Vec<usize> = word.letters().to_vec();
        let mut dec_runs = Vec::new();
        let mut inc_runs = Vec::new();
        while let Some(&a) = rest.iter().min() {
            let position: BTreeMap<usize, usize> = rest.iter().enumerate().map(|(k, &l)| (l, k)).collect();
            let run = match position.get(&(a + 1)) {
                None => RunWord::descending(a, a),
                Some(&next) if next < position[&a] => {
                    // largest b with b (b-1) ⋯ a a subsequence
                    let mut b = a + 1;
                    while matches!(position.get(&(b + 1)), Some(&q) if q < position[&b]) {
                        b += 1;
                    }
                    RunWord::descending(b, a)
                }
                Some(_) => {
                    let mut b = a + 1;
                    while matches!(position.get(&(b + 1)), Some(&q) if q > position[&b]) {
                        b += 1;
                    }
                    RunWord::ascending(a, b)
                }
            };
            rest.retain(|l| !run.letters().contains(l));
            match run.direction() {
                crate::words::Direction::Increasing => inc_runs.insert(0, run),
                _ => dec_runs.push(run),
            }
        }
        Ok(CanonicalWord::from_parts(dec_runs, inc_runs, word.degree()))
    }

    /// `C(w)` of a boolean permutation.
    pub fn of(w: &Permutation) -> Result<Self> {
        Ok(CanonicalWord::from_heap(&heap_of(w)?))
    }
}

impl fmt::Display for CanonicalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_runs(self.runs()))
    }
}

pub fn canonical_from_heap(heap: &Heap) -> CanonicalWord {
    CanonicalWord::from_heap(heap)
}

pub fn canonical_from_word(word: &Word) -> Result<CanonicalWord> {
    CanonicalWord::from_word(word)
}
