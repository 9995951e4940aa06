//! Heaps of boolean permutations.
//!
//! Every letter of `supp(w)` occurs exactly once in each reduced word of a
//! boolean `w`, so the relative order of `i` and `i + 1` is the same in all of
//! them. The heap records that order as a fence: a partial order on the
//! support whose covers only join neighbouring integers.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::Result;
use crate::notation;
use crate::permutation::Permutation;
use crate::words::{one_reduced_word, Word};

/// Orientation of the pair `(i, i + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cover {
    /// `i ≺ i + 1`: `i` comes first in every reduced word.
    Up,
    /// `i ≻ i + 1`: `i + 1` comes first.
    Down,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Heap {
    degree: usize,
    elements: BTreeSet<usize>,
    /// Keyed by the smaller letter of each neighbouring pair.
    covers: BTreeMap<usize, Cover>,
}

pub fn heap_of(w: &Permutation) -> Result<Heap> {
    w.ensure_boolean()?;
    Ok(Heap::from_word(&one_reduced_word(w)))
}

impl Heap {
    /// Reads the heap off a word with distinct letters.
    pub fn from_word(word: &Word) -> Heap {
        let mut position = BTreeMap::new();
        for (k, &letter) in word.letters().iter().enumerate() {
            let previous = position.insert(letter, k);
            assert!(previous.is_none(), "heap words have distinct letters");
        }
        let covers = position
            .iter()
            .filter_map(|(&i, &pi)| {
                position
                    .get(&(i + 1))
                    .map(|&pj| (i, if pi < pj { Cover::Up } else { Cover::Down }))
            })
            .collect();
        Heap {
            degree: word.degree(),
            elements: position.into_keys().collect(),
            covers,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &BTreeSet<usize> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(&x)
    }

    /// Orientation between `i` and `i + 1`, when both are present.
    pub fn cover(&self, i: usize) -> Option<Cover> {
        self.covers.get(&i).copied()
    }

    /// Cover relations as `(lower, upper)` pairs, ordered by the smaller letter.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.covers
            .iter()
            .map(|(&i, c)| match c {
                Cover::Up => (i, i + 1),
                Cover::Down => (i + 1, i),
            })
            .collect()
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        let left = (x > 0 && self.cover(x - 1) == Some(Cover::Up)).then(|| x - 1);
        let right = (self.cover(x) == Some(Cover::Down)).then_some(x + 1);
        left.into_iter().chain(right)
    }

    /// Connected components as inclusive letter intervals.
    pub fn components(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &x in &self.elements {
            match out.last_mut() {
                Some((_, hi)) if *hi + 1 == x => *hi = x,
                _ => out.push((x, x)),
            }
        }
        out
    }

    /// Vertical level of each element in a fence drawing: neighbours in a
    /// component differ by one and each component bottoms out at 0.
    pub fn levels(&self) -> BTreeMap<usize, usize> {
        let mut levels = BTreeMap::new();
        for (lo, hi) in self.components() {
            let mut raw = vec![0i64];
            for i in lo..hi {
                let step = if self.cover(i) == Some(Cover::Up) { 1 } else { -1 };
                raw.push(raw.last().unwrap() + step);
            }
            let min = raw.iter().copied().min().unwrap();
            for (k, r) in raw.into_iter().enumerate() {
                levels.insert(lo + k, (r - min) as usize);
            }
        }
        levels
    }

    /// Edge list, `i < j` when `i ≺ j` and `i > j` when `i ≻ j`.
    pub fn edge_lines(&self) -> Vec<String> {
        self.covers
            .iter()
            .map(|(&i, c)| match c {
                Cover::Up => format!("{i} < {}", i + 1),
                Cover::Down => format!("{i} > {}", i + 1),
            })
            .collect()
    }

    /// ASCII drawing of the fence, larger elements higher up.
    pub fn sketch(&self) -> String {
        if self.is_empty() {
            return "(empty heap)\n".to_string();
        }
        let levels = self.levels();
        let top = levels.values().copied().max().unwrap_or(0);
        let first = *self.elements.first().unwrap();
        let label_width = self.elements.iter().map(|&x| x.to_string().len()).max().unwrap();
        let cell = label_width + 1;
        let column = |x: usize| (x - first) * cell;
        let width = column(*self.elements.last().unwrap()) + cell;

        let mut lines = Vec::new();
        for level in (0..=top).rev() {
            let mut line = vec![' '; width];
            for (&x, _) in levels.iter().filter(|(_, &l)| l == level) {
                for (k, ch) in x.to_string().chars().enumerate() {
                    line[column(x) + k] = ch;
                }
            }
            lines.push(line);
            if level > 0 {
                let mut link = vec![' '; width];
                for &i in self.covers.keys() {
                    let (a, b) = (levels[&i], levels[&(i + 1)]);
                    if a.max(b) == level {
                        link[column(i) + label_width] = if b > a { '/' } else { '\\' };
                    }
                }
                lines.push(link);
            }
        }
        let mut out = String::new();
        for line in lines {
            out.push_str(line.into_iter().collect::<String>().trim_end());
            out.push('\n');
        }
        out
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .components()
            .into_iter()
            .map(|(lo, hi)| notation::compact(&(lo..=hi).collect::<Vec<_>>()))
            .collect();
        format!("{{{}}}", parts.join(" | "))
    }
}

/// Linear extensions of a heap in lexicographic order, generated lazily.
pub fn linear_extensions(heap: &Heap) -> LinearExtensions<'_> {
    let max = heap.elements.last().copied().unwrap_or(0);
    LinearExtensions {
        heap,
        used: vec![false; max + 2],
        prefix: Vec::with_capacity(heap.len()),
        stack: Vec::new(),
        started: false,
        finished: false,
    }
}

pub struct LinearExtensions<'a> {
    heap: &'a Heap,
    used: Vec<bool>,
    prefix: Vec<usize>,
    stack: Vec<(Vec<usize>, usize)>,
    started: bool,
    finished: bool,
}

impl LinearExtensions<'_> {
    fn available(&self) -> Vec<usize> {
        self.heap
            .elements
            .iter()
            .copied()
            .filter(|&x| !self.used[x] && self.heap.lower_covers(x).all(|y| self.used[y]))
            .collect()
    }

    fn emit(&self) -> Word {
        Word::new(self.prefix.clone(), self.heap.degree).expect("heap letters fit the degree")
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.finished {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.heap.is_empty() {
                self.finished = true;
                return Some(self.emit());
            }
            let choices = self.available();
            self.stack.push((choices, 0));
        }
        loop {
            let Some((choices, next)) = self.stack.last_mut() else {
                self.finished = true;
                return None;
            };
            if *next < choices.len() {
                let x = choices[*next];
                *next += 1;
                self.used[x] = true;
                self.prefix.push(x);
                if self.prefix.len() == self.heap.len() {
                    let word = self.emit();
                    self.prefix.pop();
                    self.used[x] = false;
                    return Some(word);
                }
                let choices = self.available();
                self.stack.push((choices, 0));
            } else {
                self.stack.pop();
                if let Some(x) = self.prefix.pop() {
                    self.used[x] = false;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::all_permutations;
    use crate::words::all_reduced_words;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn heap_of_figure_one_permutation() {
        let h = heap_of(&p("314569278")).unwrap();
        assert_eq!(h.elements(), &(1..=8).collect());
        assert_eq!(
            h.covers(),
            vec![(2, 1), (2, 3), (3, 4), (4, 5), (5, 6), (7, 6), (8, 7)]
        );
        let levels: Vec<usize> = h.levels().into_values().collect();
        assert_eq!(levels, vec![1, 0, 1, 2, 3, 4, 3, 2]);
    }

    #[test]
    fn heap_of_disconnected_permutation() {
        let h = heap_of(&p("231548697(11)(10)")).unwrap();
        assert_eq!(h.components(), vec![(1, 2), (4, 4), (6, 8), (10, 10)]);
        assert_eq!(h.covers(), vec![(1, 2), (7, 6), (7, 8)]);
        assert_eq!(h.describe(), "{12 | 4 | 678 | (10)}");
    }

    #[test]
    fn single_generator_heap() {
        let h = heap_of(&p("21")).unwrap();
        assert_eq!(h.elements(), &[1].into());
        assert!(h.covers().is_empty());
        let words: Vec<Word> = linear_extensions(&h).collect();
        assert_eq!(words, vec![Word::new(vec![1], 2).unwrap()]);
    }

    #[test]
    fn non_boolean_is_rejected() {
        assert!(matches!(heap_of(&p("3412")), Err(crate::Error::NotBoolean { .. })));
        assert!(matches!(heap_of(&p("321")), Err(crate::Error::NotBoolean { .. })));
    }

    #[test]
    fn extensions_contain_the_worked_words() {
        let h = heap_of(&p("314569278")).unwrap();
        let all: Vec<Word> = linear_extensions(&h).collect();
        let has = |l: &[usize]| all.contains(&Word::new(l.to_vec(), 9).unwrap());
        assert!(has(&[8, 7, 2, 1, 3, 4, 5, 6]));
        assert!(has(&[2, 1, 8, 7, 3, 4, 5, 6]));
        assert!(all.windows(2).all(|p| p[0] < p[1]), "lexicographic and distinct");
    }

    #[test]
    fn empty_heap_has_one_empty_extension() {
        let h = heap_of(&Permutation::identity(4)).unwrap();
        assert_eq!(linear_extensions(&h).collect::<Vec<_>>(), vec![Word::empty(4)]);
        assert_eq!(h.sketch(), "(empty heap)\n");
    }

    #[test]
    fn sketch_of_figure_one() {
        let h = heap_of(&p("314569278")).unwrap();
        let expected = "          6\n         / \\\n        5   7\n       /     \\\n      4       8\n     /\n1   3\n \\ /\n  2\n";
        assert_eq!(h.sketch(), expected);
    }

    /// Counts linear extensions of an arbitrary poset by dynamic programming
    /// over down-sets; `below[i]` is a bitmask of elements that must precede `i`.
    fn count_extensions(below: &[u32]) -> u64 {
        let k = below.len();
        let mut ways = vec![0u64; 1 << k];
        ways[0] = 1;
        for mask in 0..(1u32 << k) {
            if ways[mask as usize] == 0 {
                continue;
            }
            for (i, &need) in below.iter().enumerate() {
                if mask >> i & 1 == 0 && need & !mask == 0 {
                    ways[(mask | 1 << i) as usize] += ways[mask as usize];
                }
            }
        }
        ways[(1 << k) - 1]
    }

    #[test]
    fn extensions_are_the_reduced_words() {
        for n in 1..=8 {
            for w in all_permutations(n).filter(Permutation::is_boolean) {
                let h = heap_of(&w).unwrap();
                let elems: Vec<usize> = h.elements().iter().copied().collect();
                let index = |x: usize| elems.iter().position(|&e| e == x).unwrap();
                let mut below = vec![0u32; elems.len()];
                for (lo, hi) in h.covers() {
                    below[index(hi)] |= 1 << index(lo);
                }
                let mut count = 0u64;
                for word in linear_extensions(&h) {
                    assert!(word.is_reduced(), "{w}: {word}");
                    assert_eq!(word.evaluate(), w);
                    count += 1;
                }
                assert_eq!(count, count_extensions(&below), "{w}");
            }
        }
    }

    #[test]
    fn orientation_holds_in_every_reduced_word() {
        for w in all_permutations(7).filter(Permutation::is_boolean) {
            let h = heap_of(&w).unwrap();
            let words = crate::words::one_reduced_word(&w).commutation_class().unwrap();
            assert_eq!(words, all_reduced_words(&w).unwrap());
            for word in &words {
                let pos = |x: usize| word.letters().iter().position(|&l| l == x).unwrap();
                for (lo, hi) in h.covers() {
                    assert!(pos(lo) < pos(hi), "{w}: {word}");
                }
            }
        }
    }
}
