//! Words in the simple reflections `s_1 … s_{n-1}`, runs, and reduced-word
//! enumeration.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heap::{heap_of, linear_extensions};
use crate::notation;
use crate::permutation::Permutation;

/// Largest degree accepted by the reduced-word enumerators.
pub const ENUMERATION_MAX_DEGREE: usize = 9;
/// Largest set of words the enumerators will materialize.
pub const ENUMERATION_MAX_WORDS: usize = 1_000_000;

/// A word over `1..n` living in `S_n`. Ordered lexicographically by letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
    degree: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, degree: usize) -> Result<Self> {
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l >= degree) {
            return Err(Error::LetterOutOfRange { letter, degree });
        }
        Ok(Word { letters, degree })
    }

    /// A word whose degree is one more than its largest letter (at least 1).
    pub fn minimal(letters: Vec<usize>) -> Result<Self> {
        let degree = letters.iter().copied().max().unwrap_or(0) + 1;
        Word::new(letters, degree)
    }

    pub fn empty(degree: usize) -> Self {
        Word {
            letters: Vec::new(),
            degree,
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
            degree: self.degree,
        }
    }

    /// The product `s_{i₁} ⋯ s_{i_k}`.
    pub fn evaluate(&self) -> Permutation {
        let mut w = Permutation::identity(self.degree.max(1));
        for &i in &self.letters {
            w.swap_positions(i);
        }
        w
    }

    pub fn is_reduced(&self) -> bool {
        self.evaluate().length() == self.len()
    }

    pub fn ensure_reduced(&self) -> Result<()> {
        if self.is_reduced() {
            Ok(())
        } else {
            Err(Error::NotReduced {
                word: self.to_string(),
            })
        }
    }

    /// Greedy left-to-right split into maximal runs.
    pub fn run_decomposition(&self) -> Vec<RunWord> {
        run_decomposition(&self.letters)
    }

    /// Closure of `{self}` under commutation moves.
    pub fn commutation_class(&self) -> Result<BTreeSet<Word>> {
        guard_degree(self.degree)?;
        self.ensure_reduced()?;
        closure(self.clone(), false)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", notation::compact(&self.letters))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Singleton,
    Increasing,
    Decreasing,
}

/// An increasing or decreasing sequence of consecutive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct RunWord {
    letters: Vec<usize>,
}

impl RunWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let ok = match letters.as_slice() {
            [] => false,
            [_] => true,
            [a, b, ..] => {
                let up = *b == a + 1;
                let down = *a == b + 1;
                (up || down)
                    && letters
                        .windows(2)
                        .all(|p| if up { p[1] == p[0] + 1 } else { p[0] == p[1] + 1 })
            }
        };
        if ok {
            Ok(RunWord { letters })
        } else {
            Err(Error::NotARun { letters })
        }
    }

    /// `high (high-1) ⋯ low`.
    pub fn descending(high: usize, low: usize) -> Self {
        assert!(low <= high);
        RunWord {
            letters: (low..=high).rev().collect(),
        }
    }

    /// `low (low+1) ⋯ high`.
    pub fn ascending(low: usize, high: usize) -> Self {
        assert!(low <= high);
        RunWord {
            letters: (low..=high).collect(),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> usize {
        self.letters[0]
    }

    pub fn last(&self) -> usize {
        *self.letters.last().expect("runs are nonempty")
    }

    pub fn lowest(&self) -> usize {
        self.first().min(self.last())
    }

    pub fn direction(&self) -> Direction {
        match self.letters.as_slice() {
            [a, b, ..] if b > a => Direction::Increasing,
            [_, _, ..] => Direction::Decreasing,
            _ => Direction::Singleton,
        }
    }

    pub fn reversed(&self) -> Self {
        RunWord {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Adds `offset` to every letter.
    pub fn shifted(&self, offset: usize) -> Self {
        RunWord {
            letters: self.letters.iter().map(|l| l + offset).collect(),
        }
    }
}

impl fmt::Display for RunWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&notation::compact(&self.letters))
    }
}

impl TryFrom<Vec<usize>> for RunWord {
    type Error = Error;

    fn try_from(letters: Vec<usize>) -> Result<Self> {
        RunWord::new(letters)
    }
}

impl From<RunWord> for Vec<usize> {
    fn from(r: RunWord) -> Self {
        r.letters
    }
}

/// Renders runs as `[21·87·3456]`.
pub fn display_runs<'a>(runs: impl IntoIterator<Item = &'a RunWord>) -> String {
    let body: Vec<String> = runs.into_iter().map(|r| r.to_string()).collect();
    format!("[{}]", body.join(&notation::RUN_SEPARATOR.to_string()))
}

/// Concatenates runs into a word of the given degree.
pub fn concat_runs<'a>(runs: impl IntoIterator<Item = &'a RunWord>, degree: usize) -> Result<Word> {
    let letters = runs.into_iter().flat_map(|r| r.letters().iter().copied()).collect();
    Word::new(letters, degree)
}

pub fn run_decomposition(letters: &[usize]) -> Vec<RunWord> {
    let mut runs = Vec::new();
    let mut start = 0;
    while start < letters.len() {
        let mut end = start + 1;
        if end < letters.len() && letters[end].abs_diff(letters[start]) == 1 {
            let step_up = letters[end] > letters[start];
            while end < letters.len() && consecutive(letters[end - 1], letters[end], step_up) {
                end += 1;
            }
        }
        runs.push(RunWord {
            letters: letters[start..end].to_vec(),
        });
        start = end;
    }
    runs
}

fn consecutive(a: usize, b: usize, up: bool) -> bool {
    if up {
        b == a + 1
    } else {
        a == b + 1
    }
}

/// One reduced word of `w`, found by repeatedly sorting away the leftmost descent.
pub fn one_reduced_word(w: &Permutation) -> Word {
    let mut current = w.clone();
    let mut letters = Vec::with_capacity(w.length());
    while let Some(i) = (1..current.degree()).find(|&i| current.at(i) > current.at(i + 1)) {
        current.swap_positions(i);
        letters.push(i);
    }
    letters.reverse();
    Word {
        letters,
        degree: w.degree(),
    }
}

/// `R(w)` in lexicographic order.
///
/// Boolean permutations are served by heap linear extensions; anything else is
/// the closure of one reduced word under commutation and braid moves.
pub fn all_reduced_words(w: &Permutation) -> Result<BTreeSet<Word>> {
    guard_degree(w.degree())?;
    if w.is_boolean() {
        let heap = heap_of(w)?;
        let mut words = BTreeSet::new();
        for word in linear_extensions(&heap) {
            if words.len() >= ENUMERATION_MAX_WORDS {
                return Err(Error::TooManyWords {
                    limit: ENUMERATION_MAX_WORDS,
                });
            }
            words.insert(word);
        }
        return Ok(words);
    }
    closure(one_reduced_word(w), true)
}

fn guard_degree(degree: usize) -> Result<()> {
    if degree > ENUMERATION_MAX_DEGREE {
        Err(Error::DegreeGuard {
            degree,
            max: ENUMERATION_MAX_DEGREE,
        })
    } else {
        Ok(())
    }
}

fn closure(start: Word, braids: bool) -> Result<BTreeSet<Word>> {
    let degree = start.degree;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.letters.clone());
    queue.push_back(start.letters);
    while let Some(word) = queue.pop_front() {
        for next in neighbours(&word, braids) {
            if !seen.contains(&next) {
                if seen.len() >= ENUMERATION_MAX_WORDS {
                    return Err(Error::TooManyWords {
                        limit: ENUMERATION_MAX_WORDS,
                    });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().map(|letters| Word { letters, degree }).collect())
}

fn neighbours(word: &[usize], braids: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 0..word.len().saturating_sub(1) {
        if word[k].abs_diff(word[k + 1]) > 1 {
            let mut next = word.to_vec();
            next.swap(k, k + 1);
            out.push(next);
        }
    }
    if braids {
        for k in 0..word.len().saturating_sub(2) {
            let (a, b, c) = (word[k], word[k + 1], word[k + 2]);
            if a == c && a.abs_diff(b) == 1 {
                let mut next = word.to_vec();
                next[k..k + 3].copy_from_slice(&[b, a, b]);
                out.push(next);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::all_permutations;

    fn w(letters: &[usize], n: usize) -> Word {
        Word::new(letters.to_vec(), n).unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(w(&[4, 2, 3, 2, 4, 1], 5).evaluate(), p("51342"));
        assert_eq!(w(&[], 4).evaluate(), Permutation::identity(4));
        assert_eq!(w(&[2, 1, 8, 7, 3, 4, 5, 6], 9).evaluate(), p("314569278"));
    }

    #[test]
    fn reducedness() {
        assert!(w(&[4, 2, 3, 2, 4, 1], 5).is_reduced());
        assert!(!w(&[1, 1], 2).is_reduced());
        assert!(w(&[2, 1, 8, 7, 3, 4, 5, 6], 9).is_reduced());
        assert_eq!(
            Word::new(vec![3], 3),
            Err(Error::LetterOutOfRange { letter: 3, degree: 3 })
        );
    }

    #[test]
    fn run_decomposition_examples() {
        let runs = w(&[2, 1, 8, 7, 3, 4, 5, 6], 9).run_decomposition();
        assert_eq!(display_runs(&runs), "[21·87·3456]");
        assert_eq!(w(&[8, 2, 7, 1, 3, 4, 5, 6], 9).run_decomposition().len(), 5);
        assert!(w(&[], 3).run_decomposition().is_empty());
        assert_eq!(display_runs(&w(&[1, 2, 1], 3).run_decomposition()), "[12·1]");
    }

    #[test]
    fn run_word_validation() {
        assert!(RunWord::new(vec![3, 4, 5]).is_ok());
        assert!(RunWord::new(vec![5, 4]).is_ok());
        assert!(RunWord::new(vec![7]).is_ok());
        assert!(RunWord::new(vec![2, 4, 5]).is_err());
        assert!(RunWord::new(vec![5, 4, 2]).is_err());
        assert!(RunWord::new(vec![3, 4, 3]).is_err());
        assert!(RunWord::new(vec![]).is_err());
        assert_eq!(RunWord::descending(4, 1).letters(), &[4, 3, 2, 1]);
        assert_eq!(RunWord::ascending(5, 7).direction(), Direction::Increasing);
        assert_eq!(RunWord::descending(5, 5).direction(), Direction::Singleton);
    }

    #[test]
    fn reduced_word_enumeration_examples() {
        assert!(all_reduced_words(&p("51342")).unwrap().contains(&w(&[4, 2, 3, 2, 4, 1], 5)));
        assert_eq!(
            all_reduced_words(&Permutation::identity(3)).unwrap(),
            [w(&[], 3)].into()
        );
        let longest = all_reduced_words(&p("321")).unwrap();
        assert_eq!(longest, [w(&[1, 2, 1], 3), w(&[2, 1, 2], 3)].into());
        let r = all_reduced_words(&p("314569278")).unwrap();
        assert!(r.contains(&w(&[2, 1, 8, 7, 3, 4, 5, 6], 9)));
        assert!(r.contains(&w(&[8, 7, 2, 1, 3, 4, 5, 6], 9)));
        assert!(r.contains(&w(&[8, 2, 7, 1, 3, 4, 5, 6], 9)));
        assert_eq!(
            all_reduced_words(&Permutation::identity(10)),
            Err(Error::DegreeGuard { degree: 10, max: 9 })
        );
    }

    /// Reduced words of `321` by brute force over all words of length 3.
    #[test]
    fn longest_element_of_s3_by_brute_force() {
        let target = p("321");
        let mut found = BTreeSet::new();
        for a in 1..3 {
            for b in 1..3 {
                for c in 1..3 {
                    let word = w(&[a, b, c], 3);
                    if word.evaluate() == target {
                        found.insert(word);
                    }
                }
            }
        }
        assert_eq!(found, all_reduced_words(&target).unwrap());
    }

    #[test]
    fn commutation_classes() {
        assert_eq!(w(&[1, 3], 4).commutation_class().unwrap(), [w(&[1, 3], 4), w(&[3, 1], 4)].into());
        assert_eq!(w(&[1, 2, 1], 3).commutation_class().unwrap(), [w(&[1, 2, 1], 3)].into());
        assert!(matches!(w(&[1, 1], 3).commutation_class(), Err(Error::NotReduced { .. })));
    }

    #[test]
    fn commutation_class_is_everything_for_booleans() {
        for w in all_permutations(6).filter(Permutation::is_boolean) {
            let all = all_reduced_words(&w).unwrap();
            let class = one_reduced_word(&w).commutation_class().unwrap();
            assert_eq!(class, all, "{w}");
        }
    }

    #[test]
    fn reduced_words_are_closed_and_correct() {
        for n in 1..=6 {
            for perm in all_permutations(n) {
                let words = all_reduced_words(&perm).unwrap();
                assert!(!words.is_empty());
                for word in &words {
                    assert_eq!(word.len(), perm.length());
                    assert_eq!(word.evaluate(), perm);
                    for next in neighbours(word.letters(), true) {
                        assert!(words.contains(&Word { letters: next, degree: n }), "{perm}: {word}");
                    }
                }
            }
        }
    }

    #[test]
    fn run_decomposition_is_maximal_and_round_trips() {
        for n in 2..=5 {
            for perm in all_permutations(n) {
                for word in all_reduced_words(&perm).unwrap() {
                    let runs = word.run_decomposition();
                    assert_eq!(concat_runs(&runs, n).unwrap(), word);
                    for r in &runs {
                        assert!(RunWord::new(r.letters().to_vec()).is_ok());
                    }
                    for pair in runs.windows(2) {
                        let mut merged = pair[0].letters().to_vec();
                        merged.extend_from_slice(pair[1].letters());
                        assert!(RunWord::new(merged).is_err(), "{word}");
                    }
                }
            }
        }
    }
}
