//! Permutations in one-line notation.
//!
//! All public interfaces are 1-based: a permutation of degree `n` is the
//! sequence `w(1) … w(n)` of the values `1..=n`, positions are numbered from
//! 1, and the simple reflection `s_i` swaps `i` and `i + 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::notation;
use crate::words::Word;

/// Which side a word multiplies a permutation on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `[s]·w`: each letter swaps two values.
    Left,
    /// `w·[s]`: each letter swaps two positions.
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    entries: Vec<usize>,
}

/// A subsequence of a permutation's one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subsequence {
    /// 1-based, strictly increasing.
    pub positions: Vec<usize>,
    pub values: Vec<usize>,
}

impl Subsequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl Permutation {
    /// Builds a permutation from its one-line notation.
    pub fn from_one_line(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut seen = vec![false; n + 1];
        for &value in &values {
            if value == 0 || value > n {
                return Err(Error::ValueOutOfRange { value, degree: n });
            }
            if seen[value] {
                return Err(Error::Duplicate { value });
            }
            seen[value] = true;
        }
        Ok(Permutation { entries: values })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be positive");
        Permutation {
            entries: (1..=n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `w(position)`, 1-based.
    pub fn at(&self, position: usize) -> usize {
        self.entries[position - 1]
    }

    /// `w⁻¹(value)`, 1-based.
    pub fn position_of(&self, value: usize) -> usize {
        self.entries.iter().position(|&v| v == value).expect("value in range") + 1
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.entries;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .sum()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.entries.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { entries: inv }
    }

    /// `self ∘ other`, i.e. `(self·other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.degree(), other.degree(), "degrees must agree");
        Permutation {
            entries: other.entries.iter().map(|&i| self.at(i)).collect(),
        }
    }

    /// Right multiplication by `s_i`: swaps the entries in positions `i` and `i + 1`.
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.entries.swap(i - 1, i);
    }

    /// Left multiplication by `s_i`: swaps the values `i` and `i + 1`.
    pub(crate) fn swap_values(&mut self, i: usize) {
        for v in self.entries.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }

    /// Returns `[s]·w` or `w·[s]`, composing the simple reflections in word order.
    pub fn apply_word(&self, word: &Word, side: Side) -> Result<Self> {
        let n = self.degree();
        if let Some(&letter) = word.letters().iter().find(|&&l| l == 0 || l >= n) {
            return Err(Error::LetterOutOfRange { letter, degree: n });
        }
        let mut out = self.clone();
        match side {
            Side::Right => word.letters().iter().for_each(|&i| out.swap_positions(i)),
            // the rightmost reflection of [s] acts on w first
            Side::Left => word.letters().iter().rev().for_each(|&i| out.swap_values(i)),
        }
        Ok(out)
    }

    /// Positions (1-based) of an occurrence of `pattern`, if any.
    ///
    /// Plain backtracking over increasing position tuples, pruned as soon as
    /// the partial choice stops being order-isomorphic to the pattern prefix.
    pub fn find_pattern(&self, pattern: &Permutation) -> Result<Option<Vec<usize>>> {
        let k = pattern.degree();
        if k > self.degree() {
            return Err(Error::PatternTooLarge {
                pattern: k,
                degree: self.degree(),
            });
        }
        let mut chosen = Vec::with_capacity(k);
        if self.extend_pattern(&pattern.entries, 0, &mut chosen) {
            Ok(Some(chosen.iter().map(|&i| i + 1).collect()))
        } else {
            Ok(None)
        }
    }

    fn extend_pattern(&self, pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        let depth = chosen.len();
        if depth == pattern.len() {
            return true;
        }
        let remaining = pattern.len() - depth;
        for i in start..=self.degree() - remaining {
            let v = self.entries[i];
            let consistent = chosen
                .iter()
                .zip(pattern)
                .all(|(&j, &p)| (self.entries[j] < v) == (p < pattern[depth]));
            if consistent {
                chosen.push(i);
                if self.extend_pattern(pattern, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    pub fn contains_pattern(&self, pattern: &Permutation) -> Result<bool> {
        Ok(self.find_pattern(pattern)?.is_some())
    }

    /// 321-avoiding.
    pub fn is_fully_commutative(&self) -> bool {
        self.find_small_pattern(&[3, 2, 1]).is_none()
    }

    /// Avoids both 321 and 3412.
    pub fn is_boolean(&self) -> bool {
        self.boolean_obstruction().is_none()
    }

    /// The first forbidden pattern found (321 checked before 3412), with the
    /// positions of one occurrence.
    pub fn boolean_obstruction(&self) -> Option<(&'static str, Vec<usize>)> {
        if let Some(pos) = self.find_small_pattern(&[3, 2, 1]) {
            return Some(("321", pos));
        }
        self.find_small_pattern(&[3, 4, 1, 2]).map(|pos| ("3412", pos))
    }

    pub fn ensure_boolean(&self) -> Result<()> {
        match self.boolean_obstruction() {
            None => Ok(()),
            Some((pattern, positions)) => Err(Error::NotBoolean {
                perm: self.to_string(),
                pattern,
                positions,
            }),
        }
    }

    fn find_small_pattern(&self, pattern: &[usize]) -> Option<Vec<usize>> {
        if pattern.len() > self.degree() {
            return None;
        }
        let pattern = Permutation {
            entries: pattern.to_vec(),
        };
        self.find_pattern(&pattern).expect("degree checked")
    }

    /// `supp(w)`: letter `i` is in the support iff `max(w(1..=i)) > i`.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut prefix_max = 0;
        let mut support = BTreeSet::new();
        for (i, &v) in self.entries.iter().enumerate().take(self.degree() - 1) {
            prefix_max = prefix_max.max(v);
            if prefix_max > i + 1 {
                support.insert(i + 1);
            }
        }
        support
    }

    /// The longest increasing subsequence whose values are lexicographically
    /// least among all longest increasing subsequences.
    pub fn lex_least_lis(&self) -> Subsequence {
        let w = &self.entries;
        let n = w.len();
        // longest[i]: length of the longest increasing subsequence starting at i
        let mut longest = vec![1usize; n];
        for i in (0..n).rev() {
            for j in i + 1..n {
                if w[j] > w[i] {
                    longest[i] = longest[i].max(longest[j] + 1);
                }
            }
        }
        let total = longest.iter().copied().max().unwrap_or(0);
        let mut positions = Vec::with_capacity(total);
        let mut values = Vec::with_capacity(total);
        let mut start = 0;
        let mut floor = 0;
        for need in (1..=total).rev() {
            let next = (start..n)
                .filter(|&i| w[i] > floor && longest[i] == need)
                .min_by_key(|&i| w[i])
                .expect("a continuation always exists");
            positions.push(next + 1);
            values.push(w[next]);
            floor = w[next];
            start = next + 1;
        }
        Subsequence { positions, values }
    }

    /// Length of a longest increasing subsequence (patience sorting).
    pub fn longest_increasing(&self) -> usize {
        patience_len(self.entries.iter().copied())
    }

    /// Length of a longest decreasing subsequence.
    pub fn longest_decreasing(&self) -> usize {
        let n = self.degree();
        patience_len(self.entries.iter().map(|&v| n + 1 - v))
    }
}

fn patience_len(values: impl Iterator<Item = usize>) -> usize {
    let mut tops: Vec<usize> = Vec::new();
    for v in values {
        let pile = tops.partition_point(|&t| t < v);
        if pile == tops.len() {
            tops.push(v);
        } else {
            tops[pile] = v;
        }
    }
    tops.len()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&notation::compact(&self.entries))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::from_one_line(notation::parse_sequence(s)?)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.entries
    }
}

/// All permutations of degree `n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    use itertools::Itertools;
    (1..=n)
        .permutations(n)
        .map(|entries| Permutation { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn word(letters: &[usize], n: usize) -> Word {
        Word::new(letters.to_vec(), n).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(p("51342").entries(), &[5, 1, 3, 4, 2]);
        assert_eq!(p("123"), Permutation::identity(3));
        assert_eq!(Permutation::from_one_line(vec![2, 2, 1]), Err(Error::Duplicate { value: 2 }));
        assert_eq!(
            Permutation::from_one_line(vec![1, 4, 2]),
            Err(Error::ValueOutOfRange { value: 4, degree: 3 })
        );
        assert_eq!(Permutation::from_one_line(vec![]), Err(Error::Empty));
    }

    #[test]
    fn display_parenthesizes_large_values() {
        assert_eq!(p("3 1 4 6 2 7 10 5 8 9").to_string(), "314627(10)589");
        assert_eq!(p("231548697(11)(10)").degree(), 11);
    }

    #[test]
    fn length_counts_inversions() {
        assert_eq!(p("51342").length(), 6);
        assert_eq!(Permutation::identity(7).length(), 0);
        assert_eq!(p("51642738").length(), 10);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
        assert_eq!(p("51342").inverse(), p("25341"));
        assert_eq!(p("3142").inverse(), p("2413"));
        let w = p("51342");
        assert!(w.compose(&w.inverse()).is_identity());
    }

    #[test]
    fn pattern_containment() {
        let w = p("314592687");
        assert!(w.contains_pattern(&p("1423")).unwrap());
        assert!(!w.contains_pattern(&p("3241")).unwrap());
        assert!(!Permutation::identity(6).contains_pattern(&p("21")).unwrap());
        assert_eq!(
            p("21").contains_pattern(&p("321")),
            Err(Error::PatternTooLarge { pattern: 3, degree: 2 })
        );
        // the witness 4968 from the text is one occurrence; ours is the first found
        let found = w.find_pattern(&p("1423")).unwrap().unwrap();
        let values: Vec<_> = found.iter().map(|&i| w.at(i)).collect();
        assert!(values[0] < values[2] && values[2] < values[3] && values[3] < values[1]);
    }

    #[test]
    fn fully_commutative_and_boolean() {
        assert!(p("3412").is_fully_commutative());
        assert!(!p("321").is_fully_commutative());
        assert!(Permutation::identity(5).is_fully_commutative());

        assert!(p("314569278").is_boolean());
        assert!(!p("3412").is_boolean());
        assert!(Permutation::identity(5).is_boolean());
        assert_eq!(p("321").boolean_obstruction(), Some(("321", vec![1, 2, 3])));
        assert_eq!(p("3412").boolean_obstruction(), Some(("3412", vec![1, 2, 3, 4])));
    }

    #[test]
    fn support_by_prefix_maxima() {
        assert_eq!(p("51342").support(), (1..=4).collect());
        assert!(Permutation::identity(4).support().is_empty());
        assert_eq!(p("314569278").support(), (1..=8).collect());
        assert_eq!(p("231548697(11)(10)").support(), [1, 2, 4, 6, 7, 8, 10].into());
    }

    #[test]
    fn apply_word_examples() {
        assert_eq!(
            p("342516").apply_word(&word(&[4, 3, 2, 1], 6), Side::Right).unwrap(),
            p("134256")
        );
        assert_eq!(
            p("51642738").apply_word(&word(&[2, 3], 8), Side::Left).unwrap(),
            p("51623748")
        );
        let w = p("51342");
        let empty = word(&[], 5);
        assert_eq!(w.apply_word(&empty, Side::Left).unwrap(), w);
        assert_eq!(w.apply_word(&empty, Side::Right).unwrap(), w);
        assert_eq!(
            p("12").apply_word(&word(&[2], 3), Side::Right),
            Err(Error::LetterOutOfRange { letter: 2, degree: 2 })
        );
    }

    #[test]
    fn lex_least_lis_examples() {
        assert_eq!(p("342516").lex_least_lis().values, vec![3, 4, 5, 6]);
        assert_eq!(p("51642738").lex_least_lis().values, vec![1, 2, 3, 8]);
        assert_eq!(p("142563").lex_least_lis().values, vec![1, 2, 5, 6]);
        let id = Permutation::identity(5).lex_least_lis();
        assert_eq!(id.values, vec![1, 2, 3, 4, 5]);
        assert_eq!(id.positions, vec![1, 2, 3, 4, 5]);
    }

    /// Brute-force LIS over every subset of positions, plus the lexicographically
    /// least value sequence among the longest ones.
    fn lis_by_subsets(w: &Permutation) -> (usize, Vec<usize>) {
        let n = w.degree();
        let mut best: (usize, Vec<usize>) = (0, vec![]);
        for mask in 1u32..(1 << n) {
            let values: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| w.entries[i]).collect();
            if values.windows(2).all(|p| p[0] < p[1])
                && (values.len() > best.0 || (values.len() == best.0 && values < best.1))
            {
                best = (values.len(), values);
            }
        }
        best
    }

    #[test]
    fn exhaustive_small_degree_properties() {
        let pat321 = p("321");
        for n in 1..=7 {
            for w in all_permutations(n) {
                assert_eq!(w.length(), w.inverse().length());
                if w.is_boolean() {
                    assert!(w.is_fully_commutative(), "{w}");
                }
                assert_eq!(w.is_fully_commutative(), n < 3 || !w.contains_pattern(&pat321).unwrap());
                let lis = w.lex_least_lis();
                let (len, values) = lis_by_subsets(&w);
                assert_eq!(lis.len(), len, "{w}");
                assert_eq!(lis.values, values, "{w}");
                assert_eq!(w.longest_increasing(), len);
                assert!(lis.positions.iter().zip(&lis.values).all(|(&i, &v)| w.at(i) == v));
            }
        }
    }

    #[test]
    fn containment_is_transitive_on_small_instances() {
        let patterns: Vec<Permutation> = (1..=4).flat_map(all_permutations).collect();
        for n in 5..=6 {
            for w in all_permutations(n).step_by(7) {
                assert!(w.contains_pattern(&w).unwrap());
                for sigma in &patterns {
                    if !w.contains_pattern(sigma).unwrap() {
                        continue;
                    }
                    for tau in patterns.iter().filter(|t| t.degree() <= sigma.degree()) {
                        if sigma.contains_pattern(tau).unwrap() {
                            assert!(w.contains_pattern(tau).unwrap(), "{w} ⊇ {sigma} ⊇ {tau}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn support_matches_reduced_word_letters() {
        for n in 1..=6 {
            for w in all_permutations(n) {
                let letters: BTreeSet<usize> = crate::words::one_reduced_word(&w).letters().iter().copied().collect();
                assert_eq!(w.support(), letters, "{w}");
            }
        }
    }

    fn perm_and_word() -> impl Strategy<Value = (Permutation, Vec<usize>)> {
        (2usize..=6).prop_flat_map(|n| {
            (
                Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
                prop::collection::vec(1..n, 0..12),
            )
                .prop_map(|(entries, letters)| (Permutation::from_one_line(entries).unwrap(), letters))
        })
    }

    proptest! {
        #[test]
        fn word_then_reverse_cancels((w, letters) in perm_and_word()) {
            let n = w.degree();
            let s = Word::new(letters.clone(), n).unwrap();
            let back = Word::new(letters.into_iter().rev().collect(), n).unwrap();
            for side in [Side::Left, Side::Right] {
                let there = w.apply_word(&s, side).unwrap();
                prop_assert_eq!(there.apply_word(&back, side).unwrap(), w.clone());
            }
        }

        #[test]
        fn right_and_left_agree_with_evaluation((w, letters) in perm_and_word()) {
            let s = Word::new(letters, w.degree()).unwrap();
            let v = s.evaluate();
            prop_assert_eq!(w.apply_word(&s, Side::Right).unwrap(), w.compose(&v));
            prop_assert_eq!(w.apply_word(&s, Side::Left).unwrap(), v.compose(&w));
        }
    }
}
