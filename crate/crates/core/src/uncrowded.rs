//! Uncrowded sets and tableaux.
//!
//! A set of integers is uncrowded when every window of `2x + 1` consecutive
//! integers (`x > 0`) holds at most `x + 1` of its elements. Second rows of
//! RSK tableaux of boolean permutations are exactly the uncrowded ones, and
//! uncrowded tableaux of size `n` are in bijection with binary words of length
//! `n - 1` whose runs of ones all have odd length.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::canonical::CanonicalWord;
use crate::error::{Error, Result};
use crate::rsk::Tableau;
use crate::words::RunWord;

/// A window `[start, end]` of odd length holding too many elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Crowding {
    pub start: i64,
    pub end: i64,
    pub count: usize,
}

/// The first crowded window anchored at an element of `set`, if any.
///
/// A violating window can always be shrunk to start at its smallest element
/// and to the narrowest odd width covering its largest, so checking pairs of
/// elements is exhaustive.
pub fn crowding(set: &BTreeSet<i64>) -> Option<Crowding> {
    let values: Vec<i64> = set.iter().copied().collect();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let span = values[j] - values[i];
            let x = ((span + 1) / 2).max(1);
            let count = j - i + 1;
            if count as i64 > x + 1 {
                return Some(Crowding {
                    start: values[i],
                    end: values[i] + 2 * x,
                    count,
                });
            }
        }
    }
    None
}

pub fn is_uncrowded(set: &BTreeSet<i64>) -> bool {
    crowding(set).is_none()
}

fn to_i64(set: &BTreeSet<usize>) -> BTreeSet<i64> {
    set.iter().map(|&v| v as i64).collect()
}

/// Whether `set` can be the second row of a standard tableau: its `k`-th
/// smallest element is at least `2k`.
pub fn is_feasible_second_row(set: &BTreeSet<i64>) -> bool {
    set.iter().enumerate().all(|(k, &v)| v >= 2 * (k as i64 + 1))
}

/// Uncrowdedness of `R ∪ {1}` for a feasible second row `R`; it always
/// agrees with uncrowdedness of `R` itself, which is asserted.
pub fn uncrowded_with_one(set: &BTreeSet<i64>) -> Result<bool> {
    if !is_feasible_second_row(set) {
        return Err(Error::NotASecondRow {
            set: set.iter().copied().collect(),
        });
    }
    let mut with_one = set.clone();
    with_one.insert(1);
    let answer = is_uncrowded(&with_one);
    assert_eq!(answer, is_uncrowded(set), "adjoining 1 changed uncrowdedness of {set:?}");
    Ok(answer)
}

pub fn is_uncrowded_tableau(t: &Tableau) -> Result<bool> {
    if t.rows().len() > 2 {
        return Err(Error::TooManyRows { rows: t.rows().len() });
    }
    Ok(is_uncrowded(&to_i64(&t.row_set(2))))
}

fn crowded_error(what: String, c: Crowding) -> Error {
    Error::Crowded {
        what,
        start: c.start,
        end: c.end,
        count: c.count,
    }
}

/// A boolean permutation of degree `n` whose canonical word has leftmost run
/// letters exactly `letters`, given as that canonical word.
///
/// Requires `letters ∪ {0}` to be uncrowded. Writing the letters as
/// `m_0 < m_1 < …`: when `m_i = 2i + 1` throughout the answer is the chain
/// of two-letter increasing runs `(2k+1)(2k+2) ⋯ 34·12`; otherwise, for the
/// first `j` with `m_j > 2j + 1`, the letters above `m_j` are realized
/// recursively (shifted down by `m_j`) and wrapped as
/// `m_j(m_j - 1) · shifted · (2j-1)(2j) ⋯ 12`.
pub fn realize_boolean(letters: &BTreeSet<usize>, n: usize) -> Result<CanonicalWord> {
    if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l >= n) {
        return Err(Error::LetterOutOfRange { letter, degree: n });
    }
    let mut with_zero = to_i64(letters);
    with_zero.insert(0);
    if let Some(c) = crowding(&with_zero) {
        return Err(crowded_error(format!("{:?} ∪ {{0}}", letters), c));
    }
    let sorted: Vec<usize> = letters.iter().copied().collect();
    let (dec, inc) = realize_runs(&sorted);
    if let Some(letter) = dec.iter().chain(&inc).map(|r| r.first().max(r.last())).max() {
        if letter >= n {
            return Err(Error::DegreeTooSmall { letter, degree: n });
        }
    }
    Ok(CanonicalWord::from_parts(dec, inc, n))
}

fn realize_runs(letters: &[usize]) -> (Vec<RunWord>, Vec<RunWord>) {
    let low_pairs = |count: usize| -> Vec<RunWord> {
        (0..count).rev().map(|i| RunWord::ascending(2 * i + 1, 2 * i + 2)).collect()
    };
    match letters.iter().enumerate().position(|(i, &m)| m > 2 * i + 1) {
        None => (Vec::new(), low_pairs(letters.len())),
        Some(j) => {
            let pivot = letters[j];
            let above: Vec<usize> = letters[j + 1..].iter().map(|z| z - pivot).collect();
            let (inner_dec, inner_inc) = realize_runs(&above);
            let mut dec = vec![RunWord::descending(pivot, pivot - 1)];
            dec.extend(inner_dec.iter().map(|r| r.shifted(pivot)));
            let mut inc: Vec<RunWord> = inner_inc.iter().map(|r| r.shifted(pivot)).collect();
            inc.extend(low_pairs(j));
            (dec, inc)
        }
    }
}

/// A word over `{0, 1}` of length `n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: Vec<bool>,
}

impl BinaryWord {
    pub fn new(bits: Vec<bool>) -> Self {
        BinaryWord { bits }
    }

    pub fn zeros(len: usize) -> Self {
        BinaryWord { bits: vec![false; len] }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Size of the tableaux this word corresponds to.
    pub fn n(&self) -> usize {
        self.bits.len() + 1
    }

    /// Maximal runs of ones as `(start, length)`, 1-based starts.
    pub fn runs_of_ones(&self) -> Vec<(usize, usize)> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for (i, &bit) in self.bits.iter().enumerate() {
            if !bit {
                continue;
            }
            match runs.last_mut() {
                Some((start, len)) if *start + *len == i + 1 => *len += 1,
                _ => runs.push((i + 1, 1)),
            }
        }
        runs
    }

    /// Membership in `X_n`: every maximal run of ones has odd length.
    pub fn has_odd_runs(&self) -> bool {
        self.runs_of_ones().iter().all(|&(_, len)| len % 2 == 1)
    }

    fn ensure_odd_runs(&self) -> Result<()> {
        match self.runs_of_ones().into_iter().find(|&(_, len)| len % 2 == 0) {
            None => Ok(()),
            Some((start, len)) => Err(Error::EvenRunOfOnes { start, len }),
        }
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed == "ε" {
            return Ok(BinaryWord::zeros(0));
        }
        trimmed
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::parse(i + 1, format!("expected 0 or 1, found '{other}'"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord::new)
    }
}

/// The map from odd-run binary words to uncrowded tableaux.
pub fn f_map(x: &BinaryWord) -> Result<Tableau> {
    x.ensure_odd_runs()?;
    let n = x.n();
    let mut second = BTreeSet::new();
    for (start, len) in x.runs_of_ones() {
        // offsets 0, 1, 3, 5, … go to the second row; 2, 4, … stay in the first
        second.insert(n + 1 - start);
        for offset in (1..len).step_by(2) {
            second.insert(n + 1 - (start + offset));
        }
    }
    Tableau::two_row(n, &second)
}

/// The inverse of [`f_map`].
pub fn g_map(t: &Tableau) -> Result<BinaryWord> {
    if t.rows().len() > 2 {
        return Err(Error::TooManyRows { rows: t.rows().len() });
    }
    if !t.is_standard() {
        return Err(Error::InvalidTableau {
            reason: "entries are not 1..=n".into(),
        });
    }
    let n = t.size();
    let mut second = to_i64(&t.row_set(2));
    if let Some(c) = crowding(&second) {
        return Err(crowded_error("second row".into(), c));
    }
    let mut bits = vec![false; n - 1];
    let n = n as i64;
    let too_crowded = |second: &BTreeSet<i64>| {
        crowded_error(
            "second row".into(),
            crowding(second).unwrap_or(Crowding { start: 1, end: 1, count: 0 }),
        )
    };
    while let Some(&z) = second.last() {
        bits[(n - z) as usize] = true;
        if !second.contains(&(z - 1)) {
            second.remove(&z);
            continue;
        }
        if second.contains(&(z - 2)) {
            return Err(too_crowded(&second));
        }
        let mut k = 1;
        while second.contains(&(z - (2 * k + 1))) && !second.contains(&(z - (2 * k + 2))) {
            k += 1;
        }
        let last = n + 2 * k + 1 - z;
        if last > n - 1 {
            // only reachable when the tableau is not uncrowded together with 1
            return Err(too_crowded(&second));
        }
        for j in (n + 2 - z)..=last {
            bits[(j - 1) as usize] = true;
        }
        second.remove(&z);
        for i in 0..k {
            second.remove(&(z - (2 * i + 1)));
        }
    }
    Ok(BinaryWord::new(bits))
}

/// Every word of `X_n` in lexicographic order, generated lazily.
pub fn enumerate_x(n: usize) -> impl Iterator<Item = BinaryWord> {
    assert!(n >= 1, "n must be positive");
    let len = n - 1;
    let mut stack: Vec<Vec<bool>> = vec![Vec::new()];
    std::iter::from_fn(move || {
        while let Some(prefix) = stack.pop() {
            if prefix.len() == len {
                return Some(BinaryWord::new(prefix));
            }
            let mut children = Vec::new();
            let mut zero = prefix.clone();
            zero.push(false);
            children.push(zero);
            for block in (1..=len - prefix.len()).step_by(2) {
                let mut child = prefix.clone();
                child.extend(std::iter::repeat_n(true, block));
                if child.len() < len {
                    child.push(false);
                }
                children.push(child);
            }
            stack.extend(children.into_iter().rev());
        }
        None
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UncrowdedCounts {
    pub n: usize,
    pub total: usize,
    pub two_row: usize,
    pub with_n_in_row2: usize,
}

pub fn count_uncrowded(n: usize) -> UncrowdedCounts {
    let mut total = 0;
    let mut leading_one = 0;
    for x in enumerate_x(n) {
        total += 1;
        if x.bits().first() == Some(&true) {
            leading_one += 1;
        }
    }
    UncrowdedCounts {
        n,
        total,
        two_row: total - 1,
        with_n_in_row2: leading_one,
    }
}
