//! The run statistic, the rho map that certifies it, and sorting by Ulam moves.
//!
//! `rho` multiplies a non-identity permutation by a single run, removing
//! exactly `|run|` inversions and lengthening the lexicographically least
//! longest increasing subsequence by one. Iterating it down to the identity
//! yields a reduced word with `n - λ₁(w)` runs, which is optimal.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permutation::{Permutation, Side};
use crate::words::{all_reduced_words, run_decomposition, RunWord, Word};

/// Largest degree accepted by [`brute_force_run`].
pub const BRUTE_FORCE_MAX_DEGREE: usize = 6;

/// Which branch of the rho construction fired. `q` is the least value
/// missing from the lexicographically least longest increasing subsequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RhoCase {
    /// `q = 1`: slide 1 to the front.
    QEqualsOne,
    /// `q` sits right of `q - 1`: slide `q` to just after `q - 1`.
    QRightOfPredecessor,
    /// `q` sits left of `q - 1`: left-multiply by an increasing run.
    QLeftOfPredecessor,
}

impl fmt::Display for RhoCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RhoCase::QEqualsOne => "q_equals_1",
            RhoCase::QRightOfPredecessor => "q_right_of_qminus1",
            RhoCase::QLeftOfPredecessor => "q_left_of_qminus1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoStep {
    pub result: Permutation,
    pub run: RunWord,
    pub side: Side,
    pub case: RhoCase,
}

pub fn rho(w: &Permutation) -> Result<RhoStep> {
    if w.is_identity() {
        return Err(Error::Identity);
    }
    let lis = w.lex_least_lis();
    let q = (1..=w.degree())
        .find(|v| !lis.values.contains(v))
        .expect("a non-identity permutation has a shorter LIS");

    let (run, side, case) = if q == 1 {
        let t = w.position_of(1);
        (RunWord::descending(t - 1, 1), Side::Right, RhoCase::QEqualsOne)
    } else {
        let t = w.position_of(q);
        let t_prev = w.position_of(q - 1);
        if t > t_prev {
            (RunWord::descending(t - 1, t_prev + 1), Side::Right, RhoCase::QRightOfPredecessor)
        } else {
            let j = w.entries()[t..]
                .iter()
                .copied()
                .filter(|&v| v < q)
                .min()
                .expect("q - 1 lies to the right of q");
            (RunWord::ascending(j, q - 1), Side::Left, RhoCase::QLeftOfPredecessor)
        }
    };
    let word = Word::new(run.letters().to_vec(), w.degree())?;
    let result = w.apply_word(&word, side)?;
    Ok(RhoStep {
        result,
        run,
        side,
        case,
    })
}

/// The rho orbit of `w`, one step per application, ending at the identity.
pub fn rho_orbit(w: &Permutation) -> Vec<RhoStep> {
    let mut steps = Vec::new();
    let mut current = w.clone();
    while !current.is_identity() {
        let step = rho(&current).expect("non-identity");
        current = step.result.clone();
        steps.push(step);
    }
    steps
}

/// `run(w) = n - λ₁(w)`.
pub fn run_statistic(w: &Permutation) -> usize {
    w.degree() - w.lex_least_lis().len()
}

/// A reduced word for `w` made of exactly `run(w)` runs, assembled by undoing
/// the rho orbit from the identity outwards.
pub fn optimal_run_word(w: &Permutation) -> Vec<RunWord> {
    let mut runs = VecDeque::new();
    for step in rho_orbit(w).into_iter().rev() {
        // w_k = w_{k+1}·r⁻¹ or r⁻¹·w_{k+1}, and r⁻¹ is the reversed run
        match step.side {
            Side::Right => runs.push_back(step.run.reversed()),
            Side::Left => runs.push_front(step.run.reversed()),
        }
    }
    runs.into()
}

/// Removes the entry at `from_position` and reinserts it right after
/// `insert_after_value`, or at the front when that is `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UlamMove {
    pub from_position: usize,
    pub insert_after_value: Option<usize>,
}

impl UlamMove {
    pub fn apply(&self, w: &Permutation) -> Result<Permutation> {
        if self.from_position == 0 || self.from_position > w.degree() {
            return Err(Error::IndexOutOfRange {
                index: self.from_position,
                degree: w.degree(),
            });
        }
        let mut entries = w.entries().to_vec();
        let value = entries.remove(self.from_position - 1);
        let slot = match self.insert_after_value {
            None => 0,
            Some(v) => {
                entries
                    .iter()
                    .position(|&x| x == v)
                    .ok_or(Error::ValueOutOfRange { value: v, degree: w.degree() })?
                    + 1
            }
        };
        entries.insert(slot, value);
        Permutation::from_one_line(entries)
    }
}

impl fmt::Display for UlamMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.insert_after_value {
            Some(v) => write!(f, "move pos={} after={v}", self.from_position),
            None => write!(f, "move pos={} after=front", self.from_position),
        }
    }
}

/// Sorts `w` to the identity with `run(w)` Ulam moves: the runs of the
/// optimal run word are read right to left and each one, inverted and
/// multiplied on the right, moves a single entry.
pub fn ulam_sort(w: &Permutation) -> Vec<(UlamMove, Permutation)> {
    let mut current = w.clone();
    let mut moves = Vec::new();
    for run in optimal_run_word(w).iter().rev() {
        let letters = run.reversed();
        let (from, to) = match letters.direction() {
            crate::words::Direction::Decreasing => (letters.first() + 1, letters.last()),
            _ => (letters.first(), letters.last() + 1),
        };
        let word = Word::new(letters.letters().to_vec(), w.degree()).expect("letters fit");
        let next = current.apply_word(&word, Side::Right).expect("letters fit");
        let insert_after_value = (to > 1).then(|| next.at(to - 1));
        let mv = UlamMove {
            from_position: from,
            insert_after_value,
        };
        debug_assert_eq!(mv.apply(&current).as_ref(), Ok(&next));
        current = next;
        moves.push((mv, current.clone()));
    }
    moves
}

/// Minimum number of greedy runs over every reduced word of `w`.
pub fn brute_force_run(w: &Permutation) -> Result<usize> {
    if w.degree() > BRUTE_FORCE_MAX_DEGREE {
        return Err(Error::DegreeGuard {
            degree: w.degree(),
            max: BRUTE_FORCE_MAX_DEGREE,
        });
    }
    Ok(all_reduced_words(w)?
        .iter()
        .map(|s| run_decomposition(s.letters()).len())
        .min()
        .unwrap_or(0))
}
