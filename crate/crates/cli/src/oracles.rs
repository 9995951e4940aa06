//! Slow, direct reference implementations used by the acceptance suite.
//!
//! None of these call into `boolrsk`; they work on plain vectors and follow
//! the textbook definitions as literally as possible.

use std::collections::BTreeSet;

use itertools::Itertools;

/// Every permutation of `1..=n` in one-line notation, lexicographically.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    (1..=n).permutations(n).collect()
}

/// Longest increasing subsequence by quadratic dynamic programming.
pub fn lis(w: &[usize]) -> usize {
    let mut best = vec![1; w.len()];
    for j in 0..w.len() {
        for i in 0..j {
            if w[i] < w[j] {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

pub fn lds(w: &[usize]) -> usize {
    let reversed: Vec<usize> = w.iter().rev().copied().collect();
    lis(&reversed)
}

pub fn inverse(w: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; w.len()];
    for (i, &v) in w.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

/// Schensted row insertion with a linear scan for the bumped entry.
pub fn schensted(w: &[usize]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &value) in w.iter().enumerate() {
        let mut carry = value;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![carry]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&x| x > carry) {
                Some(k) => {
                    carry = std::mem::replace(&mut p[row][k], carry);
                    row += 1;
                }
                None => {
                    p[row].push(carry);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    (p, q)
}

/// Pattern containment by trying every set of positions.
pub fn contains(w: &[usize], pattern: &[usize]) -> bool {
    (0..w.len()).combinations(pattern.len()).any(|positions| {
        positions.iter().tuple_combinations().zip(pattern.iter().tuple_combinations()).all(
            |((&i, &j), (&a, &b))| (w[i] < w[j]) == (a < b),
        )
    })
}

pub fn is_boolean(w: &[usize]) -> bool {
    !contains(w, &[3, 2, 1]) && !contains(w, &[3, 4, 1, 2])
}

/// Every reduced word, built by peeling off right descents.
pub fn reduced_words(w: &[usize]) -> Vec<Vec<usize>> {
    if w.windows(2).all(|p| p[0] < p[1]) {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            let mut shorter = w.to_vec();
            shorter.swap(i - 1, i);
            for mut word in reduced_words(&shorter) {
                word.push(i);
                out.push(word);
            }
        }
    }
    out
}

fn is_run(letters: &[usize]) -> bool {
    letters.windows(2).all(|p| p[1] == p[0] + 1) || letters.windows(2).all(|p| p[0] == p[1] + 1)
}

/// Fewest runs a word splits into, by dynamic programming over cut points.
pub fn min_runs(word: &[usize]) -> usize {
    let mut best = vec![usize::MAX; word.len() + 1];
    best[0] = 0;
    for j in 1..=word.len() {
        for i in 0..j {
            if best[i] != usize::MAX && is_run(&word[i..j]) {
                best[j] = best[j].min(best[i] + 1);
            }
        }
    }
    best[word.len()]
}

/// Every window `[y, y + 2x]` over a range wide enough to matter.
pub fn uncrowded(set: &BTreeSet<i64>) -> bool {
    let (Some(&lo), Some(&hi)) = (set.first(), set.last()) else {
        return true;
    };
    for x in 1..=(hi - lo + 1) {
        for y in (lo - 2 * x)..=hi {
            if set.range(y..=y + 2 * x).count() as i64 > x + 1 {
                return false;
            }
        }
    }
    true
}

/// Whether `set` is the second row of some standard tableau.
pub fn feasible_second_row(set: &BTreeSet<i64>) -> bool {
    (1..=set.last().copied().unwrap_or(0)).all(|k| 2 * set.range(..=k).count() as i64 <= k)
}

pub fn odd_runs_of_ones(bits: &[bool]) -> bool {
    bits.split(|&b| !b).all(|block| block.is_empty() || block.len() % 2 == 1)
}
