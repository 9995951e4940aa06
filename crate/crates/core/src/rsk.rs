//! Robinson–Schensted insertion and second rows read off canonical words.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::canonical::CanonicalWord;
use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A filling of a Young diagram with distinct positive integers, increasing
/// along rows and down columns.
///
/// Insertion and recording tableaux of a permutation of degree `n` are
/// standard (entries exactly `1..=n`); partial insertion tableaux hold an
/// arbitrary set of values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

/// A partition, largest part first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Shape {
        let width = self.parts.first().copied().unwrap_or(0);
        Shape {
            parts: (1..=width)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
                .collect(),
        }
    }

    /// `λ₁`.
    pub fn first_row(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `μ₁`, the length of the first column.
    pub fn first_column(&self) -> usize {
        self.parts.len()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Tableau {
    /// Accepts any increasing filling of a partition shape with distinct entries.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let invalid = |reason: String| Err(Error::InvalidTableau { reason });
        if rows.iter().any(Vec::is_empty) {
            return invalid("empty row".into());
        }
        for (k, pair) in rows.windows(2).enumerate() {
            if pair[1].len() > pair[0].len() {
                return invalid(format!("row {} is longer than row {}", k + 2, k + 1));
            }
            if let Some(c) = (0..pair[1].len()).find(|&c| pair[1][c] <= pair[0][c]) {
                return invalid(format!("column {} does not increase at row {}", c + 1, k + 2));
            }
        }
        for (k, row) in rows.iter().enumerate() {
            if row.windows(2).any(|p| p[0] >= p[1]) {
                return invalid(format!("row {} does not increase", k + 1));
            }
        }
        let mut seen = BTreeSet::new();
        if let Some(v) = rows.iter().flatten().find(|&&v| v == 0 || !seen.insert(v)) {
            return invalid(format!("entry {v} is zero or repeated"));
        }
        Ok(Tableau { rows })
    }

    /// Like [`Tableau::from_rows`], and additionally requires entries `1..=n`.
    pub fn standard(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau::from_rows(rows)?;
        if !t.is_standard() {
            return Err(Error::InvalidTableau {
                reason: format!("entries are not exactly 1..={}", t.size()),
            });
        }
        Ok(t)
    }

    /// Builds the standard tableau of at most two rows whose second row is `second`.
    pub fn two_row(n: usize, second: &BTreeSet<usize>) -> Result<Self> {
        let first: Vec<usize> = (1..=n).filter(|v| !second.contains(v)).collect();
        let mut rows = vec![first];
        if !second.is_empty() {
            rows.push(second.iter().copied().collect());
        }
        Tableau::standard(rows)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row `k` (1-based), empty when the tableau has fewer rows.
    pub fn row(&self, k: usize) -> &[usize] {
        self.rows.get(k - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn row_set(&self, k: usize) -> BTreeSet<usize> {
        self.row(k).iter().copied().collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Shape {
        Shape {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size();
        self.rows.iter().flatten().all(|&v| v <= n)
    }

    /// Row-inserts `value`, returning the row index (0-based) where the
    /// diagram grew.
    fn insert(&mut self, value: usize) -> usize {
        let mut carry = value;
        for (k, row) in self.rows.iter_mut().enumerate() {
            let slot = row.partition_point(|&x| x < carry);
            if slot == row.len() {
                row.push(carry);
                return k;
            }
            carry = std::mem::replace(&mut row[slot], carry);
        }
        self.rows.push(vec![carry]);
        self.rows.len() - 1
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// One row per line, entries separated by whitespace; blank lines are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (k, line) in s.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::parse(k + 1, format!("line {}: '{tok}' is not an integer", k + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Tableau::standard(rows)
    }
}

/// `(P(w), Q(w))` by Schensted row insertion: each entry bumps the leftmost
/// larger entry of the row below.
pub fn rsk(w: &Permutation) -> (Tableau, Tableau) {
    let mut p = Tableau { rows: Vec::new() };
    let mut q = Tableau { rows: Vec::new() };
    for (step, &value) in w.entries().iter().enumerate() {
        let row = p.insert(value);
        if row == q.rows.len() {
            q.rows.push(Vec::new());
        }
        q.rows[row].push(step + 1);
    }
    (p, q)
}

/// `P_i(w)`: the insertion tableau of `w(1) … w(i)`.
pub fn partial_insertion(w: &Permutation, i: usize) -> Result<Tableau> {
    if i == 0 || i > w.degree() {
        return Err(Error::IndexOutOfRange {
            index: i,
            degree: w.degree(),
        });
    }
    let mut p = Tableau { rows: Vec::new() };
    for &value in &w.entries()[..i] {
        p.insert(value);
    }
    Ok(p)
}

pub fn shape(w: &Permutation) -> Shape {
    rsk(w).0.shape()
}

/// Second rows of `P(w)` and `Q(w)` for a boolean `w`, read off its
/// canonical word: one more than the first (resp. last) letter of each run.
pub fn row2_from_canonical(c: &CanonicalWord) -> (BTreeSet<usize>, BTreeSet<usize>) {
    (
        c.leftmost_letters().into_iter().map(|i| i + 1).collect(),
        c.rightmost_letters().into_iter().map(|i| i + 1).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::all_permutations;
    use std::collections::HashSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::standard(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rsk_examples() {
        let (ins, rec) = rsk(&p("314627(10)589"));
        assert_eq!(ins, t(&[&[1, 2, 5, 7, 8, 9], &[3, 4, 6, 10]]));
        assert_eq!(rec, t(&[&[1, 3, 4, 6, 7, 10], &[2, 5, 8, 9]]));

        let (ins, rec) = rsk(&Permutation::identity(5));
        assert_eq!(ins, t(&[&[1, 2, 3, 4, 5]]));
        assert_eq!(rec, ins);

        assert_eq!(rsk(&p("3412")).0, t(&[&[1, 2], &[3, 4]]));
        assert_eq!(rsk(&p("3142")).0, t(&[&[1, 2], &[3, 4]]));
    }

    #[test]
    fn shapes() {
        assert_eq!(shape(&p("314627(10)589")).parts(), &[6, 4]);
        assert_eq!(shape(&Permutation::identity(6)).parts(), &[6]);
        assert_eq!(shape(&p("345619278")).first_row(), 6);
        assert_eq!(Shape { parts: vec![3, 1] }.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(Shape { parts: vec![3, 1] }.to_string(), "(3, 1)");
    }

    #[test]
    fn partial_insertion_edges() {
        let w = p("51642738");
        assert_eq!(partial_insertion(&w, 8).unwrap(), rsk(&w).0);
        assert_eq!(partial_insertion(&w, 1).unwrap().rows(), &[vec![5]]);
        assert_eq!(partial_insertion(&w, 0), Err(Error::IndexOutOfRange { index: 0, degree: 8 }));
        assert_eq!(partial_insertion(&w, 9), Err(Error::IndexOutOfRange { index: 9, degree: 8 }));
    }

    /// When the smallest support letter `a` sits right of `a+1` in every
    /// reduced word, `w = [b ⋯ a]·w'` and `P_b(w)` is `1 … b-1` over `b+1`.
    #[test]
    fn partial_insertion_after_a_leading_decreasing_run() {
        // canonical word [21·98·567·34]: a = 1, b = 2
        let w = p("314627(10)589");
        let c = CanonicalWord::of(&w).unwrap();
        assert_eq!(c.dec_runs()[0].letters(), &[2, 1]);
        assert_eq!(partial_insertion(&w, 2).unwrap().rows(), &[vec![1], vec![3]]);

        // a longer leading run: w = [4321]·[6], b = 4
        let w = crate::words::Word::new(vec![4, 3, 2, 1, 6], 8).unwrap().evaluate();
        assert_eq!(CanonicalWord::of(&w).unwrap().to_string(), "[4321·6]");
        assert_eq!(partial_insertion(&w, 4).unwrap().rows(), &[vec![1, 2, 3], vec![5]]);
    }

    #[test]
    fn tableau_validation_and_text() {
        assert!(Tableau::standard(vec![vec![1, 3], vec![2, 4]]).is_ok());
        assert!(Tableau::standard(vec![vec![1, 2], vec![3, 4, 5]]).is_err());
        assert!(Tableau::standard(vec![vec![2, 1]]).is_err());
        assert!(Tableau::standard(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(Tableau::standard(vec![vec![1, 4], vec![2]]).is_err());
        assert!(Tableau::standard(vec![vec![2, 3], vec![1]]).is_err());
        let parsed: Tableau = "1 2 3 5\n4 6 7 8\n".parse().unwrap();
        assert_eq!(parsed.to_string(), "1 2 3 5\n4 6 7 8\n");
        assert!(matches!("1 2\n3 x\n".parse::<Tableau>(), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn row2_from_canonical_examples() {
        let c = CanonicalWord::of(&p("314627(10)589")).unwrap();
        assert_eq!(row2_from_canonical(&c), ([3, 10, 6, 4].into(), [2, 9, 8, 5].into()));
        let c = CanonicalWord::empty(4);
        assert_eq!(row2_from_canonical(&c), (BTreeSet::new(), BTreeSet::new()));
        let w = p("231548697(11)(10)");
        let c = CanonicalWord::of(&w).unwrap();
        let (r2p, r2q) = row2_from_canonical(&c);
        assert_eq!(r2p, [5, 8, 9, 11, 2].into());
        assert_eq!(r2q, [5, 7, 9, 11, 3].into());
        let (ins, rec) = rsk(&w);
        assert_eq!(ins.row_set(2), r2p);
        assert_eq!(rec.row_set(2), r2q);
    }

    fn lis_dp(v: &[usize], increasing: bool) -> usize {
        let mut best = vec![1; v.len()];
        for i in 0..v.len() {
            for j in 0..i {
                if (v[j] < v[i]) == increasing {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    #[test]
    fn schensted_and_symmetry_on_s7() {
        for n in 1..=7 {
            for w in all_permutations(n) {
                let (ins, rec) = rsk(&w);
                assert!(ins.is_standard() && rec.is_standard());
                assert_eq!(ins.shape(), rec.shape());
                assert_eq!(rsk(&w.inverse()).0, rec, "{w}");
                let sh = ins.shape();
                assert_eq!(sh.first_row(), lis_dp(w.entries(), true));
                assert_eq!(sh.first_column(), lis_dp(w.entries(), false));
                assert_eq!(sh.conjugate().first_row(), sh.first_column());
            }
        }
    }

    #[test]
    fn rsk_is_injective_on_s6() {
        let mut seen = HashSet::new();
        for w in all_permutations(6) {
            assert!(seen.insert(rsk(&w)), "{w}");
        }
        assert_eq!(seen.len(), 720);
    }

    #[test]
    fn second_rows_from_canonical_words_on_s8() {
        for w in all_permutations(8).filter(Permutation::is_fully_commutative) {
            assert!(shape(&w).parts().len() <= 2, "{w}");
            if !w.is_boolean() {
                continue;
            }
            let (ins, rec) = rsk(&w);
            let (r2p, r2q) = row2_from_canonical(&CanonicalWord::of(&w).unwrap());
            assert_eq!(ins.row_set(2), r2p, "{w}");
            assert_eq!(rec.row_set(2), r2q, "{w}");
            assert!(!r2p.iter().any(|i| r2p.contains(&(i + 1)) && r2p.contains(&(i + 2))), "{w}");
        }
    }
}
