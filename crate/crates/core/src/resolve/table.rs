use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::hilbert::binomial;

/// Graded Betti numbers `beta_{i,j}` of a quotient `S/I`.
///
/// Only nonzero entries are stored. `max_i` and `max_row` record the window
/// that was computed; when `exact` is set every entry outside the window is
/// known to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, usize), u64>,
    max_i: usize,
    max_row: usize,
    exact: bool,
}

/// Serialized form: `{"pd", "reg", "entries": [[i, j, beta], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiSummary {
    pub pd: usize,
    pub reg: usize,
    pub entries: Vec<(usize, usize, u64)>,
}

impl BettiTable {
    pub fn new(nvars: usize, entries: BTreeMap<(usize, usize), u64>, max_i: usize, max_row: usize, exact: bool) -> Self {
        let entries = entries.into_iter().filter(|(_, b)| *b != 0).collect();
        BettiTable {
            nvars,
            entries,
            max_i,
            max_row,
            exact,
        }
    }

    /// A table given in full, e.g. read from a file.
    pub fn from_entries(nvars: usize, entries: impl IntoIterator<Item = (usize, usize, u64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, j, b) in entries {
            if j < i {
                return Err(AlgebraError::Shape(format!("entry ({i}, {j}) lies below row 0")));
            }
            map.insert((i, j), b);
        }
        let max_i = map.keys().map(|k| k.0).max().unwrap_or(0);
        let max_row = map.keys().map(|k| k.1 - k.0).max().unwrap_or(0);
        Ok(BettiTable::new(nvars, map, max_i, max_row, true))
    }

    pub fn from_summary(nvars: usize, s: &BettiSummary) -> Result<Self> {
        BettiTable::from_entries(nvars, s.entries.iter().copied())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Mutable access, for building negative controls.
    pub fn set(&mut self, i: usize, j: usize, beta: u64) {
        if beta == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), beta);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn max_i(&self) -> usize {
        self.max_i
    }

    pub fn max_row(&self) -> usize {
        self.max_row
    }

    /// Largest homological index with a nonzero entry.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Largest row `j - i` with a nonzero entry.
    pub fn reg(&self) -> usize {
        self.entries.keys().map(|k| k.1 - k.0).max().unwrap_or(0)
    }

    /// Projective dimension, inconclusive if the last computed column is
    /// nonzero and more columns could exist.
    pub fn projective_dimension(&self) -> Result<usize> {
        if !self.exact && self.max_i < self.nvars && self.entries.keys().any(|k| k.0 == self.max_i) {
            return Err(AlgebraError::Inconclusive(format!(
                "column {} is nonzero and the table stops there",
                self.max_i
            )));
        }
        Ok(self.pd())
    }

    /// Castelnuovo-Mumford regularity of `S/I`.
    pub fn regularity(&self) -> Result<usize> {
        if !self.exact && self.entries.keys().any(|k| k.1 - k.0 == self.max_row) {
            return Err(AlgebraError::Inconclusive(format!(
                "row {} is nonzero and the table stops there",
                self.max_row
            )));
        }
        Ok(self.reg())
    }

    /// Arithmetically Cohen-Macaulay: projective dimension equals `codim`.
    pub fn is_acm(&self, codim: usize) -> Result<bool> {
        if !self.exact && self.max_i < (codim + 1).min(self.nvars) {
            return Err(AlgebraError::Inconclusive(format!(
                "table stops at column {}, need {}",
                self.max_i,
                codim + 1
            )));
        }
        Ok(self.pd() == codim)
    }

    /// Property `N_{d,p}`: for `1 <= i <= p` the only nonzero entries of
    /// column `i` sit in degree `i + d - 1`.
    pub fn n_dp_check(&self, d: usize, p: usize) -> Result<bool> {
        if !self.exact && self.max_i < p.min(self.nvars) {
            return Err(AlgebraError::Inconclusive(format!(
                "table stops at column {}, need {p}",
                self.max_i
            )));
        }
        Ok(self
            .entries
            .keys()
            .all(|&(i, j)| i == 0 || i > p || j + 1 == i + d))
    }

    pub fn totals(&self) -> Vec<u64> {
        let mut t = vec![0u64; self.pd() + 1];
        for (&(i, _), &b) in &self.entries {
            t[i] += b;
        }
        t
    }

    /// `sum (-1)^i beta_{i,j} t^j`, lowest degree first.
    pub fn k_polynomial(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|k| k.1).max().unwrap_or(0);
        let mut p = vec![0i64; top + 1];
        for (&(i, j), &b) in &self.entries {
            let s = if i % 2 == 0 { 1 } else { -1 };
            p[j] += s * b as i64;
        }
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    }

    /// `dim (S/I)_m` predicted by the table:
    /// `sum (-1)^i beta_{i,j} C(nvars - 1 + m - j, nvars - 1)`.
    pub fn hilbert_function(&self, m: i64) -> i128 {
        let n = self.nvars as i64;
        self.entries
            .iter()
            .map(|(&(i, j), &b)| {
                let s: i128 = if i % 2 == 0 { 1 } else { -1 };
                s * b as i128 * binomial(n - 1 + m - j as i64, n - 1)
            })
            .sum()
    }

    pub fn summary(&self) -> BettiSummary {
        BettiSummary {
            pd: self.pd(),
            reg: self.reg(),
            entries: self.entries().collect(),
        }
    }

    /// Diagram in the usual layout: column indices, a `total:` row, then
    /// rows `0..=reg` with `-` for zero entries.
    pub fn to_text(&self) -> String {
        let pd = self.pd();
        let reg = self.reg();
        let totals = self.totals();
        let cell = |i: usize, r: usize| -> String {
            match self.get(i, i + r) {
                0 => "-".to_string(),
                b => b.to_string(),
            }
        };
        let widths: Vec<usize> = (0..=pd)
            .map(|i| {
                let mut w = i.to_string().len().max(totals[i].to_string().len());
                for r in 0..=reg {
                    w = w.max(cell(i, r).len());
                }
                w
            })
            .collect();
        let label_w = "total:".len().max(format!("{reg}:").len());
        let mut out = String::new();
        let mut line = |label: &str, cells: Vec<String>| {
            let mut s = format!("{label:>label_w$}");
            for (c, w) in cells.iter().zip(&widths) {
                write!(s, " {c:>w$}").unwrap();
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line("", (0..=pd).map(|i| i.to_string()).collect());
        line("total:", totals.iter().map(|t| t.to_string()).collect());
        for r in 0..=reg {
            line(&format!("{r}:"), (0..=pd).map(|i| cell(i, r)).collect());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn twisted_cubic() -> BettiTable {
        BettiTable::from_entries(4, [(0, 0, 1), (1, 2, 3), (2, 3, 2)]).unwrap()
    }

    #[test]
    fn text_layout() {
        let t = twisted_cubic();
        assert_eq!(t.to_text(), "       0 1 2\ntotal: 1 3 2\n    0: 1 - -\n    1: - 3 2\n");
    }

    #[test]
    fn invariants() {
        let t = twisted_cubic();
        assert_eq!(t.pd(), 2);
        assert_eq!(t.regularity().unwrap(), 1);
        assert!(t.is_acm(2).unwrap());
        assert!(t.n_dp_check(2, 2).unwrap());
        assert_eq!(t.k_polynomial(), vec![1, 0, -3, 2]);
        for m in 0..8 {
            assert_eq!(t.hilbert_function(m), 3 * m as i128 + 1);
        }
    }

    #[test]
    fn truncation_is_inconclusive() {
        let mut e = BTreeMap::new();
        e.insert((0, 0), 1);
        e.insert((1, 2), 3);
        let t = BettiTable::new(4, e, 1, 3, false);
        assert!(t.is_acm(2).is_err());
        assert!(t.projective_dimension().is_err());
    }

    #[test]
    fn summary_round_trip() {
        let t = twisted_cubic();
        let back = BettiTable::from_summary(4, &t.summary()).unwrap();
        assert_eq!(back, t);
    }
}
