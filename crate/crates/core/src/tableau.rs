//! Standard Young tableaux and the major index.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A filling of a Young diagram with `1..=n`, increasing along rows and
/// down columns. Entries are stored row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Validates a row-major filling.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::Domain(format!("entry {v} is not a fresh value in 1..={n}")));
                }
                seen[v] = true;
                if c > 0 && row[c - 1] >= v {
                    return Err(Error::Domain(format!("row {r} is not increasing")));
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(Error::Domain(format!("column {c} is not increasing")));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row index (0-based) of each value; `out[v - 1]` is the row of `v`.
    pub fn row_of_each(&self) -> Vec<usize> {
        let mut out = vec![0; self.shape.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v - 1] = r;
            }
        }
        out
    }
}

/// Sum of descents `i`, i.e. values whose successor `i + 1` sits in a
/// strictly lower row.
pub fn maj(t: &StandardTableau) -> usize {
    maj_of_row_word(&t.row_of_each())
}

pub(crate) fn maj_of_row_word(row_of: &[usize]) -> usize {
    row_of
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] > w[0])
        .map(|(i, _)| i + 1)
        .sum()
}

/// Streams every standard tableau of `shape` exactly once.
pub fn standard_tableaux(shape: &Partition) -> StandardTableaux {
    StandardTableaux::new(shape.clone())
}

/// Depth-first enumeration over the row placed for each successive value.
pub struct StandardTableaux {
    shape: Partition,
    filled: Vec<usize>,
    // path[k] = row holding value k + 1
    path: Vec<usize>,
    started: bool,
    done: bool,
}

impl StandardTableaux {
    fn new(shape: Partition) -> Self {
        let rows = shape.len();
        StandardTableaux {
            shape,
            filled: vec![0; rows],
            path: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn can_place(&self, r: usize) -> bool {
        self.filled[r] < self.shape.part(r) && (r == 0 || self.filled[r - 1] > self.filled[r])
    }

    fn place(&mut self, r: usize) {
        self.filled[r] += 1;
        self.path.push(r);
    }

    fn complete_greedily(&mut self) {
        while self.path.len() < self.shape.size() {
            let r = (0..self.shape.len())
                .find(|&r| self.can_place(r))
                .expect("a partial standard filling always has an addable corner");
            self.place(r);
        }
    }

    /// Advance `path` to the next complete filling; false when exhausted.
    fn advance(&mut self) -> bool {
        while let Some(r) = self.path.pop() {
            self.filled[r] -= 1;
            if let Some(next) = (r + 1..self.shape.len()).find(|&s| self.can_place(s)) {
                self.place(next);
                self.complete_greedily();
                return true;
            }
        }
        false
    }

    /// Current row word without building a tableau; used by hot loops that
    /// only need the descent set.
    pub(crate) fn next_row_word(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.complete_greedily();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(&self.path)
    }
}

impl Iterator for StandardTableaux {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        let shape = self.shape.clone();
        let word = self.next_row_word()?;
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
        for (i, &r) in word.iter().enumerate() {
            rows[r].push(i + 1);
        }
        Some(StandardTableau { shape, rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn counts() {
        assert_eq!(standard_tableaux(&part![2, 1]).count(), 2);
        assert_eq!(standard_tableaux(&part![5]).count(), 1);
        assert_eq!(standard_tableaux(&part![2, 1, 1]).count(), 3);
        assert_eq!(standard_tableaux(&part![3, 3]).count(), 5);
    }

    #[test]
    fn all_valid_and_distinct() {
        let all: Vec<_> = standard_tableaux(&part![3, 2, 1]).collect();
        for t in &all {
            StandardTableau::from_rows(t.rows().to_vec()).unwrap();
        }
        let mut rows: Vec<_> = all.iter().map(|t| t.rows().to_vec()).collect();
        rows.sort();
        rows.dedup();
        assert_eq!(rows.len(), all.len());
        assert_eq!(all.len(), 16);
    }

    #[test]
    fn major_index() {
        let t = StandardTableau::from_rows(vec![vec![1, 2], vec![3], vec![4]]).unwrap();
        assert_eq!(maj(&t), 5);
        let row = StandardTableau::from_rows(vec![(1..=6).collect()]).unwrap();
        assert_eq!(maj(&row), 0);
        let col = StandardTableau::from_rows((1..=6).map(|i| vec![i]).collect()).unwrap();
        assert_eq!(maj(&col), 15);
    }

    #[test]
    fn rejects_bad_fillings() {
        assert!(StandardTableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 3], vec![2, 4], vec![5]]).is_ok());
        assert!(StandardTableau::from_rows(vec![vec![1, 2], vec![4, 3]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 1]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1], vec![2, 3]]).is_err());
    }
}
