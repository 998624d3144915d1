//! Dense integer matrices with exact rank.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ExactMatrix {
        ExactMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> ExactMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        ExactMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination with
    /// partial pivoting on magnitude. Every division is exact.
    pub fn rank(&self) -> usize {
        let (m, n) = (self.rows, self.cols);
        let mut a: Vec<Vec<BigInt>> =
            (0..m).map(|i| self.data[i * n..(i + 1) * n].to_vec()).collect();
        let mut prev = BigInt::from(1);
        let mut rank = 0;
        for col in 0..n {
            if rank == m {
                break;
            }
            let pivot = (rank..m)
                .filter(|&i| !a[i][col].is_zero())
                .max_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()).then(y.cmp(&x)));
            let Some(pivot) = pivot else {
                continue;
            };
            a.swap(rank, pivot);
            let (top, below) = a.split_at_mut(rank + 1);
            let p = &top[rank];
            for row in below.iter_mut() {
                let factor = row[col].clone();
                for j in col + 1..n {
                    let v = (&row[j] * &p[col] - &factor * &p[j]) / &prev;
                    row[j] = v;
                }
                row[col] = BigInt::zero();
            }
            prev = top[rank][col].clone();
            rank += 1;
        }
        rank
    }
}

impl fmt::Display for ExactMatrix {
    /// Rows on separate lines, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
