//! Dense integer matrices with exact rank and characteristic polynomial.
//!
//! Rank uses fraction-free Bareiss elimination: every intermediate entry
//! is a minor of the input, and the single division per update is exact.
//! Characteristic polynomials come from the Berkowitz algorithm, which is
//! division-free, so both computations stay in the integers from end to
//! end.

use crate::graph::Graph;
use crate::linalg::poly::IntPolynomial;
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows
                .iter()
                .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
                .collect(),
        }
    }

    /// Adjacency matrix of `g`, a symmetric 0/1 matrix with zero diagonal.
    pub fn adjacency(g: &Graph) -> IntMatrix {
        let n = g.n();
        let mut m = IntMatrix::zero(n, n);
        for (u, v) in g.edges() {
            m.data[u * n + v] = BigInt::one();
            m.data[v * n + u] = BigInt::one();
        }
        m
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

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    /// The matrix plus `c` times the identity.
    pub fn plus_diagonal(&self, c: i64) -> IntMatrix {
        assert_eq!(self.rows, self.cols, "diagonal shift needs a square matrix");
        let mut m = self.clone();
        for i in 0..self.rows {
            let entry = m.get(i, i) + BigInt::from(c);
            m.set(i, i, entry);
        }
        m
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                x.iter()
                    .enumerate()
                    .map(|(j, xj)| self.get(i, j) * xj)
                    .sum()
            })
            .collect()
    }

    /// Exact rank by fraction-free elimination with column skipping.
    pub fn rank(&self) -> usize {
        let (r, c) = (self.rows, self.cols);
        let mut m = self.data.clone();
        let mut prev = BigInt::one();
        let mut row = 0;
        for col in 0..c {
            if row == r {
                break;
            }
            let Some(p) = (row..r).find(|&i| !m[i * c + col].is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..c {
                    m.swap(p * c + j, row * c + j);
                }
            }
            for i in (row + 1)..r {
                for j in (col + 1)..c {
                    let num = &m[row * c + col] * &m[i * c + j] - &m[i * c + col] * &m[row * c + j];
                    debug_assert!((&num % &prev).is_zero(), "inexact elimination step");
                    m[i * c + j] = num / &prev;
                }
                m[i * c + col] = BigInt::zero();
            }
            prev = m[row * c + col].clone();
            row += 1;
        }
        row
    }

    /// Characteristic polynomial `det(xI - M)` by the Berkowitz method:
    /// monic of degree `n`, ascending coefficients.
    pub fn char_poly(&self) -> IntPolynomial {
        assert_eq!(self.rows, self.cols, "characteristic polynomial needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return IntPolynomial::one();
        }
        let a = |i: usize, j: usize| &self.data[i * n + j];
        // coefficients of the leading k x k principal minor, descending
        let mut c: Vec<BigInt> = vec![BigInt::one(), -a(0, 0).clone()];
        for k in 1..n {
            // first column of the Toeplitz factor: 1, -a_kk, -R M^(j-2) S
            let mut t: Vec<BigInt> = Vec::with_capacity(k + 2);
            t.push(BigInt::one());
            t.push(-a(k, k).clone());
            let mut v: Vec<BigInt> = (0..k).map(|i| a(i, k).clone()).collect();
            for _ in 0..k {
                let dot: BigInt = (0..k).map(|j| a(k, j) * &v[j]).sum();
                t.push(-dot);
                let next: Vec<BigInt> = (0..k)
                    .map(|i| (0..k).map(|j| a(i, j) * &v[j]).sum())
                    .collect();
                v = next;
            }
            let mut next = vec![BigInt::zero(); k + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, old) in c.iter().enumerate() {
                    if i >= j && i - j < t.len() {
                        *slot += &t[i - j] * old;
                    }
                }
            }
            c = next;
        }
        c.reverse();
        IntPolynomial::new(c)
    }
}
