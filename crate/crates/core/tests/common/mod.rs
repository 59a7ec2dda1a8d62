//! Independent oracles shared by the integration suites. Everything here
//! recomputes invariants from first principles (rational Gaussian
//! elimination, cofactor expansion) so the library's fraction-free code
//! paths are checked against genuinely different arithmetic.

#![allow(dead_code)]

use cograph_core::graph::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Adjacency matrix of `g` plus `diagonal` on the diagonal, as rationals.
pub fn shifted_adjacency_rationals(g: &Graph, diagonal: i64) -> Vec<Vec<BigRational>> {
    let n = g.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        rational(diagonal)
                    } else {
                        rational(g.adj(i, j) as i64)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn i64_rows_to_rationals(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|row| row.iter().map(|&v| rational(v)).collect())
        .collect()
}

/// Rank by plain Gaussian elimination over the rationals.
pub fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_value = m[rank][col].clone();
        for r in 0..rows {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot_value;
            for c in col..cols {
                let delta = &factor * &m[rank][c];
                m[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Characteristic polynomial of the adjacency matrix by cofactor
/// expansion of `det(xI - A)`, ascending coefficients. Minors are
/// memoized per column subset, so this stays comfortable up to n = 12.
pub fn cofactor_char_poly(g: &Graph) -> Vec<BigInt> {
    let n = g.n();
    assert!(n <= 12, "cofactor oracle is for small graphs");
    let full: usize = (1usize << n) - 1;
    // dets[mask] is the determinant of the submatrix on the last
    // popcount(mask) rows and the columns in mask.
    let mut dets: Vec<Vec<BigInt>> = vec![Vec::new(); full + 1];
    dets[0] = vec![BigInt::one()];
    for mask in 1..=full {
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = vec![BigInt::zero(); k + 1];
        let mut even_position = true;
        for c in 0..n {
            if mask & (1 << c) == 0 {
                continue;
            }
            let sub = &dets[mask ^ (1 << c)];
            if row == c {
                // diagonal entry is x: shift the minor up one degree
                for (i, v) in sub.iter().enumerate() {
                    if even_position {
                        acc[i + 1] += v;
                    } else {
                        acc[i + 1] -= v;
                    }
                }
            } else if g.adj(row, c) {
                // off-diagonal entry of xI - A is -1
                for (i, v) in sub.iter().enumerate() {
                    if even_position {
                        acc[i] -= v;
                    } else {
                        acc[i] += v;
                    }
                }
            }
            even_position = !even_position;
        }
        dets[mask] = acc;
    }
    dets[full].clone()
}

pub fn triangle_count(g: &Graph) -> usize {
    let n = g.n();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if !g.adj(i, j) {
                continue;
            }
            for k in j + 1..n {
                if g.adj(i, k) && g.adj(j, k) {
                    count += 1;
                }
            }
        }
    }
    count
}
