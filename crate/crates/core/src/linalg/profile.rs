//! Exact eigenvalue-multiplicity profiles of graphs, eigenvector checks,
//! and equitable quotient matrices. Multiplicities of the integer
//! eigenvalues 0 and -1 are computed twice, once from the characteristic
//! polynomial and once from a rank, and the two must agree; any mismatch
//! is a bug in the arithmetic and aborts.

use crate::graph::{Graph, VertexSet};
use crate::linalg::matrix::IntMatrix;
use crate::linalg::poly::IntPolynomial;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("eigenvector must not be the zero vector")]
    ZeroVector,
    #[error("vector has {found} entries, graph has {expected} vertices")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("partition cell {index} is empty")]
    EmptyPart { index: usize },
    #[error("vertex {vertex} is not covered exactly once by the partition")]
    NotAPartition { vertex: usize },
    #[error("vertices {u} and {v} of cell {cell} see different counts in cell {other}")]
    NotEquitable {
        u: usize,
        v: usize,
        cell: usize,
        other: usize,
    },
}

/// One square-free piece of a characteristic polynomial: every root of
/// `factor` is an eigenvalue of multiplicity exactly `multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SquareFreePart {
    pub multiplicity: usize,
    pub factor: IntPolynomial,
}

impl SquareFreePart {
    /// Whether the factor has a root besides 0 and -1.
    pub fn has_other_root(&self) -> bool {
        let deg = self.factor.degree().unwrap_or(0);
        let at_zero = self.factor.root_multiplicity(&BigInt::zero());
        let at_minus1 = self.factor.root_multiplicity(&BigInt::from(-1));
        deg > at_zero + at_minus1
    }
}

/// Multiplicity data of a graph's adjacency spectrum. `max_other_mult` is
/// the largest multiplicity over eigenvalues other than 0 and -1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectralProfile {
    pub n: usize,
    pub mult0: usize,
    pub mult_minus1: usize,
    pub square_free_parts: Vec<SquareFreePart>,
    pub max_other_mult: usize,
}

/// Computes the full multiplicity profile of `g` exactly.
pub fn multiplicity_profile(g: &Graph) -> SpectralProfile {
    let n = g.n();
    let a = IntMatrix::adjacency(g);
    let p = a.char_poly();
    let mult0 = p.root_multiplicity(&BigInt::zero());
    assert_eq!(
        mult0,
        n - a.rank(),
        "zero-eigenvalue multiplicity disagrees with adjacency rank"
    );
    let mult_minus1 = p.root_multiplicity(&BigInt::from(-1));
    assert_eq!(
        mult_minus1,
        n - a.plus_diagonal(1).rank(),
        "eigenvalue -1 multiplicity disagrees with shifted rank"
    );
    let parts = p.square_free_decomposition();
    let degree_sum: usize = parts
        .iter()
        .map(|(m, f)| m * f.degree().expect("factors have positive degree"))
        .sum();
    assert_eq!(degree_sum, n, "square-free parts do not account for every eigenvalue");
    let square_free_parts: Vec<SquareFreePart> = parts
        .into_iter()
        .map(|(multiplicity, factor)| SquareFreePart { multiplicity, factor })
        .collect();
    let max_other_mult = square_free_parts
        .iter()
        .filter(|p| p.has_other_root())
        .map(|p| p.multiplicity)
        .max()
        .unwrap_or(0);
    SpectralProfile {
        n,
        mult0,
        mult_minus1,
        square_free_parts,
        max_other_mult,
    }
}

/// Multiplicity of the integer `lambda` in the spectrum, as a nullity.
pub fn integer_eigenvalue_multiplicity(g: &Graph, lambda: i64) -> usize {
    let shifted = IntMatrix::adjacency(g).plus_diagonal(-lambda);
    g.n() - shifted.rank()
}

/// Checks exactly whether `A x = lambda x` for a nonzero integer vector.
pub fn verify_eigenvector(g: &Graph, lambda: i64, vector: &[i64]) -> Result<bool, ProfileError> {
    if vector.len() != g.n() {
        return Err(ProfileError::DimensionMismatch {
            expected: g.n(),
            found: vector.len(),
        });
    }
    if vector.iter().all(|&x| x == 0) {
        return Err(ProfileError::ZeroVector);
    }
    let x: Vec<BigInt> = vector.iter().map(|&v| BigInt::from(v)).collect();
    let ax = IntMatrix::adjacency(g).mul_vec(&x);
    let ok = ax
        .iter()
        .zip(&x)
        .all(|(lhs, xi)| *lhs == xi * BigInt::from(lambda));
    Ok(ok)
}

/// Quotient matrix of an equitable partition: entry `(i, j)` counts the
/// neighbors in cell `j` of any vertex of cell `i`. The cells must be
/// nonempty, cover every vertex exactly once, and give every vertex of a
/// cell the same count toward every cell.
pub fn quotient_matrix(g: &Graph, parts: &[VertexSet]) -> Result<IntMatrix, ProfileError> {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(ProfileError::EmptyPart { index: i });
        }
        for v in part.iter() {
            if v >= n || owner[v] != usize::MAX {
                return Err(ProfileError::NotAPartition { vertex: v });
            }
            owner[v] = i;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(ProfileError::NotAPartition { vertex: v });
    }
    let k = parts.len();
    let mut q = IntMatrix::zero(k, k);
    for (i, part) in parts.iter().enumerate() {
        let mut members = part.iter();
        let first = members.next().expect("cells are nonempty");
        let count_into = |u: usize, j: usize| parts[j].iter().filter(|&w| g.adj(u, w)).count();
        let reference: Vec<usize> = (0..k).map(|j| count_into(first, j)).collect();
        for v in members {
            for (j, &expected) in reference.iter().enumerate() {
                if count_into(v, j) != expected {
                    return Err(ProfileError::NotEquitable {
                        u: first,
                        v,
                        cell: i,
                        other: j,
                    });
                }
            }
        }
        for (j, &c) in reference.iter().enumerate() {
            q.set(i, j, BigInt::from(c as i64));
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cocktail_party, complete, cycle, path, star};

    #[test]
    fn profile_of_paths_and_cycles() {
        let p4 = multiplicity_profile(&path(4));
        assert_eq!(p4.n, 4);
        assert_eq!(p4.mult0, 0);
        assert_eq!(p4.mult_minus1, 0);
        assert_eq!(p4.max_other_mult, 1);
        let c4 = multiplicity_profile(&cycle(4));
        assert_eq!(c4.mult0, 2);
        assert_eq!(c4.max_other_mult, 1);
        let c5 = multiplicity_profile(&cycle(5));
        assert_eq!(c5.mult0, 0);
        assert_eq!(c5.mult_minus1, 0);
        // the two irrational eigenvalue pairs of the five-cycle are double
        assert_eq!(c5.max_other_mult, 2);
    }

    #[test]
    fn profile_of_complete_graphs() {
        let k3 = multiplicity_profile(&complete(3));
        assert_eq!(k3.mult0, 0);
        assert_eq!(k3.mult_minus1, 2);
        assert_eq!(k3.max_other_mult, 1);
        let parts: Vec<(usize, &IntPolynomial)> = k3
            .square_free_parts
            .iter()
            .map(|p| (p.multiplicity, &p.factor))
            .collect();
        let minus_two = IntPolynomial::from_i64(&[-2, 1]);
        let plus_one = IntPolynomial::from_i64(&[1, 1]);
        assert_eq!(parts, vec![(1, &minus_two), (2, &plus_one)]);
    }

    #[test]
    fn profile_of_cocktail_party() {
        let p = multiplicity_profile(&cocktail_party(3));
        assert_eq!(p.mult0, 3);
        assert_eq!(p.mult_minus1, 0);
        // eigenvalue -2 has multiplicity two
        assert_eq!(p.max_other_mult, 2);
        assert_eq!(integer_eigenvalue_multiplicity(&cocktail_party(3), -2), 2);
        assert_eq!(integer_eigenvalue_multiplicity(&cocktail_party(3), 4), 1);
        assert_eq!(integer_eigenvalue_multiplicity(&cocktail_party(3), 1), 0);
    }

    #[test]
    fn empty_graph_profile() {
        let p = multiplicity_profile(&Graph::empty(0));
        assert_eq!(p.n, 0);
        assert_eq!(p.mult0, 0);
        assert!(p.square_free_parts.is_empty());
        let p1 = multiplicity_profile(&Graph::empty(3));
        assert_eq!(p1.mult0, 3);
        assert_eq!(p1.max_other_mult, 0);
    }

    #[test]
    fn eigenvector_checks() {
        let k2 = complete(2);
        assert_eq!(verify_eigenvector(&k2, 1, &[1, 1]), Ok(true));
        assert_eq!(verify_eigenvector(&k2, -1, &[1, -1]), Ok(true));
        assert_eq!(verify_eigenvector(&k2, 1, &[1, 0]), Ok(false));
        assert_eq!(verify_eigenvector(&k2, 2, &[1, 1]), Ok(false));
        assert_eq!(verify_eigenvector(&k2, 1, &[0, 0]), Err(ProfileError::ZeroVector));
        assert_eq!(
            verify_eigenvector(&k2, 1, &[1, 1, 1]),
            Err(ProfileError::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn quotient_of_a_star() {
        let g = star(5);
        let parts = vec![VertexSet::new(vec![0]), VertexSet::new(vec![1, 2, 3, 4])];
        let q = quotient_matrix(&g, &parts).unwrap();
        assert_eq!(q, IntMatrix::from_i64_rows(&[vec![0, 4], vec![1, 0]]));
    }

    #[test]
    fn quotient_divides_spectrum() {
        // the halved path partition is equitable and its polynomial
        // divides the one of the whole path
        let g = path(4);
        let parts = vec![VertexSet::new(vec![0, 3]), VertexSet::new(vec![1, 2])];
        let q = quotient_matrix(&g, &parts).unwrap();
        let qp = q.char_poly();
        let full = IntMatrix::adjacency(&g).char_poly();
        assert_eq!(full.exact_div(&qp).is_some(), true);
    }

    #[test]
    fn quotient_rejections() {
        let g = star(4);
        let uneven = vec![VertexSet::new(vec![0, 1]), VertexSet::new(vec![2, 3])];
        assert_eq!(
            quotient_matrix(&g, &uneven),
            Err(ProfileError::NotEquitable { u: 0, v: 1, cell: 0, other: 1 })
        );
        let empty = vec![VertexSet::new(vec![]), VertexSet::new(vec![0, 1, 2, 3])];
        assert_eq!(quotient_matrix(&g, &empty), Err(ProfileError::EmptyPart { index: 0 }));
        let missing = vec![VertexSet::new(vec![0, 1])];
        assert_eq!(quotient_matrix(&g, &missing), Err(ProfileError::NotAPartition { vertex: 2 }));
        let doubled = vec![VertexSet::new(vec![0, 1, 2, 3]), VertexSet::new(vec![3])];
        assert_eq!(quotient_matrix(&g, &doubled), Err(ProfileError::NotAPartition { vertex: 3 }));
    }
}
