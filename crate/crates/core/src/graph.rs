//! Simple undirected labeled graphs with dense bitset adjacency rows.
//!
//! Vertices are `0..n`. Graphs are immutable values; every combinator
//! returns a fresh graph. Adjacency lives in per-vertex bit rows so that
//! neighborhood-inclusion tests (the workhorse of the vicinal preorder)
//! are a handful of word operations.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
}

/// A sorted, duplicate-free set of vertices of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Edges may appear in any order or
    /// orientation; duplicates collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adj(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex out of range");
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = self.rows.iter().map(|w| w.count_ones() as usize).sum();
        total / 2
    }

    /// Open neighborhood `N(v)`, or closed `N[v]` when `closed` is set.
    pub fn neighborhood(&self, v: usize, closed: bool) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        let mut members: Vec<usize> = (0..self.n).filter(|&u| self.adj(u, v)).collect();
        if closed {
            members.push(v);
        }
        Ok(VertexSet::new(members))
    }

    /// Complement on the same label set.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            let dst = &mut g.rows[v * self.words..(v + 1) * self.words];
            let src = &self.rows[v * self.words..(v + 1) * self.words];
            for w in 0..self.words {
                dst[w] = !src[w] & Self::universe_word(self.n, w);
            }
            dst[v / 64] &= !(1u64 << (v % 64));
        }
        g
    }

    fn universe_word(n: usize, w: usize) -> u64 {
        let lo = w * 64;
        if n >= lo + 64 {
            !0
        } else if n <= lo {
            0
        } else {
            (1u64 << (n - lo)) - 1
        }
    }

    /// Disjoint union; `other`'s vertices are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Join: disjoint union plus all edges between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, v + self.n);
            }
        }
        g
    }

    /// Induced subgraph on `s`. Vertex `i` of the result is the `i`-th
    /// member of `s` in ascending original order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        let members = s.as_slice();
        let mut g = Graph::empty(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.adj(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Connected components as vertex sets, ordered by least member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for seed in 0..self.n {
            if seen[seed] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![seed];
            seen[seed] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in 0..self.n {
                    if !seen[v] && self.adj(u, v) {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comps.push(VertexSet::new(comp));
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 0)
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::new((0..self.n).collect())
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Single-word adjacency row; only valid when `n <= 64`.
    pub(crate) fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v * self.words]
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn edge_list_round_trip_and_duplicates_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_list_rejects_bad_input() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edge_list(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn complement_of_path() {
        let c = p4().complement();
        assert_eq!(c.edges(), vec![(0, 2), (0, 3), (1, 3)]);
        assert_eq!(c.complement(), p4());
    }

    #[test]
    fn complement_handles_word_boundary() {
        for n in [63, 64, 65, 70] {
            let g = Graph::empty(n);
            let c = g.complement();
            assert_eq!(c.edge_count(), n * (n - 1) / 2);
            assert_eq!(c.complement(), g);
        }
    }

    #[test]
    fn union_and_join_shift_labels() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let u = k2.disjoint_union(&k2);
        assert_eq!(u.edges(), vec![(0, 1), (2, 3)]);
        let j = k2.join(&k2);
        assert_eq!(j.edge_count(), 6);
        assert!(j.adj(0, 2) && j.adj(1, 3));
    }

    #[test]
    fn join_is_complement_of_union_of_complements() {
        let a = p4();
        let b = Graph::from_edge_list(3, &[(0, 2)]).unwrap();
        let lhs = a.join(&b);
        let rhs = a.complement().disjoint_union(&b.complement()).complement();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn induced_subgraph_relabels_in_order() {
        let g = p4();
        let h = g.induced_subgraph(&VertexSet::new(vec![3, 1, 0])).unwrap();
        // members sorted to [0, 1, 3]; only the 0-1 edge survives
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(0, 1)]);
        assert!(g.induced_subgraph(&VertexSet::new(vec![5])).is_err());
    }

    #[test]
    fn neighborhoods() {
        let g = p4();
        assert_eq!(g.neighborhood(1, false).unwrap().as_slice(), &[0, 2]);
        assert_eq!(g.neighborhood(1, true).unwrap().as_slice(), &[0, 1, 2]);
        assert!(g.neighborhood(4, false).is_err());
    }

    #[test]
    fn components_ordered_by_least_member() {
        let g = Graph::from_edge_list(5, &[(1, 3), (0, 4)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].as_slice(), &[0, 4]);
        assert_eq!(comps[1].as_slice(), &[1, 3]);
        assert_eq!(comps[2].as_slice(), &[2]);
        assert!(!g.is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn vertex_set_basics() {
        let s = VertexSet::new(vec![4, 1, 4, 2]);
        assert_eq!(s.as_slice(), &[1, 2, 4]);
        assert!(s.contains(2) && !s.contains(3));
        assert_eq!(s.min(), Some(1));
    }
}
