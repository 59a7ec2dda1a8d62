//! Constructors for the graph families used throughout the crate: paths,
//! cycles, complete multipartite graphs, threshold graphs from creation
//! sequences, the tightness family, and generalized line graphs.

use crate::graph::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("creation sequence step {0:?} is not 'i' or 'd'")]
    BadStepChar(char),
    #[error("expected {expected} block counts, found {found}")]
    CountMismatch { expected: usize, found: usize },
}

/// Path on `n` vertices: `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list(n, &edges).expect("path edges are valid")
}

/// Cycle on `n` vertices for `n >= 3`; degenerates to a path below that.
pub fn cycle(n: usize) -> Graph {
    if n < 3 {
        return path(n);
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::from_edge_list(n, &edges).expect("cycle edges are valid")
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}

/// Star with center `0` and `n - 1` leaves.
pub fn star(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edge_list(n, &edges).expect("star edges are valid")
}

/// Complete multipartite graph. Part `i` occupies the next `parts[i]`
/// labels in order; zero-size parts are skipped.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut edges = Vec::new();
    let mut start = 0;
    for &size in parts {
        for u in start..start + size {
            for v in start + size..n {
                edges.push((u, v));
            }
        }
        start += size;
    }
    Graph::from_edge_list(n, &edges).expect("multipartite edges are valid")
}

/// Cocktail party graph: `k` parts of size two, `K_{2,...,2}`.
pub fn cocktail_party(k: usize) -> Graph {
    complete_multipartite(&vec![2; k])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Isolated,
    Dominating,
}

/// A threshold-graph creation sequence. Vertex `j` is added at step `j`,
/// either isolated or adjacent to every earlier vertex. The first step is
/// normalized to `Isolated`, which loses nothing on one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CreationSequence {
    steps: Vec<Step>,
}

impl CreationSequence {
    pub fn new(mut steps: Vec<Step>) -> CreationSequence {
        if let Some(first) = steps.first_mut() {
            *first = Step::Isolated;
        }
        CreationSequence { steps }
    }

    /// Parses a string of `i` and `d` characters, case-insensitive.
    pub fn from_code(code: &str) -> Result<CreationSequence, GeneratorError> {
        let steps = code
            .chars()
            .map(|c| match c.to_ascii_lowercase() {
                'i' => Ok(Step::Isolated),
                'd' => Ok(Step::Dominating),
                other => Err(GeneratorError::BadStepChar(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CreationSequence::new(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Seeded uniform draw over the `2^(n-1)` sequences of length `n`.
    pub fn random(n: usize, seed: u64) -> CreationSequence {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let steps = (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Step::Dominating
                } else {
                    Step::Isolated
                }
            })
            .collect();
        CreationSequence::new(steps)
    }

    pub fn to_graph(&self) -> Graph {
        let n = self.steps.len();
        let mut edges = Vec::new();
        for (j, &step) in self.steps.iter().enumerate() {
            if step == Step::Dominating {
                for u in 0..j {
                    edges.push((u, j));
                }
            }
        }
        Graph::from_edge_list(n, &edges).expect("creation edges are valid")
    }
}

/// The graph `K_1 ∨ (K_{s,...,s} ∪ (s^2 - s)K_1)` with `k` parts of size
/// `s`: an apex over a complete multipartite core plus a fringe of
/// apex-only vertices. Labels: apex `0`, part `i` occupies
/// `1 + (i-1)s ..= is`, fringe takes the rest.
pub fn tightness_family(s: usize, k: usize) -> Graph {
    assert!(s >= 1 && k >= 1, "tightness family needs s >= 1 and k >= 1");
    let core = complete_multipartite(&vec![s; k]);
    let fringe = Graph::empty(s * s - s);
    Graph::empty(1).join(&core.disjoint_union(&fringe))
}

/// Same graph together with its equitable partition: the `k` parts, then
/// the apex, then the fringe (omitted when empty).
pub fn tightness_family_with_parts(s: usize, k: usize) -> (Graph, Vec<VertexSet>) {
    let g = tightness_family(s, k);
    let mut parts = Vec::new();
    for i in 0..k {
        parts.push(VertexSet::new((1 + i * s..1 + (i + 1) * s).collect()));
    }
    parts.push(VertexSet::new(vec![0]));
    let fringe: Vec<usize> = (1 + k * s..g.n()).collect();
    if !fringe.is_empty() {
        parts.push(VertexSet::new(fringe));
    }
    (g, parts)
}

/// Generalized line graph `L(H; a_1, ..., a_n)`: the line graph of `H`
/// (edges of `H` in lexicographic order become vertices, adjacent when the
/// edges share an endpoint), plus one cocktail party block `CP(a_i)` per
/// vertex `v_i` of `H`, fully joined to the line vertices of edges at
/// `v_i`. Blocks are never joined to each other. Within block `i` the
/// labels come in `a_i` consecutive non-adjacent pairs.
pub fn generalized_line_graph(h: &Graph, counts: &[usize]) -> Result<Graph, GeneratorError> {
    if counts.len() != h.n() {
        return Err(GeneratorError::CountMismatch {
            expected: h.n(),
            found: counts.len(),
        });
    }
    let h_edges = h.edges();
    let m = h_edges.len();
    let n = m + 2 * counts.iter().sum::<usize>();
    let mut edges = Vec::new();
    for i in 0..m {
        let (a, b) = h_edges[i];
        for (j, &(c, d)) in h_edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    let mut offset = m;
    for (v, &count) in counts.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let block: Vec<usize> = (offset..offset + 2 * count).collect();
        for (bi, &p) in block.iter().enumerate() {
            for &q in &block[bi + 1..] {
                // partners 2j, 2j+1 within the block stay non-adjacent
                if !(q == p + 1 && (p - offset) % 2 == 0) {
                    edges.push((p, q));
                }
            }
        }
        for (i, &(a, b)) in h_edges.iter().enumerate() {
            if a == v || b == v {
                for &p in &block {
                    edges.push((i, p));
                }
            }
        }
        offset += 2 * count;
    }
    debug_assert_eq!(offset, n);
    Ok(Graph::from_edge_list(n, &edges).expect("line graph edges are valid"))
}

/// The generalized line graph of a star with `k` rays, carrying `k`
/// cocktail-party pairs at the center and one at each ray end. On `5k`
/// vertices; its eigenvalue -2 reaches multiplicity `2k - 1`.
pub fn glg_counterexample(k: usize) -> Graph {
    assert!(k >= 1, "the family starts at k = 1");
    let base = complete_multipartite(&[1, k]);
    let mut counts = vec![1; k + 1];
    counts[0] = k;
    generalized_line_graph(&base, &counts).expect("counts match the base order")
}

/// The house: a triangle sharing an edge with a four-cycle.
pub fn house_graph() -> Graph {
    Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (3, 4), (2, 4)])
        .expect("house edges are valid")
}

/// Seeded random cograph on `n` vertices, drawn by recursively splitting
/// the label set and choosing union or join independently at every
/// internal node.
pub fn random_cograph(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_cograph_with(n, &mut rng)
}

fn random_cograph_with(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let split = rng.gen_range(1..n);
    let left = random_cograph_with(split, rng);
    let right = random_cograph_with(n - split, rng);
    if rng.gen_bool(0.5) {
        left.join(&right)
    } else {
        left.disjoint_union(&right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(path(4).edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(cycle(4).edge_count(), 4);
        assert_eq!(cycle(2), path(2));
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(star(4).edges(), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(path(0).n(), 0);
    }

    #[test]
    fn multipartite_shapes() {
        assert_eq!(complete_multipartite(&[1, 2]), star(3));
        assert_eq!(complete_multipartite(&[2, 0, 2]), cocktail_party(2));
        // cocktail party on two parts is the four-cycle 0-2-1-3
        assert_eq!(cocktail_party(2).edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(complete_multipartite(&[1; 4]), complete(4));
        assert_eq!(complete_multipartite(&[4]), Graph::empty(4));
    }

    #[test]
    fn creation_sequences() {
        // the third vertex dominates the first two
        let p3 = CreationSequence::from_code("iid").unwrap().to_graph();
        assert_eq!(p3.edges(), vec![(0, 2), (1, 2)]);
        let k4 = CreationSequence::from_code("iddd").unwrap().to_graph();
        assert_eq!(k4, complete(4));
        // the first step is normalized, so a leading 'd' is equivalent
        assert_eq!(
            CreationSequence::from_code("did").unwrap(),
            CreationSequence::from_code("iid").unwrap()
        );
        assert_eq!(
            CreationSequence::from_code("ixd"),
            Err(GeneratorError::BadStepChar('x'))
        );
    }

    #[test]
    fn distinct_sequences_give_distinct_labeled_graphs() {
        let mut seen = std::collections::HashSet::new();
        for bits in 0..8u32 {
            let steps: Vec<Step> = (0..4)
                .map(|j| {
                    if j > 0 && bits >> (j - 1) & 1 == 1 {
                        Step::Dominating
                    } else {
                        Step::Isolated
                    }
                })
                .collect();
            let g = CreationSequence::new(steps).to_graph();
            assert!(seen.insert(g.edges()));
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn tightness_family_shape() {
        // s = 2, k = 1: apex over 2K1 plus two fringe vertices is a star
        assert_eq!(tightness_family(2, 1), star(5));
        let (g, parts) = tightness_family_with_parts(2, 2);
        assert_eq!(g.n(), 7);
        assert_eq!(g.degree(0), 6);
        assert!(g.adj(1, 3) && g.adj(2, 4) && !g.adj(1, 2) && !g.adj(5, 6));
        assert_eq!(g.degree(5), 1);
        let as_slices: Vec<&[usize]> = parts.iter().map(|p| p.as_slice()).collect();
        assert_eq!(as_slices, vec![&[1, 2][..], &[3, 4], &[0], &[5, 6]]);
        // s = 1 leaves no fringe and the graph collapses to a clique
        let (g1, parts1) = tightness_family_with_parts(1, 3);
        assert_eq!(g1, complete(4));
        assert_eq!(parts1.len(), 4);
    }

    #[test]
    fn generalized_line_graph_small_cases() {
        let k2 = complete(2);
        assert_eq!(generalized_line_graph(&k2, &[1, 0]).unwrap(), star(3));
        assert_eq!(
            generalized_line_graph(&k2, &[0]),
            Err(GeneratorError::CountMismatch { expected: 2, found: 1 })
        );
        // plain line graph of a path is a shorter path
        assert_eq!(generalized_line_graph(&path(4), &[0; 4]).unwrap(), path(3));
        // one block of two pairs: CP(2) joined to the single line vertex
        let g = generalized_line_graph(&k2, &[2, 0]).unwrap();
        assert_eq!(g.n(), 5);
        assert!(g.adj(1, 3) && g.adj(1, 4) && g.adj(2, 3) && g.adj(2, 4));
        assert!(!g.adj(1, 2) && !g.adj(3, 4));
        assert_eq!(g.degree(0), 4);
    }

    #[test]
    fn glg_counterexample_order() {
        for k in 1..=4 {
            assert_eq!(glg_counterexample(k).n(), 5 * k);
        }
        // k = 1: one line vertex joined to two blocks of one pair each
        let g = glg_counterexample(1);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn house_shape() {
        let h = house_graph();
        assert_eq!(h.edge_count(), 6);
        let mut degrees: Vec<usize> = (0..5).map(|v| h.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn random_cograph_is_seed_deterministic() {
        let a = random_cograph(9, 42);
        let b = random_cograph(9, 42);
        assert_eq!(a, b);
        assert_eq!(a.n(), 9);
        assert_ne!(random_cograph(9, 1), random_cograph(9, 2));
    }
}
