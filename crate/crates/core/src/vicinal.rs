//! The vicinal preorder, Dilworth number, and threshold structure.
//!
//! Vertex `u` lies below `v` when `N(u) ⊆ N[v]`. Mutually comparable
//! vertices have equal open neighborhoods (duplicates) or equal closed
//! neighborhoods (coduplicates); those equivalence classes form a quotient
//! poset. The Dilworth number is the width of this preorder: the largest
//! pairwise-incomparable set, which equals the least number of chains
//! covering all vertices. Threshold graphs are exactly the graphs with
//! Dilworth number at most one, and nontrivial ones decompose into nested
//! clique and independent levels.

use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

/// Whether `N(u) ⊆ N[v]`.
pub fn vicinal_leq(g: &Graph, u: usize, v: usize) -> bool {
    let words = g.words();
    let ru = g.row(u);
    let rv = g.row(v);
    for w in 0..words {
        let mut closed = rv[w];
        if w == v / 64 {
            closed |= 1u64 << (v % 64);
        }
        if ru[w] & !closed != 0 {
            return false;
        }
    }
    true
}

/// Whether `u` and `v` are mutually comparable, which happens exactly when
/// they are duplicates or coduplicates.
pub fn vicinal_equivalent(g: &Graph, u: usize, v: usize) -> bool {
    vicinal_leq(g, u, v) && vicinal_leq(g, v, u)
}

fn partition_by_row(g: &Graph, closed: bool) -> Vec<VertexSet> {
    let mut groups: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for v in 0..g.n() {
        let mut key = g.row(v).to_vec();
        if closed {
            key[v / 64] |= 1u64 << (v % 64);
        }
        groups.entry(key).or_default().push(v);
    }
    let mut classes: Vec<VertexSet> = groups.into_values().map(VertexSet::new).collect();
    classes.sort_by_key(|c| c.min());
    classes
}

/// Partition of the vertices by equal open neighborhoods. Members of a
/// nontrivial class are pairwise non-adjacent.
pub fn duplication_classes(g: &Graph) -> Vec<VertexSet> {
    partition_by_row(g, false)
}

/// Partition of the vertices by equal closed neighborhoods. Members of a
/// nontrivial class are pairwise adjacent.
pub fn coduplication_classes(g: &Graph) -> Vec<VertexSet> {
    partition_by_row(g, true)
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassPartitions {
    pub duplication: Vec<VertexSet>,
    pub coduplication: Vec<VertexSet>,
}

/// Certified Dilworth-number computation: the number itself, a chain cover
/// of that size, and an incomparable set of the same size. The two
/// certificates pin the value from both sides.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DilworthReport {
    pub dilworth: usize,
    pub chains: Vec<VertexSet>,
    pub antichain: VertexSet,
    pub classes: ClassPartitions,
}

impl DilworthReport {
    /// Checks every certificate in the report against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        if self.chains.len() != self.dilworth {
            return Err(format!(
                "{} chains for Dilworth number {}",
                self.chains.len(),
                self.dilworth
            ));
        }
        if self.antichain.len() != self.dilworth {
            return Err(format!(
                "antichain of size {} for Dilworth number {}",
                self.antichain.len(),
                self.dilworth
            ));
        }
        let mut covered = vec![false; g.n()];
        for chain in &self.chains {
            for v in chain.iter() {
                if covered[v] {
                    return Err(format!("vertex {v} appears in two chains"));
                }
                covered[v] = true;
            }
            let members: Vec<usize> = chain.iter().collect();
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if !vicinal_leq(g, u, v) && !vicinal_leq(g, v, u) {
                        return Err(format!("chain members {u} and {v} are incomparable"));
                    }
                }
            }
        }
        if covered.iter().any(|&c| !c) {
            return Err("chains do not cover every vertex".into());
        }
        let members: Vec<usize> = self.antichain.iter().collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if vicinal_leq(g, u, v) || vicinal_leq(g, v, u) {
                    return Err(format!("antichain members {u} and {v} are comparable"));
                }
            }
        }
        Ok(())
    }
}

struct Quotient {
    /// Equivalence classes, ordered by least member.
    classes: Vec<VertexSet>,
    /// Successors in the strict quotient order, per class index.
    above: Vec<Vec<usize>>,
}

fn quotient(g: &Graph) -> Quotient {
    let n = g.n();
    let mut class_of: Vec<usize> = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..n {
        match reps.iter().position(|&r| vicinal_equivalent(g, r, v)) {
            Some(i) => class_of[v] = i,
            None => {
                class_of[v] = reps.len();
                reps.push(v);
            }
        }
    }
    let q = reps.len();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); q];
    for v in 0..n {
        members[class_of[v]].push(v);
    }
    let classes: Vec<VertexSet> = members.into_iter().map(VertexSet::new).collect();
    let mut above = vec![Vec::new(); q];
    for x in 0..q {
        for y in 0..q {
            if x != y && vicinal_leq(g, reps[x], reps[y]) {
                above[x].push(y);
            }
        }
    }
    Quotient { classes, above }
}

fn kuhn_augment(
    x: usize,
    above: &[Vec<usize>],
    match_l: &mut [Option<usize>],
    match_r: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &y in &above[x] {
        if visited[y] {
            continue;
        }
        visited[y] = true;
        let free = match match_r[y] {
            None => true,
            Some(x2) => kuhn_augment(x2, above, match_l, match_r, visited),
        };
        if free {
            match_l[x] = Some(y);
            match_r[y] = Some(x);
            return true;
        }
    }
    false
}

/// Dilworth number with chain-cover and antichain certificates.
pub fn dilworth_report(g: &Graph) -> DilworthReport {
    let Quotient { classes, above } = quotient(g);
    let q = classes.len();
    let mut match_l: Vec<Option<usize>> = vec![None; q];
    let mut match_r: Vec<Option<usize>> = vec![None; q];
    for x in 0..q {
        let mut visited = vec![false; q];
        kuhn_augment(x, &above, &mut match_l, &mut match_r, &mut visited);
    }
    // Each class unmatched on the right starts a chain; matched edges link
    // a class to its successor.
    let mut chains = Vec::new();
    for start in 0..q {
        if match_r[start].is_some() {
            continue;
        }
        let mut vertices = Vec::new();
        let mut cur = Some(start);
        while let Some(c) = cur {
            vertices.extend(classes[c].iter());
            cur = match_l[c];
        }
        chains.push(VertexSet::new(vertices));
    }
    // Alternating reachability from unmatched classes; a class with its
    // left copy reached and right copy unreached joins the antichain.
    let mut z_l = vec![false; q];
    let mut z_r = vec![false; q];
    let mut queue: Vec<usize> = (0..q).filter(|&x| match_l[x].is_none()).collect();
    for &x in &queue {
        z_l[x] = true;
    }
    while let Some(x) = queue.pop() {
        for &y in &above[x] {
            if match_l[x] == Some(y) || z_r[y] {
                continue;
            }
            z_r[y] = true;
            if let Some(x2) = match_r[y] {
                if !z_l[x2] {
                    z_l[x2] = true;
                    queue.push(x2);
                }
            }
        }
    }
    let antichain: VertexSet = (0..q)
        .filter(|&x| z_l[x] && !z_r[x])
        .map(|x| classes[x].min().expect("classes are nonempty"))
        .collect();
    debug_assert_eq!(chains.len(), antichain.len());
    DilworthReport {
        dilworth: chains.len(),
        chains,
        antichain,
        classes: ClassPartitions {
            duplication: duplication_classes(g),
            coduplication: coduplication_classes(g),
        },
    }
}

pub fn dilworth_number(g: &Graph) -> usize {
    dilworth_report(g).dilworth
}

/// Whether `g` peels to nothing by repeatedly deleting a vertex that is
/// isolated or dominating in the remainder.
pub fn is_threshold(g: &Graph) -> bool {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    while remaining > 0 {
        let pick = (0..n).find(|&v| alive[v] && (deg[v] == 0 || deg[v] == remaining - 1));
        let Some(v) = pick else {
            return false;
        };
        alive[v] = false;
        remaining -= 1;
        for u in 0..n {
            if alive[u] && g.adj(u, v) {
                deg[u] -= 1;
            }
        }
    }
    true
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ThresholdStructureError {
    #[error("graph is not a threshold graph")]
    NotThreshold,
    #[error("graph has no edges, so it has no levels")]
    NoEdges,
    #[error("vertex {vertex} is isolated")]
    IsolatedVertex { vertex: usize },
    #[error("no independent vertices remain below clique level {level}")]
    MissingIndependentLevel { level: usize },
    #[error("level peeling failed: {0}")]
    StructureViolation(String),
}

/// Nested level decomposition of a threshold graph. The clique levels
/// `V_1, ..., V_t` together induce a clique, the independent levels
/// `U_1, ..., U_t` an independent set, and every vertex of `U_i` is
/// adjacent to exactly `V_1 ∪ ... ∪ V_i`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct ThresholdStructure {
    pub clique_levels: Vec<VertexSet>,
    pub independent_levels: Vec<VertexSet>,
}

impl ThresholdStructure {
    pub fn t(&self) -> usize {
        self.clique_levels.len()
    }

    /// Rebuilds the graph the structure describes.
    pub fn reconstruct(&self) -> Graph {
        let max = self
            .clique_levels
            .iter()
            .chain(self.independent_levels.iter())
            .filter_map(|s| s.as_slice().last().copied())
            .max();
        let n = max.map_or(0, |m| m + 1);
        let clique: Vec<usize> = self
            .clique_levels
            .iter()
            .flat_map(|s| s.iter())
            .collect();
        let mut edges = Vec::new();
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                edges.push((u, v));
            }
        }
        for (i, level) in self.independent_levels.iter().enumerate() {
            for u in level.iter() {
                for part in &self.clique_levels[..=i] {
                    for v in part.iter() {
                        edges.push((u, v));
                    }
                }
            }
        }
        Graph::from_edge_list(n, &edges).expect("structure labels are in range")
    }
}

/// Peels the level decomposition off a threshold graph. Level `i` removes
/// the vertices dominating the remainder, then the vertices isolated in
/// what is left. Fails when the graph is not threshold, has no edges, has
/// an isolated vertex, or runs out of independent vertices before the
/// clique side is exhausted (as in a complete graph, where the boundary
/// between the two sides is ambiguous).
pub fn threshold_structure(g: &Graph) -> Result<ThresholdStructure, ThresholdStructureError> {
    if !is_threshold(g) {
        return Err(ThresholdStructureError::NotThreshold);
    }
    if g.edge_count() == 0 {
        return Err(ThresholdStructureError::NoEdges);
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(ThresholdStructureError::IsolatedVertex { vertex: v });
    }
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut clique_levels = Vec::new();
    let mut independent_levels = Vec::new();
    let mut level = 0;
    let remove = |vs: &[usize], alive: &mut [bool], deg: &mut [usize], remaining: &mut usize| {
        for &v in vs {
            alive[v] = false;
            *remaining -= 1;
        }
        for &v in vs {
            for u in 0..n {
                if alive[u] && g.adj(u, v) {
                    deg[u] -= 1;
                }
            }
        }
    };
    while remaining > 0 {
        level += 1;
        let doms: Vec<usize> = (0..n)
            .filter(|&v| alive[v] && deg[v] == remaining - 1)
            .collect();
        if doms.is_empty() {
            return Err(ThresholdStructureError::StructureViolation(format!(
                "no dominating vertex at level {level}"
            )));
        }
        remove(&doms, &mut alive, &mut deg, &mut remaining);
        let isos: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] == 0).collect();
        if isos.is_empty() {
            return Err(ThresholdStructureError::MissingIndependentLevel { level });
        }
        remove(&isos, &mut alive, &mut deg, &mut remaining);
        clique_levels.push(VertexSet::new(doms));
        independent_levels.push(VertexSet::new(isos));
    }
    Ok(ThresholdStructure {
        clique_levels,
        independent_levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        cocktail_party, complete, cycle, path, random_cograph, star, CreationSequence,
    };

    #[test]
    fn preorder_on_a_path() {
        let g = path(4);
        assert!(vicinal_leq(&g, 0, 1) && vicinal_leq(&g, 0, 2));
        assert!(vicinal_leq(&g, 3, 1) && vicinal_leq(&g, 3, 2));
        assert!(!vicinal_leq(&g, 1, 0) && !vicinal_leq(&g, 1, 2));
        assert!(!vicinal_leq(&g, 0, 3) && !vicinal_leq(&g, 2, 3));
        assert!(vicinal_leq(&g, 2, 2));
    }

    #[test]
    fn preorder_is_reflexive_and_transitive() {
        let mut graphs = vec![path(6), cycle(6), star(5), complete(5).complement()];
        for seed in 0..10 {
            graphs.push(random_cograph(8, seed));
            graphs.push(random_cograph(8, seed).complement());
        }
        for g in &graphs {
            let n = g.n();
            for u in 0..n {
                assert!(vicinal_leq(g, u, u));
                for v in 0..n {
                    for w in 0..n {
                        if vicinal_leq(g, u, v) && vicinal_leq(g, v, w) {
                            assert!(vicinal_leq(g, u, w), "transitivity at {u},{v},{w}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn twin_classes() {
        let c4 = cocktail_party(2);
        let dup = duplication_classes(&c4);
        let dup: Vec<&[usize]> = dup.iter().map(|s| s.as_slice()).collect();
        assert_eq!(dup, vec![&[0, 1][..], &[2, 3]]);
        assert_eq!(coduplication_classes(&c4).len(), 4);
        let k4 = complete(4);
        assert_eq!(coduplication_classes(&k4).len(), 1);
        assert_eq!(duplication_classes(&k4).len(), 4);
        let s = star(4);
        let dup = duplication_classes(&s);
        let dup: Vec<&[usize]> = dup.iter().map(|s| s.as_slice()).collect();
        assert_eq!(dup, vec![&[0][..], &[1, 2, 3]]);
    }

    #[test]
    fn dilworth_numbers_of_named_graphs() {
        assert_eq!(dilworth_number(&Graph::empty(0)), 0);
        assert_eq!(dilworth_number(&Graph::empty(5)), 1);
        assert_eq!(dilworth_number(&complete(6)), 1);
        assert_eq!(dilworth_number(&star(5)), 1);
        assert_eq!(dilworth_number(&path(4)), 2);
        assert_eq!(dilworth_number(&cycle(5)), 5);
        assert_eq!(dilworth_number(&cocktail_party(3)), 3);
    }

    #[test]
    fn dilworth_reports_validate() {
        let mut graphs = vec![path(4), cycle(5), cycle(6), complete(5), Graph::empty(4)];
        for seed in 0..20 {
            graphs.push(random_cograph(9, seed));
        }
        for g in &graphs {
            let report = dilworth_report(g);
            report.validate(g).unwrap();
            assert_eq!(report.dilworth, dilworth_number(&g.complement()));
        }
    }

    #[test]
    fn threshold_recognition() {
        assert!(is_threshold(&Graph::empty(0)));
        assert!(is_threshold(&Graph::empty(4)));
        assert!(is_threshold(&complete(5)));
        assert!(is_threshold(&star(6)));
        assert!(!is_threshold(&path(4)));
        assert!(!is_threshold(&cycle(4)));
        assert!(!is_threshold(&cocktail_party(2)));
        for seed in 0..50 {
            let g = CreationSequence::random(7, seed).to_graph();
            assert!(is_threshold(&g));
            assert_eq!(dilworth_number(&g), 1);
        }
    }

    #[test]
    fn threshold_iff_dilworth_at_most_one() {
        let mut graphs = vec![path(4), cycle(4), star(4), cocktail_party(2)];
        for seed in 0..30 {
            graphs.push(random_cograph(7, seed));
        }
        for g in &graphs {
            assert_eq!(is_threshold(g), dilworth_number(g) <= 1, "{g:?}");
        }
    }

    #[test]
    fn structure_of_a_star() {
        let s = threshold_structure(&star(5)).unwrap();
        assert_eq!(s.t(), 1);
        assert_eq!(s.clique_levels[0].as_slice(), &[0]);
        assert_eq!(s.independent_levels[0].as_slice(), &[1, 2, 3, 4]);
        assert_eq!(s.reconstruct(), star(5));
    }

    #[test]
    fn structure_of_two_levels() {
        let g = CreationSequence::from_code("iidiid").unwrap().to_graph();
        let s = threshold_structure(&g).unwrap();
        assert_eq!(s.t(), 2);
        assert_eq!(s.clique_levels[0].as_slice(), &[5]);
        assert_eq!(s.independent_levels[0].as_slice(), &[3, 4]);
        assert_eq!(s.clique_levels[1].as_slice(), &[2]);
        assert_eq!(s.independent_levels[1].as_slice(), &[0, 1]);
        assert_eq!(s.reconstruct(), g);
    }

    #[test]
    fn structure_cells_are_twin_classes() {
        for seed in 0..40 {
            // force two leading isolated steps and a trailing dominating
            // step so the decomposition is unambiguous
            let mut code = String::from("ii");
            let mut bits = seed;
            for _ in 0..4 {
                code.push(if bits & 1 == 1 { 'd' } else { 'i' });
                bits >>= 1;
            }
            code.push('d');
            let g = CreationSequence::from_code(&code).unwrap().to_graph();
            let s = threshold_structure(&g).unwrap();
            assert_eq!(s.reconstruct(), g);
            let dup = duplication_classes(&g);
            let codup = coduplication_classes(&g);
            for level in &s.independent_levels {
                assert!(dup.contains(level), "{level:?} not a duplication class");
            }
            for level in &s.clique_levels {
                assert!(codup.contains(level), "{level:?} not a coduplication class");
            }
        }
    }

    #[test]
    fn structure_degenerate_shapes() {
        assert_eq!(
            threshold_structure(&path(4)),
            Err(ThresholdStructureError::NotThreshold)
        );
        assert_eq!(
            threshold_structure(&Graph::empty(3)),
            Err(ThresholdStructureError::NoEdges)
        );
        assert_eq!(
            threshold_structure(&Graph::empty(0)),
            Err(ThresholdStructureError::NoEdges)
        );
        let k2_k1 = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(
            threshold_structure(&k2_k1),
            Err(ThresholdStructureError::IsolatedVertex { vertex: 2 })
        );
        assert_eq!(
            threshold_structure(&complete(4)),
            Err(ThresholdStructureError::MissingIndependentLevel { level: 1 })
        );
        assert_eq!(
            threshold_structure(&complete(2)),
            Err(ThresholdStructureError::MissingIndependentLevel { level: 1 })
        );
        let idid = CreationSequence::from_code("idid").unwrap().to_graph();
        assert_eq!(
            threshold_structure(&idid),
            Err(ThresholdStructureError::MissingIndependentLevel { level: 2 })
        );
    }
}
