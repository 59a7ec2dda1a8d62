//! Cograph recognition and cotree certificates.
//!
//! A cograph is a graph with no induced path on four vertices. Every
//! cograph has a unique canonical cotree: leaves are the vertices,
//! internal nodes alternate between union and join, every internal node
//! has at least two children, and children are ordered by least leaf
//! label. Recognition recurses on connected components and complement
//! components; a subset that is both connected and co-connected on two or
//! more vertices certifies failure and yields an induced-path witness.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CographError {
    #[error("graph contains the induced path {0:?}")]
    NotACograph((usize, usize, usize, usize)),
    #[error("the order-zero graph has no cotree")]
    EmptyGraph,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CotreeError {
    #[error("leaf label {0} appears more than once")]
    DuplicateLeaf(usize),
    #[error("leaf label {leaf} out of range for {n} leaves")]
    LeafOutOfRange { leaf: usize, n: usize },
    #[error("internal node has {0} children, needs at least two")]
    TooFewChildren(usize),
    #[error("child of a union is a union, or child of a join is a join")]
    SameKindChild,
}

/// Cotree of a cograph. Serializes as a tagged JSON object, for example
/// `{"kind":"join","children":[{"kind":"leaf","v":0},{"kind":"leaf","v":1}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Cotree {
    Leaf { v: usize },
    Union { children: Vec<Cotree> },
    Join { children: Vec<Cotree> },
}

impl Cotree {
    pub fn leaf_count(&self) -> usize {
        match self {
            Cotree::Leaf { .. } => 1,
            Cotree::Union { children } | Cotree::Join { children } => {
                children.iter().map(Cotree::leaf_count).sum()
            }
        }
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf { v } => out.push(*v),
            Cotree::Union { children } | Cotree::Join { children } => {
                for c in children {
                    c.collect_leaves(out);
                }
            }
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    /// Least leaf label; children of a canonical cotree ascend in this key.
    pub fn min_leaf(&self) -> usize {
        match self {
            Cotree::Leaf { v } => *v,
            Cotree::Union { children } | Cotree::Join { children } => {
                children.iter().map(Cotree::min_leaf).min().expect("children nonempty")
            }
        }
    }
}

/// Connected component of `subset` containing `seed`, over single-word rows.
fn mask_component(rows: &[u64], subset: u64, seed: u64) -> u64 {
    let mut comp = seed;
    let mut frontier = seed;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v] & subset;
        }
        next &= !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

/// Component of `seed` in the complement, restricted to `subset`.
fn mask_co_component(rows: &[u64], subset: u64, seed: u64) -> u64 {
    let mut comp = seed;
    let mut frontier = seed;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= !rows[v] & subset & !(1u64 << v);
        }
        next &= !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

/// Cograph test over single-word adjacency rows, restricted to `subset`.
pub(crate) fn is_cograph_masked(rows: &[u64], subset: u64) -> bool {
    if subset.count_ones() <= 1 {
        return true;
    }
    let seed = subset & subset.wrapping_neg();
    let comp = mask_component(rows, subset, seed);
    if comp != subset {
        let mut rest = subset & !comp;
        if !is_cograph_masked(rows, comp) {
            return false;
        }
        while rest != 0 {
            let s = rest & rest.wrapping_neg();
            let c = mask_component(rows, rest, s);
            if !is_cograph_masked(rows, c) {
                return false;
            }
            rest &= !c;
        }
        return true;
    }
    let cocomp = mask_co_component(rows, subset, seed);
    if cocomp == subset {
        return false;
    }
    let mut rest = subset;
    while rest != 0 {
        let s = rest & rest.wrapping_neg();
        let c = mask_co_component(rows, rest, s);
        if !is_cograph_masked(rows, c) {
            return false;
        }
        rest &= !c;
    }
    true
}

pub fn is_cograph(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    if n <= 64 {
        let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
        let subset = if n == 64 { !0 } else { (1u64 << n) - 1 };
        return is_cograph_masked(&rows, subset);
    }
    build_cotree(g).is_ok()
}

/// Least ordered tuple `(a, b, c, d)` inside `vs` inducing the path
/// `a - b - c - d`, if any.
fn find_p4_in(g: &Graph, vs: &[usize]) -> Option<(usize, usize, usize, usize)> {
    for &a in vs {
        for &b in vs {
            if b == a || !g.adj(a, b) {
                continue;
            }
            for &c in vs {
                if c == a || c == b || !g.adj(b, c) || g.adj(a, c) {
                    continue;
                }
                for &d in vs {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    if g.adj(c, d) && !g.adj(a, d) && !g.adj(b, d) {
                        return Some((a, b, c, d));
                    }
                }
            }
        }
    }
    None
}

/// Least induced path on four vertices, as an ordered tuple.
pub fn find_induced_p4(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let vs: Vec<usize> = (0..g.n()).collect();
    find_p4_in(g, &vs)
}

/// Connected components of the subgraph induced on `vs`, in original
/// labels, ordered by least member.
fn components_within(g: &Graph, vs: &[usize], complement: bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; vs.len()];
    let mut comps = Vec::new();
    for start in 0..vs.len() {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            comp.push(vs[i]);
            for (j, &w) in vs.iter().enumerate() {
                if !seen[j] && g.adj(vs[i], w) != complement {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

fn build_in(g: &Graph, vs: &[usize]) -> Result<Cotree, CographError> {
    if vs.len() == 1 {
        return Ok(Cotree::Leaf { v: vs[0] });
    }
    let comps = components_within(g, vs, false);
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| build_in(g, c))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Cotree::Union { children });
    }
    let cocomps = components_within(g, vs, true);
    if cocomps.len() > 1 {
        let children = cocomps
            .iter()
            .map(|c| build_in(g, c))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Cotree::Join { children });
    }
    let witness = find_p4_in(g, vs)
        .expect("a connected, co-connected set of two or more vertices induces a path on four");
    Err(CographError::NotACograph(witness))
}

/// Canonical cotree of `g`, or an induced-path witness.
pub fn build_cotree(g: &Graph) -> Result<Cotree, CographError> {
    if g.n() == 0 {
        return Err(CographError::EmptyGraph);
    }
    let vs: Vec<usize> = (0..g.n()).collect();
    build_in(g, &vs)
}

fn validate(t: &Cotree, parent_is_union: Option<bool>) -> Result<(), CotreeError> {
    match t {
        Cotree::Leaf { .. } => Ok(()),
        Cotree::Union { children } | Cotree::Join { children } => {
            let is_union = matches!(t, Cotree::Union { .. });
            if parent_is_union == Some(is_union) {
                return Err(CotreeError::SameKindChild);
            }
            if children.len() < 2 {
                return Err(CotreeError::TooFewChildren(children.len()));
            }
            for c in children {
                validate(c, Some(is_union))?;
            }
            Ok(())
        }
    }
}

/// Realizes a cotree as a graph. The tree must alternate kinds, give
/// every internal node at least two children, and label its leaves with
/// exactly `0..n`. Child order is irrelevant to the result.
pub fn cotree_to_graph(t: &Cotree) -> Result<Graph, CotreeError> {
    validate(t, None)?;
    let leaves = t.leaves();
    let n = leaves.len();
    let mut seen = vec![false; n];
    for &v in &leaves {
        if v >= n {
            return Err(CotreeError::LeafOutOfRange { leaf: v, n });
        }
        if seen[v] {
            return Err(CotreeError::DuplicateLeaf(v));
        }
        seen[v] = true;
    }
    let mut edges = Vec::new();
    collect_edges(t, &mut edges);
    Ok(Graph::from_edge_list(n, &edges).expect("cotree leaves are in range"))
}

fn collect_edges(t: &Cotree, edges: &mut Vec<(usize, usize)>) {
    if let Cotree::Union { children } | Cotree::Join { children } = t {
        for c in children {
            collect_edges(c, edges);
        }
        if matches!(t, Cotree::Join { .. }) {
            let sides: Vec<Vec<usize>> = children.iter().map(Cotree::leaves).collect();
            for (i, a) in sides.iter().enumerate() {
                for b in &sides[i + 1..] {
                    for &u in a {
                        for &v in b {
                            edges.push((u, v));
                        }
                    }
                }
            }
        }
    }
}
