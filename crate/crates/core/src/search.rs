//! Induced-subgraph testing, exhaustive small-graph enumeration, and
//! counterexample search over rank properties.
//!
//! Graphs on up to ten vertices are indexed by an upper-triangle edge
//! bitmask whose ascending order matches graph6 lexicographic order, so
//! "first counterexample" is reproducible across runs and machines.

use crate::codec::to_graph6;
use crate::cograph::is_cograph_masked;
use crate::generators::{cycle, path};
use crate::graph::Graph;
use crate::harness::{
    check_rank_property, rank_property_holds, RankProperty, VerificationReport,
    RANK_PROPERTY_SWEEP_ID,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::thread;
use thiserror::Error;

/// Largest vertex count for mask-based enumeration: 45 pair bits.
const PLAIN_LIMIT: usize = 10;
/// Largest vertex count when isomorphism reduction is requested.
const ISO_LIMIT: usize = 8;
/// Largest vertex count for the sampled search mode (graph6 ceiling).
const SAMPLED_LIMIT: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("enumeration handles at most {limit} vertices here, got {n}")]
    TooManyVertices { n: usize, limit: usize },
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Vertex pairs (i, j), i < j, in upper-triangle column order:
/// (0,1), (0,2), (1,2), (0,3), ...
fn pair_table(n: usize) -> Vec<(usize, usize)> {
    let mut table = Vec::with_capacity(pair_count(n));
    for j in 1..n {
        for i in 0..j {
            table.push((i, j));
        }
    }
    table
}

/// Edge bitmask of a graph on at most ten vertices. The first pair
/// (0,1) sits in the most significant of the n(n-1)/2 low bits, so
/// ascending masks agree with graph6 lexicographic order.
pub fn graph_mask(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= PLAIN_LIMIT, "masks cover at most {PLAIN_LIMIT} vertices");
    let nbits = pair_count(n);
    let mut mask = 0u64;
    for (k, &(i, j)) in pair_table(n).iter().enumerate() {
        if g.adj(i, j) {
            mask |= 1 << (nbits - 1 - k);
        }
    }
    mask
}

/// Inverse of `graph_mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    assert!(n <= PLAIN_LIMIT, "masks cover at most {PLAIN_LIMIT} vertices");
    let nbits = pair_count(n);
    assert!(mask >> nbits == 0, "mask has bits beyond the pair range");
    let mut edges = Vec::new();
    for (k, &(i, j)) in pair_table(n).iter().enumerate() {
        if mask >> (nbits - 1 - k) & 1 == 1 {
            edges.push((i, j));
        }
    }
    Graph::from_edge_list(n, &edges).expect("table pairs are simple edges")
}

fn graph_from_rows(n: usize, rows: &[u64]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        let mut higher = rows[i] >> (i + 1) << (i + 1);
        while higher != 0 {
            let j = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            edges.push((i, j));
        }
    }
    Graph::from_edge_list(n, &edges).expect("bitset rows are loop-free")
}

/// Stream of all labeled graphs on `n` vertices in ascending bitmask
/// order, optionally restricted to one representative per isomorphism
/// class (the least bitmask in its class).
pub struct GraphEnumeration {
    n: usize,
    iso_reduce: bool,
    next: u64,
    end: u64,
}

pub fn enumerate_graphs(n: usize, iso_reduce: bool) -> Result<GraphEnumeration, SearchError> {
    enumerate_graphs_from(n, iso_reduce, 0)
}

/// Restarts the stream at the given bitmask; graphs below it are skipped.
pub fn enumerate_graphs_from(
    n: usize,
    iso_reduce: bool,
    start: u64,
) -> Result<GraphEnumeration, SearchError> {
    let limit = if iso_reduce { ISO_LIMIT } else { PLAIN_LIMIT };
    if n > limit {
        return Err(SearchError::TooManyVertices { n, limit });
    }
    Ok(GraphEnumeration {
        n,
        iso_reduce,
        next: start,
        end: 1u64 << pair_count(n),
    })
}

impl Iterator for GraphEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let g = graph_from_mask(self.n, mask);
            if !self.iso_reduce || canonical_mask(&g) == mask {
                return Some(g);
            }
        }
        None
    }
}

/// Visits every edge bitmask in `start..end` for graphs on `n`
/// vertices. The open-neighborhood bitsets are maintained incrementally
/// (a mask increment flips two bits on average). Returns the first mask
/// whose visitor call came back true.
pub fn scan_graphs<F>(n: usize, start: u64, end: u64, mut visit: F) -> Option<u64>
where
    F: FnMut(u64, &[u64]) -> bool,
{
    assert!(n <= PLAIN_LIMIT, "masks cover at most {PLAIN_LIMIT} vertices");
    let nbits = pair_count(n);
    assert!(start <= end && end <= 1u64 << nbits, "mask range out of bounds");
    let pairs = pair_table(n);
    let mut rows = vec![0u64; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if start >> (nbits - 1 - k) & 1 == 1 {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
    }
    let mut mask = start;
    while mask < end {
        if visit(mask, &rows) {
            return Some(mask);
        }
        if mask + 1 == end {
            break;
        }
        let mut changed = mask ^ (mask + 1);
        while changed != 0 {
            let b = changed.trailing_zeros() as usize;
            changed &= changed - 1;
            let (i, j) = pairs[nbits - 1 - b];
            rows[i] ^= 1 << j;
            rows[j] ^= 1 << i;
        }
        mask += 1;
    }
    None
}

/// Visits every labeled cograph on `n` vertices in ascending bitmask
/// order. The cograph filter runs on the incremental bitsets; a `Graph`
/// is materialized only for graphs that pass it.
pub fn scan_cographs<F>(n: usize, mut visit: F)
where
    F: FnMut(u64, &[u64], &Graph),
{
    assert!(n <= PLAIN_LIMIT, "masks cover at most {PLAIN_LIMIT} vertices");
    let full = (1u64 << n) - 1;
    scan_graphs(n, 0, 1u64 << pair_count(n), |mask, rows| {
        if is_cograph_masked(rows, full) {
            let g = graph_from_rows(n, rows);
            visit(mask, rows, &g);
        }
        false
    });
}

/// Rank of A + diagonal·I over the integers, with A the adjacency
/// matrix encoded by open-neighborhood bitsets. Fraction-free
/// elimination in 64-bit arithmetic: every intermediate entry is a minor
/// of the input, and for n <= 12 with entries in {-1, 0, 1, 2} Hadamard's
/// inequality keeps all products far inside the i64 range.
pub fn rank_from_rows(rows: &[u64], n: usize, diagonal: i64) -> usize {
    assert!(n <= 12, "64-bit elimination is sized for at most 12 vertices");
    assert!(diagonal.abs() <= 1, "64-bit elimination is sized for unit shifts");
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] = (rows[i] >> j & 1) as i64;
        }
        m[i * n + i] += diagonal;
    }
    let mut prev = 1i64;
    let mut row = 0;
    for col in 0..n {
        if row == n {
            break;
        }
        let Some(p) = (row..n).find(|&i| m[i * n + col] != 0) else {
            continue;
        };
        if p != row {
            for j in 0..n {
                m.swap(p * n + j, row * n + j);
            }
        }
        for i in (row + 1)..n {
            for j in (col + 1)..n {
                let num = m[row * n + col] * m[i * n + j] - m[i * n + col] * m[row * n + j];
                debug_assert_eq!(num % prev, 0, "inexact elimination step");
                m[i * n + j] = num / prev;
            }
            m[i * n + col] = 0;
        }
        prev = m[row * n + col];
        row += 1;
    }
    row
}

/// Lexicographically least injective map from the vertices of `h` onto
/// an induced copy of `h` in `g`, preserving adjacency and
/// non-adjacency, or `None`. Backtracking over images in ascending
/// order with degree pruning.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let gn = g.n();
    let gdeg: Vec<usize> = (0..gn).map(|v| g.degree(v)).collect();
    embed(h, gn, &gdeg, |u, v| g.adj(u, v))
}

fn contains_induced_rows(rows: &[u64], n: usize, h: &Graph) -> Option<Vec<usize>> {
    let gdeg: Vec<usize> = (0..n).map(|v| rows[v].count_ones() as usize).collect();
    embed(h, n, &gdeg, |u, v| rows[u] >> v & 1 == 1)
}

fn embed<F>(h: &Graph, gn: usize, gdeg: &[usize], adj: F) -> Option<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    let hn = h.n();
    if hn > gn {
        return None;
    }
    let hdeg: Vec<usize> = (0..hn).map(|v| h.degree(v)).collect();
    let mut map: Vec<usize> = Vec::with_capacity(hn);
    let mut used = vec![false; gn];
    let mut candidate = 0usize;
    loop {
        let level = map.len();
        if level == hn {
            return Some(map);
        }
        let mut placed = false;
        while candidate < gn {
            let v = candidate;
            candidate += 1;
            if used[v] || gdeg[v] < hdeg[level] {
                continue;
            }
            if map
                .iter()
                .enumerate()
                .all(|(u, &image)| h.adj(u, level) == adj(image, v))
            {
                used[v] = true;
                map.push(v);
                candidate = 0;
                placed = true;
                break;
            }
        }
        if !placed {
            let Some(last) = map.pop() else {
                return None;
            };
            used[last] = false;
            candidate = last + 1;
        }
    }
}

/// Least edge bitmask over all relabelings: a brute-force canonical
/// form for graphs on up to ten vertices. Branch and bound over partial
/// relabelings; at each level, candidates twinned with an already-tried
/// candidate are skipped, since swapping twins fixes the bitmask.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= PLAIN_LIMIT, "masks cover at most {PLAIN_LIMIT} vertices");
    if n < 2 {
        return 0;
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
    let class_id = |key: &dyn Fn(usize) -> u64| -> Vec<usize> {
        (0..n)
            .map(|v| (0..=v).find(|&u| key(u) == key(v)).expect("v matches itself"))
            .collect()
    };
    let dup_id = class_id(&|v| rows[v]);
    let codup_id = class_id(&|v| rows[v] | 1 << v);
    let mut search = CanonicalSearch {
        n,
        nbits: pair_count(n),
        rows: &rows,
        dup_id: &dup_id,
        codup_id: &codup_id,
        best: graph_mask(g),
    };
    let mut perm = Vec::with_capacity(n);
    search.place(0, 0, &mut perm, &mut 0u64);
    search.best
}

struct CanonicalSearch<'a> {
    n: usize,
    nbits: usize,
    rows: &'a [u64],
    dup_id: &'a [usize],
    codup_id: &'a [usize],
    best: u64,
}

impl CanonicalSearch<'_> {
    fn place(&mut self, level: usize, prefix: u64, perm: &mut Vec<usize>, used: &mut u64) {
        if level == self.n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        let base = pair_count(level);
        let shift = self.nbits - base - level;
        let mut tried_dup = 0u64;
        let mut tried_codup = 0u64;
        for v in 0..self.n {
            if *used >> v & 1 == 1 {
                continue;
            }
            if tried_dup >> self.dup_id[v] & 1 == 1 || tried_codup >> self.codup_id[v] & 1 == 1 {
                continue;
            }
            tried_dup |= 1 << self.dup_id[v];
            tried_codup |= 1 << self.codup_id[v];
            let mut next = prefix;
            for (i, &image) in perm.iter().enumerate() {
                if self.rows[v] >> image & 1 == 1 {
                    next |= 1 << (self.nbits - 1 - (base + i));
                }
            }
            if next >> shift > self.best >> shift {
                continue;
            }
            perm.push(v);
            *used |= 1 << v;
            self.place(level + 1, next, perm, used);
            perm.pop();
            *used &= !(1 << v);
        }
    }
}

/// Brute-force isomorphism test via canonical bitmasks; both graphs
/// must have at most ten vertices.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && canonical_mask(g) == canonical_mask(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Every graph up to the vertex bound, in bitmask order.
    Exhaustive,
    /// Seeded uniform edge-probability-1/2 samples at exactly the
    /// vertex bound.
    Sampled { count: u64, seed: u64 },
}

/// A counterexample hunt: graphs avoiding `forbidden` as an induced
/// subgraph that fail the rank property.
#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub forbidden: Graph,
    pub property: RankProperty,
    pub max_n: usize,
    pub mode: SearchMode,
}

impl SearchSpec {
    pub fn validate(&self) -> Result<(), SearchError> {
        let limit = match self.mode {
            SearchMode::Exhaustive => PLAIN_LIMIT,
            SearchMode::Sampled { .. } => SAMPLED_LIMIT,
        };
        if self.max_n > limit {
            return Err(SearchError::TooManyVertices {
                n: self.max_n,
                limit,
            });
        }
        Ok(())
    }
}

fn property_holds_rows(rows: &[u64], n: usize, property: RankProperty) -> bool {
    match property {
        RankProperty::Drp => {
            rows.iter().any(|&r| r == 0)
                || has_equal_rows(rows, n, 0)
                || rank_from_rows(rows, n, 0) == n
        }
        RankProperty::Cdrp => {
            has_equal_rows(rows, n, 1) || rank_from_rows(rows, n, 1) == n
        }
    }
}

fn has_equal_rows(rows: &[u64], n: usize, self_bit: u64) -> bool {
    (0..n).any(|i| {
        let ri = rows[i] | self_bit << i;
        (i + 1..n).any(|j| ri == rows[j] | self_bit << j)
    })
}

/// Runs the hunt described by `spec` and returns the first qualifying
/// graph together with its re-verified failure report. "First" means
/// least vertex count, then least bitmask (exhaustive) or least sample
/// index (sampled); the answer does not depend on the job count.
pub fn find_counterexample(
    spec: &SearchSpec,
) -> Result<Option<(Graph, VerificationReport)>, SearchError> {
    find_counterexample_jobs(spec, 1)
}

/// Same hunt with the search range split across `jobs` worker threads.
pub fn find_counterexample_jobs(
    spec: &SearchSpec,
    jobs: usize,
) -> Result<Option<(Graph, VerificationReport)>, SearchError> {
    spec.validate()?;
    let jobs = jobs.max(1);
    let found = match spec.mode {
        SearchMode::Exhaustive => find_exhaustive(spec, jobs),
        SearchMode::Sampled { count, seed } => find_sampled(spec, count, seed, jobs),
    };
    Ok(found.map(|g| {
        let report = check_rank_property(&g, spec.property);
        assert!(!report.holds, "search hit must fail re-verification");
        (g, report)
    }))
}

fn qualifies(rows: &[u64], n: usize, spec: &SearchSpec) -> bool {
    contains_induced_rows(rows, n, &spec.forbidden).is_none()
        && !property_holds_rows(rows, n, spec.property)
}

fn find_exhaustive(spec: &SearchSpec, jobs: usize) -> Option<Graph> {
    for n in 0..=spec.max_n {
        let end = 1u64 << pair_count(n);
        let hit = if jobs == 1 || end < 4096 {
            scan_graphs(n, 0, end, |_, rows| qualifies(rows, n, spec))
        } else {
            let chunk = end.div_ceil(jobs as u64);
            thread::scope(|scope| {
                let workers: Vec<_> = (0..jobs as u64)
                    .map(|j| {
                        let lo = (j * chunk).min(end);
                        let hi = ((j + 1) * chunk).min(end);
                        scope.spawn(move || scan_graphs(n, lo, hi, |_, rows| qualifies(rows, n, spec)))
                    })
                    .collect();
                workers
                    .into_iter()
                    .filter_map(|w| w.join().expect("scan worker panicked"))
                    .min()
            })
        };
        if let Some(mask) = hit {
            return Some(graph_from_mask(n, mask));
        }
    }
    None
}

/// The graph drawn for sample `index` of a seeded G(n, 1/2) stream.
/// Independent of how samples are batched across jobs.
pub fn sample_graph(n: usize, seed: u64, index: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(0.5) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("sampled pairs are simple edges")
}

fn find_sampled(spec: &SearchSpec, count: u64, seed: u64, jobs: usize) -> Option<Graph> {
    let n = spec.max_n;
    let run = |lo: u64, hi: u64| -> Option<(u64, Graph)> {
        for index in lo..hi {
            let g = sample_graph(n, seed, index);
            if contains_induced(&g, &spec.forbidden).is_none()
                && !rank_property_holds(&g, spec.property)
            {
                return Some((index, g));
            }
        }
        None
    };
    let hit = if jobs == 1 || count < 16 {
        run(0, count)
    } else {
        let chunk = count.div_ceil(jobs as u64);
        thread::scope(|scope| {
            let workers: Vec<_> = (0..jobs as u64)
                .map(|j| {
                    let lo = (j * chunk).min(count);
                    let hi = ((j + 1) * chunk).min(count);
                    scope.spawn(move || run(lo, hi))
                })
                .collect();
            workers
                .into_iter()
                .filter_map(|w| w.join().expect("sample worker panicked"))
                .min_by_key(|(index, _)| *index)
        })
    };
    hit.map(|(_, g)| g)
}

/// Sweeps every labeled graph on 1..=maxN vertices and confronts the
/// rank-property violators with nineteen candidate forbidden subgraphs:
/// all graphs on at most four vertices plus the five-cycle.
///
/// Candidates that embed in the four-vertex path must leave no violator
/// uncovered. Any violator avoiding such a candidate would in
/// particular avoid the path itself, i.e. be a cograph, so that side
/// reduces to finding no cograph violator. Every remaining candidate
/// must have, for each property, some violator avoiding it; the report
/// lists one witness per (candidate, property) pair.
pub fn verify_theorem_4_3(max_n: usize) -> VerificationReport {
    assert!(max_n <= ISO_LIMIT, "sweep is sized for at most {ISO_LIMIT} vertices");
    let p4 = path(4);
    let mut candidates: Vec<Graph> = (1..=4)
        .flat_map(|k| enumerate_graphs(k, true).expect("size is guarded"))
        .collect();
    candidates.push(cycle(5));
    let forcing: Vec<bool> = candidates
        .iter()
        .map(|h| contains_induced(&p4, h).is_some())
        .collect();
    let properties = [RankProperty::Drp, RankProperty::Cdrp];
    let mut slots: Vec<Vec<Option<Graph>>> = vec![vec![None; candidates.len()]; 2];
    let mut cograph_violator: Option<(Graph, RankProperty)> = None;
    for n in 1..=max_n {
        let full = (1u64 << n) - 1;
        scan_graphs(n, 0, 1u64 << pair_count(n), |_, rows| {
            let verdicts = properties.map(|p| property_holds_rows(rows, n, p));
            if verdicts.iter().all(|&ok| ok) {
                return false;
            }
            let cograph = is_cograph_masked(rows, full);
            for (pi, property) in properties.into_iter().enumerate() {
                if verdicts[pi] {
                    continue;
                }
                if cograph {
                    if cograph_violator.is_none() {
                        cograph_violator = Some((graph_from_rows(n, rows), property));
                    }
                    continue;
                }
                for (ci, h) in candidates.iter().enumerate() {
                    if forcing[ci] || slots[pi][ci].is_some() {
                        continue;
                    }
                    if contains_induced_rows(rows, n, h).is_none() {
                        slots[pi][ci] = Some(graph_from_rows(n, rows));
                    }
                }
            }
            false
        });
    }
    let g6 = |g: &Graph| to_graph6(g).expect("sweep graphs fit graph6");
    let mut witnesses = Vec::new();
    let mut missing = Vec::new();
    for (pi, property) in properties.into_iter().enumerate() {
        for (ci, h) in candidates.iter().enumerate() {
            if forcing[ci] {
                continue;
            }
            match &slots[pi][ci] {
                Some(w) => witnesses.push(json!({
                    "forbidden": g6(h),
                    "property": property.label(),
                    "graph6": g6(w),
                    "n": w.n(),
                })),
                None => missing.push(json!({
                    "forbidden": g6(h),
                    "property": property.label(),
                })),
            }
        }
    }
    let holds = cograph_violator.is_none() && missing.is_empty();
    let witness = match &cograph_violator {
        Some((g, property)) => Some(json!({
            "graph6": g6(g),
            "property": property.label(),
            "cograph": true,
        })),
        None if !missing.is_empty() => Some(json!({ "missing": missing.clone() })),
        None => None,
    };
    VerificationReport {
        theorem_id: RANK_PROPERTY_SWEEP_ID.to_string(),
        holds,
        details: json!({
            "maxN": max_n,
            "forcing": candidates
                .iter()
                .zip(&forcing)
                .filter(|&(_, &f)| f)
                .map(|(h, _)| g6(h))
                .collect::<Vec<_>>(),
            "witnesses": witnesses,
            "missing": missing,
            "cographViolator": cograph_violator.as_ref().map(|(g, _)| g6(g)),
        }),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, house_graph, star};
    use crate::linalg::IntMatrix;

    // oracle: induced-subgraph presence by trying every injection,
    // subsets first, then orderings of each subset
    fn contains_induced_oracle(g: &Graph, h: &Graph) -> bool {
        let (gn, hn) = (g.n(), h.n());
        if hn > gn {
            return false;
        }
        for subset in 0u64..1 << gn {
            if subset.count_ones() as usize != hn {
                continue;
            }
            let verts: Vec<usize> = (0..gn).filter(|&v| subset >> v & 1 == 1).collect();
            for perm in permutations(&verts) {
                let ok = (0..hn).all(|a| {
                    (a + 1..hn).all(|b| h.adj(a, b) == g.adj(perm[a], perm[b]))
                });
                if ok {
                    return true;
                }
            }
        }
        false
    }

    fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
        if xs.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (i, &x) in xs.iter().enumerate() {
            let mut rest = xs.to_vec();
            rest.remove(i);
            for mut tail in permutations(&rest) {
                tail.insert(0, x);
                out.push(tail);
            }
        }
        out
    }

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edge_list(g.n(), &edges).unwrap()
    }

    // oracle: least mask over every relabeling, no pruning
    fn canonical_mask_oracle(g: &Graph) -> u64 {
        let verts: Vec<usize> = (0..g.n()).collect();
        permutations(&verts)
            .iter()
            .map(|p| graph_mask(&relabel(g, p)))
            .min()
            .unwrap_or(0)
    }

    #[test]
    fn mask_round_trip_and_order() {
        assert_eq!(graph_mask(&path(4)), 0b101001);
        for mask in 0..64u64 {
            assert_eq!(graph_mask(&graph_from_mask(4, mask)), mask);
        }
        let codes: Vec<String> = (0..64u64)
            .map(|m| to_graph6(&graph_from_mask(4, m)).unwrap())
            .collect();
        let mut sorted = codes.clone();
        sorted.sort();
        assert_eq!(codes, sorted, "ascending masks follow graph6 order");
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(0, false).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_graphs(4, true).unwrap().count(), 11);
        assert!(matches!(
            enumerate_graphs(11, false),
            Err(SearchError::TooManyVertices { limit: 10, .. })
        ));
        assert!(matches!(
            enumerate_graphs(9, true),
            Err(SearchError::TooManyVertices { limit: 8, .. })
        ));
    }

    #[test]
    fn enumeration_restarts() {
        let all: Vec<Graph> = enumerate_graphs(4, false).unwrap().collect();
        let tail: Vec<Graph> = enumerate_graphs_from(4, false, 40).unwrap().collect();
        assert_eq!(tail.len(), 24);
        assert_eq!(&all[40..], &tail[..]);
        let reps: Vec<Graph> = enumerate_graphs(4, true).unwrap().collect();
        let rep_tail: Vec<Graph> =
            enumerate_graphs_from(4, true, graph_mask(&reps[5])).unwrap().collect();
        assert_eq!(&reps[5..], &rep_tail[..]);
    }

    #[test]
    fn canonical_mask_matches_oracle() {
        for n in [4usize, 5] {
            let mut classes = std::collections::HashSet::new();
            for mask in 0..1u64 << pair_count(n) {
                let g = graph_from_mask(n, mask);
                let canon = canonical_mask(&g);
                assert_eq!(canon, canonical_mask_oracle(&g));
                classes.insert(canon);
            }
            let expected = if n == 4 { 11 } else { 34 };
            assert_eq!(classes.len(), expected);
        }
    }

    #[test]
    fn isomorphism_spot_checks() {
        let p4_relabeled = relabel(&path(4), &[2, 0, 3, 1]);
        assert!(is_isomorphic(&path(4), &p4_relabeled));
        assert!(!is_isomorphic(&path(4), &star(4)));
        assert!(!is_isomorphic(&path(4), &path(3)));
        assert!(is_isomorphic(&Graph::empty(0), &Graph::empty(0)));
    }

    #[test]
    fn scan_agrees_with_enumeration() {
        let mut seen = Vec::new();
        scan_graphs(4, 0, 64, |mask, rows| {
            let g = graph_from_rows(4, rows);
            assert_eq!(graph_mask(&g), mask, "incremental rows drifted");
            seen.push(g);
            false
        });
        let listed: Vec<Graph> = enumerate_graphs(4, false).unwrap().collect();
        assert_eq!(seen, listed);
        // early stop returns the first hit
        let hit = scan_graphs(4, 0, 64, |mask, _| mask == 17);
        assert_eq!(hit, Some(17));
        // a restarted range rebuilds the same rows
        scan_graphs(5, 777, 800, |mask, rows| {
            assert_eq!(graph_mask(&graph_from_rows(5, rows)), mask);
            false
        });
    }

    #[test]
    fn cograph_scan_matches_containment_oracle() {
        let p4 = path(4);
        for n in 0..=5usize {
            let mut scanned = 0usize;
            scan_cographs(n, |_, _, g| {
                assert!(crate::cograph::is_cograph(g));
                scanned += 1;
            });
            let free = enumerate_graphs(n, false)
                .unwrap()
                .filter(|g| contains_induced(g, &p4).is_none())
                .count();
            assert_eq!(scanned, free);
        }
    }

    #[test]
    fn fast_rank_matches_exact_rank() {
        for n in 0..=4usize {
            for mask in 0..1u64 << pair_count(n) {
                let g = graph_from_mask(n, mask);
                let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
                let a = IntMatrix::adjacency(&g);
                assert_eq!(rank_from_rows(&rows, n, 0), a.rank());
                assert_eq!(rank_from_rows(&rows, n, 1), a.plus_diagonal(1).rank());
            }
        }
        for index in 0..60u64 {
            let g = sample_graph(8, 11, index);
            let rows: Vec<u64> = (0..8).map(|v| g.row64(v)).collect();
            let a = IntMatrix::adjacency(&g);
            assert_eq!(rank_from_rows(&rows, 8, 0), a.rank());
            assert_eq!(rank_from_rows(&rows, 8, 1), a.plus_diagonal(1).rank());
            assert_eq!(rank_from_rows(&rows, 8, -1), a.plus_diagonal(-1).rank());
        }
    }

    #[test]
    fn fast_property_matches_harness() {
        for n in 0..=5usize {
            for mask in 0..1u64 << pair_count(n) {
                let g = graph_from_mask(n, mask);
                let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
                for p in [RankProperty::Drp, RankProperty::Cdrp] {
                    assert_eq!(
                        property_holds_rows(&rows, n, p),
                        rank_property_holds(&g, p),
                        "mask {mask} on {n} vertices, {}",
                        p.label()
                    );
                }
            }
        }
    }

    #[test]
    fn induced_containment_examples() {
        assert_eq!(contains_induced(&path(5), &path(4)), Some(vec![0, 1, 2, 3]));
        assert_eq!(contains_induced(&cycle(5), &complete(3)), None);
        assert_eq!(contains_induced(&house_graph(), &path(4)), Some(vec![0, 1, 3, 4]));
        assert_eq!(contains_induced(&complete(3), &Graph::empty(0)), Some(vec![]));
        assert_eq!(contains_induced(&complete(3), &complete(4)), None);
        assert_eq!(contains_induced(&star(5), &path(3)), Some(vec![1, 0, 2]));
    }

    #[test]
    fn induced_containment_matches_oracle() {
        let hs: Vec<Graph> = (1..=3)
            .flat_map(|k| enumerate_graphs(k, true).unwrap())
            .collect();
        for mask in 0..64u64 {
            let g = graph_from_mask(4, mask);
            for h in &hs {
                assert_eq!(contains_induced(&g, h).is_some(), contains_induced_oracle(&g, h));
            }
        }
        let h4: Vec<Graph> = enumerate_graphs(4, true).unwrap().collect();
        for index in 0..25u64 {
            let g = sample_graph(6, 5, index);
            for h in &h4 {
                assert_eq!(contains_induced(&g, h).is_some(), contains_induced_oracle(&g, h));
            }
        }
    }

    #[test]
    fn freeness_is_complement_symmetric() {
        let h4: Vec<Graph> = enumerate_graphs(4, true).unwrap().collect();
        for index in 0..25u64 {
            let g = sample_graph(6, 9, index);
            for h in &h4 {
                assert_eq!(
                    contains_induced(&g, h).is_none(),
                    contains_induced(&g.complement(), &h.complement()).is_none()
                );
            }
        }
    }

    #[test]
    fn finds_pinned_witnesses() {
        let k3_spec = SearchSpec {
            forbidden: complete(3),
            property: RankProperty::Drp,
            max_n: 5,
            mode: SearchMode::Exhaustive,
        };
        let (g, report) = find_counterexample(&k3_spec).unwrap().expect("witness exists");
        assert!(is_isomorphic(&g, &path(5)));
        assert!(!report.holds);
        assert_eq!(report.theorem_id, "royle-drp");

        let co_k3_spec = SearchSpec {
            forbidden: Graph::empty(3),
            ..k3_spec.clone()
        };
        let (g, _) = find_counterexample(&co_k3_spec).unwrap().expect("witness exists");
        assert!(is_isomorphic(&g, &house_graph()));

        let p4_spec = SearchSpec {
            forbidden: path(4),
            property: RankProperty::Drp,
            max_n: 6,
            mode: SearchMode::Exhaustive,
        };
        assert!(find_counterexample(&p4_spec).unwrap().is_none());
    }

    #[test]
    fn job_splitting_does_not_change_the_witness() {
        let spec = SearchSpec {
            forbidden: complete(3),
            property: RankProperty::Cdrp,
            max_n: 6,
            mode: SearchMode::Exhaustive,
        };
        let base = find_counterexample(&spec).unwrap().map(|(g, _)| g);
        for jobs in [2usize, 3, 7] {
            let split = find_counterexample_jobs(&spec, jobs).unwrap().map(|(g, _)| g);
            assert_eq!(base, split);
        }
    }

    #[test]
    fn sampled_mode_is_deterministic() {
        let spec = SearchSpec {
            forbidden: complete(5),
            property: RankProperty::Drp,
            max_n: 6,
            mode: SearchMode::Sampled { count: 400, seed: 41 },
        };
        let first = find_counterexample(&spec).unwrap().map(|(g, _)| g);
        let again = find_counterexample_jobs(&spec, 4).unwrap().map(|(g, _)| g);
        assert_eq!(first, again);
        if let Some(g) = &first {
            assert!(!rank_property_holds(g, RankProperty::Drp));
            assert!(contains_induced(g, &complete(5)).is_none());
        }
        let too_big = SearchSpec {
            max_n: 63,
            ..spec
        };
        assert!(matches!(
            find_counterexample(&too_big),
            Err(SearchError::TooManyVertices { limit: 62, .. })
        ));
    }

    #[test]
    fn drp_witnesses_have_no_light_null_vector() {
        // a singular adjacency matrix without zero or repeated columns
        // has only null vectors touching three or more coordinates
        for forbidden in [complete(3), Graph::empty(3)] {
            let spec = SearchSpec {
                forbidden,
                property: RankProperty::Drp,
                max_n: 5,
                mode: SearchMode::Exhaustive,
            };
            let (g, _) = find_counterexample(&spec).unwrap().expect("witness exists");
            let n = g.n();
            assert!(IntMatrix::adjacency(&g).rank() < n);
            for v in 0..n {
                assert!(g.degree(v) > 0);
            }
            for u in 0..n {
                for v in u + 1..n {
                    assert_ne!(
                        g.neighborhood(u, false).unwrap(),
                        g.neighborhood(v, false).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn sweep_finds_every_witness_at_six_vertices() {
        let report = verify_theorem_4_3(6);
        assert!(report.holds, "{:?}", report.details);
        assert!(report.witness.is_none());
        let details = &report.details;
        assert_eq!(details["maxN"], 6);
        assert_eq!(details["witnesses"].as_array().unwrap().len(), 26);
        assert_eq!(details["missing"].as_array().unwrap().len(), 0);
        let forcing: Vec<Graph> = details["forcing"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| crate::codec::from_graph6(v.as_str().unwrap()).unwrap())
            .collect();
        assert_eq!(forcing.len(), 6);
        assert!(forcing.iter().any(|h| is_isomorphic(h, &path(4))));
        assert!(forcing.iter().any(|h| is_isomorphic(h, &path(3))));
        assert!(forcing.iter().any(|h| is_isomorphic(h, &complete(2))));
        assert!(forcing.iter().any(|h| is_isomorphic(h, &Graph::empty(1))));
        // every listed witness decodes and indeed fails its property
        for w in details["witnesses"].as_array().unwrap() {
            let g = crate::codec::from_graph6(w["graph6"].as_str().unwrap()).unwrap();
            let property = match w["property"].as_str().unwrap() {
                "drp" => RankProperty::Drp,
                _ => RankProperty::Cdrp,
            };
            assert!(!rank_property_holds(&g, property));
            let h = crate::codec::from_graph6(w["forbidden"].as_str().unwrap()).unwrap();
            assert!(contains_induced(&g, &h).is_none());
        }
    }

    #[test]
    fn sweep_reports_gaps_below_the_witness_scale() {
        // no graph on at most four vertices fails either property, so
        // every non-forcing slot must come back unfilled
        let report = verify_theorem_4_3(4);
        assert!(!report.holds);
        assert_eq!(report.details["witnesses"].as_array().unwrap().len(), 0);
        assert_eq!(report.details["missing"].as_array().unwrap().len(), 26);
        assert!(report.witness.is_some());
    }
}
