//! Claim checks with uniform machine-readable verdicts.
//!
//! Every check returns a `VerificationReport` carrying a stable claim
//! identifier, a boolean verdict, supporting details, and, for failed
//! checks, a witness that can be re-verified independently. Checks never
//! approximate: every number in a report comes from exact integer
//! arithmetic.

use crate::codec::to_graph6;
use crate::cograph::{find_induced_p4, is_cograph};
use crate::generators::{
    complete_multipartite, generalized_line_graph, tightness_family_with_parts, GeneratorError,
};
use crate::graph::Graph;
use crate::linalg::{
    integer_eigenvalue_multiplicity, multiplicity_profile, quotient_matrix, IntMatrix,
};
use crate::vicinal::{
    coduplication_classes, dilworth_number, dilworth_report, duplication_classes, is_threshold,
    threshold_structure,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

pub const DILWORTH_BOUND_ID: &str = "dilworth-bound";
pub const THRESHOLD_SIMPLE_ID: &str = "threshold-simple";
pub const DRP_ID: &str = "royle-drp";
pub const CDRP_ID: &str = "royle-cdrp";
pub const GLG_MULT_ID: &str = "glg-mult";
pub const TIGHTNESS_ID: &str = "tightness";
pub const DISTINCT_MULTIPARTITE_ID: &str = "distinct-multipartite";
pub const RANK_PROPERTY_SWEEP_ID: &str = "theorem-4-3";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("graph is not a threshold graph")]
    NotThreshold,
    #[error("graph is not a cograph: induced path {0:?}")]
    NotCograph((usize, usize, usize, usize)),
    #[error("corpus graph {index} is not a cograph: induced path {path:?}")]
    NonCographInCorpus {
        index: usize,
        path: (usize, usize, usize, usize),
    },
    #[error("base graph has no edges")]
    NoEdges,
    #[error("every block count is zero")]
    AllZeroCounts,
    #[error("base graph is disconnected")]
    DisconnectedBase,
    #[error("null basis has {found} vectors, kernel has dimension {expected}")]
    BasisDeficit { expected: usize, found: usize },
    #[error("null basis construction only supports shifts 0 and -1, got {0}")]
    UnsupportedShift(i64),
    #[error("{0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
}

/// Outcome of one claim check. `details` always carries the measured
/// quantities; `witness` is present exactly when `holds` is false and the
/// failure has a finite certificate.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub theorem_id: String,
    pub holds: bool,
    pub details: Value,
    pub witness: Option<Value>,
}

fn graph_witness(g: &Graph) -> Value {
    match to_graph6(g) {
        Ok(text) => json!({ "graph6": text }),
        Err(_) => json!({ "n": g.n(), "edges": g.edges() }),
    }
}

/// Checks that no eigenvalue other than 0 and -1 beats the Dilworth
/// number in multiplicity. The claim is proved for cographs; other graphs
/// are still measured and the report records which case applies.
pub fn check_dilworth_bound(g: &Graph) -> VerificationReport {
    let profile = multiplicity_profile(g);
    let report = dilworth_report(g);
    let cograph = is_cograph(g);
    let holds = profile.max_other_mult <= report.dilworth;
    let witness = if holds {
        None
    } else {
        let part = profile
            .square_free_parts
            .iter()
            .find(|p| p.has_other_root() && p.multiplicity == profile.max_other_mult)
            .expect("a failing profile names its part");
        let mut w = graph_witness(g);
        w["factor"] = serde_json::to_value(&part.factor).expect("polynomial serializes");
        w["multiplicity"] = json!(part.multiplicity);
        Some(w)
    };
    VerificationReport {
        theorem_id: DILWORTH_BOUND_ID.to_string(),
        holds,
        details: json!({
            "n": g.n(),
            "isCograph": cograph,
            "dilworth": report.dilworth,
            "maxOtherMult": profile.max_other_mult,
        }),
        witness,
    }
}

/// Checks that a threshold graph has no repeated eigenvalue besides 0
/// and -1.
pub fn check_threshold_simple(g: &Graph) -> Result<VerificationReport, HarnessError> {
    if !is_threshold(g) {
        return Err(HarnessError::NotThreshold);
    }
    let profile = multiplicity_profile(g);
    let levels = threshold_structure(g).ok().map(|s| s.t());
    let holds = profile.max_other_mult <= 1;
    let witness = (!holds).then(|| graph_witness(g));
    Ok(VerificationReport {
        theorem_id: THRESHOLD_SIMPLE_ID.to_string(),
        holds,
        details: json!({
            "n": g.n(),
            "mult0": profile.mult0,
            "multMinus1": profile.mult_minus1,
            "maxOtherMult": profile.max_other_mult,
            "levels": levels,
        }),
        witness,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankProperty {
    /// Has a duplicate pair, an isolated vertex, or a nonsingular
    /// adjacency matrix.
    Drp,
    /// Has a coduplicate pair or a nonsingular adjacency-plus-identity.
    Cdrp,
}

impl RankProperty {
    pub fn id(self) -> &'static str {
        match self {
            RankProperty::Drp => DRP_ID,
            RankProperty::Cdrp => CDRP_ID,
        }
    }

    /// Short lowercase name used in reports and command-line flags.
    pub fn label(self) -> &'static str {
        match self {
            RankProperty::Drp => "drp",
            RankProperty::Cdrp => "cdrp",
        }
    }
}

/// Whether `g` satisfies the requested rank property.
pub fn rank_property_holds(g: &Graph, property: RankProperty) -> bool {
    let n = g.n();
    match property {
        RankProperty::Drp => {
            duplication_classes(g).iter().any(|c| c.len() >= 2)
                || g.has_isolated_vertex()
                || IntMatrix::adjacency(g).rank() == n
        }
        RankProperty::Cdrp => {
            coduplication_classes(g).iter().any(|c| c.len() >= 2)
                || IntMatrix::adjacency(g).plus_diagonal(1).rank() == n
        }
    }
}

/// Evaluates a rank property on one graph. The property is proved for
/// every cograph; the report notes whether the input is one.
pub fn check_rank_property(g: &Graph, property: RankProperty) -> VerificationReport {
    let n = g.n();
    let cograph = is_cograph(g);
    let (holds, details) = match property {
        RankProperty::Drp => {
            let has_dup = duplication_classes(g).iter().any(|c| c.len() >= 2);
            let has_iso = g.has_isolated_vertex();
            let rank = IntMatrix::adjacency(g).rank();
            (
                has_dup || has_iso || rank == n,
                json!({
                    "n": n,
                    "isCograph": cograph,
                    "hasDuplication": has_dup,
                    "hasIsolatedVertex": has_iso,
                    "rank": rank,
                }),
            )
        }
        RankProperty::Cdrp => {
            let has_codup = coduplication_classes(g).iter().any(|c| c.len() >= 2);
            let rank = IntMatrix::adjacency(g).plus_diagonal(1).rank();
            (
                has_codup || rank == n,
                json!({
                    "n": n,
                    "isCograph": cograph,
                    "hasCoduplication": has_codup,
                    "rank": rank,
                }),
            )
        }
    };
    let witness = (!holds).then(|| graph_witness(g));
    VerificationReport {
        theorem_id: property.id().to_string(),
        holds,
        details,
        witness,
    }
}

/// Checks a rank property across a corpus that must consist of cographs.
pub fn check_corpus_rank_properties(
    graphs: &[Graph],
    property: RankProperty,
) -> Result<VerificationReport, HarnessError> {
    for (index, g) in graphs.iter().enumerate() {
        if let Some(path) = find_induced_p4(g) {
            return Err(HarnessError::NonCographInCorpus { index, path });
        }
    }
    let failure = graphs
        .iter()
        .enumerate()
        .find(|(_, g)| !rank_property_holds(g, property));
    let witness = failure.map(|(index, g)| {
        let mut w = graph_witness(g);
        w["index"] = json!(index);
        w
    });
    Ok(VerificationReport {
        theorem_id: property.id().to_string(),
        holds: witness.is_none(),
        details: json!({ "checked": graphs.len() }),
        witness,
    })
}

/// Basis for the kernel of `A - shift*I` of a cograph, built from twin
/// classes: one difference vector per extra class member, plus, for shift
/// zero, the indicator of the least isolated vertex. Entries are -1, 0,
/// or 1 and every vector touches at most two coordinates.
pub fn weight_two_null_basis(g: &Graph, shift: i64) -> Result<Vec<Vec<i64>>, HarnessError> {
    if shift != 0 && shift != -1 {
        return Err(HarnessError::UnsupportedShift(shift));
    }
    if let Some(path) = find_induced_p4(g) {
        return Err(HarnessError::NotCograph(path));
    }
    let n = g.n();
    let classes = if shift == 0 {
        duplication_classes(g)
    } else {
        coduplication_classes(g)
    };
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for class in &classes {
        let members: Vec<usize> = class.iter().collect();
        let w0 = members[0];
        for &wj in &members[1..] {
            let mut v = vec![0i64; n];
            v[w0] = 1;
            v[wj] = -1;
            basis.push(v);
        }
        if shift == 0 && g.degree(w0) == 0 {
            let mut v = vec![0i64; n];
            v[w0] = 1;
            basis.push(v);
        }
    }
    let a = IntMatrix::adjacency(g);
    let nullity = n - a.plus_diagonal(-shift).rank();
    if basis.len() != nullity {
        return Err(HarnessError::BasisDeficit {
            expected: nullity,
            found: basis.len(),
        });
    }
    if cfg!(debug_assertions) {
        for v in &basis {
            let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            let av = a.mul_vec(&big);
            assert!(
                av.iter()
                    .zip(&big)
                    .all(|(lhs, x)| *lhs == x * BigInt::from(shift)),
                "constructed vector is outside the kernel"
            );
        }
    }
    Ok(basis)
}

/// Checks the multiplicity of -2 in a generalized line graph against the
/// count `m - n + sum(a)` predicted from the base graph. The base must be
/// connected with at least one edge and at least one block.
pub fn check_glg_multiplicity(
    base: &Graph,
    counts: &[usize],
) -> Result<VerificationReport, HarnessError> {
    if base.edge_count() == 0 {
        return Err(HarnessError::NoEdges);
    }
    if counts.iter().all(|&c| c == 0) {
        return Err(HarnessError::AllZeroCounts);
    }
    if !base.is_connected() {
        return Err(HarnessError::DisconnectedBase);
    }
    let glg = generalized_line_graph(base, counts)?;
    let m = base.edge_count() as i64;
    let nh = base.n() as i64;
    let total: i64 = counts.iter().map(|&c| c as i64).sum();
    let predicted = m - nh + total;
    let actual = integer_eigenvalue_multiplicity(&glg, -2) as i64;
    let holds = predicted == actual;
    let witness = (!holds).then(|| graph_witness(&glg));
    Ok(VerificationReport {
        theorem_id: GLG_MULT_ID.to_string(),
        holds,
        details: json!({
            "baseVertices": base.n(),
            "baseEdges": base.edge_count(),
            "countSum": counts.iter().sum::<usize>(),
            "order": glg.n(),
            "predicted": predicted,
            "actual": actual,
        }),
        witness,
    })
}

/// Checks that the apex-over-multipartite family attains the Dilworth
/// bound: Dilworth number `k`, eigenvalue `-s` of multiplicity exactly
/// `k`, and no other repeated eigenvalue beyond that.
pub fn check_tightness(s: usize, k: usize) -> Result<VerificationReport, HarnessError> {
    if s < 2 {
        return Err(HarnessError::InvalidParameter(format!(
            "tightness family needs s >= 2, got {s}"
        )));
    }
    if k < 1 {
        return Err(HarnessError::InvalidParameter(format!(
            "tightness family needs k >= 1, got {k}"
        )));
    }
    let (g, parts) = tightness_family_with_parts(s, k);
    let quotient = quotient_matrix(&g, &parts).expect("construction partition is equitable");
    let quotient_rank = quotient.plus_diagonal(s as i64).rank();
    let cograph = is_cograph(&g);
    let dilworth = dilworth_number(&g);
    let mult = integer_eigenvalue_multiplicity(&g, -(s as i64));
    let profile = multiplicity_profile(&g);
    let holds = cograph && dilworth == k && mult == k && profile.max_other_mult == k;
    let witness = (!holds).then(|| graph_witness(&g));
    Ok(VerificationReport {
        theorem_id: TIGHTNESS_ID.to_string(),
        holds,
        details: json!({
            "s": s,
            "k": k,
            "n": g.n(),
            "isCograph": cograph,
            "dilworth": dilworth,
            "multAtMinusS": mult,
            "maxOtherMult": profile.max_other_mult,
            "quotientShiftedRank": quotient_rank,
        }),
        witness,
    })
}

/// Checks that a complete multipartite graph with pairwise distinct part
/// sizes, all at least two, has every eigenvalue besides 0 and -1 simple.
pub fn check_distinct_multipartite(parts: &[usize]) -> Result<VerificationReport, HarnessError> {
    for (i, &p) in parts.iter().enumerate() {
        if p < 2 {
            return Err(HarnessError::InvalidParameter(format!(
                "part sizes must be at least 2, part {i} is {p}"
            )));
        }
        if parts[..i].contains(&p) {
            return Err(HarnessError::InvalidParameter(format!(
                "part sizes must be pairwise distinct, {p} repeats"
            )));
        }
    }
    let g = complete_multipartite(parts);
    let profile = multiplicity_profile(&g);
    let holds = profile.max_other_mult <= 1;
    let witness = (!holds).then(|| graph_witness(&g));
    Ok(VerificationReport {
        theorem_id: DISTINCT_MULTIPARTITE_ID.to_string(),
        holds,
        details: json!({
            "parts": parts,
            "n": g.n(),
            "mult0": profile.mult0,
            "multMinus1": profile.mult_minus1,
            "maxOtherMult": profile.max_other_mult,
        }),
        witness,
    })
}

/// Re-runs the check named in a report against the graph stored in its
/// witness. Returns the fresh verdict, or `None` when the report has no
/// decodable graph witness or its claim takes no single-graph input.
pub fn reverify_witness(report: &VerificationReport) -> Option<bool> {
    let text = report.witness.as_ref()?.get("graph6")?.as_str()?;
    let g = crate::codec::from_graph6(text).ok()?;
    let verdict = match report.theorem_id.as_str() {
        DILWORTH_BOUND_ID => check_dilworth_bound(&g).holds,
        THRESHOLD_SIMPLE_ID => check_threshold_simple(&g).ok()?.holds,
        DRP_ID => rank_property_holds(&g, RankProperty::Drp),
        CDRP_ID => rank_property_holds(&g, RankProperty::Cdrp),
        _ => return None,
    };
    Some(verdict)
}
