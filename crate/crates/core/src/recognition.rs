//! Matroid detection from `T¹` dimensions alone.

use rayon::prelude::*;

use crate::complex::{FaceIndex, SimplicialComplex};
use crate::cotangent::{dim_t1, formula_from_circuits, graph_dim, MultiDegree};
use crate::error::Result;
use crate::vertex_set::VertexSet;

/// A degree where the component count and the circuit formula disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Discrepancy {
    pub degree: MultiDegree,
    pub graph_dim: usize,
    pub formula_dim: usize,
}

/// First vertex `i` with `dim T¹_{-e_i} ≠ max{|C(Δ)(i)| - 1, 0}`, if any.
pub fn matroid_witness_via_t1(delta: &SimplicialComplex) -> Result<Option<usize>> {
    let circuits = delta.minimal_nonfaces()?;
    for v in 1..=delta.n() {
        let b = VertexSet::singleton(v);
        let graph = dim_t1(delta, MultiDegree::negative_only(b))?;
        let containing = circuits.iter().filter(|c| c.contains(v)).count();
        if graph != containing.saturating_sub(1) {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Matroid test using only the `n` degrees `-e_i`.
pub fn is_matroid_via_t1(delta: &SimplicialComplex) -> Result<bool> {
    Ok(matroid_witness_via_t1(delta)?.is_none())
}

/// Every degree `(A, b)` with `A ∈ Δ` and `∅ ≠ b ⊆ [link_Δ A]` at which the
/// graph dimension differs from the circuit formula on `link_Δ A`, in
/// canonical degree order. Empty exactly for matroids.
pub fn formula_discrepancies(delta: &SimplicialComplex) -> Result<Vec<Discrepancy>> {
    delta.require_nonvoid()?;
    let ground = delta.ground();
    let per_face: Result<Vec<Vec<Discrepancy>>> = delta
        .faces()
        .par_iter()
        .map(|&a| {
            let link = delta.link_unchecked(a);
            let index = FaceIndex::new(&link);
            let circuits = link.minimal_nonfaces()?;
            Ok(link
                .vertices()
                .subsets()
                .filter(|b| !b.is_empty())
                .filter_map(|b| {
                    let graph_dim = graph_dim(&index, b, ground);
                    let formula_dim = formula_from_circuits(&circuits, b);
                    (graph_dim != formula_dim).then(|| Discrepancy {
                        degree: MultiDegree::new(a, b).expect("link vertices avoid A"),
                        graph_dim,
                        formula_dim,
                    })
                })
                .collect())
        })
        .collect();
    let mut all: Vec<Discrepancy> = per_face?.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}
