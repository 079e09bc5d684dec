//! Dimensions of the multigraded pieces of the first cotangent cohomology
//! `T¹` of a Stanley–Reisner ring, computed combinatorially.
//!
//! The general route counts connected components of the inclusion graph on
//! `N_b(link_Δ A)` that avoid `Ñ_b(link_Δ A)` (one fewer when `|b| = 1`). For
//! matroids the same numbers come from counting circuits that contain `b`;
//! both routes are exposed so they can be compared.

mod degree;
mod graph;
mod table;

use crate::complex::{check_within, FaceIndex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::matroid::require_matroid;
use crate::vertex_set::VertexSet;

pub use degree::MultiDegree;
pub use graph::InclusionGraph;
pub use table::{t1_table, T1Table};

pub(crate) use graph::unmarked_component_count;

/// `N_b(Δ) = {F ∈ Δ : F ∩ b = ∅, F ∪ b ∉ Δ}` over an indexed complex, canonical order.
pub(crate) fn n_del_in(index: &FaceIndex, b: VertexSet) -> Vec<VertexSet> {
    index
        .faces
        .iter()
        .copied()
        .filter(|f| f.is_disjoint(b) && !index.contains(*f | b))
        .collect()
}

/// Whether `F ∪ b' ∉ Δ` for some `b' ⊊ b`. Nonfaces are closed upwards, so
/// only the maximal proper subsets `b \ {v}` need testing.
pub(crate) fn is_reduced_in(index: &FaceIndex, f: VertexSet, b: VertexSet) -> bool {
    b.iter().any(|v| !index.contains(f | b.without(v)))
}

fn check_negative(delta: &SimplicialComplex, b: VertexSet) -> Result<()> {
    check_within(b, delta.n())?;
    delta.require_nonvoid()?;
    if b.is_empty() {
        return Err(Error::EmptyNegativePart);
    }
    Ok(())
}

/// `N_b(Δ)`.
pub fn n_del(delta: &SimplicialComplex, b: VertexSet) -> Result<Vec<VertexSet>> {
    check_negative(delta, b)?;
    Ok(n_del_in(&FaceIndex::new(delta), b))
}

/// `Ñ_b(Δ) = {F ∈ N_b(Δ) : F ∪ b' ∉ Δ for some b' ⊊ b}`.
pub fn n_del_red(delta: &SimplicialComplex, b: VertexSet) -> Result<Vec<VertexSet>> {
    check_negative(delta, b)?;
    let index = FaceIndex::new(delta);
    Ok(n_del_in(&index, b)
        .into_iter()
        .filter(|f| is_reduced_in(&index, *f, b))
        .collect())
}

/// Minimal nonfaces containing `b`.
pub fn circuits_containing(delta: &SimplicialComplex, b: VertexSet) -> Result<Vec<VertexSet>> {
    check_within(b, delta.n())?;
    Ok(delta
        .minimal_nonfaces()?
        .into_iter()
        .filter(|c| b.is_subset(*c))
        .collect())
}

/// The graph `G_{A,b}(Δ)`; empty when `A ∉ Δ`.
pub fn inclusion_graph(
    delta: &SimplicialComplex,
    a: VertexSet,
    b: VertexSet,
) -> Result<InclusionGraph> {
    let degree = MultiDegree::new(a, b)?;
    check_within(degree.support(), delta.n())?;
    if b.is_empty() {
        return Err(Error::EmptyNegativePart);
    }
    let link = delta.link_unchecked(a);
    Ok(InclusionGraph::build(&FaceIndex::new(&link), b))
}

/// `dim T¹_{a-b}(Δ)` for the support class `(A, b)`.
pub fn dim_t1(delta: &SimplicialComplex, degree: MultiDegree) -> Result<usize> {
    delta.require_nonvoid()?;
    check_within(degree.support(), delta.n())?;
    let (a, b) = (degree.positive(), degree.negative());
    if b.is_empty() || !delta.contains(a) {
        return Ok(0);
    }
    let link = delta.link_unchecked(a);
    if !b.is_subset(link.vertices()) {
        return Ok(0);
    }
    Ok(graph_dim(&FaceIndex::new(&link), b, delta.ground()))
}

/// Graph-based dimension of `T¹_{-b}` of an indexed complex, `b` nonempty.
pub(crate) fn graph_dim(index: &FaceIndex, b: VertexSet, ground: VertexSet) -> usize {
    let components = unmarked_component_count(index, b, ground);
    if b.len() == 1 {
        components.saturating_sub(1)
    } else {
        components
    }
}

/// `dim T¹_{-b}(Δ)` for a nonface `b`: 1 iff `|b| > 1` and `b` is a minimal
/// nonface disjoint from every other minimal nonface, that is
/// `Δ = (Δ \ b) * ∂b`.
pub fn dim_t1_nonface(delta: &SimplicialComplex, b: VertexSet) -> Result<usize> {
    check_within(b, delta.n())?;
    delta.require_nonvoid()?;
    if delta.contains(b) {
        return Err(Error::UnexpectedFace { set: b });
    }
    if b.len() < 2 {
        return Ok(0);
    }
    let circuits = delta.minimal_nonfaces()?;
    let isolated_circuit =
        circuits.contains(&b) && circuits.iter().all(|c| *c == b || c.is_disjoint(b));
    Ok(usize::from(isolated_circuit))
}

/// Circuit-count formula on a list of minimal nonfaces: 0 if some circuit
/// meets `b` without containing it, otherwise the number of circuits
/// containing `b` (less one, floored at 0, when `|b| = 1`).
pub(crate) fn formula_from_circuits(circuits: &[VertexSet], b: VertexSet) -> usize {
    if b.is_empty() {
        return 0;
    }
    let mut containing: usize = 0;
    for c in circuits {
        if b.is_subset(*c) {
            containing += 1;
        } else if !c.is_disjoint(b) {
            return 0;
        }
    }
    if b.len() == 1 {
        containing.saturating_sub(1)
    } else {
        containing
    }
}

/// The circuit formula evaluated on `link_Δ A` for any complex. It equals
/// `dim_t1` at every degree exactly when `Δ` is a matroid.
pub fn circuit_formula_dim(delta: &SimplicialComplex, degree: MultiDegree) -> Result<usize> {
    delta.require_nonvoid()?;
    check_within(degree.support(), delta.n())?;
    let (a, b) = (degree.positive(), degree.negative());
    if b.is_empty() || !delta.contains(a) {
        return Ok(0);
    }
    let circuits = delta.link_unchecked(a).minimal_nonfaces()?;
    Ok(formula_from_circuits(&circuits, b))
}

/// `dim T¹_{a-b}(M)` of a matroid by counting circuits of `link_M A`.
pub fn dim_t1_matroid_formula(matroid: &SimplicialComplex, degree: MultiDegree) -> Result<usize> {
    require_matroid(matroid)?;
    circuit_formula_dim(matroid, degree)
}

/// The two counts bounding `dim T¹_{-b}(Δ)` for a face `b`, in both the
/// original and the restated form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundTerms {
    /// `|C(link_Δ b) ∩ (Δ \ b)|`, the number of minimal elements of `N_b(Δ)`.
    pub link_circuits_in_deletion: usize,
    /// `|B(Δ \ b) \ link_Δ b|`, the number of maximal elements of `N_b(Δ)`.
    pub deletion_facets_off_link: usize,
    /// `|C(link_Δ b) \ C(Δ \ b)|`.
    pub restated_circuits: usize,
    /// `|B(Δ \ b) \ B(link_Δ b)|`.
    pub restated_facets: usize,
}

impl BoundTerms {
    pub fn value(&self, b_len: usize) -> usize {
        let bound = self
            .link_circuits_in_deletion
            .min(self.deletion_facets_off_link);
        if b_len == 1 {
            bound.saturating_sub(1)
        } else {
            bound
        }
    }
}

pub fn t1_upper_bound_terms(delta: &SimplicialComplex, b: VertexSet) -> Result<BoundTerms> {
    check_negative(delta, b)?;
    if !delta.contains(b) {
        return Err(Error::UnexpectedNonface { set: b });
    }
    // Both complexes keep the ground set [n]; the vertices of b are loops of
    // each, so their singleton circuits cancel in the restated difference.
    let link = delta.link_unchecked(b);
    let deletion = delta.deletion(b)?;
    let link_circuits = link.minimal_nonfaces()?;
    let deletion_circuits = deletion.minimal_nonfaces()?;

    let link_circuits_in_deletion = link_circuits
        .iter()
        .filter(|c| c.is_disjoint(b) && delta.contains(**c))
        .count();
    let deletion_facets_off_link = deletion
        .facets()
        .iter()
        .filter(|f| !link.contains(**f))
        .count();
    let restated_circuits = link_circuits
        .iter()
        .filter(|c| !deletion_circuits.contains(c))
        .count();
    let restated_facets = deletion
        .facets()
        .iter()
        .filter(|f| !link.facets().contains(f))
        .count();
    Ok(BoundTerms {
        link_circuits_in_deletion,
        deletion_facets_off_link,
        restated_circuits,
        restated_facets,
    })
}

/// Upper bound on `dim T¹_{-b}(Δ)` for a nonempty face `b`.
pub fn t1_upper_bound(delta: &SimplicialComplex, b: VertexSet) -> Result<usize> {
    let terms = t1_upper_bound_terms(delta, b)?;
    assert_eq!(
        (
            terms.link_circuits_in_deletion,
            terms.deletion_facets_off_link
        ),
        (terms.restated_circuits, terms.restated_facets),
        "restated bound disagrees for b = {b} on {delta:?}"
    );
    Ok(terms.value(b.len()))
}

/// Outcome of [`bijection_check`]; `detail` describes the first failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionCheck {
    pub holds: bool,
    pub detail: Option<String>,
}

/// Checks that `C ↦ C \ b` maps the circuits of `Λ = link_M A` containing `b`
/// bijectively onto `C(link_Λ b) \ C(Λ \ b)`.
pub fn bijection_check(
    matroid: &SimplicialComplex,
    a: VertexSet,
    b: VertexSet,
) -> Result<BijectionCheck> {
    MultiDegree::new(a, b)?;
    check_within(a | b, matroid.n())?;
    require_matroid(matroid)?;
    if b.is_empty() {
        return Err(Error::EmptyNegativePart);
    }
    if !matroid.contains(a) {
        return Err(Error::Precondition(format!("{a} is not independent")));
    }
    let lambda = matroid.link_unchecked(a);
    if !lambda.contains(b) {
        return Err(Error::Precondition(format!(
            "{b} is not a face of link {a}"
        )));
    }
    let circuits = lambda.minimal_nonfaces()?;
    if let Some(c) = circuits
        .iter()
        .find(|c| !c.is_disjoint(b) && !b.is_subset(**c))
    {
        return Err(Error::Precondition(format!(
            "circuit {c} meets {b} without containing it"
        )));
    }

    let domain: Vec<VertexSet> = circuits
        .iter()
        .copied()
        .filter(|c| b.is_subset(*c))
        .collect();
    let deletion_circuits = lambda.deletion(b)?.minimal_nonfaces()?;
    let codomain: Vec<VertexSet> = lambda
        .link_unchecked(b)
        .minimal_nonfaces()?
        .into_iter()
        .filter(|c| !deletion_circuits.contains(c))
        .collect();

    let mut image: Vec<VertexSet> = domain.iter().map(|c| *c - b).collect();
    image.sort_unstable();
    image.dedup();
    let failure = if image.len() != domain.len() {
        Some("map is not injective".to_string())
    } else if let Some(x) = image.iter().find(|x| !codomain.contains(x)) {
        Some(format!("image {x} is outside the codomain"))
    } else if image.len() != codomain.len() {
        let missed: Vec<String> = codomain
            .iter()
            .filter(|c| !image.contains(c))
            .map(|c| c.to_string())
            .collect();
        Some(format!("map misses {}", missed.join(" ")))
    } else {
        None
    };
    Ok(BijectionCheck {
        holds: failure.is_none(),
        detail: failure,
    })
}
