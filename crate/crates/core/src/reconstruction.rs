//! Recovering a nondiscrete matroid from its `T¹` table.
//!
//! Everything here reads the table only. The procedure classifies loops and
//! coloops, recovers the rank and the non-basis independent sets of the
//! loop- and coloop-free core from which link slices are nonzero, and then
//! finds the bases through each independent set of corank one by solving the
//! rank-one problem on its link slice.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{check_within, SimplicialComplex};
use crate::cotangent::{t1_table, MultiDegree, T1Table};
use crate::error::{Error, Result};
use crate::matroid::is_matroid_exchange;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexRole {
    Loop,
    Coloop,
    Ordinary,
}

/// The table of `link_M F` read off the table of `M`: `(A', b) ↦ t[(F ∪ A', b)]`
/// for every key whose `A` contains `F`.
pub fn slice_link_table(table: &T1Table, f: VertexSet) -> Result<T1Table> {
    check_within(f, table.n())?;
    let mut out = T1Table::new(table.n())?;
    for (d, dim) in table {
        if f.is_subset(d.positive()) && d.negative().is_disjoint(f) {
            out.insert(MultiDegree::new(d.positive() - f, d.negative())?, *dim)?;
        }
    }
    Ok(out)
}

/// Labels each vertex of `[n]` as loop, coloop or ordinary.
///
/// A vertex is a loop or coloop iff no entry has it in `b` with `|A ∪ b| ≤ 2`.
/// Such a vertex `v` is then told apart with one probe entry `(A0, b0)`
/// avoiding `v`: a coloop copies the entry to `(A0 ∪ {v}, b0)`, a loop cannot.
pub fn classify_loops_coloops(table: &T1Table) -> Result<BTreeMap<usize, VertexRole>> {
    if table.is_empty() {
        return Err(Error::DiscreteAmbiguous);
    }
    let mut roles = BTreeMap::new();
    for v in 1..=table.n() {
        let ordinary = table
            .iter()
            .any(|(d, _)| d.negative().contains(v) && d.support().len() <= 2);
        let role = if ordinary {
            VertexRole::Ordinary
        } else {
            let (probe, dim) = table
                .iter()
                .find(|(d, _)| !d.support().contains(v))
                .ok_or_else(|| {
                    Error::NotAMatroidTable(format!("every entry involves vertex {v}"))
                })?;
            let lifted = MultiDegree::new(probe.positive().with(v), probe.negative())?;
            if table.get(&lifted) == *dim {
                VertexRole::Coloop
            } else {
                VertexRole::Loop
            }
        };
        roles.insert(v, role);
    }
    Ok(roles)
}

/// `1 + max{|F| : slice at F is nonempty}`.
///
/// The slice at `F` is nonempty exactly when some key has `F ⊆ A`, so the
/// maximum is attained at the largest positive support among the keys.
pub fn rank_from_table(table: &T1Table) -> Result<usize> {
    table
        .iter()
        .map(|(d, _)| d.positive().len() + 1)
        .max()
        .ok_or(Error::DiscreteAmbiguous)
}

/// Non-loop vertices of a rank-one coloop-free matroid `U(m,1) * U(ℓ,0)` on `ground`.
pub fn reconstruct_rank_one(table: &T1Table, ground: VertexSet) -> Result<VertexSet> {
    let bad = |why: String| Error::NotAMatroidTable(format!("rank-one slice: {why}"));
    if let Some((d, _)) = table
        .iter()
        .find(|(d, _)| !d.positive().is_empty() || !d.negative().is_subset(ground))
    {
        return Err(bad(format!("unexpected degree {d}")));
    }
    let singletons: Vec<(VertexSet, usize)> = table
        .iter()
        .filter(|(d, _)| d.negative().len() == 1)
        .map(|(d, dim)| (d.negative(), *dim))
        .collect();
    if singletons.is_empty() {
        // m = 2: the single circuit {u, v} gives the only nonzero degree.
        return match table.iter().collect::<Vec<_>>().as_slice() {
            [(d, 1)] if d.negative().len() == 2 => Ok(d.negative()),
            _ => Err(bad("expected a single pair degree of dimension one".into())),
        };
    }
    // m > 2: each of the m non-loops lies in m - 1 circuits.
    let support = singletons
        .iter()
        .fold(VertexSet::EMPTY, |acc, (b, _)| acc | *b);
    let m = support.len();
    if table.len() != m || singletons.iter().any(|(_, dim)| *dim + 2 != m) {
        return Err(bad(format!("singleton degrees inconsistent with U({m},1)")));
    }
    Ok(support)
}

/// Rebuilds the unique nondiscrete matroid whose table is `table`.
pub fn reconstruct(table: &T1Table) -> Result<SimplicialComplex> {
    if table.is_empty() {
        return Err(Error::DiscreteAmbiguous);
    }
    let n = table.n();
    let roles = classify_loops_coloops(table)?;
    let of_role = |role: VertexRole| -> VertexSet {
        roles
            .iter()
            .filter(|(_, r)| **r == role)
            .map(|(v, _)| *v)
            .collect()
    };
    let coloops = of_role(VertexRole::Coloop);
    let ordinary = of_role(VertexRole::Ordinary);
    let peeled = VertexSet::full(n) - ordinary;

    // The loop- and coloop-free core keeps exactly the degrees avoiding peeled vertices.
    let mut core = T1Table::new(n)?;
    for (d, dim) in table {
        if d.support().is_disjoint(peeled) {
            core.insert(*d, *dim)?;
        }
    }
    if core.is_empty() {
        return Err(Error::NotAMatroidTable(
            "no degree survives removing loops and coloops".into(),
        ));
    }

    let rank = rank_from_table(&core)?;
    let mut non_bases: BTreeSet<VertexSet> = BTreeSet::new();
    for (d, _) in &core {
        non_bases.extend(d.positive().subsets());
    }

    let mut bases: Vec<VertexSet> = Vec::new();
    for f in non_bases.iter().filter(|f| f.len() + 1 == rank) {
        let slice = slice_link_table(&core, *f)?;
        let extensions = reconstruct_rank_one(&slice, ordinary - *f)?;
        bases.extend(extensions.iter().map(|u| f.with(u) | coloops));
    }
    if let Some(f) = non_bases
        .iter()
        .find(|f| !bases.iter().any(|b| f.is_subset(*b)))
    {
        return Err(Error::NotAMatroidTable(format!(
            "independent set {f} lies in no recovered basis"
        )));
    }

    let matroid = SimplicialComplex::from_facets(n, bases)?;
    if !is_matroid_exchange(&matroid)? || t1_table(&matroid)? != *table {
        return Err(Error::NotAMatroidTable(
            "recovered complex does not reproduce the table".into(),
        ));
    }
    Ok(matroid)
}
