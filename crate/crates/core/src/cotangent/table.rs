use std::collections::btree_map;
use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complex::{check_within, FaceIndex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_GROUND};

use super::{graph_dim, MultiDegree};

/// All nonzero `dim T¹_{a-b}` of a complex on `[n]`, keyed by support class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct T1Table {
    n: usize,
    entries: BTreeMap<MultiDegree, usize>,
}

impl T1Table {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                n,
                limit: MAX_GROUND,
            });
        }
        Ok(T1Table {
            n,
            entries: BTreeMap::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Records a positive dimension; zero is rejected since only nonzero entries are stored.
    pub fn insert(&mut self, degree: MultiDegree, dim: usize) -> Result<Option<usize>> {
        check_within(degree.support(), self.n)?;
        if degree.negative().is_empty() {
            return Err(Error::EmptyNegativePart);
        }
        if dim == 0 {
            return Err(Error::Precondition(format!(
                "zero dimension recorded at degree {degree}"
            )));
        }
        Ok(self.entries.insert(degree, dim))
    }

    /// Dimension at `degree`, zero when absent.
    pub fn get(&self, degree: &MultiDegree) -> usize {
        self.entries.get(degree).copied().unwrap_or(0)
    }

    pub fn contains(&self, degree: &MultiDegree) -> bool {
        self.entries.contains_key(degree)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in canonical order.
    pub fn iter(&self) -> btree_map::Iter<'_, MultiDegree, usize> {
        self.entries.iter()
    }

    pub fn first(&self) -> Option<(&MultiDegree, &usize)> {
        self.entries.iter().next()
    }

    /// Same entries on a different ground size; every key must fit.
    pub fn with_ground(&self, n: usize) -> Result<Self> {
        let mut out = T1Table::new(n)?;
        for (d, dim) in self.iter() {
            out.insert(*d, *dim)?;
        }
        Ok(out)
    }

    pub(crate) fn from_sorted(n: usize, entries: BTreeMap<MultiDegree, usize>) -> Self {
        T1Table { n, entries }
    }
}

impl<'a> IntoIterator for &'a T1Table {
    type Item = (&'a MultiDegree, &'a usize);
    type IntoIter = btree_map::Iter<'a, MultiDegree, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// Computes every nonzero graded piece of `T¹(Δ)`.
///
/// Only degrees with `A ∈ Δ` and `∅ ≠ b ⊆ [link_Δ A]` can be nonzero, so those
/// are the only ones visited. Faces are processed in parallel and merged into
/// an ordered map, so the result does not depend on the thread count.
pub fn t1_table(delta: &SimplicialComplex) -> Result<T1Table> {
    delta.require_nonvoid()?;
    let ground = delta.ground();
    let faces = delta.faces();
    let chunks: Vec<Vec<(MultiDegree, usize)>> = faces
        .par_iter()
        .map(|&a| link_entries(delta, a, ground))
        .collect();
    let entries = chunks.into_iter().flatten().collect();
    Ok(T1Table::from_sorted(delta.n(), entries))
}

fn link_entries(
    delta: &SimplicialComplex,
    a: VertexSet,
    ground: VertexSet,
) -> Vec<(MultiDegree, usize)> {
    let link = delta.link_unchecked(a);
    let index = FaceIndex::new(&link);
    link.vertices()
        .subsets()
        .filter(|b| !b.is_empty())
        .filter_map(|b| {
            let dim = graph_dim(&index, b, ground);
            // link vertices never meet A
            (dim > 0).then(|| {
                (
                    MultiDegree::new(a, b).expect("disjoint by construction"),
                    dim,
                )
            })
        })
        .collect()
}
