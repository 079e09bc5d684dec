//! Abstract simplicial complexes on an explicit ground set `{1, ..., n}`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{self, k_subsets, VertexSet, MAX_GROUND};

/// Ground sizes above this are rejected by operations that sweep all of `2^[n]`.
pub const SWEEP_LIMIT: usize = 30;

/// A simplicial complex given by its facets.
///
/// The ground set `{1, ..., n}` is part of the value: vertices that lie in no
/// face are loops and only exist through `n`. An empty facet list is the void
/// complex (no faces at all), which only arises as the link of a nonface; the
/// complex `{∅}` is stored as the single facet `∅`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from any generating family; non-maximal and duplicate
    /// sets are dropped and an empty family yields `{∅}`.
    pub fn from_facets<I: IntoIterator<Item = VertexSet>>(n: usize, sets: I) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                n,
                limit: MAX_GROUND,
            });
        }
        let sets: Vec<VertexSet> = sets.into_iter().collect();
        for s in &sets {
            check_within(*s, n)?;
        }
        if sets.is_empty() {
            return Ok(SimplicialComplex {
                n,
                facets: vec![VertexSet::EMPTY],
            });
        }
        Ok(SimplicialComplex {
            n,
            facets: vertex_set::maximal_elements(&sets),
        })
    }

    /// The complex of all sets containing none of `nonfaces`.
    ///
    /// Any generating family of the Stanley–Reisner ideal is accepted, not only
    /// the minimal one. Passing `∅` as a nonface yields the void complex.
    pub fn from_minimal_nonfaces<I: IntoIterator<Item = VertexSet>>(
        n: usize,
        nonfaces: I,
    ) -> Result<Self> {
        if n > SWEEP_LIMIT {
            return Err(Error::GroundTooLarge {
                n,
                limit: SWEEP_LIMIT,
            });
        }
        let nonfaces: Vec<VertexSet> = nonfaces.into_iter().collect();
        for c in &nonfaces {
            check_within(*c, n)?;
        }
        let faces: Vec<VertexSet> = VertexSet::full(n)
            .subsets()
            .filter(|s| !nonfaces.iter().any(|c| c.is_subset(*s)))
            .collect();
        Ok(SimplicialComplex {
            n,
            facets: vertex_set::maximal_elements(&faces),
        })
    }

    /// The complex with no faces.
    pub fn void(n: usize) -> Self {
        assert!(n <= MAX_GROUND);
        SimplicialComplex {
            n,
            facets: Vec::new(),
        }
    }

    /// The full simplex `2^[n]`.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::full(n)],
        }
    }

    /// `∂F`: all proper subsets of `F`, on the ground set `[n]`.
    pub fn boundary_simplex(n: usize, f: VertexSet) -> Result<Self> {
        check_within(f, n)?;
        if f.is_empty() {
            return Err(Error::EmptySimplex);
        }
        SimplicialComplex::from_facets(n, f.iter().map(|v| f.without(v)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Facets in canonical order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Unchecked membership test.
    #[inline]
    pub fn contains(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    pub fn is_face(&self, f: VertexSet) -> Result<bool> {
        check_within(f, self.n)?;
        Ok(self.contains(f))
    }

    /// Vertices lying in some face.
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc | *f)
    }

    /// All faces in canonical order.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().collect();
        faces.sort_unstable();
        faces
    }

    pub fn dimension(&self) -> Option<usize> {
        self.facets
            .iter()
            .map(|f| f.len())
            .max()
            .map(|d| d.saturating_sub(1))
    }

    /// Minimal nonfaces, by an ascending-cardinality sweep of `2^[n]` that
    /// skips any set containing an already found minimal nonface.
    pub fn minimal_nonfaces(&self) -> Result<Vec<VertexSet>> {
        self.require_nonvoid()?;
        if self.n > SWEEP_LIMIT {
            return Err(Error::GroundTooLarge {
                n: self.n,
                limit: SWEEP_LIMIT,
            });
        }
        let mut found: Vec<VertexSet> = Vec::new();
        for k in 0..=self.n {
            let before = found.len();
            for s in k_subsets(self.n, k) {
                if found[..before].iter().any(|c| c.is_subset(s)) {
                    continue;
                }
                if !self.contains(s) {
                    found.push(s);
                }
            }
        }
        found.sort_unstable();
        Ok(found)
    }

    /// `max{|F| : F ⊆ A, F ∈ Δ}`.
    pub fn rank_of(&self, a: VertexSet) -> Result<usize> {
        check_within(a, self.n)?;
        self.require_nonvoid()?;
        Ok(self
            .facets
            .iter()
            .map(|f| (*f & a).len())
            .max()
            .unwrap_or(0))
    }

    pub fn rank(&self) -> Result<usize> {
        self.rank_of(self.ground())
    }

    /// `{A : A ∩ F = ∅, A ∪ F ∈ Δ}` on the same ground set; void when `F ∉ Δ`.
    pub fn link(&self, f: VertexSet) -> Result<Self> {
        check_within(f, self.n)?;
        Ok(self.link_unchecked(f))
    }

    pub(crate) fn link_unchecked(&self, f: VertexSet) -> Self {
        // Facets containing F form an antichain, so their differences do too.
        let mut facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|g| f.is_subset(**g))
            .map(|g| *g - f)
            .collect();
        facets.sort_unstable();
        SimplicialComplex { n: self.n, facets }
    }

    /// `Δ|_W = {F ∈ Δ : F ⊆ W}`.
    pub fn restrict(&self, w: VertexSet) -> Result<Self> {
        check_within(w, self.n)?;
        if self.is_void() {
            return Ok(self.clone());
        }
        let traces: Vec<VertexSet> = self.facets.iter().map(|f| *f & w).collect();
        Ok(SimplicialComplex {
            n: self.n,
            facets: vertex_set::maximal_elements(&traces),
        })
    }

    /// `Δ \ W`, the restriction to the complement of `W`.
    pub fn deletion(&self, w: VertexSet) -> Result<Self> {
        check_within(w, self.n)?;
        self.restrict(self.ground() - w)
    }

    /// `Δ * Γ`, with `Γ` relabeled onto `{n_Δ + 1, ..., n_Δ + n_Γ}`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                n,
                limit: MAX_GROUND,
            });
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                facets.push(*f | g.shifted(self.n));
            }
        }
        facets.sort_unstable();
        Ok(SimplicialComplex { n, facets })
    }

    /// Join of two complexes on the same ground set whose vertex supports are disjoint.
    pub fn join_within(&self, other: &SimplicialComplex) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::GroundMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let overlap = self.vertices() & other.vertices();
        if !overlap.is_empty() {
            return Err(Error::Precondition(format!(
                "join operands share vertices {overlap}"
            )));
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                facets.push(*f | *g);
            }
        }
        facets.sort_unstable();
        Ok(SimplicialComplex { n: self.n, facets })
    }

    /// Loops (vertices in no face) and coloops (vertices in every facet).
    pub fn loops_and_coloops(&self) -> Result<(VertexSet, VertexSet)> {
        self.require_nonvoid()?;
        let loops = self.ground() - self.vertices();
        let coloops = self.facets.iter().fold(self.ground(), |acc, f| acc & *f);
        Ok((loops, coloops))
    }

    /// Same complex on a larger ground set; the new vertices are loops.
    pub fn with_ground(&self, n: usize) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                n,
                limit: MAX_GROUND,
            });
        }
        if let Some(v) = self.vertices().max_vertex() {
            if v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(SimplicialComplex {
            n,
            facets: self.facets.clone(),
        })
    }

    /// Relabels vertices by `v -> perm[v - 1]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut facets: Vec<VertexSet> = self.facets.iter().map(|f| f.permute(perm)).collect();
        facets.sort_unstable();
        SimplicialComplex { n: self.n, facets }
    }

    pub(crate) fn require_nonvoid(&self) -> Result<()> {
        if self.is_void() {
            Err(Error::VoidComplex)
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets=[", self.n)?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{facet}")?;
        }
        f.write_str("])")
    }
}

pub(crate) fn check_within(s: VertexSet, n: usize) -> Result<()> {
    match s.max_vertex() {
        Some(v) if v > n => Err(Error::VertexOutOfRange { vertex: v, n }),
        _ => Ok(()),
    }
}

/// Faces of a complex with constant-time membership.
#[derive(Clone, Debug)]
pub(crate) struct FaceIndex {
    pub faces: Vec<VertexSet>,
    members: HashSet<VertexSet>,
}

impl FaceIndex {
    pub fn new(complex: &SimplicialComplex) -> Self {
        let faces = complex.faces();
        let members = faces.iter().copied().collect();
        FaceIndex { faces, members }
    }

    #[inline]
    pub fn contains(&self, f: VertexSet) -> bool {
        self.members.contains(&f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn sets(list: &[&[usize]]) -> Vec<VertexSet> {
        list.iter().map(|s| set(s)).collect()
    }

    fn skeleton_of_tetrahedron() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, VertexSet::full(4).subsets_of_size(2)).unwrap()
    }

    fn pinched_complex() -> SimplicialComplex {
        SimplicialComplex::from_minimal_nonfaces(
            5,
            sets(&[&[1, 2], &[1, 3], &[2, 3, 4], &[2, 3, 5], &[1, 4, 5]]),
        )
        .unwrap()
    }

    fn uniform(n: usize, k: usize) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, VertexSet::full(n).subsets_of_size(k)).unwrap()
    }

    #[test]
    fn from_facets_absorbs_non_maximal_sets() {
        let c = SimplicialComplex::from_facets(4, sets(&[&[1, 2], &[1], &[3, 4]])).unwrap();
        assert_eq!(c.facets(), sets(&[&[1, 2], &[3, 4]]).as_slice());
    }

    #[test]
    fn pinched_complex_facets() {
        let given = sets(&[&[1, 4], &[1, 5], &[2, 3], &[2, 4, 5], &[3, 4, 5]]);
        let c = SimplicialComplex::from_facets(5, given.clone()).unwrap();
        assert_eq!(c.facets(), given.as_slice());
        assert_eq!(pinched_complex(), c);
    }

    #[test]
    fn empty_facet_list_is_the_empty_face_complex() {
        let c = SimplicialComplex::from_facets(3, []).unwrap();
        assert_eq!(c.facets(), &[VertexSet::EMPTY]);
        assert!(!c.is_void());
        assert_eq!(c.loops_and_coloops().unwrap().0, set(&[1, 2, 3]));
    }

    #[test]
    fn from_facets_errors() {
        assert!(matches!(
            SimplicialComplex::from_facets(3, [set(&[1, 4])]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        ));
        assert!(matches!(
            SimplicialComplex::from_facets(65, []),
            Err(Error::GroundTooLarge { n: 65, .. })
        ));
    }

    #[test]
    fn is_face_examples() {
        let t = skeleton_of_tetrahedron();
        assert!(t.is_face(set(&[1, 2])).unwrap());
        assert!(!t.is_face(set(&[1, 2, 3])).unwrap());
        assert!(pinched_complex().is_face(set(&[4, 5])).unwrap());
        assert!(t.is_face(set(&[5])).is_err());
    }

    #[test]
    fn minimal_nonfaces_examples() {
        assert_eq!(
            skeleton_of_tetrahedron().minimal_nonfaces().unwrap(),
            sets(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
        );
        let expected: Vec<VertexSet> = VertexSet::full(5).subsets_of_size(3).collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(uniform(5, 2).minimal_nonfaces().unwrap(), expected);
        assert_eq!(
            pinched_complex().minimal_nonfaces().unwrap(),
            sets(&[&[1, 2], &[1, 3], &[1, 4, 5], &[2, 3, 4], &[2, 3, 5]])
        );
        assert!(matches!(
            SimplicialComplex::void(3).minimal_nonfaces(),
            Err(Error::VoidComplex)
        ));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(uniform(4, 2).rank_of(set(&[1, 2, 3])).unwrap(), 2);
        let empty = SimplicialComplex::from_facets(3, []).unwrap();
        assert_eq!(empty.rank_of(set(&[1, 2])).unwrap(), 0);
        assert_eq!(pinched_complex().rank().unwrap(), 3);
        assert!(SimplicialComplex::void(2).rank().is_err());
    }

    #[test]
    fn link_examples() {
        let u42 = uniform(4, 2);
        let l = u42.link(set(&[1])).unwrap();
        assert_eq!(l.facets(), sets(&[&[2], &[3], &[4]]).as_slice());
        assert_eq!(l.loops_and_coloops().unwrap().0, set(&[1]));
        assert_eq!(u42.link(VertexSet::EMPTY).unwrap(), u42);
        assert!(u42.link(set(&[1, 2, 3])).unwrap().is_void());
    }

    #[test]
    fn restrict_examples() {
        let u42 = uniform(4, 2);
        let r = u42.restrict(set(&[1, 2, 3])).unwrap();
        assert_eq!(r.facets(), sets(&[&[1, 2], &[1, 3], &[2, 3]]).as_slice());
        let d = pinched_complex().deletion(set(&[4, 5])).unwrap();
        assert_eq!(d.facets(), sets(&[&[1], &[2, 3]]).as_slice());
        assert_eq!(u42.restrict(u42.ground()).unwrap(), u42);
    }

    #[test]
    fn join_examples() {
        let loops = SimplicialComplex::from_facets(2, []).unwrap();
        let coloop = SimplicialComplex::simplex(1);
        let j = loops.join(&coloop).unwrap();
        assert_eq!(j.n(), 3);
        assert_eq!(j.facets(), &[set(&[3])]);
        assert_eq!(j.loops_and_coloops().unwrap(), (set(&[1, 2]), set(&[3])));

        let u42 = uniform(4, 2);
        let with_loop = u42
            .join(&SimplicialComplex::from_facets(1, []).unwrap())
            .unwrap();
        assert_eq!(with_loop, u42.with_ground(5).unwrap());
        let unit = SimplicialComplex::from_facets(0, []).unwrap();
        assert_eq!(u42.join(&unit).unwrap(), u42);
        assert!(u42.join(&SimplicialComplex::void(1)).unwrap().is_void());
    }

    #[test]
    fn boundary_join_recovers_complex() {
        // circuits {1} and {2,3}: Δ = (Δ \ 23) * ∂{2,3}
        let c = SimplicialComplex::from_minimal_nonfaces(3, sets(&[&[1], &[2, 3]])).unwrap();
        let b = set(&[2, 3]);
        let rebuilt = c
            .deletion(b)
            .unwrap()
            .join_within(&SimplicialComplex::boundary_simplex(3, b).unwrap())
            .unwrap();
        assert_eq!(rebuilt, c);
    }

    #[test]
    fn loops_and_coloops_examples() {
        assert_eq!(
            uniform(4, 2).loops_and_coloops().unwrap(),
            (VertexSet::EMPTY, VertexSet::EMPTY)
        );
        assert_eq!(
            pinched_complex().loops_and_coloops().unwrap(),
            (VertexSet::EMPTY, VertexSet::EMPTY)
        );
    }

    #[test]
    fn boundary_simplex_examples() {
        let b = SimplicialComplex::boundary_simplex(3, set(&[1, 2, 3])).unwrap();
        assert_eq!(b.facets(), sets(&[&[1, 2], &[1, 3], &[2, 3]]).as_slice());
        let point = SimplicialComplex::boundary_simplex(1, set(&[1])).unwrap();
        assert_eq!(point.facets(), &[VertexSet::EMPTY]);
        assert_eq!(
            SimplicialComplex::boundary_simplex(5, VertexSet::full(5)).unwrap(),
            uniform(5, 4)
        );
        assert!(matches!(
            SimplicialComplex::boundary_simplex(3, VertexSet::EMPTY),
            Err(Error::EmptySimplex)
        ));
    }
}
