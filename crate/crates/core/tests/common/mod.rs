//! Brute-force reference implementations working on raw `u64` masks.
//!
//! Everything here follows the definitions literally: faces by scanning all
//! subsets, links and `N_b` by set comprehension, the reduced part by trying
//! every proper subset of `b`, and components by breadth-first search over
//! all comparable pairs. Nothing from the library is used except reading the
//! facet list of a complex.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet, VecDeque};

use matroid_t1::{SimplicialComplex, VertexSet};

pub fn mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, v| m | 1 << (v - 1))
}

pub fn set(vs: &[usize]) -> VertexSet {
    VertexSet::from_bits(mask(vs))
}

pub fn masks(n: usize) -> impl Iterator<Item = u64> {
    0..1u64 << n
}

pub fn popcount(m: u64) -> usize {
    m.count_ones() as usize
}

pub fn subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// All subsets of `m`, including `∅` and `m`.
pub fn submasks(m: u64) -> Vec<u64> {
    let mut out = vec![0];
    let mut s = m;
    while s != 0 {
        out.push(s);
        s = (s - 1) & m;
    }
    out
}

#[derive(Clone, Debug)]
pub struct Faces {
    pub n: usize,
    pub members: HashSet<u64>,
}

impl Faces {
    pub fn of(delta: &SimplicialComplex) -> Self {
        let facets: Vec<u64> = delta.facets().iter().map(|f| f.bits()).collect();
        let members = masks(delta.n())
            .filter(|m| facets.iter().any(|f| subset(*m, *f)))
            .collect();
        Faces {
            n: delta.n(),
            members,
        }
    }

    /// All sets over `[n]` containing none of `nonfaces`.
    pub fn avoiding(n: usize, nonfaces: &[u64]) -> Self {
        let members = masks(n)
            .filter(|m| !nonfaces.iter().any(|c| subset(*c, *m)))
            .collect();
        Faces { n, members }
    }

    pub fn to_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.n, self.facets().into_iter().map(VertexSet::from_bits))
            .unwrap()
    }

    pub fn contains(&self, m: u64) -> bool {
        self.members.contains(&m)
    }

    pub fn sorted(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.members.iter().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn link(&self, a: u64) -> Faces {
        let members = self
            .members
            .iter()
            .filter(|g| *g & a == 0 && self.contains(*g | a))
            .copied()
            .collect();
        Faces { n: self.n, members }
    }

    pub fn restrict(&self, w: u64) -> Faces {
        let members = self
            .members
            .iter()
            .filter(|g| subset(**g, w))
            .copied()
            .collect();
        Faces { n: self.n, members }
    }

    pub fn facets(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .members
            .iter()
            .filter(|f| !self.members.iter().any(|g| *g != **f && subset(**f, *g)))
            .copied()
            .collect();
        v.sort_unstable();
        v
    }

    pub fn minimal_nonfaces(&self) -> Vec<u64> {
        masks(self.n)
            .filter(|m| !self.contains(*m))
            .filter(|m| {
                (0..self.n)
                    .filter(|i| m >> i & 1 == 1)
                    .all(|i| self.contains(m & !(1 << i)))
            })
            .collect()
    }

    /// Exchange axiom over every pair `|J| < |I|`.
    pub fn is_matroid(&self) -> bool {
        if self.members.is_empty() {
            return false;
        }
        self.members.iter().all(|i| {
            self.members.iter().all(|j| {
                popcount(*j) >= popcount(*i)
                    || (0..self.n)
                        .filter(|v| (i & !j) >> v & 1 == 1)
                        .any(|v| self.contains(j | 1 << v))
            })
        })
    }

    pub fn n_del(&self, b: u64) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .members
            .iter()
            .filter(|f| **f & b == 0 && !self.contains(**f | b))
            .copied()
            .collect();
        v.sort_unstable();
        v
    }

    pub fn reduced(&self, f: u64, b: u64) -> bool {
        submasks(b)
            .into_iter()
            .filter(|s| *s != b)
            .any(|s| !self.contains(f | s))
    }

    pub fn n_del_red(&self, b: u64) -> Vec<u64> {
        self.n_del(b)
            .into_iter()
            .filter(|f| self.reduced(*f, b))
            .collect()
    }

    /// Unmarked components of the comparability graph on `N_b`, less one when `|b| = 1`.
    pub fn t1_neg(&self, b: u64) -> usize {
        let nodes = self.n_del(b);
        let mut seen = vec![false; nodes.len()];
        let mut clean: usize = 0;
        for start in 0..nodes.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut marked = false;
            while let Some(i) = queue.pop_front() {
                marked |= self.reduced(nodes[i], b);
                for j in 0..nodes.len() {
                    let comparable = nodes[i] != nodes[j]
                        && (subset(nodes[i], nodes[j]) || subset(nodes[j], nodes[i]));
                    if comparable && !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
            if !marked {
                clean += 1;
            }
        }
        if popcount(b) == 1 {
            clean.saturating_sub(1)
        } else {
            clean
        }
    }

    /// `dim T¹_{a-b}` through the link; zero when `A` is not a face.
    pub fn t1(&self, a: u64, b: u64) -> usize {
        if b == 0 || !self.contains(a) {
            return 0;
        }
        self.link(a).t1_neg(b)
    }

    /// Every nonzero dimension over all disjoint `(A, b)` with `b ≠ ∅`.
    pub fn table(&self) -> BTreeMap<(u64, u64), usize> {
        let mut out = BTreeMap::new();
        for a in masks(self.n) {
            for b in masks(self.n).filter(|b| *b != 0 && b & a == 0) {
                let d = self.t1(a, b);
                if d > 0 {
                    out.insert((a, b), d);
                }
            }
        }
        out
    }
}

/// Table entries as raw masks, for comparison with [`Faces::table`].
pub fn raw_table(t: &matroid_t1::T1Table) -> BTreeMap<(u64, u64), usize> {
    t.iter()
        .map(|(d, dim)| ((d.positive().bits(), d.negative().bits()), *dim))
        .collect()
}

/// The pinched complex on `[5]` with minimal nonfaces `12, 13, 234, 235, 145`.
pub fn pinched_complex() -> SimplicialComplex {
    SimplicialComplex::from_minimal_nonfaces(
        5,
        [
            set(&[1, 2]),
            set(&[1, 3]),
            set(&[2, 3, 4]),
            set(&[2, 3, 5]),
            set(&[1, 4, 5]),
        ],
    )
    .unwrap()
}

/// 1-skeleton of the tetrahedron on `[4]`.
pub fn tetrahedron_edges() -> SimplicialComplex {
    let edges = (1..=4).flat_map(|i| (i + 1..=4).map(move |j| set(&[i, j])));
    SimplicialComplex::from_facets(4, edges).unwrap()
}
