//! The inclusion graph `G_{A,b}` on `N_b(link A)` and its component count.

use std::collections::HashMap;

use crate::complex::FaceIndex;
use crate::vertex_set::VertexSet;

use super::{is_reduced_in, n_del_in};

#[derive(Clone, Debug)]
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut node: usize) -> usize {
        let mut root = node;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[node] != root {
            let next = self.parent[node];
            self.parent[node] = root;
            node = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.rank[a] < self.rank[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        if self.rank[a] == self.rank[b] {
            self.rank[a] += 1;
        }
    }
}

/// Graph on `N_b(link_Δ A)` with an edge between every strictly nested pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionGraph {
    /// Elements of `N_b(link_Δ A)` in canonical order.
    pub vertices: Vec<VertexSet>,
    /// Index pairs `(i, j)` with `i < j` and `vertices[i] ⊊ vertices[j]`.
    pub edges: Vec<(usize, usize)>,
    /// `marked[i]` iff `vertices[i] ∈ Ñ_b(link_Δ A)`.
    pub marked: Vec<bool>,
    /// Vertex indices grouped by component; each sorted, ordered by first index.
    pub components: Vec<Vec<usize>>,
}

impl InclusionGraph {
    pub(crate) fn build(link: &FaceIndex, b: VertexSet) -> Self {
        let vertices = n_del_in(link, b);
        let marked: Vec<bool> = vertices
            .iter()
            .map(|f| is_reduced_in(link, *f, b))
            .collect();
        let mut edges = Vec::new();
        // Canonical order sorts by size, so a proper subset always precedes its superset.
        for (j, g) in vertices.iter().enumerate() {
            for (i, f) in vertices[..j].iter().enumerate() {
                if f.is_proper_subset(*g) {
                    edges.push((i, j));
                }
            }
        }
        let mut dsu = DisjointSet::new(vertices.len());
        for &(i, j) in &edges {
            dsu.union(i, j);
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for i in 0..vertices.len() {
            let root = dsu.find(i);
            let k = *slot.entry(root).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[k].push(i);
        }
        InclusionGraph {
            vertices,
            edges,
            marked,
            components: groups,
        }
    }

    /// Components containing no marked vertex; together they form `G̃_{A,b}`.
    pub fn unmarked_components(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.components
            .iter()
            .filter(|c| c.iter().all(|&i| !self.marked[i]))
    }

    pub fn marked_vertices(&self) -> Vec<VertexSet> {
        self.vertices
            .iter()
            .zip(&self.marked)
            .filter(|(_, m)| **m)
            .map(|(v, _)| *v)
            .collect()
    }
}

/// Number of unmarked components of `G_{∅,b}` over the given complex.
///
/// `N_b` is closed under supersets inside `Δ \ b`, so every strict inclusion
/// `F ⊊ G` is witnessed by a chain of single-vertex extensions inside `N_b`;
/// unioning those covering pairs yields the same components as the full graph.
pub(crate) fn unmarked_component_count(link: &FaceIndex, b: VertexSet, ground: VertexSet) -> usize {
    let vertices = n_del_in(link, b);
    if vertices.is_empty() {
        return 0;
    }
    let position: HashMap<VertexSet, usize> =
        vertices.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut dsu = DisjointSet::new(vertices.len());
    let free = ground - b;
    for (i, f) in vertices.iter().enumerate() {
        for v in (free - *f).iter() {
            if let Some(&j) = position.get(&f.with(v)) {
                dsu.union(i, j);
            }
        }
    }
    let mut tainted = vec![false; vertices.len()];
    for (i, f) in vertices.iter().enumerate() {
        if is_reduced_in(link, *f, b) {
            let root = dsu.find(i);
            tainted[root] = true;
        }
    }
    (0..vertices.len())
        .filter(|&i| dsu.find(i) == i && !tainted[i])
        .count()
}
