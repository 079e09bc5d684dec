//! The library against the brute-force reference on every complex with at
//! most five vertices, and the worked examples checked against the reference.

mod common;

use common::{mask, pinched_complex, raw_table, set, submasks, tetrahedron_edges, Faces};
use matroid_t1::census::complexes_up_to;
use matroid_t1::cotangent::{
    circuits_containing, dim_t1, inclusion_graph, n_del, n_del_red, t1_table, t1_upper_bound,
};
use matroid_t1::matroid::{is_matroid_exchange, uniform};
use matroid_t1::reconstruction::slice_link_table;
use matroid_t1::{MultiDegree, SimplicialComplex, VertexSet};

fn bits(sets: &[VertexSet]) -> Vec<u64> {
    let mut v: Vec<u64> = sets.iter().map(|s| s.bits()).collect();
    v.sort_unstable();
    v
}

fn census() -> Vec<SimplicialComplex> {
    complexes_up_to(5).unwrap()
}

#[test]
fn faces_and_circuits_match_reference() {
    for delta in census() {
        let faces = Faces::of(&delta);
        assert_eq!(bits(&delta.faces()), faces.sorted(), "{delta:?}");
        assert_eq!(bits(delta.facets()), faces.facets(), "{delta:?}");
        let mut circuits = faces.minimal_nonfaces();
        circuits.sort_unstable();
        assert_eq!(
            bits(&delta.minimal_nonfaces().unwrap()),
            circuits,
            "{delta:?}"
        );
    }
}

#[test]
fn links_match_reference() {
    for delta in census() {
        let faces = Faces::of(&delta);
        for a in delta.faces() {
            let link = delta.link(a).unwrap();
            assert_eq!(
                bits(&link.faces()),
                faces.link(a.bits()).sorted(),
                "{delta:?} at {a}"
            );
        }
    }
}

#[test]
fn exchange_matches_reference() {
    for delta in census() {
        assert_eq!(
            is_matroid_exchange(&delta).unwrap(),
            Faces::of(&delta).is_matroid(),
            "{delta:?}"
        );
    }
}

#[test]
fn n_del_matches_reference() {
    for delta in census() {
        let faces = Faces::of(&delta);
        for b in submasks(delta.ground().bits())
            .into_iter()
            .filter(|b| *b != 0)
        {
            let vb = VertexSet::from_bits(b);
            assert_eq!(
                bits(&n_del(&delta, vb).unwrap()),
                faces.n_del(b),
                "{delta:?} b={vb}"
            );
            let mut red = faces.n_del_red(b);
            red.sort_unstable();
            assert_eq!(
                bits(&n_del_red(&delta, vb).unwrap()),
                red,
                "{delta:?} b={vb}"
            );
        }
    }
}

#[test]
fn dimensions_match_reference_at_every_degree() {
    for delta in census() {
        let faces = Faces::of(&delta);
        let ground = delta.ground().bits();
        for a in submasks(ground) {
            for b in submasks(ground & !a).into_iter().filter(|b| *b != 0) {
                let degree =
                    MultiDegree::new(VertexSet::from_bits(a), VertexSet::from_bits(b)).unwrap();
                assert_eq!(
                    dim_t1(&delta, degree).unwrap(),
                    faces.t1(a, b),
                    "{delta:?} at {degree}"
                );
            }
        }
    }
}

#[test]
fn tables_match_reference() {
    for delta in census() {
        assert_eq!(
            raw_table(&t1_table(&delta).unwrap()),
            Faces::of(&delta).table(),
            "{delta:?}"
        );
    }
}

#[test]
fn slices_are_tables_of_links() {
    for delta in census() {
        let table = t1_table(&delta).unwrap();
        let faces = Faces::of(&delta);
        for f in delta.faces() {
            let slice = slice_link_table(&table, f).unwrap();
            assert_eq!(
                raw_table(&slice),
                faces.link(f.bits()).table(),
                "{delta:?} at {f}"
            );
        }
    }
}

/// `min(|C(link b) ∩ (Δ \ b)|, |B(Δ \ b) \ link b|)`, less one when `|b| = 1`.
fn reference_bound(faces: &Faces, b: u64) -> usize {
    let link = faces.link(b);
    let deletion = faces.restrict(((1u64 << faces.n) - 1) & !b);
    let circuits = link
        .minimal_nonfaces()
        .into_iter()
        .filter(|c| deletion.contains(*c))
        .count();
    let facets = deletion
        .facets()
        .into_iter()
        .filter(|f| !link.contains(*f))
        .count();
    let bound = circuits.min(facets);
    if b.count_ones() == 1 {
        bound.saturating_sub(1)
    } else {
        bound
    }
}

#[test]
fn upper_bound_matches_reference() {
    for delta in census() {
        let faces = Faces::of(&delta);
        for b in delta.faces().into_iter().filter(|b| !b.is_empty()) {
            assert_eq!(
                t1_upper_bound(&delta, b).unwrap(),
                reference_bound(&faces, b.bits()),
                "{delta:?} at {b}"
            );
        }
    }
}

#[test]
fn pinched_complex_worked_values() {
    let faces = Faces::avoiding(
        5,
        &[
            mask(&[1, 2]),
            mask(&[1, 3]),
            mask(&[2, 3, 4]),
            mask(&[2, 3, 5]),
            mask(&[1, 4, 5]),
        ],
    );
    let delta = pinched_complex();
    assert_eq!(delta, faces.to_complex());
    assert_eq!(
        faces.facets(),
        vec![
            mask(&[1, 4]),
            mask(&[2, 3]),
            mask(&[1, 5]),
            mask(&[2, 4, 5]),
            mask(&[3, 4, 5])
        ]
        .into_iter()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect::<Vec<_>>()
    );

    let b45 = mask(&[4, 5]);
    assert_eq!(faces.n_del(b45), vec![mask(&[1]), mask(&[2, 3])]);
    assert_eq!(faces.n_del_red(b45), vec![mask(&[2, 3])]);
    assert_eq!(
        bits(&n_del(&delta, set(&[4, 5])).unwrap()),
        faces.n_del(b45)
    );
    assert_eq!(
        bits(&n_del_red(&delta, set(&[4, 5])).unwrap()),
        faces.n_del_red(b45)
    );

    let graph = inclusion_graph(&delta, VertexSet::EMPTY, set(&[4, 5])).unwrap();
    assert_eq!(graph.vertices, vec![set(&[1]), set(&[2, 3])]);
    assert!(graph.edges.is_empty());
    assert_eq!(graph.components.len(), 2);
    assert_eq!(graph.marked_vertices(), vec![set(&[2, 3])]);

    let graph = inclusion_graph(&delta, VertexSet::EMPTY, set(&[1])).unwrap();
    assert_eq!(graph.vertices.len(), faces.n_del(mask(&[1])).len());
    assert_eq!(graph.vertices.len(), 10);
    assert_eq!(graph.components.len(), 1);

    assert_eq!(faces.t1(0, b45), 1);
    assert_eq!(faces.t1(0, mask(&[1])), 0);
    // both bound terms equal two at b = 45
    assert_eq!(reference_bound(&faces, b45), 2);
    assert_eq!(t1_upper_bound(&delta, set(&[4, 5])).unwrap(), 2);

    let containing = circuits_containing(&delta, set(&[1])).unwrap();
    assert_eq!(
        containing,
        vec![set(&[1, 2]), set(&[1, 3]), set(&[1, 4, 5])]
    );
}

#[test]
fn tetrahedron_edges_worked_values() {
    let faces = Faces::of(&tetrahedron_edges());
    let b = mask(&[1, 2]);
    assert_eq!(faces.n_del(b), vec![mask(&[3]), mask(&[4]), mask(&[3, 4])]);
    assert_eq!(faces.n_del_red(b), vec![mask(&[3, 4])]);
}

#[test]
fn uniform_worked_values() {
    let u42 = Faces::of(&uniform(4, 2).unwrap());
    assert_eq!(u42.t1(0, mask(&[1])), 2);
    assert_eq!(u42.t1(mask(&[1]), mask(&[2])), 1);
    assert_eq!(u42.t1(0, mask(&[1, 2])), 0);
    assert_eq!(reference_bound(&u42, mask(&[1])), 2);

    // k[x,y,z]/(xyz): seven nonzero support classes
    let u32_table = Faces::of(&uniform(3, 2).unwrap()).table();
    assert_eq!(u32_table.len(), 7);
    assert!(u32_table.values().all(|d| *d == 1));
    assert_eq!(
        raw_table(&t1_table(&uniform(3, 2).unwrap()).unwrap()),
        u32_table
    );

    let u21 = Faces::of(&uniform(2, 1).unwrap());
    assert_eq!(
        u21.table().into_iter().collect::<Vec<_>>(),
        vec![((0, mask(&[1, 2])), 1)]
    );
}
