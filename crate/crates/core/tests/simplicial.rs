use std::collections::BTreeSet;

use boxcx::homology::examples::projective_plane;
use boxcx::homology::reduced_homology;
use boxcx::simplicial::{barycentric_subdivision, nerve, suspension};
use boxcx::verify::z2_corpus;
use boxcx::z2::examples;
use boxcx::{Involution, SimplicialComplex, Vertex, Z2Complex};
use proptest::prelude::*;

fn random_complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(0u32..7, 1..=4), 1..6).prop_map(|facets| {
        SimplicialComplex::from_facets(facets.into_iter().map(|f| f.into_iter().collect::<Vec<_>>())).unwrap()
    })
}

/// Closed star of `v` as a subcomplex: faces `σ` with `σ ∪ {v}` in `k`.
fn closed_star(k: &SimplicialComplex, v: Vertex) -> BTreeSet<Vec<Vertex>> {
    k.faces()
        .iter()
        .filter(|f| {
            let mut g: Vec<Vertex> = f.to_vec();
            if !g.contains(&v) {
                g.push(v);
                g.sort_unstable();
            }
            k.contains(&g)
        })
        .cloned()
        .collect()
}

/// The nerve of the closed vertex stars has the homology of `k` whenever every
/// nonempty intersection of stars is acyclic (checked, not assumed). Returns whether the
/// hypothesis held.
fn nerve_theorem_holds(k: &SimplicialComplex) -> bool {
    let verts: Vec<Vertex> = k.vertices().iter().copied().collect();
    let stars: Vec<BTreeSet<Vec<Vertex>>> = verts.iter().map(|&v| closed_star(k, v)).collect();
    let family: Vec<(Vertex, BTreeSet<Vertex>)> = stars
        .iter()
        .enumerate()
        .map(|(i, s)| (i as Vertex, s.iter().filter(|f| f.len() == 1).map(|f| f[0]).collect()))
        .collect();
    let n = nerve(&family);
    let good_cover = n.faces().iter().all(|idx| {
        let mut common = stars[idx[0] as usize].clone();
        for &i in &idx[1..] {
            common.retain(|f| stars[i as usize].contains(f));
        }
        let sub = SimplicialComplex::from_facets(common).unwrap();
        reduced_homology(&sub).is_acyclic()
    });
    if good_cover {
        assert_eq!(reduced_homology(&n), reduced_homology(k));
    }
    good_cover
}

#[test]
fn nerve_theorem_on_subdivisions() {
    let mut inputs: Vec<SimplicialComplex> = z2_corpus().into_iter().map(|(_, z)| z.complex().clone()).collect();
    inputs.push(examples::octahedron().complex().clone());
    inputs.push(projective_plane());
    for k in inputs {
        // stars of a barycentric subdivision always form a good cover
        assert!(nerve_theorem_holds(&barycentric_subdivision(&k).complex));
    }
    // the 4-cycle itself is not covered well: opposite stars meet in two points
    assert!(!nerve_theorem_holds(examples::antipodal_cycle(2).complex()));
}

#[test]
fn validator_rejects_fixed_faces() {
    let edge = SimplicialComplex::from_facets([vec![0, 1]]).unwrap();
    let swap = Involution::from_pairs([(0, 1)]).unwrap();
    assert!(Z2Complex::new(edge, swap).is_err());
    let path = SimplicialComplex::from_facets([vec![0, 1], vec![1, 2]]).unwrap();
    let swap = Involution::from_pairs([(0, 2), (1, 1)]).unwrap();
    assert!(Z2Complex::new(path, swap).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closure_is_idempotent(k in random_complex()) {
        prop_assert_eq!(SimplicialComplex::from_facets(k.facets()).unwrap(), k.clone());
        prop_assert_eq!(SimplicialComplex::from_facets(k.sorted_faces()).unwrap(), k);
    }

    #[test]
    fn subdivision_keeps_euler(k in random_complex()) {
        let sd = barycentric_subdivision(&k);
        prop_assert_eq!(sd.complex.euler_characteristic(), k.euler_characteristic());
        prop_assert_eq!(sd.faces.len(), k.num_faces());
    }

    #[test]
    fn suspension_reflects_euler(k in random_complex()) {
        let (s, _, _) = suspension(&k);
        prop_assert_eq!(s.euler_characteristic(), 2 - k.euler_characteristic());
        prop_assert_eq!(reduced_homology(&s), reduced_homology(&k).suspended(false));
    }

    #[test]
    fn accepted_z2_complexes_are_free(m in 2u32..6, subdivide in any::<bool>()) {
        let mut z = examples::antipodal_cycle(m);
        if subdivide {
            z = z.subdivide().0;
        }
        for f in z.complex().faces() {
            let image = z.action().apply_face(f);
            prop_assert!(&image != f);
            prop_assert!(z.complex().contains(&image));
        }
    }
}

#[test]
fn empty_complex_conventions() {
    let e = SimplicialComplex::empty();
    assert_eq!((e.euler_characteristic(), e.dim()), (0, -1));
    let (s, _, _) = suspension(&e);
    assert_eq!(s.num_faces(), 2);
    assert_eq!(reduced_homology(&s), reduced_homology(&e).suspended(true));
}
