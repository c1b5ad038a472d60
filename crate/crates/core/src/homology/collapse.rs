use std::collections::{BTreeSet, HashMap, HashSet};

use crate::simplicial::{face_order, Face, SimplicialComplex};

/// Removes elementary collapses `(σ, τ)`, where `τ` is the only face strictly containing `σ`, until no
/// free face remains. Homotopy type, and hence homology, is unchanged.
///
/// Free faces are processed in canonical face order, so the result is deterministic.
pub fn collapse_reduce(k: &SimplicialComplex) -> SimplicialComplex {
    let mut faces: HashSet<Face> = k.faces().clone();
    let mut cofacets: HashMap<Face, HashSet<Face>> = faces.iter().map(|f| (f.clone(), HashSet::new())).collect();
    for f in &faces {
        for sub in boundary_faces(f) {
            cofacets.get_mut(&sub).unwrap().insert(f.clone());
        }
    }

    let mut queue: BTreeSet<Key> = cofacets.iter().filter(|(_, c)| c.len() == 1).map(|(f, _)| Key(f.clone())).collect();
    while let Some(Key(sigma)) = queue.pop_first() {
        let Some(cof) = cofacets.get(&sigma) else { continue };
        if cof.len() != 1 {
            continue;
        }
        let tau = cof.iter().next().unwrap().clone();
        debug_assert!(cofacets[&tau].is_empty());
        for f in [&tau, &sigma] {
            faces.remove(f);
            cofacets.remove(f);
        }
        for sub in boundary_faces(&tau).into_iter().chain(boundary_faces(&sigma)) {
            if let Some(c) = cofacets.get_mut(&sub) {
                c.remove(&tau);
                c.remove(&sigma);
                if c.len() == 1 {
                    queue.insert(Key(sub));
                }
            }
        }
    }
    SimplicialComplex::from_closed_faces(faces)
}

fn boundary_faces(f: &Face) -> Vec<Face> {
    if f.len() < 2 {
        return Vec::new();
    }
    (0..f.len())
        .map(|i| {
            let mut s = f.clone();
            s.remove(i);
            s
        })
        .collect()
}

#[derive(PartialEq, Eq)]
struct Key(Face);

impl Ord for Key {
    // Higher-dimensional free faces first keeps the intermediate complexes small.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        face_order(&other.0, &self.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solid_triangle_collapses_to_point() {
        let k = SimplicialComplex::from_facets([[0, 1, 2]]).unwrap();
        assert_eq!(collapse_reduce(&k).f_vector(), vec![1]);
    }

    #[test]
    fn circle_is_unchanged() {
        let k = SimplicialComplex::from_facets([[0, 1], [1, 2], [0, 2]]).unwrap();
        assert_eq!(collapse_reduce(&k), k);
    }

    #[test]
    fn preserves_euler_characteristic() {
        let k = SimplicialComplex::from_facets([vec![0, 1, 2, 3], vec![3, 4], vec![4, 5, 6], vec![5, 7]]).unwrap();
        let r = collapse_reduce(&k);
        assert_eq!(r.euler_characteristic(), k.euler_characteristic());
        assert_eq!(r.f_vector(), vec![1]);
    }
}
