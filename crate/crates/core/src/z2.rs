//! Simplicial complexes with a free simplicial involution.

use std::collections::{BTreeMap, HashSet};

use crate::simplicial::{self, canonical, Face, SimplicialComplex, Subdivision, Vertex};
use crate::{Error, Result};

/// A vertex map of order two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    map: BTreeMap<Vertex, Vertex>,
}

impl Involution {
    pub fn new(map: BTreeMap<Vertex, Vertex>) -> Result<Self> {
        for (&v, &w) in &map {
            if map.get(&w) != Some(&v) {
                return Err(Error::Involution(format!("map sends {v} to {w} but {w} does not return to {v}")));
            }
        }
        Ok(Self { map })
    }

    /// Pairs `(a, b)` swapped by the involution.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (a, b) in pairs {
            for (x, y) in [(a, b), (b, a)] {
                if map.insert(x, y).is_some_and(|old| old != y) {
                    return Err(Error::Involution(format!("vertex {x} is paired twice")));
                }
            }
        }
        Self::new(map)
    }

    pub fn map(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.map
    }

    /// Image of a vertex. Panics on vertices outside the domain, which a validated
    /// [`Z2Complex`] rules out.
    pub fn apply(&self, v: Vertex) -> Vertex {
        self.map[&v]
    }

    pub fn apply_face(&self, face: &[Vertex]) -> Face {
        canonical(face.iter().map(|&v| self.apply(v)))
    }
}

/// A simplicial complex together with a free simplicial involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2Complex {
    complex: SimplicialComplex,
    action: Involution,
}

impl Z2Complex {
    /// Validates that the action is defined exactly on the vertices, maps faces to faces and
    /// fixes no face setwise.
    pub fn new(complex: SimplicialComplex, action: Involution) -> Result<Self> {
        if !action.map.keys().eq(complex.vertices().iter()) {
            return Err(Error::Involution("action domain differs from the vertex set".into()));
        }
        for face in complex.sorted_faces() {
            let image = action.apply_face(&face);
            if image == face {
                return Err(Error::Involution(format!("face {face:?} is fixed by the action")));
            }
            if !complex.contains(&image) {
                return Err(Error::Involution(format!("image {image:?} of face {face:?} is not a face")));
            }
        }
        Ok(Self { complex, action })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn action(&self) -> &Involution {
        &self.action
    }

    /// Re-checks freeness and simpliciality.
    pub fn is_free(&self) -> bool {
        self.complex.faces().iter().all(|f| {
            let img = self.action.apply_face(f);
            &img != f && self.complex.contains(&img)
        })
    }

    /// Groups the faces into orbits `{σ, ν(σ)}`, each returned once with the smaller face first.
    pub fn face_orbits(&self) -> Vec<(Face, Face)> {
        let mut seen: HashSet<&Face> = HashSet::new();
        let mut out = Vec::new();
        for f in self.complex.sorted_faces() {
            if seen.contains(&f) {
                continue;
            }
            let g = self.action.apply_face(&f);
            seen.insert(self.complex.faces().get(&g).expect("validated"));
            out.push((f, g));
        }
        out
    }

    /// `sd(K)` with the induced action `A ↦ ν(A)` on face-vertices.
    pub fn subdivide(&self) -> (Z2Complex, Subdivision) {
        let sd = simplicial::barycentric_subdivision(&self.complex);
        let map = sd
            .faces
            .iter()
            .enumerate()
            .map(|(i, f)| (i as Vertex, sd.vertex_of(&self.action.apply_face(f)).expect("validated")))
            .collect();
        let action = Involution::new(map).expect("face map is an involution");
        let z = Z2Complex::new(sd.complex.clone(), action).expect("subdivision of a free complex is free");
        (z, sd)
    }

    /// Suspension with the apexes swapped.
    pub fn suspension(&self) -> Z2Complex {
        let (k, x, y) = simplicial::suspension(&self.complex);
        let mut map = self.action.map.clone();
        map.insert(x, y);
        map.insert(y, x);
        Z2Complex::new(k, Involution { map }).expect("suspension preserves freeness")
    }
}

/// Z2-complexes used throughout the tests and the CLI.
pub mod examples {
    use super::*;

    /// Two points swapped.
    pub fn sphere0() -> Z2Complex {
        let k = SimplicialComplex::from_facets([[0], [1]]).unwrap();
        Z2Complex::new(k, Involution::from_pairs([(0, 1)]).unwrap()).unwrap()
    }

    /// The `2m`-cycle `0, 1, …, 2m-1` with the antipodal map `i ↦ i + m`.
    pub fn antipodal_cycle(m: u32) -> Z2Complex {
        assert!(m >= 2, "a free antipodal cycle needs at least 4 vertices");
        let n = 2 * m;
        let k = SimplicialComplex::from_facets((0..n).map(|i| [i, (i + 1) % n])).unwrap();
        Z2Complex::new(k, Involution::from_pairs((0..m).map(|i| (i, i + m))).unwrap()).unwrap()
    }

    /// Boundary of the octahedron with vertices `±e_i` labeled `2i` and `2i+1`.
    pub fn octahedron() -> Z2Complex {
        let mut facets = Vec::new();
        for a in [0, 1] {
            for b in [2, 3] {
                for c in [4, 5] {
                    facets.push([a, b, c]);
                }
            }
        }
        let k = SimplicialComplex::from_facets(facets).unwrap();
        Z2Complex::new(k, Involution::from_pairs([(0, 1), (2, 3), (4, 5)]).unwrap()).unwrap()
    }
}
