//! Finite abstract simplicial complexes and the standard constructions on them.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::{Error, Result};

pub type Vertex = u32;

/// A simplex, stored as a strictly increasing list of vertex labels.
pub type Face = Vec<Vertex>;

/// Default vertex limit for [`isomorphic`].
pub const ISOMORPHISM_VERTEX_LIMIT: usize = 12;

/// A downward-closed family of nonempty vertex sets.
///
/// The empty face is never stored, so the empty complex has no faces and dimension `-1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: BTreeSet<Vertex>,
    faces: HashSet<Face>,
}

pub(crate) fn canonical(face: impl IntoIterator<Item = Vertex>) -> Face {
    let mut f: Face = face.into_iter().collect();
    f.sort_unstable();
    f.dedup();
    f
}

/// Deterministic face order: by dimension, then lexicographically.
pub(crate) fn face_order(a: &Face, b: &Face) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Downward closure of the given facets.
    ///
    /// Facets need not be maximal; duplicates and unsorted input are accepted.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Vertex>,
    {
        let mut k = Self::empty();
        for facet in facets {
            let f = canonical(facet);
            if f.is_empty() {
                return Err(Error::input("the empty set cannot be listed as a facet"));
            }
            k.insert_closed(f);
        }
        Ok(k)
    }

    /// Builds a complex from a face set that is already downward closed.
    pub(crate) fn from_closed_faces(faces: HashSet<Face>) -> Self {
        let vertices = faces.iter().filter(|f| f.len() == 1).map(|f| f[0]).collect();
        let k = Self { vertices, faces };
        debug_assert!(k.is_downward_closed());
        k
    }

    fn insert_closed(&mut self, face: Face) {
        if self.faces.contains(&face) {
            return;
        }
        if face.len() == 1 {
            self.vertices.insert(face[0]);
        } else {
            for i in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(i);
                self.insert_closed(sub);
            }
        }
        self.faces.insert(face);
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn faces(&self) -> &HashSet<Face> {
        &self.faces
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: &[Vertex]) -> bool {
        self.faces.contains(face)
    }

    /// Largest face cardinality minus one; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.faces.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// All faces in canonical order (dimension, then lexicographic).
    pub fn sorted_faces(&self) -> Vec<Face> {
        let mut v: Vec<Face> = self.faces.iter().cloned().collect();
        v.sort_by(face_order);
        v
    }

    /// The `k`-dimensional faces, sorted lexicographically.
    pub fn faces_of_dim(&self, k: usize) -> Vec<Face> {
        let mut v: Vec<Face> = self.faces.iter().filter(|f| f.len() == k + 1).cloned().collect();
        v.sort();
        v
    }

    /// Number of faces in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut fv = vec![0; (self.dim() + 1) as usize];
        for f in &self.faces {
            fv[f.len() - 1] += 1;
        }
        fv
    }

    /// Inclusion-maximal faces in canonical order.
    pub fn facets(&self) -> Vec<Face> {
        let mut covered: HashSet<&[Vertex]> = HashSet::new();
        let mut buf = Vec::new();
        for f in &self.faces {
            for i in 0..f.len() {
                buf.clear();
                buf.extend(f.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v));
                if let Some(sub) = self.faces.get(buf.as_slice()) {
                    covered.insert(sub.as_slice());
                }
            }
        }
        let mut out: Vec<Face> = self.faces.iter().filter(|f| !covered.contains(f.as_slice())).cloned().collect();
        out.sort_by(face_order);
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces.iter().map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum()
    }

    pub(crate) fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|f| {
            !f.is_empty()
                && f.windows(2).all(|w| w[0] < w[1])
                && (f.len() == 1 && self.vertices.contains(&f[0])
                    || (0..f.len()).all(|i| {
                        let mut s = f.clone();
                        s.remove(i);
                        self.faces.contains(&s)
                    }))
        }) && self.vertices.iter().all(|&v| self.faces.contains(&vec![v]))
    }

    /// Induced subcomplex on a vertex subset.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> SimplicialComplex {
        let faces = self.faces.iter().filter(|f| f.iter().all(|v| keep.contains(v))).cloned().collect();
        Self::from_closed_faces(faces)
    }

    /// Applies an injective relabeling to every vertex.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> SimplicialComplex {
        let faces = self.faces.iter().map(|f| canonical(f.iter().map(|&v| map(v)))).collect();
        Self::from_closed_faces(faces)
    }

    fn fresh_vertex(&self) -> Vertex {
        self.vertices.last().map_or(0, |&v| v + 1)
    }
}

/// The barycentric subdivision together with its vertex dictionary.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// `faces[i]` is the face of the original complex that became vertex `i`.
    pub faces: Vec<Face>,
    index: HashMap<Face, Vertex>,
}

impl Subdivision {
    pub fn vertex_of(&self, face: &[Vertex]) -> Option<Vertex> {
        self.index.get(face).copied()
    }
}

/// `sd(K)`: vertices are the faces of `K`, relabeled densely in canonical face order; simplices
/// are chains under strict inclusion.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> Subdivision {
    let faces = k.sorted_faces();
    let index: HashMap<Face, Vertex> = faces.iter().enumerate().map(|(i, f)| (f.clone(), i as Vertex)).collect();

    // Maximal chains are the complete flags inside the facets of K.
    let mut chains: Vec<Face> = Vec::new();
    for facet in k.facets() {
        let mut perm = facet.clone();
        for_each_permutation(&mut perm, 0, &mut |order| {
            let mut prefix = Vec::with_capacity(order.len());
            let chain = order
                .iter()
                .map(|&v| {
                    prefix.push(v);
                    index[&canonical(prefix.iter().copied())]
                })
                .collect::<Face>();
            chains.push(chain);
        });
    }
    let complex = SimplicialComplex::from_facets(chains).expect("flags are nonempty");
    Subdivision { complex, faces, index }
}

fn for_each_permutation(items: &mut [Vertex], start: usize, f: &mut impl FnMut(&[Vertex])) {
    if start == items.len() {
        f(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        for_each_permutation(items, start + 1, f);
        items.swap(start, i);
    }
}

/// Suspension of `K` and the two apex labels used, in that order.
///
/// The apexes are the two smallest labels above every existing vertex (`0` and `1` for the
/// empty complex, whose suspension is the 0-sphere).
pub fn suspension(k: &SimplicialComplex) -> (SimplicialComplex, Vertex, Vertex) {
    let x = k.fresh_vertex();
    let y = x + 1;
    let mut faces = k.faces.clone();
    faces.insert(vec![x]);
    faces.insert(vec![y]);
    for f in &k.faces {
        for apex in [x, y] {
            let mut g = f.clone();
            g.push(apex);
            faces.insert(g);
        }
    }
    (SimplicialComplex::from_closed_faces(faces), x, y)
}

/// Cone over `K` with a fresh apex.
pub fn cone(k: &SimplicialComplex, apex: Vertex) -> Result<SimplicialComplex> {
    if k.vertices.contains(&apex) {
        return Err(Error::input(format!("cone apex {apex} is already a vertex")));
    }
    let mut faces = k.faces.clone();
    faces.insert(vec![apex]);
    for f in &k.faces {
        faces.insert(canonical(f.iter().copied().chain([apex])));
    }
    Ok(SimplicialComplex::from_closed_faces(faces))
}

/// `star_K(σ) = {τ ∈ K : τ ∪ σ ∈ K}`.
pub fn star(k: &SimplicialComplex, sigma: &[Vertex]) -> Result<SimplicialComplex> {
    let sigma = canonical(sigma.iter().copied());
    if !k.contains(&sigma) {
        return Err(Error::input(format!("{sigma:?} is not a face")));
    }
    let faces =
        k.faces.iter().filter(|t| k.contains(&canonical(t.iter().chain(sigma.iter()).copied()))).cloned().collect();
    Ok(SimplicialComplex::from_closed_faces(faces))
}

/// Nerve of a labeled set family: a set of labels spans a face iff the corresponding members
/// share a common element. Members with an empty set contribute no vertex.
pub fn nerve<T: Ord + Clone>(family: &[(Vertex, BTreeSet<T>)]) -> SimplicialComplex {
    let mut holders: BTreeMap<T, Vec<Vertex>> = BTreeMap::new();
    for (label, set) in family {
        for x in set {
            holders.entry(x.clone()).or_default().push(*label);
        }
    }
    SimplicialComplex::from_facets(holders.into_values()).expect("holder lists are nonempty")
}

/// Exact isomorphism test by backtracking over degree-compatible vertex bijections.
///
/// Refuses complexes with more than `limit` vertices (default [`ISOMORPHISM_VERTEX_LIMIT`]).
pub fn isomorphic(a: &SimplicialComplex, b: &SimplicialComplex, limit: Option<usize>) -> Result<bool> {
    let limit = limit.unwrap_or(ISOMORPHISM_VERTEX_LIMIT);
    let n = a.vertices.len().max(b.vertices.len());
    if n > limit {
        return Err(Error::Guard { what: "isomorphism search vertex count", size: n, limit });
    }
    if a.vertices.len() != b.vertices.len() || a.f_vector() != b.f_vector() {
        return Ok(false);
    }
    let sig_a = vertex_signatures(a);
    let sig_b = vertex_signatures(b);
    let mut ms_a: Vec<_> = sig_a.values().cloned().collect();
    let mut ms_b: Vec<_> = sig_b.values().cloned().collect();
    ms_a.sort();
    ms_b.sort();
    if ms_a != ms_b {
        return Ok(false);
    }

    // Assign the vertices of `a` with the rarest signature first.
    let mut order: Vec<Vertex> = a.vertices.iter().copied().collect();
    order.sort_by_key(|v| (ms_a.iter().filter(|s| **s == sig_a[v]).count(), *v));
    let mut faces_at: HashMap<Vertex, Vec<&Face>> = HashMap::new();
    for f in &a.faces {
        for &v in f {
            faces_at.entry(v).or_default().push(f);
        }
    }
    let mut search = IsoSearch {
        b,
        order: &order,
        sig_a: &sig_a,
        sig_b: &sig_b,
        faces_at: &faces_at,
        map: HashMap::new(),
        used: HashSet::new(),
    };
    Ok(search.extend(0))
}

fn vertex_signatures(k: &SimplicialComplex) -> HashMap<Vertex, Vec<usize>> {
    let d = (k.dim() + 1).max(0) as usize;
    let mut sig: HashMap<Vertex, Vec<usize>> = k.vertices.iter().map(|&v| (v, vec![0; d])).collect();
    for f in &k.faces {
        for v in f {
            sig.get_mut(v).unwrap()[f.len() - 1] += 1;
        }
    }
    sig
}

struct IsoSearch<'a> {
    b: &'a SimplicialComplex,
    order: &'a [Vertex],
    sig_a: &'a HashMap<Vertex, Vec<usize>>,
    sig_b: &'a HashMap<Vertex, Vec<usize>>,
    faces_at: &'a HashMap<Vertex, Vec<&'a Face>>,
    map: HashMap<Vertex, Vertex>,
    used: HashSet<Vertex>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let candidates: Vec<Vertex> = self
            .b
            .vertices
            .iter()
            .copied()
            .filter(|w| !self.used.contains(w) && self.sig_b[w] == self.sig_a[&v])
            .collect();
        for w in candidates {
            self.map.insert(v, w);
            self.used.insert(w);
            if self.consistent(v) && self.extend(depth + 1) {
                return true;
            }
            self.map.remove(&v);
            self.used.remove(&w);
        }
        false
    }

    /// Every face through `v` whose vertices are all mapped must land on a face of `b`.
    fn consistent(&self, v: Vertex) -> bool {
        self.faces_at[&v].iter().all(|f| {
            let image: Option<Vec<Vertex>> = f.iter().map(|u| self.map.get(u).copied()).collect();
            image.is_none_or(|img| self.b.contains(&canonical(img)))
        })
    }
}
