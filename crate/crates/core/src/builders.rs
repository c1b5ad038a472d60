//! Complexes built from graphs, and the graph built from a free Z2-complex.
//!
//! Box-type complexes label the copy of graph vertex `v` on shore 0 by `v` and on shore 1 by
//! `n + v`; the cone apexes of `B_C(G)` are `2n` and `2n + 1`.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::graph::{Graph, VertexSet};
use crate::simplicial::{Face, SimplicialComplex, Vertex};
use crate::z2::{Involution, Z2Complex};
use crate::{Error, Result};

/// `N(G)`: all nonempty vertex sets with a common neighbor.
pub fn neighborhood_complex(g: &Graph) -> SimplicialComplex {
    let facets = (0..g.n()).map(|v| g.neighbors(v)).filter(|s| !s.is_empty()).map(to_face);
    SimplicialComplex::from_facets(facets).expect("neighborhoods are nonempty")
}

fn to_face(s: VertexSet) -> Face {
    s.iter().map(|v| v as Vertex).collect()
}

/// Faces of `N(G)` as vertex masks, in increasing mask order.
fn neighborhood_faces(g: &Graph) -> Vec<VertexSet> {
    let mut seen: HashSet<VertexSet> = HashSet::new();
    for v in 0..g.n() {
        seen.extend(g.neighbors(v).subsets().filter(|s| !s.is_empty()));
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoxKind {
    /// `B(G)`
    Box,
    /// `B₀(G)`
    Box0,
    /// `B_C(G)`, the box complex with cones over both shores.
    ConesOverShores,
}

/// What a vertex of a box-type complex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxLabel {
    Shore { vertex: usize, shore: u8 },
    ApexX,
    ApexY,
}

/// A box-type Z2-complex together with the graph size needed to decode its labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxComplex {
    pub kind: BoxKind,
    pub graph_order: usize,
    pub z2: Z2Complex,
}

impl BoxComplex {
    pub fn complex(&self) -> &SimplicialComplex {
        self.z2.complex()
    }

    pub fn label(&self, id: Vertex) -> BoxLabel {
        let n = self.graph_order;
        let id = id as usize;
        match id {
            _ if id < n => BoxLabel::Shore { vertex: id, shore: 0 },
            _ if id < 2 * n => BoxLabel::Shore { vertex: id - n, shore: 1 },
            _ if id == 2 * n => BoxLabel::ApexX,
            _ => BoxLabel::ApexY,
        }
    }

    /// Decodes a face into its shores `(A, B)`, ignoring apexes.
    pub fn decode(&self, face: &[Vertex]) -> (VertexSet, VertexSet) {
        let mut a = VertexSet::EMPTY;
        let mut b = VertexSet::EMPTY;
        for &v in face {
            match self.label(v) {
                BoxLabel::Shore { vertex, shore: 0 } => a.insert(vertex),
                BoxLabel::Shore { vertex, .. } => b.insert(vertex),
                _ => {}
            }
        }
        (a, b)
    }
}

fn shore_face(n: usize, a: VertexSet, b: VertexSet) -> Face {
    a.iter().chain(b.iter().map(|v| v + n)).map(|v| v as Vertex).collect()
}

fn box_involution(n: usize, k: &SimplicialComplex) -> Involution {
    let map: BTreeMap<Vertex, Vertex> = k
        .vertices()
        .iter()
        .map(|&v| {
            let v_us = v as usize;
            let w = if v_us < n {
                v_us + n
            } else if v_us < 2 * n {
                v_us - n
            } else {
                // apexes 2n and 2n + 1
                v_us ^ 1
            };
            (v, w as Vertex)
        })
        .collect();
    Involution::new(map).expect("shore swap is an involution")
}

fn finish(kind: BoxKind, n: usize, faces: HashSet<Face>) -> BoxComplex {
    let k = SimplicialComplex::from_closed_faces(faces);
    let action = box_involution(n, &k);
    let z2 = Z2Complex::new(k, action).unwrap_or_else(|e| panic!("internal error: {kind:?} is not free: {e}"));
    BoxComplex { kind, graph_order: n, z2 }
}

/// `B(G)`: faces `A ⊎ B` with `A ∩ B = ∅`, `G[A,B]` complete bipartite and
/// `CN(A) ≠ ∅ ≠ CN(B)`.
///
/// For nonempty `A` the admissible `B` are exactly the subsets of `CN(A)`, so faces are
/// enumerated from the faces of `N(G)`.
pub fn box_complex(g: &Graph) -> BoxComplex {
    let n = g.n();
    let mut faces = HashSet::new();
    for a in neighborhood_faces(g) {
        faces.insert(shore_face(n, VertexSet::EMPTY, a));
        for b in g.cn(a).subsets() {
            faces.insert(shore_face(n, a, b));
        }
    }
    finish(BoxKind::Box, n, faces)
}

/// `B₀(G)`: faces `A ⊎ B` with `A ∩ B = ∅` and `G[A,B]` complete bipartite.
pub fn box0_complex(g: &Graph) -> BoxComplex {
    let n = g.n();
    let mut faces = HashSet::new();
    for a in g.vertex_set().subsets() {
        for b in g.cn(a).subsets() {
            if !(a.is_empty() && b.is_empty()) {
                faces.insert(shore_face(n, a, b));
            }
        }
    }
    finish(BoxKind::Box0, n, faces)
}

/// `B_C(G)`: `B(G)` with a cone over each shore, apexes `x = 2n` and `y = 2n + 1`.
pub fn cones_over_shores_complex(g: &Graph) -> BoxComplex {
    let n = g.n();
    let (x, y) = (2 * n as Vertex, 2 * n as Vertex + 1);
    let mut faces = box_complex(g).z2.complex().faces().clone();
    faces.insert(vec![x]);
    faces.insert(vec![y]);
    for a in neighborhood_faces(g) {
        let mut fx = shore_face(n, a, VertexSet::EMPTY);
        fx.push(x);
        faces.insert(fx);
        let mut fy = shore_face(n, VertexSet::EMPTY, a);
        fy.push(y);
        faces.insert(fy);
    }
    finish(BoxKind::ConesOverShores, n, faces)
}

/// The shore subcomplex of `B(G)`, relabeled to graph vertices. Only complexes produced by
/// [`box_complex`] are accepted.
pub fn shore_subcomplex(b: &BoxComplex, shore: u8) -> Result<SimplicialComplex> {
    if b.kind != BoxKind::Box {
        return Err(Error::input(format!("shore subcomplex needs a B(G) complex, got {:?}", b.kind)));
    }
    if shore > 1 {
        return Err(Error::input(format!("shore must be 0 or 1, got {shore}")));
    }
    let n = b.graph_order as Vertex;
    let lo = shore as Vertex * n;
    let keep = b.complex().vertices().iter().copied().filter(|v| (lo..lo + n).contains(v)).collect();
    Ok(b.complex().induced(&keep).relabel(|v| v - lo))
}

/// Order complex of the cell poset of `Hom(K₂, G)` with the swap action.
#[derive(Clone, Debug)]
pub struct HomOrderComplex {
    pub z2: Z2Complex,
    /// `elements[i]` is the cell `(A, B)` that became vertex `i`.
    pub elements: Vec<(VertexSet, VertexSet)>,
}

/// Poset of pairs `(A, B)` of nonempty disjoint vertex sets with `G[A,B]` complete bipartite,
/// ordered componentwise; returns its order complex with `(A, B) ↦ (B, A)`.
pub fn hom_k2_order_complex(g: &Graph) -> HomOrderComplex {
    let mut elements = Vec::new();
    for a in g.vertex_set().subsets().filter(|a| !a.is_empty()) {
        for b in g.cn(a).subsets().filter(|b| !b.is_empty()) {
            elements.push((a, b));
        }
    }
    elements.sort_by_key(|(a, b)| (a.len() + b.len(), *a, *b));
    let index: HashMap<(VertexSet, VertexSet), Vertex> =
        elements.iter().enumerate().map(|(i, &e)| (e, i as Vertex)).collect();

    let below =
        |x: (VertexSet, VertexSet), y: (VertexSet, VertexSet)| x != y && x.0.is_subset(y.0) && x.1.is_subset(y.1);
    let up: Vec<Vec<usize>> = (0..elements.len())
        .map(|i| (0..elements.len()).filter(|&j| below(elements[i], elements[j])).collect())
        .collect();

    let mut faces = HashSet::new();
    let mut chain = Vec::new();
    for i in 0..elements.len() {
        collect_chains(i, &up, &mut chain, &mut faces);
    }
    let k = SimplicialComplex::from_closed_faces(faces);
    let map = elements.iter().enumerate().map(|(i, &(a, b))| (i as Vertex, index[&(b, a)])).collect();
    let z2 = Z2Complex::new(k, Involution::new(map).expect("swap is an involution"))
        .unwrap_or_else(|e| panic!("internal error: Hom order complex is not free: {e}"));
    HomOrderComplex { z2, elements }
}

fn collect_chains(top: usize, up: &[Vec<usize>], chain: &mut Vec<Vertex>, out: &mut HashSet<Face>) {
    chain.push(top as Vertex);
    out.insert(chain.clone());
    for &next in &up[top] {
        collect_chains(next, up, chain, out);
    }
    chain.pop();
}

/// `G_K`: vertex `i` is the `i`-th smallest vertex of `K`; `x ~ y` iff `ν(x) = y`,
/// `{x, ν(y)} ∈ K` or `{y, ν(x)} ∈ K`.
pub fn graph_from_z2_complex(z: &Z2Complex) -> Result<Graph> {
    let verts: Vec<Vertex> = z.complex().vertices().iter().copied().collect();
    let nu = z.action();
    let k = z.complex();
    let pair = |a: Vertex, b: Vertex| {
        if a < b {
            vec![a, b]
        } else if a > b {
            vec![b, a]
        } else {
            vec![a]
        }
    };
    let mut edges = Vec::new();
    for (i, &x) in verts.iter().enumerate() {
        for (j, &y) in verts.iter().enumerate().skip(i + 1) {
            if nu.apply(x) == y || k.contains(&pair(x, nu.apply(y))) || k.contains(&pair(y, nu.apply(x))) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(verts.len(), edges)
}
