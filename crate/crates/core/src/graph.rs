//! Finite simple graphs on vertices `0..n` and their standard families.

use std::fmt;

use crate::{Error, Result};

/// Graphs are stored as adjacency bitmasks, so the vertex count is capped at 64.
pub const MAX_VERTICES: usize = 64;

/// A set of graph vertices as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut sub = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = VertexSet(sub);
            sub = sub.wrapping_sub(mask) & mask;
            done = sub == 0;
            Some(out)
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite simple undirected graph. Connectivity is not required.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::input(format!("graphs are limited to {MAX_VERTICES} vertices, got {n}")));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u}, {v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            if adj[u].contains(v) {
                return Err(Error::input(format!("duplicate edge ({u}, {v})")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]));
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen.len() == self.n
    }

    /// `CN(A)`, the vertices adjacent to every member of `A`. `CN(∅)` is the whole vertex set.
    pub fn cn(&self, a: VertexSet) -> VertexSet {
        a.iter().fold(self.vertex_set(), |acc, v| acc.intersection(self.adj[v]))
    }

    /// Range-checked form of [`Graph::cn`].
    pub fn common_neighbors(&self, a: &[usize]) -> Result<VertexSet> {
        Ok(self.cn(self.checked_set(a)?))
    }

    /// Whether every `a ∈ A`, `b ∈ B` are adjacent. `A` and `B` must be disjoint.
    pub fn is_complete_bipartite_between(&self, a: &[usize], b: &[usize]) -> Result<bool> {
        let (a, b) = (self.checked_set(a)?, self.checked_set(b)?);
        if !a.intersection(b).is_empty() {
            return Err(Error::input(format!("sides {a:?} and {b:?} overlap")));
        }
        Ok(b.is_subset(self.cn(a)))
    }

    fn checked_set(&self, vs: &[usize]) -> Result<VertexSet> {
        if let Some(v) = vs.iter().find(|&&v| v >= self.n) {
            return Err(Error::input(format!("vertex {v} out of range 0..{}", self.n)));
        }
        Ok(vs.iter().copied().collect())
    }

    /// Canonical textual descriptor `n<count>:<u>-<v>,…`.
    pub fn descriptor(&self) -> String {
        let edges: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("n{}:{}", self.n, edges.join(","))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.descriptor())
    }
}

/// `G⁺`: a new vertex `n` adjacent to every old vertex.
pub fn add_cone_vertex(g: &Graph) -> Result<Graph> {
    let n = g.n();
    Graph::new(n + 1, g.edges().into_iter().chain((0..n).map(|v| (v, n))))
}

/// `G⁺ᵏ`.
pub fn cone_k(g: &Graph, k: usize) -> Result<Graph> {
    (0..k).try_fold(g.clone(), |acc, _| add_cone_vertex(&acc))
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path_graph(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// The `k`-subsets of `{1, …, n}` in colexicographic order, as bitmasks with bit `i-1` for
/// element `i`. Colex order coincides with the numeric order of the masks.
pub fn kneser_vertices(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k > n || n >= 64 {
        return out;
    }
    if k == 0 {
        return vec![0];
    }
    // Gosper's hack enumerates same-popcount masks in increasing order.
    let mut s: u64 = (1 << k) - 1;
    while s < 1 << n {
        out.push(s);
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

/// Kneser graph `KG(n, k)`: vertices are the `k`-subsets of `{1..n}` in colex order, edges join
/// disjoint subsets.
pub fn kneser_graph(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k {
        return Err(Error::input(format!("Kneser graph needs n >= 2k >= 2, got n={n}, k={k}")));
    }
    let verts = kneser_vertices(n, k);
    if verts.len() > MAX_VERTICES {
        return Err(Error::input(format!("KG({n},{k}) has {} vertices, above {MAX_VERTICES}", verts.len())));
    }
    let mut edges = Vec::new();
    for (i, a) in verts.iter().enumerate() {
        for (j, b) in verts.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(verts.len(), edges)
}
