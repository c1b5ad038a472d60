//! Test corpora: small graphs up to isomorphism and a few named families.

use std::collections::BTreeMap;

use crate::graph::{complete_graph, cycle_graph, kneser_graph, Graph};

/// Labeled graphs on `n` vertices, indexed by an edge mask over the pairs `(u, v)`, `u < v`, in
/// lexicographic order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 64, "too many vertices to enumerate all graphs");
    (0..1u64 << pairs.len()).map(move |mask| {
        Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
            .expect("pairs are valid edges")
    })
}

/// Smallest edge mask over all relabelings; equal for isomorphic graphs.
fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let mut best = u64::MAX;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut code = 0u64;
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(p[u], p[v]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
    });
    best
}

fn permute(items: &mut [usize], start: usize, f: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        f(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, f);
        items.swap(start, i);
    }
}

/// One representative of every isomorphism class of connected graphs on `1..=max_n` vertices,
/// ordered by vertex count and then by canonical code. For `max_n = 5` there are 31 classes.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut classes: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in labeled_graphs(n).filter(Graph::is_connected) {
            classes.entry(canonical_code(&g)).or_insert(g);
        }
        out.extend(classes.into_values());
    }
    out
}

/// Named graphs with known chromatic numbers: `K1..K5`, `C5` and the Petersen graph.
pub fn named_graphs() -> Vec<(String, Graph)> {
    let mut v: Vec<(String, Graph)> = (1..=5).map(|n| (format!("K{n}"), complete_graph(n).unwrap())).collect();
    v.push(("C5".into(), cycle_graph(5).unwrap()));
    v.push(("KG(5,2)".into(), kneser_graph(5, 2).unwrap()));
    v
}
