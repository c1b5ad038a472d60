//! Exact chromatic number by branch and bound.

use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// Default vertex limit for [`chromatic_number`].
pub const CHROMATIC_VERTEX_LIMIT: usize = 20;

/// Exact `χ(G)`.
///
/// A greedy clique gives the lower bound and DSATUR the upper bound; the gap is closed by
/// backtracking k-colorability tests. Graphs with more than [`CHROMATIC_VERTEX_LIMIT`]
/// vertices are refused unless `force` is set.
pub fn chromatic_number(g: &Graph, force: bool) -> Result<usize> {
    if g.n() > CHROMATIC_VERTEX_LIMIT && !force {
        return Err(Error::Guard { what: "chromatic number vertex count", size: g.n(), limit: CHROMATIC_VERTEX_LIMIT });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let lower = greedy_clique(g).len();
    let upper = dsatur(g).into_iter().max().map_or(0, |c| c + 1);
    for k in lower..upper {
        if is_k_colorable(g, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// A maximal clique grown greedily from each vertex; the largest one found.
pub fn greedy_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    for start in 0..g.n() {
        let mut clique = VertexSet::singleton(start);
        let mut cand = g.neighbors(start);
        while !cand.is_empty() {
            // highest degree within the candidate set, ties by label
            let v =
                cand.iter().max_by_key(|&v| (g.neighbors(v).intersection(cand).len(), std::cmp::Reverse(v))).unwrap();
            clique.insert(v);
            cand = cand.intersection(g.neighbors(v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// DSATUR coloring; returns a proper coloring `color[v] ∈ 0..`.
pub fn dsatur(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut seen_colors: Vec<u64> = vec![0; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v].is_none())
            .max_by_key(|&v| (seen_colors[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (!seen_colors[v]).trailing_zeros() as usize;
        color[v] = Some(c);
        for u in g.neighbors(v).iter() {
            seen_colors[u] |= 1 << c;
        }
    }
    color.into_iter().map(|c| c.unwrap()).collect()
}

/// Whether `G` admits a proper coloring with `k` colors.
pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    if g.n() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut color: Vec<Option<usize>> = vec![None; g.n()];
    backtrack(g, k, &mut color, 0, 0)
}

fn backtrack(g: &Graph, k: usize, color: &mut [Option<usize>], colored: usize, used: usize) -> bool {
    if colored == g.n() {
        return true;
    }
    // Branch on the most constrained uncolored vertex.
    let mut best: Option<(usize, u64)> = None;
    for v in (0..g.n()).filter(|&v| color[v].is_none()) {
        let forbidden = g.neighbors(v).iter().filter_map(|u| color[u]).fold(0u64, |m, c| m | 1 << c);
        let sat = forbidden.count_ones();
        if best.is_none_or(|(b, fb)| sat > fb.count_ones() || sat == fb.count_ones() && g.degree(v) > g.degree(b)) {
            best = Some((v, forbidden));
        }
    }
    let (v, forbidden) = best.unwrap();
    // Colors beyond the first unused one are symmetric; try at most one fresh color.
    for c in 0..k.min(used + 1) {
        if forbidden >> c & 1 == 1 {
            continue;
        }
        color[v] = Some(c);
        if backtrack(g, k, color, colored + 1, used.max(c + 1)) {
            return true;
        }
        color[v] = None;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn is_proper(g: &Graph, c: &[usize]) -> bool {
        g.edges().iter().all(|&(u, v)| c[u] != c[v])
    }

    #[test]
    fn known_values() {
        assert_eq!(chromatic_number(&complete_graph(4).unwrap(), false).unwrap(), 4);
        assert_eq!(chromatic_number(&cycle_graph(5).unwrap(), false).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle_graph(6).unwrap(), false).unwrap(), 2);
        assert_eq!(chromatic_number(&kneser_graph(5, 2).unwrap(), false).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::new(3, []).unwrap(), false).unwrap(), 1);
        let c5pp = cone_k(&cycle_graph(5).unwrap(), 2).unwrap();
        assert_eq!(chromatic_number(&c5pp, false).unwrap(), 5);
    }

    #[test]
    fn guard() {
        let big = path_graph(21).unwrap();
        assert!(matches!(chromatic_number(&big, false), Err(Error::Guard { .. })));
        assert_eq!(chromatic_number(&big, true).unwrap(), 2);
    }

    #[test]
    fn dsatur_is_proper() {
        let g = kneser_graph(6, 2).unwrap();
        assert!(is_proper(&g, &dsatur(&g)));
        assert_eq!(greedy_clique(&g).len(), 3);
    }
}
