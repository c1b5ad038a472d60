//! Independent oracles. Nothing here calls into the library's homology, builders or coloring
//! code; complexes are rebuilt from definitions with plain loops over subsets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use boxcx::Graph;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub type FaceSet = BTreeSet<Vec<u32>>;

/// Rank over ℚ by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for j in c + 1..ncols {
                let v = (&m[rank][c] * &m[r][j] - &m[r][c] * &m[rank][j]) / &prev;
                m[r][j] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].abs();
        rank += 1;
    }
    rank
}

/// Rank over GF(2).
pub fn gf2_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<bool>> = rows.iter().map(|r| r.iter().map(|&x| x.rem_euclid(2) == 1).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c]) else { continue };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] {
                row.iter_mut().zip(&pivot).for_each(|(x, &p)| *x ^= p);
            }
        }
        rank += 1;
    }
    rank
}

/// Exact chromatic number by trying every assignment with `k = 1, 2, …` colors.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let edges = g.edges();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
            // odometer increment
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    n
}

fn subsets(items: &[u32]) -> impl Iterator<Item = Vec<u32>> + '_ {
    (1u64..1 << items.len())
        .map(move |mask| (0..items.len()).filter(|i| mask >> i & 1 == 1).map(|i| items[i]).collect())
}

fn common_neighbors(g: &Graph, a: &[u32]) -> Vec<u32> {
    (0..g.n() as u32).filter(|&w| a.iter().all(|&v| g.has_edge(v as usize, w as usize))).collect()
}

/// `N(G)`: nonempty vertex sets with a common neighbor.
pub fn neighborhood_faces(g: &Graph) -> FaceSet {
    let all: Vec<u32> = (0..g.n() as u32).collect();
    subsets(&all).filter(|s| !common_neighbors(g, s).is_empty()).collect()
}

/// Box complex faces on labels `v` (shore 0) and `n + v` (shore 1). With `require_cn` this is
/// `B(G)`, otherwise `B₀(G)`.
pub fn box_faces(g: &Graph, require_cn: bool) -> FaceSet {
    let n = g.n() as u32;
    let all: Vec<u32> = (0..2 * n).collect();
    subsets(&all)
        .filter(|s| {
            let a: Vec<u32> = s.iter().copied().filter(|&x| x < n).collect();
            let b: Vec<u32> = s.iter().copied().filter(|&x| x >= n).map(|x| x - n).collect();
            if a.iter().any(|x| b.contains(x)) {
                return false;
            }
            let complete = a.iter().all(|&u| b.iter().all(|&v| g.has_edge(u as usize, v as usize)));
            complete && (!require_cn || (!common_neighbors(g, &a).is_empty() && !common_neighbors(g, &b).is_empty()))
        })
        .collect()
}

/// Dense boundary matrix from `k`-faces to `(k-1)`-faces; for `k = 0` the augmentation.
pub fn boundary(faces: &FaceSet, k: usize) -> Vec<Vec<i64>> {
    let cols: Vec<&Vec<u32>> = faces.iter().filter(|f| f.len() == k + 1).collect();
    if k == 0 {
        return vec![vec![1; cols.len()]];
    }
    let rows: Vec<&Vec<u32>> = faces.iter().filter(|f| f.len() == k).collect();
    let mut m = vec![vec![0i64; cols.len()]; rows.len()];
    for (j, f) in cols.iter().enumerate() {
        for drop in 0..f.len() {
            let mut g = (*f).clone();
            g.remove(drop);
            let i = rows.iter().position(|r| **r == g).expect("closed face set");
            m[i][j] = if drop % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

fn dimension(faces: &FaceSet) -> usize {
    faces.iter().map(Vec::len).max().unwrap_or(0)
}

fn reduced_ranks(faces: &FaceSet, rank: fn(&[Vec<i64>]) -> usize) -> Vec<usize> {
    if faces.is_empty() {
        return vec![];
    }
    let top = dimension(faces) - 1;
    let ranks: Vec<usize> = (0..=top + 1).map(|k| rank(&boundary(faces, k))).collect();
    (0..=top)
        .map(|k| {
            let ck = faces.iter().filter(|f| f.len() == k + 1).count();
            ck - ranks[k] - ranks[k + 1]
        })
        .collect()
}

/// Reduced Betti numbers over ℚ, degrees `0..=dim`.
pub fn betti(faces: &FaceSet) -> Vec<usize> {
    reduced_ranks(faces, bareiss_rank)
}

/// Reduced Betti numbers over GF(2), degrees `0..=dim`.
pub fn betti_mod2(faces: &FaceSet) -> Vec<usize> {
    reduced_ranks(faces, gf2_rank)
}

/// Pads with zeros to `len`.
pub fn padded(mut v: Vec<usize>, len: usize) -> Vec<usize> {
    v.resize(v.len().max(len), 0);
    while v.len() > len && v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn face_set(k: &boxcx::SimplicialComplex) -> FaceSet {
    k.faces().iter().cloned().collect()
}
