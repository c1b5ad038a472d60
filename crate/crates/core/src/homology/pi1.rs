//! A one-sided test for simple connectivity.
//!
//! The edge-path group is presented with one generator per edge outside a BFS spanning tree and
//! one relator per triangle, then simplified by Tietze eliminations (a generator occurring exactly
//! once in some relator is solved for and substituted away). Reaching zero generators proves the
//! group trivial; anything else is reported as unknown.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::simplicial::{SimplicialComplex, Vertex};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pi1Status {
    Trivial,
    Unknown,
}

/// Total relator length beyond which simplification gives up.
const MAX_TOTAL_LENGTH: usize = 200_000;

/// Letters are `±(g + 1)` for generator `g`.
type Word = Vec<i32>;

pub fn pi1_trivial_heuristic(k: &SimplicialComplex) -> Result<Pi1Status> {
    let verts: Vec<Vertex> = k.vertices().iter().copied().collect();
    if verts.is_empty() {
        return Err(Error::input("fundamental group of the empty complex is undefined"));
    }
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = verts.iter().map(|&v| (v, Vec::new())).collect();
    let edges = k.faces_of_dim(1);
    for e in &edges {
        adj.get_mut(&e[0]).unwrap().push(e[1]);
        adj.get_mut(&e[1]).unwrap().push(e[0]);
    }

    let mut tree: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    let mut seen: BTreeSet<Vertex> = [verts[0]].into();
    let mut queue = VecDeque::from([verts[0]]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[&u] {
            if seen.insert(w) {
                tree.insert((u.min(w), u.max(w)));
                queue.push_back(w);
            }
        }
    }
    if seen.len() != verts.len() {
        return Err(Error::input("fundamental group test needs a connected complex"));
    }

    let generator: BTreeMap<(Vertex, Vertex), i32> = edges
        .iter()
        .map(|e| (e[0], e[1]))
        .filter(|e| !tree.contains(e))
        .enumerate()
        .map(|(i, e)| (e, i as i32 + 1))
        .collect();
    if generator.is_empty() {
        return Ok(Pi1Status::Trivial);
    }
    let letter = |a: Vertex, b: Vertex| -> Option<i32> {
        if a < b {
            generator.get(&(a, b)).copied()
        } else {
            generator.get(&(b, a)).map(|g| -g)
        }
    };
    let relators: Vec<Word> = k
        .faces_of_dim(2)
        .iter()
        .map(|t| [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])].iter().filter_map(|&(a, b)| letter(a, b)).collect())
        .collect();

    Ok(simplify(generator.len(), relators))
}

fn simplify(num_generators: usize, relators: Vec<Word>) -> Pi1Status {
    let mut alive = num_generators;
    let mut rels: Vec<Word> = relators.into_iter().map(cyclic_reduce).filter(|r| !r.is_empty()).collect();
    loop {
        if alive == 0 {
            return Pi1Status::Trivial;
        }
        let Some((ri, pos)) = find_eliminable(&rels) else {
            return Pi1Status::Unknown;
        };
        let rel = rels.swap_remove(ri);
        // rotate so the eliminated letter comes first: x^e · w = 1
        let rotated: Word = rel[pos..].iter().chain(&rel[..pos]).copied().collect();
        let x = rotated[0];
        let w = &rotated[1..];
        // x = w⁻¹, and x⁻¹ = w
        let solution: Word = w.iter().rev().map(|l| -l).collect();
        let inverse: Word = w.to_vec();
        let g = x.abs();
        let mut total = 0;
        for r in rels.iter_mut() {
            if !r.iter().any(|l| l.abs() == g) {
                total += r.len();
                continue;
            }
            let mut out = Vec::with_capacity(r.len());
            for &l in r.iter() {
                if l == x {
                    out.extend_from_slice(&solution);
                } else if l == -x {
                    out.extend_from_slice(&inverse);
                } else {
                    out.push(l);
                }
            }
            *r = cyclic_reduce(out);
            total += r.len();
        }
        if total > MAX_TOTAL_LENGTH {
            return Pi1Status::Unknown;
        }
        rels.retain(|r| !r.is_empty());
        alive -= 1;
    }
}

/// Shortest relator containing some generator exactly once; returns the relator index and the
/// position of that letter.
fn find_eliminable(rels: &[Word]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (i, r) in rels.iter().enumerate() {
        if best.is_some_and(|(len, _, _)| r.len() >= len) {
            continue;
        }
        let mut counts: BTreeMap<i32, usize> = BTreeMap::new();
        for l in r {
            *counts.entry(l.abs()).or_default() += 1;
        }
        if let Some(pos) = r.iter().position(|l| counts[&l.abs()] == 1) {
            best = Some((r.len(), i, pos));
        }
    }
    best.map(|(_, i, p)| (i, p))
}

fn free_reduce(w: Word) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclic_reduce(w: Word) -> Word {
    let mut w = free_reduce(w);
    let mut start = 0;
    let mut end = w.len();
    while end - start >= 2 && w[start] == -w[end - 1] {
        start += 1;
        end -= 1;
    }
    w.truncate(end);
    w.drain(..start);
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::suspension;

    #[test]
    fn spheres() {
        let tetra = SimplicialComplex::from_facets([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert_eq!(pi1_trivial_heuristic(&tetra).unwrap(), Pi1Status::Trivial);
        let circle = SimplicialComplex::from_facets([[0, 1], [1, 2], [0, 2]]).unwrap();
        assert_eq!(pi1_trivial_heuristic(&circle).unwrap(), Pi1Status::Unknown);
        let point = SimplicialComplex::from_facets([[4]]).unwrap();
        assert_eq!(pi1_trivial_heuristic(&point).unwrap(), Pi1Status::Trivial);
        let (s2, _, _) = suspension(&circle);
        assert_eq!(pi1_trivial_heuristic(&s2).unwrap(), Pi1Status::Trivial);
    }

    #[test]
    fn disconnected_is_an_error() {
        let k = SimplicialComplex::from_facets([[0], [1]]).unwrap();
        assert!(pi1_trivial_heuristic(&k).is_err());
        assert!(pi1_trivial_heuristic(&SimplicialComplex::empty()).is_err());
    }

    #[test]
    fn projective_plane_is_not_reported_trivial() {
        let rp2 = crate::homology::examples::projective_plane();
        assert_eq!(pi1_trivial_heuristic(&rp2).unwrap(), Pi1Status::Unknown);
    }

    #[test]
    fn word_reduction() {
        assert_eq!(cyclic_reduce(vec![1, 2, -2, 3, -1]), vec![3]);
        assert_eq!(cyclic_reduce(vec![1, -1]), Vec::<i32>::new());
    }
}
