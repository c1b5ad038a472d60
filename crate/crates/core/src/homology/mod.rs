//! Reduced integer homology of simplicial complexes.

mod chain;
mod collapse;
mod pi1;
pub mod snf;

use std::fmt;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::simplicial::SimplicialComplex;

pub use chain::{boundary_matrices, ChainComplex};
pub use collapse::collapse_reduce;
pub use pi1::{pi1_trivial_heuristic, Pi1Status};
pub use snf::{smith_normal_form, SnfResult, SparseMatrix};

/// Above this many faces [`reduced_homology`] collapses the complex before eliminating.
pub const COLLAPSE_THRESHOLD: usize = 64;

/// Reduced homology in one degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimHomology {
    pub k: usize,
    pub betti: usize,
    /// Invariant factors ≥ 2, each dividing the next.
    pub torsion: Vec<u64>,
}

impl DimHomology {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// `H̃_k` for `k = 0..=dim`. Equality compares groups, so trailing zero degrees are ignored.
#[derive(Clone, Debug, Default, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub dims: Vec<DimHomology>,
}

impl PartialEq for HomologyProfile {
    fn eq(&self, other: &Self) -> bool {
        self.significant() == other.significant()
    }
}

impl HomologyProfile {
    fn significant(&self) -> &[DimHomology] {
        let end = self.dims.iter().rposition(|d| !d.is_zero()).map_or(0, |i| i + 1);
        &self.dims[..end]
    }

    pub fn degree(&self, k: usize) -> DimHomology {
        self.dims.get(k).cloned().unwrap_or(DimHomology { k, ..Default::default() })
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(DimHomology::is_zero)
    }

    pub fn betti(&self) -> Vec<usize> {
        self.dims.iter().map(|d| d.betti).collect()
    }

    /// `Σ (-1)^k betti_k`, which equals `χ(K) - 1` for nonempty `K`.
    pub fn reduced_euler(&self) -> i64 {
        self.dims.iter().map(|d| if d.k % 2 == 0 { d.betti as i64 } else { -(d.betti as i64) }).sum()
    }

    /// Homology of the suspension: degree `k` moves to `k + 1`. The suspension of the empty
    /// complex is the 0-sphere, so `source_is_empty` yields `H̃_0 = ℤ`.
    pub fn suspended(&self, source_is_empty: bool) -> HomologyProfile {
        if source_is_empty {
            return HomologyProfile { dims: vec![DimHomology { k: 0, betti: 1, torsion: vec![] }] };
        }
        let mut dims = vec![DimHomology { k: 0, ..Default::default() }];
        dims.extend(self.dims.iter().map(|d| DimHomology { k: d.k + 1, ..d.clone() }));
        HomologyProfile { dims }
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_empty() {
            return write!(f, "(empty)");
        }
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                write!(f, "  ")?;
            }
            write!(f, "H{}: Z^{}", d.k, d.betti)?;
            for t in &d.torsion {
                write!(f, " + Z/{t}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pipeline {
    /// Eliminate on the boundary matrices of the complex as given.
    Direct,
    /// Collapse free faces first.
    Collapsed,
    /// Collapse only when the complex has more than [`COLLAPSE_THRESHOLD`] faces.
    Auto,
}

/// Reduced integer homology, with `H̃_0` computed against the augmentation. The empty complex
/// gets the empty profile.
pub fn reduced_homology(k: &SimplicialComplex) -> HomologyProfile {
    reduced_homology_with(k, Pipeline::Auto)
}

pub fn reduced_homology_with(k: &SimplicialComplex, pipeline: Pipeline) -> HomologyProfile {
    if k.is_empty() {
        return HomologyProfile::default();
    }
    let collapse = match pipeline {
        Pipeline::Direct => false,
        Pipeline::Collapsed => true,
        Pipeline::Auto => k.num_faces() > COLLAPSE_THRESHOLD,
    };
    let mut profile = if collapse { direct(&collapse_reduce(k)) } else { direct(k) };
    let dim = k.dim() as usize;
    while profile.dims.len() <= dim {
        profile.dims.push(DimHomology { k: profile.dims.len(), ..Default::default() });
    }
    profile
}

fn direct(k: &SimplicialComplex) -> HomologyProfile {
    let cc = boundary_matrices(k).expect("nonempty");
    let dim = cc.dim();
    let snfs: Vec<SnfResult> = cc.boundary.par_iter().map(smith_normal_form).collect();
    // rank of ∂_k for k = 0..=dim+1, with the augmentation as ∂_0
    let rank = |d: usize| -> usize {
        match d {
            0 => 1,
            _ if d > dim => 0,
            _ => snfs[d - 1].rank(),
        }
    };
    let dims = (0..=dim)
        .map(|d| {
            let torsion = if d < dim {
                snfs[d].torsion().map(|t| t.to_u64().expect("torsion coefficient exceeds u64")).collect()
            } else {
                Vec::new()
            };
            DimHomology { k: d, betti: cc.bases[d].len() - rank(d) - rank(d + 1), torsion }
        })
        .collect();
    HomologyProfile { dims }
}

/// Largest `k` with `H̃_i(K) = 0` for all `i ≤ k`: `-2` for the empty complex and `-1` when
/// `H̃_0 ≠ 0`. An acyclic complex reports its dimension, the highest degree where the
/// vanishing is witnessed by the chain complex.
pub fn homological_connectivity(k: &SimplicialComplex) -> i64 {
    connectivity_of(k, &reduced_homology(k))
}

pub(crate) fn connectivity_of(k: &SimplicialComplex, profile: &HomologyProfile) -> i64 {
    if k.is_empty() {
        return -2;
    }
    match profile.dims.iter().position(|d| !d.is_zero()) {
        Some(first) => first as i64 - 1,
        None => k.dim() as i64,
    }
}

/// Complexes with known homology.
pub mod examples {
    use super::*;

    /// The 6-vertex triangulation of the real projective plane.
    pub fn projective_plane() -> SimplicialComplex {
        SimplicialComplex::from_facets([
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 6, 2],
            [2, 3, 5],
            [3, 4, 6],
            [4, 5, 2],
            [5, 6, 3],
            [6, 2, 4],
        ])
        .unwrap()
    }
}
