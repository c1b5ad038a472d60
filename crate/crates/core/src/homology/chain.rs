use std::collections::HashMap;

use crate::homology::snf::SparseMatrix;
use crate::simplicial::{Face, SimplicialComplex};
use crate::{Error, Result};

/// Simplicial chain complex with lexicographically ordered bases.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    /// `bases[k]` lists the `k`-faces.
    pub bases: Vec<Vec<Face>>,
    /// `boundary[k - 1]` is `∂_k : C_k → C_{k-1}` for `k = 1..=dim`.
    pub boundary: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn dim(&self) -> usize {
        self.bases.len() - 1
    }

    /// `∂_k`, for `k ≥ 1`.
    pub fn d(&self, k: usize) -> &SparseMatrix {
        &self.boundary[k - 1]
    }

    /// Whether `∂_{k} ∘ ∂_{k+1} = 0` for every `k`.
    pub fn squares_to_zero(&self) -> bool {
        self.boundary.windows(2).all(|w| w[0].mul(&w[1]).iter().flatten().all(|&x| x == 0))
    }
}

/// Boundary matrices of a nonempty complex. The face obtained by dropping the vertex in
/// position `i` carries sign `(-1)^i`.
pub fn boundary_matrices(k: &SimplicialComplex) -> Result<ChainComplex> {
    if k.is_empty() {
        return Err(Error::input("the empty complex has no chain complex"));
    }
    let dim = k.dim() as usize;
    let bases: Vec<Vec<Face>> = (0..=dim).map(|d| k.faces_of_dim(d)).collect();
    let mut boundary = Vec::with_capacity(dim);
    for d in 1..=dim {
        let row_of: HashMap<&Face, usize> = bases[d - 1].iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut m = SparseMatrix::zeros(bases[d - 1].len(), bases[d].len());
        for (j, face) in bases[d].iter().enumerate() {
            let mut col: Vec<(usize, i64)> = (0..face.len())
                .map(|i| {
                    let mut sub = face.clone();
                    sub.remove(i);
                    (row_of[&sub], if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            m.cols[j] = col;
        }
        boundary.push(m);
    }
    let cc = ChainComplex { bases, boundary };
    debug_assert!(cc.squares_to_zero());
    Ok(cc)
}
