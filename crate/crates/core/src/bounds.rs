//! Lower bounds for the chromatic number from the connectivity of box complexes.
//!
//! With `ind(X) ≥ conn(X) + 1`, the Lovász bound `χ(G) ≥ ind(B(G)) + 2` gives
//! `χ(G) ≥ conn(B(G)) + 3` and the Sarkaria bound `χ(G) ≥ ind(B₀(G)) + 1` gives
//! `χ(G) ≥ conn(B₀(G)) + 2`. Connectivity is replaced by its homological counterpart, which
//! can overestimate it once `π₁` enters; such reports carry a caveat flag.

use serde::{Deserialize, Serialize};

use crate::builders::{box0_complex, box_complex};
use crate::coloring::chromatic_number;
use crate::graph::Graph;
use crate::homology::{self, pi1_trivial_heuristic, HomologyProfile, Pi1Status};
use crate::simplicial::SimplicialComplex;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lovasz,
    Sarkaria,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub graph: String,
    pub bound: BoundKind,
    pub value: i64,
    /// Set when homological connectivity could exceed homotopy connectivity.
    pub caveat: bool,
    pub connectivity: i64,
    pub evidence: HomologyProfile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundReport {
    /// Attaches the exact chromatic number, subject to the solver's size guard.
    pub fn with_exact_chi(mut self, g: &Graph, force: bool) -> Result<Self> {
        self.exact_chi = Some(chromatic_number(g, force)?);
        Ok(self)
    }

    pub fn with_descriptor(mut self, name: impl Into<String>) -> Self {
        self.graph = name.into();
        self
    }

    /// Whether the report is consistent with its exact value, when both are known.
    pub fn is_sound(&self) -> bool {
        self.caveat || self.exact_chi.is_none_or(|chi| self.value <= chi as i64)
    }
}

/// Homological connectivity of `k` and whether it needs a caveat: it equals homotopy
/// connectivity when it is at most 0, or when `k` is shown simply connected.
fn connectivity_with_caveat(k: &SimplicialComplex) -> (i64, bool, HomologyProfile) {
    let profile = homology::reduced_homology(k);
    let conn = homology::connectivity_of(k, &profile);
    let caveat = conn >= 1 && !matches!(pi1_trivial_heuristic(&homology::collapse_reduce(k)), Ok(Pi1Status::Trivial));
    (conn, caveat, profile)
}

fn report(g: &Graph, bound: BoundKind, k: &SimplicialComplex, offset: i64) -> BoundReport {
    let (conn, caveat, evidence) = connectivity_with_caveat(k);
    let note = if k.is_empty() {
        Some("degenerate input: the complex is empty".to_string())
    } else if evidence.is_acyclic() {
        Some("complex is acyclic; connectivity capped at its dimension".to_string())
    } else {
        None
    };
    BoundReport {
        graph: g.descriptor(),
        bound,
        value: conn + offset,
        caveat,
        connectivity: conn,
        evidence,
        exact_chi: None,
        note,
    }
}

/// `conn(B(G)) + 3`.
pub fn lovasz_bound(g: &Graph) -> BoundReport {
    report(g, BoundKind::Lovasz, box_complex(g).complex(), 3)
}

/// `conn(B₀(G)) + 2`.
pub fn sarkaria_bound(g: &Graph) -> BoundReport {
    report(g, BoundKind::Sarkaria, box0_complex(g).complex(), 2)
}
