//! Homological checks of the equivalences between the graph complexes.
//!
//! Each check compares reduced homology (Betti numbers and torsion) and, where useful, Euler
//! characteristics. Passing means the data is consistent with a homotopy equivalence; it is not
//! a proof of one.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::builders::{
    box0_complex, box_complex, cones_over_shores_complex, graph_from_z2_complex, hom_k2_order_complex,
    neighborhood_complex,
};
use crate::coloring::{chromatic_number, CHROMATIC_VERTEX_LIMIT};
use crate::corpus::{connected_graphs, labeled_graphs, named_graphs};
use crate::graph::{add_cone_vertex, Graph};
use crate::homology::{reduced_homology, HomologyProfile};
use crate::simplicial::{isomorphic, nerve, SimplicialComplex, Vertex};
use crate::z2::{examples, Z2Complex};
use crate::{Error, Result};

/// Vertex limit for [`neighborhood_realizability_search`].
pub const SEARCH_VERTEX_LIMIT: usize = 6;

/// One side of a comparison.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<HomologyProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<i64>,
}

impl Evidence {
    fn of(k: &SimplicialComplex) -> Self {
        Evidence { profile: Some(reduced_homology(k)), euler: Some(k.euler_characteristic()), value: None }
    }

    fn value(v: i64) -> Self {
        Evidence { value: Some(v), ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub label: String,
    pub expected: Evidence,
    pub observed: Evidence,
    pub matched: bool,
}

impl Comparison {
    fn new(label: impl Into<String>, expected: Evidence, observed: Evidence) -> Self {
        let matched = expected == observed;
        Comparison { label: label.into(), expected, observed, matched }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationOutcome {
    pub check: String,
    pub input: String,
    pub passed: bool,
    pub comparisons: Vec<Comparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationOutcome {
    fn new(check: &str, input: String, comparisons: Vec<Comparison>) -> Self {
        let passed = comparisons.iter().all(|c| c.matched);
        VerificationOutcome { check: check.into(), input, passed, comparisons, note: None }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn named(mut self, input: &str) -> Self {
        self.input = input.into();
        self
    }
}

/// `B₀(G)` against the suspension of `B(G)`: `H̃_k(B₀) ≅ H̃_{k-1}(B)` and
/// `χ(B₀) = 2 - χ(B)`.
pub fn verify_suspension_relation(g: &Graph) -> VerificationOutcome {
    let b = box_complex(g);
    let b0 = box0_complex(g);
    let bk = b.complex();
    let expected = Evidence {
        profile: Some(reduced_homology(bk).suspended(bk.is_empty())),
        euler: Some(2 - bk.euler_characteristic()),
        value: None,
    };
    let mut comparisons = vec![Comparison::new("B0(G) vs susp B(G)", expected, Evidence::of(b0.complex()))];
    // B_C(G) sits between the two and must agree as well.
    let bc = cones_over_shores_complex(g);
    comparisons.push(Comparison::new("B_C(G) vs B0(G)", Evidence::of(b0.complex()), Evidence::of(bc.complex())));
    VerificationOutcome::new("suspension", g.descriptor(), comparisons)
}

/// `N(G)` against `B(G)`.
pub fn verify_shore_retract(g: &Graph) -> VerificationOutcome {
    let n = neighborhood_complex(g);
    let b = box_complex(g);
    let cmp = Comparison::new(
        "N(G) vs B(G)",
        Evidence { profile: Some(reduced_homology(&n)), ..Default::default() },
        Evidence { profile: Some(reduced_homology(b.complex())), ..Default::default() },
    );
    VerificationOutcome::new("shore", g.descriptor(), vec![cmp])
}

/// `χ(B(G))` is even, checked directly and through the pairing of faces into ν-orbits.
pub fn verify_even_euler(g: &Graph) -> Result<VerificationOutcome> {
    if g.num_edges() == 0 {
        return Err(Error::input("Euler parity check needs a graph with at least one edge"));
    }
    let b = box_complex(g);
    let k = b.complex();
    let chi = k.euler_characteristic();
    let orbits = b.z2.face_orbits();
    let paired = orbits.iter().all(|(f, g)| f != g && f.len() == g.len()) && 2 * orbits.len() == k.num_faces();
    // each orbit contributes ±2
    let orbit_chi: i64 = orbits.iter().map(|(f, _)| if f.len() % 2 == 1 { 2 } else { -2 }).sum();
    let comparisons = vec![
        Comparison::new("chi(B(G)) mod 2", Evidence::value(0), Evidence::value(chi.rem_euclid(2))),
        Comparison::new("faces pair into free orbits", Evidence::value(1), Evidence::value(paired as i64)),
        Comparison::new("chi from orbits", Evidence::value(chi), Evidence::value(orbit_chi)),
    ];
    Ok(VerificationOutcome::new("euler", g.descriptor(), comparisons))
}

fn z2_descriptor(z: &Z2Complex) -> String {
    format!("z2:v{}:f{:?}", z.complex().vertices().len(), z.complex().f_vector())
}

/// `G = G_{sd(Z)}`; both `N(G)` and `B(G)` must have the homology of `Z`.
pub fn verify_construction_roundtrip(z: &Z2Complex) -> Result<VerificationOutcome> {
    let (sd, _) = z.subdivide();
    let g = graph_from_z2_complex(&sd)?;
    let target = reduced_homology(z.complex());
    let want = || Evidence { profile: Some(target.clone()), ..Default::default() };
    let comparisons = vec![
        Comparison::new(
            "N(G_sd(Z)) vs Z",
            want(),
            Evidence { profile: Some(reduced_homology(&neighborhood_complex(&g))), ..Default::default() },
        ),
        Comparison::new(
            "B(G_sd(Z)) vs Z",
            want(),
            Evidence { profile: Some(reduced_homology(box_complex(&g).complex())), ..Default::default() },
        ),
    ];
    Ok(VerificationOutcome::new("roundtrip", z2_descriptor(z), comparisons)
        .with_note(format!("G has {} vertices", g.n())))
}

/// `N(G_K)` equals the nerve of the closed vertex stars of `K`, face for face, with nerve
/// vertex `v` identified with graph vertex `v` (both indexed by the sorted vertices of `K`).
pub fn verify_nerve_identity(z: &Z2Complex) -> Result<VerificationOutcome> {
    let g = graph_from_z2_complex(z)?;
    let k = z.complex();
    let verts: Vec<Vertex> = k.vertices().iter().copied().collect();
    let stars: Vec<(Vertex, BTreeSet<Vertex>)> = verts
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let closed: BTreeSet<Vertex> =
                verts.iter().copied().filter(|&w| w == v || k.contains(&[v.min(w), v.max(w)])).collect();
            (i as Vertex, closed)
        })
        .collect();
    let nv = nerve(&stars);
    let ng = neighborhood_complex(&g);
    let differing = nv.faces().symmetric_difference(ng.faces()).count() as i64;
    let comparisons = vec![
        Comparison::new("faces in symmetric difference", Evidence::value(0), Evidence::value(differing)),
        Comparison::new("nerve of stars vs N(G_K)", Evidence::of(&nv), Evidence::of(&ng)),
    ];
    Ok(VerificationOutcome::new("nerve", z2_descriptor(z), comparisons))
}

/// `B(G⁺)` against the suspension of `B(G)`, and `χ(G⁺) = χ(G) + 1` when `G⁺` is within the
/// chromatic solver's size guard.
pub fn verify_cone_graph(g: &Graph) -> Result<VerificationOutcome> {
    let gp = add_cone_vertex(g)?;
    let b = box_complex(g);
    let bp = box_complex(&gp);
    let mut comparisons = vec![Comparison::new(
        "B(G+) vs susp B(G)",
        Evidence {
            profile: Some(reduced_homology(b.complex()).suspended(b.complex().is_empty())),
            ..Default::default()
        },
        Evidence { profile: Some(reduced_homology(bp.complex())), ..Default::default() },
    )];
    let mut note = None;
    if gp.n() <= CHROMATIC_VERTEX_LIMIT {
        let chi = chromatic_number(g, false)? as i64;
        let chi_p = chromatic_number(&gp, false)? as i64;
        comparisons.push(Comparison::new("chi(G+)", Evidence::value(chi + 1), Evidence::value(chi_p)));
    } else {
        note = Some("chromatic check skipped: above the solver size guard".to_string());
    }
    let mut out = VerificationOutcome::new("cone", g.descriptor(), comparisons);
    out.note = note;
    Ok(out)
}

/// First labeled graph on `n` vertices whose neighborhood complex is isomorphic to `k`.
pub fn neighborhood_realizability_search(k: &SimplicialComplex, n: usize, force: bool) -> Result<Option<Graph>> {
    if n > SEARCH_VERTEX_LIMIT && !force {
        return Err(Error::Guard { what: "realizability search vertex count", size: n, limit: SEARCH_VERTEX_LIMIT });
    }
    let limit = Some(n.max(k.vertices().len()));
    for g in labeled_graphs(n) {
        if isomorphic(&neighborhood_complex(&g), k, limit)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// `Hom(K₂, G)` order complex against `B(G)`.
pub fn verify_hom_equivalence(g: &Graph) -> VerificationOutcome {
    let h = hom_k2_order_complex(g);
    let b = box_complex(g);
    let cmp = Comparison::new(
        "Hom(K2,G) vs B(G)",
        Evidence { profile: Some(reduced_homology(b.complex())), ..Default::default() },
        Evidence { profile: Some(reduced_homology(h.z2.complex())), ..Default::default() },
    );
    VerificationOutcome::new("hom", g.descriptor(), vec![cmp])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Suspension,
    Shore,
    Euler,
    Roundtrip,
    Nerve,
    Cone,
    NbhdSearch,
    Hom,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Suspension,
        Suite::Shore,
        Suite::Euler,
        Suite::Roundtrip,
        Suite::Nerve,
        Suite::Cone,
        Suite::NbhdSearch,
        Suite::Hom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Suspension => "suspension",
            Suite::Shore => "shore",
            Suite::Euler => "euler",
            Suite::Roundtrip => "roundtrip",
            Suite::Nerve => "nerve",
            Suite::Cone => "cone",
            Suite::NbhdSearch => "nbhd-search",
            Suite::Hom => "hom",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::input(format!("unknown suite {s:?}")))
    }
}

/// Inputs for [`run_suite`].
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Connected graphs on up to this many vertices form the graph corpus.
    pub max_n: usize,
    /// The Hom comparison is limited to graphs on at most this many vertices.
    pub hom_max_n: usize,
    /// Vertex count for the realizability search.
    pub search_n: usize,
    /// Complex to search for; the 4-cycle when absent.
    pub search_target: Option<SimplicialComplex>,
    pub force: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_n: 5, hom_max_n: 4, search_n: 4, search_target: None, force: false }
    }
}

/// Corpus graphs with descriptors: every connected graph up to `max_n` plus the named families.
pub fn graph_corpus(max_n: usize) -> Vec<(String, Graph)> {
    let mut v: Vec<(String, Graph)> = connected_graphs(max_n).into_iter().map(|g| (g.descriptor(), g)).collect();
    v.extend(named_graphs());
    v
}

/// Free Z2-complexes used by the construction checks.
pub fn z2_corpus() -> Vec<(String, Z2Complex)> {
    vec![
        ("S0/swap".into(), examples::sphere0()),
        ("C4/antipodal".into(), examples::antipodal_cycle(2)),
        ("C6/antipodal".into(), examples::antipodal_cycle(3)),
    ]
}

/// The 4-cycle, which is not the neighborhood complex of any 4-vertex graph.
pub fn four_cycle() -> SimplicialComplex {
    SimplicialComplex::from_facets([[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap()
}

/// Runs one suite (or all of them) and returns outcomes sorted by check and input.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<VerificationOutcome>> {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::ALL.to_vec() } else { vec![suite] };
    let graphs = graph_corpus(cfg.max_n);
    let mut out = Vec::new();
    for s in suites {
        let batch: Vec<VerificationOutcome> = match s {
            Suite::Suspension => graphs.par_iter().map(|(d, g)| verify_suspension_relation(g).named(d)).collect(),
            Suite::Shore => graphs.par_iter().map(|(d, g)| verify_shore_retract(g).named(d)).collect(),
            Suite::Euler => graphs
                .par_iter()
                .filter(|(_, g)| g.num_edges() > 0)
                .map(|(d, g)| verify_even_euler(g).map(|o| o.named(d)))
                .collect::<Result<_>>()?,
            Suite::Cone => {
                graphs.par_iter().map(|(d, g)| verify_cone_graph(g).map(|o| o.named(d))).collect::<Result<_>>()?
            }
            Suite::Hom => graphs
                .par_iter()
                .filter(|(_, g)| g.n() <= cfg.hom_max_n)
                .map(|(d, g)| verify_hom_equivalence(g).named(d))
                .collect(),
            Suite::Roundtrip => z2_corpus()
                .par_iter()
                .map(|(d, z)| verify_construction_roundtrip(z).map(|o| o.named(d)))
                .collect::<Result<_>>()?,
            Suite::Nerve => {
                let mut zs = z2_corpus();
                zs.push(("octahedron/antipodal".into(), examples::octahedron()));
                zs.par_iter().map(|(d, z)| verify_nerve_identity(z).map(|o| o.named(d))).collect::<Result<_>>()?
            }
            Suite::NbhdSearch => {
                let target = cfg.search_target.clone().unwrap_or_else(four_cycle);
                let found = neighborhood_realizability_search(&target, cfg.search_n, cfg.force)?;
                let note = match &found {
                    Some(g) => format!("found: {}", g.descriptor()),
                    None => "none found".to_string(),
                };
                let mut o = VerificationOutcome::new(
                    "nbhd-search",
                    format!("n={} target f={:?}", cfg.search_n, target.f_vector()),
                    vec![],
                );
                o.note = Some(note);
                vec![o]
            }
            Suite::All => unreachable!(),
        };
        out.extend(batch);
    }
    out.sort_by(|a, b| (&a.check, &a.input).cmp(&(&b.check, &b.input)));
    Ok(out)
}
