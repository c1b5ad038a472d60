//! Acceptance criteria, one line each. Runs without the libtest harness so every criterion
//! reports even when an earlier one fails; the process exits nonzero if any of them fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use boxcx::bounds::{lovasz_bound, sarkaria_bound};
use boxcx::builders::{
    box0_complex, box_complex, cones_over_shores_complex, graph_from_z2_complex, hom_k2_order_complex,
    neighborhood_complex,
};
use boxcx::coloring::chromatic_number;
use boxcx::corpus::{connected_graphs, labeled_graphs};
use boxcx::graph::{complete_graph, cone_k, cycle_graph, kneser_graph};
use boxcx::homology::examples::projective_plane;
use boxcx::homology::{boundary_matrices, reduced_homology, reduced_homology_with, smith_normal_form, Pipeline};
use boxcx::verify::{
    four_cycle, neighborhood_realizability_search, verify_construction_roundtrip, verify_even_euler,
    verify_hom_equivalence, verify_nerve_identity, verify_shore_retract, verify_suspension_relation, z2_corpus,
    VerificationOutcome,
};
use boxcx::{Graph, SimplicialComplex, Z2Complex};
use common::{bareiss_rank, betti, box_faces, brute_chromatic, face_set, neighborhood_faces, padded, FaceSet};

type Check = Result<String, String>;

/// Name, optional time limit in seconds, and the check itself.
type Criterion = (&'static str, Option<u64>, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_passed(outcomes: &[VerificationOutcome]) -> Result<(), String> {
    match outcomes.iter().find(|o| !o.passed) {
        None => Ok(()),
        Some(o) => Err(format!("{} failed on {}: {:?}", o.check, o.input, o.comparisons)),
    }
}

fn same_betti(a: Vec<usize>, b: Vec<usize>) -> bool {
    let len = a.len().max(b.len());
    padded(a, len) == padded(b, len)
}

fn corpus() -> Result<Vec<Graph>, String> {
    let graphs = connected_graphs(5);
    ensure(graphs.len() == 31, || format!("expected 31 connected graphs, found {}", graphs.len()))?;
    Ok(graphs)
}

fn suspension_relation() -> Check {
    let graphs = corpus()?;
    all_passed(&graphs.iter().map(verify_suspension_relation).collect::<Vec<_>>())?;
    // rational Betti numbers of the definitions, shifted by one degree
    for g in &graphs {
        let b = box_faces(g, true);
        let b0 = box_faces(g, false);
        let mut shifted = vec![0];
        shifted.extend(betti(&b));
        if b.is_empty() {
            shifted = vec![1];
        }
        ensure(same_betti(betti(&b0), shifted), || format!("oracle Betti shift fails on {}", g.descriptor()))?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn shore_retract() -> Check {
    let graphs = corpus()?;
    all_passed(&graphs.iter().map(verify_shore_retract).collect::<Vec<_>>())?;
    for g in &graphs {
        ensure(same_betti(betti(&neighborhood_faces(g)), betti(&box_faces(g, true))), || {
            format!("oracle Betti differ on {}", g.descriptor())
        })?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn swap_shores(face: &[u32], n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = face.iter().map(|&x| if x < n { x + n } else { x - n }).collect();
    out.sort_unstable();
    out
}

fn euler_parity() -> Check {
    let graphs: Vec<Graph> = corpus()?.into_iter().filter(|g| g.num_edges() > 0).collect();
    let outcomes: Vec<VerificationOutcome> =
        graphs.iter().map(verify_even_euler).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    all_passed(&outcomes)?;
    for g in &graphs {
        let faces = box_faces(g, true);
        let n = g.n() as u32;
        let chi: i64 = faces.iter().map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum();
        let paired = faces.iter().all(|f| {
            let image = swap_shores(f, n);
            image != *f && faces.contains(&image)
        });
        ensure(paired && chi % 2 == 0, || format!("orbit pairing fails on {}", g.descriptor()))?;
    }
    Ok(format!("{} graphs with edges", graphs.len()))
}

/// A 4-vertex complex is the 4-cycle exactly when it has four vertices, four edges, nothing
/// above dimension one, and every vertex on two edges.
fn is_four_cycle(faces: &FaceSet) -> bool {
    let verts: Vec<u32> = faces.iter().filter(|f| f.len() == 1).map(|f| f[0]).collect();
    let edges: Vec<&Vec<u32>> = faces.iter().filter(|f| f.len() == 2).collect();
    verts.len() == 4
        && edges.len() == 4
        && faces.iter().all(|f| f.len() <= 2)
        && verts.iter().all(|v| edges.iter().filter(|e| e.contains(v)).count() == 2)
}

fn four_cycle_search() -> Check {
    let graphs: Vec<Graph> = labeled_graphs(4).collect();
    ensure(graphs.len() == 64, || format!("expected 64 labeled graphs, found {}", graphs.len()))?;
    let found = neighborhood_realizability_search(&four_cycle(), 4, false).map_err(|e| e.to_string())?;
    ensure(found.is_none(), || format!("search returned {:?}", found.map(|g| g.descriptor())))?;
    let oracle_hits = graphs.iter().filter(|g| is_four_cycle(&neighborhood_faces(g))).count();
    ensure(oracle_hits == 0, || format!("oracle found {oracle_hits} realizations"))?;
    Ok("64 labeled graphs, none found".into())
}

fn roundtrip() -> Check {
    let zs = z2_corpus();
    let outcomes: Vec<VerificationOutcome> = zs
        .iter()
        .map(|(_, z)| verify_construction_roundtrip(z))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    all_passed(&outcomes)?;
    for (name, z) in &zs {
        let g = graph_from_z2_complex(&z.subdivide().0).map_err(|e| e.to_string())?;
        ensure(same_betti(betti(&neighborhood_faces(&g)), betti(&face_set(z.complex()))), || {
            format!("oracle Betti of N(G) differ for {name}")
        })?;
    }
    Ok(zs.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(", "))
}

/// `G_K` from the adjacency rule, on vertex indices.
fn oracle_construction(z: &Z2Complex) -> Vec<Vec<bool>> {
    let k = z.complex();
    let verts: Vec<u32> = k.vertices().iter().copied().collect();
    let nu = |v: u32| z.action().apply(v);
    let edge = |a: u32, b: u32| a != b && k.contains(&[a.min(b), a.max(b)]);
    verts
        .iter()
        .map(|&x| verts.iter().map(|&y| x != y && (nu(x) == y || edge(x, nu(y)) || edge(y, nu(x)))).collect())
        .collect()
}

fn nerve_identity() -> Check {
    let zs = z2_corpus();
    let outcomes: Vec<VerificationOutcome> =
        zs.iter().map(|(_, z)| verify_nerve_identity(z)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    all_passed(&outcomes)?;
    for (name, z) in &zs {
        let adj = oracle_construction(z);
        let n = adj.len();
        let g = Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]))
            .map_err(|e| e.to_string())?;
        ensure(g == graph_from_z2_complex(z).map_err(|e| e.to_string())?, || format!("G_K differs for {name}"))?;
        // nerve of closed stars: index sets whose stars share a vertex
        let k = z.complex();
        let verts: Vec<u32> = k.vertices().iter().copied().collect();
        let star: Vec<BTreeSet<usize>> = verts
            .iter()
            .map(|&v| (0..n).filter(|&j| verts[j] == v || k.contains(&[v.min(verts[j]), v.max(verts[j])])).collect())
            .collect();
        let nerve: FaceSet = (1u64..1 << n)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<usize>>())
            .filter(|s| (0..n).any(|w| s.iter().all(|&i| star[i].contains(&w))))
            .map(|s| s.into_iter().map(|i| i as u32).collect())
            .collect();
        ensure(nerve == neighborhood_faces(&g), || format!("oracle face sets differ for {name}"))?;
    }
    Ok(zs.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(", "))
}

fn known_bounds() -> Check {
    let mut lines = Vec::new();
    for (name, g) in [("C5", cycle_graph(5).unwrap()), ("KG(5,2)", kneser_graph(5, 2).unwrap())] {
        let lov = lovasz_bound(&g).value;
        let sark = sarkaria_bound(&g).value;
        let chi = chromatic_number(&g, false).map_err(|e| e.to_string())?;
        ensure((lov, sark, chi, brute_chromatic(&g)) == (3, 3, 3, 3), || {
            format!("{name}: lovasz {lov}, sarkaria {sark}, chi {chi}")
        })?;
        lines.push(format!("{name} 3/3/3"));
    }
    for n in 1..=5 {
        let lov = lovasz_bound(&complete_graph(n).unwrap()).value;
        ensure(lov == n as i64, || format!("lovasz(K{n}) = {lov}"))?;
    }
    lines.push("lovasz(K_n) = n for n <= 5".into());
    Ok(lines.join(", "))
}

fn amplifier() -> Check {
    for (name, g) in [("C5", cycle_graph(5).unwrap()), ("K3", complete_graph(3).unwrap())] {
        let chi = chromatic_number(&g, false).map_err(|e| e.to_string())?;
        let base = reduced_homology(box_complex(&g).complex());
        let mut expected = base.clone();
        for k in 1..=3 {
            expected = expected.suspended(false);
            let gk = cone_k(&g, k).map_err(|e| e.to_string())?;
            let chi_k = chromatic_number(&gk, false).map_err(|e| e.to_string())?;
            ensure(chi_k == chi + k && brute_chromatic(&gk) == chi + k, || format!("chi({name}+{k}) = {chi_k}"))?;
            let observed = reduced_homology(box_complex(&gk).complex());
            ensure(observed == expected, || format!("B({name}+{k}): {observed} vs {expected}"))?;
        }
    }
    Ok("C5, K3 with k = 1..3".into())
}

fn hom_comparison() -> Check {
    let graphs = connected_graphs(4);
    all_passed(&graphs.iter().map(verify_hom_equivalence).collect::<Vec<_>>())?;
    Ok(format!("{} graphs", graphs.len()))
}

fn engine_self_checks() -> Check {
    let mut complexes: Vec<SimplicialComplex> = vec![projective_plane()];
    complexes.extend(z2_corpus().into_iter().map(|(_, z)| z.complex().clone()));
    for g in corpus()? {
        complexes.push(neighborhood_complex(&g));
        complexes.push(box_complex(&g).complex().clone());
        complexes.push(box0_complex(&g).complex().clone());
        complexes.push(cones_over_shores_complex(&g).complex().clone());
        if g.n() <= 4 {
            complexes.push(hom_k2_order_complex(&g).z2.complex().clone());
        }
    }
    complexes.retain(|k| !k.is_empty());
    let mut matrices = 0;
    for k in &complexes {
        let cc = boundary_matrices(k).map_err(|e| e.to_string())?;
        ensure(cc.squares_to_zero(), || format!("boundary does not square to zero on {:?}", k.facets()))?;
        // Betti from Bareiss ranks of the same matrices
        let ranks: Vec<usize> = cc.boundary.iter().map(|d| bareiss_rank(&d.to_dense())).collect();
        for (d, &r) in cc.boundary.iter().zip(&ranks) {
            ensure(smith_normal_form(d).rank() == r, || "SNF rank differs from rational rank".into())?;
            matrices += 1;
        }
        let rank = |d: usize| if d == 0 { 1 } else { ranks.get(d - 1).copied().unwrap_or(0) };
        let rational: Vec<usize> = (0..=cc.dim()).map(|d| cc.bases[d].len() - rank(d) - rank(d + 1)).collect();
        let direct = reduced_homology_with(k, Pipeline::Direct);
        ensure(direct.betti() == rational, || format!("Betti {:?} vs rational {:?}", direct.betti(), rational))?;
        ensure(direct == reduced_homology_with(k, Pipeline::Collapsed), || {
            format!("collapsed pipeline differs on {:?}", k.facets())
        })?;
    }
    let rp2 = reduced_homology(&projective_plane());
    ensure(rp2.degree(1).torsion == vec![2] && rp2.degree(1).betti == 0, || format!("RP2: {rp2}"))?;
    Ok(format!("{} complexes, {matrices} boundary matrices, RP2 H1 = Z/2", complexes.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("suspension relation", Some(60), suspension_relation),
        ("shore retract", Some(60), shore_retract),
        ("Euler parity", None, euler_parity),
        ("4-cycle realizability search", Some(5), four_cycle_search),
        ("construction round-trip", Some(120), roundtrip),
        ("nerve identity", None, nerve_identity),
        ("bounds on known graphs", Some(120), known_bounds),
        ("badness amplifier", None, amplifier),
        ("Hom comparison", None, hom_comparison),
        ("engine self-checks", None, engine_self_checks),
    ];
    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(s)) if elapsed > Duration::from_secs(s) => Err(format!("took {elapsed:.2?}, limit {s} s")),
            (r, _) => r,
        };
        let (status, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("{status} {:>2} {name}: {detail} ({elapsed:.2?})", i + 1);
        failures += result.is_err() as usize;
    }
    println!("acceptance: {} passed, {failures} failed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
