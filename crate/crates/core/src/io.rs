//! File formats.
//!
//! * Graph JSON: `{"n": 5, "edges": [[0, 1], …]}`, or a plain edge list whose first line is `n`
//!   followed by one `u v` pair per line.
//! * Complex JSON: `{"vertices": […], "facets": [[…], …], "involution": {"map": {"v": "w", …}}}`.
//!   Facets need not be maximal; the closure is taken on load. Box-type complexes also carry a
//!   `labels` array of `{"id", "v", "shore"}` records, `shore` being `0`, `1`, `"apex-x"` or
//!   `"apex-y"`.
//! * Homology JSON: `{"dims": [{"k", "betti", "torsion"}, …]}`.
//!
//! Output is canonical: facets in (dimension, lexicographic) order, keys in a fixed order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::builders::{BoxComplex, BoxLabel, HomOrderComplex};
use crate::graph::Graph;
use crate::simplicial::{SimplicialComplex, Vertex};
use crate::z2::{Involution, Z2Complex};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile { n: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<GraphFile> for Graph {
    type Error = Error;

    fn try_from(f: GraphFile) -> Result<Graph> {
        Graph::new(f.n, f.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&GraphFile::from(g)).expect("serializable")
}

/// Parses either graph format; JSON is recognised by a leading `{`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        let f: GraphFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Graph::try_from(f)
    } else {
        parse_edge_list(text)
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("edge list is empty".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad vertex count: {e}")))?;
    let mut edges = Vec::new();
    for (i, line) in lines.enumerate() {
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|e| Error::Parse(format!("edge line {}: {e}", i + 1))))
            .collect::<Result<_>>()?;
        match nums[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("edge line {} needs two vertices: {line:?}", i + 1))),
        }
    }
    Graph::new(n, edges)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ShoreTag {
    Shore(u8),
    Apex(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLabel {
    pub id: Vertex,
    pub v: Vertex,
    pub shore: ShoreTag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionFile {
    /// Vertex to image; values are written as strings and read as strings or integers.
    pub map: BTreeMap<String, serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: Vec<Vertex>,
    pub facets: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<InvolutionFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<VertexLabel>>,
}

impl ComplexFile {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        ComplexFile {
            vertices: k.vertices().iter().copied().collect(),
            facets: k.facets(),
            involution: None,
            kind: None,
            labels: None,
        }
    }

    pub fn from_z2(z: &Z2Complex) -> Self {
        let mut f = Self::from_complex(z.complex());
        f.involution = Some(InvolutionFile {
            map: z
                .action()
                .map()
                .iter()
                .map(|(k, v)| (k.to_string(), serde_json::Value::String(v.to_string())))
                .collect(),
        });
        f
    }

    pub fn from_box(b: &BoxComplex) -> Self {
        let mut f = Self::from_z2(&b.z2);
        f.kind = Some(
            match b.kind {
                crate::builders::BoxKind::Box => "box",
                crate::builders::BoxKind::Box0 => "box0",
                crate::builders::BoxKind::ConesOverShores => "bc",
            }
            .into(),
        );
        f.labels = Some(
            b.complex()
                .vertices()
                .iter()
                .map(|&id| {
                    let (v, shore) = match b.label(id) {
                        BoxLabel::Shore { vertex, shore } => (vertex as Vertex, ShoreTag::Shore(shore)),
                        BoxLabel::ApexX => (id, ShoreTag::Apex("apex-x".into())),
                        BoxLabel::ApexY => (id, ShoreTag::Apex("apex-y".into())),
                    };
                    VertexLabel { id, v, shore }
                })
                .collect(),
        );
        f
    }

    pub fn from_hom(h: &HomOrderComplex) -> Self {
        let mut f = Self::from_z2(&h.z2);
        f.kind = Some("hom".into());
        f
    }

    /// The closed complex. Listed vertices that appear in no facet become isolated points;
    /// facet vertices missing from `vertices` are an error.
    pub fn complex(&self) -> Result<SimplicialComplex> {
        let listed: std::collections::BTreeSet<Vertex> = self.vertices.iter().copied().collect();
        if let Some(v) = self.facets.iter().flatten().find(|v| !listed.contains(v)) {
            return Err(Error::input(format!("facet vertex {v} is not listed in \"vertices\"")));
        }
        let singletons = self.vertices.iter().map(|&v| vec![v]);
        SimplicialComplex::from_facets(self.facets.iter().cloned().chain(singletons))
    }

    pub fn involution(&self) -> Result<Option<Involution>> {
        let Some(inv) = &self.involution else { return Ok(None) };
        let parse =
            |s: &str| s.trim().parse::<Vertex>().map_err(|e| Error::Parse(format!("involution label {s:?}: {e}")));
        let mut map = BTreeMap::new();
        for (k, v) in &inv.map {
            let image = match v {
                serde_json::Value::String(s) => parse(s)?,
                serde_json::Value::Number(n) => n
                    .as_u64()
                    .and_then(|x| Vertex::try_from(x).ok())
                    .ok_or_else(|| Error::Parse(format!("involution image {n} is not a vertex label")))?,
                other => return Err(Error::Parse(format!("involution image {other} is not a vertex label"))),
            };
            map.insert(parse(k)?, image);
        }
        Involution::new(map).map(Some)
    }

    /// The complex and, when an involution is present, the validated Z2-complex.
    pub fn load(&self) -> Result<(SimplicialComplex, Option<Z2Complex>)> {
        let k = self.complex()?;
        let z = match self.involution()? {
            Some(a) => Some(Z2Complex::new(k.clone(), a)?),
            None => None,
        };
        Ok((k, z))
    }
}

pub fn parse_complex(text: &str) -> Result<ComplexFile> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}
