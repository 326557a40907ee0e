//! Directed graphs with weighted edge families, and the presets used by the
//! sphere/projective-space computations.

use std::fmt;
use std::sync::Arc;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::GraphError;

/// Edge multiplicity: a finite count or countably infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multiplicity {
    Finite(u32),
    Infinite,
}

impl Serialize for Multiplicity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Multiplicity::Finite(n) => s.serialize_u32(*n),
            Multiplicity::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Multiplicity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) if n >= 1 => Ok(Multiplicity::Finite(n)),
            Raw::Num(_) => Err(D::Error::custom("edge multiplicity must be at least 1")),
            Raw::Text(s) if s == "inf" => Ok(Multiplicity::Infinite),
            Raw::Text(s) => Err(D::Error::custom(format!("bad multiplicity '{}'", s))),
        }
    }
}

/// A family of parallel edges `src -> dst`, all carrying the same circle
/// weight. Infinite families are indexed by natural numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeFamily {
    pub name: String,
    pub src: String,
    pub dst: String,
    pub mult: Multiplicity,
    #[serde(default)]
    pub mu_weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeFamily>,
}

/// An immutable directed graph. Vertices and edge families are referenced by
/// their position; names are kept for display and serialization.
#[derive(Debug, PartialEq, Eq)]
pub struct Graph {
    pub name: String,
    vertices: Vec<String>,
    families: Vec<EdgeFamily>,
    src_idx: Vec<usize>,
    dst_idx: Vec<usize>,
}

pub type GraphRef = Arc<Graph>;

impl Graph {
    pub fn from_spec(name: &str, spec: GraphSpec) -> Result<GraphRef, GraphError> {
        let find = |v: &str, vs: &[String]| -> Result<usize, GraphError> {
            vs.iter()
                .position(|x| x == v)
                .ok_or_else(|| GraphError::UnknownVertex(v.to_string()))
        };
        let mut src_idx = Vec::with_capacity(spec.edges.len());
        let mut dst_idx = Vec::with_capacity(spec.edges.len());
        for fam in &spec.edges {
            src_idx.push(find(&fam.src, &spec.vertices)?);
            dst_idx.push(find(&fam.dst, &spec.vertices)?);
        }
        Ok(Arc::new(Graph {
            name: name.to_string(),
            vertices: spec.vertices,
            families: spec.edges,
            src_idx,
            dst_idx,
        }))
    }

    pub fn from_json(name: &str, json: &str) -> Result<GraphRef, GraphError> {
        let spec: GraphSpec =
            serde_json::from_str(json).map_err(|e| GraphError::BadGraphFile(e.to_string()))?;
        Self::from_spec(name, spec)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex(&self, name: &str) -> Result<usize, GraphError> {
        self.vertices
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn family_count(&self) -> usize {
        self.families.len()
    }

    pub fn family(&self, f: usize) -> &EdgeFamily {
        &self.families[f]
    }

    pub fn family_by_name(&self, name: &str) -> Result<usize, GraphError> {
        self.families
            .iter()
            .position(|x| x.name == name)
            .ok_or_else(|| GraphError::UnknownEdge(name.to_string()))
    }

    pub fn src(&self, f: usize) -> usize {
        self.src_idx[f]
    }

    pub fn dst(&self, f: usize) -> usize {
        self.dst_idx[f]
    }

    pub fn mu_weight(&self, f: usize) -> i64 {
        self.families[f].mu_weight
    }

    /// Families with the given source vertex.
    pub fn emitters(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.families.len()).filter(move |&f| self.src_idx[f] == v)
    }

    /// A vertex is regular when it emits at least one edge and only finitely
    /// many.
    pub fn is_regular(&self, v: usize) -> bool {
        let mut any = false;
        for f in self.emitters(v) {
            match self.families[f].mult {
                Multiplicity::Infinite => return false,
                Multiplicity::Finite(_) => any = true,
            }
        }
        any
    }

    /// Every single edge out of `v`, as (family, copy) pairs; `None` when an
    /// infinite family makes the enumeration impossible.
    pub fn finite_edges_from(&self, v: usize) -> Option<Vec<super::path::EdgeInstance>> {
        let mut out = Vec::new();
        for f in self.emitters(v) {
            match self.families[f].mult {
                Multiplicity::Infinite => return None,
                Multiplicity::Finite(n) => {
                    for c in 0..n {
                        out.push(super::path::EdgeInstance { family: f, copy: c });
                    }
                }
            }
        }
        Some(out)
    }

    pub fn spec(&self) -> GraphSpec {
        GraphSpec { vertices: self.vertices.clone(), edges: self.families.clone() }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} vertices, {} edge families)", self.name, self.vertices.len(), self.families.len())
    }
}

fn simple_family(name: &str, src: &str, dst: &str, w: i64) -> EdgeFamily {
    EdgeFamily {
        name: name.to_string(),
        src: src.to_string(),
        dst: dst.to_string(),
        mult: Multiplicity::Finite(1),
        mu_weight: w,
    }
}

fn infinite_family(name: &str, src: &str, dst: &str) -> EdgeFamily {
    EdgeFamily {
        name: name.to_string(),
        src: src.to_string(),
        dst: dst.to_string(),
        mult: Multiplicity::Infinite,
        mu_weight: 0,
    }
}

/// The sphere graph with `n + 1` vertices `v1..v{n+1}` and single edges
/// `e_ij` for `i <= j`. Circle weights follow the twistor action: sources
/// `v1` (and `v4`, when present) carry +1, the middle sources carry -1.
fn sphere_graph(name: &str, vertices: usize, positive_sources: &[usize]) -> GraphRef {
    let vs: Vec<String> = (1..=vertices).map(|i| format!("v{}", i)).collect();
    let mut edges = Vec::new();
    for i in 1..=vertices {
        for j in i..=vertices {
            let w = if positive_sources.contains(&i) { 1 } else { -1 };
            edges.push(simple_family(
                &format!("e{}{}", i, j),
                &format!("v{}", i),
                &format!("v{}", j),
                w,
            ));
        }
    }
    Graph::from_spec(name, GraphSpec { vertices: vs, edges }).expect("preset is well formed")
}

/// `L_3`: two vertices, the graph of the 3-sphere.
pub fn preset_l3() -> GraphRef {
    sphere_graph("L3", 2, &[1])
}

/// `L_5`: three vertices, the graph of the 5-sphere, with the residual
/// twistor weights (source `v1` positive, `v2`/`v3` negative).
pub fn preset_l5() -> GraphRef {
    sphere_graph("L5", 3, &[1])
}

/// `L_7`: four vertices, the graph of the 7-sphere, twistor weights
/// (+1 on sources `v1`, `v4`; -1 on `v2`, `v3`).
pub fn preset_l7() -> GraphRef {
    sphere_graph("L7", 4, &[1, 4])
}

/// `F`: three vertices `w1 < w2 < w3` with countably many edges `wi -> wj`
/// for `i < j`; the graph of the quotient by the compacts.
pub fn preset_f() -> GraphRef {
    let vs: Vec<String> = (1..=3).map(|i| format!("w{}", i)).collect();
    let mut edges = Vec::new();
    for i in 1..=3 {
        for j in i + 1..=3 {
            edges.push(infinite_family(
                &format!("f{}{}", i, j),
                &format!("w{}", i),
                &format!("w{}", j),
            ));
        }
    }
    Graph::from_spec("F", GraphSpec { vertices: vs, edges }).expect("preset is well formed")
}

/// `G`: four vertices with countably many edges `vi -> vj` for `i < j`; the
/// graph of the twistor total space.
pub fn preset_g() -> GraphRef {
    let vs: Vec<String> = (1..=4).map(|i| format!("v{}", i)).collect();
    let mut edges = Vec::new();
    for i in 1..=4 {
        for j in i + 1..=4 {
            edges.push(infinite_family(
                &format!("g{}{}", i, j),
                &format!("v{}", i),
                &format!("v{}", j),
            ));
        }
    }
    Graph::from_spec("G", GraphSpec { vertices: vs, edges }).expect("preset is well formed")
}

pub fn preset(name: &str) -> Result<GraphRef, GraphError> {
    match name {
        "L3" | "l3" => Ok(preset_l3()),
        "L5" | "l5" => Ok(preset_l5()),
        "L7" | "l7" => Ok(preset_l7()),
        "F" | "f" => Ok(preset_f()),
        "G" | "g" => Ok(preset_g()),
        other => Err(GraphError::UnknownPreset(other.to_string())),
    }
}
