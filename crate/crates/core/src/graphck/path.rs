//! Finite paths in a directed graph; length-0 paths are vertices.

use std::fmt;

use super::graph::Graph;

/// One concrete edge: a family together with a copy index (always 0 for
/// simple edges; the natural-number label inside an infinite family).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeInstance {
    pub family: usize,
    pub copy: u32,
}

/// A composable sequence of edges, tagged with its start vertex so that
/// vertices themselves are the length-0 paths.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    start: usize,
    edges: Vec<EdgeInstance>,
}

impl Path {
    pub fn vertex(v: usize) -> Self {
        Path { start: v, edges: Vec::new() }
    }

    pub fn edge(g: &Graph, e: EdgeInstance) -> Self {
        Path { start: g.src(e.family), edges: vec![e] }
    }

    pub fn from_edges(g: &Graph, edges: Vec<EdgeInstance>) -> Option<Self> {
        let first = edges.first()?;
        let mut p = Path::vertex(g.src(first.family));
        for e in edges {
            p = p.extend(g, e)?;
        }
        Some(p)
    }

    /// Appends an edge when composable (`range(self) == src(e)`).
    pub fn extend(&self, g: &Graph, e: EdgeInstance) -> Option<Path> {
        if self.range(g) != g.src(e.family) {
            return None;
        }
        let mut edges = self.edges.clone();
        edges.push(e);
        Some(Path { start: self.start, edges })
    }

    /// Concatenation `self . other` (other after self), when composable.
    pub fn join(&self, g: &Graph, other: &Path) -> Option<Path> {
        if self.range(g) != other.start {
            return None;
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Some(Path { start: self.start, edges })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[EdgeInstance] {
        &self.edges
    }

    pub fn source(&self) -> usize {
        self.start
    }

    pub fn range(&self, g: &Graph) -> usize {
        match self.edges.last() {
            None => self.start,
            Some(e) => g.dst(e.family),
        }
    }

    /// If `self = prefix . rest`, returns `rest`.
    pub fn strip_prefix(&self, g: &Graph, prefix: &Path) -> Option<Path> {
        if prefix.start != self.start || prefix.edges.len() > self.edges.len() {
            return None;
        }
        if self.edges[..prefix.edges.len()] != prefix.edges[..] {
            return None;
        }
        Some(Path {
            start: prefix.range(g),
            edges: self.edges[prefix.edges.len()..].to_vec(),
        })
    }

    /// Sum of the circle weights of the edges.
    pub fn mu_weight(&self, g: &Graph) -> i64 {
        self.edges.iter().map(|e| g.mu_weight(e.family)).sum()
    }

    /// Gauge weight is simply the length.
    pub fn gauge_weight(&self) -> i64 {
        self.edges.len() as i64
    }

    pub fn display<'a>(&'a self, g: &'a Graph) -> PathDisplay<'a> {
        PathDisplay { path: self, graph: g }
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    graph: &'a Graph,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            return write!(f, "({})", self.graph.vertex_name(self.path.start));
        }
        for (i, e) in self.path.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            let fam = self.graph.family(e.family);
            match fam.mult {
                super::graph::Multiplicity::Finite(1) => write!(f, "{}", fam.name)?,
                _ => write!(f, "{}[{}]", fam.name, e.copy)?,
            }
        }
        Ok(())
    }
}

/// All paths of the given length starting at `v` (graphs without infinite
/// emitters reachable from `v` only).
pub fn paths_of_length(g: &Graph, v: usize, len: usize) -> Option<Vec<Path>> {
    let mut frontier = vec![Path::vertex(v)];
    for _ in 0..len {
        let mut next = Vec::new();
        for p in &frontier {
            let out = g.finite_edges_from(p.range(g))?;
            for e in out {
                next.push(p.extend(g, e).expect("edge leaves the range vertex"));
            }
        }
        frontier = next;
    }
    Some(frontier)
}
