//! Exact computations with Cuntz-Krieger families: words `S_a S_b*`, their
//! products and adjoints, depth expansion, decidable equality, and the
//! truncated path representation used as a cross-check.
//!
//! Equality is decided by expanding every term to a common left depth via
//! `P_v = sum_{s(e)=v} S_e S_e*` and comparing coefficients; the terms
//! `S_a S_b*` with `|a| = D` act like matrix units on long paths, which is
//! what makes the expansion canonical. The path representation below checks
//! exactly that action in rational arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::scalar::QRational;

use super::graph::GraphRef;
use super::path::{EdgeInstance, Path};
use super::GraphError;

/// A finite linear combination of words `S_alpha S_beta*` with
/// `r(alpha) = r(beta)`.
#[derive(Clone, Debug)]
pub struct CKElement {
    graph: GraphRef,
    terms: BTreeMap<(Path, Path), QRational>,
}

impl PartialEq for CKElement {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.terms == other.terms
    }
}
impl Eq for CKElement {}

impl CKElement {
    pub fn zero(graph: &GraphRef) -> Self {
        CKElement { graph: Arc::clone(graph), terms: BTreeMap::new() }
    }

    /// The vertex projection `P_v`.
    pub fn vertex_projection(graph: &GraphRef, v: usize) -> Self {
        Self::word(graph, Path::vertex(v), Path::vertex(v))
    }

    /// The edge isometry `S_e`.
    pub fn edge_isometry(graph: &GraphRef, e: EdgeInstance) -> Self {
        let p = Path::edge(graph, e);
        let r = Path::vertex(p.range(graph));
        Self::word(graph, p, r)
    }

    /// The partial isometry `S_alpha` of a path.
    pub fn path_isometry(graph: &GraphRef, alpha: Path) -> Self {
        let r = Path::vertex(alpha.range(graph));
        Self::word(graph, alpha, r)
    }

    /// `S_alpha S_beta*`; requires matching ranges.
    pub fn word(graph: &GraphRef, alpha: Path, beta: Path) -> Self {
        assert_eq!(
            alpha.range(graph),
            beta.range(graph),
            "word requires r(alpha) = r(beta)"
        );
        let mut terms = BTreeMap::new();
        terms.insert((alpha, beta), QRational::one());
        CKElement { graph: Arc::clone(graph), terms }
    }

    pub fn graph(&self) -> &GraphRef {
        &self.graph
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Path, Path), &QRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_left_len(&self) -> usize {
        self.terms.keys().map(|(a, _)| a.len()).max().unwrap_or(0)
    }

    pub fn max_right_len(&self) -> usize {
        self.terms.keys().map(|(_, b)| b.len()).max().unwrap_or(0)
    }

    fn same_graph(&self, other: &Self) -> Result<(), GraphError> {
        if self.graph == other.graph {
            Ok(())
        } else {
            Err(GraphError::MixedGraphs)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GraphError> {
        self.same_graph(other)?;
        let mut out = self.clone();
        for (key, c) in &other.terms {
            let entry = out.terms.entry(key.clone()).or_insert_with(QRational::zero);
            *entry = entry.add(c);
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn scale(&self, c: &QRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.graph);
        }
        CKElement {
            graph: Arc::clone(&self.graph),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.mul(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GraphError> {
        self.add(&other.scale(&QRational::from_integer(-1)))
    }

    /// `(S_a S_b*)(S_c S_d*)` is `S_{a c'} S_d*` when `c = b c'`, is
    /// `S_a S_{d b'}*` when `b = c b'`, and vanishes otherwise.
    pub fn mul(&self, other: &Self) -> Result<Self, GraphError> {
        self.same_graph(other)?;
        let g = &self.graph;
        let mut out = Self::zero(g);
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let coeff = c1.mul(c2);
                if let Some(c_rest) = c.strip_prefix(g, b) {
                    let left = a.join(g, &c_rest).expect("ranges align");
                    let entry = out.terms.entry((left, d.clone())).or_insert_with(QRational::zero);
                    *entry = entry.add(&coeff);
                } else if let Some(b_rest) = b.strip_prefix(g, c) {
                    let right = d.join(g, &b_rest).expect("ranges align");
                    let entry = out.terms.entry((a.clone(), right)).or_insert_with(QRational::zero);
                    *entry = entry.add(&coeff);
                }
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Adjoint: swaps the two paths of every word (coefficients are real).
    pub fn adjoint(&self) -> Self {
        CKElement {
            graph: Arc::clone(&self.graph),
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone()))
                .collect(),
        }
    }

    /// Circle weight of a term is `w(alpha) - w(beta)`; returns the common
    /// weight when every term agrees.
    pub fn homogeneous_mu_weight(&self) -> Option<i64> {
        let g = &self.graph;
        let mut it = self.terms.keys();
        let first = it.next()?;
        let w = first.0.mu_weight(g) - first.1.mu_weight(g);
        for (a, b) in it {
            if a.mu_weight(g) - b.mu_weight(g) != w {
                return None;
            }
        }
        Some(w)
    }

    pub fn gauge_weight_homogeneous(&self) -> Option<i64> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let w = first.0.gauge_weight() - first.1.gauge_weight();
        for (a, b) in it {
            if a.gauge_weight() - b.gauge_weight() != w {
                return None;
            }
        }
        Some(w)
    }

    /// Expands every term to left length exactly `depth` by repeatedly
    /// inserting `P_v = sum_{s(e)=v} S_e S_e*` at the range vertex. Fails on
    /// vertices with infinitely many or no emitted edges.
    pub fn expand_to_depth(&self, depth: usize) -> Result<Self, GraphError> {
        let g = &self.graph;
        let mut out = Self::zero(g);
        let mut stack: Vec<((Path, Path), QRational)> =
            self.terms.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        while let Some(((a, b), c)) = stack.pop() {
            if a.len() >= depth {
                let entry = out.terms.entry((a, b)).or_insert_with(QRational::zero);
                *entry = entry.add(&c);
                continue;
            }
            let v = a.range(g);
            let edges = g
                .finite_edges_from(v)
                .ok_or_else(|| GraphError::InfiniteEmitter(g.vertex_name(v).to_string()))?;
            if edges.is_empty() {
                return Err(GraphError::SinkVertex(g.vertex_name(v).to_string()));
            }
            for e in edges {
                let a2 = a.extend(g, e).expect("edge matches range");
                let b2 = b.extend(g, e).expect("same range on both sides");
                stack.push(((a2, b2), c.clone()));
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Exact equality through canonical depth expansion.
    pub fn equals(&self, other: &Self) -> Result<bool, GraphError> {
        self.same_graph(other)?;
        let depth = self.max_left_len().max(other.max_left_len());
        let lhs = self.expand_to_depth(depth)?;
        let rhs = other.expand_to_depth(depth)?;
        Ok(lhs.terms == rhs.terms)
    }

    /// Exact action on a path basis vector: `S_a S_b* |p> = |a p'>` when
    /// `p = b p'`, else 0.
    pub fn apply_to_path(&self, p: &Path) -> BTreeMap<Path, QRational> {
        let g = &self.graph;
        let mut out: BTreeMap<Path, QRational> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            if let Some(rest) = p.strip_prefix(g, b) {
                let image = a.join(g, &rest).expect("ranges align");
                let entry = out.entry(image).or_insert_with(QRational::zero);
                *entry = entry.add(c);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn display(&self) -> CKDisplay<'_> {
        CKDisplay(self)
    }
}

pub struct CKDisplay<'a>(&'a CKElement);

impl fmt::Display for CKDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        let g = self.0.graph();
        for (i, ((a, b), c)) in self.0.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "({}) ", c)?;
            }
            match (a.is_empty(), b.is_empty()) {
                (true, true) => write!(f, "P_{}", g.vertex_name(a.source()))?,
                (false, true) => write!(f, "S[{}]", a.display(g))?,
                (true, false) => write!(f, "S[{}]*", b.display(g))?,
                (false, false) => write!(f, "S[{}] S[{}]*", a.display(g), b.display(g))?,
            }
        }
        Ok(())
    }
}

/// A finite combination of words tensored with circle powers
/// `S_a S_b* (x) u^d`.
#[derive(Clone, Debug)]
pub struct GradedCKElement {
    graph: GraphRef,
    terms: BTreeMap<(Path, Path, i64), QRational>,
}

impl GradedCKElement {
    pub fn zero(graph: &GraphRef) -> Self {
        GradedCKElement { graph: Arc::clone(graph), terms: BTreeMap::new() }
    }

    /// `x (x) u^d` from an ungraded element.
    pub fn from_ck(x: &CKElement, d: i64) -> Self {
        GradedCKElement {
            graph: Arc::clone(x.graph()),
            terms: x.terms().map(|((a, b), c)| ((a.clone(), b.clone(), d), c.clone())).collect(),
        }
    }

    /// The coaction of the circle: each word sits in its own weight degree.
    pub fn coaction(x: &CKElement) -> Self {
        let g = Arc::clone(x.graph());
        let terms = x
            .terms()
            .map(|((a, b), c)| {
                let d = a.mu_weight(&g) - b.mu_weight(&g);
                ((a.clone(), b.clone(), d), c.clone())
            })
            .collect();
        GradedCKElement { graph: g, terms }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GraphError> {
        if self.graph != other.graph {
            return Err(GraphError::MixedGraphs);
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            let entry = out.terms.entry(k.clone()).or_insert_with(QRational::zero);
            *entry = entry.add(c);
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Product; circle powers add.
    pub fn mul(&self, other: &Self) -> Result<Self, GraphError> {
        if self.graph != other.graph {
            return Err(GraphError::MixedGraphs);
        }
        let g = &self.graph;
        let mut out = Self::zero(g);
        for ((a, b, d1), c1) in &self.terms {
            for ((c, d, d2), c2) in &other.terms {
                let coeff = c1.mul(c2);
                let grade = d1 + d2;
                if let Some(c_rest) = c.strip_prefix(g, b) {
                    let left = a.join(g, &c_rest).expect("ranges align");
                    let entry = out
                        .terms
                        .entry((left, d.clone(), grade))
                        .or_insert_with(QRational::zero);
                    *entry = entry.add(&coeff);
                } else if let Some(b_rest) = b.strip_prefix(g, c) {
                    let right = d.join(g, &b_rest).expect("ranges align");
                    let entry = out
                        .terms
                        .entry((a.clone(), right, grade))
                        .or_insert_with(QRational::zero);
                    *entry = entry.add(&coeff);
                }
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// The distinct circle powers present.
    pub fn grades(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.terms.keys().map(|(_, _, d)| *d).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// The ungraded component at a circle power.
    pub fn component(&self, d: i64) -> CKElement {
        let mut terms = BTreeMap::new();
        for ((a, b, dd), c) in &self.terms {
            if *dd == d {
                terms.insert((a.clone(), b.clone()), c.clone());
            }
        }
        CKElement { graph: Arc::clone(&self.graph), terms }
    }

    /// Equality with a single-grade element `x (x) u^d`, exact.
    pub fn equals_single_grade(&self, x: &CKElement, d: i64) -> Result<bool, GraphError> {
        let grades = self.grades();
        if grades.iter().any(|g| *g != d) {
            return Ok(false);
        }
        self.component(d).equals(x)
    }
}
