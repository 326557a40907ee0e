//! The isomorphism from the three-vertex infinite graph onto the fixed-point
//! algebra of the five-sphere graph: explicit images of the edge isometries,
//! their Cuntz-Krieger relations, the fixed-point generator families, and
//! bounded span-membership checks.

use std::collections::BTreeMap;

use crate::scalar::QRational;

use super::ck::CKElement;
use super::graph::GraphRef;
use super::path::{EdgeInstance, Path};
use super::GraphError;

/// Edges of the infinite quotient graph, labelled by their image data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiEdge {
    /// `w1 -> w2`, image `S_{e11}^n S_{e12} S_{e22}^{n+1}`, `n >= 0`.
    Alpha(u32),
    /// `w1 -> w3`, image `S_{e11}^n S_{e12} S_{e22}^m S_{e23} S_{e33}^{n-m}`,
    /// `n >= m >= 0`.
    Beta(u32, u32),
    /// `w1 -> w3`, image `S_{e11}^n S_{e13} S_{e33}^{n+1}`, `n >= 0`.
    Delta(u32),
    /// `w2 -> w3`, image `S_{e22}^n S_{e23} (S_{e33}^*)^{n+1}`, `n >= 0`.
    Gamma(u32),
}

impl PhiEdge {
    pub fn label(&self) -> String {
        match self {
            PhiEdge::Alpha(n) => format!("alpha_{}", n),
            PhiEdge::Beta(n, m) => format!("beta_{},{}", n, m),
            PhiEdge::Delta(n) => format!("delta_{}", n),
            PhiEdge::Gamma(n) => format!("gamma_{}", n),
        }
    }

    /// Source and range vertices in the five-sphere graph (0-based).
    pub fn endpoints(&self) -> (usize, usize) {
        match self {
            PhiEdge::Alpha(_) => (0, 1),
            PhiEdge::Beta(..) | PhiEdge::Delta(_) => (0, 2),
            PhiEdge::Gamma(_) => (1, 2),
        }
    }
}

fn edge(g: &GraphRef, name: &str) -> EdgeInstance {
    EdgeInstance { family: g.family_by_name(name).expect("edge exists"), copy: 0 }
}

fn loop_path(g: &GraphRef, name: &str, v: usize, count: u32) -> Path {
    let mut p = Path::vertex(v);
    for _ in 0..count {
        p = p.extend(g, edge(g, name)).expect("loop composes");
    }
    p
}

/// The image of a vertex projection: `P_{w_j} -> P_{v_j}`.
pub fn phi_vertex(g: &GraphRef, j: usize) -> CKElement {
    CKElement::vertex_projection(g, j)
}

/// The image of one edge isometry, as an exact element of the five-sphere
/// graph algebra. Fails on index violations (`beta` needs `n >= m`).
pub fn phi_image(g: &GraphRef, e: &PhiEdge) -> Result<CKElement, GraphError> {
    match *e {
        PhiEdge::Alpha(n) => {
            let p = loop_path(g, "e11", 0, n)
                .extend(g, edge(g, "e12"))
                .unwrap();
            let p = append_loops(g, p, "e22", n + 1);
            Ok(CKElement::path_isometry(g, p))
        }
        PhiEdge::Beta(n, m) => {
            if m > n {
                return Err(GraphError::IndexViolation(format!(
                    "beta_{{n,m}} needs n >= m, got n={} m={}",
                    n, m
                )));
            }
            let p = loop_path(g, "e11", 0, n).extend(g, edge(g, "e12")).unwrap();
            let p = append_loops(g, p, "e22", m);
            let p = p.extend(g, edge(g, "e23")).unwrap();
            let p = append_loops(g, p, "e33", n - m);
            Ok(CKElement::path_isometry(g, p))
        }
        PhiEdge::Delta(n) => {
            let p = loop_path(g, "e11", 0, n).extend(g, edge(g, "e13")).unwrap();
            let p = append_loops(g, p, "e33", n + 1);
            Ok(CKElement::path_isometry(g, p))
        }
        PhiEdge::Gamma(n) => {
            let alpha = loop_path(g, "e22", 1, n).extend(g, edge(g, "e23")).unwrap();
            let beta = loop_path(g, "e33", 2, n + 1);
            Ok(CKElement::word(g, alpha, beta))
        }
    }
}

fn append_loops(g: &GraphRef, mut p: Path, name: &str, count: u32) -> Path {
    for _ in 0..count {
        p = p.extend(g, edge(g, name)).expect("loop composes");
    }
    p
}

/// All edge labels with indices bounded by `n_max`.
pub fn phi_edges_up_to(n_max: u32) -> Vec<PhiEdge> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        out.push(PhiEdge::Alpha(n));
        out.push(PhiEdge::Delta(n));
        out.push(PhiEdge::Gamma(n));
        for m in 0..=n {
            out.push(PhiEdge::Beta(n, m));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct PhiCheck {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// Verifies the Cuntz-Krieger relations of all images with indices at most
/// `n_max`: each `x* x` is the target vertex projection, images are
/// weight-0, distinct images have orthogonal ranges, and range projections
/// at a common source stay dominated by the source projection.
pub fn verify_phi_ck(g: &GraphRef, n_max: u32) -> Result<Vec<PhiCheck>, GraphError> {
    assert!(n_max >= 1);
    let mut checks = Vec::new();
    let edges = phi_edges_up_to(n_max);
    let images: Vec<(PhiEdge, CKElement)> = edges
        .iter()
        .map(|e| phi_image(g, e).map(|x| (*e, x)))
        .collect::<Result<_, _>>()?;

    for (e, x) in &images {
        let (_, target) = e.endpoints();
        let ck1 = x.adjoint().mul(x)?.equals(&phi_vertex(g, target))?;
        checks.push(PhiCheck {
            label: format!("CK1 {}", e.label()),
            passed: ck1,
            detail: format!("S*S = P_v{}", target + 1),
        });
        let w = x.homogeneous_mu_weight();
        checks.push(PhiCheck {
            label: format!("weight {}", e.label()),
            passed: w == Some(0),
            detail: format!("mu-weight {:?}", w),
        });
    }

    // ranges of distinct edges are orthogonal
    let mut orthogonal = true;
    let mut first_failure = String::new();
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            let prod = images[i].1.adjoint().mul(&images[j].1)?;
            if !prod.equals(&CKElement::zero(g))? {
                orthogonal = false;
                first_failure =
                    format!("{} vs {}", images[i].0.label(), images[j].0.label());
            }
        }
    }
    checks.push(PhiCheck {
        label: "orthogonal ranges".to_string(),
        passed: orthogonal,
        detail: if orthogonal { "all pairs".to_string() } else { first_failure },
    });

    // sum of range projections under each source projection
    for source in [0usize, 1] {
        let mut sum = CKElement::zero(g);
        for (e, x) in &images {
            if e.endpoints().0 == source {
                sum = sum.add(&x.mul(&x.adjoint())?)?;
            }
        }
        let diff = phi_vertex(g, source).sub(&sum)?;
        let depth = diff.max_left_len();
        let expanded = diff.expand_to_depth(depth)?;
        let nonneg = expanded.terms().all(|(_, c)| {
            // diagonal coefficients only; nonnegative means 0 or 1 here
            c.as_integer().map(|n| n >= 0.into()).unwrap_or(false)
        });
        checks.push(PhiCheck {
            label: format!("range sum under P_v{}", source + 1),
            passed: nonneg,
            detail: "difference expands with nonnegative coefficients".to_string(),
        });
    }
    Ok(checks)
}

/// The generating families of the fixed-point algebra, with indices at most
/// `bound`. The two-sided family at the end restores the middle `e12` edge
/// omitted in the compressed listing; the balance `k + s + t = l + n + m`
/// is exactly the weight-0 condition.
pub fn fixedpoint_generator_list(g: &GraphRef, bound: u32) -> Vec<(String, CKElement)> {
    let mut out: Vec<(String, CKElement)> = Vec::new();
    let mut push = |label: String, x: CKElement| out.push((label, x));

    for n in 0..=bound {
        for (vname, v, lp) in [("e11", 0usize, "e11"), ("e22", 1, "e22"), ("e33", 2, "e33")] {
            let _ = vname;
            let p = loop_path(g, lp, v, n);
            push(
                format!("S_{}^{} (S_{}^{})*", lp, n, lp, n),
                CKElement::word(g, p.clone(), p),
            );
        }
        push(
            format!("alpha-type n={}", n),
            phi_image(g, &PhiEdge::Alpha(n)).unwrap(),
        );
        push(
            format!("delta-type n={}", n),
            phi_image(g, &PhiEdge::Delta(n)).unwrap(),
        );
        push(
            format!("gamma-type n={}", n),
            phi_image(g, &PhiEdge::Gamma(n)).unwrap(),
        );
        for m in 0..=n {
            push(
                format!("beta-type n={} m={}", n, m),
                phi_image(g, &PhiEdge::Beta(n, m)).unwrap(),
            );
        }
    }
    // S_e22^n S_e23 S_e33^m (S_e22^m S_e23 S_e33^n)*
    for n in 0..=bound {
        for m in 0..=bound {
            let a = loop_path(g, "e22", 1, n).extend(g, edge(g, "e23")).unwrap();
            let a = append_loops(g, a, "e33", m);
            let b = loop_path(g, "e22", 1, m).extend(g, edge(g, "e23")).unwrap();
            let b = append_loops(g, b, "e33", n);
            push(
                format!("middle-shift n={} m={}", n, m),
                CKElement::word(g, a, b),
            );
        }
    }
    // pair families S_x (S_y)* over equal-length alpha/delta paths
    for n in 0..=bound {
        for m in 0..=bound {
            let a = loop_path(g, "e11", 0, n).extend(g, edge(g, "e12")).unwrap();
            let a = append_loops(g, a, "e22", n);
            let b = loop_path(g, "e11", 0, m).extend(g, edge(g, "e12")).unwrap();
            let b = append_loops(g, b, "e22", m);
            push(format!("alpha-pair n={} m={}", n, m), CKElement::word(g, a, b));
            let a = loop_path(g, "e11", 0, n).extend(g, edge(g, "e13")).unwrap();
            let a = append_loops(g, a, "e33", n);
            let b = loop_path(g, "e11", 0, m).extend(g, edge(g, "e13")).unwrap();
            let b = append_loops(g, b, "e33", m);
            push(format!("delta-pair n={} m={}", n, m), CKElement::word(g, a, b));
        }
        for m in 0..=bound {
            let a = loop_path(g, "e11", 0, n).extend(g, edge(g, "e12")).unwrap();
            let a = append_loops(g, a, "e22", m);
            push(
                format!("alpha-range n={} m={}", n, m),
                CKElement::word(g, a.clone(), a),
            );
            let a = loop_path(g, "e11", 0, n).extend(g, edge(g, "e13")).unwrap();
            let a = append_loops(g, a, "e33", m);
            push(
                format!("delta-range n={} m={}", n, m),
                CKElement::word(g, a.clone(), a),
            );
        }
    }
    // the general weight-0 family through the full column
    // S_e11^k S_e12 S_e22^n S_e23 S_e33^m (S_e11^l S_e12 S_e22^s S_e23 S_e33^t)*
    let b = bound.min(2);
    for k in 0..=b {
        for n in 0..=b {
            for m in 0..=b {
                for l in 0..=b {
                    for s in 0..=b {
                        for t in 0..=b {
                            if k + s + t != l + n + m {
                                continue;
                            }
                            let a1 = loop_path(g, "e11", 0, k)
                                .extend(g, edge(g, "e12"))
                                .unwrap();
                            let a1 = append_loops(g, a1, "e22", n);
                            let a1 = a1.extend(g, edge(g, "e23")).unwrap();
                            let a1 = append_loops(g, a1, "e33", m);
                            let b1 = loop_path(g, "e11", 0, l)
                                .extend(g, edge(g, "e12"))
                                .unwrap();
                            let b1 = append_loops(g, b1, "e22", s);
                            let b1 = b1.extend(g, edge(g, "e23")).unwrap();
                            let b1 = append_loops(g, b1, "e33", t);
                            push(
                                format!("column k={k} n={n} m={m} l={l} s={s} t={t}"),
                                CKElement::word(g, a1, b1),
                            );
                        }
                    }
                }
            }
        }
    }
    out
}

/// Result of a bounded span check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanResult {
    InSpan,
    NotInSpan,
    /// The product-length / candidate budget ran out before deciding.
    Inconclusive,
}

/// Decides (within a budget) whether `x` lies in the linear span of products
/// of at most `max_len` factors drawn from `gens` and their adjoints, by
/// exact linear algebra in canonical depth coordinates.
pub fn span_membership(
    x: &CKElement,
    gens: &[CKElement],
    max_len: usize,
    max_candidates: usize,
) -> Result<SpanResult, GraphError> {
    let _ = x.graph();
    let mut factors: Vec<CKElement> = Vec::new();
    for gen in gens {
        factors.push(gen.clone());
        factors.push(gen.adjoint());
    }
    // products of length <= max_len, deduplicated by raw term maps
    let mut products: Vec<CKElement> = Vec::new();
    let mut frontier: Vec<CKElement> = factors.clone();
    let mut seen: BTreeMap<String, ()> = BTreeMap::new();
    for len in 1..=max_len {
        let mut next = Vec::new();
        for p in &frontier {
            if p.is_zero() {
                continue;
            }
            let key = format!("{}", p.display());
            if seen.contains_key(&key) {
                continue;
            }
            seen.insert(key, ());
            products.push(p.clone());
            if products.len() > max_candidates {
                return Ok(SpanResult::Inconclusive);
            }
            if len < max_len {
                for f in &factors {
                    next.push(p.mul(f)?);
                }
            }
        }
        frontier = next;
    }

    // common expansion depth
    let depth = products
        .iter()
        .chain(std::iter::once(x))
        .map(|e| e.max_left_len())
        .max()
        .unwrap_or(0);
    let mut basis: Vec<BTreeMap<(Path, Path), QRational>> = Vec::new();
    for p in &products {
        let expanded = p.expand_to_depth(depth)?;
        let vec: BTreeMap<(Path, Path), QRational> =
            expanded.terms().map(|(k, v)| (k.clone(), v.clone())).collect();
        let reduced = reduce_against(&basis, vec);
        if !reduced.is_empty() {
            basis.push(normalize(reduced));
        }
    }
    let target: BTreeMap<(Path, Path), QRational> = x
        .expand_to_depth(depth)?
        .terms()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    let residual = reduce_against(&basis, target);
    Ok(if residual.is_empty() { SpanResult::InSpan } else { SpanResult::NotInSpan })
}

type SparseVec = BTreeMap<(Path, Path), QRational>;

fn leading(v: &SparseVec) -> Option<(Path, Path)> {
    v.keys().next().cloned()
}

fn normalize(mut v: SparseVec) -> SparseVec {
    if let Some(lead) = leading(&v) {
        let c = v[&lead].clone();
        for val in v.values_mut() {
            *val = val.div(&c).expect("leading coefficient nonzero");
        }
    }
    v
}

fn reduce_against(basis: &[SparseVec], mut v: SparseVec) -> SparseVec {
    for b in basis {
        let lead = leading(b).expect("basis vectors are nonzero");
        if let Some(c) = v.get(&lead).cloned() {
            for (k, bv) in b {
                let delta = bv.mul(&c);
                let entry = v.entry(k.clone()).or_insert_with(QRational::zero);
                *entry = entry.sub(&delta);
                if entry.is_zero() {
                    v.remove(k);
                }
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphck::graph::preset_l5;

    #[test]
    fn alpha0_image_is_e12_e22() {
        let g = preset_l5();
        let x = phi_image(&g, &PhiEdge::Alpha(0)).unwrap();
        let p = Path::edge(&g, edge(&g, "e12"))
            .extend(&g, edge(&g, "e22"))
            .unwrap();
        assert_eq!(x, CKElement::path_isometry(&g, p));
    }

    #[test]
    fn gamma_image_uses_adjoint_loops() {
        let g = preset_l5();
        let x = phi_image(&g, &PhiEdge::Gamma(1)).unwrap();
        assert_eq!(x.max_left_len(), 2);
        assert_eq!(x.max_right_len(), 2);
        assert_eq!(x.homogeneous_mu_weight(), Some(0));
    }

    #[test]
    fn beta_index_violation() {
        let g = preset_l5();
        assert!(matches!(
            phi_image(&g, &PhiEdge::Beta(1, 2)),
            Err(GraphError::IndexViolation(_))
        ));
    }

    #[test]
    fn phi_vertices_map_to_projections() {
        let g = preset_l5();
        assert_eq!(phi_vertex(&g, 2), CKElement::vertex_projection(&g, 2));
    }

    #[test]
    fn ck_relations_hold_at_small_indices() {
        let g = preset_l5();
        let checks = verify_phi_ck(&g, 2).unwrap();
        for c in &checks {
            assert!(c.passed, "{}: {}", c.label, c.detail);
        }
    }

    #[test]
    fn generator_list_is_weight_zero() {
        let g = preset_l5();
        for (label, x) in fixedpoint_generator_list(&g, 2) {
            assert_eq!(x.homogeneous_mu_weight(), Some(0), "{}", label);
        }
    }

    #[test]
    fn span_membership_finds_gamma_square() {
        // S_{e22 e23 e33} (same)* lies in the span of products of length <= 2
        // of the images: it is gamma_1 gamma_1*.
        let g = preset_l5();
        let p = Path::vertex(1)
            .extend(&g, edge(&g, "e22"))
            .unwrap()
            .extend(&g, edge(&g, "e23"))
            .unwrap()
            .extend(&g, edge(&g, "e33"))
            .unwrap();
        let target = CKElement::word(&g, p.clone(), p);
        let gens: Vec<CKElement> = [PhiEdge::Gamma(0), PhiEdge::Gamma(1), PhiEdge::Alpha(0)]
            .iter()
            .map(|e| phi_image(&g, e).unwrap())
            .collect();
        assert_eq!(
            span_membership(&target, &gens, 2, 500).unwrap(),
            SpanResult::InSpan
        );
        // a weight-breaking element is not in the span
        let bad = CKElement::path_isometry(&g, Path::edge(&g, edge(&g, "e22")));
        assert_eq!(
            span_membership(&bad, &gens, 2, 500).unwrap(),
            SpanResult::NotInSpan
        );
        // zero budget is inconclusive
        assert_eq!(
            span_membership(&target, &gens, 2, 0).unwrap(),
            SpanResult::Inconclusive
        );
    }
}
