//! K-theory of graph C*-algebras from the vertex matrix: `K_0` is the
//! cokernel and `K_1` the kernel of `A^t - I` restricted to the regular
//! vertices (finite nonzero emitters); infinite-emitter columns are omitted.

use num_bigint::BigInt;
use num_traits::One;

use super::graph::{Graph, Multiplicity};
use super::snf::{divisors_via_minors, smith_normal_form, IntMatrix};

/// `K_0 = Z^free (+) sum Z/d_i`, `K_1 = Z^k1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTheory {
    pub k0_free_rank: usize,
    pub k0_torsion: Vec<BigInt>,
    pub k1_rank: usize,
}

impl KTheory {
    pub fn free(k0: usize, k1: usize) -> Self {
        KTheory { k0_free_rank: k0, k0_torsion: Vec::new(), k1_rank: k1 }
    }
}

impl std::fmt::Display for KTheory {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut k0 = match self.k0_free_rank {
            0 => "0".to_string(),
            1 => "Z".to_string(),
            n => format!("Z^{}", n),
        };
        for d in &self.k0_torsion {
            k0.push_str(&format!(" + Z/{}", d));
        }
        let k1 = match self.k1_rank {
            0 => "0".to_string(),
            1 => "Z".to_string(),
            n => format!("Z^{}", n),
        };
        write!(f, "K0 = {}, K1 = {}", k0, k1)
    }
}

/// The map `A^t - I : Z^regular -> Z^vertices`, with `A(v, w)` the number of
/// edges from `v` to `w`.
pub fn vertex_matrix(g: &Graph) -> (IntMatrix, Vec<usize>) {
    let regular: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.is_regular(v)).collect();
    let mut m = IntMatrix::zero(g.vertex_count(), regular.len());
    for (col, &v) in regular.iter().enumerate() {
        for f in g.emitters(v) {
            let Multiplicity::Finite(n) = g.family(f).mult else {
                unreachable!("regular vertices have finite emitters")
            };
            m[(g.dst(f), col)] += BigInt::from(n);
        }
        m[(v, col)] -= BigInt::one();
    }
    (m, regular)
}

pub fn k_theory(g: &Graph) -> KTheory {
    let (m, regular) = vertex_matrix(g);
    let snf = smith_normal_form(&m);
    let divisors = snf.divisors();
    let rank = divisors.len();
    KTheory {
        k0_free_rank: g.vertex_count() - rank,
        k0_torsion: divisors.into_iter().filter(|d| !d.is_one()).collect(),
        k1_rank: regular.len() - rank,
    }
}

/// Independent route: elementary divisors via minor gcds instead of the
/// Smith reduction.
pub fn k_theory_via_minors(g: &Graph) -> KTheory {
    let (m, regular) = vertex_matrix(g);
    let divisors = divisors_via_minors(&m);
    let rank = divisors.len();
    KTheory {
        k0_free_rank: g.vertex_count() - rank,
        k0_torsion: divisors.into_iter().filter(|d| !d.is_one()).collect(),
        k1_rank: regular.len() - rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphck::graph::*;

    #[test]
    fn sphere_graphs_have_z_z() {
        for g in [preset_l3(), preset_l5(), preset_l7()] {
            let kt = k_theory(&g);
            assert_eq!(kt, KTheory::free(1, 1), "{}", g.name);
            assert_eq!(kt, k_theory_via_minors(&g));
        }
    }

    #[test]
    fn quotient_graphs_are_free_on_their_vertices() {
        let f = k_theory(&preset_f());
        assert_eq!(f, KTheory::free(3, 0));
        let g = k_theory(&preset_g());
        assert_eq!(g, KTheory::free(4, 0));
    }

    #[test]
    fn single_vertex_no_edges() {
        let g = Graph::from_spec(
            "pt",
            GraphSpec { vertices: vec!["v".into()], edges: vec![] },
        )
        .unwrap();
        assert_eq!(k_theory(&g), KTheory::free(1, 0));
    }

    #[test]
    fn cuntz_algebra_torsion() {
        // one vertex, n = 3 loops: K0 = Z/2, K1 = 0
        let g = Graph::from_spec(
            "O3",
            GraphSpec {
                vertices: vec!["v".into()],
                edges: vec![EdgeFamily {
                    name: "e".into(),
                    src: "v".into(),
                    dst: "v".into(),
                    mult: Multiplicity::Finite(3),
                    mu_weight: 1,
                }],
            },
        )
        .unwrap();
        let kt = k_theory(&g);
        assert_eq!(kt.k0_free_rank, 0);
        assert_eq!(kt.k0_torsion, vec![BigInt::from(2)]);
        assert_eq!(kt.k1_rank, 0);
        assert_eq!(kt, k_theory_via_minors(&g));
    }
}
