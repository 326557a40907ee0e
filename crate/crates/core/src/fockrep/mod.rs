//! Weighted-shift representation of the sphere generators on a truncated
//! index space, serving as the numerical oracle for the defining relations,
//! for the eigenvalue families of the ideal representation, and for the
//! matrix-coefficient formula.
//!
//! Truncation breaks the shift isometries at the boundary, so every operator
//! identity is asserted on interior vectors only: indices at least the word
//! degree away from the cutoff in each coordinate.

mod constants;
mod operator;

pub use constants::{
    defining_word, exact_word_action, minimal_rt, normalization_n, rep_constant,
    spanning_word, trace_z1z1star, RepConstant,
};
pub use operator::{
    box_indices, exact_diagonal_matches, exact_zz_star_diagonal, interior_indices,
    rep_element, rep_generator, rep_letter, rep_word, FockIndex, FockOperator,
};

use thiserror::Error;

use crate::ncalg::sphere_relation_families;
use crate::scalar::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("cutoff must be at least 4")]
    CutoffTooSmall,
    #[error("monomial is not balanced for the circle action")]
    UnbalancedMonomial,
    #[error("monomial lies outside the ideal (needs both z1 and z1*)")]
    NotIdealMonomial,
}

/// Residual of one relation family on interior vectors.
#[derive(Clone, Debug)]
pub struct RelationResidual {
    pub label: String,
    pub residual: f64,
}

/// Checks every defining relation as an operator identity at `q0`.
pub fn check_relations(q0: &Rational, cutoff: u32) -> Result<Vec<RelationResidual>, FockError> {
    if cutoff < 4 {
        return Err(FockError::CutoffTooSmall);
    }
    let mut out = Vec::new();
    for (label, terms) in sphere_relation_families() {
        let mut acc = FockOperator::zero(cutoff);
        let mut degree = 0u32;
        for (coeff, word) in &terms {
            degree = degree.max(word.len() as u32);
            let c = coeff.evaluate_f64(q0).expect("no pole in (0,1)");
            acc = acc.add(&rep_word(word, q0, cutoff).scale(c));
        }
        out.push(RelationResidual {
            label,
            residual: acc.max_interior_column_norm(degree),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{normal_form, Element, Letter, NormalMonomial, Word};
    use crate::scalar::{rational, QRational};
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const TOL: f64 = 1e-10;

    fn q_half() -> Rational {
        rational(1, 2)
    }

    #[test]
    fn zz_star_diagonals_match_the_eigenvalue_families() {
        for i in 1..=4u8 {
            assert!(exact_diagonal_matches(i, &q_half(), 8, 1e-12), "family {}", i);
        }
    }

    #[test]
    fn diagonals_vanish_at_the_vacuum_for_shift_generators() {
        let origin = FockIndex::new(0, 0, 0);
        for i in 2..=4u8 {
            let w = Word(vec![Letter::z(i), Letter::z_star(i)]);
            let op = rep_word(&w, &q_half(), 6);
            assert_eq!(op.entry(origin, origin), 0.0, "z{} z{}*", i, i);
        }
        let w1 = Word(vec![Letter::z(1), Letter::z_star(1)]);
        let op1 = rep_word(&w1, &q_half(), 6);
        assert_eq!(op1.entry(origin, origin), 1.0);
    }

    #[test]
    fn exact_diagonal_families_sum_to_one() {
        for idx in box_indices(6) {
            let mut acc = QRational::zero();
            for i in 1..=4u8 {
                acc = acc.add(&exact_zz_star_diagonal(i, idx));
            }
            assert!(acc.is_one(), "partition fails at {:?}", idx);
        }
    }

    #[test]
    fn all_relations_hold_numerically() {
        let rels = check_relations(&q_half(), 8).unwrap();
        for r in &rels {
            assert!(r.residual <= TOL, "{}: {}", r.label, r.residual);
        }
        assert!(rels.len() == 6 + 12 + 4 + 1);
    }

    #[test]
    fn small_cutoff_is_an_error() {
        assert!(matches!(check_relations(&q_half(), 0), Err(FockError::CutoffTooSmall)));
    }

    #[test]
    fn rep_of_unit_is_identity() {
        let op = rep_element(&Element::one(), &q_half(), 5);
        for idx in box_indices(5) {
            assert_eq!(op.entry(idx, idx), 1.0);
            assert_eq!(op.column(idx).len(), 1);
        }
    }

    #[test]
    fn z4_commutation_element_vanishes_on_interior() {
        // z4* z4 - q^2 z4 z4* - (1 - q^2) as an element, represented
        let e = crate::ncalg::parse("z4' z4 - q^2 z4 z4' - (1 - q^2)").unwrap();
        let op = rep_element(&e, &q_half(), 8);
        assert!(op.max_interior_column_norm(2) <= TOL);
    }

    #[test]
    fn representation_is_a_homomorphism_on_interior_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let cutoff = 10;
        for _ in 0..200 {
            let len = rng.gen_range(0..=5);
            let w = Word(
                (0..len)
                    .map(|_| Letter::new(rng.gen_range(1..=4), rng.gen_bool(0.5)))
                    .collect(),
            );
            let direct = rep_word(&w, &q_half(), cutoff);
            let via_nf = rep_element(&normal_form(&w), &q_half(), cutoff);
            let resid = direct.sub(&via_nf).max_interior_column_norm(len as u32);
            assert!(resid <= TOL, "word {} residual {}", w, resid);
        }
    }

    #[test]
    fn exact_word_action_agrees_with_numeric_operators() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let cutoff = 9;
        for _ in 0..120 {
            let len = rng.gen_range(1..=5);
            let w = Word(
                (0..len)
                    .map(|_| Letter::new(rng.gen_range(1..=4), rng.gen_bool(0.5)))
                    .collect(),
            );
            let src = FockIndex::new(
                rng.gen_range(0..3),
                rng.gen_range(0..3),
                rng.gen_range(0..3),
            );
            let op = rep_word(&w, &q_half(), cutoff);
            match exact_word_action(&w, src) {
                None => assert!(op.column_norm(src) <= TOL),
                Some((tgt, amp2)) => {
                    let amp = amp2.evaluate_f64(&q_half()).unwrap().max(0.0).sqrt();
                    assert!((op.entry(tgt, src) - amp).abs() <= 1e-9);
                }
            }
        }
    }

    #[test]
    fn rep_constant_matches_oracle_for_ideal_monomials() {
        // all balanced ideal monomials of degree <= 4
        let monos: [([u32; 4], [u32; 4]); 7] = [
            ([1, 0, 0, 0], [1, 0, 0, 0]),
            ([2, 0, 0, 0], [2, 0, 0, 0]),
            ([1, 1, 0, 0], [1, 1, 0, 0]),
            ([1, 0, 1, 0], [1, 0, 1, 0]),
            ([1, 0, 0, 1], [1, 0, 0, 1]),
            ([1, 1, 0, 0], [1, 0, 1, 0]),
            ([1, 0, 1, 0], [1, 1, 0, 0]),
        ];
        let cutoff = 12;
        for (star, unstar) in monos {
            let op = rep_word(&spanning_word(star, unstar), &q_half(), cutoff);
            for n in 0..3 {
                for m in 0..3 {
                    for k in 0..3 {
                        let c = rep_constant(star, unstar, n, m, k).unwrap();
                        let src = FockIndex::new(n, m, k);
                        match c.target {
                            None => assert!(op.column_norm(src) <= TOL),
                            Some(tgt) => {
                                let v = c.value_f64(&q_half());
                                assert!(
                                    (op.entry(tgt, src) - v).abs() <= 1e-9,
                                    "{:?}/{:?} at ({n},{m},{k})",
                                    star,
                                    unstar
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn normalization_matches_numeric_norm() {
        let cutoff = 12;
        for (n, m, k) in [(1, 1, 1), (2, 0, 1), (0, 2, 2), (3, 1, 0)] {
            let w = defining_word(n, m, k);
            let op = rep_word(&w, &q_half(), cutoff);
            let norm2 = op.column_norm(FockIndex::new(0, 0, 0)).powi(2);
            let exact = normalization_n(n, m, k).evaluate_f64(&q_half()).unwrap();
            assert!((norm2 - exact).abs() <= 1e-9, "({n},{m},{k})");
        }
    }

    #[test]
    fn trace_is_symmetric_in_the_axes() {
        // the summand q^(2(n+m+k)) is symmetric, so nothing to permute; pin
        // the cutoff-1 case instead
        assert_eq!(trace_z1z1star(&q_half(), 1), rational(1, 1));
    }
}
