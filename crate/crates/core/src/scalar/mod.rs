//! Exact scalar arithmetic: rationals, Laurent polynomials in `q`, and the
//! fraction field Q(q), plus closed-form geometric summation.
//!
//! Every symbolic coefficient in the engine lives in [`QRational`]. The
//! deformation parameter `q` is treated as a formal real parameter in (0,1),
//! so the `*`-operation acts as the identity on coefficients.

mod laurent;
mod qrational;

pub use laurent::QLaurent;
pub use qrational::{geometric_sum, rational_to_f64, QRational};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Arbitrary-precision rational number (reduced, positive denominator).
pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero in Q(q)")]
    DivisionByZero,
    #[error("pole at the evaluation point")]
    PoleAtPoint,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_qrational() -> impl Strategy<Value = QRational> {
        // Small random Laurent fractions; denominators built to be nonzero.
        let term = (-4i64..5, -3i64..4);
        (
            proptest::collection::vec(term.clone(), 0..4),
            proptest::collection::vec(term, 0..3),
        )
            .prop_map(|(nts, dts)| {
                let num = QLaurent::from_terms(
                    nts.iter().map(|(e, c)| (*e, BigRational::from_integer(BigInt::from(*c)))),
                );
                let mut den = QLaurent::one();
                for (e, c) in dts {
                    den = den.add(&QLaurent::monomial(
                        e.abs(),
                        BigRational::from_integer(BigInt::from(c)),
                    ));
                }
                if den.is_zero() {
                    den = QLaurent::one();
                }
                QRational::new(num, den).unwrap()
            })
    }

    proptest! {
        #[test]
        fn canonicalization_is_idempotent(x in arb_qrational()) {
            let re = QRational::new(x.numerator().clone(), x.denominator().clone()).unwrap();
            prop_assert_eq!(re, x);
        }

        #[test]
        fn evaluation_is_multiplicative(x in arb_qrational(), y in arb_qrational()) {
            let q0 = rational(1, 2);
            let lhs = x.mul(&y).evaluate_at(&q0);
            if let (Ok(vx), Ok(vy), Ok(vxy)) =
                (x.evaluate_at(&q0), y.evaluate_at(&q0), lhs)
            {
                prop_assert_eq!(vxy, vx * vy);
            }
        }

        #[test]
        fn geometric_sum_inverts(x in arb_qrational(), d in 1u32..9) {
            let g = geometric_sum(&x, d);
            let back = QRational::one_minus_q_pow(d as i64).mul(&g);
            prop_assert_eq!(back, x);
        }

        #[test]
        fn field_axioms_spot_checks(x in arb_qrational(), y in arb_qrational()) {
            prop_assert_eq!(x.add(&y), y.add(&x));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.sub(&x), QRational::zero());
            if !y.is_zero() {
                let z = x.div(&y).unwrap().mul(&y);
                prop_assert_eq!(z, x);
            }
        }
    }
}
