//! The instanton 4-sphere inside the 7-sphere: the generators `a`, `b`, `R`
//! of the fixed-point subalgebra, their seven relations, and the 4x4
//! instanton projector `G`.

use crate::ncalg::{parse_with_macros, AlgMatrix, Element, Macros, ParseError};


/// `a = z1 z4* - z2 z3*`, `b = z1 z3 + q^-1 z2 z4`, `R = z1 z1* + z2 z2*`,
/// each in normal form.
pub fn instanton_generators() -> (Element, Element, Element) {
    let a = crate::ncalg::parse("z1 z4' - z2 z3'").unwrap();
    let b = crate::ncalg::parse("z1 z3 + q^-1 z2 z4").unwrap();
    let r = crate::ncalg::parse("z1 z1' + z2 z2'").unwrap();
    (a, b, r)
}

/// Macro table binding `a`, `b`, `R` for the expression parser.
pub fn standard_macros() -> Macros {
    let (a, b, r) = instanton_generators();
    let mut m = Macros::new();
    m.insert("a".to_string(), a);
    m.insert("b".to_string(), b);
    m.insert("R".to_string(), r);
    m
}

/// Parses an expression with the `a`, `b`, `R` abbreviations available.
pub fn parse(text: &str) -> Result<Element, ParseError> {
    parse_with_macros(text, &standard_macros())
}

/// One relation check: the label and the residual `lhs - rhs` in normal form.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub label: String,
    pub residual: Element,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Verifies the seven relations of the instanton sphere generators.
pub fn verify_s4_relations() -> Vec<RelationCheck> {
    let checks = [
        ("Ra = q^-2 aR", "R a - q^-2 a R"),
        ("Rb = q^2 bR", "R b - q^2 b R"),
        ("ab = q^3 ba", "a b - q^3 b a"),
        ("ab* = q^-1 b*a", "a b' - q^-1 b' a"),
        ("aa* + q^2 bb* = R(1 - q^2 R)", "a a' + q^2 b b' - R (1 - q^2 R)"),
        ("aa* = q^2 a*a + (1-q^2) R^2", "a a' - q^2 a' a - (1 - q^2) R^2"),
        ("b*b = q^4 bb* + (1-q^2) R", "b' b - q^4 b b' - (1 - q^2) R"),
    ];
    checks
        .iter()
        .map(|(label, expr)| RelationCheck {
            label: (*label).to_string(),
            residual: parse(expr).expect("relation expression parses"),
        })
        .collect()
}

/// The polynomial generator of the K-theory of the instanton sphere:
///
/// ```text
///      | q^2 R    0      q a     q^2 b   |
///      | 0        q^2 R  q b*   -q^3 a*  |
///  G = | q a*     q b    1 - R   0       |
///      | q^2 b*  -q^3 a  0       1-q^4 R |
/// ```
pub fn projector_g() -> AlgMatrix {
    let rows = [
        ["q^2 R", "0", "q a", "q^2 b"],
        ["0", "q^2 R", "q b'", "- q^3 a'"],
        ["q a'", "q b", "1 - R", "0"],
        ["q^2 b'", "- q^3 a", "0", "1 - q^4 R"],
    ];
    let entries = rows
        .iter()
        .flatten()
        .map(|s| parse(s).expect("projector entry parses"))
        .collect();
    AlgMatrix::new(4, 4, entries)
}

/// True iff `M^2 = M` and `M* = M` hold entrywise in normal form.
pub fn verify_projector(m: &AlgMatrix) -> bool {
    if !m.is_square() {
        return false;
    }
    m.mul(m).sub(m).is_zero() && m.adjoint().sub(m).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::NormalMonomial;
    use crate::scalar::QRational;

    #[test]
    fn generators_match_their_defining_words() {
        let (a, b, r) = instanton_generators();
        // a = z1 z4* - z2 z3* stays two monomials after normalization
        assert_eq!(a.num_terms(), 2);
        assert_eq!(b.num_terms(), 2);
        // R = q^2 z1* z1 + z2* z2 in normal form
        let m1 = NormalMonomial::new([1, 0, 0, 0], [1, 0, 0, 0]);
        let m2 = NormalMonomial::new([0, 1, 0, 0], [0, 1, 0, 0]);
        assert_eq!(r.coeff(&m1), QRational::q_power(2));
        assert!(r.coeff(&m2).is_one());
        assert_eq!(r.num_terms(), 2);
    }

    #[test]
    fn generators_are_mu_invariant() {
        let (a, b, r) = instanton_generators();
        assert!(a.is_mu_invariant());
        assert!(b.is_mu_invariant());
        assert!(r.is_mu_invariant());
    }

    #[test]
    fn r_is_self_adjoint() {
        let (_, _, r) = instanton_generators();
        assert_eq!(r.adjoint(), r);
    }

    #[test]
    fn seven_relations_hold() {
        for check in verify_s4_relations() {
            assert!(check.holds(), "relation `{}` failed: {}", check.label, check.residual);
        }
    }

    #[test]
    fn unit_commutes() {
        let (_, _, r) = instanton_generators();
        let one = Element::one();
        assert!(r.mul(&one).sub(&one.mul(&r)).is_zero());
    }

    #[test]
    fn ra_equals_q_minus2_ar_directly() {
        let (a, _, r) = instanton_generators();
        let lhs = r.mul(&a);
        let rhs = a.mul(&r).scale(&QRational::q_power(-2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn g_is_a_projector() {
        assert!(verify_projector(&projector_g()));
    }

    #[test]
    fn identity_is_a_projector_and_z1_is_not() {
        assert!(verify_projector(&AlgMatrix::identity(4)));
        let m = AlgMatrix::new(1, 1, vec![crate::ncalg::parse("z1").unwrap()]);
        assert!(!verify_projector(&m));
    }

    #[test]
    fn trace_of_g_is_mu_invariant_and_self_adjoint() {
        let t = projector_g().trace();
        assert!(t.is_mu_invariant());
        assert!(t.is_self_adjoint());
    }

    #[test]
    fn quotient_of_g_is_diag_0011() {
        let g = projector_g().map(|e| e.quotient_kill(&[1, 2]));
        let mut expected = AlgMatrix::zero(4, 4);
        *expected.entry_mut(2, 2) = Element::one();
        *expected.entry_mut(3, 3) = Element::one();
        assert_eq!(g, expected);
    }

    #[test]
    fn a_dies_in_the_twistor_quotient() {
        let (a, _, _) = instanton_generators();
        assert!(a.quotient_kill(&[1, 2]).is_zero());
    }
}
