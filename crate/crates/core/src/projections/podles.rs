//! The standard Podles sphere sitting under the twistor quotient: the
//! character and the irreducible representation of the circle-invariant
//! subalgebra of the quotient generated by `z3`, `z4`.
//!
//! Under `z4 -> alpha*`, `z3 -> gamma`, the representation acts on l2(N) by
//!
//! ```text
//! gamma e_m = q^(m+g) e_m,    alpha e_m = sqrt(1 - q^(2(m+g))) e_{m-1},
//! ```
//!
//! and the character sends `alpha -> 1`, `gamma -> 0`. The index offset `g`
//! is a convention left open by the cited constructions; it is calibrated
//! against the printed pairing summand and recorded in reports.

use std::collections::BTreeMap;

use crate::ncalg::{Element, Letter, Word};
use crate::scalar::{geometric_sum, rational_to_f64, QRational, Rational};

use super::ProjError;

/// Representation conventions for the two Fredholm modules: the character
/// (classical point) for the rank pairing and the irreducible with diagonal
/// offset `gamma_offset` for the charge pairing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairingConvention {
    pub gamma_offset: u32,
}

impl Default for PairingConvention {
    fn default() -> Self {
        PairingConvention { gamma_offset: 0 }
    }
}

/// The diagonal of the irreducible representation of a quotient element as a
/// polynomial in `Q = q^(2m)`: entry `n -> coefficient of Q^n`.
///
/// Only the self-paired monomials `z3*^n z3^n` reach the diagonal: all other
/// weight-0 quotient monomials shift the representation space.
pub fn sigma_diagonal_poly(
    e: &Element,
    conv: PairingConvention,
) -> Result<BTreeMap<u32, QRational>, ProjError> {
    let mut out: BTreeMap<u32, QRational> = BTreeMap::new();
    for (m, c) in e.terms() {
        if m.star[0] > 0 || m.star[1] > 0 || m.unstar[0] > 0 || m.unstar[1] > 0 {
            return Err(ProjError::NotInQuotient);
        }
        if m.mu_weight() != 0 {
            return Err(ProjError::NotInvariant);
        }
        if m.star[3] != m.unstar[3] {
            continue; // net alpha shift: off-diagonal
        }
        // weight 0 and n4 = m4 = 0 force n3 = m3
        debug_assert_eq!(m.star[2], m.unstar[2]);
        let n = m.star[2];
        let scale = QRational::q_power(2 * (n as i64) * (conv.gamma_offset as i64));
        let entry = out.entry(n).or_insert_with(QRational::zero);
        *entry = entry.add(&c.mul(&scale));
        if entry.is_zero() {
            out.remove(&n);
        }
    }
    Ok(out)
}

/// The character value: `alpha -> 1`, `gamma -> 0` leaves the constant term.
pub fn character(e: &Element) -> Result<QRational, ProjError> {
    for (m, _) in e.terms() {
        if m.star[0] > 0 || m.star[1] > 0 || m.unstar[0] > 0 || m.unstar[1] > 0 {
            return Err(ProjError::NotInQuotient);
        }
        if m.mu_weight() != 0 {
            return Err(ProjError::NotInvariant);
        }
    }
    Ok(e.constant_coeff())
}

/// The per-level summand `character - diagonal` as a polynomial in
/// `Q = q^(2m)`; its constant term always cancels.
pub fn pairing_summand_poly(
    trace: &Element,
    conv: PairingConvention,
) -> Result<BTreeMap<u32, QRational>, ProjError> {
    let chi = character(trace)?;
    let mut poly = sigma_diagonal_poly(trace, conv)?;
    for c in poly.values_mut() {
        *c = c.neg();
    }
    let entry = poly.entry(0).or_insert_with(QRational::zero);
    *entry = entry.add(&chi);
    poly.retain(|_, c| !c.is_zero());
    Ok(poly)
}

/// Sums the summand polynomial over all levels through closed-form
/// geometric series: `sum_m Q^n = 1/(1 - q^(2n))` for `n >= 1`.
pub fn sum_summand(poly: &BTreeMap<u32, QRational>) -> Result<QRational, ProjError> {
    let mut acc = QRational::zero();
    for (n, c) in poly {
        if *n == 0 {
            if !c.is_zero() {
                // a surviving constant term sums to a divergent series
                return Err(ProjError::DivergentPairing);
            }
            continue;
        }
        acc = acc.add(&geometric_sum(c, 2 * n));
    }
    Ok(acc)
}

/// Truncated numeric evaluation of the pairing from the raw quotient words,
/// through dense shift matrices; an independent route used as cross-check.
pub fn numeric_pairing(
    words: &[(QRational, Word)],
    conv: PairingConvention,
    q0: &Rational,
    cutoff: usize,
) -> f64 {
    let q = rational_to_f64(q0);
    let dim = cutoff;
    let mut total = 0.0f64;
    for (scale, w) in words {
        let s = scale.evaluate_f64(q0).expect("no pole");
        let chi = if w.0.iter().any(|l| l.index == 3) { 0.0 } else { 1.0 };
        let op = apply_word_matrix(w, q, conv.gamma_offset, dim);
        let mut diag_sum = 0.0f64;
        for m in 0..dim {
            diag_sum += op[m * dim + m];
        }
        total += s * (chi * dim as f64 - diag_sum);
    }
    total
}

/// Dense matrix of a quotient word under the Podles representation.
fn apply_word_matrix(w: &Word, q: f64, offset: u32, dim: usize) -> Vec<f64> {
    let mut acc = identity(dim);
    for l in w.0.iter().rev() {
        let m = letter_matrix(*l, q, offset, dim);
        acc = mat_mul(&m, &acc, dim);
    }
    acc
}

fn identity(dim: usize) -> Vec<f64> {
    let mut m = vec![0.0; dim * dim];
    for i in 0..dim {
        m[i * dim + i] = 1.0;
    }
    m
}

fn letter_matrix(l: Letter, q: f64, offset: u32, dim: usize) -> Vec<f64> {
    let mut m = vec![0.0; dim * dim];
    let g = offset as i32;
    match (l.index, l.starred) {
        // z3 = gamma (diagonal), z3* = gamma* (same, real)
        (3, _) => {
            for i in 0..dim {
                m[i * dim + i] = q.powi(i as i32 + g);
            }
        }
        // z4 = alpha*: up-shift
        (4, false) => {
            for i in 0..dim - 1 {
                let amp = (1.0 - q.powi(2 * (i as i32 + 1 + g))).sqrt();
                m[(i + 1) * dim + i] = amp;
            }
        }
        // z4* = alpha: down-shift
        (4, true) => {
            for i in 1..dim {
                let amp = (1.0 - q.powi(2 * (i as i32 + g))).sqrt();
                m[(i - 1) * dim + i] = amp;
            }
        }
        _ => panic!("word leaves the quotient algebra"),
    }
    m
}

fn mat_mul(a: &[f64], b: &[f64], dim: usize) -> Vec<f64> {
    let mut out = vec![0.0; dim * dim];
    for i in 0..dim {
        for k in 0..dim {
            let aik = a[i * dim + k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..dim {
                out[i * dim + j] += aik * b[k * dim + j];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::parse;
    use crate::scalar::rational;

    fn quotient(text: &str) -> Element {
        parse(text).unwrap().quotient_kill(&[1, 2])
    }

    #[test]
    fn character_of_the_quotient_generators() {
        // alpha alpha* = z4* z4 has character 1; gamma-type terms die
        let e = quotient("z4' z4");
        assert!(character(&e).unwrap().is_one());
        let f = quotient("z3 z3'");
        assert!(character(&f).unwrap().is_zero());
    }

    #[test]
    fn diagonal_of_gamma_powers() {
        let conv = PairingConvention::default();
        let e = quotient("z3'^2 z3^2");
        let poly = sigma_diagonal_poly(&e, conv).unwrap();
        assert_eq!(poly.len(), 1);
        assert!(poly[&2].is_one());
    }

    #[test]
    fn off_quotient_input_is_rejected() {
        let e = parse("z1").unwrap();
        assert!(matches!(character(&e), Err(ProjError::NotInQuotient)));
    }

    #[test]
    fn unit_pairs_to_zero_charge() {
        let conv = PairingConvention::default();
        let poly = pairing_summand_poly(&Element::one(), conv).unwrap();
        assert!(poly.is_empty());
        assert!(sum_summand(&poly).unwrap().is_zero());
    }

    #[test]
    fn numeric_route_matches_exact_on_a_simple_trace() {
        // trace of the level-1 projection quotient: 1 + (1-q^2) z3* z3
        let conv = PairingConvention::default();
        let trace = quotient("z3 z3' + z4' z4");
        let poly = pairing_summand_poly(&trace, conv).unwrap();
        let exact = sum_summand(&poly).unwrap();
        let v = exact.evaluate_f64(&rational(1, 2)).unwrap();
        let words = vec![
            (QRational::one(), parse_word("z3 z3'")),
            (QRational::one(), parse_word("z4' z4")),
        ];
        let numeric = numeric_pairing(&words, conv, &rational(1, 2), 60);
        assert!((v - numeric).abs() < 1e-10, "exact {} vs numeric {}", v, numeric);
        assert_eq!(exact, QRational::from_integer(-1));
    }

    fn parse_word(text: &str) -> Word {
        // only simple juxtaposed letters appear in these tests
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let starred = tok.ends_with('\'');
            let idx = tok.as_bytes()[1] - b'0';
            letters.push(Letter::new(idx, starred));
        }
        Word(letters)
    }
}
