//! Exact matrix coefficients of the shift representation on the ideal
//! spanned by the balanced monomials, and the basis normalization constants.

use num_traits::{One, Zero};

use crate::ncalg::{Letter, Word};
use crate::scalar::{QRational, Rational};

use super::operator::FockIndex;
use super::FockError;

/// The balancing powers `(r, t)` with `k + m + t = r + n` and
/// `min(r, t) = 0`.
pub fn minimal_rt(n: u32, m: u32, k: u32) -> (u32, u32) {
    let d = (k + m) as i64 - n as i64;
    if d >= 0 {
        (d as u32, 0)
    } else {
        (0, (-d) as u32)
    }
}

/// Exact action of a word on a basis vector of the shift model:
/// `word . e_idx = amp * e_target` with `amp >= 0`. Returns the target index
/// and `amp^2` (which is rational even when `amp` itself is not), or `None`
/// when the word annihilates the vector.
pub fn exact_word_action(word: &Word, idx: FockIndex) -> Option<(FockIndex, QRational)> {
    let (mut cn, mut cm, mut ck) = (idx.n as i64, idx.m as i64, idx.k as i64);
    let mut amp2 = QRational::one();
    for l in word.0.iter().rev() {
        match (l.index, l.starred) {
            (1, _) => {
                amp2 = amp2.mul(&QRational::q_power(2 * (cn + cm + ck)));
            }
            (2, false) => {
                amp2 = amp2
                    .mul(&QRational::q_power(2 * (cn + cm)))
                    .mul(&QRational::one_minus_q_pow(2 * (ck + 1)));
                ck += 1;
            }
            (2, true) => {
                if ck == 0 {
                    return None;
                }
                amp2 = amp2
                    .mul(&QRational::q_power(2 * (cn + cm)))
                    .mul(&QRational::one_minus_q_pow(2 * ck));
                ck -= 1;
            }
            (3, false) => {
                amp2 = amp2
                    .mul(&QRational::q_power(2 * cn))
                    .mul(&QRational::one_minus_q_pow(2 * (cm + 1)));
                cm += 1;
            }
            (3, true) => {
                if cm == 0 {
                    return None;
                }
                amp2 = amp2
                    .mul(&QRational::q_power(2 * cn))
                    .mul(&QRational::one_minus_q_pow(2 * cm));
                cm -= 1;
            }
            (4, false) => {
                amp2 = amp2.mul(&QRational::one_minus_q_pow(2 * (cn + 1)));
                cn += 1;
            }
            (4, true) => {
                if cn == 0 {
                    return None;
                }
                amp2 = amp2.mul(&QRational::one_minus_q_pow(2 * cn));
                cn -= 1;
            }
            _ => unreachable!("letter index validated on construction"),
        }
    }
    Some((FockIndex::new(cn as u32, cm as u32, ck as u32), amp2))
}

/// Result of the matrix-coefficient formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepConstant {
    /// Exact square of the coefficient; zero on vanishing cases.
    pub c_squared: QRational,
    /// Target basis index, when the action does not vanish.
    pub target: Option<FockIndex>,
    /// The balancing powers used for the source vector.
    pub r: u32,
    pub t: u32,
}

impl RepConstant {
    pub fn value_f64(&self, q0: &Rational) -> f64 {
        self.c_squared
            .evaluate_f64(q0)
            .expect("no pole in (0,1)")
            .max(0.0)
            .sqrt()
    }
}

/// Spells out `z4*^{n4} z3*^{n3} z2*^{n2} z1*^{n1} z1^{m1} z2^{m2} z3^{m3}
/// z4^{m4}` for raw exponent vectors. Unlike [`NormalMonomial`], both `z4*`
/// and `z4` powers may be present here; the coefficient formula is exactly
/// about contracting them.
pub fn spanning_word(star: [u32; 4], unstar: [u32; 4]) -> Word {
    let mut v = Vec::new();
    for i in (0..4).rev() {
        v.extend(std::iter::repeat(Letter::z_star(i as u8 + 1)).take(star[i] as usize));
    }
    for i in 0..4 {
        v.extend(std::iter::repeat(Letter::z(i as u8 + 1)).take(unstar[i] as usize));
    }
    Word(v)
}

/// The matrix coefficient `rho(x) xi_{n,m,k} = C xi_{n',m',k'}` for a
/// balanced monomial `x` of the ideal (both `z1` and `z1*` present), with
/// target `(m4+n-n4, m3+m-n3, m2+k-n2)`; vanishing targets give `C = 0`.
pub fn rep_constant(
    star: [u32; 4],
    unstar: [u32; 4],
    n: u32,
    m: u32,
    k: u32,
) -> Result<RepConstant, FockError> {
    let [n1, n2, n3, n4] = star;
    let [m1, m2, m3, m4] = unstar;
    if n2 + n3 + m1 + m4 != n1 + n4 + m2 + m3 {
        return Err(FockError::UnbalancedMonomial);
    }
    if n1 == 0 || m1 == 0 {
        return Err(FockError::NotIdealMonomial);
    }
    let (r, t) = minimal_rt(n, m, k);
    match exact_word_action(&spanning_word(star, unstar), FockIndex::new(n, m, k)) {
        None => Ok(RepConstant { c_squared: QRational::zero(), target: None, r, t }),
        Some((target, c_squared)) => {
            debug_assert_eq!(target.n as i64, m4 as i64 + n as i64 - n4 as i64);
            debug_assert_eq!(target.m as i64, m3 as i64 + m as i64 - n3 as i64);
            debug_assert_eq!(target.k as i64, m2 as i64 + k as i64 - n2 as i64);
            Ok(RepConstant { c_squared, target: Some(target), r, t })
        }
    }
}

/// Normalization constant `N_{n,m,k} = ||xi_{n,m,k}||^2` of the defining
/// vectors `xi_{n,m,k} = rho(z1^r z1*^t z2^k z3^m z4^n) xi_{0,0,0}`:
///
/// ```text
/// N = q^(2(nm + nk + mk + (r+t)(n+m+k))) prod_{i<=n} (1-q^2i)
///       prod_{i<=m} (1-q^2i) prod_{i<=k} (1-q^2i)
/// ```
pub fn normalization_n(n: u32, m: u32, k: u32) -> QRational {
    let (r, t) = minimal_rt(n, m, k);
    let (ni, mi, ki, rt) = (n as i64, m as i64, k as i64, (r + t) as i64);
    let mut acc = QRational::q_power(2 * (ni * mi + ni * ki + mi * ki + rt * (ni + mi + ki)));
    for bound in [n, m, k] {
        for i in 1..=bound as i64 {
            acc = acc.mul(&QRational::one_minus_q_pow(2 * i));
        }
    }
    acc
}

/// The word `z1^r z1*^t z2^k z3^m z4^n` whose action on the vacuum defines
/// the (unnormalized) basis vector `xi_{n,m,k}`.
pub fn defining_word(n: u32, m: u32, k: u32) -> Word {
    let (r, t) = minimal_rt(n, m, k);
    let mut v = Vec::new();
    v.extend(std::iter::repeat(Letter::z(1)).take(r as usize));
    v.extend(std::iter::repeat(Letter::z_star(1)).take(t as usize));
    v.extend(std::iter::repeat(Letter::z(2)).take(k as usize));
    v.extend(std::iter::repeat(Letter::z(3)).take(m as usize));
    v.extend(std::iter::repeat(Letter::z(4)).take(n as usize));
    Word(v)
}

/// Exact partial sum of `tr rho(z1 z1*)` over the truncated box: the cube of
/// a finite geometric sum, converging to `1/(1-q0^2)^3`.
pub fn trace_z1z1star(q0: &Rational, cutoff: u32) -> Rational {
    let mut geo = Rational::zero();
    let q2 = q0 * q0;
    let mut pw = Rational::one();
    for _ in 0..cutoff {
        geo += &pw;
        pw *= &q2;
    }
    &geo * &geo * &geo
}
