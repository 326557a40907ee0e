//! Laurent polynomials in the deformation parameter `q` with exact rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// A Laurent polynomial `sum_e c_e q^e` with `c_e` rational and `e` ranging
/// over a finite set of integers. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigRational>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    /// `c * q^exp`.
    pub fn monomial(exp: i64, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        QLaurent { terms }
    }

    /// `q^exp`.
    pub fn q_power(exp: i64) -> Self {
        Self::monomial(exp, BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::monomial(0, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    /// True when the polynomial is a single term `c * q^e`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QLaurent {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiply by `q^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn evaluate(&self, q0: &Rational) -> Rational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * rational_pow(q0, *e);
        }
        acc
    }

    /// Leading coefficient of the lowest-degree term.
    pub fn lowest_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next()
    }

    /// Splits into `(shift, poly)` with `self = q^shift * poly` and
    /// `poly` an honest polynomial with nonzero constant term.
    pub fn split_shift(&self) -> (i64, QLaurent) {
        match self.min_exp() {
            None => (0, Self::zero()),
            Some(s) => (s, self.shift(-s)),
        }
    }

    /// Polynomial division for nonnegative-exponent operands: returns
    /// `(quotient, remainder)` with `self = q * div + r`, `deg r < deg div`.
    /// Panics if either operand has negative exponents or `div` is zero.
    fn div_rem_poly(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        assert!(self.min_exp().unwrap_or(0) >= 0 && div.min_exp().unwrap_or(0) >= 0);
        let dd = div.max_exp().unwrap();
        let dc = div.coeff(dd);
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while !rem.is_zero() {
            let rd = rem.max_exp().unwrap();
            if rd < dd {
                break;
            }
            let factor = Self::monomial(rd - dd, rem.coeff(rd) / &dc);
            quo = quo.add(&factor);
            rem = rem.sub(&factor.mul(div));
        }
        (quo, rem)
    }

    /// Monic gcd of two polynomials (nonnegative exponents). gcd(0, b) = monic b.
    pub fn gcd_poly(a: &Self, b: &Self) -> Self {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.div_rem_poly(&y);
            x = y;
            y = r;
        }
        x.make_monic()
    }

    /// Divides exactly by `div` (panics on nonzero remainder). Operands are
    /// Laurent; shifts are handled.
    pub fn div_exact(&self, div: &Self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (sa, pa) = self.split_shift();
        let (sb, pb) = div.split_shift();
        let (q, r) = pa.div_rem_poly(&pb);
        assert!(r.is_zero(), "non-exact Laurent division");
        q.shift(sa - sb)
    }

    fn make_monic(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(d) => {
                let lc = self.coeff(d);
                self.scale(&(BigRational::one() / lc))
            }
        }
    }

    /// Exact square root when `self` is a perfect square in the Laurent ring,
    /// normalized to have positive lowest coefficient.
    pub fn sqrt(&self) -> Option<QLaurent> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (s, p) = self.split_shift();
        if s % 2 != 0 {
            return None;
        }
        let deg = p.max_exp().unwrap();
        if deg % 2 != 0 {
            return None;
        }
        let c0 = p.coeff(0);
        if c0.is_negative() {
            return None;
        }
        let r0 = rational_sqrt(&c0)?;
        // Solve r^2 = p coefficient by coefficient from the bottom.
        let mut root = QLaurent::monomial(0, r0.clone());
        let two_r0 = &r0 + &r0;
        for e in 1..=deg / 2 {
            // coefficient of q^e in p minus cross terms of already-known root coeffs
            let mut cross = BigRational::zero();
            for i in 1..e {
                cross += root.coeff(i) * root.coeff(e - i);
            }
            let ce = (p.coeff(e) - cross) / &two_r0;
            root.add_term(e, ce);
        }
        let cand = root.shift(s / 2);
        if cand.mul(&cand) == *self {
            Some(cand)
        } else {
            None
        }
    }
}

fn rational_pow(q0: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow::pow(q0.clone(), e as usize)
    } else {
        let p = num_traits::pow::pow(q0.clone(), (-e) as usize);
        BigRational::one() / p
    }
}

fn rational_sqrt(c: &Rational) -> Option<Rational> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    if &(&n * &n) == c.numer() && &(&d * &d) == c.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if *e != 0 {
                if show_coeff {
                    write!(f, " ")?;
                }
                if *e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", e)?;
                }
            }
        }
        Ok(())
    }
}
