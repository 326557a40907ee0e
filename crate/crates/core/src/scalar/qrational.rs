//! The field Q(q) of rational functions in the deformation parameter.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::QLaurent;
use super::{Rational, ScalarError};

/// An element of Q(q), stored as a reduced fraction of Laurent polynomials.
///
/// Canonical form: the denominator is an ordinary polynomial with constant
/// coefficient 1 (all `q`-power shifts live in the numerator), and the
/// fraction is reduced. Structural equality is then field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRational {
    num: QLaurent,
    den: QLaurent,
}

impl QRational {
    pub fn new(num: QLaurent, den: QLaurent) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: QLaurent, den: QLaurent) -> Self {
        if num.is_zero() {
            return QRational { num: QLaurent::zero(), den: QLaurent::one() };
        }
        let (sn, pn) = num.split_shift();
        let (sd, pd) = den.split_shift();
        let g = QLaurent::gcd_poly(&pn, &pd);
        let mut n = pn.div_exact(&g);
        let mut d = pd.div_exact(&g);
        // Denominator constant term becomes 1.
        let c = d.lowest_coeff().expect("nonzero denominator").clone();
        let inv = BigRational::one() / c;
        n = n.scale(&inv).shift(sn - sd);
        d = d.scale(&inv);
        QRational { num: n, den: d }
    }

    pub fn zero() -> Self {
        QRational { num: QLaurent::zero(), den: QLaurent::one() }
    }

    pub fn one() -> Self {
        QRational { num: QLaurent::one(), den: QLaurent::one() }
    }

    pub fn from_laurent(p: QLaurent) -> Self {
        QRational { num: p, den: QLaurent::one() }
    }

    /// `q^exp`.
    pub fn q_power(exp: i64) -> Self {
        Self::from_laurent(QLaurent::q_power(exp))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_laurent(QLaurent::from_integer(n))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_laurent(QLaurent::monomial(0, c))
    }

    /// `1 - q^exp`, the ubiquitous factor of the q-world.
    pub fn one_minus_q_pow(exp: i64) -> Self {
        Self::from_laurent(QLaurent::one().sub(&QLaurent::q_power(exp)))
    }

    pub fn numerator(&self) -> &QLaurent {
        &self.num
    }

    pub fn denominator(&self) -> &QLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::reduced(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QRational { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduced(self.num.mul(&other.den), self.den.mul(&other.num)))
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        Self::one().div(self)
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        if e == 0 {
            return Ok(Self::one());
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact evaluation at `q = q0`; a pole is an error.
    pub fn evaluate_at(&self, q0: &Rational) -> Result<Rational, ScalarError> {
        if q0.is_zero() {
            return Err(ScalarError::PoleAtPoint);
        }
        let d = self.den.evaluate(q0);
        if d.is_zero() {
            return Err(ScalarError::PoleAtPoint);
        }
        Ok(self.num.evaluate(q0) / d)
    }

    pub fn evaluate_f64(&self, q0: &Rational) -> Result<f64, ScalarError> {
        let v = self.evaluate_at(q0)?;
        Ok(rational_to_f64(&v))
    }

    /// Returns the value as a rational constant when `self` is q-free.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.den.is_one() && self.num.is_monomial() && self.num.min_exp() == Some(0) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Returns the value as an integer when `self` is a q-free integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        let c = self.as_constant()?;
        if c.denom().is_one() {
            Some(c.numer().clone())
        } else {
            None
        }
    }

    /// Exact square root when `self` is a perfect square in Q(q).
    pub fn sqrt(&self) -> Option<QRational> {
        let n = self.num.sqrt()?;
        let d = self.den.sqrt()?;
        Some(Self::reduced(n, d))
    }
}

/// Closed form of the geometric series `sum_{m>=0} coefficient * q^(step*m)`,
/// namely `coefficient / (1 - q^step)`.
pub fn geometric_sum(coefficient: &QRational, step: u32) -> QRational {
    assert!(step >= 1, "geometric series step must be positive");
    coefficient
        .div(&QRational::one_minus_q_pow(step as i64))
        .expect("1 - q^step is nonzero")
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    // Good enough for the desk-scale magnitudes used here.
    let num = r.numer();
    let den = r.denom();
    str_to_f64(&num.to_string()) / str_to_f64(&den.to_string())
}

fn str_to_f64(s: &str) -> f64 {
    s.parse::<f64>().unwrap_or(f64::NAN)
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q_pow(e: i64) -> QRational {
        QRational::q_power(e)
    }

    fn rat(n: i64, d: i64) -> Rational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn telescoping_sum() {
        // (1 - q^2) + q^2 = 1
        let s = QRational::one_minus_q_pow(2).add(&q_pow(2));
        assert!(s.is_one());
    }

    #[test]
    fn exponent_addition() {
        assert_eq!(q_pow(4).mul(&q_pow(-2)), q_pow(2));
    }

    #[test]
    fn expanded_equality() {
        // q^6 (1 + q^2) = q^6 + q^8
        let lhs = q_pow(6).mul(&QRational::one().add(&q_pow(2)));
        let rhs = q_pow(6).add(&q_pow(8));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_closed_forms() {
        // 1/(1-q^2)^3 at q = 1/2 is 64/27
        let x = QRational::one_minus_q_pow(2).pow(3).unwrap().inverse().unwrap();
        assert_eq!(x.evaluate_at(&rat(1, 2)).unwrap(), rat(64, 27));
        assert_eq!(q_pow(4).evaluate_at(&rat(1, 2)).unwrap(), rat(1, 16));
        let y = QRational::one_minus_q_pow(2)
            .div(&QRational::one_minus_q_pow(2))
            .unwrap();
        assert_eq!(y.evaluate_at(&rat(1, 3)).unwrap(), rat(1, 1));
    }

    #[test]
    fn pole_is_an_error() {
        let x = QRational::one_minus_q_pow(2).inverse().unwrap();
        assert!(matches!(x.evaluate_at(&rat(1, 1)), Err(ScalarError::PoleAtPoint)));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(QRational::one().div(&QRational::zero()).is_err());
    }

    #[test]
    fn geometric_sum_closed_form() {
        // q^2 / (1 - q^2)
        let g = geometric_sum(&q_pow(2), 2);
        assert_eq!(g.mul(&QRational::one_minus_q_pow(2)), q_pow(2));
        let g4 = geometric_sum(&QRational::one(), 4);
        assert_eq!(g4, QRational::one_minus_q_pow(4).inverse().unwrap());
        assert!(geometric_sum(&QRational::zero(), 2).is_zero());
    }

    #[test]
    fn constants_and_integers() {
        let two = QRational::from_integer(2);
        assert_eq!(two.as_integer(), Some(BigInt::from(2)));
        assert_eq!(q_pow(2).as_integer(), None);
        let neg = QRational::from_rational(rat(-2, 1));
        assert_eq!(neg.as_integer(), Some(BigInt::from(-2)));
    }

    #[test]
    fn sqrt_in_the_field() {
        let x = q_pow(6).mul(&QRational::one().add(&q_pow(2)).pow(2).unwrap());
        let r = x.sqrt().unwrap();
        assert_eq!(r.mul(&r), x);
        assert_eq!(QRational::one().add(&q_pow(2)).sqrt(), None);
    }
}
