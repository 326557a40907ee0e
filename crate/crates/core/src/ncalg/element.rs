//! Elements of the polynomial *-algebra and matrices over it.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::QRational;

use super::monomial::{NormalMonomial, Word};
use super::rewrite::{Rewriter, Strategy};

/// A finite Q(q)-linear combination of normal-ordered monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<NormalMonomial, QRational>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(NormalMonomial::unit(), QRational::one())
    }

    pub fn scalar(c: QRational) -> Self {
        Self::from_monomial(NormalMonomial::unit(), c)
    }

    pub fn from_monomial(m: NormalMonomial, c: QRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Element { terms }
    }

    pub fn generator(index: u8) -> Self {
        let mut unstar = [0u32; 4];
        unstar[(index - 1) as usize] = 1;
        Self::from_monomial(NormalMonomial::new([0; 4], unstar), QRational::one())
    }

    pub fn generator_star(index: u8) -> Self {
        let mut star = [0u32; 4];
        star[(index - 1) as usize] = 1;
        Self::from_monomial(NormalMonomial::new(star, [0; 4]), QRational::one())
    }

    pub(crate) fn from_map(terms: BTreeMap<NormalMonomial, QRational>) -> Self {
        let mut e = Element { terms };
        e.terms.retain(|_, c| !c.is_zero());
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &QRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &NormalMonomial) -> QRational {
        self.terms.get(m).cloned().unwrap_or_else(QRational::zero)
    }

    /// Coefficient of the unit monomial.
    pub fn constant_coeff(&self) -> QRational {
        self.coeff(&NormalMonomial::unit())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_coeff().is_one()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(*m).or_insert_with(QRational::zero);
            *entry = entry.add(c);
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Element { terms }
    }

    pub fn neg(&self) -> Self {
        Element { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &QRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Element { terms: self.terms.iter().map(|(m, k)| (*m, k.mul(c))).collect() }
    }

    /// Product in the sphere algebra: concatenate and renormalize.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let w = m1.to_word().concat(&m2.to_word());
                let mut rw = Rewriter::new(&Strategy::LeftmostInnermost);
                let red = rw.reduce_word(&w);
                let c = c1.mul(c2);
                for (m, k) in red {
                    out = out.add(&Element::from_monomial(m, k.mul(&c)));
                }
            }
        }
        out
    }

    /// The *-operation. Adjoints of normal monomials are again normal, so no
    /// rewriting happens; coefficients are untouched (q is real).
    pub fn adjoint(&self) -> Self {
        Element { terms: self.terms.iter().map(|(m, c)| (m.adjoint(), c.clone())).collect() }
    }

    /// The component of the given circle weight under the twistor action.
    pub fn weight_component(&self, w: i64) -> Self {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.mu_weight() == w)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn mu_weights(&self) -> Vec<i64> {
        let mut ws: Vec<i64> = self.terms.keys().map(|m| m.mu_weight()).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    pub fn is_mu_invariant(&self) -> bool {
        self.terms.keys().all(|m| m.mu_weight() == 0)
    }

    /// Kills every monomial containing one of the listed generators
    /// (starred or not). `kill` must be a subset of {1,2,3}.
    pub fn quotient_kill(&self, kill: &[u8]) -> Self {
        assert!(kill.iter().all(|&i| (1..=3).contains(&i)), "only z1..z3 can be killed");
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.touches(kill))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Self-adjointness in the *-algebra.
    pub fn is_self_adjoint(&self) -> bool {
        *self == self.adjoint()
    }
}

/// Normal form of a word with the default strategy.
pub fn normal_form(w: &Word) -> Element {
    Element::from_map(Rewriter::new(&Strategy::LeftmostInnermost).reduce_word(w))
}

/// Normal form with an explicit strategy; also reports the step count.
pub fn normal_form_with(w: &Word, strategy: &Strategy) -> (Element, usize) {
    let mut rw = Rewriter::new(strategy);
    let red = rw.reduce_word(w);
    (Element::from_map(red), rw.stats.steps)
}

/// Normal form of a formal combination of words.
pub fn normal_form_terms(terms: Vec<(QRational, Word)>) -> Element {
    Element::from_map(Rewriter::new(&Strategy::LeftmostInnermost).reduce_terms(terms))
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_unit() {
                write!(f, "({})", c)?;
            } else if c.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "({}) {}", c, m)?;
            }
        }
        Ok(())
    }
}

/// A rectangular matrix over the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Element>,
}

impl AlgMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Element>) -> Self {
        assert_eq!(entries.len(), rows * cols, "matrix shape mismatch");
        AlgMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        AlgMatrix { rows, cols, entries: vec![Element::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = Element::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Element {
        &self.entries[r * self.cols + c]
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Element {
        &mut self.entries[r * self.cols + c]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Element::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j)));
                }
                *out.entry_mut(i, j) = acc;
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        AlgMatrix { rows: self.rows, cols: self.cols, entries }
    }

    /// Conjugate transpose through the algebra adjoint.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.entry_mut(j, i) = self.entry(i, j).adjoint();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn trace(&self) -> Element {
        assert!(self.is_square());
        let mut acc = Element::zero();
        for i in 0..self.rows {
            acc = acc.add(self.entry(i, i));
        }
        acc
    }

    pub fn map<F: Fn(&Element) -> Element>(&self, f: F) -> Self {
        AlgMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}
