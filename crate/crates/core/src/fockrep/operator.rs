//! Sparse operators on the truncated index space N^3 and the weighted-shift
//! representation of the sphere generators.

use std::collections::BTreeMap;

use crate::ncalg::{Element, Letter, Word};
use crate::scalar::{rational_to_f64, QRational, Rational};

/// Basis label (n, m, k) of the representation space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockIndex {
    pub n: u32,
    pub m: u32,
    pub k: u32,
}

impl FockIndex {
    pub fn new(n: u32, m: u32, k: u32) -> Self {
        FockIndex { n, m, k }
    }

    fn within(&self, cutoff: u32) -> bool {
        self.n < cutoff && self.m < cutoff && self.k < cutoff
    }
}

/// A sparse real operator on the truncated space, stored by columns:
/// `columns[input] = [(output, amplitude), ...]`.
#[derive(Clone, Debug)]
pub struct FockOperator {
    cutoff: u32,
    columns: BTreeMap<FockIndex, Vec<(FockIndex, f64)>>,
}

impl FockOperator {
    pub fn zero(cutoff: u32) -> Self {
        FockOperator { cutoff, columns: BTreeMap::new() }
    }

    pub fn identity(cutoff: u32) -> Self {
        let mut op = Self::zero(cutoff);
        for idx in box_indices(cutoff) {
            op.push(idx, idx, 1.0);
        }
        op
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    fn push(&mut self, input: FockIndex, output: FockIndex, amp: f64) {
        if amp == 0.0 {
            return;
        }
        self.columns.entry(input).or_default().push((output, amp));
    }

    fn compress(&mut self) {
        for col in self.columns.values_mut() {
            col.sort_by_key(|(o, _)| *o);
            let mut merged: Vec<(FockIndex, f64)> = Vec::with_capacity(col.len());
            for &(o, a) in col.iter() {
                match merged.last_mut() {
                    Some((lo, la)) if *lo == o => *la += a,
                    _ => merged.push((o, a)),
                }
            }
            merged.retain(|(_, a)| a.abs() > 0.0);
            *col = merged;
        }
        self.columns.retain(|_, col| !col.is_empty());
    }

    pub fn column(&self, input: FockIndex) -> &[(FockIndex, f64)] {
        self.columns.get(&input).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn entry(&self, output: FockIndex, input: FockIndex) -> f64 {
        self.column(input)
            .iter()
            .find(|(o, _)| *o == output)
            .map(|(_, a)| *a)
            .unwrap_or(0.0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.cutoff, other.cutoff);
        let mut out = self.clone();
        for (input, col) in &other.columns {
            for &(o, a) in col {
                out.push(*input, o, a);
            }
        }
        out.compress();
        out
    }

    pub fn scale(&self, c: f64) -> Self {
        let mut out = self.clone();
        for col in out.columns.values_mut() {
            for (_, a) in col.iter_mut() {
                *a *= c;
            }
        }
        out.compress();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    /// Operator composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.cutoff, other.cutoff);
        let mut out = Self::zero(self.cutoff);
        for (input, col) in &other.columns {
            for &(mid, a) in col {
                for &(o, b) in self.column(mid) {
                    out.push(*input, o, a * b);
                }
            }
        }
        out.compress();
        out
    }

    /// Transpose; entries are real, so this is the adjoint.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.cutoff);
        for (input, col) in &self.columns {
            for &(o, a) in col {
                out.push(o, *input, a);
            }
        }
        out.compress();
        out
    }

    /// l2 norm of the column at `input`.
    pub fn column_norm(&self, input: FockIndex) -> f64 {
        self.column(input).iter().map(|(_, a)| a * a).sum::<f64>().sqrt()
    }

    /// Max over interior basis vectors of the column l2 norm, where interior
    /// means every coordinate at most `cutoff - 1 - margin`.
    pub fn max_interior_column_norm(&self, margin: u32) -> f64 {
        let mut max = 0.0f64;
        for idx in interior_indices(self.cutoff, margin) {
            max = max.max(self.column_norm(idx));
        }
        max
    }
}

pub fn box_indices(cutoff: u32) -> impl Iterator<Item = FockIndex> {
    (0..cutoff).flat_map(move |n| {
        (0..cutoff).flat_map(move |m| (0..cutoff).map(move |k| FockIndex::new(n, m, k)))
    })
}

pub fn interior_indices(cutoff: u32, margin: u32) -> impl Iterator<Item = FockIndex> {
    let hi = cutoff.saturating_sub(margin);
    (0..hi).flat_map(move |n| {
        (0..hi).flat_map(move |m| (0..hi).map(move |k| FockIndex::new(n, m, k)))
    })
}

/// The weighted-shift representation of one generator:
///
/// - `z1` acts diagonally by `q^(n+m+k)`;
/// - `z2` shifts `k -> k+1` with amplitude `q^(n+m) sqrt(1-q^(2(k+1)))`;
/// - `z3` shifts `m -> m+1` with amplitude `q^n sqrt(1-q^(2(m+1)))`;
/// - `z4` shifts `n -> n+1` with amplitude `sqrt(1-q^(2(n+1)))`.
pub fn rep_generator(index: u8, q0: &Rational, cutoff: u32) -> FockOperator {
    let q = rational_to_f64(q0);
    let mut op = FockOperator::zero(cutoff);
    for idx in box_indices(cutoff) {
        let FockIndex { n, m, k } = idx;
        match index {
            1 => {
                op.push(idx, idx, q.powi((n + m + k) as i32));
            }
            2 => {
                let out = FockIndex::new(n, m, k + 1);
                if out.within(cutoff) {
                    let amp = q.powi((n + m) as i32) * shift_amp(q, k + 1);
                    op.push(idx, out, amp);
                }
            }
            3 => {
                let out = FockIndex::new(n, m + 1, k);
                if out.within(cutoff) {
                    op.push(idx, out, q.powi(n as i32) * shift_amp(q, m + 1));
                }
            }
            4 => {
                let out = FockIndex::new(n + 1, m, k);
                if out.within(cutoff) {
                    op.push(idx, out, shift_amp(q, n + 1));
                }
            }
            _ => panic!("generator index out of range"),
        }
    }
    op.compress();
    op
}

fn shift_amp(q: f64, j: u32) -> f64 {
    (1.0 - q.powi(2 * j as i32)).sqrt()
}

pub fn rep_letter(l: Letter, q0: &Rational, cutoff: u32) -> FockOperator {
    let g = rep_generator(l.index, q0, cutoff);
    if l.starred {
        g.adjoint()
    } else {
        g
    }
}

/// Product of the letter operators of a word, leftmost letter applied last.
pub fn rep_word(w: &Word, q0: &Rational, cutoff: u32) -> FockOperator {
    let mut op = FockOperator::identity(cutoff);
    for l in w.0.iter().rev() {
        op = rep_letter(*l, q0, cutoff).compose(&op);
    }
    op
}

/// Representation of an algebra element (monomials as operator products).
pub fn rep_element(x: &Element, q0: &Rational, cutoff: u32) -> FockOperator {
    let mut acc = FockOperator::zero(cutoff);
    for (mono, coeff) in x.terms() {
        let c = coeff
            .evaluate_f64(q0)
            .expect("coefficient has no pole in (0,1)");
        acc = acc.add(&rep_word(&mono.to_word(), q0, cutoff).scale(c));
    }
    acc
}

/// Exact diagonal of `rho(z_i z_i*)` at a basis index, per generator:
/// `q^(2(n+m+k))`, `(1-q^(2k)) q^(2(n+m))`, `q^(2n) (1-q^(2m))`, `1-q^(2n)`.
pub fn exact_zz_star_diagonal(index: u8, idx: FockIndex) -> QRational {
    let FockIndex { n, m, k } = idx;
    let (n, m, k) = (n as i64, m as i64, k as i64);
    match index {
        1 => QRational::q_power(2 * (n + m + k)),
        2 => QRational::one_minus_q_pow(2 * k).mul(&QRational::q_power(2 * (n + m))),
        3 => QRational::q_power(2 * n).mul(&QRational::one_minus_q_pow(2 * m)),
        4 => QRational::one_minus_q_pow(2 * n),
        _ => panic!("generator index out of range"),
    }
}

/// Diagonal of a plain product monomial `z_i z_i*` rendered exactly, used to
/// cross-check the numeric operators entry by entry.
pub fn exact_diagonal_matches(index: u8, q0: &Rational, cutoff: u32, tol: f64) -> bool {
    let w = Word(vec![Letter::z(index), Letter::z_star(index)]);
    let op = rep_word(&w, q0, cutoff);
    // the product shifts down then up, exact on the whole box except the top
    // shell in the shifted coordinate
    for idx in interior_indices(cutoff, 1) {
        let exact = exact_zz_star_diagonal(index, idx)
            .evaluate_f64(q0)
            .expect("no pole");
        if (op.entry(idx, idx) - exact).abs() > tol {
            return false;
        }
    }
    true
}

