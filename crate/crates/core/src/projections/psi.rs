//! Projection columns: for each level `N` the family
//! `psi_j = sqrt(c_j(N)) z4*^{j4} z3^{j3} z2^{j2} z1*^{j1}` over all `j`
//! summing to `N`, the square matrix with this column and zeros elsewhere,
//! and the associated projections `P_N = A^N (A^N)*`.
//!
//! Square roots never enter the symbolic algebra: entries are handled as a
//! rational radicand `c_i c_j` times a normal-form word product, and the
//! projection property is established through `(A* A)_{11} = 1` exactly plus
//! numeric checks entrywise.

use crate::fockrep::{interior_indices, rep_word, FockOperator};
use crate::ncalg::{normal_form, AlgMatrix, Element, Letter, Word};
use crate::scalar::{QRational, Rational};

use super::coeff::{compositions, CoeffTable};

#[derive(Clone, Debug)]
pub struct PsiEntry {
    pub j: [u32; 4],
    /// The exact coefficient whose square root scales the word.
    pub c: QRational,
}

impl PsiEntry {
    /// The column word `z4*^{j4} z3^{j3} z2^{j2} z1*^{j1}`.
    pub fn word(&self) -> Word {
        let [j1, j2, j3, j4] = self.j;
        let mut v = Vec::new();
        v.extend(std::iter::repeat(Letter::z_star(4)).take(j4 as usize));
        v.extend(std::iter::repeat(Letter::z(3)).take(j3 as usize));
        v.extend(std::iter::repeat(Letter::z(2)).take(j2 as usize));
        v.extend(std::iter::repeat(Letter::z_star(1)).take(j1 as usize));
        Word(v)
    }

    /// True when the entry survives killing `z1`, `z2`.
    pub fn survives_quotient(&self) -> bool {
        self.j[0] == 0 && self.j[1] == 0
    }
}

#[derive(Clone, Debug)]
pub struct PsiColumn {
    pub level: u32,
    pub entries: Vec<PsiEntry>,
}

pub fn psi_column(table: &CoeffTable, level: u32) -> PsiColumn {
    let entries = compositions(level)
        .into_iter()
        .map(|j| PsiEntry { j, c: table.get(j, level) })
        .collect();
    PsiColumn { level, entries }
}

impl PsiColumn {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// `(A* A)_{11} = sum_j c_j psi_word_j* psi_word_j`, which must be 1.
    pub fn partition_of_unity(&self) -> Element {
        let mut acc = Element::zero();
        for e in &self.entries {
            let w = e.word();
            let prod = normal_form(&w.adjoint().concat(&w));
            acc = acc.add(&prod.scale(&e.c));
        }
        acc
    }

    /// Projection entry `(i, j)` as `(radicand, element)`: the entry of
    /// `P_N` is `sqrt(radicand) * element` with `radicand = c_i c_j`.
    pub fn entry(&self, i: usize, j: usize) -> (QRational, Element) {
        let wi = self.entries[i].word();
        let wj = self.entries[j].word();
        let prod = normal_form(&wi.concat(&wj.adjoint()));
        (self.entries[i].c.mul(&self.entries[j].c), prod)
    }

    /// The full projection as an exact matrix, when every radicand is a
    /// perfect square in Q(q) (true at level 1).
    pub fn projection_exact(&self) -> Option<AlgMatrix> {
        let n = self.size();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (radicand, elem) = self.entry(i, j);
                let root = radicand.sqrt()?;
                entries.push(elem.scale(&root));
            }
        }
        Some(AlgMatrix::new(n, n, entries))
    }

    /// Matrix trace of `P_N`, exact: diagonal radicands are `c_i^2`.
    pub fn trace(&self) -> Element {
        let mut acc = Element::zero();
        for e in &self.entries {
            let w = e.word();
            let prod = normal_form(&w.concat(&w.adjoint()));
            acc = acc.add(&prod.scale(&e.c));
        }
        acc
    }

    /// The diagonal words of the trace with their exact scales, before any
    /// normal-form rewriting; the numeric pairing route consumes these.
    pub fn trace_words(&self) -> Vec<(QRational, Word)> {
        self.entries
            .iter()
            .map(|e| {
                let w = e.word();
                (e.c.clone(), w.concat(&w.adjoint()))
            })
            .collect()
    }

    /// Numeric residuals `(||P^2 - P||, ||P* - P||)` on interior vectors of
    /// the shift representation.
    pub fn numeric_projection_residuals(&self, q0: &Rational, cutoff: u32) -> (f64, f64) {
        let n = self.size();
        let roots: Vec<f64> = self
            .entries
            .iter()
            .map(|e| e.c.evaluate_f64(q0).expect("no pole").max(0.0).sqrt())
            .collect();
        let ops: Vec<FockOperator> = self
            .entries
            .iter()
            .map(|e| rep_word(&e.word(), q0, cutoff))
            .collect();
        // P[i][j] = roots_i roots_j op_i op_j*
        let mut p: Vec<Vec<FockOperator>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(ops[i].compose(&ops[j].adjoint()).scale(roots[i] * roots[j]));
            }
            p.push(row);
        }
        let p2 = block_mul(&p);
        let margin = 4 * self.level;
        let mut idem = 0.0f64;
        let mut selfadj = 0.0f64;
        for idx in interior_indices(cutoff, margin) {
            for j in 0..n {
                let mut col_idem = 0.0f64;
                let mut col_adj = 0.0f64;
                for i in 0..n {
                    let d = p2[i][j].sub(&p[i][j]);
                    col_idem += d.column_norm(idx).powi(2);
                    let a = p[j][i].adjoint().sub(&p[i][j]);
                    col_adj += a.column_norm(idx).powi(2);
                }
                idem = idem.max(col_idem.sqrt());
                selfadj = selfadj.max(col_adj.sqrt());
            }
        }
        (idem, selfadj)
    }
}

fn block_mul(p: &[Vec<FockOperator>]) -> Vec<Vec<FockOperator>> {
    let n = p.len();
    let cutoff = p[0][0].cutoff();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = FockOperator::zero(cutoff);
            for (k, pk) in p.iter().enumerate() {
                acc = acc.add(&p[i][k].compose(&pk[j]));
            }
            row.push(acc);
        }
        out.push(row);
    }
    out
}

/// Entrywise quotient onto the subalgebra generated by `z3`, `z4`.
pub fn quotient_to_podles(m: &AlgMatrix) -> AlgMatrix {
    m.map(|e| e.quotient_kill(&[1, 2]))
}
