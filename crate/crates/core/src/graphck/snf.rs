//! Exact Smith normal form over the integers, with an independent
//! minor-gcd route for cross-checking elementary divisors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        IntMatrix {
            rows,
            cols,
            data: entries.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += &self[(i, k)] * &other[(k, j)];
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += c * row[b]
    fn add_row(&mut self, a: usize, b: usize, c: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(b, j)] * c;
            self[(a, j)] += v;
        }
    }

    fn add_col(&mut self, a: usize, b: usize, c: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, b)] * c;
            self[(i, a)] += v;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }

    /// Determinant by fraction-free expansion (small matrices only).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let idx: Vec<usize> = (0..n).collect();
        self.minor_det(&idx, &idx)
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> BigInt {
        let n = rows.len();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return self[(rows[0], cols[0])].clone();
        }
        let mut acc = BigInt::zero();
        let sub_rows = &rows[1..];
        for (j, &c) in cols.iter().enumerate() {
            let v = &self[(rows[0], c)];
            if v.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = v * self.minor_det(sub_rows, &rest);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// `D = U M V` with `U`, `V` unimodular and `D` diagonal with
/// `d_1 | d_2 | ...`, all `d_i >= 0`.
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    /// The nonzero diagonal entries.
    pub fn divisors(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.divisors().len()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let steps = m.rows.min(m.cols);

    for t in 0..steps {
        // Find a pivot of smallest absolute value in the remaining block.
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..d.rows {
                for j in t..d.cols {
                    if !d[(i, j)].is_zero()
                        && pivot
                            .map(|(pi, pj)| d[(i, j)].abs() < d[(pi, pj)].abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                // remaining block is zero
                return SmithNormalForm { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Reduce column t and row t by the pivot.
            let mut clean = true;
            for i in t + 1..d.rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let c = -(&d[(i, t)] / &d[(t, t)]);
                d.add_row(i, t, &c);
                u.add_row(i, t, &c);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..d.cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let c = -(&d[(t, j)] / &d[(t, t)]);
                d.add_col(j, t, &c);
                v.add_col(j, t, &c);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue; // smaller remainders appeared; pick a new pivot
            }
            // Divisibility: the pivot must divide the rest of the block.
            let mut fixed = true;
            'scan: for i in t + 1..d.rows {
                for j in t + 1..d.cols {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        // fold the offending row into row t and restart
                        d.add_row(t, i, &BigInt::one());
                        u.add_row(t, i, &BigInt::one());
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithNormalForm { u, d, v }
}

/// Elementary divisors through gcds of k x k minors: `d_k = D_k / D_{k-1}`
/// with `D_k` the gcd of all k x k minors. Exponential in the size; meant as
/// an independent oracle for small matrices.
pub fn divisors_via_minors(m: &IntMatrix) -> Vec<BigInt> {
    let max_k = m.rows.min(m.cols);
    let mut prev = BigInt::one();
    let mut out = Vec::new();
    for k in 1..=max_k {
        let mut g = BigInt::zero();
        for rows in combinations(m.rows, k) {
            for cols in combinations(m.cols, k) {
                g = g.gcd(&m.minor_det(&rows, &cols));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assert_snf_valid(m: &IntMatrix) {
        let snf = smith_normal_form(m);
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d, "D = U M V fails");
        assert_eq!(snf.u.determinant().abs(), BigInt::one());
        assert_eq!(snf.v.determinant().abs(), BigInt::one());
        let divs = snf.divisors();
        for w in divs.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken: {:?}", divs);
        }
        // off-diagonal zero
        for i in 0..snf.d.rows {
            for j in 0..snf.d.cols {
                if i != j {
                    assert!(snf.d[(i, j)].is_zero());
                }
            }
        }
        assert_eq!(divs, divisors_via_minors(m), "minor-gcd oracle disagrees");
    }

    #[test]
    fn zero_matrix() {
        let m = IntMatrix::zero(3, 2);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d, IntMatrix::zero(3, 2));
        assert!(snf.divisors().is_empty());
    }

    #[test]
    fn diag_2_3_normalizes_to_1_6() {
        let m = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.divisors(), vec![BigInt::one(), BigInt::from(6)]);
        assert_snf_valid(&m);
    }

    #[test]
    fn random_matrices_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(97);
        for _ in 0..40 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let entries: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(-9..=9)).collect();
            let m = IntMatrix::from_i64(rows, cols, &entries);
            assert_snf_valid(&m);
        }
    }

    #[test]
    fn known_torsion_example() {
        // [[2, 4], [0, 4]] has divisors 2, 4... checked against minors:
        // D1 = gcd(2,4,0,4) = 2, D2 = det = 8, so d = (2, 4)
        let m = IntMatrix::from_i64(2, 2, &[2, 4, 0, 4]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.divisors(), vec![BigInt::from(2), BigInt::from(4)]);
    }
}
