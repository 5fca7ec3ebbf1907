//! Exact linear algebra over the rationals.
//!
//! Ranks and determinants use fraction-free (Bareiss) elimination over the
//! integers after clearing denominators row by row. Pivots are chosen as the
//! first nonzero entry scanning rows top to bottom, so results are
//! reproducible run to run.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_columns(cols: Vec<Vec<Scalar>>) -> Result<Self> {
        Ok(Self::from_rows(cols)?.transpose())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_integer(x.into())).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stacks blocks vertically; all blocks need the same width.
    pub fn vstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(Error::Dimension("vstack width mismatch".into()));
        }
        Ok(Matrix {
            rows: blocks.iter().map(|b| b.rows).sum(),
            cols,
            data: blocks.iter().flat_map(|b| b.data.iter().cloned()).collect(),
        })
    }

    /// Concatenates blocks horizontally; all blocks need the same height.
    pub fn hstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let t: Vec<Matrix> = blocks.iter().map(|b| b.transpose()).collect();
        let refs: Vec<&Matrix> = t.iter().collect();
        Ok(Matrix::vstack(&refs)
            .map_err(|_| Error::Dimension("hstack height mismatch".into()))?
            .transpose())
    }

    /// Integer rows with denominators cleared; rows and columns that are
    /// entirely zero are dropped since they never affect the rank.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        let live_cols: Vec<usize> = (0..self.cols)
            .filter(|&j| (0..self.rows).any(|i| !self.get(i, j).is_zero()))
            .collect();
        (0..self.rows)
            .filter(|&i| self.row(i).iter().any(|x| !x.is_zero()))
            .map(|i| {
                let row = self.row(i);
                let lcm = live_cols
                    .iter()
                    .fold(BigInt::one(), |acc, &j| acc.lcm(row[j].denom()));
                live_cols
                    .iter()
                    .map(|&j| (row[j].numer() * &lcm) / row[j].denom())
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        bareiss_rank(self.integer_rows())
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Scalar::one());
        }
        let mut scale = BigInt::one();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let row = self.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            rows.push(
                row.iter()
                    .map(|x| (x.numer() * &lcm) / x.denom())
                    .collect::<Vec<_>>(),
            );
            scale *= lcm;
        }
        Ok(Scalar::new(bareiss_det(rows), scale))
    }

    /// Basis of the right kernel `{v : M v = 0}`, from the reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -rref.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Rank by fraction-free elimination. Every intermediate entry is a minor of
/// the input, so each division by the previous pivot is exact.
pub fn bareiss_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..ncols {
                let v = if factor.is_zero() {
                    &row[j] * pivot
                } else {
                    &row[j] * pivot - &factor * &pivot_row[j]
                };
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[c] = BigInt::zero();
        }
        prev = pivot.clone();
        r += 1;
    }
    r
}

fn bareiss_det(mut rows: Vec<Vec<BigInt>>) -> BigInt {
    let n = rows.len();
    let mut prev = BigInt::one();
    let mut negate = false;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            rows.swap(p, c);
            negate = !negate;
        }
        let (top, rest) = rows.split_at_mut(c + 1);
        let pivot_row = &top[c];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..n {
                let v = &row[j] * pivot - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot.clone();
    }
    let det = rows[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Incrementally built echelon basis of sparse vectors keyed by `K`.
///
/// Each stored row remembers how it is written in terms of the accepted input
/// vectors, so membership tests can also return coordinates.
#[derive(Debug, Clone)]
pub struct Echelon<K: Ord + Clone> {
    /// pivot key -> (reduced vector with coefficient 1 at pivot, combination of inputs)
    rows: BTreeMap<K, (BTreeMap<K, Scalar>, Vec<Scalar>)>,
    accepted: usize,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            rows: BTreeMap::new(),
            accepted: 0,
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.accepted
    }

    /// Reduces `v` against the stored rows. Returns the residual and the
    /// combination `c` of accepted inputs with `v = residual + sum c_i input_i`.
    fn reduce(&self, v: &BTreeMap<K, Scalar>) -> (BTreeMap<K, Scalar>, Vec<Scalar>) {
        let mut residual = v.clone();
        let mut combo = vec![Scalar::zero(); self.accepted];
        for (pivot, (row, row_combo)) in &self.rows {
            let Some(f) = residual.get(pivot).cloned() else {
                continue;
            };
            for (k, x) in row {
                let entry = residual.entry(k.clone()).or_insert_with(Scalar::zero);
                *entry -= &f * x;
                if entry.is_zero() {
                    residual.remove(k);
                }
            }
            for (c, rc) in combo.iter_mut().zip(row_combo) {
                *c += &f * rc;
            }
        }
        (residual, combo)
    }

    pub fn is_independent(&self, v: &BTreeMap<K, Scalar>) -> bool {
        !self.reduce(v).0.is_empty()
    }

    /// Coordinates of `v` in terms of the accepted inputs, if it lies in their span.
    pub fn express(&self, v: &BTreeMap<K, Scalar>) -> Option<Vec<Scalar>> {
        let (residual, combo) = self.reduce(v);
        residual.is_empty().then_some(combo)
    }

    /// Adds `v` if it is independent of the stored vectors; returns whether it was added.
    pub fn insert(&mut self, v: &BTreeMap<K, Scalar>) -> bool {
        let (residual, combo) = self.reduce(v);
        let Some((pivot, lead)) = residual.iter().next().map(|(k, x)| (k.clone(), x.clone()))
        else {
            return false;
        };
        let inv = lead.recip();
        self.accepted += 1;
        // new = (v - combo·inputs) / lead, expressed over all accepted inputs
        let mut new_combo: Vec<Scalar> = combo.iter().map(|c| -c * &inv).collect();
        new_combo.push(inv.clone());
        let new_row: BTreeMap<K, Scalar> =
            residual.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        for (row, row_combo) in self.rows.values_mut() {
            row_combo.push(Scalar::zero());
            let Some(f) = row.get(&pivot).cloned() else {
                continue;
            };
            for (k, x) in &new_row {
                let entry = row.entry(k.clone()).or_insert_with(Scalar::zero);
                *entry -= &f * x;
                if entry.is_zero() {
                    row.remove(k);
                }
            }
            for (c, nc) in row_combo.iter_mut().zip(&new_combo) {
                *c -= &f * nc;
            }
        }
        self.rows.insert(pivot, (new_row, new_combo));
        true
    }
}

/// `true` if the given sparse vectors are linearly independent.
pub fn independent<K: Ord + Clone>(vectors: &[BTreeMap<K, Scalar>]) -> bool {
    let mut e = Echelon::new();
    vectors.iter().all(|v| e.insert(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_integer(n.into())
    }

    /// Cofactor expansion, used only as an independent oracle.
    fn laplace(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] as i128 * laplace(&minor)
            })
            .sum()
    }

    /// Rank over GF(p) for a large prime, a second independent route.
    fn rank_mod_p(m: &[Vec<i64>]) -> usize {
        const P: i128 = 1_000_000_007;
        let mut a: Vec<Vec<i128>> = m
            .iter()
            .map(|r| r.iter().map(|&x| (x as i128).rem_euclid(P)).collect())
            .collect();
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
                continue;
            };
            a.swap(p, r);
            let inv = {
                let (mut b, mut e, mut acc) = (a[r][c], P - 2, 1i128);
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * b % P;
                    }
                    b = b * b % P;
                    e >>= 1;
                }
                acc
            };
            for i in 0..rows {
                if i != r && a[i][c] != 0 {
                    let f = a[i][c] * inv % P;
                    for j in 0..cols {
                        a[i][j] = (a[i][j] - f * a[r][j]).rem_euclid(P);
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn to_matrix(m: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn small_known_values() {
        let m = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(m.determinant().unwrap(), q(6));
        assert_eq!(m.rank(), 2);
        let sing = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(sing.rank(), 2);
        assert_eq!(sing.determinant().unwrap(), q(0));
        assert_eq!(Matrix::zeros(3, 4).rank(), 0);
        assert_eq!(Matrix::zeros(0, 0).determinant().unwrap(), q(1));
    }

    #[test]
    fn rational_entries() {
        let m = Matrix::from_rows(vec![
            vec![Scalar::new(1.into(), 2.into()), q(1)],
            vec![q(1), Scalar::new(1.into(), 3.into())],
        ])
        .unwrap();
        assert_eq!(m.determinant().unwrap(), Scalar::new((-5).into(), 6.into()));
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = Matrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 4 - m.rank());
        for v in ker {
            let col = Matrix::from_columns(vec![v]).unwrap();
            assert!(m.mul(&col).unwrap().is_zero());
        }
    }

    #[test]
    fn echelon_expresses_coordinates() {
        let vec_of = |xs: &[i64]| -> BTreeMap<usize, Scalar> {
            xs.iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| (i, q(x)))
                .collect()
        };
        let mut e = Echelon::new();
        assert!(e.insert(&vec_of(&[1, 1, 0])));
        assert!(e.insert(&vec_of(&[0, 1, 1])));
        assert!(!e.insert(&vec_of(&[1, 2, 1])));
        assert_eq!(e.express(&vec_of(&[2, 5, 3])), Some(vec![q(2), q(3)]));
        assert_eq!(e.express(&vec_of(&[0, 0, 1, 0])), None);
    }

    proptest! {
        #[test]
        fn determinant_matches_cofactor_expansion(
            n in 1usize..6,
            entries in prop::collection::vec(-9i64..10, 36)
        ) {
            let m: Vec<Vec<i64>> = (0..n).map(|i| entries[i * 6..i * 6 + n].to_vec()).collect();
            let det = to_matrix(&m).determinant().unwrap();
            prop_assert_eq!(det, q(0) + Scalar::from_integer(laplace(&m).into()));
        }

        #[test]
        fn rank_matches_modular_rank(
            rows in 1usize..7,
            cols in 1usize..7,
            low_rank in any::<bool>(),
            entries in prop::collection::vec(-5i64..6, 49)
        ) {
            let mut m: Vec<Vec<i64>> =
                (0..rows).map(|i| entries[i * 7..i * 7 + cols].to_vec()).collect();
            if low_rank && rows > 1 {
                let first = m[0].clone();
                m[rows - 1] = first.iter().map(|x| 2 * x).collect();
            }
            prop_assert_eq!(to_matrix(&m).rank(), rank_mod_p(&m));
        }

        #[test]
        fn echelon_rank_matches_bareiss(
            entries in prop::collection::vec(-3i64..4, 30)
        ) {
            let m: Vec<Vec<i64>> = (0..5).map(|i| entries[i * 6..i * 6 + 6].to_vec()).collect();
            let vecs: Vec<BTreeMap<usize, Scalar>> = m
                .iter()
                .map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, q(x))).collect())
                .collect();
            let mut e = Echelon::new();
            for v in &vecs {
                e.insert(v);
            }
            prop_assert_eq!(e.rank(), to_matrix(&m).rank());
        }
    }
}
