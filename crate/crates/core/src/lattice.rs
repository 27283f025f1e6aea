//! Exact integer matrix algebra: Hermite and Smith normal forms, fraction-free
//! determinants, lattice membership and canonical residues.
//!
//! Everything here is generic over the [`Scalar`] type and pure; the Hermite
//! normal form is the canonical representation used for ideal lattices, so its
//! convention is fixed once and for all:
//! upper-triangular, positive diagonal, and every entry above a pivot reduced
//! into `[0, pivot)`. Two bases describe the same lattice iff their normal
//! forms are entrywise equal.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense rectangular matrix with exact integer entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> IntMatrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(
            cols > 0 && rows.iter().all(|r| r.len() == cols),
            "ragged rows"
        );
        let n_rows = rows.len();
        let data: Vec<T> = rows.into_iter().flatten().collect();
        IntMatrix {
            rows: n_rows,
            cols,
            data,
        }
    }

    /// Convenience constructor from machine integers (mostly for tests).
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| T::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[a] -= q * row[b]
    fn row_sub_mul(&mut self, a: usize, b: usize, q: &T) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self[(a, j)].clone() - q.clone() * self[(b, j)].clone();
            self[(a, j)] = v;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
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

    /// col[a] -= q * col[b]
    fn col_sub_mul(&mut self, a: usize, b: usize, q: &T) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self[(i, a)].clone() - q.clone() * self[(i, b)].clone();
            self[(i, a)] = v;
        }
    }
}

impl<T: Scalar> std::ops::Index<(usize, usize)> for IntMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T: Scalar> std::ops::IndexMut<(usize, usize)> for IntMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

fn exact_div<T: Scalar>(a: T, b: &T) -> T {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "inexact division in fraction-free elimination");
    q
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// All intermediate values are minors of the input, so they stay integral;
/// no rational arithmetic is ever needed.
pub fn determinant<T: Scalar>(m: &IntMatrix<T>) -> T {
    assert_eq!(m.rows(), m.cols(), "determinant requires a square matrix");
    let n = m.rows();
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num =
                    a[(k, k)].clone() * a[(i, j)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                a[(i, j)] = exact_div(num, &prev);
            }
            a[(i, k)] = T::zero();
        }
        prev = a[(k, k)].clone();
    }
    let det = a[(n - 1, n - 1)].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Canonical Hermite-normal-form basis of a full-rank lattice in `Z^d`.
///
/// Invariants: square `d×d`, upper-triangular, `H[i][i] > 0`, and
/// `0 ≤ H[j][i] < H[i][i]` for `j < i`. The form is the unique such basis of
/// its row span, so equality of lattices is equality of `HermiteBasis` values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HermiteBasis<T: Scalar> {
    mat: IntMatrix<T>,
}

impl<T: Scalar> HermiteBasis<T> {
    pub fn dim(&self) -> usize {
        self.mat.cols()
    }

    pub fn matrix(&self) -> &IntMatrix<T> {
        &self.mat
    }

    pub fn row(&self, i: usize) -> &[T] {
        self.mat.row(i)
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.dim()).map(|i| self.mat[(i, i)].clone()).collect()
    }

    /// Lattice index `[Z^d : L]`, the product of the diagonal.
    pub fn determinant(&self) -> T {
        self.diagonal().into_iter().fold(T::one(), |a, b| a * b)
    }

    /// True iff `v` is an integer combination of the basis rows.
    ///
    /// Forward substitution along the pivots; each step needs an exact
    /// divisibility, otherwise the vector is outside the lattice.
    pub fn contains(&self, v: &[T]) -> Result<bool> {
        let d = self.dim();
        if v.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: v.len(),
            });
        }
        let mut t = v.to_vec();
        for i in 0..d {
            if t[i].is_zero() {
                continue;
            }
            let (q, r) = t[i].div_rem(&self.mat[(i, i)]);
            if !r.is_zero() {
                return Ok(false);
            }
            for (j, slot) in t.iter_mut().enumerate().skip(i) {
                *slot = slot.clone() - q.clone() * self.mat[(i, j)].clone();
            }
        }
        debug_assert!(t.iter().all(|x| x.is_zero()));
        Ok(true)
    }

    /// Canonical representative of `v` modulo the lattice: the unique vector
    /// congruent to `v` with `0 ≤ r[i] < H[i][i]` for all `i`.
    pub fn canonical_residue(&self, v: &[T]) -> Result<Vec<T>> {
        let d = self.dim();
        if v.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: v.len(),
            });
        }
        let mut t = v.to_vec();
        // Pivot-ascending; once coordinate i is reduced, later rows leave it
        // untouched (they start at a later column).
        for i in 0..d {
            let q = t[i].div_floor(&self.mat[(i, i)]);
            if q.is_zero() {
                continue;
            }
            for (j, slot) in t.iter_mut().enumerate().skip(i) {
                *slot = slot.clone() - q.clone() * self.mat[(i, j)].clone();
            }
        }
        debug_assert!((0..d).all(|i| !t[i].is_negative() && t[i] < self.mat[(i, i)]));
        Ok(t)
    }
}

/// Hermite normal form of the row span of `m`.
///
/// `m` must have at least `cols` rows and its rows must span a finite-index
/// sublattice of `Z^d`; otherwise `RankDeficient` is returned. Column-by-column
/// Euclidean elimination with explicit pivot normalisation.
pub fn hnf<T: Scalar>(m: &IntMatrix<T>) -> Result<HermiteBasis<T>> {
    let d = m.cols();
    if m.rows() < d {
        return Err(Error::RankDeficient);
    }
    let mut a = m.clone();
    let r = a.rows();
    for col in 0..d {
        // Euclidean elimination below the pivot row: repeatedly reduce by the
        // entry of least absolute value until a single one survives.
        loop {
            let mut best: Option<usize> = None;
            for i in col..r {
                if a[(i, col)].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if a[(i, col)].abs() < a[(b, col)].abs() {
                            best = Some(i);
                        }
                    }
                }
            }
            let pivot = best.ok_or(Error::RankDeficient)?;
            a.swap_rows(col, pivot);
            let mut clean = true;
            for i in col + 1..r {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let q = a[(i, col)].clone().div_rem(&a[(col, col)]).0;
                a.row_sub_mul(i, col, &q);
                if !a[(i, col)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a[(col, col)].is_negative() {
            a.negate_row(col);
        }
    }
    // Any surplus rows must have been annihilated.
    for i in d..r {
        if (0..d).any(|j| !a[(i, j)].is_zero()) {
            return Err(Error::Internal(
                "nonzero surplus row after HNF elimination".into(),
            ));
        }
    }
    let mut h = IntMatrix::zero(d, d);
    for i in 0..d {
        for j in 0..d {
            h[(i, j)] = a[(i, j)].clone();
        }
    }
    // Reduce entries above each pivot into [0, pivot).
    for i in 0..d {
        for j in 0..i {
            let q = h[(j, i)].div_floor(&h[(i, i)]);
            h.row_sub_mul(j, i, &q);
        }
    }
    debug_assert!((0..d).all(|i| h[(i, i)].is_positive()));
    Ok(HermiteBasis { mat: h })
}

/// Invariant factors `d_1 | d_2 | …` of a nonsingular square matrix
/// (Smith normal form diagonal with unit factors omitted).
pub fn snf_invariants<T: Scalar>(m: &IntMatrix<T>) -> Result<Vec<T>> {
    assert_eq!(
        m.rows(),
        m.cols(),
        "snf_invariants requires a square matrix"
    );
    let n = m.rows();
    let mut a = m.clone();
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        'pivot: loop {
            // Move the submatrix entry of least absolute value to (t, t).
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    match best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if a[(i, j)].abs() < a[(bi, bj)].abs() {
                                best = Some((i, j));
                            }
                        }
                    }
                }
            }
            let (bi, bj) = best.ok_or(Error::SingularMatrix)?;
            a.swap_rows(t, bi);
            a.swap_cols(t, bj);
            // Clear the pivot column and row.
            let mut dirty = false;
            for i in t + 1..n {
                if !a[(i, t)].is_zero() {
                    let q = a[(i, t)].clone().div_rem(&a[(t, t)]).0;
                    a.row_sub_mul(i, t, &q);
                    dirty |= !a[(i, t)].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[(t, j)].is_zero() {
                    let q = a[(t, j)].clone().div_rem(&a[(t, t)]).0;
                    a.col_sub_mul(j, t, &q);
                    dirty |= !a[(t, j)].is_zero();
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Enforce divisibility: the pivot must divide every remaining
            // entry; a failing row is folded in and elimination repeats.
            for i in t + 1..n {
                for j in t + 1..n {
                    if !a[(i, j)].clone().div_rem(&a[(t, t)]).1.is_zero() {
                        let one = T::one();
                        let neg_one = -one;
                        a.row_sub_mul(t, i, &neg_one); // row t += row i
                        continue 'pivot;
                    }
                }
            }
            break;
        }
        diag.push(a[(t, t)].abs());
    }
    Ok(diag.into_iter().filter(|x| !x.is_one()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = IntMatrix<BigInt>;

    #[test]
    fn hnf_two_generators() {
        let h = hnf(&M::from_i64(&[&[1, 1], &[-1, 1]])).unwrap();
        assert_eq!(h.matrix(), &M::from_i64(&[&[1, 1], &[0, 2]]));
        assert_eq!(h.determinant(), BigInt::from(2));
    }

    #[test]
    fn hnf_already_canonical() {
        let h = hnf(&M::from_i64(&[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(h.matrix(), &M::from_i64(&[&[2, 0], &[0, 2]]));
    }

    #[test]
    fn hnf_redundant_generators() {
        let h = hnf(&M::from_i64(&[&[2, 0], &[0, 2], &[1, 1], &[-1, 1]])).unwrap();
        assert_eq!(h.matrix(), &M::from_i64(&[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn hnf_rank_deficient() {
        assert_eq!(
            hnf(&M::from_i64(&[&[1, 1], &[2, 2]])),
            Err(Error::RankDeficient)
        );
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&M::identity(3)), BigInt::from(1));
        assert_eq!(
            determinant(&M::from_i64(&[&[1, 1], &[0, 2]])),
            BigInt::from(2)
        );
        // multiplication matrix of 2+i in Z[i]: rows (2+i)·1, (2+i)·i
        assert_eq!(
            determinant(&M::from_i64(&[&[2, 1], &[-1, 2]])),
            BigInt::from(5)
        );
        assert_eq!(
            determinant(&M::from_i64(&[&[1, 2], &[2, 4]])),
            BigInt::from(0)
        );
    }

    #[test]
    fn snf_examples() {
        let inv = snf_invariants(&M::from_i64(&[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(inv, vec![BigInt::from(2), BigInt::from(2)]);
        let inv = snf_invariants(&M::from_i64(&[&[2, 1], &[-1, 2]])).unwrap();
        assert_eq!(inv, vec![BigInt::from(5)]);
        let inv = snf_invariants(&M::identity(4)).unwrap();
        assert!(inv.is_empty());
        assert_eq!(
            snf_invariants(&M::from_i64(&[&[1, 2], &[2, 4]])),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn membership() {
        let h = hnf(&M::from_i64(&[&[1, 1], &[0, 2]])).unwrap();
        let b = |x: i64, y: i64| vec![BigInt::from(x), BigInt::from(y)];
        assert!(h.contains(&b(2, 0)).unwrap());
        assert!(!h.contains(&b(1, 0)).unwrap());
        assert!(h.contains(&b(0, 0)).unwrap());
    }

    #[test]
    fn residues() {
        let h = hnf(&M::from_i64(&[&[1, 1], &[0, 2]])).unwrap();
        let b = |x: i64, y: i64| vec![BigInt::from(x), BigInt::from(y)];
        assert_eq!(h.canonical_residue(&b(3, 5)).unwrap(), b(0, 0));
        assert_eq!(h.canonical_residue(&b(1, 0)).unwrap(), b(0, 1));
        assert_eq!(h.canonical_residue(&b(0, 0)).unwrap(), b(0, 0));
    }

    #[test]
    fn residue_idempotent_and_sound() {
        let h = hnf(&M::from_i64(&[&[3, 1, 4], &[0, 2, 7], &[0, 0, 5]])).unwrap();
        let v: Vec<BigInt> = vec![(-17).into(), 23.into(), 9.into()];
        let r = h.canonical_residue(&v).unwrap();
        assert_eq!(h.canonical_residue(&r).unwrap(), r);
        let diff: Vec<BigInt> = v.iter().zip(&r).map(|(a, b)| a - b).collect();
        assert!(h.contains(&diff).unwrap());
    }
}
