//! Exact linear algebra over a [`Field`].
//!
//! Matrices act on row vectors when they represent arrow maps, but the
//! solvers here are stated for column vectors: `kernel_basis(m)` spans
//! `{x : m x = 0}` and `solve_factorization(f, g)` finds `h` with `g = f h`.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;

    fn index(&self, (r, c): (usize, usize)) -> &F {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from row vectors; `cols` is needed when there are no rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: n, cols, data }
    }

    /// Builds from column vectors; `rows` is needed when there are no columns.
    pub fn from_cols(rows: usize, cols: &[Vec<F>]) -> Self {
        Matrix::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, data: entries.iter().map(|&v| F::from_i64(v)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)].add_mul_assign(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, s: &F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(s)).collect() }
    }

    /// `v * self` for a row vector `v`.
    pub fn apply_row(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![F::zero(); self.cols];
        for (r, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                o.add_mul_assign(a, &self[(r, c)]);
            }
        }
        out
    }

    pub fn hstack(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, rhs.rows);
        Matrix::from_fn(self.rows, self.cols + rhs.cols, |r, c| if c < self.cols { self[(r, c)].clone() } else { rhs[(r, c - self.cols)].clone() })
    }

    pub fn vstack(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn block_diag(blocks: &[Matrix<F>]) -> Matrix<F> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix<F> {
        Matrix::from_fn(idx.len(), self.cols, |r, c| self[(idx[r], c)].clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix<F> {
        Matrix::from_fn(self.rows, idx.len(), |r, c| self[(r, idx[c])].clone())
    }

    /// Reduced row echelon form and its pivot columns.
    ///
    /// Among candidate rows for a pivot the entry of least bit size wins,
    /// ties going to the lower row index.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let best = (lead..m.rows).filter(|&r| !m[(r, c)].is_zero()).min_by_key(|&r| (m[(r, c)].bit_size(), r));
            let Some(p) = best else { continue };
            m.swap_rows(lead, p);
            let inv = m[(lead, c)].inv().expect("nonzero pivot");
            for k in c..m.cols {
                m[(lead, k)] = m[(lead, k)].mul(&inv);
            }
            for r in 0..m.rows {
                if r == lead || m[(r, c)].is_zero() {
                    continue;
                }
                let factor = m[(r, c)].clone();
                for k in c..m.cols {
                    if m[(lead, k)].is_zero() {
                        continue;
                    }
                    let t = factor.mul(&m[(lead, k)]);
                    m[(r, k)] = m[(r, k)].sub(&t);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        self.rref().1.len()
    }

    /// Nonzero rows of the reduced echelon form: a canonical basis of the row space.
    pub fn row_space(&self) -> Matrix<F> {
        let (r, p) = self.rref();
        r.select_rows(&(0..p.len()).collect::<Vec<_>>())
    }

    /// Columns spanning `{x : self * x = 0}`, one per free column of the
    /// reduced echelon form (free entry 1, other free entries 0).
    pub fn kernel_basis(&self) -> Matrix<F> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out[(f, k)] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                out[(p, k)] = r[(i, f)].neg();
            }
        }
        out
    }

    /// Rows spanning `{x : x * self = 0}`.
    pub fn left_kernel(&self) -> Matrix<F> {
        self.transpose().kernel_basis().transpose()
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let (r, p) = self.hstack(&Matrix::identity(n)).rref();
        if p.len() < n || p[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, k: usize) -> Matrix<F> {
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t.add(&self[(i, i)]);
        }
        t
    }
}

/// Finds `h` with `g = f h`, or `None` when no such `h` exists.
///
/// The returned solution is the reduced-echelon particular solution: free
/// variables are set to zero.
pub fn solve_factorization<F: Field>(f: &Matrix<F>, g: &Matrix<F>) -> Option<Matrix<F>> {
    assert_eq!(f.rows(), g.rows(), "row counts differ");
    let (r, pivots) = f.hstack(g).rref();
    if pivots.iter().any(|&p| p >= f.cols()) {
        return None;
    }
    let mut h = Matrix::zeros(f.cols(), g.cols());
    for (i, &p) in pivots.iter().enumerate() {
        for c in 0..g.cols() {
            h[(p, c)] = r[(i, f.cols() + c)].clone();
        }
    }
    Some(h)
}

/// Sparse row: strictly increasing column indices, no stored zeros.
pub type SparseRow<F> = Vec<(usize, F)>;

pub fn sparse_from_dense<F: Field>(v: &[F]) -> SparseRow<F> {
    v.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(i, a)| (i, a.clone())).collect()
}

pub fn dense_from_sparse<F: Field>(v: &SparseRow<F>, len: usize) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (i, a) in v {
        out[*i] = a.clone();
    }
    out
}

/// `a + s * b`
fn axpy<F: Field>(a: &SparseRow<F>, s: &F, b: &SparseRow<F>) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, s.mul(&b[j].1)));
            j += 1;
        } else {
            let v = a[i].1.add(&s.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally built row echelon basis of a subspace of `F^n`, keyed by
/// leading column. Used for the large, very sparse hom systems.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    width: usize,
    rows: BTreeMap<usize, SparseRow<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: BTreeMap::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after eliminating every leading column.
    pub fn reduce(&self, mut v: SparseRow<F>) -> SparseRow<F> {
        let mut k = 0;
        while k < v.len() {
            let (c, a) = (v[k].0, v[k].1.clone());
            match self.rows.get(&c) {
                Some(row) => {
                    // rows are monic in their leading column
                    v = axpy(&v, &a.neg(), row);
                }
                None => k += 1,
            }
        }
        v
    }

    /// Adds `v` to the span; returns false when it was already contained.
    pub fn insert(&mut self, v: SparseRow<F>) -> bool {
        let mut v = self.reduce(v);
        let Some((lead, a)) = v.first().cloned() else { return false };
        let inv = a.inv().expect("nonzero lead");
        for e in v.iter_mut() {
            e.1 = e.1.mul(&inv);
        }
        self.rows.insert(lead, v);
        true
    }

    pub fn contains(&self, v: SparseRow<F>) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Basis of the solution space of the homogeneous system whose
    /// equations span this echelon, in the same normal form as
    /// [`Matrix::kernel_basis`].
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let free: Vec<usize> = (0..self.width).filter(|c| !self.rows.contains_key(c)).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![F::zero(); self.width];
            x[f] = F::one();
            for (&lead, row) in self.rows.iter().rev() {
                let mut s = F::zero();
                for (c, a) in row.iter().skip(1) {
                    if !x[*c].is_zero() {
                        s.add_mul_assign(a, &x[*c]);
                    }
                }
                x[lead] = s.neg();
            }
            out.push(x);
        }
        out
    }
}

/// Kernel of the linear system with the given equation rows over `width` unknowns.
pub fn sparse_kernel<F: Field>(width: usize, equations: impl IntoIterator<Item = SparseRow<F>>) -> Vec<Vec<F>> {
    let mut e = Echelon::new(width);
    for row in equations {
        if !row.is_empty() {
            e.insert(row);
        }
    }
    e.kernel()
}

/// Dimension of the span of the given vectors.
pub fn span_rank<F: Field>(width: usize, vectors: impl IntoIterator<Item = SparseRow<F>>) -> usize {
    let mut e = Echelon::new(width);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Solves `sum_i x_i * vectors[i] = target`, returning coefficients.
pub fn express_in_span<F: Field>(width: usize, vectors: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    if vectors.is_empty() {
        return target.iter().all(F::is_zero).then(Vec::new);
    }
    let a = Matrix::from_cols(width, vectors);
    let b = Matrix::from_cols(width, &[target.to_vec()]);
    solve_factorization(&a, &b).map(|h| h.col(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type Q = Rational;

    fn m(rows: usize, cols: usize, e: &[i64]) -> Matrix<Q> {
        Matrix::from_i64(rows, cols, e)
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert_eq!(m(2, 2, &[1, 0, 0, 1]).kernel_basis().cols(), 0);
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let k = m(2, 3, &[0; 6]).kernel_basis();
        assert_eq!(k.cols(), 3);
        assert_eq!(k.rank(), 3);
    }

    #[test]
    fn kernel_of_all_ones() {
        let k = m(2, 2, &[1, 1, 1, 1]).kernel_basis();
        assert_eq!(k, m(2, 1, &[-1, 1]));
    }

    #[test]
    fn empty_matrices_behave() {
        let z: Matrix<Q> = Matrix::zeros(0, 3);
        assert_eq!(z.kernel_basis().cols(), 3);
        let z: Matrix<Q> = Matrix::zeros(3, 0);
        assert_eq!(z.kernel_basis().cols(), 0);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.mul(&Matrix::zeros(0, 2)), Matrix::zeros(3, 2));
    }

    #[test]
    fn factorization_examples() {
        let g = m(2, 2, &[3, 1, 4, 1]);
        assert_eq!(solve_factorization(&Matrix::identity(2), &g), Some(g.clone()));
        assert_eq!(solve_factorization(&Matrix::zeros(2, 2), &g), None);
        assert_eq!(solve_factorization(&m(2, 1, &[1, 1]), &m(2, 1, &[2, 2])), Some(m(1, 1, &[2])));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(3, 3, &[2, 1, 0, 0, 1, 3, 1, 0, 1]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        assert!(m(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn sparse_kernel_matches_dense() {
        let a = m(3, 5, &[1, 2, 0, 0, 1, 0, 0, 1, 1, 0, 1, 2, 1, 1, 1]);
        let dense = a.kernel_basis();
        let sparse = sparse_kernel(5, a.row_vecs().iter().map(|r| sparse_from_dense(r)));
        assert_eq!(Matrix::from_cols(5, &sparse), dense);
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::<Q>::new(3);
        assert!(e.insert(sparse_from_dense(&[Q::from_i64(1), Q::from_i64(1), Q::zero()])));
        assert!(!e.insert(sparse_from_dense(&[Q::from_i64(2), Q::from_i64(2), Q::zero()])));
        assert!(e.contains(sparse_from_dense(&[Q::from_i64(-1), Q::from_i64(-1), Q::zero()])));
        assert!(!e.contains(sparse_from_dense(&[Q::zero(), Q::one(), Q::zero()])));
    }
}
