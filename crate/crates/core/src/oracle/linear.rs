//! Dense linear algebra and representation arithmetic for the oracle.
//! Kept separate from the main engine's solvers.

use crate::field::Field;

pub(crate) type Mat<F> = Vec<Vec<F>>;

pub(crate) fn zeros<F: Field>(r: usize, c: usize) -> Mat<F> {
    vec![vec![F::zero(); c]; r]
}

pub(crate) fn identity<F: Field>(n: usize) -> Mat<F> {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = F::one();
    }
    m
}

/// Product of an `r x k` and a `k x c` matrix; `k` is passed for empty inputs.
pub(crate) fn mul<F: Field>(a: &Mat<F>, b: &Mat<F>, c: usize) -> Mat<F> {
    a.iter()
        .map(|row| {
            let mut out = vec![F::zero(); c];
            for (x, brow) in row.iter().zip(b) {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(brow) {
                    *o = o.add(&x.mul(y));
                }
            }
            out
        })
        .collect()
}

pub(crate) fn transpose<F: Field>(a: &Mat<F>, cols: usize) -> Mat<F> {
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Reduced row echelon form and pivot columns.
pub(crate) fn rref<F: Field>(mut rows: Mat<F>, cols: usize) -> (Mat<F>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        let Some(p) = (top..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(top, p);
        let inv = rows[top][c].inv().expect("nonzero");
        rows[top] = rows[top].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..rows.len() {
            if i != top && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot = rows[top].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        top += 1;
    }
    rows.truncate(top);
    (rows, pivots)
}

pub(crate) fn rank<F: Field>(rows: Mat<F>, cols: usize) -> usize {
    rref(rows, cols).1.len()
}

/// Basis of `{x : E x = 0}` for equation rows `E`.
pub(crate) fn nullspace<F: Field>(equations: Mat<F>, vars: usize) -> Mat<F> {
    let (r, pivots) = rref(equations, vars);
    (0..vars)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![F::zero(); vars];
            x[free] = F::one();
            for (row, &p) in r.iter().zip(&pivots) {
                x[p] = row[free].neg();
            }
            x
        })
        .collect()
}

/// Coordinates of each row of `v` in the row basis `basis` (assumed to span them).
pub(crate) fn coordinates<F: Field>(basis: &Mat<F>, v: &Mat<F>, width: usize) -> Mat<F> {
    // solve y * basis = row via the transposed system
    let k = basis.len();
    v.iter()
        .map(|row| {
            let mut eqs: Mat<F> = (0..width).map(|j| basis.iter().map(|b| b[j].clone()).chain([row[j].neg()]).collect()).collect();
            eqs.retain(|e| e.iter().any(|x| !x.is_zero()));
            let sols = nullspace(eqs, k + 1);
            let s = sols.iter().find(|s| !s[k].is_zero()).expect("row lies in the span");
            let inv = s[k].inv().expect("nonzero");
            s[..k].iter().map(|x| x.mul(&inv)).collect()
        })
        .collect()
}

/// A representation: `maps[a]` is `dims[source] x dims[target]`, acting on row vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Rep<F> {
    pub dims: Vec<usize>,
    pub maps: Vec<Mat<F>>,
}

/// `dim Hom(X, Y)` from the defining equations `X_a f_t = f_s Y_a`.
pub(crate) fn hom_basis<F: Field>(arrows: &[(usize, usize)], x: &Rep<F>, y: &Rep<F>) -> Vec<Vec<Mat<F>>> {
    let n = x.dims.len();
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + x.dims[v] * y.dims[v];
    }
    let vars = offset[n];
    let var = |v: usize, i: usize, j: usize| offset[v] + i * y.dims[v] + j;
    let mut eqs = Vec::new();
    for (a, &(s, t)) in arrows.iter().enumerate() {
        for i in 0..x.dims[s] {
            for j in 0..y.dims[t] {
                let mut e = vec![F::zero(); vars];
                for k in 0..x.dims[t] {
                    let c = &x.maps[a][i][k];
                    e[var(t, k, j)] = e[var(t, k, j)].add(c);
                }
                for k in 0..y.dims[s] {
                    let c = &y.maps[a][k][j];
                    e[var(s, i, k)] = e[var(s, i, k)].sub(c);
                }
                eqs.push(e);
            }
        }
    }
    nullspace(eqs, vars)
        .into_iter()
        .map(|sol| (0..n).map(|v| (0..x.dims[v]).map(|i| (0..y.dims[v]).map(|j| sol[var(v, i, j)].clone()).collect()).collect()).collect())
        .collect()
}

/// `X` lies in `Fac M`: the images of all maps `M -> X` fill `X`.
pub(crate) fn in_fac<F: Field>(arrows: &[(usize, usize)], x: &Rep<F>, m: &[&Rep<F>]) -> bool {
    let n = x.dims.len();
    let mut images: Vec<Mat<F>> = vec![Vec::new(); n];
    for part in m {
        for f in hom_basis(arrows, part, x) {
            for (v, fv) in f.into_iter().enumerate() {
                images[v].extend(fv);
            }
        }
    }
    images.into_iter().enumerate().all(|(v, rows)| rank(rows, x.dims[v]) == x.dims[v])
}
