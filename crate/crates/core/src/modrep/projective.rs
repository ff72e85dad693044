//! Maps between direct sums of indecomposable projectives.
//!
//! `Hom(P_i, P_j) = e_j A e_i` acting by left multiplication, so a map
//! `P_{v_1} + ... + P_{v_s} -> P_{w_1} + ... + P_{w_t}` is a `t x s` matrix
//! whose `(c, r)` entry lies in `e_{w_c} A e_{v_r}`. Composition is matrix
//! multiplication over `A`.

use super::{RepMorphism, Representation};
use crate::algebra::BoundQuiverAlgebra;
use crate::field::Field;
use crate::linalg::{Matrix, SparseRow};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjMap<F> {
    /// Vertices of the source summands.
    pub src: Vec<usize>,
    /// Vertices of the target summands.
    pub tgt: Vec<usize>,
    /// `entries[c][r]` is a dense algebra element.
    pub entries: Vec<Vec<Vec<F>>>,
}

impl<F: Field> ProjMap<F> {
    pub fn zero(alg: &BoundQuiverAlgebra<F>, src: &[usize], tgt: &[usize]) -> Self {
        let entries = vec![vec![alg.zero_element(); src.len()]; tgt.len()];
        ProjMap { src: src.to_vec(), tgt: tgt.to_vec(), entries }
    }

    pub fn identity(alg: &BoundQuiverAlgebra<F>, vs: &[usize]) -> Self {
        let mut m = Self::zero(alg, vs, vs);
        for (i, &v) in vs.iter().enumerate() {
            m.entries[i][i] = alg.basis_vector(v);
        }
        m
    }

    pub fn entry(&self, c: usize, r: usize) -> &[F] {
        &self.entries[c][r]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().flatten().all(F::is_zero)
    }

    /// `self` followed by `next`, i.e. the product `next * self`.
    pub fn then(&self, alg: &BoundQuiverAlgebra<F>, next: &ProjMap<F>) -> ProjMap<F> {
        debug_assert_eq!(self.tgt, next.src);
        let mut out = Self::zero(alg, &self.src, &next.tgt);
        for (c2, row) in next.entries.iter().enumerate() {
            for (c, y) in row.iter().enumerate() {
                if y.iter().all(F::is_zero) {
                    continue;
                }
                for r in 0..self.src.len() {
                    let x = &self.entries[c][r];
                    if x.iter().all(F::is_zero) {
                        continue;
                    }
                    let p = alg.multiply(y, x);
                    for (o, v) in out.entries[c2][r].iter_mut().zip(p) {
                        *o = o.add(&v);
                    }
                }
            }
        }
        out
    }

    fn zip_with(&self, other: &ProjMap<F>, f: impl Fn(&F, &F) -> F) -> ProjMap<F> {
        debug_assert_eq!((&self.src, &self.tgt), (&other.src, &other.tgt));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(s, t)| f(s, t)).collect()).collect())
            .collect();
        ProjMap { src: self.src.clone(), tgt: self.tgt.clone(), entries }
    }

    pub fn add(&self, other: &ProjMap<F>) -> ProjMap<F> {
        self.zip_with(other, F::add)
    }

    pub fn sub(&self, other: &ProjMap<F>) -> ProjMap<F> {
        self.zip_with(other, F::sub)
    }

    pub fn scale(&self, s: &F) -> ProjMap<F> {
        self.zip_with(self, |x, _| x.mul(s))
    }

    pub fn neg(&self) -> ProjMap<F> {
        self.zip_with(self, |x, _| x.neg())
    }

    /// `[self | other]`: same target, sources concatenated.
    pub fn hstack(&self, other: &ProjMap<F>) -> ProjMap<F> {
        debug_assert_eq!(self.tgt, other.tgt);
        let mut src = self.src.clone();
        src.extend_from_slice(&other.src);
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.iter().chain(b).cloned().collect()).collect();
        ProjMap { src, tgt: self.tgt.clone(), entries }
    }

    /// `[self; other]`: same source, targets concatenated.
    pub fn vstack(&self, other: &ProjMap<F>) -> ProjMap<F> {
        debug_assert_eq!(self.src, other.src);
        let mut tgt = self.tgt.clone();
        tgt.extend_from_slice(&other.tgt);
        let entries = self.entries.iter().chain(&other.entries).cloned().collect();
        ProjMap { src: self.src.clone(), tgt, entries }
    }

    pub fn direct_sum(alg: &BoundQuiverAlgebra<F>, a: &ProjMap<F>, b: &ProjMap<F>) -> ProjMap<F> {
        let top = a.hstack(&ProjMap::zero(alg, &b.src, &a.tgt));
        let bottom = ProjMap::zero(alg, &a.src, &b.tgt).hstack(b);
        top.vstack(&bottom)
    }

    pub fn remove_src(&mut self, r: usize) {
        self.src.remove(r);
        for row in &mut self.entries {
            row.remove(r);
        }
    }

    pub fn remove_tgt(&mut self, c: usize) {
        self.tgt.remove(c);
        self.entries.remove(c);
    }

    pub fn select_src(&self, idx: &[usize]) -> ProjMap<F> {
        ProjMap {
            src: idx.iter().map(|&i| self.src[i]).collect(),
            tgt: self.tgt.clone(),
            entries: self.entries.iter().map(|row| idx.iter().map(|&i| row[i].clone()).collect()).collect(),
        }
    }

    pub fn select_tgt(&self, idx: &[usize]) -> ProjMap<F> {
        ProjMap { src: self.src.clone(), tgt: idx.iter().map(|&i| self.tgt[i]).collect(), entries: idx.iter().map(|&i| self.entries[i].clone()).collect() }
    }

    /// The induced morphism of representations `free(src) -> free(tgt)`.
    pub fn to_rep_morphism(&self, alg: &BoundQuiverAlgebra<F>) -> RepMorphism<F> {
        let maps = (0..alg.n())
            .map(|w| {
                let rows: Vec<&[usize]> = self.src.iter().map(|&v| alg.paths_between(v, w)).collect();
                let cols: Vec<&[usize]> = self.tgt.iter().map(|&v| alg.paths_between(v, w)).collect();
                let nr = rows.iter().map(|p| p.len()).sum();
                let nc = cols.iter().map(|p| p.len()).sum();
                let mut m: Matrix<F> = Matrix::zeros(nr, nc);
                let mut r0 = 0;
                for (r, rp) in rows.iter().enumerate() {
                    let mut c0 = 0;
                    for (c, cp) in cols.iter().enumerate() {
                        let x = &self.entries[c][r];
                        for (pi, &p) in rp.iter().enumerate() {
                            for (t, xt) in x.iter().enumerate() {
                                if xt.is_zero() {
                                    continue;
                                }
                                for (q, coef) in alg.mul_basis(t, p) {
                                    if let Some(qi) = cp.iter().position(|z| z == q) {
                                        m[(r0 + pi, c0 + qi)].add_mul_assign(xt, coef);
                                    }
                                }
                            }
                        }
                        c0 += cp.len();
                    }
                    r0 += rp.len();
                }
                m
            })
            .collect();
        RepMorphism { maps }
    }
}

/// Coordinates on `Hom(P_src, P_tgt)`: block `(c, r)` is spanned by the
/// basis paths from `tgt[c]` to `src[r]`.
#[derive(Clone, Debug)]
pub struct HomLayout {
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    blocks: Vec<Vec<(usize, Vec<usize>)>>,
    dim: usize,
}

impl HomLayout {
    pub fn new<F: Field>(alg: &BoundQuiverAlgebra<F>, src: &[usize], tgt: &[usize]) -> Self {
        let mut dim = 0;
        let blocks = tgt
            .iter()
            .map(|&w| {
                src.iter()
                    .map(|&v| {
                        let paths = alg.paths_between(w, v).to_vec();
                        let off = dim;
                        dim += paths.len();
                        (off, paths)
                    })
                    .collect()
            })
            .collect();
        HomLayout { src: src.to_vec(), tgt: tgt.to_vec(), blocks, dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn flatten<F: Field>(&self, f: &ProjMap<F>) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (c, row) in self.blocks.iter().enumerate() {
            for (r, (off, paths)) in row.iter().enumerate() {
                for (i, &p) in paths.iter().enumerate() {
                    out[off + i] = f.entries[c][r][p].clone();
                }
            }
        }
        out
    }

    pub fn unflatten<F: Field>(&self, alg: &BoundQuiverAlgebra<F>, v: &[F]) -> ProjMap<F> {
        let mut f = ProjMap::zero(alg, &self.src, &self.tgt);
        for (c, row) in self.blocks.iter().enumerate() {
            for (r, (off, paths)) in row.iter().enumerate() {
                for (i, &p) in paths.iter().enumerate() {
                    f.entries[c][r][p] = v[off + i].clone();
                }
            }
        }
        f
    }

    fn position(&self, c: usize, r: usize, path: usize) -> Option<usize> {
        let (off, paths) = &self.blocks[c][r];
        paths.iter().position(|&q| q == path).map(|i| off + i)
    }

    /// Basis elements as `(c, r, path)`, in coordinate order.
    fn basis_elements(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.blocks.iter().enumerate().flat_map(|(c, row)| row.iter().enumerate().flat_map(move |(r, (_, paths))| paths.iter().map(move |&p| (c, r, p))))
    }

    /// Coordinates in `out` of `e.then(g)` for each basis element `e`.
    pub fn post_compose<F: Field>(&self, alg: &BoundQuiverAlgebra<F>, g: &ProjMap<F>, out: &HomLayout) -> Vec<SparseRow<F>> {
        let terms = nonzero_terms(g);
        self.basis_elements()
            .map(|(c, r, p)| {
                let mut acc = Vec::new();
                for (c2, row) in terms.iter().enumerate() {
                    for (t, a) in &row[c] {
                        for (q, b) in alg.mul_basis(*t, p) {
                            let k = out.position(c2, r, *q).expect("product stays in its block");
                            acc.push((k, a.mul(b)));
                        }
                    }
                }
                normalize(acc)
            })
            .collect()
    }

    /// Coordinates in `out` of `f.then(e)` for each basis element `e`.
    pub fn pre_compose<F: Field>(&self, alg: &BoundQuiverAlgebra<F>, f: &ProjMap<F>, out: &HomLayout) -> Vec<SparseRow<F>> {
        let terms = nonzero_terms(f);
        self.basis_elements()
            .map(|(c, r, p)| {
                let mut acc = Vec::new();
                for (r2, ts) in terms[r].iter().enumerate() {
                    for (t, a) in ts {
                        for (q, b) in alg.mul_basis(p, *t) {
                            let k = out.position(c, r2, *q).expect("product stays in its block");
                            acc.push((k, a.mul(b)));
                        }
                    }
                }
                normalize(acc)
            })
            .collect()
    }

    pub fn basis<F: Field>(&self, alg: &BoundQuiverAlgebra<F>) -> Vec<ProjMap<F>> {
        (0..self.dim)
            .map(|k| {
                let mut v = vec![F::zero(); self.dim];
                v[k] = F::one();
                self.unflatten(alg, &v)
            })
            .collect()
    }
}

fn nonzero_terms<F: Field>(m: &ProjMap<F>) -> Vec<Vec<Vec<(usize, F)>>> {
    m.entries
        .iter()
        .map(|row| row.iter().map(|x| x.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(t, a)| (t, a.clone())).collect()).collect())
        .collect()
}

/// Sorts by index, merging repeats and dropping zeros.
pub(crate) fn normalize<F: Field>(mut acc: Vec<(usize, F)>) -> SparseRow<F> {
    acc.sort_by_key(|e| e.0);
    let mut out: SparseRow<F> = Vec::with_capacity(acc.len());
    for (k, a) in acc {
        match out.last_mut() {
            Some((j, b)) if *j == k => *b = b.add(&a),
            _ => out.push((k, a)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// Direct sum of the projectives `P_v = e_v A` for the listed vertices.
pub fn free_module<F: Field>(alg: &BoundQuiverAlgebra<F>, vertices: &[usize]) -> Representation<F> {
    let n = alg.n();
    let dims: Vec<usize> = (0..n).map(|w| vertices.iter().map(|&v| alg.paths_between(v, w).len()).sum()).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let (u, w) = (arrow.source, arrow.target);
            let ab = alg.arrow_basis_index(a);
            let mut m = Matrix::zeros(dims[u], dims[w]);
            let (mut r0, mut c0) = (0, 0);
            for &v in vertices {
                let rows = alg.paths_between(v, u);
                let cols = alg.paths_between(v, w);
                for (ri, &p) in rows.iter().enumerate() {
                    for (q, c) in alg.mul_basis(p, ab) {
                        if let Some(ci) = cols.iter().position(|z| z == q) {
                            m[(r0 + ri, c0 + ci)] = c.clone();
                        }
                    }
                }
                r0 += rows.len();
                c0 += cols.len();
            }
            m
        })
        .collect();
    Representation::from_parts(dims, maps)
}
