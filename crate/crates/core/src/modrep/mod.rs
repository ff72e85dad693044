//! Finite-dimensional right modules as quiver representations.
//!
//! A representation assigns a space `k^{d_v}` to each vertex and to each
//! arrow `a: i -> j` a `d_i x d_j` matrix acting on row vectors, so a path
//! `a*b` acts by the product `M_a M_b`.

mod decompose;
mod hom;
mod presentation;
mod projective;

use std::fmt;

pub use decompose::{decompose, is_isomorphic, summand_multiset, DEFAULT_SEED};
pub use hom::{annihilator_dim, costable_hom_dim, ext1_dim, hom_dim, hom_space, in_fac, stable_hom_dim, trace_submodule};
pub use presentation::{minimal_projective_presentation, nakayama, tau, top_dims, Presentation};
pub use projective::{free_module, HomLayout, ProjMap};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::format::parse_document;
use crate::linalg::{solve_factorization, Matrix};

/// A right `A`-module given by vertex dimensions and arrow matrices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Representation<F> {
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

impl<F: fmt::Debug> fmt::Debug for Representation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.dims)?;
        for m in &self.maps {
            write!(f, " {m:?}")?;
        }
        Ok(())
    }
}

/// Standard modules attached to a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Projective,
    Injective,
    Simple,
}

impl<F: Field> Representation<F> {
    /// Validates shapes and relations.
    pub fn new(alg: &BoundQuiverAlgebra<F>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        if dims.len() != alg.n() || maps.len() != alg.arrows().len() {
            return Err(Error::Dimension("wrong number of vertices or arrows".into()));
        }
        for (a, arrow) in alg.arrows().iter().enumerate() {
            let m = &maps[a];
            if (m.rows(), m.cols()) != (dims[arrow.source], dims[arrow.target]) {
                return Err(Error::Dimension(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    arrow.name,
                    dims[arrow.source],
                    dims[arrow.target],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let rep = Representation { dims, maps };
        for (k, rel) in alg.relations().iter().enumerate() {
            if !rep.evaluate(alg, rel).is_zero() {
                return Err(Error::RelationViolated(alg.spec().relations[k].text.clone()));
            }
        }
        Ok(rep)
    }

    /// Skips validation; callers guarantee the module axioms.
    pub(crate) fn from_parts(dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        Representation { dims, maps }
    }

    pub fn zero(alg: &BoundQuiverAlgebra<F>) -> Self {
        let dims = vec![0; alg.n()];
        let maps = alg.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation { dims, maps }
    }

    pub fn standard(alg: &BoundQuiverAlgebra<F>, vertex: usize, flavor: Flavor) -> Self {
        match flavor {
            Flavor::Projective => free_module(alg, &[vertex]),
            Flavor::Injective => cofree_module(alg, &[vertex]),
            Flavor::Simple => {
                let mut dims = vec![0; alg.n()];
                dims[vertex] = 1;
                let maps = alg.arrows().iter().map(|a| Matrix::zeros(dims[a.source], dims[a.target])).collect();
                Representation { dims, maps }
            }
        }
    }

    pub fn projective(alg: &BoundQuiverAlgebra<F>, vertex: usize) -> Self {
        Self::standard(alg, vertex, Flavor::Projective)
    }

    pub fn injective(alg: &BoundQuiverAlgebra<F>, vertex: usize) -> Self {
        Self::standard(alg, vertex, Flavor::Injective)
    }

    pub fn simple(alg: &BoundQuiverAlgebra<F>, vertex: usize) -> Self {
        Self::standard(alg, vertex, Flavor::Simple)
    }

    /// The regular module `A_A = e_1 A + ... + e_n A`.
    pub fn regular(alg: &BoundQuiverAlgebra<F>) -> Self {
        free_module(alg, &(0..alg.n()).collect::<Vec<_>>())
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix<F> {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// Matrix of a path given by arrow indices.
    pub fn arrow_path_matrix(&self, arrows: &[usize], start: usize) -> Matrix<F> {
        let mut m = Matrix::identity(self.dims[start]);
        for &a in arrows {
            m = m.mul(&self.maps[a]);
        }
        m
    }

    /// Matrices of all basis paths, indexed like the algebra basis.
    pub fn path_matrices(&self, alg: &BoundQuiverAlgebra<F>) -> Vec<Matrix<F>> {
        let mut out: Vec<Matrix<F>> = Vec::with_capacity(alg.dim());
        for (k, p) in alg.basis().iter().enumerate() {
            let m = match p.len() {
                0 => Matrix::identity(self.dims[p.source]),
                1 => self.maps[p.arrows[0]].clone(),
                l => match alg.path_index(&p.arrows[..l - 1]) {
                    Some(j) if j < k => out[j].mul(&self.maps[p.arrows[l - 1]]),
                    _ => self.arrow_path_matrix(&p.arrows, p.source),
                },
            };
            out.push(m);
        }
        out
    }

    fn evaluate(&self, alg: &BoundQuiverAlgebra<F>, rel: &[(F, Vec<usize>)]) -> Matrix<F> {
        let Some((_, first)) = rel.first() else { return Matrix::zeros(0, 0) };
        let (s, t) = (alg.arrows()[first[0]].source, alg.arrows()[*first.last().unwrap()].target);
        let mut acc = Matrix::zeros(self.dims[s], self.dims[t]);
        for (c, path) in rel {
            acc = acc.add(&self.arrow_path_matrix(path, s).scale(c));
        }
        acc
    }

    /// `v * x` for `v` in the space at vertex `i` and `x` in `e_i A e_j`.
    pub fn act(&self, alg: &BoundQuiverAlgebra<F>, paths: &[Matrix<F>], v: &[F], x: &[F], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dims[j]];
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            debug_assert_eq!(alg.basis()[k].target, j);
            let w = paths[k].apply_row(v);
            for (o, wi) in out.iter_mut().zip(&w) {
                o.add_mul_assign(c, wi);
            }
        }
        out
    }

    pub fn direct_sum(alg: &BoundQuiverAlgebra<F>, parts: &[&Representation<F>]) -> Self {
        let n = alg.n();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..alg.arrows().len()).map(|a| Matrix::block_diag(&parts.iter().map(|p| p.maps[a].clone()).collect::<Vec<_>>())).collect();
        Representation { dims, maps }
    }

    /// Reads the module file format: `dim_vector = [..]` and one
    /// `<arrow name> = [[row], ...]` line per arrow with nonempty matrix.
    pub fn parse(alg: &BoundQuiverAlgebra<F>, text: &str) -> Result<Self> {
        let mut dims = None;
        let mut given: Vec<Option<Matrix<F>>> = vec![None; alg.arrows().len()];
        for (line, key, value) in parse_document(text)? {
            if key == "dim_vector" {
                let d = value.as_array()?.iter().map(|v| v.as_usize()).collect::<Result<Vec<_>>>()?;
                if d.len() != alg.n() {
                    return Err(Error::Dimension(format!("line {line}: dim_vector has {} entries, algebra has {} vertices", d.len(), alg.n())));
                }
                dims = Some(d);
                continue;
            }
            let a = alg.spec().arrow_index(&key)?;
            let rows = value
                .as_array()?
                .iter()
                .map(|r| r.as_array()?.iter().map(|x| F::parse_scalar(x.as_str()?)).collect::<Result<Vec<F>>>())
                .collect::<Result<Vec<_>>>()?;
            let cols = rows.first().map_or(0, Vec::len);
            if rows.iter().any(|r| r.len() != cols) {
                return Err(Error::Syntax(format!("line {line}: ragged matrix for arrow {key}")));
            }
            given[a] = Some(Matrix::from_rows(cols, rows));
        }
        let dims = dims.ok_or_else(|| Error::Syntax("missing `dim_vector`".into()))?;
        let mut maps = Vec::with_capacity(given.len());
        for (arrow, m) in alg.arrows().iter().zip(given) {
            let (r, c) = (dims[arrow.source], dims[arrow.target]);
            maps.push(match m {
                Some(m) if m.rows() == 0 && r * c == 0 => Matrix::zeros(r, c),
                Some(m) => m,
                None if r * c == 0 => Matrix::zeros(r, c),
                None => return Err(Error::Dimension(format!("missing matrix for arrow {}", arrow.name))),
            });
        }
        Representation::new(alg, dims, maps)
    }

    pub fn to_text(&self, alg: &BoundQuiverAlgebra<F>) -> String {
        let d: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        let mut out = format!("dim_vector = [{}]\n", d.join(", "));
        for (a, arrow) in alg.arrows().iter().enumerate() {
            let m = &self.maps[a];
            if m.rows() * m.cols() == 0 {
                continue;
            }
            let rows: Vec<String> = (0..m.rows()).map(|r| format!("[{}]", m.row(r).iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))).collect();
            out += &format!("{} = [{}]\n", arrow.name, rows.join(", "));
        }
        out
    }
}

/// A morphism of representations: one matrix per vertex, acting on rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism<F> {
    pub maps: Vec<Matrix<F>>,
}

impl<F: Field> RepMorphism<F> {
    pub fn zero(src: &Representation<F>, tgt: &Representation<F>) -> Self {
        RepMorphism { maps: src.dims.iter().zip(&tgt.dims).map(|(&a, &b)| Matrix::zeros(a, b)).collect() }
    }

    pub fn identity(m: &Representation<F>) -> Self {
        RepMorphism { maps: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &RepMorphism<F>) -> Self {
        RepMorphism { maps: self.maps.iter().zip(&next.maps).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, other: &RepMorphism<F>) -> Self {
        RepMorphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, s: &F) -> Self {
        RepMorphism { maps: self.maps.iter().map(|a| a.scale(s)).collect() }
    }

    pub fn linear_combination(terms: &[RepMorphism<F>], coeffs: &[F]) -> Option<Self> {
        let mut iter = terms.iter().zip(coeffs);
        let (first, c) = iter.next()?;
        let mut acc = first.scale(c);
        for (t, c) in iter {
            if !c.is_zero() {
                acc = acc.add(&t.scale(c));
            }
        }
        Some(acc)
    }

    pub fn flatten(&self) -> Vec<F> {
        self.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    /// Two-sided inverse, when it exists.
    pub fn inverse(&self) -> Option<Self> {
        let maps = self.maps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(RepMorphism { maps })
    }

    pub fn is_morphism(&self, alg: &BoundQuiverAlgebra<F>, src: &Representation<F>, tgt: &Representation<F>) -> bool {
        alg.arrows().iter().enumerate().all(|(a, arrow)| src.maps[a].mul(&self.maps[arrow.target]) == self.maps[arrow.source].mul(&tgt.maps[a]))
    }
}

/// A submodule, as a row basis per vertex in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubRep<F> {
    pub basis: Vec<Matrix<F>>,
}

impl<F: Field> SubRep<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Matrix::rows).collect()
    }

    pub fn kernel(f: &RepMorphism<F>) -> Self {
        SubRep { basis: f.maps.iter().map(|m| m.left_kernel()).collect() }
    }

    pub fn image(f: &RepMorphism<F>) -> Self {
        SubRep { basis: f.maps.iter().map(|m| m.row_space()).collect() }
    }

    /// The submodule as a representation, with its inclusion.
    pub fn restrict(&self, alg: &BoundQuiverAlgebra<F>, ambient: &Representation<F>) -> (Representation<F>, RepMorphism<F>) {
        let dims = self.dims();
        let maps = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let (bi, bj) = (&self.basis[arrow.source], &self.basis[arrow.target]);
                if bi.rows() == 0 || bj.rows() == 0 {
                    return Matrix::zeros(bi.rows(), bj.rows());
                }
                let images = bi.mul(&ambient.maps[a]);
                let h = solve_factorization(&bj.transpose(), &images.transpose()).expect("subspace is a submodule");
                h.transpose()
            })
            .collect();
        (Representation { dims, maps }, RepMorphism { maps: self.basis.clone() })
    }

    /// The quotient module with its projection. The quotient basis at each
    /// vertex is the set of standard vectors off the pivot columns of the
    /// submodule's echelon form.
    pub fn quotient(&self, alg: &BoundQuiverAlgebra<F>, ambient: &Representation<F>) -> (Representation<F>, RepMorphism<F>) {
        let n = alg.n();
        let mut complements = Vec::with_capacity(n);
        let mut projections = Vec::with_capacity(n);
        for v in 0..n {
            let d = ambient.dims[v];
            let (r, pivots) = self.basis[v].rref();
            let sub = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
            let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
            let comp = Matrix::identity(d).select_rows(&free);
            let full = sub.vstack(&comp);
            let inv = full.inverse().expect("complement spans");
            let proj = inv.select_cols(&(pivots.len()..d).collect::<Vec<_>>());
            complements.push(comp);
            projections.push(proj);
        }
        let dims: Vec<usize> = complements.iter().map(Matrix::rows).collect();
        let maps = alg.arrows().iter().enumerate().map(|(a, arrow)| complements[arrow.source].mul(&ambient.maps[a]).mul(&projections[arrow.target])).collect();
        (Representation { dims, maps }, RepMorphism { maps: projections })
    }
}

/// Direct sum of the injectives `I_v = D(A e_v)` for the listed vertices.
pub fn cofree_module<F: Field>(alg: &BoundQuiverAlgebra<F>, vertices: &[usize]) -> Representation<F> {
    let n = alg.n();
    let dims: Vec<usize> = (0..n).map(|w| vertices.iter().map(|&v| alg.paths_between(w, v).len()).sum()).collect();
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
                let rows = alg.paths_between(u, v);
                let cols = alg.paths_between(w, v);
                // (phi . a)(q) = phi(a q)
                for (ci, &q) in cols.iter().enumerate() {
                    for (k, c) in alg.mul_basis(ab, q) {
                        if let Some(ri) = rows.iter().position(|&p| p == *k) {
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
    Representation { dims, maps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::corpus;
    use crate::field::Rational;

    type Q = Rational;

    fn a2() -> BoundQuiverAlgebra<Q> {
        BoundQuiverAlgebra::new(corpus::linear_a(2)).unwrap()
    }

    #[test]
    fn standard_modules_of_a2() {
        let a = a2();
        let p1 = Representation::projective(&a, 0);
        assert_eq!(p1.dims(), &[1, 1]);
        assert_eq!(p1.map(0), &Matrix::identity(1));
        let i1 = Representation::injective(&a, 0);
        assert_eq!(i1, Representation::simple(&a, 0));
        let i2 = Representation::injective(&a, 1);
        assert_eq!(i2, p1);
        for v in 0..2 {
            let s = Representation::simple(&a, v);
            assert_eq!(s.total_dim(), 1);
            assert_eq!(s.dim(v), 1);
        }
    }

    #[test]
    fn relations_are_enforced() {
        let k = BoundQuiverAlgebra::<Q>::new(corpus::truncated_polynomial(2)).unwrap();
        assert!(Representation::new(&k, vec![1], vec![Matrix::from_i64(1, 1, &[1])]).is_err());
        assert!(Representation::new(&k, vec![2], vec![Matrix::from_i64(2, 2, &[0, 1, 0, 0])]).is_ok());
        let a = Representation::regular(&k);
        assert_eq!(a, Representation::new(&k, a.dims().to_vec(), a.maps().to_vec()).unwrap());
    }

    #[test]
    fn module_file_roundtrip() {
        let a = a2();
        let text = "dim_vector = [1, 1]\na1 = [[1/2]]\n";
        let m = Representation::parse(&a, text).unwrap();
        assert_eq!(m.map(0)[(0, 0)], Q::parse_scalar("1/2").unwrap());
        assert_eq!(Representation::parse(&a, &m.to_text(&a)).unwrap(), m);
        let s1 = Representation::parse(&a, "dim_vector = [1, 0]\n").unwrap();
        assert_eq!(s1, Representation::simple(&a, 0));
        assert!(Representation::parse(&a, "dim_vector = [1, 1]\na1 = [[1, 2]]\n").is_err());
    }

    #[test]
    fn quotient_and_restriction() {
        let a = a2();
        let p1 = Representation::projective(&a, 0);
        // radical of P1 is S2
        let rad = SubRep { basis: vec![Matrix::zeros(0, 1), Matrix::identity(1)] };
        let (sub, incl) = rad.restrict(&a, &p1);
        assert_eq!(sub, Representation::simple(&a, 1));
        assert!(incl.is_morphism(&a, &sub, &p1));
        let (q, proj) = rad.quotient(&a, &p1);
        assert_eq!(q, Representation::simple(&a, 0));
        assert!(proj.is_morphism(&a, &p1, &q));
    }
}
