use super::{complexes_isomorphic, decompose_complex, TwoTermComplex};
use crate::algebra::BoundQuiverAlgebra;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{sparse_from_dense, sparse_kernel, Echelon, SparseRow};
use crate::modrep::{HomLayout, ProjMap};

/// A chain map between two-term complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap<F> {
    pub minus1: ProjMap<F>,
    pub zero: ProjMap<F>,
}

impl<F: Field> ChainMap<F> {
    pub fn zero_map(alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>, u: &TwoTermComplex<F>) -> Self {
        ChainMap { minus1: ProjMap::zero(alg, &t.p_minus1, &u.p_minus1), zero: ProjMap::zero(alg, &t.p_zero, &u.p_zero) }
    }

    pub fn identity(alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>) -> Self {
        ChainMap { minus1: ProjMap::identity(alg, &t.p_minus1), zero: ProjMap::identity(alg, &t.p_zero) }
    }

    /// `self` followed by `next`.
    pub fn then(&self, alg: &BoundQuiverAlgebra<F>, next: &ChainMap<F>) -> Self {
        ChainMap { minus1: self.minus1.then(alg, &next.minus1), zero: self.zero.then(alg, &next.zero) }
    }

    pub fn add(&self, other: &ChainMap<F>) -> Self {
        ChainMap { minus1: self.minus1.add(&other.minus1), zero: self.zero.add(&other.zero) }
    }

    pub fn scale(&self, c: &F) -> Self {
        ChainMap { minus1: self.minus1.scale(c), zero: self.zero.scale(c) }
    }

    pub fn is_chain_map(&self, alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>, u: &TwoTermComplex<F>) -> bool {
        self.minus1.then(alg, &u.d) == t.d.then(alg, &self.zero)
    }
}

/// Coordinates on pairs `(f^{-1}, f^0)`.
#[derive(Clone, Debug)]
pub(crate) struct ChainCoords {
    pub l1: HomLayout,
    pub l0: HomLayout,
}

impl ChainCoords {
    pub fn new<F: Field>(alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>, u: &TwoTermComplex<F>) -> Self {
        ChainCoords { l1: HomLayout::new(alg, &t.p_minus1, &u.p_minus1), l0: HomLayout::new(alg, &t.p_zero, &u.p_zero) }
    }

    pub fn width(&self) -> usize {
        self.l1.dim() + self.l0.dim()
    }

    pub fn flatten<F: Field>(&self, f: &ChainMap<F>) -> SparseRow<F> {
        let mut v = self.l1.flatten(&f.minus1);
        v.extend(self.l0.flatten(&f.zero));
        sparse_from_dense(&v)
    }

    pub fn unflatten<F: Field>(&self, alg: &BoundQuiverAlgebra<F>, v: &[F]) -> ChainMap<F> {
        let k = self.l1.dim();
        ChainMap { minus1: self.l1.unflatten(alg, &v[..k]), zero: self.l0.unflatten(alg, &v[k..]) }
    }
}

/// `Hom(T, U[shift])` in the homotopy category.
#[derive(Clone, Debug)]
pub struct HomK<F> {
    pub dim: usize,
    /// Shift 0: chain maps whose classes form a basis.
    pub chain_maps: Vec<ChainMap<F>>,
    /// Shift 1: maps `T^{-1} -> U^0`; shift -1: maps `T^0 -> U^{-1}`.
    pub maps: Vec<ProjMap<F>>,
}

/// Equation rows of the system `sum_k x_k cols[k] = 0`.
fn transpose_to_rows<F: Field>(cols: &[SparseRow<F>], height: usize) -> Vec<SparseRow<F>> {
    let mut rows: Vec<SparseRow<F>> = vec![Vec::new(); height];
    for (k, col) in cols.iter().enumerate() {
        for (i, x) in col {
            rows[*i].push((k, x.clone()));
        }
    }
    rows.retain(|r| !r.is_empty());
    rows
}

fn shifted<F: Field>(row: SparseRow<F>, by: usize) -> SparseRow<F> {
    row.into_iter().map(|(k, x)| (k + by, x)).collect()
}

/// Null-homotopic chain maps `(h d_T, d_U h)` for `h` running over a
/// basis, in the coordinates of `coords`.
pub(crate) fn null_homotopic<F: Field>(alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>, u: &TwoTermComplex<F>, coords: &ChainCoords) -> Vec<SparseRow<F>> {
    let lh = HomLayout::new(alg, &t.p_zero, &u.p_minus1);
    let k = coords.l1.dim();
    lh.pre_compose(alg, &t.d, &coords.l1)
        .into_iter()
        .zip(lh.post_compose(alg, &u.d, &coords.l0))
        .map(|(mut a, b)| {
            a.extend(shifted(b, k));
            a
        })
        .collect()
}

pub fn hom_homotopy<F: Field>(alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>, u: &TwoTermComplex<F>, shift: i32) -> HomK<F> {
    match shift {
        0 => hom_zero(alg, t, u),
        1 => hom_plus(alg, t, u),
        -1 => hom_minus(alg, t, u),
        _ => HomK { dim: 0, chain_maps: Vec::new(), maps: Vec::new() },
    }
}

fn hom_zero<F: Field>(alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>, u: &TwoTermComplex<F>) -> HomK<F> {
    let coords = ChainCoords::new(alg, t, u);
    let lc = HomLayout::new(alg, &t.p_minus1, &u.p_zero);
    let mut cols = coords.l1.post_compose(alg, &u.d, &lc);
    cols.extend(coords.l0.pre_compose(alg, &t.d, &lc).into_iter().map(|c| c.into_iter().map(|(i, x)| (i, x.neg())).collect()));
    let kernel = sparse_kernel(coords.width(), transpose_to_rows(&cols, lc.dim()));
    let mut ech = Echelon::new(coords.width());
    for h in null_homotopic(alg, t, u, &coords) {
        ech.insert(h);
    }
    let mut chain_maps = Vec::new();
    for z in kernel {
        if ech.insert(sparse_from_dense(&z)) {
            chain_maps.push(coords.unflatten(alg, &z));
        }
    }
    HomK { dim: chain_maps.len(), chain_maps, maps: Vec::new() }
}

fn hom_plus<F: Field>(alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>, u: &TwoTermComplex<F>) -> HomK<F> {
    let lc = HomLayout::new(alg, &t.p_minus1, &u.p_zero);
    let mut ech = Echelon::new(lc.dim());
    let l0 = HomLayout::new(alg, &t.p_zero, &u.p_zero);
    let l1 = HomLayout::new(alg, &t.p_minus1, &u.p_minus1);
    for v in l0.pre_compose(alg, &t.d, &lc).into_iter().chain(l1.post_compose(alg, &u.d, &lc)) {
        ech.insert(v);
    }
    let mut maps = Vec::new();
    for k in 0..lc.dim() {
        if ech.insert(vec![(k, F::one())]) {
            let mut e = vec![F::zero(); lc.dim()];
            e[k] = F::one();
            maps.push(lc.unflatten(alg, &e));
        }
    }
    HomK { dim: maps.len(), chain_maps: Vec::new(), maps }
}

fn hom_minus<F: Field>(alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>, u: &TwoTermComplex<F>) -> HomK<F> {
    let lh = HomLayout::new(alg, &t.p_zero, &u.p_minus1);
    let out0 = HomLayout::new(alg, &t.p_zero, &u.p_zero);
    let out1 = HomLayout::new(alg, &t.p_minus1, &u.p_minus1);
    let a = lh.post_compose(alg, &u.d, &out0);
    let b = lh.pre_compose(alg, &t.d, &out1);
    let mut rows = transpose_to_rows(&a, out0.dim());
    rows.extend(transpose_to_rows(&b, out1.dim()));
    let maps: Vec<ProjMap<F>> = sparse_kernel(lh.dim(), rows).iter().map(|x| lh.unflatten(alg, x)).collect();
    HomK { dim: maps.len(), chain_maps: Vec::new(), maps }
}

/// `Hom(T, T[1]) = 0`; higher shifts vanish for two-term complexes.
pub fn is_presilting<F: Field>(alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>) -> bool {
    hom_homotopy(alg, t, t, 1).dim == 0
}

/// Presilting with exactly `n` pairwise non-isomorphic indecomposable summands.
pub fn is_two_term_silting<F: Field>(alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>, seed: u64) -> Result<bool> {
    if !is_presilting(alg, t) {
        return Ok(false);
    }
    let parts = decompose_complex(alg, t, seed)?;
    let mut distinct: Vec<TwoTermComplex<F>> = Vec::new();
    for p in parts {
        if !distinct.iter().any(|q| complexes_isomorphic(alg, q, &p, seed)) {
            distinct.push(p);
        }
    }
    Ok(distinct.len() == alg.n())
}
