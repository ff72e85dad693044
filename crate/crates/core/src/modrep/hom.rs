use super::{cofree_module, free_module, minimal_projective_presentation, RepMorphism, Representation, SubRep};
use crate::algebra::BoundQuiverAlgebra;
use crate::field::Field;
use crate::linalg::{sparse_from_dense, sparse_kernel, Echelon, Matrix, SparseRow};

fn offsets<F: Field>(m: &Representation<F>, n: &Representation<F>) -> (Vec<usize>, usize) {
    let mut off = Vec::with_capacity(m.dims().len());
    let mut total = 0;
    for (a, b) in m.dims().iter().zip(n.dims()) {
        off.push(total);
        total += a * b;
    }
    (off, total)
}

fn merge<F: Field>(mut row: SparseRow<F>) -> SparseRow<F> {
    row.sort_by_key(|e| e.0);
    let mut out: SparseRow<F> = Vec::with_capacity(row.len());
    for (i, v) in row {
        match out.last_mut() {
            Some((j, w)) if *j == i => *w = w.add(&v),
            _ => out.push((i, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// Basis of `Hom_A(M, N)`: tuples `(phi_v)` with `M_a phi_j = phi_i N_a`
/// for every arrow `a: i -> j`.
pub fn hom_space<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, n: &Representation<F>) -> Vec<RepMorphism<F>> {
    let (off, total) = offsets(m, n);
    let idx = |v: usize, r: usize, c: usize| off[v] + r * n.dim(v) + c;
    let mut equations = Vec::new();
    for (a, arrow) in alg.arrows().iter().enumerate() {
        let (i, j) = (arrow.source, arrow.target);
        let (ma, na) = (m.map(a), n.map(a));
        for r in 0..m.dim(i) {
            for c in 0..n.dim(j) {
                let mut row = Vec::new();
                for k in 0..m.dim(j) {
                    let x = &ma[(r, k)];
                    if !x.is_zero() {
                        row.push((idx(j, k, c), x.clone()));
                    }
                }
                for k in 0..n.dim(i) {
                    let x = &na[(k, c)];
                    if !x.is_zero() {
                        row.push((idx(i, r, k), x.neg()));
                    }
                }
                let row = merge(row);
                if !row.is_empty() {
                    equations.push(row);
                }
            }
        }
    }
    sparse_kernel(total, equations)
        .into_iter()
        .map(|x| RepMorphism { maps: (0..alg.n()).map(|v| Matrix::from_fn(m.dim(v), n.dim(v), |r, c| x[idx(v, r, c)].clone())).collect() })
        .collect()
}

pub fn hom_dim<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, n: &Representation<F>) -> usize {
    hom_space(alg, m, n).len()
}

/// `dim Ext^1(M, N)` from `0 -> K -> P_0 -> M -> 0`:
/// `Hom(K, N) / im Hom(P_0, N)` together with exactness on the left.
pub fn ext1_dim<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, n: &Representation<F>) -> usize {
    let pres = minimal_projective_presentation(alg, m);
    let hom_p0: usize = pres.p0.iter().map(|&v| n.dim(v)).sum();
    hom_dim(alg, &pres.syzygy, n) + hom_dim(alg, m, n) - hom_p0
}

fn rank_of<F: Field>(maps: impl IntoIterator<Item = RepMorphism<F>>, width: usize) -> usize {
    let mut e = Echelon::new(width);
    for f in maps {
        e.insert(sparse_from_dense(&f.flatten()));
    }
    e.rank()
}

/// `dim` of Hom modulo maps factoring through a projective module.
pub fn stable_hom_dim<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, n: &Representation<F>) -> usize {
    let gens: Vec<(usize, usize)> = (0..alg.n()).flat_map(|v| (0..n.dim(v)).map(move |k| (v, k))).collect();
    let vs: Vec<usize> = gens.iter().map(|g| g.0).collect();
    let cover_src = free_module(alg, &vs);
    let paths = n.path_matrices(alg);
    let cover = RepMorphism {
        maps: (0..alg.n())
            .map(|w| {
                let rows: Vec<Vec<F>> =
                    gens.iter().flat_map(|&(v, k)| alg.paths_between(v, w).iter().map(|&p| paths[p].row(k).to_vec()).collect::<Vec<_>>()).collect();
                Matrix::from_rows(n.dim(w), rows)
            })
            .collect(),
    };
    let through = hom_space(alg, m, &cover_src).into_iter().map(|f| f.then(&cover));
    let (_, width) = offsets(m, n);
    hom_dim(alg, m, n) - rank_of(through, width)
}

/// `dim` of Hom modulo maps factoring through an injective module.
pub fn costable_hom_dim<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, n: &Representation<F>) -> usize {
    let cogens: Vec<(usize, usize)> = (0..alg.n()).flat_map(|v| (0..m.dim(v)).map(move |k| (v, k))).collect();
    let vs: Vec<usize> = cogens.iter().map(|g| g.0).collect();
    let hull = cofree_module(alg, &vs);
    let paths = m.path_matrices(alg);
    let envelope = RepMorphism {
        maps: (0..alg.n())
            .map(|w| {
                let cols: Vec<Vec<F>> =
                    cogens.iter().flat_map(|&(v, k)| alg.paths_between(w, v).iter().map(|&p| paths[p].col(k)).collect::<Vec<_>>()).collect();
                Matrix::from_cols(m.dim(w), &cols)
            })
            .collect(),
    };
    let through = hom_space(alg, &hull, n).into_iter().map(|g| envelope.then(&g));
    let (_, width) = offsets(m, n);
    hom_dim(alg, m, n) - rank_of(through, width)
}

/// The trace of `M` in `X`: the sum of images of all maps `M -> X`.
pub fn trace_submodule<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, x: &Representation<F>) -> SubRep<F> {
    let homs = hom_space(alg, m, x);
    let basis = (0..alg.n())
        .map(|v| {
            let gens: Vec<Vec<F>> = homs.iter().flat_map(|f| f.maps[v].row_vecs()).collect();
            Matrix::from_rows(x.dim(v), gens).row_space()
        })
        .collect();
    SubRep { basis }
}

/// Whether `X` is generated by `M`, i.e. `X` lies in `Fac M`.
pub fn in_fac<F: Field>(alg: &BoundQuiverAlgebra<F>, x: &Representation<F>, m: &Representation<F>) -> bool {
    if x.is_zero() {
        return true;
    }
    let homs = hom_space(alg, m, x);
    (0..alg.n()).all(|v| {
        let mut e = Echelon::new(x.dim(v));
        'outer: for f in &homs {
            for r in 0..m.dim(v) {
                if e.rank() == x.dim(v) {
                    break 'outer;
                }
                e.insert(sparse_from_dense(f.maps[v].row(r)));
            }
        }
        e.rank() == x.dim(v)
    })
}

/// Dimension of the annihilator `{x in A : M x = 0}`.
pub fn annihilator_dim<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>) -> usize {
    let paths = m.path_matrices(alg);
    let mut rank = 0;
    for i in 0..alg.n() {
        for j in 0..alg.n() {
            let width = m.dim(i) * m.dim(j);
            rank += crate::linalg::span_rank(width, alg.paths_between(i, j).iter().map(|&p| sparse_from_dense(paths[p].entries())));
        }
    }
    alg.dim() - rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::corpus;
    use crate::field::Rational;

    type Q = Rational;

    #[test]
    fn homs_over_a2() {
        let a = BoundQuiverAlgebra::<Q>::new(corpus::linear_a(2)).unwrap();
        let (p1, p2) = (Representation::projective(&a, 0), Representation::projective(&a, 1));
        let (s1, s2) = (Representation::simple(&a, 0), Representation::simple(&a, 1));
        assert_eq!(hom_dim(&a, &p1, &p1), 1);
        assert_eq!(hom_dim(&a, &p1, &s2), 0);
        assert_eq!(hom_dim(&a, &p2, &p1), 1);
        assert_eq!(hom_dim(&a, &p1, &p2), 0);
        assert_eq!(hom_dim(&a, &p1, &s1), 1);
        for f in hom_space(&a, &p2, &p1) {
            assert!(f.is_morphism(&a, &p2, &p1));
        }
        assert_eq!(ext1_dim(&a, &s1, &s2), 1);
        assert_eq!(ext1_dim(&a, &s2, &s1), 0);
        assert_eq!(ext1_dim(&a, &p1, &s2), 0);
        assert!(in_fac(&a, &s1, &p1));
        assert!(!in_fac(&a, &s2, &p1));
        assert!(!in_fac(&a, &p1, &s1));
        assert_eq!(stable_hom_dim(&a, &s2, &s2), 0);
        assert_eq!(stable_hom_dim(&a, &s1, &s1), 1);
        assert_eq!(costable_hom_dim(&a, &s2, &s2), 1);
        assert_eq!(costable_hom_dim(&a, &s1, &s1), 0);
        assert_eq!(annihilator_dim(&a, &Representation::regular(&a)), 0);
        assert_eq!(annihilator_dim(&a, &s1), 2);
    }

    #[test]
    fn ext_over_dual_numbers() {
        let k = BoundQuiverAlgebra::<Q>::new(corpus::truncated_polynomial(2)).unwrap();
        let s = Representation::simple(&k, 0);
        let a = Representation::regular(&k);
        assert_eq!(ext1_dim(&k, &s, &s), 1);
        assert_eq!(ext1_dim(&k, &s, &a), 0);
        assert_eq!(ext1_dim(&k, &a, &s), 0);
        assert_eq!(hom_dim(&k, &a, &a), 2);
        assert_eq!(stable_hom_dim(&k, &s, &s), 1);
        assert_eq!(stable_hom_dim(&k, &a, &a), 0);
    }
}
