use super::{cofree_module, free_module, ProjMap, RepMorphism, Representation, SubRep};
use crate::algebra::BoundQuiverAlgebra;
use crate::field::Field;
use crate::linalg::Matrix;

/// A minimal projective presentation `P_1 --d--> P_0 --> M --> 0`.
#[derive(Clone, Debug)]
pub struct Presentation<F> {
    pub p1: Vec<usize>,
    pub p0: Vec<usize>,
    pub d: ProjMap<F>,
    /// The projective cover `free(p0) -> M`.
    pub cover: RepMorphism<F>,
    /// `K = ker(cover)` as a module.
    pub syzygy: Representation<F>,
    pub syzygy_incl: RepMorphism<F>,
}

/// Top generators: for each vertex, standard vectors spanning a complement
/// of the radical, read off the echelon form of the radical.
fn top_generators<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>) -> Vec<(usize, Vec<F>)> {
    let mut out = Vec::new();
    for v in 0..alg.n() {
        let d = m.dim(v);
        let mut rad = Matrix::zeros(0, d);
        for (a, arrow) in alg.arrows().iter().enumerate() {
            if arrow.target == v {
                rad = rad.vstack(m.map(a));
            }
        }
        let (_, pivots) = rad.rref();
        for c in (0..d).filter(|c| !pivots.contains(c)) {
            let mut e = vec![F::zero(); d];
            e[c] = F::one();
            out.push((v, e));
        }
    }
    out
}

/// Dimension vector of `top M = M / M J`.
pub fn top_dims<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>) -> Vec<usize> {
    let mut dims = vec![0; alg.n()];
    for (v, _) in top_generators(alg, m) {
        dims[v] += 1;
    }
    dims
}

fn cover_map<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, gens: &[(usize, Vec<F>)]) -> RepMorphism<F> {
    let paths = m.path_matrices(alg);
    let maps = (0..alg.n())
        .map(|w| {
            let rows: Vec<Vec<F>> =
                gens.iter().flat_map(|(v, x)| alg.paths_between(*v, w).iter().map(|&p| paths[p].apply_row(x)).collect::<Vec<_>>()).collect();
            Matrix::from_rows(m.dim(w), rows)
        })
        .collect();
    RepMorphism { maps }
}

pub fn minimal_projective_presentation<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>) -> Presentation<F> {
    let gens = top_generators(alg, m);
    let p0: Vec<usize> = gens.iter().map(|g| g.0).collect();
    let free0 = free_module(alg, &p0);
    let cover = cover_map(alg, m, &gens);
    let (syzygy, syzygy_incl) = SubRep::kernel(&cover).restrict(alg, &free0);
    let kgens = top_generators(alg, &syzygy);
    let p1: Vec<usize> = kgens.iter().map(|g| g.0).collect();
    let mut d = ProjMap::zero(alg, &p1, &p0);
    for (t, (w, k)) in kgens.iter().enumerate() {
        let ambient = syzygy_incl.maps[*w].apply_row(k);
        let mut pos = 0;
        for (s, &v) in p0.iter().enumerate() {
            for &p in alg.paths_between(v, *w) {
                d.entries[s][t][p] = ambient[pos].clone();
                pos += 1;
            }
        }
    }
    Presentation { p1, p0, d, cover, syzygy, syzygy_incl }
}

/// The Nakayama functor on a map of projectives: `nu P_v = I_v`, and
/// `x in e_j A e_i` goes to `phi |-> (y |-> phi(y x))`.
pub fn nakayama<F: Field>(alg: &BoundQuiverAlgebra<F>, d: &ProjMap<F>) -> RepMorphism<F> {
    let maps = (0..alg.n())
        .map(|l| {
            let rows: Vec<&[usize]> = d.src.iter().map(|&v| alg.paths_between(l, v)).collect();
            let cols: Vec<&[usize]> = d.tgt.iter().map(|&v| alg.paths_between(l, v)).collect();
            let nr = rows.iter().map(|p| p.len()).sum();
            let nc = cols.iter().map(|p| p.len()).sum();
            let mut m: Matrix<F> = Matrix::zeros(nr, nc);
            let mut r0 = 0;
            for (r, rp) in rows.iter().enumerate() {
                let mut c0 = 0;
                for (c, cp) in cols.iter().enumerate() {
                    let x = &d.entries[c][r];
                    for (qi, &q) in cp.iter().enumerate() {
                        for (t, xt) in x.iter().enumerate() {
                            if xt.is_zero() {
                                continue;
                            }
                            for (p, coef) in alg.mul_basis(q, t) {
                                if let Some(pi) = rp.iter().position(|z| z == p) {
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

/// The Auslander-Reiten translate `tau M = ker(nu P_1 -> nu P_0)`.
pub fn tau<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>) -> Representation<F> {
    let pres = minimal_projective_presentation(alg, m);
    let nu = nakayama(alg, &pres.d);
    let src = cofree_module(alg, &pres.p1);
    SubRep::kernel(&nu).restrict(alg, &src).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::corpus;
    use crate::field::Rational;
    use crate::modrep::{hom_dim, is_isomorphic};

    type Q = Rational;

    #[test]
    fn presentations_over_a2() {
        let a = BoundQuiverAlgebra::<Q>::new(corpus::linear_a(2)).unwrap();
        let s1 = Representation::simple(&a, 0);
        let pres = minimal_projective_presentation(&a, &s1);
        assert_eq!((pres.p1.clone(), pres.p0.clone()), (vec![1], vec![0]));
        assert!(pres.d.to_rep_morphism(&a).is_morphism(&a, &free_module(&a, &[1]), &free_module(&a, &[0])));
        assert_eq!(tau(&a, &s1), Representation::simple(&a, 1));
        assert!(tau(&a, &Representation::projective(&a, 0)).is_zero());
        let p = minimal_projective_presentation(&a, &Representation::projective(&a, 0));
        assert!(p.p1.is_empty());
    }

    #[test]
    fn nakayama_is_a_morphism() {
        let alg = BoundQuiverAlgebra::<Q>::new(corpus::preprojective_a2()).unwrap();
        for v in 0..2 {
            let s = Representation::simple(&alg, v);
            let pres = minimal_projective_presentation(&alg, &s);
            let nu = nakayama(&alg, &pres.d);
            assert!(nu.is_morphism(&alg, &cofree_module(&alg, &pres.p1), &cofree_module(&alg, &pres.p0)));
            assert!(pres.d.to_rep_morphism(&alg).then(&pres.cover).is_zero());
        }
    }

    #[test]
    fn tau_of_simple_over_dual_numbers() {
        let k = BoundQuiverAlgebra::<Q>::new(corpus::truncated_polynomial(2)).unwrap();
        let s = Representation::simple(&k, 0);
        let t = tau(&k, &s);
        assert!(is_isomorphic(&k, &t, &s, 0));
        assert_eq!(hom_dim(&k, &t, &s), 1);
    }
}
