//! Two-term complexes of projectives `P^{-1} --d--> P^0` up to homotopy.
//!
//! Summands are stored as vertex lists sorted by vertex, so `P_1 + P_1 + P_3`
//! is `[0, 0, 2]`. The differential is a [`ProjMap`] whose `(c, r)` entry
//! lies in `e_{p_zero[c]} A e_{p_minus1[r]}`.

mod cone;
mod homotopy;

pub use cone::{
    bongartz_complement, cocone_two_term, cone_two_term, left_approximation, minimal_left_approximation, minimal_right_approximation, minimum_complement,
    right_approximation, Approximation, ThreeTerm,
};
pub use homotopy::{hom_homotopy, is_presilting, is_two_term_silting, ChainMap, HomK};

use serde_json::{json, Value};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::Result;
use crate::field::Field;
use crate::modrep::{decompose, free_module, minimal_projective_presentation, ProjMap, Representation, SubRep};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoTermComplex<F> {
    pub p_minus1: Vec<usize>,
    pub p_zero: Vec<usize>,
    pub d: ProjMap<F>,
}

fn sorted_order(vs: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..vs.len()).collect();
    idx.sort_by_key(|&i| vs[i]);
    idx
}

/// Whether an entry between two copies of `P_v` is invertible.
pub(crate) fn is_unit(x: &[impl Field], v: usize) -> bool {
    !x[v].is_zero()
}

/// Removes row `c` and column `r` of `d` by Gaussian elimination on the
/// invertible entry `d[c][r]`.
pub(crate) fn eliminate<F: Field>(alg: &BoundQuiverAlgebra<F>, d: &mut ProjMap<F>, c: usize, r: usize) {
    let v = d.tgt[c];
    let uinv = alg.local_inverse(&d.entries[c][r], v).expect("unit pivot");
    // row c of d, premultiplied by u^{-1}
    let pivot_row: Vec<Option<Vec<F>>> =
        d.entries[c].iter().enumerate().map(|(j, x)| (j != r && x.iter().any(|a| !a.is_zero())).then(|| alg.multiply(&uinv, x))).collect();
    for i in 0..d.tgt.len() {
        if i == c || d.entries[i][r].iter().all(F::is_zero) {
            continue;
        }
        let left = d.entries[i][r].clone();
        for (j, row) in pivot_row.iter().enumerate() {
            if let Some(row) = row {
                let prod = alg.multiply(&left, row);
                for (o, p) in d.entries[i][j].iter_mut().zip(prod) {
                    *o = o.sub(&p);
                }
            }
        }
    }
    d.remove_tgt(c);
    d.remove_src(r);
}

pub(crate) fn find_unit<F: Field>(d: &ProjMap<F>) -> Option<(usize, usize)> {
    for (c, &w) in d.tgt.iter().enumerate() {
        for (r, &v) in d.src.iter().enumerate() {
            if v == w && is_unit(&d.entries[c][r], v) {
                return Some((c, r));
            }
        }
    }
    None
}

impl<F: Field> TwoTermComplex<F> {
    /// Builds a complex and sorts its summands by vertex.
    pub fn new(d: ProjMap<F>) -> Self {
        let rs = sorted_order(&d.src);
        let cs = sorted_order(&d.tgt);
        let d = d.select_src(&rs).select_tgt(&cs);
        TwoTermComplex { p_minus1: d.src.clone(), p_zero: d.tgt.clone(), d }
    }

    pub fn zero(alg: &BoundQuiverAlgebra<F>) -> Self {
        Self::new(ProjMap::zero(alg, &[], &[]))
    }

    /// `0 -> P_v` for each listed vertex.
    pub fn stalk(alg: &BoundQuiverAlgebra<F>, vertices: &[usize]) -> Self {
        Self::new(ProjMap::zero(alg, &[], vertices))
    }

    /// `P_v -> 0` for each listed vertex.
    pub fn shifted(alg: &BoundQuiverAlgebra<F>, vertices: &[usize]) -> Self {
        Self::new(ProjMap::zero(alg, vertices, &[]))
    }

    /// The stalk complex of the regular module.
    pub fn regular(alg: &BoundQuiverAlgebra<F>) -> Self {
        Self::stalk(alg, &(0..alg.n()).collect::<Vec<_>>())
    }

    pub fn is_zero(&self) -> bool {
        self.p_minus1.is_empty() && self.p_zero.is_empty()
    }

    pub fn summand_count(&self) -> usize {
        self.p_minus1.len() + self.p_zero.len()
    }

    pub fn direct_sum(alg: &BoundQuiverAlgebra<F>, parts: &[&TwoTermComplex<F>]) -> Self {
        let mut d = ProjMap::zero(alg, &[], &[]);
        for p in parts {
            d = ProjMap::direct_sum(alg, &d, &p.d);
        }
        Self::new(d)
    }

    /// Removes contractible summands `P_v --iso--> P_v`.
    pub fn strip_contractible(&self, alg: &BoundQuiverAlgebra<F>) -> Self {
        let mut d = self.d.clone();
        while let Some((c, r)) = find_unit(&d) {
            eliminate(alg, &mut d, c, r);
        }
        TwoTermComplex { p_minus1: d.src.clone(), p_zero: d.tgt.clone(), d }
    }

    pub fn is_stripped(&self) -> bool {
        find_unit(&self.d).is_none()
    }

    /// `[P^0] - [P^{-1}]` in the basis of indecomposable projectives.
    pub fn g_vector(&self, n: usize) -> Vec<i64> {
        let mut g = vec![0i64; n];
        for &v in &self.p_zero {
            g[v] += 1;
        }
        for &v in &self.p_minus1 {
            g[v] -= 1;
        }
        g
    }

    /// `H^0 = coker d` together with the projection from `P^0`.
    pub fn h0(&self, alg: &BoundQuiverAlgebra<F>) -> Representation<F> {
        let p0 = free_module(alg, &self.p_zero);
        let image = SubRep::image(&self.d.to_rep_morphism(alg));
        image.quotient(alg, &p0).0
    }

    pub fn to_json(&self, alg: &BoundQuiverAlgebra<F>) -> Value {
        let mult = |vs: &[usize]| {
            let mut m = vec![0usize; alg.n()];
            for &v in vs {
                m[v] += 1;
            }
            m
        };
        let d: Vec<Vec<Vec<String>>> = self.d.entries.iter().map(|row| row.iter().map(|x| x.iter().map(ToString::to_string).collect()).collect()).collect();
        json!({ "p_minus1": mult(&self.p_minus1), "p_zero": mult(&self.p_zero), "d": d })
    }
}

fn multiset_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut rest = a.to_vec();
    for v in b {
        if let Some(pos) = rest.iter().position(|x| x == v) {
            rest.remove(pos);
        }
    }
    rest
}

/// `P_1 -> P_0` from the minimal presentation of `M`, plus `P` in degree -1.
pub fn pair_to_complex<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, p: &[usize]) -> TwoTermComplex<F> {
    let pres = minimal_projective_presentation(alg, m);
    let shifted = ProjMap::zero(alg, p, &[]);
    TwoTermComplex::new(ProjMap::direct_sum(alg, &pres.d, &shifted))
}

/// `(H^0 T, Q)` where `Q[1]` is the maximal shifted-projective summand.
pub fn complex_to_pair<F: Field>(alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>) -> (Representation<F>, Vec<usize>) {
    let t = t.strip_contractible(alg);
    let m = t.h0(alg);
    let pres = minimal_projective_presentation(alg, &m);
    (m, multiset_difference(&t.p_minus1, &pres.p1))
}

/// Indecomposable summands in the homotopy category: presentations of the
/// summands of `H^0` and the remaining shifted projectives.
pub fn decompose_complex<F: Field>(alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>, seed: u64) -> Result<Vec<TwoTermComplex<F>>> {
    let (m, q) = complex_to_pair(alg, t);
    let mut out = Vec::new();
    for part in decompose(alg, &m, seed)? {
        out.push(pair_to_complex(alg, &part, &[]));
    }
    for v in q {
        out.push(TwoTermComplex::shifted(alg, &[v]));
    }
    Ok(out)
}

/// Whether two complexes are isomorphic in the homotopy category. Both are
/// stripped first; for minimal complexes a chain map is a homotopy
/// equivalence exactly when both components are invertible, which is read
/// off modulo the radical.
pub fn complexes_isomorphic<F: Field>(alg: &BoundQuiverAlgebra<F>, t: &TwoTermComplex<F>, u: &TwoTermComplex<F>, seed: u64) -> bool {
    use rand::{Rng, SeedableRng};
    let (t, u) = (t.strip_contractible(alg), u.strip_contractible(alg));
    if t.p_minus1 != u.p_minus1 || t.p_zero != u.p_zero {
        return false;
    }
    if t.is_zero() || t == u {
        return true;
    }
    let homs = hom_homotopy(alg, &t, &u, 0).chain_maps;
    let invertible = |f: &ChainMap<F>| is_invertible_map(&f.minus1) && is_invertible_map(&f.zero);
    if homs.iter().any(invertible) {
        return true;
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..48).any(|_| {
        let mut acc: Option<ChainMap<F>> = None;
        for h in &homs {
            let c = F::from_i64(rng.gen_range(-1000..=1000));
            let term = h.scale(&c);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        acc.is_some_and(|f| invertible(&f))
    })
}

/// Invertibility of a map between sums of projectives, tested on the
/// idempotent coefficients (Nakayama's lemma).
pub fn is_invertible_map<F: Field>(f: &ProjMap<F>) -> bool {
    if sorted_multiset(&f.src) != sorted_multiset(&f.tgt) {
        return false;
    }
    let mut verts: Vec<usize> = f.src.clone();
    verts.sort_unstable();
    verts.dedup();
    verts.iter().all(|&v| {
        let rows: Vec<usize> = (0..f.tgt.len()).filter(|&c| f.tgt[c] == v).collect();
        let cols: Vec<usize> = (0..f.src.len()).filter(|&r| f.src[r] == v).collect();
        let m = crate::linalg::Matrix::from_fn(rows.len(), cols.len(), |i, j| f.entries[rows[i]][cols[j]][v].clone());
        m.is_invertible()
    })
}

fn sorted_multiset(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::corpus;
    use crate::field::Rational;
    use crate::modrep::HomLayout;

    type Q = Rational;

    fn a2() -> BoundQuiverAlgebra<Q> {
        BoundQuiverAlgebra::new(corpus::linear_a(2)).unwrap()
    }

    #[test]
    fn presentation_of_s1() {
        let a = a2();
        let t = pair_to_complex(&a, &Representation::simple(&a, 0), &[]);
        assert_eq!((t.p_minus1.clone(), t.p_zero.clone()), (vec![1], vec![0]));
        assert_eq!(t.g_vector(2), vec![1, -1]);
        let (m, p) = complex_to_pair(&a, &t);
        assert_eq!(m, Representation::simple(&a, 0));
        assert!(p.is_empty());
        let p2 = pair_to_complex(&a, &Representation::zero(&a), &[1]);
        assert_eq!(p2, TwoTermComplex::shifted(&a, &[1]));
        assert_eq!(p2.g_vector(2), vec![0, -1]);
        let (m, p) = complex_to_pair(&a, &p2);
        assert!(m.is_zero());
        assert_eq!(p, vec![1]);
        let r = pair_to_complex(&a, &Representation::regular(&a), &[]);
        assert_eq!(r, TwoTermComplex::regular(&a));
    }

    #[test]
    fn contractible_summands_are_removed() {
        let a = a2();
        let s1 = pair_to_complex(&a, &Representation::simple(&a, 0), &[]);
        let id = TwoTermComplex::new(ProjMap::identity(&a, &[1]));
        let sum = TwoTermComplex::direct_sum(&a, &[&s1, &id]);
        assert_eq!(sum.summand_count(), 4);
        let stripped = sum.strip_contractible(&a);
        assert_eq!(stripped, s1);
        let parts = decompose_complex(&a, &sum, 0).unwrap();
        assert_eq!(parts, vec![s1]);
    }

    #[test]
    fn twisted_contractible_is_removed() {
        // P2 --(e2, a)--> P2 + P1 strips to 0 -> P1
        let a = a2();
        let lay = HomLayout::new(&a, &[1], &[1, 0]);
        let mut v = vec![Q::zero(); lay.dim()];
        v[0] = Q::one();
        v[1] = Q::from_i64(3);
        let t = TwoTermComplex::new(lay.unflatten(&a, &v));
        assert_eq!(t.strip_contractible(&a), TwoTermComplex::stalk(&a, &[0]));
    }

    #[test]
    fn regular_decomposes_into_stalks() {
        let a = a2();
        let parts = decompose_complex(&a, &TwoTermComplex::regular(&a), 0).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.contains(&TwoTermComplex::stalk(&a, &[0])));
        assert!(parts.contains(&TwoTermComplex::stalk(&a, &[1])));
    }

    #[test]
    fn json_shape() {
        let a = a2();
        let t = pair_to_complex(&a, &Representation::simple(&a, 0), &[]);
        let j = t.to_json(&a);
        assert_eq!(j["p_minus1"], json!([0, 1]));
        assert_eq!(j["p_zero"], json!([1, 0]));
        assert_eq!(j["d"], json!([[["0", "0", "1"]]]));
    }

    #[test]
    fn isomorphism_of_complexes() {
        let a = a2();
        let lay = HomLayout::new(&a, &[1], &[0]);
        let t = TwoTermComplex::new(lay.unflatten(&a, &[Q::from_i64(1)]));
        let u = TwoTermComplex::new(lay.unflatten(&a, &[Q::from_i64(-5)]));
        assert!(complexes_isomorphic(&a, &t, &u, 0));
        assert!(!complexes_isomorphic(&a, &t, &TwoTermComplex::new(lay.unflatten(&a, &[Q::zero()])), 0));
    }
}
