use super::homotopy::{null_homotopic, ChainCoords};
use super::{eliminate, find_unit, hom_homotopy, ChainMap, TwoTermComplex};
use crate::algebra::BoundQuiverAlgebra;
use crate::field::Field;
use crate::linalg::{Echelon, SparseRow};
use crate::modrep::ProjMap;

/// A complex `C^{-2} --a--> C^{-1} --b--> C^0`, as produced by cones of
/// maps between two-term complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTerm<F> {
    pub a: ProjMap<F>,
    pub b: ProjMap<F>,
}

impl<F: Field> ThreeTerm<F> {
    /// Mapping cone of `f: X -> Y`.
    pub fn cone(x: &TwoTermComplex<F>, y: &TwoTermComplex<F>, f: &ChainMap<F>) -> Self {
        ThreeTerm { a: x.d.neg().vstack(&f.minus1), b: f.zero.hstack(&y.d) }
    }

    /// Removes contractible summands in either position.
    pub fn strip(&self, alg: &BoundQuiverAlgebra<F>) -> Self {
        let (mut a, mut b) = (self.a.clone(), self.b.clone());
        loop {
            if let Some((c, r)) = find_unit(&a) {
                eliminate(alg, &mut a, c, r);
                b.remove_src(c);
            } else if let Some((c, r)) = find_unit(&b) {
                eliminate(alg, &mut b, c, r);
                a.remove_tgt(r);
            } else {
                return ThreeTerm { a, b };
            }
        }
    }

    /// The complex `C^{-1} -> C^0` when `C^{-2}` vanishes.
    pub fn lower(&self) -> Option<TwoTermComplex<F>> {
        self.a.src.is_empty().then(|| TwoTermComplex::new(self.b.clone()))
    }

    /// The complex `C^{-2} -> C^{-1}`, shifted into degrees -1 and 0, when
    /// `C^0` vanishes.
    pub fn upper(&self) -> Option<TwoTermComplex<F>> {
        self.b.tgt.is_empty().then(|| TwoTermComplex::new(self.a.clone()))
    }
}

/// A map between `X` and a direct sum of the given summands, one copy per
/// component. `parts[k]` indexes the summand list.
#[derive(Clone, Debug)]
pub struct Approximation<F> {
    pub parts: Vec<usize>,
    /// The sum of the chosen summands, in component order (not sorted).
    pub object: TwoTermComplex<F>,
    pub map: ChainMap<F>,
}

fn sum_unsorted<F: Field>(alg: &BoundQuiverAlgebra<F>, parts: &[&TwoTermComplex<F>]) -> TwoTermComplex<F> {
    let mut d = ProjMap::zero(alg, &[], &[]);
    for p in parts {
        d = ProjMap::direct_sum(alg, &d, &p.d);
    }
    TwoTermComplex { p_minus1: d.src.clone(), p_zero: d.tgt.clone(), d }
}

fn assemble_left<F: Field>(
    alg: &BoundQuiverAlgebra<F>,
    x: &TwoTermComplex<F>,
    summands: &[TwoTermComplex<F>],
    comps: &[(usize, ChainMap<F>)],
) -> Approximation<F> {
    let parts: Vec<usize> = comps.iter().map(|c| c.0).collect();
    let object = sum_unsorted(alg, &parts.iter().map(|&j| &summands[j]).collect::<Vec<_>>());
    let mut map = ChainMap { minus1: ProjMap::zero(alg, &x.p_minus1, &[]), zero: ProjMap::zero(alg, &x.p_zero, &[]) };
    for (_, f) in comps {
        map = ChainMap { minus1: map.minus1.vstack(&f.minus1), zero: map.zero.vstack(&f.zero) };
    }
    Approximation { parts, object, map }
}

fn assemble_right<F: Field>(
    alg: &BoundQuiverAlgebra<F>,
    x: &TwoTermComplex<F>,
    summands: &[TwoTermComplex<F>],
    comps: &[(usize, ChainMap<F>)],
) -> Approximation<F> {
    let parts: Vec<usize> = comps.iter().map(|c| c.0).collect();
    let object = sum_unsorted(alg, &parts.iter().map(|&j| &summands[j]).collect::<Vec<_>>());
    let mut map = ChainMap { minus1: ProjMap::zero(alg, &[], &x.p_minus1), zero: ProjMap::zero(alg, &[], &x.p_zero) };
    for (_, g) in comps {
        map = ChainMap { minus1: map.minus1.hstack(&g.minus1), zero: map.zero.hstack(&g.zero) };
    }
    Approximation { parts, object, map }
}

fn left_components<F: Field>(alg: &BoundQuiverAlgebra<F>, x: &TwoTermComplex<F>, summands: &[TwoTermComplex<F>]) -> Vec<(usize, ChainMap<F>)> {
    summands.iter().enumerate().flat_map(|(j, u)| hom_homotopy(alg, x, u, 0).chain_maps.into_iter().map(move |f| (j, f))).collect()
}

fn right_components<F: Field>(alg: &BoundQuiverAlgebra<F>, x: &TwoTermComplex<F>, summands: &[TwoTermComplex<F>]) -> Vec<(usize, ChainMap<F>)> {
    summands.iter().enumerate().flat_map(|(j, u)| hom_homotopy(alg, u, x, 0).chain_maps.into_iter().map(move |g| (j, g))).collect()
}

/// Left `add(summands)`-approximation using a full basis of each Hom space.
pub fn left_approximation<F: Field>(alg: &BoundQuiverAlgebra<F>, x: &TwoTermComplex<F>, summands: &[TwoTermComplex<F>]) -> Approximation<F> {
    assemble_left(alg, x, summands, &left_components(alg, x, summands))
}

pub fn right_approximation<F: Field>(alg: &BoundQuiverAlgebra<F>, x: &TwoTermComplex<F>, summands: &[TwoTermComplex<F>]) -> Approximation<F> {
    assemble_right(alg, x, summands, &right_components(alg, x, summands))
}

/// Drops components that are combinations of the others composed with maps
/// between summands, until none is. `compose(t, r)` returns the component
/// `t` transported along `r: summands[parts[t]] <-> summands[target]`.
fn minimize<F: Field>(
    summands: &[TwoTermComplex<F>],
    mut comps: Vec<(usize, ChainMap<F>)>,
    coords: impl Fn(&TwoTermComplex<F>) -> (ChainCoords, Vec<SparseRow<F>>),
    transport: impl Fn(&ChainMap<F>, usize, usize) -> Vec<ChainMap<F>>,
) -> Vec<(usize, ChainMap<F>)> {
    let mut s = comps.len();
    while s > 0 {
        s -= 1;
        let js = comps[s].0;
        let (cc, nulls) = coords(&summands[js]);
        let mut ech = Echelon::new(cc.width());
        for h in nulls {
            ech.insert(h);
        }
        for (t, (jt, ft)) in comps.iter().enumerate() {
            if t != s {
                for m in transport(ft, *jt, js) {
                    ech.insert(cc.flatten(&m));
                }
            }
        }
        if ech.contains(cc.flatten(&comps[s].1)) {
            comps.remove(s);
        }
    }
    comps
}

/// Left approximation with no redundant component; its target is as small
/// as possible.
pub fn minimal_left_approximation<F: Field>(alg: &BoundQuiverAlgebra<F>, x: &TwoTermComplex<F>, summands: &[TwoTermComplex<F>]) -> Approximation<F> {
    let comps = left_components(alg, x, summands);
    let maps_between: Vec<Vec<Vec<ChainMap<F>>>> = pairwise_homs(alg, summands, &comps);
    let comps = minimize(
        summands,
        comps,
        |u| {
            let cc = ChainCoords::new(alg, x, u);
            let nulls = null_homotopic(alg, x, u, &cc);
            (cc, nulls)
        },
        |f, jt, js| maps_between[jt][js].iter().map(|r| f.then(alg, r)).collect(),
    );
    assemble_left(alg, x, summands, &comps)
}

pub fn minimal_right_approximation<F: Field>(alg: &BoundQuiverAlgebra<F>, x: &TwoTermComplex<F>, summands: &[TwoTermComplex<F>]) -> Approximation<F> {
    let comps = right_components(alg, x, summands);
    let maps_between: Vec<Vec<Vec<ChainMap<F>>>> = pairwise_homs(alg, summands, &comps);
    let comps = minimize(
        summands,
        comps,
        |u| {
            let cc = ChainCoords::new(alg, u, x);
            let nulls = null_homotopic(alg, u, x, &cc);
            (cc, nulls)
        },
        |g, jt, js| maps_between[js][jt].iter().map(|r| r.then(alg, g)).collect(),
    );
    assemble_right(alg, x, summands, &comps)
}

/// `Hom(U_i, U_j)` representatives for the summands that occur in `comps`.
fn pairwise_homs<F: Field>(alg: &BoundQuiverAlgebra<F>, summands: &[TwoTermComplex<F>], comps: &[(usize, ChainMap<F>)]) -> Vec<Vec<Vec<ChainMap<F>>>> {
    let used: Vec<bool> = (0..summands.len()).map(|j| comps.iter().any(|c| c.0 == j)).collect();
    (0..summands.len())
        .map(|i| {
            (0..summands.len()).map(|j| if used[i] && used[j] { hom_homotopy(alg, &summands[i], &summands[j], 0).chain_maps } else { Vec::new() }).collect()
        })
        .collect()
}

/// Stripped cone of `f: X -> Y` when it is two-term.
pub fn cone_two_term<F: Field>(alg: &BoundQuiverAlgebra<F>, x: &TwoTermComplex<F>, y: &TwoTermComplex<F>, f: &ChainMap<F>) -> Option<TwoTermComplex<F>> {
    ThreeTerm::cone(x, y, f).strip(alg).lower()
}

/// Stripped cocone of `g: Y -> X` when it is two-term.
pub fn cocone_two_term<F: Field>(alg: &BoundQuiverAlgebra<F>, y: &TwoTermComplex<F>, x: &TwoTermComplex<F>, g: &ChainMap<F>) -> Option<TwoTermComplex<F>> {
    ThreeTerm::cone(y, x, g).strip(alg).upper()
}

/// The complement giving the maximum completion of a presilting object:
/// the cocone of a minimal right approximation of `A[1]`.
pub fn bongartz_complement<F: Field>(alg: &BoundQuiverAlgebra<F>, summands: &[TwoTermComplex<F>]) -> TwoTermComplex<F> {
    let a1 = TwoTermComplex::shifted(alg, &(0..alg.n()).collect::<Vec<_>>());
    let g = minimal_right_approximation(alg, &a1, summands);
    cocone_two_term(alg, &g.object, &a1, &g.map).expect("cocone into a shifted complex is two-term")
}

/// The complement giving the minimum completion: the cone of a minimal left
/// approximation of `A`.
pub fn minimum_complement<F: Field>(alg: &BoundQuiverAlgebra<F>, summands: &[TwoTermComplex<F>]) -> TwoTermComplex<F> {
    let a = TwoTermComplex::regular(alg);
    let f = minimal_left_approximation(alg, &a, summands);
    cone_two_term(alg, &a, &f.object, &f.map).expect("cone out of a stalk complex is two-term")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::corpus;
    use crate::field::Rational;
    use crate::modrep::Representation;
    use crate::twoterm::{decompose_complex, pair_to_complex};

    type Q = Rational;

    fn a2() -> BoundQuiverAlgebra<Q> {
        BoundQuiverAlgebra::new(corpus::linear_a(2)).unwrap()
    }

    #[test]
    fn approximations_between_stalks() {
        let a = a2();
        let (p1, p2) = (TwoTermComplex::stalk(&a, &[0]), TwoTermComplex::stalk(&a, &[1]));
        let f = minimal_left_approximation(&a, &p2, std::slice::from_ref(&p1));
        assert_eq!(f.parts, vec![0]);
        assert!(!f.map.zero.is_zero());
        let g = minimal_left_approximation(&a, &p1, std::slice::from_ref(&p2));
        assert!(g.parts.is_empty());
        let id = minimal_left_approximation(&a, &p1, &[p1.clone(), p1.clone()]);
        assert_eq!(id.parts.len(), 1);
        // the cone of P2 -> P1 is the complex of S1
        let c = cone_two_term(&a, &p2, &f.object, &f.map).unwrap();
        assert_eq!(c, pair_to_complex(&a, &Representation::simple(&a, 0), &[]));
    }

    #[test]
    fn cones_of_trivial_maps() {
        let a = a2();
        let reg = TwoTermComplex::regular(&a);
        let zero = TwoTermComplex::zero(&a);
        let f = ChainMap::zero_map(&a, &reg, &zero);
        assert_eq!(cone_two_term(&a, &reg, &zero, &f).unwrap(), TwoTermComplex::shifted(&a, &[0, 1]));
        let id = ChainMap::identity(&a, &reg);
        assert!(cone_two_term(&a, &reg, &reg, &id).unwrap().is_zero());
    }

    #[test]
    fn completions_of_s1() {
        let a = a2();
        let s1 = pair_to_complex(&a, &Representation::simple(&a, 0), &[]);
        let b = bongartz_complement(&a, std::slice::from_ref(&s1));
        let parts = decompose_complex(&a, &b, 0).unwrap();
        assert!(parts.contains(&TwoTermComplex::stalk(&a, &[0])));
        let m = minimum_complement(&a, std::slice::from_ref(&s1));
        let parts = decompose_complex(&a, &m, 0).unwrap();
        assert!(parts.contains(&TwoTermComplex::shifted(&a, &[1])));
        assert_eq!(bongartz_complement(&a, &[]), TwoTermComplex::regular(&a));
        assert_eq!(minimum_complement(&a, &[]), TwoTermComplex::shifted(&a, &[0, 1]));
    }
}
