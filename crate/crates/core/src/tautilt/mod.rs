//! τ-rigid and support τ-tilting pairs.
//!
//! A pair is stored through its indecomposable summands, each carried both
//! as a minimal two-term complex and as its `H^0`. Shifted projectives
//! `P_v[1]` make up the projective part. Summands are kept in canonical
//! order: g-vectors in decreasing lexicographic order.

mod hasse;
mod module_side;

pub use hasse::{enumerate_sttilt, is_tau_tilting_finite, Finiteness, HasseEdge, HasseGraph, Limits};
pub use module_side::{enumerate_sttilt_modules, module_g_vector, ModuleHasse, ModulePair, ModuleSummand};

use std::cmp::Reverse;
use std::ops::Deref;

use serde_json::{json, Value};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::modrep::{annihilator_dim, decompose, hom_dim, in_fac, is_isomorphic, tau, Representation};
use crate::twoterm::{
    bongartz_complement, cocone_two_term, complexes_isomorphic, cone_two_term, decompose_complex, hom_homotopy, minimal_left_approximation,
    minimal_right_approximation, minimum_complement, pair_to_complex, TwoTermComplex,
};

/// One indecomposable summand of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSummand<F> {
    pub complex: TwoTermComplex<F>,
    /// `H^0` of the complex; zero for a shifted projective.
    pub module: Representation<F>,
    pub g: Vec<i64>,
}

impl<F: Field> PairSummand<F> {
    /// From an indecomposable complex.
    pub fn from_complex(alg: &BoundQuiverAlgebra<F>, complex: &TwoTermComplex<F>) -> Self {
        let complex = complex.strip_contractible(alg);
        let module = complex.h0(alg);
        let g = complex.g_vector(alg.n());
        PairSummand { complex, module, g }
    }

    /// The vertex `v` when this summand is `P_v[1]`.
    pub fn shifted_projective(&self) -> Option<usize> {
        match (self.complex.p_minus1.as_slice(), self.complex.p_zero.is_empty()) {
            ([v], true) => Some(*v),
            _ => None,
        }
    }

    fn is_isomorphic(&self, alg: &BoundQuiverAlgebra<F>, other: &PairSummand<F>, seed: u64) -> bool {
        self.g == other.g && complexes_isomorphic(alg, &self.complex, &other.complex, seed)
    }
}

/// A basic τ-rigid pair `(M, P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauRigidPair<F> {
    summands: Vec<PairSummand<F>>,
}

/// Canonical key: the summand g-vectors in canonical order.
pub type PairKey = Vec<Vec<i64>>;

impl<F: Field> TauRigidPair<F> {
    /// Sorts summands canonically and drops isomorphic repeats.
    pub fn from_summands(alg: &BoundQuiverAlgebra<F>, parts: Vec<PairSummand<F>>, seed: u64) -> Self {
        let mut summands: Vec<PairSummand<F>> = Vec::new();
        for p in parts {
            if p.complex.is_zero() {
                continue;
            }
            if !summands.iter().any(|q| q.is_isomorphic(alg, &p, seed)) {
                summands.push(p);
            }
        }
        summands.sort_by_key(|s| Reverse(s.g.clone()));
        TauRigidPair { summands }
    }

    pub fn empty() -> Self {
        TauRigidPair { summands: Vec::new() }
    }

    /// Decomposes `M`, checks τ-rigidity and `Hom(P, M) = 0`.
    pub fn from_modules(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, p: &[usize], seed: u64) -> Result<Self> {
        if !is_tau_rigid_pair(alg, m, p) {
            return Err(Error::NotTauRigid);
        }
        let mut parts: Vec<PairSummand<F>> = decompose(alg, m, seed)?.iter().map(|x| PairSummand::from_complex(alg, &pair_to_complex(alg, x, &[]))).collect();
        parts.extend(p.iter().map(|&v| PairSummand::from_complex(alg, &TwoTermComplex::shifted(alg, &[v]))));
        Ok(Self::from_summands(alg, parts, seed))
    }

    pub fn summands(&self) -> &[PairSummand<F>] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn module_summands(&self) -> Vec<&Representation<F>> {
        self.summands.iter().filter(|s| s.shifted_projective().is_none()).map(|s| &s.module).collect()
    }

    /// Vertices of the projective part, sorted.
    pub fn projective_part(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.summands.iter().filter_map(PairSummand::shifted_projective).collect();
        p.sort_unstable();
        p
    }

    pub fn module(&self, alg: &BoundQuiverAlgebra<F>) -> Representation<F> {
        Representation::direct_sum(alg, &self.module_summands())
    }

    pub fn complexes(&self) -> Vec<TwoTermComplex<F>> {
        self.summands.iter().map(|s| s.complex.clone()).collect()
    }

    pub fn complex(&self, alg: &BoundQuiverAlgebra<F>) -> TwoTermComplex<F> {
        TwoTermComplex::direct_sum(alg, &self.summands.iter().map(|s| &s.complex).collect::<Vec<_>>())
    }

    /// One g-vector per summand, in canonical order.
    pub fn g_matrix(&self) -> Vec<Vec<i64>> {
        self.summands.iter().map(|s| s.g.clone()).collect()
    }

    pub fn key(&self) -> PairKey {
        self.g_matrix()
    }

    pub fn is_isomorphic(&self, alg: &BoundQuiverAlgebra<F>, other: &TauRigidPair<F>, seed: u64) -> bool {
        self.len() == other.len() && self.summands.iter().zip(&other.summands).all(|(a, b)| a.is_isomorphic(alg, b, seed))
    }

    pub fn to_json(&self, alg: &BoundQuiverAlgebra<F>) -> Value {
        let mut proj = vec![0usize; alg.n()];
        for v in self.projective_part() {
            proj[v] += 1;
        }
        json!({
            "module_summands": self.module_summands().iter().map(|m| module_json(alg, m)).collect::<Vec<_>>(),
            "projective_part": proj,
            "g_matrix": self.g_matrix(),
        })
    }

    /// Short label such as `[1,1] + P2[1]`: dimension vectors and shifted projectives.
    pub fn label(&self, alg: &BoundQuiverAlgebra<F>) -> String {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| match s.shifted_projective() {
                Some(v) => format!("P{}[1]", alg.vertex_label(v)),
                None => format!("{:?}", s.module.dims()).replace(' ', ""),
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

pub fn module_json<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>) -> Value {
    let maps: serde_json::Map<String, Value> = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let mat = m.map(a);
            let rows: Vec<Vec<String>> = (0..mat.rows()).map(|r| mat.row(r).iter().map(ToString::to_string).collect()).collect();
            (arrow.name.clone(), json!(rows))
        })
        .collect();
    json!({ "dim_vector": m.dims(), "maps": maps })
}

/// Reads `{"dim_vector": [..], "maps": {arrow: [[..], ..]}}`; entries may be
/// numbers or strings. Arrows with an empty matrix may be omitted.
pub fn module_from_json<F: Field>(alg: &BoundQuiverAlgebra<F>, v: &Value) -> Result<Representation<F>> {
    let bad = |what: &str| Error::Syntax(format!("module JSON: {what}"));
    let dims: Vec<usize> = v["dim_vector"]
        .as_array()
        .ok_or_else(|| bad("missing dim_vector"))?
        .iter()
        .map(|d| d.as_u64().map(|d| d as usize).ok_or_else(|| bad("dimensions must be non-negative integers")))
        .collect::<Result<_>>()?;
    if dims.len() != alg.n() {
        return Err(Error::Dimension(format!("dim_vector has {} entries, algebra has {} vertices", dims.len(), alg.n())));
    }
    let maps = alg
        .arrows()
        .iter()
        .map(|arrow| {
            let (r, c) = (dims[arrow.source], dims[arrow.target]);
            let Some(rows) = v["maps"].get(&arrow.name) else {
                return if r * c == 0 { Ok(Matrix::zeros(r, c)) } else { Err(bad(&format!("missing matrix for arrow `{}`", arrow.name))) };
            };
            let rows = rows.as_array().ok_or_else(|| bad("matrices are arrays of rows"))?;
            let rows = rows
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| bad("matrices are arrays of rows"))?
                        .iter()
                        .map(|x| match x {
                            Value::String(s) => F::parse_scalar(s),
                            Value::Number(n) => F::parse_scalar(&n.to_string()),
                            _ => Err(bad("entries are numbers or strings")),
                        })
                        .collect::<Result<Vec<F>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(Error::Dimension(format!("matrix for `{}` should be {r} x {c}", arrow.name)));
            }
            Ok(Matrix::from_rows(c, rows))
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(alg, dims, maps)
}

impl<F: Field> TauRigidPair<F> {
    /// Reads the node schema of the enumeration export; `g_matrix` and `id`
    /// are ignored.
    pub fn from_json(alg: &BoundQuiverAlgebra<F>, v: &Value, seed: u64) -> Result<Self> {
        let modules = match v.get("module_summands") {
            None | Some(Value::Null) => Vec::new(),
            Some(ms) => ms
                .as_array()
                .ok_or_else(|| Error::Syntax("module_summands must be an array".into()))?
                .iter()
                .map(|m| module_from_json(alg, m))
                .collect::<Result<Vec<_>>>()?,
        };
        let mut projectives = Vec::new();
        if let Some(p) = v.get("projective_part").and_then(Value::as_array) {
            if p.len() != alg.n() {
                return Err(Error::Dimension(format!("projective_part has {} entries, algebra has {} vertices", p.len(), alg.n())));
            }
            projectives = (0..alg.n()).filter(|&i| p[i].as_u64().unwrap_or(0) > 0).collect();
        }
        let m = Representation::direct_sum(alg, &modules.iter().collect::<Vec<_>>());
        Self::from_modules(alg, &m, &projectives, seed)
    }
}

/// A τ-rigid pair with `|M| + |P| = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauTiltingPair<F>(TauRigidPair<F>);

impl<F> Deref for TauTiltingPair<F> {
    type Target = TauRigidPair<F>;
    fn deref(&self) -> &TauRigidPair<F> {
        &self.0
    }
}

impl<F: Field> TauTiltingPair<F> {
    pub fn new(alg: &BoundQuiverAlgebra<F>, pair: TauRigidPair<F>) -> Result<Self> {
        if pair.len() != alg.n() {
            return Err(Error::NotTauTilting);
        }
        Ok(TauTiltingPair(pair))
    }

    /// `(A, 0)`, the maximum.
    pub fn top(alg: &BoundQuiverAlgebra<F>) -> Self {
        let parts = (0..alg.n()).map(|v| PairSummand::from_complex(alg, &TwoTermComplex::stalk(alg, &[v]))).collect();
        TauTiltingPair(TauRigidPair::from_summands(alg, parts, 0))
    }

    /// `(0, A)`, the minimum.
    pub fn bottom(alg: &BoundQuiverAlgebra<F>) -> Self {
        let parts = (0..alg.n()).map(|v| PairSummand::from_complex(alg, &TwoTermComplex::shifted(alg, &[v]))).collect();
        TauTiltingPair(TauRigidPair::from_summands(alg, parts, 0))
    }

    pub fn into_inner(self) -> TauRigidPair<F> {
        self.0
    }
}

/// `Hom(M, τM) = 0` and `Hom(P, M) = 0`.
pub fn is_tau_rigid_pair<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, p: &[usize]) -> bool {
    p.iter().all(|&v| m.dim(v) == 0) && hom_dim(alg, m, &tau(alg, m)) == 0
}

fn complete_with<F: Field>(alg: &BoundQuiverAlgebra<F>, pair: &TauRigidPair<F>, complement: TwoTermComplex<F>, seed: u64) -> Result<TauTiltingPair<F>> {
    let mut parts = pair.summands.clone();
    for c in decompose_complex(alg, &complement, seed)? {
        parts.push(PairSummand::from_complex(alg, &c));
    }
    let full = TauRigidPair::from_summands(alg, parts, seed);
    if full.len() != alg.n() {
        return Err(Error::InvariantViolation(format!("completion has {} summands, expected {}", full.len(), alg.n())));
    }
    Ok(TauTiltingPair(full))
}

/// The maximum completion.
pub fn bongartz_completion<F: Field>(alg: &BoundQuiverAlgebra<F>, pair: &TauRigidPair<F>, seed: u64) -> Result<TauTiltingPair<F>> {
    complete_with(alg, pair, bongartz_complement(alg, &pair.complexes()), seed)
}

/// The minimum completion.
pub fn minimal_completion<F: Field>(alg: &BoundQuiverAlgebra<F>, pair: &TauRigidPair<F>, seed: u64) -> Result<TauTiltingPair<F>> {
    complete_with(alg, pair, minimum_complement(alg, &pair.complexes()), seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Direction::Up => "up",
            Direction::Down => "down",
        })
    }
}

/// The replacement for summand `i` obtained from the cone of a minimal left
/// approximation, when that cone is two-term.
pub(crate) fn down_exchange<F: Field>(alg: &BoundQuiverAlgebra<F>, pair: &TauRigidPair<F>, i: usize) -> Option<PairSummand<F>> {
    let x = &pair.summands[i].complex;
    let others: Vec<TwoTermComplex<F>> = pair.summands.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, s)| s.complex.clone()).collect();
    let f = minimal_left_approximation(alg, x, &others);
    let y = cone_two_term(alg, x, &f.object, &f.map)?;
    (!y.is_zero()).then(|| PairSummand::from_complex(alg, &y))
}

/// The replacement for summand `i` obtained from the cocone of a minimal
/// right approximation, when that cocone is two-term.
pub(crate) fn up_exchange<F: Field>(alg: &BoundQuiverAlgebra<F>, pair: &TauRigidPair<F>, i: usize) -> Option<PairSummand<F>> {
    let x = &pair.summands[i].complex;
    let others: Vec<TwoTermComplex<F>> = pair.summands.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, s)| s.complex.clone()).collect();
    let g = minimal_right_approximation(alg, x, &others);
    let y = cocone_two_term(alg, &g.object, x, &g.map)?;
    (!y.is_zero()).then(|| PairSummand::from_complex(alg, &y))
}

pub(crate) fn replace<F: Field>(alg: &BoundQuiverAlgebra<F>, pair: &TauRigidPair<F>, i: usize, new: PairSummand<F>, seed: u64) -> TauRigidPair<F> {
    let mut parts: Vec<PairSummand<F>> = pair.summands.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, s)| s.clone()).collect();
    parts.push(new);
    TauRigidPair::from_summands(alg, parts, seed)
}

/// Exchanges summand `i` (0-based) for the other completion of the
/// remaining summands. The direction compares the two pairs with [`leq`].
pub fn mutate<F: Field>(alg: &BoundQuiverAlgebra<F>, pair: &TauTiltingPair<F>, i: usize, seed: u64) -> Result<(TauTiltingPair<F>, Direction)> {
    if i >= pair.len() {
        return Err(Error::IndexOutOfRange { index: i + 1, count: pair.len() });
    }
    let new = down_exchange(alg, pair, i)
        .or_else(|| up_exchange(alg, pair, i))
        .ok_or_else(|| Error::InvariantViolation("neither exchange triangle is two-term".into()))?;
    let result = TauTiltingPair::new(alg, replace(alg, pair, i, new, seed))?;
    let direction = if leq(alg, &result, pair) { Direction::Down } else { Direction::Up };
    Ok((result, direction))
}

/// `U <= T`: every module summand of `U` lies in `Fac` of `T`'s module.
pub fn leq<F: Field>(alg: &BoundQuiverAlgebra<F>, u: &TauRigidPair<F>, t: &TauRigidPair<F>) -> bool {
    let mt = t.module(alg);
    u.module_summands().iter().all(|x| in_fac(alg, x, &mt))
}

/// The silting order: `U <= T` iff `Hom(T, U[1]) = 0`.
pub fn silting_leq<F: Field>(alg: &BoundQuiverAlgebra<F>, u: &TauRigidPair<F>, t: &TauRigidPair<F>) -> bool {
    t.summands.iter().all(|x| u.summands.iter().all(|y| hom_homotopy(alg, &x.complex, &y.complex, 1).dim == 0))
}

/// Faithful and τ-tilting as a module.
pub fn is_classical_tilting<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, seed: u64) -> Result<bool> {
    if !is_tau_rigid_pair(alg, m, &[]) || annihilator_dim(alg, m) != 0 {
        return Ok(false);
    }
    let parts = decompose(alg, m, seed)?;
    let mut distinct: Vec<&Representation<F>> = Vec::new();
    for p in &parts {
        if !distinct.iter().any(|q| is_isomorphic(alg, q, p, seed)) {
            distinct.push(p);
        }
    }
    Ok(distinct.len() == alg.n())
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

    fn pair(alg: &BoundQuiverAlgebra<Q>, m: &[&Representation<Q>], p: &[usize]) -> TauRigidPair<Q> {
        TauRigidPair::from_modules(alg, &Representation::direct_sum(alg, m), p, 0).unwrap()
    }

    #[test]
    fn rigidity() {
        let a = a2();
        assert!(is_tau_rigid_pair(&a, &Representation::simple(&a, 0), &[]));
        assert!(is_tau_rigid_pair(&a, &Representation::zero(&a), &[0, 1]));
        assert!(!is_tau_rigid_pair(&a, &Representation::simple(&a, 0), &[0]));
        let k = BoundQuiverAlgebra::<Q>::new(corpus::truncated_polynomial(2)).unwrap();
        assert!(!is_tau_rigid_pair(&k, &Representation::simple(&k, 0), &[]));
    }

    #[test]
    fn completions_over_a2() {
        let a = a2();
        let (p1, s1) = (Representation::projective(&a, 0), Representation::simple(&a, 0));
        let top = TauTiltingPair::top(&a);
        let bottom = TauTiltingPair::bottom(&a);
        assert_eq!(bongartz_completion(&a, &TauRigidPair::empty(), 0).unwrap(), top);
        assert_eq!(minimal_completion(&a, &TauRigidPair::empty(), 0).unwrap(), bottom);
        let s = pair(&a, &[&s1], &[]);
        let b = bongartz_completion(&a, &s, 0).unwrap();
        assert!(b.is_isomorphic(&a, &pair(&a, &[&p1, &s1], &[]), 0));
        let m = minimal_completion(&a, &s, 0).unwrap();
        assert!(m.is_isomorphic(&a, &pair(&a, &[&s1], &[1]), 0));
        let p2 = pair(&a, &[&Representation::projective(&a, 1)], &[]);
        assert_eq!(bongartz_completion(&a, &p2, 0).unwrap(), top);
        assert_eq!(bongartz_completion(&a, &top, 0).unwrap(), top);
    }

    #[test]
    fn mutations_over_a2() {
        let a = a2();
        let top = TauTiltingPair::top(&a);
        assert_eq!(top.g_matrix(), vec![vec![1, 0], vec![0, 1]]);
        let (m, dir) = mutate(&a, &top, 1, 0).unwrap();
        assert_eq!(dir, Direction::Down);
        let (p1, s1) = (Representation::projective(&a, 0), Representation::simple(&a, 0));
        assert!(m.is_isomorphic(&a, &pair(&a, &[&p1, &s1], &[]), 0));
        let (m2, dir) = mutate(&a, &top, 0, 0).unwrap();
        assert_eq!(dir, Direction::Down);
        assert!(m2.is_isomorphic(&a, &pair(&a, &[&Representation::projective(&a, 1)], &[0]), 0));
        for i in 0..2 {
            let (once, d1) = mutate(&a, &m, i, 0).unwrap();
            let back = once.key().iter().position(|g| !m.key().contains(g)).unwrap();
            let (twice, d2) = mutate(&a, &once, back, 0).unwrap();
            assert!(twice.is_isomorphic(&a, &m, 0));
            assert_ne!(d1, d2);
        }
        assert!(matches!(mutate(&a, &top, 2, 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn order_over_a2() {
        let a = a2();
        let s1p2 = pair(&a, &[&Representation::simple(&a, 0)], &[1]);
        let p2p1 = pair(&a, &[&Representation::projective(&a, 1)], &[0]);
        assert!(!leq(&a, &s1p2, &p2p1));
        assert!(!leq(&a, &p2p1, &s1p2));
        assert!(!silting_leq(&a, &s1p2, &p2p1));
        let top = TauTiltingPair::top(&a);
        let bottom = TauTiltingPair::bottom(&a);
        assert!(leq(&a, &s1p2, &top) && leq(&a, &bottom, &s1p2));
        assert!(silting_leq(&a, &s1p2, &top) && silting_leq(&a, &bottom, &s1p2));
    }

    #[test]
    fn json_roundtrip() {
        let a = a2();
        let g = enumerate_sttilt(&a, Limits::default(), 0).unwrap();
        for node in &g.nodes {
            let back = TauRigidPair::from_json(&a, &node.to_json(&a), 0).unwrap();
            assert!(back.is_isomorphic(&a, node, 0));
        }
        let bad = serde_json::json!({ "module_summands": [{ "dim_vector": [1, 1] }], "projective_part": [0, 0] });
        assert!(TauRigidPair::from_json(&a, &bad, 0).is_err());
    }

    #[test]
    fn classical_tilting() {
        let a = a2();
        let (p1, s1) = (Representation::projective(&a, 0), Representation::simple(&a, 0));
        assert!(is_classical_tilting(&a, &Representation::regular(&a), 0).unwrap());
        assert!(is_classical_tilting(&a, &Representation::direct_sum(&a, &[&p1, &s1]), 0).unwrap());
        assert!(!is_classical_tilting(&a, &s1, 0).unwrap());
    }
}
