//! Enumeration of support τ-tilting pairs working with modules only.
//!
//! Down-mutation of `X + U` at a module summand `X` not in `Fac U` replaces
//! `X` by the cokernel of a left `add U`-approximation of `X`, with the
//! `add U` part of that cokernel discarded. A zero cokernel is replaced by
//! the shifted projective at the unique vertex left uncovered.

use std::cmp::Reverse;
use std::collections::HashMap;

use super::hasse::{HasseEdge, Limits};
use super::PairKey;
use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::modrep::{decompose, hom_space, in_fac, is_isomorphic, minimal_projective_presentation, RepMorphism, Representation, SubRep};

#[derive(Clone, Debug)]
pub enum ModuleSummand<F> {
    Module(Representation<F>),
    Shifted(usize),
}

#[derive(Clone, Debug)]
pub struct ModulePair<F> {
    /// Canonical order: g-vectors decreasing.
    pub summands: Vec<(Vec<i64>, ModuleSummand<F>)>,
}

/// `[P_0] - [P_1]` for a minimal projective presentation.
pub fn module_g_vector<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>) -> Vec<i64> {
    let pres = minimal_projective_presentation(alg, m);
    let mut g = vec![0i64; alg.n()];
    for &v in &pres.p0 {
        g[v] += 1;
    }
    for &v in &pres.p1 {
        g[v] -= 1;
    }
    g
}

impl<F: Field> ModulePair<F> {
    fn new(mut summands: Vec<(Vec<i64>, ModuleSummand<F>)>) -> Self {
        summands.sort_by_key(|s| Reverse(s.0.clone()));
        ModulePair { summands }
    }

    pub fn key(&self) -> PairKey {
        self.summands.iter().map(|s| s.0.clone()).collect()
    }

    pub fn modules(&self) -> Vec<&Representation<F>> {
        self.summands
            .iter()
            .filter_map(|s| match &s.1 {
                ModuleSummand::Module(m) => Some(m),
                ModuleSummand::Shifted(_) => None,
            })
            .collect()
    }

    pub fn projectives(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self
            .summands
            .iter()
            .filter_map(|s| match s.1 {
                ModuleSummand::Shifted(v) => Some(v),
                ModuleSummand::Module(_) => None,
            })
            .collect();
        p.sort_unstable();
        p
    }

    fn is_isomorphic(&self, alg: &BoundQuiverAlgebra<F>, other: &ModulePair<F>, seed: u64) -> bool {
        self.key() == other.key()
            && self.summands.iter().zip(&other.summands).all(|(a, b)| match (&a.1, &b.1) {
                (ModuleSummand::Module(x), ModuleSummand::Module(y)) => is_isomorphic(alg, x, y, seed),
                (ModuleSummand::Shifted(v), ModuleSummand::Shifted(w)) => v == w,
                _ => false,
            })
    }
}

/// Left `add(others)`-approximation `X -> U'` built from full Hom bases.
fn approximation<F: Field>(alg: &BoundQuiverAlgebra<F>, x: &Representation<F>, others: &[&Representation<F>]) -> (Representation<F>, RepMorphism<F>) {
    let mut copies = Vec::new();
    let mut blocks: Vec<Vec<Matrix<F>>> = vec![Vec::new(); alg.n()];
    for u in others {
        for f in hom_space(alg, x, u) {
            copies.push(*u);
            for (v, m) in f.maps.into_iter().enumerate() {
                blocks[v].push(m);
            }
        }
    }
    let maps = blocks.into_iter().enumerate().map(|(v, bs)| bs.iter().fold(Matrix::zeros(x.dim(v), 0), |acc, b| acc.hstack(b))).collect();
    (Representation::direct_sum(alg, &copies), RepMorphism { maps })
}

fn down_mutation<F: Field>(alg: &BoundQuiverAlgebra<F>, t: &ModulePair<F>, i: usize, seed: u64) -> Result<Option<ModulePair<F>>> {
    let ModuleSummand::Module(x) = &t.summands[i].1 else { return Ok(None) };
    let rest: Vec<(Vec<i64>, ModuleSummand<F>)> = t.summands.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, s)| s.clone()).collect();
    let others: Vec<&Representation<F>> = rest
        .iter()
        .filter_map(|s| match &s.1 {
            ModuleSummand::Module(m) => Some(m),
            ModuleSummand::Shifted(_) => None,
        })
        .collect();
    if in_fac(alg, x, &Representation::direct_sum(alg, &others)) {
        return Ok(None);
    }
    let (target, f) = approximation(alg, x, &others);
    let (y, _) = SubRep::image(&f).quotient(alg, &target);
    let fresh: Vec<Representation<F>> = decompose(alg, &y, seed)?.into_iter().filter(|p| !others.iter().any(|u| is_isomorphic(alg, u, p, seed))).collect();
    let new = match fresh.as_slice() {
        [] => {
            let covered = |v: usize| others.iter().any(|u| u.dim(v) > 0) || rest.iter().any(|s| matches!(s.1, ModuleSummand::Shifted(w) if w == v));
            let free: Vec<usize> = (0..alg.n()).filter(|&v| !covered(v)).collect();
            let [v] = free.as_slice() else {
                return Err(Error::InvariantViolation(format!("zero cokernel leaves vertices {free:?} uncovered")));
            };
            let mut g = vec![0; alg.n()];
            g[*v] = -1;
            (g, ModuleSummand::Shifted(*v))
        }
        [y] => (module_g_vector(alg, y), ModuleSummand::Module(y.clone())),
        _ => return Err(Error::InvariantViolation("cokernel has several new summands".into())),
    };
    let mut parts = rest;
    parts.push(new);
    Ok(Some(ModulePair::new(parts)))
}

#[derive(Clone, Debug)]
pub struct ModuleHasse<F> {
    pub nodes: Vec<ModulePair<F>>,
    pub edges: Vec<HasseEdge>,
    pub complete: bool,
}

/// Down-mutation search from `(A, 0)` using module-theoretic mutation.
pub fn enumerate_sttilt_modules<F: Field>(alg: &BoundQuiverAlgebra<F>, limits: Limits, seed: u64) -> Result<ModuleHasse<F>> {
    let top = ModulePair::new(
        (0..alg.n())
            .map(|v| {
                let p = Representation::projective(alg, v);
                (module_g_vector(alg, &p), ModuleSummand::Module(p))
            })
            .collect(),
    );
    let mut nodes = vec![top];
    let mut index: HashMap<PairKey, usize> = HashMap::from([(nodes[0].key(), 0)]);
    let mut edges = Vec::new();
    let mut complete = true;
    let mut head = 0;
    let mut depth = vec![0usize];
    while head < nodes.len() {
        let u = head;
        head += 1;
        if limits.max_depth.is_some_and(|d| depth[u] >= d) {
            complete = false;
            continue;
        }
        for i in 0..nodes[u].summands.len() {
            let Some(pair) = down_mutation(alg, &nodes[u], i, seed)? else { continue };
            let key = pair.key();
            if let Some(&v) = index.get(&key) {
                if !nodes[v].is_isomorphic(alg, &pair, seed) {
                    return Err(Error::InvariantViolation(format!("non-isomorphic pairs share the g-matrix {key:?}")));
                }
                edges.push(HasseEdge { src: u, dst: v, index: i });
                continue;
            }
            if nodes.len() >= limits.max_nodes {
                complete = false;
                continue;
            }
            index.insert(key, nodes.len());
            edges.push(HasseEdge { src: u, dst: nodes.len(), index: i });
            depth.push(depth[u] + 1);
            nodes.push(pair);
        }
    }
    Ok(ModuleHasse { nodes, edges, complete })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::corpus;
    use crate::field::Rational;

    #[test]
    fn module_side_counts() {
        for (spec, count) in [(corpus::linear_a(2), 5), (corpus::linear_a(3), 14), (corpus::truncated_polynomial(2), 2), (corpus::preprojective_a2(), 6)] {
            let alg = BoundQuiverAlgebra::<Rational>::new(spec).unwrap();
            let g = enumerate_sttilt_modules(&alg, Limits::default(), 0).unwrap();
            assert!(g.complete);
            assert_eq!(g.nodes.len(), count);
            assert_eq!(g.edges.len(), count * alg.n() / 2);
        }
    }

    #[test]
    fn g_vectors_of_modules() {
        let alg = BoundQuiverAlgebra::<Rational>::new(corpus::linear_a(2)).unwrap();
        assert_eq!(module_g_vector(&alg, &Representation::simple(&alg, 0)), vec![1, -1]);
        assert_eq!(module_g_vector(&alg, &Representation::projective(&alg, 1)), vec![0, 1]);
    }
}
