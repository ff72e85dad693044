//! Breadth-first enumeration of support τ-tilting pairs.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{down_exchange, replace, PairKey, TauTiltingPair};
use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_nodes: usize,
    /// Levels of the search below `(A, 0)`; `None` is unbounded.
    pub max_depth: Option<usize>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_nodes: 1_000_000, max_depth: None }
    }
}

impl Limits {
    pub fn nodes(max_nodes: usize) -> Self {
        Limits { max_nodes, max_depth: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HasseEdge {
    pub src: usize,
    pub dst: usize,
    /// The exchanged summand of `src`, 0-based in canonical order.
    pub index: usize,
}

/// Arrows point from `T` to its down-mutations.
#[derive(Clone, Debug)]
pub struct HasseGraph<F> {
    pub nodes: Vec<TauTiltingPair<F>>,
    pub edges: Vec<HasseEdge>,
    /// False when a limit cut the search short.
    pub complete: bool,
}

impl<F: Field> HasseGraph<F> {
    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.src == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.dst == v).count()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&v| self.in_degree(v) == 0).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&v| self.out_degree(v) == 0).collect()
    }

    /// The unique source, `(A, 0)` in a complete graph.
    pub fn maximum(&self) -> Option<usize> {
        match self.sources().as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    /// The unique sink, `(0, A)` in a complete graph.
    pub fn minimum(&self) -> Option<usize> {
        match self.sinks().as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    pub fn find(&self, key: &PairKey) -> Option<usize> {
        self.nodes.iter().position(|p| &p.key() == key)
    }

    /// `reach[u][v]` iff there is a directed path `u -> ... -> v` (including `u = v`).
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.nodes.len();
        let mut succ = vec![Vec::new(); n];
        for e in &self.edges {
            succ[e.src].push(e.dst);
        }
        (0..n)
            .map(|s| {
                let mut seen = vec![false; n];
                let mut stack = vec![s];
                seen[s] = true;
                while let Some(u) = stack.pop() {
                    for &v in &succ[u] {
                        if !seen[v] {
                            seen[v] = true;
                            stack.push(v);
                        }
                    }
                }
                seen
            })
            .collect()
    }

    pub fn to_json(&self, alg: &BoundQuiverAlgebra<F>) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(id, p)| {
                let mut v = p.to_json(alg);
                v["id"] = json!(id);
                v
            })
            .collect();
        let edges: Vec<Value> = self.edges.iter().map(|e| json!({ "src": e.src, "dst": e.dst, "index": e.index + 1 })).collect();
        json!({ "nodes": nodes, "edges": edges, "flags": { "complete": self.complete } })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph sttilt {\n  rankdir=TB;\n");
        for (id, p) in self.nodes.iter().enumerate() {
            let label: Vec<String> = p.g_matrix().iter().map(|g| format!("{g:?}").replace(' ', "")).collect();
            let _ = writeln!(out, "  n{id} [label=\"{}\"];", label.join(" "));
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.src, e.dst, e.index + 1);
        }
        out.push_str("}\n");
        out
    }
}

/// Down-mutation BFS from `(A, 0)`. Nodes are keyed by their g-matrix; a
/// repeated key is confirmed by an isomorphism test.
pub fn enumerate_sttilt<F: Field>(alg: &BoundQuiverAlgebra<F>, limits: Limits, seed: u64) -> Result<HasseGraph<F>> {
    let n = alg.n();
    let mut nodes = vec![TauTiltingPair::top(alg)];
    let mut index: HashMap<PairKey, usize> = HashMap::from([(nodes[0].key(), 0)]);
    let mut edges = Vec::new();
    let mut complete = true;
    if limits.max_nodes == 0 {
        return Ok(HasseGraph { nodes: Vec::new(), edges, complete: false });
    }
    let mut frontier = vec![0usize];
    let mut depth = 0;
    while !frontier.is_empty() {
        if limits.max_depth.is_some_and(|d| depth >= d) {
            complete = false;
            break;
        }
        let found: Vec<Vec<(usize, TauTiltingPair<F>)>> = frontier
            .par_iter()
            .map(|&u| {
                let t = &nodes[u];
                (0..n)
                    .filter_map(|i| down_exchange(alg, t, i).map(|s| (i, replace(alg, t, i, s, seed))))
                    .map(|(i, p)| TauTiltingPair::new(alg, p).map(|p| (i, p)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for (&u, mutations) in frontier.iter().zip(found) {
            for (i, pair) in mutations {
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
                let v = nodes.len();
                index.insert(key, v);
                nodes.push(pair);
                edges.push(HasseEdge { src: u, dst: v, index: i });
                next.push(v);
            }
        }
        frontier = next;
        depth += 1;
    }
    Ok(HasseGraph { nodes, edges, complete })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Finiteness {
    Finite(usize),
    /// The search stopped at a limit after this many pairs.
    Unknown(usize),
}

pub fn is_tau_tilting_finite<F: Field>(alg: &BoundQuiverAlgebra<F>, limits: Limits, seed: u64) -> Result<Finiteness> {
    let g = enumerate_sttilt(alg, limits, seed)?;
    Ok(if g.complete { Finiteness::Finite(g.nodes.len()) } else { Finiteness::Unknown(g.nodes.len()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::corpus;
    use crate::field::Rational;

    fn count(spec: crate::algebra::QuiverSpec) -> (usize, usize, bool) {
        let alg = BoundQuiverAlgebra::<Rational>::new(spec).unwrap();
        let g = enumerate_sttilt(&alg, Limits::default(), 0).unwrap();
        (g.nodes.len(), g.edges.len(), g.complete)
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(corpus::point()), (2, 1, true));
        assert_eq!(count(corpus::linear_a(2)), (5, 5, true));
        assert_eq!(count(corpus::truncated_polynomial(2)), (2, 1, true));
        assert_eq!(count(corpus::linear_a(3)).0, 14);
    }

    #[test]
    fn limits_stop_the_search() {
        let alg = BoundQuiverAlgebra::<Rational>::new(corpus::linear_a(3)).unwrap();
        let g = enumerate_sttilt(&alg, Limits::nodes(4), 0).unwrap();
        assert_eq!((g.nodes.len(), g.complete), (4, false));
        let g = enumerate_sttilt(&alg, Limits { max_nodes: 100, max_depth: Some(1) }, 0).unwrap();
        assert_eq!((g.nodes.len(), g.complete), (4, false));
    }

    #[test]
    fn exports() {
        let alg = BoundQuiverAlgebra::<Rational>::new(corpus::linear_a(2)).unwrap();
        let g = enumerate_sttilt(&alg, Limits::default(), 0).unwrap();
        let j = g.to_json(&alg);
        assert_eq!(j["nodes"].as_array().unwrap().len(), 5);
        assert_eq!(j["flags"]["complete"], json!(true));
        assert_eq!(j["nodes"][0]["g_matrix"], json!([[1, 0], [0, 1]]));
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph") && dot.matches("->").count() == 5);
    }
}
