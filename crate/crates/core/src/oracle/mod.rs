//! Exhaustive ground truth for tiny algebras over a small prime field.
//!
//! Every representation with dimension vector under the bound is listed,
//! isomorphism classes are found by sweeping base-change orbits, and
//! indecomposability is decided by searching `End` for idempotents. The
//! translate is computed as `D Tr`. Support τ-tilting pairs are the
//! maximal compatible families among τ-rigid indecomposables and shifted
//! projectives. None of this goes through `modrep` or `twoterm`.

mod linear;

use std::collections::{HashSet, VecDeque};

use serde_json::{json, Value};

use self::linear::{coordinates, hom_basis, identity, in_fac, mul, nullspace, rref, transpose, zeros, Mat, Rep};
use crate::algebra::{path_basis, BoundQuiverAlgebra, QuiverSpec};
use crate::error::{Error, Result};
use crate::field::{Field, FieldChoice, Fp};
use crate::tautilt::HasseEdge;

/// Hard cap on the number of candidate representations.
pub const CEILING: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Componentwise cap on dimension vectors.
    pub dim_bound: Vec<usize>,
    pub prime: u64,
}

impl OracleConfig {
    /// Bound by the largest indecomposable projective or injective at each
    /// vertex, over `F_2`.
    pub fn for_spec(spec: &QuiverSpec) -> Result<Self> {
        let basis = path_basis(spec)?;
        let n = spec.vertices.len();
        let count = |i: usize, j: usize| basis.iter().filter(|p| p.source == i && p.target == j).count();
        let dim_bound = (0..n).map(|w| (0..n).map(|v| count(v, w).max(count(w, v))).max().unwrap_or(0)).collect();
        Ok(OracleConfig { dim_bound, prime: 2 })
    }
}

/// A module over `F_p`; entries are residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleModule {
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OraclePair {
    /// Indices into the indecomposable list.
    pub modules: Vec<usize>,
    pub projectives: Vec<usize>,
    /// Summand g-vectors, decreasing.
    pub g_matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub prime: u64,
    pub indecomposables: Vec<OracleModule>,
    pub tau_rigid: Vec<bool>,
    pub g_vectors: Vec<Vec<i64>>,
    /// In breadth-first order from `(A, 0)`.
    pub pairs: Vec<OraclePair>,
    /// Down-mutations; `index` is the exchanged summand of `src`.
    pub edges: Vec<HasseEdge>,
}

impl OracleResult {
    /// The schema of the enumeration export.
    pub fn to_json(&self, spec: &QuiverSpec) -> Value {
        let module_json = |m: &OracleModule| {
            let maps: serde_json::Map<String, Value> = spec
                .arrows
                .iter()
                .zip(&m.maps)
                .map(|(a, rows)| (a.name.clone(), json!(rows.iter().map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())))
                .collect();
            json!({ "dim_vector": m.dims, "maps": maps })
        };
        let nodes: Vec<Value> = self
            .pairs
            .iter()
            .enumerate()
            .map(|(id, p)| {
                let mut proj = vec![0usize; spec.vertices.len()];
                for &v in &p.projectives {
                    proj[v] += 1;
                }
                let mut mods = p.modules.clone();
                mods.sort_by_key(|&i| std::cmp::Reverse(self.g_vectors[i].clone()));
                json!({
                    "id": id,
                    "module_summands": mods.iter().map(|&i| module_json(&self.indecomposables[i])).collect::<Vec<_>>(),
                    "projective_part": proj,
                    "g_matrix": p.g_matrix,
                })
            })
            .collect();
        let edges: Vec<Value> = self.edges.iter().map(|e| json!({ "src": e.src, "dst": e.dst, "index": e.index + 1 })).collect();
        json!({ "nodes": nodes, "edges": edges, "flags": { "complete": true } })
    }
}

pub fn brute_force_indecomposables(spec: &QuiverSpec, cfg: &OracleConfig) -> Result<Vec<OracleModule>> {
    Ok(brute_force_sttilt(spec, cfg)?.indecomposables)
}

pub fn brute_force_sttilt(spec: &QuiverSpec, cfg: &OracleConfig) -> Result<OracleResult> {
    match cfg.prime {
        2 => Engine::<2>::new(spec, cfg)?.run(),
        3 => Engine::<3>::new(spec, cfg)?.run(),
        5 => Engine::<5>::new(spec, cfg)?.run(),
        7 => Engine::<7>::new(spec, cfg)?.run(),
        p => Err(Error::Syntax(format!("the oracle runs over F_2, F_3, F_5 or F_7, not F_{p}"))),
    }
}

struct Engine<const P: u64> {
    alg: BoundQuiverAlgebra<Fp<P>>,
    arrows: Vec<(usize, usize)>,
    bound: Vec<usize>,
}

type Module<const P: u64> = Rep<Fp<P>>;

fn residue<const P: u64>(x: &Fp<P>) -> u64 {
    (0..P).find(|&k| Fp::<P>::from_i64(k as i64) == *x).expect("residue")
}

impl<const P: u64> Engine<P> {
    fn new(spec: &QuiverSpec, cfg: &OracleConfig) -> Result<Self> {
        if cfg.dim_bound.len() != spec.vertices.len() {
            return Err(Error::Dimension(format!("dimension bound has {} entries for {} vertices", cfg.dim_bound.len(), spec.vertices.len())));
        }
        let alg = BoundQuiverAlgebra::new(spec.clone().with_field(FieldChoice::PrimeField(P)))?;
        let arrows = alg.arrows().iter().map(|a| (a.source, a.target)).collect();
        Ok(Engine { alg, arrows, bound: cfg.dim_bound.clone() })
    }

    fn n(&self) -> usize {
        self.alg.n()
    }

    fn dim_vectors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &b in &self.bound {
            out = out.into_iter().flat_map(|d: Vec<usize>| (0..=b).map(move |k| [d.clone(), vec![k]].concat())).collect();
        }
        out.retain(|d| d.iter().any(|&k| k > 0));
        out
    }

    fn entries(&self, d: &[usize]) -> usize {
        self.arrows.iter().map(|&(s, t)| d[s] * d[t]).sum()
    }

    fn check_ceiling(&self) -> Result<()> {
        let total: u128 = self.dim_vectors().iter().map(|d| (P as u128).saturating_pow(self.entries(d) as u32)).fold(0u128, u128::saturating_add);
        if total > CEILING {
            return Err(Error::CeilingExceeded(total));
        }
        Ok(())
    }

    fn decode(&self, d: &[usize], code: &[u64]) -> Module<P> {
        let mut k = 0;
        let maps = self
            .arrows
            .iter()
            .map(|&(s, t)| {
                (0..d[s])
                    .map(|_| {
                        (0..d[t])
                            .map(|_| {
                                k += 1;
                                Fp::<P>::from_i64(code[k - 1] as i64)
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Rep { dims: d.to_vec(), maps }
    }

    fn encode(m: &Module<P>) -> Vec<u64> {
        m.maps.iter().flatten().flatten().map(residue).collect()
    }

    fn path_matrix(&self, m: &Module<P>, k: usize) -> Mat<Fp<P>> {
        let p = &self.alg.basis()[k];
        let mut acc = identity(m.dims[p.source]);
        for &a in &p.arrows {
            acc = mul(&acc, &m.maps[a], m.dims[self.arrows[a].1]);
        }
        acc
    }

    fn satisfies_relations(&self, m: &Module<P>) -> bool {
        self.alg.relations().iter().all(|rel| {
            let Some((_, first)) = rel.first() else { return true };
            let (s, t) = (self.arrows[first[0]].0, self.arrows[*first.last().expect("nonempty")].1);
            let mut sum = zeros::<Fp<P>>(m.dims[s], m.dims[t]);
            for (c, path) in rel {
                let mut acc = identity(m.dims[s]);
                for &a in path {
                    acc = mul(&acc, &m.maps[a], m.dims[self.arrows[a].1]);
                }
                for (row, arow) in sum.iter_mut().zip(&acc) {
                    for (x, y) in row.iter_mut().zip(arow) {
                        *x = x.add(&c.mul(y));
                    }
                }
            }
            sum.iter().flatten().all(Fp::is_zero)
        })
    }

    /// All invertible `k x k` matrices with their inverses.
    fn general_linear(k: usize) -> Vec<(Mat<Fp<P>>, Mat<Fp<P>>)> {
        let mut out = Vec::new();
        let total = (P as usize).pow((k * k) as u32);
        for code in 0..total {
            let mut c = code;
            let g: Mat<Fp<P>> = (0..k)
                .map(|_| {
                    (0..k)
                        .map(|_| {
                            let x = Fp::<P>::from_i64((c % P as usize) as i64);
                            c /= P as usize;
                            x
                        })
                        .collect()
                })
                .collect();
            let aug: Mat<Fp<P>> = g.iter().zip(identity::<Fp<P>>(k)).map(|(r, e)| [r.clone(), e].concat()).collect();
            let (r, pivots) = rref(aug, 2 * k);
            if pivots.len() == k && pivots.iter().enumerate().all(|(i, &p)| p == i) {
                let inv = r.iter().map(|row| row[k..].to_vec()).collect();
                out.push((g, inv));
            }
        }
        out
    }

    fn orbit(&self, m: &Module<P>, groups: &[Vec<(Mat<Fp<P>>, Mat<Fp<P>>)>]) -> HashSet<Vec<u64>> {
        let n = self.n();
        let mut out = HashSet::new();
        let mut idx = vec![0usize; n];
        loop {
            let maps = self
                .arrows
                .iter()
                .enumerate()
                .map(|(a, &(s, t))| {
                    let gs = &groups[m.dims[s]][idx[s]].0;
                    let gt_inv = &groups[m.dims[t]][idx[t]].1;
                    mul(&mul(gs, &m.maps[a], m.dims[t]), gt_inv, m.dims[t])
                })
                .collect();
            out.insert(Self::encode(&Rep { dims: m.dims.clone(), maps }));
            let mut v = 0;
            while v < n {
                idx[v] += 1;
                if idx[v] < groups[m.dims[v]].len() {
                    break;
                }
                idx[v] = 0;
                v += 1;
            }
            if v == n {
                return out;
            }
        }
    }

    /// No idempotent endomorphism besides 0 and 1.
    fn is_indecomposable(&self, m: &Module<P>) -> Result<bool> {
        let basis = hom_basis(&self.arrows, m, m);
        let count = (P as u128).saturating_pow(basis.len() as u32);
        if count > CEILING {
            return Err(Error::CeilingExceeded(count));
        }
        let n = self.n();
        let mut coef = vec![0u64; basis.len()];
        loop {
            let e: Vec<Mat<Fp<P>>> = (0..n)
                .map(|v| {
                    let mut acc = zeros::<Fp<P>>(m.dims[v], m.dims[v]);
                    for (c, b) in coef.iter().zip(&basis) {
                        let c = Fp::<P>::from_i64(*c as i64);
                        for (row, brow) in acc.iter_mut().zip(&b[v]) {
                            for (x, y) in row.iter_mut().zip(brow) {
                                *x = x.add(&c.mul(y));
                            }
                        }
                    }
                    acc
                })
                .collect();
            let zero = e.iter().flatten().flatten().all(Fp::is_zero);
            let one = e.iter().enumerate().all(|(v, ev)| *ev == identity::<Fp<P>>(m.dims[v]));
            let idempotent = e.iter().enumerate().all(|(v, ev)| mul(ev, ev, m.dims[v]) == *ev);
            if idempotent && !zero && !one {
                return Ok(false);
            }
            let mut k = 0;
            while k < coef.len() {
                coef[k] += 1;
                if coef[k] < P {
                    break;
                }
                coef[k] = 0;
                k += 1;
            }
            if k == coef.len() {
                return Ok(true);
            }
        }
    }

    fn indecomposables(&self) -> Result<Vec<Module<P>>> {
        self.check_ceiling()?;
        let max_dim = self.bound.iter().copied().max().unwrap_or(0);
        let groups: Vec<_> = (0..=max_dim).map(Self::general_linear).collect();
        let mut out = Vec::new();
        for d in self.dim_vectors() {
            let len = self.entries(&d);
            let mut seen: HashSet<Vec<u64>> = HashSet::new();
            let mut code = vec![0u64; len];
            loop {
                if !seen.contains(&code) {
                    let m = self.decode(&d, &code);
                    if self.satisfies_relations(&m) {
                        seen.extend(self.orbit(&m, &groups));
                        if self.is_indecomposable(&m)? {
                            out.push(m);
                        }
                    }
                }
                let mut k = 0;
                while k < len {
                    code[k] += 1;
                    if code[k] < P {
                        break;
                    }
                    code[k] = 0;
                    k += 1;
                }
                if k == len {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Standard vectors spanning a complement of the radical at each vertex.
    fn top_generators(&self, m: &Module<P>) -> Vec<(usize, Vec<Fp<P>>)> {
        let mut out = Vec::new();
        for v in 0..self.n() {
            let rad: Mat<Fp<P>> = self.arrows.iter().enumerate().filter(|(_, &(_, t))| t == v).flat_map(|(a, _)| m.maps[a].clone()).collect();
            let (_, pivots) = rref(rad, m.dims[v]);
            for c in (0..m.dims[v]).filter(|c| !pivots.contains(c)) {
                let mut e = vec![Fp::<P>::zero(); m.dims[v]];
                e[c] = Fp::one();
                out.push((v, e));
            }
        }
        out
    }

    /// `D Tr M` and the g-vector `[P_0] - [P_1]` of `M`.
    fn tau(&self, m: &Module<P>) -> (Module<P>, Vec<i64>) {
        let (alg, n) = (&self.alg, self.n());
        let gens0 = self.top_generators(m);
        let paths: Vec<Mat<Fp<P>>> = (0..alg.dim()).map(|k| self.path_matrix(m, k)).collect();
        // P_0 at w has coordinates (g, p) for p from the vertex of g to w
        let cover: Vec<Mat<Fp<P>>> = (0..n)
            .map(|w| {
                gens0
                    .iter()
                    .flat_map(|(v, x)| alg.paths_between(*v, w).iter().map(|&p| mul(&vec![x.clone()], &paths[p], m.dims[w]).remove(0)).collect::<Vec<_>>())
                    .collect()
            })
            .collect();
        let p0_dim = |w: usize| gens0.iter().map(|(v, _)| alg.paths_between(*v, w).len()).sum::<usize>();
        let kernel: Vec<Mat<Fp<P>>> = (0..n).map(|w| nullspace(transpose(&cover[w], m.dims[w]), p0_dim(w))).collect();
        let free_action = |a: usize| -> Mat<Fp<P>> {
            let (s, t) = self.arrows[a];
            let ab = alg.arrow_basis_index(a);
            let mut out = zeros(p0_dim(s), p0_dim(t));
            let (mut r0, mut c0) = (0, 0);
            for (v, _) in &gens0 {
                let (rows, cols) = (alg.paths_between(*v, s), alg.paths_between(*v, t));
                for (i, &p) in rows.iter().enumerate() {
                    for (q, c) in alg.mul_basis(p, ab) {
                        let j = cols.iter().position(|z| z == q).expect("path stays at its start");
                        out[r0 + i][c0 + j] = *c;
                    }
                }
                r0 += rows.len();
                c0 += cols.len();
            }
            out
        };
        let syzygy = Rep {
            dims: kernel.iter().map(Vec::len).collect(),
            maps: (0..self.arrows.len())
                .map(|a| {
                    let (s, t) = self.arrows[a];
                    coordinates(&kernel[t], &mul(&kernel[s], &free_action(a), p0_dim(t)), p0_dim(t))
                })
                .collect(),
        };
        // generators of the syzygy, as elements of P_0
        let gens1: Vec<(usize, Vec<Fp<P>>)> =
            self.top_generators(&syzygy).into_iter().map(|(u, y)| (u, mul(&vec![y], &kernel[u], p0_dim(u)).remove(0))).collect();

        // d^* : Hom(P_0, A) -> Hom(P_1, A) at w; rows (g, q: w -> v_g), columns (j, r: w -> u_j)
        let hom1_dim = |w: usize| gens1.iter().map(|(u, _)| alg.paths_between(w, *u).len()).sum::<usize>();
        let dstar = |w: usize| -> Mat<Fp<P>> {
            let mut rows = Vec::new();
            for (g, (v, _)) in gens0.iter().enumerate() {
                for &q in alg.paths_between(w, *v) {
                    let mut row = Vec::new();
                    for (u, k) in &gens1 {
                        let cols = alg.paths_between(w, *u);
                        let mut part = vec![Fp::<P>::zero(); cols.len()];
                        // coordinates of k in P_0 at u, block of generator g
                        let off: usize = gens0[..g].iter().map(|(v2, _)| alg.paths_between(*v2, *u).len()).sum();
                        for (i, &p) in alg.paths_between(*v, *u).iter().enumerate() {
                            let c = &k[off + i];
                            if c.is_zero() {
                                continue;
                            }
                            for (r, x) in alg.mul_basis(q, p) {
                                let j = cols.iter().position(|z| z == r).expect("product runs from w to u");
                                part[j] = part[j].add(&c.mul(x));
                            }
                        }
                        row.extend(part);
                    }
                    rows.push(row);
                }
            }
            rows
        };
        // left action of a: w -> w' on Hom(P_1, A), from the w' part to the w part
        let left_action = |a: usize| -> Mat<Fp<P>> {
            let (w, w2) = self.arrows[a];
            let ab = alg.arrow_basis_index(a);
            let mut out = zeros(hom1_dim(w2), hom1_dim(w));
            let (mut r0, mut c0) = (0, 0);
            for (u, _) in &gens1 {
                let (rows, cols) = (alg.paths_between(w2, *u), alg.paths_between(w, *u));
                for (i, &r) in rows.iter().enumerate() {
                    for (q, c) in alg.mul_basis(ab, r) {
                        let j = cols.iter().position(|z| z == q).expect("product runs from w to u");
                        out[r0 + i][c0 + j] = *c;
                    }
                }
                r0 += rows.len();
                c0 += cols.len();
            }
            out
        };
        let tau_basis: Vec<Mat<Fp<P>>> = (0..n).map(|w| nullspace(dstar(w), hom1_dim(w))).collect();
        let tau = Rep {
            dims: tau_basis.iter().map(Vec::len).collect(),
            maps: (0..self.arrows.len())
                .map(|a| {
                    let (w, w2) = self.arrows[a];
                    let moved = mul(&tau_basis[w], &transpose(&left_action(a), hom1_dim(w)), hom1_dim(w2));
                    coordinates(&tau_basis[w2], &moved, hom1_dim(w2))
                })
                .collect(),
        };
        let mut g = vec![0i64; n];
        for (v, _) in &gens0 {
            g[*v] += 1;
        }
        for (u, _) in &gens1 {
            g[*u] -= 1;
        }
        (tau, g)
    }

    fn run(&self) -> Result<OracleResult> {
        let n = self.n();
        let modules = self.indecomposables()?;
        let taus: Vec<(Module<P>, Vec<i64>)> = modules.iter().map(|m| self.tau(m)).collect();
        let hom_zero = |x: &Module<P>, y: &Module<P>| hom_basis(&self.arrows, x, y).is_empty();
        let tau_rigid: Vec<bool> = modules.iter().zip(&taus).map(|(m, (t, _))| hom_zero(m, t)).collect();

        // items: τ-rigid modules, then shifted projectives
        enum Item {
            Module(usize),
            Shifted(usize),
        }
        let mut items: Vec<Item> = (0..modules.len()).filter(|&i| tau_rigid[i]).map(Item::Module).collect();
        items.extend((0..n).map(Item::Shifted));
        let compatible = |x: &Item, y: &Item| match (x, y) {
            (Item::Module(i), Item::Module(j)) => hom_zero(&modules[*i], &taus[*j].0) && hom_zero(&modules[*j], &taus[*i].0),
            (Item::Module(i), Item::Shifted(v)) | (Item::Shifted(v), Item::Module(i)) => modules[*i].dims[*v] == 0,
            (Item::Shifted(_), Item::Shifted(_)) => true,
        };
        let k = items.len();
        let adj: Vec<Vec<bool>> = (0..k).map(|i| (0..k).map(|j| i != j && compatible(&items[i], &items[j])).collect()).collect();
        let mut cliques = Vec::new();
        let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
        while let Some((chosen, start)) = stack.pop() {
            if chosen.len() == n {
                cliques.push(chosen);
                continue;
            }
            for next in (start..k).rev() {
                if chosen.iter().all(|&c| adj[c][next]) {
                    let mut c = chosen.clone();
                    c.push(next);
                    stack.push((c, next + 1));
                }
            }
        }
        let g_of = |i: usize| match items[i] {
            Item::Module(m) => taus[m].1.clone(),
            Item::Shifted(v) => {
                let mut g = vec![0; n];
                g[v] = -1;
                g
            }
        };
        // summands of each pair in canonical order
        let pairs_items: Vec<Vec<usize>> = cliques
            .into_iter()
            .map(|mut c| {
                c.sort_by_key(|&i| std::cmp::Reverse(g_of(i)));
                c
            })
            .collect();
        let module_reps = |c: &[usize]| -> Vec<&Module<P>> {
            c.iter()
                .filter_map(|&i| match items[i] {
                    Item::Module(m) => Some(&modules[m]),
                    Item::Shifted(_) => None,
                })
                .collect()
        };
        // mutation: the pairs share all summands but one; down when the new
        // modules lie in Fac of the old ones
        let mut raw_edges = Vec::new();
        for (a, ca) in pairs_items.iter().enumerate() {
            for (b, cb) in pairs_items.iter().enumerate() {
                let missing: Vec<usize> = (0..n).filter(|&s| !cb.contains(&ca[s])).collect();
                if a == b || missing.len() != 1 {
                    continue;
                }
                let ma = module_reps(ca);
                if module_reps(cb).iter().all(|x| in_fac(&self.arrows, x, &ma)) {
                    raw_edges.push(HasseEdge { src: a, dst: b, index: missing[0] });
                }
            }
        }
        // breadth-first order from the maximum
        let sources: Vec<usize> = (0..pairs_items.len()).filter(|&i| !raw_edges.iter().any(|e| e.dst == i)).collect();
        let [top] = sources.as_slice() else {
            return Err(Error::InvariantViolation(format!("{} maximal pairs", sources.len())));
        };
        let top = *top;
        let mut order = vec![top];
        let mut placed = vec![usize::MAX; pairs_items.len()];
        placed[top] = 0;
        let mut queue = VecDeque::from([top]);
        while let Some(u) = queue.pop_front() {
            let mut out: Vec<&HasseEdge> = raw_edges.iter().filter(|e| e.src == u).collect();
            out.sort_by_key(|e| e.index);
            for e in out {
                if placed[e.dst] == usize::MAX {
                    placed[e.dst] = order.len();
                    order.push(e.dst);
                    queue.push_back(e.dst);
                }
            }
        }
        for (i, slot) in placed.iter_mut().enumerate() {
            if *slot == usize::MAX {
                *slot = order.len();
                order.push(i);
            }
        }
        let mut edges: Vec<HasseEdge> = raw_edges.iter().map(|e| HasseEdge { src: placed[e.src], dst: placed[e.dst], index: e.index }).collect();
        edges.sort_by_key(|e| (e.src, e.index));
        let pairs = order
            .iter()
            .map(|&i| {
                let c = &pairs_items[i];
                let mut modules_idx = Vec::new();
                let mut projectives = Vec::new();
                for &x in c {
                    match items[x] {
                        Item::Module(m) => modules_idx.push(m),
                        Item::Shifted(v) => projectives.push(v),
                    }
                }
                projectives.sort_unstable();
                OraclePair { modules: modules_idx, projectives, g_matrix: c.iter().map(|&x| g_of(x)).collect() }
            })
            .collect();
        Ok(OracleResult {
            prime: P,
            indecomposables: modules
                .iter()
                .map(|m| OracleModule {
                    dims: m.dims.clone(),
                    maps: m.maps.iter().map(|a| a.iter().map(|r| r.iter().map(residue).collect()).collect()).collect(),
                })
                .collect(),
            tau_rigid,
            g_vectors: taus.into_iter().map(|t| t.1).collect(),
            pairs,
            edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::corpus;

    fn run(spec: QuiverSpec) -> OracleResult {
        let cfg = OracleConfig::for_spec(&spec).unwrap();
        brute_force_sttilt(&spec, &cfg).unwrap()
    }

    #[test]
    fn a2_modules_and_pairs() {
        let r = run(corpus::linear_a(2));
        let mut dims: Vec<Vec<usize>> = r.indecomposables.iter().map(|m| m.dims.clone()).collect();
        dims.sort();
        assert_eq!(dims, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(r.pairs.len(), 5);
        assert_eq!(r.edges.len(), 5);
        assert_eq!(r.pairs[0].g_matrix, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn point_and_dual_numbers() {
        let r = run(corpus::point());
        assert_eq!((r.indecomposables.len(), r.pairs.len()), (1, 2));
        let r = run(corpus::truncated_polynomial(2));
        assert_eq!(r.indecomposables.len(), 2);
        assert_eq!(r.tau_rigid.iter().filter(|&&t| t).count(), 1);
        assert_eq!(r.pairs.len(), 2);
    }

    #[test]
    fn simple_translate_over_a2() {
        let spec = corpus::linear_a(2);
        let e = Engine::<2>::new(&spec, &OracleConfig::for_spec(&spec).unwrap()).unwrap();
        let s1 = Rep { dims: vec![1, 0], maps: vec![zeros(1, 0)] };
        let (t, g) = e.tau(&s1);
        assert_eq!((t.dims, g), (vec![0, 1], vec![1, -1]));
    }

    #[test]
    fn ceiling_is_enforced() {
        let spec = corpus::kronecker();
        let cfg = OracleConfig { dim_bound: vec![4, 4], prime: 2 };
        assert!(matches!(brute_force_sttilt(&spec, &cfg), Err(Error::CeilingExceeded(_))));
    }
}
