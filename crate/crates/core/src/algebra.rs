//! Bound quiver algebras `A = kQ/I` presented by a path basis.
//!
//! Paths compose left to right: `a*b` traverses `a`, then `b`, so a path
//! `p` from `i` to `j` satisfies `p = e_i p e_j`. The ideal is completed to
//! a rewriting system whose leading terms are the largest paths under
//! length-then-lexicographic order (arrows compared by name), and the basis
//! consists of the paths no leading term divides.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{Field, FieldChoice};
use crate::format::parse_document;
use crate::linalg::{sparse_from_dense, Echelon};

pub const DEFAULT_PATH_LENGTH_BOUND: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A relation as written, with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub text: String,
    pub terms: Vec<(BigRational, Vec<usize>)>,
}

/// Quiver, relations and field, before the basis is computed.
#[derive(Clone, Debug)]
pub struct QuiverSpec {
    pub field: FieldChoice,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub path_length_bound: usize,
}

impl QuiverSpec {
    /// Builds a spec over the rationals from labels, `(name, source, target)`
    /// triples and relation strings.
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[&str]) -> Result<Self> {
        let mut spec = QuiverSpec {
            field: FieldChoice::Rationals,
            vertices: Vec::new(),
            arrows: Vec::new(),
            relations: Vec::new(),
            path_length_bound: DEFAULT_PATH_LENGTH_BOUND,
        };
        for v in vertices {
            spec.add_vertex(v)?;
        }
        for (name, s, t) in arrows {
            spec.add_arrow(name, s, t)?;
        }
        for r in relations {
            spec.add_relation(r)?;
        }
        Ok(spec)
    }

    pub fn with_field(mut self, field: FieldChoice) -> Self {
        self.field = field;
        self
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.path_length_bound = bound;
        self
    }

    fn add_vertex(&mut self, label: &str) -> Result<()> {
        if self.vertices.iter().any(|v| v == label) {
            return Err(Error::Duplicate(label.to_string()));
        }
        self.vertices.push(label.to_string());
        Ok(())
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == label).ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<()> {
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(Error::Syntax(format!("invalid arrow name `{name}`")));
        }
        if self.arrows.iter().any(|a| a.name == name) {
            return Err(Error::Duplicate(name.to_string()));
        }
        let arrow = Arrow { name: name.to_string(), source: self.vertex_index(source)?, target: self.vertex_index(target)? };
        self.arrows.push(arrow);
        Ok(())
    }

    fn add_relation(&mut self, text: &str) -> Result<()> {
        let rel = self.parse_relation(text)?;
        self.relations.push(rel);
        Ok(())
    }

    /// Parses `"a*b - 2*c*d"`. Each term is an optional scalar factor and a
    /// path of length at least two; all paths must be parallel.
    pub fn parse_relation(&self, text: &str) -> Result<Relation> {
        let mut terms: BTreeMap<Vec<usize>, BigRational> = BTreeMap::new();
        let mut endpoints = None;
        for (sign, term) in split_terms(text)? {
            let mut coeff = BigRational::from_integer(BigInt::from(sign));
            let mut path = Vec::new();
            for tok in term.split('*').map(str::trim) {
                if tok.is_empty() {
                    return Err(Error::Syntax(format!("empty factor in `{text}`")));
                }
                if path.is_empty() && tok.starts_with(|c: char| c.is_ascii_digit()) {
                    coeff *= parse_big_rational(tok)?;
                } else {
                    path.push(self.arrow_index(tok)?);
                }
            }
            for w in path.windows(2) {
                if self.arrows[w[0]].target != self.arrows[w[1]].source {
                    return Err(Error::NotComposable(text.to_string()));
                }
            }
            if path.len() < 2 {
                return Err(Error::ShortRelation(text.to_string()));
            }
            let ends = (self.arrows[path[0]].source, self.arrows[*path.last().unwrap()].target);
            if *endpoints.get_or_insert(ends) != ends {
                return Err(Error::NonParallel(text.to_string()));
            }
            *terms.entry(path).or_insert_with(BigRational::zero) += coeff;
        }
        let terms: Vec<_> = terms.into_iter().filter(|(_, c)| !c.is_zero()).map(|(p, c)| (c, p)).collect();
        Ok(Relation { text: text.trim().to_string(), terms })
    }

    /// Reads the line-oriented algebra file format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut field = FieldChoice::Rationals;
        let mut vertices: Option<Vec<String>> = None;
        let mut arrows = Vec::new();
        let mut relations = Vec::new();
        let mut bound = DEFAULT_PATH_LENGTH_BOUND;
        for (line, key, value) in parse_document(text)? {
            let ctx = |e: Error| match e {
                Error::Syntax(m) => Error::Syntax(format!("line {line}: {m}")),
                other => other,
            };
            match key.as_str() {
                "field" => field = FieldChoice::from_str(value.as_str().map_err(ctx)?)?,
                "vertices" => {
                    let labels = value.as_array().map_err(ctx)?.iter().map(|v| v.as_str().map(str::to_string)).collect::<Result<Vec<_>>>().map_err(ctx)?;
                    vertices = Some(labels);
                }
                "arrow" => {
                    let get = |k: &str| -> Result<String> { Ok(value.get(k)?.as_str()?.to_string()) };
                    arrows.push((get("name").map_err(ctx)?, get("source").map_err(ctx)?, get("target").map_err(ctx)?));
                }
                "relations" => {
                    for r in value.as_array().map_err(ctx)? {
                        relations.push(r.as_str().map_err(ctx)?.to_string());
                    }
                }
                "path_length_bound" => {
                    bound = value.as_usize().map_err(ctx)?;
                    if bound == 0 {
                        return Err(Error::Syntax(format!("line {line}: path_length_bound must be positive")));
                    }
                }
                other => return Err(Error::Syntax(format!("line {line}: unknown key `{other}`"))),
            }
        }
        let vertices = vertices.ok_or_else(|| Error::Syntax("missing `vertices`".into()))?;
        let mut spec = QuiverSpec { field, vertices: Vec::new(), arrows: Vec::new(), relations: Vec::new(), path_length_bound: bound };
        for v in &vertices {
            spec.add_vertex(v)?;
        }
        for (n, s, t) in &arrows {
            spec.add_arrow(n, s, t)?;
        }
        for r in &relations {
            spec.add_relation(r)?;
        }
        Ok(spec)
    }

    /// Writes the spec back in the algebra file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("field = \"{}\"\n", self.field);
        let labels: Vec<String> = self.vertices.iter().map(|v| format!("\"{v}\"")).collect();
        out += &format!("vertices = [{}]\n", labels.join(", "));
        for a in &self.arrows {
            out += &format!("arrow = {{ name = \"{}\", source = \"{}\", target = \"{}\" }}\n", a.name, self.vertices[a.source], self.vertices[a.target]);
        }
        let rels: Vec<String> = self.relations.iter().map(|r| format!("\"{}\"", r.text)).collect();
        out += &format!("relations = [{}]\n", rels.join(", "));
        out += &format!("path_length_bound = {}\n", self.path_length_bound);
        out
    }
}

fn parse_big_rational(tok: &str) -> Result<BigRational> {
    let (n, d) = tok.split_once('/').unwrap_or((tok, "1"));
    let n = BigInt::from_str(n.trim()).map_err(|_| Error::Syntax(format!("bad coefficient `{tok}`")))?;
    let d = BigInt::from_str(d.trim()).map_err(|_| Error::Syntax(format!("bad coefficient `{tok}`")))?;
    if d.is_zero() {
        return Err(Error::Syntax(format!("zero denominator in `{tok}`")));
    }
    Ok(BigRational::new(n, d))
}

/// Splits `"a*b - 2*c*d"` into signed terms.
fn split_terms(text: &str) -> Result<Vec<(i64, String)>> {
    let mut out = Vec::new();
    let mut sign = 1;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '+' | '-' => {
                if !cur.trim().is_empty() {
                    out.push((sign, std::mem::take(&mut cur)));
                    sign = 1;
                } else if !cur.is_empty() && cur.trim().is_empty() {
                    cur.clear();
                }
                if ch == '-' {
                    sign = -sign;
                }
            }
            _ => cur.push(ch),
        }
    }
    if cur.trim().is_empty() {
        return Err(Error::Syntax(format!("dangling operator or empty relation `{text}`")));
    }
    out.push((sign, cur));
    Ok(out.into_iter().map(|(s, t)| (s, t.trim().to_string())).collect())
}

/// A path in the quiver; trivial paths have no arrows and `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Word over arrow ranks, ordered by length then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Word(Vec<usize>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

type Poly<F> = BTreeMap<Word, F>;

fn leading<F>(p: &Poly<F>) -> &Word {
    p.keys().next_back().expect("nonzero polynomial")
}

fn find_subword(w: &[usize], pat: &[usize]) -> Option<usize> {
    if pat.len() > w.len() {
        return None;
    }
    w.windows(pat.len()).position(|x| x == pat)
}

fn sandwich<F: Field>(u: &[usize], p: &Poly<F>, v: &[usize], scale: &F) -> Vec<(Word, F)> {
    p.iter()
        .map(|(w, c)| {
            let mut word = u.to_vec();
            word.extend_from_slice(&w.0);
            word.extend_from_slice(v);
            (Word(word), c.mul(scale))
        })
        .collect()
}

fn add_terms<F: Field>(p: &mut Poly<F>, terms: Vec<(Word, F)>) {
    for (w, c) in terms {
        let zero = {
            let e = p.entry(w.clone()).or_insert_with(F::zero);
            *e = e.add(&c);
            e.is_zero()
        };
        if zero {
            p.remove(&w);
        }
    }
}

fn normal_form<F: Field>(mut f: Poly<F>, rules: &[Poly<F>]) -> Poly<F> {
    let mut done = Poly::new();
    while let Some((w, c)) = f.pop_last() {
        let hit = rules.iter().find_map(|g| find_subword(&w.0, &leading(g).0).map(|pos| (g, pos)));
        match hit {
            Some((g, pos)) => {
                let lm = &leading(g).0;
                let (u, v) = (&w.0[..pos], &w.0[pos + lm.len()..]);
                // g is monic; the leading term cancels against (w, c)
                let mut rest = g.clone();
                rest.pop_last();
                add_terms(&mut f, sandwich(u, &rest, v, &c.neg()));
            }
            None => {
                done.insert(w, c);
            }
        }
    }
    done
}

fn make_monic<F: Field>(p: &mut Poly<F>) {
    let inv = p.values().next_back().expect("nonzero").inv().expect("nonzero");
    for c in p.values_mut() {
        *c = c.mul(&inv);
    }
}

/// Completes the relations to a rewriting system by resolving overlaps of
/// leading terms. Overlaps longer than `bound` are skipped.
fn complete<F: Field>(relations: Vec<Poly<F>>, bound: usize) -> Vec<Poly<F>> {
    let mut rules: Vec<Option<Poly<F>>> = Vec::new();
    let mut pending: VecDeque<Poly<F>> = relations.into();
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    loop {
        while let Some(f) = pending.pop_front() {
            let active: Vec<Poly<F>> = rules.iter().flatten().cloned().collect();
            let mut r = normal_form(f, &active);
            if r.is_empty() {
                continue;
            }
            make_monic(&mut r);
            let lm = leading(&r).0.clone();
            for slot in rules.iter_mut() {
                if slot.as_ref().is_some_and(|g| find_subword(&leading(g).0, &lm).is_some()) {
                    pending.push_back(slot.take().unwrap());
                }
            }
            let id = rules.len();
            rules.push(Some(r));
            for (j, rule) in rules.iter().enumerate() {
                if rule.is_some() {
                    pairs.push_back((id, j));
                    if j != id {
                        pairs.push_back((j, id));
                    }
                }
            }
        }
        let Some((i, j)) = pairs.pop_front() else { break };
        let (Some(gi), Some(gj)) = (&rules[i], &rules[j]) else { continue };
        let (li, lj) = (&leading(gi).0, &leading(gj).0);
        for k in 1..li.len().min(lj.len()) {
            if li[li.len() - k..] != lj[..k] {
                continue;
            }
            if li.len() + lj.len() - k > bound {
                continue;
            }
            let u = &li[..li.len() - k];
            let v = &lj[k..];
            let mut s = Poly::new();
            add_terms(&mut s, sandwich(&[], gi, v, &F::one()));
            add_terms(&mut s, sandwich(u, gj, &[], &F::one().neg()));
            if !s.is_empty() {
                pending.push_back(s);
            }
        }
    }
    rules.into_iter().flatten().collect()
}

/// Sparse algebra element or structure-constant row: `(basis index, coefficient)`.
pub type SparseElem<F> = Vec<(usize, F)>;

/// A finite-dimensional bound quiver algebra with a fixed path basis.
///
/// Immutable after construction.
#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra<F> {
    spec: QuiverSpec,
    basis: Vec<Path>,
    word_index: HashMap<Vec<usize>, usize>,
    products: Vec<Vec<SparseElem<F>>>,
    between: Vec<Vec<Vec<usize>>>,
    relations: Vec<Vec<(F, Vec<usize>)>>,
}

impl<F: Field> BoundQuiverAlgebra<F> {
    /// Builds the algebra. Errors if the field of the spec does not match
    /// `F`, if basis generation does not terminate below the path length
    /// bound, or if the arrow ideal is not nilpotent.
    pub fn new(spec: QuiverSpec) -> Result<Self> {
        if spec.field.characteristic() != F::CHARACTERISTIC {
            return Err(Error::Syntax(format!("algebra is over {} but was built in characteristic {}", spec.field, F::CHARACTERISTIC)));
        }
        let n_arrows = spec.arrows.len();
        let mut order: Vec<usize> = (0..n_arrows).collect();
        order.sort_by(|&a, &b| spec.arrows[a].name.cmp(&spec.arrows[b].name));
        let mut rank = vec![0; n_arrows];
        for (r, &a) in order.iter().enumerate() {
            rank[a] = r;
        }
        let to_ranks = |p: &[usize]| p.iter().map(|&a| rank[a]).collect::<Vec<_>>();
        let to_arrows = |w: &[usize]| w.iter().map(|&r| order[r]).collect::<Vec<_>>();

        let mut relations = Vec::new();
        let mut polys = Vec::new();
        for rel in &spec.relations {
            let mut poly = Poly::new();
            let mut terms = Vec::new();
            for (c, path) in &rel.terms {
                let c = F::from_ratio(c.numer(), c.denom())
                    .ok_or_else(|| Error::Syntax(format!("coefficient in `{}` is undefined in {}", rel.text, spec.field)))?;
                if c.is_zero() {
                    continue;
                }
                poly.insert(Word(to_ranks(path)), c.clone());
                terms.push((c, path.clone()));
            }
            relations.push(terms);
            if !poly.is_empty() {
                polys.push(poly);
            }
        }
        let bound = spec.path_length_bound;
        let rules = complete(polys, bound);
        let leads: Vec<Vec<usize>> = rules.iter().map(|g| leading(g).0.clone()).collect();

        // normal words, level by level
        let arrow_src = |r: usize| spec.arrows[order[r]].source;
        let arrow_tgt = |r: usize| spec.arrows[order[r]].target;
        let mut words: Vec<Vec<usize>> = Vec::new();
        let mut level: Vec<Vec<usize>> = (0..n_arrows).map(|r| vec![r]).collect();
        let mut len = 1;
        while !level.is_empty() {
            if len >= bound {
                return Err(Error::NotAdmissible(bound));
            }
            let mut next = Vec::new();
            for w in &level {
                for r in 0..n_arrows {
                    if arrow_tgt(*w.last().unwrap()) != arrow_src(r) {
                        continue;
                    }
                    let mut x = w.clone();
                    x.push(r);
                    if leads.iter().any(|l| x.ends_with(l)) {
                        continue;
                    }
                    next.push(x);
                }
            }
            words.append(&mut level);
            level = next;
            len += 1;
        }
        words.sort_by_key(|a| Word(a.clone()));

        let n = spec.vertices.len();
        let mut basis: Vec<Path> = (0..n).map(|v| Path { source: v, target: v, arrows: Vec::new() }).collect();
        let mut word_index = HashMap::new();
        for w in &words {
            let arrows = to_arrows(w);
            word_index.insert(arrows.clone(), basis.len());
            basis.push(Path { source: arrow_src(w[0]), target: arrow_tgt(*w.last().unwrap()), arrows });
        }
        let dim = basis.len();
        let mut between = vec![vec![Vec::new(); n]; n];
        for (k, p) in basis.iter().enumerate() {
            between[p.source][p.target].push(k);
        }

        let mut products = vec![vec![Vec::new(); dim]; dim];
        for x in 0..dim {
            for y in 0..dim {
                let (px, py) = (&basis[x], &basis[y]);
                if px.target != py.source {
                    continue;
                }
                products[x][y] = if px.is_trivial() {
                    vec![(y, F::one())]
                } else if py.is_trivial() {
                    vec![(x, F::one())]
                } else {
                    let mut w = to_ranks(&px.arrows);
                    w.extend(to_ranks(&py.arrows));
                    let nf = normal_form(Poly::from([(Word(w), F::one())]), &rules);
                    let mut out: SparseElem<F> = nf.into_iter().map(|(w, c)| (word_index[&to_arrows(&w.0)], c)).collect();
                    out.sort_by_key(|e| e.0);
                    out
                };
            }
        }

        let alg = BoundQuiverAlgebra { spec, basis, word_index, products, between, relations };
        alg.check_radical_nilpotent()?;
        Ok(alg)
    }

    fn check_radical_nilpotent(&self) -> Result<()> {
        let dim = self.dim();
        let mut layer: Vec<Vec<F>> = (0..self.spec.arrows.len()).map(|a| self.basis_vector(self.arrow_basis_index(a))).collect();
        for _ in 0..=dim {
            let mut span = Echelon::new(dim);
            let mut next = Vec::new();
            for x in &layer {
                for a in 0..self.spec.arrows.len() {
                    let y = self.multiply(x, &self.basis_vector(self.arrow_basis_index(a)));
                    if span.insert(sparse_from_dense(&y)) {
                        next.push(y);
                    }
                }
            }
            if next.is_empty() {
                return Ok(());
            }
            layer = next;
        }
        Err(Error::NotAdmissible(self.spec.path_length_bound))
    }

    pub fn spec(&self) -> &QuiverSpec {
        &self.spec
    }

    /// Number of vertices, which is the number of simple modules `|A|`.
    pub fn n(&self) -> usize {
        self.spec.vertices.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.spec.arrows
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn relations(&self) -> &[Vec<(F, Vec<usize>)>] {
        &self.relations
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.spec.vertices[v]
    }

    /// Basis indices of the paths from `i` to `j`; a basis of `e_i A e_j`.
    pub fn paths_between(&self, i: usize, j: usize) -> &[usize] {
        &self.between[i][j]
    }

    pub fn arrow_basis_index(&self, a: usize) -> usize {
        self.word_index[&vec![a]]
    }

    /// Basis index of a path given by arrows, if it is a basis path.
    pub fn path_index(&self, arrows: &[usize]) -> Option<usize> {
        self.word_index.get(arrows).copied()
    }

    /// Product of two basis paths as a sparse combination.
    pub fn mul_basis(&self, x: usize, y: usize) -> &[(usize, F)] {
        &self.products[x][y]
    }

    pub fn zero_element(&self) -> Vec<F> {
        vec![F::zero(); self.dim()]
    }

    pub fn basis_vector(&self, k: usize) -> Vec<F> {
        let mut v = self.zero_element();
        v[k] = F::one();
        v
    }

    pub fn unit(&self) -> Vec<F> {
        let mut v = self.zero_element();
        for e in v.iter_mut().take(self.n()) {
            *e = F::one();
        }
        v
    }

    pub fn multiply(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = self.zero_element();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in &self.products[i][j] {
                    out[*k].add_mul_assign(&ab, c);
                }
            }
        }
        out
    }

    /// True when `x = e_i x e_j`.
    pub fn lies_in(&self, x: &[F], i: usize, j: usize) -> bool {
        x.iter().enumerate().all(|(k, c)| c.is_zero() || (self.basis[k].source == i && self.basis[k].target == j))
    }

    /// Inverse of a unit `c e_i + n` of the local ring `e_i A e_i`.
    pub fn local_inverse(&self, u: &[F], i: usize) -> Option<Vec<F>> {
        let c = u[i].inv()?;
        let mut nil = u.to_vec();
        nil[i] = F::zero();
        // u^{-1} = c^{-1} * sum_k (-c^{-1} n)^k
        let step: Vec<F> = nil.iter().map(|a| a.mul(&c).neg()).collect();
        let mut term = self.basis_vector(i);
        let mut sum = self.basis_vector(i);
        for _ in 0..=self.dim() {
            term = self.multiply(&term, &step);
            if term.iter().all(F::is_zero) {
                return Some(sum.iter().map(|a| a.mul(&c)).collect());
            }
            for (s, t) in sum.iter_mut().zip(&term) {
                *s = s.add(t);
            }
        }
        None
    }

    pub fn path_name(&self, k: usize) -> String {
        let p = &self.basis[k];
        if p.is_trivial() {
            format!("e{}", self.spec.vertices[p.source])
        } else {
            p.arrows.iter().map(|&a| self.spec.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    pub fn format_element(&self, x: &[F]) -> String {
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| if c.is_one() { self.path_name(k) } else { format!("{c}*{}", self.path_name(k)) })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl<F: Field> fmt::Display for BoundQuiverAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "algebra over {} with {} vertices, dimension {}", self.spec.field, self.n(), self.dim())
    }
}

/// Parses an algebra file and builds the algebra over `F`.
pub fn parse_algebra<F: Field>(text: &str) -> Result<BoundQuiverAlgebra<F>> {
    BoundQuiverAlgebra::new(QuiverSpec::parse(text)?)
}

/// Computes the path basis of a spec over the rationals.
pub fn path_basis(spec: &QuiverSpec) -> Result<Vec<Path>> {
    let spec = spec.clone().with_field(FieldChoice::Rationals);
    Ok(BoundQuiverAlgebra::<crate::field::Rational>::new(spec)?.basis)
}

/// Small algebras used throughout the tests and examples.
pub mod corpus {
    use super::*;

    /// Linearly oriented `A_n`: `1 -> 2 -> ... -> n`, no relations.
    pub fn linear_a(n: usize) -> QuiverSpec {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let names: Vec<String> = (1..n).map(|i| format!("a{i}")).collect();
        let lv: Vec<&str> = labels.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str, &str)> = (0..n - 1).map(|i| (names[i].as_str(), lv[i], lv[i + 1])).collect();
        QuiverSpec::new(&lv, &arrows, &[]).expect("valid")
    }

    /// The field itself: one vertex, no arrows.
    pub fn point() -> QuiverSpec {
        QuiverSpec::new(&["1"], &[], &[]).expect("valid")
    }

    /// `k[x]/(x^m)`.
    pub fn truncated_polynomial(m: usize) -> QuiverSpec {
        let rel = vec!["x"; m].join("*");
        QuiverSpec::new(&["1"], &[("x", "1", "1")], &[rel.as_str()]).expect("valid")
    }

    /// Preprojective algebra of `A_2`: `1 <-> 2` with both 2-cycles zero.
    pub fn preprojective_a2() -> QuiverSpec {
        QuiverSpec::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &["a*b", "b*a"]).expect("valid")
    }

    /// Kronecker quiver: two arrows `1 => 2`.
    pub fn kronecker() -> QuiverSpec {
        QuiverSpec::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[]).expect("valid")
    }
}

#[cfg(test)]
mod tests {
    use super::corpus::*;
    use super::*;
    use crate::field::{Fp, Rational};

    type Q = Rational;

    fn alg(spec: QuiverSpec) -> BoundQuiverAlgebra<Q> {
        BoundQuiverAlgebra::new(spec).unwrap()
    }

    #[test]
    fn a2_file_has_dimension_three() {
        let text = r#"
            field = "Q"
            vertices = ["1", "2"]
            arrow = { name = "a", source = "1", target = "2" }
            relations = []
        "#;
        let a = parse_algebra::<Q>(text).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.n(), 2);
        let names: Vec<String> = (0..3).map(|k| a.path_name(k)).collect();
        assert_eq!(names, ["e1", "e2", "a"]);
    }

    #[test]
    fn point_algebra() {
        let a = alg(point());
        assert_eq!((a.dim(), a.n()), (1, 1));
    }

    #[test]
    fn non_composable_relation_rejected() {
        let text = "vertices = [\"1\", \"2\"]\narrow = { name = \"a\", source = \"1\", target = \"2\" }\nrelations = [\"a*a\"]\n";
        assert!(matches!(QuiverSpec::parse(text), Err(Error::NotComposable(_))));
    }

    #[test]
    fn short_relation_rejected() {
        let spec = QuiverSpec::new(&["1"], &[("x", "1", "1")], &[]).unwrap();
        assert!(matches!(spec.parse_relation("x"), Err(Error::ShortRelation(_))));
        assert!(matches!(spec.parse_relation("x*x - x"), Err(Error::ShortRelation(_))));
    }

    #[test]
    fn non_prime_field_rejected() {
        let text = "field = \"Fp:4\"\nvertices = [\"1\"]\n";
        assert!(matches!(QuiverSpec::parse(text), Err(Error::NotPrime(4))));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(QuiverSpec::parse("vertices = [\"1\"\n"), Err(Error::Syntax(_))));
        assert!(matches!(QuiverSpec::parse("colour = \"red\"\nvertices = []"), Err(Error::Syntax(_))));
        assert!(matches!(QuiverSpec::parse("field = \"Q\""), Err(Error::Syntax(_))));
    }

    #[test]
    fn truncated_polynomial_basis() {
        let basis = path_basis(&truncated_polynomial(3)).unwrap();
        assert_eq!(basis.len(), 3);
        assert_eq!(basis[2].arrows, vec![0, 0]);
    }

    #[test]
    fn polynomial_ring_is_not_admissible() {
        let spec = QuiverSpec::new(&["1"], &[("x", "1", "1")], &[]).unwrap().with_bound(10);
        assert!(matches!(path_basis(&spec), Err(Error::NotAdmissible(10))));
    }

    #[test]
    fn non_nilpotent_radical_rejected() {
        // x^2 = x^3 gives a finite quotient in which x is not nilpotent
        let spec = QuiverSpec::new(&["1"], &[("x", "1", "1")], &["x*x - x*x*x"]).unwrap();
        assert!(matches!(path_basis(&spec), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn multiplication_examples() {
        let a = alg(linear_a(2));
        let (e1, arrow) = (a.basis_vector(0), a.basis_vector(2));
        assert_eq!(a.multiply(&e1, &arrow), arrow);
        assert!(a.multiply(&arrow, &e1).iter().all(Field::is_zero));
        let k = alg(truncated_polynomial(3));
        let x = k.basis_vector(1);
        assert!(k.multiply(&x, &k.basis_vector(2)).iter().all(Field::is_zero));
        for y in 0..a.dim() {
            assert_eq!(a.multiply(&a.unit(), &a.basis_vector(y)), a.basis_vector(y));
        }
    }

    #[test]
    fn commutativity_relation() {
        // commutative square 1 -> 2 -> 4, 1 -> 3 -> 4
        let spec = QuiverSpec::new(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")], &["a*b - c*d"]).unwrap();
        let a = alg(spec);
        assert_eq!(a.dim(), 4 + 4 + 1);
        assert_eq!(a.paths_between(0, 3).len(), 1);
    }

    #[test]
    fn overlap_completion_is_order_independent() {
        let r1 = ["a*b - c*d", "b*e"];
        let r2 = ["b*e", "a*b - c*d"];
        let build = |rels: &[&str]| {
            let spec =
                QuiverSpec::new(&["1", "2", "3", "4", "5"], &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4"), ("e", "4", "5")], rels)
                    .unwrap();
            path_basis(&spec).unwrap()
        };
        let b1 = build(&r1);
        assert_eq!(b1, build(&r2));
        // a*b*e = c*d*e must vanish
        assert!(b1.iter().all(|p| p.len() < 3));
    }

    #[test]
    fn prime_field_algebra_builds() {
        let spec = preprojective_a2().with_field(FieldChoice::PrimeField(2));
        let a = BoundQuiverAlgebra::<Fp<2>>::new(spec).unwrap();
        assert_eq!(a.dim(), 4);
    }

    #[test]
    fn field_mismatch_rejected() {
        let spec = point().with_field(FieldChoice::PrimeField(3));
        assert!(BoundQuiverAlgebra::<Q>::new(spec).is_err());
    }

    #[test]
    fn spec_text_roundtrip() {
        let spec = preprojective_a2();
        let again = QuiverSpec::parse(&spec.to_text()).unwrap();
        assert_eq!(again.relations, spec.relations);
        assert_eq!(again.arrows, spec.arrows);
    }
}
