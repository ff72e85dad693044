//! Krull-Schmidt decomposition and isomorphism testing.
//!
//! Splitting uses the Fitting decomposition `M = ker phi^N + im phi^N` of an
//! endomorphism that is neither nilpotent nor invertible. Such an
//! endomorphism is searched for among the basis of `End(M)`, its shifts by
//! rational eigenvalues, and seeded random combinations. A module is
//! certified indecomposable when `End(M)` modulo the radical of its trace
//! form is one-dimensional, which is valid in characteristic zero.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hom_space, RepMorphism, Representation, SubRep};
use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{express_in_span, Matrix};

pub const DEFAULT_SEED: u64 = 0;

const RANDOM_TRIALS: usize = 48;

/// Indecomposable summands of `M`, up to isomorphism and order.
pub fn decompose<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, seed: u64) -> Result<Vec<Representation<F>>> {
    if F::CHARACTERISTIC != 0 {
        return Err(Error::NeedsCharacteristicZero);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        match split(alg, &x, &mut rng)? {
            Some((a, b)) => {
                stack.push(b);
                stack.push(a);
            }
            None => out.push(x),
        }
    }
    Ok(out)
}

fn split<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, rng: &mut ChaCha8Rng) -> Result<Option<(Representation<F>, Representation<F>)>> {
    let end = hom_space(alg, m, m);
    if end.len() <= 1 {
        return Ok(None);
    }
    if semisimple_rank(&end) == 1 {
        return Ok(None);
    }
    let mut candidates: Vec<RepMorphism<F>> = end.clone();
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<F> = (0..end.len()).map(|_| F::from_i64(rng.gen_range(-3..=3))).collect();
        candidates.push(RepMorphism::linear_combination(&end, &coeffs).expect("nonempty"));
    }
    let id = RepMorphism::identity(m);
    for phi in &candidates {
        if let Some(parts) = fitting(alg, m, phi) {
            return Ok(Some(parts));
        }
        for c in rational_eigenvalues(phi) {
            let shifted = phi.add(&id.scale(&c.neg()));
            if let Some(parts) = fitting(alg, m, &shifted) {
                return Ok(Some(parts));
            }
        }
    }
    Err(Error::DecompositionFailed(format!(
        "no splitting endomorphism found for a module of dimension vector {:?} whose endomorphism ring is not certified local",
        m.dims()
    )))
}

/// Rank of the trace form `(x, y) |-> tr(xy)` on `End(M)`, which equals
/// `dim End(M)/rad End(M)` in characteristic zero.
fn semisimple_rank<F: Field>(end: &[RepMorphism<F>]) -> usize {
    let k = end.len();
    let gram = Matrix::from_fn(k, k, |i, j| end[i].maps.iter().zip(&end[j].maps).fold(F::zero(), |acc, (x, y)| acc.add(&x.mul(y).trace())));
    gram.rank()
}

fn fitting<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, phi: &RepMorphism<F>) -> Option<(Representation<F>, Representation<F>)> {
    let n = m.total_dim();
    let power: Vec<Matrix<F>> = phi.maps.iter().map(|x| x.pow(n)).collect();
    let ker = SubRep { basis: power.iter().map(Matrix::left_kernel).collect() };
    let im = SubRep { basis: power.iter().map(Matrix::row_space).collect() };
    if ker.dims().iter().all(|&d| d == 0) || im.dims().iter().all(|&d| d == 0) {
        return None;
    }
    Some((ker.restrict(alg, m).0, im.restrict(alg, m).0))
}

/// Rational roots of the local minimal polynomials of `phi` at each
/// standard vector. Empty outside characteristic zero.
fn rational_eigenvalues<F: Field>(phi: &RepMorphism<F>) -> Vec<F> {
    let total = Matrix::block_diag(&phi.maps);
    let d = total.rows();
    let mut roots: Vec<BigRational> = Vec::new();
    for i in 0..d {
        let mut v = vec![F::zero(); d];
        v[i] = F::one();
        let mut krylov = vec![v];
        let coeffs = loop {
            let next = total.apply_row(krylov.last().unwrap());
            if let Some(c) = express_in_span(d, &krylov, &next) {
                break c;
            }
            krylov.push(next);
        };
        // x^k - sum c_i x^i
        let Some(mut poly) = coeffs.iter().map(|c| c.to_rational().map(|r| -r)).collect::<Option<Vec<_>>>() else { return Vec::new() };
        poly.push(BigRational::one());
        for r in rational_roots(&poly) {
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    roots.iter().filter_map(|r| F::from_ratio(r.numer(), r.denom())).collect()
}

const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&n| n <= DIVISOR_LIMIT)?;
    let mut out = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if n % k == 0 {
            out.push(BigInt::from(k));
            if k * k != n {
                out.push(BigInt::from(n / k));
            }
        }
        k += 1;
    }
    Some(out)
}

/// Rational roots of `sum poly[i] x^i` by the rational root theorem.
fn rational_roots(poly: &[BigRational]) -> Vec<BigRational> {
    let lcm = poly.iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints: Vec<BigInt> = poly.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let ints = &ints[low..];
    if ints.len() < 2 {
        return roots;
    }
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else { return roots };
    for p in &ps {
        for q in &qs {
            for sign in [1, -1] {
                let r = BigRational::new(p * sign, q.clone());
                if roots.contains(&r) {
                    continue;
                }
                let value = ints.iter().rev().fold(BigRational::zero(), |acc, c| acc * &r + BigRational::from_integer(c.clone()));
                if value.is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

/// Whether `M` and `N` are isomorphic. A positive answer is certified by
/// an explicit inverse. A negative answer is exact when the dimension
/// vectors differ or `Hom(M, N) = 0`, and otherwise holds with high
/// probability over the seeded random search.
pub fn is_isomorphic<F: Field>(alg: &BoundQuiverAlgebra<F>, m: &Representation<F>, n: &Representation<F>, seed: u64) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    if m.is_zero() || m == n {
        return true;
    }
    let homs = hom_space(alg, m, n);
    if homs.is_empty() {
        return false;
    }
    if homs.iter().any(|f| f.inverse().is_some()) {
        return true;
    }
    if homs.len() == 1 {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..RANDOM_TRIALS).any(|_| {
        let coeffs: Vec<F> = (0..homs.len()).map(|_| F::from_i64(rng.gen_range(-1000..=1000))).collect();
        RepMorphism::linear_combination(&homs, &coeffs).and_then(|f| f.inverse()).is_some()
    })
}

/// Groups modules into isomorphism classes with multiplicities, in order of
/// first appearance.
pub fn summand_multiset<F: Field>(alg: &BoundQuiverAlgebra<F>, parts: Vec<Representation<F>>, seed: u64) -> Vec<(Representation<F>, usize)> {
    let mut out: Vec<(Representation<F>, usize)> = Vec::new();
    for p in parts {
        match out.iter_mut().find(|(q, _)| is_isomorphic(alg, q, &p, seed)) {
            Some(entry) => entry.1 += 1,
            None => out.push((p, 1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::corpus;
    use crate::field::{Fp, Rational};

    type Q = Rational;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn regular_module_of_a2() {
        let a = BoundQuiverAlgebra::<Q>::new(corpus::linear_a(2)).unwrap();
        let parts = decompose(&a, &Representation::regular(&a), 0).unwrap();
        assert_eq!(parts.len(), 2);
        let p1 = Representation::projective(&a, 0);
        let p2 = Representation::projective(&a, 1);
        assert!(parts.iter().any(|x| is_isomorphic(&a, x, &p1, 0)));
        assert!(parts.iter().any(|x| is_isomorphic(&a, x, &p2, 0)));
    }

    #[test]
    fn repeated_simple_splits() {
        let a = BoundQuiverAlgebra::<Q>::new(corpus::linear_a(2)).unwrap();
        let s = Representation::simple(&a, 0);
        let m = Representation::direct_sum(&a, &[&s, &s, &s]);
        let parts = decompose(&a, &m, 7).unwrap();
        assert_eq!(parts.len(), 3);
        let groups = summand_multiset(&a, parts, 0);
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].1, 3);
    }

    #[test]
    fn twisted_sum_splits() {
        // P1 + S2 over A_3 with a generic change of basis
        let a = BoundQuiverAlgebra::<Q>::new(corpus::linear_a(3)).unwrap();
        let p1 = Representation::projective(&a, 0);
        let s1 = Representation::simple(&a, 0);
        let p2 = Representation::projective(&a, 1);
        let m = Representation::direct_sum(&a, &[&p1, &s1, &p2]);
        let parts = decompose(&a, &m, 3).unwrap();
        assert_eq!(parts.len(), 3);
        let dims: Vec<usize> = parts.iter().map(Representation::total_dim).collect();
        assert_eq!(dims.iter().sum::<usize>(), 6);
    }

    #[test]
    fn local_modules_stay_whole() {
        let k = BoundQuiverAlgebra::<Q>::new(corpus::truncated_polynomial(3)).unwrap();
        let a = Representation::regular(&k);
        assert_eq!(decompose(&k, &a, 0).unwrap().len(), 1);
    }

    #[test]
    fn prime_fields_are_refused() {
        let a = BoundQuiverAlgebra::<Fp<5>>::new(corpus::linear_a(2).with_field(crate::field::FieldChoice::PrimeField(5))).unwrap();
        assert!(matches!(decompose(&a, &Representation::regular(&a), 0), Err(Error::NeedsCharacteristicZero)));
    }

    #[test]
    fn rational_root_search() {
        // (x - 2)(x + 1/3) x = x^3 - 5/3 x^2 - 2/3 x
        let poly = vec![q(0), BigRational::new((-2).into(), 3.into()), BigRational::new((-5).into(), 3.into()), q(1)];
        let mut roots = rational_roots(&poly);
        roots.sort();
        assert_eq!(roots, vec![BigRational::new((-1).into(), 3.into()), q(0), q(2)]);
        assert!(rational_roots(&[q(1), q(0), q(1)]).is_empty());
    }

    #[test]
    fn isomorphism_under_base_change() {
        let a = BoundQuiverAlgebra::<Q>::new(corpus::kronecker()).unwrap();
        let m = Representation::new(&a, vec![1, 1], vec![Matrix::from_i64(1, 1, &[1]), Matrix::from_i64(1, 1, &[2])]).unwrap();
        let n = Representation::new(&a, vec![1, 1], vec![Matrix::from_i64(1, 1, &[3]), Matrix::from_i64(1, 1, &[6])]).unwrap();
        let o = Representation::new(&a, vec![1, 1], vec![Matrix::from_i64(1, 1, &[1]), Matrix::from_i64(1, 1, &[3])]).unwrap();
        assert!(is_isomorphic(&a, &m, &n, 0));
        assert!(!is_isomorphic(&a, &m, &o, 0));
    }
}
