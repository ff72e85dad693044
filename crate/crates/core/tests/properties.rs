use proptest::prelude::*;

use tautilt_core::algebra::corpus;
use tautilt_core::modrep::{costable_hom_dim, decompose, ext1_dim, hom_dim, is_isomorphic, tau};
use tautilt_core::tautilt::{is_tau_rigid_pair, module_g_vector, mutate, Direction};
use tautilt_core::{BoundQuiverAlgebra, Field, Fp, Matrix, QuiverSpec, Rational, Representation, TauRigidPair, TauTiltingPair};

type Q = Rational;

fn algebra(spec: QuiverSpec) -> BoundQuiverAlgebra<Q> {
    BoundQuiverAlgebra::new(spec).unwrap()
}

fn matrix(rows: usize, cols: usize, entries: &[i64]) -> Matrix<Q> {
    Matrix::from_i64(rows, cols, &entries[..rows * cols])
}

/// A representation of a quiver without relations with the given dimensions.
fn free_rep(alg: &BoundQuiverAlgebra<Q>, dims: &[usize], entries: &[i64]) -> Representation<Q> {
    let mut at = 0;
    let maps = alg
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.source], dims[a.target]);
            let m = matrix(r, c, &entries[at..]);
            at += r * c;
            m
        })
        .collect();
    Representation::new(alg, dims.to_vec(), maps).unwrap()
}

fn a3_rep() -> impl Strategy<Value = (Vec<usize>, Vec<i64>)> {
    (prop::collection::vec(0usize..=2, 3), prop::collection::vec(-2i64..=2, 8))
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        _ => (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity(rows in 0usize..5, cols in 0usize..5, entries in prop::collection::vec(-3i64..=3, 25)) {
        let m = matrix(rows, cols, &entries);
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), cols);
        prop_assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn inverse_is_two_sided(n in 1usize..5, entries in prop::collection::vec(-3i64..=3, 16)) {
        let m = matrix(n, n, &entries);
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(n));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(n));
            }
            None => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn prime_field_inverses(a in 1i64..1000) {
        let x = Fp::<7>::from_i64(a);
        if !x.is_zero() {
            prop_assert_eq!(x.mul(&x.inv().unwrap()), Fp::<7>::one());
        }
    }

    #[test]
    fn multiplication_is_associative(spec in 0usize..4, i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let alg = algebra([corpus::linear_a(3), corpus::truncated_polynomial(3), corpus::preprojective_a2(), corpus::kronecker()][spec].clone());
        let d = alg.dim();
        let (x, y, z) = (alg.basis_vector(i % d), alg.basis_vector(j % d), alg.basis_vector(k % d));
        prop_assert_eq!(alg.multiply(&alg.multiply(&x, &y), &z), alg.multiply(&x, &alg.multiply(&y, &z)));
        prop_assert_eq!(alg.multiply(&alg.unit(), &x), x.clone());
        prop_assert_eq!(alg.multiply(&x, &alg.unit()), x);
    }

    #[test]
    fn decomposition_is_a_direct_sum((dims, entries) in a3_rep()) {
        let alg = algebra(corpus::linear_a(3));
        let m = free_rep(&alg, &dims, &entries);
        let parts = decompose(&alg, &m, 0).unwrap();
        for p in &parts {
            prop_assert_eq!(decompose(&alg, p, 0).unwrap().len(), 1);
        }
        let sum = Representation::direct_sum(&alg, &parts.iter().collect::<Vec<_>>());
        prop_assert!(is_isomorphic(&alg, &m, &sum, 0));
    }

    #[test]
    fn hom_is_additive((d1, e1) in a3_rep(), (d2, e2) in a3_rep(), (d3, e3) in a3_rep()) {
        let alg = algebra(corpus::linear_a(3));
        let (x, y, z) = (free_rep(&alg, &d1, &e1), free_rep(&alg, &d2, &e2), free_rep(&alg, &d3, &e3));
        let xy = Representation::direct_sum(&alg, &[&x, &y]);
        prop_assert_eq!(hom_dim(&alg, &xy, &z), hom_dim(&alg, &x, &z) + hom_dim(&alg, &y, &z));
        prop_assert_eq!(hom_dim(&alg, &z, &xy), hom_dim(&alg, &z, &x) + hom_dim(&alg, &z, &y));
    }

    #[test]
    fn auslander_reiten_formula((d1, e1) in a3_rep(), (d2, e2) in a3_rep()) {
        let alg = algebra(corpus::linear_a(3));
        let (x, y) = (free_rep(&alg, &d1, &e1), free_rep(&alg, &d2, &e2));
        prop_assert_eq!(ext1_dim(&alg, &x, &y), costable_hom_dim(&alg, &y, &tau(&alg, &x)));
    }

    #[test]
    fn module_text_round_trip((dims, entries) in a3_rep()) {
        let alg = algebra(corpus::linear_a(3));
        let m = free_rep(&alg, &dims, &entries);
        prop_assert_eq!(Representation::parse(&alg, &m.to_text(&alg)).unwrap(), m);
    }

    #[test]
    fn mutation_walks(spec in 0usize..3, steps in prop::collection::vec(0usize..3, 1..8)) {
        let alg = algebra([corpus::linear_a(3), corpus::preprojective_a2(), corpus::kronecker()][spec].clone());
        let n = alg.n();
        let mut t = TauTiltingPair::top(&alg);
        for i in steps {
            let i = i % n;
            let (u, dir) = mutate(&alg, &t, i, 0).unwrap();
            prop_assert_eq!(det(&u.g_matrix()).abs(), 1);
            prop_assert_eq!(u.len(), n);
            // H^0 side: a tau-rigid pair whose module g-vectors agree with the complexes
            prop_assert!(is_tau_rigid_pair(&alg, &u.module(&alg), &u.projective_part()));
            for s in u.summands() {
                if s.shifted_projective().is_none() {
                    prop_assert_eq!(module_g_vector(&alg, &s.module), s.g.clone());
                }
            }
            let old = t.key();
            let j = u.summands().iter().position(|s| !old.contains(&s.g)).unwrap();
            let (back, back_dir) = mutate(&alg, &u, j, 0).unwrap();
            prop_assert_eq!(back.key(), old);
            prop_assert_ne!(dir, back_dir);
            prop_assert_eq!(dir == Direction::Down, tautilt_core::tautilt::leq(&alg, &u, &t));
            let json = u.to_json(&alg);
            prop_assert_eq!(TauRigidPair::from_json(&alg, &json, 0).unwrap().key(), u.key());
            t = u;
        }
    }
}
