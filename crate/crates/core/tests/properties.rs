use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use smoothmod::catalog::{random_invertible, random_matrix, rep_catalog};
use smoothmod::exact::{
    adjunction_counit_b, adjunction_unit_a, jordan_type, loop_omega, stable_hom, suspension_t, u_split_search,
    Flavor, SplitKind,
};
use smoothmod::fairness::sl2::{sl2_depth_bruteforce_with, sl2_depth_intersect, sl2_fair_refine};
use smoothmod::group::{all_subgroups, catalog, double_cosets, right_cosets};
use smoothmod::matrix::{linear_solve, Subspace};
use smoothmod::rep::{frobenius_lower, hom_space, lower_inverse, rep_induce, GMap};
use smoothmod::{Exec, FiniteField, Matrix, Subgroup};

fn field(i: usize) -> FiniteField {
    let (p, k) = [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (7, 1)][i];
    FiniteField::new(p, k, None).unwrap()
}

fn group(i: usize) -> smoothmod::GroupRef {
    let names = ["C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8", "A4", "C6"];
    catalog::by_name(names[i]).unwrap()
}

fn matrix(f: &FiniteField, rows: usize, cols: usize, seed: u64) -> Matrix {
    random_matrix(f, rows, cols, &mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(fi in 0usize..7, a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
        let f = field(fi);
        let q = f.order();
        let (a, b, c) = (f.element(a % q), f.element(b % q), f.element(c % q));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.pow(a, (q - 1) as u64), f.one());
        }
    }

    #[test]
    fn rank_nullity(fi in 0usize..7, r in 1usize..7, c in 1usize..7, seed in any::<u64>()) {
        let f = field(fi);
        let m = matrix(&f, r, c, seed);
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), c);
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(|s| s.is_zero()));
        }
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn product_transpose_and_inverse(fi in 0usize..7, n in 1usize..6, seed in any::<u64>()) {
        let f = field(fi);
        let a = matrix(&f, n, n, seed);
        let b = matrix(&f, n, n, seed ^ 0x9e37);
        prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
        let p = random_invertible(&f, n, &mut ChaCha8Rng::seed_from_u64(seed));
        let pi = p.inverse().unwrap();
        prop_assert_eq!(p.mul(&pi), Matrix::identity(&f, n));
    }

    #[test]
    fn linear_solve_solves(fi in 0usize..7, r in 1usize..6, c in 1usize..6, seed in any::<u64>()) {
        let f = field(fi);
        let a = matrix(&f, r, c, seed);
        let x = matrix(&f, c, 2, seed.wrapping_add(1));
        let b = a.mul(&x);
        let sol = linear_solve(&a, &b).unwrap().expect("consistent by construction");
        prop_assert_eq!(a.mul(&sol), b);
    }

    #[test]
    fn subspace_sum_and_intersection(fi in 0usize..4, n in 1usize..6, seed in any::<u64>()) {
        let f = field(fi);
        let u = Subspace::from_rows(&matrix(&f, 2, n, seed));
        let w = Subspace::from_rows(&matrix(&f, 2, n, seed ^ 7));
        prop_assert_eq!(u.sum(&w).dim() + u.intersect(&w).dim(), u.dim() + w.dim());
        prop_assert!(u.intersect(&w).is_subspace_of(&u));
        for v in u.basis_vectors() {
            prop_assert!(u.reduce(&v).iter().all(|s| s.is_zero()));
        }
    }

    #[test]
    fn cosets_partition(gi in 0usize..9) {
        let g = group(gi);
        let whole = Subgroup::whole(&g);
        for u in all_subgroups(&whole).unwrap() {
            prop_assert_eq!(right_cosets(&whole, &u).len() * u.order(), g.order());
            // Lagrange and double coset sizes
            let reps = double_cosets(&whole, &u, &u);
            let total: usize = reps
                .iter()
                .map(|&r| {
                    let c = u.intersect(&u.conjugate(g.inv(r)));
                    u.order() * u.order() / c.order()
                })
                .sum();
            prop_assert_eq!(total, g.order());
        }
    }

    #[test]
    fn induced_dimension_and_frobenius(gi in 0usize..9, fi in 0usize..4, ui in 0usize..16, seed in any::<u64>()) {
        let g = group(gi);
        let f = field(fi);
        let whole = Subgroup::whole(&g);
        let subs = all_subgroups(&whole).unwrap();
        let u = &subs[ui % subs.len()];
        let ws = rep_catalog(u, &f, 2);
        let vs = rep_catalog(&whole, &f, 3);
        let w = &ws[(seed as usize) % ws.len()].rep;
        let v = &vs[(seed as usize / 7) % vs.len()].rep;
        let ind = rep_induce(w, &whole).unwrap();
        prop_assert_eq!(ind.rep.dim(), w.dim() * u.index_in(&whole));
        prop_assert!(ind.rep.validate().is_ok());
        let vu = v.restrict(u).unwrap();
        let small = hom_space(w, &vu).unwrap();
        prop_assert_eq!(small.dim(), hom_space(&ind.rep, v).unwrap().dim());
        for b in small.basis() {
            let psi = GMap::new(w, &vu, b).unwrap();
            let big = frobenius_lower(&ind, v, &psi).unwrap();
            prop_assert!(GMap::new(&ind.rep, v, big.matrix().clone()).is_ok());
            prop_assert_eq!(lower_inverse(&ind, &big).unwrap(), psi);
        }
    }

    #[test]
    fn adjunction_sequences_are_admissible(gi in 0usize..9, fi in 0usize..4, ui in 0usize..16, vi in 0usize..7) {
        let g = group(gi);
        let f = field(fi);
        let whole = Subgroup::whole(&g);
        let subs = all_subgroups(&whole).unwrap();
        let u = &subs[ui % subs.len()];
        let xs = rep_catalog(&whole, &f, 2);
        let x = &xs[vi % xs.len()].rep;
        let a = adjunction_unit_a(x, u).unwrap();
        let b = adjunction_counit_b(x, u).unwrap();
        prop_assert!(a.witness.verify(&a.map, u));
        prop_assert!(b.witness.verify(&b.map, u));
        prop_assert!(u_split_search(&a.map, u, SplitKind::Retraction).unwrap().is_some());
        prop_assert!(u_split_search(&b.map, u, SplitKind::Section).unwrap().is_some());
        let (t, _) = suspension_t(x, u).unwrap();
        let (om, _) = loop_omega(x, u).unwrap();
        prop_assert_eq!(t.dim(), x.dim() * (u.index_in(&whole) - 1));
        prop_assert_eq!(om.dim(), t.dim());
        let s1 = stable_hom(x, x, u, Flavor::Injective).unwrap();
        let s2 = stable_hom(x, x, u, Flavor::Projective).unwrap();
        prop_assert_eq!(s1.stable_dim, s2.stable_dim);
        prop_assert_eq!(s1.stable_dim + s1.factoring_dim, s1.total_dim);
    }

    #[test]
    fn jordan_type_invariant_under_conjugation(fi in 0usize..4, sizes in proptest::collection::vec(1usize..4, 1..4), seed in any::<u64>()) {
        let f = field(fi);
        let mut m = Matrix::zeros(&f, 0, 0);
        for &s in &sizes {
            m = m.block_diag(&smoothmod::rep::jordan_block(&f, s));
        }
        let p = random_invertible(&f, m.rows(), &mut ChaCha8Rng::seed_from_u64(seed));
        let conj = p.mul(&m).mul(&p.inverse().unwrap());
        let mut expected = sizes.clone();
        expected.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(jordan_type(&conj).unwrap(), expected);
    }

    #[test]
    fn depth_law_shape(m in 1u32..8, n in 1u32..8, a in 0u32..6) {
        let t = sl2_depth_intersect(m, n, a).unwrap();
        prop_assert!(t.upper >= t.torus && t.torus >= t.lower);
        prop_assert!(t.lower >= m && t.torus >= n.max(m));
        let cert = sl2_fair_refine(m, n).unwrap();
        prop_assert_eq!(cert.n_prime, m.max(n) + 1);
        prop_assert!(cert.holds_at(a));
        let refined = sl2_depth_intersect(m, cert.n_prime, a).unwrap();
        prop_assert!(refined.dominates(t) && refined.torus > t.torus);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn depth_law_matches_enumeration(pi in 0usize..2, m in 1u32..3, n in 1u32..3, a in 0u32..2) {
        let p = [2u32, 3][pi];
        let big_n = if p == 2 { 5 } else { 4 };
        prop_assume!(n + 2 * a <= big_n && m + 2 * a <= big_n && m < big_n);
        let brute = sl2_depth_bruteforce_with(p, big_n, m, n, a, 1 << 22, Exec::default()).unwrap();
        prop_assert_eq!(brute, sl2_depth_intersect(m, n, a).unwrap());
    }
}
