mod common;

use common::{algebra, brute_force_isomorphic, group, random_module};
use grpcoh_core::cohomology::ext_dims;
use grpcoh_core::group::{
    direct_product, p_prime_core, quotient_group, subgroup_generated, sylow_subgroup,
};
use grpcoh_core::module::{
    are_isomorphic, double_dual_evaluation, dual_module, hom_space, is_projective, syzygy,
    tensor_diagonal,
};
use grpcoh_core::{build_group, factor_xq_minus_1, FpMatrix, FpPoly, ModuleRep, PrimeField};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PRIMES: [u32; 5] = [2, 3, 5, 7, 97];

fn matrix() -> impl Strategy<Value = FpMatrix> {
    (prop::sample::select(PRIMES.to_vec()), 1usize..7, 1usize..7).prop_flat_map(|(p, r, c)| {
        prop::collection::vec(0..p, r * c)
            .prop_map(move |data| FpMatrix::from_vec(PrimeField::new(p).unwrap(), r, c, data))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(a in matrix()) {
        let k = a.kernel_basis();
        prop_assert_eq!(a.rank() + k.cols(), a.cols());
        prop_assert_eq!(a.rank(), a.transpose().rank());
        prop_assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn solutions_solve(a in matrix(), seed in any::<u64>()) {
        let f = PrimeField::new(a.field().p()).unwrap();
        let x: Vec<u32> = (0..a.cols()).map(|i| f.reduce(seed.rotate_left(i as u32 * 7))).collect();
        let b = a.mul_vec(&x);
        let y = a.solve_linear(&b).unwrap();
        prop_assert_eq!(a.mul_vec(&y), b);
    }

    #[test]
    fn inverse_round_trip(a in matrix()) {
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(a.mul(&inv), FpMatrix::identity(a.field(), a.rows()));
        } else {
            prop_assert!(!a.is_square() || a.rank() < a.rows());
        }
    }

    #[test]
    fn cyclotomic_factors_multiply_back(p in prop::sample::select(PRIMES.to_vec()), q in 1usize..40) {
        prop_assume!(q % p as usize != 0);
        let f = PrimeField::new(p).unwrap();
        let factors = factor_xq_minus_1(q, p).unwrap();
        let product = factors.iter().fold(FpPoly::new(f, vec![1]), |acc, g| acc.mul(g));
        prop_assert_eq!(product, FpPoly::x_pow_minus_one(f, q));
    }

    #[test]
    fn random_module_invariants(seed in any::<u64>(), klein in any::<bool>()) {
        let alg = algebra(if klein { "Klein" } else { "C4" }, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&alg, &mut rng);
        prop_assert!(m.is_representation());
        prop_assert!(double_dual_evaluation(&m).is_bijective());
        let report = is_projective(&m);
        // projective and injective coincide over group algebras
        prop_assert_eq!(report.projective, report.injective);
        prop_assert_eq!(report.projective, is_projective(&dual_module(&m)).projective);
        if report.projective {
            prop_assert_eq!(m.dim() % 4, 0);
        }
        let t = tensor_diagonal(&m, &ModuleRep::trivial(&alg));
        prop_assert!(are_isomorphic(&t, &m).unwrap());
        let ends = hom_space(&m, &m);
        prop_assert!(!ends.is_empty() || m.dim() == 0);
    }
}

#[test]
fn product_builders_are_isomorphic_to_expected_groups() {
    for (a, b, expect) in [
        ("C2xC3", "C6", true),
        ("C3xC4", "C12", true),
        ("Klein", "C2xC2", true),
        ("Klein", "C4", false),
        ("S3", "C6", false),
        ("S3xC2", "C2xS3", true),
        ("C2xC6", "C12", false),
        ("C2xC4", "C4xC2", true),
    ] {
        assert_eq!(
            brute_force_isomorphic(&group(a), &group(b)),
            expect,
            "{a} vs {b}"
        );
    }
    let p = direct_product(&build_group("C3").unwrap(), &build_group("C5").unwrap()).unwrap();
    assert!(brute_force_isomorphic(&p, &group("C15")));
}

#[test]
fn quotients_and_sylows_have_the_right_shape() {
    let s3 = group("S3");
    let core = p_prime_core(&s3, 2);
    assert_eq!(core.order(), 3);
    let (q, _) = quotient_group(&s3, &core).unwrap();
    assert!(brute_force_isomorphic(&q, &group("C2")));
    for (spec, p, order) in [
        ("S3", 2, 2),
        ("S3", 3, 3),
        ("S3xC2", 2, 4),
        ("C12", 2, 4),
        ("C9", 3, 9),
        ("C10", 3, 1),
    ] {
        let g = group(spec);
        let s = sylow_subgroup(&g, p);
        assert_eq!(s.order(), order, "{spec}@{p}");
        let again = subgroup_generated(&g, s.members()).unwrap();
        assert_eq!(again.order(), order);
    }
    let (p2, _) = sylow_subgroup(&group("S3xC2"), 2).as_group();
    assert!(brute_force_isomorphic(&p2, &group("Klein")));
}

#[test]
fn cyclic_cohomology_is_one_in_each_degree() {
    for (spec, p) in [
        ("C2", 2),
        ("C3", 3),
        ("C4", 2),
        ("C5", 5),
        ("C8", 2),
        ("C9", 3),
        ("C25", 5),
        ("C6", 2),
        ("C6", 3),
    ] {
        assert_eq!(ext_dims(&group(spec), p, 7).unwrap(), [1; 8], "{spec}@{p}");
    }
}

#[test]
fn klein_syzygies_are_periodic_up_to_duality() {
    let alg = algebra("Klein", 2);
    let k = ModuleRep::trivial(&alg);
    for n in 1..=3 {
        let down = syzygy(&k, -n).unwrap();
        assert!(are_isomorphic(&down, &dual_module(&syzygy(&k, n).unwrap())).unwrap());
        assert_eq!(down.dim(), 2 * n as usize + 1);
        let back = syzygy(&down, n).unwrap();
        assert!(are_isomorphic(&back, &k).unwrap(), "Omega^{n} Omega^-{n} k");
    }
}
