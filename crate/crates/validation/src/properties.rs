//! Property tests for the algebraic laws the library relies on.

use crate as common;

use cliffgen::group::{self, rho_matrix, twisted_adjoint, versor_inverse};
use cliffgen::involutions::{conjugation, grade_involution, quadratic_norm, reversion};
use cliffgen::octonion::{cd_multiply, oct_conj, oct_norm, Octonion};
use cliffgen::random;
use cliffgen::representation::generator_matrices;
use cliffgen::scalars::{quat_conj, quat_main_involution, quat_mul, quat_norm_sq, quat_reversion, ExactQuaternion};
use cliffgen::{Blade, Dyadic, Multivector, Signature};
use proptest::prelude::*;

fn signature(max_n: usize) -> impl Strategy<Value = Signature> {
    (0..=max_n).prop_flat_map(|n| (0..=n).prop_map(move |p| Signature::new(p, n - p).unwrap()))
}

fn dyadic() -> impl Strategy<Value = Dyadic> {
    (-16i64..=16, 0u32..=3).prop_map(|(n, e)| Dyadic::new(n, e))
}

fn element(sig: Signature) -> impl Strategy<Value = Multivector> {
    let blades = 1u32 << sig.n();
    prop::collection::vec((0..blades, dyadic()), 0..6).prop_map(move |terms| {
        Multivector::from_terms(sig, terms.into_iter().map(|(m, c)| (Blade::from_mask(m), c))).unwrap()
    })
}

fn with_elements(max_n: usize, count: usize) -> impl Strategy<Value = (Signature, Vec<Multivector>)> {
    signature(max_n).prop_flat_map(move |s| (Just(s), prop::collection::vec(element(s), count)))
}

fn quaternion() -> impl Strategy<Value = ExactQuaternion> {
    (dyadic(), dyadic(), dyadic(), dyadic()).prop_map(|(a, b, c, d)| ExactQuaternion::new(a, b, c, d))
}

fn octonion(split: bool) -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(dyadic()).prop_map(move |c| Octonion::from_components(c, split))
}

fn quat_parts(q: &ExactQuaternion) -> [Dyadic; 4] {
    q.components().map(Clone::clone)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn product_matches_rewriting_oracle((s, xs) in with_elements(5, 2)) {
        prop_assert_eq!(&xs[0] * &xs[1], common::naive_product(s, &xs[0], &xs[1]));
    }

    #[test]
    fn product_is_associative((_, xs) in with_elements(5, 3)) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
    }

    #[test]
    fn product_distributes((_, xs) in with_elements(4, 3)) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    }

    #[test]
    fn involution_laws((_, xs) in with_elements(5, 2)) {
        let (x, y) = (&xs[0], &xs[1]);
        let xy = x * y;
        prop_assert_eq!(grade_involution(&grade_involution(x)), x.clone());
        prop_assert_eq!(reversion(&reversion(x)), x.clone());
        prop_assert_eq!(conjugation(&conjugation(x)), x.clone());
        prop_assert_eq!(grade_involution(&xy), &grade_involution(x) * &grade_involution(y));
        prop_assert_eq!(reversion(&xy), &reversion(y) * &reversion(x));
        prop_assert_eq!(conjugation(&xy), &conjugation(y) * &conjugation(x));
        prop_assert_eq!(conjugation(x), grade_involution(&reversion(x)));
    }

    #[test]
    fn grade_parts_sum_to_element((s, xs) in with_elements(5, 1)) {
        let x = &xs[0];
        let sum = (0..=s.n()).fold(Multivector::zero(s), |acc, k| &acc + &x.grade_project(k));
        prop_assert_eq!(sum, x.clone());
    }

    #[test]
    fn text_round_trip((s, xs) in with_elements(8, 1)) {
        let x = &xs[0];
        prop_assert_eq!(Multivector::parse(s, &x.to_text()).unwrap(), x.clone());
    }

    #[test]
    fn dyadic_text_round_trip(d in dyadic()) {
        prop_assert_eq!(d.to_string().parse::<Dyadic>().unwrap(), d.clone());
        prop_assert_eq!(d.to_pow2_text().parse::<Dyadic>().unwrap(), d);
    }

    #[test]
    fn quaternion_laws(x in quaternion(), y in quaternion(), z in quaternion()) {
        let xy = quat_mul(&x, &y);
        prop_assert_eq!(quat_parts(&xy), common::hamilton(quat_parts(&x), quat_parts(&y)));
        prop_assert_eq!(quat_mul(&xy, &z), quat_mul(&x, &quat_mul(&y, &z)));
        prop_assert_eq!(quat_conj(&xy), quat_mul(&quat_conj(&y), &quat_conj(&x)));
        prop_assert_eq!(quat_norm_sq(&xy), &quat_norm_sq(&x) * &quat_norm_sq(&y));
        prop_assert_eq!(quat_conj(&x), quat_reversion(&quat_main_involution(&x)));
    }

    #[test]
    fn octonion_norm_is_multiplicative(split in any::<bool>(), seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let x = cliffgen::octonion::random_octonion(&mut rng, split);
        let y = cliffgen::octonion::random_octonion(&mut rng, split);
        let xy = cd_multiply(&x, &y).unwrap();
        prop_assert_eq!(oct_norm(&x), common::octonion_norm(&x.components(), split));
        prop_assert_eq!(oct_norm(&xy), &oct_norm(&x) * &oct_norm(&y));
    }

    #[test]
    fn octonions_are_alternative(x in octonion(false), y in octonion(false)) {
        let xx = cd_multiply(&x, &x).unwrap();
        prop_assert_eq!(cd_multiply(&xx, &y).unwrap(), cd_multiply(&x, &cd_multiply(&x, &y).unwrap()).unwrap());
        prop_assert_eq!(cd_multiply(&y, &xx).unwrap(), cd_multiply(&cd_multiply(&y, &x).unwrap(), &x).unwrap());
        let xc = oct_conj(&x);
        prop_assert_eq!(oct_conj(&oct_conj(&x)), x.clone());
        prop_assert_eq!(cd_multiply(&x, &xc).unwrap(), Octonion::one(false).scale(&oct_norm(&x)));
    }

    #[test]
    fn split_octonions_are_alternative(x in octonion(true), y in octonion(true)) {
        let xx = cd_multiply(&x, &x).unwrap();
        prop_assert_eq!(cd_multiply(&xx, &y).unwrap(), cd_multiply(&x, &cd_multiply(&x, &y).unwrap()).unwrap());
        prop_assert_eq!(oct_norm(&cd_multiply(&x, &y).unwrap()), &oct_norm(&x) * &oct_norm(&y));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn representation_is_multiplicative((s, xs) in with_elements(6, 2)) {
        let rep = generator_matrices(s).unwrap();
        let (x, y) = (&xs[0], &xs[1]);
        let mx = rep.element_matrix(x).unwrap();
        let my = rep.element_matrix(y).unwrap();
        prop_assert_eq!(rep.element_matrix(&(x * y)).unwrap(), mx.try_mul(&my).unwrap());
        prop_assert_eq!(rep.element_matrix(&(x + y)).unwrap(), mx.try_add(&my).unwrap());
    }

    #[test]
    fn versor_group_laws(s in signature(5), seed in any::<u64>()) {
        prop_assume!(s.n() > 0);
        let mut rng = random::rng(seed);
        let (u, _) = random::versor(&mut rng, s, 2).unwrap();
        let (v, _) = random::versor(&mut rng, s, 3).unwrap();
        let one = Multivector::one(s);
        prop_assert_eq!(&versor_inverse(&u).unwrap() * &u, one.clone());
        prop_assert_eq!(&u * &versor_inverse(&u).unwrap(), one);
        let uv = &u * &v;
        let ruv = rho_matrix(&uv).unwrap();
        prop_assert_eq!(ruv, rho_matrix(&u).unwrap().try_mul(&rho_matrix(&v).unwrap()).unwrap());
        prop_assert!(group::is_pin(&u) && group::is_spin(&u));
        prop_assert!(group::is_pin(&v) && !group::is_spin(&v));
        prop_assert!(group::is_pin(&uv) && !group::is_spin(&uv));
        prop_assert_eq!(quadratic_norm(&uv).as_scalar().unwrap().abs(), Dyadic::from_int(1));
    }

    #[test]
    fn twisted_adjoint_preserves_the_form(s in signature(5), seed in any::<u64>()) {
        prop_assume!(s.n() > 0);
        let mut rng = random::rng(seed);
        let (u, _) = random::versor(&mut rng, s, 3).unwrap();
        let Some(x) = random::invertible_vector(&mut rng, s) else { return Ok(()) };
        let y = twisted_adjoint(&u, &x).unwrap();
        prop_assert!(y.is_vector());
        prop_assert_eq!((&y * &y).as_scalar(), (&x * &x).as_scalar());
    }
}
