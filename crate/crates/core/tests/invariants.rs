use axetlab_core::axes::{miyamoto, verify_axis};
use axetlab_core::axets::AbstractAxet;
use axetlab_core::catalog::{self, make_generic_skew, SkewConstants};
use axetlab_core::{Element, Field, Scalar, StructureAlgebra};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-12i64..=12, 1i64..=9).prop_map(|(n, d)| Scalar::rational(n, d))
}

fn prime_field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13]).prop_map(|p| Field::prime(p).unwrap())
}

fn coords(field: &Field, raw: &[(i64, i64)]) -> Vec<Scalar> {
    raw.iter()
        .map(|&(n, d)| match field {
            Field::Rational => Scalar::rational(n, d),
            _ => field.from_integer(n),
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prime_field_axioms(f in prime_field(), x in -40i64..40, y in -40i64..40, z in -40i64..40) {
        let (a, b, c) = (f.from_integer(x), f.from_integer(y), f.from_integer(z));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
            prop_assert!((&b * &b.inv().unwrap()).is_one());
        }
        let p = f.characteristic();
        prop_assert!(f.from_integer(p as i64).is_zero());
    }

    #[test]
    fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn element_text_round_trips(
        f in prop_oneof![Just(Field::Rational), prime_field()],
        raw in prop::collection::vec((-30i64..30, 1i64..8), 4),
    ) {
        let alg = StructureAlgebra::zero_algebra(f.clone(), &["x", "y", "z1", "w"]).unwrap();
        let v = Element::new(coords(&f, &raw));
        let text = alg.format_element(&v);
        prop_assert_eq!(alg.parse_element(&text).unwrap(), v, "text was {}", text);
    }

    #[test]
    fn miyamoto_maps_of_3c_skew_are_involutive_automorphisms(
        alpha in small_rational(),
        raw in prop::collection::vec((-6i64..6, 1i64..4), 2),
    ) {
        let Ok(c) = catalog::make_3c_skew(&Field::Rational, &alpha) else {
            return Ok(());
        };
        let alg = &c.algebra;
        let n = alg.dim();
        let gens = c.generators().unwrap();
        let pick = |k: usize| Element::new((0..n).map(|i| Scalar::rational(raw[k].0 + i as i64, raw[k].1)).collect());
        let (u, v) = (pick(0), pick(1));
        for (axis, law) in &gens {
            prop_assert!(verify_axis(alg, axis, law).is_axis());
            let tau = miyamoto(alg, axis, law, None).unwrap();
            prop_assert_eq!(tau.apply(&tau.apply(&u)), u.clone());
            prop_assert_eq!(tau.apply(&alg.mul(&u, &v)), alg.mul(&tau.apply(&u), &tau.apply(&v)));
            prop_assert_eq!(tau.apply(axis), axis.clone());
        }
    }

    #[test]
    fn three_c_axes_are_jordan_axes(alpha in small_rational()) {
        let Ok(c) = catalog::make_3c(&Field::Rational, &alpha) else {
            return Ok(());
        };
        for (axis, law) in c.generators().unwrap() {
            prop_assert!(verify_axis(&c.algebra, &axis, &law).is_axis());
        }
    }

    #[test]
    fn generic_specializes_like_numeric_constants(
        vals in prop::collection::vec(small_rational(), 8),
    ) {
        let generic = SkewConstants::generic();
        let names = ["alpha", "beta", "l1", "l1f", "l2f", "zeta", "theta", "kappa"];
        let assignment: Vec<(&str, Scalar)> = names.iter().copied().zip(vals.iter().cloned()).collect();
        let Ok(numeric) = generic.map(|x| x.eval(&assignment, &Field::Rational)) else {
            return Ok(());
        };
        let Ok(direct) = make_generic_skew(&numeric) else {
            return Ok(());
        };
        let Ok(specialized) = make_generic_skew(&generic).unwrap().specialize(&Field::Rational, &assignment) else {
            return Ok(());
        };
        for i in 0..4 {
            for j in 0..4 {
                prop_assert_eq!(direct.product_of_basis(i, j), specialized.product_of_basis(i, j));
            }
        }
    }

    #[test]
    fn abstract_axet_involutions_respect_the_action(
        regular in any::<bool>(),
        n in 1usize..=9,
    ) {
        let x = if regular { AbstractAxet::regular(n) } else { AbstractAxet::skew(n) }.unwrap();
        let t = x.action();
        let len = t.len();
        prop_assert_eq!(len, if regular { n } else { 3 * n });
        for a in 0..len {
            prop_assert_eq!(t.image(a, a), a);
            for b in 0..len {
                prop_assert_eq!(t.image(a, t.image(a, b)), b);
                // τ_{τ_a(b)} = τ_a τ_b τ_a
                let c = t.image(a, b);
                for y in 0..len {
                    prop_assert_eq!(t.image(c, y), t.image(a, t.image(b, t.image(a, y))));
                }
            }
        }
    }
}

#[test]
fn generic_specialization_at_a_fixed_point() {
    let vals = [(1, 4), (1, 2), (2, 3), (-1, 5), (3, 7), (1, 1), (-2, 3), (5, 2)];
    let names = ["alpha", "beta", "l1", "l1f", "l2f", "zeta", "theta", "kappa"];
    let assignment: Vec<(&str, Scalar)> = names.iter().copied().zip(vals.iter().map(|&(n, d)| Scalar::rational(n, d))).collect();
    let generic = SkewConstants::generic();
    let numeric = generic.map(|x| x.eval(&assignment, &Field::Rational)).unwrap();
    let direct = make_generic_skew(&numeric).unwrap();
    let specialized = make_generic_skew(&generic).unwrap().specialize(&Field::Rational, &assignment).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(direct.product_of_basis(i, j), specialized.product_of_basis(i, j));
        }
    }
}
