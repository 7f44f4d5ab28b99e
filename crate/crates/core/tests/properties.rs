use proptest::prelude::*;

use qosp::algebra::{Algebra, Element};
use qosp::parse::parse_element;
use qosp::scalars::{q_binomial, q_int, Scalar};
use qosp::weights::{eta, sign_identity, RhoConvention, Weight, WeylElement};

fn alg(l: usize) -> Algebra {
    Algebra::new(l, RhoConvention::HalfSum).unwrap()
}

/// Small Laurent polynomial in `v` with Gaussian-integer coefficients.
fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-4i64..=4, -3i64..=3, -2i64..=2), 1..4).prop_map(|terms| {
        let mut acc = Scalar::zero();
        for (e, re, im) in terms {
            let c = Scalar::from_int(re) + Scalar::imaginary_unit() * Scalar::from_int(im);
            acc = acc + c * Scalar::v_pow(e);
        }
        acc
    })
}

/// Ratio of Laurent polynomials.
fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_map(|(a, b)| if b.is_zero() { a } else { a.div(&b).unwrap() })
}

/// Text of a product of up to three generators of rank `l`, times a coefficient.
fn monomial(l: usize) -> impl Strategy<Value = String> {
    let letter = prop_oneof![
        (1..=l).prop_map(|i| format!("E{i}")),
        (1..=l).prop_map(|i| format!("F{i}")),
        (1..=l).prop_map(|i| format!("e{i}")),
        (1..=l).prop_map(|i| format!("f{i}")),
        prop::collection::vec(-1i32..=1, l).prop_map(|v| {
            let t: Vec<String> = v.iter().map(|x| (2 * x).to_string()).collect();
            format!("K[{}]", t.join(","))
        }),
        prop::collection::vec(0u8..=1, l).prop_map(|v| {
            let t: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("xi[{}]", t.join(","))
        }),
    ];
    (prop::collection::vec(letter, 1..4), -3i32..=3, -2i32..=2)
        .prop_map(|(ls, c, e)| format!("{c}*v^{e}*{}", ls.join("*")))
}

fn expression(l: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(monomial(l), 1..4).prop_map(|ms| ms.join(" + "))
}

fn grid_weight(l: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-3i32..=3, l).prop_map(move |c| {
        let a = alg(l);
        let mut w = Weight::zero(l);
        for (i, ci) in c.iter().enumerate() {
            w = &w + &a.roots().simple_root(i + 1).scale(*ci);
        }
        w
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_display_round_trips(a in scalar()) {
        let alg = alg(1);
        let printed = a.to_string();
        let back = parse_element(&alg, &printed).unwrap().as_scalar().unwrap_or_else(Scalar::zero);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn q_integer_addition(m in 0i64..8, n in 0i64..8) {
        let v = Scalar::v_pow(1);
        let lhs = q_int(m + n, &v).unwrap();
        let rhs = v.pow(n).unwrap() * q_int(m, &v).unwrap() + v.pow(-m).unwrap() * q_int(n, &v).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_pascal(n in 1i64..8, k in 1i64..8) {
        prop_assume!(k < n);
        let q = Scalar::q_pow(1);
        let lhs = q_binomial(n, k, &q).unwrap();
        let rhs = q.pow(k).unwrap() * q_binomial(n - 1, k, &q).unwrap()
            + q.pow(k - n).unwrap() * q_binomial(n - 1, k - 1, &q).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_print_round_trip((l, text) in (1usize..=2).prop_flat_map(|l| (Just(l), expression(l)))) {
        let a = alg(l);
        let x = parse_element(&a, &text).unwrap();
        let printed = x.to_string();
        let y = parse_element(&a, &printed).unwrap();
        prop_assert_eq!(&y, &x, "{} -> {}", text, printed);
        prop_assert_eq!(y.to_string(), printed);
    }

    #[test]
    fn multiplication_is_associative(
        (l, ms) in (1usize..=2).prop_flat_map(|l| (Just(l), prop::collection::vec(monomial(l), 3)))
    ) {
        let a = alg(l);
        let v: Vec<Element> = ms.iter().map(|m| parse_element(&a, m).unwrap()).collect();
        prop_assert_eq!(a.mul(&a.mul(&v[0], &v[1]), &v[2]), a.mul(&v[0], &a.mul(&v[1], &v[2])));
    }

    #[test]
    fn sign_identity_and_eta_additivity(
        (nu, mu) in (1usize..=3).prop_flat_map(|l| (grid_weight(l), grid_weight(l)))
    ) {
        prop_assert!(sign_identity(&nu, &mu).unwrap().holds());
        prop_assert_eq!(eta(&(&nu + &mu)).unwrap(), eta(&nu).unwrap() + eta(&mu).unwrap());
    }

    #[test]
    fn dot_action_is_a_group_action(l in 1usize..=3, t in prop::collection::vec(-5i32..=5, 3), i in 0usize..64, j in 0usize..64) {
        let a = alg(l);
        let roots = a.roots();
        let group = WeylElement::all(l);
        let (w, u) = (&group[i % group.len()], &group[j % group.len()]);
        let lam = Weight::from_twice(&t[..l]);
        prop_assert_eq!(
            roots.dot_action(&w.compose(u), &lam),
            roots.dot_action(w, &roots.dot_action(u, &lam))
        );
        prop_assert_eq!(roots.dot_action(&WeylElement::identity(l), &lam), lam);
    }
}
