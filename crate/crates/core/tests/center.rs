use std::time::Instant;

use qosp::adjoint::ad_orbit_span;
use qosp::algebra::Algebra;
use qosp::hc_center::{
    even_torus_invariant_check, evaluate, hc_formula_check, solve_anticentral, solve_central, upsilon, weyl_dot,
    Character, TorusElement,
};
use qosp::scalars::Scalar;
use qosp::weights::{GammaElement, RhoConvention, Weight, WeylElement};

fn alg(l: usize) -> Algebra {
    Algebra::new(l, RhoConvention::HalfSum).unwrap()
}

fn torus(a: &Algebra, mu: &[i32], c: Scalar) -> TorusElement {
    upsilon(&a.k(&Weight::from_beta(mu)).unwrap().scale(&c))
}

#[test]
fn upsilon_examples() {
    let a = alg(1);
    let kx = a.mul(&a.k(&Weight::from_beta(&[1])).unwrap(), &a.xi(GammaElement::w_l(1)).unwrap());
    assert_eq!(upsilon(&kx).to_element(), kx);
    assert!(upsilon(&a.f(1).unwrap()).is_zero());
    let ef = a.mul(&a.e(1).unwrap(), &a.f(1).unwrap());
    let d = (Scalar::q_pow(1) - Scalar::q_pow(-1)).inv().unwrap();
    let expect = (&a.k_alpha(1, 1).unwrap() - &a.k_alpha(1, -1).unwrap()).scale(&d);
    assert_eq!(upsilon(&ef).to_element(), expect);
}

#[test]
fn evaluate_examples() {
    let a = alg(2);
    let chi = Character::linear(&Weight::from_twice(&[2, 0]), GammaElement::zero(2)).unwrap();
    assert_eq!(evaluate(&torus(&a, &[1, 0], Scalar::one()), &chi), Scalar::v_pow(2));
    for bits in 0..4u32 {
        let theta = GammaElement::from_mask(bits, 2);
        let chi = Character::linear(&Weight::from_twice(&[1, 1]), theta).unwrap();
        let x = upsilon(&a.xi(GammaElement::w_l(2)).unwrap());
        let expect = if theta.pair(&GammaElement::w_l(2)) { -1 } else { 1 };
        assert_eq!(evaluate(&x, &chi), Scalar::from_int(expect));
    }
}

#[test]
fn weyl_dot_examples() {
    let a = alg(1);
    let s = WeylElement::simple_reflection(1, 1);
    let x = torus(&a, &[1], Scalar::v_pow(1));
    assert_eq!(weyl_dot(&a, &WeylElement::identity(1), &x), x);
    assert_eq!(weyl_dot(&a, &s, &x), torus(&a, &[-1], Scalar::v_pow(-1)));
}

#[test]
fn rank_one_casimir() {
    let a = alg(1);
    let sol = solve_central(&a, &Weight::from_twice(&[2]), 2).unwrap();
    assert!(sol.certified);
    let mut expect = torus(&a, &[-1], Scalar::v_pow(-1));
    for (k, c) in torus(&a, &[1], Scalar::v_pow(1)).iter() {
        expect.add_term(k.0.clone(), k.1, c.clone());
    }
    assert_eq!(upsilon(&sol.element), expect);
    // The F·E coefficient is (q - q^{-1})(v - v^{-1}).
    let fe = a.mul(&a.f(1).unwrap(), &a.e(1).unwrap());
    let (w, _) = fe.iter().next().unwrap();
    let coeff = sol.element.coefficient(w);
    assert_eq!(coeff, (Scalar::q_pow(1) - Scalar::q_pow(-1)) * (Scalar::v_pow(1) - Scalar::v_pow(-1)));
    let s = WeylElement::simple_reflection(1, 1);
    assert_eq!(weyl_dot(&a, &s, &upsilon(&sol.element)), upsilon(&sol.element));
    assert!(even_torus_invariant_check(&a, &upsilon(&sol.element)));
    let orbit = ad_orbit_span(&a, &Weight::from_twice(&[2]), 2).unwrap();
    assert!(orbit.contains(&sol.element));
    assert_eq!(solve_central(&a, &Weight::zero(1), 2).unwrap().element, a.one());
}

#[test]
fn rank_one_second_casimir() {
    let a = alg(1);
    let z1 = solve_central(&a, &Weight::from_twice(&[2]), 2).unwrap().element;
    let sol = solve_central(&a, &Weight::from_twice(&[4]), 4).unwrap();
    assert!(sol.certified);
    assert_eq!(sol.kernel_dim, 2);
    assert_eq!(sol.element, &a.mul(&z1, &z1) - &a.one());
    assert!(even_torus_invariant_check(&a, &upsilon(&sol.element)));
}

#[test]
fn rank_two_casimir_matches_product_formula() {
    let a = alg(2);
    let t = Instant::now();
    let check = hc_formula_check(&a, 6).unwrap();
    assert!(check.holds, "{}", upsilon(&check.solution.element));
    assert_eq!(check.terms, 4);
    assert!(even_torus_invariant_check(&a, &upsilon(&check.solution.element)));
    eprintln!("rank 2 solve: {:?}, window {}", t.elapsed(), check.solution.window);
}

#[test]
fn anticentral_rank_one() {
    let a = alg(1);
    let sc = solve_anticentral(&a, 2).unwrap();
    assert!(sc.certified);
    let sq = a.mul(&sc.element, &sc.element);
    for g in [a.e(1).unwrap(), a.f(1).unwrap(), a.xi(GammaElement::w_l(1)).unwrap()] {
        assert!(a.commutator(&sq, &g).is_zero());
    }
}

#[test]
fn even_torus_rejects_non_invariant() {
    let a = alg(2);
    assert!(!even_torus_invariant_check(&a, &torus(&a, &[1, 1], Scalar::one())));
    assert!(even_torus_invariant_check(&a, &upsilon(&a.one())));
}
