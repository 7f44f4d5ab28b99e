use qosp::algebra::Algebra;
use qosp::hc_center::{solve_anticentral, solve_central, Character};
use qosp::scalars::Scalar;
use qosp::verma::{
    annihilation_criterion, degenerate_annihilation_check, predicted_scasimir_spectrum, scasimir_spectrum,
    VermaModule,
};
use qosp::weights::{GammaElement, RhoConvention, Weight};

fn alg(l: usize) -> Algebra {
    Algebra::new(l, RhoConvention::HalfSum).unwrap()
}

fn chi1(c: Scalar, theta: u32) -> Character {
    Character::new(vec![c], GammaElement::from_mask(theta, 1)).unwrap()
}

fn i_v(k: i64) -> Scalar {
    Scalar::imaginary_unit() * Scalar::v_pow(k)
}

#[test]
fn build_examples() {
    let a = alg(1);
    let m = VermaModule::build(&a, chi1(Scalar::v_pow(3), 0), 3, false).unwrap();
    assert_eq!(m.dim(), 4);
    for k in 0..4 {
        assert_eq!(m.offset(k), &[k as i32]);
    }
    let a2 = alg(2);
    let m2 = VermaModule::build(&a2, Character::linear(&Weight::from_twice(&[3, 1]), GammaElement::zero(2)).unwrap(), 2, false)
        .unwrap();
    // Height ≤ 2 words: 1, F1, F2, and all four words of length 2 (no Serre relation below degree 3).
    assert_eq!(m2.dim(), 7);
    let xi = a2.xi(GammaElement::w_l(2)).unwrap();
    for theta in 0..4u32 {
        let th = GammaElement::from_mask(theta, 2);
        let ch = Character::linear(&Weight::from_twice(&[1, 1]), th).unwrap();
        let m = VermaModule::build(&a2, ch, 1, false).unwrap();
        let r = m.act(&a2, &xi, &m.basis_vector(0)).vector;
        let expect = if th.pair(&GammaElement::w_l(2)) { -1 } else { 1 };
        assert_eq!(r[&0], Scalar::from_int(expect));
    }
}

#[test]
fn act_examples() {
    let a = alg(1);
    let c = Scalar::v_pow(5);
    let m = VermaModule::build(&a, chi1(c.clone(), 0), 3, false).unwrap();
    let e = a.e(1).unwrap();
    let f = a.f(1).unwrap();
    let fv = m.act(&a, &f, &m.basis_vector(0));
    assert!(!fv.overflow);
    let r = m.act(&a, &e, &fv.vector).vector;
    // Λ(K_{α_1}) = c for l = 1.
    let expect = (&c - &c.inv().unwrap()).div(&(Scalar::q_pow(1) - Scalar::q_pow(-1))).unwrap();
    assert_eq!(r[&0], expect);
    assert!(m.act(&a, &e, &m.basis_vector(0)).vector.is_empty());
    let k = a.k(&Weight::from_beta(&[1])).unwrap();
    let r = m.act(&a, &k, &fv.vector).vector;
    assert_eq!(r[&1], &Scalar::q_pow(-1) * &c);
    let top = m.act(&a, &f, &m.basis_vector(3));
    assert!(top.overflow && top.vector.is_empty());
}

#[test]
fn singular_vector_examples() {
    let a = alg(1);
    for n in 1..=3 {
        let t = n as i32 - 1;
        let chi = Character::linear(&Weight::from_twice(&[t]), GammaElement::zero(1)).unwrap();
        let m = VermaModule::build(&a, chi, 4, false).unwrap();
        let s = m.singular_vectors(&a, &Weight::from_beta(&[n])).unwrap();
        assert_eq!(s.len(), 1, "n = {n}");
        let dot = a.roots().dot_action(&qosp::weights::WeylElement::simple_reflection(1, 1), &Weight::from_twice(&[t]));
        assert_eq!(s[0].character, Character::linear(&dot, GammaElement::from_mask(n as u32 % 2, 1)).unwrap());
    }
    let chi = Character::linear(&Weight::from_twice(&[-3]), GammaElement::zero(1)).unwrap();
    let m = VermaModule::build(&a, chi, 4, false).unwrap();
    for n in 1..=4 {
        assert!(m.singular_vectors(&a, &Weight::from_beta(&[n])).unwrap().is_empty());
    }
    let rho = a.roots().rho().clone();
    let m = VermaModule::build(&a, Character::linear(&-&rho, GammaElement::zero(1)).unwrap(), 2, false).unwrap();
    assert_eq!(m.singular_vectors(&a, &Weight::zero(1)).unwrap().len(), 1);
}

#[test]
fn scasimir_spectrum_rank_one() {
    let a = alg(1);
    let sc = solve_anticentral(&a, 2).unwrap();
    let z = solve_central(&a, &Weight::from_twice(&[2]), 2).unwrap().element;
    for t in [-3i64, 0, 2, 5] {
        for theta in 0..2 {
            let m = VermaModule::build(&a, chi1(Scalar::v_pow(t), theta), 4, false).unwrap();
            let got = scasimir_spectrum(&a, &m, &sc.element).unwrap();
            assert_eq!(got, predicted_scasimir_spectrum(&m, &z, 1));
            let mag = Scalar::v_pow(-1 - t) + Scalar::v_pow(1 + t);
            let s = if theta == 1 { mag.neg_ref() } else { mag };
            assert_eq!(got, (s.clone(), s.neg_ref()));
        }
    }
    for c in [i_v(-1), -i_v(-1)] {
        let m = VermaModule::build(&a, chi1(c, 0), 4, false).unwrap();
        let got = scasimir_spectrum(&a, &m, &sc.element).unwrap();
        assert!(got.0.is_zero() && got.1.is_zero());
    }
}

#[test]
fn criterion_examples() {
    let a = alg(1);
    assert!(annihilation_criterion(&a, &chi1(Scalar::v_pow(3), 0)));
    assert!(!annihilation_criterion(&a, &chi1(i_v(-1), 0)));
    let a2 = alg(2);
    let c = Character::new(vec![i_v(-3), Scalar::v_pow(1)], GammaElement::zero(2)).unwrap();
    assert!(!annihilation_criterion(&a2, &c));
    for t in [[1, 1], [3, 1], [-5, 7]] {
        assert!(annihilation_criterion(&a2, &Character::linear(&Weight::from_twice(&t), GammaElement::zero(2)).unwrap()));
    }
}

#[test]
fn degenerate_annihilation() {
    let a = alg(1);
    for c in [i_v(-1), -i_v(-1)] {
        for theta in 0..2 {
            assert!(degenerate_annihilation_check(&a, &chi1(c.clone(), theta), 6).unwrap());
        }
    }
    assert!(degenerate_annihilation_check(&a, &chi1(Scalar::v_pow(3), 0), 6).is_err());
}

#[test]
fn scalar_action_examples() {
    let a = alg(1);
    let z = solve_central(&a, &Weight::from_twice(&[2]), 2).unwrap().element;
    let z2 = a.mul(&z, &z);
    let m = VermaModule::build(&a, chi1(Scalar::v_pow(2), 0), 4, false).unwrap();
    let s = m.scalar_action(&a, &z2);
    assert!(s.holds);
    assert_eq!(s.even, s.odd);
    let sc = solve_anticentral(&a, 2).unwrap().element;
    let s = m.scalar_action(&a, &sc);
    assert!(s.holds);
    assert_eq!(s.even.unwrap(), s.odd.unwrap().neg_ref());
    let ef = a.mul(&a.e(1).unwrap(), &a.f(1).unwrap());
    assert!(!m.scalar_action(&a, &ef).holds);
}

#[test]
fn odd_nondegeneracy() {
    let a = alg(1);
    let m = VermaModule::build(&a, chi1(Scalar::v_pow(3), 0), 3, false).unwrap();
    assert!(m.odd_nondegeneracy_probe(&a).unwrap());
    let a2 = alg(2);
    let ch = Character::linear(&Weight::from_twice(&[5, 3]), GammaElement::zero(2)).unwrap();
    let m = VermaModule::build(&a2, ch, 2, false).unwrap();
    assert!(m.odd_nondegeneracy_probe(&a2).unwrap());
}
