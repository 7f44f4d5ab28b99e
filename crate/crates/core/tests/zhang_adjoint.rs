use qosp::adjoint::{
    ad_orbit_span, adjoint_act, bar_locally_finite_decomposition, super_adjoint_act, super_adjoint_prime,
    transfer_check, twisted_vanishing_probe,
};
use qosp::algebra::{Algebra, Element};
use qosp::scalars::Scalar;
use qosp::weights::{GammaElement, RhoConvention, Weight};
use qosp::zhang::{bar_e, bar_f, bar_k, bar_k_alpha, bar_relations_verify, in_bar, psi, psi_sign_check};

fn alg(l: usize) -> Algebra {
    Algebra::new(l, RhoConvention::HalfSum).unwrap()
}

fn gens(a: &Algebra) -> Vec<Element> {
    let l = a.rank();
    let mut g = Vec::new();
    for i in 1..=l {
        g.push(a.e(i).unwrap());
        g.push(a.f(i).unwrap());
        g.push(a.k_alpha(i, 1).unwrap());
        g.push(a.k(&Weight::beta_basis(l, i)).unwrap());
        g.push(a.xi(GammaElement::from_mask(1 << (i - 1), l)).unwrap());
    }
    g
}

#[test]
fn psi_examples() {
    let a = alg(2);
    assert_eq!(psi(&a, &a.e(2).unwrap()), a.e(2).unwrap());
    let xi1 = a.xi(GammaElement::from_bits(&[1, 0])).unwrap();
    assert_eq!(psi(&a, &a.f(1).unwrap()), a.mul(&xi1, &a.f(1).unwrap()));
    let k = a.k(&Weight::from_beta(&[1, 1])).unwrap();
    assert_eq!(psi(&a, &psi(&a, &k)), k);
    let xi2 = a.xi(GammaElement::from_bits(&[0, 1])).unwrap();
    assert_eq!(bar_f(&a, 2).unwrap(), a.mul(&xi2, &a.f(2).unwrap()));
    let ka = a.k_alpha(2, 1).unwrap();
    assert_eq!(bar_k_alpha(&a, 2, 1).unwrap(), a.mul(&xi2, &ka));
}

#[test]
fn in_bar_examples() {
    let a = alg(2);
    let x = a.mul(&bar_e(&a, 1).unwrap(), &bar_f(&a, 2).unwrap());
    assert!(in_bar(&a, &x));
    assert!(!in_bar(&a, &a.xi(GammaElement::w_l(2)).unwrap()));
    assert!(!in_bar(&a, &a.mul(&a.e(2).unwrap(), &a.f(2).unwrap())));
}

#[test]
fn psi_sign_law_on_generators() {
    for l in 1..=2 {
        let a = alg(l);
        let g = gens(&a);
        for x in &g {
            for y in &g {
                assert!(psi_sign_check(&a, x, y).unwrap(), "{x} {y}");
            }
        }
    }
}

#[test]
fn ad_examples() {
    let a = alg(2);
    let zero = GammaElement::zero(2);
    let mu = Weight::from_beta(&[1, 0]);
    let k = a.k(&mu).unwrap();
    let q = Scalar::q_pow(1);
    let d = (&q - &Scalar::q_pow(-1)).inv().unwrap();
    for i in 1..=2 {
        let ei = a.e(i).unwrap();
        let n = if i == 1 { 1 } else { 0 };
        assert_eq!(adjoint_act(&a, &k, &ei, zero), ei.scale(&Scalar::q_pow(n)));
        for j in 1..=2 {
            let lhs = adjoint_act(&a, &a.f(i).unwrap(), &a.e(j).unwrap(), zero);
            let rhs = if i == j {
                let k2 = a.k_alpha(i, 2).unwrap();
                (&a.one() - &k2).scale(&d)
            } else {
                Element::zero()
            };
            assert_eq!(lhs, rhs);
        }
    }
    // ad_λ a(ξ_λ x) = (-1)^{(λ, ν(a))} ξ_λ ad a(x)
    let lam = GammaElement::from_bits(&[0, 1]);
    let xi = a.xi(lam).unwrap();
    let x = a.mul(&a.f(1).unwrap(), &a.e(2).unwrap());
    for g in gens(&a) {
        let lhs = adjoint_act(&a, &g, &a.mul(&xi, &x), lam);
        let nu = a.grade_nu(&g).homogeneous().unwrap().beta().unwrap();
        let rhs = a.mul(&xi, &adjoint_act(&a, &g, &x, zero));
        let rhs = if lam.pair_weight(&nu) { -&rhs } else { rhs };
        assert_eq!(lhs, rhs, "{g}");
    }
}

#[test]
fn sad_examples() {
    for l in 1..=2 {
        let a = alg(l);
        let zero = GammaElement::zero(l);
        let el = bar_e(&a, l).unwrap();
        let kl = bar_k(&a, &Weight::beta_basis(l, l)).unwrap();
        let kli = a.invert_toral(&kl).unwrap();
        let x = a.mul(&a.f(1).unwrap(), &a.e(1).unwrap());
        let lhs = super_adjoint_act(&a, &el, &x, zero);
        let rhs = &a.mul(&el, &x) - &a.mul_all(&[&kl, &x, &kli, &el]);
        assert_eq!(lhs, rhs);
        let y = a.e(l).unwrap();
        let lhs = super_adjoint_prime(&a, &el, &y);
        let rhs = &a.mul(&el, &y) - &a.mul_all(&[&kl, &y, &kli, &el]);
        assert_eq!(lhs, rhs);
        let fl = bar_f(&a, l).unwrap();
        let lhs = super_adjoint_prime(&a, &fl, &y);
        let rhs = &a.mul_all(&[&fl, &y, &kl]) - &a.mul_all(&[&y, &fl, &kl]);
        assert_eq!(lhs, rhs);
        let mut same = vec![bar_k(&a, &Weight::beta_basis(l, 1)).unwrap(), a.xi(GammaElement::w_l(l)).unwrap()];
        for i in 1..l {
            same.push(bar_e(&a, i).unwrap());
            same.push(bar_f(&a, i).unwrap());
        }
        for g in &same {
            for x in [a.e(1).unwrap(), a.f(l).unwrap(), a.k_alpha(1, 1).unwrap()] {
                assert_eq!(super_adjoint_prime(&a, g, &x), super_adjoint_act(&a, g, &x, zero), "{g}");
            }
        }
    }
}

#[test]
fn transfer_on_generator_pairs() {
    for l in 1..=2 {
        let a = alg(l);
        let g = gens(&a);
        for lam in [GammaElement::zero(l), GammaElement::w_l(l)] {
            for x in &g {
                for y in &g {
                    assert!(transfer_check(&a, x, y, lam).unwrap(), "a={x} x={y} λ={lam}");
                }
            }
        }
    }
}

#[test]
fn bar_relations_hold() {
    for l in 1..=3 {
        let a = alg(l);
        for r in bar_relations_verify(&a).unwrap() {
            assert!(r.holds, "l={l}: {}", r.label);
        }
    }
}

#[test]
fn orbit_examples() {
    let a = alg(1);
    let o = ad_orbit_span(&a, &Weight::zero(1), 2).unwrap();
    assert_eq!(o.basis, vec![a.one()]);
    assert!(o.stabilized);
    let o = ad_orbit_span(&a, &Weight::from_twice(&[2]), 2).unwrap();
    assert!(o.stabilized);
    assert_eq!(o.dim(), 4);
    assert!(ad_orbit_span(&a, &Weight::from_twice(&[-2]), 2).is_err());
}

#[test]
fn twisted_probe() {
    assert!(twisted_vanishing_probe(&alg(1), GammaElement::w_l(1), 3).unwrap());
    assert!(twisted_vanishing_probe(&alg(2), GammaElement::from_bits(&[1, 0]), 2).unwrap());
    assert!(twisted_vanishing_probe(&alg(1), GammaElement::zero(1), 2).is_err());
}

#[test]
fn bar_decomposition() {
    let a = alg(1);
    let d = bar_locally_finite_decomposition(&a, &Weight::from_twice(&[2]), 2).unwrap();
    assert!(d.n0.is_empty());
    assert_eq!(d.n1.len(), 4);
    assert!(d.closed && d.stabilized);
    let d = bar_locally_finite_decomposition(&a, &Weight::from_twice(&[4]), 4).unwrap();
    assert!(d.n1.is_empty());
    assert!(!d.n0.is_empty());
    assert!(d.closed && d.stabilized);
    let a2 = alg(2);
    let d = bar_locally_finite_decomposition(&a2, &Weight::from_twice(&[2, 2]), 6).unwrap();
    assert!(d.n0.is_empty());
    assert!(d.closed);
}
