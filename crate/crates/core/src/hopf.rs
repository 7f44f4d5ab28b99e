//! Hopf structure `(Δ, S, ε)` on Û and the super Hopf structure `(Δ̄, S̄, ε)`
//! obtained by pulling back through Ψ.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Algebra, Element, NormalWord};
use crate::scalars::Scalar;
use crate::weights::{eta_beta, pair_int};
use crate::zhang::{psi, psi_word};

/// Finite sum of pure tensors of normal words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<NormalWord>, Scalar>,
}

/// A tensor of arity 2.
pub type TensorElement = Tensor;

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<NormalWord>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, words: Vec<NormalWord>, c: Scalar) {
        debug_assert_eq!(words.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&words) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&words);
                }
            }
            None => {
                self.terms.insert(words, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Tensor, c: &Scalar) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    /// Outer product of elements.
    pub fn pure(factors: &[&Element]) -> Self {
        let mut acc = vec![(Vec::new(), Scalar::one())];
        for f in factors {
            let mut next = Vec::new();
            for (ws, c) in &acc {
                for (w, x) in f.iter() {
                    let mut ws2: Vec<NormalWord> = ws.clone();
                    ws2.push(w.clone());
                    next.push((ws2, c * x));
                }
            }
            acc = next;
        }
        let mut out = Tensor::zero(factors.len());
        for (ws, c) in acc {
            out.add_term(ws, c);
        }
        out
    }

    /// Replaces factor `k` of each term by `f(word)`, a tensor of any arity.
    pub fn expand_factor(&self, k: usize, mut f: impl FnMut(&NormalWord) -> Tensor) -> Tensor {
        let mut out: Option<Tensor> = None;
        for (ws, c) in &self.terms {
            let img = f(&ws[k]);
            let o = out.get_or_insert_with(|| Tensor::zero(self.arity - 1 + img.arity));
            for (iw, ic) in &img.terms {
                let mut nw: Vec<NormalWord> = ws[..k].to_vec();
                nw.extend(iw.iter().cloned());
                nw.extend(ws[k + 1..].iter().cloned());
                o.add_term(nw, c * ic);
            }
        }
        out.unwrap_or_else(|| Tensor::zero(self.arity + 1))
    }

    /// Multiplies the factors together in order.
    pub fn multiply_out(&self, alg: &Algebra) -> Element {
        let mut out = Element::zero();
        for (ws, c) in &self.terms {
            let elems: Vec<Element> = ws.iter().map(|w| Element::from_word(w.clone(), Scalar::one())).collect();
            let refs: Vec<&Element> = elems.iter().collect();
            out.add_scaled(&alg.mul_all(&refs), c);
        }
        out
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (ws, c)) in self.terms.iter().enumerate() {
            let body = ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" (x) ");
            let t = if c.is_one() {
                body
            } else if c.neg_ref().is_one() {
                format!("-{body}")
            } else {
                format!("({c})*{body}")
            };
            if k == 0 {
                write!(f, "{t}")?;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}

fn single(w: &NormalWord) -> Element {
    Element::from_word(w.clone(), Scalar::one())
}

/// Componentwise product; with `koszul`, the sign `(-1)^{Σ_{i>j} |x_i||y_j|}`.
pub fn tensor_mul(alg: &Algebra, x: &Tensor, y: &Tensor, koszul: bool) -> Tensor {
    assert_eq!(x.arity, y.arity);
    let mut out = Tensor::zero(x.arity);
    for (xs, cx) in &x.terms {
        for (ys, cy) in &y.terms {
            let mut sign = false;
            if koszul {
                for i in 0..xs.len() {
                    if alg.word_parity(&xs[i]) {
                        for yj in ys.iter().take(i) {
                            sign ^= alg.word_parity(yj);
                        }
                    }
                }
            }
            let mut acc = vec![(Vec::new(), cx * cy)];
            for k in 0..xs.len() {
                let prod = alg.mul(&single(&xs[k]), &single(&ys[k]));
                let mut next = Vec::new();
                for (ws, c) in &acc {
                    for (w, p) in prod.iter() {
                        let mut ws2: Vec<NormalWord> = ws.clone();
                        ws2.push(w.clone());
                        next.push((ws2, c * p));
                    }
                }
                acc = next;
            }
            for (ws, c) in acc {
                out.add_term(ws, if sign { c.neg_ref() } else { c });
            }
        }
    }
    out
}

fn letter_coproduct(alg: &Algebra, kind: char, i: u8) -> Tensor {
    let i = i as usize;
    let one = alg.one();
    match kind {
        'E' => {
            let e = alg.e(i).unwrap();
            let mut t = Tensor::pure(&[&e, &one]);
            t.add_scaled(&Tensor::pure(&[&alg.k_alpha(i, 1).unwrap(), &e]), &Scalar::one());
            t
        }
        _ => {
            let f = alg.f(i).unwrap();
            let mut t = Tensor::pure(&[&f, &alg.k_alpha(i, -1).unwrap()]);
            t.add_scaled(&Tensor::pure(&[&one, &f]), &Scalar::one());
            t
        }
    }
}

/// `Δ` on a normal word, as the product of the letter coproducts.
pub fn coproduct_word(alg: &Algebra, w: &NormalWord) -> Tensor {
    let t = alg.from_letters(&[], w.torus_beta(), w.gamma(), &[]);
    let mut acc = Tensor::pure(&[&alg.one(), &alg.one()]);
    for &i in w.f_word() {
        acc = tensor_mul(alg, &acc, &letter_coproduct(alg, 'F', i), false);
    }
    acc = tensor_mul(alg, &acc, &Tensor::pure(&[&t, &t]), false);
    for &i in w.e_word() {
        acc = tensor_mul(alg, &acc, &letter_coproduct(alg, 'E', i), false);
    }
    acc
}

pub fn coproduct(alg: &Algebra, a: &Element) -> Tensor {
    let mut out = Tensor::zero(2);
    for (w, c) in a.iter() {
        out.add_scaled(&coproduct_word(alg, w), c);
    }
    out
}

/// `S` on a normal word: `S(F_u K ξ E_w) = S(E_w) ξ K^{-1} S(F_u)` reversed letterwise.
pub fn antipode_word(alg: &Algebra, w: &NormalWord) -> Element {
    let mut acc = alg.one();
    for &i in w.e_word().iter().rev() {
        let s = alg.mul(&alg.k_alpha(i as usize, -1).unwrap(), &alg.e(i as usize).unwrap());
        acc = alg.mul(&acc, &-&s);
    }
    let inv: Vec<i32> = w.torus_beta().iter().map(|x| -x).collect();
    acc = alg.mul(&acc, &alg.from_letters(&[], &inv, w.gamma(), &[]));
    for &i in w.f_word().iter().rev() {
        let s = alg.mul(&alg.f(i as usize).unwrap(), &alg.k_alpha(i as usize, 1).unwrap());
        acc = alg.mul(&acc, &-&s);
    }
    acc
}

pub fn antipode(alg: &Algebra, a: &Element) -> Element {
    let mut out = Element::zero();
    for (w, c) in a.iter() {
        out.add_scaled(&antipode_word(alg, w), c);
    }
    out
}

pub fn counit(a: &Element) -> Scalar {
    a.iter().filter(|(w, _)| w.is_toral()).fold(Scalar::zero(), |acc, (_, c)| &acc + c)
}

/// `Δ̄Ψ(a) = Σ (-1)^{(ν(a₁), ν(a₂)+η(ν(a₂)))} Ψ(a₁) ⊗ Ψ(a₂)`.
pub fn super_coproduct(alg: &Algebra, x: &Element) -> Tensor {
    let mut out = Tensor::zero(2);
    for (w, c) in psi(alg, x).iter() {
        for (ws, d) in coproduct_word(alg, w).iter() {
            let n1 = alg.word_nu(&ws[0]);
            let n2 = alg.word_nu(&ws[1]);
            let mut sign = pair_int(&n1, &n2).rem_euclid(2) == 1;
            sign ^= eta_beta(&n2).pair_weight(&n1);
            let (p1, s1) = psi_word(alg, &ws[0]);
            let (p2, s2) = psi_word(alg, &ws[1]);
            let coeff = c * d;
            out.add_term(vec![p1, p2], if sign ^ s1 ^ s2 { coeff.neg_ref() } else { coeff });
        }
    }
    out
}

/// `S̄Ψ(a) = (-1)^{(ν(a), δ(a))} Ψ(S(a))`.
pub fn super_antipode(alg: &Algebra, x: &Element) -> Element {
    let mut out = Element::zero();
    for (w, c) in psi(alg, x).iter() {
        let sign = alg.word_delta(w).pair_weight(&alg.word_nu(w));
        let img = psi(alg, &antipode_word(alg, w));
        out.add_scaled(&img, &if sign { c.neg_ref() } else { c.clone() });
    }
    out
}

fn counit_tensor_factor(t: &Tensor, k: usize) -> Element {
    let mut out = Element::zero();
    for (ws, c) in t.iter() {
        if ws[k].is_toral() {
            out.add_term(ws[1 - k].clone(), c.clone());
        }
    }
    out
}

fn axiom_suite(
    alg: &Algebra,
    a: &Element,
    delta: &dyn Fn(&Element) -> Tensor,
    s: &dyn Fn(&Element) -> Element,
) -> Result<(), &'static str> {
    let d = delta(a);
    if counit_tensor_factor(&d, 0) != *a || counit_tensor_factor(&d, 1) != *a {
        return Err("counit law");
    }
    let left = d.expand_factor(0, |w| delta(&single(w)));
    let right = d.expand_factor(1, |w| delta(&single(w)));
    if left != right {
        return Err("coassociativity");
    }
    let eps = alg.scalar(counit(a));
    let mut l1 = Element::zero();
    let mut l2 = Element::zero();
    for (ws, c) in d.iter() {
        let x0 = single(&ws[0]);
        let x1 = single(&ws[1]);
        l1.add_scaled(&alg.mul(&s(&x0), &x1), c);
        l2.add_scaled(&alg.mul(&x0, &s(&x1)), c);
    }
    if l1 != eps || l2 != eps {
        return Err("antipode law");
    }
    Ok(())
}

/// Counit law, coassociativity and antipode law for `(Δ, S, ε)` on `a`.
pub fn hopf_axiom_check(alg: &Algebra, a: &Element) -> Result<(), &'static str> {
    axiom_suite(alg, a, &|x| coproduct(alg, x), &|x| antipode(alg, x))
}

/// The same laws for `(Δ̄, S̄, ε)`.
pub fn super_axiom_check(alg: &Algebra, x: &Element) -> Result<(), &'static str> {
    axiom_suite(alg, x, &|y| super_coproduct(alg, y), &|y| super_antipode(alg, y))
}

/// `Δ(ab) = Δ(a)Δ(b)` and `S(ab) = S(b)S(a)`.
pub fn hopf_multiplicativity_check(alg: &Algebra, a: &Element, b: &Element) -> Result<(), &'static str> {
    let ab = alg.mul(a, b);
    if coproduct(alg, &ab) != tensor_mul(alg, &coproduct(alg, a), &coproduct(alg, b), false) {
        return Err("coproduct multiplicativity");
    }
    if antipode(alg, &ab) != alg.mul(&antipode(alg, b), &antipode(alg, a)) {
        return Err("antipode anti-multiplicativity");
    }
    Ok(())
}

/// Koszul-signed `Δ̄(xy) = Δ̄(x)Δ̄(y)` and `S̄(xy) = (-1)^{|x||y|} S̄(y)S̄(x)`
/// for ℤ₂-homogeneous `x`, `y` (inhomogeneous inputs are split).
pub fn super_multiplicativity_check(alg: &Algebra, x: &Element, y: &Element) -> Result<(), &'static str> {
    let (x0, x1) = alg.split_parity(x);
    let (y0, y1) = alg.split_parity(y);
    for (xp, px) in [(&x0, false), (&x1, true)] {
        for (yp, py) in [(&y0, false), (&y1, true)] {
            if xp.is_zero() || yp.is_zero() {
                continue;
            }
            let xy = alg.mul(xp, yp);
            let lhs = super_coproduct(alg, &xy);
            let rhs = tensor_mul(alg, &super_coproduct(alg, xp), &super_coproduct(alg, yp), true);
            if lhs != rhs {
                return Err("super coproduct multiplicativity");
            }
            let s = alg.mul(&super_antipode(alg, yp), &super_antipode(alg, xp));
            let s = if px && py { -&s } else { s };
            if super_antipode(alg, &xy) != s {
                return Err("super antipode anti-multiplicativity");
            }
        }
    }
    Ok(())
}

/// Sweedler components of a tensor as element pairs.
pub fn sweedler(t: &Tensor) -> Vec<(Element, Element, Scalar)> {
    t.iter().map(|(ws, c)| (single(&ws[0]), single(&ws[1]), c.clone())).collect()
}
