//! The four gradations of Û: weight ν, Γ-classes μ and δ, and the ℤ₂-grade.

use std::collections::BTreeSet;

use super::{Algebra, Beta, Element, NormalWord};
use crate::weights::{eta_beta, parity_beta, GammaElement, Weight};

/// Degree of an element for one gradation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graded<T> {
    Zero,
    Homogeneous(T),
    Mixed,
}

impl<T> Graded<T> {
    pub fn homogeneous(self) -> Option<T> {
        match self {
            Graded::Homogeneous(t) => Some(t),
            _ => None,
        }
    }
}

fn collect<T: Ord>(items: impl Iterator<Item = T>) -> Graded<T> {
    let set: BTreeSet<T> = items.collect();
    match set.len() {
        0 => Graded::Zero,
        1 => Graded::Homogeneous(set.into_iter().next().unwrap()),
        _ => Graded::Mixed,
    }
}

impl Algebra {
    /// Weight `ν(w)` in β-coordinates: E-letters add `α_i`, F-letters subtract.
    pub fn word_nu(&self, w: &NormalWord) -> Beta {
        let e = self.word_weight(&w.e);
        let f = self.word_weight(&w.f);
        e.iter().zip(&f).map(|(a, b)| a - b).collect()
    }

    /// `δ(w)`: torus class plus `Σ α_i` over F-letters, mod 2.
    pub fn word_delta(&self, w: &NormalWord) -> GammaElement {
        let f = self.word_weight(&w.f);
        let s: Beta = f.iter().zip(&w.torus).map(|(a, b)| a + b).collect();
        gamma_of(&s)
    }

    /// `μ(w)` from the letter markers `E_i ↦ β_{i+1}`, `F_i ↦ β_i`, `K_λ ↦ λ`, `ξ ↦ 0`.
    pub fn word_mu(&self, w: &NormalWord) -> GammaElement {
        let l = self.rank();
        let mut s: Beta = w.torus.clone();
        for &i in w.f.iter() {
            s[i as usize - 1] += 1;
        }
        for &i in w.e.iter() {
            if (i as usize) < l {
                s[i as usize] += 1;
            }
        }
        gamma_of(&s)
    }

    pub fn word_parity(&self, w: &NormalWord) -> bool {
        parity_beta(&self.word_nu(w))
    }

    pub fn grade_nu(&self, a: &Element) -> Graded<Weight> {
        match collect(a.terms.keys().map(|w| self.word_nu(w))) {
            Graded::Homogeneous(b) => Graded::Homogeneous(Weight::from_beta(&b)),
            Graded::Zero => Graded::Zero,
            Graded::Mixed => Graded::Mixed,
        }
    }

    pub fn grade_mu(&self, a: &Element) -> Graded<GammaElement> {
        collect(a.terms.keys().map(|w| self.word_mu(w)))
    }

    pub fn grade_delta(&self, a: &Element) -> Graded<GammaElement> {
        collect(a.terms.keys().map(|w| self.word_delta(w)))
    }

    pub fn z2_grade(&self, a: &Element) -> Graded<bool> {
        collect(a.terms.keys().map(|w| self.word_parity(w)))
    }

    /// Splits an element into its ℤ₂-homogeneous parts `(even, odd)`.
    pub fn split_parity(&self, a: &Element) -> (Element, Element) {
        (a.filter(|w| !self.word_parity(w)), a.filter(|w| self.word_parity(w)))
    }

    /// Compatibility `μ = δ + η(ν)` on every word of `a`.
    pub fn bigrade_check(&self, a: &Element) -> bool {
        a.terms.keys().all(|w| self.word_mu(w) == self.word_delta(w) + eta_beta(&self.word_nu(w)))
    }
}

pub(crate) fn gamma_of(beta: &[i32]) -> GammaElement {
    let mut mask = 0u32;
    for (i, b) in beta.iter().enumerate() {
        if b.rem_euclid(2) == 1 {
            mask |= 1 << i;
        }
    }
    GammaElement::from_mask(mask, beta.len())
}
