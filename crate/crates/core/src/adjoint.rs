//! Twisted adjoint actions `ad_λ`, `sad_λ`, the transfer identity between them
//! through Ψ, and height-truncated orbit experiments.

use std::collections::VecDeque;

use crate::algebra::{Algebra, Element, Graded, NormalWord, Word};
use crate::error::{Error, Result};
use crate::hopf::{antipode, coproduct, super_antipode, super_coproduct, sweedler};
use crate::linalg::{Echelon, LinearMap, SparseVec};
use crate::scalars::Scalar;
use crate::weights::{GammaElement, Weight};
use crate::zhang::psi;

/// `ad_λ a(x) = Σ (-1)^{(λ, ν(a₂))} a₁ x S(a₂)`.
pub fn adjoint_act(alg: &Algebra, a: &Element, x: &Element, lambda: GammaElement) -> Element {
    let mut out = Element::zero();
    for (a1, a2, c) in sweedler(&coproduct(alg, a)) {
        let nu2 = alg.word_nu(a2.iter().next().unwrap().0);
        let sign = lambda.pair_weight(&nu2);
        let t = alg.mul_all(&[&a1, x, &antipode(alg, &a2)]);
        out.add_scaled(&t, &Scalar::sign(sign).mul_ref(&c));
    }
    out
}

/// `sad_λ a(x) = Σ (-1)^{|b₂||x|} (-1)^{(λ, ν(b₂))} b₁ x S̄(b₂)` over `Δ̄(a) = Σ b₁ ⊗ b₂`,
/// with `x` split into its ℤ₂-homogeneous parts.
pub fn super_adjoint_act(alg: &Algebra, a: &Element, x: &Element, lambda: GammaElement) -> Element {
    let (x0, x1) = alg.split_parity(x);
    let mut out = Element::zero();
    for (b1, b2, c) in sweedler(&super_coproduct(alg, a)) {
        let w2 = b2.iter().next().unwrap().0;
        let nu2 = alg.word_nu(w2);
        let odd2 = alg.word_parity(w2);
        let s2 = super_antipode(alg, &b2);
        for (xp, px) in [(&x0, false), (&x1, true)] {
            if xp.is_zero() {
                continue;
            }
            let sign = (odd2 && px) ^ lambda.pair_weight(&nu2);
            let t = alg.mul_all(&[&b1, xp, &s2]);
            out.add_scaled(&t, &Scalar::sign(sign).mul_ref(&c));
        }
    }
    out
}

/// `sad' = sad_{w_l}`.
pub fn super_adjoint_prime(alg: &Algebra, a: &Element, x: &Element) -> Element {
    super_adjoint_act(alg, a, x, GammaElement::w_l(alg.rank()))
}

fn bigrade(alg: &Algebra, a: &Element) -> Result<(crate::algebra::Beta, GammaElement, GammaElement)> {
    let nu = alg.grade_nu(a).homogeneous().ok_or(Error::NotHomogeneous("ν"))?;
    let delta = alg.grade_delta(a).homogeneous().ok_or(Error::NotHomogeneous("δ"))?;
    let mu = alg.grade_mu(a).homogeneous().ok_or(Error::NotHomogeneous("μ"))?;
    Ok((nu.beta()?, delta, mu))
}

/// Checks `Ψ(ad_λ a x) = (-1)^t sad_{λ+δ(x)} Ψ(a) Ψ(x)` with
/// `t = (ν(a), δ(a)) + (ν(a), μ(x)) + (ν(x), δ(a))`.
pub fn transfer_check(alg: &Algebra, a: &Element, x: &Element, lambda: GammaElement) -> Result<bool> {
    if a.is_zero() || x.is_zero() {
        return Ok(true);
    }
    let (nu_a, delta_a, _) = bigrade(alg, a)?;
    let (nu_x, delta_x, mu_x) = bigrade(alg, x)?;
    let t = delta_a.pair_weight(&nu_a) ^ mu_x.pair_weight(&nu_a) ^ delta_a.pair_weight(&nu_x);
    let lhs = psi(alg, &adjoint_act(alg, a, x, lambda));
    let rhs = super_adjoint_act(alg, &psi(alg, a), &psi(alg, x), lambda + delta_x);
    Ok(lhs == if t { -&rhs } else { rhs })
}

/// Echelonized span of a truncated orbit.
#[derive(Clone, Debug)]
pub struct OrbitSpan {
    pub basis: Vec<Element>,
    /// False when some generated vector left the height window.
    pub stabilized: bool,
}

impl OrbitSpan {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, x: &Element) -> bool {
        let mut ech = Echelon::new();
        for b in &self.basis {
            ech.insert(&to_vec(b));
        }
        ech.contains(&to_vec(x))
    }
}

pub(crate) fn to_vec(x: &Element) -> SparseVec<NormalWord> {
    x.iter().map(|(w, c)| (w.clone(), c.clone())).collect()
}

pub(crate) fn from_vec(v: &SparseVec<NormalWord>) -> Element {
    v.iter().map(|(w, c)| (w.clone(), c.clone())).collect()
}

/// Checks `2λ ∈ P_g` with `λ` dominant in P_k.
pub(crate) fn check_seed(alg: &Algebra, two_lambda: &Weight) -> Result<()> {
    alg.roots().check_rank(two_lambda)?;
    if !two_lambda.in_pg() {
        return Err(Error::NotInLattice(two_lambda.to_string(), "P_g"));
    }
    let lambda = Weight::from_twice(&two_lambda.twice().iter().map(|t| t / 2).collect::<Vec<_>>());
    if !alg.roots().is_dominant(&lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// Span of the closure of `{seed}` under the given operators, truncated at height `h`.
pub(crate) fn closure(
    seeds: &[Element],
    ops: &[Box<dyn Fn(&Element) -> Element + '_>],
    height: usize,
) -> OrbitSpan {
    let mut ech: Echelon<NormalWord> = Echelon::new();
    let mut queue = VecDeque::new();
    let mut stabilized = true;
    for s in seeds {
        if ech.insert(&to_vec(s)) {
            queue.push_back(s.clone());
        }
    }
    while let Some(x) = queue.pop_front() {
        for op in ops {
            let y = op(&x);
            if y.is_zero() {
                continue;
            }
            if y.height() > height {
                stabilized = false;
                continue;
            }
            let r = ech.reduce(&to_vec(&y));
            if !r.is_empty() && ech.insert(&r) {
                queue.push_back(from_vec(&r));
            }
        }
    }
    OrbitSpan { basis: ech.into_rows().iter().map(from_vec).collect(), stabilized }
}

/// Truncated span of `(ad U) K_{-2λ}`, closed under `ad E_i`, `ad F_i`
/// (torus letters act diagonally).
pub fn ad_orbit_span(alg: &Algebra, two_lambda: &Weight, height: usize) -> Result<OrbitSpan> {
    check_seed(alg, two_lambda)?;
    let seed = alg.k(&-two_lambda)?;
    let zero = GammaElement::zero(alg.rank());
    let mut gens = Vec::new();
    for i in 1..=alg.rank() {
        gens.push(alg.e(i)?);
        gens.push(alg.f(i)?);
    }
    let ops: Vec<Box<dyn Fn(&Element) -> Element + '_>> = gens
        .iter()
        .map(|g| Box::new(move |x: &Element| adjoint_act(alg, g, x, zero)) as Box<dyn Fn(&Element) -> Element>)
        .collect();
    Ok(closure(&[seed], &ops, height))
}

/// Standard-word window of U: F-word · K_μ · E-word with height ≤ `height`
/// and torus in the box `[-1, 1]^l` (β-coordinates).
fn u_window(alg: &Algebra, height: usize) -> Vec<NormalWord> {
    let l = alg.rank();
    let mut tori: Vec<Vec<i32>> = vec![vec![]];
    for _ in 0..l {
        tori = tori.into_iter().flat_map(|t| (-1..=1).map(move |x| [t.clone(), vec![x]].concat())).collect();
    }
    let words: Vec<Vec<Word>> = (0..=height).map(|n| alg.standard_words_of_length(n)).collect();
    let mut out = Vec::new();
    for hf in 0..=height {
        for he in 0..=height - hf {
            for fw in &words[hf] {
                for ew in &words[he] {
                    for t in &tori {
                        let el = alg.from_letters(fw, t, GammaElement::zero(l), ew);
                        out.push(el.iter().next().unwrap().0.clone());
                    }
                }
            }
        }
    }
    out
}

/// Probe for the vanishing of the `ad_λ`-locally finite part when `λ ≠ 0`:
/// for each `i` with `(λ, α_i)` odd, no nonzero `a` in the window satisfies
/// `F_i a + a F_i = 0`.
pub fn twisted_vanishing_probe(alg: &Algebra, lambda: GammaElement, height: usize) -> Result<bool> {
    if lambda.is_zero() {
        return Err(Error::Precondition("twist must be nonzero".into()));
    }
    let window = u_window(alg, height);
    for i in 1..=alg.rank() {
        if !lambda.pair_weight(alg.alpha_beta(i)) {
            continue;
        }
        let fi = alg.f(i)?;
        let cols: Vec<SparseVec<NormalWord>> = window
            .iter()
            .map(|w| {
                let x = Element::from_word(w.clone(), Scalar::one());
                to_vec(&alg.anticommutator(&fi, &x))
            })
            .collect();
        if !LinearMap::new(&cols).kernel().is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Split of a truncated `ad`-orbit of `K_{-2λ}` by δ-grade, carried to Ū.
#[derive(Clone, Debug)]
pub struct BarDecomposition {
    /// `Ψ` of the δ-grade-0 part (stable under `sad`).
    pub n0: Vec<Element>,
    /// `Ψ` of the δ-grade-`w_l` part (stable under `sad'`).
    pub n1: Vec<Element>,
    pub stabilized: bool,
    /// Whether each part is closed under the matching action of all `e_i`, `f_i`.
    pub closed: bool,
}

pub fn bar_locally_finite_decomposition(alg: &Algebra, two_lambda: &Weight, height: usize) -> Result<BarDecomposition> {
    let orbit = ad_orbit_span(alg, two_lambda, height)?;
    let l = alg.rank();
    let zero = GammaElement::zero(l);
    let wl = GammaElement::w_l(l);
    let mut n0 = Vec::new();
    let mut n1 = Vec::new();
    for b in &orbit.basis {
        match alg.grade_delta(b) {
            Graded::Homogeneous(d) if d == zero => n0.push(psi(alg, b)),
            Graded::Homogeneous(d) if d == wl => n1.push(psi(alg, b)),
            _ => return Err(Error::NotHomogeneous("δ")),
        }
    }
    let mut gens = Vec::new();
    for i in 1..=l {
        gens.push(crate::zhang::bar_e(alg, i)?);
        gens.push(crate::zhang::bar_f(alg, i)?);
    }
    let mut closed = true;
    for (part, twist) in [(&n0, zero), (&n1, wl)] {
        let mut ech = Echelon::new();
        for b in part.iter() {
            ech.insert(&to_vec(b));
        }
        for b in part.iter() {
            for g in &gens {
                let y = super_adjoint_act(alg, g, b, twist);
                if y.height() <= height && !ech.contains(&to_vec(&y)) {
                    closed = false;
                }
            }
        }
    }
    Ok(BarDecomposition { n0, n1, stabilized: orbit.stabilized, closed })
}
