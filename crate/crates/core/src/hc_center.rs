//! Harish-Chandra projection Υ, torus characters, the Weyl dot action on the
//! torus algebra, and kernel-based construction of central and anticentral
//! elements.

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::adjoint::{ad_orbit_span, check_seed, to_vec};
use crate::algebra::{Algebra, Beta, Element, NormalWord, Word};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, SparseVec};
use crate::scalars::Scalar;
use crate::weights::{GammaElement, Weight, WeylElement};
use crate::zhang::{bar_e, bar_f, bar_k};

/// Element of Û^o = U^o ⊗ kΓ: combination of `K_μ ξ_γ`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TorusElement {
    terms: BTreeMap<(Beta, GammaElement), Scalar>,
}

impl TorusElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, mu: Beta, gamma: GammaElement, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (mu, gamma);
        match self.terms.get_mut(&key) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
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

    /// Terms `((μ in β-coordinates, γ), coefficient)`.
    pub fn iter(&self) -> impl Iterator<Item = (&(Beta, GammaElement), &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mu: &[i32], gamma: GammaElement) -> Scalar {
        self.terms.get(&(SmallVec::from_slice(mu), gamma)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn to_element(&self) -> Element {
        self.terms
            .iter()
            .map(|((mu, g), c)| (NormalWord::from_parts(Word::new(), mu.clone(), *g, Word::new()), c.clone()))
            .collect()
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_element())
    }
}

/// Character `(Λ, θ)` of the torus: `Λ(K_{β_i}) = c_i`, `θ ∈ Γ̂` given by bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    values: Vec<Scalar>,
    theta: GammaElement,
}

impl Character {
    pub fn new(values: Vec<Scalar>, theta: GammaElement) -> Result<Self> {
        if values.len() != theta.rank() {
            return Err(Error::RankMismatch { expected: theta.rank(), got: values.len() });
        }
        if values.iter().any(Scalar::is_zero) {
            return Err(Error::Precondition("character values must be nonzero".into()));
        }
        Ok(Self { values, theta })
    }

    /// `Λ = q^λ`, i.e. `c_i = v^{t_i}` for `λ` with twice-coordinates `t`.
    pub fn linear(lambda: &Weight, theta: GammaElement) -> Result<Self> {
        Self::new(lambda.twice().iter().map(|&t| Scalar::v_pow(t as i64)).collect(), theta)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn theta(&self) -> GammaElement {
        self.theta
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// `Λ(K_μ) = Π c_i^{μ_i}`.
    pub fn torus_value(&self, mu: &[i32]) -> Scalar {
        let mut acc = Scalar::one();
        for (c, &m) in self.values.iter().zip(mu) {
            if m != 0 {
                acc = acc.mul_ref(&c.pow(m as i64).expect("nonzero character value"));
            }
        }
        acc
    }

    /// `θ(ξ_γ) = ±1`.
    pub fn theta_value(&self, gamma: GammaElement) -> Scalar {
        Scalar::sign(self.theta.pair(&gamma))
    }

    /// `(q^{-ν}Λ, θ + ν)`: the character of the weight space at offset `ν`.
    pub fn shifted(&self, nu: &[i32]) -> Self {
        let values = self.values.iter().zip(nu).map(|(c, &n)| c.mul_ref(&Scalar::v_pow(-2 * n as i64))).collect();
        let mut bits = self.theta.mask();
        for (i, n) in nu.iter().enumerate() {
            if n.rem_euclid(2) == 1 {
                bits ^= 1 << i;
            }
        }
        Self { values, theta: GammaElement::from_mask(bits, self.rank()) }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; theta={})", self.theta)
    }
}

/// Keeps the normal words with empty F- and E-parts.
pub fn upsilon(a: &Element) -> TorusElement {
    let mut t = TorusElement::zero();
    for (w, c) in a.iter() {
        if w.is_toral() {
            t.add_term(SmallVec::from_slice(w.torus_beta()), w.gamma(), c.clone());
        }
    }
    t
}

/// `Σ coeff · θ(γ) · Λ(K_μ)`.
pub fn evaluate(x: &TorusElement, chi: &Character) -> Scalar {
    let mut acc = Scalar::zero();
    for ((mu, g), c) in x.iter() {
        acc = &acc + &(&(c * &chi.torus_value(mu)) * &chi.theta_value(*g));
    }
    acc
}

/// `w.K_μ = q^{(μ, w^{-1}ρ - ρ)} K_{wμ}`, Γ-parts carried along.
pub fn weyl_dot(alg: &Algebra, w: &WeylElement, x: &TorusElement) -> TorusElement {
    let rho = alg.roots().rho();
    let shift = &w.inverse().apply(rho) - rho;
    let mut out = TorusElement::zero();
    for ((mu, g), c) in x.iter() {
        let e: i64 = mu.iter().zip(shift.twice()).map(|(a, b)| *a as i64 * *b as i64).sum();
        let image = w.apply(&Weight::from_beta(mu)).beta().expect("Weyl group preserves P_g");
        out.add_term(image, *g, c * &Scalar::v_pow(e));
    }
    out
}

/// Central element with its certificate.
#[derive(Clone, Debug)]
pub struct CentralSolution {
    pub element: Element,
    /// Number of window words the ansatz ranged over.
    pub window: usize,
    /// Dimension of the commutant kernel before any orbit intersection.
    pub kernel_dim: usize,
    /// All commutators with `E_i`, `F_i`, `K_{β_i}`, `ξ_{β_i}` vanish.
    pub certified: bool,
}

fn boxes(bounds: &[i32]) -> Vec<Vec<i32>> {
    let mut out: Vec<Vec<i32>> = vec![vec![]];
    for &b in bounds {
        out = out.into_iter().flat_map(|v| (0..=b).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

/// Weight-zero window `F_u K_μ E_w` for the central element attached to `2λ`.
fn central_window(alg: &Algebra, two_lambda: &Weight, height: usize) -> Result<Vec<NormalWord>> {
    let l = alg.rank();
    let m: Vec<i32> = two_lambda.alpha_coords()?.to_vec();
    let tl = two_lambda.beta()?;
    let double: Vec<i32> = m.iter().map(|x| 2 * x).collect();
    let mut tori: Vec<Beta> = Vec::new();
    for c in boxes(&double) {
        let mut mu: Beta = tl.iter().map(|x| -x).collect();
        for (i, ci) in c.iter().enumerate() {
            for (a, b) in mu.iter_mut().zip(alg.alpha_beta(i + 1)) {
                *a += ci * b;
            }
        }
        tori.push(mu);
    }
    let class_2l = crate::weights::GammaElement::from_weight(two_lambda)?;
    let mut out = Vec::new();
    for d in boxes(&m) {
        let len: usize = d.iter().map(|&x| x as usize).sum();
        if 2 * len > height {
            continue;
        }
        let d8: Vec<u8> = d.iter().map(|&x| x as u8).collect();
        let words = alg.standard_words(&d8);
        let nf = alg.word_weight(&words.first().cloned().unwrap_or_default());
        for mu in &tori {
            let s: Beta = mu.iter().zip(&nf).map(|(a, b)| a + b).collect();
            if crate::algebra::gamma_of(&s) != class_2l {
                continue;
            }
            for u in &words {
                for w in &words {
                    out.push(NormalWord::from_parts(u.clone(), mu.clone(), GammaElement::zero(l), w.clone()));
                }
            }
        }
    }
    Ok(out)
}

fn commutator_tests(alg: &Algebra) -> Result<Vec<Element>> {
    let l = alg.rank();
    let mut gens = Vec::new();
    for i in 1..=l {
        gens.push(alg.e(i)?);
        gens.push(alg.f(i)?);
    }
    Ok(gens)
}

fn certify(alg: &Algebra, z: &Element) -> Result<bool> {
    let l = alg.rank();
    let mut gens = commutator_tests(alg)?;
    for i in 1..=l {
        gens.push(alg.k(&Weight::beta_basis(l, i))?);
        gens.push(alg.xi(GammaElement::from_mask(1 << (i - 1), l))?);
    }
    Ok(gens.iter().all(|g| alg.commutator(z, g).is_zero()))
}

/// Central element `z_{2λ}` of U found as the commutant kernel on a truncated
/// weight-zero window, normalized so that `K_{-2λ}` has coefficient
/// `q^{-2(ρ,λ)}` in `Υ(z)`.
pub fn solve_central(alg: &Algebra, two_lambda: &Weight, height: usize) -> Result<CentralSolution> {
    check_seed(alg, two_lambda)?;
    let l = alg.rank();
    if two_lambda.is_zero() {
        return Ok(CentralSolution { element: alg.one(), window: 1, kernel_dim: 1, certified: true });
    }
    let window = central_window(alg, two_lambda, height)?;
    let gens = commutator_tests(alg)?;
    let cols: Vec<SparseVec<(usize, NormalWord)>> = window
        .iter()
        .map(|w| {
            let x = Element::from_word(w.clone(), Scalar::one());
            let mut v = SparseVec::new();
            for (k, g) in gens.iter().enumerate() {
                for (nw, c) in alg.commutator(&x, g).iter() {
                    v.insert((k, nw.clone()), c.clone());
                }
            }
            v
        })
        .collect();
    let kernel = LinearMap::new(&cols).kernel();
    let kernel_dim = kernel.len();
    let as_element = |v: &SparseVec<usize>| -> Element {
        v.iter().map(|(j, c)| (window[*j].clone(), c.clone())).collect()
    };
    let candidates: Vec<Element> = kernel.iter().map(as_element).collect();
    let z = match candidates.len() {
        0 => return Err(Error::NoSolution(format!("window of {} words at height {height}", window.len()))),
        1 => candidates[0].clone(),
        _ => {
            let orbit = ad_orbit_span(alg, two_lambda, height)?;
            let mut ech = crate::linalg::Echelon::new();
            for b in &orbit.basis {
                ech.insert(&to_vec(b));
            }
            let rems: Vec<SparseVec<NormalWord>> = candidates.iter().map(|c| ech.reduce(&to_vec(c))).collect();
            let inner = LinearMap::new(&rems).kernel();
            if inner.len() != 1 {
                return Err(Error::NonUnique(if inner.is_empty() { kernel_dim } else { inner.len() }));
            }
            let mut z = Element::zero();
            for (j, c) in &inner[0] {
                z.add_scaled(&candidates[*j], c);
            }
            z
        }
    };
    let neg: Beta = two_lambda.beta()?.iter().map(|x| -x).collect();
    let lead = upsilon(&z).coefficient(&neg, GammaElement::zero(l));
    if lead.is_zero() {
        return Err(Error::NoSolution("kernel vector has no K_{-2λ} component".into()));
    }
    let rho = alg.roots().rho();
    let e: i64 = two_lambda.beta()?.iter().zip(rho.twice()).map(|(a, b)| *a as i64 * *b as i64).sum();
    let target = Scalar::v_pow(-e);
    let z = z.scale(&target.div(&lead)?);
    let certified = certify(alg, &z)?;
    Ok(CentralSolution { element: z, window: window.len(), kernel_dim, certified })
}

/// The sCasimir `ξ_{w_l} z_{w_l}` with its anticommutation certificate.
#[derive(Clone, Debug)]
pub struct AntiCentralSolution {
    pub element: Element,
    pub central: CentralSolution,
    /// Anticommutes with `e_l`, `f_l`; commutes with `e_i`, `f_i` (`i < l`), `k_{β_i}`, `ξ_{β_i}`.
    pub certified: bool,
}

pub fn solve_anticentral(alg: &Algebra, height: usize) -> Result<AntiCentralSolution> {
    let l = alg.rank();
    let central = solve_central(alg, &alg.roots().fundamental(l), height)?;
    let xi = alg.xi(GammaElement::w_l(l))?;
    let element = alg.mul(&xi, &central.element);
    let certified = anticentral_certificate(alg, &element)?;
    Ok(AntiCentralSolution { element, central, certified })
}

/// `ax = (-1)^{|x|} xa` for the generators `x` of Ū and of Γ.
pub fn anticentral_certificate(alg: &Algebra, a: &Element) -> Result<bool> {
    let l = alg.rank();
    let mut odd = Vec::new();
    let mut even = Vec::new();
    for i in 1..=l {
        let pair = [bar_e(alg, i)?, bar_f(alg, i)?];
        if i == l {
            odd.extend(pair);
        } else {
            even.extend(pair);
        }
        even.push(bar_k(alg, &Weight::beta_basis(l, i))?);
        even.push(alg.xi(GammaElement::from_mask(1 << (i - 1), l))?);
    }
    Ok(odd.iter().all(|x| alg.anticommutator(a, x).is_zero()) && even.iter().all(|x| alg.commutator(a, x).is_zero()))
}

/// `Π_i (q^{-(ρ,β_i)} K_{-β_i} + q^{(ρ,β_i)} K_{β_i})` expanded over the `2^l` sign choices.
pub fn minuscule_product(alg: &Algebra) -> TorusElement {
    let l = alg.rank();
    let rho = alg.roots().rho().twice().to_vec();
    let mut out = TorusElement::zero();
    for mask in 0..(1u32 << l) {
        let mut mu: Beta = SmallVec::new();
        let mut e = 0i64;
        for i in 0..l {
            let s = if mask >> i & 1 == 1 { 1 } else { -1 };
            mu.push(s);
            e += s as i64 * rho[i] as i64;
        }
        out.add_term(mu, GammaElement::zero(l), Scalar::v_pow(e));
    }
    out
}

/// Result of comparing `Υ(z_{w_l})` with the minuscule product formula.
#[derive(Clone, Debug)]
pub struct HcFormulaCheck {
    pub holds: bool,
    pub terms: usize,
    pub solution: CentralSolution,
}

pub fn hc_formula_check(alg: &Algebra, height: usize) -> Result<HcFormulaCheck> {
    let solution = solve_central(alg, &alg.roots().fundamental(alg.rank()), height)?;
    let ups = upsilon(&solution.element);
    let expect = minuscule_product(alg);
    Ok(HcFormulaCheck { holds: ups == expect && solution.certified, terms: expect.len(), solution })
}

/// Support on `K_{2μ}` (`μ ∈ P_k`) with trivial Γ-part, and fixed by the dot
/// action of every simple reflection.
pub fn even_torus_invariant_check(alg: &Algebra, x: &TorusElement) -> bool {
    let support_ok = x.iter().all(|((mu, g), _)| {
        g.is_zero() && mu.windows(2).all(|w| (w[0] - w[1]).rem_euclid(2) == 0)
    });
    support_ok && WeylElement::generators(alg.rank()).iter().all(|s| weyl_dot(alg, s, x) == *x)
}

/// Height at which the window for `z_{w_l}` closes: twice the height of `w_l`.
pub fn scasimir_height(rank: usize) -> usize {
    rank * (rank + 1)
}
