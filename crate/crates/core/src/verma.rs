//! Height-truncated Verma modules `M(Λ, θ)` over Û with their ℤ₂-grading and Γ-action.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{Algebra, Beta, Element, NormalWord, Word};
use crate::error::{Error, Result};
use crate::hc_center::{evaluate, scasimir_height, solve_anticentral, upsilon, Character};
use crate::linalg::{LinearMap, SparseVec};
use crate::scalars::Scalar;
use crate::weights::{parity_beta, GammaElement, Weight};

/// Coordinates over the truncated basis `F_u v_Λ`.
pub type VermaVector = BTreeMap<usize, Scalar>;

#[derive(Clone, Debug)]
pub struct VermaModule {
    character: Character,
    height: usize,
    grade_offset: bool,
    basis: Vec<Word>,
    offsets: Vec<Beta>,
    index: HashMap<Word, usize>,
}

/// Result of acting on a vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActResult {
    pub vector: VermaVector,
    /// Some term left the height window and was dropped.
    pub overflow: bool,
}

/// Singular vector and the character of the submodule it generates.
#[derive(Clone, Debug)]
pub struct SingularVector {
    pub vector: VermaVector,
    pub character: Character,
}

impl VermaModule {
    pub fn build(alg: &Algebra, character: Character, height: usize, grade_offset: bool) -> Result<Self> {
        if character.rank() != alg.rank() {
            return Err(Error::RankMismatch { expected: alg.rank(), got: character.rank() });
        }
        let mut basis = Vec::new();
        for n in 0..=height {
            basis.extend(alg.standard_words_of_length(n));
        }
        let offsets = basis.iter().map(|w| alg.word_weight(w)).collect();
        let index = basis.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        Ok(Self { character, height, grade_offset, basis, offsets, index })
    }

    pub fn character(&self) -> &Character {
        &self.character
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_word(&self, k: usize) -> &[u8] {
        &self.basis[k]
    }

    /// Weight offset `ν` (β-coordinates) of basis vector `k`: its weight is `q^{-ν}Λ`.
    pub fn offset(&self, k: usize) -> &[i32] {
        &self.offsets[k]
    }

    /// ℤ₂-grade `|ν| + j` of basis vector `k`.
    pub fn grade(&self, k: usize) -> bool {
        parity_beta(&self.offsets[k]) ^ self.grade_offset
    }

    pub fn basis_vector(&self, k: usize) -> VermaVector {
        BTreeMap::from([(k, Scalar::one())])
    }

    /// Indices of the basis vectors at offset `ν`.
    pub fn weight_space(&self, nu: &[i32]) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.offsets[k].as_slice() == nu).collect()
    }

    /// Dimensions of the weight spaces, keyed by offset.
    pub fn weight_dims(&self) -> BTreeMap<Beta, usize> {
        let mut out = BTreeMap::new();
        for o in &self.offsets {
            *out.entry(o.clone()).or_insert(0) += 1;
        }
        out
    }

    /// `v_Λ` evaluation of a normal word applied to the highest-weight vector.
    fn word_on_highest(&self, w: &NormalWord) -> Option<Scalar> {
        if !w.e_word().is_empty() {
            return None;
        }
        Some(self.character.torus_value(w.torus_beta()).mul_ref(&self.character.theta_value(w.gamma())))
    }

    pub fn act(&self, alg: &Algebra, a: &Element, m: &VermaVector) -> ActResult {
        let mut out = VermaVector::new();
        let mut overflow = false;
        for (k, c) in m {
            let fw = alg.from_letters(&self.basis[*k], &vec![0; alg.rank()], GammaElement::zero(alg.rank()), &[]);
            for (w, d) in alg.mul(a, &fw).iter() {
                let Some(s) = self.word_on_highest(w) else { continue };
                let Some(&idx) = self.index.get(w.f_word()) else {
                    overflow = true;
                    continue;
                };
                let add = &(c * d) * &s;
                let e = out.entry(idx).or_insert_with(Scalar::zero);
                *e = &*e + &add;
            }
        }
        out.retain(|_, c| !c.is_zero());
        ActResult { vector: out, overflow }
    }

    /// Kernel of all `E_i` on the weight space at offset `ν`, each vector
    /// paired with the character `(q^{-ν}Λ, θ + ν)` it generates.
    pub fn singular_vectors(&self, alg: &Algebra, nu: &Weight) -> Result<Vec<SingularVector>> {
        let nu = nu.beta()?;
        let space = self.weight_space(&nu);
        let es: Vec<Element> = (1..=alg.rank()).map(|i| alg.e(i)).collect::<Result<_>>()?;
        let cols: Vec<SparseVec<(usize, usize)>> = space
            .iter()
            .map(|&k| {
                let mut v = SparseVec::new();
                for (i, e) in es.iter().enumerate() {
                    for (j, c) in self.act(alg, e, &self.basis_vector(k)).vector {
                        v.insert((i, j), c);
                    }
                }
                v
            })
            .collect();
        let character = self.character.shifted(&nu);
        Ok(LinearMap::new(&cols)
            .kernel()
            .into_iter()
            .map(|v| SingularVector {
                vector: v.into_iter().map(|(j, c)| (space[j], c)).collect(),
                character: character.clone(),
            })
            .collect())
    }

    /// Scalars by which `a` acts on the even and odd components, or `None`
    /// for a component where the action is not scalar (or which is empty).
    pub fn scalar_action(&self, alg: &Algebra, a: &Element) -> ScalarAction {
        let mut scal: [Option<Scalar>; 2] = [None, None];
        let mut ok = [true, true];
        let mut seen = [false, false];
        for k in 0..self.dim() {
            let g = self.grade(k) as usize;
            let r = self.act(alg, a, &self.basis_vector(k));
            let s = if r.overflow {
                None
            } else if r.vector.is_empty() {
                Some(Scalar::zero())
            } else if r.vector.len() == 1 && r.vector.contains_key(&k) {
                Some(r.vector[&k].clone())
            } else {
                None
            };
            match (s, seen[g]) {
                (None, _) => ok[g] = false,
                (Some(s), false) => {
                    scal[g] = Some(s);
                    seen[g] = true;
                }
                (Some(s), true) => {
                    if scal[g].as_ref() != Some(&s) {
                        ok[g] = false;
                    }
                }
            }
        }
        ScalarAction {
            even: if ok[0] { scal[0].clone() } else { None },
            odd: if ok[1] { scal[1].clone() } else { None },
            holds: ok[0] && ok[1],
        }
    }

    /// Whether `E_l K_{-w_l}` acts nonzero on each nonempty graded component.
    pub fn odd_nondegeneracy_probe(&self, alg: &Algebra) -> Result<bool> {
        let l = alg.rank();
        let op = alg.mul(&alg.e(l)?, &alg.k(&-&alg.roots().fundamental(l))?);
        let mut hit = [false, false];
        let mut present = [false, false];
        for k in 0..self.dim() {
            let g = self.grade(k) as usize;
            present[g] = true;
            if !self.act(alg, &op, &self.basis_vector(k)).vector.is_empty() {
                hit[g] = true;
            }
        }
        Ok((0..2).all(|g| !present[g] || hit[g]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarAction {
    pub even: Option<Scalar>,
    pub odd: Option<Scalar>,
    pub holds: bool,
}

/// `∀i: Λ(K_{β_i})² + q^{-2(ρ,β_i)} ≠ 0`.
pub fn annihilation_criterion(alg: &Algebra, chi: &Character) -> bool {
    let rho = alg.roots().rho().twice();
    chi.values()
        .iter()
        .zip(rho)
        .all(|(c, &t)| !(c.mul_ref(c) + Scalar::v_pow(-2 * t as i64)).is_zero())
}

/// Eigenvalues of the sCasimir `sc` on the even and odd components of `M`.
pub fn scasimir_spectrum(alg: &Algebra, m: &VermaModule, sc: &Element) -> Result<(Scalar, Scalar)> {
    let a = m.scalar_action(alg, sc);
    match (a.even, a.odd) {
        (Some(e), Some(o)) => Ok((e, o)),
        _ => Err(Error::NonScalar("sCasimir on a graded component of the Verma module".into())),
    }
}

/// `±θ(w_l) Λ(Υ(z_{w_l}))`: predicted sCasimir eigenvalues on the even and odd components.
pub fn predicted_scasimir_spectrum(m: &VermaModule, z: &Element, rank: usize) -> (Scalar, Scalar) {
    let base = evaluate(&upsilon(z), m.character());
    let base = base.mul_ref(&m.character().theta_value(GammaElement::w_l(rank)));
    let at_v = if m.grade_offset { base.neg_ref() } else { base };
    (at_v.clone(), at_v.neg_ref())
}

/// For a degenerate character, whether `ξ z_{w_l}` kills every basis vector of the window.
pub fn degenerate_annihilation_check(alg: &Algebra, chi: &Character, height: usize) -> Result<bool> {
    if annihilation_criterion(alg, chi) {
        return Err(Error::Precondition("character is not degenerate".into()));
    }
    let sc = solve_anticentral(alg, scasimir_height(alg.rank()))?;
    annihilates_window(alg, &sc.element, chi, height)
}

/// Whether `a` kills every basis vector of the height-truncated `M(Λ, θ)`.
pub fn annihilates_window(alg: &Algebra, a: &Element, chi: &Character, height: usize) -> Result<bool> {
    let m = VermaModule::build(alg, chi.clone(), height, false)?;
    Ok((0..m.dim()).all(|k| m.act(alg, a, &m.basis_vector(k)).vector.is_empty()))
}
