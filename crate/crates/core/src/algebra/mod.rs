//! The algebra Û = U ⋊ kΓ in triangular normal form `F-word · K_μ · ξ_γ · E-word`.

mod grading;
mod relations;
mod serre;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::{Arc, RwLock};

use smallvec::SmallVec;

pub use grading::Graded;
pub use relations::RelationCheck;
pub(crate) use grading::gamma_of;
pub(crate) use serre::multidegrees_of_total;

use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::weights::{pair_int, GammaElement, RhoConvention, RootData, Weight};
use serre::SerreTables;

/// Sequence of simple-root indices `1..=l`.
pub type Word = SmallVec<[u8; 8]>;

/// β-coordinates of a point of P_g.
pub type Beta = SmallVec<[i32; 4]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalWord {
    f: Word,
    torus: Beta,
    gamma: GammaElement,
    e: Word,
}

impl NormalWord {
    pub fn identity(rank: usize) -> Self {
        Self { f: Word::new(), torus: SmallVec::from_elem(0, rank), gamma: GammaElement::zero(rank), e: Word::new() }
    }

    pub(crate) fn from_parts(f: Word, torus: Beta, gamma: GammaElement, e: Word) -> Self {
        Self { f, torus, gamma, e }
    }

    pub fn f_word(&self) -> &[u8] {
        &self.f
    }

    pub fn e_word(&self) -> &[u8] {
        &self.e
    }

    /// Torus letter `μ` in β-coordinates.
    pub fn torus_beta(&self) -> &[i32] {
        &self.torus
    }

    pub fn torus(&self) -> Weight {
        Weight::from_beta(&self.torus)
    }

    pub fn gamma(&self) -> GammaElement {
        self.gamma
    }

    pub fn rank(&self) -> usize {
        self.torus.len()
    }

    pub fn height(&self) -> usize {
        self.f.len() + self.e.len()
    }

    /// No E- or F-letters.
    pub fn is_toral(&self) -> bool {
        self.f.is_empty() && self.e.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.is_toral() && self.gamma.is_zero() && self.torus.iter().all(|&x| x == 0)
    }

    pub(crate) fn with_gamma(&self, gamma: GammaElement) -> Self {
        Self { gamma, ..self.clone() }
    }
}

impl Ord for NormalWord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.f.len(), &self.f, &self.torus, self.gamma, self.e.len(), &self.e).cmp(&(
            other.f.len(),
            &other.f,
            &other.torus,
            other.gamma,
            other.e.len(),
            &other.e,
        ))
    }
}

impl PartialOrd for NormalWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_letters(out: &mut Vec<String>, name: &str, w: &[u8]) {
    let mut k = 0;
    while k < w.len() {
        let mut run = 1;
        while k + run < w.len() && w[k + run] == w[k] {
            run += 1;
        }
        if run == 1 {
            out.push(format!("{name}{}", w[k]));
        } else {
            out.push(format!("{name}{}^{run}", w[k]));
        }
        k += run;
    }
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        write_letters(&mut parts, "F", &self.f);
        if self.torus.iter().any(|&x| x != 0) {
            parts.push(format!("K{}", self.torus()));
        }
        if !self.gamma.is_zero() {
            parts.push(format!("xi{}", self.gamma));
        }
        write_letters(&mut parts, "E", &self.e);
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Finite linear combination of normal words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<NormalWord, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(word: NormalWord, coeff: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(word, coeff);
        e
    }

    pub fn scalar(rank: usize, c: Scalar) -> Self {
        Self::from_word(NormalWord::identity(rank), c)
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

    pub fn terms(&self) -> &BTreeMap<NormalWord, Scalar> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&NormalWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &NormalWord) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, word: NormalWord, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(c) => {
                *c = &*c + &coeff;
                if c.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// Maximum height over all terms.
    pub fn height(&self) -> usize {
        self.terms.keys().map(NormalWord::height).max().unwrap_or(0)
    }

    /// Scalar value if this is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (w, c) = self.terms.iter().next().unwrap();
                w.is_identity().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&NormalWord) -> bool) -> Element {
        Element { terms: self.terms.iter().filter(|(w, _)| keep(w)).map(|(w, c)| (w.clone(), c.clone())).collect() }
    }
}

impl FromIterator<(NormalWord, Scalar)> for Element {
    fn from_iter<T: IntoIterator<Item = (NormalWord, Scalar)>>(iter: T) -> Self {
        let mut e = Element::zero();
        for (w, c) in iter {
            e.add_term(w, c);
        }
        e
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1));
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Scalar::from_int(-1))
    }
}

fn format_term(word: &NormalWord, c: &Scalar) -> String {
    if word.is_identity() {
        let s = c.to_string();
        return if c.is_single_term() { s } else { format!("({s})") };
    }
    if c.is_one() {
        return word.to_string();
    }
    if c.neg_ref().is_one() {
        return format!("-{word}");
    }
    if c.is_single_term() {
        format!("{c}*{word}")
    } else {
        format!("({c})*{word}")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let t = format_term(w, c);
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

/// Raw term of an E·F straightening: F-word, torus, E-word, coefficient.
type RawTerm = (Word, Beta, Word, Scalar);

/// Computation context: root data plus memoized Serre tables and E·F
/// straightening results. All caches are pure lookups.
#[derive(Debug)]
pub struct Algebra {
    roots: RootData,
    alpha: Vec<Beta>,
    serre: SerreTables,
    ef_cache: RwLock<HashMap<(Word, Word), Arc<Vec<RawTerm>>>>,
    memo_budget: Option<usize>,
    exhausted: AtomicBool,
}

impl Algebra {
    pub fn new(rank: usize, convention: RhoConvention) -> Result<Self> {
        let roots = RootData::build(rank, convention)?;
        Ok(Self::from_roots(roots))
    }

    pub fn from_roots(roots: RootData) -> Self {
        let alpha = (1..=roots.rank()).map(|i| roots.simple_root(i).beta().expect("roots lie in P_g")).collect();
        let serre = SerreTables::new(&roots);
        Self { roots, alpha, serre, ef_cache: RwLock::new(HashMap::new()), memo_budget: None, exhausted: AtomicBool::new(false) }
    }

    /// Caps the number of memoized straightening entries. Once the cap is hit,
    /// results are still exact but [`Algebra::budget_exhausted`] reports true.
    pub fn with_memo_budget(mut self, budget: Option<usize>) -> Self {
        self.memo_budget = budget;
        self
    }

    pub fn budget_exhausted(&self) -> bool {
        self.exhausted.load(AtomicOrdering::Relaxed)
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn roots(&self) -> &RootData {
        &self.roots
    }

    /// `α_i` in β-coordinates.
    pub(crate) fn alpha(&self, i: u8) -> &Beta {
        &self.alpha[i as usize - 1]
    }

    /// `α_i` in β-coordinates, 1-based.
    pub fn alpha_beta(&self, i: usize) -> &[i32] {
        &self.alpha[i - 1]
    }

    pub(crate) fn word_weight(&self, w: &[u8]) -> Beta {
        let mut acc: Beta = SmallVec::from_elem(0, self.rank());
        for &x in w {
            for (a, b) in acc.iter_mut().zip(self.alpha(x)) {
                *a += b;
            }
        }
        acc
    }

    fn check_index(&self, i: usize) -> Result<u8> {
        if i == 0 || i > self.rank() {
            return Err(Error::InvalidIndex(i));
        }
        Ok(i as u8)
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        self.roots.check_rank(w)
    }

    pub fn one(&self) -> Element {
        Element::scalar(self.rank(), Scalar::one())
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        Element::scalar(self.rank(), c)
    }

    pub fn e(&self, i: usize) -> Result<Element> {
        let i = self.check_index(i)?;
        let mut w = NormalWord::identity(self.rank());
        w.e.push(i);
        Ok(Element::from_word(w, Scalar::one()))
    }

    pub fn f(&self, i: usize) -> Result<Element> {
        let i = self.check_index(i)?;
        let mut w = NormalWord::identity(self.rank());
        w.f.push(i);
        Ok(Element::from_word(w, Scalar::one()))
    }

    /// `K_μ` for `μ ∈ P_g`.
    pub fn k(&self, mu: &Weight) -> Result<Element> {
        self.check_weight(mu)?;
        let beta = mu.beta()?;
        let mut w = NormalWord::identity(self.rank());
        w.torus = beta;
        Ok(Element::from_word(w, Scalar::one()))
    }

    pub(crate) fn k_beta(&self, beta: &[i32]) -> Element {
        let mut w = NormalWord::identity(self.rank());
        w.torus = SmallVec::from_slice(beta);
        Element::from_word(w, Scalar::one())
    }

    pub fn xi(&self, gamma: GammaElement) -> Result<Element> {
        if gamma.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: gamma.rank() });
        }
        let mut w = NormalWord::identity(self.rank());
        w.gamma = gamma;
        Ok(Element::from_word(w, Scalar::one()))
    }

    /// `K_{α_i}`.
    pub fn k_alpha(&self, i: usize, sign: i32) -> Result<Element> {
        let i = self.check_index(i)?;
        let b: Beta = self.alpha(i).iter().map(|x| x * sign).collect();
        Ok(self.k_beta(&b))
    }

    fn budget_allows(&self, len: usize) -> bool {
        match self.memo_budget {
            Some(b) if len >= b => {
                self.exhausted.store(true, AtomicOrdering::Relaxed);
                false
            }
            _ => true,
        }
    }

    /// `E_ew · F_fw` rewritten as a combination of `F · K · E` with raw words.
    fn ef(&self, ew: &[u8], fw: &[u8]) -> Arc<Vec<RawTerm>> {
        let rank = self.rank();
        if ew.is_empty() || fw.is_empty() {
            return Arc::new(vec![(
                SmallVec::from_slice(fw),
                SmallVec::from_elem(0, rank),
                SmallVec::from_slice(ew),
                Scalar::one(),
            )]);
        }
        let key = (Word::from_slice(ew), Word::from_slice(fw));
        if let Some(hit) = self.ef_cache.read().unwrap().get(&key) {
            return hit.clone();
        }
        let i = *ew.last().unwrap();
        let ew1 = &ew[..ew.len() - 1];
        let mut acc: BTreeMap<(Word, Beta, Word), Scalar> = BTreeMap::new();
        let mut push = |f: Word, t: Beta, e: Word, c: Scalar| {
            if c.is_zero() {
                return;
            }
            let k = (f, t, e);
            let entry = acc.entry(k).or_insert_with(Scalar::zero);
            *entry = &*entry + &c;
        };
        for (f, t, e, c) in self.ef(ew1, fw).iter() {
            let mut e2 = e.clone();
            e2.push(i);
            push(f.clone(), t.clone(), e2, c.clone());
        }
        let ai = self.alpha(i).clone();
        let denom_inv = (Scalar::q_pow(1) - Scalar::q_pow(-1)).inv().expect("q - 1/q is nonzero");
        for p in 0..fw.len() {
            if fw[p] != i {
                continue;
            }
            let after = self.word_weight(&fw[p + 1..]);
            let s = pair_int(&ai, &after);
            let mut rest: Word = SmallVec::from_slice(&fw[..p]);
            rest.extend_from_slice(&fw[p + 1..]);
            for (f, t, e, c) in self.ef(ew1, &rest).iter() {
                let ne = self.word_weight(e);
                let ae = pair_int(&ai, &ne);
                for sign in [1i32, -1] {
                    let coeff_q = Scalar::q_pow(-(sign as i64) * s - sign as i64 * ae);
                    let mut coeff = c * &coeff_q;
                    coeff = &coeff * &denom_inv;
                    if sign < 0 {
                        coeff = coeff.neg_ref();
                    }
                    let t2: Beta = t.iter().zip(&ai).map(|(a, b)| a + sign * b).collect();
                    push(f.clone(), t2, e.clone(), coeff);
                }
            }
        }
        let out: Arc<Vec<RawTerm>> =
            Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((f, t, e), c)| (f, t, e, c)).collect());
        let mut cache = self.ef_cache.write().unwrap();
        if self.budget_allows(cache.len()) {
            cache.insert(key, out.clone());
        }
        out
    }

    /// Canonical representative of a letter word modulo the Serre ideal.
    pub fn serre_reduce(&self, w: &[u8]) -> Vec<(Word, Scalar)> {
        self.serre.reduce(&Word::from_slice(w))
    }

    pub fn is_standard(&self, w: &[u8]) -> bool {
        self.serre.is_standard(&Word::from_slice(w))
    }

    /// Standard (Serre-reduced) words of a multidegree.
    pub fn standard_words(&self, d: &[u8]) -> Vec<Word> {
        self.serre.standard_words(&SmallVec::from_slice(d))
    }

    /// Standard words of total length `n`, all multidegrees.
    pub fn standard_words_of_length(&self, n: usize) -> Vec<Word> {
        let mut out: Vec<Word> =
            multidegrees_of_total(self.rank(), n).iter().flat_map(|d| self.standard_words(d)).collect();
        out.sort();
        out
    }

    /// Serre relations as elements of U⁺ (E-words).
    pub fn serre_relations_e(&self) -> Vec<Element> {
        self.serre
            .relation_vectors()
            .into_iter()
            .map(|v| {
                v.into_iter()
                    .map(|(w, c)| {
                        let mut nw = NormalWord::identity(self.rank());
                        nw.e = w;
                        (nw, c)
                    })
                    .collect()
            })
            .collect()
    }

    /// Raw (unreduced) letter words as an element, reducing both sides.
    pub(crate) fn normalize_raw(&self, f: &[u8], torus: &[i32], gamma: GammaElement, e: &[u8], c: &Scalar, out: &mut Element) {
        let fr = self.serre_reduce(f);
        let er = self.serre_reduce(e);
        for (fw, fc) in &fr {
            for (ewd, ec) in &er {
                let w = NormalWord { f: fw.clone(), torus: SmallVec::from_slice(torus), gamma, e: ewd.clone() };
                out.add_term(w, &(c * fc) * ec);
            }
        }
    }

    /// Element from a raw letter word in any order of its F/E parts.
    pub fn from_letters(&self, f: &[u8], torus: &[i32], gamma: GammaElement, e: &[u8]) -> Element {
        let mut out = Element::zero();
        self.normalize_raw(f, torus, gamma, e, &Scalar::one(), &mut out);
        out
    }

    fn mul_words(&self, a: &NormalWord, b: &NormalWord, c: &Scalar, out: &mut BTreeMap<(Word, Beta, GammaElement, Word), Scalar>) {
        let terms = self.ef(&a.e, &b.f);
        for (f1, t1, e1, c1) in terms.iter() {
            let nf = self.word_weight(f1);
            let ne = self.word_weight(e1);
            let sign = a.gamma.pair_weight(&nf) ^ b.gamma.pair_weight(&ne);
            let qexp = -pair_int(&a.torus, &nf) - pair_int(&b.torus, &ne);
            let mut coeff = c * c1;
            coeff = &coeff * &Scalar::q_pow(qexp);
            if sign {
                coeff = coeff.neg_ref();
            }
            let mut f: Word = a.f.clone();
            f.extend_from_slice(f1);
            let mut e: Word = e1.clone();
            e.extend_from_slice(&b.e);
            let torus: Beta = (0..self.rank()).map(|k| a.torus[k] + t1[k] + b.torus[k]).collect();
            let entry = out.entry((f, torus, a.gamma + b.gamma, e)).or_insert_with(Scalar::zero);
            *entry = &*entry + &coeff;
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut raw = BTreeMap::new();
        for (wa, ca) in &a.terms {
            for (wb, cb) in &b.terms {
                self.mul_words(wa, wb, &(ca * cb), &mut raw);
            }
        }
        let mut out = Element::zero();
        for ((f, t, g, e), c) in raw {
            if !c.is_zero() {
                self.normalize_raw(&f, &t, g, &e, &c, &mut out);
            }
        }
        out
    }

    pub fn mul_all(&self, factors: &[&Element]) -> Element {
        factors.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, a: &Element, n: u32) -> Element {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        &self.mul(a, b) - &self.mul(b, a)
    }

    /// `ab + ba`.
    pub fn anticommutator(&self, a: &Element, b: &Element) -> Element {
        &self.mul(a, b) + &self.mul(b, a)
    }

    /// Inverse of `c·K_μ·ξ_γ`, the only invertible normal words.
    pub fn invert_toral(&self, a: &Element) -> Result<Element> {
        if a.len() != 1 {
            return Err(Error::Precondition("only single torus words are invertible".into()));
        }
        let (w, c) = a.terms.iter().next().unwrap();
        if !w.is_toral() {
            return Err(Error::Precondition(format!("{w} is not invertible")));
        }
        let mut inv = w.clone();
        inv.torus = w.torus.iter().map(|x| -x).collect();
        Ok(Element::from_word(inv, c.inv()?))
    }
}
