//! Root data of type B_l in the orthonormal β-basis.
//!
//! Weights are stored as twice-coordinates: `λ = Σ (t_i / 2) β_i`, so the
//! half-integral points of the weight lattice P_k stay exact. The lattice
//! P_g (spanned by the simple roots) is the set of points with all `t_i` even.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use smallvec::SmallVec;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    twice: SmallVec<[i32; 4]>,
}

impl Weight {
    pub fn from_twice(twice: &[i32]) -> Self {
        Self { twice: SmallVec::from_slice(twice) }
    }

    /// Weight with integer β-coordinates.
    pub fn from_beta(beta: &[i32]) -> Self {
        Self { twice: beta.iter().map(|b| 2 * b).collect() }
    }

    pub fn zero(rank: usize) -> Self {
        Self { twice: SmallVec::from_elem(0, rank) }
    }

    /// `β_i`, 1-based.
    pub fn beta_basis(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.twice[i - 1] = 2;
        w
    }

    pub fn rank(&self) -> usize {
        self.twice.len()
    }

    pub fn twice(&self) -> &[i32] {
        &self.twice
    }

    pub fn is_zero(&self) -> bool {
        self.twice.iter().all(|&t| t == 0)
    }

    pub fn in_pk(&self) -> bool {
        self.twice.windows(2).all(|w| (w[0] - w[1]) % 2 == 0)
    }

    pub fn in_pg(&self) -> bool {
        self.twice.iter().all(|t| t % 2 == 0)
    }

    /// Integer β-coordinates; only for points of P_g.
    pub fn beta(&self) -> Result<SmallVec<[i32; 4]>> {
        if !self.in_pg() {
            return Err(Error::NotInLattice(self.to_string(), "P_g"));
        }
        Ok(self.twice.iter().map(|t| t / 2).collect())
    }

    /// Coordinates in the simple-root basis `α_i = β_i - β_{i+1}`, `α_l = β_l`.
    pub fn alpha_coords(&self) -> Result<SmallVec<[i32; 4]>> {
        let beta = self.beta()?;
        let mut acc = 0;
        Ok(beta
            .iter()
            .map(|b| {
                acc += b;
                acc
            })
            .collect())
    }

    pub fn scale(&self, k: i32) -> Self {
        Self { twice: self.twice.iter().map(|t| t * k).collect() }
    }

    fn check_rank(&self, other: &Self) {
        assert_eq!(self.rank(), other.rank(), "weights of different rank");
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.check_rank(rhs);
        Weight { twice: self.twice.iter().zip(&rhs.twice).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.check_rank(rhs);
        Weight { twice: self.twice.iter().zip(&rhs.twice).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.twice.iter())
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = T>) -> fmt::Result {
    write!(f, "[")?;
    for (k, x) in items.enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<i32>> {
    let t = s.trim();
    let inner = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).unwrap_or(t);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| {
            x.trim().parse::<i32>().map_err(|e| Error::Parse { pos: 0, msg: format!("bad integer {x:?}: {e}") })
        })
        .collect()
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Weight::from_twice(&parse_int_list(s)?))
    }
}

/// Element of Γ = P_g / 2P_g, as a bit vector in β-coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaElement {
    bits: u32,
    rank: u8,
}

impl GammaElement {
    pub fn zero(rank: usize) -> Self {
        Self { bits: 0, rank: rank as u8 }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut g = Self::zero(bits.len());
        for (i, b) in bits.iter().enumerate() {
            if b % 2 == 1 {
                g.bits |= 1 << i;
            }
        }
        g
    }

    pub fn from_mask(mask: u32, rank: usize) -> Self {
        Self { bits: mask & ((1u32 << rank) - 1), rank: rank as u8 }
    }

    /// Class of a weight of P_g.
    pub fn from_weight(w: &Weight) -> Result<Self> {
        let beta = w.beta()?;
        let mut g = Self::zero(w.rank());
        for (i, b) in beta.iter().enumerate() {
            if b.rem_euclid(2) == 1 {
                g.bits |= 1 << i;
            }
        }
        Ok(g)
    }

    /// Class of `w_l = β_1 + … + β_l`.
    pub fn w_l(rank: usize) -> Self {
        Self::from_mask(u32::MAX, rank)
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn mask(&self) -> u32 {
        self.bits
    }

    /// Bit `i`, 1-based.
    pub fn bit(&self, i: usize) -> bool {
        self.bits >> (i - 1) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Representative weight with β-coordinates in {0, 1}.
    pub fn to_weight(&self) -> Weight {
        let beta: Vec<i32> = (1..=self.rank()).map(|i| self.bit(i) as i32).collect();
        Weight::from_beta(&beta)
    }

    /// `(γ, ν) mod 2` for `ν ∈ P_g`.
    pub fn pair_weight(&self, nu: &[i32]) -> bool {
        nu.iter().enumerate().filter(|(i, n)| self.bits >> i & 1 == 1 && n.rem_euclid(2) == 1).count() % 2 == 1
    }

    /// `(γ, γ') mod 2`.
    pub fn pair(&self, other: &Self) -> bool {
        (self.bits & other.bits).count_ones() % 2 == 1
    }
}

impl Add for GammaElement {
    type Output = GammaElement;
    fn add(self, rhs: GammaElement) -> GammaElement {
        GammaElement { bits: self.bits ^ rhs.bits, rank: self.rank }
    }
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, (1..=self.rank()).map(|i| self.bit(i) as u8))
    }
}

impl FromStr for GammaElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bits = parse_int_list(s)?;
        if bits.iter().any(|b| *b != 0 && *b != 1) {
            return Err(Error::Parse { pos: 0, msg: format!("Γ bits must be 0 or 1: {s}") });
        }
        Ok(GammaElement::from_bits(&bits.iter().map(|b| *b as u8).collect::<Vec<_>>()))
    }
}

/// Signed permutation: `w(β_i) = sign_i β_{image_i}` (1-based images).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    image: SmallVec<[u8; 4]>,
    negate: SmallVec<[bool; 4]>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        Self { image: (1..=rank as u8).collect(), negate: SmallVec::from_elem(false, rank) }
    }

    pub fn new(image: &[u8], negate: &[bool]) -> Result<Self> {
        let l = image.len();
        let mut seen = vec![false; l];
        for &i in image {
            let idx = i as usize;
            if idx == 0 || idx > l || seen[idx - 1] {
                return Err(Error::Range(format!("not a permutation: {image:?}")));
            }
            seen[idx - 1] = true;
        }
        if negate.len() != l {
            return Err(Error::RankMismatch { expected: l, got: negate.len() });
        }
        Ok(Self { image: SmallVec::from_slice(image), negate: SmallVec::from_slice(negate) })
    }

    pub fn rank(&self) -> usize {
        self.image.len()
    }

    /// Simple reflection `s_{α_i}` (`i < l` swaps β_i, β_{i+1}; `i = l` negates β_l).
    pub fn simple_reflection(rank: usize, i: usize) -> Self {
        let mut w = Self::identity(rank);
        if i < rank {
            w.image.swap(i - 1, i);
        } else {
            w.negate[rank - 1] = true;
        }
        w
    }

    pub fn generators(rank: usize) -> Vec<Self> {
        (1..=rank).map(|i| Self::simple_reflection(rank, i)).collect()
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let mut out = vec![0; self.rank()];
        for (i, &t) in w.twice().iter().enumerate() {
            let s = if self.negate[i] { -t } else { t };
            out[self.image[i] as usize - 1] = s;
        }
        Weight::from_twice(&out)
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let l = self.rank();
        let mut image = SmallVec::new();
        let mut negate = SmallVec::new();
        for i in 0..l {
            let j = other.image[i] as usize - 1;
            image.push(self.image[j]);
            negate.push(other.negate[i] ^ self.negate[j]);
        }
        Self { image, negate }
    }

    pub fn inverse(&self) -> Self {
        let l = self.rank();
        let mut image = SmallVec::from_elem(0u8, l);
        let mut negate = SmallVec::from_elem(false, l);
        for i in 0..l {
            let j = self.image[i] as usize - 1;
            image[j] = (i + 1) as u8;
            negate[j] = self.negate[i];
        }
        Self { image, negate }
    }

    /// All `2^l · l!` elements.
    pub fn all(rank: usize) -> Vec<Self> {
        let mut perms: Vec<Vec<u8>> = vec![vec![]];
        for k in 1..=rank as u8 {
            let mut next = Vec::new();
            for p in &perms {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    next.push(q);
                }
            }
            perms = next;
        }
        let mut out = Vec::new();
        for p in perms {
            for mask in 0..(1u32 << rank) {
                let negate: Vec<bool> = (0..rank).map(|i| mask >> i & 1 == 1).collect();
                out.push(Self::new(&p, &negate).unwrap());
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(
            f,
            self.image
                .iter()
                .zip(&self.negate)
                .map(|(i, n)| format!("({},{})", i, if *n { -1 } else { 1 })),
        )
    }
}

impl FromStr for WeylElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { pos: 0, msg: format!("bad signed permutation {s:?}") };
        let t = s.trim();
        let inner = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(bad)?;
        let mut image = Vec::new();
        let mut negate = Vec::new();
        for chunk in inner.split(')') {
            let chunk = chunk.trim().trim_start_matches(',').trim();
            if chunk.is_empty() {
                continue;
            }
            let body = chunk.strip_prefix('(').ok_or_else(bad)?;
            let mut parts = body.split(',');
            let i: u8 = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
            let sgn: i32 = parts.next().ok_or_else(bad)?.trim().trim_start_matches('+').parse().map_err(|_| bad())?;
            if sgn != 1 && sgn != -1 {
                return Err(bad());
            }
            image.push(i);
            negate.push(sgn == -1);
        }
        WeylElement::new(&image, &negate)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum RhoConvention {
    /// `ρ = ½ Σ_{α ∈ Δ_k^+} α`.
    #[default]
    HalfSum,
    /// `ρ = Σ_{α ∈ Δ_k^+} α`.
    LiteralSum,
}

/// Mod-2 values of both sides of the parity sign identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignIdentity {
    pub lhs: bool,
    pub rhs: bool,
}

impl SignIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug)]
pub struct RootData {
    rank: usize,
    positive_k: Vec<Weight>,
    positive_g: Vec<Weight>,
    rho: Weight,
    convention: RhoConvention,
}

impl RootData {
    pub fn build(rank: usize, convention: RhoConvention) -> Result<Self> {
        if rank == 0 {
            return Err(Error::RankZero);
        }
        let b = |i: usize| Weight::beta_basis(rank, i);
        let mut positive_k = Vec::new();
        let mut positive_g = Vec::new();
        for i in 1..=rank {
            for j in i + 1..=rank {
                positive_k.push(&b(i) - &b(j));
                positive_k.push(&b(i) + &b(j));
            }
            positive_k.push(b(i));
        }
        for i in 1..=rank {
            for j in i + 1..=rank {
                positive_g.push(&b(i) - &b(j));
                positive_g.push(&b(i) + &b(j));
            }
            positive_g.push(b(i));
            positive_g.push(b(i).scale(2));
        }
        let sum = positive_k.iter().fold(Weight::zero(rank), |acc, a| &acc + a);
        let rho = match convention {
            RhoConvention::HalfSum => Weight::from_twice(&sum.twice().iter().map(|t| t / 2).collect::<Vec<_>>()),
            RhoConvention::LiteralSum => sum,
        };
        Ok(Self { rank, positive_k, positive_g, rho, convention })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn convention(&self) -> RhoConvention {
        self.convention
    }

    pub fn positive_roots_k(&self) -> &[Weight] {
        &self.positive_k
    }

    pub fn positive_roots_g(&self) -> &[Weight] {
        &self.positive_g
    }

    /// All roots of Δ_k.
    pub fn roots_k(&self) -> Vec<Weight> {
        self.positive_k.iter().flat_map(|a| [a.clone(), -a]).collect()
    }

    pub fn roots_g(&self) -> Vec<Weight> {
        self.positive_g.iter().flat_map(|a| [a.clone(), -a]).collect()
    }

    /// Simple root `α_i`, 1-based.
    pub fn simple_root(&self, i: usize) -> Weight {
        if i < self.rank {
            &Weight::beta_basis(self.rank, i) - &Weight::beta_basis(self.rank, i + 1)
        } else {
            Weight::beta_basis(self.rank, self.rank)
        }
    }

    /// Fundamental weight `w_i = β_1 + … + β_i`.
    pub fn fundamental(&self, i: usize) -> Weight {
        (1..=i).fold(Weight::zero(self.rank), |acc, j| &acc + &Weight::beta_basis(self.rank, j))
    }

    pub fn weyl_group(&self) -> Vec<WeylElement> {
        WeylElement::all(self.rank)
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: w.rank() });
        }
        Ok(())
    }

    pub fn dot_action(&self, w: &WeylElement, lambda: &Weight) -> Weight {
        &w.apply(&(lambda + &self.rho)) - &self.rho
    }

    /// Dominance of `λ ∈ P_k`: `t_1 ≥ t_2 ≥ … ≥ t_l ≥ 0`.
    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        let t = lambda.twice();
        lambda.in_pk() && t.windows(2).all(|w| w[0] >= w[1]) && t.last().is_some_and(|&x| x >= 0)
    }
}

/// `(λ, μ) = Σ t_i s_i / 4`.
pub fn pair(lambda: &Weight, mu: &Weight) -> BigRational {
    let s: i64 = lambda.twice().iter().zip(mu.twice()).map(|(a, b)| *a as i64 * *b as i64).sum();
    BigRational::new(BigInt::from(s), BigInt::from(4))
}

/// Integer pairing for points of P_g.
pub fn pair_int(lambda: &[i32], mu: &[i32]) -> i64 {
    lambda.iter().zip(mu).map(|(a, b)| *a as i64 * *b as i64).sum()
}

/// `⟨λ, μ⟩ = 2(λ, μ)/(μ, μ)`.
pub fn cartan_pair(lambda: &Weight, mu: &Weight) -> Result<BigRational> {
    let mm = pair(mu, mu);
    if mm == BigRational::from_integer(0.into()) {
        return Err(Error::IsotropicWeight(mu.to_string()));
    }
    Ok(pair(lambda, mu) * BigRational::from_integer(2.into()) / mm)
}

/// `η(Σ n_i α_i) = Σ n_i β_{i+1}` reduced mod 2, with `β_{l+1} = 0`.
pub fn eta(nu: &Weight) -> Result<GammaElement> {
    let n = nu.alpha_coords()?;
    let l = nu.rank();
    let mut g = GammaElement::zero(l);
    for i in 0..l.saturating_sub(1) {
        if n[i].rem_euclid(2) == 1 {
            g = g + GammaElement::from_mask(1 << (i + 1), l);
        }
    }
    Ok(g)
}

/// `η` on integer β-coordinates (no lattice check).
pub(crate) fn eta_beta(beta: &[i32]) -> GammaElement {
    let l = beta.len();
    let mut acc = 0i32;
    let mut mask = 0u32;
    for i in 0..l.saturating_sub(1) {
        acc += beta[i];
        if acc.rem_euclid(2) == 1 {
            mask |= 1 << (i + 1);
        }
    }
    GammaElement::from_mask(mask, l)
}

/// `|ν| = (ν, w_l) mod 2`.
pub fn parity(nu: &Weight) -> Result<bool> {
    Ok(parity_beta(&nu.beta()?))
}

pub(crate) fn parity_beta(beta: &[i32]) -> bool {
    beta.iter().sum::<i32>().rem_euclid(2) == 1
}

/// Both sides of `(ν, η(ν')) + (η(ν), ν') + (ν, ν') = |ν||ν'|` in Z/2.
pub fn sign_identity(nu: &Weight, nu2: &Weight) -> Result<SignIdentity> {
    let a = nu.beta()?;
    let b = nu2.beta()?;
    let lhs = eta(nu2)?.pair_weight(&a) ^ eta(nu)?.pair_weight(&b) ^ (pair_int(&a, &b).rem_euclid(2) == 1);
    let rhs = parity_beta(&a) && parity_beta(&b);
    Ok(SignIdentity { lhs, rhs })
}
