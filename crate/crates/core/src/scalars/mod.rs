//! Exact coefficient field `Q(i)(v)` with `v^2 = q`, plus q-combinatorics.

mod gaussian;
mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use gaussian::GaussianRational;
pub use poly::Poly;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// A rational function `v^shift * num(v) / den(v)`.
///
/// Canonical form: `num(0) != 0`, `den(0) != 0`, `den` monic and coprime
/// to `num`; zero is `(0, 0, 1)`. Structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    shift: i64,
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Self { shift: 0, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gaussian(GaussianRational::from_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_gaussian(GaussianRational::from_ratio(num, den))
    }

    pub fn from_gaussian(c: GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { shift: 0, num: Poly::constant(c), den: Poly::one() }
    }

    pub fn imaginary_unit() -> Self {
        Self::from_gaussian(GaussianRational::imaginary_unit())
    }

    /// `v^k`.
    pub fn v_pow(k: i64) -> Self {
        Self { shift: k, num: Poly::one(), den: Poly::one() }
    }

    /// `q^n = v^(2n)`.
    pub fn q_pow(n: i64) -> Self {
        Self::v_pow(2 * n)
    }

    /// `q^r` for a rational exponent with `2r` integral.
    pub fn q_pow_rational(r: &BigRational) -> Result<Self> {
        let twice = r * BigRational::from_integer(BigInt::from(2));
        if !twice.is_integer() {
            return Err(Error::NonIntegralExponent(r.to_string()));
        }
        let k: i64 = twice
            .to_integer()
            .try_into()
            .map_err(|_| Error::NonIntegralExponent(r.to_string()))?;
        Ok(Self::v_pow(k))
    }

    /// `(-1)^bit`.
    pub fn sign(bit: bool) -> Self {
        if bit {
            Self::from_int(-1)
        } else {
            Self::one()
        }
    }

    fn normalize(shift: i64, num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let vn = num.valuation();
        let vd = den.valuation();
        let mut num = if vn > 0 { num.shift_down(vn) } else { num };
        let mut den = if vd > 0 { den.shift_down(vd) } else { den };
        let shift = shift + vn as i64 - vd as i64;
        if den.degree() != Some(0) {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_rem(&g).0;
                den = den.div_rem(&g).0;
            }
        }
        let lead = den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.inv().unwrap();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is trivial (a Laurent polynomial).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// `Some(c)` when the value is a constant of the coefficient field.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        if self.shift == 0 && self.den.is_one() && self.num.degree() == Some(0) {
            return Some(self.num.coeffs()[0].clone());
        }
        None
    }

    /// Laurent terms `(exponent, coefficient)` in ascending order, if Laurent.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, GaussianRational)>> {
        if !self.is_laurent() {
            return None;
        }
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (self.shift + k as i64, c.clone()))
                .collect(),
        )
    }

    /// Numerator and denominator as ordinary polynomials in `v`.
    pub fn numerator_denominator(&self) -> (Poly, Poly) {
        if self.shift >= 0 {
            (self.num.shift_up(self.shift as usize), self.den.clone())
        } else {
            (self.num.clone(), self.den.shift_up((-self.shift) as usize))
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(other.shift);
        let a = self.num.shift_up((self.shift - s) as usize);
        let b = other.num.shift_up((other.shift - s) as usize);
        if self.den == other.den {
            return Self::normalize(s, a.add(&b), self.den.clone());
        }
        let num = a.mul(&other.den).add(&b.mul(&self.den));
        Self::normalize(s, num, self.den.mul(&other.den))
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        Self { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let shift = self.shift + other.shift;
        if self.den.is_one() && other.den.is_one() {
            // Product of polynomials with nonzero constant terms keeps that property.
            return Self { shift, num: self.num.mul(&other.num), den: Poly::one() };
        }
        Self::normalize(shift, self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(-self.shift, self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul_ref(&b);
            }
        }
        Ok(acc)
    }

    /// True when the printed form has no top-level `+`/`-` between terms.
    pub(crate) fn is_single_term(&self) -> bool {
        self.is_laurent() && self.laurent_terms().map(|t| t.len() <= 1).unwrap_or(false)
    }
}

/// The q-integer `[n]_base = (base^n - base^-n) / (base - base^-1)`.
pub fn q_int(n: i64, base: &Scalar) -> Result<Scalar> {
    check_base(base)?;
    if n == 0 {
        return Ok(Scalar::zero());
    }
    let num = base.pow(n)?.sub_ref(&base.pow(-n)?);
    let den = base.sub_ref(&base.inv()?);
    num.div(&den)
}

/// `[n]_base!` with `[0]! = 1`.
pub fn q_factorial(n: i64, base: &Scalar) -> Result<Scalar> {
    check_base(base)?;
    if n < 0 {
        return Err(Error::Range(format!("q-factorial of negative {n}")));
    }
    let mut acc = Scalar::one();
    for k in 1..=n {
        acc = acc.mul_ref(&q_int(k, base)?);
    }
    Ok(acc)
}

/// Gaussian binomial `[n]! / ([m]! [n-m]!)`.
pub fn q_binomial(n: i64, m: i64, base: &Scalar) -> Result<Scalar> {
    if m < 0 || m > n {
        return Err(Error::Range(format!("q-binomial ({n} choose {m})")));
    }
    q_factorial(n, base)?.div(&q_factorial(m, base)?.mul_ref(&q_factorial(n - m, base)?))
}

fn check_base(base: &Scalar) -> Result<()> {
    if base.is_zero() || base.is_one() || base.neg_ref().is_one() {
        return Err(Error::DegenerateBase(base.to_string()));
    }
    Ok(())
}

fn fmt_laurent(terms: &[(i64, GaussianRational)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (k, c)) in terms.iter().enumerate() {
        let vpart = match *k {
            0 => String::new(),
            1 => "v".to_string(),
            k => format!("v^{k}"),
        };
        let term = if vpart.is_empty() {
            c.to_string()
        } else if c.is_one() {
            vpart
        } else if (-c.clone()).is_one() {
            format!("-{vpart}")
        } else {
            format!("{c}*{vpart}")
        };
        if idx == 0 {
            out.push_str(&term);
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    out
}

fn poly_terms(p: &Poly) -> Vec<(i64, GaussianRational)> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k as i64, c.clone()))
        .collect()
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(terms) = self.laurent_terms() {
            return write!(f, "{}", fmt_laurent(&terms));
        }
        let (n, d) = self.numerator_denominator();
        write!(f, "({})/({})", fmt_laurent(&poly_terms(&n)), fmt_laurent(&poly_terms(&d)))
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.add_ref(&rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.sub_ref(&rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.mul_ref(&rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_ref(rhs)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.sub_ref(rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(rhs)
    }
}
