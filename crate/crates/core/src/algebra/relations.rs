use super::{Algebra, Element};
use crate::error::Result;
use crate::scalars::{q_binomial, Scalar};
use crate::weights::{cartan_pair, pair_int, GammaElement, Weight};

/// One named relation and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub label: String,
    pub holds: bool,
}

impl RelationCheck {
    pub(crate) fn new(label: impl Into<String>, holds: bool) -> Self {
        Self { label: label.into(), holds }
    }
}

impl Algebra {
    /// Σ_k (-1)^k [n choose k]_{q_i} x_i^{n-k} x_j x_i^k with `x = E` or `F`.
    pub fn serre_element(&self, i: usize, j: usize, e_side: bool) -> Result<Element> {
        let c = cartan_pair(&self.roots.simple_root(j), &self.roots.simple_root(i))?;
        let n = 1 - i64::try_from(c.to_integer()).unwrap_or(0);
        let qi = if i == self.rank() { Scalar::v_pow(1) } else { Scalar::q_pow(1) };
        let (gi, gj) = if e_side { (self.e(i)?, self.e(j)?) } else { (self.f(i)?, self.f(j)?) };
        let mut acc = Element::zero();
        for k in 0..=n {
            let t = self.mul_all(&[&self.pow(&gi, (n - k) as u32), &gj, &self.pow(&gi, k as u32)]);
            acc.add_scaled(&t, &(q_binomial(n, k, &qi)? * Scalar::sign(k % 2 == 1)));
        }
        Ok(acc)
    }

    /// Evaluates every defining relation of Û on generators and reports each.
    pub fn defining_relations_verify(&self) -> Result<Vec<RelationCheck>> {
        let l = self.rank();
        let mut out = Vec::new();
        out.push(RelationCheck::new("K0 = 1", self.k(&Weight::zero(l))? == self.one()));
        let denom = (Scalar::q_pow(1) - Scalar::q_pow(-1)).inv()?;
        for a in 1..=l {
            let ka = Weight::beta_basis(l, a);
            let k = self.k(&ka)?;
            let kinv = self.k(&-&ka)?;
            let xa = self.xi(GammaElement::from_mask(1 << (a - 1), l))?;
            out.push(RelationCheck::new(format!("K{ka} K{} = 1", -&ka), self.mul(&k, &kinv) == self.one()));
            out.push(RelationCheck::new(format!("xi{a}^2 = 1"), self.mul(&xa, &xa) == self.one()));
            out.push(RelationCheck::new(format!("xi{a} K{ka} = K{ka} xi{a}"), self.commutator(&xa, &k).is_zero()));
            for b in 1..=l {
                let kb = self.k(&Weight::beta_basis(l, b))?;
                out.push(RelationCheck::new(
                    format!("K commute ({a},{b})"),
                    self.commutator(&k, &kb).is_zero(),
                ));
            }
            for i in 1..=l {
                let n = pair_int(&ka.beta()?, self.alpha_beta(i));
                let s = Scalar::sign(GammaElement::from_mask(1 << (a - 1), l).pair_weight(self.alpha_beta(i)));
                let (ei, fi) = (self.e(i)?, self.f(i)?);
                out.push(RelationCheck::new(
                    format!("K{ka} E{i} K{} = q^{n} E{i}", -&ka),
                    self.mul_all(&[&k, &ei, &kinv]) == ei.scale(&Scalar::q_pow(n)),
                ));
                out.push(RelationCheck::new(
                    format!("K{ka} F{i} K{} = q^{} F{i}", -&ka, -n),
                    self.mul_all(&[&k, &fi, &kinv]) == fi.scale(&Scalar::q_pow(-n)),
                ));
                out.push(RelationCheck::new(
                    format!("xi{a} E{i} xi{a} = {}E{i}", if s.is_one() { "" } else { "-" }),
                    self.mul_all(&[&xa, &ei, &xa]) == ei.scale(&s),
                ));
                out.push(RelationCheck::new(
                    format!("xi{a} F{i} xi{a} = {}F{i}", if s.is_one() { "" } else { "-" }),
                    self.mul_all(&[&xa, &fi, &xa]) == fi.scale(&s),
                ));
            }
        }
        for i in 1..=l {
            for j in 1..=l {
                let c = self.commutator(&self.e(i)?, &self.f(j)?);
                let rhs = if i == j {
                    (&self.k_alpha(i, 1)? - &self.k_alpha(i, -1)?).scale(&denom)
                } else {
                    Element::zero()
                };
                out.push(RelationCheck::new(format!("[E{i}, F{j}]"), c == rhs));
                if i != j {
                    out.push(RelationCheck::new(format!("Serre E ({i},{j})"), self.serre_element(i, j, true)?.is_zero()));
                    out.push(RelationCheck::new(format!("Serre F ({i},{j})"), self.serre_element(i, j, false)?.is_zero()));
                }
            }
        }
        Ok(out)
    }
}
