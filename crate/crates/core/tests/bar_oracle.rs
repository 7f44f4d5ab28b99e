//! Independent check of the Ū relations with a naive engine: raw letter
//! strings straightened by local rewriting, no memoization and no Serre
//! tables. Results are compared modulo the Serre ideal by explicit linear
//! algebra over the spanning set `u·S·w`.

use std::collections::BTreeMap;

use qosp::algebra::Algebra;
use qosp::scalars::{q_binomial, Scalar};
use qosp::weights::RhoConvention;
use qosp::zhang::bar_relations_verify;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum L {
    F(usize),
    K(Vec<i32>),
    X(u32),
    E(usize),
}

type Poly = BTreeMap<Vec<L>, Scalar>;

struct Naive {
    l: usize,
}

impl Naive {
    /// `α_i` in the orthonormal β-basis.
    fn alpha(&self, i: usize) -> Vec<i32> {
        let mut a = vec![0; self.l];
        a[i - 1] = 1;
        if i < self.l {
            a[i] = -1;
        }
        a
    }

    fn dot(a: &[i32], b: &[i32]) -> i64 {
        a.iter().zip(b).map(|(x, y)| (*x as i64) * (*y as i64)).sum()
    }

    fn class(&self, mu: &[i32]) -> u32 {
        mu.iter().enumerate().filter(|(_, m)| m.rem_euclid(2) == 1).map(|(i, _)| 1 << i).sum()
    }

    /// `(γ, α_i) mod 2` for `γ` given as a β-bit mask.
    fn gamma_sign(&self, g: u32, i: usize) -> Scalar {
        let a = self.alpha(i);
        let odd = (0..self.l).filter(|&k| g >> k & 1 == 1 && a[k].rem_euclid(2) == 1).count() % 2 == 1;
        Scalar::sign(odd)
    }

    fn add(p: &mut Poly, w: Vec<L>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = p.entry(w.clone()).or_insert_with(Scalar::zero);
        *e = e.add_ref(&c);
        if e.is_zero() {
            p.remove(&w);
        }
    }

    /// One rewriting step on the first reducible position, if any.
    fn step(&self, w: &[L]) -> Option<Vec<(Vec<L>, Scalar)>> {
        for p in 0..w.len() {
            let splice = |mid: Vec<L>| -> Vec<L> {
                let mut v = w[..p].to_vec();
                v.extend(mid);
                v.extend_from_slice(&w[p + 2..]);
                v
            };
            match &w[p] {
                L::K(m) if m.iter().all(|x| *x == 0) => {
                    let mut v = w.to_vec();
                    v.remove(p);
                    return Some(vec![(v, Scalar::one())]);
                }
                L::X(0) => {
                    let mut v = w.to_vec();
                    v.remove(p);
                    return Some(vec![(v, Scalar::one())]);
                }
                _ => {}
            }
            if p + 1 >= w.len() {
                break;
            }
            let one = Scalar::one();
            let r = match (&w[p], &w[p + 1]) {
                (L::E(i), L::F(j)) => {
                    let mut out = vec![(splice(vec![L::F(*j), L::E(*i)]), one)];
                    if i == j {
                        let d = (Scalar::q_pow(1) - Scalar::q_pow(-1)).inv().unwrap();
                        let a = self.alpha(*i);
                        let na: Vec<i32> = a.iter().map(|x| -x).collect();
                        out.push((splice(vec![L::K(a)]), d.clone()));
                        out.push((splice(vec![L::K(na)]), d.neg_ref()));
                    }
                    out
                }
                (L::E(i), L::K(m)) => {
                    let c = Scalar::q_pow(-Self::dot(m, &self.alpha(*i)));
                    vec![(splice(vec![L::K(m.clone()), L::E(*i)]), c)]
                }
                (L::E(i), L::X(g)) => vec![(splice(vec![L::X(*g), L::E(*i)]), self.gamma_sign(*g, *i))],
                (L::K(m), L::F(i)) => {
                    let c = Scalar::q_pow(-Self::dot(m, &self.alpha(*i)));
                    vec![(splice(vec![L::F(*i), L::K(m.clone())]), c)]
                }
                (L::X(g), L::F(i)) => vec![(splice(vec![L::F(*i), L::X(*g)]), self.gamma_sign(*g, *i))],
                (L::X(g), L::K(m)) => vec![(splice(vec![L::K(m.clone()), L::X(*g)]), one)],
                (L::K(a), L::K(b)) => {
                    let s: Vec<i32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    vec![(splice(vec![L::K(s)]), one)]
                }
                (L::X(a), L::X(b)) => vec![(splice(vec![L::X(a ^ b)]), one)],
                _ => continue,
            };
            return Some(r);
        }
        None
    }

    fn normalize(&self, p: &Poly) -> Poly {
        let mut todo: Vec<(Vec<L>, Scalar)> = p.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = Poly::new();
        while let Some((w, c)) = todo.pop() {
            match self.step(&w) {
                Some(next) => todo.extend(next.into_iter().map(|(v, d)| (v, d.mul_ref(&c)))),
                None => Self::add(&mut out, w, c),
            }
        }
        out
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::new();
        for (x, c) in a {
            for (y, d) in b {
                let mut w = x.clone();
                w.extend(y.iter().cloned());
                Self::add(&mut out, w, c.mul_ref(d));
            }
        }
        self.normalize(&out)
    }

    fn sub(a: &Poly, b: &Poly) -> Poly {
        let mut out = a.clone();
        for (w, c) in b {
            Self::add(&mut out, w.clone(), c.neg_ref());
        }
        out
    }

    fn scale(a: &Poly, c: &Scalar) -> Poly {
        let mut out = Poly::new();
        for (w, d) in a {
            Self::add(&mut out, w.clone(), d.mul_ref(c));
        }
        out
    }

    fn word(w: Vec<L>) -> Poly {
        let mut p = Poly::new();
        p.insert(w, Scalar::one());
        p
    }

    fn one() -> Poly {
        Self::word(vec![])
    }

    fn beta(&self, i: usize) -> Vec<i32> {
        (1..=self.l).map(|j| (i == j) as i32).collect()
    }

    fn e(&self, i: usize) -> Poly {
        let mut w = vec![];
        if i < self.l {
            w.push(L::X(1 << i));
        }
        w.push(L::E(i));
        self.normalize(&Self::word(w))
    }

    fn f(&self, i: usize) -> Poly {
        self.normalize(&Self::word(vec![L::X(1 << (i - 1)), L::F(i)]))
    }

    fn k(&self, mu: &[i32]) -> Poly {
        self.normalize(&Self::word(vec![L::X(self.class(mu)), L::K(mu.to_vec())]))
    }

    fn k_inv(&self, mu: &[i32]) -> Poly {
        let neg: Vec<i32> = mu.iter().map(|x| -x).collect();
        self.k(&neg)
    }

    /// `sad e_i (y)`, `sad f_i (y)` for `y` of parity `py`.
    fn sad_e(&self, i: usize, y: &Poly, py: bool) -> Poly {
        let a = self.alpha(i);
        let s = Scalar::sign(i == self.l && py);
        let rhs = self.mul(&self.mul(&self.mul(&self.k(&a), y), &self.k_inv(&a)), &self.e(i));
        Self::sub(&self.mul(&self.e(i), y), &Self::scale(&rhs, &s))
    }

    fn sad_f(&self, i: usize, y: &Poly, py: bool) -> Poly {
        let a = self.alpha(i);
        let s = Scalar::sign(i == self.l && py);
        let inner = Self::sub(&self.mul(&self.f(i), y), &Self::scale(&self.mul(y, &self.f(i)), &s));
        self.mul(&inner, &self.k(&a))
    }

    fn cartan(&self, i: usize, j: usize) -> i64 {
        2 * Self::dot(&self.alpha(i), &self.alpha(j)) / Self::dot(&self.alpha(i), &self.alpha(i))
    }

    fn qi(&self, i: usize) -> Scalar {
        if i == self.l {
            Scalar::v_pow(1)
        } else {
            Scalar::q_pow(1)
        }
    }

    /// Serre relation as index words, valid on either the E or the F side.
    fn serre(&self, i: usize, j: usize) -> Vec<(Vec<usize>, Scalar)> {
        let n = 1 - self.cartan(i, j);
        (0..=n)
            .map(|k| {
                let mut w = vec![i; (n - k) as usize];
                w.push(j);
                w.extend(vec![i; k as usize]);
                (w, q_binomial(n, k, &self.qi(i)).unwrap() * Scalar::sign(k % 2 == 1))
            })
            .collect()
    }

    /// Whether a combination of letter words lies in the Serre ideal.
    fn in_serre_ideal(&self, p: &BTreeMap<Vec<usize>, Scalar>) -> bool {
        if p.is_empty() {
            return true;
        }
        let len = p.keys().next().unwrap().len();
        let mut span: Vec<BTreeMap<Vec<usize>, Scalar>> = Vec::new();
        for i in 1..=self.l {
            for j in 1..=self.l {
                if i == j {
                    continue;
                }
                let s = self.serre(i, j);
                let deg = s[0].0.len();
                if deg > len {
                    continue;
                }
                for left in all_words(self.l, len - deg) {
                    for split in 0..=left.len() {
                        let mut row = BTreeMap::new();
                        for (w, c) in &s {
                            let mut full = left[..split].to_vec();
                            full.extend(w);
                            full.extend(&left[split..]);
                            row.insert(full, c.clone());
                        }
                        span.push(row);
                    }
                }
            }
        }
        let mut basis: Vec<(Vec<usize>, BTreeMap<Vec<usize>, Scalar>)> = Vec::new();
        let reduce = |mut v: BTreeMap<Vec<usize>, Scalar>, basis: &[(Vec<usize>, BTreeMap<Vec<usize>, Scalar>)]| {
            for (piv, row) in basis {
                if let Some(c) = v.get(piv).cloned() {
                    for (w, d) in row {
                        let e = v.entry(w.clone()).or_insert_with(Scalar::zero);
                        *e = e.sub_ref(&c.mul_ref(d));
                    }
                    v.retain(|_, c| !c.is_zero());
                }
            }
            v
        };
        for row in span {
            let r = reduce(row, &basis);
            if let Some((piv, c)) = r.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
                let inv = c.inv().unwrap();
                let r: BTreeMap<_, _> = r.into_iter().map(|(w, d)| (w, d.mul_ref(&inv))).collect();
                for (_, other) in basis.iter_mut() {
                    if let Some(e) = other.get(&piv).cloned() {
                        for (w, d) in &r {
                            let x = other.entry(w.clone()).or_insert_with(Scalar::zero);
                            *x = x.sub_ref(&e.mul_ref(d));
                        }
                        other.retain(|_, c| !c.is_zero());
                    }
                }
                basis.push((piv, r));
            }
        }
        reduce(p.clone(), &basis).is_empty()
    }

    /// Zero in Û: every (F-part, torus, E-part) slice vanishes modulo Serre.
    fn is_zero(&self, p: &Poly) -> bool {
        let mut by_e: BTreeMap<Vec<L>, BTreeMap<Vec<usize>, Scalar>> = BTreeMap::new();
        let mut by_f: BTreeMap<Vec<L>, BTreeMap<Vec<usize>, Scalar>> = BTreeMap::new();
        for (w, c) in p {
            let fs: Vec<usize> = w.iter().filter_map(|x| if let L::F(i) = x { Some(*i) } else { None }).collect();
            let es: Vec<usize> = w.iter().filter_map(|x| if let L::E(i) = x { Some(*i) } else { None }).collect();
            let rest_e: Vec<L> = w.iter().filter(|x| !matches!(x, L::E(_))).cloned().collect();
            let rest_f: Vec<L> = w.iter().filter(|x| !matches!(x, L::F(_))).cloned().collect();
            if fs.is_empty() {
                by_e.entry(rest_e).or_default().insert(es, c.clone());
            } else if es.is_empty() {
                by_f.entry(rest_f).or_default().insert(fs, c.clone());
            } else {
                return false;
            }
        }
        by_e.values().chain(by_f.values()).all(|v| self.in_serre_ideal(v))
    }
}

fn all_words(l: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| (1..=l).map(move |i| [w.clone(), vec![i]].concat())).collect();
    }
    out
}

fn minus_q_pow(n: i64) -> Scalar {
    Scalar::q_pow(n) * Scalar::sign(n.rem_euclid(2) == 1)
}

fn oracle_relations(l: usize) -> Vec<(String, bool)> {
    let o = Naive { l };
    let mut out = Vec::new();
    let mut tori: Vec<Vec<i32>> = (1..=l).map(|i| o.alpha(i)).collect();
    tori.extend((1..=l).map(|i| o.beta(i)));
    for mu in &tori {
        for i in 1..=l {
            let n = Naive::dot(mu, &o.alpha(i));
            let conj = |x: &Poly| o.mul(&o.mul(&o.k(mu), x), &o.k_inv(mu));
            out.push((format!("k{mu:?} e{i}"), o.is_zero(&Naive::sub(&conj(&o.e(i)), &Naive::scale(&o.e(i), &minus_q_pow(n))))));
            out.push((format!("k{mu:?} f{i}"), o.is_zero(&Naive::sub(&conj(&o.f(i)), &Naive::scale(&o.f(i), &minus_q_pow(-n))))));
        }
    }
    let d = (Scalar::q_pow(1) - Scalar::q_pow(-1)).inv().unwrap();
    for i in 1..=l {
        for j in 1..=l {
            let lhs = o.sad_f(i, &o.e(j), j == l);
            let rhs = if i == j {
                let a = o.alpha(i);
                let k2 = o.mul(&o.k(&a), &o.k(&a));
                Naive::scale(&Naive::sub(&Naive::one(), &k2), &(d.mul_ref(&Scalar::sign(i != l))))
            } else {
                Poly::new()
            };
            out.push((format!("sad f{i} e{j}"), o.is_zero(&Naive::sub(&lhs, &rhs))));
        }
    }
    for i in 1..=l {
        for j in 1..=l {
            if i == j {
                continue;
            }
            let n = 1 - o.cartan(i, j);
            let mut x = o.e(j);
            let mut px = j == l;
            for _ in 0..n {
                x = o.sad_e(i, &x, px);
                px ^= i == l;
            }
            out.push((format!("sad e{i}^{n} e{j}"), o.is_zero(&x)));
            let mut y = o.mul(&o.f(j), &o.k(&o.alpha(j)));
            let mut py = j == l;
            for _ in 0..n {
                y = o.sad_f(i, &y, py);
                py ^= i == l;
            }
            out.push((format!("sad f{i}^{n} (f{j} k_a{j})"), o.is_zero(&y)));
        }
    }
    out
}

#[test]
fn naive_engine_agrees_on_relations() {
    for l in 1..=3 {
        let oracle = oracle_relations(l);
        assert!(oracle.iter().all(|(_, h)| *h), "l = {l}: {:?}", oracle.iter().filter(|(_, h)| !h).collect::<Vec<_>>());
        let engine = bar_relations_verify(&Algebra::new(l, RhoConvention::HalfSum).unwrap()).unwrap();
        assert_eq!(engine.len(), oracle.len(), "l = {l}");
        assert!(engine.iter().all(|r| r.holds));
    }
}

#[test]
fn naive_engine_detects_a_wrong_sign() {
    // Dropping the sign on the odd bracket must be caught.
    let o = Naive { l: 1 };
    let d = (Scalar::q_pow(1) - Scalar::q_pow(-1)).inv().unwrap();
    let a = o.alpha(1);
    let k2 = o.mul(&o.k(&a), &o.k(&a));
    let wrong = Naive::scale(&Naive::sub(&Naive::one(), &k2), &d.neg_ref());
    assert!(!o.is_zero(&Naive::sub(&o.sad_f(1, &o.e(1), true), &wrong)));
}
