//! Serre-ideal reduction of letter words, one multidegree at a time.
//!
//! For each multidegree `d` the ideal component `I_d` is spanned by
//! `x_i I_{d-e_i}`, `I_{d-e_i} x_i` and the relations of degree exactly `d`.
//! Its reduced echelon form (pivot = lexicographically largest word, with
//! letter 1 < letter 2 < …) identifies the standard words as the non-pivots.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use smallvec::SmallVec;

use super::Word;
use crate::linalg::{Echelon, SparseVec};
use crate::scalars::{q_binomial, Scalar};
use crate::weights::{cartan_pair, RootData};

pub(crate) type Multidegree = SmallVec<[u8; 4]>;

#[derive(Debug)]
struct Relation {
    degree: Multidegree,
    vector: SparseVec<Word>,
}

#[derive(Debug, Default)]
struct Table {
    /// Pivot word ↦ its expression in standard words.
    pivots: HashMap<Word, Vec<(Word, Scalar)>>,
    rows: Vec<SparseVec<Word>>,
}

#[derive(Debug)]
pub(crate) struct SerreTables {
    rank: usize,
    relations: Vec<Relation>,
    tables: RwLock<HashMap<Multidegree, Arc<Table>>>,
}

pub(crate) fn multidegree(rank: usize, w: &[u8]) -> Multidegree {
    let mut d = SmallVec::from_elem(0u8, rank);
    for &x in w {
        d[x as usize - 1] += 1;
    }
    d
}

fn letter_power(i: u8, n: usize) -> Word {
    std::iter::repeat(i).take(n).collect()
}

impl SerreTables {
    pub fn new(roots: &RootData) -> Self {
        let l = roots.rank();
        let mut relations = Vec::new();
        for i in 1..=l {
            let ai = roots.simple_root(i);
            let qi = if i < l { Scalar::v_pow(2) } else { Scalar::v_pow(1) };
            for j in 1..=l {
                if i == j {
                    continue;
                }
                let c = cartan_pair(&roots.simple_root(j), &ai).expect("simple roots are not isotropic");
                let n = 1 - c.to_integer().try_into().unwrap_or(0i64);
                let mut vector = SparseVec::new();
                for k in 0..=n {
                    let mut w = letter_power(i as u8, (n - k) as usize);
                    w.push(j as u8);
                    w.extend(letter_power(i as u8, k as usize));
                    let coeff = q_binomial(n, k, &qi).expect("nondegenerate base") * Scalar::sign(k % 2 == 1);
                    vector.insert(w, coeff);
                }
                let mut degree = SmallVec::from_elem(0u8, l);
                degree[i - 1] = n as u8;
                degree[j - 1] = 1;
                relations.push(Relation { degree, vector });
            }
        }
        Self { rank: l, relations, tables: RwLock::new(HashMap::new()) }
    }

    /// The Serre relations as letter-word vectors, with their `(i, j)` labels.
    pub fn relation_vectors(&self) -> Vec<SparseVec<Word>> {
        self.relations.iter().map(|r| r.vector.clone()).collect()
    }

    fn has_relation_below(&self, d: &[u8]) -> bool {
        self.relations.iter().any(|r| r.degree.iter().zip(d).all(|(a, b)| a <= b))
    }

    fn table(&self, d: &Multidegree) -> Arc<Table> {
        if let Some(t) = self.tables.read().unwrap().get(d) {
            return t.clone();
        }
        let t = Arc::new(self.build(d));
        self.tables.write().unwrap().entry(d.clone()).or_insert(t).clone()
    }

    fn build(&self, d: &Multidegree) -> Table {
        if !self.has_relation_below(d) {
            return Table::default();
        }
        let mut ech: Echelon<Word> = Echelon::new();
        for i in 0..self.rank {
            if d[i] == 0 {
                continue;
            }
            let mut sub = d.clone();
            sub[i] -= 1;
            let letter = (i + 1) as u8;
            for row in &self.table(&sub).rows {
                let left: SparseVec<Word> = row
                    .iter()
                    .map(|(w, c)| {
                        let mut x: Word = SmallVec::with_capacity(w.len() + 1);
                        x.push(letter);
                        x.extend_from_slice(w);
                        (x, c.clone())
                    })
                    .collect();
                let right: SparseVec<Word> = row
                    .iter()
                    .map(|(w, c)| {
                        let mut x = w.clone();
                        x.push(letter);
                        (x, c.clone())
                    })
                    .collect();
                ech.insert(&left);
                ech.insert(&right);
            }
        }
        for r in &self.relations {
            if &r.degree == d {
                ech.insert(&r.vector);
            }
        }
        let mut pivots = HashMap::new();
        let mut rows = Vec::new();
        for (p, row) in ech.rows() {
            let expr = row.iter().filter(|(w, _)| *w != p).map(|(w, c)| (w.clone(), -c.clone())).collect();
            pivots.insert(p.clone(), expr);
            rows.push(row.clone());
        }
        Table { pivots, rows }
    }

    /// Canonical combination of standard words equal to `w` modulo the ideal.
    pub fn reduce(&self, w: &Word) -> Vec<(Word, Scalar)> {
        if w.len() < 2 {
            return vec![(w.clone(), Scalar::one())];
        }
        let t = self.table(&multidegree(self.rank, w));
        match t.pivots.get(w) {
            Some(expr) => expr.clone(),
            None => vec![(w.clone(), Scalar::one())],
        }
    }

    pub fn is_standard(&self, w: &Word) -> bool {
        w.len() < 2 || !self.table(&multidegree(self.rank, w)).pivots.contains_key(w)
    }

    /// Standard words of the given multidegree, in increasing order.
    pub fn standard_words(&self, d: &Multidegree) -> Vec<Word> {
        let t = self.table(d);
        let mut out: Vec<Word> = all_words(d).into_iter().filter(|w| !t.pivots.contains_key(w)).collect();
        out.sort();
        out
    }
}

/// All words with the given letter multiplicities.
pub(crate) fn all_words(d: &[u8]) -> Vec<Word> {
    let mut out = Vec::new();
    let mut left: Vec<u8> = d.to_vec();
    let total: usize = d.iter().map(|&x| x as usize).sum();
    let mut cur: Word = SmallVec::new();
    fn rec(left: &mut [u8], total: usize, cur: &mut Word, out: &mut Vec<Word>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push((i + 1) as u8);
                rec(left, total, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    rec(&mut left, total, &mut cur, &mut out);
    out
}

/// All multidegrees of total degree `n` in `rank` letters.
pub(crate) fn multidegrees_of_total(rank: usize, n: usize) -> Vec<Multidegree> {
    let mut out = Vec::new();
    let mut cur: Multidegree = SmallVec::from_elem(0, rank);
    fn rec(i: usize, left: usize, cur: &mut Multidegree, out: &mut Vec<Multidegree>) {
        if i + 1 == cur.len() {
            cur[i] = left as u8;
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k as u8;
            rec(i + 1, left - k, cur, out);
        }
    }
    if rank > 0 {
        rec(0, n, &mut cur, &mut out);
    }
    out
}
