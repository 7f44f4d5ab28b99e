//! Sparse exact linear algebra over [`Scalar`] with arbitrary ordered keys.
//!
//! Rows are kept in reduced echelon form with the pivot of each row being its
//! largest key, so the canonical form of a vector modulo the span is the
//! combination of non-pivot keys left after subtracting pivot rows.

use std::collections::BTreeMap;

use crate::scalars::Scalar;

pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// Adds `c · src` into `dst`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(dst: &mut SparseVec<K>, c: &Scalar, src: &SparseVec<K>) {
    for (k, x) in src {
        let add = c * x;
        match dst.get_mut(k) {
            Some(y) => {
                *y = &*y + &add;
                if y.is_zero() {
                    dst.remove(k);
                }
            }
            None => {
                if !add.is_zero() {
                    dst.insert(k.clone(), add);
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    /// Row with the given pivot (pivot coefficient 1).
    pub fn row(&self, pivot: &K) -> Option<&SparseVec<K>> {
        self.rows.get(pivot)
    }

    pub fn rows(&self) -> impl Iterator<Item = (&K, &SparseVec<K>)> {
        self.rows.iter()
    }

    /// Canonical remainder of `v` modulo the row span.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut out = v.clone();
        let hits: Vec<K> = v.keys().filter(|k| self.rows.contains_key(*k)).cloned().collect();
        for k in hits {
            if let Some(c) = out.get(&k).cloned() {
                axpy(&mut out, &-c, &self.rows[&k]);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let Some(pivot) = r.keys().next_back().cloned() else {
            return false;
        };
        let inv = r[&pivot].inv().expect("nonzero pivot");
        for x in r.values_mut() {
            *x = &*x * &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &-c, &r);
            }
        }
        r.insert(pivot.clone(), Scalar::one());
        self.rows.insert(pivot, r);
        true
    }

    pub fn into_rows(self) -> Vec<SparseVec<K>> {
        self.rows.into_values().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Aug<K> {
    Tag(usize),
    Img(K),
}

fn augment<K: Ord + Clone>(img: &SparseVec<K>, tag: Option<usize>) -> SparseVec<Aug<K>> {
    let mut v: SparseVec<Aug<K>> = img.iter().map(|(k, x)| (Aug::Img(k.clone()), x.clone())).collect();
    if let Some(t) = tag {
        v.insert(Aug::Tag(t), Scalar::one());
    }
    v
}

/// Linear map given by the images of basis vectors `0..n`.
pub struct LinearMap<K: Ord + Clone> {
    ech: Echelon<Aug<K>>,
    n: usize,
}

impl<K: Ord + Clone> LinearMap<K> {
    pub fn new(columns: &[SparseVec<K>]) -> Self {
        let mut ech = Echelon::new();
        for (j, c) in columns.iter().enumerate() {
            ech.insert(&augment(c, Some(j)));
        }
        Self { ech, n: columns.len() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.ech.rows().filter(|(k, _)| matches!(k, Aug::Img(_))).count()
    }

    /// Reduced basis of the kernel, as coordinate vectors.
    pub fn kernel(&self) -> Vec<SparseVec<usize>> {
        self.ech
            .rows()
            .filter(|(k, _)| matches!(k, Aug::Tag(_)))
            .map(|(_, row)| {
                row.iter()
                    .map(|(k, x)| match k {
                        Aug::Tag(t) => (*t, x.clone()),
                        Aug::Img(_) => unreachable!("kernel row with image part"),
                    })
                    .collect()
            })
            .collect()
    }

    /// Some `x` with `A x = b`, if one exists.
    pub fn solve(&self, b: &SparseVec<K>) -> Option<SparseVec<usize>> {
        let r = self.ech.reduce(&augment(b, None));
        if r.keys().any(|k| matches!(k, Aug::Img(_))) {
            return None;
        }
        Some(
            r.into_iter()
                .filter_map(|(k, x)| match k {
                    Aug::Tag(t) => Some((t, -x)),
                    Aug::Img(_) => None,
                })
                .collect(),
        )
    }
}
