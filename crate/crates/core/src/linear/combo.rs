use std::collections::btree_map::{self, BTreeMap};

use super::scalar::Scalar;

/// A finite linear combination of keys. Zero coefficients are never stored,
/// so structural equality is equality of vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Combo<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

/// An element written in a basis indexed by `usize`.
pub type Vector = Combo<usize>;
/// An element of `H ⊗ H` in the product basis.
pub type Tensor2 = Combo<(usize, usize)>;
/// An element of `H ⊗ H ⊗ H`.
pub type Tensor3 = Combo<(usize, usize, usize)>;

impl<K: Ord> Default for Combo<K> {
    fn default() -> Self {
        Combo { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Combo<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: Scalar) -> Self {
        let mut c = Self::new();
        c.add_term(key, coeff);
        c
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Combo<K>, scale: &Scalar) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * scale);
        }
    }

    pub fn add_assign(&mut self, other: &Combo<K>) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Combo<K>) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), -c);
        }
    }

    pub fn scaled(&self, scale: &Scalar) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, scale);
        out
    }

    pub fn coeff(&self, key: &K) -> Option<&Scalar> {
        self.terms.get(key)
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

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl DoubleEndedIterator<Item = &K> {
        self.terms.keys()
    }

    /// The largest key with a nonzero coefficient.
    pub fn last_key(&self) -> Option<&K> {
        self.terms.keys().next_back()
    }

    /// Applies a linear map given on keys.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Combo<L>) -> Combo<L> {
        let mut out = Combo::new();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&K) -> bool) {
        self.terms.retain(|k, _| keep(k));
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Combo<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut c = Combo::new();
        for (k, s) in iter {
            c.add_term(k, s);
        }
        c
    }
}

impl<K: Ord> IntoIterator for Combo<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::Field;

    #[test]
    fn cancellation_removes_keys() {
        let f = Field::prime(2).unwrap();
        let mut v = Vector::single(3, f.one());
        v.add_term(3, f.one());
        assert!(v.is_zero());
    }
}
