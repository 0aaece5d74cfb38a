use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use qtarith::QTRational;

/// A finite formal sum of basis keys with `Q(q,t)` coefficients.
///
/// Terms are kept in key order and zero coefficients are never stored, so
/// structural equality is equality of the sums.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, QTRational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        let mut out = Self::new();
        out.terms.insert(key, QTRational::one());
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, QTRational)>>(terms: I) -> Self {
        let mut out = Self::new();
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    /// Sum of the keys, each with coefficient one (repeats accumulate).
    pub fn from_keys<I: IntoIterator<Item = K>>(keys: I) -> Self {
        let one = QTRational::one();
        let mut out = Self::new();
        for k in keys {
            out.add_term(k, &one);
        }
        out
    }

    pub fn add_term(&mut self, key: K, c: &QTRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_int(&mut self, key: K, c: i64) {
        self.add_term(key, &QTRational::from_int(c));
    }

    pub fn coeff(&self, key: &K) -> QTRational {
        self.terms.get(key).cloned().unwrap_or_else(QTRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &QTRational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &QTRational) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        LinComb { terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect() }
    }

    /// Applies `f` to every key, merging coefficients of colliding images.
    pub fn map_keys<L: Ord + Clone, F: FnMut(&K) -> L>(&self, mut f: F) -> LinComb<L> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_term(f(k), c);
        }
        out
    }

    /// Linear extension of `f`, which sends a key to a combination.
    pub fn flat_map<L: Ord + Clone, F: FnMut(&K) -> LinComb<L>>(&self, mut f: F) -> LinComb<L> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            for (l, d) in f(k).iter() {
                out.add_term(l.clone(), &(c * d));
            }
        }
        out
    }

    /// Sum of all coefficients, i.e. the image under `key -> 1`.
    pub fn total(&self) -> QTRational {
        self.terms.values().sum()
    }

    /// Bilinear extension of a product defined on keys.
    pub fn bilinear<L, M, F>(&self, other: &LinComb<L>, mut f: F) -> LinComb<M>
    where
        L: Ord + Clone,
        M: Ord + Clone,
        F: FnMut(&K, &L) -> LinComb<M>,
    {
        let mut out = LinComb::new();
        for (a, x) in &self.terms {
            for (b, y) in other.iter() {
                let xy = x * y;
                for (m, z) in f(a, b).iter() {
                    out.add_term(m.clone(), &(&xy * z));
                }
            }
        }
        out
    }

    /// Writes the sum with each key prefixed by `basis`, e.g. `G[12] + t*G[21]`.
    pub fn display_with<'a>(&'a self, basis: &'a str) -> impl fmt::Display + 'a
    where
        K: fmt::Display,
    {
        Shown { lc: self, basis }
    }
}

struct Shown<'a, K: Ord> {
    lc: &'a LinComb<K>,
    basis: &'a str,
}

impl<K: Ord + fmt::Display> fmt::Display for Shown<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lc.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.lc.terms.iter().enumerate() {
            // single-term polynomial coefficients print bare, with their sign pulled out
            let bare = c.is_polynomial() && c.num().len() == 1;
            let neg = bare && c.num().leading_term().is_some_and(|(_, x)| x < &0.into());
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{}[{}]", self.basis, k)?;
            } else if bare {
                write!(f, "{}*{}[{}]", mag, self.basis, k)?;
            } else {
                write!(f, "({})*{}[{}]", mag, self.basis, k)?;
            }
        }
        Ok(())
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c);
        }
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        self + &(-rhs)
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        LinComb { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: LinComb<K>) -> LinComb<K> {
        &self + &rhs
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: LinComb<K>) -> LinComb<K> {
        &self - &rhs
    }
}

impl<K: Ord + Clone> FromIterator<(K, QTRational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, QTRational)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut a: LinComb<u32> = LinComb::from_keys([1, 2, 2]);
        assert_eq!(a.coeff(&2), QTRational::from_int(2));
        a.add_int(1, -1);
        assert_eq!(a.len(), 1);
        assert!((&a - &a).is_empty());
        assert_eq!(a.display_with("X").to_string(), "2*X[2]");
    }
}
