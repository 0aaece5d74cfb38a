use std::fmt;
use std::str::FromStr;

use super::composition::Composition;
use super::text;
use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(text::fmt_unsigned(&word)));
            }
            seen[x] = true;
        }
        Ok(Permutation(word))
    }

    pub(crate) fn from_vec_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect()))
    }

    pub fn descents(&self) -> Vec<usize> {
        descents(&self.0)
    }

    pub fn maj(&self) -> usize {
        maj(&self.0)
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_descents(self.len(), &self.descents())
    }

    /// The word `σ₁+k … σₙ+k`.
    pub fn shifted(&self, k: usize) -> Vec<usize> {
        self.0.iter().map(|x| x + k).collect()
    }
}

/// Positions `i` (1-based) with `w_i > w_{i+1}`.
pub fn descents<T: Ord>(w: &[T]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

pub fn maj<T: Ord>(w: &[T]) -> usize {
    descents(w).iter().sum()
}

/// Standardization: letters are ranked by value, equal letters left to right.
pub fn std<T: Ord>(w: &[T]) -> Permutation {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by(|&a, &b| w[a].cmp(&w[b]));
    let mut out = vec![0; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank + 1;
    }
    Permutation(out)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::fmt_unsigned(&self.0))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(text::parse_unsigned(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn standardization_examples() {
        assert_eq!(std(b"bbacab"), p("341625"));
        assert_eq!(std(&[1, 2, 3]), p("123"));
        assert_eq!(std(&[2, 2, 1]), p("231"));
    }

    #[test]
    fn statistics() {
        let s = p("4132");
        assert_eq!(s.descents(), vec![1, 3]);
        assert_eq!(s.maj(), 4);
        assert_eq!(s.descent_composition().parts(), &[1, 2, 1]);
        assert_eq!(s.inverse(), p("2431"));
        assert_eq!(s.compose(&s.inverse()).unwrap(), Permutation::identity(4));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!("1231".parse::<Permutation>().is_err());
        assert!("24".parse::<Permutation>().is_err());
        assert_eq!(p("10,1,2,3,4,5,6,7,8,9").to_string(), "10,1,2,3,4,5,6,7,8,9");
    }
}
