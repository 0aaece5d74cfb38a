use std::fmt;
use std::str::FromStr;

use super::perm::{self, Permutation};
use super::text;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignVector(signs)
    }

    pub fn all_plus(n: usize) -> Self {
        SignVector(vec![Sign::Plus; n])
    }

    pub fn all_minus(n: usize) -> Self {
        SignVector(vec![Sign::Minus; n])
    }

    /// Bit `i` of `mask` set means a minus sign at position `i`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        SignVector((0..n).map(|i| if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect())
    }

    /// All `2^n` sign vectors, in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = SignVector> {
        (0..1u64 << n).map(move |m| SignVector::from_mask(n, m))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of minus signs.
    pub fn m(&self) -> usize {
        self.0.iter().filter(|s| s.is_minus()).count()
    }

    pub fn as_slice(&self) -> &[Sign] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn minus_flags(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().map(|s| s.is_minus())
    }

    pub fn componentwise(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(SignVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).collect()))
    }

    pub fn concat(&self, other: &Self) -> Self {
        SignVector(self.0.iter().chain(&other.0).copied().collect())
    }
}

/// A word with one sign per letter; minus letters are the barred ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedWord {
    word: Vec<usize>,
    signs: SignVector,
}

impl SignedWord {
    pub fn new(word: Vec<usize>, signs: SignVector) -> Result<Self> {
        if word.len() != signs.len() {
            return Err(Error::LengthMismatch { left: word.len(), right: signs.len() });
        }
        Ok(SignedWord { word, signs })
    }

    pub fn unsigned(word: Vec<usize>) -> Self {
        let n = word.len();
        SignedWord { word, signs: SignVector::all_plus(n) }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn signs(&self) -> &SignVector {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `sign · letter`, the integer key whose order is the signed alphabet order.
    pub fn keys(&self) -> Vec<i64> {
        signed_keys(&self.word, &self.signs)
    }

    /// Every value carries a single sign across its occurrences.
    pub fn is_regular(&self) -> bool {
        is_regular(&self.word, &self.signs)
    }

    /// Standardization in the order `… < ā₂ < ā₁ < a₁ < a₂ < …`.
    pub fn signed_std(&self) -> Permutation {
        signed_std(&self.word, &self.signs)
    }

    /// `Std(w, ε) = (std(w), ε)`.
    #[allow(non_snake_case)]
    pub fn signed_Std(&self) -> (Permutation, SignVector) {
        (perm::std(&self.word), self.signs.clone())
    }
}

pub(crate) fn signed_keys(word: &[usize], signs: &SignVector) -> Vec<i64> {
    word.iter().zip(signs.as_slice()).map(|(&x, s)| s.value() * x as i64).collect()
}

pub(crate) fn is_regular(word: &[usize], signs: &SignVector) -> bool {
    let mut seen: std::collections::HashMap<usize, Sign> = std::collections::HashMap::new();
    word.iter().zip(signs.as_slice()).all(|(&x, &s)| *seen.entry(x).or_insert(s) == s)
}

/// Sort by key `sign·letter`; equal barred letters rank right to left,
/// equal unbarred letters left to right.
pub(crate) fn signed_std(word: &[usize], signs: &SignVector) -> Permutation {
    let keys = signed_keys(word, signs);
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by(|&a, &b| {
        keys[a].cmp(&keys[b]).then_with(|| if keys[a] < 0 { b.cmp(&a) } else { a.cmp(&b) })
    });
    let mut out = vec![0; word.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank + 1;
    }
    Permutation::from_vec_unchecked(out)
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::fmt_signed(&self.word, self.signs.minus_flags()))
    }
}

impl FromStr for SignedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = text::parse_letters(s)?;
        let signs = letters.iter().map(|&(_, neg)| if neg { Sign::Minus } else { Sign::Plus }).collect();
        Ok(SignedWord { word: letters.into_iter().map(|(v, _)| v).collect(), signs: SignVector(signs) })
    }
}

/// An element of the hyperoctahedral group `{±1} ≀ 𝔖_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Permutation,
    signs: SignVector,
}

impl SignedPermutation {
    pub fn new(perm: Permutation, signs: SignVector) -> Result<Self> {
        if perm.len() != signs.len() {
            return Err(Error::LengthMismatch { left: perm.len(), right: signs.len() });
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn unsigned(perm: Permutation) -> Self {
        let n = perm.len();
        SignedPermutation { perm, signs: SignVector::all_plus(n) }
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn signs(&self) -> &SignVector {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn keys(&self) -> Vec<i64> {
        signed_keys(self.perm.as_slice(), &self.signs)
    }

    pub fn signed_std(&self) -> Permutation {
        signed_std(self.perm.as_slice(), &self.signs)
    }

    /// Descent set under the key order.
    pub fn descents(&self) -> Vec<usize> {
        perm::descents(&self.keys())
    }

    pub fn maj(&self) -> usize {
        perm::maj(&self.keys())
    }

    pub fn m(&self) -> usize {
        self.signs.m()
    }
}

impl From<SignedPermutation> for SignedWord {
    fn from(p: SignedPermutation) -> Self {
        SignedWord { word: p.perm.into_vec(), signs: p.signs }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::fmt_signed(self.perm.as_slice(), self.signs.minus_flags()))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let w: SignedWord = s.parse()?;
        SignedPermutation::new(Permutation::new(w.word)?, w.signs)
    }
}
