use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::composition::{Composition, SignedComposition};
use super::signed::{self, Sign, SignVector};
use super::text;
use crate::error::{Error, Result};

/// A word whose set of letters is `{1, …, max}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedWord(Vec<usize>);

impl PackedWord {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let m = word.iter().copied().max().unwrap_or(0);
        let present: BTreeSet<usize> = word.iter().copied().collect();
        if word.contains(&0) || present.len() != m {
            return Err(Error::NotPacked(text::fmt_unsigned(&word)));
        }
        Ok(PackedWord(word))
    }

    pub(crate) fn from_vec_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        PackedWord(word)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Number of occurrences of the maximal letter.
    pub fn nmax(&self) -> usize {
        let m = self.max_letter();
        self.0.iter().filter(|&&x| x == m).count()
    }

    /// `ev(u)`: the number of occurrences of each letter `1..=max`.
    pub fn evaluation(&self) -> Composition {
        let mut counts = vec![0; self.max_letter()];
        for &x in &self.0 {
            counts[x - 1] += 1;
        }
        Composition::new(counts).expect("packed words have no empty letter class")
    }

    /// All packed words of length `n`, sorted.
    pub fn all(n: usize) -> Vec<PackedWord> {
        #[allow(clippy::ptr_arg)]
        fn rec(word: &mut Vec<usize>, free: &mut Vec<usize>, letter: usize, out: &mut Vec<PackedWord>) {
            if free.is_empty() {
                out.push(PackedWord(word.clone()));
                return;
            }
            // choose a nonempty subset of the free positions for `letter`
            let k = free.len();
            for mask in 1..1u64 << k {
                let chosen: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| free[b]).collect();
                for &p in &chosen {
                    word[p] = letter;
                }
                let mut rest: Vec<usize> = free.iter().copied().filter(|p| !chosen.contains(p)).collect();
                rec(word, &mut rest, letter + 1, out);
            }
        }
        let mut out = Vec::new();
        rec(&mut vec![0; n], &mut (0..n).collect(), 1, &mut out);
        out.sort();
        out
    }

    /// `self ≥ u`: `u = g(self)` for a nondecreasing `g`.
    pub fn is_finer_than(&self, u: &PackedWord) -> bool {
        let (v, u) = (&self.0, &u.0);
        v.len() == u.len()
            && (0..v.len()).all(|i| (0..v.len()).all(|j| v[i] > v[j] || u[i] <= u[j]))
    }

    /// All packed words `v ≥ self`, sorted.
    pub fn finer_words(&self) -> Vec<PackedWord> {
        let groups = letter_positions(&self.0);
        let mut out = vec![vec![0; self.len()]];
        let mut offsets = vec![0usize];
        for pos in &groups {
            let blocks = PackedWord::all(pos.len());
            let mut next = Vec::new();
            let mut next_off = Vec::new();
            for (w, &off) in out.iter().zip(&offsets) {
                for b in &blocks {
                    let mut w2 = w.clone();
                    for (&p, &x) in pos.iter().zip(&b.0) {
                        w2[p] = x + off;
                    }
                    next.push(w2);
                    next_off.push(off + b.max_letter());
                }
            }
            out = next;
            offsets = next_off;
        }
        let mut out: Vec<PackedWord> = out.into_iter().map(PackedWord).collect();
        out.sort();
        out
    }

    /// `[v, u] = { w : u ≥ w ≥ v }`.
    pub fn refinement_interval(v: &PackedWord, u: &PackedWord) -> Result<Vec<PackedWord>> {
        if !u.is_finer_than(v) {
            return Err(Error::NotFiner { finer: u.to_string(), coarser: v.to_string() });
        }
        Ok(v.finer_words().into_iter().filter(|w| u.is_finer_than(w)).collect())
    }
}

/// Positions of each letter `1..=max`, in increasing order.
pub(crate) fn letter_positions(w: &[usize]) -> Vec<Vec<usize>> {
    let m = w.iter().copied().max().unwrap_or(0);
    let mut out = vec![Vec::new(); m];
    for (i, &x) in w.iter().enumerate() {
        out[x - 1].push(i);
    }
    out
}

/// Packs any word over a totally ordered alphabet.
pub fn pack<T: Ord>(w: &[T]) -> PackedWord {
    let values: BTreeSet<&T> = w.iter().collect();
    let values: Vec<&T> = values.into_iter().collect();
    PackedWord(w.iter().map(|x| values.binary_search(&x).unwrap() + 1).collect())
}

/// Packing of the biword `(u over v)` with respect to the lexicographic order on columns.
pub fn biword_pack(u: &[usize], v: &[usize]) -> Result<PackedWord> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    let cols: Vec<(usize, usize)> = u.iter().copied().zip(v.iter().copied()).collect();
    Ok(pack(&cols))
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::fmt_unsigned(&self.0))
    }
}

impl FromStr for PackedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PackedWord::new(text::parse_unsigned(s)?)
    }
}

/// A packed word with one sign per position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPackedWord {
    word: PackedWord,
    signs: SignVector,
}

impl SignedPackedWord {
    pub fn new(word: PackedWord, signs: SignVector) -> Result<Self> {
        if word.len() != signs.len() {
            return Err(Error::LengthMismatch { left: word.len(), right: signs.len() });
        }
        Ok(SignedPackedWord { word, signs })
    }

    pub fn unsigned(word: PackedWord) -> Self {
        let n = word.len();
        SignedPackedWord { word, signs: SignVector::all_plus(n) }
    }

    /// The regular signing of `word` in which the values in `signed` are barred.
    pub fn with_signed_values(word: PackedWord, signed: &BTreeSet<usize>) -> Self {
        let signs = word
            .as_slice()
            .iter()
            .map(|x| if signed.contains(x) { Sign::Minus } else { Sign::Plus })
            .collect();
        SignedPackedWord { word, signs: SignVector::new(signs) }
    }

    /// All regular signings of `word`: one sign per value, `2^max` of them.
    pub fn regular_signings(word: &PackedWord) -> Vec<SignedPackedWord> {
        let m = word.max_letter();
        (0..1u64 << m)
            .map(|mask| {
                let signed: BTreeSet<usize> = (1..=m).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                SignedPackedWord::with_signed_values(word.clone(), &signed)
            })
            .collect()
    }

    pub fn word(&self) -> &PackedWord {
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

    pub fn is_regular(&self) -> bool {
        signed::is_regular(self.word.as_slice(), &self.signs)
    }

    /// Number of barred positions.
    pub fn m(&self) -> usize {
        self.signs.m()
    }

    /// Number of distinct barred values.
    pub fn m_prime(&self) -> usize {
        self.signed_values().len()
    }

    pub fn signed_values(&self) -> BTreeSet<usize> {
        self.word
            .as_slice()
            .iter()
            .zip(self.signs.as_slice())
            .filter(|(_, s)| s.is_minus())
            .map(|(&x, _)| x)
            .collect()
    }

    /// Signed evaluation of a regular word.
    pub fn sev(&self) -> Result<SignedComposition> {
        if !self.is_regular() {
            return Err(Error::NotRegular(self.to_string()));
        }
        let signed = self.signed_values();
        let comp = self.word.evaluation();
        let signs = (1..=self.word.max_letter()).map(|v| if signed.contains(&v) { Sign::Minus } else { Sign::Plus });
        SignedComposition::new(comp, SignVector::new(signs.collect()))
    }

    /// The super-packed word `f_ε(u)`: a value collapses onto its successor when it is signed.
    pub fn spack(&self) -> Result<PackedWord> {
        if !self.is_regular() {
            return Err(Error::NotRegular(self.to_string()));
        }
        let signed = self.signed_values();
        let m = self.word.max_letter();
        let mut f = vec![0; m + 1];
        for i in 1..=m {
            f[i] = if i == 1 {
                1
            } else if signed.contains(&(i - 1)) {
                f[i - 1]
            } else {
                f[i - 1] + 1
            };
        }
        Ok(PackedWord::from_vec_unchecked(self.word.as_slice().iter().map(|&x| f[x]).collect()))
    }
}

impl fmt::Display for SignedPackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::fmt_signed(self.word.as_slice(), self.signs.minus_flags()))
    }
}

impl FromStr for SignedPackedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = text::parse_letters(s)?;
        let signs = letters.iter().map(|&(_, n)| if n { Sign::Minus } else { Sign::Plus }).collect();
        SignedPackedWord::new(
            PackedWord::new(letters.into_iter().map(|(v, _)| v).collect())?,
            SignVector::new(signs),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pw(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    #[test]
    fn packing_examples() {
        assert_eq!(pack(&[8, 7, 1, 8, 8, 3, 3, 1, 9]), pw("431442215"));
        assert_eq!(pack(&[5, 9, 5]), pw("121"));
        let u = [4, 2, 4, 1, 2, 2, 5, 3];
        let v = [5, 3, 1, 5, 4, 3, 2, 3];
        assert_eq!(biword_pack(&u, &v).unwrap(), pw("62513274"));
        assert_eq!(biword_pack(&[1, 1], &[2, 1]).unwrap(), pw("21"));
        assert!(biword_pack(&[1], &[1, 1]).is_err());
    }

    #[test]
    fn finer_than_121() {
        let fw: Vec<String> = pw("121").finer_words().iter().map(|w| w.to_string()).collect();
        assert_eq!(fw, ["121", "132", "231"]);
        assert!(pw("231").is_finer_than(&pw("121")));
        let iv = PackedWord::refinement_interval(&pw("121"), &pw("231")).unwrap();
        assert_eq!(iv, vec![pw("121"), pw("231")]);
    }

    #[test]
    fn ordered_bell_numbers() {
        let counts: Vec<usize> = (0..=5).map(|n| PackedWord::all(n).len()).collect();
        assert_eq!(counts, [1, 1, 3, 13, 75, 541]);
    }

    #[test]
    fn super_packing() {
        let w: SignedPackedWord = "5,-1,-2,-1,3,5,-4,-4,6,-1".parse().unwrap();
        assert_eq!(w.spack().unwrap(), pw("2111122231"));
        let w: SignedPackedWord = "-1,2".parse().unwrap();
        assert_eq!(w.spack().unwrap(), pw("11"));
        let w: SignedPackedWord = "1,-1".parse().unwrap();
        assert!(matches!(w.spack(), Err(Error::NotRegular(_))));
    }

    #[test]
    fn signed_evaluation() {
        let w: SignedPackedWord = "1,1,-2,-2,3,1".parse().unwrap();
        assert_eq!(w.sev().unwrap().to_string(), "(3,-2,1)");
        assert_eq!(w.m_prime(), 1);
        assert_eq!(w.m(), 2);
    }
}
