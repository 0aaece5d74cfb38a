use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::signed::{Sign, SignVector};
use super::text;
use crate::error::{Error, Result};

/// A composition of `n`; the empty composition is the unique one of `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?}")));
        }
        Ok(Composition(parts))
    }

    /// The composition of `n` whose descent set is `des` (entries in `1..n`).
    pub fn from_descents(n: usize, des: &[usize]) -> Self {
        let mut cuts: Vec<usize> = des.iter().copied().filter(|&d| d > 0 && d < n).collect();
        cuts.sort_unstable();
        cuts.dedup();
        let mut parts = Vec::with_capacity(cuts.len() + 1);
        let mut prev = 0;
        for c in cuts.into_iter().chain((n > 0).then_some(n)) {
            parts.push(c - prev);
            prev = c;
        }
        Composition(parts)
    }

    /// All compositions of `n`, ordered by descent-set bitmask.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition(Vec::new())];
        }
        (0..1u64 << (n - 1))
            .map(|mask| {
                let des: Vec<usize> = (1..n).filter(|d| mask >> (d - 1) & 1 == 1).collect();
                Composition::from_descents(n, &des)
            })
            .collect()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Partial sums `i₁, i₁+i₂, …` excluding the total.
    pub fn descents(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in &self.0[..self.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    /// Cells with no cell to their right nor on top, numbered `1..=n`.
    pub fn peaks(&self) -> Vec<usize> {
        let n = self.size();
        let des: BTreeSet<usize> = self.descents().into_iter().collect();
        (1..=n).filter(|&j| (des.contains(&j) || j == n) && !des.contains(&(j - 1))).collect()
    }

    /// Cells with no cell to their left nor below.
    pub fn valleys(&self) -> Vec<usize> {
        let n = self.size();
        let des: BTreeSet<usize> = self.descents().into_iter().collect();
        (1..=n).filter(|&j| (j == 1 || des.contains(&(j - 1))) && !des.contains(&j)).collect()
    }

    /// The parts in reverse order.
    pub fn mirror(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// `self ≥ other` in refinement: same size and every descent of `other` is one of `self`.
    pub fn is_finer_than(&self, other: &Composition) -> bool {
        let mine: BTreeSet<usize> = self.descents().into_iter().collect();
        self.size() == other.size() && other.descents().iter().all(|d| mine.contains(d))
    }

    /// All `J` with `K ≥ J ≥ I`.
    pub fn interval(i: &Composition, k: &Composition) -> Result<Vec<Composition>> {
        if !k.is_finer_than(i) {
            return Err(Error::NotFiner { finer: k.to_string(), coarser: i.to_string() });
        }
        let base = i.descents();
        let extra: Vec<usize> = k.descents().into_iter().filter(|d| !base.contains(d)).collect();
        let n = i.size();
        Ok((0..1u64 << extra.len())
            .map(|mask| {
                let mut des = base.clone();
                des.extend(extra.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &d)| d));
                Composition::from_descents(n, &des)
            })
            .collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(s)
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = strip_parens(s);
        Composition::new(text::parse_unsigned(body)?)
    }
}

/// A composition with one sign per part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedComposition {
    comp: Composition,
    signs: SignVector,
}

impl SignedComposition {
    pub fn new(comp: Composition, signs: SignVector) -> Result<Self> {
        if comp.len() != signs.len() {
            return Err(Error::LengthMismatch { left: comp.len(), right: signs.len() });
        }
        Ok(SignedComposition { comp, signs })
    }

    pub fn comp(&self) -> &Composition {
        &self.comp
    }

    pub fn signs(&self) -> &SignVector {
        &self.signs
    }
}

impl fmt::Display for SignedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .comp
            .parts()
            .iter()
            .zip(self.signs.as_slice())
            .map(|(p, s)| if s.is_minus() { format!("-{p}") } else { p.to_string() })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for SignedComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = text::parse_letters(strip_parens(s))?;
        let signs = letters.iter().map(|&(_, n)| if n { Sign::Minus } else { Sign::Plus }).collect();
        SignedComposition::new(
            Composition::new(letters.into_iter().map(|(v, _)| v).collect())?,
            SignVector::new(signs),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn descents_and_mirror() {
        let d = Composition::from_descents(11, &[3, 4, 5, 9]);
        assert_eq!(d, c("3,1,1,4,2"));
        assert_eq!(d.mirror(), c("2,4,1,1,3"));
        assert_eq!(c("1,2,1").maj(), 4);
        assert_eq!(Composition::all(4).len(), 8);
        assert_eq!(Composition::all(0), vec![Composition::new(vec![]).unwrap()]);
    }

    #[test]
    fn peaks_and_valleys() {
        // ribbon (2,1): cells 1,2 on a row, 3 below 2
        let j = c("2,1");
        assert_eq!(j.peaks(), vec![2]);
        assert_eq!(j.valleys(), vec![1, 3]);
        assert_eq!(c("3").peaks(), vec![3]);
        assert_eq!(c("3").valleys(), vec![1]);
    }

    #[test]
    fn refinement_interval() {
        let i = c("3");
        let k = c("1,1,1");
        assert!(k.is_finer_than(&i));
        assert_eq!(Composition::interval(&i, &k).unwrap().len(), 4);
        assert!(Composition::interval(&k, &i).is_err());
        assert_eq!(Composition::interval(&k, &k).unwrap(), vec![k.clone()]);
    }

    #[test]
    fn signed_round_trip() {
        let s: SignedComposition = "(-2,1,-1)".parse().unwrap();
        assert_eq!(s.to_string(), "(-2,1,-1)");
        assert_eq!(s.signs().m(), 2);
    }
}
