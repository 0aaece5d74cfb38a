use std::collections::BTreeSet;

use super::composition::{Composition, SignedComposition};
use super::packed::SignedPackedWord;
use super::perm::{descents, Permutation};
use super::signed::SignedWord;
use crate::error::Result;

/// Descent-type statistics of a word, signed word or composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stats {
    pub descents: Vec<usize>,
    pub maj: usize,
    pub descent_composition: Composition,
    /// Number of barred letters.
    pub m: usize,
    /// Multiplicities of `1..=max`, zeros included.
    pub evaluation: Vec<usize>,
    /// The evaluation with zeros removed.
    pub packed_evaluation: Option<Composition>,
    /// Present only for regular signed packed words.
    pub signed_evaluation: Option<SignedComposition>,
    pub peaks: Vec<usize>,
    pub valleys: Vec<usize>,
    pub mirror: Composition,
}

impl Stats {
    fn from_descents(n: usize, des: Vec<usize>) -> Self {
        let comp = Composition::from_descents(n, &des);
        Stats {
            maj: des.iter().sum(),
            descents: des,
            peaks: comp.peaks(),
            valleys: comp.valleys(),
            mirror: comp.mirror(),
            descent_composition: comp,
            m: 0,
            evaluation: Vec::new(),
            packed_evaluation: None,
            signed_evaluation: None,
        }
    }

    pub fn of_permutation(p: &Permutation) -> Self {
        let mut s = Stats::from_descents(p.len(), p.descents());
        s.evaluation = vec![1; p.len()];
        s.packed_evaluation = Composition::new(s.evaluation.clone()).ok();
        s
    }

    /// Descents of a signed word compare keys `sign·letter`.
    pub fn of_signed_word(w: &SignedWord) -> Result<Self> {
        let mut s = Stats::from_descents(w.len(), descents(&w.keys()));
        s.m = w.signs().m();
        let max = w.word().iter().copied().max().unwrap_or(0);
        let mut ev = vec![0; max];
        for &x in w.word() {
            if x > 0 {
                ev[x - 1] += 1;
            }
        }
        let parts: Vec<usize> = ev.iter().copied().filter(|&c| c > 0).collect();
        s.packed_evaluation = Composition::new(parts).ok();
        if ev.iter().all(|&c| c > 0) && !ev.is_empty() {
            let spw = SignedPackedWord::new(super::packed::pack(w.word()), w.signs().clone())?;
            if spw.is_regular() {
                s.signed_evaluation = Some(spw.sev()?);
            }
        }
        s.evaluation = ev;
        Ok(s)
    }

    pub fn of_composition(c: &Composition) -> Self {
        let mut s = Stats::from_descents(c.size(), c.descents());
        s.evaluation = c.parts().to_vec();
        s.packed_evaluation = Some(c.clone());
        s
    }
}

/// Exponent `b(I,J)` of `t`: descents of `J` not in `I`, together with
/// `d + 1` for every descent `d` of `I` that is not a descent of `J`.
pub fn peak_valley_exponent(i: &Composition, j: &Composition) -> usize {
    let di: BTreeSet<usize> = i.descents().into_iter().collect();
    let dj: BTreeSet<usize> = j.descents().into_iter().collect();
    let mut set: BTreeSet<usize> = dj.difference(&di).copied().collect();
    set.extend(di.difference(&dj).map(|d| d + 1));
    set.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_stats() {
        let s = Stats::of_permutation(&"4132".parse().unwrap());
        assert_eq!(s.descents, [1, 3]);
        assert_eq!(s.maj, 4);
        assert_eq!(s.descent_composition.to_string(), "(1,2,1)");
    }

    #[test]
    fn mirror_shape() {
        let p: Permutation = "5,6,7,4,3,2,8,9,10,1,11".parse().unwrap();
        let s = Stats::of_permutation(&p);
        assert_eq!(s.descent_composition.to_string(), "(3,1,1,4,2)");
        assert_eq!(s.mirror.to_string(), "(2,4,1,1,3)");
    }

    #[test]
    fn signed_word_stats() {
        let w: SignedWord = "1,-2,2,3,-1".parse().unwrap();
        let s = Stats::of_signed_word(&w).unwrap();
        // keys 1,-2,2,3,-1
        assert_eq!(s.descents, [1, 4]);
        assert_eq!(s.m, 2);
        assert_eq!(s.evaluation, [2, 2, 1]);
        assert!(s.signed_evaluation.is_none());
        let w: SignedWord = "1,-2,-2,-3".parse().unwrap();
        let s = Stats::of_signed_word(&w).unwrap();
        assert_eq!(s.signed_evaluation.unwrap().to_string(), "(1,-2,-1)");
    }

    #[test]
    fn gaps_in_evaluation() {
        let w = SignedWord::unsigned(vec![3, 1, 3]);
        let s = Stats::of_signed_word(&w).unwrap();
        assert_eq!(s.evaluation, [1, 0, 2]);
        assert_eq!(s.packed_evaluation.unwrap().to_string(), "(1,2)");
    }
}
