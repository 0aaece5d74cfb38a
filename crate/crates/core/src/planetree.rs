//! The free tridendriform algebra on one generator, with basis `MM_T`
//! indexed by plane trees, realized inside `WQSym`.

use qtarith::QTRational;

use crate::combinat::{PackedWord, PlaneTree};
use crate::hook::{self, binom, one_minus_q, HookFactor};
use crate::lincomb::LinComb;
use crate::wqsym::{m_at_x, m_tridendriform_lin, MMode, TriPart};

/// `MM_T = Σ_{𝒯(u)=T} M_u`.
pub fn mm_expand(t: &PlaneTree) -> LinComb<PackedWord> {
    LinComb::from_keys(t.fiber())
}

fn tri(x: &LinComb<PackedWord>, y: &LinComb<PackedWord>, part: TriPart) -> LinComb<PackedWord> {
    m_tridendriform_lin(x, y, part).expect("plane tree products have nonempty factors")
}

/// `MM_T = (MM_{T₁} ≻ MM₁ ≺ MM_{T₂}) ∘ (MM₁ ≺ MM_{T₃}) ∘ … ∘ (MM₁ ≺ MM_{T_k})`,
/// with empty subtrees acting as units.
pub fn mm_dendriform(t: &PlaneTree) -> LinComb<PackedWord> {
    let ch = t.children();
    if ch.is_empty() {
        return LinComb::basis(PackedWord::all(0).remove(0));
    }
    let one = || LinComb::basis(PackedWord::all(1).remove(0));
    let below = |x: LinComb<PackedWord>, sub: &PlaneTree| {
        if sub.arity() == 0 {
            x
        } else {
            tri(&x, &mm_dendriform(sub), TriPart::Left)
        }
    };
    let mut first = below(one(), &ch[1]);
    if ch[0].arity() > 0 {
        first = tri(&mm_dendriform(&ch[0]), &first, TriPart::Right);
    }
    ch[2..].iter().fold(first, |acc, sub| tri(&acc, &below(one(), sub), TriPart::Middle))
}

/// Per-node factors in preorder: `(1-t^{a-1})/(1-q^n)` at the root and
/// `(q^{r} - t^{a-1})/(1-q^{r})` at every other internal node, `r` being the
/// number of regions below the node, itself included.
pub fn mm_hook_factors(t: &PlaneTree) -> Vec<HookFactor> {
    t.region_stats()
        .iter()
        .map(|s| {
            let (a, r) = ((s.arity - 1) as u32, s.regions as u32);
            if s.parent.is_none() {
                HookFactor::ratio(binom(0, 0, 0, a), one_minus_q(r))
            } else {
                HookFactor::ratio(binom(r, 0, 0, a), one_minus_q(r))
            }
        })
        .collect()
}

/// `MM_T(𝕏)` from the hook formula.
pub fn mm_at_x(t: &PlaneTree) -> QTRational {
    hook::product(&mm_hook_factors(t))
}

/// `MM_T(𝕏)` summed over the fiber of `T`.
pub fn mm_at_x_fiber(t: &PlaneTree) -> QTRational {
    t.fiber().iter().map(|u| m_at_x(u, MMode::Closed)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(s: &str) -> PlaneTree {
        s.parse().unwrap()
    }

    #[test]
    fn expansion_and_recursion() {
        assert_eq!(mm_expand(&PlaneTree::single()), LinComb::basis("1".parse().unwrap()));
        for n in 1..=5 {
            let total: usize = PlaneTree::all(n).iter().map(|t| mm_expand(t).len()).sum();
            assert_eq!(total, [1, 1, 3, 13, 75, 541][n]);
            if n <= 4 {
                for t in PlaneTree::all(n) {
                    assert_eq!(mm_dendriform(&t), mm_expand(&t), "{t}");
                }
            }
        }
        let t = PlaneTree::decreasing(&[2, 4, 3, 4, 1, 1]);
        assert_eq!(mm_dendriform(&t), mm_expand(&t));
    }

    #[test]
    fn numerator_decorations() {
        let nums = |t: &PlaneTree| -> Vec<String> {
            mm_hook_factors(t).iter().map(|f| hook::latex_poly(&f.numerator_product())).collect()
        };
        let t = PlaneTree::decreasing(&[2, 4, 3, 4, 1, 1]);
        assert_eq!(nums(&t), ["1-t^{2}", "q-t", "q-t", "q^{2}-t^{2}"]);
        let t = tree("((·,·),((·,·,·,·),·))");
        assert_eq!(nums(&t), ["1-t", "q-t", "q^{4}-t", "q^{3}-t^{3}"]);
        assert_eq!(mm_at_x(&PlaneTree::single()), qtarith::parse_rational("(1-t)/(1-q)").unwrap());
    }

    #[test]
    fn hook_formula_matches_fibers() {
        for n in 1..=5 {
            for t in PlaneTree::all(n) {
                assert_eq!(mm_at_x(&t), mm_at_x_fiber(&t), "{t}");
            }
        }
    }
}
