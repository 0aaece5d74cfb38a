//! Planar binary trees inside `FQSym` and their `(q,t)` hook-length formulas.

use qtarith::{q_pochhammer, QTPoly, QTRational};

use crate::combinat::{BinaryTree, NodeInfo, Permutation, SignVector, SignedPermutation};
use crate::fqsym::{half_product_f, Side};
use crate::hook::{self, binom, mono, one_minus_q, HookFactor};
use crate::lincomb::LinComb;
use crate::{Error, Result};

/// Ways of evaluating `P_T(𝕏)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PMode {
    SignedSum,
    HookPT1,
    HookRecursive,
    HookSimplified,
}

impl PMode {
    pub const ALL: [PMode; 4] = [PMode::SignedSum, PMode::HookPT1, PMode::HookRecursive, PMode::HookSimplified];
}

/// `P_T = Σ_{P(σ)=T} F_σ`.
pub fn p_t_expand(t: &BinaryTree) -> LinComb<Permutation> {
    LinComb::from_keys(t.sylvester_class())
}

/// `P_T = P_{T₁} ≻ P₁ ≺ P_{T₂}`, empty subtrees acting as units.
pub fn p_t_dendriform(t: &BinaryTree) -> LinComb<Permutation> {
    let Some((l, r)) = t.children() else {
        return LinComb::basis(Permutation::identity(0));
    };
    let mut x = LinComb::basis(Permutation::identity(1));
    if !r.is_leaf() {
        x = half_product_f(&x, &p_t_dendriform(r), Side::Left).expect("nonempty");
    }
    if !l.is_leaf() {
        x = half_product_f(&p_t_dendriform(l), &x, Side::Right).expect("nonempty");
    }
    x
}

/// Left-subtree size of the topmost ancestor reachable from `s` through right edges only.
fn right_chain_top_left_size(nodes: &[NodeInfo], s: &NodeInfo) -> usize {
    let mut cur = s;
    while cur.is_right_child {
        cur = &nodes[cur.parent.expect("right children have parents") - 1];
    }
    cur.left_size
}

/// Per-node factors, in label order. `None` for [`PMode::SignedSum`].
pub fn p_hook_factors(t: &BinaryTree, mode: PMode) -> Option<Vec<HookFactor>> {
    let nodes = t.nodes();
    let f = |s: &NodeInfo| -> HookFactor {
        let (n, nl, nr, nrl) = (s.size as u32, s.left_size as u32, s.right_size as u32, s.right_left_size as u32);
        let den = one_minus_q(n);
        match mode {
            PMode::HookPT1 => {
                let top = if s.is_right_child { n } else { 0 };
                HookFactor::ratio(binom(top, 0, nl, 1), den)
            }
            PMode::HookRecursive => HookFactor::new(
                vec![binom(nr, 0, nrl, 1), binom(0, 0, nl, 1)],
                vec![binom(0, 0, nrl, 1), den],
            ),
            PMode::HookSimplified => {
                let num = if nr > 0 {
                    binom(nr, 0, nrl, 1)
                } else if !s.is_right_child {
                    binom(0, 0, n - 1, 1)
                } else {
                    binom(0, 0, right_chain_top_left_size(&nodes, s) as u32, 1)
                };
                HookFactor::ratio(num, den)
            }
            PMode::SignedSum => unreachable!(),
        }
    };
    match mode {
        PMode::SignedSum => None,
        _ => Some(nodes.iter().map(f).collect()),
    }
}

/// `Σ_{(σ,ε): P(σ)=T} (-t)^{m(ε)} q^{maj(σ,ε)}`, or with `+t` when `signed` is false.
fn signed_maj_sum(t: &BinaryTree, negate: bool) -> QTPoly {
    let n = t.size();
    let mut out = QTPoly::zero();
    for s in t.sylvester_class() {
        for e in SignVector::all(n) {
            let m = e.m() as u32;
            let maj = SignedPermutation::new(s.clone(), e).expect("lengths agree").maj() as u32;
            let c = if negate && m % 2 == 1 { -1 } else { 1 };
            out = &out + &mono(c, maj, m);
        }
    }
    out
}

/// `P_T(𝕏)` with `𝕏 = (1-t)/(1-q)`.
pub fn p_at_x(t: &BinaryTree, mode: PMode) -> QTRational {
    match mode {
        PMode::SignedSum => QTRational::new(signed_maj_sum(t, true), q_pochhammer(t.size() as u32)).expect("nonzero"),
        _ => hook::product(&p_hook_factors(t, mode).expect("hook mode")),
    }
}

/// `(q)_n P_T(𝕏)` with `t ↦ -t`: the generating function of signed
/// permutations of shape `T` by major index and number of signs.
pub fn signed_maj_gf(t: &BinaryTree) -> Result<QTPoly> {
    let v = &p_at_x(t, PMode::HookPT1).negate_t() * &QTRational::from_poly(q_pochhammer(t.size() as u32));
    if !v.den().is_one() {
        return Err(Error::Inconsistent(format!("signed maj generating function of {t} is not a polynomial: {v}")));
    }
    let (num, _) = v.into_parts();
    debug_assert_eq!(num, signed_maj_sum(t, false));
    Ok(num)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::permutations;
    use crate::fqsym::{f_at_x, f_hook_factors, FMode};

    fn tree(s: &str) -> BinaryTree {
        s.parse().unwrap()
    }

    fn r(s: &str) -> QTRational {
        qtarith::parse_rational(s).unwrap()
    }

    fn fig3() -> BinaryTree {
        // 3 (1 (·, 2), 9 (8 (4 (·, 7 (5 (·, 6), ·)), ·), 11 (10, ·)))
        tree("((·,(·,·)),(((·,((·,(·,·)),·)),·),((·,·),·)))")
    }

    #[test]
    fn expansions() {
        assert_eq!(p_t_expand(&BinaryTree::single()), LinComb::basis("1".parse().unwrap()));
        assert_eq!(p_t_expand(&tree("((·,·),·)")), LinComb::basis("12".parse().unwrap()));
        assert_eq!(p_t_expand(&tree("(·,(·,·))")), LinComb::basis("21".parse().unwrap()));
        for n in 0..=6 {
            let total: usize = BinaryTree::all(n).iter().map(|t| p_t_expand(t).len()).sum();
            assert_eq!(total, (1..=n).product::<usize>());
            for t in BinaryTree::all(n) {
                assert_eq!(p_t_dendriform(&t), p_t_expand(&t), "{t}");
            }
        }
    }

    #[test]
    fn fig3_labels_and_pt1() {
        let t = fig3();
        let labels: Vec<(usize, Option<usize>)> = t.nodes().iter().map(|n| (n.label, n.parent)).collect();
        assert_eq!(
            labels,
            [
                (1, Some(3)),
                (2, Some(1)),
                (3, None),
                (4, Some(8)),
                (5, Some(7)),
                (6, Some(5)),
                (7, Some(4)),
                (8, Some(9)),
                (9, Some(3)),
                (10, Some(11)),
                (11, Some(9))
            ]
        );
        let want = [
            "(1-t)/(1-q^2)",
            "(q-t)/(1-q)",
            "(1-q^2t)/(1-q^11)",
            "(1-t)/(1-q^4)",
            "(1-t)/(1-q^2)",
            "(q-t)/(1-q)",
            "(q^3-q^2t)/(1-q^3)",
            "(1-q^4t)/(1-q^5)",
            "(q^8-q^5t)/(1-q^8)",
            "(1-t)/(1-q)",
            "(q^2-qt)/(1-q^2)",
        ];
        let got = p_hook_factors(&t, PMode::HookPT1).unwrap();
        for (g, w) in got.iter().zip(want) {
            assert_eq!(g.value(), r(w));
        }
    }

    #[test]
    fn fig4_factors() {
        let t = fig3();
        let simplified = [
            "(q-t)/(1-q^2)",
            "(1-t)/(1-q)",
            "(q^8-q^5t)/(1-q^11)",
            "(q^3-q^2t)/(1-q^4)",
            "(q-t)/(1-q^2)",
            "(1-t)/(1-q)",
            "(1-t)/(1-q^3)",
            "(1-q^4t)/(1-q^5)",
            "(q^2-qt)/(1-q^8)",
            "(1-t)/(1-q)",
            "(1-q^2t)/(1-q^2)",
        ];
        for (g, w) in p_hook_factors(&t, PMode::HookSimplified).unwrap().iter().zip(simplified) {
            assert_eq!(g.value(), r(w));
        }
        let recursive = [
            "(q-t)/(1-q^2)",
            "(1-t)(1-t)/((1-t)(1-q))",
            "(q^8-q^5t)(1-q^2t)/((1-q^5t)(1-q^11))",
            "(q^3-q^2t)(1-t)/((1-q^2t)(1-q^4))",
            "(1-t)(q-t)/((1-t)(1-q^2))",
            "(1-t)(1-t)/((1-t)(1-q))",
            "(1-q^2t)(1-t)/((1-t)(1-q^3))",
            "(1-q^4t)/(1-q^5)",
            "(1-q^5t)(q^2-qt)/((1-qt)(1-q^8))",
            "(1-t)(1-t)/((1-q)(1-t))",
            "(1-qt)/(1-q^2)",
        ];
        let got = p_hook_factors(&t, PMode::HookRecursive).unwrap();
        for (g, w) in got.iter().zip(recursive) {
            assert_eq!(g.value(), r(w));
        }
        assert_eq!(got[2].to_string(), "(q^8 - q^5*t)(1 - q^2*t)/((1 - q^5*t)(1 - q^11))");
    }

    #[test]
    fn modes_agree_small() {
        for n in 0..=5 {
            for t in BinaryTree::all(n) {
                let v = p_at_x(&t, PMode::SignedSum);
                for mode in PMode::ALL {
                    assert_eq!(p_at_x(&t, mode), v, "{t} {mode:?}");
                }
            }
        }
        assert_eq!(p_at_x(&BinaryTree::single(), PMode::HookPT1), r("(1-t)/(1-q)"));
    }

    #[test]
    fn classes_partition_the_f_sum() {
        for n in 1..=5 {
            let trees: QTRational = BinaryTree::all(n).iter().map(|t| p_at_x(t, PMode::HookPT1)).sum();
            let perms: QTRational = permutations(n).map(|s| f_at_x(&s, FMode::HookDirect)).sum();
            assert_eq!(trees, perms);
        }
    }

    #[test]
    fn zigzag_factors_are_ribbon_factors() {
        for n in 1..=6 {
            for t in BinaryTree::all(n).into_iter().filter(BinaryTree::is_zigzag) {
                let class = t.sylvester_class();
                assert_eq!(class.len(), 1);
                let s = &class[0];
                let tree_f = p_hook_factors(&t, PMode::HookPT1).unwrap();
                let word_f = f_hook_factors(s, FMode::HookDirect).unwrap();
                for (i, &v) in s.as_slice().iter().enumerate() {
                    assert_eq!(tree_f[v - 1].value(), word_f[i].value());
                }
            }
        }
    }

    #[test]
    fn signed_maj_examples() {
        let t = tree("((·,(·,·)),((·,·),(·,·)))");
        // the displayed closed form carries a sixth node factor q^3 + q t
        let want = r("(q+t)^2(1+t)^2(1+q^2t)(q^3+qt)(1+q+q^2+q^3)(1+q+q^2+q^3+q^4)");
        assert_eq!(QTRational::from_poly(signed_maj_gf(&t).unwrap()), want);
        assert_eq!(signed_maj_gf(&BinaryTree::single()).unwrap(), &QTPoly::one() + &QTPoly::t());
        for n in 0..=5 {
            for t in BinaryTree::all(n) {
                let p = signed_maj_gf(&t).unwrap();
                assert!(p.is_nonnegative());
                assert_eq!(p, signed_maj_sum(&t, false));
            }
        }
    }
}
