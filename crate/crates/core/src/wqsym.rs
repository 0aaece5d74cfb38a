//! Word quasi-symmetric functions: the dual bases `M_u` and `N_u`, the
//! signed internal product, superization, the `(1-t)` specializations,
//! the values at `𝕏` and the tridendriform partial products.

use std::collections::BTreeSet;

use itertools::Itertools;
use qtarith::{q_comp_pochhammer, QTPoly, QTRational};

use crate::combinat::{biword_pack, Composition, PackedWord, Sign, SignVector, SignedPackedWord};
use crate::hook::{binom, mono, one_minus_q, HookFactor};
use crate::lincomb::LinComb;
use crate::{Error, Result};

/// The three pieces of the product of `M` basis elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriPart {
    /// The maximal letter occurs in the left factor only.
    Left,
    /// The maximal letter occurs in both factors.
    Middle,
    /// The maximal letter occurs in the right factor only.
    Right,
}

impl TriPart {
    pub const ALL: [TriPart; 3] = [TriPart::Left, TriPart::Middle, TriPart::Right];
}

/// Ways of evaluating `M_u(𝕏)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MMode {
    Closed,
    SignedSum,
}

impl MMode {
    pub const ALL: [MMode; 2] = [MMode::Closed, MMode::SignedSum];
}

fn signed(word: PackedWord, signs: Vec<Sign>) -> SignedPackedWord {
    SignedPackedWord::new(word, SignVector::new(signs)).expect("one sign per letter")
}

fn parity(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `N_{u,ε} * N_{v,ρ} = N_{pack(u,v), ερ}`.
pub fn n_internal(a: &SignedPackedWord, b: &SignedPackedWord) -> Result<SignedPackedWord> {
    let w = biword_pack(a.word().as_slice(), b.word().as_slice())?;
    let s = a.signs().componentwise(b.signs())?;
    SignedPackedWord::new(w, s)
}

/// Bilinear extension of [`n_internal`]. Mixed degrees contribute nothing.
pub fn n_internal_lin(a: &LinComb<SignedPackedWord>, b: &LinComb<SignedPackedWord>) -> LinComb<SignedPackedWord> {
    a.bilinear(b, |x, y| match n_internal(x, y) {
        Ok(w) => LinComb::basis(w),
        Err(_) => LinComb::new(),
    })
}

/// Degree-`n` part of `σ₁^#` in the signed `N` basis.
pub fn sigma_sharp_n(n: usize) -> LinComb<SignedPackedWord> {
    let mut out = LinComb::new();
    if n == 0 {
        out.add_int(SignedPackedWord::unsigned(PackedWord::all(0).remove(0)), 1);
        return out;
    }
    for u in PackedWord::all(n) {
        let max = u.max_letter();
        out.add_int(signed(u.clone(), vec![Sign::Minus; n]), parity(n - max));
        let eps: Vec<Sign> = u.as_slice().iter().map(|&x| if x == max { Sign::Plus } else { Sign::Minus }).collect();
        let m = eps.iter().filter(|s| s.is_minus()).count();
        // m ≥ max - 1 since every value below the maximum occurs
        out.add_int(signed(u, eps), parity(m - (max - 1)));
    }
    out
}

/// For `v ≥ u`: the values of `v` sent to each letter of `u`, increasing.
fn blocks(u: &PackedWord, v: &PackedWord) -> Vec<Vec<usize>> {
    let mut out = vec![BTreeSet::new(); u.max_letter()];
    for (&a, &b) in u.as_slice().iter().zip(v.as_slice()) {
        out[a - 1].insert(b);
    }
    out.into_iter().map(|s| s.into_iter().collect()).collect()
}

/// `N_u^# = N_u(A|Ā)`, read off the superization theorem: `v ≥ u`, and
/// whenever several values of `v` go to one letter of `u`, all of them but
/// the greatest are signed.
pub fn n_superize(u: &PackedWord) -> LinComb<SignedPackedWord> {
    let mut out = LinComb::new();
    for v in u.finer_words() {
        let bl = blocks(u, &v);
        let forced: BTreeSet<usize> = bl.iter().flat_map(|b| b[..b.len() - 1].iter().copied()).collect();
        let free: Vec<usize> = bl.iter().map(|b| *b.last().expect("nonempty block")).collect();
        for chosen in free.iter().copied().powerset() {
            let mut vals = forced.clone();
            vals.extend(chosen);
            let w = SignedPackedWord::with_signed_values(v.clone(), &vals);
            out.add_int(w.clone(), parity(w.m() + w.m_prime()));
        }
    }
    out
}

/// `N_u^# = N_u * σ₁^#`.
pub fn n_superize_via_internal(u: &PackedWord) -> LinComb<SignedPackedWord> {
    let lhs = LinComb::basis(SignedPackedWord::unsigned(u.clone()));
    n_internal_lin(&lhs, &sigma_sharp_n(u.len()))
}

/// `N_u((1-t)A) = Σ_{v≥u} (-1)^{max v - max u} t^{f(u,v)} Π_k (1 - t^{g(u,v,k)}) N_v`.
pub fn n_1mt(u: &PackedWord) -> LinComb<PackedWord> {
    let mut out = LinComb::new();
    for v in u.finer_words() {
        let ev = v.evaluation();
        let mut f = 0;
        let mut c = QTPoly::monomial(parity(v.max_letter() - u.max_letter()), 0, 0);
        for b in blocks(u, &v) {
            let sizes: Vec<usize> = b.iter().map(|&x| ev.parts()[x - 1]).collect();
            let (last, rest) = sizes.split_last().expect("nonempty block");
            f += rest.iter().sum::<usize>();
            c = &c * &binom(0, 0, 0, *last as u32);
        }
        out.add_term(v, &QTRational::from_poly(&c * &mono(1, 0, f as u32)));
    }
    out
}

/// `M_u(A·(1-t)) = Σ_ε (-1)^{m'(u,ε)} t^{m(ε)} Σ_{w ∈ [spack(u,ε), u]} M_w`
/// over the regular signings of `u`.
pub fn m_dual_1mt(u: &PackedWord) -> LinComb<PackedWord> {
    let mut out = LinComb::new();
    for e in SignedPackedWord::regular_signings(u) {
        let c = QTRational::monomial(parity(e.m_prime()), 0, e.m() as u32);
        let low = e.spack().expect("regular");
        for w in PackedWord::refinement_interval(&low, u).expect("spack is coarser") {
            out.add_term(w, &c);
        }
    }
    out
}

/// `(q)_I = (1-q^n) Π_{d∈Des(I)} (1-q^d)`.
fn comp_pochhammer(i: &Composition) -> QTPoly {
    let parts: Vec<u32> = i.parts().iter().map(|&x| x as u32).collect();
    q_comp_pochhammer(&parts)
}

/// `Σ_ε t^{m(ε)} q^{maj(ev(spack(u,ε)))}`, or with `(-1)^{m'}` when `signed`.
fn spack_maj_sum(u: &PackedWord, signed: bool) -> QTPoly {
    let mut out = QTPoly::zero();
    for e in SignedPackedWord::regular_signings(u) {
        let maj = e.spack().expect("regular").evaluation().maj();
        let c = if signed { parity(e.m_prime()) } else { 1 };
        out = &out + &mono(c, maj as u32, e.m() as u32);
    }
    out
}

/// Generating function of the regular signings of `u` by number of signs and
/// major index of the evaluation of the super-packed word, in product form.
pub fn spack_maj_gf(u: &PackedWord) -> QTPoly {
    let ev = u.evaluation();
    let Some((&last, rest)) = ev.parts().split_last() else {
        return QTPoly::one();
    };
    let mut out = &QTPoly::one() + &mono(1, 0, last as u32);
    let mut s = 0;
    for &i in rest {
        s += i;
        out = &out * &(&mono(1, s as u32, 0) + &mono(1, 0, i as u32));
    }
    debug_assert_eq!(out, spack_maj_sum(u, false));
    out
}

/// Per-letter factors of `M_u(𝕏)`: `(1-t^{i_p})/(1-q^n)` for the last letter,
/// `(q^{s_k} - t^{i_k})/(1-q^{s_k})` for the others.
pub fn m_hook_factors(u: &PackedWord) -> Vec<HookFactor> {
    let ev = u.evaluation();
    let n = u.len() as u32;
    let mut out = Vec::new();
    let mut s = 0;
    for (k, &i) in ev.parts().iter().enumerate() {
        s += i as u32;
        if k + 1 == ev.len() {
            out.push(HookFactor::ratio(binom(0, 0, 0, i as u32), one_minus_q(n)));
        } else {
            out.push(HookFactor::ratio(binom(s, 0, 0, i as u32), one_minus_q(s)));
        }
    }
    out
}

/// `M_u(𝕏)` with `𝕏 = (1-t)/(1-q)`.
pub fn m_at_x(u: &PackedWord, mode: MMode) -> QTRational {
    match mode {
        MMode::Closed => crate::hook::product(&m_hook_factors(u)),
        MMode::SignedSum => {
            QTRational::new(spack_maj_sum(u, true), comp_pochhammer(&u.evaluation())).expect("nonzero")
        }
    }
}

/// Sum of `M_w(𝕏)` over a linear combination.
pub fn m_sum_at_x(a: &LinComb<PackedWord>) -> QTRational {
    a.iter().map(|(w, c)| c * &m_at_x(w, MMode::Closed)).sum()
}

/// The words of `a *_W b`: concatenations `x·y` with `pack(x) = a`, `pack(y) = b`.
pub fn convolution(a: &PackedWord, b: &PackedWord) -> Vec<PackedWord> {
    let (p, q) = (a.max_letter(), b.max_letter());
    let mut out = Vec::new();
    for k in p.max(q)..=p + q {
        for sa in (1..=k).combinations(p) {
            let rest: Vec<usize> = (1..=k).filter(|x| !sa.contains(x)).collect();
            if rest.len() > q {
                continue;
            }
            // the values of b must cover the complement of a's values
            for extra in sa.iter().copied().combinations(q - rest.len()) {
                let mut sb: Vec<usize> = rest.iter().copied().chain(extra).collect();
                sb.sort_unstable();
                let w: Vec<usize> = a
                    .as_slice()
                    .iter()
                    .map(|&x| sa[x - 1])
                    .chain(b.as_slice().iter().map(|&y| sb[y - 1]))
                    .collect();
                out.push(PackedWord::new(w).expect("values cover 1..k"));
            }
        }
    }
    out.sort();
    out
}

/// Which partial product a concatenation `x·y` belongs to.
fn part_of(w: &PackedWord, split: usize) -> TriPart {
    let (x, y) = w.as_slice().split_at(split);
    let (mx, my) = (x.iter().max(), y.iter().max());
    match mx.cmp(&my) {
        std::cmp::Ordering::Greater => TriPart::Left,
        std::cmp::Ordering::Equal => TriPart::Middle,
        std::cmp::Ordering::Less => TriPart::Right,
    }
}

/// The product `M_a M_b`; the empty word is the unit.
pub fn m_product(a: &PackedWord, b: &PackedWord) -> LinComb<PackedWord> {
    LinComb::from_keys(convolution(a, b))
}

/// One of `M_a ≺ M_b`, `M_a ∘ M_b`, `M_a ≻ M_b`.
pub fn m_tridendriform(a: &PackedWord, b: &PackedWord, part: TriPart) -> Result<LinComb<PackedWord>> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyArgument);
    }
    Ok(LinComb::from_keys(convolution(a, b).into_iter().filter(|w| part_of(w, a.len()) == part)))
}

/// Bilinear extension of [`m_tridendriform`].
pub fn m_tridendriform_lin(x: &LinComb<PackedWord>, y: &LinComb<PackedWord>, part: TriPart) -> Result<LinComb<PackedWord>> {
    if x.keys().chain(y.keys()).any(PackedWord::is_empty) {
        return Err(Error::EmptyArgument);
    }
    Ok(x.bilinear(y, |a, b| m_tridendriform(a, b, part).expect("nonempty")))
}

/// Bilinear extension of [`m_product`].
pub fn m_product_lin(x: &LinComb<PackedWord>, y: &LinComb<PackedWord>) -> LinComb<PackedWord> {
    x.bilinear(y, m_product)
}

/// The factor multiplying `M_{u₁}(𝕏) M_{u₂}(𝕏)` in a partial product.
pub fn tridendriform_factor(u1: &PackedWord, u2: &PackedWord, part: TriPart) -> Result<HookFactor> {
    if u1.is_empty() || u2.is_empty() {
        return Err(Error::EmptyArgument);
    }
    let (n, m) = (u1.len() as u32, u2.len() as u32);
    let (a1, a2) = (u1.nmax() as u32, u2.nmax() as u32);
    let tot = one_minus_q(n + m);
    let one_minus_t = |k: u32| binom(0, 0, 0, k);
    Ok(match part {
        TriPart::Left => HookFactor::new(vec![one_minus_q(n), binom(m, 0, 0, a2)], vec![tot, one_minus_t(a2)]),
        TriPart::Middle => HookFactor::new(
            vec![&one_minus_q(n) * &one_minus_q(m), one_minus_t(a1 + a2)],
            vec![tot, one_minus_t(a1), one_minus_t(a2)],
        ),
        TriPart::Right => HookFactor::new(vec![one_minus_q(m), binom(n, 0, 0, a1)], vec![tot, one_minus_t(a1)]),
    })
}

/// `(M_{u₁} ⋄ M_{u₂})(𝕏)` from the factorized formula.
pub fn tridendriform_at_x(u1: &PackedWord, u2: &PackedWord, part: TriPart) -> Result<QTRational> {
    let f = tridendriform_factor(u1, u2, part)?.value();
    Ok(&(&f * &m_at_x(u1, MMode::Closed)) * &m_at_x(u2, MMode::Closed))
}

/// `S^I = Σ_{ev(u)=I} N_u`.
pub fn s_in_n(i: &Composition) -> LinComb<SignedPackedWord> {
    LinComb::from_keys(
        PackedWord::all(i.size()).into_iter().filter(|u| &u.evaluation() == i).map(SignedPackedWord::unsigned),
    )
}

/// The same-size product of complete functions, `S^I * S^J = Σ_M S^{r(M)}`
/// over nonnegative integer matrices with row sums `I` and column sums `J`,
/// `r(M)` being the nonzero entries read row by row.
pub fn s_internal_by_matrices(i: &Composition, j: &Composition) -> LinComb<Composition> {
    fn rows(i: &[usize], j: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&r, rest)) = i.split_first() else {
            if j.iter().all(|&c| c == 0) {
                out.push(acc.clone());
            }
            return;
        };
        fn fill(
            r: usize,
            col: usize,
            rest: &[usize],
            j: &mut Vec<usize>,
            acc: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if col == j.len() {
                if r == 0 {
                    rows(rest, j, acc, out);
                }
                return;
            }
            for x in 0..=r.min(j[col]) {
                j[col] -= x;
                if x > 0 {
                    acc.push(x);
                }
                fill(r - x, col + 1, rest, j, acc, out);
                if x > 0 {
                    acc.pop();
                }
                j[col] += x;
            }
        }
        fill(r, 0, rest, j, acc, out);
    }
    let mut readings = Vec::new();
    rows(i.parts(), &mut j.parts().to_vec(), &mut Vec::new(), &mut readings);
    let mut out = LinComb::new();
    for r in readings {
        out.add_int(Composition::new(r).expect("positive entries"), 1);
    }
    out
}

/// Packed words of size `n` carrying a regular signing, counted.
pub fn regular_signed_count(n: usize) -> usize {
    PackedWord::all(n).iter().map(|u| 1usize << u.max_letter()).sum()
}

/// `max(w)`-graded count of the words of `M_a M_b`, indexed by `d` with
/// `max(w) = max(a) + max(b) - d`.
pub fn convolution_max_profile(a: &PackedWord, b: &PackedWord) -> Vec<usize> {
    let top = a.max_letter() + b.max_letter();
    let mut out = vec![0; a.max_letter().min(b.max_letter()) + 1];
    for w in convolution(a, b) {
        out[top - w.max_letter()] += 1;
    }
    out
}

/// `binom(a₁, d) · binom(a₁+a₂-d, a₁)`.
pub fn delannoy_term(a1: usize, a2: usize, d: usize) -> usize {
    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    binom(a1, d) * binom(a1 + a2 - d, a1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pw(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    fn spw(s: &str) -> SignedPackedWord {
        s.parse().unwrap()
    }

    fn r(s: &str) -> QTRational {
        qtarith::parse_rational(s).unwrap()
    }

    fn signed_lc(terms: &[(i64, &str)]) -> LinComb<SignedPackedWord> {
        let mut out = LinComb::new();
        for &(c, k) in terms {
            out.add_int(spw(k), c);
        }
        out
    }

    fn m_lc(terms: &[(&str, &str)]) -> LinComb<PackedWord> {
        LinComb::from_terms(terms.iter().map(|(k, c)| (pw(k), r(c))))
    }

    #[test]
    fn internal_product() {
        let u = spw("4,2,4,1,2,2,5,3");
        let v = spw("5,3,1,5,4,3,2,3");
        assert_eq!(n_internal(&u, &v).unwrap().word(), &pw("62513274"));
        let a = spw("-1,2,-2");
        let b = spw("-1,-1,1");
        assert_eq!(n_internal(&a, &b).unwrap(), spw("1,-2,-2"));
        assert_eq!(n_internal(&spw("2131"), &spw("1111")).unwrap(), spw("2131"));
        assert!(n_internal(&spw("1"), &spw("11")).is_err());
        let (x, y, z) = (spw("1,-2,2,1"), spw("2,1,-1,3"), spw("-1,1,2,2"));
        let l = n_internal(&n_internal(&x, &y).unwrap(), &z).unwrap();
        let rr = n_internal(&x, &n_internal(&y, &z).unwrap()).unwrap();
        assert_eq!(l, rr);
    }

    #[test]
    fn sigma_sharp_expansions() {
        assert_eq!(sigma_sharp_n(1), signed_lc(&[(1, "1"), (1, "-1")]));
        let s2 = signed_lc(&[(-1, "-1-1"), (1, "11"), (1, "-1-2"), (1, "-12"), (1, "-2-1"), (1, "2-1")]);
        assert_eq!(sigma_sharp_n(2), s2);
        let s3 = signed_lc(&[
            (1, "-1-1-1"),
            (1, "111"),
            (-1, "-1-1-2"),
            (-1, "-1-12"),
            (-1, "-1-2-1"),
            (-1, "-12-1"),
            (-1, "-2-1-1"),
            (-1, "2-1-1"),
            (-1, "-2-2-1"),
            (1, "22-1"),
            (-1, "-2-1-2"),
            (1, "2-12"),
            (-1, "-1-2-2"),
            (1, "-122"),
            (1, "-1-2-3"),
            (1, "-1-23"),
            (1, "-1-3-2"),
            (1, "-13-2"),
            (1, "-2-1-3"),
            (1, "-2-13"),
            (1, "-2-3-1"),
            (1, "-23-1"),
            (1, "-3-1-2"),
            (1, "3-1-2"),
            (1, "-3-2-1"),
            (1, "3-2-1"),
        ]);
        assert_eq!(sigma_sharp_n(3), s3);
    }

    #[test]
    fn superization_examples() {
        let n11 = signed_lc(&[(-1, "-1-1"), (1, "11"), (1, "-1-2"), (1, "-12"), (1, "-2-1"), (1, "2-1")]);
        assert_eq!(n_superize(&pw("11")), n11);
        let n12 = signed_lc(&[(1, "-1-2"), (1, "-12"), (1, "1-2"), (1, "12")]);
        assert_eq!(n_superize(&pw("12")), n12);
        // the last term is N_{21}, the word itself
        let n21 = signed_lc(&[(1, "-2-1"), (1, "-21"), (1, "2-1"), (1, "21")]);
        assert_eq!(n_superize(&pw("21")), n21);
        let n112 = signed_lc(&[
            (-1, "-1-1-2"),
            (-1, "-1-12"),
            (1, "11-2"),
            (1, "112"),
            (1, "-1-2-3"),
            (1, "-1-23"),
            (1, "-12-3"),
            (1, "-123"),
            (1, "-2-1-3"),
            (1, "-2-13"),
            (1, "2-1-3"),
            (1, "2-13"),
        ]);
        assert_eq!(n_superize(&pw("112")), n112);
        let n121 = signed_lc(&[
            (-1, "-1-2-1"),
            (-1, "-12-1"),
            (1, "1-21"),
            (1, "121"),
            (1, "-1-3-2"),
            (1, "-13-2"),
            (1, "-1-32"),
            (1, "-132"),
            (1, "-2-3-1"),
            (1, "-23-1"),
            (1, "2-3-1"),
            (1, "23-1"),
        ]);
        assert_eq!(n_superize(&pw("121")), n121);
    }

    #[test]
    fn superization_two_ways() {
        for n in 0..=4 {
            for u in PackedWord::all(n) {
                let direct = n_superize(&u);
                assert_eq!(direct, n_superize_via_internal(&u), "{u}");
                for v in u.finer_words() {
                    let per_v = direct.keys().filter(|k| k.word() == &v).count();
                    assert_eq!(per_v, 1 << u.max_letter());
                }
                assert!(direct.keys().all(SignedPackedWord::is_regular));
            }
        }
    }

    /// Counting signed positions instead of signed values in the sign exponent
    /// breaks the `N_{11}` example.
    #[test]
    fn m_prime_counts_values() {
        let w = spw("-1-1");
        assert_eq!((w.m(), w.m_prime()), (2, 1));
        assert_eq!(n_superize(&pw("11")).coeff(&w), QTRational::from_int(-1));
    }

    #[test]
    fn one_minus_t_examples() {
        let n = |u: &str| n_1mt(&pw(u));
        assert_eq!(n("11"), m_lc(&[("11", "1-t^2"), ("12", "-t(1-t)"), ("21", "-t(1-t)")]));
        assert_eq!(n("12"), m_lc(&[("12", "(1-t)^2")]));
        assert_eq!(n("21"), m_lc(&[("21", "(1-t)^2")]));
        assert_eq!(n("112"), m_lc(&[("112", "(1-t)(1-t^2)"), ("123", "-t(1-t)^2"), ("213", "-t(1-t)^2")]));
        assert_eq!(n("121"), m_lc(&[("121", "(1-t)(1-t^2)"), ("132", "-t(1-t)^2"), ("231", "-t(1-t)^2")]));
        let m = |u: &str| m_dual_1mt(&pw(u));
        assert_eq!(m("11"), m_lc(&[("11", "1-t^2")]));
        assert_eq!(m("12"), m_lc(&[("11", "-t(1-t)"), ("12", "(1-t)^2")]));
        assert_eq!(m("21"), m_lc(&[("11", "-t(1-t)"), ("21", "(1-t)^2")]));
        assert_eq!(m("21"), m_lc(&[("11", "-t+t^2"), ("21", "-t+t^2 + 1-t")]));
        assert_eq!(m("112"), m_lc(&[("112", "(1-t)(1-t^2)"), ("111", "-t^2(1-t)")]));
        assert_eq!(m("121"), m_lc(&[("121", "(1-t)(1-t^2)"), ("111", "-t^2(1-t)")]));
        assert_eq!(
            m("123"),
            m_lc(&[("123", "(1-t)^3"), ("112", "-t(1-t)^2"), ("122", "-t(1-t)^2"), ("111", "t^2(1-t)")])
        );
    }

    /// The specialization of `N_u` follows from its superization with `Ā = tA`.
    #[test]
    fn one_minus_t_from_superization() {
        for n in 1..=4 {
            for u in PackedWord::all(n) {
                let mut via = LinComb::new();
                for (k, c) in n_superize(&u).iter() {
                    // a barred letter of A|Ā with Ā = -tA
                    let x = &(c * &QTRational::monomial(1, 0, k.m() as u32)) * &QTRational::from_int(parity(k.m()));
                    via.add_term(k.word().clone(), &x);
                }
                assert_eq!(via, n_1mt(&u), "{u}");
            }
        }
    }

    #[test]
    fn duality_is_transpose() {
        for n in 1..=5 {
            let all = PackedWord::all(n);
            let cols: Vec<LinComb<PackedWord>> = all.iter().map(m_dual_1mt).collect();
            for u in &all {
                let row = n_1mt(u);
                for (v, col) in all.iter().zip(&cols) {
                    assert_eq!(row.coeff(v), col.coeff(u), "{u} {v}");
                }
            }
        }
    }

    #[test]
    fn values_at_x() {
        assert_eq!(m_at_x(&pw("111"), MMode::Closed), r("(1-t^3)/(1-q^3)"));
        assert_eq!(m_at_x(&pw("21"), MMode::Closed), r("(1-t)(q-t)/((1-q^2)(1-q))"));
        assert_eq!(m_at_x(&pw("21"), MMode::SignedSum), r("(1-t)(q-t)/((1-q^2)(1-q))"));
        let gf = spack_maj_gf(&pw("112333344"));
        assert_eq!(QTRational::from_poly(gf), r("(1+t^2)(q^2+t^2)(q^3+t)(q^7+t^4)"));
        for n in 0..=4 {
            for u in PackedWord::all(n) {
                assert_eq!(m_at_x(&u, MMode::Closed), m_at_x(&u, MMode::SignedSum), "{u}");
                assert_eq!(spack_maj_gf(&u), spack_maj_sum(&u, false));
            }
        }
    }

    /// Specializing through `M_u(A·(1-t))` and the geometric values of `M_J`.
    #[test]
    fn values_at_x_through_the_dual_specialization() {
        for n in 1..=4 {
            for u in PackedWord::all(n) {
                let v: QTRational = m_dual_1mt(&u)
                    .iter()
                    .map(|(w, c)| c * &crate::ncsf::m_at_geometric(&w.evaluation()))
                    .sum();
                assert_eq!(v, m_at_x(&u, MMode::Closed), "{u}");
            }
        }
    }

    #[test]
    fn small_tridendriform_products() {
        let one = pw("1");
        assert_eq!(m_tridendriform(&one, &one, TriPart::Left).unwrap(), LinComb::basis(pw("21")));
        assert_eq!(m_tridendriform(&one, &one, TriPart::Middle).unwrap(), LinComb::basis(pw("11")));
        assert_eq!(m_tridendriform(&one, &one, TriPart::Right).unwrap(), LinComb::basis(pw("12")));
        assert_eq!(m_product(&one, &one), LinComb::from_keys([pw("11"), pw("12"), pw("21")]));
        assert_eq!(m_product(&PackedWord::new(vec![]).unwrap(), &pw("21")), LinComb::basis(pw("21")));
        assert!(m_tridendriform(&PackedWord::new(vec![]).unwrap(), &one, TriPart::Left).is_err());
    }

    #[test]
    fn parts_sum_to_product() {
        for n in 1..=3 {
            for m in 1..=3 {
                for a in PackedWord::all(n) {
                    for b in PackedWord::all(m) {
                        let sum = TriPart::ALL
                            .iter()
                            .fold(LinComb::new(), |acc, &p| &acc + &m_tridendriform(&a, &b, p).unwrap());
                        assert_eq!(sum, m_product(&a, &b));
                    }
                }
            }
        }
    }

    #[test]
    fn delannoy_profile() {
        for a1 in 1..=3 {
            for a2 in 1..=3 {
                let a = PackedWord::new((1..=a1).collect()).unwrap();
                let b = PackedWord::new((1..=a2).collect()).unwrap();
                let want: Vec<usize> = (0..=a1.min(a2)).map(|d| delannoy_term(a1, a2, d)).collect();
                assert_eq!(convolution_max_profile(&a, &b), want);
            }
        }
        // central Delannoy numbers
        let central: Vec<usize> = (1..=4).map(|k| (0..=k).map(|d| delannoy_term(k, k, d)).sum()).collect();
        assert_eq!(central, [3, 13, 63, 321]);
    }

    #[test]
    fn regular_counts() {
        let c: Vec<usize> = (0..=6).map(regular_signed_count).collect();
        assert_eq!(c, [1, 2, 10, 74, 730, 9002, 133210]);
    }

    #[test]
    fn tridendriform_examples() {
        let f = |a: &str, b: &str, p| tridendriform_factor(&pw(a), &pw(b), p).unwrap().value();
        let shared = r("(1-q^3)(q^4-t^3)/((1-q^7)(1-t^3))");
        assert_eq!(f("111", "2122", TriPart::Left), shared);
        assert_eq!(f("132", "2122", TriPart::Left), shared);
        assert_eq!(f("121", "3122", TriPart::Left), r("(1-q^3)(q^4-t)/((1-q^7)(1-t))"));
        assert_eq!(f("1212", "33231", TriPart::Left), r("(1-q^4)(q^5-t^3)/((1-q^9)(1-t^3))"));
        assert_eq!(
            f("1212", "33231", TriPart::Middle),
            r("(1-q^4)(1-q^5)(1-t^5)/((1-q^9)(1-t^2)(1-t^3))")
        );
        assert_eq!(f("1212", "33231", TriPart::Right), r("(1-q^5)(q^4-t^2)/((1-q^9)(1-t^2))"));
        for (a, b) in [("111", "2122"), ("132", "2122"), ("121", "3122"), ("1212", "33231")] {
            let (a, b) = (pw(a), pw(b));
            for p in TriPart::ALL {
                let brute = m_sum_at_x(&m_tridendriform(&a, &b, p).unwrap());
                assert_eq!(tridendriform_at_x(&a, &b, p).unwrap(), brute);
            }
        }
    }

    #[test]
    fn tridendriform_values_small() {
        for n in 1..=3 {
            for m in 1..=(5 - n).min(3) {
                for a in PackedWord::all(n) {
                    for b in PackedWord::all(m) {
                        let mut total = QTRational::from_int(0);
                        for p in TriPart::ALL {
                            let v = tridendriform_at_x(&a, &b, p).unwrap();
                            assert_eq!(v, m_sum_at_x(&m_tridendriform(&a, &b, p).unwrap()), "{a} {b} {p:?}");
                            total = &total + &v;
                        }
                        assert_eq!(total, &m_at_x(&a, MMode::Closed) * &m_at_x(&b, MMode::Closed));
                    }
                }
            }
        }
    }

    #[test]
    fn complete_functions_embed() {
        for n in 1..=4 {
            let comps = Composition::all(n);
            for i in &comps {
                for j in &comps {
                    let lhs = n_internal_lin(&s_in_n(i), &s_in_n(j));
                    let rhs = s_internal_by_matrices(i, j)
                        .iter()
                        .fold(LinComb::new(), |acc, (k, c)| &acc + &s_in_n(k).scale(c));
                    assert_eq!(lhs, rhs, "{i} {j}");
                }
            }
        }
    }
}
