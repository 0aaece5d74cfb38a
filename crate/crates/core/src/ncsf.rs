//! Ribbons, the level-2 complete functions `S^{(I,ε)}`, ribbon
//! superization and quasi-symmetric specializations at `1/(1-q)`.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use qtarith::{QTPoly, QTRational};

use crate::combinat::{permutations, peak_valley_exponent, Composition, Permutation, Sign, SignVector, SignedComposition};
use crate::fqsym::superize_g_keys;
use crate::hook::{mono, one_minus_q};
use crate::lincomb::LinComb;
use crate::Result;

/// A ribbon `R_{J,ε}` with one sign per cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedRibbon {
    pub comp: Composition,
    pub signs: SignVector,
}

impl fmt::Display for SignedRibbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.signs.as_slice().iter().map(|s| if s.is_minus() { '-' } else { '+' }).collect();
        let parts = self.comp.parts().iter().join(",");
        write!(f, "({parts}|{s})")
    }
}

/// `R_I = Σ_{D(σ)=I} G_σ`.
pub fn ribbon_to_g(i: &Composition) -> LinComb<Permutation> {
    LinComb::from_keys(permutations(i.size()).filter(|s| &s.descent_composition() == i))
}

/// Degree-`n` part of `σ₁^#`: a barred composition of `k` followed by an
/// unbarred part `n - k` (omitted when zero), with sign `(-1)^{k - r}`.
pub fn s_sharp(n: usize) -> LinComb<SignedComposition> {
    let mut out = LinComb::new();
    for k in 0..=n {
        for barred in Composition::all(k) {
            let r = barred.len();
            let mut parts = barred.parts().to_vec();
            let mut signs = vec![Sign::Minus; r];
            if n > k {
                parts.push(n - k);
                signs.push(Sign::Plus);
            }
            let key = SignedComposition::new(Composition::new(parts).expect("positive parts"), SignVector::new(signs))
                .expect("one sign per part");
            out.add_int(key, if (k - r) % 2 == 0 { 1 } else { -1 });
        }
    }
    out
}

/// `C(J,ε)`: descent composition, in the signed order, of any signed
/// permutation of shape `J` carrying the signs `ε`.
pub fn signed_shape(j: &Composition, signs: &SignVector) -> Composition {
    let n = j.size();
    let des: BTreeSet<usize> = j.descents().into_iter().collect();
    let c = (1..n).filter(|&i| match (signs.get(i - 1), signs.get(i)) {
        (Sign::Plus, Sign::Plus) => des.contains(&i),
        (Sign::Minus, Sign::Minus) => !des.contains(&i),
        (Sign::Plus, Sign::Minus) => true,
        (Sign::Minus, Sign::Plus) => false,
    });
    let out = Composition::from_descents(n, &c.collect::<Vec<_>>());
    if cfg!(debug_assertions) && n <= 5 {
        for s in permutations(n).filter(|s| &s.descent_composition() == j) {
            let sp = crate::combinat::SignedPermutation::new(s, signs.clone()).expect("lengths agree");
            debug_assert_eq!(Composition::from_descents(n, &sp.descents()), out);
        }
    }
    out
}

/// `R_I(A|Ā) = Σ_{C(J,ε)=I} R_{J,ε}`.
pub fn ribbon_superize(i: &Composition) -> LinComb<SignedRibbon> {
    let n = i.size();
    let mut out = LinComb::new();
    for j in Composition::all(n) {
        for e in SignVector::all(n) {
            if &signed_shape(&j, &e) == i {
                out.add_int(SignedRibbon { comp: j.clone(), signs: e }, 1);
            }
        }
    }
    out
}

/// The same expansion obtained by superizing every `G_σ` of the ribbon and
/// regrouping the signed permutations by (shape, signs).
pub fn ribbon_superize_via_g(i: &Composition) -> LinComb<SignedRibbon> {
    let mut out = LinComb::new();
    let mut seen = BTreeSet::new();
    for (s, _) in ribbon_to_g(i).iter() {
        for x in superize_g_keys(s) {
            let key = SignedRibbon { comp: x.perm().descent_composition(), signs: x.signs().clone() };
            if seen.insert(key.clone()) {
                out.add_int(key, 1);
            }
        }
    }
    out
}

/// `R_I(A|tA)` from the signed ribbon expansion.
pub fn ribbon_at_bar_ta(i: &Composition) -> LinComb<Composition> {
    let mut out = LinComb::new();
    for (k, c) in ribbon_superize(i).iter() {
        out.add_term(k.comp.clone(), &(c * &QTRational::monomial(1, 0, k.signs.m() as u32)));
    }
    out
}

/// `R_I(A|tA)` as `Σ_J (1+t)^{v(J)} t^{b(I,J)} R_J`, over the `J` such that
/// `I` has a peak or a valley at every peak of `J`.
pub fn ribbon_at_bar_ta_closed(i: &Composition) -> LinComb<Composition> {
    let n = i.size();
    let ip: BTreeSet<usize> = i.peaks().into_iter().chain(i.valleys()).collect();
    let one_plus_t = QTRational::from_poly(&QTPoly::one() + &QTPoly::t());
    let mut out = LinComb::new();
    for j in Composition::all(n) {
        if j.peaks().iter().all(|p| ip.contains(p)) {
            let c = &one_plus_t.pow(j.valleys().len() as u32) * &QTRational::monomial(1, 0, peak_valley_exponent(i, &j) as u32);
            out.add_term(j, &c);
        }
    }
    out
}

/// `M_J(1/(1-q)) = 1/(1-q^n) · Π_{d∈Des(J)} q^d/(1-q^d)`.
pub fn m_at_geometric(j: &Composition) -> QTRational {
    let n = j.size() as u32;
    let mut num = QTPoly::one();
    let mut den = one_minus_q(n);
    for d in j.descents() {
        num = &num * &mono(1, d as u32, 0);
        den = &den * &one_minus_q(d as u32);
    }
    QTRational::new(num, den).expect("nonzero")
}

/// `Σ_{K ≥ J ≥ I} M_J(1/(1-q)) = q^{maj(I)} / ((1-q^n) Π_{d∈Des(K)} (1-q^d))`.
pub fn interval_sum_m(i: &Composition, k: &Composition) -> Result<QTRational> {
    if !k.is_finer_than(i) {
        return Err(crate::Error::NotFiner { finer: k.to_string(), coarser: i.to_string() });
    }
    let mut den = one_minus_q(i.size() as u32);
    for d in k.descents() {
        den = &den * &one_minus_q(d as u32);
    }
    Ok(QTRational::new(mono(1, i.maj() as u32, 0), den)?)
}

/// The same sum, term by term.
pub fn interval_sum_m_enumerated(i: &Composition, k: &Composition) -> Result<QTRational> {
    Ok(Composition::interval(i, k)?.iter().map(m_at_geometric).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fqsym::{f_at_x, FMode};

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn r(s: &str) -> QTRational {
        qtarith::parse_rational(s).unwrap()
    }

    fn sharp_string(n: usize) -> BTreeSet<String> {
        s_sharp(n).iter().map(|(k, v)| format!("{v}{k}")).collect()
    }

    #[test]
    fn ribbons_in_g() {
        assert_eq!(ribbon_to_g(&c("3")), LinComb::basis("123".parse().unwrap()));
        assert_eq!(ribbon_to_g(&c("1,1")), LinComb::basis("21".parse().unwrap()));
        assert_eq!(ribbon_to_g(&c("1,2")), LinComb::from_keys(["213".parse().unwrap(), "312".parse().unwrap()]));
    }

    #[test]
    fn s_sharp_low_degrees() {
        let set = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
        assert_eq!(sharp_string(1), set(&["1(1)", "1(-1)"]));
        assert_eq!(sharp_string(2), set(&["1(2)", "1(-1,1)", "-1(-2)", "1(-1,-1)"]));
        assert_eq!(
            sharp_string(3),
            set(&["1(3)", "1(-1,2)", "1(-1,-1,1)", "-1(-2,1)", "1(-1,-1,-1)", "-1(-2,-1)", "-1(-1,-2)", "1(-3)"])
        );
        for n in 1..8 {
            assert_eq!(s_sharp(n).len(), 1 << n);
        }
    }

    /// Principal specialization with `Ā = tA`: `h_i ↦ 1/(q)_i` on the unbarred
    /// side and `t^i/(q)_i` on the barred side, against
    /// `Σ_k t^k q^{k(k-1)/2} / ((q)_k (q)_{n-k})`.
    #[test]
    fn s_sharp_commutative_image() {
        let h = |i: usize| QTRational::new(QTPoly::one(), qtarith::q_pochhammer(i as u32)).unwrap();
        for n in 1..=5 {
            let mut lhs = QTRational::from_int(0);
            for (k, v) in s_sharp(n).iter() {
                let mut term = v.clone();
                for (p, s) in k.comp().parts().iter().zip(k.signs().as_slice()) {
                    term = &term * &h(*p);
                    if s.is_minus() {
                        term = &term * &QTRational::monomial(1, 0, *p as u32);
                    }
                }
                lhs = &lhs + &term;
            }
            let rhs: QTRational = (0..=n)
                .map(|k| &(&h(k) * &h(n - k)) * &QTRational::monomial(1, (k * (k.saturating_sub(1)) / 2) as u32, k as u32))
                .sum();
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn ribbon_superization_two_ways() {
        for n in 1..=4 {
            let mut total = 0;
            for i in Composition::all(n) {
                let v = ribbon_superize(&i);
                assert_eq!(v, ribbon_superize_via_g(&i));
                total += v.len();
            }
            // every (J,ε) lands in exactly one C(J,ε)
            assert_eq!(total, (1 << (n - 1)) * (1 << n));
        }
        assert_eq!(ribbon_superize(&c("1")).len(), 2);
    }

    #[test]
    fn ribbon_at_bar_ta_forms_agree() {
        assert_eq!(ribbon_at_bar_ta(&c("1")), LinComb::from_terms([(c("1"), r("1 + t"))]));
        let two = ribbon_at_bar_ta(&c("2"));
        assert_eq!(two.coeff(&c("2")), r("1 + t"));
        assert_eq!(two.coeff(&c("1,1")), r("t + t^2"));
        for n in 1..=6 {
            for i in Composition::all(n) {
                assert_eq!(ribbon_at_bar_ta(&i), ribbon_at_bar_ta_closed(&i), "{i}");
            }
        }
    }

    #[test]
    fn geometric_values() {
        assert_eq!(m_at_geometric(&c("3")), r("1/(1-q^3)"));
        assert_eq!(m_at_geometric(&c("1,1")), r("q/((1-q^2)(1-q))"));
        let i = c("2,1,2");
        assert_eq!(interval_sum_m(&i, &i).unwrap(), m_at_geometric(&i));
        assert!(interval_sum_m(&c("1,1"), &c("2")).is_err());
    }

    #[test]
    fn interval_sums_exhaustive() {
        for n in 1..=6 {
            let all = Composition::all(n);
            for i in &all {
                for k in all.iter().filter(|k| k.is_finer_than(i)) {
                    assert_eq!(interval_sum_m(i, k).unwrap(), interval_sum_m_enumerated(i, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn f_value_depends_on_descents_only() {
        for n in 1..=5 {
            for i in Composition::all(n) {
                let vals: BTreeSet<String> =
                    ribbon_to_g(&i).keys().map(|s| f_at_x(s, FMode::HookDirect).to_string()).collect();
                assert_eq!(vals.len(), 1);
            }
        }
    }
}
