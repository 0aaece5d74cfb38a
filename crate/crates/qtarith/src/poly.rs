use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::upoly::{self, Dense};

/// A monomial `q^q * t^t`.
///
/// Ordered graded-lexicographically: lower total degree first, then the
/// larger power of `q` first. This is the order in which terms print.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub q: u32,
    pub t: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, t: 0 };

    pub fn new(q: u32, t: u32) -> Self {
        Monomial { q, t }
    }

    pub fn degree(self) -> u32 {
        self.q + self.t
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.q.cmp(&self.q))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `Z[q,t]`, stored as nonzero terms in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QTPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c * q^a * t^b`.
    pub fn monomial(c: impl Into<BigInt>, a: u32, b: u32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            QTPoly { terms: vec![(Monomial::new(a, b), c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut v: Vec<(Monomial, BigInt)> = terms.into_iter().collect();
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        QTPoly { terms: out }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    /// The integer value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, q: u32, t: u32) -> BigInt {
        let m = Monomial::new(q, t);
        self.terms
            .binary_search_by(|(x, _)| x.cmp(&m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    /// First term in canonical order.
    pub fn leading_term(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (*m, c))
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.q).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.t).max().unwrap_or(0)
    }

    /// True when no coefficient is negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QTPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `t -> -t`.
    pub fn negate_t(&self) -> Self {
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.t % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += BigRational::from_integer(c.clone())
                * num_traits::pow(q0.clone(), m.q as usize)
                * num_traits::pow(t0.clone(), m.t as usize);
        }
        acc
    }

    pub(crate) fn to_dense(&self) -> Dense {
        let dt = self.degree_t() as usize;
        let mut d: Dense = vec![Vec::new(); if self.is_zero() { 0 } else { dt + 1 }];
        for (m, c) in &self.terms {
            let row = &mut d[m.t as usize];
            if row.len() <= m.q as usize {
                row.resize(m.q as usize + 1, BigInt::zero());
            }
            row[m.q as usize] = c.clone();
        }
        d
    }

    pub(crate) fn from_dense(d: &Dense) -> Self {
        let mut terms = Vec::new();
        for (tdeg, row) in d.iter().enumerate() {
            for (qdeg, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    terms.push((Monomial::new(qdeg as u32, tdeg as u32), c.clone()));
                }
            }
        }
        terms.sort_by_key(|a| a.0);
        QTPoly { terms }
    }

    /// Gcd in `Z[q,t]`, up to sign.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_one() || other.is_one() {
            return QTPoly::one();
        }
        Self::from_dense(&upoly::d_gcd(&self.to_dense(), &other.to_dense()))
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_one() {
            return Some(self.clone());
        }
        upoly::d_div_exact(&self.to_dense(), &other.to_dense()).map(|d| Self::from_dense(&d))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let sign = |c: &BigInt| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, sign(c))));
        QTPoly { terms: out }
    }
}

impl<'a> Add<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        if self.is_zero() || rhs.is_zero() {
            return QTPoly::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let dq = (self.degree_q() + rhs.degree_q()) as usize + 1;
        let dt = (self.degree_t() + rhs.degree_t()) as usize + 1;
        let mut acc = vec![BigInt::zero(); dq * dt];
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let idx = (ma.t + mb.t) as usize * dq + (ma.q + mb.q) as usize;
                acc[idx] += ca * cb;
            }
        }
        let mut terms = Vec::new();
        for (idx, c) in acc.into_iter().enumerate() {
            if !c.is_zero() {
                terms.push((Monomial::new((idx % dq) as u32, (idx / dq) as u32), c));
            }
        }
        terms.sort_by_key(|a| a.0);
        QTPoly { terms }
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<QTPoly> for QTPoly {
            type Output = QTPoly;
            fn $f(self, rhs: QTPoly) -> QTPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a QTPoly> for QTPoly {
            type Output = QTPoly;
            fn $f(self, rhs: &QTPoly) -> QTPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        -&self
    }
}

impl Zero for QTPoly {
    fn zero() -> Self {
        QTPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for QTPoly {
    fn one() -> Self {
        QTPoly::one()
    }
}

impl From<i64> for QTPoly {
    fn from(c: i64) -> Self {
        QTPoly::constant(c)
    }
}

impl From<BigInt> for QTPoly {
    fn from(c: BigInt) -> Self {
        QTPoly::constant(c)
    }
}

fn fmt_monomial(m: Monomial) -> String {
    let mut parts = Vec::new();
    match m.q {
        0 => {}
        1 => parts.push("q".to_string()),
        e => parts.push(format!("q^{e}")),
    }
    match m.t {
        0 => {}
        1 => parts.push("t".to_string()),
        e => parts.push(format!("t^{e}")),
    }
    parts.join("*")
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = fmt_monomial(*m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_minus(a: u32, b: u32) -> QTPoly {
        &QTPoly::one() - &QTPoly::monomial(1, a, b)
    }

    #[test]
    fn canonical_order_prints_graded() {
        let p = &one_minus(1, 0) * &one_minus(0, 1);
        assert_eq!(p.to_string(), "1 - q - t + q*t");
        let p = &QTPoly::monomial(3, 0, 2) + &QTPoly::monomial(-2, 2, 0);
        assert_eq!(p.to_string(), "-2*q^2 + 3*t^2");
    }

    #[test]
    fn zero_terms_never_stored() {
        let p = QTPoly::from_terms([
            (Monomial::new(1, 0), BigInt::from(2)),
            (Monomial::new(1, 0), BigInt::from(-2)),
            (Monomial::new(0, 0), BigInt::from(0)),
        ]);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn bivariate_gcd_finds_shared_factor() {
        let a = &(&one_minus(1, 1) * &one_minus(2, 0)) * &one_minus(0, 1);
        let b = &(&one_minus(1, 1) * &one_minus(1, 0)) * &QTPoly::monomial(1, 3, 0);
        let g = a.gcd(&b);
        // (1-qt)(1-q)
        let expect = &one_minus(1, 1) * &one_minus(1, 0);
        assert!(g.div_exact(&expect).is_some_and(|u| u.as_constant().is_some()));
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = &one_minus(2, 1) * &(&QTPoly::q() - &QTPoly::t());
        assert_eq!(a.div_exact(&one_minus(2, 1)).unwrap(), &QTPoly::q() - &QTPoly::t());
        assert!(a.div_exact(&one_minus(1, 0)).is_none());
    }
}
