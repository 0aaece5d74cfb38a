use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::QtError;
use crate::poly::QTPoly;

/// An element of `Q(q,t)` held as a reduced fraction of `Z[q,t]` polynomials.
///
/// The denominator's first term in canonical order is positive, so two
/// values are equal exactly when their fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QTRational {
    num: QTPoly,
    den: QTPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact `a op b`; division by zero is reported instead of panicking.
pub fn rat_arith(a: &QTRational, b: &QTRational, op: RatOp) -> Result<QTRational, QtError> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => a.checked_div(b)?,
    })
}

impl QTRational {
    pub fn new(num: QTPoly, den: QTPoly) -> Result<Self, QtError> {
        if den.is_zero() {
            return Err(QtError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn from_poly(p: QTPoly) -> Self {
        QTRational { num: p, den: QTPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(QTPoly::constant(c))
    }

    pub fn q() -> Self {
        Self::from_poly(QTPoly::q())
    }

    pub fn t() -> Self {
        Self::from_poly(QTPoly::t())
    }

    /// `c * q^a * t^b`.
    pub fn monomial(c: i64, a: u32, b: u32) -> Self {
        Self::from_poly(QTPoly::monomial(c, a, b))
    }

    pub fn num(&self) -> &QTPoly {
        &self.num
    }

    pub fn den(&self) -> &QTPoly {
        &self.den
    }

    pub fn into_parts(self) -> (QTPoly, QTPoly) {
        (self.num, self.den)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Reduces `num / den` by their gcd and fixes the sign. `den` must be nonzero.
    fn canonical(num: QTPoly, den: QTPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = match g.as_constant() {
            Some(c) if c.abs().is_one() => (num, den),
            Some(c) => (num.scale_down(&c), den.scale_down(&c)),
            None => (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            ),
        };
        if den.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            num = -num;
            den = -den;
        }
        QTRational { num, den }
    }

    /// Idempotent re-canonicalization.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    /// Equality by cross-multiplication; independent of reduction quality.
    pub fn cross_eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, QtError> {
        Ok(self * &other.inv()?)
    }

    pub fn inv(&self) -> Result<Self, QtError> {
        if self.num.is_zero() {
            return Err(QtError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        QTRational { num: self.num.pow(e), den: self.den.pow(e) }.canonicalize()
    }

    /// Substitutes `t -> -t`.
    pub fn negate_t(&self) -> Self {
        Self::canonical(self.num.negate_t(), self.den.negate_t())
    }

    /// Exact value at `(q0, t0)`; a zero denominator there is a pole.
    pub fn substitute(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational, QtError> {
        let d = self.den.eval(q0, t0);
        if d.is_zero() {
            return Err(QtError::Pole { q: q0.to_string(), t: t0.to_string() });
        }
        Ok(self.num.eval(q0, t0) / d)
    }

    /// Product of many factors reduced once at the end.
    pub fn product_of<'a, I>(factors: I) -> Self
    where
        I: IntoIterator<Item = &'a QTRational>,
    {
        let mut num = QTPoly::one();
        let mut den = QTPoly::one();
        for f in factors {
            if f.num.is_zero() {
                return Self::zero();
            }
            num = &num * &f.num;
            den = &den * &f.den;
        }
        Self::canonical(num, den)
    }
}

impl QTPoly {
    fn scale_down(&self, c: &BigInt) -> QTPoly {
        QTPoly::from_terms(self.terms().map(|(m, x)| (m, x / c)))
    }
}

impl Zero for QTRational {
    fn zero() -> Self {
        QTRational { num: QTPoly::zero(), den: QTPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QTRational {
    fn one() -> Self {
        QTRational { num: QTPoly::one(), den: QTPoly::one() }
    }
}

impl From<QTPoly> for QTRational {
    fn from(p: QTPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QTRational {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl<'a> Add<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn add(self, rhs: &QTRational) -> QTRational {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QTRational::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let (bd, dd) = if g.as_constant().is_some() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (self.den.div_exact(&g).unwrap(), rhs.den.div_exact(&g).unwrap())
        };
        let num = &(&self.num * &dd) + &(&rhs.num * &bd);
        let den = &self.den * &dd;
        QTRational::canonical(num, den)
    }
}

impl<'a> Sub<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn sub(self, rhs: &QTRational) -> QTRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn mul(self, rhs: &QTRational) -> QTRational {
        if self.num.is_zero() || rhs.num.is_zero() {
            return QTRational::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // cross-cancel so that reduced inputs give a reduced output
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let cut = |p: &QTPoly, g: &QTPoly| {
            if g.as_constant().is_some() {
                p.clone()
            } else {
                p.div_exact(g).unwrap()
            }
        };
        let num = &cut(&self.num, &g1) * &cut(&rhs.num, &g2);
        let den = &cut(&self.den, &g2) * &cut(&rhs.den, &g1);
        QTRational::canonical(num, den)
    }
}

/// Panics on division by zero; use [`QTRational::checked_div`] to get an error instead.
impl<'a> Div<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn div(self, rhs: &QTRational) -> QTRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<QTRational> for QTRational {
            type Output = QTRational;
            fn $f(self, rhs: QTRational) -> QTRational {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a QTRational> for QTRational {
            type Output = QTRational;
            fn $f(self, rhs: &QTRational) -> QTRational {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&QTRational> for QTRational {
    fn add_assign(&mut self, rhs: &QTRational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QTRational> for QTRational {
    fn sub_assign(&mut self, rhs: &QTRational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QTRational> for QTRational {
    fn mul_assign(&mut self, rhs: &QTRational) {
        *self = &*self * rhs;
    }
}

impl Sum for QTRational {
    fn sum<I: Iterator<Item = QTRational>>(iter: I) -> Self {
        iter.fold(QTRational::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a QTRational> for QTRational {
    fn sum<I: Iterator<Item = &'a QTRational>>(iter: I) -> Self {
        iter.fold(QTRational::zero(), |a, b| a + b)
    }
}

impl Product for QTRational {
    fn product<I: Iterator<Item = QTRational>>(iter: I) -> Self {
        let v: Vec<QTRational> = iter.collect();
        QTRational::product_of(&v)
    }
}

impl fmt::Display for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.len() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        let den = if self.den.as_constant().is_some() { self.den.to_string() } else { format!("({})", self.den) };
        write!(f, "{num} / {den}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn om(a: u32, b: u32) -> QTPoly {
        &QTPoly::one() - &QTPoly::monomial(1, a, b)
    }

    fn rat(n: QTPoly, d: QTPoly) -> QTRational {
        QTRational::new(n, d).unwrap()
    }

    #[test]
    fn distributivity_example() {
        // (1-t)/(1-q) + t(1-t)/(1-q) = (1-t^2)/(1-q)
        let a = rat(om(0, 1), om(1, 0));
        let b = rat(&QTPoly::t() * &om(0, 1), om(1, 0));
        assert_eq!(&a + &b, rat(om(0, 2), om(1, 0)));
    }

    #[test]
    fn cross_multiplied_product_is_reduced() {
        // ((q-t)/(1-q)) * ((1-t)/(1-q^2))
        let qt = &QTPoly::q() - &QTPoly::t();
        let a = rat(qt.clone(), om(1, 0));
        let b = rat(om(0, 1), om(2, 0));
        let p = &a * &b;
        assert_eq!(p.num(), &(&qt * &om(0, 1)));
        assert_eq!(p.den(), &(&om(1, 0) * &om(2, 0)));
        // common factor cancels: (1-q^2)/(1-q) = 1+q
        let c = rat(om(2, 0), om(1, 0));
        assert_eq!(c, QTRational::from_poly(&QTPoly::one() + &QTPoly::q()));
    }

    #[test]
    fn sign_normalized_on_first_denominator_term() {
        let x = rat(QTPoly::one(), &QTPoly::q() - &QTPoly::one());
        assert_eq!(x.den().to_string(), "1 - q");
        assert_eq!(x.num().to_string(), "-1");
        assert_eq!(x.to_string(), "-1 / (1 - q)");
    }

    #[test]
    fn integer_content_is_removed() {
        let x = rat(QTPoly::constant(4), QTPoly::constant(6));
        assert_eq!(x, rat(QTPoly::constant(2), QTPoly::constant(3)));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let x = QTRational::one();
        assert_eq!(x.checked_div(&QTRational::zero()), Err(QtError::DivisionByZero));
        assert_eq!(rat_arith(&x, &QTRational::zero(), RatOp::Div), Err(QtError::DivisionByZero));
        assert!(QTRational::new(QTPoly::one(), QTPoly::zero()).is_err());
    }

    #[test]
    fn substitution_and_poles() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let x = rat(om(0, 1), om(1, 0));
        assert_eq!(x.substitute(&r(0, 1), &r(0, 1)).unwrap(), r(1, 1));
        let y = rat(om(0, 2), om(1, 0));
        assert_eq!(y.substitute(&r(1, 2), &r(0, 1)).unwrap(), r(2, 1));
        let z = rat(&QTPoly::q() - &QTPoly::t(), om(1, 0));
        assert!(matches!(z.substitute(&r(1, 1), &r(3, 1)), Err(QtError::Pole { .. })));
    }
}
