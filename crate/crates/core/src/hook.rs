//! Per-node factors of the hook-content formulas, kept unreduced so they
//! can be displayed the way they are written on decorated diagrams.

use std::fmt;

use qtarith::{QTPoly, QTRational};

/// `c·q^a t^b`.
pub(crate) fn mono(c: i64, a: u32, b: u32) -> QTPoly {
    QTPoly::monomial(c, a, b)
}

/// `q^a t^b - q^c t^d`.
pub(crate) fn binom(a: u32, b: u32, c: u32, d: u32) -> QTPoly {
    &mono(1, a, b) - &mono(1, c, d)
}

/// `1 - q^n`.
pub fn one_minus_q(n: u32) -> QTPoly {
    binom(0, 0, n, 0)
}

/// A product of polynomials over a product of polynomials, as written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookFactor {
    num: Vec<QTPoly>,
    den: Vec<QTPoly>,
}

impl HookFactor {
    pub fn new(num: Vec<QTPoly>, den: Vec<QTPoly>) -> Self {
        // constant-one factors carry no information
        let keep = |v: Vec<QTPoly>| v.into_iter().filter(|p| !p.is_one()).collect::<Vec<_>>();
        HookFactor { num: keep(num), den: keep(den) }
    }

    pub fn ratio(num: QTPoly, den: QTPoly) -> Self {
        Self::new(vec![num], vec![den])
    }

    pub fn numerators(&self) -> &[QTPoly] {
        &self.num
    }

    pub fn denominators(&self) -> &[QTPoly] {
        &self.den
    }

    pub fn value(&self) -> QTRational {
        let prod = |v: &[QTPoly]| v.iter().fold(QTPoly::one(), |a, p| &a * p);
        QTRational::new(prod(&self.num), prod(&self.den)).expect("hook denominators are nonzero")
    }

    pub fn numerator_product(&self) -> QTPoly {
        self.num.iter().fold(QTPoly::one(), |a, p| &a * p)
    }

    pub fn latex(&self) -> String {
        let side = |v: &[QTPoly]| -> String {
            match v {
                [] => "1".to_string(),
                [p] => latex_poly(p),
                _ => v.iter().map(|p| format!("({})", latex_poly(p))).collect(),
            }
        };
        if self.den.is_empty() {
            side(&self.num)
        } else {
            format!("\\frac{{{}}}{{{}}}", side(&self.num), side(&self.den))
        }
    }
}

/// Product of all factor values with a single reduction at the end.
pub fn product(factors: &[HookFactor]) -> QTRational {
    let mut num = QTPoly::one();
    let mut den = QTPoly::one();
    for f in factors {
        for p in &f.num {
            num = &num * p;
        }
        for p in &f.den {
            den = &den * p;
        }
    }
    QTRational::new(num, den).expect("hook denominators are nonzero")
}

/// Terms in the order they are written in hook formulas: by increasing
/// power of `t`, then of `q` (`q^8 - q^5 t`, `1 - q^4`).
fn written_terms(p: &QTPoly) -> Vec<(qtarith::Monomial, &num_bigint::BigInt)> {
    let mut v: Vec<_> = p.terms().collect();
    v.sort_by_key(|(m, _)| (m.t, m.q));
    v
}

pub fn text_poly(p: &QTPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in written_terms(p).into_iter().enumerate() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.magnitude().to_string();
        let mut mono = Vec::new();
        match m.q {
            0 => {}
            1 => mono.push("q".to_string()),
            e => mono.push(format!("q^{e}")),
        }
        match m.t {
            0 => {}
            1 => mono.push("t".to_string()),
            e => mono.push(format!("t^{e}")),
        }
        if mono.is_empty() {
            out.push_str(&abs);
        } else {
            if abs != "1" {
                out.push_str(&abs);
                out.push('*');
            }
            out.push_str(&mono.join("*"));
        }
    }
    out
}

impl fmt::Display for HookFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[QTPoly], f: &mut fmt::Formatter<'_>| -> fmt::Result {
            match v {
                [] => write!(f, "1"),
                [p] if p.len() == 1 && self.den.is_empty() => write!(f, "{}", text_poly(p)),
                _ => v.iter().try_for_each(|p| write!(f, "({})", text_poly(p))),
            }
        };
        side(&self.num, f)?;
        if !self.den.is_empty() {
            write!(f, "/")?;
            if self.den.len() == 1 {
                write!(f, "({})", text_poly(&self.den[0]))?;
            } else {
                write!(f, "(")?;
                side(&self.den, f)?;
                write!(f, ")")?;
            }
        }
        Ok(())
    }
}

/// LaTeX form of a polynomial, e.g. `q^{3}-q^{2}t`.
pub fn latex_poly(p: &QTPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in written_terms(p).into_iter().enumerate() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        if neg {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let abs = c.magnitude().to_string();
        let mut mono = String::new();
        match m.q {
            0 => {}
            1 => mono.push('q'),
            e => mono.push_str(&format!("q^{{{e}}}")),
        }
        match m.t {
            0 => {}
            1 => mono.push('t'),
            e => mono.push_str(&format!("t^{{{e}}}")),
        }
        if mono.is_empty() {
            out.push_str(&abs);
        } else {
            if abs != "1" {
                out.push_str(&abs);
            }
            out.push_str(&mono);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        let f = HookFactor::new(vec![binom(3, 0, 2, 1), binom(0, 0, 0, 1)], vec![binom(0, 0, 2, 1), one_minus_q(4)]);
        assert_eq!(f.to_string(), "(q^3 - q^2*t)(1 - t)/((1 - q^2*t)(1 - q^4))");
        assert_eq!(f.latex(), "\\frac{(q^{3}-q^{2}t)(1-t)}{(1-q^{2}t)(1-q^{4})}");
        let g = HookFactor::ratio(binom(0, 0, 0, 1), one_minus_q(1));
        assert_eq!(g.to_string(), "(1 - t)/(1 - q)");
        assert_eq!(g.value().to_string(), "(1 - t) / (1 - q)");
    }
}
