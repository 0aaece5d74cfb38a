use crate::poly::QTPoly;

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: u32) -> QTPoly {
    QTPoly::from_terms((0..n).map(|i| (crate::Monomial::new(i, 0), 1.into())))
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32) -> QTPoly {
    (1..=n).fold(QTPoly::one(), |acc, i| &acc * &q_integer(i))
}

/// `(q;q)_n = (1-q)(1-q^2)...(1-q^n)`.
pub fn q_pochhammer(n: u32) -> QTPoly {
    (1..=n).fold(QTPoly::one(), |acc, i| &acc * &(&QTPoly::one() - &QTPoly::monomial(1, i, 0)))
}

/// `(q)_I = (1-q^n) prod_{d in Des(I)} (1-q^d)` for a composition `I` of `n`.
pub fn q_comp_pochhammer(parts: &[u32]) -> QTPoly {
    let mut out = QTPoly::one();
    let mut s = 0;
    for &p in parts {
        s += p;
        out = &out * &(&QTPoly::one() - &QTPoly::monomial(1, s, 0));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(q_integer(3).to_string(), "1 + q + q^2");
        assert_eq!(q_integer(0), QTPoly::zero());
        assert_eq!(&q_pochhammer(3) * &QTPoly::one(), &q_factorial(3) * &q_pochhammer(1).pow(3));
        let c = q_comp_pochhammer(&[1, 2]);
        assert_eq!(c, &(&QTPoly::one() - &QTPoly::q()) * &(&QTPoly::one() - &QTPoly::monomial(1, 3, 0)));
        assert_eq!(q_comp_pochhammer(&[4]), &QTPoly::one() - &QTPoly::monomial(1, 4, 0));
        assert_eq!(q_comp_pochhammer(&[1; 5]), q_pochhammer(5));
    }
}
