//! Dense polynomial kernels used behind the sparse public types.
//!
//! `UPoly` is a polynomial in `q` over the integers, little-endian, with no
//! trailing zeros. `Dense` is a polynomial in `t` whose coefficients are
//! `UPoly`s, again with no trailing zero coefficients. Gcds are computed by
//! content and primitive-part pseudo-remainder sequences, recursively in `t`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type UPoly = Vec<BigInt>;
pub(crate) type Dense = Vec<UPoly>;

pub(crate) fn trim(p: &mut UPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn trim_dense(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

pub(crate) fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out: UPoly = Vec::with_capacity(a.len().max(b.len()));
    for i in 0..a.len().max(b.len()) {
        let x = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x - y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => -y,
            (None, None) => unreachable!(),
        };
        out.push(x);
    }
    trim(&mut out);
    out
}

pub(crate) fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn u_scale(a: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

fn u_content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for x in a {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
fn u_primitive(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = u_content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    if c.is_one() {
        return a.clone();
    }
    a.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` without the extra leading-coefficient power.
fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        let g = lr.gcd(&lb);
        let mr = &lb / &g;
        let mb = &lr / &g;
        for x in r.iter_mut() {
            *x *= &mr;
        }
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &mb * y;
        }
        trim(&mut r);
    }
    r
}

/// Exact division in Z[q]; `None` when `b` does not divide `a`.
pub(crate) fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut quo = vec![BigInt::zero(); a.len() - db];
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let (c, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &c * y;
        }
        quo[k] = c;
        trim(&mut r);
    }
    if r.is_empty() {
        trim(&mut quo);
        Some(quo)
    } else {
        None
    }
}

fn low_degree(a: &UPoly) -> usize {
    a.iter().position(|x| !x.is_zero()).unwrap_or(0)
}

/// Gcd in Z[q], normalized to a positive leading coefficient.
pub(crate) fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_primitive_signed(b);
    }
    if b.is_empty() {
        return u_primitive_signed(a);
    }
    let c = u_content(a).gcd(&u_content(b));
    let shift = low_degree(a).min(low_degree(b));
    let mut x = u_primitive(&a[low_degree(a)..].to_vec());
    let mut y = u_primitive(&b[low_degree(b)..].to_vec());
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let g = loop {
        if y.len() == 1 {
            break vec![BigInt::one()];
        }
        if u_div_exact(&x, &y).is_some() {
            break y;
        }
        let r = u_prem(&x, &y);
        if r.is_empty() {
            break y;
        }
        x = y;
        y = u_primitive(&r);
    };
    let mut out = vec![BigInt::zero(); shift];
    out.extend(u_scale(&g, &c));
    out
}

fn u_primitive_signed(a: &UPoly) -> UPoly {
    let mut out = a.clone();
    if out.last().is_some_and(Signed::is_negative) {
        for x in out.iter_mut() {
            *x = -&*x;
        }
    }
    out
}

// ---- bivariate: polynomials in t over Z[q] ----

pub(crate) fn d_content(a: &Dense) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        if c.is_empty() {
            continue;
        }
        g = if g.is_empty() { u_primitive_signed(c) } else { u_gcd(&g, c) };
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn d_div_upoly(a: &Dense, c: &UPoly) -> Dense {
    a.iter()
        .map(|x| u_div_exact(x, c).expect("content divides every coefficient"))
        .collect()
}

fn d_scale(a: &Dense, c: &UPoly) -> Dense {
    let mut out: Dense = a.iter().map(|x| u_mul(x, c)).collect();
    trim_dense(&mut out);
    out
}

fn d_prem(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for x in r.iter_mut() {
            *x = u_mul(x, &lb);
        }
        for (j, y) in b.iter().enumerate() {
            let p = u_mul(&lr, y);
            r[k + j] = u_sub(&r[k + j], &p);
        }
        trim_dense(&mut r);
    }
    r
}

fn d_primitive(a: &Dense) -> Dense {
    let c = d_content(a);
    if c.len() == 1 && c[0].is_one() {
        a.clone()
    } else {
        d_div_upoly(a, &c)
    }
}

/// Exact division in Z[q][t]; `None` when `b` does not divide `a`.
pub(crate) fn d_div_exact(a: &Dense, b: &Dense) -> Option<Dense> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut quo: Dense = vec![Vec::new(); a.len() - db];
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let c = u_div_exact(r.last().unwrap(), lb)?;
        for (j, y) in b.iter().enumerate() {
            let p = u_mul(&c, y);
            r[k + j] = u_sub(&r[k + j], &p);
        }
        quo[k] = c;
        trim_dense(&mut r);
    }
    if r.is_empty() {
        trim_dense(&mut quo);
        Some(quo)
    } else {
        None
    }
}

/// Gcd in Z[q,t] up to sign.
pub(crate) fn d_gcd(a: &Dense, b: &Dense) -> Dense {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let ca = d_content(a);
    let cb = d_content(b);
    let c = u_gcd(&ca, &cb);
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let mut x = d_div_upoly(a, &ca);
    let mut y = d_div_upoly(b, &cb);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let g = loop {
        if y.len() == 1 {
            break vec![vec![BigInt::one()]];
        }
        if d_div_exact(&x, &y).is_some() {
            break y;
        }
        let r = d_prem(&x, &y);
        if r.is_empty() {
            break y;
        }
        x = y;
        y = d_primitive(&r);
    };
    d_scale(&g, &c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(v: &[i64]) -> UPoly {
        let mut p: UPoly = v.iter().map(|&x| BigInt::from(x)).collect();
        trim(&mut p);
        p
    }

    #[test]
    fn univariate_gcd_of_pochhammer_factors() {
        // (1-q)(1-q^2) and (1-q^2)(1+q^3)
        let a = u_mul(&up(&[1, -1]), &up(&[1, 0, -1]));
        let b = u_mul(&up(&[1, 0, -1]), &up(&[1, 0, 0, 1]));
        let g = u_gcd(&a, &b);
        // a = (1-q)^2 (1+q), b = (1-q)(1+q)^2 (1-q+q^2)
        let expect = up(&[1, 0, -1]);
        assert!(u_div_exact(&g, &expect).is_some() && u_div_exact(&expect, &g).is_some());
    }

    #[test]
    fn exact_division_rejects_non_divisor() {
        assert!(u_div_exact(&up(&[1, 0, 1]), &up(&[1, 1])).is_none());
        assert_eq!(u_div_exact(&up(&[1, 0, -1]), &up(&[1, 1])).unwrap(), up(&[1, -1]));
    }

    #[test]
    fn gcd_keeps_power_of_q() {
        let g = u_gcd(&up(&[0, 0, 2]), &up(&[0, 4, 4]));
        assert_eq!(g, up(&[0, 2]));
    }
}
