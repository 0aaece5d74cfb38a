//! Serialization of results: JSON lines, plain text and LaTeX.

use std::fmt::Display;

use serde_json::{json, Value};
use superhook::hook::latex_poly;
use superhook::lincomb::LinComb;
use superhook::qtarith::{QTPoly, QTRational};

pub const SCHEMA: u32 = 1;

/// A computed value before it is printed.
pub enum Computed {
    Scalar(QTRational),
    Poly(QTPoly),
    /// One value per evaluation mode, in a fixed order.
    Modes(Vec<(&'static str, QTRational)>),
    Expansion { basis: &'static str, terms: Vec<(String, QTRational)> },
}

impl Computed {
    pub fn expansion<K: Ord + Clone + Display>(basis: &'static str, lc: &LinComb<K>) -> Self {
        Computed::Expansion { basis, terms: lc.iter().map(|(k, c)| (k.to_string(), c.clone())).collect() }
    }

    /// False only when several modes were asked for and they disagree.
    pub fn consistent(&self) -> bool {
        match self {
            Computed::Modes(v) => v.windows(2).all(|w| w[0].1 == w[1].1),
            _ => true,
        }
    }

    pub fn json(&self, formula: &str, input: &str) -> Value {
        let mut v = json!({ "schema": SCHEMA, "formula": formula, "input": input });
        let obj = v.as_object_mut().expect("object literal");
        match self {
            Computed::Scalar(r) => {
                obj.insert("value".into(), r.to_string().into());
            }
            Computed::Poly(p) => {
                obj.insert("value".into(), p.to_string().into());
            }
            Computed::Modes(vals) => {
                let m: serde_json::Map<String, Value> =
                    vals.iter().map(|(name, r)| (name.to_string(), Value::from(r.to_string()))).collect();
                obj.insert("values".into(), m.into());
                obj.insert("agree".into(), self.consistent().into());
            }
            Computed::Expansion { basis, terms } => {
                obj.insert("basis".into(), (*basis).into());
                let t: Vec<Value> = terms.iter().map(|(k, c)| json!({ "key": k, "coeff": c.to_string() })).collect();
                obj.insert("terms".into(), t.into());
            }
        }
        v
    }

    pub fn text(&self, formula: &str, input: &str) -> String {
        let head = format!("{formula}({input})");
        match self {
            Computed::Scalar(r) => format!("{head} = {r}"),
            Computed::Poly(p) => format!("{head} = {p}"),
            Computed::Modes(vals) => vals.iter().map(|(m, r)| format!("{head} [{m}] = {r}")).collect::<Vec<_>>().join("\n"),
            Computed::Expansion { basis, terms } => {
                if terms.is_empty() {
                    return format!("{head} = 0");
                }
                let body = terms.iter().map(|(k, c)| format!("({c}) {basis}[{k}]")).collect::<Vec<_>>().join(" + ");
                format!("{head} = {body}")
            }
        }
    }

    pub fn latex(&self) -> String {
        match self {
            Computed::Scalar(r) => latex_rational(r),
            Computed::Poly(p) => latex_poly(p),
            Computed::Modes(vals) => vals.iter().map(|(m, r)| format!("% {m}\n{}", latex_rational(r))).collect::<Vec<_>>().join("\n"),
            Computed::Expansion { basis, terms } => {
                if terms.is_empty() {
                    return "0".into();
                }
                terms
                    .iter()
                    .map(|(k, c)| {
                        let key = latex_key(k);
                        if c.num().is_one() && c.den().is_one() {
                            format!("{basis}_{{{key}}}")
                        } else {
                            format!("\\left({}\\right) {basis}_{{{key}}}", latex_rational(c))
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" + ")
            }
        }
    }
}

pub fn latex_rational(r: &QTRational) -> String {
    if r.den().is_one() {
        latex_poly(r.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", latex_poly(r.num()), latex_poly(r.den()))
    }
}

/// `4,-1,-3,2` becomes `4\bar{1}\bar{3}2`; commas stay when a letter has two digits.
fn latex_key(k: &str) -> String {
    if !k.contains(',') {
        return k.to_string();
    }
    let toks: Vec<&str> = k.split(',').collect();
    let short = toks.iter().all(|t| t.trim_start_matches('-').len() == 1);
    let letters: Vec<String> = toks
        .iter()
        .map(|t| match t.strip_prefix('-') {
            Some(x) => format!("\\bar{{{x}}}"),
            None => t.to_string(),
        })
        .collect();
    letters.join(if short { "" } else { "," })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys() {
        assert_eq!(latex_key("4132"), "4132");
        assert_eq!(latex_key("4,-1,-3,2"), "4\\bar{1}\\bar{3}2");
        assert_eq!(latex_key("10,-1"), "10,\\bar{1}");
    }

    #[test]
    fn modes_disagreeing() {
        let c = Computed::Modes(vec![("a", QTRational::from_int(1)), ("b", QTRational::from_int(2))]);
        assert!(!c.consistent());
        assert_eq!(c.json("f", "x")["agree"], false);
    }
}
