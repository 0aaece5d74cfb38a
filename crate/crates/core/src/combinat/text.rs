//! Shared parsing and printing of letter sequences.
//!
//! Accepted forms: a digit string (`4132`), a comma or space separated list
//! (`10,1,11`), a leading minus on signed letters (`3,-4,2,1` or `3-421`),
//! and a combining overline after a digit (`34\u{304}21`). `()` is the empty word.

use crate::error::{Error, Result};

fn is_bar(c: char) -> bool {
    matches!(c, '\u{0304}' | '\u{0305}')
}

fn is_minus(c: char) -> bool {
    matches!(c, '-' | '\u{2212}')
}

/// Parses letters together with a "signed" (barred) flag per letter.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<(usize, bool)>> {
    let s = s.trim();
    if s.is_empty() || s == "()" || s == "\u{2205}" {
        return Ok(Vec::new());
    }
    let bad = |msg: &str| Error::Parse(format!("{msg} in '{s}'"));
    if s.contains(',') || s.contains(char::is_whitespace) {
        let mut out = Vec::new();
        for tok in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let mut neg = false;
            let mut body = tok;
            if let Some(c) = body.chars().next().filter(|&c| is_minus(c)) {
                neg = true;
                body = &body[c.len_utf8()..];
            }
            if let Some(c) = body.chars().last().filter(|&c| is_bar(c)) {
                neg = true;
                body = &body[..body.len() - c.len_utf8()];
            }
            let v: usize = body.parse().map_err(|_| bad("bad letter"))?;
            if v == 0 {
                return Err(bad("letters start at 1"));
            }
            out.push((v, neg));
        }
        return Ok(out);
    }
    let mut out: Vec<(usize, bool)> = Vec::new();
    let mut pending = false;
    for c in s.chars() {
        if is_minus(c) {
            if pending {
                return Err(bad("double sign"));
            }
            pending = true;
        } else if is_bar(c) {
            match out.last_mut() {
                Some(last) => last.1 = true,
                None => return Err(bad("bar without letter")),
            }
        } else if let Some(d) = c.to_digit(10) {
            if d == 0 {
                return Err(bad("letters start at 1"));
            }
            out.push((d as usize, pending));
            pending = false;
        } else {
            return Err(bad("unexpected character"));
        }
    }
    if pending {
        return Err(bad("dangling sign"));
    }
    Ok(out)
}

pub(crate) fn parse_unsigned(s: &str) -> Result<Vec<usize>> {
    let letters = parse_letters(s)?;
    if letters.iter().any(|&(_, neg)| neg) {
        return Err(Error::Parse(format!("unexpected sign in '{s}'")));
    }
    Ok(letters.into_iter().map(|(v, _)| v).collect())
}

/// Digits when every letter is a single digit, a comma list otherwise.
pub(crate) fn fmt_unsigned(w: &[usize]) -> String {
    if w.is_empty() {
        return "()".into();
    }
    if w.iter().all(|&x| x <= 9) {
        w.iter().map(|x| x.to_string()).collect()
    } else {
        w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Always a comma list, signed letters with a leading minus.
pub(crate) fn fmt_signed(w: &[usize], minus: impl Iterator<Item = bool>) -> String {
    if w.is_empty() {
        return "()".into();
    }
    w.iter()
        .zip(minus)
        .map(|(x, neg)| if neg { format!("-{x}") } else { x.to_string() })
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_forms() {
        assert_eq!(parse_unsigned("4132").unwrap(), vec![4, 1, 3, 2]);
        assert_eq!(parse_unsigned("10,1, 11").unwrap(), vec![10, 1, 11]);
        assert_eq!(parse_letters("3,-4,2,1").unwrap(), vec![(3, false), (4, true), (2, false), (1, false)]);
        assert_eq!(parse_letters("3-421").unwrap(), parse_letters("3,-4,2,1").unwrap());
        assert_eq!(parse_letters("34\u{304}21").unwrap(), parse_letters("3,-4,2,1").unwrap());
        assert!(parse_unsigned("3-4").is_err());
        assert!(parse_unsigned("102").is_err());
        assert_eq!(parse_unsigned("()").unwrap(), Vec::<usize>::new());
        assert_eq!(fmt_unsigned(&[10, 1]), "10,1");
        assert_eq!(fmt_signed(&[4, 1], [false, true].into_iter()), "4,-1");
    }
}
