//! Nested-parenthesis tree syntax shared by binary and plane trees:
//! a node is `(c1,c2,…)` and an empty slot is `·` (or `.`).

use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq)]
pub(crate) enum Rose {
    Leaf,
    Node(Vec<Rose>),
}

pub(crate) fn parse(s: &str) -> Result<Rose> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    let t = node(&chars, &mut i, s)?;
    if i != chars.len() {
        return Err(Error::Parse(format!("trailing input in tree '{s}'")));
    }
    Ok(t)
}

fn node(c: &[char], i: &mut usize, src: &str) -> Result<Rose> {
    let err = |m: &str| Error::Parse(format!("{m} in tree '{src}'"));
    match c.get(*i) {
        Some('·') | Some('.') | Some('\u{2022}') => {
            *i += 1;
            Ok(Rose::Leaf)
        }
        Some('(') => {
            *i += 1;
            let mut kids = vec![node(c, i, src)?];
            loop {
                match c.get(*i) {
                    Some(',') => {
                        *i += 1;
                        kids.push(node(c, i, src)?);
                    }
                    Some(')') => {
                        *i += 1;
                        return Ok(Rose::Node(kids));
                    }
                    _ => return Err(err("expected ',' or ')'")),
                }
            }
        }
        _ => Err(err("expected '(' or '·'")),
    }
}
