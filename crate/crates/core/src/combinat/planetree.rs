use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::packed::PackedWord;
use super::tree_text::{self, Rose};
use crate::error::{Error, Result};

/// A plane tree whose internal nodes have arity at least 2.
///
/// A node of arity `a` carries `a - 1` regions, the slots between
/// consecutive edges where the letters of a packed word are written.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaneTree {
    Leaf,
    Node(Vec<PlaneTree>),
}

/// Arity and region count of an internal node, listed in preorder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionStat {
    pub arity: usize,
    /// Regions of the subtree rooted here.
    pub regions: usize,
    pub depth: usize,
    /// Preorder index of the parent node.
    pub parent: Option<usize>,
}

impl PlaneTree {
    pub fn node(children: Vec<PlaneTree>) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::Parse("plane tree nodes need at least two slots".into()));
        }
        Ok(PlaneTree::Node(children))
    }

    /// The one-region tree `(·,·)`.
    pub fn single() -> Self {
        PlaneTree::Node(vec![PlaneTree::Leaf, PlaneTree::Leaf])
    }

    pub fn regions(&self) -> usize {
        match self {
            PlaneTree::Leaf => 0,
            PlaneTree::Node(ch) => ch.len() - 1 + ch.iter().map(PlaneTree::regions).sum::<usize>(),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            PlaneTree::Leaf => 0,
            PlaneTree::Node(ch) => ch.len(),
        }
    }

    pub fn children(&self) -> &[PlaneTree] {
        match self {
            PlaneTree::Leaf => &[],
            PlaneTree::Node(ch) => ch,
        }
    }

    /// `𝒯(u)`: the occurrences of the maximal letter cut `u` into factors,
    /// which become the subtrees from left to right.
    pub fn decreasing(u: &[usize]) -> PlaneTree {
        let Some(&m) = u.iter().max() else {
            return PlaneTree::Leaf;
        };
        PlaneTree::Node(u.split(|&x| x == m).map(PlaneTree::decreasing).collect())
    }

    /// Preorder list of `(a(i), r(i))` with tree links.
    pub fn region_stats(&self) -> Vec<RegionStat> {
        fn walk(t: &PlaneTree, parent: Option<usize>, depth: usize, out: &mut Vec<RegionStat>) -> usize {
            let PlaneTree::Node(ch) = t else { return 0 };
            let me = out.len();
            out.push(RegionStat { arity: ch.len(), regions: 0, depth, parent });
            let mut r = ch.len() - 1;
            for c in ch {
                r += walk(c, Some(me), depth + 1, out);
            }
            out[me].regions = r;
            r
        }
        let mut out = Vec::new();
        walk(self, None, 0, &mut out);
        out
    }

    /// All plane trees with `n` regions, sorted.
    pub fn all(n: usize) -> Vec<PlaneTree> {
        let mut table: Vec<Vec<PlaneTree>> = vec![vec![PlaneTree::Leaf]];
        for k in 1..=n {
            let mut row = Vec::new();
            for a in 2..=k + 1 {
                // children of the root share k - (a - 1) regions
                let rest = k - (a - 1);
                for parts in weak_compositions(rest, a) {
                    let mut combos: Vec<Vec<PlaneTree>> = vec![Vec::new()];
                    for &p in &parts {
                        let mut next = Vec::new();
                        for c in &combos {
                            for t in &table[p] {
                                let mut c2 = c.clone();
                                c2.push(t.clone());
                                next.push(c2);
                            }
                        }
                        combos = next;
                    }
                    row.extend(combos.into_iter().map(PlaneTree::Node));
                }
            }
            row.sort();
            table.push(row);
        }
        table.swap_remove(n)
    }

    /// `{u : 𝒯(u) = T}`, found by inserting every packed word of the right size.
    pub fn fiber(&self) -> Vec<PackedWord> {
        PackedWord::all(self.regions())
            .into_iter()
            .filter(|u| &PlaneTree::decreasing(u.as_slice()) == self)
            .collect()
    }

    /// Fibers of all trees with `n` regions at once.
    pub fn fibers(n: usize) -> BTreeMap<PlaneTree, Vec<PackedWord>> {
        let mut out: BTreeMap<PlaneTree, Vec<PackedWord>> = BTreeMap::new();
        for u in PackedWord::all(n) {
            out.entry(PlaneTree::decreasing(u.as_slice())).or_default().push(u);
        }
        out
    }
}

/// Sequences of `k` nonnegative integers summing to `n`.
fn weak_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in weak_compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneTree::Leaf => write!(f, "·"),
            PlaneTree::Node(ch) => {
                write!(f, "(")?;
                for (i, c) in ch.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FromStr for PlaneTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        fn conv(r: Rose) -> Result<PlaneTree> {
            match r {
                Rose::Leaf => Ok(PlaneTree::Leaf),
                Rose::Node(kids) => PlaneTree::node(kids.into_iter().map(conv).collect::<Result<_>>()?),
            }
        }
        conv(tree_text::parse(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_of_243411() {
        let t = PlaneTree::decreasing(&[2, 4, 3, 4, 1, 1]);
        assert_eq!(t.to_string(), "((·,·),(·,·),(·,·,·))");
        let st = t.region_stats();
        let ar: Vec<usize> = st.iter().map(|s| s.arity).collect();
        assert_eq!(ar, [3, 2, 2, 3]);
        assert_eq!(st[0].regions, 6);
        assert_eq!(t.regions(), 6);
        assert!(t.fiber().contains(&"243411".parse().unwrap()));
    }

    #[test]
    fn single_letter() {
        assert_eq!(PlaneTree::decreasing(&[1]), PlaneTree::single());
        assert_eq!(PlaneTree::single().regions(), 1);
    }

    #[test]
    fn fibers_cover_packed_words() {
        for n in 1..=5 {
            let trees = PlaneTree::all(n);
            let fibers = PlaneTree::fibers(n);
            assert_eq!(trees.len(), fibers.len());
            let total: usize = fibers.values().map(Vec::len).sum();
            assert_eq!(total, [1, 1, 3, 13, 75, 541][n]);
            for t in &trees {
                assert_eq!(t.regions(), n);
            }
        }
        // small Schröder numbers count plane trees by regions
        let counts: Vec<usize> = (1..=5).map(|n| PlaneTree::all(n).len()).collect();
        assert_eq!(counts, [1, 3, 11, 45, 197]);
    }

    #[test]
    fn parse_rejects_unary_nodes() {
        assert!("(·)".parse::<PlaneTree>().is_err());
        assert_eq!("((.,.),.,.)".parse::<PlaneTree>().unwrap().regions(), 3);
    }
}
