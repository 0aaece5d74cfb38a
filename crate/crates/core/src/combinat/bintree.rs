use std::fmt;
use std::str::FromStr;

use super::perm::Permutation;
use super::tree_text::{self, Rose};
use crate::error::{Error, Result};

/// A planar binary tree; size is the number of internal nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

/// Per-node data of a binary tree, indexed by the in-order (binary search) label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeInfo {
    pub label: usize,
    pub size: usize,
    pub left_size: usize,
    pub right_size: usize,
    /// Size of the left subtree of the right subtree (0 when there is no right subtree).
    pub right_left_size: usize,
    pub parent: Option<usize>,
    pub is_right_child: bool,
    pub depth: usize,
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn single() -> Self {
        Self::node(BinaryTree::Leaf, BinaryTree::Leaf)
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    pub fn children(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            BinaryTree::Leaf => None,
            BinaryTree::Node(l, r) => Some((l, r)),
        }
    }

    /// All trees with `n` nodes (Catalan many), in a fixed recursive order.
    pub fn all(n: usize) -> Vec<BinaryTree> {
        let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Leaf]];
        for k in 1..=n {
            let mut row = Vec::new();
            for i in 0..k {
                for l in &table[i] {
                    for r in &table[k - 1 - i] {
                        row.push(BinaryTree::node(l.clone(), r.clone()));
                    }
                }
            }
            table.push(row);
        }
        table.swap_remove(n)
    }

    /// Shape of the binary search tree obtained by inserting `σ` read from right to left.
    pub fn bst_insert(sigma: &Permutation) -> BinaryTree {
        fn build(letters: &[usize]) -> BinaryTree {
            // `letters` is in insertion order; the first one is the root
            match letters.split_first() {
                None => BinaryTree::Leaf,
                Some((&root, rest)) => {
                    let small: Vec<usize> = rest.iter().copied().filter(|&x| x < root).collect();
                    let big: Vec<usize> = rest.iter().copied().filter(|&x| x > root).collect();
                    BinaryTree::node(build(&small), build(&big))
                }
            }
        }
        let rev: Vec<usize> = sigma.as_slice().iter().rev().copied().collect();
        build(&rev)
    }

    /// `{σ : P(σ) = T}`, sorted.
    pub fn sylvester_class(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> =
            class_words(self, 0).into_iter().map(Permutation::from_vec_unchecked).collect();
        out.sort();
        out
    }

    /// Node data in in-order, so `nodes()[k].label == k + 1`.
    pub fn nodes(&self) -> Vec<NodeInfo> {
        fn walk(t: &BinaryTree, parent: Option<usize>, is_right: bool, depth: usize, next: &mut usize, out: &mut Vec<NodeInfo>) {
            if let BinaryTree::Node(l, r) = t {
                let label = *next + l.size() + 1;
                walk(l, Some(label), false, depth + 1, next, out);
                *next += 1;
                out.push(NodeInfo {
                    label,
                    size: t.size(),
                    left_size: l.size(),
                    right_size: r.size(),
                    right_left_size: r.children().map_or(0, |(rl, _)| rl.size()),
                    parent,
                    is_right_child: is_right,
                    depth,
                });
                walk(r, Some(label), true, depth + 1, next, out);
            }
        }
        let mut out = Vec::with_capacity(self.size());
        walk(self, None, false, 0, &mut 0, &mut out);
        out
    }

    /// True when every node has at most one child.
    pub fn is_zigzag(&self) -> bool {
        match self {
            BinaryTree::Leaf => true,
            BinaryTree::Node(l, r) => (l.is_leaf() || r.is_leaf()) && l.is_zigzag() && r.is_zigzag(),
        }
    }
}

fn class_words(t: &BinaryTree, offset: usize) -> Vec<Vec<usize>> {
    match t {
        BinaryTree::Leaf => vec![Vec::new()],
        BinaryTree::Node(l, r) => {
            let root = offset + l.size() + 1;
            let lw = class_words(l, offset);
            let rw = class_words(r, root);
            let mut out = Vec::new();
            for a in &lw {
                for b in &rw {
                    for mut s in shuffles(a, b) {
                        s.push(root);
                        out.push(s);
                    }
                }
            }
            out
        }
    }
}

/// All interleavings of `a` and `b`.
pub fn shuffles<T: Clone>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut s in shuffles(&a[1..], b) {
        s.insert(0, a[0].clone());
        out.push(s);
    }
    for mut s in shuffles(a, &b[1..]) {
        s.insert(0, b[0].clone());
        out.push(s);
    }
    out
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "·"),
            BinaryTree::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

impl FromStr for BinaryTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        fn conv(r: Rose, src: &str) -> Result<BinaryTree> {
            match r {
                Rose::Leaf => Ok(BinaryTree::Leaf),
                Rose::Node(kids) if kids.len() == 2 => {
                    let mut it = kids.into_iter();
                    let l = conv(it.next().unwrap(), src)?;
                    let r = conv(it.next().unwrap(), src)?;
                    Ok(BinaryTree::node(l, r))
                }
                Rose::Node(_) => Err(Error::Parse(format!("binary tree nodes have two slots: '{src}'"))),
            }
        }
        conv(tree_text::parse(s)?, s)
    }
}
