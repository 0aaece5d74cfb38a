//! Decorated trees: hook factors placed on the nodes of a zig-zag tree
//! (permutations), a binary tree, or a plane tree, emitted as an ASCII
//! outline or as an `xymatrix` diagram.

use std::fmt;
use std::str::FromStr;

use crate::combinat::{BinaryTree, Permutation, PlaneTree};
use crate::fqsym::{self, FMode};
use crate::hook::{self, HookFactor};
use crate::pbt::{self, PMode};
use crate::{planetree, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Latex,
}

impl FromStr for RenderFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" | "text" => Ok(RenderFormat::Ascii),
            "latex" => Ok(RenderFormat::Latex),
            _ => Err(Error::Parse(format!("unknown render format '{s}'"))),
        }
    }
}

/// One drawn vertex. `kids` lists child slots from left to right; `None`
/// is an empty slot, drawn only when the tree shows its leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedNode {
    pub latex: String,
    pub text: String,
    pub kids: Vec<Option<usize>>,
}

/// A tree with one label per internal node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedTree {
    pub nodes: Vec<DecoratedNode>,
    pub root: Option<usize>,
    /// Whether empty slots are drawn as leaves.
    pub show_leaves: bool,
    /// Node indices in the order the formula lists its factors.
    pub factor_order: Vec<usize>,
    spacing: &'static str,
}

/// `q^{9}` becomes `q^9`; longer exponents keep their braces.
pub fn compact_latex(s: &str) -> String {
    let c: Vec<char> = s.chars().collect();
    let mut out = String::with_capacity(s.len());
    let mut i = 0;
    while i < c.len() {
        if c[i] == '^' && c.get(i + 1) == Some(&'{') && c.get(i + 3) == Some(&'}') {
            out.push('^');
            out.push(c[i + 2]);
            i += 4;
        } else {
            out.push(c[i]);
            i += 1;
        }
    }
    out
}

fn factor_labels(f: &HookFactor) -> (String, String) {
    (compact_latex(&f.latex()), f.to_string())
}

/// How a permutation's zig-zag tree is decorated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermDecoration {
    /// Node numbers, bottom to top.
    Shape,
    Hook(FMode),
}

/// The zig-zag tree of `σ`: node `i` (from the bottom) hangs below node
/// `i + 1`, on the left when `σ_i < σ_{i+1}` and on the right otherwise.
pub fn decorate_permutation(sigma: &Permutation, deco: PermDecoration) -> Result<DecoratedTree> {
    let s = sigma.as_slice();
    let n = s.len();
    let labels: Vec<(String, String)> = match deco {
        PermDecoration::Shape => (1..=n).map(|i| (i.to_string(), i.to_string())).collect(),
        PermDecoration::Hook(FMode::SignedSum) => {
            return Err(Error::Parse("the signed sum has no node factors".into()));
        }
        PermDecoration::Hook(FMode::HookRecursive) => fqsym::f_recursive_case_factors(sigma).iter().map(factor_labels).collect(),
        PermDecoration::Hook(mode) => {
            fqsym::f_hook_factors(sigma, mode).expect("hook mode").iter().map(factor_labels).collect()
        }
    };
    let nodes = labels
        .into_iter()
        .enumerate()
        .map(|(i, (latex, text))| {
            let kids = if i == 0 {
                vec![None, None]
            } else if s[i - 1] < s[i] {
                vec![Some(i - 1), None]
            } else {
                vec![None, Some(i - 1)]
            };
            DecoratedNode { latex, text, kids }
        })
        .collect();
    Ok(DecoratedTree {
        nodes,
        root: n.checked_sub(1),
        show_leaves: false,
        factor_order: (0..n).collect(),
        spacing: "@C=-5mm@R=+4mm",
    })
}

/// How a binary tree is decorated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeDecoration {
    /// Binary search tree labels.
    Labels,
    Hook(PMode),
}

pub fn decorate_binary_tree(t: &BinaryTree, deco: TreeDecoration) -> Result<DecoratedTree> {
    let labels: Vec<(String, String)> = match deco {
        TreeDecoration::Labels => (1..=t.size()).map(|i| (i.to_string(), i.to_string())).collect(),
        TreeDecoration::Hook(PMode::SignedSum) => {
            return Err(Error::Parse("the signed sum has no node factors".into()));
        }
        TreeDecoration::Hook(mode) => pbt::p_hook_factors(t, mode).expect("hook mode").iter().map(factor_labels).collect(),
    };
    // node k carries in-order label k + 1
    let mut nodes = Vec::with_capacity(t.size());
    fn walk(t: &BinaryTree, next: &mut usize, kids: &mut Vec<Vec<Option<usize>>>) -> Option<usize> {
        let (l, r) = t.children()?;
        let li = walk(l, next, kids);
        let me = *next;
        *next += 1;
        kids.push(Vec::new());
        let ri = walk(r, next, kids);
        kids[me] = vec![li, ri];
        Some(me)
    }
    let mut kids = Vec::new();
    let root = walk(t, &mut 0, &mut kids);
    for ((latex, text), kids) in labels.into_iter().zip(kids) {
        nodes.push(DecoratedNode { latex, text, kids });
    }
    let spacing = if deco == TreeDecoration::Labels { "@C=2mm@R=+6mm" } else { "@C=-1mm@R=+3mm" };
    Ok(DecoratedTree { factor_order: (0..nodes.len()).collect(), nodes, root, show_leaves: false, spacing })
}

/// Plane tree with the full factor, or only its numerator, at each node.
pub fn decorate_plane_tree(t: &PlaneTree, numerators_only: bool) -> DecoratedTree {
    let factors = planetree::mm_hook_factors(t);
    let mut nodes = Vec::new();
    fn walk(t: &PlaneTree, nodes: &mut Vec<DecoratedNode>) -> Option<usize> {
        if let PlaneTree::Leaf = t {
            return None;
        }
        let me = nodes.len();
        nodes.push(DecoratedNode { latex: String::new(), text: String::new(), kids: Vec::new() });
        let kids = t.children().iter().map(|c| walk(c, nodes)).collect();
        nodes[me].kids = kids;
        Some(me)
    }
    let root = walk(t, &mut nodes);
    // factors come in preorder, as the nodes were pushed
    for (node, f) in nodes.iter_mut().zip(&factors) {
        if numerators_only {
            let p = f.numerator_product();
            node.latex = compact_latex(&hook::latex_poly(&p));
            node.text = hook::text_poly(&p);
        } else {
            (node.latex, node.text) = factor_labels(f);
        }
    }
    DecoratedTree { factor_order: (0..nodes.len()).collect(), nodes, root, show_leaves: true, spacing: "@C=0.5mm@R=4mm" }
}

#[derive(Clone, Copy, Debug)]
enum Item {
    Node(usize),
    Leaf,
}

struct Placed {
    row: usize,
    col: usize,
    item: Item,
    arrows: Vec<(usize, isize)>,
}

/// Per-row horizontal extent of a laid out subtree, relative to its root.
type Contour = Vec<(isize, isize)>;

impl DecoratedTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Labels in formula order.
    pub fn factors_latex(&self) -> Vec<&str> {
        self.factor_order.iter().map(|&i| self.nodes[i].latex.as_str()).collect()
    }

    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Ascii => self.ascii(),
            RenderFormat::Latex => self.latex(),
        }
    }

    /// Indented outline, children listed left to right.
    pub fn ascii(&self) -> String {
        let Some(root) = self.root else { return "(empty tree)\n".into() };
        let mut out = String::new();
        self.ascii_walk(root, "", "", &mut out);
        out
    }

    fn ascii_walk(&self, i: usize, head: &str, pad: &str, out: &mut String) {
        out.push_str(head);
        out.push_str(&self.nodes[i].text);
        out.push('\n');
        let kids = &self.nodes[i].kids;
        let binary = !self.show_leaves && kids.len() == 2;
        let shown: Vec<(usize, Option<usize>)> = kids
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, k)| self.show_leaves || k.is_some())
            .collect();
        for (pos, (slot, k)) in shown.iter().enumerate() {
            let last = pos + 1 == shown.len();
            let tag = if binary { if *slot == 0 { "L " } else { "R " } } else { "" };
            let (branch, cont) = if last { ("`-", "   ") } else { ("|-", "|  ") };
            match k {
                Some(c) => self.ascii_walk(*c, &format!("{pad}{branch}{tag}"), &format!("{pad}{cont}"), out),
                None => out.push_str(&format!("{pad}{branch}{tag}o\n")),
            }
        }
    }

    /// Children sit one column off a lone child's parent; siblings are
    /// pushed apart until their subtrees keep two columns between them.
    fn contour(&self, i: usize, offsets: &mut Vec<Vec<isize>>) -> Contour {
        let kids = &self.nodes[i].kids;
        let items: Vec<Option<usize>> = if self.show_leaves { kids.clone() } else { kids.iter().copied().filter(Option::is_some).collect() };
        let subs: Vec<Contour> = items.iter().map(|k| k.map_or(vec![(0, 0)], |c| self.contour(c, offsets))).collect();
        let mut pos: Vec<isize> = Vec::with_capacity(subs.len());
        let mut acc: Contour = Vec::new();
        for sub in &subs {
            let x = match pos.last() {
                None => 0,
                Some(_) => {
                    let need = acc.iter().zip(sub).map(|(a, b)| a.1 - b.0 + 2).max().unwrap_or(2);
                    need.max(2)
                }
            };
            for (d, &(lo, hi)) in sub.iter().enumerate() {
                match acc.get_mut(d) {
                    Some(e) => *e = (e.0.min(lo + x), e.1.max(hi + x)),
                    None => acc.push((lo + x, hi + x)),
                }
            }
            pos.push(x);
        }
        let centre = match (pos.len(), items.first()) {
            (0, _) => 0,
            // a lone child leans to its side
            (1, _) => {
                let slot = kids.iter().position(Option::is_some).expect("one child");
                if slot == 0 {
                    1
                } else {
                    -1
                }
            }
            _ => (pos[0] + pos[pos.len() - 1]).div_euclid(2),
        };
        let rel: Vec<isize> = pos.iter().map(|x| x - centre).collect();
        offsets[i] = rel.clone();
        let mut out = vec![(0, 0)];
        out.extend(acc.into_iter().map(|(lo, hi)| (lo - centre, hi - centre)));
        out
    }

    fn place(&self) -> Vec<Placed> {
        let Some(root) = self.root else { return Vec::new() };
        let mut offsets = vec![Vec::new(); self.nodes.len()];
        let cont = self.contour(root, &mut offsets);
        let left = cont.iter().map(|c| c.0).min().unwrap_or(0);
        let mut out = Vec::new();
        self.place_walk(root, 0, -left, &offsets, &mut out);
        out
    }

    fn place_walk(&self, i: usize, row: usize, col: isize, offsets: &[Vec<isize>], out: &mut Vec<Placed>) {
        let me = out.len();
        out.push(Placed { row, col: col as usize, item: Item::Node(i), arrows: Vec::new() });
        let kids: Vec<Option<usize>> =
            self.nodes[i].kids.iter().copied().filter(|k| self.show_leaves || k.is_some()).collect();
        for (k, dx) in kids.into_iter().zip(&offsets[i]) {
            out[me].arrows.push((1, *dx));
            match k {
                Some(c) => self.place_walk(c, row + 1, col + dx, offsets, out),
                None => out.push(Placed { row: row + 1, col: (col + dx) as usize, item: Item::Leaf, arrows: Vec::new() }),
            }
        }
    }

    /// An `xymatrix` diagram: one matrix row per depth.
    pub fn latex(&self) -> String {
        let placed = self.place();
        let rows = placed.iter().map(|p| p.row + 1).max().unwrap_or(0);
        let mut grid: Vec<Vec<Option<&Placed>>> = vec![Vec::new(); rows];
        for p in &placed {
            let r = &mut grid[p.row];
            if r.len() <= p.col {
                r.resize(p.col + 1, None);
            }
            r[p.col] = Some(p);
        }
        let mut out = format!("\\vcenter{{\\xymatrix{}{{\n", self.spacing);
        for row in grid {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    None => "*{}".to_string(),
                    Some(p) => {
                        let label = match p.item {
                            Item::Node(i) if !self.nodes[i].latex.is_empty() => self.nodes[i].latex.clone(),
                            _ => "{}".to_string(),
                        };
                        let arrows: String = p
                            .arrows
                            .iter()
                            .map(|&(dy, dx)| {
                                let h = if dx < 0 { "l" } else { "r" }.repeat(dx.unsigned_abs());
                                format!("\\ar@{{-}}[{}{h}]", "d".repeat(dy))
                            })
                            .collect();
                        format!("{label}{arrows}")
                    }
                })
                .collect();
            out.push_str(&cells.join(" & "));
            out.push_str(" \\\\\n");
        }
        out.push_str("}}\n");
        out
    }
}

impl fmt::Display for DecoratedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ascii())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig_sigma() -> Permutation {
        Permutation::new(vec![5, 6, 7, 4, 3, 2, 8, 9, 10, 1, 11]).unwrap()
    }

    #[test]
    fn compacting() {
        assert_eq!(compact_latex("\\frac{q^{9}-q^{8}t}{1-q^{10}}"), "\\frac{q^9-q^8t}{1-q^{10}}");
        assert_eq!(compact_latex("q^{2}"), "q^2");
    }

    #[test]
    fn zigzag_layout_follows_descents() {
        let d = decorate_permutation(&fig_sigma(), PermDecoration::Shape).unwrap();
        let tex = d.latex();
        let first: Vec<&str> = tex.lines().skip(1).take(3).collect();
        assert_eq!(first, ["*{} & *{} & *{} & 11\\ar@{-}[dl] \\\\", "*{} & *{} & 10\\ar@{-}[dr] \\\\", "*{} & *{} & *{} & 9\\ar@{-}[dl] \\\\"]);
        assert!(tex.contains("\n2\\ar@{-}[dl] \\\\") || tex.contains("& 2\\ar@{-}[dl] \\\\"));
        assert_eq!(tex.lines().filter(|l| l.ends_with("\\\\")).count(), 11);
    }

    #[test]
    fn single_node() {
        let t = decorate_binary_tree(&BinaryTree::single(), TreeDecoration::Hook(PMode::HookPT1)).unwrap();
        assert_eq!(t.factors_latex(), ["\\frac{1-t}{1-q}"]);
        assert_eq!(t.ascii(), "(1 - t)/(1 - q)\n");
        let p = decorate_permutation(&Permutation::new(vec![1]).unwrap(), PermDecoration::Hook(FMode::HookDirect)).unwrap();
        assert_eq!(p.latex(), "\\vcenter{\\xymatrix@C=-5mm@R=+4mm{\n\\frac{1-t}{1-q} \\\\\n}}\n");
    }

    #[test]
    fn plane_tree_draws_leaves() {
        let t = PlaneTree::decreasing(&[2, 4, 3, 4, 1, 1]);
        let d = decorate_plane_tree(&t, true);
        assert_eq!(d.factors_latex(), ["1-t^2", "q-t", "q-t", "q^2-t^2"]);
        let tex = d.latex();
        assert_eq!(tex.matches("\\ar@{-}").count(), 10);
        assert!(d.ascii().starts_with("1 - t^2\n|-q - t\n|  |-o\n"));
    }
}
