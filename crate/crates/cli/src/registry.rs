//! Formula registry keyed by `<module>.<operation>`.

use std::str::FromStr;

use superhook::combinat::{BinaryTree, Composition, PackedWord, Permutation, PlaneTree};
use superhook::fqsym::{self, FMode, Side};
use superhook::lincomb::LinComb;
use superhook::pbt::{self, PMode};
use superhook::render::{self, DecoratedTree, PermDecoration, TreeDecoration};
use superhook::wqsym::{self, MMode, TriPart};
use superhook::{ncsf, planetree};

use crate::output::Computed;
use crate::CliError;

/// Name, object kind and a one-line description of every `compute` formula.
pub const FORMULAS: &[(&str, &str, &str)] = &[
    ("fqsym.F_at_X", "perm", "F_σ at X = (1-t)/(1-q); modes signed_sum, hook_direct, hook_recursive, hook_simplified"),
    ("fqsym.superize_G", "perm", "G_σ(A|Ā) on signed permutations"),
    ("fqsym.G_at_bar_tA", "perm", "G_σ(A|tA) on the G basis"),
    ("fqsym.F_times_1mt", "perm", "F_σ(A·(1-t)) on the F basis"),
    ("fqsym.G_product", "perm;perm", "G_α G_β"),
    ("fqsym.F_product", "perm;perm", "F_σ F_τ"),
    ("fqsym.G_prec", "perm;perm", "left half product on G"),
    ("fqsym.G_succ", "perm;perm", "right half product on G"),
    ("fqsym.F_prec", "perm;perm", "left half product on F"),
    ("fqsym.F_succ", "perm;perm", "right half product on F"),
    ("fqsym.prec_at_X", "perm;perm", "F_σ ≺ F_τ at X, hook form"),
    ("fqsym.succ_at_X", "perm;perm", "F_σ ≻ F_τ at X, hook form"),
    ("ncsf.R_superize", "composition", "R_I(A|Ā) on signed ribbons"),
    ("ncsf.R_at_bar_tA", "composition", "R_I(A|tA) on the ribbon basis"),
    ("pbt.P_at_X", "tree", "P_T at X; modes signed_sum, hook_pt1, hook_recursive, hook_simplified"),
    ("pbt.P_expand", "tree", "P_T on the F basis"),
    ("pbt.signed_maj_gf", "tree", "generating function of signed permutations of shape T"),
    ("wqsym.M_at_X", "packed", "M_u at X; modes closed, signed_sum"),
    ("wqsym.N_superize", "packed", "N_u(A|Ā) on signed packed words"),
    ("wqsym.N_1mt", "packed", "N_u((1-t)A) on the N basis"),
    ("wqsym.M_dual_1mt", "packed", "M_u(A·(1-t)) on the M basis"),
    ("wqsym.M_product", "packed;packed", "M_u M_v"),
    ("wqsym.M_prec", "packed;packed", "maximum in the left factor only"),
    ("wqsym.M_dot", "packed;packed", "maximum in both factors"),
    ("wqsym.M_succ", "packed;packed", "maximum in the right factor only"),
    ("wqsym.prec_at_X", "packed;packed", "M_u ≺ M_v at X, closed form"),
    ("wqsym.dot_at_X", "packed;packed", "M_u · M_v at X, closed form"),
    ("wqsym.succ_at_X", "packed;packed", "M_u ≻ M_v at X, closed form"),
    ("planetree.MM_at_X", "planetree", "MM_T at X; modes hook, fiber"),
    ("planetree.MM_expand", "planetree", "MM_T on the M basis"),
];

/// Formulas accepted by `render`.
pub const RENDERINGS: &[(&str, &str, &str)] = &[
    ("fqsym.shape", "perm", "zig-zag tree of σ with node numbers"),
    ("fqsym.F_at_X", "perm", "zig-zag tree with hook factors; modes hook_direct, hook_recursive, hook_simplified"),
    ("pbt.labels", "tree", "binary search tree labels"),
    ("pbt.P_at_X", "tree", "hook factors; modes hook_pt1, hook_recursive, hook_simplified"),
    ("planetree.MM_at_X", "planetree", "hook factors of a plane tree"),
    ("planetree.numerators", "planetree", "numerators of the plane tree factors"),
];

fn parse<T: FromStr<Err = superhook::Error>>(s: &str) -> Result<T, CliError> {
    Ok(s.trim().parse()?)
}

/// Binary trees in parenthesized form, or a permutation read through its binary search tree.
fn tree(s: &str) -> Result<BinaryTree, CliError> {
    let s = s.trim();
    if s.starts_with('(') && s != "()" {
        return parse(s);
    }
    Ok(BinaryTree::bst_insert(&parse::<Permutation>(s)?))
}

fn pair(s: &str) -> Result<(&str, &str), CliError> {
    s.split_once(';').ok_or_else(|| CliError::Usage(format!("expected two objects separated by ';' in '{s}'")))
}

fn perm_pair(s: &str) -> Result<(LinComb<Permutation>, LinComb<Permutation>), CliError> {
    let (a, b) = pair(s)?;
    Ok((LinComb::basis(parse(a)?), LinComb::basis(parse(b)?)))
}

fn packed_pair(s: &str) -> Result<(PackedWord, PackedWord), CliError> {
    let (a, b) = pair(s)?;
    Ok((parse(a)?, parse(b)?))
}

fn bad_mode(formula: &str, mode: &str) -> CliError {
    CliError::Usage(format!("unknown mode '{mode}' for {formula}"))
}

/// Picks the named modes out of `table`; `None` means the default (first) one.
fn modes<M: Copy>(formula: &str, mode: Option<&str>, table: &[(&'static str, M)]) -> Result<Vec<(&'static str, M)>, CliError> {
    match mode {
        None => Ok(vec![table[0]]),
        Some("all") => Ok(table.to_vec()),
        Some(m) => table.iter().find(|(n, _)| *n == m).map(|&e| vec![e]).ok_or_else(|| bad_mode(formula, m)),
    }
}

const F_MODES: [(&str, FMode); 4] = [
    ("hook_direct", FMode::HookDirect),
    ("hook_recursive", FMode::HookRecursive),
    ("hook_simplified", FMode::HookSimplified),
    ("signed_sum", FMode::SignedSum),
];

const P_MODES: [(&str, PMode); 4] = [
    ("hook_pt1", PMode::HookPT1),
    ("hook_recursive", PMode::HookRecursive),
    ("hook_simplified", PMode::HookSimplified),
    ("signed_sum", PMode::SignedSum),
];

const M_MODES: [(&str, MMode); 2] = [("closed", MMode::Closed), ("signed_sum", MMode::SignedSum)];

const MM_MODES: [(&str, bool); 2] = [("hook", true), ("fiber", false)];

fn valued<M: Copy>(picked: Vec<(&'static str, M)>, f: impl Fn(M) -> superhook::qtarith::QTRational) -> Computed {
    if picked.len() == 1 {
        Computed::Scalar(f(picked[0].1))
    } else {
        Computed::Modes(picked.into_iter().map(|(n, m)| (n, f(m))).collect())
    }
}

pub fn compute(formula: &str, input: &str, mode: Option<&str>) -> Result<Computed, CliError> {
    let modal = matches!(formula, "fqsym.F_at_X" | "pbt.P_at_X" | "wqsym.M_at_X" | "planetree.MM_at_X");
    if mode.is_some() && !modal {
        return Err(CliError::Usage(format!("{formula} takes no --mode")));
    }
    let side = |s: &str| if s.ends_with("prec") || s.starts_with("fqsym.prec") { Side::Left } else { Side::Right };
    let part = |s: &str| match s.rsplit(['.', '_']).find(|p| matches!(*p, "prec" | "dot" | "succ")) {
        Some("prec") => TriPart::Left,
        Some("dot") => TriPart::Middle,
        _ => TriPart::Right,
    };
    Ok(match formula {
        "fqsym.F_at_X" => {
            let s: Permutation = parse(input)?;
            valued(modes(formula, mode, &F_MODES)?, |m| fqsym::f_at_x(&s, m))
        }
        "fqsym.superize_G" => Computed::expansion("G", &fqsym::superize_g(&parse(input)?)),
        "fqsym.G_at_bar_tA" => Computed::expansion("G", &fqsym::specialize_bar_ta(&parse(input)?)),
        "fqsym.F_times_1mt" => Computed::expansion("F", &fqsym::f_times_1mt(&parse(input)?)),
        "fqsym.G_product" => {
            let (a, b) = perm_pair(input)?;
            Computed::expansion("G", &fqsym::product_g(&a, &b))
        }
        "fqsym.F_product" => {
            let (a, b) = perm_pair(input)?;
            Computed::expansion("F", &fqsym::product_f(&a, &b))
        }
        "fqsym.G_prec" | "fqsym.G_succ" => {
            let (a, b) = perm_pair(input)?;
            Computed::expansion("G", &fqsym::half_product_g(&a, &b, side(formula))?)
        }
        "fqsym.F_prec" | "fqsym.F_succ" => {
            let (a, b) = perm_pair(input)?;
            Computed::expansion("F", &fqsym::half_product_f(&a, &b, side(formula))?)
        }
        "fqsym.prec_at_X" | "fqsym.succ_at_X" => {
            let (a, b) = pair(input)?;
            Computed::Scalar(fqsym::half_product_at_x(&parse(a)?, &parse(b)?, side(formula))?)
        }
        "ncsf.R_superize" => Computed::expansion("R", &ncsf::ribbon_superize(&parse::<Composition>(input)?)),
        "ncsf.R_at_bar_tA" => Computed::expansion("R", &ncsf::ribbon_at_bar_ta_closed(&parse::<Composition>(input)?)),
        "pbt.P_at_X" => {
            let t = tree(input)?;
            valued(modes(formula, mode, &P_MODES)?, |m| pbt::p_at_x(&t, m))
        }
        "pbt.P_expand" => Computed::expansion("F", &pbt::p_t_expand(&tree(input)?)),
        "pbt.signed_maj_gf" => Computed::Poly(pbt::signed_maj_gf(&tree(input)?)?),
        "wqsym.M_at_X" => {
            let u: PackedWord = parse(input)?;
            valued(modes(formula, mode, &M_MODES)?, |m| wqsym::m_at_x(&u, m))
        }
        "wqsym.N_superize" => Computed::expansion("N", &wqsym::n_superize(&parse(input)?)),
        "wqsym.N_1mt" => Computed::expansion("N", &wqsym::n_1mt(&parse(input)?)),
        "wqsym.M_dual_1mt" => Computed::expansion("M", &wqsym::m_dual_1mt(&parse(input)?)),
        "wqsym.M_product" => {
            let (u, v) = packed_pair(input)?;
            Computed::expansion("M", &wqsym::m_product(&u, &v))
        }
        "wqsym.M_prec" | "wqsym.M_dot" | "wqsym.M_succ" => {
            let (u, v) = packed_pair(input)?;
            Computed::expansion("M", &wqsym::m_tridendriform(&u, &v, part(formula))?)
        }
        "wqsym.prec_at_X" | "wqsym.dot_at_X" | "wqsym.succ_at_X" => {
            let (u, v) = packed_pair(input)?;
            Computed::Scalar(wqsym::tridendriform_at_x(&u, &v, part(formula))?)
        }
        "planetree.MM_at_X" => {
            let t: PlaneTree = parse(input)?;
            valued(modes(formula, mode, &MM_MODES)?, |hook| if hook { planetree::mm_at_x(&t) } else { planetree::mm_at_x_fiber(&t) })
        }
        "planetree.MM_expand" => Computed::expansion("M", &planetree::mm_expand(&parse(input)?)),
        _ => return Err(CliError::UnknownFormula(formula.to_string())),
    })
}

/// Diagrams carry one decoration, so `all` is refused.
fn single<M: Copy>(formula: &str, mode: Option<&str>, table: &[(&'static str, M)]) -> Result<M, CliError> {
    match modes(formula, mode, table)?.as_slice() {
        [(_, m)] => Ok(*m),
        _ => Err(CliError::Usage("render draws one mode at a time".into())),
    }
}

pub fn render(formula: &str, input: &str, mode: Option<&str>) -> Result<DecoratedTree, CliError> {
    if mode.is_some() && !matches!(formula, "fqsym.F_at_X" | "pbt.P_at_X") {
        return Err(CliError::Usage(format!("{formula} takes no --mode")));
    }
    Ok(match formula {
        "fqsym.shape" => render::decorate_permutation(&parse(input)?, PermDecoration::Shape)?,
        "fqsym.F_at_X" => render::decorate_permutation(&parse(input)?, PermDecoration::Hook(single(formula, mode, &F_MODES[..3])?))?,
        "pbt.labels" => render::decorate_binary_tree(&tree(input)?, TreeDecoration::Labels)?,
        "pbt.P_at_X" => render::decorate_binary_tree(&tree(input)?, TreeDecoration::Hook(single(formula, mode, &P_MODES[..3])?))?,
        "planetree.MM_at_X" => render::decorate_plane_tree(&parse(input)?, false),
        "planetree.numerators" => render::decorate_plane_tree(&parse(input)?, true),
        _ => return Err(CliError::UnknownFormula(formula.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_formula_is_wired() {
        for (name, kind, _) in FORMULAS {
            let sample = match *kind {
                "perm" => "213",
                "perm;perm" => "21;1",
                "composition" => "2,1",
                "tree" => "213",
                "packed" => "121",
                "packed;packed" => "1;11",
                _ => "((·,·),·)",
            };
            compute(name, sample, None).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        for (name, kind, _) in RENDERINGS {
            let sample = if *kind == "planetree" { "((·,·),·)" } else { "213" };
            render(name, sample, None).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn unknown_names_and_modes() {
        assert!(matches!(compute("fqsym.nope", "1", None), Err(CliError::UnknownFormula(_))));
        assert!(matches!(compute("fqsym.F_at_X", "1", Some("nope")), Err(CliError::Usage(_))));
        assert!(matches!(compute("wqsym.N_1mt", "1", Some("all")), Err(CliError::Usage(_))));
    }
}
