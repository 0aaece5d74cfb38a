//! Combinatorial carriers and the standardization and packing maps.

mod bintree;
mod composition;
mod packed;
mod perm;
mod planetree;
mod signed;
mod stats;
mod text;
mod tree_text;

pub use bintree::{shuffles, BinaryTree, NodeInfo};
pub use composition::{Composition, SignedComposition};
pub use packed::{biword_pack, pack, PackedWord, SignedPackedWord};
pub use perm::{descents, maj, std, Permutation};
pub use planetree::{PlaneTree, RegionStat};
pub use signed::{Sign, SignVector, SignedPermutation, SignedWord};
pub use stats::{peak_valley_exponent, Stats};


use itertools::Itertools;

/// All permutations of size `n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n).permutations(n).map(Permutation::from_vec_unchecked)
}

/// All signed permutations of size `n`.
pub fn signed_permutations(n: usize) -> impl Iterator<Item = SignedPermutation> {
    permutations(n).flat_map(move |p| {
        SignVector::all(n).map(move |e| SignedPermutation::new(p.clone(), e).expect("lengths agree"))
    })
}
