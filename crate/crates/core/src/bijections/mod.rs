//! Constructive bijections: Γ, Θ and the P1 glue, 𝒱 and the P2 glue, Φ,
//! the restricted Ψ and Υ, and the first-summand decompositions of posets,
//! ascent sequences and permutations.

pub mod decompose;
pub mod dyck;
pub mod p1;
pub mod p2;
pub mod phi;

pub use decompose::{
    compose_perm_3142, compose_poset_3plus1, compose_poset_n, compose_seq_101, decompose_perm_3142,
    decompose_poset_3plus1, decompose_poset_n, decompose_seq_101,
};
pub use dyck::{enumerate_dyck, DyckPath};
pub use p1::{glue_p1, split_p1, theta};
pub use p2::{glue_p2, psi_p2, psi_p2_inverse, redarc, split_p2, upsilon_p2, upsilon_p2_inverse, v_map};
pub use phi::{phi, phi_inverse};

use crate::error::{Error, Result};
use crate::matching::Matching;

/// One endpoint of an arc; arcs are identified by their index in the
/// matching the word was read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Token {
    pub arc: usize,
    pub opener: bool,
}

pub(crate) fn tokens(m: &Matching) -> Vec<Token> {
    m.labels()
        .into_iter()
        .enumerate()
        .map(|(i, arc)| Token { arc, opener: m.is_opener(i + 1) })
        .collect()
}

/// Read a token word back into a matching, renumbering positions.
pub(crate) fn from_tokens(word: &[Token]) -> Result<Matching> {
    let arcs = word.iter().map(|t| t.arc).max().map_or(0, |m| m + 1);
    let mut open = vec![0usize; arcs];
    let mut pairs = Vec::with_capacity(arcs);
    for (i, t) in word.iter().enumerate() {
        if t.opener {
            open[t.arc] = i + 1;
        } else {
            if open[t.arc] == 0 {
                return Err(Error::OpenerAfterCloser(i + 1, i + 1));
            }
            pairs.push((open[t.arc], i + 1));
        }
    }
    Matching::from_arcs(pairs)
}

/// Move the tokens at the given 0-based indices (kept in order) so that
/// they sit immediately before the token currently at `before`.
pub(crate) fn move_before(word: &[Token], moving: &[usize], before: usize) -> Vec<Token> {
    let target = word[before];
    let moved: Vec<Token> = moving.iter().map(|&i| word[i]).collect();
    let mut rest: Vec<Token> = word
        .iter()
        .enumerate()
        .filter(|(i, _)| !moving.contains(i))
        .map(|(_, &t)| t)
        .collect();
    let at = rest.iter().position(|&t| t == target).expect("target token is not moved");
    rest.splice(at..at, moved);
    rest
}
