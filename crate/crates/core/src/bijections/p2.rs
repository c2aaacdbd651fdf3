//! 𝒱, the gluing of P2-avoiding matchings, and the maps Ψ and Υ built on
//! the resulting recursive decomposition.

use crate::error::{Error, Result};
use crate::matching::{Arc, Matching};
use crate::pattern::{contains, Pattern};
use crate::seqperm::{AscentSeq, Perm, WordPattern};

use super::decompose::{split_perm, split_seq};
use super::{from_tokens, tokens, Token};

fn require_p2(m: &Matching) -> Result<()> {
    if m.is_stoimenow() && !contains(m, &Pattern::p2()) {
        Ok(())
    } else {
        Err(Error::PatternViolation("P2".into()))
    }
}

/// The arc whose closer immediately follows the last opener.
pub fn redarc(m: &Matching) -> Option<Arc> {
    let word = m.word();
    let last = word.iter().rposition(|&o| o)?;
    let closer = last + 2;
    Some(Arc::new(m.partner(closer), closer))
}

fn v_map_unchecked(m: &Matching) -> Matching {
    let k = m.size();
    if k == 0 {
        return "1-2".parse().expect("single arc");
    }
    let mut word = tokens(m);
    let last_opener = word.iter().rposition(|t| t.opener).expect("nonempty");
    let b1 = m.partner(1) - 1;
    let at = if last_opener < b1 {
        0
    } else {
        // openers left of b1 whose closers lie right of the last opener
        (0..b1).find(|&p| m.is_opener(p + 1) && m.partner(p + 1) - 1 > last_opener).unwrap_or(b1)
    };
    word.insert(last_opener + 1, Token { arc: k, opener: false });
    word.insert(at, Token { arc: k, opener: true });
    from_tokens(&word).expect("insertion keeps the opener first")
}

/// 𝒱: add a reduction arc, giving an irreducible P2-avoider with one more
/// arc.
pub fn v_map(m: &Matching) -> Result<Matching> {
    require_p2(m)?;
    Ok(v_map_unchecked(m))
}

/// `𝒱(M') ⊕ M''`.
pub fn glue_p2(m1: &Matching, m2: &Matching) -> Result<Matching> {
    require_p2(m1)?;
    require_p2(m2)?;
    Ok(v_map_unchecked(m1).merge(m2))
}

fn split_unchecked(m: &Matching) -> (Matching, Matching) {
    let k = m.blocks()[0].size();
    let first = m.restrict(&(0..k).collect::<Vec<_>>());
    let rest = m.restrict(&(k..m.size()).collect::<Vec<_>>());
    let red = redarc(&first).expect("nonempty block");
    let keep: Vec<usize> = first.arcs().iter().enumerate().filter(|(_, a)| **a != red).map(|(i, _)| i).collect();
    (first.restrict(&keep), rest)
}

/// Inverse of [`glue_p2`]: first block minus its reduction arc, and the
/// remaining blocks.
pub fn split_p2(m: &Matching) -> Result<(Matching, Matching)> {
    require_p2(m)?;
    if m.is_empty() {
        return Err(Error::PatternViolation("cannot split the empty matching".into()));
    }
    Ok(split_unchecked(m))
}

fn psi_rec(m: &Matching) -> Vec<u32> {
    if m.is_empty() {
        return Vec::new();
    }
    let (m1, m2) = split_unchecked(m);
    let mut alpha = psi_rec(&m1);
    alpha.push(0);
    let shift = alpha.iter().copied().max().expect("nonempty") + 1;
    alpha.extend(psi_rec(&m2).into_iter().map(|v| v + shift));
    alpha
}

/// Ψ on P2-avoiders: `Ψ(𝒱(M') ⊕ M'') = (Ψ(M'), 0)` followed by `Ψ(M'')`
/// shifted by one more than the largest entry so far.
pub fn psi_p2(m: &Matching) -> Result<AscentSeq> {
    require_p2(m)?;
    AscentSeq::new(psi_rec(m))
}

fn psi_inverse_rec(alpha: &[u32]) -> Matching {
    if alpha.is_empty() {
        return Matching::empty();
    }
    let (a1, a2) = split_seq(alpha);
    v_map_unchecked(&psi_inverse_rec(&a1)).merge(&psi_inverse_rec(&a2))
}

pub fn psi_p2_inverse(alpha: &AscentSeq) -> Result<Matching> {
    if alpha.contains(WordPattern::P101) {
        return Err(Error::PatternViolation("101".into()));
    }
    Ok(psi_inverse_rec(alpha.entries()))
}

/// Υ = Λ ∘ Ψ on P2-avoiders.
pub fn upsilon_p2(m: &Matching) -> Result<Perm> {
    Ok(psi_p2(m)?.lambda())
}

fn upsilon_inverse_rec(pi: &[u32]) -> Matching {
    if pi.is_empty() {
        return Matching::empty();
    }
    let (p1, p2) = split_perm(pi);
    v_map_unchecked(&upsilon_inverse_rec(&p1)).merge(&upsilon_inverse_rec(&p2))
}

pub fn upsilon_p2_inverse(pi: &Perm) -> Result<Matching> {
    if !pi.is_fishburn() || pi.contains_classical(&[3, 1, 4, 2]) {
        return Err(Error::PatternViolation("3142".into()));
    }
    Ok(upsilon_inverse_rec(pi.values()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::enumerate_avoiding;
    use crate::seqperm::{enumerate_ascent_sequences, enumerate_fishburn};
    use std::collections::HashSet;

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn v_map_examples() {
        let tilde = v_map(&m("1-4,2-5,3-8,6-9,7-10")).unwrap();
        assert_eq!(tilde, m("1-5,2-6,3-9,4-10,7-11,8-12"));
        assert_eq!(redarc(&tilde), Some(Arc::new(3, 9)));
        assert_eq!(v_map(&m("1-2")).unwrap(), m("1-3,2-4"));
        assert_eq!(v_map(&Matching::empty()).unwrap(), m("1-2"));
        assert_eq!(redarc(&m("1-2,3-5,4-7,6-8")), Some(Arc::new(4, 7)));
        assert_eq!(redarc(&m("1-3,2-4,5-6,7-8")), Some(Arc::new(7, 8)));
        assert_eq!(redarc(&Matching::empty()), None);
        assert_eq!(v_map(&m("1-3,2-5,4-7,6-8")), Err(Error::PatternViolation("P2".into())));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_p2(&m("1-2")).unwrap().to_string(), "0");
        assert_eq!(psi_p2(&m("1-3,2-4")).unwrap().to_string(), "0,0");
        assert_eq!(psi_p2(&m("1-2,3-4")).unwrap().to_string(), "0,1");
        assert_eq!(upsilon_p2(&m("1-2")).unwrap().to_string(), "1");
        assert_eq!(upsilon_p2(&m("1-3,2-4")).unwrap().to_string(), "2 1");
        assert_eq!(upsilon_p2(&m("1-2,3-4")).unwrap().to_string(), "1 2");
        let alpha: AscentSeq = "01002232".parse().unwrap();
        let whole = psi_p2_inverse(&alpha).unwrap();
        let left = psi_p2_inverse(&"010".parse().unwrap()).unwrap();
        let right = psi_p2_inverse(&"0010".parse().unwrap()).unwrap();
        assert_eq!(whole, glue_p2(&left, &right).unwrap());
        assert_eq!(psi_p2(&whole).unwrap(), alpha);
    }

    #[test]
    fn glue_split_roundtrip_and_irreducibles() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132];
        for n in 1..=7 {
            let all: Vec<Matching> = enumerate_avoiding(n, &Pattern::p2()).collect();
            assert_eq!(all.iter().filter(|x| x.bl() == 1).count(), catalan[n - 1]);
            for x in &all {
                let (a, b) = split_p2(x).unwrap();
                assert_eq!(&glue_p2(&a, &b).unwrap(), x);
            }
        }
    }

    #[test]
    fn psi_and_upsilon_are_bijections() {
        for n in 0..=7 {
            let all: Vec<Matching> = enumerate_avoiding(n, &Pattern::p2()).collect();
            let seqs: HashSet<AscentSeq> = all.iter().map(|x| psi_p2(x).unwrap()).collect();
            let want: HashSet<AscentSeq> = enumerate_ascent_sequences(n, Some(WordPattern::P101)).collect();
            assert_eq!(seqs.len(), all.len());
            assert_eq!(seqs, want);
            let perms: HashSet<Perm> = all.iter().map(|x| upsilon_p2(x).unwrap()).collect();
            let want: HashSet<Perm> = enumerate_fishburn(n, true).unwrap().collect();
            assert_eq!(perms, want);
            for x in &all {
                assert_eq!(&psi_p2_inverse(&psi_p2(x).unwrap()).unwrap(), x);
                assert_eq!(&upsilon_p2_inverse(&upsilon_p2(x).unwrap()).unwrap(), x);
            }
        }
    }
}
