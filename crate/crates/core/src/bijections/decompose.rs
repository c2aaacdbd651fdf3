//! First-summand decompositions of ascent sequences, permutations and
//! posets, each with its inverse.

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask};
use crate::poset::{InducedPattern, Poset};
use crate::seqperm::{AscentSeq, Perm, WordPattern};

/// Split at the last zero: the prefix before it, and the suffix after it
/// shifted down to start at zero.
pub(crate) fn split_seq(alpha: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let k = alpha.iter().rposition(|&v| v == 0).expect("ascent sequences start with 0");
    let left = alpha[..k].to_vec();
    let right = match alpha.get(k + 1) {
        Some(&m) => alpha[k + 1..].iter().map(|&v| v - m).collect(),
        None => Vec::new(),
    };
    (left, right)
}

/// `π = k π' (π'' + k)` with `k = π_1`.
pub(crate) fn split_perm(pi: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let k = pi[0] as usize;
    let left = pi[1..k].to_vec();
    let right = pi[k..].iter().map(|&v| v - k as u32).collect();
    (left, right)
}

fn nonempty<T>(empty: bool, value: T) -> Result<T> {
    if empty {
        Err(Error::PatternViolation("cannot decompose an empty object".into()))
    } else {
        Ok(value)
    }
}

pub fn decompose_seq_101(alpha: &AscentSeq) -> Result<(AscentSeq, AscentSeq)> {
    if alpha.contains(WordPattern::P101) {
        return Err(Error::PatternViolation("101".into()));
    }
    nonempty(alpha.is_empty(), ())?;
    let (a, b) = split_seq(alpha.entries());
    Ok((AscentSeq::new(a)?, AscentSeq::new(b)?))
}

pub fn compose_seq_101(left: &AscentSeq, right: &AscentSeq) -> Result<AscentSeq> {
    for s in [left, right] {
        if s.contains(WordPattern::P101) {
            return Err(Error::PatternViolation("101".into()));
        }
    }
    let mut out = left.entries().to_vec();
    out.push(0);
    let shift = out.iter().copied().max().expect("nonempty") + 1;
    out.extend(right.entries().iter().map(|&v| v + shift));
    AscentSeq::new(out)
}

fn require_3142(pi: &Perm) -> Result<()> {
    if pi.is_fishburn() && !pi.contains_classical(&[3, 1, 4, 2]) {
        Ok(())
    } else {
        Err(Error::PatternViolation("3142".into()))
    }
}

pub fn decompose_perm_3142(pi: &Perm) -> Result<(Perm, Perm)> {
    require_3142(pi)?;
    nonempty(pi.is_empty(), ())?;
    let (a, b) = split_perm(pi.values());
    Ok((Perm::new(a)?, Perm::new(b)?))
}

pub fn compose_perm_3142(left: &Perm, right: &Perm) -> Result<Perm> {
    require_3142(left)?;
    require_3142(right)?;
    let k = left.len() as u32 + 1;
    let mut out = vec![k];
    out.extend_from_slice(left.values());
    out.extend(right.values().iter().map(|&v| v + k));
    Perm::new(out)
}

fn require_avoids(p: &Poset, pattern: InducedPattern) -> Result<()> {
    if p.is_22_free() && !p.contains_induced(&pattern.poset()) {
        Ok(())
    } else {
        Err(Error::PatternViolation(pattern.to_string()))
    }
}

/// Elements sorted by level, then by up-set size descending, then index.
fn level_order(p: &Poset) -> Result<Vec<usize>> {
    let levels = p.down_levels()?;
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&x| (levels[x], std::cmp::Reverse(p.up_set(x).count_ones()), x));
    Ok(order)
}

/// `P = P* ⊕ P_II` with `P*` the bottom ordinal summand; `P_I` lives on
/// `p_1..p_{k-1}` with `p_i < p_j` iff `p*_{i-1} < p*_j`.
pub fn decompose_poset_3plus1(p: &Poset) -> Result<(Poset, Poset)> {
    require_avoids(p, InducedPattern::ThreePlusOne)?;
    let summands = nonempty(p.is_empty(), p.ordinal_summands())?;
    let star = p.induced(summands[0]);
    let second = p.induced(full_mask(p.len()) & !summands[0]);
    let order = level_order(&star)?;
    let k = star.len();
    let mut relations = Vec::new();
    for i in 1..k {
        for j in 1..k {
            if star.less(order[i - 1], order[j]) {
                relations.push((i - 1, j - 1));
            }
        }
    }
    Ok((Poset::from_relations(k - 1, &relations)?, second))
}

pub fn compose_poset_3plus1(first: &Poset, second: &Poset) -> Result<Poset> {
    require_avoids(first, InducedPattern::ThreePlusOne)?;
    require_avoids(second, InducedPattern::ThreePlusOne)?;
    let order = level_order(first)?;
    let k = first.len() + 1;
    let mut relations = Vec::new();
    for i in 1..k {
        for j in 1..k {
            if first.less(order[i - 1], order[j - 1]) {
                relations.push((i - 1, j));
            }
        }
    }
    Ok(Poset::from_relations(k, &relations)?.ordinal_sum(second))
}

/// `P = P̃ ⊕ P''` with `P̃` the bottom ordinal summand; `P'` is `P̃` minus
/// its lowest-indexed isolated element.
pub fn decompose_poset_n(p: &Poset) -> Result<(Poset, Poset)> {
    require_avoids(p, InducedPattern::N)?;
    let summands = nonempty(p.is_empty(), p.ordinal_summands())?;
    let bottom = summands[0];
    let isolated = bits(bottom)
        .find(|&x| (p.down_set(x) | p.up_set(x)) & bottom == 0)
        .ok_or(Error::NoIsolatedElement)?;
    let first = p.induced(bottom & !(1u64 << isolated));
    let second = p.induced(full_mask(p.len()) & !bottom);
    Ok((first, second))
}

pub fn compose_poset_n(first: &Poset, second: &Poset) -> Result<Poset> {
    require_avoids(first, InducedPattern::N)?;
    require_avoids(second, InducedPattern::N)?;
    Ok(first.disjoint_union(&Poset::antichain(1)).ordinal_sum(second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::enumerate_posets;
    use crate::seqperm::{enumerate_ascent_sequences, enumerate_fishburn};

    #[test]
    fn sequence_example() {
        let (a, b) = decompose_seq_101(&"01002232".parse().unwrap()).unwrap();
        assert_eq!(a.to_string(), "0,1,0");
        assert_eq!(b.to_string(), "0,0,1,0");
        assert_eq!(compose_seq_101(&a, &b).unwrap().to_string(), "0,1,0,0,2,2,3,2");
        let (a, b) = decompose_seq_101(&"0".parse().unwrap()).unwrap();
        assert!(a.is_empty() && b.is_empty());
        assert!(decompose_seq_101(&"0101".parse().unwrap()).is_err());
    }

    #[test]
    fn permutation_example() {
        let pi: Perm = "41328657".parse().unwrap();
        let (a, b) = decompose_perm_3142(&pi).unwrap();
        assert_eq!(a.to_string(), "1 3 2");
        assert_eq!(b.to_string(), "4 2 1 3");
        assert_eq!(compose_perm_3142(&a, &b).unwrap(), pi);
        assert!(decompose_perm_3142(&"3142".parse().unwrap()).is_err());
    }

    #[test]
    fn sequence_and_permutation_roundtrips() {
        for n in 1..=7 {
            for s in enumerate_ascent_sequences(n, Some(WordPattern::P101)) {
                let (a, b) = decompose_seq_101(&s).unwrap();
                assert_eq!(compose_seq_101(&a, &b).unwrap(), s);
            }
            for p in enumerate_fishburn(n, true).unwrap() {
                let (a, b) = decompose_perm_3142(&p).unwrap();
                assert_eq!(compose_perm_3142(&a, &b).unwrap(), p);
            }
        }
    }

    #[test]
    fn poset_small_cases() {
        let (a, b) = decompose_poset_3plus1(&Poset::chain(1)).unwrap();
        assert!(a.is_empty() && b.is_empty());
        let (a, b) = decompose_poset_n(&Poset::chain(2)).unwrap();
        assert!(a.is_empty());
        assert_eq!(b.len(), 1);
        assert!(decompose_poset_3plus1(&Poset::three_plus_one()).is_err());
        assert!(decompose_poset_n(&Poset::n_poset()).is_err());
    }

    #[test]
    fn poset_roundtrips() {
        for n in 1..=6 {
            for p in enumerate_posets(n, Some(InducedPattern::ThreePlusOne)).unwrap() {
                let (a, b) = decompose_poset_3plus1(&p).unwrap();
                let back = compose_poset_3plus1(&a, &b).unwrap();
                assert!(back.is_isomorphic(&p), "3+1 n={n}");
                assert_eq!(a.width() + 1, p.induced(p.ordinal_summands()[0]).width());
            }
            for p in enumerate_posets(n, Some(InducedPattern::N)).unwrap() {
                let (a, b) = decompose_poset_n(&p).unwrap();
                let back = compose_poset_n(&a, &b).unwrap();
                assert!(back.is_isomorphic(&p), "N n={n}");
                assert_eq!(a.width() + 1, p.induced(p.ordinal_summands()[0]).width());
            }
        }
    }
}
