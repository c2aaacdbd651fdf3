//! Forbidden sub-matchings: the four-arc patterns `P1..P5`, the families
//! `P2^k..P5^k`, and containment by arc-subset order isomorphism.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matching::{enumerate_stoimenow, ArcRelation, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PatternName {
    P1,
    P2,
    P3,
    P4,
    P5,
    /// `P_i^k` for `i` in 2..=5.
    Family(u32, usize),
    Custom,
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternName::P1 => f.write_str("P1"),
            PatternName::P2 => f.write_str("P2"),
            PatternName::P3 => f.write_str("P3"),
            PatternName::P4 => f.write_str("P4"),
            PatternName::P5 => f.write_str("P5"),
            PatternName::Family(i, k) => write!(f, "P{i}k:{k}"),
            PatternName::Custom => f.write_str("custom"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    pub name: PatternName,
    pub matching: Matching,
}

fn fixed(text: &str) -> Matching {
    text.parse().expect("built-in pattern")
}

/// `k` arcs, each crossing only its neighbours: openers `1, 2, 4, 6, ...`.
fn chain(k: usize) -> Matching {
    match k {
        0 => Matching::empty(),
        1 => fixed("1-2"),
        _ => {
            // a_1 a_2 b_1 a_3 b_2 ... a_k b_{k-1} b_k
            let mut word = vec![0, 1, 0];
            for i in 2..k {
                word.push(i);
                word.push(i - 1);
            }
            word.push(k - 1);
            Matching::from_labels(&word).expect("chain word")
        }
    }
}

impl Pattern {
    pub fn custom(matching: Matching) -> Self {
        Pattern { name: PatternName::Custom, matching }
    }

    pub fn p1() -> Self {
        Pattern { name: PatternName::P1, matching: fixed("1-3,2-7,4-5,6-8") }
    }

    pub fn p2() -> Self {
        Pattern { name: PatternName::P2, matching: fixed("1-3,2-5,4-7,6-8") }
    }

    pub fn p3() -> Self {
        Pattern { name: PatternName::P3, matching: fixed("1-2,3-5,4-6,7-8") }
    }

    pub fn p4() -> Self {
        Pattern { name: PatternName::P4, matching: fixed("1-2,3-5,4-7,6-8") }
    }

    pub fn p5() -> Self {
        Pattern { name: PatternName::P5, matching: fixed("1-3,2-5,4-6,7-8") }
    }

    /// The five four-arc patterns in order.
    pub fn all_five() -> [Pattern; 5] {
        [Pattern::p1(), Pattern::p2(), Pattern::p3(), Pattern::p4(), Pattern::p5()]
    }

    /// `P_i^k`. For every `i`, `k = 1` gives a single arc. `P3^2` is two
    /// disjoint arcs (the middle chain is empty).
    pub fn family(i: u32, k: usize) -> Result<Self> {
        if !(2..=5).contains(&i) || k == 0 {
            return Err(Error::BadFamilyIndex(i));
        }
        let single = fixed("1-2");
        let matching = if k == 1 {
            single
        } else {
            match i {
                2 => chain(k),
                3 => single.merge(&chain(k - 2)).merge(&single),
                4 => single.merge(&chain(k - 1)),
                _ => chain(k - 1).merge(&single),
            }
        };
        Ok(Pattern { name: PatternName::Family(i, k), matching })
    }

    pub fn size(&self) -> usize {
        self.matching.size()
    }

    pub fn reverse(&self) -> Pattern {
        Pattern { name: PatternName::Custom, matching: self.matching.reverse() }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// `P1`..`P5`, `P2k:K`..`P5k:K`, or an arc list for a custom pattern.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let bad = || Error::Parse { what: "pattern", detail: t.to_string() };
        match t {
            "P1" => return Ok(Pattern::p1()),
            "P2" => return Ok(Pattern::p2()),
            "P3" => return Ok(Pattern::p3()),
            "P4" => return Ok(Pattern::p4()),
            "P5" => return Ok(Pattern::p5()),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix('P') {
            let (head, k) = rest.split_once(':').ok_or_else(bad)?;
            let i = head.strip_suffix('k').ok_or_else(bad)?;
            let i: u32 = i.parse().map_err(|_| bad())?;
            let k: usize = k.parse().map_err(|_| bad())?;
            return Pattern::family(i, k);
        }
        Ok(Pattern::custom(t.parse()?))
    }
}

/// Pairwise relation table of a matching's arcs (opener order):
/// `rel[i][j]` for `i < j`.
fn relation_table(m: &Matching) -> Vec<Vec<ArcRelation>> {
    let arcs = m.arcs();
    (0..arcs.len())
        .map(|i| {
            (0..arcs.len())
                .map(|j| if i < j { ArcRelation::of(arcs[i], arcs[j]) } else { ArcRelation::Disjoint })
                .collect()
        })
        .collect()
}

/// Lexicographically first occurrence of `q` in `m`: for each arc of `q`
/// (opener order) the index of the arc of `m` it maps to, choosing the
/// smallest first index, then the smallest second, and so on.
///
/// Two choices of arcs induce the same endpoint order exactly when every
/// pair of arcs has the same [`ArcRelation`], so pairwise checks suffice.
pub fn first_occurrence(m: &Matching, q: &Matching) -> Option<Vec<usize>> {
    let k = q.size();
    let n = m.size();
    if k > n {
        return None;
    }
    let mr = relation_table(m);
    let qr = relation_table(q);
    let mut chosen = Vec::with_capacity(k);
    fn rec(
        mr: &[Vec<ArcRelation>],
        qr: &[Vec<ArcRelation>],
        n: usize,
        k: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let t = chosen.len();
        if t == k {
            return true;
        }
        let start = chosen.last().map_or(0, |&c| c + 1);
        // leave room for the remaining pattern arcs
        for c in start..=n - (k - t) {
            if chosen.iter().enumerate().all(|(s, &prev)| mr[prev][c] == qr[s][t]) {
                chosen.push(c);
                if rec(mr, qr, n, k, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if rec(&mr, &qr, n, k, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

pub fn contains(m: &Matching, q: &Pattern) -> bool {
    first_occurrence(m, &q.matching).is_some()
}

/// Stoimenow matchings with `n` arcs avoiding `q`, in enumeration order.
pub fn enumerate_avoiding(n: usize, q: &Pattern) -> impl Iterator<Item = Matching> + '_ {
    enumerate_stoimenow(n).filter(move |m| !contains(m, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(text: &str) -> Matching {
        text.parse().unwrap()
    }

    /// Containment by trying every arc subset and comparing normalized
    /// restrictions.
    fn brute_contains(x: &Matching, q: &Matching) -> bool {
        let n = x.size();
        let k = q.size();
        (0u32..1 << n).filter(|s| s.count_ones() as usize == k).any(|s| {
            let idx: Vec<usize> = (0..n).filter(|i| s >> i & 1 == 1).collect();
            &x.restrict(&idx) == q
        })
    }

    #[test]
    fn families_agree_with_fixed_patterns() {
        assert_eq!(Pattern::family(2, 4).unwrap().matching, Pattern::p2().matching);
        assert_eq!(Pattern::family(3, 4).unwrap().matching, Pattern::p3().matching);
        assert_eq!(Pattern::family(4, 4).unwrap().matching, Pattern::p4().matching);
        assert_eq!(Pattern::family(5, 4).unwrap().matching, Pattern::p5().matching);
        for i in 2..=5 {
            assert_eq!(Pattern::family(i, 1).unwrap().matching, m("1-2"));
        }
        assert_eq!(Pattern::family(2, 2).unwrap().matching, m("1-3,2-4"));
        assert_eq!(Pattern::family(3, 2).unwrap().matching, m("1-2,3-4"));
        assert_eq!(Pattern::family(2, 3).unwrap().matching, m("1-3,2-5,4-6"));
        assert_eq!(Pattern::family(1, 3), Err(Error::BadFamilyIndex(1)));
        assert_eq!(Pattern::family(6, 3), Err(Error::BadFamilyIndex(6)));
    }

    #[test]
    fn parse_names() {
        assert_eq!("P3".parse::<Pattern>().unwrap(), Pattern::p3());
        assert_eq!("P5k:6".parse::<Pattern>().unwrap(), Pattern::family(5, 6).unwrap());
        assert_eq!("P2k:6".parse::<Pattern>().unwrap().name.to_string(), "P2k:6");
        assert_eq!("1-3,2-4".parse::<Pattern>().unwrap().name, PatternName::Custom);
        assert!("P7".parse::<Pattern>().is_err());
        assert_eq!("P7k:2".parse::<Pattern>(), Err(Error::BadFamilyIndex(7)));
    }

    #[test]
    fn containment_examples() {
        assert!(contains(&m("1-3,2-5,4-7,6-8"), &Pattern::p2()));
        assert!(contains(&m("1-2,3-4,5-6"), &Pattern::family(3, 2).unwrap()));
        assert!(!contains(&m("1-4,2-5,3-6"), &Pattern::p1()));
    }

    #[test]
    fn containment_against_brute_force() {
        let patterns: Vec<Matching> = (0..=3).flat_map(crate::matching::enumerate_stoimenow).collect();
        for n in 0..=5 {
            for x in enumerate_stoimenow(n) {
                for q in &patterns {
                    assert_eq!(first_occurrence(&x, q).is_some(), brute_contains(&x, q), "{x} / {q}");
                }
            }
        }
        // also non-Stoimenow patterns
        let q = m("1-4,2-3");
        for x in enumerate_stoimenow(5) {
            assert_eq!(first_occurrence(&x, &q).is_some(), brute_contains(&x, &q));
        }
    }

    #[test]
    fn p1_avoiders_are_nonnesting() {
        for n in 0..=8 {
            for x in enumerate_stoimenow(n) {
                assert_eq!(!contains(&x, &Pattern::p1()), x.is_nonnesting(), "{x}");
            }
        }
    }

    #[test]
    fn catalan_counts_small() {
        for q in Pattern::all_five() {
            let counts: Vec<usize> = (0..=6).map(|n| enumerate_avoiding(n, &q).count()).collect();
            assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132], "{}", q.name);
        }
    }

    #[test]
    fn family_k3_wilf_at_five() {
        let c2 = enumerate_avoiding(5, &Pattern::family(2, 3).unwrap()).count();
        let c5 = enumerate_avoiding(5, &Pattern::family(5, 3).unwrap()).count();
        assert_eq!(c2, c5);
    }

    #[test]
    fn first_occurrence_is_lexicographic() {
        let x = m("1-2,3-4,5-6,7-8");
        let q = Pattern::family(3, 2).unwrap().matching;
        assert_eq!(first_occurrence(&x, &q), Some(vec![0, 1]));
    }

    #[test]
    fn containment_commutes_with_reversal() {
        let pats = Pattern::all_five();
        for n in 0..=6 {
            for x in enumerate_stoimenow(n) {
                for q in &pats {
                    assert_eq!(contains(&x, q), contains(&x.reverse(), &q.reverse()));
                }
            }
        }
    }
}
