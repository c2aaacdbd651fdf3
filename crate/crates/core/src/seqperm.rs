//! Ascent sequences, Fishburn permutations, and the maps between them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// An ascent sequence, 0-based values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AscentSeq(Vec<u32>);

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Perm(Vec<u32>);

fn asc_count(entries: &[u32]) -> usize {
    entries.windows(2).filter(|w| w[0] < w[1]).count()
}

/// 1-based ascent positions `j` with `α_j < α_{j+1}`.
fn ascent_list(entries: &[u32]) -> Vec<usize> {
    entries.windows(2).enumerate().filter(|(_, w)| w[0] < w[1]).map(|(i, _)| i + 1).collect()
}

fn lmax(entries: &[u32]) -> usize {
    let mut best: Option<u32> = None;
    let mut count = 0;
    for &v in entries {
        if best.is_none_or(|b| v > b) {
            count += 1;
            best = Some(v);
        }
    }
    count
}

fn rmin(entries: &[u32]) -> usize {
    let mut best: Option<u32> = None;
    let mut count = 0;
    for &v in entries.iter().rev() {
        if best.is_none_or(|b| v < b) {
            count += 1;
            best = Some(v);
        }
    }
    count
}

/// Integers separated by commas or whitespace, or a compact digit string.
pub fn parse_ints(text: &str, what: &'static str) -> Result<Vec<u32>> {
    let t = text.trim();
    let tokens: Vec<&str> = if t.contains(',') || t.contains(char::is_whitespace) {
        t.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect()
    } else {
        // compact form such as "01002232" or "31764825": one digit per entry
        t.split("").filter(|s| !s.is_empty()).collect()
    };
    tokens
        .into_iter()
        .map(|s| s.parse::<u32>().map_err(|_| Error::Parse { what, detail: s.to_string() }))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct SeqStats {
    pub asc: usize,
    pub zero: usize,
    pub lmax: usize,
    pub rmin: usize,
}

/// Word patterns on ascent sequences, matched by subsequences with the same
/// equality and order type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordPattern {
    /// `b a b` with `a < b`.
    P101,
    /// `a b a b` with `a < b`.
    P0101,
}

impl FromStr for WordPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "101" => Ok(WordPattern::P101),
            "0101" => Ok(WordPattern::P0101),
            other => Err(Error::Parse { what: "word pattern", detail: other.to_string() }),
        }
    }
}

/// Runs of an RGF avoiding 101: entries at or above the running maximum
/// form weakly increasing runs; the entries between them (strictly below
/// the running maximum) form weakly decreasing separators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunDecomposition {
    pub runs: Vec<Vec<u32>>,
    /// `separators[i]` sits between `runs[i]` and `runs[i + 1]`; a trailing
    /// separator after the last run is allowed.
    pub separators: Vec<Vec<u32>>,
}

impl AscentSeq {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let s = AscentSeq(entries);
        if s.is_valid() {
            Ok(s)
        } else {
            Err(Error::InvalidAscentSequence)
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn is_valid(&self) -> bool {
        let mut asc = 0u32;
        for (i, &v) in self.0.iter().enumerate() {
            if i == 0 {
                if v != 0 {
                    return false;
                }
            } else {
                if v > asc + 1 {
                    return false;
                }
                if self.0[i - 1] < v {
                    asc += 1;
                }
            }
        }
        true
    }

    pub fn asc(&self) -> usize {
        asc_count(&self.0)
    }

    pub fn stats(&self) -> SeqStats {
        SeqStats {
            asc: self.asc(),
            zero: self.0.iter().filter(|&&v| v == 0).count(),
            lmax: lmax(&self.0),
            rmin: rmin(&self.0),
        }
    }

    pub fn contains(&self, pattern: WordPattern) -> bool {
        let a = &self.0;
        let n = a.len();
        match pattern {
            WordPattern::P101 => (0..n).any(|i| (i + 1..n).any(|j| a[j] < a[i] && (j + 1..n).any(|k| a[k] == a[i]))),
            WordPattern::P0101 => (0..n).any(|i| {
                (i + 1..n).any(|j| {
                    a[j] > a[i] && (j + 1..n).any(|k| a[k] == a[i] && (k + 1..n).any(|l| a[l] == a[j]))
                })
            }),
        }
    }

    /// Run decomposition of a 101-avoiding sequence; `NotRgf` if the
    /// sequence breaks the restricted-growth run structure.
    pub fn rgf_runs(&self) -> Result<RunDecomposition> {
        let mut runs: Vec<Vec<u32>> = Vec::new();
        let mut separators: Vec<Vec<u32>> = Vec::new();
        let mut max: Option<u32> = None;
        let mut in_run = false;
        for &v in &self.0 {
            match max {
                None => {
                    if v != 0 {
                        return Err(Error::NotRgf);
                    }
                    runs.push(vec![v]);
                    in_run = true;
                    max = Some(v);
                }
                Some(m) if v >= m => {
                    if v > m + 1 {
                        return Err(Error::NotRgf);
                    }
                    if !in_run {
                        // a new run starts exactly one above the previous maximum
                        if v != m + 1 {
                            return Err(Error::NotRgf);
                        }
                        runs.push(Vec::new());
                        in_run = true;
                    }
                    runs.last_mut().unwrap().push(v);
                    max = Some(v);
                }
                Some(_) => {
                    if in_run {
                        separators.push(Vec::new());
                        in_run = false;
                    }
                    let sep = separators.last_mut().unwrap();
                    if sep.last().is_some_and(|&p| v > p) {
                        return Err(Error::NotRgf);
                    }
                    sep.push(v);
                }
            }
        }
        Ok(RunDecomposition { runs, separators })
    }

    /// `M(α, j)`: add one to every `α_i` with `i < j` and `α_i ≥ α_{j+1}`
    /// (1-based `j`).
    fn bump(entries: &mut [u32], j: usize) {
        let pivot = entries[j];
        for v in &mut entries[..j - 1] {
            if *v >= pivot {
                *v += 1;
            }
        }
    }

    /// Modified ascent sequence: apply the bump at each ascent of the
    /// original sequence, in increasing order.
    pub fn delta(&self) -> Vec<u32> {
        let mut out = self.0.clone();
        for j in ascent_list(&self.0) {
            AscentSeq::bump(&mut out, j);
        }
        out
    }

    /// `Λ = 𝒯 ∘ Δ`.
    pub fn lambda(&self) -> Perm {
        transpose(&self.delta())
    }
}

/// Sort positions `1..=n` by (value ascending, position descending).
pub fn transpose(modified: &[u32]) -> Perm {
    let mut idx: Vec<u32> = (1..=modified.len() as u32).collect();
    idx.sort_by_key(|&i| (modified[i as usize - 1], std::cmp::Reverse(i)));
    Perm(idx)
}

impl fmt::Display for AscentSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for AscentSeq {
    type Err = Error;

    /// Comma-separated entries, or a compact digit string like `01002232`.
    fn from_str(s: &str) -> Result<Self> {
        AscentSeq::new(parse_ints(s, "ascent sequence")?)
    }
}

/// All ascent sequences of length `n`, lexicographic, optionally avoiding a
/// word pattern.
pub fn enumerate_ascent_sequences(n: usize, avoid: Option<WordPattern>) -> impl Iterator<Item = AscentSeq> {
    fn rec(cur: &mut Vec<u32>, asc: u32, n: usize, out: &mut Vec<AscentSeq>) {
        if cur.len() == n {
            out.push(AscentSeq(cur.clone()));
            return;
        }
        let bound = if cur.is_empty() { 0 } else { asc + 1 };
        for v in 0..=bound {
            let step = u32::from(cur.last().is_some_and(|&p| p < v));
            cur.push(v);
            rec(cur, asc + step, n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), 0, n, &mut out);
    out.into_iter().filter(move |s| avoid.is_none_or(|p| !s.contains(p)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct PermStats {
    pub lmax: usize,
    pub rmin: usize,
    pub idr: usize,
    pub contains3142: bool,
}

impl Perm {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::InvalidPermutation);
            }
            seen[v as usize - 1] = true;
        }
        Ok(Perm(values))
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u32).collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// No `i`, `j > i + 1` with `π_j + 1 = π_i < π_{i+1}`.
    pub fn is_fishburn(&self) -> bool {
        let p = &self.0;
        let n = p.len();
        let mut pos = vec![0usize; n + 1];
        for (i, &v) in p.iter().enumerate() {
            pos[v as usize] = i;
        }
        !(0..n.saturating_sub(1)).any(|i| p[i] < p[i + 1] && p[i] > 1 && pos[p[i] as usize - 1] > i + 1)
    }

    /// Classical containment: some subsequence is order-isomorphic to
    /// `pattern`.
    pub fn contains_classical(&self, pattern: &[u32]) -> bool {
        let k = pattern.len();
        let mut chosen: Vec<u32> = Vec::with_capacity(k);
        fn rec(p: &[u32], pat: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
            let t = chosen.len();
            if t == pat.len() {
                return true;
            }
            for i in start..p.len() {
                let ok = chosen.iter().zip(pat).all(|(&c, &q)| (c < p[i]) == (q < pat[t]));
                if ok {
                    chosen.push(p[i]);
                    if rec(p, pat, i + 1, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        rec(&self.0, pattern, 0, &mut chosen)
    }

    /// Length of the initial strictly decreasing run.
    pub fn idr(&self) -> usize {
        if self.0.is_empty() {
            return 0;
        }
        1 + self.0.windows(2).take_while(|w| w[0] > w[1]).count()
    }

    pub fn stats(&self) -> PermStats {
        PermStats {
            lmax: lmax(&self.0),
            rmin: rmin(&self.0),
            idr: self.idr(),
            contains3142: self.contains_classical(&[3, 1, 4, 2]),
        }
    }

    /// Direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let k = self.0.len() as u32;
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&x| x + k));
        Perm(v)
    }

    /// Lexicographically next permutation, or `None` after the last one.
    fn next_lex(&self) -> Option<Perm> {
        let mut v = self.0.clone();
        let i = v.windows(2).rposition(|w| w[0] < w[1])?;
        let j = v.iter().rposition(|&x| x > v[i]).expect("successor exists");
        v.swap(i, j);
        v[i + 1..].reverse();
        Some(Perm(v))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Space-separated one-line notation, or compact digits like `31764825`.
    fn from_str(s: &str) -> Result<Self> {
        Perm::new(parse_ints(s, "permutation")?)
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_perms(n: usize) -> impl Iterator<Item = Perm> {
    std::iter::successors(Some(Perm::identity(n)), Perm::next_lex)
}

/// Fishburn permutations of length `n`, lexicographic, by filtering `S_n`.
pub fn enumerate_fishburn(n: usize, avoid3142: bool) -> Result<impl Iterator<Item = Perm>> {
    if n > 9 {
        return Err(Error::TooLarge { size: n, bound: 9 });
    }
    Ok(all_perms(n).filter(move |p| p.is_fishburn() && !(avoid3142 && p.contains_classical(&[3, 1, 4, 2]))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> AscentSeq {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn validity() {
        assert!(AscentSeq::new(vec![0, 1, 0, 1, 3, 1, 1, 2]).is_ok());
        assert_eq!(AscentSeq::new(vec![1]), Err(Error::InvalidAscentSequence));
        assert_eq!(AscentSeq::new(vec![0, 2]), Err(Error::InvalidAscentSequence));
        assert_eq!(Perm::new(vec![1, 1]), Err(Error::InvalidPermutation));
        assert_eq!(Perm::new(vec![0, 1]), Err(Error::InvalidPermutation));
        assert_eq!(seq("01002232").entries(), &[0, 1, 0, 0, 2, 2, 3, 2]);
        assert_eq!(perm("3 1 7 6 4 8 2 5"), perm("31764825"));
    }

    #[test]
    fn counts() {
        let c: Vec<usize> = (1..=6).map(|n| enumerate_ascent_sequences(n, None).count()).collect();
        assert_eq!(c, vec![1, 2, 5, 15, 53, 217]);
        assert_eq!(enumerate_ascent_sequences(0, None).count(), 1);
        assert_eq!(enumerate_ascent_sequences(5, Some(WordPattern::P101)).count(), 42);
        let f: Vec<usize> = (1..=6).map(|n| enumerate_fishburn(n, false).unwrap().count()).collect();
        assert_eq!(f, vec![1, 2, 5, 15, 53, 217]);
        assert_eq!(enumerate_fishburn(5, true).unwrap().count(), 42);
        assert_eq!(enumerate_fishburn(1, false).unwrap().collect::<Vec<_>>(), vec![perm("1")]);
        assert!(enumerate_fishburn(10, false).is_err());
    }

    #[test]
    fn avoidance_classes_coincide() {
        for n in 0..=8 {
            let a: Vec<AscentSeq> = enumerate_ascent_sequences(n, Some(WordPattern::P101)).collect();
            let b: Vec<AscentSeq> = enumerate_ascent_sequences(n, Some(WordPattern::P0101)).collect();
            assert_eq!(a, b, "n={n}");
        }
    }

    #[test]
    fn seq_stats_examples() {
        assert_eq!(seq("0,1,0,1,3,1,1,2").asc(), 4);
        let s = seq("0,0").stats();
        assert_eq!((s.rmin, s.zero, s.lmax), (1, 2, 1));
        let s = seq("0").stats();
        assert_eq!((s.zero, s.lmax, s.rmin), (1, 1, 1));
    }

    #[test]
    fn run_examples() {
        let d = seq("00123314566744110889").rgf_runs().unwrap();
        assert_eq!(d.runs, vec![vec![0, 0, 1, 2, 3, 3], vec![4, 5, 6, 6, 7], vec![8, 8, 9]]);
        assert_eq!(d.separators, vec![vec![1], vec![4, 4, 1, 1, 0]]);
        let d = seq("0,1,0,2").rgf_runs().unwrap();
        assert_eq!(d.runs, vec![vec![0, 1], vec![2]]);
        assert_eq!(d.separators, vec![vec![0]]);
        assert_eq!(seq("0").rgf_runs().unwrap().runs, vec![vec![0]]);
        // 1 0 1 breaks the structure
        assert_eq!(seq("0,1,0,1").rgf_runs(), Err(Error::NotRgf));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(seq("0,1,0,1,3,1,1,2").delta(), vec![0, 3, 0, 1, 4, 1, 1, 2]);
        assert_eq!(seq("0").delta(), vec![0]);
        for n in 0..=7 {
            for a in enumerate_ascent_sequences(n, Some(WordPattern::P101)) {
                assert_eq!(a.delta(), a.entries());
            }
        }
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(transpose(&[0, 3, 0, 1, 4, 1, 1, 2]), perm("31764825"));
        assert_eq!(transpose(&[0, 0]), perm("21"));
        assert_eq!(transpose(&[0, 1]), perm("12"));
        assert_eq!(seq("0,1,0,1,3,1,1,2").lambda(), perm("31764825"));
        assert_eq!(seq("0").lambda(), perm("1"));
    }

    #[test]
    fn fishburn_examples() {
        assert!(perm("31764825").is_fishburn());
        assert!(!perm("2413").is_fishburn());
        assert!(perm("1").is_fishburn());
    }

    #[test]
    fn fishburn_against_definition() {
        let literal = |p: &Perm| {
            let v = p.values();
            let n = v.len();
            !(0..n).any(|i| (i + 2..n).any(|j| i + 1 < n && v[j] + 1 == v[i] && v[i] < v[i + 1]))
        };
        for n in 0..=7 {
            for p in all_perms(n) {
                assert_eq!(p.is_fishburn(), literal(&p), "{p}");
            }
        }
    }

    #[test]
    fn perm_stat_examples() {
        let p = perm("41328657");
        assert_eq!(p.idr(), 2);
        assert!(perm("3142").stats().contains3142);
        assert!(!perm("1234").stats().contains3142);
        let s = perm("1").stats();
        assert_eq!((s.lmax, s.rmin, s.idr), (1, 1, 1));
    }

    #[test]
    fn lambda_is_a_bijection_onto_fishburn() {
        for n in 0..=7 {
            let mut img: Vec<Perm> = enumerate_ascent_sequences(n, None).map(|a| a.lambda()).collect();
            assert!(img.iter().all(Perm::is_fishburn));
            img.sort();
            img.dedup();
            assert_eq!(img.len(), enumerate_fishburn(n, false).unwrap().count());
        }
    }

    #[test]
    fn all_perms_counts() {
        assert_eq!(all_perms(0).count(), 1);
        assert_eq!(all_perms(4).count(), 24);
    }
}
