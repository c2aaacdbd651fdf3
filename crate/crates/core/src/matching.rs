//! Perfect matchings of `{1..2n}` and Stoimenow matchings.
//!
//! A [`Matching`] stores a partner array over 0-based positions; every public
//! accessor speaks in the 1-based positions used by the text format
//! (`"1-3,2-4"`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, BitGraph, MAX_VERTICES};

/// One arc `[opener, closer]`, 1-based, `opener < closer`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub opener: usize,
    pub closer: usize,
}

impl Arc {
    pub fn new(opener: usize, closer: usize) -> Self {
        Arc { opener, closer }
    }
}

/// How an arc relates to a later-opening arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcRelation {
    /// `a_i < a_j < b_i < b_j`
    Crossing,
    /// `a_i < a_j < b_j < b_i`
    Nesting,
    /// `b_i < a_j`
    Disjoint,
}

impl ArcRelation {
    /// Classify `first` against `second`; `first` must open earlier.
    pub fn of(first: Arc, second: Arc) -> ArcRelation {
        debug_assert!(first.opener < second.opener);
        if first.closer < second.opener {
            ArcRelation::Disjoint
        } else if first.closer < second.closer {
            ArcRelation::Crossing
        } else {
            ArcRelation::Nesting
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Matching {
    partner: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MatchingJson {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching::default()
    }

    /// Build from 1-based arcs given in any order.
    pub fn from_arcs<I>(arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        let len = 2 * arcs.len();
        let mut partner = vec![usize::MAX; len];
        for &(a, b) in &arcs {
            if a == b {
                return Err(Error::DuplicatePosition(a));
            }
            if a > b {
                return Err(Error::OpenerAfterCloser(a, b));
            }
            for p in [a, b] {
                if p == 0 || p > len {
                    return Err(Error::NotPerfect);
                }
                if partner[p - 1] != usize::MAX {
                    return Err(Error::DuplicatePosition(p));
                }
            }
            partner[a - 1] = b - 1;
            partner[b - 1] = a - 1;
        }
        Ok(Matching { partner })
    }

    /// Build from a word of arc labels, each label occurring exactly twice.
    /// The first occurrence of a label is its opener.
    pub fn from_labels(word: &[usize]) -> Result<Self> {
        if !word.len().is_multiple_of(2) {
            return Err(Error::NotPerfect);
        }
        let max = word.iter().copied().max().map_or(0, |m| m + 1);
        let mut first = vec![usize::MAX; max];
        let mut partner = vec![usize::MAX; word.len()];
        for (p, &label) in word.iter().enumerate() {
            let q = first[label];
            if q == usize::MAX {
                first[label] = p;
            } else {
                if partner[q] != usize::MAX {
                    return Err(Error::NotPerfect);
                }
                partner[q] = p;
                partner[p] = q;
            }
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::NotPerfect);
        }
        Ok(Matching { partner })
    }

    /// Number of arcs.
    pub fn size(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    /// Partner of 1-based position `p`.
    pub fn partner(&self, p: usize) -> usize {
        self.partner[p - 1] + 1
    }

    pub fn is_opener(&self, p: usize) -> bool {
        self.partner[p - 1] > p - 1
    }

    /// Arcs sorted by opener.
    pub fn arcs(&self) -> Vec<Arc> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(p, &q)| q > p)
            .map(|(p, &q)| Arc::new(p + 1, q + 1))
            .collect()
    }

    /// Opener/closer word, `true` for openers.
    pub fn word(&self) -> Vec<bool> {
        self.partner.iter().enumerate().map(|(p, &q)| q > p).collect()
    }

    /// Labels word: arc index (by opener order) at every position.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.partner.len()];
        let mut next = 0;
        for p in 0..self.partner.len() {
            let q = self.partner[p];
            if q > p {
                out[p] = next;
                out[q] = next;
                next += 1;
            }
        }
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: MatchingJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            what: "matching JSON",
            detail: e.to_string(),
        })?;
        if raw.arcs.len() != raw.n {
            return Err(Error::NotPerfect);
        }
        Matching::from_arcs(raw.arcs.into_iter().map(|[a, b]| (a, b)))
    }

    pub fn to_json(&self) -> String {
        let raw = MatchingJson {
            n: self.size(),
            arcs: self.arcs().into_iter().map(|a| [a.opener, a.closer]).collect(),
        };
        serde_json::to_string(&raw).expect("matching serializes")
    }

    /// No Type I pair (nested arcs with adjacent openers) and no Type II pair
    /// (nested arcs with adjacent closers).
    pub fn is_stoimenow(&self) -> bool {
        let len = self.partner.len();
        for p in 0..len.saturating_sub(1) {
            let (q, r) = (self.partner[p], self.partner[p + 1]);
            // Type I: openers at p, p+1 with the inner arc closing first
            if q > p && r > p + 1 && r < q {
                return false;
            }
            // Type II: closers at p, p+1 with the inner arc opening later
            if q < p && r < p + 1 && r < q {
                return false;
            }
        }
        true
    }

    pub fn is_nonnesting(&self) -> bool {
        let arcs = self.arcs();
        // nonnesting iff closers are in the same order as openers
        arcs.windows(2).all(|w| w[0].closer < w[1].closer)
    }

    /// `M1 ⊕ M2`: `other` shifted right by `2 * self.size()`.
    pub fn merge(&self, other: &Matching) -> Matching {
        let shift = self.partner.len();
        let mut partner = self.partner.clone();
        partner.extend(other.partner.iter().map(|&q| q + shift));
        Matching { partner }
    }

    /// Split at every balanced prefix into irreducible blocks.
    pub fn blocks(&self) -> Vec<Matching> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut depth = 0isize;
        for p in 0..self.partner.len() {
            depth += if self.partner[p] > p { 1 } else { -1 };
            if depth == 0 {
                let partner = self.partner[start..=p].iter().map(|&q| q - start).collect();
                out.push(Matching { partner });
                start = p + 1;
            }
        }
        out
    }

    /// Number of irreducible blocks.
    pub fn bl(&self) -> usize {
        let mut depth = 0isize;
        let mut count = 0;
        for p in 0..self.partner.len() {
            depth += if self.partner[p] > p { 1 } else { -1 };
            if depth == 0 {
                count += 1;
            }
        }
        count
    }

    /// Mirror image: position `p` goes to `2n + 1 - p`.
    pub fn reverse(&self) -> Matching {
        let len = self.partner.len();
        let partner = (0..len).map(|p| len - 1 - self.partner[len - 1 - p]).collect();
        Matching { partner }
    }

    /// Sub-matching on the given arc indices (opener order), renormalized.
    pub fn restrict(&self, arc_indices: &[usize]) -> Matching {
        let arcs = self.arcs();
        let mut keep = vec![false; self.partner.len()];
        for &i in arc_indices {
            keep[arcs[i].opener - 1] = true;
            keep[arcs[i].closer - 1] = true;
        }
        let labels = self.labels();
        let word: Vec<usize> = (0..self.partner.len()).filter(|&p| keep[p]).map(|p| labels[p]).collect();
        Matching::from_labels(&word).expect("restriction of a matching is a matching")
    }

    fn check_bitmask_bound(&self) -> Result<()> {
        if self.size() > MAX_VERTICES {
            Err(Error::TooLarge { size: self.size(), bound: MAX_VERTICES })
        } else {
            Ok(())
        }
    }

    /// Graph on arcs (opener order) with an edge for every crossing pair.
    pub fn crossing_graph(&self) -> Result<BitGraph> {
        self.check_bitmask_bound()?;
        let arcs = self.arcs();
        let mut g = BitGraph::new(arcs.len());
        for i in 0..arcs.len() {
            for j in i + 1..arcs.len() {
                if ArcRelation::of(arcs[i], arcs[j]) == ArcRelation::Crossing {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Largest k such that the matching contains a k-crossing.
    pub fn cr(&self) -> usize {
        self.crossing_graph().map(|g| g.clique_number()).unwrap_or_else(|_| {
            // too many arcs for a bitmask: a k-crossing is a set of arcs that
            // all contain one common point, so scan the depth profile
            self.word()
                .iter()
                .scan(0usize, |d, &o| {
                    if o {
                        *d += 1;
                    } else {
                        *d -= 1;
                    }
                    Some(*d)
                })
                .max()
                .unwrap_or(0)
                .min(self.size())
        })
    }

    /// Largest k such that the matching contains a k-noncrossing.
    pub fn nr(&self) -> usize {
        let arcs = self.arcs();
        let mut longest = vec![0usize; arcs.len()];
        for j in 0..arcs.len() {
            longest[j] = 1 + (0..j)
                .filter(|&i| arcs[i].closer < arcs[j].opener)
                .map(|i| longest[i])
                .max()
                .unwrap_or(0);
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// Inclusion-maximal sets of pairwise crossing arcs, as masks over arc
    /// indices (opener order), sorted increasingly.
    pub fn maximal_crossings(&self) -> Result<Vec<u64>> {
        let mut out = self.crossing_graph()?.maximal_cliques();
        out.sort_unstable();
        Ok(out)
    }

    /// Number of maximal crossings.
    pub fn mcr(&self) -> Result<usize> {
        Ok(self.maximal_crossings()?.len())
    }

    /// Size of the first maximal crossing: the number of openers before the
    /// first closer.
    pub fn fcr(&self) -> usize {
        self.partner.iter().enumerate().take_while(|&(p, &q)| q > p).count()
    }

    /// For each arc, the mask of arcs whose closers precede its opener.
    pub fn downset_signatures(&self) -> Result<Vec<u64>> {
        self.check_bitmask_bound()?;
        let arcs = self.arcs();
        Ok(arcs
            .iter()
            .map(|a| {
                arcs.iter()
                    .enumerate()
                    .filter(|(_, b)| b.closer < a.opener)
                    .fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .collect())
    }

    /// Arc indices of a mask, for display.
    pub fn arcs_of_mask(&self, mask: u64) -> Vec<Arc> {
        let arcs = self.arcs();
        bits(mask).map(|i| arcs[i]).collect()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.arcs().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}-{}", a.opener, a.closer)?;
        }
        Ok(())
    }
}

impl FromStr for Matching {
    type Err = Error;

    /// Arc list such as `"1-3,2-4"`; commas and whitespace both separate.
    fn from_str(text: &str) -> Result<Self> {
        let mut arcs = Vec::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let bad = || Error::Parse { what: "arc", detail: tok.to_string() };
            let (a, b) = tok.split_once('-').ok_or_else(bad)?;
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            arcs.push((a, b));
        }
        Matching::from_arcs(arcs)
    }
}

/// Parse an arc-list string.
pub fn parse_matching(text: &str) -> Result<Matching> {
    text.parse()
}

/// Lazy enumeration of all Stoimenow matchings with `n` arcs.
///
/// The opener/closer word is built left to right. At each position the
/// choices are tried in the order "close the open arc with the smallest
/// opener", ..., "close the open arc with the largest opener", "open a new
/// arc", so the output is lexicographic in the word with closer before
/// opener. Type I and Type II pairs are rejected as soon as the inner arc's
/// closer is placed.
pub struct StoimenowIter {
    n: usize,
    partner: Vec<usize>,
    /// Openers of arcs not yet closed, increasing.
    open: Vec<usize>,
    opened: usize,
    /// Choice index tried at each filled position.
    choices: Vec<usize>,
    started: bool,
    done: bool,
}

pub fn enumerate_stoimenow(n: usize) -> StoimenowIter {
    StoimenowIter {
        n,
        partner: vec![usize::MAX; 2 * n],
        open: Vec::with_capacity(n),
        opened: 0,
        choices: Vec::with_capacity(2 * n),
        started: false,
        done: false,
    }
}

impl StoimenowIter {
    fn num_choices(&self) -> usize {
        self.open.len() + usize::from(self.opened < self.n)
    }

    /// Try to apply choice `c` at the next position; false if it is pruned.
    fn apply(&mut self, c: usize) -> bool {
        let p = self.choices.len();
        if c < self.open.len() {
            let o = self.open[c];
            // Type I: the arc opened just before `o` is still open and will
            // close later
            if c > 0 && self.open[c - 1] + 1 == o {
                return false;
            }
            // Type II: previous position closed an arc nested inside this one
            if p > 0 {
                let q = self.partner[p - 1];
                if q < p - 1 && q > o {
                    return false;
                }
            }
            self.open.remove(c);
            self.partner[o] = p;
            self.partner[p] = o;
        } else {
            self.open.push(p);
            self.opened += 1;
            self.partner[p] = usize::MAX;
        }
        self.choices.push(c);
        true
    }

    fn undo(&mut self) -> usize {
        let c = self.choices.pop().expect("undo on empty stack");
        let p = self.choices.len();
        let q = self.partner[p];
        if q == usize::MAX || q > p {
            // was an opener
            self.open.pop();
            self.opened -= 1;
        } else {
            self.open.insert(c, q);
            self.partner[q] = usize::MAX;
        }
        self.partner[p] = usize::MAX;
        c
    }

    /// Extend from the current state with the smallest valid choices, starting
    /// at choice `from` for the next position. Returns true on a full word.
    fn descend(&mut self, mut from: usize) -> bool {
        loop {
            if self.choices.len() == 2 * self.n {
                return true;
            }
            let k = self.num_choices();
            let mut placed = false;
            for c in from..k {
                if self.apply(c) {
                    placed = true;
                    break;
                }
            }
            if placed {
                from = 0;
                continue;
            }
            // dead end: backtrack
            loop {
                if self.choices.is_empty() {
                    return false;
                }
                let c = self.undo();
                if c + 1 < self.num_choices() {
                    from = c + 1;
                    break;
                }
            }
        }
    }
}

impl Iterator for StoimenowIter {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.descend(0)
        } else if self.choices.is_empty() {
            false
        } else {
            let c = self.undo();
            self.descend(c + 1)
        };
        if found {
            Some(Matching { partner: self.partner.clone() })
        } else {
            self.done = true;
            None
        }
    }
}
