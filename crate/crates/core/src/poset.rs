//! Finite posets on at most 64 elements, with the extra structure of
//! (2+2)-free posets: levels, magnitude and a complete invariant.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, BitGraph, MAX_VERTICES};
use crate::matching::{enumerate_stoimenow, Matching};

/// Strict partial order stored as bitmasks: `below[x]` holds every `y < x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    below: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    relations: Vec<[usize; 2]>,
}

/// Sorted multiset of `(down level, up level)` pairs. For (2+2)-free posets
/// two keys are equal iff the posets are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<(usize, usize)>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct PosetStats {
    /// Number of distinct strict down-sets.
    pub mag: usize,
    /// Number of minimal elements.
    pub min: usize,
    /// Height: size of a largest chain.
    pub h: usize,
    /// Width: size of a largest antichain.
    pub w: usize,
    /// Size of a shortest maximal chain.
    pub smc: usize,
    /// Number of summands in the ordinal sum decomposition.
    pub ssd: usize,
}

impl Poset {
    pub fn empty() -> Self {
        Poset { below: Vec::new() }
    }

    /// From `(lower, upper)` pairs over elements `0..n`; the transitive
    /// closure is taken.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { size: n, bound: MAX_VERTICES });
        }
        let mut below = vec![0u64; n];
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::Parse { what: "poset", detail: format!("element out of range in {a}<{b}") });
            }
            below[b] |= 1 << a;
        }
        // Warshall
        for k in 0..n {
            for x in 0..n {
                if below[x] >> k & 1 == 1 {
                    below[x] |= below[k];
                }
            }
        }
        if (0..n).any(|x| below[x] >> x & 1 == 1) {
            return Err(Error::NotAnOrder);
        }
        Ok(Poset { below })
    }

    pub fn chain(n: usize) -> Self {
        Poset { below: (0..n).map(full_mask).collect() }
    }

    pub fn antichain(n: usize) -> Self {
        Poset { below: vec![0; n] }
    }

    /// `3+1`: a three-element chain and an isolated point.
    pub fn three_plus_one() -> Self {
        Poset::from_relations(4, &[(0, 1), (1, 2)]).expect("3+1")
    }

    /// `N` on `a, b, c, d` = `0, 1, 2, 3` with `a<c, a<d, b<d`.
    pub fn n_poset() -> Self {
        Poset::from_relations(4, &[(0, 2), (0, 3), (1, 3)]).expect("N")
    }

    /// `2+2`: two disjoint two-element chains.
    pub fn two_plus_two() -> Self {
        Poset::from_relations(4, &[(0, 1), (2, 3)]).expect("2+2")
    }

    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.below[y] >> x & 1 == 1
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.less(x, y) || self.less(y, x)
    }

    pub fn down_set(&self, x: usize) -> u64 {
        self.below[x]
    }

    pub fn up_set(&self, x: usize) -> u64 {
        (0..self.len()).filter(|&y| self.less(x, y)).fold(0, |m, y| m | 1 << y)
    }

    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|y| bits(self.below[y]).map(move |x| (x, y))).collect()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PosetJson = serde_json::from_str(text)
            .map_err(|e| Error::Parse { what: "poset JSON", detail: e.to_string() })?;
        let rel: Vec<(usize, usize)> = raw.relations.into_iter().map(|[a, b]| (a, b)).collect();
        Poset::from_relations(raw.n, &rel)
    }

    /// `{"n":k,"relations":[[i,j],...]}` with 0-based elements and `i < j`
    /// meaning `i` lies below `j`; every relation of the order is listed.
    pub fn to_json(&self) -> String {
        let raw = PosetJson { n: self.len(), relations: self.relations().into_iter().map(|(a, b)| [a, b]).collect() };
        serde_json::to_string(&raw).expect("poset serializes")
    }

    /// Poset of arcs with `p_i < p_j` iff arc `i` closes before arc `j` opens.
    pub fn omega(m: &Matching) -> Result<Self> {
        if m.size() > MAX_VERTICES {
            return Err(Error::TooLarge { size: m.size(), bound: MAX_VERTICES });
        }
        let arcs = m.arcs();
        let below = arcs
            .iter()
            .map(|a| {
                arcs.iter().enumerate().filter(|(_, b)| b.closer < a.opener).fold(0u64, |s, (i, _)| s | 1 << i)
            })
            .collect();
        Ok(Poset { below })
    }

    /// Distinct strict down-sets sorted by size; `None` unless they form a
    /// chain under inclusion.
    fn down_chain(&self) -> Option<Vec<u64>> {
        let mut sets: Vec<u64> = self.below.clone();
        sets.sort_by_key(|s| (s.count_ones(), *s));
        sets.dedup();
        sets.windows(2).all(|w| w[0] & !w[1] == 0).then_some(sets)
    }

    pub fn is_22_free(&self) -> bool {
        self.down_chain().is_some()
    }

    /// Level of each element: index of its strict down-set in the inclusion
    /// chain `D_0 ⊂ D_1 ⊂ ...`.
    pub fn down_levels(&self) -> Result<Vec<usize>> {
        let chain = self.down_chain().ok_or(Error::Not22Free)?;
        Ok(self.below.iter().map(|d| chain.binary_search_by_key(&(d.count_ones(), *d), |s| (s.count_ones(), *s)).unwrap()).collect())
    }

    /// Index of each element's strict up-set in the inclusion chain of
    /// up-sets, starting from the empty up-set at 0.
    pub fn up_levels(&self) -> Result<Vec<usize>> {
        self.dual().down_levels()
    }

    pub fn dual(&self) -> Poset {
        let below = (0..self.len()).map(|x| self.up_set(x)).collect();
        Poset { below }
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        let d = self.down_levels()?;
        let u = self.up_levels()?;
        let mut pairs: Vec<(usize, usize)> = d.into_iter().zip(u).collect();
        pairs.sort_unstable();
        Ok(CanonicalForm(pairs))
    }

    /// Number of distinct strict down-sets.
    pub fn magnitude(&self) -> usize {
        let mut sets = self.below.clone();
        sets.sort_unstable();
        sets.dedup();
        sets.len()
    }

    pub fn minimal_elements(&self) -> u64 {
        (0..self.len()).filter(|&x| self.below[x] == 0).fold(0, |m, x| m | 1 << x)
    }

    pub fn maximal_elements(&self) -> u64 {
        (0..self.len()).filter(|&x| self.up_set(x) == 0).fold(0, |m, x| m | 1 << x)
    }

    /// Elements in an order compatible with the poset (by down-set size).
    fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.below[x].count_ones(), x));
        order
    }

    pub fn height(&self) -> usize {
        let mut longest = vec![0usize; self.len()];
        for x in self.linear_extension() {
            longest[x] = 1 + bits(self.below[x]).map(|y| longest[y]).max().unwrap_or(0);
        }
        longest.into_iter().max().unwrap_or(0)
    }

    fn incomparability_graph(&self) -> BitGraph {
        let n = self.len();
        let mut g = BitGraph::new(n);
        for x in 0..n {
            for y in x + 1..n {
                if !self.comparable(x, y) {
                    g.add_edge(x, y);
                }
            }
        }
        g
    }

    pub fn width(&self) -> usize {
        self.incomparability_graph().clique_number()
    }

    /// `y` covers `x`.
    fn covers(&self, x: usize, y: usize) -> bool {
        self.less(x, y) && self.below[y] & self.up_set(x) == 0
    }

    /// Size of a shortest maximal chain. Maximal chains are exactly the
    /// cover paths from a minimal to a maximal element.
    pub fn shortest_maximal_chain(&self) -> usize {
        let n = self.len();
        if n == 0 {
            return 0;
        }
        let maximal = self.maximal_elements();
        let mut dist = vec![usize::MAX; n];
        for x in self.linear_extension() {
            if self.below[x] == 0 {
                dist[x] = 1;
            } else {
                dist[x] = bits(self.below[x])
                    .filter(|&y| self.covers(y, x))
                    .map(|y| dist[y] + 1)
                    .min()
                    .expect("non-minimal element covers something");
            }
        }
        bits(maximal).map(|x| dist[x]).min().expect("finite poset has maximal elements")
    }

    /// Summands of the ordinal sum decomposition, bottom first, as element
    /// masks. They are the connected components of the incomparability graph.
    pub fn ordinal_summands(&self) -> Vec<u64> {
        let mut comps = self.incomparability_graph().components();
        comps.sort_by_key(|&c| bits(c).map(|x| self.below[x].count_ones()).min());
        comps
    }

    pub fn stats(&self) -> PosetStats {
        PosetStats {
            mag: self.magnitude(),
            min: self.minimal_elements().count_ones() as usize,
            h: self.height(),
            w: self.width(),
            smc: self.shortest_maximal_chain(),
            ssd: self.ordinal_summands().len(),
        }
    }

    /// Induced subposet on the elements of `mask`, relabeled in increasing
    /// element order.
    pub fn induced(&self, mask: u64) -> Poset {
        let elems: Vec<usize> = bits(mask).collect();
        self.induced_on(&elems)
    }

    /// Induced subposet on `elems`, element `i` of the result being `elems[i]`.
    pub fn induced_on(&self, elems: &[usize]) -> Poset {
        let below = elems
            .iter()
            .map(|&y| elems.iter().enumerate().filter(|&(_, &x)| self.less(x, y)).fold(0u64, |m, (i, _)| m | 1 << i))
            .collect();
        Poset { below }
    }

    /// `self ⊕ other`: every element of `self` below every element of `other`.
    pub fn ordinal_sum(&self, other: &Poset) -> Poset {
        let k = self.len();
        let all_self = full_mask(k);
        let mut below = self.below.clone();
        below.extend(other.below.iter().map(|&b| (b << k) | all_self));
        Poset { below }
    }

    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let k = self.len();
        let mut below = self.below.clone();
        below.extend(other.below.iter().map(|&b| b << k));
        Poset { below }
    }

    /// Some subset of elements induces a copy of `q`: relations and
    /// incomparabilities both have to match.
    pub fn contains_induced(&self, q: &Poset) -> bool {
        let k = q.len();
        if k > self.len() {
            return false;
        }
        let mut image = Vec::with_capacity(k);
        self.embed_rec(q, &mut image, 0)
    }

    fn embed_rec(&self, q: &Poset, image: &mut Vec<usize>, used: u64) -> bool {
        let t = image.len();
        if t == q.len() {
            return true;
        }
        for x in 0..self.len() {
            if used >> x & 1 == 1 {
                continue;
            }
            let ok = image.iter().enumerate().all(|(s, &y)| q.less(s, t) == self.less(y, x) && q.less(t, s) == self.less(x, y));
            if ok {
                image.push(x);
                if self.embed_rec(q, image, used | 1 << x) {
                    return true;
                }
                image.pop();
            }
        }
        false
    }

    /// Brute-force isomorphism test, for checking canonical forms.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.len() == other.len() && self.contains_induced(other)
    }

    /// Relabel so that new element `i` is old element `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Poset {
        self.induced_on(order)
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{n={}:", self.len())?;
        for (i, (a, b)) in self.relations().into_iter().enumerate() {
            write!(f, "{}{a}<{b}", if i == 0 { " " } else { ", " })?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InducedPattern {
    ThreePlusOne,
    N,
}

impl InducedPattern {
    pub fn poset(self) -> Poset {
        match self {
            InducedPattern::ThreePlusOne => Poset::three_plus_one(),
            InducedPattern::N => Poset::n_poset(),
        }
    }
}

impl fmt::Display for InducedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InducedPattern::ThreePlusOne => "3+1",
            InducedPattern::N => "N",
        })
    }
}

impl std::str::FromStr for InducedPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "3+1" | "3plus1" => Ok(InducedPattern::ThreePlusOne),
            "N" => Ok(InducedPattern::N),
            other => Err(Error::Parse { what: "poset pattern", detail: other.to_string() }),
        }
    }
}

/// (2+2)-free posets on `n` elements up to isomorphism, as images of
/// Stoimenow matchings deduplicated by canonical form, in first-seen order.
pub fn enumerate_posets(n: usize, avoid: Option<InducedPattern>) -> Result<Vec<Poset>> {
    if n > 11 {
        return Err(Error::TooLarge { size: n, bound: 11 });
    }
    let pattern = avoid.map(InducedPattern::poset);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in enumerate_stoimenow(n) {
        let p = Poset::omega(&m)?;
        if seen.insert(p.canonical_form()?) {
            if pattern.as_ref().is_some_and(|q| p.contains_induced(q)) {
                continue;
            }
            out.push(p);
        }
    }
    Ok(out)
}
