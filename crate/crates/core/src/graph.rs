//! Bitmask graphs on at most 64 vertices.

/// Undirected simple graph stored as one adjacency mask per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitGraph {
    adj: Vec<u64>,
}

pub const MAX_VERTICES: usize = 64;

impl BitGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "BitGraph supports at most 64 vertices");
        BitGraph { adj: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    fn all(&self) -> u64 {
        full_mask(self.adj.len())
    }

    /// All inclusion-maximal cliques, as vertex masks, in the order
    /// Bron-Kerbosch (with pivoting) reports them. The empty graph has none.
    pub fn maximal_cliques(&self) -> Vec<u64> {
        let mut out = Vec::new();
        if !self.is_empty() {
            self.bron_kerbosch(0, self.all(), 0, &mut out);
        }
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = lowest(p | x);
        let mut cand = p & !self.adj[pivot];
        while cand != 0 {
            let v = lowest(cand);
            let bit = 1u64 << v;
            cand &= !bit;
            self.bron_kerbosch(r | bit, p & self.adj[v], x & self.adj[v], out);
            p &= !bit;
            x |= bit;
        }
    }

    /// Size of a largest clique.
    pub fn clique_number(&self) -> usize {
        let mut best = 0;
        self.max_clique_rec(0, self.all(), &mut best);
        best
    }

    fn max_clique_rec(&self, size: usize, mut p: u64, best: &mut usize) {
        if p == 0 {
            *best = (*best).max(size);
            return;
        }
        while p != 0 {
            if size + p.count_ones() as usize <= *best {
                return;
            }
            let v = lowest(p);
            p &= !(1 << v);
            self.max_clique_rec(size + 1, p & self.adj[v], best);
        }
    }

    /// Connected components as vertex masks, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = lowest(frontier);
                frontier &= !(1 << v);
                let new = self.adj[v] & !comp;
                comp |= new;
                frontier |= new;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn lowest(mask: u64) -> usize {
    mask.trailing_zeros() as usize
}

/// Iterate the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = lowest(mask);
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_maximal_cliques(g: &BitGraph) -> Vec<u64> {
        let n = g.len();
        let is_clique = |m: u64| bits(m).all(|v| (m & !(1 << v)) & !g.neighbours(v) == 0);
        let cliques: Vec<u64> = (1..1u64 << n).filter(|&m| is_clique(m)).collect();
        let mut maximal: Vec<u64> = cliques
            .iter()
            .copied()
            .filter(|&c| !cliques.iter().any(|&d| d != c && d & c == c))
            .collect();
        maximal.sort();
        maximal
    }

    #[test]
    fn path_graph() {
        let mut g = BitGraph::new(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        let mut cl = g.maximal_cliques();
        cl.sort();
        assert_eq!(cl, vec![0b011, 0b110]);
        assert_eq!(g.clique_number(), 2);
        assert_eq!(g.components(), vec![0b111]);
    }

    #[test]
    fn all_small_graphs_against_brute_force() {
        // every graph on 5 vertices
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for edges in 0..1u32 << pairs.len() {
            let mut g = BitGraph::new(5);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if edges >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            let mut cl = g.maximal_cliques();
            cl.sort();
            let brute = brute_maximal_cliques(&g);
            assert_eq!(cl, brute);
            let best = brute.iter().map(|c| c.count_ones() as usize).max().unwrap();
            assert_eq!(g.clique_number(), best);
        }
    }

    #[test]
    fn empty_graph() {
        let g = BitGraph::new(0);
        assert!(g.maximal_cliques().is_empty());
        assert_eq!(g.clique_number(), 0);
        assert!(g.components().is_empty());
    }
}
