//! Φ from `P2^k`-avoiders to `P4^k`-avoiders, and its inverse.
//!
//! Both directions repeatedly locate an occurrence of the pattern to be
//! removed and move a run of consecutive openers. The matching is handled
//! as a word of endpoint tokens while openers move, then renumbered.

use crate::error::{Error, Result};
use crate::matching::{Arc, Matching};
use crate::pattern::{contains, first_occurrence, Pattern};

use super::{from_tokens, move_before, tokens};

fn patterns(k: usize) -> Result<(Pattern, Pattern)> {
    if k < 2 {
        return Err(Error::PatternViolation(format!("Φ needs k ≥ 2, got {k}")));
    }
    Ok((Pattern::family(2, k)?, Pattern::family(4, k)?))
}

fn require_avoids(m: &Matching, q: &Pattern) -> Result<()> {
    if m.is_stoimenow() && !contains(m, q) {
        Ok(())
    } else {
        Err(Error::PatternViolation(q.name.to_string()))
    }
}

fn move_cap(m: &Matching) -> usize {
    m.size() * 2 * m.size()
}

/// Openers of the run of arcs `[a ± s, b ± s]` starting at `arc`, as 0-based
/// positions in increasing order. The run stops at any arc of `occurrence`.
fn run(m: &Matching, arc: Arc, up: bool, occurrence: &[Arc]) -> Vec<usize> {
    let mut out = vec![arc.opener - 1];
    let len = 2 * m.size();
    for s in 1.. {
        let (a, b) = if up {
            (arc.opener + s, arc.closer + s)
        } else if s < arc.opener {
            (arc.opener - s, arc.closer - s)
        } else {
            break;
        };
        if b > len || !m.is_opener(a) || m.partner(a) != b || occurrence.contains(&Arc::new(a, b)) {
            break;
        }
        out.push(a - 1);
    }
    out.sort_unstable();
    out
}

/// First opener strictly between `lo` and `hi` whose closer lies right of
/// `beyond`, else `hi`; 0-based.
fn target(m: &Matching, lo: usize, hi: usize, beyond: usize) -> usize {
    (lo + 1..hi).find(|&p| m.is_opener(p) && m.partner(p) > beyond).unwrap_or(hi) - 1
}

fn phi_step(m: &Matching, occurrence: &[Arc]) -> Result<Matching> {
    let (a1, a2) = (occurrence[0], occurrence[1]);
    let moving = run(m, a2, true, occurrence);
    let before = target(m, a1.opener, a1.closer, a2.closer);
    from_tokens(&move_before(&tokens(m), &moving, before))
}

/// Φ: while a `P4^k` occurrence remains, take the lexicographically first
/// one `A1, A2, ...`, extend `A2` to its run of consecutive crossing arcs,
/// and move their openers just before the first opener inside `A1` that
/// closes right of `A2`, or before the closer of `A1`. The run never takes in
/// another arc of the occurrence, which can only happen for `k ≤ 3`.
pub fn phi(m: &Matching, k: usize) -> Result<Matching> {
    let (p2, p4) = patterns(k)?;
    require_avoids(m, &p2)?;
    let cap = move_cap(m);
    let mut cur = m.clone();
    for _ in 0..=cap {
        let Some(occ) = first_occurrence(&cur, &p4.matching) else {
            return Ok(cur);
        };
        let arcs = cur.arcs();
        let occurrence: Vec<Arc> = occ.iter().map(|&i| arcs[i]).collect();
        cur = phi_step(&cur, &occurrence)?;
    }
    Err(Error::IterationCapExceeded(cap))
}

/// Occurrence of the `k`-chain choosing the rightmost last closer, then the
/// rightmost closer before it, and so on; arcs returned left to right.
fn rightmost_chain(m: &Matching, chain: &Matching) -> Option<Vec<Arc>> {
    let rev = m.reverse();
    let occ = first_occurrence(&rev, chain)?;
    let len = 2 * m.size() + 1;
    let rev_arcs = rev.arcs();
    let mut out: Vec<Arc> = occ.iter().map(|&i| Arc::new(len - rev_arcs[i].closer, len - rev_arcs[i].opener)).collect();
    out.reverse();
    Some(out)
}

/// Φ⁻¹: while a `k`-chain remains, take the rightmost one `A1, A2, ...`,
/// extend `A2` downward to its run of consecutive crossing arcs, and move
/// their openers just before the first opener between `A1`'s closer and
/// `A3`'s opener that closes right of `A2`, or before `A3`'s opener. For
/// `k = 2` the closer of `A2` stands in for the opener of `A3`.
pub fn phi_inverse(m: &Matching, k: usize) -> Result<Matching> {
    let (p2, p4) = patterns(k)?;
    require_avoids(m, &p4)?;
    let cap = move_cap(m);
    let mut cur = m.clone();
    for _ in 0..=cap {
        let Some(chain) = rightmost_chain(&cur, &p2.matching) else {
            return Ok(cur);
        };
        let (a1, a2) = (chain[0], chain[1]);
        let stop = chain.get(2).map_or(a2.closer, |a3| a3.opener);
        let moving = run(&cur, a2, false, &chain);
        let before = target(&cur, a1.closer, stop, a2.closer);
        cur = from_tokens(&move_before(&tokens(&cur), &moving, before))?;
    }
    Err(Error::IterationCapExceeded(cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::enumerate_avoiding;
    use std::collections::HashSet;

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let input = m("1-3,2-10,4-7,5-8,6-11,9-12,13-16,14-18,15-21,17-19,20-22");
        let want = m("1-7,2-9,3-10,4-12,5-16,6-18,8-13,11-14,15-21,17-19,20-22");
        let got = phi(&input, 4).unwrap();
        assert_eq!(got, want);
        assert_eq!(phi_inverse(&got, 4).unwrap(), input);
    }

    #[test]
    fn fixed_points_and_errors() {
        let x = m("1-2,3-4");
        assert_eq!(phi(&x, 4).unwrap(), x);
        assert!(phi(&Pattern::p2().matching, 4).is_err());
        assert!(phi_inverse(&Pattern::p4().matching, 4).is_err());
        assert!(phi(&x, 1).is_err());
    }

    #[test]
    fn bijective_for_small_k() {
        for k in 2..=6 {
            let (p2, p4) = patterns(k).unwrap();
            for n in 0..=6 {
                let dom: Vec<Matching> = enumerate_avoiding(n, &p2).collect();
                let cod: HashSet<Matching> = enumerate_avoiding(n, &p4).collect();
                let img: HashSet<Matching> = dom.iter().map(|x| phi(x, k).unwrap()).collect();
                assert_eq!(img, cod, "k={k} n={n}");
                for x in &dom {
                    let y = phi(x, k).unwrap();
                    assert!(y.is_stoimenow());
                    assert_eq!(&phi_inverse(&y, k).unwrap(), x, "k={k} {x}");
                }
            }
        }
    }
}
