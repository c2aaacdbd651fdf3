//! Θ and the gluing of nonnesting (P1-avoiding) matchings.

use crate::error::{Error, Result};
use crate::matching::Matching;

fn require_p1(m: &Matching) -> Result<()> {
    if m.is_nonnesting() {
        Ok(())
    } else {
        Err(Error::PatternViolation("P1".into()))
    }
}

/// Θ: irreducible nonnesting matching with one more arc. A new opener goes
/// in front, every closer shifts right past it, a new closer goes last, and
/// the i-th opener is paired with the i-th closer.
pub fn theta(m1: &Matching) -> Result<Matching> {
    require_p1(m1)?;
    let k = m1.size() + 1;
    let arcs = m1.arcs();
    let openers = std::iter::once(1).chain(arcs.iter().map(|a| a.opener + 1));
    let closers = arcs.iter().map(|a| a.closer + 1).chain(std::iter::once(2 * k));
    Matching::from_arcs(openers.zip(closers))
}

/// `Θ(M1) ⊕ M2`.
pub fn glue_p1(m1: &Matching, m2: &Matching) -> Result<Matching> {
    require_p1(m2)?;
    Ok(theta(m1)?.merge(m2))
}

/// Inverse of [`glue_p1`].
pub fn split_p1(m: &Matching) -> Result<(Matching, Matching)> {
    require_p1(m)?;
    if m.is_empty() {
        return Err(Error::PatternViolation("cannot split the empty matching".into()));
    }
    let k = m.blocks()[0].size();
    let first = m.restrict(&(0..k).collect::<Vec<_>>());
    let rest = m.restrict(&(k..m.size()).collect::<Vec<_>>());
    // drop the first opener and the last closer, then re-pair in order
    let word = &first.word()[1..2 * k - 1];
    let openers = word.iter().enumerate().filter(|(_, &o)| o).map(|(p, _)| p + 1);
    let closers = word.iter().enumerate().filter(|(_, &o)| !o).map(|(p, _)| p + 1);
    let m1 = Matching::from_arcs(openers.zip(closers))?;
    Ok((m1, rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::enumerate_stoimenow;

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn split_example() {
        let (m1, m2) = split_p1(&m("1-3,2-6,4-7,5-8,9-10,11-12")).unwrap();
        assert_eq!(m1, m("1-2,3-5,4-6"));
        assert_eq!(m2, m("1-2,3-4"));
        assert_eq!(glue_p1(&m1, &m2).unwrap(), m("1-3,2-6,4-7,5-8,9-10,11-12"));
    }

    #[test]
    fn theta_base_and_errors() {
        assert_eq!(theta(&Matching::empty()).unwrap(), m("1-2"));
        assert_eq!(theta(&m("1-4,2-3")), Err(Error::PatternViolation("P1".into())));
        assert!(split_p1(&Matching::empty()).is_err());
    }

    #[test]
    fn irreducible_count_and_roundtrip() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430];
        for n in 1..=9 {
            let nonnesting: Vec<Matching> = enumerate_stoimenow(n).filter(Matching::is_nonnesting).collect();
            let irreducible = nonnesting.iter().filter(|x| x.bl() == 1).count();
            assert_eq!(irreducible, catalan[n - 1], "n={n}");
            if n <= 7 {
                for x in &nonnesting {
                    let (m1, m2) = split_p1(x).unwrap();
                    assert_eq!(&glue_p1(&m1, &m2).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn theta_statistics() {
        for n in 0..=6 {
            for m1 in enumerate_stoimenow(n).filter(Matching::is_nonnesting) {
                let star = theta(&m1).unwrap();
                assert!(star.is_stoimenow());
                assert_eq!(star.bl(), 1);
                assert_eq!(star.cr(), m1.cr() + 1);
            }
        }
    }
}
