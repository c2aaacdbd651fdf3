//! Dyck paths and the map Γ onto nonnesting matchings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matching::Matching;

/// A Dyck path as a word of up (`true`) and down (`false`) steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DyckPath {
    steps: Vec<bool>,
}

impl DyckPath {
    pub fn new(steps: Vec<bool>) -> Result<Self> {
        let mut h = 0isize;
        for &up in &steps {
            h += if up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidDyckPath);
            }
        }
        if h != 0 {
            return Err(Error::InvalidDyckPath);
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    /// Semilength.
    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    /// Maximum height reached.
    pub fn height(&self) -> usize {
        let mut h = 0usize;
        let mut best = 0;
        for &up in &self.steps {
            if up {
                h += 1;
                best = best.max(h);
            } else {
                h -= 1;
            }
        }
        best
    }

    /// `μ = U μ1 D μ2` at the first return to the axis; `None` for the
    /// empty path.
    pub fn first_return(&self) -> Option<(DyckPath, DyckPath)> {
        let mut h = 0isize;
        for (i, &up) in self.steps.iter().enumerate() {
            h += if up { 1 } else { -1 };
            if h == 0 {
                let inner = DyckPath { steps: self.steps[1..i].to_vec() };
                let rest = DyckPath { steps: self.steps[i + 1..].to_vec() };
                return Some((inner, rest));
            }
        }
        None
    }

    /// Γ: pair the i-th up step with the i-th down step.
    pub fn gamma(&self) -> Matching {
        let ups = self.steps.iter().enumerate().filter(|(_, &u)| u).map(|(p, _)| p + 1);
        let downs = self.steps.iter().enumerate().filter(|(_, &u)| !u).map(|(p, _)| p + 1);
        Matching::from_arcs(ups.zip(downs)).expect("Dyck path pairs into a matching")
    }

    /// Γ⁻¹: openers become up steps, closers down steps.
    pub fn gamma_inverse(m: &Matching) -> Result<DyckPath> {
        if !m.is_nonnesting() {
            return Err(Error::NotNonnesting);
        }
        Ok(DyckPath { steps: m.word() })
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.steps.iter().map(|&u| if u { 'U' } else { 'D' }).collect();
        f.write_str(&s)
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'U' | 'u' => Ok(true),
                'D' | 'd' => Ok(false),
                other => Err(Error::Parse { what: "Dyck path", detail: other.to_string() }),
            })
            .collect::<Result<Vec<bool>>>()?;
        DyckPath::new(steps)
    }
}

/// All Dyck paths of semilength `n`, with `U` ordered before `D`.
pub fn enumerate_dyck(n: usize) -> Vec<DyckPath> {
    fn rec(cur: &mut Vec<bool>, ups: usize, downs: usize, n: usize, out: &mut Vec<DyckPath>) {
        if downs == n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if ups < n {
            cur.push(true);
            rec(cur, ups + 1, downs, n, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(false);
            rec(cur, ups, downs + 1, n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(2 * n), 0, 0, n, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::enumerate_stoimenow;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_examples() {
        let mu = path("UUDUUDDDUDUD");
        assert_eq!(mu.gamma().to_string(), "1-3,2-6,4-7,5-8,9-10,11-12");
        assert_eq!(path("UD").gamma().to_string(), "1-2");
        assert_eq!(mu.height(), 3);
        assert_eq!(mu.gamma().cr(), 3);
        assert_eq!(DyckPath::gamma_inverse(&mu.gamma()).unwrap(), mu);
        assert_eq!(DyckPath::gamma_inverse(&"1-4,2-3".parse().unwrap()), Err(Error::NotNonnesting));
    }

    #[test]
    fn parse_rejects_bad_paths() {
        assert_eq!("DU".parse::<DyckPath>(), Err(Error::InvalidDyckPath));
        assert_eq!("UUD".parse::<DyckPath>(), Err(Error::InvalidDyckPath));
        assert!("UXD".parse::<DyckPath>().is_err());
        assert_eq!("".parse::<DyckPath>().unwrap().size(), 0);
    }

    #[test]
    fn counts_are_catalan() {
        let c: Vec<usize> = (0..=10).map(|n| enumerate_dyck(n).len()).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
    }

    #[test]
    fn height_distribution_n3() {
        let mut h = [0usize; 4];
        for p in enumerate_dyck(3) {
            h[p.height()] += 1;
        }
        assert_eq!(h, [0, 1, 3, 1]);
        assert_eq!(path("UD").height(), 1);
    }

    #[test]
    fn height_recurrence() {
        for n in 1..=8 {
            for p in enumerate_dyck(n) {
                let (inner, rest) = p.first_return().unwrap();
                assert_eq!(p.height(), (inner.height() + 1).max(rest.height()));
            }
        }
    }

    #[test]
    fn gamma_is_a_bijection_onto_nonnesting() {
        for n in 0..=7 {
            let mut img: Vec<Matching> = enumerate_dyck(n).iter().map(DyckPath::gamma).collect();
            img.sort();
            let mut nn: Vec<Matching> = enumerate_stoimenow(n).filter(Matching::is_nonnesting).collect();
            nn.sort();
            assert_eq!(img, nn);
            for p in enumerate_dyck(n) {
                assert_eq!(p.height(), p.gamma().cr());
            }
        }
    }
}
