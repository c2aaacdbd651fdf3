//! Exhaustive verification suites. Each suite enumerates the relevant
//! classes up to a size bound and compares counts, image sets or
//! distribution polynomials against the generating-function oracles in
//! [`crate::series`].

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::rc::Rc;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::bijections::{self, enumerate_dyck, DyckPath};
use crate::error::{Error, Result};
use crate::matching::{enumerate_stoimenow, Matching};
use crate::pattern::{contains, Pattern};
use crate::poset::{enumerate_posets, CanonicalForm, InducedPattern, Poset};
use crate::seqperm::{enumerate_ascent_sequences, enumerate_fishburn, AscentSeq, Perm, WordPattern};
use crate::series::{catalan_series, distribution_polynomial, fishburn_series, narayana_series, ballot_product_series, narayana_joint_series, Monomial, Poly, Series};

/// Largest permutation length the `S_n` filter is run at.
const PERM_BOUND: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Inclusive range of sizes covered.
    pub n_range: (usize, usize),
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, n_range: (usize, usize), passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, n_range, detail: detail.into() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub max_n: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub wall_ms: u128,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (max n = {}): {} in {} ms", self.suite, self.max_n, status(self.passed), self.wall_ms)?;
        for c in &self.checks {
            writeln!(f, "  [{}] {} (n = {}..{}) {}", status(c.passed), c.name, c.n_range.0, c.n_range.1, c.detail)?;
        }
        Ok(())
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Catalan,
    Fishburn,
    Wilf,
    Nonnesting,
    Bijections,
    Restrictions,
    Height,
    Narayana,
    Ballot,
    Joint,
    Remark,
    Corollaries,
    KitaevRemmel,
    Rgf,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Catalan,
        Suite::Fishburn,
        Suite::Wilf,
        Suite::Nonnesting,
        Suite::Bijections,
        Suite::Restrictions,
        Suite::Height,
        Suite::Narayana,
        Suite::Ballot,
        Suite::Joint,
        Suite::Remark,
        Suite::Corollaries,
        Suite::KitaevRemmel,
        Suite::Rgf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Catalan => "catalan",
            Suite::Fishburn => "fishburn",
            Suite::Wilf => "wilf",
            Suite::Nonnesting => "nonnesting",
            Suite::Bijections => "bijections",
            Suite::Restrictions => "restrictions",
            Suite::Height => "height",
            Suite::Narayana => "narayana",
            Suite::Ballot => "ballot",
            Suite::Joint => "joint",
            Suite::Remark => "remark",
            Suite::Corollaries => "corollaries",
            Suite::KitaevRemmel => "kitaev-remmel",
            Suite::Rgf => "rgf",
        }
    }

    /// Size bound used when none is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Catalan | Suite::Fishburn | Suite::Wilf => 9,
            Suite::Nonnesting | Suite::Restrictions | Suite::Height | Suite::Corollaries | Suite::Rgf => 8,
            _ => 7,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Parse { what: "suite", detail: s.to_string() })
    }
}

/// Memoized enumerations shared between checks. Matching lists can also
/// be kept on disk, one arc list per line, keyed by size and pattern.
#[derive(Default)]
pub struct Catalog {
    cache_dir: Option<PathBuf>,
    matchings: Memo<String, Matching>,
    posets: Memo<Option<InducedPattern>, Poset>,
}

type Memo<K, T> = RefCell<HashMap<(K, usize), Rc<Vec<T>>>>;

impl Catalog {
    pub fn new() -> Self {
        Catalog::default()
    }

    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Self {
        Catalog { cache_dir: Some(dir.into()), ..Catalog::default() }
    }

    /// Stoimenow matchings of size `n`, optionally avoiding `q`.
    pub fn matchings(&self, n: usize, q: Option<&Pattern>) -> Rc<Vec<Matching>> {
        let tag = q.map_or_else(|| "all".to_string(), |q| format!("avoid-{}", q.matching).replace(',', "_"));
        let key = (tag, n);
        if let Some(v) = self.matchings.borrow().get(&key) {
            return v.clone();
        }
        let file = self.cache_dir.as_ref().map(|d| d.join(format!("matching-n{n}-{}.txt", key.0)));
        let v: Rc<Vec<Matching>> = Rc::new(match file.as_ref().and_then(|f| read_matchings(f)) {
            Some(v) => v,
            None => {
                let v: Vec<Matching> = match q {
                    None => enumerate_stoimenow(n).collect(),
                    Some(q) => self.matchings(n, None).iter().filter(|m| !contains(m, q)).cloned().collect(),
                };
                if let Some(f) = &file {
                    // best effort: a failed write only costs a recomputation
                    let _ = write_matchings(f, &v);
                }
                v
            }
        });
        self.matchings.borrow_mut().insert(key, v.clone());
        v
    }

    pub fn posets(&self, n: usize, avoid: Option<InducedPattern>) -> Result<Rc<Vec<Poset>>> {
        if let Some(v) = self.posets.borrow().get(&(avoid, n)) {
            return Ok(v.clone());
        }
        let v = Rc::new(enumerate_posets(n, avoid)?);
        self.posets.borrow_mut().insert((avoid, n), v.clone());
        Ok(v)
    }
}

fn read_matchings(path: &std::path::Path) -> Option<Vec<Matching>> {
    let text = fs::read_to_string(path).ok()?;
    let mut lines = text.lines();
    let count: usize = lines.next()?.strip_prefix("count ")?.parse().ok()?;
    let v = lines.map(str::parse).collect::<Result<Vec<Matching>>>().ok()?;
    (v.len() == count).then_some(v)
}

fn write_matchings(path: &std::path::Path, v: &[Matching]) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let mut text = format!("count {}\n", v.len());
    for m in v {
        text.push_str(&m.to_string());
        text.push('\n');
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text)?;
    fs::rename(tmp, path)
}

fn x(a: usize) -> Monomial {
    [a as u32, 0, 0]
}

fn catalan_numbers(max_n: usize) -> Vec<u64> {
    seq_of(&catalan_series(max_n))
}

fn seq_of(s: &Series) -> Vec<u64> {
    s.coeffs().iter().map(|p| u64::try_from(p.constant_term()).expect("small count")).collect()
}

/// A named distribution, one series over all sizes.
struct Dist {
    label: String,
    series: Series,
}

impl Dist {
    fn new<I>(label: impl Into<String>, order: usize, items: I) -> Self
    where
        I: IntoIterator<Item = (usize, Monomial)>,
    {
        Dist { label: label.into(), series: distribution_polynomial(order, items) }
    }
}

/// Every distribution agrees with `target` (or with the first one when
/// there is no target) at every size in `lo..=hi`.
fn compare(name: &str, lo: usize, hi: usize, dists: &[Dist], target: Option<(&str, &Series)>) -> Check {
    let (tlabel, tseries) = target.unwrap_or((&dists[0].label, &dists[0].series));
    for n in lo..=hi {
        let want = tseries.coeff(n);
        for d in dists {
            let got = d.series.coeff(n);
            if got != want {
                return Check::new(name, (lo, hi), false, format!("n={n}: {} = {got} but {tlabel} = {want}", d.label));
            }
        }
    }
    let shown = tseries.coeff(hi);
    Check::new(name, (lo, hi), true, format!("{} distributions agree; at n={hi}: {shown}", dists.len()))
}

fn counts_check(name: &str, lo: usize, got: &[u64], want: &[u64]) -> Check {
    let hi = lo + got.len().saturating_sub(1);
    let ok = got == &want[lo..lo + got.len()];
    Check::new(name, (lo, hi), ok, format!("{got:?}"))
}

fn ascents(n: usize, avoid: Option<WordPattern>) -> Vec<AscentSeq> {
    enumerate_ascent_sequences(n, avoid).collect()
}

fn perms(n: usize, avoid3142: bool) -> Vec<Perm> {
    enumerate_fishburn(n, avoid3142).expect("within the S_n filter bound").collect()
}

pub fn run_suite(suite: Suite, max_n: usize, cat: &Catalog) -> Result<VerifyReport> {
    let start = Instant::now();
    let checks = match suite {
        Suite::Catalan => catalan(max_n, cat),
        Suite::Fishburn => fishburn(max_n, cat)?,
        Suite::Wilf => wilf(max_n, cat)?,
        Suite::Nonnesting => nonnesting(max_n, cat),
        Suite::Bijections => bijection_checks(max_n, cat)?,
        Suite::Restrictions => restrictions(max_n, cat)?,
        Suite::Height => height(max_n, cat)?,
        Suite::Narayana => narayana(max_n, cat)?,
        Suite::Ballot => ballot(max_n, cat)?,
        Suite::Joint => joint(max_n, cat)?,
        Suite::Remark => remark(max_n, cat)?,
        Suite::Corollaries => corollaries(max_n, cat)?,
        Suite::KitaevRemmel => kitaev_remmel(max_n, cat)?,
        Suite::Rgf => rgf(max_n),
    };
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        max_n,
        passed: checks.iter().all(|c| c.passed),
        checks,
        wall_ms: start.elapsed().as_millis(),
    })
}

fn catalan(max_n: usize, cat: &Catalog) -> Vec<Check> {
    let want = catalan_numbers(max_n);
    Pattern::all_five()
        .iter()
        .map(|q| {
            let got: Vec<u64> = (0..=max_n).map(|n| cat.matchings(n, Some(q)).len() as u64).collect();
            counts_check(&format!("|M_n({})| = C_n", q.name), 0, &got, &want)
        })
        .collect()
}

fn fishburn(max_n: usize, cat: &Catalog) -> Result<Vec<Check>> {
    let want = seq_of(&fishburn_series(max_n));
    let pmax = max_n.min(PERM_BOUND);
    let pos_max = max_n.min(11);
    let matchings: Vec<u64> = (0..=max_n).map(|n| cat.matchings(n, None).len() as u64).collect();
    let posets = (0..=pos_max).map(|n| Ok(cat.posets(n, None)?.len() as u64)).collect::<Result<Vec<u64>>>()?;
    let seqs: Vec<u64> = (0..=max_n).map(|n| enumerate_ascent_sequences(n, None).count() as u64).collect();
    let fperms: Vec<u64> = (0..=pmax).map(|n| perms(n, false).len() as u64).collect();
    Ok(vec![
        counts_check("|M_n| = Fishburn", 0, &matchings, &want),
        counts_check("|P_n| = Fishburn (canonical forms)", 0, &posets, &want),
        counts_check("|A_n| = Fishburn", 0, &seqs, &want),
        counts_check("|F_n| = Fishburn", 0, &fperms, &want),
    ])
}

fn wilf(max_n: usize, cat: &Catalog) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for k in [2usize, 3, 5, 6] {
        let fams = (2..=5).map(|i| Pattern::family(i, k)).collect::<Result<Vec<Pattern>>>()?;
        let rows: Vec<Vec<u64>> =
            fams.iter().map(|q| (0..=max_n).map(|n| cat.matchings(n, Some(q)).len() as u64).collect()).collect();
        let ok = rows.iter().all(|r| r == &rows[0]);
        out.push(Check::new(format!("P2^{k}, P3^{k}, P4^{k}, P5^{k} Wilf-equivalent"), (0, max_n), ok, format!("{:?}", rows[0])));
    }
    Ok(out)
}

fn nonnesting(max_n: usize, cat: &Catalog) -> Vec<Check> {
    let p1 = Pattern::p1();
    let bad = (0..=max_n)
        .flat_map(|n| cat.matchings(n, None).iter().filter(|m| contains(m, &p1) == m.is_nonnesting()).cloned().collect::<Vec<_>>())
        .next();
    vec![Check::new(
        "M_n(P1) = nonnesting matchings",
        (0, max_n),
        bad.is_none(),
        bad.map_or_else(|| "sets equal".to_string(), |m| format!("counterexample {m}")),
    )]
}

/// `f` maps `domain` into `codomain` injectively and onto.
fn bijective<A, B, F>(domain: &[A], codomain: &[B], f: F) -> std::result::Result<(), String>
where
    B: std::hash::Hash + Eq + Clone + fmt::Display,
    A: fmt::Display,
    F: Fn(&A) -> Result<B>,
{
    let mut img = HashSet::new();
    for a in domain {
        let b = f(a).map_err(|e| format!("{a}: {e}"))?;
        if !img.insert(b.clone()) {
            return Err(format!("{b} hit twice"));
        }
    }
    let want: HashSet<B> = codomain.iter().cloned().collect();
    if img == want {
        Ok(())
    } else {
        Err(format!("image has {} elements, codomain {}", img.len(), want.len()))
    }
}

fn bijection_checks(max_n: usize, cat: &Catalog) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut record = |name: &str, res: std::result::Result<(), String>| {
        out.push(Check::new(name, (0, max_n), res.is_ok(), res.err().unwrap_or_else(|| "bijective".into())));
    };
    let p1 = Pattern::p1();
    let p2 = Pattern::p2();
    let p4 = Pattern::p4();

    // worked instance with a long run
    let fig_in: Matching = "1-3,2-10,4-7,5-8,6-11,9-12,13-16,14-18,15-21,17-19,20-22".parse()?;
    let fig_out: Matching = "1-7,2-9,3-10,4-12,5-16,6-18,8-13,11-14,15-21,17-19,20-22".parse()?;
    let got = bijections::phi(&fig_in, 4)?;
    let fig_ok = got == fig_out;

    let phi_res = (0..=max_n).try_for_each(|n| {
        let dom = cat.matchings(n, Some(&p2));
        bijective(&dom, &cat.matchings(n, Some(&p4)), |m| bijections::phi(m, 4))?;
        dom.iter().try_for_each(|m| {
            let back = bijections::phi_inverse(&bijections::phi(m, 4).map_err(|e| e.to_string())?, 4).map_err(|e| e.to_string())?;
            if &back == m {
                Ok(())
            } else {
                Err(format!("Φ⁻¹(Φ({m})) = {back}"))
            }
        })
    });
    record("Φ: M_n(P2) → M_n(P4), Φ⁻¹∘Φ = id (k = 4)", phi_res);
    out.push(Check::new("Φ on the six-block example", (11, 11), fig_ok, format!("Φ(M) = {got}")));
    let mut record = |name: &str, res: std::result::Result<(), String>| {
        out.push(Check::new(name, (0, max_n), res.is_ok(), res.err().unwrap_or_else(|| "bijective".into())));
    };

    record(
        "Γ: D_n → nonnesting matchings",
        (0..=max_n).try_for_each(|n| bijective(&enumerate_dyck(n), &cat.matchings(n, Some(&p1)), |d| Ok(d.gamma()))),
    );
    let pairs = |n: usize, q: &Pattern| -> Vec<(Matching, Matching)> {
        (1..=n)
            .flat_map(|k| {
                let left = cat.matchings(k - 1, Some(q));
                let right = cat.matchings(n - k, Some(q));
                left.iter().flat_map(|a| right.iter().map(move |b| (a.clone(), b.clone()))).collect::<Vec<_>>()
            })
            .collect()
    };
    struct Pair(Matching, Matching);
    impl fmt::Display for Pair {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "({}; {})", self.0, self.1)
        }
    }
    record(
        "Θ-glue: pairs → M_n(P1)",
        (1..=max_n).try_for_each(|n| {
            let dom: Vec<Pair> = pairs(n, &p1).into_iter().map(|(a, b)| Pair(a, b)).collect();
            bijective(&dom, &cat.matchings(n, Some(&p1)), |p| bijections::glue_p1(&p.0, &p.1))
        }),
    );
    record(
        "𝒱-glue: pairs → M_n(P2)",
        (1..=max_n).try_for_each(|n| {
            let dom: Vec<Pair> = pairs(n, &p2).into_iter().map(|(a, b)| Pair(a, b)).collect();
            bijective(&dom, &cat.matchings(n, Some(&p2)), |p| bijections::glue_p2(&p.0, &p.1))
        }),
    );
    record(
        "Ψ: M_n(P2) → A_n(101)",
        (0..=max_n).try_for_each(|n| bijective(&cat.matchings(n, Some(&p2)), &ascents(n, Some(WordPattern::P101)), bijections::psi_p2)),
    );
    let pmax = max_n.min(PERM_BOUND);
    let res = (0..=pmax).try_for_each(|n| bijective(&cat.matchings(n, Some(&p2)), &perms(n, true), bijections::upsilon_p2));
    out.push(Check::new("Υ: M_n(P2) → F_n(3142)", (0, pmax), res.is_ok(), res.err().unwrap_or_else(|| "bijective".into())));

    let roundtrip = |pat: InducedPattern| -> std::result::Result<(), String> {
        for n in 1..=max_n {
            for p in cat.posets(n, Some(pat)).map_err(|e| e.to_string())?.iter() {
                let back = match pat {
                    InducedPattern::ThreePlusOne => bijections::decompose_poset_3plus1(p)
                        .and_then(|(a, b)| bijections::compose_poset_3plus1(&a, &b)),
                    InducedPattern::N => bijections::decompose_poset_n(p).and_then(|(a, b)| bijections::compose_poset_n(&a, &b)),
                }
                .map_err(|e| e.to_string())?;
                if !back.is_isomorphic(p) {
                    return Err(format!("round trip changed {p}"));
                }
            }
        }
        Ok(())
    };
    out.push(Check::new("3+1 poset decomposition round trip", (1, max_n), roundtrip(InducedPattern::ThreePlusOne).is_ok(), ""));
    out.push(Check::new("N poset decomposition round trip", (1, max_n), roundtrip(InducedPattern::N).is_ok(), ""));
    let seq_ok = (1..=max_n).all(|n| {
        ascents(n, Some(WordPattern::P101)).iter().all(|s| {
            bijections::decompose_seq_101(s).and_then(|(a, b)| bijections::compose_seq_101(&a, &b)).as_ref() == Ok(s)
        })
    });
    out.push(Check::new("101 sequence decomposition round trip", (1, max_n), seq_ok, ""));
    let perm_ok = (1..=pmax).all(|n| {
        perms(n, true).iter().all(|p| {
            bijections::decompose_perm_3142(p).and_then(|(a, b)| bijections::compose_perm_3142(&a, &b)).as_ref() == Ok(p)
        })
    });
    out.push(Check::new("3142 permutation decomposition round trip", (1, pmax), perm_ok, ""));
    Ok(out)
}

fn canonical_set(ps: &[Poset]) -> Result<BTreeSet<CanonicalForm>> {
    ps.iter().map(Poset::canonical_form).collect()
}

fn restrictions(max_n: usize, cat: &Catalog) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (q, pat) in [(Pattern::p1(), InducedPattern::ThreePlusOne), (Pattern::p2(), InducedPattern::N)] {
        let mut bad = None;
        for n in 0..=max_n {
            let img: BTreeSet<CanonicalForm> =
                cat.matchings(n, Some(&q)).iter().map(|m| Poset::omega(m)?.canonical_form()).collect::<Result<_>>()?;
            let want = canonical_set(&cat.posets(n, Some(pat))?)?;
            if img != want {
                bad = Some(n);
                break;
            }
        }
        out.push(Check::new(
            format!("Ω(M_n({})) = P_n({pat})", q.name),
            (0, max_n),
            bad.is_none(),
            bad.map_or("canonical-form sets equal".into(), |n| format!("differs at n={n}")),
        ));
    }
    let p2 = Pattern::p2();
    let psi_ok = (0..=max_n).all(|n| {
        let img: Result<HashSet<AscentSeq>> = cat.matchings(n, Some(&p2)).iter().map(bijections::psi_p2).collect();
        img.ok() == Some(ascents(n, Some(WordPattern::P101)).into_iter().collect())
    });
    out.push(Check::new("Ψ(M_n(P2)) = A_n(101)", (0, max_n), psi_ok, ""));
    let pmax = max_n.min(PERM_BOUND);
    let ups_ok = (0..=pmax).all(|n| {
        let img: Result<HashSet<Perm>> = cat.matchings(n, Some(&p2)).iter().map(bijections::upsilon_p2).collect();
        img.ok() == Some(perms(n, true).into_iter().collect())
    });
    out.push(Check::new("Υ(M_n(P2)) = F_n(3142)", (0, pmax), ups_ok, ""));
    Ok(out)
}

fn matching_dist(label: &str, max_n: usize, cat: &Catalog, q: &Pattern, f: impl Fn(&Matching) -> Result<Monomial>) -> Result<Dist> {
    let mut items = Vec::new();
    for n in 0..=max_n {
        for m in cat.matchings(n, Some(q)).iter() {
            items.push((n, f(m)?));
        }
    }
    Ok(Dist::new(label, max_n, items))
}

fn poset_dist(label: &str, max_n: usize, cat: &Catalog, pat: InducedPattern, f: impl Fn(&Poset) -> Monomial) -> Result<Dist> {
    let mut items = Vec::new();
    for n in 0..=max_n {
        for p in cat.posets(n, Some(pat))?.iter() {
            items.push((n, f(p)));
        }
    }
    Ok(Dist::new(label, max_n, items))
}

fn seq_dist(label: &str, max_n: usize, avoid: Option<WordPattern>, f: impl Fn(&AscentSeq) -> Monomial) -> Dist {
    Dist::new(label, max_n, (0..=max_n).flat_map(|n| ascents(n, avoid).into_iter().map(move |s| (n, s))).map(|(n, s)| (n, f(&s))))
}

fn perm_dist(label: &str, max_n: usize, avoid3142: bool, f: impl Fn(&Perm) -> Monomial) -> Dist {
    Dist::new(label, max_n, (0..=max_n).flat_map(|n| perms(n, avoid3142).into_iter().map(move |p| (n, p))).map(|(n, p)| (n, f(&p))))
}

fn height(max_n: usize, cat: &Catalog) -> Result<Vec<Check>> {
    let dists = vec![
        matching_dist("cr over M(P1)", max_n, cat, &Pattern::p1(), |m| Ok(x(m.cr())))?,
        poset_dist("w over P(3+1)", max_n, cat, InducedPattern::ThreePlusOne, |p| x(p.width()))?,
        poset_dist("w over P(N)", max_n, cat, InducedPattern::N, |p| x(p.width()))?,
        Dist::new("h over D", max_n, (0..=max_n).flat_map(|n| enumerate_dyck(n).into_iter().map(move |d| (n, x(d.height()))))),
    ];
    Ok(vec![compare("cr / w / w / h distributions coincide", 0, max_n, &dists, None)])
}

fn narayana(max_n: usize, cat: &Catalog) -> Result<Vec<Check>> {
    let pmax = max_n.min(PERM_BOUND);
    let target = narayana_series(max_n);
    let (p1, p2) = (Pattern::p1(), Pattern::p2());
    let dists = vec![
        matching_dist("mcr over M(P1)", max_n, cat, &p1, |m| Ok(x(m.mcr()?)))?,
        matching_dist("mcr over M(P2)", max_n, cat, &p2, |m| Ok(x(m.mcr()?)))?,
        matching_dist("nr over M(P2)", max_n, cat, &p2, |m| Ok(x(m.nr())))?,
        poset_dist("mag over P(3+1)", max_n, cat, InducedPattern::ThreePlusOne, |p| x(p.magnitude()))?,
        poset_dist("mag over P(N)", max_n, cat, InducedPattern::N, |p| x(p.magnitude()))?,
        poset_dist("h over P(N)", max_n, cat, InducedPattern::N, |p| x(p.height()))?,
        seq_dist("lmax over A(101)", max_n, Some(WordPattern::P101), |s| x(s.stats().lmax)),
    ];
    let perm = vec![perm_dist("rmin over F(3142)", pmax, true, |p| x(p.stats().rmin))];
    Ok(vec![
        compare("seven distributions = N_n(x)", 0, max_n, &dists, Some(("N(x,t)", &target))),
        compare("rmin over F_n(3142) = N_n(x)", 0, pmax, &perm, Some(("N(x,t)", &target))),
    ])
}

fn symmetric(name: &str, lo: usize, hi: usize, dists: &[Dist]) -> Check {
    let bad = dists.iter().find(|d| (lo..=hi).any(|n| d.series.coeff(n) != d.series.coeff(n).swap_yz()));
    Check::new(name, (lo, hi), bad.is_none(), bad.map_or("all symmetric".into(), |d| format!("{} not symmetric", d.label)))
}

fn six_families(max_n: usize, cat: &Catalog, with_x: bool) -> Result<(Vec<Dist>, Vec<Dist>)> {
    let pmax = max_n.min(PERM_BOUND);
    let (p1, p2) = (Pattern::p1(), Pattern::p2());
    let w = |a: usize| if with_x { a as u32 } else { 0 };
    let mono = move |a: usize, b: usize, c: usize| -> Monomial { [w(a), b as u32, c as u32] };
    let main = vec![
        matching_dist("(mcr, fcr, bl) over M(P1)", max_n, cat, &p1, |m| Ok(mono(m.mcr()?, m.fcr(), m.bl())))?,
        matching_dist("(mcr, fcr, bl) over M(P2)", max_n, cat, &p2, |m| Ok(mono(m.mcr()?, m.fcr(), m.bl())))?,
        poset_dist("(mag, min, ssd) over P(3+1)", max_n, cat, InducedPattern::ThreePlusOne, |p| {
            let s = p.stats();
            mono(s.mag, s.min, s.ssd)
        })?,
        poset_dist("(mag, min, smc) over P(N)", max_n, cat, InducedPattern::N, |p| {
            let s = p.stats();
            mono(s.mag, s.min, s.smc)
        })?,
        seq_dist("(lmax, zero, rmin) over A(101)", max_n, Some(WordPattern::P101), |s| {
            let t = s.stats();
            mono(t.lmax, t.zero, t.rmin)
        }),
    ];
    let perm = vec![perm_dist("(rmin, idr, lmax) over F(3142)", pmax, true, |p| {
        let t = p.stats();
        mono(t.rmin, t.idr, t.lmax)
    })];
    Ok((main, perm))
}

fn ballot(max_n: usize, cat: &Catalog) -> Result<Vec<Check>> {
    let pmax = max_n.min(PERM_BOUND);
    let target = ballot_product_series(max_n);
    let (main, perm) = six_families(max_n, cat, false)?;
    let t = Some(("1 + yzt·C(y,t)C(z,t)", &target));
    Ok(vec![
        compare("five joint (y, z) distributions match", 0, max_n, &main, t),
        compare("(idr, lmax) over F_n(3142) matches", 0, pmax, &perm, t),
        symmetric("joint distributions symmetric in y, z", 0, max_n, &main),
        symmetric("F_n(3142) distribution symmetric in y, z", 0, pmax, &perm),
    ])
}

fn joint(max_n: usize, cat: &Catalog) -> Result<Vec<Check>> {
    let pmax = max_n.min(PERM_BOUND);
    let target = narayana_joint_series(max_n);
    let (main, perm) = six_families(max_n, cat, true)?;
    let t = Some(("1 + xyzt/((1-ytN)(1-zt(N+x-1)))", &target));
    Ok(vec![
        compare("five joint (x, y, z) distributions match", 0, max_n, &main, t),
        compare("(rmin, idr, lmax) over F_n(3142) matches", 0, pmax, &perm, t),
    ])
}

fn pointwise<F>(name: &str, max_n: usize, cat: &Catalog, f: F) -> Result<Check>
where
    F: Fn(&Matching, &Poset) -> Result<bool>,
{
    let mut first = None;
    let mut fails = vec![0usize; max_n + 1];
    for (n, slot) in fails.iter_mut().enumerate() {
        for m in cat.matchings(n, None).iter() {
            let p = Poset::omega(m)?;
            if !f(m, &p)? {
                *slot += 1;
                first.get_or_insert_with(|| m.clone());
            }
        }
    }
    let detail = match &first {
        None => "holds for every matching".to_string(),
        Some(m) => format!("fails on {} matchings per size {fails:?}; first: {m}", fails.iter().sum::<usize>()),
    };
    Ok(Check::new(name, (0, max_n), first.is_none(), detail))
}

fn remark(max_n: usize, cat: &Catalog) -> Result<Vec<Check>> {
    Ok(vec![
        pointwise("nr(M) = h(Ω(M))", max_n, cat, |m, p| Ok(m.nr() == p.height()))?,
        pointwise("fcr(M) = min(Ω(M))", max_n, cat, |m, p| Ok(m.fcr() == p.stats().min))?,
        pointwise("bl(M) = ssd(Ω(M))", max_n, cat, |m, p| Ok(m.bl() == p.stats().ssd))?,
        pointwise("mcr(M) = mag(Ω(M))", max_n, cat, |m, p| Ok(m.mcr()? == p.magnitude()))?,
        pointwise("mcr(M) = number of distinct downset signatures", max_n, cat, |m, _| {
            let mut s = m.downset_signatures()?;
            s.sort_unstable();
            s.dedup();
            Ok(m.mcr()? == s.len())
        })?,
    ])
}

fn corollaries(max_n: usize, cat: &Catalog) -> Result<Vec<Check>> {
    let p2 = Pattern::p2();
    let bad = (0..=max_n).flat_map(|n| cat.matchings(n, Some(&p2)).to_vec()).find(|m| m.mcr().ok() != Some(m.nr()));
    let mut out = vec![Check::new(
        "nr(M) = mcr(M) on M_n(P2)",
        (0, max_n),
        bad.is_none(),
        bad.map_or("holds".into(), |m| format!("fails on {m}")),
    )];
    let mut h_mag = None;
    let mut ssd_smc = None;
    for n in 0..=max_n {
        for p in cat.posets(n, Some(InducedPattern::N))?.iter() {
            let s = p.stats();
            if s.h != s.mag && h_mag.is_none() {
                h_mag = Some(p.clone());
            }
            if s.ssd != s.smc && ssd_smc.is_none() {
                ssd_smc = Some(p.clone());
            }
        }
    }
    out.push(Check::new("h(P) = mag(P) on P_n(N)", (0, max_n), h_mag.is_none(), h_mag.map_or("holds".into(), |p| format!("fails on {p}"))));
    out.push(Check::new(
        "ssd(P) = smc(P) on P_n(N)",
        (0, max_n),
        ssd_smc.is_none(),
        ssd_smc.map_or("holds".into(), |p| format!("fails on {p}")),
    ));
    Ok(out)
}

fn kitaev_remmel(max_n: usize, cat: &Catalog) -> Result<Vec<Check>> {
    let pmax = max_n.min(PERM_BOUND);
    let all_posets = |f: &dyn Fn(&Poset) -> usize| -> Result<Dist> {
        let mut items = Vec::new();
        for n in 0..=max_n {
            for p in cat.posets(n, None)?.iter() {
                items.push((n, x(f(p))));
            }
        }
        Ok(Dist::new("", max_n, items))
    };
    let mut min_p = all_posets(&|p| p.stats().min)?;
    min_p.label = "min over P".into();
    let mut mag_p = all_posets(&|p| p.magnitude())?;
    mag_p.label = "mag over P".into();
    let zero = seq_dist("zero over A", max_n, None, |s| x(s.stats().zero));
    let asc = seq_dist("asc + 1 over A", max_n, None, |s| x(s.asc() + 1));
    let idr = perm_dist("idr over F", pmax, false, |p| x(p.idr()));
    let min_a = Dist { label: min_p.label.clone(), series: min_p.series.clone() };
    let zero_b = Dist { label: zero.label.clone(), series: zero.series.clone() };
    Ok(vec![
        compare("min over P_n = zero over A_n", 0, max_n, &[min_p, zero], None),
        compare("min over P_n = zero over A_n = idr over F_n", 0, pmax, &[min_a, zero_b, idr], None),
        compare("mag over P_n = asc + 1 over A_n", 1, max_n, &[mag_p, asc], None),
    ])
}

fn rgf(max_n: usize) -> Vec<Check> {
    let mut runs_ok = true;
    let mut delta_ok = true;
    let mut sets_ok = true;
    for n in 0..=max_n {
        let a = ascents(n, Some(WordPattern::P101));
        runs_ok &= a.iter().all(|s| s.rgf_runs().is_ok());
        delta_ok &= a.iter().all(|s| s.delta() == s.entries());
        let b = ascents(n, Some(WordPattern::P0101));
        sets_ok &= a == b;
    }
    vec![
        Check::new("every α in A_n(101) passes the RGF run check", (0, max_n), runs_ok, ""),
        Check::new("Δ(α) = α on A_n(101)", (0, max_n), delta_ok, ""),
        Check::new("A_n(0101) = A_n(101)", (0, max_n), sets_ok, ""),
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    /// `Σ x^nr` over `M_n(P1)`.
    pub nr_p1: String,
    /// `Σ x^h` over `P_n(3+1)`.
    pub h_3plus1: String,
    /// `Σ x^h` over `D_n`.
    pub h_dyck: String,
    pub agree: bool,
}

/// The three height-type polynomials per size. Nothing is asserted.
pub fn conjecture_report(max_n: usize, cat: &Catalog) -> Result<Vec<ConjectureRow>> {
    let poly = |items: Vec<usize>| -> Poly {
        let d = distribution_polynomial(0, items.into_iter().map(|h| (0, x(h))));
        d.coeff(0)
    };
    let p1 = Pattern::p1();
    (0..=max_n)
        .map(|n| {
            let a = poly(cat.matchings(n, Some(&p1)).iter().map(Matching::nr).collect());
            let b = poly(cat.posets(n, Some(InducedPattern::ThreePlusOne))?.iter().map(Poset::height).collect());
            let c = poly(enumerate_dyck(n).iter().map(DyckPath::height).collect());
            let agree = a == b && b == c;
            Ok(ConjectureRow { n, nr_p1: a.to_string(), h_3plus1: b.to_string(), h_dyck: c.to_string(), agree })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let cat = Catalog::new();
        for s in Suite::ALL {
            let r = run_suite(s, 5, &cat).unwrap();
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn remark_reports_mcr_counterexample() {
        let cat = Catalog::new();
        let r = run_suite(Suite::Remark, 6, &cat).unwrap();
        let failing: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        assert_eq!(failing, vec!["mcr(M) = mag(Ω(M))", "mcr(M) = number of distinct downset signatures"]);
    }

    #[test]
    fn disk_cache_roundtrip() {
        let dir = std::env::temp_dir().join(format!("fishburn-cache-test-{}", std::process::id()));
        let a = Catalog::with_cache_dir(&dir).matchings(5, Some(&Pattern::p3()));
        let b = Catalog::with_cache_dir(&dir).matchings(5, Some(&Pattern::p3()));
        assert_eq!(a.len(), 42);
        assert_eq!(a, b);
        assert!(dir.join("matching-n5-all.txt").exists());
        std::fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn conjecture_small() {
        let rows = conjecture_report(3, &Catalog::new()).unwrap();
        assert_eq!(rows[0].nr_p1, "1");
        assert!(rows.iter().all(|r| r.agree));
    }
}
