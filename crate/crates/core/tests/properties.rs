use std::sync::OnceLock;

use fishburn::bijections::{self, enumerate_dyck};
use fishburn::matching::enumerate_stoimenow;
use fishburn::pattern::contains;
use fishburn::seqperm::WordPattern;
use fishburn::series::{Monomial, Var};
use fishburn::{AscentSeq, DyckPath, Matching, Pattern, Perm, Poly, Poset, Series};
use proptest::prelude::*;
use proptest::sample::Index;

const MAX: usize = 7;

fn all_matchings() -> &'static Vec<Vec<Matching>> {
    static CELL: OnceLock<Vec<Vec<Matching>>> = OnceLock::new();
    CELL.get_or_init(|| (0..=MAX).map(|n| enumerate_stoimenow(n).collect()).collect())
}

fn matching() -> impl Strategy<Value = Matching> {
    (0..=MAX, any::<Index>()).prop_map(|(n, i)| i.get(&all_matchings()[n]).clone())
}

fn avoiding(q: Pattern) -> impl Strategy<Value = Matching> {
    matching().prop_filter("avoids pattern", move |m| !contains(m, &q))
}

fn ascent_seq() -> impl Strategy<Value = AscentSeq> {
    prop::collection::vec(any::<u32>(), 0..10).prop_map(|seeds| {
        let mut out: Vec<u32> = Vec::new();
        let mut asc = 0;
        for (i, s) in seeds.into_iter().enumerate() {
            let v = if i == 0 { 0 } else { s % (asc + 2) };
            if out.last().is_some_and(|&l| v > l) {
                asc += 1;
            }
            out.push(v);
        }
        AscentSeq::new(out).unwrap()
    })
}

fn dyck() -> impl Strategy<Value = DyckPath> {
    (0..=8usize, any::<Index>()).prop_map(|(n, i)| i.get(&enumerate_dyck(n)).clone())
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..=5), 0..5).prop_map(|ts| {
        let mut p = Poly::zero();
        for ((a, b, c), k) in ts {
            p = &p + &Poly::term([a, b, c], k);
        }
        p
    })
}

fn series() -> impl Strategy<Value = Series> {
    prop::collection::vec(poly(), 1..6).prop_map(|mut cs| {
        cs[0] = Poly::one();
        Series::from_coeffs(5, cs)
    })
}

proptest! {
    #[test]
    fn matching_text_and_json_roundtrip(m in matching()) {
        prop_assert_eq!(m.to_string().parse::<Matching>().unwrap(), m.clone());
        prop_assert_eq!(Matching::from_json(&m.to_json()).unwrap(), m.clone());
        prop_assert_eq!(Matching::from_labels(&m.labels()).unwrap(), m);
    }

    #[test]
    fn reversal_is_an_involution_preserving_statistics(m in matching()) {
        let r = m.reverse();
        prop_assert!(r.is_stoimenow());
        prop_assert_eq!(r.reverse(), m.clone());
        prop_assert_eq!((r.cr(), r.nr(), r.bl()), (m.cr(), m.nr(), m.bl()));
        prop_assert_eq!(r.mcr().unwrap(), m.mcr().unwrap());
    }

    #[test]
    fn blocks_merge_back(m in matching()) {
        let merged = m.blocks().iter().fold(Matching::empty(), |acc, b| acc.merge(b));
        prop_assert_eq!(merged, m.clone());
        prop_assert_eq!(m.blocks().len(), m.bl());
    }

    #[test]
    fn omega_is_22_free_and_canonical_form_is_label_free(m in matching(), seed in any::<u64>()) {
        let p = Poset::omega(&m).unwrap();
        prop_assert!(p.is_22_free());
        let n = p.len();
        let mut order: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let q = p.permuted(&order);
        prop_assert_eq!(q.canonical_form().unwrap(), p.canonical_form().unwrap());
        prop_assert!(q.is_isomorphic(&p));
        prop_assert_eq!(Poset::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn p1_split_glue_roundtrip(m in avoiding(Pattern::p1()).prop_filter("nonempty", |m| !m.is_empty())) {
        let (a, b) = bijections::split_p1(&m).unwrap();
        prop_assert_eq!(bijections::glue_p1(&a, &b).unwrap(), m);
    }

    #[test]
    fn p2_split_glue_roundtrip(m in avoiding(Pattern::p2()).prop_filter("nonempty", |m| !m.is_empty())) {
        let (a, b) = bijections::split_p2(&m).unwrap();
        prop_assert_eq!(bijections::glue_p2(&a, &b).unwrap(), m);
    }

    #[test]
    fn glue_statistics(a in avoiding(Pattern::p1()), b in avoiding(Pattern::p1()), c in avoiding(Pattern::p2()), d in avoiding(Pattern::p2())) {
        for (g, l, r) in [
            (bijections::glue_p1(&a, &b).unwrap(), &a, &b),
            (bijections::glue_p2(&c, &d).unwrap(), &c, &d),
        ] {
            prop_assert_eq!(g.bl(), r.bl() + 1);
            prop_assert_eq!(g.fcr(), l.fcr() + 1);
            let extra = usize::from(l.is_empty());
            prop_assert_eq!(g.mcr().unwrap(), l.mcr().unwrap() + r.mcr().unwrap() + extra);
        }
    }

    #[test]
    fn psi_and_upsilon_roundtrip(m in avoiding(Pattern::p2())) {
        let a = bijections::psi_p2(&m).unwrap();
        prop_assert!(!a.contains(WordPattern::P101));
        prop_assert_eq!(bijections::psi_p2_inverse(&a).unwrap(), m.clone());
        let p = bijections::upsilon_p2(&m).unwrap();
        prop_assert!(p.is_fishburn() && !p.contains_classical(&[3, 1, 4, 2]));
        prop_assert_eq!(bijections::upsilon_p2_inverse(&p).unwrap(), m);
    }

    #[test]
    fn phi_roundtrip(m in avoiding(Pattern::p2()), k in 2usize..=5) {
        let q = Pattern::family(2, k).unwrap();
        prop_assume!(!contains(&m, &q));
        let image = bijections::phi(&m, k).unwrap();
        prop_assert!(!contains(&image, &Pattern::family(4, k).unwrap()));
        prop_assert_eq!(bijections::phi_inverse(&image, k).unwrap(), m);
    }

    #[test]
    fn ascent_sequence_laws(a in ascent_seq()) {
        prop_assert_eq!(a.to_string().parse::<AscentSeq>().unwrap(), a.clone());
        let pi = a.lambda();
        prop_assert!(pi.is_fishburn());
        prop_assert_eq!(pi.to_string().parse::<Perm>().unwrap(), pi.clone());
        if !a.contains(WordPattern::P101) {
            prop_assert!(a.rgf_runs().is_ok());
            prop_assert_eq!(a.delta(), a.entries().to_vec());
            if !a.is_empty() {
                let (l, r) = bijections::decompose_seq_101(&a).unwrap();
                prop_assert_eq!(bijections::compose_seq_101(&l, &r).unwrap(), a.clone());
            }
        }
        let s = a.stats();
        prop_assert_eq!(s.zero, a.entries().iter().filter(|&&v| v == 0).count());
    }

    #[test]
    fn gamma_roundtrip(d in dyck()) {
        let m = d.gamma();
        prop_assert!(m.is_nonnesting());
        prop_assert_eq!(m.cr(), d.height());
        prop_assert_eq!(DyckPath::gamma_inverse(&m).unwrap(), d.clone());
        prop_assert_eq!(d.to_string().parse::<DyckPath>().unwrap(), d);
    }

    #[test]
    fn series_reciprocal_and_ring_laws(a in series(), b in series()) {
        let one = Series::one(5);
        let inv = a.reciprocal().unwrap();
        prop_assert_eq!(&a * &inv, one);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(a.swap_yz().swap_yz(), a.clone());
        let m: Monomial = [1, 0, 0];
        prop_assert_eq!(a.specialize(Var::X).coeff(0).coeff(m), 0.into());
    }
}
