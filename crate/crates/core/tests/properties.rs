//! Randomized invariants for the arithmetic layers and the class ring.

use proptest::prelude::*;

use qschur::denom::{denom_zeros, AlgebraTag, Family};
use qschur::exact::ring::Coeff;
use qschur::exact::{rat, LaurentQ, QFrac, SpectralParam};
use qschur::klr::{Blocks, Perm, WordPolicy};
use qschur::ktheory::{canonicalize_class, decompose_two_segment_product, dim_class, dim_fund};
use qschur::segments::{sym_form, Multisegment, RootVec, Segment};

fn laurent() -> impl Strategy<Value = LaurentQ> {
    prop::collection::vec((-6i64..=6, -9i64..=9), 0..5)
        .prop_map(|ts| LaurentQ::from_terms(ts.into_iter().map(|(p, c)| (p, rat(c)))))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentQ> {
    laurent().prop_filter("nonzero", |f| !f.is_zero())
}

fn segment(lo: i64, hi: i64) -> impl Strategy<Value = Segment> {
    (lo..=hi, 0i64..=4).prop_map(|(a, l)| Segment::new(a, a + l))
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut v: Vec<usize> = (0..n).collect();
        for k in (1..n).rev() {
            v.swap(k, rng.random_range(0..=k));
        }
        Perm::from_images(v)
    })
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), LaurentQ::zero());
    }

    #[test]
    fn laurent_gcd_divides(a in nonzero_laurent(), b in nonzero_laurent()) {
        let g = a.gcd(&b);
        let qa = <LaurentQ as Coeff>::exact_div(&a, &g).expect("gcd divides a");
        let qb = <LaurentQ as Coeff>::exact_div(&b, &g).expect("gcd divides b");
        prop_assert_eq!(qa.mul(&g), a);
        prop_assert_eq!(qb.mul(&g), b);
        prop_assert!(qa.gcd(&qb).is_monomial());
    }

    #[test]
    fn qfrac_field_laws(a in laurent(), b in nonzero_laurent(), c in nonzero_laurent()) {
        let x = QFrac::new(a, b);
        let y = QFrac::new(LaurentQ::one(), c);
        prop_assert_eq!(x.mul(&y).div(&y), x.clone());
        prop_assert_eq!(x.add(&y).sub(&y), x.clone());
        prop_assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn spectral_group_laws(s1 in prop::sample::select(vec![1i8, -1]),
                           p1 in -20i64..=20,
                           s2 in prop::sample::select(vec![1i8, -1]),
                           p2 in -20i64..=20) {
        let a = SpectralParam::new(s1, p1);
        let b = SpectralParam::new(s2, p2);
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&a.inv()), SpectralParam::one());
        prop_assert_eq!(a.ratio(&b).mul(&b), a);
        // multiplicativity of the Laurent value
        prop_assert_eq!(a.mul(&b).to_laurent(), a.to_laurent().mul(&b.to_laurent()));
    }

    #[test]
    fn multisegment_weight_additive(s1 in segment(-5, 5), s2 in segment(-5, 5)) {
        let m = Multisegment::new(vec![s1, s2]);
        prop_assert_eq!(
            m.weight(),
            RootVec::segment_weight(&s1).add(&RootVec::segment_weight(&s2))
        );
        // normalization is idempotent
        prop_assert_eq!(Multisegment::new(m.segments().to_vec()), m);
    }

    #[test]
    fn sym_form_symmetric(s1 in segment(-5, 5), s2 in segment(-5, 5)) {
        let (b, g) = (RootVec::segment_weight(&s1), RootVec::segment_weight(&s2));
        prop_assert_eq!(sym_form(&b, &g), sym_form(&g, &b));
        prop_assert_eq!(sym_form(&b, &b), 2 * 1); // β is a positive real root
    }

    #[test]
    fn denominator_degree_law(n in 3i64..=10, ks in 0i64..=100, ls in 0i64..=100,
                              fam in prop::sample::select(vec![Family::A1, Family::A2])) {
        let tag = AlgebraTag::new(fam, n).unwrap();
        let k = 1 + ks % tag.max_node();
        let l = 1 + ls % tag.max_node();
        let zeros = denom_zeros(&tag, k, l).unwrap();
        let expect = match fam {
            Family::A1 => k.min(l).min(n - k).min(n - l),
            Family::A2 => 2 * k.min(l),
        };
        prop_assert_eq!(zeros.len() as i64, expect);
        // symmetry in (k,l)
        prop_assert_eq!(zeros, denom_zeros(&tag, l, k).unwrap());
    }

    #[test]
    fn perm_word_roundtrip(p in perm(6)) {
        for policy in [WordPolicy::MinDescent, WordPolicy::MaxDescent] {
            let w = p.canonical_word(policy);
            prop_assert_eq!(w.len(), p.length());
            prop_assert_eq!(Perm::from_word(6, &w), p.clone());
        }
        prop_assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn coset_factorization(p in perm(6), cut in 1usize..=5) {
        let blocks = Blocks::new(vec![cut, 6 - cut]);
        let (w, pi) = blocks.coset_factor(&p);
        prop_assert_eq!(w.compose(&pi), p.clone());
        prop_assert_eq!(w.length() + pi.length(), p.length());
        prop_assert!(blocks.min_coset_reps().contains(&w));
    }

    #[test]
    fn class_canonicalization_idempotent(s1 in segment(-4, 4), s2 in segment(-4, 4),
                                         n in 2i64..=6) {
        let c = canonicalize_class(&Multisegment::new(vec![s1, s2]), n);
        if let qschur::ktheory::SimpleClassTN::Class { ms, .. } = &c {
            prop_assert_eq!(canonicalize_class(ms, n), c.clone());
            prop_assert!(ms.segments().iter().all(|s| s.len() < n));
        }
    }

    #[test]
    fn product_dimension_conserved(a in -3i64..=4, l1 in 1i64..=4,
                                   ap in -3i64..=4, l2 in 1i64..=4,
                                   n in 3i64..=6) {
        let s1 = Segment::new(a, a + l1 - 1);
        let s2 = Segment::new(ap, ap + l2 - 1);
        prop_assume!(l1 <= n - 1 && l2 <= n - 1);
        let d = decompose_two_segment_product(s1, s2, n).unwrap();
        prop_assert_eq!(&d, &decompose_two_segment_product(s2, s1, n).unwrap());
        let total: u64 = d
            .iter()
            .map(|(c, m)| u64::from(*m) * dim_class(Family::A1, c).unwrap())
            .sum();
        prop_assert_eq!(total, dim_fund(l1, n).unwrap() * dim_fund(l2, n).unwrap());
    }
}
