use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use immaculate::hecke::{apply_word, GeneratorWord, HeckeResult};
use immaculate::qsym::{psi, to_poly, x_vars, QSymF, TruncatedPoly};
use immaculate::shapes::{comp_of, complement, compositions, set_of, Composition, SkewShape};
use immaculate::tableaux::{generate_sit, DescentKind, Tableau};

fn composition(max_n: usize) -> impl Strategy<Value = Composition> {
    (1..=max_n).prop_flat_map(|n| {
        let all = compositions(n);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

fn qsym5() -> impl Strategy<Value = QSymF> {
    let basis = compositions(5);
    prop::collection::vec(-3i64..=3, basis.len()).prop_map(move |cs| {
        let mut f = QSymF::zero(5);
        for (a, c) in basis.iter().zip(cs) {
            f.add_term(a.clone(), BigInt::from(c));
        }
        f
    })
}

fn sit_tableau() -> impl Strategy<Value = Tableau> {
    composition(6).prop_flat_map(|alpha| {
        let basis = generate_sit(&SkewShape::straight(alpha));
        (0..basis.len()).prop_map(move |k| basis[k].clone())
    })
}

fn kind() -> impl Strategy<Value = DescentKind> {
    prop::sample::select(DescentKind::ALL.to_vec())
}

fn poly() -> impl Strategy<Value = TruncatedPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -4i64..=4), 0..6).prop_map(|ms| {
        let mut p = TruncatedPoly::zero(x_vars(3));
        for (e, c) in ms {
            p.add_monomial(e, BigInt::from(c));
        }
        p
    })
}

proptest! {
    #[test]
    fn descent_set_roundtrip(alpha in composition(9)) {
        let n = alpha.size();
        prop_assert_eq!(comp_of(&set_of(&alpha), n).unwrap(), alpha);
    }

    #[test]
    fn subsets_roundtrip(n in 1usize..10, bits in any::<u16>()) {
        let set: BTreeSet<usize> = (1..n).filter(|i| bits >> i & 1 == 1).collect();
        prop_assert_eq!(set_of(&comp_of(&set, n).unwrap()), set);
    }

    #[test]
    fn complement_is_involution(alpha in composition(9)) {
        let c = complement(&alpha);
        prop_assert_eq!(c.size(), alpha.size());
        prop_assert_eq!(complement(&c), alpha);
    }

    #[test]
    fn psi_is_involution(f in qsym5()) {
        prop_assert_eq!(psi(&psi(&f)), f);
    }

    #[test]
    fn polynomial_image_is_faithful(f in qsym5(), g in qsym5()) {
        let (pf, pg) = (to_poly(&f, 5), to_poly(&g, 5));
        prop_assert_eq!(to_poly(&(f.clone() + g.clone()), 5), pf.clone() + pg.clone());
        prop_assert_eq!(pf == pg, f == g);
    }

    #[test]
    fn words_stay_sit(t in sit_tableau(), k in kind(), raw in prop::collection::vec(1usize..6, 0..12)) {
        let n = t.size();
        prop_assume!(n >= 2);
        let word: Vec<usize> = raw.into_iter().map(|i| 1 + (i - 1) % (n - 1)).collect();
        match apply_word(k, &GeneratorWord::from_application_order(word), &t).unwrap() {
            HeckeResult::Zero => {}
            HeckeResult::Fixed(s) => prop_assert_eq!(s, t),
            HeckeResult::Swapped(s) => {
                prop_assert!(s.is_sit());
                prop_assert_eq!(s.shape(), t.shape());
            }
        }
    }

    #[test]
    fn polynomial_product_commutes(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(q.clone() + r.clone()), (&p * &q) + (&p * &r));
    }

    #[test]
    fn tableau_json_roundtrip(t in sit_tableau()) {
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<Tableau>(&json).unwrap(), t);
    }
}
