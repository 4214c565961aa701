use std::sync::Arc;

use involute_core::fmod::{kron_coords, Matrix};
use involute_core::gns::{check_condition_a, check_condition_b, ip2state, state2ip, HermitianFunctional};
use involute_core::multiset::{self, Multiset};
use involute_core::scalars::{GaussianRational, GaussianRationals, Gf9, Gf9Field, Rational, Rationals};
use involute_core::staralg::{group_algebra, matrix_algebra, GroupTable};
use involute_core::words::{parse_word, symmetric_group_table, Alphabet, Mode, Sign, SignedWord};
use involute_core::InvolutiveSemiring;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(p, q)| Rational::new(p, q))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn gf9() -> impl Strategy<Value = Gf9> {
    (0i64..3, 0i64..3).prop_map(|(a, b)| Gf9::new(a, b))
}

fn word(max_len: usize) -> impl Strategy<Value = SignedWord> {
    prop::collection::vec((any::<bool>(), 0usize..3), 0..=max_len).prop_map(|letters| {
        let alphabet = Alphabet::standard(3);
        let names: Vec<String> = alphabet.symbols().to_vec();
        let letters = letters.into_iter().map(|(b, i)| (if b { Sign::Minus } else { Sign::Plus }, names[i].clone())).collect::<Vec<_>>();
        SignedWord::from_letters(&alphabet, letters.iter().map(|(b, v)| (*b, v.as_str()))).unwrap()
    })
}

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Reversing), Just(Mode::NonReversing)]
}

fn multiset_of(keys: usize) -> impl Strategy<Value = Multiset<u8, GaussianRational>> {
    prop::collection::vec((0..keys as u8, gaussian()), 0..6).prop_map(|es| Multiset::from_entries(&GaussianRationals, es))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rationals_display_parse_roundtrip(x in rational()) {
        let back: Rational = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn gaussian_conjugation_is_a_ring_involution(a in gaussian(), b in gaussian()) {
        let s = GaussianRationals;
        prop_assert_eq!(s.conj(&s.conj(&a)), a.clone());
        prop_assert_eq!(s.conj(&s.mul(&a, &b)), s.mul(&s.conj(&a), &s.conj(&b)));
        prop_assert_eq!(s.conj(&s.add(&a, &b)), s.add(&s.conj(&a), &s.conj(&b)));
    }

    #[test]
    fn gaussian_inverse_is_exact(a in gaussian()) {
        let s = GaussianRationals;
        match s.inverse(&a) {
            Some(inv) => prop_assert_eq!(s.mul(&a, &inv), s.one()),
            None => prop_assert_eq!(a, s.zero()),
        }
    }

    #[test]
    fn gf9_frobenius_is_conjugation(a in gf9()) {
        let f = Gf9Field;
        prop_assert_eq!(f.mul(&f.mul(&a, &a), &a), f.conj(&a));
    }

    #[test]
    fn word_involution_is_involutive(w in word(6), m in mode()) {
        prop_assert_eq!(w.involve(m).involve(m), w.clone());
        prop_assert_eq!(w.involve(m).len(), w.len());
    }

    #[test]
    fn word_involution_respects_mode(u in word(4), v in word(4), m in mode()) {
        let lhs = u.concat(&v).unwrap().involve(m);
        let rhs = match m {
            Mode::Reversing => v.involve(m).concat(&u.involve(m)).unwrap(),
            Mode::NonReversing => u.involve(m).concat(&v.involve(m)).unwrap(),
        };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn word_display_parses_back(w in word(6), m in mode()) {
        let text = w.to_string();
        let back = parse_word(&text, Some(w.alphabet()), m).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn multiset_conjugation_is_additive_and_involutive(a in multiset_of(3), b in multiset_of(3)) {
        let s = GaussianRationals;
        prop_assert_eq!(multiset::nu(&s, &multiset::nu(&s, &a)), a.clone());
        prop_assert_eq!(multiset::nu(&s, &a.plus(&s, &b)), multiset::nu(&s, &a).plus(&s, &multiset::nu(&s, &b)));
    }

    #[test]
    fn multiset_conjugation_commutes_with_flattening(inner in prop::collection::vec((multiset_of(2), gaussian()), 0..4)) {
        let s = GaussianRationals;
        let outer: Multiset<Multiset<u8, GaussianRational>, GaussianRational> = Multiset::from_entries(&s, inner);
        let lhs = multiset::nu(&s, &multiset::mu(&s, &outer));
        let conj_inner = multiset::map(&s, |m: &Multiset<u8, GaussianRational>| multiset::nu(&s, m), &outer);
        let rhs = multiset::mu(&s, &multiset::nu(&s, &conj_inner));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn matrix_involution_reverses_products(
        x in prop::collection::vec(gaussian(), 4),
        y in prop::collection::vec(gaussian(), 4),
    ) {
        let alg = matrix_algebra(&GaussianRationals, 2);
        let lhs = alg.involve(&alg.mul(&x, &y));
        let rhs = alg.mul(&alg.involve(&y), &alg.involve(&x));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(alg.involve(&alg.involve(&x)), x);
    }

    #[test]
    fn s3_group_algebra_involution_reverses_products(
        x in prop::collection::vec(rational(), 6),
        y in prop::collection::vec(rational(), 6),
    ) {
        let alg = group_algebra(&Rationals, &GroupTable::new(symmetric_group_table(3)).unwrap());
        prop_assert_eq!(alg.involve(&alg.mul(&x, &y)), alg.mul(&alg.involve(&y), &alg.involve(&x)));
    }

    #[test]
    fn kronecker_commutes_with_conjugation(
        x in prop::collection::vec(gaussian(), 1..4),
        z in prop::collection::vec(gaussian(), 1..4),
    ) {
        let s = GaussianRationals;
        let conj = |v: &[GaussianRational]| v.iter().map(|e| s.conj(e)).collect::<Vec<_>>();
        prop_assert_eq!(conj(&kron_coords(&s, &x, &z)), kron_coords(&s, &conj(&x), &conj(&z)));
        let m = Matrix::from_flat(1, x.len(), x.clone());
        let n = Matrix::from_flat(z.len(), 1, z.clone());
        prop_assert_eq!(m.kron(&s, &n).conj(&s), m.conj(&s).kron(&s, &n.conj(&s)));
    }

    #[test]
    fn states_roundtrip_through_forms(a in rational(), d in rational(), b in gaussian()) {
        // f(E11) = a, f(E22) = d real; f(E12) = b, f(E21) = conj(b) makes f hermitian
        let s = GaussianRationals;
        let alg = Arc::new(matrix_algebra(&s, 2));
        let values = vec![GaussianRational::real(a), b.clone(), s.conj(&b), GaussianRational::real(d)];
        let f = HermitianFunctional::scalar(alg, values).unwrap();
        prop_assert!(f.is_hermitian());
        let p = state2ip(&f).unwrap();
        prop_assert!(check_condition_a(&p).passed());
        prop_assert!(check_condition_b(&p).passed());
        let back = ip2state(&p).unwrap();
        prop_assert_eq!(back.values(), f.values());
        let again = state2ip(&back).unwrap();
        prop_assert_eq!(again.gram(), p.gram());
    }
}
