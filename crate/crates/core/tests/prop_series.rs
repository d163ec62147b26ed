mod support;

use defekt_core::series::{canonical_rotation, rational_to_rep, Word};
use defekt_core::Field;
use proptest::prelude::*;
use support::gen;

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0usize..2, 0..=max_len).prop_map(Word)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn circle_values_are_rotation_invariant(seed in any::<u64>(), w in word(6), k in 0usize..6) {
        let f = if seed.is_multiple_of(2) { Field::Rational } else { Field::prime(7).unwrap() };
        let t = gen::theory(&mut gen::rng(seed), f);
        let r = w.rotate(k);
        prop_assert_eq!(t.eval_circle(&w).unwrap(), t.eval_circle(&r).unwrap());
        prop_assert_eq!(canonical_rotation(&w), canonical_rotation(&r));
    }

    #[test]
    fn realization_reproduces_taylor_coefficients(seed in any::<u64>()) {
        let f = if seed.is_multiple_of(2) { Field::Rational } else { Field::prime(7).unwrap() };
        let z = gen::rational1(&mut gen::rng(seed), f, 4);
        let rep = rational_to_rep(&z).unwrap();
        for (n, c) in z.taylor(12).iter().enumerate() {
            prop_assert_eq!(&rep.eval(&Word::power(0, n)).unwrap(), c);
        }
    }

    #[test]
    fn interval_value_is_a_pairing_of_classes(seed in any::<u64>(), u in word(4), v in word(4)) {
        let t = gen::theory(&mut gen::rng(seed), Field::Rational);
        let rep = t.interval();
        let lhs = rep.eval(&u.concat(&v)).unwrap();
        let fw = rep.forward(&u).unwrap();
        let bw = rep.backward(&v).unwrap();
        let rhs = fw.iter().zip(&bw).fold(Field::Rational.zero(), |acc, (a, b)| acc + a * b);
        prop_assert_eq!(lhs, rhs);
    }
}
