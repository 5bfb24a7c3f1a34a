//! Randomized property tests for the algebraic laws the library relies on.

use baseq::{
    canonicalize, composed_product, count_classes, decode, negrev_equivalent, same_norm,
    BinarySequence, GroupElement, Parity, QuadCode, QuadSymbol, SignPolynomial,
};
use proptest::collection::vec;
use proptest::prelude::*;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

fn sequence(max_len: usize) -> impl Strategy<Value = BinarySequence> {
    (0..=max_len).prop_flat_map(|len| {
        (0..(1u64 << len)).prop_map(move |bits| BinarySequence::from_bits(bits, len).unwrap())
    })
}

fn sign_poly(max_len: usize) -> impl Strategy<Value = SignPolynomial> {
    (1..=max_len).prop_flat_map(|len| {
        (0..(1u64 << len)).prop_map(move |bits| {
            let coeffs = (0..len)
                .map(|i| if bits >> i & 1 == 1 { -1 } else { 1 })
                .collect();
            SignPolynomial::new(coeffs).unwrap()
        })
    })
}

/// Canonical representatives of order n, enumerated once per process.
fn reps(n: usize) -> Vec<QuadCode> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<QuadCode>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    map.entry(n)
        .or_insert_with(|| count_classes(n).unwrap().codes)
        .clone()
}

proptest! {
    #[test]
    fn naf_is_symmetric_and_vanishes_beyond_length(s in sequence(20), lag in 0i64..40) {
        prop_assert_eq!(s.naf(lag), s.naf(-lag));
        if lag >= s.len() as i64 {
            prop_assert_eq!(s.naf(lag), 0);
        }
        prop_assert_eq!(s.naf(0), s.len() as i32);
    }

    #[test]
    fn naf_vector_ignores_negation_and_reversal(s in sequence(20)) {
        prop_assert_eq!(s.negated().naf_vector(), s.naf_vector());
        prop_assert_eq!(s.reversed().naf_vector(), s.naf_vector());
    }

    #[test]
    fn alternation_flips_odd_lags(s in sequence(20)) {
        let alt = s.alternated();
        for lag in 0..s.len() as i64 {
            let sign = if lag % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(alt.naf(lag), sign * s.naf(lag));
        }
    }

    #[test]
    fn unary_sequence_ops_are_involutions(s in sequence(20)) {
        prop_assert_eq!(s.negated().negated(), s);
        prop_assert_eq!(s.reversed().reversed(), s);
        prop_assert_eq!(s.alternated().alternated(), s);
    }

    #[test]
    fn multiplication_is_associative(
        odd in any::<bool>(),
        i in 0usize..4096,
        j in 0usize..4096,
        k in 0usize..4096,
    ) {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        let g = GroupElement::from_index(i, parity).unwrap();
        let h = GroupElement::from_index(j, parity).unwrap();
        let l = GroupElement::from_index(k, parity).unwrap();
        prop_assert_eq!(g.mul(&h)?.mul(&l)?, g.mul(&h.mul(&l)?)?);
    }

    #[test]
    fn normal_form_word_rebuilds_the_element(odd in any::<bool>(), i in 0usize..4096) {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        let g = GroupElement::from_index(i, parity).unwrap();
        prop_assert_eq!(g.index(), i);
        let mut product = GroupElement::identity(parity);
        for gen in g.word() {
            product = product.mul(&GroupElement::generator(gen, parity).unwrap())?;
        }
        prop_assert_eq!(product, g);
    }

    #[test]
    fn canonicalize_is_constant_on_orbits_and_idempotent(
        n in 2usize..=7,
        class in any::<prop::sample::Index>(),
        gi in 0usize..4096,
    ) {
        let codes = reps(n);
        let code = &codes[class.index(codes.len())];
        let s = decode(code);
        let g = GroupElement::from_index(gi, Parity::of(n)).unwrap();
        let moved = g.apply(&s)?;
        prop_assert_eq!(canonicalize(&moved)?, s);
        prop_assert_eq!(canonicalize(&s)?, s);
    }

    #[test]
    fn negation_and_reversal_preserve_the_norm(s in sequence(16), op in 0u8..4) {
        let t = match op {
            0 => s.negated(),
            1 => s.reversed(),
            2 => s.negated().reversed(),
            _ => s,
        };
        prop_assert!(negrev_equivalent(&s, &t));
        prop_assert!(same_norm(&s, &t));
    }

    #[test]
    fn dual_masks_never_change_the_norm(
        f1 in sign_poly(4),
        f2 in sign_poly(4),
        f3 in sign_poly(4),
        mask in 0u8..8,
    ) {
        let factors = [f1, f2, f3];
        // the product length is the product of the factor lengths; stay
        // inside the 63-element packed-sequence representation
        prop_assume!(factors.iter().map(SignPolynomial::len).product::<usize>() <= 63);
        let basic = composed_product(&factors, &[false; 3])?;
        let masked = composed_product(
            &factors,
            &[mask & 1 != 0, mask & 2 != 0, mask & 4 != 0],
        )?;
        prop_assert_eq!(masked.naf_vector(), basic.naf_vector());
    }

    #[test]
    fn code_text_roundtrips(
        n in 0usize..=9,
        golay in 1u8..=8,
        labels in vec(1u8..=8, 10),
        central_p in 0u8..=3,
        central_q in 0u8..=3,
    ) {
        // Assemble a well-formed code for the slot layout of order n.
        let m = n / 2;
        let mut p = Vec::new();
        let mut q = Vec::new();
        if n > 0 {
            p.push(QuadSymbol::golay(golay).unwrap());
        }
        if n == 0 {
            // (A;B) has length 1: its whole code is one central column.
            p.push(QuadSymbol::central(central_p).unwrap());
        } else if n % 2 == 0 {
            for &l in labels.iter().take(m - 1) {
                p.push(QuadSymbol::bs(l).unwrap());
            }
            p.push(QuadSymbol::central(central_p).unwrap());
            for &l in labels.iter().rev().take(m) {
                q.push(QuadSymbol::bs(l).unwrap());
            }
        } else {
            for &l in labels.iter().take(m) {
                p.push(QuadSymbol::bs(l).unwrap());
            }
            for &l in labels.iter().rev().take(m) {
                q.push(QuadSymbol::bs(l).unwrap());
            }
            q.push(QuadSymbol::central(central_q).unwrap());
        }
        let code = QuadCode::from_symbols(n, p, q)?;
        let text = code.to_string();
        prop_assert_eq!(QuadCode::parse(&text, n)?, code.clone());
        // decode/encode agree with the textual layout
        let back = baseq::encode(&decode(&code))?;
        prop_assert_eq!(back, code);
    }
}
