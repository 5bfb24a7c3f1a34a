//! The five elementary transformations that generate the equivalence.

use crate::error::{Error, Result};
use crate::quad::{bs_label_of, BS_PATTERNS};
use crate::seq::{BaseQuadruple, BinarySequence};

/// Selects one of the four sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqSlot {
    A,
    B,
    C,
    D,
}

/// Selects one of the two pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSlot {
    Ab,
    Cd,
}

fn map_slot(s: &BaseQuadruple, slot: SeqSlot, f: impl Fn(&BinarySequence) -> BinarySequence) -> BaseQuadruple {
    let mut out = *s;
    match slot {
        SeqSlot::A => out.a = f(&s.a),
        SeqSlot::B => out.b = f(&s.b),
        SeqSlot::C => out.c = f(&s.c),
        SeqSlot::D => out.d = f(&s.d),
    }
    out
}

/// T1: negate one of the four sequences.
pub fn t1_negate(s: &BaseQuadruple, slot: SeqSlot) -> BaseQuadruple {
    map_slot(s, slot, BinarySequence::negated)
}

/// T2: reverse one of the four sequences.
pub fn t2_reverse(s: &BaseQuadruple, slot: SeqSlot) -> BaseQuadruple {
    map_slot(s, slot, BinarySequence::reversed)
}

/// T3: interchange the sequences of one pair.
pub fn t3_swap(s: &BaseQuadruple, pair: PairSlot) -> BaseQuadruple {
    let mut out = *s;
    match pair {
        PairSlot::Ab => {
            out.a = s.b;
            out.b = s.a;
        }
        PairSlot::Cd => {
            out.c = s.d;
            out.d = s.c;
        }
    }
    out
}

/// T4: in the quads of (C;D), exchange labels 4 and 5; the central column
/// (odd n) is untouched. Leaves the pointwise sum of the C and D
/// autocorrelations unchanged.
///
/// Defined only when every quad of (C;D) is an even-alphabet pattern, which
/// holds for all members of BS(n+1,n); otherwise reports the offending quad.
pub fn t4_tau(s: &BaseQuadruple) -> Result<BaseQuadruple> {
    let n = s.n();
    let mut cbits = s.c.bits();
    let mut dbits = s.d.bits();
    for i in 1..=n / 2 {
        let hi = n - i;
        let lo = i - 1;
        let pat = (((cbits >> lo) & 1) << 3
            | ((cbits >> hi) & 1) << 2
            | ((dbits >> lo) & 1) << 1
            | (dbits >> hi) & 1) as u8;
        let label = bs_label_of(pat).ok_or(Error::TauUndefined { index: i })?;
        if label == 4 || label == 5 {
            let new = BS_PATTERNS[(9 - label) as usize - 1] as u64;
            cbits = cbits & !(1 << lo | 1 << hi) | (new >> 3 & 1) << lo | (new >> 2 & 1) << hi;
            dbits = dbits & !(1 << lo | 1 << hi) | (new >> 1 & 1) << lo | (new & 1) << hi;
        }
    }
    let c = BinarySequence::from_bits(cbits, n).expect("length unchanged");
    let d = BinarySequence::from_bits(dbits, n).expect("length unchanged");
    Ok(BaseQuadruple { c, d, ..*s })
}

/// T5: alternate all four sequences.
pub fn t5_alternate(s: &BaseQuadruple) -> BaseQuadruple {
    BaseQuadruple {
        a: s.a.alternated(),
        b: s.b.alternated(),
        c: s.c.alternated(),
        d: s.d.alternated(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{decode, QuadCode};
    use crate::seq::BinarySequence;

    fn member() -> BaseQuadruple {
        decode(&QuadCode::parse("06142;1675", 8).unwrap())
    }

    fn cd_naf_sum(s: &BaseQuadruple) -> Vec<i32> {
        (0..=s.n() as i64).map(|i| s.c.naf(i) + s.d.naf(i)).collect()
    }

    #[test]
    fn t4_swaps_the_skew_pair_labels() {
        let s = member();
        let t = t4_tau(&s).unwrap();
        let code = crate::quad::encode(&t).unwrap();
        assert_eq!(code.to_string(), "06142;1674");
        assert_eq!(cd_naf_sum(&t), cd_naf_sum(&s));
        assert_eq!(t4_tau(&t).unwrap(), s);
    }

    #[test]
    fn t4_undefined_off_membership() {
        // (C;D) with an odd-parity first quad
        let s = BaseQuadruple::new(
            "+++".parse().unwrap(),
            "+++".parse().unwrap(),
            "+-".parse().unwrap(),
            "++".parse().unwrap(),
        )
        .unwrap();
        assert!(matches!(t4_tau(&s), Err(Error::TauUndefined { index: 1 })));
    }

    #[test]
    fn all_transformations_preserve_membership_exhaustively() {
        // every member of BS(n+1,n) for n <= 4, every single transformation
        for n in 0..=4usize {
            for bits in 0u64..1 << (4 * n + 2) {
                let a = BinarySequence::from_bits(bits, n + 1).unwrap();
                let b = BinarySequence::from_bits(bits >> (n + 1), n + 1).unwrap();
                let c = BinarySequence::from_bits(bits >> (2 * n + 2), n).unwrap();
                let d = BinarySequence::from_bits(bits >> (3 * n + 2), n).unwrap();
                let s = BaseQuadruple::new(a, b, c, d).unwrap();
                if !s.is_base_sequences() {
                    continue;
                }
                let mut images = vec![
                    t3_swap(&s, PairSlot::Ab),
                    t3_swap(&s, PairSlot::Cd),
                    t4_tau(&s).unwrap(),
                    t5_alternate(&s),
                ];
                for slot in [SeqSlot::A, SeqSlot::B, SeqSlot::C, SeqSlot::D] {
                    images.push(t1_negate(&s, slot));
                    images.push(t2_reverse(&s, slot));
                }
                for im in images {
                    assert!(im.is_base_sequences(), "{s} -> {im}");
                }
            }
        }
    }
}
