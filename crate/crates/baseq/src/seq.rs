//! Binary (+1/-1) sequences, their non-periodic autocorrelation function and
//! the base sequence quadruples built from them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A +1/-1 sequence of length at most 63, packed into a word.
///
/// Bit `i` set means element `i` (0-based) is -1. The all-plus sequence is
/// the zero word, which keeps negation, reversal and correlation cheap.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinarySequence {
    bits: u64,
    len: u8,
}

impl BinarySequence {
    /// Builds a sequence from +1/-1 elements.
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        if signs.len() > 63 {
            return Err(Error::SequenceTooLong { len: signs.len() });
        }
        let mut bits = 0u64;
        for (i, &s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => bits |= 1 << i,
                v => {
                    return Err(Error::BadElement {
                        index: i,
                        value: v as i64,
                    })
                }
            }
        }
        Ok(Self {
            bits,
            len: signs.len() as u8,
        })
    }

    /// Builds a sequence from a sign mask; bit `i` set means element `i` is -1.
    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if len > 63 {
            return Err(Error::SequenceTooLong { len });
        }
        Ok(Self {
            bits: bits & mask(len),
            len: len as u8,
        })
    }

    /// The empty sequence.
    pub fn empty() -> Self {
        Self { bits: 0, len: 0 }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Element at 0-based index, as +1 or -1.
    pub fn get(&self, index: usize) -> i8 {
        debug_assert!(index < self.len());
        if self.bits >> index & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = i8> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }

    /// Sign mask; bit `i` set means element `i` is -1.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Elementwise negation.
    pub fn negated(&self) -> Self {
        Self {
            bits: !self.bits & mask(self.len()),
            len: self.len,
        }
    }

    /// Order reversal.
    pub fn reversed(&self) -> Self {
        if self.len == 0 {
            return *self;
        }
        Self {
            bits: self.bits.reverse_bits() >> (64 - self.len()),
            len: self.len,
        }
    }

    /// Alternation: element at 0-based index `i` is multiplied by (-1)^i.
    pub fn alternated(&self) -> Self {
        const ODD: u64 = 0xAAAA_AAAA_AAAA_AAAA;
        Self {
            bits: self.bits ^ (ODD & mask(self.len())),
            len: self.len,
        }
    }

    /// Non-periodic autocorrelation at the given lag.
    ///
    /// `naf(i)` is the sum of products of elements `i` apart; out-of-range
    /// terms are zero, so any lag at or beyond the length gives 0, and
    /// negative lags mirror positive ones.
    pub fn naf(&self, lag: i64) -> i32 {
        let lag = lag.unsigned_abs();
        let n = self.len() as u64;
        if lag >= n {
            return 0;
        }
        let overlap = (n - lag) as u32;
        let diff = (self.bits ^ (self.bits >> lag)) & mask(overlap as usize);
        overlap as i32 - 2 * diff.count_ones() as i32
    }

    /// All autocorrelation values for lags `0..len`.
    pub fn naf_vector(&self) -> NafVector {
        NafVector {
            values: (0..self.len() as i64).map(|i| self.naf(i)).collect(),
        }
    }
}

fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.iter() {
            f.write_str(if s == 1 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut signs = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '+' => signs.push(1),
                '-' => signs.push(-1),
                _ => {
                    return Err(Error::ParseSequence {
                        text: s.to_string(),
                    })
                }
            }
        }
        Self::from_signs(&signs)
    }
}

/// Autocorrelation values of one sequence, indexed by lag starting at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NafVector {
    values: Vec<i32>,
}

impl NafVector {
    pub fn values(&self) -> &[i32] {
        &self.values
    }

    /// Value at the given lag; lags at or beyond the length are 0.
    pub fn at(&self, lag: usize) -> i32 {
        self.values.get(lag).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A candidate quadruple (A;B;C;D) with |A| = |B| = n+1 and |C| = |D| = n.
///
/// The shape is enforced at construction; membership in BS(n+1,n) is a
/// separate check ([`BaseQuadruple::is_base_sequences`]).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseQuadruple {
    pub a: BinarySequence,
    pub b: BinarySequence,
    pub c: BinarySequence,
    pub d: BinarySequence,
}

impl BaseQuadruple {
    pub fn new(
        a: BinarySequence,
        b: BinarySequence,
        c: BinarySequence,
        d: BinarySequence,
    ) -> Result<Self> {
        if a.len() != b.len() || c.len() != d.len() || a.len() != c.len() + 1 {
            return Err(Error::QuadrupleShape {
                a: a.len(),
                b: b.len(),
                c: c.len(),
                d: d.len(),
            });
        }
        Ok(Self { a, b, c, d })
    }

    /// The parameter n: the common length of C and D.
    pub fn n(&self) -> usize {
        self.c.len()
    }

    /// Whether the four autocorrelations cancel at every nonzero lag.
    ///
    /// At lag 0 the sum is 2(2n+1) = 4n+2 automatically for +1/-1 sequences
    /// of this shape; the check is included as a cheap sanity guard.
    pub fn is_base_sequences(&self) -> bool {
        let n = self.n() as i64;
        let lag0 = self.a.naf(0) + self.b.naf(0) + self.c.naf(0) + self.d.naf(0);
        if lag0 != 4 * n as i32 + 2 {
            return false;
        }
        (1..=n).all(|i| self.a.naf(i) + self.b.naf(i) + self.c.naf(i) + self.d.naf(i) == 0)
    }
}

impl fmt::Display for BaseQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{};{}", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for BaseQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BinarySequence {
        s.parse().unwrap()
    }

    /// Direct double-loop autocorrelation used as the oracle for the
    /// popcount implementation.
    fn naf_direct(s: &BinarySequence, lag: usize) -> i32 {
        let mut sum = 0i32;
        for j in 0..s.len().saturating_sub(lag) {
            sum += (s.get(j) * s.get(j + lag)) as i32;
        }
        sum
    }

    #[test]
    fn parse_display_roundtrip() {
        for text in ["+", "-", "++--+-", "+++++++++"] {
            assert_eq!(seq(text).to_string(), text);
        }
        assert!("+x-".parse::<BinarySequence>().is_err());
        assert_eq!(seq("").len(), 0);
    }

    #[test]
    fn naf_matches_direct_summation() {
        // every sequence of length <= 10, every lag
        for len in 0..=10usize {
            for bits in 0..1u64 << len {
                let s = BinarySequence::from_bits(bits, len).unwrap();
                for lag in 0..=len + 2 {
                    assert_eq!(s.naf(lag as i64), naf_direct(&s, lag), "{s} lag {lag}");
                }
            }
        }
    }

    #[test]
    fn naf_is_symmetric_and_vanishes_out_of_range() {
        let s = seq("++-+--++-");
        for lag in 0..12 {
            assert_eq!(s.naf(lag), s.naf(-lag));
        }
        assert_eq!(s.naf(9), 0);
        assert_eq!(s.naf(40), 0);
        assert_eq!(s.naf(0), s.len() as i32);
    }

    #[test]
    fn unary_ops() {
        let s = seq("++-+-");
        assert_eq!(s.negated().to_string(), "--+-+");
        assert_eq!(s.reversed().to_string(), "-+-++");
        assert_eq!(s.alternated().to_string(), "+----");
        assert_eq!(s.negated().negated(), s);
        assert_eq!(s.reversed().reversed(), s);
        assert_eq!(s.alternated().alternated(), s);
    }

    #[test]
    fn naf_invariant_under_negation_and_reversal() {
        for bits in 0..1u64 << 9 {
            let s = BinarySequence::from_bits(bits, 9).unwrap();
            assert_eq!(s.negated().naf_vector(), s.naf_vector());
            assert_eq!(s.reversed().naf_vector(), s.naf_vector());
            // alternation flips the sign of odd lags
            let alt = s.alternated().naf_vector();
            for lag in 0..9 {
                let want = if lag % 2 == 0 { 1 } else { -1 } * s.naf(lag as i64);
                assert_eq!(alt.at(lag), want);
            }
        }
    }

    #[test]
    fn quadruple_shape_and_membership() {
        // the worked example quadruple with n = 8
        let q = BaseQuadruple::new(
            seq("++++--+-+"),
            seq("+++-+++--"),
            seq("++--+--+"),
            seq("++++-+-+"),
        )
        .unwrap();
        assert_eq!(q.n(), 8);
        assert!(q.is_base_sequences());

        // negating a whole sequence preserves its autocorrelations
        let negated = BaseQuadruple::new(q.a.negated(), q.b, q.c, q.d).unwrap();
        assert!(negated.is_base_sequences());

        // flipping a single element breaks the lag sums
        let flipped = BinarySequence::from_bits(q.a.bits() ^ 1, q.a.len()).unwrap();
        let bad = BaseQuadruple::new(flipped, q.b, q.c, q.d).unwrap();
        assert!(!bad.is_base_sequences());

        assert!(BaseQuadruple::new(seq("++"), seq("++"), seq("++"), seq("++")).is_err());
    }

    #[test]
    fn n_zero_quadruple() {
        let q = BaseQuadruple::new(seq("+"), seq("+"), seq(""), seq("")).unwrap();
        assert_eq!(q.n(), 0);
        assert!(q.is_base_sequences());
    }
}
