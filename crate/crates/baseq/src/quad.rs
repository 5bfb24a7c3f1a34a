//! Quad decomposition of sequence pairs and the digit-code text format.
//!
//! A pair (X;Y) of length L decomposes into 2x2 quads `[x_i x_{L+1-i}; y_i
//! y_{L+1-i}]` for i = 1..floor(L/2), plus a central column `[x; y]` when L
//! is odd. Patterns with an odd number of -1 entries form one alphabet of
//! eight labels (written 1'..8'); patterns with an even number form the other
//! (written 1..8). In any member of BS(n+1,n) the first quad of (A;B) is
//! from the odd alphabet and every other quad of (A;B) and (C;D) is from the
//! even one, which is what makes the digit encoding well defined.

use std::fmt;

use crate::error::{Error, Result};
use crate::seq::{BaseQuadruple, BinarySequence};

/// Quad patterns are 4-bit values `tl<<3 | tr<<2 | bl<<1 | br`, bit = minus.
pub(crate) const GOLAY_PATTERNS: [u8; 8] = [0b1000, 0b0100, 0b0001, 0b0010, 0b0111, 0b1011, 0b1110, 0b1101];
pub(crate) const BS_PATTERNS: [u8; 8] = [0b0000, 0b0011, 0b1010, 0b0110, 0b1001, 0b0101, 0b1100, 0b1111];

/// BS-quad labels whose two columns are equal.
pub const SYMMETRIC_LABELS: [u8; 4] = [1, 2, 7, 8];
/// BS-quad labels whose two columns differ.
pub const SKEW_LABELS: [u8; 4] = [3, 4, 5, 6];

pub(crate) fn golay_label_of(pattern: u8) -> Option<u8> {
    GOLAY_PATTERNS.iter().position(|&p| p == pattern).map(|i| i as u8 + 1)
}

pub(crate) fn bs_label_of(pattern: u8) -> Option<u8> {
    BS_PATTERNS.iter().position(|&p| p == pattern).map(|i| i as u8 + 1)
}

/// Column classification of a BS-quad.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// Both columns equal (labels 1, 2, 7, 8).
    Symmetric,
    /// Columns differ (labels 3, 4, 5, 6).
    Skew,
}

/// One symbol of a quad code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadSymbol {
    /// A quad from the odd-parity alphabet (first quad of (A;B)); label 1..8.
    Golay(u8),
    /// A quad from the even-parity alphabet; label 1..8.
    Bs(u8),
    /// A central column; label 0..3 encoding `[top; bottom]` with bit = minus.
    Central(u8),
}

impl QuadSymbol {
    pub fn golay(label: u8) -> Result<Self> {
        if (1..=8).contains(&label) {
            Ok(Self::Golay(label))
        } else {
            Err(Error::Invariant(format!("golay label {label} out of range")))
        }
    }

    pub fn bs(label: u8) -> Result<Self> {
        if (1..=8).contains(&label) {
            Ok(Self::Bs(label))
        } else {
            Err(Error::Invariant(format!("bs label {label} out of range")))
        }
    }

    pub fn central(label: u8) -> Result<Self> {
        if label <= 3 {
            Ok(Self::Central(label))
        } else {
            Err(Error::Invariant(format!("central label {label} out of range")))
        }
    }

    /// Column classification; only BS-quads have one.
    pub fn symmetry(&self) -> Option<Symmetry> {
        match self {
            QuadSymbol::Bs(l) if SYMMETRIC_LABELS.contains(l) => Some(Symmetry::Symmetric),
            QuadSymbol::Bs(_) => Some(Symmetry::Skew),
            _ => None,
        }
    }

    /// The 4-bit quad pattern (2-bit for central columns).
    pub(crate) fn pattern(&self) -> u8 {
        match *self {
            QuadSymbol::Golay(l) => GOLAY_PATTERNS[l as usize - 1],
            QuadSymbol::Bs(l) => BS_PATTERNS[l as usize - 1],
            QuadSymbol::Central(l) => l,
        }
    }
}

/// Classification of a BS-quad label by column equality.
pub fn symmetry_type(label: u8) -> Option<Symmetry> {
    QuadSymbol::bs(label).ok().and_then(|s| s.symmetry())
}

impl fmt::Display for QuadSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            QuadSymbol::Golay(3) => f.write_str("0"),
            QuadSymbol::Golay(l) => write!(f, "{l}'"),
            QuadSymbol::Bs(l) => write!(f, "{l}"),
            QuadSymbol::Central(l) => write!(f, "{l}"),
        }
    }
}

/// Which symbol kind sits at each position of a code, determined by n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum SlotKind {
    Golay,
    Bs,
    Central,
}

/// Symbol-kind layout of the p and q halves for a given n.
pub(crate) fn layout(n: usize) -> (Vec<SlotKind>, Vec<SlotKind>) {
    let m = n / 2;
    let mut p = Vec::with_capacity(m + 1);
    let mut q = Vec::with_capacity(m + 1);
    if n == 0 {
        // (A;B) has length 1: a single central column, no quads
        p.push(SlotKind::Central);
        return (p, q);
    }
    p.push(SlotKind::Golay);
    if n.is_multiple_of(2) {
        p.extend(std::iter::repeat_n(SlotKind::Bs, m - 1));
        p.push(SlotKind::Central);
        q.extend(std::iter::repeat_n(SlotKind::Bs, m));
    } else {
        p.extend(std::iter::repeat_n(SlotKind::Bs, m));
        q.extend(std::iter::repeat_n(SlotKind::Bs, m));
        q.push(SlotKind::Central);
    }
    (p, q)
}

/// A full quad code: the p half encodes (A;B), the q half encodes (C;D).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadCode {
    n: usize,
    p: Vec<QuadSymbol>,
    q: Vec<QuadSymbol>,
}

impl QuadCode {
    /// Validates symbol kinds against the layout dictated by n.
    pub fn from_symbols(n: usize, p: Vec<QuadSymbol>, q: Vec<QuadSymbol>) -> Result<Self> {
        let (pk, qk) = layout(n);
        let check = |syms: &[QuadSymbol], kinds: &[SlotKind], half: &str| -> Result<()> {
            if syms.len() != kinds.len() {
                return Err(Error::ParseCode {
                    text: format!("{half} half with {} symbols", syms.len()),
                    n,
                    reason: format!("expected {} symbols", kinds.len()),
                });
            }
            for (i, (s, k)) in syms.iter().zip(kinds).enumerate() {
                let ok = matches!(
                    (s, k),
                    (QuadSymbol::Golay(_), SlotKind::Golay)
                        | (QuadSymbol::Bs(_), SlotKind::Bs)
                        | (QuadSymbol::Central(_), SlotKind::Central)
                );
                if !ok {
                    return Err(Error::ParseCode {
                        text: format!("{s}"),
                        n,
                        reason: format!("wrong symbol kind at {half}[{}]", i + 1),
                    });
                }
            }
            Ok(())
        };
        check(&p, &pk, "p")?;
        check(&q, &qk, "q")?;
        Ok(Self { n, p, q })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Symbols of the (A;B) half, first quad first.
    pub fn p(&self) -> &[QuadSymbol] {
        &self.p
    }

    /// Symbols of the (C;D) half.
    pub fn q(&self) -> &[QuadSymbol] {
        &self.q
    }

    /// BS-quad symbols of the (A;B) half (positions after the first quad,
    /// excluding any central column).
    pub fn p_bs_quads(&self) -> &[QuadSymbol] {
        if self.n == 0 {
            return &[];
        }
        let end = if self.n.is_multiple_of(2) { self.p.len() - 1 } else { self.p.len() };
        &self.p[1..end]
    }

    /// BS-quad symbols of the (C;D) half (excluding any central column).
    pub fn q_bs_quads(&self) -> &[QuadSymbol] {
        let end = if self.n % 2 == 1 && !self.q.is_empty() { self.q.len() - 1 } else { self.q.len() };
        &self.q[..end]
    }

    /// Central column of the (A;B) half, present for even n.
    pub fn p_central(&self) -> Option<u8> {
        match self.p.last() {
            Some(QuadSymbol::Central(l)) => Some(*l),
            _ => None,
        }
    }

    /// Central column of the (C;D) half, present for odd n >= 1.
    pub fn q_central(&self) -> Option<u8> {
        match self.q.last() {
            Some(QuadSymbol::Central(l)) => Some(*l),
            _ => None,
        }
    }

    /// Parses the text format `<p-digits>;<q-digits>`.
    ///
    /// In the p half, '0' stands for the odd-alphabet quad 3'; other
    /// odd-alphabet labels are accepted as a digit followed by an apostrophe.
    /// Whitespace after ';' is tolerated on input and never emitted.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let err = |reason: &str| Error::ParseCode {
            text: text.to_string(),
            n,
            reason: reason.to_string(),
        };
        let (ptxt, qtxt) = text.split_once(';').ok_or_else(|| err("missing ';'"))?;
        let qtxt = qtxt.trim_start();
        let (pk, qk) = layout(n);
        let parse_half = |txt: &str, kinds: &[SlotKind]| -> Result<Vec<QuadSymbol>> {
            let mut out = Vec::with_capacity(kinds.len());
            let mut chars = txt.chars().peekable();
            for kind in kinds {
                let ch = chars.next().ok_or_else(|| err("too few symbols"))?;
                let digit = ch.to_digit(10).ok_or_else(|| err("non-digit symbol"))? as u8;
                let sym = match kind {
                    SlotKind::Golay => {
                        if chars.peek() == Some(&'\'') {
                            chars.next();
                            QuadSymbol::golay(digit).map_err(|_| err("odd-alphabet label out of 1..8"))?
                        } else if digit == 0 {
                            QuadSymbol::Golay(3)
                        } else {
                            return Err(err("first p symbol must be 0 or a label with apostrophe"));
                        }
                    }
                    SlotKind::Bs => QuadSymbol::bs(digit).map_err(|_| err("quad label out of 1..8"))?,
                    SlotKind::Central => QuadSymbol::central(digit).map_err(|_| err("central label out of 0..3"))?,
                };
                out.push(sym);
            }
            if chars.next().is_some() {
                return Err(err("too many symbols"));
            }
            Ok(out)
        };
        let p = parse_half(ptxt, &pk)?;
        let q = parse_half(qtxt, &qk)?;
        Self::from_symbols(n, p, q)
    }
}

impl fmt::Display for QuadCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.p {
            write!(f, "{s}")?;
        }
        f.write_str(";")?;
        for s in &self.q {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn pattern_at(x: &BinarySequence, y: &BinarySequence, i: usize) -> u8 {
    let l = x.len();
    let bit = |s: &BinarySequence, idx: usize| (s.get(idx) == -1) as u8;
    bit(x, i - 1) << 3 | bit(x, l - i) << 2 | bit(y, i - 1) << 1 | bit(y, l - i)
}

/// The i-th quad (1-based) of the pair (x;y), classified by pattern parity.
///
/// Every 2x2 sign pattern belongs to exactly one alphabet, so this is total;
/// whether the resulting kind is legal at position i is the caller's check.
pub fn quad_at(x: &BinarySequence, y: &BinarySequence, i: usize) -> QuadSymbol {
    debug_assert_eq!(x.len(), y.len());
    debug_assert!(i >= 1 && i <= x.len() / 2);
    let pat = pattern_at(x, y, i);
    match golay_label_of(pat) {
        Some(l) => QuadSymbol::Golay(l),
        None => QuadSymbol::Bs(bs_label_of(pat).expect("pattern parity covers both alphabets")),
    }
}

/// The central column of an odd-length pair (x;y).
pub fn central_at(x: &BinarySequence, y: &BinarySequence) -> QuadSymbol {
    debug_assert!(x.len() % 2 == 1);
    let mid = x.len() / 2;
    QuadSymbol::Central(((x.get(mid) == -1) as u8) << 1 | (y.get(mid) == -1) as u8)
}

fn encode_pair(
    x: &BinarySequence,
    y: &BinarySequence,
    golay_first: bool,
    pair: &'static str,
) -> Result<Vec<QuadSymbol>> {
    let mut out = Vec::with_capacity(x.len() / 2 + 1);
    for i in 1..=x.len() / 2 {
        let sym = quad_at(x, y, i);
        let want_golay = golay_first && i == 1;
        match (&sym, want_golay) {
            (QuadSymbol::Golay(_), true) | (QuadSymbol::Bs(_), false) => out.push(sym),
            _ => return Err(Error::QuadKindMismatch { pair, index: i }),
        }
    }
    if x.len() % 2 == 1 {
        out.push(central_at(x, y));
    }
    Ok(out)
}

/// Encodes a quadruple into its quad code.
///
/// Fails with the offending quad index if the first quad of (A;B) is not
/// from the odd alphabet or any other quad is not from the even one; for
/// members of BS(n+1,n) this never happens.
pub fn encode(s: &BaseQuadruple) -> Result<QuadCode> {
    let p = encode_pair(&s.a, &s.b, true, "A;B")?;
    let q = encode_pair(&s.c, &s.d, false, "C;D")?;
    QuadCode::from_symbols(s.n(), p, q)
}

pub(crate) fn decode_pair(symbols: &[QuadSymbol], len: usize) -> (BinarySequence, BinarySequence) {
    let mut xbits = 0u64;
    let mut ybits = 0u64;
    let nquads = len / 2;
    for (idx, sym) in symbols.iter().take(nquads).enumerate() {
        let pat = sym.pattern();
        let i = idx + 1;
        xbits |= ((pat >> 3 & 1) as u64) << (i - 1) | ((pat >> 2 & 1) as u64) << (len - i);
        ybits |= ((pat >> 1 & 1) as u64) << (i - 1) | ((pat & 1) as u64) << (len - i);
    }
    if len % 2 == 1 {
        let pat = symbols[nquads].pattern();
        xbits |= ((pat >> 1 & 1) as u64) << (len / 2);
        ybits |= ((pat & 1) as u64) << (len / 2);
    }
    (
        BinarySequence::from_bits(xbits, len).expect("len <= 63"),
        BinarySequence::from_bits(ybits, len).expect("len <= 63"),
    )
}

/// Rebuilds the quadruple a code describes; inverse of [`encode`].
pub fn decode(code: &QuadCode) -> BaseQuadruple {
    let n = code.n();
    let (a, b) = decode_pair(code.p(), n + 1);
    let (c, d) = decode_pair(code.q(), n);
    BaseQuadruple::new(a, b, c, d).expect("layout guarantees the shape")
}

/// Entry-sum residue check: first quad of (A;B) has sum = 2 (mod 4), all
/// other quads of (A;B) and (C;D) have sum = 0 (mod 4).
pub fn theorem1_check(s: &BaseQuadruple) -> bool {
    encode(s).is_ok()
}

impl serde::Serialize for QuadCode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
