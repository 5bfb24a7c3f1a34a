//! The order-4096 symmetry group generated by the elementary transformations.
//!
//! Elements are stored in the 12-bit normal form
//! `alpha^s (nu1 rho1 nu2 rho2 sigma1) (nu3 rho3 nu4 rho4 sigma2 theta)`,
//! where nu_i negates sequence i, rho_i reverses it, sigma_1 swaps A and B,
//! sigma_2 swaps C and D, theta swaps the quad labels 4 and 5 of (C;D), and
//! alpha alternates all four sequences. The subgroup on (A;B) generators is
//! a semidirect product E1 x| <sigma1>, the (C;D) part is E2 x| <sigma2,
//! theta>, and alpha acts on both by conjugation; which generators alpha
//! twists depends on the parity of the sequence lengths, so every element
//! carries the parity of n with it.
//!
//! Multiplication is the closed-form semidirect-product formula, a handful of
//! branch-free bit operations; the relation set is verified by tests.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::quad::{self, QuadCode, QuadSymbol};
use crate::seq::BaseQuadruple;
use crate::transform::{t1_negate, t2_reverse, t3_swap, t4_tau, t5_alternate, PairSlot, SeqSlot};

/// Parity of n; alpha's conjugation action differs between the two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

// bit positions of the normal-form word
const S_: u16 = 1 << 0; // alpha
const E1: u16 = 1 << 1; // nu1
const F1: u16 = 1 << 2; // rho1
const E2: u16 = 1 << 3; // nu2
const F2: u16 = 1 << 4; // rho2
const G1: u16 = 1 << 5; // sigma1
const E3: u16 = 1 << 6; // nu3
const F3: u16 = 1 << 7; // rho3
const E4: u16 = 1 << 8; // nu4
const F4: u16 = 1 << 9; // rho4
const G2: u16 = 1 << 10; // sigma2
const T_: u16 = 1 << 11; // theta

const E1_MASK: u16 = E1 | F1 | E2 | F2;
const E2_MASK: u16 = E3 | F3 | E4 | F4;

/// The twelve generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// Negate sequence i (1..=4).
    Nu(u8),
    /// Reverse sequence i (1..=4).
    Rho(u8),
    /// Swap A and B.
    Sigma1,
    /// Swap C and D.
    Sigma2,
    /// Swap quad labels 4 and 5 of (C;D).
    Theta,
    /// Alternate all four sequences.
    Alpha,
}

impl Generator {
    /// All generators in normal-form order, alpha first.
    pub fn all() -> [Generator; 12] {
        use Generator::*;
        [
            Alpha,
            Nu(1),
            Rho(1),
            Nu(2),
            Rho(2),
            Sigma1,
            Nu(3),
            Rho(3),
            Nu(4),
            Rho(4),
            Sigma2,
            Theta,
        ]
    }

    fn bit(&self) -> Result<u16> {
        Ok(match self {
            Generator::Alpha => S_,
            Generator::Nu(1) => E1,
            Generator::Rho(1) => F1,
            Generator::Nu(2) => E2,
            Generator::Rho(2) => F2,
            Generator::Sigma1 => G1,
            Generator::Nu(3) => E3,
            Generator::Rho(3) => F3,
            Generator::Nu(4) => E4,
            Generator::Rho(4) => F4,
            Generator::Sigma2 => G2,
            Generator::Theta => T_,
            Generator::Nu(i) | Generator::Rho(i) => {
                return Err(Error::Invariant(format!("sequence index {i} out of 1..=4")))
            }
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Nu(i) => write!(f, "nu{i}"),
            Generator::Rho(i) => write!(f, "rho{i}"),
            Generator::Sigma1 => f.write_str("sigma1"),
            Generator::Sigma2 => f.write_str("sigma2"),
            Generator::Theta => f.write_str("theta"),
            Generator::Alpha => f.write_str("alpha"),
        }
    }
}

/// A group element in normal form, tied to a parity of n.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    bits: u16,
    parity: Parity,
}

/// Swaps the (nu1,rho1) exponents with (nu2,rho2): conjugation by sigma1.
fn swap_pairs_h1(bits: u16) -> u16 {
    bits & !E1_MASK | (bits & (E1 | F1)) << 2 | (bits & (E2 | F2)) >> 2
}

/// Swaps the (nu3,rho3) exponents with (nu4,rho4): conjugation by sigma2.
fn swap_pairs_h2(bits: u16) -> u16 {
    bits & !E2_MASK | (bits & (E3 | F3)) << 2 | (bits & (E4 | F4)) >> 2
}

/// Conjugation by theta on the (C;D) negate/reverse exponents:
/// nu3 -> nu3 rho3 rho4, nu4 -> nu4 rho3 rho4, rho3 <-> rho4.
fn conj_theta(bits: u16) -> u16 {
    let e3 = bits & E3 != 0;
    let f3 = bits & F3 != 0;
    let e4 = bits & E4 != 0;
    let f4 = bits & F4 != 0;
    let nf3 = e3 ^ e4 ^ f4;
    let nf4 = e3 ^ e4 ^ f3;
    bits & !(F3 | F4) | if nf3 { F3 } else { 0 } | if nf4 { F4 } else { 0 }
}

/// Conjugation by alpha; which exponents fold depends on the parity of n.
fn conj_alpha(bits: u16, parity: Parity) -> u16 {
    let mut out = bits;
    match parity {
        // alpha rho_i alpha = rho_i nu_i for the length-(n+1) sequences
        Parity::Odd => {
            if bits & F1 != 0 {
                out ^= E1;
            }
            if bits & F2 != 0 {
                out ^= E2;
            }
        }
        // alpha rho_j alpha = rho_j nu_j for the length-n sequences, and
        // alpha theta alpha = theta sigma2
        Parity::Even => {
            if bits & F3 != 0 {
                out ^= E3;
            }
            if bits & F4 != 0 {
                out ^= E4;
            }
            if bits & T_ != 0 {
                out ^= G2;
            }
        }
    }
    out
}

impl GroupElement {
    pub fn identity(parity: Parity) -> Self {
        Self { bits: 0, parity }
    }

    pub fn generator(gen: Generator, parity: Parity) -> Result<Self> {
        Ok(Self {
            bits: gen.bit()?,
            parity,
        })
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// The normal-form index, 0..4096.
    pub fn index(&self) -> usize {
        self.bits as usize
    }

    pub fn from_index(index: usize, parity: Parity) -> Result<Self> {
        if index >= 4096 {
            return Err(Error::Invariant(format!("group index {index} out of 0..4096")));
        }
        Ok(Self {
            bits: index as u16,
            parity,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.bits == 0
    }

    /// Normal-form product; both factors must share the parity.
    pub fn mul(&self, rhs: &GroupElement) -> Result<GroupElement> {
        if self.parity != rhs.parity {
            return Err(Error::ParityMismatch);
        }
        let g = self.bits;
        let k = rhs.bits;
        // alpha^s h * alpha^u j = alpha^(s^u) (alpha^u h alpha^u) j
        let h = if k & S_ != 0 { conj_alpha(g, self.parity) } else { g };
        // (A;B) part: (a, s1)(b, s1') = (a ^ swap^{s1}(b), s1 ^ s1')
        let mut b1 = k & E1_MASK;
        if h & G1 != 0 {
            b1 = swap_pairs_h1(b1) & E1_MASK;
        }
        // (C;D) part: conjugate the incoming exponents by sigma2^g2 theta^t
        let mut b2 = k & E2_MASK;
        if h & T_ != 0 {
            b2 = conj_theta(b2) & E2_MASK;
        }
        if h & G2 != 0 {
            b2 = swap_pairs_h2(b2) & E2_MASK;
        }
        let bits = (h ^ k) & (S_ | G1 | G2 | T_) | (h & (E1_MASK | E2_MASK)) ^ b1 ^ b2;
        Ok(GroupElement {
            bits,
            parity: self.parity,
        })
    }

    /// The generator word of the normal form, in application order from the
    /// right: the last entry acts on a quadruple first.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::new();
        for gen in Generator::all() {
            if self.bits & gen.bit().expect("fixed set") != 0 {
                w.push(gen);
            }
        }
        w
    }

    /// Acts on a quadruple. The quadruple's n must match the parity.
    pub fn apply(&self, s: &BaseQuadruple) -> Result<BaseQuadruple> {
        if Parity::of(s.n()) != self.parity {
            return Err(Error::ParityMismatch);
        }
        let b = self.bits;
        let mut cur = *s;
        if b & T_ != 0 {
            cur = t4_tau(&cur)?;
        }
        if b & G2 != 0 {
            cur = t3_swap(&cur, PairSlot::Cd);
        }
        if b & F4 != 0 {
            cur = t2_reverse(&cur, SeqSlot::D);
        }
        if b & E4 != 0 {
            cur = t1_negate(&cur, SeqSlot::D);
        }
        if b & F3 != 0 {
            cur = t2_reverse(&cur, SeqSlot::C);
        }
        if b & E3 != 0 {
            cur = t1_negate(&cur, SeqSlot::C);
        }
        if b & G1 != 0 {
            cur = t3_swap(&cur, PairSlot::Ab);
        }
        if b & F2 != 0 {
            cur = t2_reverse(&cur, SeqSlot::B);
        }
        if b & E2 != 0 {
            cur = t1_negate(&cur, SeqSlot::B);
        }
        if b & F1 != 0 {
            cur = t2_reverse(&cur, SeqSlot::A);
        }
        if b & E1 != 0 {
            cur = t1_negate(&cur, SeqSlot::A);
        }
        if b & S_ != 0 {
            cur = t5_alternate(&cur);
        }
        Ok(cur)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.word();
        if w.is_empty() {
            return f.write_str("e");
        }
        for (i, gen) in w.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{gen}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All 4096 elements of the given parity, in normal-form index order.
pub fn all_elements(parity: Parity) -> Vec<GroupElement> {
    (0..4096u16).map(|bits| GroupElement { bits, parity }).collect()
}

// ---------------------------------------------------------------------------
// code-level action

/// Label permutation tables for the quad-wise action of the alpha-free part.
///
/// Every alpha-free element maps a quad at position i of S to a quad at the
/// same position of the image that depends only on the label, so its whole
/// action on codes is three small lookup tables per side.
pub struct CodeAction {
    parity: Parity,
    /// indexed by the (nu1,rho1,nu2,rho2,sigma1) exponent bits, 0..32
    ab: Vec<SideTables>,
    /// indexed by the (nu3,rho3,nu4,rho4,sigma2,theta) exponent bits, 0..64
    cd: Vec<SideTables>,
}

#[derive(Clone)]
struct SideTables {
    golay: [u8; 8],
    bs: [u8; 8],
    central: [u8; 4],
}

impl SideTables {
    fn identity() -> Self {
        Self {
            golay: [1, 2, 3, 4, 5, 6, 7, 8],
            bs: [1, 2, 3, 4, 5, 6, 7, 8],
            central: [0, 1, 2, 3],
        }
    }

    /// Applies one more generator on top of the action built so far.
    fn push(&mut self, pattern_map: impl Fn(u8) -> u8, central_map: impl Fn(u8) -> u8) {
        for l in &mut self.golay {
            let pat = pattern_map(quad::GOLAY_PATTERNS[*l as usize - 1]);
            *l = quad::golay_label_of(pat).expect("row/column ops preserve pattern parity");
        }
        for l in &mut self.bs {
            let pat = pattern_map(quad::BS_PATTERNS[*l as usize - 1]);
            *l = quad::bs_label_of(pat).expect("row/column ops preserve pattern parity");
        }
        for c in &mut self.central {
            *c = central_map(*c);
        }
    }

    fn map(&self, sym: QuadSymbol) -> QuadSymbol {
        match sym {
            QuadSymbol::Golay(l) => QuadSymbol::Golay(self.golay[l as usize - 1]),
            QuadSymbol::Bs(l) => QuadSymbol::Bs(self.bs[l as usize - 1]),
            QuadSymbol::Central(l) => QuadSymbol::Central(self.central[l as usize]),
        }
    }
}

// pattern-level row operations; patterns are tl<<3|tr<<2|bl<<1|br
fn pat_negate_top(p: u8) -> u8 {
    p ^ 0b1100
}
fn pat_negate_bottom(p: u8) -> u8 {
    p ^ 0b0011
}
fn pat_swap_top(p: u8) -> u8 {
    p & 0b0011 | (p & 0b1000) >> 1 | (p & 0b0100) << 1
}
fn pat_swap_bottom(p: u8) -> u8 {
    p & 0b1100 | (p & 0b0010) >> 1 | (p & 0b0001) << 1
}
fn pat_swap_rows(p: u8) -> u8 {
    (p & 0b1100) >> 2 | (p & 0b0011) << 2
}
fn pat_theta(p: u8) -> u8 {
    // exchange the label-4 and label-5 patterns, fix everything else
    match p {
        0b0110 => 0b1001,
        0b1001 => 0b0110,
        _ => p,
    }
}
fn cen_id(c: u8) -> u8 {
    c
}
fn cen_negate_top(c: u8) -> u8 {
    c ^ 0b10
}
fn cen_negate_bottom(c: u8) -> u8 {
    c ^ 0b01
}
fn cen_swap(c: u8) -> u8 {
    (c & 0b10) >> 1 | (c & 0b01) << 1
}

impl CodeAction {
    pub fn new(parity: Parity) -> Self {
        let mut ab = Vec::with_capacity(32);
        for e in 0u16..32 {
            let mut t = SideTables::identity();
            // word nu1 rho1 nu2 rho2 sigma1 applies right-to-left
            if e >> 4 & 1 != 0 {
                t.push(pat_swap_rows, cen_swap); // sigma1
            }
            if e >> 3 & 1 != 0 {
                t.push(pat_swap_bottom, cen_id); // rho2
            }
            if e >> 2 & 1 != 0 {
                t.push(pat_negate_bottom, cen_negate_bottom); // nu2
            }
            if e >> 1 & 1 != 0 {
                t.push(pat_swap_top, cen_id); // rho1
            }
            if e & 1 != 0 {
                t.push(pat_negate_top, cen_negate_top); // nu1
            }
            ab.push(t);
        }
        let mut cd = Vec::with_capacity(64);
        for e in 0u16..64 {
            let mut t = SideTables::identity();
            // word nu3 rho3 nu4 rho4 sigma2 theta applies right-to-left
            if e >> 5 & 1 != 0 {
                t.push(pat_theta, cen_id); // theta
            }
            if e >> 4 & 1 != 0 {
                t.push(pat_swap_rows, cen_swap); // sigma2
            }
            if e >> 3 & 1 != 0 {
                t.push(pat_swap_bottom, cen_id); // rho4
            }
            if e >> 2 & 1 != 0 {
                t.push(pat_negate_bottom, cen_negate_bottom); // nu4
            }
            if e >> 1 & 1 != 0 {
                t.push(pat_swap_top, cen_id); // rho3
            }
            if e & 1 != 0 {
                t.push(pat_negate_top, cen_negate_top); // nu3
            }
            cd.push(t);
        }
        Self { parity, ab, cd }
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Image of a code under a group element, computed symbol-wise.
    pub fn apply(&self, g: &GroupElement, code: &QuadCode) -> Result<QuadCode> {
        if g.parity != self.parity || Parity::of(code.n()) != self.parity {
            return Err(Error::ParityMismatch);
        }
        let ab = &self.ab[(g.bits >> 1 & 0x1F) as usize];
        let cd = &self.cd[(g.bits >> 6 & 0x3F) as usize];
        let p: Vec<QuadSymbol> = code.p().iter().map(|&s| ab.map(s)).collect();
        let q: Vec<QuadSymbol> = code.q().iter().map(|&s| cd.map(s)).collect();
        let mapped = QuadCode::from_symbols(code.n(), p, q)?;
        if g.bits & S_ != 0 {
            Ok(alternate_code(&mapped))
        } else {
            Ok(mapped)
        }
    }
}

/// Image of a code under alternation of all four sequences.
///
/// Alternation multiplies the left column of quad i by (-1)^(i-1) and the
/// right column by (-1)^(L-i) where L is the pair length, so the label map
/// is position dependent but purely local.
pub fn alternate_code(code: &QuadCode) -> QuadCode {
    let n = code.n();
    let map_half = |syms: &[QuadSymbol], len: usize| -> Vec<QuadSymbol> {
        syms.iter()
            .enumerate()
            .map(|(idx, sym)| {
                match sym {
                    QuadSymbol::Central(l) => {
                        // position (len+1)/2, sign (-1)^(pos-1)
                        let negate = len.div_ceil(2).is_multiple_of(2);
                        QuadSymbol::Central(if negate { l ^ 0b11 } else { *l })
                    }
                    _ => {
                        let i = idx + 1;
                        let mut pat = sym.pattern();
                        if i % 2 == 0 {
                            pat ^= 0b1010; // left column, sign (-1)^(i-1)
                        }
                        if (len - i) % 2 == 1 {
                            pat ^= 0b0101; // right column, sign (-1)^(len-i)
                        }
                        match sym {
                            QuadSymbol::Golay(_) => QuadSymbol::Golay(
                                quad::golay_label_of(pat).expect("column ops preserve parity"),
                            ),
                            _ => QuadSymbol::Bs(
                                quad::bs_label_of(pat).expect("column ops preserve parity"),
                            ),
                        }
                    }
                }
            })
            .collect()
    };
    let p = map_half(code.p(), n + 1);
    let q = map_half(code.q(), n);
    QuadCode::from_symbols(n, p, q).expect("kinds are preserved positionwise")
}

/// The set of all images of one quadruple under the whole group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    members: BTreeSet<BaseQuadruple>,
}

impl Orbit {
    pub fn members(&self) -> &BTreeSet<BaseQuadruple> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &BaseQuadruple) -> bool {
        self.members.contains(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = &BaseQuadruple> {
        self.members.iter()
    }
}

/// The orbit of a member of BS(n+1,n) under the whole group. Its size
/// always divides 4096.
pub fn orbit(s: &BaseQuadruple) -> Result<Orbit> {
    if !s.is_base_sequences() {
        return Err(Error::NotBaseSequences);
    }
    let parity = Parity::of(s.n());
    let action = CodeAction::new(parity);
    let code = quad::encode(s)?;
    let mut members = BTreeSet::new();
    for g in all_elements(parity) {
        members.insert(quad::decode(&action.apply(&g, &code)?));
    }
    Ok(Orbit { members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{decode, encode};

    fn gen(g: Generator, parity: Parity) -> GroupElement {
        GroupElement::generator(g, parity).unwrap()
    }

    #[test]
    fn generators_are_involutions() {
        for parity in [Parity::Even, Parity::Odd] {
            for g in Generator::all() {
                let x = gen(g, parity);
                assert!(x.mul(&x).unwrap().is_identity(), "{g}^2 != e");
            }
        }
    }

    #[test]
    fn defining_relations_hold() {
        use Generator::*;
        for parity in [Parity::Even, Parity::Odd] {
            let e = |g: Generator| gen(g, parity);
            let m = |x: &GroupElement, y: &GroupElement| x.mul(y).unwrap();
            let commute = |x: Generator, y: Generator| {
                assert_eq!(
                    m(&e(x), &e(y)),
                    m(&e(y), &e(x)),
                    "{x} and {y} should commute ({parity:?})"
                );
            };
            // negations and reversals commute with each other
            let base = [Nu(1), Rho(1), Nu(2), Rho(2), Nu(3), Rho(3), Nu(4), Rho(4)];
            for i in 0..base.len() {
                for j in i + 1..base.len() {
                    commute(base[i], base[j]);
                }
            }
            // swaps conjugate their own pair and commute with the other side
            for x in [Nu(3), Rho(3), Nu(4), Rho(4), Sigma2, Theta, Alpha] {
                commute(Sigma1, x);
            }
            for x in [Nu(1), Rho(1), Nu(2), Rho(2), Theta] {
                commute(Sigma2, x);
            }
            assert_eq!(m(&e(Sigma1), &e(Nu(1))), m(&e(Nu(2)), &e(Sigma1)));
            assert_eq!(m(&e(Sigma1), &e(Rho(1))), m(&e(Rho(2)), &e(Sigma1)));
            assert_eq!(m(&e(Sigma2), &e(Nu(3))), m(&e(Nu(4)), &e(Sigma2)));
            assert_eq!(m(&e(Sigma2), &e(Rho(3))), m(&e(Rho(4)), &e(Sigma2)));
            // theta commutes with the (A;B) side elementwise
            for x in [Nu(1), Rho(1), Nu(2), Rho(2)] {
                commute(Theta, x);
            }
            assert_eq!(m(&e(Theta), &e(Rho(3))), m(&e(Rho(4)), &e(Theta)));
            let nr3 = m(&e(Nu(3)), &e(Rho(3)));
            let nr4 = m(&e(Nu(4)), &e(Rho(4)));
            assert_eq!(m(&e(Theta), &nr3), m(&nr3, &e(Theta)));
            assert_eq!(m(&e(Theta), &nr4), m(&nr4, &e(Theta)));
            // alpha commutes with every negation and both swaps
            for x in [Nu(1), Nu(2), Nu(3), Nu(4), Sigma1, Sigma2] {
                commute(Alpha, x);
            }
            // alpha rho_i alpha = rho_i nu_i^n resp. nu_j^(n-1), and
            // alpha theta alpha = theta sigma2^(n-1)
            let conj = |x: &GroupElement| m(&m(&e(Alpha), x), &e(Alpha));
            let (ab_twist, cd_twist) = match parity {
                Parity::Odd => (true, false),
                Parity::Even => (false, true),
            };
            for (i, tw) in [(1u8, ab_twist), (2, ab_twist), (3, cd_twist), (4, cd_twist)] {
                let want = if tw {
                    m(&e(Rho(i)), &e(Nu(i)))
                } else {
                    e(Rho(i))
                };
                assert_eq!(conj(&e(Rho(i))), want, "alpha twist of rho{i} ({parity:?})");
            }
            let want = if cd_twist {
                m(&e(Theta), &e(Sigma2))
            } else {
                e(Theta)
            };
            assert_eq!(conj(&e(Theta)), want);
        }
    }

    #[test]
    fn multiplication_is_associative_on_samples() {
        // a fixed stride walk over triples; the full group is 4096 elements
        for parity in [Parity::Even, Parity::Odd] {
            let mut x = 1usize;
            for _ in 0..5000 {
                x = x.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
                let g = GroupElement::from_index(x % 4096, parity).unwrap();
                let h = GroupElement::from_index(x >> 12 & 0xFFF, parity).unwrap();
                let k = GroupElement::from_index(x >> 24 & 0xFFF, parity).unwrap();
                assert_eq!(
                    g.mul(&h).unwrap().mul(&k).unwrap(),
                    g.mul(&h.mul(&k).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn closure_over_generator_products() {
        for parity in [Parity::Even, Parity::Odd] {
            let all = all_elements(parity);
            assert_eq!(all.len(), 4096);
            for g in &all {
                for x in Generator::all() {
                    let prod = g.mul(&gen(x, parity)).unwrap();
                    assert!(prod.index() < 4096);
                }
            }
        }
    }

    #[test]
    fn parity_mismatch_is_rejected() {
        let g = gen(Generator::Alpha, Parity::Even);
        let h = gen(Generator::Alpha, Parity::Odd);
        assert!(matches!(g.mul(&h), Err(Error::ParityMismatch)));
        let s = decode(&QuadCode::parse("06;11", 3).unwrap());
        assert!(matches!(g.apply(&s), Err(Error::ParityMismatch)));
    }

    #[test]
    fn action_is_a_homomorphism_on_samples() {
        let s8 = decode(&QuadCode::parse("06142;1675", 8).unwrap());
        let s7 = decode(&QuadCode::parse("0165;6123", 7).unwrap());
        for (s, parity) in [(s8, Parity::Even), (s7, Parity::Odd)] {
            let mut x = 7usize;
            for _ in 0..2000 {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let g = GroupElement::from_index(x % 4096, parity).unwrap();
                let h = GroupElement::from_index(x >> 13 & 0xFFF, parity).unwrap();
                let lhs = g.mul(&h).unwrap().apply(&s).unwrap();
                let rhs = g.apply(&h.apply(&s).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "g={g} h={h}");
            }
        }
    }

    #[test]
    fn code_action_matches_sequence_action() {
        for (text, n) in [("06142;1675", 8usize), ("0165;6123", 7), ("060;16", 4), ("06;11", 3)] {
            let code = QuadCode::parse(text, n).unwrap();
            let s = decode(&code);
            let parity = Parity::of(n);
            let action = CodeAction::new(parity);
            for g in all_elements(parity) {
                let via_seq = encode(&g.apply(&s).unwrap()).unwrap();
                let via_code = action.apply(&g, &code).unwrap();
                assert_eq!(via_seq, via_code, "g={g} on {text}");
            }
        }
    }

    #[test]
    fn alternate_code_matches_alternated_sequences() {
        for (text, n) in [("06142;1675", 8usize), ("0165;6123", 7), ("016;640", 5)] {
            let code = QuadCode::parse(text, n).unwrap();
            let s = decode(&code);
            let want = encode(&t5_alternate(&s)).unwrap();
            assert_eq!(alternate_code(&code), want);
        }
    }

    #[test]
    fn orbit_of_small_member() {
        let s = decode(&QuadCode::parse("03;1", 2).unwrap());
        let orb = orbit(&s).unwrap();
        // the full membership set at n=2 forms a single class of 128
        assert_eq!(orb.len(), 128);
        assert!(orb.contains(&s));
        assert!(orb.iter().all(|m| m.is_base_sequences()));
        assert_eq!(4096 % orb.len(), 0);
    }

    #[test]
    fn alpha_free_action_preserves_symmetry_type() {
        // every alpha-free element maps symmetric BS-quads to symmetric
        // ones and skew to skew, on both sides
        let action = CodeAction::new(Parity::Even);
        for tables in action.ab.iter().chain(action.cd.iter()) {
            for label in 1u8..=8 {
                let image = tables.bs[label as usize - 1];
                assert_eq!(
                    crate::quad::symmetry_type(label),
                    crate::quad::symmetry_type(image)
                );
            }
        }
    }
}
