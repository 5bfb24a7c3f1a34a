//! Norm equivalence of binary sequences.
//!
//! A +1/-1 sequence is read as a polynomial with those coefficients; its
//! norm is the product with its own dual (coefficient reversal), whose
//! coefficient list is exactly the autocorrelation vector. Negating or
//! reversing a sequence never changes the norm, but the converse fails:
//! composed products `f1(x) f2(x^m) f3(x^mn) ...` keep their norm when any
//! subset of the factors is replaced by duals, and different subsets can
//! land in different negation/reversal orbits. This module builds such
//! products and provides the norm and orbit comparisons, plus a scan for
//! same-norm inequivalent pairs at a given length.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::seq::BinarySequence;

/// A polynomial all of whose coefficients are +1 or -1, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignPolynomial {
    coeffs: Vec<i8>,
}

impl SignPolynomial {
    /// Validates that every coefficient is +1 or -1 and the list is nonempty.
    pub fn new(coeffs: Vec<i8>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::NotSignPolynomial { index: 0, value: 0 });
        }
        for (index, &value) in coeffs.iter().enumerate() {
            if value != 1 && value != -1 {
                return Err(Error::NotSignPolynomial {
                    index,
                    value: value as i64,
                });
            }
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[i8] {
        &self.coeffs
    }

    /// Number of coefficients; the degree is one less.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a sign polynomial always has at least one coefficient
    }

    /// The dual x^d f(1/x): the coefficient list reversed. An involution
    /// that preserves the norm.
    pub fn dual(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { coeffs }
    }

    pub fn negated(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn to_sequence(&self) -> Result<BinarySequence> {
        BinarySequence::from_signs(&self.coeffs)
    }

    pub fn from_sequence(s: &BinarySequence) -> Self {
        Self {
            coeffs: s.iter().collect(),
        }
    }
}

impl fmt::Display for SignPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.coeffs {
            f.write_str(if c == 1 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for SignPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let seq: BinarySequence = s.parse()?;
        if seq.is_empty() {
            return Err(Error::NotSignPolynomial { index: 0, value: 0 });
        }
        Ok(Self::from_sequence(&seq))
    }
}

/// Exact integer convolution of two coefficient lists.
fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Spaces out a coefficient list: f(x) -> f(x^stride).
fn inflate(coeffs: &[i64], stride: usize) -> Vec<i64> {
    let mut out = vec![0i64; (coeffs.len() - 1) * stride + 1];
    for (i, &c) in coeffs.iter().enumerate() {
        out[i * stride] = c;
    }
    out
}

/// The composed product `g1(x) g2(x^m1) g3(x^(m1 m2)) ...`, where m_i is the
/// length of the i-th factor and g_i is either the factor or its dual as
/// selected by `dual_mask`.
///
/// The stride pattern keeps the supports disjoint, so every product
/// coefficient is a single product of factor coefficients and the result is
/// again a sign sequence of length = product of the factor lengths; a
/// coefficient outside +1/-1 is reported as an error rather than silently
/// truncated. Replacing factors by duals never changes the norm of the
/// result, so all 2^k mask choices yield same-norm sequences.
pub fn composed_product(factors: &[SignPolynomial], dual_mask: &[bool]) -> Result<BinarySequence> {
    if factors.is_empty() {
        return Err(Error::Invariant("composed product needs at least one factor".into()));
    }
    if dual_mask.len() != factors.len() {
        return Err(Error::Invariant(format!(
            "dual mask has {} entries for {} factors",
            dual_mask.len(),
            factors.len()
        )));
    }
    let mut product: Vec<i64> = vec![1];
    let mut stride = 1usize;
    for (factor, &dualize) in factors.iter().zip(dual_mask) {
        let g = if dualize { factor.dual() } else { factor.clone() };
        let coeffs: Vec<i64> = g.coeffs().iter().map(|&c| c as i64).collect();
        product = convolve(&product, &inflate(&coeffs, stride));
        stride *= factor.len();
    }
    let mut signs = Vec::with_capacity(product.len());
    for (index, &value) in product.iter().enumerate() {
        match value {
            1 | -1 => signs.push(value as i8),
            _ => return Err(Error::NotSignPolynomial { index, value }),
        }
    }
    BinarySequence::from_signs(&signs)
}

/// Whether y is x, its negation, its reversal, or its negated reversal.
pub fn negrev_equivalent(x: &BinarySequence, y: &BinarySequence) -> bool {
    let r = x.reversed();
    *y == *x || *y == x.negated() || *y == r || *y == r.negated()
}

/// The lexicographically least of the four negation/reversal variants.
pub fn negrev_representative(x: &BinarySequence) -> BinarySequence {
    let r = x.reversed();
    [*x, x.negated(), r, r.negated()]
        .into_iter()
        .min()
        .expect("four variants")
}

/// Whether two sequences have equal norms, i.e. identical autocorrelation
/// vectors (which forces equal lengths via the lag-0 value).
pub fn same_norm(x: &BinarySequence, y: &BinarySequence) -> bool {
    x.naf_vector() == y.naf_vector()
}

/// A set of same-norm sequences falling into at least two distinct
/// negation/reversal orbits.
#[derive(Debug, Clone)]
pub struct NormTwinGroup {
    /// The shared autocorrelation values at lags 0..len-1.
    pub naf: Vec<i32>,
    /// One representative (least variant) per negation/reversal orbit.
    pub representatives: Vec<BinarySequence>,
}

/// Scans every sign sequence of the given length and reports each norm
/// shared by two or more negation/reversal orbits. Cost grows as 2^len.
pub fn norm_twin_groups(len: usize) -> Result<Vec<NormTwinGroup>> {
    if len > 28 {
        return Err(Error::UnsupportedN {
            n: len,
            reason: "norm scan visits 2^len sequences; lengths above 28 are impractical".into(),
        });
    }
    let mut buckets: BTreeMap<Vec<i32>, Vec<BinarySequence>> = BTreeMap::new();
    for bits in 0..1u64 << len {
        let s = BinarySequence::from_bits(bits, len)?;
        if negrev_representative(&s) != s {
            continue; // one visit per orbit
        }
        buckets
            .entry(s.naf_vector().values().to_vec())
            .or_default()
            .push(s);
    }
    Ok(buckets
        .into_iter()
        .filter(|(_, reps)| reps.len() >= 2)
        .map(|(naf, representatives)| NormTwinGroup {
            naf,
            representatives,
        })
        .collect())
}
