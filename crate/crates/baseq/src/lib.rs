//! Classification of base sequence quadruples BS(n+1,n).
//!
//! A member of BS(n+1,n) is a quadruple (A;B;C;D) of +1/-1 sequences with
//! |A| = |B| = n+1 and |C| = |D| = n whose aperiodic autocorrelations cancel
//! at every nonzero lag: N_A(i) + N_B(i) + N_C(i) + N_D(i) = 0. This crate
//! provides:
//!
//! - packed sign sequences and autocorrelation arithmetic ([`seq`]);
//! - the quad encoding that writes a pair of sequences as a short code over
//!   two 8-letter alphabets plus central columns, and its codec ([`quad`]);
//! - the five elementary transformations that preserve membership
//!   ([`transform`]) and the group of order 4096 they generate, with both a
//!   sequence-level and a quad-wise code-level action ([`group`]);
//! - a canonical form selecting exactly one member per group orbit
//!   ([`canonical`]);
//! - exhaustive enumeration of the equivalence classes per order by a
//!   meet-in-the-middle join, together with normality classification
//!   ([`enumerate`]);
//! - norm equivalence of sign sequences: dual polynomials, composed
//!   products, and a scan for same-norm pairs that negation and reversal
//!   cannot relate ([`normeq`]);
//! - embedded reference tables and self-verification against them
//!   ([`fixtures`]), with text/CSV/JSON rendering ([`report`]).
//!
//! The runnable examples under `examples/` walk through each capability;
//! the `baseq` binary exposes the same operations as subcommands.
//!
//! ```
//! use baseq::{count_classes, decode, is_canonical, QuadCode};
//!
//! let report = count_classes(8)?;
//! assert_eq!(report.class_count, 27);
//! assert_eq!(report.normal_count, 14);
//! let first = &report.codes[0];
//! assert_eq!(first.to_string(), "06113;1638");
//! assert!(is_canonical(first));
//! assert!(decode(first).is_base_sequences());
//! # Ok::<(), baseq::Error>(())
//! ```

pub mod canonical;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod normeq;
pub mod quad;
pub mod report;
pub mod seq;
pub mod transform;

pub use canonical::{canonical_code, canonical_oracle, canonicalize, is_canonical};
pub use enumerate::{
    brute_force_bs, brute_force_classes, code_is_normal, count_classes, count_classes_jobs,
    is_near_normal, is_normal, ClassReport,
};
pub use error::{Error, Result};
pub use group::{all_elements, orbit, CodeAction, Generator, GroupElement, Orbit, Parity};
pub use normeq::{
    composed_product, negrev_equivalent, norm_twin_groups, same_norm, SignPolynomial,
};
pub use quad::{decode, encode, theorem1_check, QuadCode, QuadSymbol, Symmetry};
pub use report::{render_class_report, render_verify_report, OutputFormat};
pub use seq::{BaseQuadruple, BinarySequence, NafVector};
pub use transform::{t1_negate, t2_reverse, t3_swap, t4_tau, t5_alternate, PairSlot, SeqSlot};
