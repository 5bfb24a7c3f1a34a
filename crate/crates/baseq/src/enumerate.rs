//! Exhaustive enumeration of the equivalence classes of BS(n+1,n) by their
//! canonical codes.
//!
//! The search meets in the middle: the two halves of a code constrain the
//! defining autocorrelation identity only through the sums N_A + N_B and
//! N_C + N_D. All (C;D) halves that satisfy the canonical conditions are
//! generated by a pruned depth-first search and bucketed by their
//! correlation vector; each canonical (A;B) half is then joined against the
//! bucket holding exactly the opposite vector. Every joined code is
//! canonical by construction — all canonical conditions are per-half — so
//! the classes are produced without ever materializing orbits.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::is_canonical;
use crate::error::{Error, Result};
use crate::quad::{decode, decode_pair, encode, QuadCode, QuadSymbol, Symmetry};
use crate::seq::{BaseQuadruple, BinarySequence};

/// Largest n the packed-u64 sequence representation supports.
pub const MAX_N: usize = 62;

/// The outcome of enumerating one order: every class once, via its
/// canonical code, in lexicographic order.
#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub n: usize,
    pub class_count: usize,
    pub normal_count: usize,
    pub codes: Vec<QuadCode>,
}

/// A half code together with the autocorrelation sum of its decoded pair.
#[derive(Debug, Clone)]
pub struct HalfEntry {
    pub symbols: Vec<QuadSymbol>,
    /// N_X + N_Y at lags 1..=n for the (A;B) side.
    pub nafsum: Vec<i32>,
}

fn symmetry_of(label: u8) -> Symmetry {
    crate::quad::symmetry_type(label).expect("labels 1..=8 are classified")
}

/// All (C;D) half codes that pass the canonical conditions, keyed by the
/// vector N_C + N_D at lags 1..n-1 (every nonzero lag of a length-n pair).
/// Bucket entries keep depth-first (lexicographic) order.
pub fn enumerate_cd_halves(n: usize) -> HashMap<Vec<i32>, Vec<Vec<QuadSymbol>>> {
    let m = n / 2;
    let mut buckets: HashMap<Vec<i32>, Vec<Vec<QuadSymbol>>> = HashMap::new();
    let mut prefix: Vec<QuadSymbol> = Vec::with_capacity(m + 1);
    // seen[0]: symmetric, seen[1]: skew, seen[2]: one of {2,7}, seen[3]: one of {4,5}
    fn rec(
        n: usize,
        m: usize,
        prefix: &mut Vec<QuadSymbol>,
        seen: [bool; 4],
        buckets: &mut HashMap<Vec<i32>, Vec<Vec<QuadSymbol>>>,
    ) {
        if prefix.len() == m {
            let no27 = !seen[2];
            let all_skew = prefix.iter().all(|s| s.symmetry() == Some(Symmetry::Skew));
            let mut finish = |q: Vec<QuadSymbol>| {
                let (c, d) = decode_pair(&q, n);
                let key: Vec<i32> = (1..n as i64).map(|i| c.naf(i) + d.naf(i)).collect();
                buckets.entry(key).or_default().push(q);
            };
            if n % 2 == 1 {
                for cen in 0u8..4 {
                    // the stabilizer of a 2/7-free half flips central 1<->2;
                    // an all-skew half admits every central flip
                    if no27 && cen == 2 {
                        continue;
                    }
                    if all_skew && cen != 0 {
                        continue;
                    }
                    let mut q = prefix.clone();
                    q.push(QuadSymbol::Central(cen));
                    finish(q);
                }
            } else {
                finish(prefix.clone());
            }
            return;
        }
        for label in 1u8..=8 {
            if prefix.is_empty() {
                let ok = if n.is_multiple_of(2) {
                    label == 1
                } else {
                    label == 1 || label == 6
                };
                if !ok {
                    continue;
                }
            }
            let sym = symmetry_of(label);
            if sym == Symmetry::Symmetric && !seen[0] && label != 1 {
                continue;
            }
            if sym == Symmetry::Skew && !seen[1] && label != 6 {
                continue;
            }
            if (label == 2 || label == 7) && !seen[2] && label != 2 {
                continue;
            }
            if (label == 4 || label == 5) && !seen[3] && label != 4 {
                continue;
            }
            let next_seen = [
                seen[0] || sym == Symmetry::Symmetric,
                seen[1] || sym == Symmetry::Skew,
                seen[2] || label == 2 || label == 7,
                seen[3] || label == 4 || label == 5,
            ];
            prefix.push(QuadSymbol::Bs(label));
            rec(n, m, prefix, next_seen, buckets);
            prefix.pop();
        }
    }
    rec(n, m, &mut prefix, [false; 4], &mut buckets);
    buckets
}

/// All (A;B) half codes that pass the canonical conditions, in depth-first
/// (lexicographic) order, each with its autocorrelation sum at lags 1..=n.
pub fn enumerate_ab_halves(n: usize) -> Vec<HalfEntry> {
    let m = n / 2;
    let bs_count = if n.is_multiple_of(2) { m.saturating_sub(1) } else { m };
    let mut out = Vec::new();
    if n == 0 {
        // the (A;B) pair is a single central column, fixed to [+;+]
        let symbols = vec![QuadSymbol::Central(0)];
        return vec![HalfEntry { symbols, nafsum: Vec::new() }];
    }
    let mut prefix: Vec<QuadSymbol> = vec![QuadSymbol::Golay(3)];
    fn finish(n: usize, p: Vec<QuadSymbol>, out: &mut Vec<HalfEntry>) {
        let (a, b) = decode_pair(&p, n + 1);
        let nafsum: Vec<i32> = (1..=n as i64).map(|i| a.naf(i) + b.naf(i)).collect();
        out.push(HalfEntry { symbols: p, nafsum });
    }
    fn rec(
        n: usize,
        bs_count: usize,
        prefix: &mut Vec<QuadSymbol>,
        seen: [bool; 2],
        out: &mut Vec<HalfEntry>,
    ) {
        if prefix.len() == bs_count + 1 {
            if n.is_multiple_of(2) {
                let all_skew = prefix[1..]
                    .iter()
                    .all(|s| s.symmetry() == Some(Symmetry::Skew));
                for cen in 0u8..4 {
                    if all_skew && cen != 0 && cen != 3 {
                        continue;
                    }
                    let mut p = prefix.clone();
                    p.push(QuadSymbol::Central(cen));
                    finish(n, p, out);
                }
            } else {
                finish(n, prefix.clone(), out);
            }
            return;
        }
        for label in 1u8..=8 {
            if prefix.len() == 1 {
                let ok = if n.is_multiple_of(2) {
                    label == 6 || label == 8
                } else {
                    label == 1 || label == 6
                };
                if !ok {
                    continue;
                }
            }
            let sym = symmetry_of(label);
            if sym == Symmetry::Symmetric && !seen[0] && label != 1 && label != 8 {
                continue;
            }
            if sym == Symmetry::Skew && !seen[1] && label != 3 && label != 6 {
                continue;
            }
            let next_seen = [
                seen[0] || sym == Symmetry::Symmetric,
                seen[1] || sym == Symmetry::Skew,
            ];
            prefix.push(QuadSymbol::Bs(label));
            rec(n, bs_count, prefix, next_seen, out);
            prefix.pop();
        }
    }
    rec(n, bs_count, &mut prefix, [false; 2], &mut out);
    out
}

fn codes_for_ab(
    n: usize,
    half: &HalfEntry,
    buckets: &HashMap<Vec<i32>, Vec<Vec<QuadSymbol>>>,
) -> Result<Vec<QuadCode>> {
    // only the length-(n+1) pair reaches lag n, so it must cancel alone;
    // every odd-alphabet first quad does (a_1 a_{n+1} + b_1 b_{n+1} = 0)
    let lag_n = *half.nafsum.last().expect("lags 1..=n, n >= 1");
    if lag_n != 0 {
        return Ok(Vec::new());
    }
    let key: Vec<i32> = half.nafsum[..n - 1].iter().map(|v| -v).collect();
    let mut out = Vec::new();
    if let Some(qs) = buckets.get(&key) {
        for q in qs {
            let code = QuadCode::from_symbols(n, half.symbols.clone(), q.clone())?;
            // all conditions are per-half, so the joined code must already
            // be canonical and decode to a member; verify rather than trust
            if !is_canonical(&code) {
                return Err(Error::Invariant(format!("join emitted non-canonical {code}")));
            }
            if !decode(&code).is_base_sequences() {
                return Err(Error::Invariant(format!(
                    "join emitted {code} whose quadruple is not base sequences"
                )));
            }
            out.push(code);
        }
    }
    Ok(out)
}

/// Enumerates every equivalence class of BS(n+1,n) on the current rayon
/// thread pool and reports counts and canonical codes.
pub fn count_classes(n: usize) -> Result<ClassReport> {
    if n > MAX_N {
        return Err(Error::UnsupportedN {
            n,
            reason: format!("sequences are packed into 64-bit words, so n <= {MAX_N}"),
        });
    }
    let codes: Vec<QuadCode> = if n == 0 {
        vec![QuadCode::parse("0;", 0)?]
    } else {
        let buckets = enumerate_cd_halves(n);
        let ab = enumerate_ab_halves(n);
        // shard by (A;B) half; per-half output is deterministic, and an
        // indexed parallel collect preserves shard order, so the result is
        // identical for every thread count
        let shards: Result<Vec<Vec<QuadCode>>> = ab
            .par_iter()
            .map(|half| codes_for_ab(n, half, &buckets))
            .collect();
        shards?.into_iter().flatten().collect()
    };
    if !codes.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Invariant(
            "enumeration output is not sorted and distinct".into(),
        ));
    }
    let normal_count = codes.iter().filter(|c| code_is_normal(c)).count();
    Ok(ClassReport {
        n,
        class_count: codes.len(),
        normal_count,
        codes,
    })
}

/// Like [`count_classes`], on a private thread pool of the given size;
/// `jobs` = 0 uses the default pool.
pub fn count_classes_jobs(n: usize, jobs: usize) -> Result<ClassReport> {
    if jobs == 0 {
        return count_classes(n);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    pool.install(|| count_classes(n))
}

/// Whether B repeats A in the first n entries (the last entry of B is free).
pub fn is_normal_pair(a: &BinarySequence, b: &BinarySequence) -> bool {
    a.len() == b.len() && !a.is_empty() && {
        let n = a.len() - 1;
        let mask = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        (a.bits() ^ b.bits()) & mask == 0
    }
}

/// Whether B repeats A with alternating signs (+ at the first entry) in the
/// first n entries.
pub fn is_near_normal_pair(a: &BinarySequence, b: &BinarySequence) -> bool {
    a.len() == b.len() && !a.is_empty() && is_normal_pair(&a.alternated(), b)
}

/// Whether the quadruple's (A;B) pair is normal: b_i = a_i for i = 1..=n.
pub fn is_normal(s: &BaseQuadruple) -> bool {
    is_normal_pair(&s.a, &s.b)
}

/// Whether the quadruple's (A;B) pair is near-normal:
/// b_i = (-1)^(i-1) a_i for i = 1..=n.
pub fn is_near_normal(s: &BaseQuadruple) -> bool {
    is_near_normal_pair(&s.a, &s.b)
}

/// Code-level normality criterion: all BS-quads of the p half are from
/// {1,3,6,8} (both rows equal) and, when present, the p central column is 0
/// or 3. On canonical codes this holds iff the decoded pair is normal,
/// because the fixed first quad already has equal left entries.
pub fn code_is_normal(code: &QuadCode) -> bool {
    let rows_equal = code
        .p_bs_quads()
        .iter()
        .all(|s| matches!(s, QuadSymbol::Bs(1 | 3 | 6 | 8)));
    let central_ok = matches!(code.p_central(), None | Some(0) | Some(3));
    rows_equal && central_ok
}

/// Every member of BS(n+1,n) by direct scan of all sign quadruples; only
/// feasible for small n (the scan visits 2^(4n+2) candidates).
pub fn brute_force_bs(n: usize) -> Result<Vec<BaseQuadruple>> {
    if n > 6 {
        return Err(Error::UnsupportedN {
            n,
            reason: "direct scan visits 2^(4n+2) candidates; use count_classes".into(),
        });
    }
    let long = 1u64 << (n + 1);
    let short = 1u64 << n;
    let mut out = Vec::new();
    for abits in 0..long {
        let a = BinarySequence::from_bits(abits, n + 1)?;
        for bbits in 0..long {
            let b = BinarySequence::from_bits(bbits, n + 1)?;
            for cbits in 0..short {
                let c = BinarySequence::from_bits(cbits, n)?;
                'd: for dbits in 0..short {
                    let d = BinarySequence::from_bits(dbits, n)?;
                    for lag in 1..=n as i64 {
                        if a.naf(lag) + b.naf(lag) + c.naf(lag) + d.naf(lag) != 0 {
                            continue 'd;
                        }
                    }
                    out.push(BaseQuadruple::new(a, b, c, d).expect("shape by construction"));
                }
            }
        }
    }
    Ok(out)
}

/// Canonical codes of all classes found by scanning every member and closing
/// each one under the full group: an enumeration-free cross-check.
pub fn brute_force_classes(n: usize) -> Result<Vec<QuadCode>> {
    use crate::group::{all_elements, CodeAction, Parity};
    use std::collections::BTreeSet;

    let members = brute_force_bs(n)?;
    let parity = Parity::of(n);
    let action = CodeAction::new(parity);
    let elements = all_elements(parity);
    let mut seen: BTreeSet<BaseQuadruple> = BTreeSet::new();
    let mut classes: BTreeSet<QuadCode> = BTreeSet::new();
    for s in &members {
        if seen.contains(s) {
            continue;
        }
        let code = encode(s)?;
        let mut canon: Option<QuadCode> = None;
        for g in &elements {
            let image = action.apply(g, &code)?;
            if is_canonical(&image) {
                match &canon {
                    None => canon = Some(image.clone()),
                    Some(prev) if *prev != image => {
                        return Err(Error::Invariant(format!(
                            "orbit of {code} has two canonical codes {prev} and {image}"
                        )));
                    }
                    _ => {}
                }
            }
            seen.insert(decode(&image));
        }
        let canon = canon.ok_or_else(|| {
            Error::Invariant(format!("orbit of {code} has no canonical code"))
        })?;
        classes.insert(canon);
    }
    if seen.len() != members.len() {
        return Err(Error::Invariant(format!(
            "orbits cover {} quadruples, membership scan found {}",
            seen.len(),
            members.len()
        )));
    }
    Ok(classes.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn codes_of(n: usize) -> Vec<String> {
        count_classes(n)
            .unwrap()
            .codes
            .iter()
            .map(|c| c.to_string())
            .collect()
    }

    #[test]
    fn smallest_orders() {
        assert_eq!(codes_of(0), ["0;"]);
        assert_eq!(codes_of(1), ["0;0"]);
        assert_eq!(codes_of(2), ["03;1"]);
        assert_eq!(codes_of(3), ["06;11"]);
        assert_eq!(codes_of(4), ["060;16", "082;12", "083;16"]);
        assert_eq!(codes_of(5), ["016;640", "017;613", "064;160", "065;113"]);
    }

    #[test]
    fn normal_counts_small() {
        let want = [1usize, 1, 1, 1, 2, 1, 0, 6];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(count_classes(n).unwrap().normal_count, w, "n={n}");
        }
    }

    #[test]
    fn thread_count_does_not_change_output() {
        for n in [6usize, 7, 8] {
            let one = count_classes_jobs(n, 1).unwrap();
            let many = count_classes_jobs(n, 8).unwrap();
            assert_eq!(one.codes, many.codes);
            assert_eq!(one.class_count, many.class_count);
            assert_eq!(one.normal_count, many.normal_count);
        }
    }

    #[test]
    fn cd_halves_bucket_shapes() {
        // n = 0: a single empty half under the empty key
        let b0 = enumerate_cd_halves(0);
        assert_eq!(b0.len(), 1);
        assert_eq!(b0[&Vec::new()], vec![Vec::new()]);
        // n = 8: the q half of the canonical code 06142;1624 sits in the
        // bucket of its pair's autocorrelation sum
        let b8 = enumerate_cd_halves(8);
        let code = QuadCode::parse("06142;1624", 8).unwrap();
        let s = decode(&code);
        let key: Vec<i32> = (1..8).map(|i| s.c.naf(i) + s.d.naf(i)).collect();
        assert!(b8[&key].contains(&code.q().to_vec()));
        // every bucketed half obeys the first-occurrence conditions; spot
        // check: none starts with a label other than 1 (n even)
        for halves in b8.values() {
            for q in halves {
                assert_eq!(q[0], QuadSymbol::Bs(1));
            }
        }
    }

    #[test]
    fn ab_halves_respect_prefix_conditions() {
        for half in enumerate_ab_halves(7) {
            assert_eq!(half.symbols[0], QuadSymbol::Golay(3));
            assert!(matches!(half.symbols[1], QuadSymbol::Bs(1 | 6)));
            assert_eq!(half.nafsum.len(), 7);
            assert_eq!(*half.nafsum.last().unwrap(), 0, "lag n cancels on (A;B)");
        }
        let halves = enumerate_ab_halves(7);
        let texts: Vec<String> = halves
            .iter()
            .map(|h| h.symbols.iter().map(|s| s.to_string()).collect())
            .collect();
        assert!(texts.contains(&"0165".to_string()));
        assert!(texts.windows(2).all(|w| w[0] < w[1]), "lexicographic stream");
    }

    #[test]
    fn brute_force_member_counts() {
        let want = [4usize, 32, 128, 256, 1792];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(brute_force_bs(n).unwrap().len(), w, "n={n}");
        }
    }

    #[test]
    fn brute_force_classes_match_enumeration() {
        for n in 0..=4usize {
            let brute = brute_force_classes(n).unwrap();
            let fast = count_classes(n).unwrap().codes;
            assert_eq!(brute, fast, "n={n}");
        }
    }

    #[test]
    fn every_emitted_code_decodes_to_base_sequences() {
        for n in 0..=8usize {
            for code in count_classes(n).unwrap().codes {
                let s = decode(&code);
                assert!(s.is_base_sequences(), "n={n} {code}");
                assert!(is_canonical(&code), "n={n} {code}");
                assert_eq!(encode(&s).unwrap(), code);
            }
        }
    }

    #[test]
    fn code_normality_agrees_with_sequence_normality() {
        for n in 0..=10usize {
            for code in count_classes(n).unwrap().codes {
                let s = decode(&code);
                assert_eq!(code_is_normal(&code), is_normal(&s), "n={n} {code}");
            }
        }
    }

    #[test]
    fn normality_pair_predicates() {
        let a: BinarySequence = "++++--+-+".parse().unwrap();
        assert!(is_normal_pair(&a, &a));
        let b: BinarySequence = "++++--+--".parse().unwrap();
        assert!(is_normal_pair(&a, &b), "last entry free");
        let c: BinarySequence = "+-++--+-+".parse().unwrap();
        assert!(!is_normal_pair(&a, &c));
        // b = alternated(a) satisfies b_i = (-1)^(i-1) a_i exactly
        assert!(is_near_normal_pair(&a, &a.alternated()));
        assert!(!is_near_normal_pair(&a, &a) || a == a.alternated());
        let rejects: BinarySequence = "+++".parse().unwrap();
        let short: BinarySequence = "++".parse().unwrap();
        assert!(!is_normal_pair(&rejects, &short));
    }

    #[test]
    fn unsupported_sizes_are_rejected() {
        assert!(matches!(
            count_classes(MAX_N + 1),
            Err(Error::UnsupportedN { .. })
        ));
        assert!(matches!(brute_force_bs(7), Err(Error::UnsupportedN { .. })));
    }
}
