//! Explore sequences that share a norm without being trivially equivalent.
//!
//! Negating or reversing a +-1 sequence never changes its autocorrelation
//! norm. The converse fails: the composed products below share every
//! autocorrelation value yet are not related by negation/reversal. The scan
//! at the end searches all short sequences for such "norm twins".
//!
//! Usage: cargo run --release --example norm_twins [max_len]

use baseq::{composed_product, negrev_equivalent, norm_twin_groups, same_norm, SignPolynomial};

fn main() -> baseq::Result<()> {
    let max_len: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_len must be a nonnegative integer"))
        .unwrap_or(10);

    // Two composed products of the same factor pair, differing only in
    // which factors get coefficient-reversed ("dualized").
    let p: SignPolynomial = "++-".parse()?;
    let q: SignPolynomial = "+--".parse()?;
    let u = composed_product(&[p.clone(), q.clone()], &[false, false])?;
    let v = composed_product(&[p.clone(), q.dual().negated()], &[false, false])?;
    println!("U = {u}");
    println!("V = {v}");
    println!("same norm          : {}", same_norm(&u, &v));
    println!("negation/reversal  : {}", negrev_equivalent(&u, &v));
    println!("N_U = {:?}", u.naf_vector().values());

    // Exhaustive scan: group all sequences of each length by norm and list
    // the norms carried by more than one negation/reversal class.
    for len in 0..=max_len {
        let groups = norm_twin_groups(len)?;
        if groups.is_empty() {
            println!("len {len:>2}: no norm twins");
        } else {
            println!("len {len:>2}: {} twin norm(s)", groups.len());
            for g in groups {
                println!("        naf {:?}", g.naf);
                for r in &g.representatives {
                    println!("          {r}");
                }
            }
        }
    }
    Ok(())
}
