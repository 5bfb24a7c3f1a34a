//! Reduce a quadruple to the canonical representative of its class.
//!
//! Every member of BS(n+1,n) lies in an orbit of the order-4096 symmetry
//! group, and each orbit contains exactly one code satisfying the canonical
//! conditions. `canonical_code` finds it by sweeping the whole group with
//! code-level label permutations.
//!
//! Usage: cargo run --example canonical_demo

use baseq::{
    canonical_code, canonicalize, decode, encode, is_canonical, Generator, GroupElement, Parity,
    QuadCode,
};

fn main() -> baseq::Result<()> {
    let code = QuadCode::parse("06142;1675", 8)?;
    println!("start:      {code}   canonical: {}", is_canonical(&code));

    let canon = canonical_code(&code)?;
    println!("canonical:  {canon}   canonical: {}", is_canonical(&canon));

    // Canonicalization is a class function: every transformed copy of the
    // quadruple reduces to the same code.
    let s = decode(&code);
    let parity = Parity::of(s.n());
    for gens in [
        vec![Generator::Nu(1)],
        vec![Generator::Rho(3), Generator::Sigma1],
        vec![Generator::Alpha, Generator::Theta, Generator::Nu(4)],
    ] {
        let mut g = GroupElement::identity(parity);
        for gen in &gens {
            g = g.mul(&GroupElement::generator(*gen, parity)?)?;
        }
        let moved = g.apply(&s)?;
        let reduced = encode(&canonicalize(&moved)?)?;
        println!(
            "apply {:<24} -> {}   canonicalizes back: {}",
            g.to_string(),
            encode(&moved)?,
            reduced == canon
        );
    }

    // Idempotence: the canonical representative reduces to itself.
    assert_eq!(canonical_code(&canon)?, canon);
    println!("canonical_code is idempotent: true");
    Ok(())
}
