//! Tour of the order-4096 symmetry group.
//!
//! The group is generated by twelve involutions: negations nu1-nu4 and
//! reversals rho1-rho4 of the four sequences, the pair swaps sigma1 and
//! sigma2, the 4<->5 quad transposition theta on (C;D), and the alternation
//! alpha of all four sequences. Every element has a unique normal-form word,
//! and products are computed in that normal form.
//!
//! Usage: cargo run --example group_tour

use baseq::{
    all_elements, decode, encode, CodeAction, Generator, GroupElement, Parity, QuadCode,
};

fn main() -> baseq::Result<()> {
    for parity in [Parity::Even, Parity::Odd] {
        let elements = all_elements(parity);
        println!("parity {parity:?}: {} elements", elements.len());
    }

    let parity = Parity::Even;
    let e = |gen| GroupElement::generator(gen, parity).expect("generator");

    // Every generator is an involution.
    for gen in Generator::all() {
        let g = e(gen);
        assert!(g.mul(&g)?.is_identity());
    }
    println!("all 12 generators square to the identity");

    // The alternation alpha almost commutes with the reversals; the
    // commutation defect depends on the parity of the sequence lengths.
    let alpha = e(Generator::Alpha);
    let rho3 = e(Generator::Rho(3));
    let conj = alpha.mul(&rho3)?.mul(&alpha)?;
    println!("alpha rho3 alpha = {conj}   (even parity)");
    let odd = |gen| GroupElement::generator(gen, Parity::Odd).expect("generator");
    let conj = odd(Generator::Alpha)
        .mul(&odd(Generator::Rho(3)))?
        .mul(&odd(Generator::Alpha))?;
    println!("alpha rho3 alpha = {conj}   (odd parity)");

    // Products stay in normal form: word() lists factors in the order they
    // act on a quadruple, rightmost first.
    let g = e(Generator::Theta).mul(&e(Generator::Sigma2))?.mul(&alpha)?;
    println!("theta * sigma2 * alpha = {g}");

    // The action matches sequence-level transformations...
    let code = QuadCode::parse("06142;1675", 8)?;
    let s = decode(&code);
    let moved = g.apply(&s)?;
    println!("applied to {code}: {}", encode(&moved)?);

    // ... and, for alpha-free elements, permutes code labels position-wise.
    let action = CodeAction::new(parity);
    let h = e(Generator::Theta).mul(&e(Generator::Nu(3)))?;
    assert_eq!(action.apply(&h, &code)?, encode(&h.apply(&s)?)?);
    println!(
        "quad-wise action agrees with the sequence action: {} -> {}",
        code,
        action.apply(&h, &code)?
    );
    Ok(())
}
