//! Encode a quadruple of base sequences into its quad code and back.
//!
//! The code packs each mirror-symmetric 2x2 column pattern ("quad") of the
//! pairs (A;B) and (C;D) into one digit: position 1 of (A;B) always holds an
//! odd-alphabet (Golay) quad, every other position an even-alphabet quad,
//! and odd-length pairs end with a central-column digit 0-3.
//!
//! Usage: cargo run --example codec_roundtrip

use baseq::{decode, encode, theorem1_check, BaseQuadruple, BinarySequence, QuadCode};

fn seq(text: &str) -> BinarySequence {
    text.parse().expect("sign string")
}

fn main() -> baseq::Result<()> {
    let s = BaseQuadruple::new(
        seq("++++--+-+"),
        seq("+++-+++--"),
        seq("++--+--+"),
        seq("++++-+-+"),
    )?;
    println!("quadruple (n = {}):", s.n());
    println!("  A = {}", s.a);
    println!("  B = {}", s.b);
    println!("  C = {}", s.c);
    println!("  D = {}", s.d);
    println!("  base sequences: {}", s.is_base_sequences());

    let code = encode(&s)?;
    println!("  code = {code}");

    let back = decode(&code);
    assert_eq!(back, s);
    println!("  decode(encode(s)) == s: true");

    // Parsing accepts the text format with an explicit order n.
    let parsed = QuadCode::parse("06142;1675", 8)?;
    assert_eq!(parsed, code);
    println!("  parse(\"06142;1675\", 8) == encode(s): true");

    // A quadruple whose first (A;B) quad falls in the even alphabet cannot
    // be a member of BS(n+1,n); encode refuses to mislabel it.
    let bad = BaseQuadruple::new(s.a, seq("+++-+++-+"), s.c, s.d)?;
    println!("  perturbed quadruple passes the residue check: {}", theorem1_check(&bad));
    match encode(&bad) {
        Err(e) => println!("  encode on the perturbed quadruple: error: {e}"),
        Ok(c) => unreachable!("unexpected code {c}"),
    }
    Ok(())
}
