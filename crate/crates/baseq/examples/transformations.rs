//! The five elementary transformations and what they preserve.
//!
//! T1 negates one sequence, T2 reverses one, T3 swaps a pair, T4 transposes
//! the 4<->5 quad labels of (C;D), and T5 alternates the signs of all four
//! sequences. Each maps BS(n+1,n) onto itself; T4 moreover preserves the
//! pointwise sum of the (C;D) autocorrelations, not just the defining total.
//!
//! Usage: cargo run --example transformations

use baseq::{
    decode, encode, t1_negate, t2_reverse, t3_swap, t4_tau, t5_alternate, PairSlot, QuadCode,
    SeqSlot,
};

fn main() -> baseq::Result<()> {
    let s = decode(&QuadCode::parse("06142;1675", 8)?);
    println!("start: {s}   code {}", encode(&s)?);

    let shown = [
        ("T1 negate A", t1_negate(&s, SeqSlot::A)),
        ("T2 reverse D", t2_reverse(&s, SeqSlot::D)),
        ("T3 swap (A;B)", t3_swap(&s, PairSlot::Ab)),
        ("T4 tau", t4_tau(&s)?),
        ("T5 alternate", t5_alternate(&s)),
    ];
    for (name, t) in &shown {
        println!(
            "{name:<14} -> {t}   code {}   member: {}",
            encode(t)?,
            t.is_base_sequences()
        );
    }

    // T4 leaves every lag of N_C + N_D unchanged.
    let t = t4_tau(&s)?;
    print!("N_C + N_D before:");
    for lag in 0..s.c.len() {
        print!(" {}", s.c.naf(lag as i64) + s.d.naf(lag as i64));
    }
    print!("\nN_C + N_D after :");
    for lag in 0..t.c.len() {
        print!(" {}", t.c.naf(lag as i64) + t.d.naf(lag as i64));
    }
    println!();

    // All five are involutions.
    assert_eq!(t1_negate(&t1_negate(&s, SeqSlot::B), SeqSlot::B), s);
    assert_eq!(t2_reverse(&t2_reverse(&s, SeqSlot::C), SeqSlot::C), s);
    assert_eq!(t3_swap(&t3_swap(&s, PairSlot::Cd), PairSlot::Cd), s);
    assert_eq!(t4_tau(&t4_tau(&s)?)?, s);
    assert_eq!(t5_alternate(&t5_alternate(&s)), s);
    println!("each transformation applied twice returns the start: true");
    Ok(())
}
