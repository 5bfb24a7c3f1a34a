//! Inspect the symmetry orbit of a quadruple.
//!
//! The orbit is the set of quadruples reachable by the 4096 group elements;
//! its size divides 4096 and the quotient is the stabilizer order. Exactly
//! one orbit member per class carries the canonical code.
//!
//! Usage: cargo run --example orbit_inspect [code] [n]

use baseq::{count_classes, decode, encode, is_canonical, orbit, QuadCode};

fn main() -> baseq::Result<()> {
    let args: Vec<String> = std::env::args().collect();
    let (text, n) = match args.len() {
        3 => (args[1].as_str(), args[2].parse().expect("n")),
        1 => ("03;1", 2usize),
        _ => panic!("usage: orbit_inspect [code n]"),
    };

    let code = QuadCode::parse(text, n)?;
    let s = decode(&code);
    let orb = orbit(&s)?;
    println!("code {code} (n = {n})");
    println!("  orbit size       : {}", orb.len());
    println!("  stabilizer order : {}", 4096 / orb.len());

    let canonical: Vec<String> = orb
        .iter()
        .map(encode)
        .collect::<baseq::Result<Vec<_>>>()?
        .into_iter()
        .filter(is_canonical)
        .map(|c| c.to_string())
        .collect();
    println!("  canonical members: {}", canonical.join(", "));

    if n <= 4 {
        println!("  members:");
        for m in orb.iter().take(8) {
            println!("    {m}");
        }
        if orb.len() > 8 {
            println!("    ... ({} more)", orb.len() - 8);
        }
    }

    // Orbit sizes across all classes of one order.
    println!("\norbit sizes for every class of n = 4:");
    for c in count_classes(4)?.codes {
        let o = orbit(&decode(&c))?;
        println!("  {c}: size {:>5}, stabilizer {:>2}", o.len(), 4096 / o.len());
    }
    Ok(())
}
