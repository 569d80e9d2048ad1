//! Congruences of a dual algebra read off the frame, and subdirect
//! irreducibility from Q-roots.
//!
//! `cargo run --example congruence_lattice`

use ms4wb::algebra::congruences;
use ms4wb::corpus::enumerate_ms4;
use ms4wb::{build_frame, ClosureMode};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let chain = build_frame(
        &["a", "b", "c"],
        &[("a", "b"), ("b", "c")],
        &[],
        ClosureMode::Close,
    )?;
    let report = congruences(&chain)?;
    println!(
        "3-chain: {} congruences, s.i. {}, simple {}",
        report.count(),
        report.is_si,
        report.is_simple
    );
    for u in &report.q_upsets {
        println!("  Q-upset {:?}", chain.names_of(u));
    }

    let (mut si, mut simple, mut total) = (0, 0, 0);
    for f in enumerate_ms4(3)? {
        let c = f.classify();
        let r = congruences(&f)?;
        assert_eq!(c.is_si, r.is_si);
        assert_eq!(c.is_simple, r.is_simple);
        total += 1;
        si += c.is_si as usize;
        simple += c.is_simple as usize;
    }
    println!("labelled 3-point frames: {total}, s.i. {si}, simple {simple}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
