//! The recurrence s_0 = g, s_(n+1) = E<>s_n - d walking across the
//! columns of a three-layer frame.
//!
//! `cargo run --example three_layer_recurrence`

use ms4wb::corpus::{recurrence_probe, sn_chain, three_layer};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (f, g, d) = three_layer(2)?;
    let c = f.classify();
    println!(
        "three_layer(2): {} points, depth {}, simple {}",
        f.len(),
        c.depth,
        c.is_simple
    );
    let chain = sn_chain(&f, &g, &d, 6)?;
    for (i, s) in chain.sets.iter().enumerate() {
        println!("  s{i} = {:?}", f.names_of(s));
    }
    let series = recurrence_probe(&[2, 3, 4, 5, 6, 7, 8])?;
    println!("distinct sets for k = 2..8: {:?}", series.sizes);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
