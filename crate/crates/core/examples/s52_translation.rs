//! Translating an S5_2-frame into a two-layer MS4-frame, lifting a
//! partition, relativizing to the bottom layer, and comparing subalgebras.
//!
//! `cargo run --example s52_translation`

use ms4wb::corpus::snake;
use ms4wb::frame::find_isomorphism;
use ms4wb::s52::{lift_partition, relativize, subalgebra_transfer, translate};
use ms4wb::{Partition, PointSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = snake(8)?;
    let tf = translate(&f)?;
    println!(
        "snake(8) -> {} points, top layer {:?}",
        tf.len(),
        tf.names_of(&tf.layer_set(1)?)
    );

    let k = Partition::single_block(f.len());
    let k_hat = lift_partition(&f, &k)?;
    let left = translate(&f.quotient(&k)?)?;
    let right = tf.quotient(&k_hat)?;
    println!(
        "T(F/K) ~ T(F)/K^: {}",
        find_isomorphism(&left, &right)?.is_some()
    );

    let rel = relativize(&tf, 2)?;
    println!(
        "bottom layer algebra: {} elements, matches the S5_2 dual: {:?}",
        rel.algebra.len(),
        rel.matches_s52
    );

    let g = PointSet::singleton(tf.len(), 0);
    let t = subalgebra_transfer(&f, &[g])?;
    println!(
        "|B| = {}, |B'| = {}, K^ inside L: {}",
        t.b_size, t.b_prime_size, t.k_hat_refines_l
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
