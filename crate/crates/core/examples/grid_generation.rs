//! One set generating ever larger algebras on square grids, and the
//! coloring test for generation.
//!
//! `cargo run --example grid_generation`

use ms4wb::algebra::{generated_subalgebra, is_generating};
use ms4wb::corpus::{et_grid, growth_probe};
use ms4wb::{Model, Operator};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let series = growth_probe("et_grid", &[1, 2, 3, 4, 5, 6], 128)?;
    for (m, size) in series.params.iter().zip(&series.sizes) {
        println!("m = {m}: |<g>| = {size}");
    }
    println!("strictly increasing: {}", series.strictly_increasing);

    let (grid, g) = et_grid(3)?;
    let model = Model::from(&grid);
    let sub = generated_subalgebra(&model, &[g], &[Operator::Ex1, Operator::Ex2])?;
    println!(
        "3x3 grid: {} atoms after {} refinement rounds",
        sub.atoms.len(),
        sub.closure_steps
    );
    let gen = is_generating(&model, &[g])?;
    println!(
        "g generates everything: {} (search by {:?}, methods agree: {})",
        gen.generating, gen.search_method, gen.methods_agree
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
