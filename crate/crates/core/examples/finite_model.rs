//! Moving a falsifying valuation into the finite algebra spanned by the
//! values of its subformulas.
//!
//! `cargo run --example finite_model`

use ms4wb::algebra::{check_ms4_identities, falsification_transfer, fmp_restrict};
use ms4wb::corpus::fig2g;
use ms4wb::formula::{eval_subterms, is_valid, parse};
use ms4wb::Model;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = fig2g();
    let phi = parse("<>p -> E p")?;
    let model = Model::from(&f);
    let verdict = is_valid(&model, &phi)?;
    let v = verdict
        .counterexample()
        .expect("the bridge axiom fails on G");
    println!("{phi} fails under {}", v.describe(f.names()));

    let values: Vec<_> = eval_subterms(&model, &phi, v)?
        .into_iter()
        .map(|(_, u)| u)
        .collect();
    let alg = fmp_restrict(&f, &values)?;
    println!(
        "finite algebra: {} elements, {} atoms",
        alg.len(),
        alg.atoms().len()
    );
    println!(
        "identity failures: {}",
        check_ms4_identities(&alg, true)?.len()
    );

    let report = falsification_transfer(&f, &phi, v)?;
    println!(
        "values identical: {}, still falsified: {}",
        report.values_identical, report.still_falsified
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
