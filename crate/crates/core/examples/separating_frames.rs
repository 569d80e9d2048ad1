//! Two small frames that separate the bridge axiom from symmetry.
//!
//! `cargo run --example separating_frames`

use ms4wb::corpus::{fig2f, fig2g};
use ms4wb::formula::{axiom, is_valid, parse};
use ms4wb::Model;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let checks = [
        ("bridge", parse("<>p -> E p")?),
        ("symmetry", parse("<>[]p -> []p")?),
        ("ms4s", axiom("ms4s", None)?),
    ];
    for (name, frame) in [("F", fig2f()), ("G", fig2g())] {
        let model = Model::from(&frame);
        for (label, phi) in &checks {
            let verdict = is_valid(&model, phi)?;
            match verdict.counterexample() {
                None => println!("{name} validates {label}: {phi}"),
                Some(v) => println!(
                    "{name} refutes {label}: {phi} under {}",
                    v.describe(frame.names())
                ),
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
