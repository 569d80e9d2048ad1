//! Parsing, printing and evaluating formulas.
//!
//! `cargo run --example formula_parsing`

use ms4wb::corpus::fig2f;
use ms4wb::formula::{axiom, eval, parse, Valuation};
use ms4wb::Model;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in [
        "#<>#[]p -> #[]p",
        "E <> p -> <> E p",
        "p & (q | r) -> ~[]p",
        "<1>p | <2>p",
    ] {
        let phi = parse(text)?;
        println!(
            "{text:<24} parses to {phi}  (size {}, depth {})",
            phi.size(),
            phi.depth()
        );
    }
    match parse("p & ") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    println!("P:2 is {}", axiom("P", Some(2))?);
    println!("alt0:1 is {}", axiom("alt0", Some(1))?);

    let f = fig2f();
    let v = Valuation::new().with("p", f.set_of(&["b"])?);
    for text in ["<>p", "[]p", "E p", "<>[]p -> []p"] {
        let value = eval(&Model::from(&f), &parse(text)?, &v)?;
        println!("{text} holds at {:?}", f.names_of(&value));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
