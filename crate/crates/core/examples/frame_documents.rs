//! Reading and writing frame documents, quotients, isomorphism and DOT.
//!
//! `cargo run --example frame_documents`

use ms4wb::cli;
use ms4wb::corpus::AnyFrame;
use ms4wb::frame::{find_isomorphism, frame_to_dot};
use ms4wb::json::{frame_to_string, parse_ms4};
use ms4wb::Partition;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = r#"{"type":"ms4","points":["a","b","c","d"],
                   "R":[["a","b"],["c","d"]],"E":[["a","c"],["b","d"]]}"#;
    let f = parse_ms4(text)?;
    println!("{}", frame_to_dot(&f));

    let k = Partition::new(4, vec![vec![0, 2], vec![1, 3]])?;
    let report = f.is_correct_partition(&k)?;
    println!("{{a,c}},{{b,d}} correct: {}", report.correct);
    let q = f.quotient(&k)?;
    println!("{}", frame_to_string(&AnyFrame::Ms4(q.clone())));

    let chain =
        parse_ms4(r#"{"type":"ms4","points":["x","y"],"R":[["x","y"]],"E":[["x"],["y"]]}"#)?;
    println!(
        "quotient is the two-point chain: {}",
        find_isomorphism(&q, &chain)?.is_some()
    );

    let r = cli::run_with_input(["ms4wb", "classify", "-"], &mut text.as_bytes());
    println!("ms4wb classify -> exit {}: {}", r.exit_code, r.summary);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
