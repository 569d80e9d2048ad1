//! The `ms4wb` command line. [`run`] parses arguments, dispatches to the
//! library, and returns a [`Report`]; the binary only prints it.

use std::io::Read;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{congruences, falsification_transfer, generated_subalgebra, is_generating};
use crate::corpus::BUILTIN_NAMES;
use crate::corpus::{
    builtin, enumerate_frames, growth_probe, recurrence_probe, sn_chain, AnyFrame, FrameKind,
};
use crate::error::Error;
use crate::formula::{eval, fast_path, is_valid, parse, parse_axiom_spec, Validity};
use crate::frame::{find_isomorphism, frame_to_dot, s52_to_dot, Frame};
use crate::json::{
    count_to_value, frame_to_string, frame_to_value, parse_frame_document, parse_partition,
    parse_set, parse_sets, parse_valuation, partition_to_value, set_to_value, sets_to_value,
    valuation_to_value,
};
use crate::model::{Model, Operator};
use crate::pointset::PointSet;
use crate::s52::{
    lift_partition, relativize, relativize_to, subalgebra_transfer, translate, S52Frame,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: Vec<String>,
    pub result: Value,
    /// Text for standard output: a JSON document, or DOT for `dot`.
    pub stdout: String,
    /// One or more lines for standard error.
    pub summary: String,
    pub exit_code: i32,
}

#[derive(Parser, Debug)]
#[command(name = "ms4wb", version, about = "Finite MS4 and S5_2 frame workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FrameArg {
    /// Frame JSON file, or `-` for standard input.
    frame: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check axioms, e.g. `--axioms ms4s,P:2,alt0:1`.
    Check {
        #[command(flatten)]
        input: FrameArg,
        #[arg(long, value_delimiter = ',', required = true)]
        axioms: Vec<String>,
    },
    /// Depth, layers, Q-roots, s.i. and simplicity.
    Classify {
        #[command(flatten)]
        input: FrameArg,
    },
    /// Decide frame validity of a formula.
    Validity {
        #[command(flatten)]
        input: FrameArg,
        formula: String,
    },
    /// Evaluate a formula under a valuation.
    Eval {
        #[command(flatten)]
        input: FrameArg,
        formula: String,
        /// Inline JSON such as `{"p":["a"]}`, or a file.
        #[arg(long)]
        valuation: String,
    },
    /// Congruences via Q-upsets, E-saturated R-upsets and filters.
    Congruences {
        #[command(flatten)]
        input: FrameArg,
    },
    /// The subalgebra generated by some sets.
    Subalgebra {
        #[command(flatten)]
        input: FrameArg,
        /// Inline JSON list of point-name lists, or a file.
        #[arg(long)]
        gens: String,
        /// Operators, e.g. `dia,ex`; defaults to the frame's own.
        #[arg(long, value_delimiter = ',')]
        ops: Vec<String>,
    },
    /// Do the given sets generate the whole dual algebra?
    Generating {
        #[command(flatten)]
        input: FrameArg,
        #[arg(long)]
        gens: String,
    },
    /// Transfer a falsifying valuation to the finite algebra of its values.
    Fmp {
        #[command(flatten)]
        input: FrameArg,
        formula: String,
        /// Defaults to the first counterexample found.
        #[arg(long)]
        valuation: Option<String>,
    },
    /// Translate an S5_2-frame into a layered MS4-frame.
    Translate {
        #[command(flatten)]
        input: FrameArg,
    },
    /// Lift a correct partition of an S5_2-frame to its translation.
    Lift {
        #[command(flatten)]
        input: FrameArg,
        #[arg(long)]
        partition: String,
    },
    /// Relativize the dual algebra to a layer or a set of points.
    Relativize {
        #[command(flatten)]
        input: FrameArg,
        #[arg(long, conflicts_with = "domain")]
        layer: Option<usize>,
        #[arg(long)]
        domain: Option<String>,
    },
    /// Compare generated subalgebras of an S5_2-frame and its translation.
    Transfer {
        #[command(flatten)]
        input: FrameArg,
        /// Sets of points of the translated frame.
        #[arg(long)]
        gens: String,
    },
    /// Quotient by a correct partition.
    Quotient {
        #[command(flatten)]
        input: FrameArg,
        #[arg(long)]
        partition: String,
    },
    /// Search for an isomorphism between two frames.
    Iso { left: String, right: String },
    /// Builtin frames.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Subalgebra sizes along a builtin family.
    Probe {
        /// `et_grid`, `snake` or `three_layer`.
        family: String,
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<usize>,
        #[arg(long, default_value_t = 128)]
        max_points: usize,
        /// Probe the s_n recurrence instead (three_layer only).
        #[arg(long)]
        recurrence: bool,
    },
    /// The recurrence s_0 = g, s_(n+1) = E<>s_n - d.
    Chain {
        #[command(flatten)]
        input: FrameArg,
        #[arg(long)]
        g: String,
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = 10)]
        steps: usize,
    },
    /// Every labelled frame on n points.
    Enumerate {
        n: usize,
        #[arg(long, default_value = "ms4")]
        kind: String,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Graphviz rendering.
    Dot {
        #[command(flatten)]
        input: FrameArg,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusAction {
    List,
    Emit { name: String, param: Option<usize> },
}

/// Runs one invocation, reading `-` arguments from standard input.
pub fn run<I, S>(argv: I) -> Report
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut stdin = std::io::stdin();
    run_with_input(argv, &mut stdin)
}

/// As [`run`], with standard input replaced by `input`.
pub fn run_with_input<I, S>(argv: I, input: &mut dyn Read) -> Report
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let command = argv.iter().skip(1).cloned().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return Report {
                command,
                result: Value::Null,
                stdout: if code == EXIT_OK {
                    e.to_string()
                } else {
                    String::new()
                },
                summary: if code == EXIT_OK {
                    String::new()
                } else {
                    e.to_string()
                },
                exit_code: code,
            };
        }
    };
    let mut ctx = Ctx {
        stdin: input,
        used: false,
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(out) => Report {
            command,
            stdout: out.stdout.unwrap_or_else(|| pretty(&out.result)),
            result: out.result,
            summary: out.summary,
            exit_code: if out.passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            },
        },
        Err(e) => {
            let code = match e {
                Error::Internal(_) => EXIT_INTERNAL,
                _ => EXIT_USAGE,
            };
            Report {
                command,
                result: json!({ "error": e.to_string() }),
                stdout: String::new(),
                summary: format!("error: {e}"),
                exit_code: code,
            }
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

struct Outcome {
    result: Value,
    stdout: Option<String>,
    summary: String,
    passed: bool,
}

impl Outcome {
    fn new(result: Value, summary: impl Into<String>, passed: bool) -> Self {
        Outcome {
            result,
            stdout: None,
            summary: summary.into(),
            passed,
        }
    }

    fn frame(f: &AnyFrame, summary: impl Into<String>) -> Self {
        Outcome {
            result: frame_to_value(f),
            stdout: Some(frame_to_string(f)),
            summary: summary.into(),
            passed: true,
        }
    }
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

type CliResult = crate::error::Result<Outcome>;

impl Ctx<'_> {
    fn read(&mut self, path: &str) -> crate::error::Result<String> {
        if path == "-" {
            if self.used {
                return Err(Error::Document(
                    "standard input can only be read once".into(),
                ));
            }
            self.used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Document(format!("stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::Document(format!("{path}: {e}")))
        }
    }

    /// Inline JSON when the argument starts with `{` or `[`, else a file.
    fn inline(&mut self, arg: &str) -> crate::error::Result<String> {
        match arg.trim_start().chars().next() {
            Some('{') | Some('[') => Ok(arg.to_string()),
            _ => self.read(arg),
        }
    }

    fn frame(&mut self, path: &str) -> crate::error::Result<AnyFrame> {
        parse_frame_document(&self.read(path)?)
    }

    fn ms4(&mut self, path: &str) -> crate::error::Result<Frame> {
        match self.frame(path)? {
            AnyFrame::Ms4(f) => Ok(f),
            AnyFrame::S52(_) => Err(Error::Document("this command needs an ms4 frame".into())),
        }
    }

    fn s52(&mut self, path: &str) -> crate::error::Result<S52Frame> {
        match self.frame(path)? {
            AnyFrame::S52(f) => Ok(f),
            AnyFrame::Ms4(_) => Err(Error::Document("this command needs an s52 frame".into())),
        }
    }
}

fn names_of(m: &Model<'_>, s: &PointSet) -> String {
    format!(
        "{{{}}}",
        s.iter()
            .map(|i| m.names()[i].as_str())
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn dispatch(cmd: Command, ctx: &mut Ctx<'_>) -> CliResult {
    match cmd {
        Command::Check { input, axioms } => {
            let f = ctx.frame(&input.frame)?;
            check(&f.model(), &axioms)
        }
        Command::Classify { input } => classify(&ctx.frame(&input.frame)?),
        Command::Validity { input, formula } => {
            let f = ctx.frame(&input.frame)?;
            let m = f.model();
            let phi = parse(&formula)?;
            let v = is_valid(&m, &phi)?;
            let (result, summary) = validity_json(&m, &v);
            Ok(Outcome::new(
                json!({ "formula": phi.to_string(), "result": result }),
                summary,
                v.is_valid(),
            ))
        }
        Command::Eval {
            input,
            formula,
            valuation,
        } => {
            let f = ctx.frame(&input.frame)?;
            let m = f.model();
            let phi = parse(&formula)?;
            let v = parse_valuation(&m, &ctx.inline(&valuation)?)?;
            let value = eval(&m, &phi, &v)?;
            Ok(Outcome::new(
                json!({ "formula": phi.to_string(), "value": set_to_value(m.names(), &value),
                        "true_everywhere": value.is_full() }),
                format!("{phi} = {}", names_of(&m, &value)),
                true,
            ))
        }
        Command::Congruences { input } => {
            let f = ctx.ms4(&input.frame)?;
            let r = congruences(&f)?;
            let summary = format!(
                "{} congruences; methods agree: {}; s.i.: {}; simple: {}",
                r.count(),
                r.agree,
                r.is_si,
                r.is_simple
            );
            Ok(Outcome::new(r.to_json(f.names()), summary, r.agree))
        }
        Command::Subalgebra { input, gens, ops } => {
            let f = ctx.frame(&input.frame)?;
            let m = f.model();
            let gens = parse_sets(&m, &ctx.inline(&gens)?)?;
            let ops = if ops.is_empty() {
                m.native_operators()
            } else {
                ops.iter()
                    .map(|s| s.parse::<Operator>())
                    .collect::<crate::error::Result<_>>()?
            };
            let r = generated_subalgebra(&m, &gens, &ops)?;
            let summary = format!("{} atoms, {} elements", r.atoms.len(), r.size);
            Ok(Outcome::new(r.to_json(m.names()), summary, true))
        }
        Command::Generating { input, gens } => {
            let f = ctx.frame(&input.frame)?;
            let m = f.model();
            let gens = parse_sets(&m, &ctx.inline(&gens)?)?;
            let r = is_generating(&m, &gens)?;
            if !r.methods_agree {
                return Err(Error::Internal(
                    "kernel of the generated subalgebra differs from the partition search".into(),
                ));
            }
            let names = m.names();
            Ok(Outcome::new(
                json!({
                    "generating": r.generating,
                    "coloring": partition_to_value(names, &r.coloring),
                    "kernel": partition_to_value(names, &r.kernel),
                    "search": partition_to_value(names, &r.search),
                    "search_method": r.search_method,
                    "methods_agree": r.methods_agree,
                }),
                format!("generating: {}", r.generating),
                r.generating,
            ))
        }
        Command::Fmp {
            input,
            formula,
            valuation,
        } => {
            let f = ctx.ms4(&input.frame)?;
            let m = Model::Ms4(&f);
            let phi = parse(&formula)?;
            let v = match valuation {
                Some(text) => parse_valuation(&m, &ctx.inline(&text)?)?,
                None => match is_valid(&m, &phi)? {
                    Validity::Valid => {
                        return Err(Error::Precondition("formula is valid on this frame".into()))
                    }
                    Validity::Counterexample(v) => v,
                },
            };
            let r = falsification_transfer(&f, &phi, &v)?;
            let summary = format!(
                "finite algebra of size {}: values identical: {}; still falsified: {}",
                r.algebra_size, r.values_identical, r.still_falsified
            );
            let mut result = serde_json::to_value(&r).expect("report serializes");
            result["valuation"] = valuation_to_value(f.names(), &v);
            Ok(Outcome::new(result, summary, r.succeeded()))
        }
        Command::Translate { input } => {
            let f = ctx.s52(&input.frame)?;
            let t = translate(&f)?;
            let summary = format!("{} points in two layers", t.len());
            Ok(Outcome::frame(&AnyFrame::Ms4(t), summary))
        }
        Command::Lift { input, partition } => {
            let f = ctx.s52(&input.frame)?;
            let k = parse_partition(&Model::S52(&f), &ctx.inline(&partition)?)?;
            let t = translate(&f)?;
            let k_hat = lift_partition(&f, &k)?;
            Ok(Outcome::new(
                json!({ "partition": partition_to_value(t.names(), &k_hat) }),
                format!("{} blocks on the translated frame", k_hat.num_blocks()),
                true,
            ))
        }
        Command::Relativize {
            input,
            layer,
            domain,
        } => {
            let f = ctx.ms4(&input.frame)?;
            let rel = match (layer, domain) {
                (Some(i), _) => relativize(&f, i)?,
                (None, Some(d)) => {
                    let names: Vec<String> = serde_json::from_str(&ctx.inline(&d)?)
                        .map_err(|e| Error::Document(e.to_string()))?;
                    relativize_to(&f, &parse_set(&Model::Ms4(&f), &names)?)?
                }
                (None, None) => {
                    return Err(Error::BadParameter {
                        name: "relativize".into(),
                        msg: "give --layer or --domain".into(),
                    })
                }
            };
            let restricted = rel
                .restricted
                .as_ref()
                .map(|s| frame_to_value(&AnyFrame::S52(s.clone())));
            Ok(Outcome::new(
                json!({
                    "domain": set_to_value(f.names(), &rel.domain),
                    "algebra_size": rel.algebra.len(),
                    "carrier": rel.algebra.carrier_names(),
                    "restricted": restricted,
                    "matches_s52": rel.matches_s52,
                }),
                format!(
                    "relativized algebra has {} elements; matches S5_2 dual: {:?}",
                    rel.algebra.len(),
                    rel.matches_s52
                ),
                rel.matches_s52 != Some(false),
            ))
        }
        Command::Transfer { input, gens } => {
            let f = ctx.s52(&input.frame)?;
            let t = translate(&f)?;
            let gens = parse_sets(&Model::Ms4(&t), &ctx.inline(&gens)?)?;
            let r = subalgebra_transfer(&f, &gens)?;
            let summary = format!(
                "|B| = {}, |B'| = {}, lifted kernel refines L: {}",
                r.b_size, r.b_prime_size, r.k_hat_refines_l
            );
            Ok(Outcome::new(
                serde_json::to_value(&r).expect("report serializes"),
                summary,
                r.k_hat_refines_l,
            ))
        }
        Command::Quotient { input, partition } => {
            let f = ctx.frame(&input.frame)?;
            let k = parse_partition(&f.model(), &ctx.inline(&partition)?)?;
            let q = match &f {
                AnyFrame::Ms4(g) => {
                    let report = g.is_correct_partition(&k)?;
                    if !report.correct {
                        return Ok(Outcome::new(
                            serde_json::to_value(&report).expect("report serializes"),
                            "partition is not correct",
                            false,
                        ));
                    }
                    AnyFrame::Ms4(g.quotient(&k)?)
                }
                AnyFrame::S52(g) => {
                    if let Some(fail) = g.correctness_failure(&k)? {
                        return Ok(Outcome::new(
                            json!({ "correct": false, "failure": fail }),
                            "partition is not correct",
                            false,
                        ));
                    }
                    AnyFrame::S52(g.quotient(&k)?)
                }
            };
            let summary = format!("quotient has {} points", q.model().len());
            Ok(Outcome::frame(&q, summary))
        }
        Command::Iso { left, right } => {
            let a = ctx.frame(&left)?;
            let b = ctx.frame(&right)?;
            let as_ms4 = |f: &AnyFrame| match f {
                AnyFrame::Ms4(g) => Ok(g.clone()),
                AnyFrame::S52(g) => translate(g),
            };
            if matches!(
                (&a, &b),
                (AnyFrame::Ms4(_), AnyFrame::S52(_)) | (AnyFrame::S52(_), AnyFrame::Ms4(_))
            ) {
                return Err(Error::Document(
                    "both frames must have the same type".into(),
                ));
            }
            let (fa, fb) = (as_ms4(&a)?, as_ms4(&b)?);
            let iso = find_isomorphism(&fa, &fb)?;
            let mapping = iso.as_ref().map(|m| {
                Value::Object(
                    m.iter()
                        .enumerate()
                        .filter(|&(i, _)| i < a.model().len())
                        .map(|(i, &j)| (fa.names()[i].clone(), Value::from(fb.names()[j].clone())))
                        .collect(),
                )
            });
            let found = iso.is_some();
            Ok(Outcome::new(
                json!({ "isomorphic": found, "mapping": mapping }),
                format!("isomorphic: {found}"),
                found,
            ))
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => Ok(Outcome::new(
                json!(BUILTIN_NAMES),
                BUILTIN_NAMES.join(", "),
                true,
            )),
            CorpusAction::Emit { name, param } => {
                let b = builtin(&name, param)?;
                let mut summary = format!("{} with {} points", name, b.frame.model().len());
                for (set, s) in &b.sets {
                    summary.push_str(&format!("; {set} = {}", names_of(&b.frame.model(), s)));
                }
                Ok(Outcome::frame(&b.frame, summary))
            }
        },
        Command::Probe {
            family,
            params,
            max_points,
            recurrence,
        } => {
            let s = if recurrence {
                if family != "three_layer" {
                    return Err(Error::BadParameter {
                        name: family,
                        msg: "the recurrence probe runs on three_layer".into(),
                    });
                }
                recurrence_probe(&params)?
            } else {
                growth_probe(&family, &params, max_points)?
            };
            let sizes: Vec<Value> = s.sizes.iter().map(|&n| count_to_value(n)).collect();
            let summary = format!(
                "{}: sizes {:?}; strictly increasing: {}; truncated: {}",
                s.family, s.sizes, s.strictly_increasing, s.truncated
            );
            Ok(Outcome::new(
                json!({
                    "family": s.family,
                    "params": s.params,
                    "sizes": sizes,
                    "strictly_increasing": s.strictly_increasing,
                    "truncated": s.truncated,
                }),
                summary,
                true,
            ))
        }
        Command::Chain { input, g, d, steps } => {
            let f = ctx.ms4(&input.frame)?;
            let m = Model::Ms4(&f);
            let read_set = |ctx: &mut Ctx<'_>, arg: &str| -> crate::error::Result<PointSet> {
                let names: Vec<String> = serde_json::from_str(&ctx.inline(arg)?)
                    .map_err(|e| Error::Document(e.to_string()))?;
                parse_set(&m, &names)
            };
            let g = read_set(ctx, &g)?;
            let d = read_set(ctx, &d)?;
            let c = sn_chain(&f, &g, &d, steps)?;
            Ok(Outcome::new(
                json!({ "sets": sets_to_value(f.names(), &c.sets), "distinct": c.distinct }),
                format!("{} distinct sets in {} steps", c.distinct, steps),
                true,
            ))
        }
        Command::Enumerate { n, kind, count } => {
            let kind: FrameKind = kind.parse()?;
            let frames = enumerate_frames(n, kind)?;
            if count {
                let c = frames.count();
                Ok(Outcome::new(
                    json!({ "count": c }),
                    format!("{c} frames"),
                    true,
                ))
            } else {
                let docs: Vec<Value> = frames.map(|f| frame_to_value(&f)).collect();
                let c = docs.len();
                Ok(Outcome::new(Value::from(docs), format!("{c} frames"), true))
            }
        }
        Command::Dot { input } => {
            let f = ctx.frame(&input.frame)?;
            let text = match &f {
                AnyFrame::Ms4(g) => frame_to_dot(g),
                AnyFrame::S52(g) => s52_to_dot(g),
            };
            Ok(Outcome {
                result: Value::from(text.clone()),
                stdout: Some(text),
                summary: String::new(),
                passed: true,
            })
        }
    }
}

fn validity_json(m: &Model<'_>, v: &Validity) -> (Value, String) {
    match v {
        Validity::Valid => (json!({ "valid": true }), "valid".to_string()),
        Validity::Counterexample(val) => {
            let described = val
                .iter()
                .map(|(k, s)| format!("V({k})={}", names_of(m, s)))
                .collect::<Vec<_>>()
                .join(", ");
            (
                json!({ "valid": false, "counterexample": valuation_to_value(m.names(), val) }),
                format!("counterexample {described}"),
            )
        }
    }
}

fn check(m: &Model<'_>, axioms: &[String]) -> CliResult {
    let mut results = Vec::new();
    let mut lines = Vec::new();
    let mut all = true;
    for name in axioms {
        let spec = parse_axiom_spec(name.trim())?;
        let phi = crate::formula::axiom(&spec.name, spec.k)?;
        let fast = fast_path(m, &spec);
        let verdict = match is_valid(m, &phi) {
            Ok(v) => {
                if let Some(expected) = fast {
                    if expected != v.is_valid() {
                        return Err(Error::Internal(format!(
                            "{spec}: relational check says {expected}, valuation sweep disagrees"
                        )));
                    }
                }
                let (mut value, line) = validity_json(m, &v);
                value["axiom"] = Value::from(spec.to_string());
                all &= v.is_valid();
                lines.push(format!("{spec}: {line}"));
                value
            }
            Err(Error::BudgetExceeded { .. }) if fast.is_some() => {
                let ok = fast.expect("checked");
                all &= ok;
                lines.push(format!(
                    "{spec}: {} (relational check)",
                    if ok { "valid" } else { "invalid" }
                ));
                json!({ "axiom": spec.to_string(), "valid": ok, "method": "relational" })
            }
            Err(e) => return Err(e),
        };
        results.push(verdict);
    }
    Ok(Outcome::new(
        json!({ "results": results, "all_valid": all }),
        lines.join("\n"),
        all,
    ))
}

fn classify(f: &AnyFrame) -> CliResult {
    match f {
        AnyFrame::Ms4(g) => {
            let c = g.classify();
            let mut result = serde_json::to_value(&c).expect("report serializes");
            result["layers"] = sets_to_value(g.names(), &c.layers);
            result["q_roots"] = set_to_value(g.names(), &c.q_roots);
            let summary = format!(
                "depth {}, s.i.: {}, simple: {}",
                c.depth, c.is_si, c.is_simple
            );
            let summary = if c.is_simple {
                format!("depth {}, simple", c.depth)
            } else {
                summary
            };
            Ok(Outcome::new(result, summary, true))
        }
        AnyFrame::S52(g) => {
            let a = g.analyze();
            let mut result = serde_json::to_value(&a).expect("report serializes");
            result["roots"] = set_to_value(g.names(), &a.roots);
            let summary = format!(
                "s.i.: {}, simple: {}, transitivity degree {}",
                a.is_si, a.is_simple, a.transitivity_degree
            );
            Ok(Outcome::new(result, summary, true))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> Report {
        let argv = std::iter::once("ms4wb").chain(args.iter().copied());
        run_with_input(argv, &mut stdin.as_bytes())
    }

    #[test]
    fn check_fig2f() {
        let doc = run_str(&["corpus", "emit", "fig2F"], "").stdout;
        let r = run_str(&["check", "-", "--axioms", "s4u.bridge,s52.sym"], &doc);
        assert_eq!(r.exit_code, EXIT_CHECK_FAILED);
        assert_eq!(
            r.summary,
            "s4u.bridge: valid\ns52.sym: counterexample V(p)={b}"
        );
        assert_eq!(r.result["results"][1]["counterexample"]["p"], json!(["b"]));
    }

    #[test]
    fn emit_then_classify() {
        let doc = run_str(&["corpus", "emit", "single"], "").stdout;
        let r = run_str(&["classify", "-"], &doc);
        assert_eq!(r.exit_code, EXIT_OK);
        assert_eq!(r.summary, "depth 1, simple");
        assert_eq!(r.result["depth"], json!(1));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["frobnicate"], "").exit_code, EXIT_USAGE);
        assert_eq!(run_str(&["classify", "-"], "{").exit_code, EXIT_USAGE);
        assert_eq!(
            run_str(&["corpus", "emit", "nope"], "").exit_code,
            EXIT_USAGE
        );
        assert_eq!(
            run_str(&["classify", "/no/such/file"], "").exit_code,
            EXIT_USAGE
        );
        assert_eq!(run_str(&["--help"], "").exit_code, EXIT_OK);
    }

    #[test]
    fn translate_snake() {
        let doc = run_str(&["corpus", "emit", "snake", "8"], "").stdout;
        let r = run_str(&["translate", "-"], &doc);
        assert_eq!(r.exit_code, EXIT_OK);
        assert_eq!(r.result["points"].as_array().unwrap().len(), 12);
        assert_eq!(r.result["layers"].as_object().unwrap().len(), 12);
    }
}
