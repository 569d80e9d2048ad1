//! JSON documents for frames and valuations.
//!
//! ```json
//! {"type":"ms4","points":["a","b"],"R":[["a","b"]],"E":[["a","b"]],"closure":true}
//! {"type":"s52","points":["0","1"],"E1":[["0"],["1"]],"E2":[["0","1"]]}
//! {"p":["a","b"]}
//! ```

use std::collections::BTreeMap;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::corpus::AnyFrame;
use crate::error::{Error, Result};
use crate::formula::Valuation;
use crate::frame::{build_frame, ClosureMode, Frame};
use crate::model::Model;
use crate::partition::Partition;
use crate::pointset::PointSet;
use crate::s52::{build_s52, S52Frame};

fn default_closure() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FrameDocument {
    Ms4 {
        points: Vec<String>,
        #[serde(rename = "R", default)]
        r: Vec<(String, String)>,
        #[serde(rename = "E", default)]
        e: Vec<Vec<String>>,
        #[serde(default = "default_closure")]
        closure: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        layers: Option<IndexMap<String, usize>>,
    },
    S52 {
        points: Vec<String>,
        #[serde(rename = "E1")]
        e1: Vec<Vec<String>>,
        #[serde(rename = "E2")]
        e2: Vec<Vec<String>>,
    },
}

fn blocks_by_name(names: &[String], p: &Partition) -> Vec<Vec<String>> {
    p.blocks()
        .iter()
        .map(|b| b.iter().map(|&i| names[i].clone()).collect())
        .collect()
}

impl FrameDocument {
    /// `R` is written as its non-reflexive pairs with `closure: true`.
    pub fn from_frame(f: &Frame) -> FrameDocument {
        let names = f.names();
        FrameDocument::Ms4 {
            points: names.to_vec(),
            r: f.r()
                .pairs()
                .filter(|(x, y)| x != y)
                .map(|(x, y)| (names[x].clone(), names[y].clone()))
                .collect(),
            e: blocks_by_name(names, f.e()),
            closure: true,
            layers: f
                .layers()
                .map(|l| names.iter().cloned().zip(l.iter().copied()).collect()),
        }
    }

    pub fn from_s52(f: &S52Frame) -> FrameDocument {
        FrameDocument::S52 {
            points: f.names().to_vec(),
            e1: blocks_by_name(f.names(), f.e1()),
            e2: blocks_by_name(f.names(), f.e2()),
        }
    }

    pub fn from_any(f: &AnyFrame) -> FrameDocument {
        match f {
            AnyFrame::Ms4(f) => FrameDocument::from_frame(f),
            AnyFrame::S52(f) => FrameDocument::from_s52(f),
        }
    }

    pub fn build(&self) -> Result<AnyFrame> {
        match self {
            FrameDocument::Ms4 {
                points,
                r,
                e,
                closure,
                layers,
            } => {
                let mode = if *closure {
                    ClosureMode::Close
                } else {
                    ClosureMode::Validate
                };
                let f = build_frame(points, r, e, mode)?;
                let f = match layers {
                    None => f,
                    Some(map) => {
                        let mut tags = vec![None; f.len()];
                        for (name, &t) in map {
                            tags[f.index_of(name)?] = Some(t);
                        }
                        let tags =
                            tags.into_iter()
                                .collect::<Option<Vec<_>>>()
                                .ok_or_else(|| {
                                    Error::Document("layer map does not cover every point".into())
                                })?;
                        f.with_layers(tags)?
                    }
                };
                Ok(AnyFrame::Ms4(f))
            }
            FrameDocument::S52 { points, e1, e2 } => Ok(AnyFrame::S52(build_s52(points, e1, e2)?)),
        }
    }
}

fn doc_error(e: serde_json::Error) -> Error {
    Error::Document(e.to_string())
}

pub fn parse_frame_document(text: &str) -> Result<AnyFrame> {
    serde_json::from_str::<FrameDocument>(text)
        .map_err(doc_error)?
        .build()
}

pub fn parse_ms4(text: &str) -> Result<Frame> {
    match parse_frame_document(text)? {
        AnyFrame::Ms4(f) => Ok(f),
        AnyFrame::S52(_) => Err(Error::Document("expected an ms4 document".into())),
    }
}

pub fn parse_s52(text: &str) -> Result<S52Frame> {
    match parse_frame_document(text)? {
        AnyFrame::S52(f) => Ok(f),
        AnyFrame::Ms4(_) => Err(Error::Document("expected an s52 document".into())),
    }
}

pub fn frame_to_value(f: &AnyFrame) -> Value {
    serde_json::to_value(FrameDocument::from_any(f)).expect("documents serialize")
}

pub fn frame_to_string(f: &AnyFrame) -> String {
    serde_json::to_string_pretty(&FrameDocument::from_any(f)).expect("documents serialize")
}

/// A count as a JSON number, or as a decimal string beyond `u64`.
pub fn count_to_value(n: u128) -> Value {
    u64::try_from(n).map_or_else(|_| Value::from(n.to_string()), Value::from)
}

pub(crate) fn serialize_count<S: serde::Serializer>(
    n: &u128,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    count_to_value(*n).serialize(s)
}

/// Names of the points in `s`, in point order.
pub fn set_to_value(names: &[String], s: &PointSet) -> Value {
    Value::from(s.iter().map(|i| names[i].clone()).collect::<Vec<_>>())
}

pub fn sets_to_value(names: &[String], sets: &[PointSet]) -> Value {
    Value::from(
        sets.iter()
            .map(|s| set_to_value(names, s))
            .collect::<Vec<_>>(),
    )
}

pub fn partition_to_value(names: &[String], p: &Partition) -> Value {
    serde_json::to_value(blocks_by_name(names, p)).expect("strings serialize")
}

pub fn parse_set(model: &Model<'_>, names: &[String]) -> Result<PointSet> {
    let n = model.len();
    let mut s = PointSet::empty(n);
    for name in names {
        let i = model
            .names()
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| Error::UnknownPoint(name.clone()))?;
        s.insert(i);
    }
    Ok(s)
}

/// A list of point-name lists, e.g. `[["a"],["a","b"]]`.
pub fn parse_sets(model: &Model<'_>, text: &str) -> Result<Vec<PointSet>> {
    let lists: Vec<Vec<String>> = serde_json::from_str(text).map_err(doc_error)?;
    lists.iter().map(|l| parse_set(model, l)).collect()
}

pub fn parse_partition(model: &Model<'_>, text: &str) -> Result<Partition> {
    let blocks: Vec<Vec<String>> = serde_json::from_str(text).map_err(doc_error)?;
    let idx = blocks
        .iter()
        .map(|b| Ok(parse_set(model, b)?.iter().collect()))
        .collect::<Result<Vec<Vec<usize>>>>()?;
    Partition::new(model.len(), idx)
}

/// `{"p":["a","b"]}`.
pub fn parse_valuation(model: &Model<'_>, text: &str) -> Result<Valuation> {
    let map: BTreeMap<String, Vec<String>> = serde_json::from_str(text).map_err(doc_error)?;
    let mut v = Valuation::new();
    for (var, pts) in map {
        v.insert(var, parse_set(model, &pts)?);
    }
    Ok(v)
}

pub fn valuation_to_value(names: &[String], v: &Valuation) -> Value {
    Value::Object(
        v.iter()
            .map(|(k, s)| (k.clone(), set_to_value(names, s)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{builtin, BUILTIN_NAMES};

    #[test]
    fn documented_example() {
        let f = parse_ms4(
            r#"{"type":"ms4","points":["a","b"],"R":[["a","b"]],"E":[["a","b"]],"closure":true}"#,
        )
        .unwrap();
        assert!(f.r().contains(0, 1) && !f.r().contains(1, 0));
        assert_eq!(f.e().num_blocks(), 1);
        let doc = serde_json::to_string(&FrameDocument::from_frame(&f)).unwrap();
        assert_eq!(
            doc,
            r#"{"type":"ms4","points":["a","b"],"R":[["a","b"]],"E":[["a","b"]],"closure":true}"#
        );
    }

    #[test]
    fn closure_defaults_to_true() {
        let f =
            parse_ms4(r#"{"type":"ms4","points":["a","b","c"],"R":[["a","b"],["b","c"]],"E":[]}"#)
                .unwrap();
        assert!(f.r().contains(0, 2));
        let strict = r#"{"type":"ms4","points":["a","b","c"],"R":[["a","b"],["b","c"]],"E":[],"closure":false}"#;
        assert!(parse_ms4(strict).is_err());
    }

    #[test]
    fn layers_round_trip() {
        let text = r#"{"type":"ms4","points":["a","b"],"R":[["a","b"]],"E":[["a"],["b"]],"layers":{"a":2,"b":1}}"#;
        let f = parse_ms4(text).unwrap();
        assert_eq!(f.layers(), Some(&[2, 1][..]));
        let partial = r#"{"type":"ms4","points":["a","b"],"R":[],"E":[],"layers":{"a":2}}"#;
        assert!(matches!(parse_ms4(partial), Err(Error::Document(_))));
    }

    #[test]
    fn builtins_round_trip() {
        for name in BUILTIN_NAMES {
            let param = match *name {
                "snake" => Some(6),
                "et_grid" => Some(3),
                "three_layer" => Some(2),
                _ => None,
            };
            let b = builtin(name, param).unwrap();
            let back = parse_frame_document(&frame_to_string(&b.frame)).unwrap();
            assert_eq!(back, b.frame, "{name}");
        }
    }

    #[test]
    fn bad_documents() {
        assert!(matches!(parse_frame_document("{"), Err(Error::Document(_))));
        assert!(matches!(
            parse_frame_document(r#"{"type":"s5","points":["a"]}"#),
            Err(Error::Document(_))
        ));
        assert!(matches!(
            parse_frame_document(r#"{"type":"ms4","points":["a"],"R":[["a","z"]],"E":[]}"#),
            Err(Error::UnknownPoint(_))
        ));
    }

    #[test]
    fn valuations() {
        let b = builtin("fig2F", None).unwrap();
        let m = b.frame.model();
        let v = parse_valuation(&m, r#"{"p":["b"],"q":[]}"#).unwrap();
        assert_eq!(v.get("p").unwrap().len(), 1);
        let back = valuation_to_value(m.names(), &v);
        assert_eq!(back.to_string(), r#"{"p":["b"],"q":[]}"#);
        assert!(parse_valuation(&m, r#"{"p":["zz"]}"#).is_err());
    }
}
