use std::str::FromStr;

use super::AnyFrame;
use crate::error::{Error, Result};
use crate::frame::{commutation_witness, Frame};
use crate::partition::{all_partitions, Partition};
use crate::pointset::PointSet;
use crate::relation::Relation;
use crate::s52::S52Frame;

pub const ENUMERATION_CAP: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameKind {
    Ms4,
    S52,
}

impl FromStr for FrameKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ms4" => Ok(FrameKind::Ms4),
            "s52" => Ok(FrameKind::S52),
            other => Err(Error::BadParameter {
                name: "kind".into(),
                msg: format!("expected ms4 or s52, got {other}"),
            }),
        }
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyFrame);
    }
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "enumeration points".into(),
            size: n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

/// Every quasi-order on `0..n`, ordered by the bitmask of off-diagonal pairs.
pub fn quasi_orders(n: usize) -> Result<Vec<Relation>> {
    check_size(n)?;
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << off.len() {
        let mut rows: Vec<PointSet> = (0..n).map(|x| PointSet::singleton(n, x)).collect();
        for (bit, &(x, y)) in off.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                rows[x].insert(y);
            }
        }
        let transitive = (0..n).all(|x| rows[x].iter().all(|y| rows[y].is_subset(&rows[x])));
        if transitive {
            out.push(Relation::from_rows(rows));
        }
    }
    Ok(out)
}

/// All MS4-frames on the labelled points `0..n`, quasi-order-major.
pub fn enumerate_ms4(n: usize) -> Result<impl Iterator<Item = Frame>> {
    let orders = quasi_orders(n)?;
    let parts: Vec<(Partition, Relation)> = all_partitions(n)
        .into_iter()
        .map(|p| {
            let rel = p.to_relation();
            (p, rel)
        })
        .collect();
    Ok(orders.into_iter().flat_map(move |r| {
        parts
            .iter()
            .filter(|(_, e)| commutation_witness(&r, e).is_none())
            .map(|(p, _)| Frame::from_indexed(r.clone(), p.clone()).expect("checked"))
            .collect::<Vec<_>>()
    }))
}

/// All S5₂-frames on the labelled points `0..n`, `E₁`-major.
pub fn enumerate_s52(n: usize) -> Result<impl Iterator<Item = S52Frame>> {
    check_size(n)?;
    let parts = all_partitions(n);
    let inner = parts.clone();
    Ok(parts.into_iter().flat_map(move |e1| {
        inner
            .iter()
            .map(|e2| S52Frame::from_indexed(e1.clone(), e2.clone()).expect("partitions"))
            .collect::<Vec<_>>()
    }))
}

/// Lazily enumerates every frame of the given kind on `n ≤ 5` labelled points.
pub fn enumerate_frames(n: usize, kind: FrameKind) -> Result<Box<dyn Iterator<Item = AnyFrame>>> {
    Ok(match kind {
        FrameKind::Ms4 => Box::new(enumerate_ms4(n)?.map(AnyFrame::Ms4)),
        FrameKind::S52 => Box::new(enumerate_s52(n)?.map(AnyFrame::S52)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quasi_order_counts() {
        // Labelled preorders: 1, 4, 29, 355.
        let counts: Vec<usize> = (1..=4).map(|n| quasi_orders(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_frames(1, FrameKind::Ms4).unwrap().count(), 1);
        assert_eq!(enumerate_frames(2, FrameKind::Ms4).unwrap().count(), 8);
        assert_eq!(enumerate_frames(2, FrameKind::S52).unwrap().count(), 4);
        assert_eq!(enumerate_frames(3, FrameKind::S52).unwrap().count(), 25);
        assert!(enumerate_frames(6, FrameKind::Ms4).is_err());
        assert!(enumerate_frames(0, FrameKind::S52).is_err());
    }

    #[test]
    fn ms4_count_matches_brute_force() {
        // Oracle: every relation pair, filtered by the definitions directly.
        let n = 3;
        let mut expected = 0;
        let parts = all_partitions(n);
        for mask in 0u32..1 << (n * n) {
            let r = Relation::from_pairs(
                n,
                (0..n * n)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| (b / n, b % n)),
            );
            if !r.is_quasi_order() {
                continue;
            }
            for p in &parts {
                let e = p.to_relation();
                if e.then(&r).is_subset(&r.then(&e)) {
                    expected += 1;
                }
            }
        }
        assert_eq!(
            enumerate_frames(n, FrameKind::Ms4).unwrap().count(),
            expected
        );
    }

    #[test]
    fn deterministic() {
        let a: Vec<_> = enumerate_frames(3, FrameKind::Ms4).unwrap().collect();
        let b: Vec<_> = enumerate_frames(3, FrameKind::Ms4).unwrap().collect();
        assert_eq!(a, b);
    }
}
