//! Independent oracles over plain bitmasks. Nothing here calls the
//! library's set algebra; frames are read only through their relations.

#![allow(dead_code)]

use std::collections::BTreeSet;

use ms4wb::{Frame, S52Frame};

/// A relation as `rel[x]` = bitmask of successors.
pub type Rel = Vec<u128>;

pub fn rel_of(n: usize, contains: impl Fn(usize, usize) -> bool) -> Rel {
    (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| contains(x, y))
                .fold(0u128, |m, y| m | 1 << y)
        })
        .collect()
}

pub fn r_of(f: &Frame) -> Rel {
    rel_of(f.len(), |x, y| f.r().contains(x, y))
}

pub fn e_of(f: &Frame) -> Rel {
    rel_of(f.len(), |x, y| f.e_relation().contains(x, y))
}

pub fn e1_of(f: &S52Frame) -> Rel {
    rel_of(f.len(), |x, y| f.e1_relation().contains(x, y))
}

pub fn e2_of(f: &S52Frame) -> Rel {
    rel_of(f.len(), |x, y| f.e2_relation().contains(x, y))
}

pub fn full(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// `{x : rel[x] ∩ u ≠ ∅}`
pub fn pre(rel: &Rel, u: u128) -> u128 {
    rel.iter()
        .enumerate()
        .filter(|(_, s)| *s & u != 0)
        .fold(0, |m, (x, _)| m | 1 << x)
}

/// `{x : rel[x] ⊆ u}`
pub fn nec(rel: &Rel, u: u128) -> u128 {
    rel.iter()
        .enumerate()
        .filter(|(_, s)| *s & !u == 0)
        .fold(0, |m, (x, _)| m | 1 << x)
}

pub fn compose(a: &Rel, b: &Rel) -> Rel {
    a.iter()
        .map(|&row| {
            (0..b.len())
                .filter(|&z| row >> z & 1 == 1)
                .fold(0u128, |m, z| m | b[z])
        })
        .collect()
}

/// Closes the given sets under complement, intersection and every operator.
pub fn naive_closure(n: usize, gens: &[u128], ops: &[&dyn Fn(u128) -> u128]) -> BTreeSet<u128> {
    let top = full(n);
    let mut b: BTreeSet<u128> = gens.iter().copied().collect();
    b.insert(0);
    b.insert(top);
    loop {
        let cur: Vec<u128> = b.iter().copied().collect();
        let mut next = b.clone();
        for &x in &cur {
            next.insert(top & !x);
            for op in ops {
                next.insert(op(x));
            }
            for &y in &cur {
                next.insert(x & y);
            }
        }
        if next.len() == b.len() {
            return b;
        }
        b = next;
    }
}

/// Every `u` with `x ∈ u`, `x rel y` ⇒ `y ∈ u`, by brute force over subsets.
pub fn brute_upsets(n: usize, rel: &Rel) -> BTreeSet<u128> {
    (0..1u128 << n)
        .filter(|&u| (0..n).all(|x| u >> x & 1 == 0 || rel[x] & !u == 0))
        .collect()
}

/// Longest proper chain `x₁ R x₂ R …` with no step reversible, in points.
pub fn depth(r: &Rel) -> usize {
    fn go(x: usize, r: &Rel, memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(d) = memo[x] {
            return d;
        }
        let mut best = 0;
        for y in 0..r.len() {
            if r[x] >> y & 1 == 1 && r[y] >> x & 1 == 0 {
                best = best.max(go(y, r, memo));
            }
        }
        memo[x] = Some(best + 1);
        best + 1
    }
    let mut memo = vec![None; r.len()];
    (0..r.len()).map(|x| go(x, r, &mut memo)).max().unwrap_or(0)
}

/// Number of classes of an equivalence given as successor masks.
pub fn class_count(e: &Rel) -> usize {
    e.iter().collect::<BTreeSet<_>>().len()
}

/// Greatest relation below `start` such that related points have matching
/// successors for every relation in `rels`, by removing failing pairs.
pub fn greatest_bisimulation(start: &Rel, rels: &[&Rel]) -> Rel {
    let n = start.len();
    let mut k = start.clone();
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                if k[x] >> y & 1 == 0 {
                    continue;
                }
                let ok = rels.iter().all(|r| {
                    let matches = |a: usize, b: usize| {
                        (0..n)
                            .filter(|&a2| r[a] >> a2 & 1 == 1)
                            .all(|a2| r[b] & k[a2] != 0)
                    };
                    matches(x, y) && matches(y, x)
                });
                if !ok {
                    k[x] &= !(1 << y);
                    k[y] &= !(1 << x);
                    changed = true;
                }
            }
        }
        if !changed {
            return k;
        }
    }
}

/// Points identified iff they lie in the same generators.
pub fn coloring_rel(n: usize, gens: &[u128]) -> Rel {
    (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| gens.iter().all(|g| (g >> x & 1) == (g >> y & 1)))
                .fold(0u128, |m, y| m | 1 << y)
        })
        .collect()
}

pub fn mask_of(s: &ms4wb::PointSet) -> u128 {
    s.bits()
}
