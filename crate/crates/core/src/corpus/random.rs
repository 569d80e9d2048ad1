//! Seeded random frames, partitions and formulas.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::formula::{Formula, Language};
use crate::frame::{commutation_witness, Frame};
use crate::partition::Partition;
use crate::pointset::MAX_POINTS;
use crate::relation::Relation;
use crate::s52::S52Frame;

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyFrame);
    }
    if n > MAX_POINTS {
        return Err(Error::TooManyPoints(n));
    }
    Ok(())
}

/// A partition of `0..n` into at most `max_blocks` blocks, each point getting
/// a uniform label.
pub fn random_partition<G: Rng>(rng: &mut G, n: usize, max_blocks: usize) -> Partition {
    let k = max_blocks.max(1);
    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    Partition::from_labels(&labels)
}

fn random_relation<G: Rng>(rng: &mut G, n: usize, density: f64) -> Relation {
    let density = density.clamp(0.0, 1.0);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y)
        .collect();
    Relation::from_pairs(n, pairs.into_iter().filter(|_| rng.gen_bool(density)))
        .reflexive_transitive_closure()
}

/// Adds `x R y'` for every commutation failure until `RE ⊆ ER` holds.
fn repair_commutation(mut r: Relation, e: &Relation) -> Relation {
    while let Some((x, _, y2)) = commutation_witness(&r, e) {
        r.insert(x, y2);
        r = r.reflexive_transitive_closure();
    }
    r
}

/// Random MS4-frame: each off-diagonal edge kept with probability
/// `density`, `E` with at most `max_blocks` classes, commutation repaired.
pub fn random_ms4<G: Rng>(rng: &mut G, n: usize, density: f64, max_blocks: usize) -> Result<Frame> {
    check_n(n)?;
    let r = random_relation(rng, n, density);
    let e = random_partition(rng, n, max_blocks);
    let r = repair_commutation(r, &e.to_relation());
    Frame::from_indexed(r, e)
}

/// Random MS4-frame whose `Q` is symmetric (so it validates `ms4s`).
pub fn random_ms4s<G: Rng>(
    rng: &mut G,
    n: usize,
    density: f64,
    max_blocks: usize,
) -> Result<Frame> {
    check_n(n)?;
    let e = random_partition(rng, n, max_blocks);
    let e_rel = e.to_relation();
    let mut r = repair_commutation(random_relation(rng, n, density), &e_rel);
    loop {
        let q = r.then(&e_rel);
        let missing = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| q.contains(x, y) && !q.contains(y, x));
        let Some((x, y)) = missing else { break };
        r.insert(y, x);
        r = repair_commutation(r.reflexive_transitive_closure(), &e_rel);
    }
    Frame::from_indexed(r, e)
}

pub fn random_s52<G: Rng>(rng: &mut G, n: usize, max_blocks: usize) -> Result<S52Frame> {
    check_n(n)?;
    let e1 = random_partition(rng, n, max_blocks);
    let e2 = random_partition(rng, n, max_blocks);
    S52Frame::from_indexed(e1, e2)
}

/// Random formula over `vars` of depth at most `depth` using the
/// connectives of `lang`.
pub fn random_formula<G: Rng>(rng: &mut G, vars: &[&str], depth: usize, lang: Language) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..10) {
            0 => Formula::Bot,
            1 => Formula::Top,
            _ if vars.is_empty() => Formula::Top,
            _ => Formula::var(vars[rng.gen_range(0..vars.len())]),
        };
    }
    let sub = |rng: &mut G| random_formula(rng, vars, depth - 1, lang);
    let modal = match lang {
        Language::Propositional => 0,
        _ => 4,
    };
    match rng.gen_range(0..4 + modal) {
        0 => Formula::not(sub(rng)),
        1 => Formula::and(sub(rng), sub(rng)),
        2 => Formula::or(sub(rng), sub(rng)),
        3 => Formula::implies(sub(rng), sub(rng)),
        i => {
            let a = sub(rng);
            match (lang, i) {
                (Language::Ms4, 4) => Formula::dia(a),
                (Language::Ms4, 5) => Formula::boxed(a),
                (Language::Ms4, 6) => Formula::ex(a),
                (Language::Ms4, _) => Formula::all(a),
                (_, 4) => Formula::ex1(a),
                (_, 5) => Formula::all1(a),
                (_, 6) => Formula::ex2(a),
                _ => Formula::all2(a),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{axiom, is_valid, parse};
    use crate::model::Model;

    #[test]
    fn frames_are_valid_and_reproducible() {
        for seed in 0..20 {
            let a = random_ms4(&mut seeded(seed), 6, 0.2, 3).unwrap();
            let b = random_ms4(&mut seeded(seed), 6, 0.2, 3).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn ms4s_frames_validate_ms4s() {
        let ax = axiom("ms4s", None).unwrap();
        for seed in 0..20 {
            let f = random_ms4s(&mut seeded(seed), 5, 0.25, 3).unwrap();
            assert!(f.q_relation().is_symmetric());
            assert!(is_valid(&Model::from(&f), &ax).unwrap().is_valid());
        }
    }

    #[test]
    fn formulas_round_trip() {
        let mut rng = seeded(7);
        for lang in [Language::Propositional, Language::Ms4, Language::S52] {
            for _ in 0..50 {
                let f = random_formula(&mut rng, &["p", "q"], 4, lang);
                assert!(f.depth() <= 5);
                assert_eq!(parse(&f.to_string()).unwrap(), f);
                let l = f.language().unwrap();
                assert!(l == Language::Propositional || l == lang);
            }
        }
    }

    #[test]
    fn partitions_respect_block_bound() {
        let mut rng = seeded(1);
        for _ in 0..20 {
            assert!(random_partition(&mut rng, 10, 3).num_blocks() <= 3);
        }
        let s = random_s52(&mut rng, 4, 2).unwrap();
        assert_eq!(s.len(), 4);
    }
}
