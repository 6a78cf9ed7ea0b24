//! Finite lottery universes: every lottery up to a depth and branch bound
//! over a finite carrier, or a seeded sample.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use super::{EnumerationBudget, Mode};
use crate::aeu::UtilityAssignment;
use crate::binary::{self, BinaryValue};
use crate::lottery::{Branch, ConsequenceSpace, Lottery};
use crate::semiring::{count_normalized_tuples, normalized_tuples, Carrier, SampleConfig};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct Universe<E> {
    pub space: ConsequenceSpace,
    /// Simple lotteries; in exhaustive mode every normalized distribution.
    pub simple: Vec<Lottery<E>>,
    /// Every lottery of the universe, simple ones first.
    pub lotteries: Vec<Lottery<E>>,
}

impl<E: Clone + PartialEq> Universe<E> {
    pub fn build<S: Carrier<Elem = E>>(s: &S, space: &ConsequenceSpace, budget: &EnumerationBudget) -> Result<Self> {
        budget.validate()?;
        match budget.mode {
            Mode::Exhaustive => Self::enumerate(s, space, budget),
            Mode::Sampled => Self::sample(s, space, budget),
        }
    }

    fn enumerate<S: Carrier<Elem = E>>(s: &S, space: &ConsequenceSpace, budget: &EnumerationBudget) -> Result<Self> {
        let cfg = &budget.carrier;
        let finite = || Error::Budget(format!("exhaustive mode needs a finite carrier, `{}` is not", s.name()));
        let n = space.len();
        let simple_count = count_normalized_tuples(s, n, cfg).ok_or_else(finite)?;
        let weight_counts: Vec<u128> = (1..=budget.max_branches)
            .map(|k| count_normalized_tuples(s, k, cfg).ok_or_else(finite))
            .collect::<Result<_>>()?;

        // size of every level before materialising anything
        let cap = budget.max_universe as u128;
        let mut size = simple_count;
        for _ in 1..budget.max_depth {
            let mut next = simple_count;
            for (k, w) in weight_counts.iter().enumerate() {
                next = next.saturating_add(w.saturating_mul(size.saturating_pow(k as u32 + 1)));
            }
            size = next;
        }
        if size > cap {
            return Err(Error::Budget(format!(
                "{size} lotteries (|X| = {n}, depth {}, branches {}) exceed the cap of {cap}",
                budget.max_depth, budget.max_branches
            )));
        }

        let simple: Vec<Lottery<E>> = normalized_tuples(s, n, cfg)
            .ok_or_else(finite)?
            .into_iter()
            .map(Lottery::Simple)
            .collect();
        let weights: Vec<Vec<Vec<E>>> = (1..=budget.max_branches)
            .map(|k| normalized_tuples(s, k, cfg).ok_or_else(finite))
            .collect::<Result<_>>()?;
        let mut pool = simple.clone();
        for _ in 1..budget.max_depth {
            let mut next = simple.clone();
            for (k, tuples) in weights.iter().enumerate() {
                let k = k + 1;
                for w in tuples {
                    let mut idx = alloc::vec![0usize; k];
                    loop {
                        next.push(Lottery::Compound(
                            w.iter()
                                .zip(&idx)
                                .map(|(weight, &i)| Branch {
                                    weight: weight.clone(),
                                    lottery: pool[i].clone(),
                                })
                                .collect(),
                        ));
                        if !advance(&mut idx, pool.len()) {
                            break;
                        }
                    }
                }
            }
            pool = next;
        }
        Ok(Universe {
            space: space.clone(),
            simple,
            lotteries: pool,
        })
    }

    fn sample<S: Carrier<Elem = E>>(s: &S, space: &ConsequenceSpace, budget: &EnumerationBudget) -> Result<Self> {
        let mut rng = budget.rng(10);
        let n = space.len();
        let mut simple: Vec<Lottery<E>> = (0..n).map(|x| Lottery::degenerate(s, n, x)).collect::<Result<_>>()?;
        let mut compound = Vec::new();
        while simple.len() + compound.len() < budget.samples.max(n) {
            let depth = rng.gen_range(1..=budget.max_depth);
            match random_lottery(s, &mut rng, n, depth, budget.max_branches, &budget.carrier) {
                l @ Lottery::Simple(_) => simple.push(l),
                l => compound.push(l),
            }
        }
        let mut lotteries = simple.clone();
        lotteries.extend(compound);
        Ok(Universe {
            space: space.clone(),
            simple,
            lotteries,
        })
    }
}

/// Odometer step over `0..base` digits; false after the last tuple.
pub(crate) fn advance(idx: &mut [usize], base: usize) -> bool {
    for slot in idx.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

/// A random lottery of exactly the given depth (1 is simple).
pub fn random_lottery<S: Carrier, R: Rng + ?Sized>(
    s: &S,
    rng: &mut R,
    n: usize,
    depth: usize,
    max_branches: usize,
    cfg: &SampleConfig,
) -> Lottery<S::Elem> {
    if depth <= 1 {
        return Lottery::Simple(s.sample_normalized(rng, n, cfg));
    }
    let k = rng.gen_range(1..=max_branches.max(1));
    let deep = rng.gen_range(0..k);
    let weights = s.sample_normalized(rng, k, cfg);
    Lottery::Compound(
        weights
            .into_iter()
            .enumerate()
            .map(|(i, weight)| {
                let d = if i == deep { depth - 1 } else { rng.gen_range(1..depth) };
                Branch {
                    weight,
                    lottery: random_lottery(s, rng, n, d, max_branches, cfg),
                }
            })
            .collect(),
    )
}

/// A seeded utility with the extremes pinned and every other consequence on a
/// random point of the binary scale.
pub fn random_utility<S: Carrier, R: Rng + ?Sized>(
    s: &S,
    rng: &mut R,
    cfg: &SampleConfig,
    space: &ConsequenceSpace,
) -> Result<UtilityAssignment<S::Elem>> {
    let utilities = (0..space.len())
        .map(|x| {
            if x == space.best() {
                BinaryValue::best(s)
            } else if x == space.worst() {
                BinaryValue::worst(s)
            } else {
                binary::sample(s, rng, cfg)
            }
        })
        .collect();
    UtilityAssignment::new(s, space.clone(), utilities)
}

/// The utility a budget draws when none is given: [`random_utility`] on
/// the budget's seed.
pub fn seeded_utility<S: Carrier>(
    s: &S,
    budget: &EnumerationBudget,
    space: &ConsequenceSpace,
) -> Result<UtilityAssignment<S::Elem>> {
    random_utility(s, &mut budget.rng(50), &budget.carrier, space)
}
