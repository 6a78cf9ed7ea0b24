//! Algebraic expected utility: `AEU(pi) = sum_x pi(x) * u(x)` on the binary
//! scale.

use alloc::format;
use alloc::vec::Vec;

use crate::binary::{compare2, pair_add, scalar_mul, BinaryValue, PairValue};
use crate::lottery::{ConsequenceSpace, Lottery};
use crate::measure::{Act, PlausibilityMeasure};
use crate::semiring::Semiring;
use crate::{Comparison, Error, Result};

/// A utility on the binary scale for every consequence, with the best and
/// worst consequences pinned to `<1, 0>` and `<0, 1>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UtilityAssignment<E> {
    space: ConsequenceSpace,
    utilities: Vec<BinaryValue<E>>,
}

impl<E: Clone + PartialEq> UtilityAssignment<E> {
    pub fn new<S: Semiring<Elem = E>>(s: &S, space: ConsequenceSpace, utilities: Vec<BinaryValue<E>>) -> Result<Self> {
        if utilities.len() != space.len() {
            return Err(Error::ArityMismatch {
                expected: space.len(),
                found: utilities.len(),
            });
        }
        if utilities[space.best()] != BinaryValue::best(s) {
            return Err(Error::Precondition(format!(
                "utility of best consequence `{}` must be <1, 0>",
                space.name(space.best())
            )));
        }
        if utilities[space.worst()] != BinaryValue::worst(s) {
            return Err(Error::Precondition(format!(
                "utility of worst consequence `{}` must be <0, 1>",
                space.name(space.worst())
            )));
        }
        Ok(UtilityAssignment { space, utilities })
    }

    pub fn space(&self) -> &ConsequenceSpace {
        &self.space
    }

    pub fn utilities(&self) -> &[BinaryValue<E>] {
        &self.utilities
    }

    pub fn get(&self, x: usize) -> &BinaryValue<E> {
        &self.utilities[x]
    }

    /// Utilities swapped and the consequence order reversed, so the new best
    /// consequence is the old worst one.
    pub fn dual(&self) -> Self {
        UtilityAssignment {
            space: self.space.reversed(),
            utilities: self.utilities.iter().map(BinaryValue::swap).collect(),
        }
    }
}

fn expectation<S: Semiring>(s: &S, dist: &[S::Elem], u: &UtilityAssignment<S::Elem>) -> Result<PairValue<S::Elem>> {
    if dist.len() != u.space.len() {
        return Err(Error::ArityMismatch {
            expected: u.space.len(),
            found: dist.len(),
        });
    }
    let zero = PairValue::new(s.zero(), s.zero());
    Ok(dist
        .iter()
        .zip(&u.utilities)
        .fold(zero, |acc, (p, ux)| pair_add(s, &acc, &scalar_mul(s, p, &ux.to_pair()))))
}

fn into_scale<S: Semiring>(s: &S, pair: PairValue<S::Elem>) -> Result<BinaryValue<S::Elem>> {
    BinaryValue::from_pair(s, pair)
        .map_err(|e| Error::Invariant(format!("{}: AEU left the binary scale: {e}", s.name())))
}

/// Reduce, then take the expectation.
pub fn aeu_eval<S: Semiring>(
    s: &S,
    l: &Lottery<S::Elem>,
    u: &UtilityAssignment<S::Elem>,
) -> Result<BinaryValue<S::Elem>> {
    let dist = l.distribution(s);
    into_scale(s, expectation(s, &dist, u)?)
}

pub fn aeu_compare<S: Semiring>(
    s: &S,
    l1: &Lottery<S::Elem>,
    l2: &Lottery<S::Elem>,
    u: &UtilityAssignment<S::Elem>,
) -> Result<Comparison> {
    Ok(compare2(s, &aeu_eval(s, l1, u)?, &aeu_eval(s, l2, u)?))
}

/// Backward induction: evaluate sub-lotteries first and mix their values,
/// without reducing.
pub fn aeu_fold<S: Semiring>(
    s: &S,
    l: &Lottery<S::Elem>,
    u: &UtilityAssignment<S::Elem>,
) -> Result<BinaryValue<S::Elem>> {
    into_scale(s, fold_pair(s, l, u)?)
}

fn fold_pair<S: Semiring>(s: &S, l: &Lottery<S::Elem>, u: &UtilityAssignment<S::Elem>) -> Result<PairValue<S::Elem>> {
    match l {
        Lottery::Simple(dist) => expectation(s, dist, u),
        Lottery::Compound(branches) => {
            let mut acc = PairValue::new(s.zero(), s.zero());
            for b in branches {
                let sub = fold_pair(s, &b.lottery, u)?;
                acc = pair_add(s, &acc, &scalar_mul(s, &b.weight, &sub));
            }
            Ok(acc)
        }
    }
}

/// `<Pl(A), Pl(not A)>`.
pub fn sigma_measure<S: Semiring>(
    s: &S,
    m: &PlausibilityMeasure<S::Elem>,
    event: &[usize],
) -> Result<BinaryValue<S::Elem>> {
    let inside = m.event_plausibility(s, event)?;
    let outside = m.event_plausibility(s, &m.complement(event))?;
    BinaryValue::new(s, inside, outside)
}

/// The binary act for `event` on `space`, as a lottery.
pub fn binary_act_lottery<S: Semiring>(
    s: &S,
    m: &PlausibilityMeasure<S::Elem>,
    space: &ConsequenceSpace,
    event: &[usize],
) -> Result<Lottery<S::Elem>> {
    crate::measure::induced_lottery(s, m, &Act::binary(m.len(), space, event), space)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftDirection {
    /// Raise the utilities strictly below the pivot.
    Up,
    /// Lower the utilities strictly above the pivot.
    Down,
}

/// Reshape `u` around `pivot`: with [`ShiftDirection::Up`] every non-extreme
/// consequence strictly below the pivot moves from `<a, b>` to
/// `<a + step, b - step>` (or to `<1, 0>` when `b - step` does not exist);
/// `Down` is the mirror image above the pivot. A zero step is the identity.
pub fn shift_utility<S: Semiring>(
    s: &S,
    u: &UtilityAssignment<S::Elem>,
    pivot: usize,
    direction: ShiftDirection,
    step: &S::Elem,
) -> Result<UtilityAssignment<S::Elem>> {
    let space = &u.space;
    if pivot >= space.len() {
        return Err(Error::UnknownConsequence(format!("#{pivot}")));
    }
    if pivot == space.best() || pivot == space.worst() {
        return Err(Error::Precondition(format!(
            "pivot `{}` must lie strictly between the best and worst consequences",
            space.name(pivot)
        )));
    }
    if !s.contains(step) {
        return Err(Error::InstanceMismatch {
            expected: s.name(),
            value: format!("{step:?}"),
        });
    }
    let reference = &u.utilities[pivot];
    let mut utilities = u.utilities.clone();
    for (x, ux) in utilities.iter_mut().enumerate() {
        if x == space.best() || x == space.worst() {
            continue;
        }
        let shifted = match (direction, compare2(s, ux, reference)) {
            (ShiftDirection::Up, Comparison::Less) => match s.solve_add(ux.second(), step) {
                Some(rest) => BinaryValue::new(s, s.add(ux.first(), step), rest),
                None => Ok(BinaryValue::best(s)),
            },
            (ShiftDirection::Down, Comparison::Greater) => match s.solve_add(ux.first(), step) {
                Some(rest) => BinaryValue::new(s, rest, s.add(ux.second(), step)),
                None => Ok(BinaryValue::worst(s)),
            },
            _ => continue,
        };
        *ux = shifted.map_err(|e| Error::Invariant(format!("shift left the binary scale: {e}")))?;
    }
    UtilityAssignment::new(s, space.clone(), utilities)
}

/// The binary lottery `[a1/best, a2/worst]` indifferent to the sure
/// consequence `x`, verified by evaluation.
pub fn elicit_binary_equivalent<S: Semiring>(
    s: &S,
    u: &UtilityAssignment<S::Elem>,
    x: usize,
) -> Result<BinaryValue<S::Elem>> {
    if x >= u.space.len() {
        return Err(Error::UnknownConsequence(format!("#{x}")));
    }
    let alpha = u.utilities[x].clone();
    let value = aeu_eval(s, &Lottery::binary(s, &u.space, &alpha), u)?;
    if value != u.utilities[x] {
        return Err(Error::Invariant(format!(
            "binary equivalent of `{}` does not evaluate to its utility",
            u.space.name(x)
        )));
    }
    Ok(alpha)
}
