//! Decomposable plausibility measures and the lotteries induced by acts.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::binary::RenderChecked;
use crate::lottery::{ConsequenceSpace, Lottery};
use crate::semiring::Semiring;
use crate::{Error, Result};

/// A measure on a finite state space given by singleton weights; events are
/// measured by summing their weights, so `Pl(A u B) = Pl(A) + Pl(B)` for
/// disjoint events holds by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlausibilityMeasure<E> {
    states: Vec<String>,
    weights: Vec<E>,
}

impl<E: Clone + PartialEq> PlausibilityMeasure<E> {
    pub fn new<S: Semiring<Elem = E>>(s: &S, states: Vec<String>, weights: Vec<E>) -> Result<Self> {
        if states.len() != weights.len() {
            return Err(Error::Precondition(format!(
                "{} states but {} weights",
                states.len(),
                weights.len()
            )));
        }
        if states.is_empty() {
            return Err(Error::Precondition("empty state space".into()));
        }
        for (i, n) in states.iter().enumerate() {
            if states[..i].contains(n) {
                return Err(Error::DuplicateName(n.clone()));
            }
        }
        if let Some(bad) = weights.iter().find(|w| !s.contains(w)) {
            return Err(Error::InstanceMismatch {
                expected: s.name(),
                value: s.render_checked(bad),
            });
        }
        let total = s.sum(&weights);
        if !s.is_one(&total) {
            return Err(Error::NotNormalized {
                what: "plausibility measure",
                total: s.render(&total),
            });
        }
        Ok(PlausibilityMeasure { states, weights })
    }

    /// Measure on the pairs `(s, t)` named `s|t` with weights `w1(s) * w2(t)`;
    /// rectangle events then multiply.
    pub fn product<S: Semiring<Elem = E>>(s: &S, left: &Self, right: &Self) -> Result<Self> {
        let mut states = Vec::new();
        let mut weights = Vec::new();
        for (a, wa) in left.states.iter().zip(&left.weights) {
            for (b, wb) in right.states.iter().zip(&right.weights) {
                states.push(format!("{a}|{b}"));
                weights.push(s.mul(wa, wb));
            }
        }
        Self::new(s, states, weights)
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn weights(&self) -> &[E] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state_index(&self, name: &str) -> Result<usize> {
        self.states
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownState(name.into()))
    }

    /// Sorted, de-duplicated state indices of the named event.
    pub fn event<N: AsRef<str>>(&self, names: &[N]) -> Result<Vec<usize>> {
        let mut idx = names
            .iter()
            .map(|n| self.state_index(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        idx.dedup();
        Ok(idx)
    }

    pub fn complement(&self, event: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|i| !event.contains(i)).collect()
    }

    /// `Pl(A)`: the sum of the singleton weights over `event`.
    pub fn event_plausibility<S: Semiring<Elem = E>>(&self, s: &S, event: &[usize]) -> Result<E> {
        let mut seen = alloc::vec![false; self.len()];
        let mut acc = s.zero();
        for &i in event {
            if i >= self.len() {
                return Err(Error::UnknownState(format!("#{i}")));
            }
            if !core::mem::replace(&mut seen[i], true) {
                acc = s.add(&acc, &self.weights[i]);
            }
        }
        Ok(acc)
    }
}

/// A total map from states to consequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Act {
    assignment: Vec<usize>,
}

impl Act {
    /// `pairs` maps state names to consequence names and must cover every
    /// state exactly once.
    pub fn new<E: Clone + PartialEq, A: AsRef<str>, B: AsRef<str>>(
        measure: &PlausibilityMeasure<E>,
        space: &ConsequenceSpace,
        pairs: &[(A, B)],
    ) -> Result<Self> {
        let mut assignment: Vec<Option<usize>> = alloc::vec![None; measure.len()];
        for (state, consequence) in pairs {
            let i = measure.state_index(state.as_ref())?;
            if assignment[i].is_some() {
                return Err(Error::DuplicateName(state.as_ref().into()));
            }
            assignment[i] = Some(space.index_of(consequence.as_ref())?);
        }
        let assignment = assignment
            .into_iter()
            .enumerate()
            .map(|(i, x)| {
                x.ok_or_else(|| Error::Precondition(format!("act does not map state `{}`", measure.states()[i])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Act { assignment })
    }

    pub fn constant(states: usize, x: usize) -> Self {
        Act {
            assignment: alloc::vec![x; states],
        }
    }

    /// The act giving the best consequence on `event` and the worst elsewhere.
    pub fn binary(states: usize, space: &ConsequenceSpace, event: &[usize]) -> Self {
        Act {
            assignment: (0..states)
                .map(|i| {
                    if event.contains(&i) {
                        space.best()
                    } else {
                        space.worst()
                    }
                })
                .collect(),
        }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }
}

/// `x -> Pl({s : f(s) = x})`.
pub fn induced_lottery<S: Semiring>(
    s: &S,
    measure: &PlausibilityMeasure<S::Elem>,
    act: &Act,
    space: &ConsequenceSpace,
) -> Result<Lottery<S::Elem>> {
    if act.assignment.len() != measure.len() {
        return Err(Error::Precondition(format!(
            "act covers {} states, measure has {}",
            act.assignment.len(),
            measure.len()
        )));
    }
    let mut dist = alloc::vec![s.zero(); space.len()];
    for (w, &x) in measure.weights().iter().zip(&act.assignment) {
        let slot = dist
            .get_mut(x)
            .ok_or_else(|| Error::UnknownConsequence(format!("#{x}")))?;
        *slot = s.add(slot, w);
    }
    Lottery::simple(s, dist)
}
