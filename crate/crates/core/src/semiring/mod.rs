//! The semiring interface and its shipped instances.
//!
//! A [`Semiring`] value is the *context* of an instance (it carries parameters
//! such as the number of qualitative levels); elements are plain data of type
//! [`Semiring::Elem`] in canonical form, so equality is structural.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;

use rand::Rng;

use crate::{Comparison, Result};

mod controls;
mod descriptor;
mod kappa;
mod laws;
mod lexprob;
mod possibility;
mod probability;
mod product;
mod rational;

pub use self::controls::NaturalPlusMax;
pub use self::descriptor::{Descriptor, Value};
pub use self::kappa::{Kappa, Rank};
pub use self::laws::{check_order_laws, check_semiring_laws};
pub use self::lexprob::LexProbability;
pub use self::possibility::{QualPossibility, QuantPossibility};
pub use self::probability::Probability;
pub use self::product::Product;

/// A commutative semiring `(P, +, *, 0, 1)` with an order and the equation
/// solvers used by the solvability conditions.
pub trait Semiring {
    type Elem: Clone + PartialEq + Debug;

    /// Descriptor string, e.g. `qualposs:3`.
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// The instance's canonical order, `a` relative to `b`.
    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Comparison;

    /// Order-minimal `d` with `known + d = target`, if any exists.
    fn solve_add(&self, target: &Self::Elem, known: &Self::Elem) -> Option<Self::Elem>;

    /// A single `d` solving every `known_i + d = target_i` at once.
    ///
    /// The default tries the canonical solution of each equation in turn. That
    /// is complete whenever every equation's solution set is either a singleton
    /// or a down-set containing the minimal solution of the others, which holds
    /// for all totally ordered shipped instances; products override it.
    fn solve_add_system(&self, equations: &[(Self::Elem, Self::Elem)]) -> Option<Self::Elem> {
        equations
            .iter()
            .filter_map(|(target, known)| self.solve_add(target, known))
            .find(|d| equations.iter().all(|(target, known)| self.add(known, d) == *target))
    }

    /// A pair `<a1, a2>` with `a1 + a2 = 1` and `(lambda + mu) * a = <lambda, mu>`.
    fn solve_scale(&self, lambda: &Self::Elem, mu: &Self::Elem) -> Option<(Self::Elem, Self::Elem)>;

    /// Whether `e` lies in the carrier.
    fn contains(&self, e: &Self::Elem) -> bool;

    /// Literal syntax used by the file formats.
    fn render(&self, e: &Self::Elem) -> String;

    fn parse(&self, text: &str) -> Result<Self::Elem>;

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn is_zero(&self, e: &Self::Elem) -> bool {
        *e == self.zero()
    }

    fn is_one(&self, e: &Self::Elem) -> bool {
        *e == self.one()
    }
}

/// Enumeration and sampling of carrier elements.
pub trait Carrier: Semiring {
    /// All elements, for finite (or truncated) carriers.
    fn elements(&self, cfg: &SampleConfig) -> Option<Vec<Self::Elem>>;

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, cfg: &SampleConfig) -> Self::Elem;

    /// `k` elements whose sum is one.
    fn sample_normalized<R: Rng + ?Sized>(&self, rng: &mut R, k: usize, cfg: &SampleConfig) -> Vec<Self::Elem>;
}

/// Bounds for enumeration and sampling of carriers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleConfig {
    /// Largest denominator of sampled rationals.
    pub denominator_bound: u64,
    /// Largest finite kappa rank produced by enumeration and sampling.
    /// Arithmetic is never truncated.
    pub kappa_ceiling: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            denominator_bound: 8,
            kappa_ceiling: 32,
        }
    }
}

/// Every normalized `k`-tuple over a finite carrier, in lexicographic order of
/// element indices.
pub fn normalized_tuples<S: Carrier + ?Sized>(s: &S, k: usize, cfg: &SampleConfig) -> Option<Vec<Vec<S::Elem>>> {
    let elements = s.elements(cfg)?;
    let one = s.one();
    let mut out = Vec::new();
    if k == 0 || elements.is_empty() {
        return Some(out);
    }
    let mut idx = alloc::vec![0usize; k];
    loop {
        let tuple: Vec<S::Elem> = idx.iter().map(|&i| elements[i].clone()).collect();
        if s.sum(&tuple) == one {
            out.push(tuple);
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return Some(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < elements.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Number of normalized `k`-tuples, without materialising them.
pub fn count_normalized_tuples<S: Carrier + ?Sized>(s: &S, k: usize, cfg: &SampleConfig) -> Option<u128> {
    let elements = s.elements(cfg)?;
    // Dynamic programming over partial sums; sums are carrier elements.
    let mut partial: Vec<(S::Elem, u128)> = alloc::vec![(s.zero(), 1)];
    for _ in 0..k {
        let mut next: Vec<(S::Elem, u128)> = Vec::new();
        for (acc, count) in &partial {
            for e in &elements {
                let sum = s.add(acc, e);
                match next.iter_mut().find(|(v, _)| *v == sum) {
                    Some((_, c)) => *c += count,
                    None => next.push((sum, *count)),
                }
            }
        }
        partial = next;
    }
    let one = s.one();
    Some(partial.iter().filter(|(v, _)| *v == one).map(|(_, c)| *c).sum())
}
