use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::rational::{parse_nonnegative, render, sample_bounded, sample_composition};
use super::{Carrier, SampleConfig, Semiring};
use crate::{Comparison, Rational, Result};

/// `(Q+, +, *, 0, 1)` with the numeric order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Probability;

impl Semiring for Probability {
    type Elem = Rational;

    fn name(&self) -> String {
        "prob".into()
    }

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn compare(&self, a: &Rational, b: &Rational) -> Comparison {
        a.cmp(b).into()
    }

    fn solve_add(&self, target: &Rational, known: &Rational) -> Option<Rational> {
        (target >= known).then(|| target - known)
    }

    fn solve_scale(&self, lambda: &Rational, mu: &Rational) -> Option<(Rational, Rational)> {
        let total = lambda + mu;
        if total.is_zero() {
            return Some((Rational::one(), Rational::zero()));
        }
        Some((lambda / &total, mu / &total))
    }

    fn contains(&self, e: &Rational) -> bool {
        !e.is_negative()
    }

    fn render(&self, e: &Rational) -> String {
        render(e)
    }

    fn parse(&self, text: &str) -> Result<Rational> {
        parse_nonnegative(text, "probability")
    }
}

impl Carrier for Probability {
    fn elements(&self, _cfg: &SampleConfig) -> Option<Vec<Rational>> {
        None
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, cfg: &SampleConfig) -> Rational {
        sample_bounded(rng, cfg.denominator_bound, 2)
    }

    fn sample_normalized<R: Rng + ?Sized>(&self, rng: &mut R, k: usize, cfg: &SampleConfig) -> Vec<Rational> {
        sample_composition(rng, k, cfg.denominator_bound)
    }
}
