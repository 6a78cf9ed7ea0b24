use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng;

use super::rational::{is_unit_interval, parse_nonnegative, render, sample_bounded};
use super::{Carrier, SampleConfig, Semiring};
use crate::{Comparison, Error, Rational, Result};

/// Canonical solution of `max(known, d) = target`: `target` when it exceeds
/// `known`, the bottom element when they coincide, nothing otherwise.
fn solve_max<T: Ord + Clone>(target: &T, known: &T, bottom: T) -> Option<T> {
    match target.cmp(known) {
        core::cmp::Ordering::Greater => Some(target.clone()),
        core::cmp::Ordering::Equal => Some(bottom),
        core::cmp::Ordering::Less => None,
    }
}

/// Quantitative possibility `([0, 1], max, *, 0, 1)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QuantPossibility;

impl Semiring for QuantPossibility {
    type Elem = Rational;

    fn name(&self) -> String {
        "quantposs".into()
    }

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a.max(b).clone()
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn compare(&self, a: &Rational, b: &Rational) -> Comparison {
        a.cmp(b).into()
    }

    fn solve_add(&self, target: &Rational, known: &Rational) -> Option<Rational> {
        solve_max(target, known, Rational::zero())
    }

    fn solve_scale(&self, lambda: &Rational, mu: &Rational) -> Option<(Rational, Rational)> {
        let top = lambda.max(mu);
        if top.is_zero() {
            return Some((Rational::one(), Rational::zero()));
        }
        Some((lambda / top, mu / top))
    }

    fn contains(&self, e: &Rational) -> bool {
        is_unit_interval(e)
    }

    fn render(&self, e: &Rational) -> String {
        render(e)
    }

    fn parse(&self, text: &str) -> Result<Rational> {
        let r = parse_nonnegative(text, "possibility degree")?;
        if !is_unit_interval(&r) {
            return Err(Error::Parse {
                what: "possibility degree",
                text: text.to_string(),
            });
        }
        Ok(r)
    }
}

impl Carrier for QuantPossibility {
    fn elements(&self, _cfg: &SampleConfig) -> Option<Vec<Rational>> {
        None
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, cfg: &SampleConfig) -> Rational {
        sample_bounded(rng, cfg.denominator_bound, 1)
    }

    fn sample_normalized<R: Rng + ?Sized>(&self, rng: &mut R, k: usize, cfg: &SampleConfig) -> Vec<Rational> {
        let mut out: Vec<Rational> = (0..k).map(|_| self.sample(rng, cfg)).collect();
        let peak = rng.gen_range(0..k);
        out[peak] = Rational::one();
        out
    }
}

/// Qualitative possibility `(L, max, min, 0_L, 1_L)` on the levels `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QualPossibility {
    levels: u32,
}

impl QualPossibility {
    pub fn new(levels: u32) -> Result<Self> {
        if levels < 2 {
            return Err(Error::Precondition(format!(
                "qualitative scale needs at least two levels, got {levels}"
            )));
        }
        Ok(QualPossibility { levels })
    }

    pub fn levels(&self) -> u32 {
        self.levels
    }

    fn top(&self) -> u32 {
        self.levels - 1
    }
}

impl Semiring for QualPossibility {
    type Elem = u32;

    fn name(&self) -> String {
        format!("qualposs:{}", self.levels)
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        self.top()
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        *a.max(b)
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        *a.min(b)
    }

    fn compare(&self, a: &u32, b: &u32) -> Comparison {
        a.cmp(b).into()
    }

    fn solve_add(&self, target: &u32, known: &u32) -> Option<u32> {
        solve_max(target, known, 0)
    }

    fn solve_scale(&self, lambda: &u32, mu: &u32) -> Option<(u32, u32)> {
        // min(s, a) = x holds with a = top when x = s and with a = x when x < s.
        let s = *lambda.max(mu);
        let first = if *lambda == s { self.top() } else { *lambda };
        let second = if *mu == s && *lambda != s { self.top() } else { *mu };
        Some((first, second))
    }

    fn contains(&self, e: &u32) -> bool {
        *e < self.levels
    }

    fn render(&self, e: &u32) -> String {
        e.to_string()
    }

    fn parse(&self, text: &str) -> Result<u32> {
        text.trim()
            .parse::<u32>()
            .ok()
            .filter(|l| self.contains(l))
            .ok_or_else(|| Error::Parse {
                what: "qualitative level",
                text: text.to_string(),
            })
    }
}

impl Carrier for QualPossibility {
    fn elements(&self, _cfg: &SampleConfig) -> Option<Vec<u32>> {
        Some((0..self.levels).collect())
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, _cfg: &SampleConfig) -> u32 {
        rng.gen_range(0..self.levels)
    }

    fn sample_normalized<R: Rng + ?Sized>(&self, rng: &mut R, k: usize, cfg: &SampleConfig) -> Vec<u32> {
        let mut out: Vec<u32> = (0..k).map(|_| self.sample(rng, cfg)).collect();
        let peak = rng.gen_range(0..k);
        out[peak] = self.top();
        out
    }
}
