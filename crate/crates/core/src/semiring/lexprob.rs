use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::rational::{parse_nonnegative, render, sample_bounded, sample_composition};
use super::{Carrier, SampleConfig, Semiring};
use crate::{Comparison, Error, Rational, Result};

/// Lexicographic probability: length-`k` vectors of nonnegative rationals
/// with componentwise `+` and `*`, ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LexProbability {
    len: usize,
}

impl LexProbability {
    pub fn new(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::Precondition("lexicographic vectors need length >= 1".into()));
        }
        Ok(LexProbability { len })
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.len
    }

    fn zip(&self, a: &[Rational], b: &[Rational], f: impl Fn(&Rational, &Rational) -> Rational) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| f(x, y)).collect()
    }
}

impl Semiring for LexProbability {
    type Elem = Vec<Rational>;

    fn name(&self) -> String {
        format!("lexprob:{}", self.len)
    }

    fn zero(&self) -> Vec<Rational> {
        alloc::vec![Rational::zero(); self.len]
    }

    fn one(&self) -> Vec<Rational> {
        alloc::vec![Rational::one(); self.len]
    }

    fn add(&self, a: &Vec<Rational>, b: &Vec<Rational>) -> Vec<Rational> {
        self.zip(a, b, |x, y| x + y)
    }

    fn mul(&self, a: &Vec<Rational>, b: &Vec<Rational>) -> Vec<Rational> {
        self.zip(a, b, |x, y| x * y)
    }

    fn compare(&self, a: &Vec<Rational>, b: &Vec<Rational>) -> Comparison {
        a.cmp(b).into()
    }

    fn solve_add(&self, target: &Vec<Rational>, known: &Vec<Rational>) -> Option<Vec<Rational>> {
        target.iter().zip(known).map(|(t, k)| (t >= k).then(|| t - k)).collect()
    }

    fn solve_scale(&self, lambda: &Vec<Rational>, mu: &Vec<Rational>) -> Option<(Vec<Rational>, Vec<Rational>)> {
        let (mut first, mut second) = (Vec::with_capacity(self.len), Vec::with_capacity(self.len));
        for (l, m) in lambda.iter().zip(mu) {
            let total = l + m;
            if total.is_zero() {
                first.push(Rational::one());
                second.push(Rational::zero());
            } else {
                first.push(l / &total);
                second.push(m / &total);
            }
        }
        Some((first, second))
    }

    fn contains(&self, e: &Vec<Rational>) -> bool {
        e.len() == self.len && e.iter().all(|x| !x.is_negative())
    }

    fn render(&self, e: &Vec<Rational>) -> String {
        let parts: Vec<String> = e.iter().map(render).collect();
        format!("[{}]", parts.join(","))
    }

    fn parse(&self, text: &str) -> Result<Vec<Rational>> {
        let err = || Error::Parse {
            what: "lexicographic vector",
            text: text.to_string(),
        };
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(err)?;
        let parts = inner
            .split(',')
            .map(|p| parse_nonnegative(p, "lexicographic component"))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| err())?;
        if parts.len() != self.len {
            return Err(err());
        }
        Ok(parts)
    }
}

impl Carrier for LexProbability {
    fn elements(&self, _cfg: &SampleConfig) -> Option<Vec<Vec<Rational>>> {
        None
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, cfg: &SampleConfig) -> Vec<Rational> {
        (0..self.len)
            .map(|_| sample_bounded(rng, cfg.denominator_bound, 2))
            .collect()
    }

    fn sample_normalized<R: Rng + ?Sized>(&self, rng: &mut R, k: usize, cfg: &SampleConfig) -> Vec<Vec<Rational>> {
        let columns: Vec<Vec<Rational>> = (0..self.len)
            .map(|_| sample_composition(rng, k, cfg.denominator_bound))
            .collect();
        (0..k).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect()
    }
}
