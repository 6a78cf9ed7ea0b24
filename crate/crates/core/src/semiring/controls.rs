use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::Rng;

use super::{Carrier, SampleConfig, Semiring};
use crate::{Comparison, Error, Result};

/// `(N, +, max, 0, 0)`: not a semiring, since `0` does not absorb under
/// `max`. Used as a negative control for the law checker.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NaturalPlusMax;

impl Semiring for NaturalPlusMax {
    type Elem = u64;

    fn name(&self) -> String {
        "control:nat-plus-max".into()
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        a + b
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        *a.max(b)
    }

    fn compare(&self, a: &u64, b: &u64) -> Comparison {
        a.cmp(b).into()
    }

    fn solve_add(&self, target: &u64, known: &u64) -> Option<u64> {
        target.checked_sub(*known)
    }

    fn solve_scale(&self, _lambda: &u64, _mu: &u64) -> Option<(u64, u64)> {
        None
    }

    fn contains(&self, _e: &u64) -> bool {
        true
    }

    fn render(&self, e: &u64) -> String {
        e.to_string()
    }

    fn parse(&self, text: &str) -> Result<u64> {
        text.trim().parse().map_err(|_| Error::Parse {
            what: "natural number",
            text: text.to_string(),
        })
    }
}

impl Carrier for NaturalPlusMax {
    /// Truncated at the kappa ceiling.
    fn elements(&self, cfg: &SampleConfig) -> Option<Vec<u64>> {
        Some((0..=cfg.kappa_ceiling).collect())
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, cfg: &SampleConfig) -> u64 {
        rng.gen_range(0..=cfg.kappa_ceiling)
    }

    fn sample_normalized<R: Rng + ?Sized>(&self, _rng: &mut R, k: usize, _cfg: &SampleConfig) -> Vec<u64> {
        alloc::vec![0; k]
    }
}
