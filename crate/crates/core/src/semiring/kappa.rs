use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use super::{Carrier, SampleConfig, Semiring};
use crate::{Comparison, Error, Result};

/// A kappa rank: a nonnegative integer or infinity. The derived `Ord` is the
/// integer order with infinity on top; plausibility runs the other way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rank {
    Finite(u64),
    Infinite,
}

impl Rank {
    fn plus(self, other: Rank) -> Rank {
        match (self, other) {
            // u64 overflow can only be reached by ranks far past any ceiling;
            // it lands on infinity, the only saturation point.
            (Rank::Finite(a), Rank::Finite(b)) => a.checked_add(b).map_or(Rank::Infinite, Rank::Finite),
            _ => Rank::Infinite,
        }
    }

    /// `self - other` for `other <= self` (integer order).
    fn minus(self, other: Rank) -> Rank {
        match (self, other) {
            (Rank::Finite(a), Rank::Finite(b)) => Rank::Finite(a - b),
            (Rank::Infinite, _) => Rank::Infinite,
            (Rank::Finite(_), Rank::Infinite) => unreachable!("finite minus infinite"),
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(r) => write!(f, "{r}"),
            Rank::Infinite => f.write_str("inf"),
        }
    }
}

/// Kappa rankings `(N u {inf}, min, +, inf, 0)`. Rank 0 is fully plausible.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Kappa;

impl Semiring for Kappa {
    type Elem = Rank;

    fn name(&self) -> String {
        "kappa".into()
    }

    fn zero(&self) -> Rank {
        Rank::Infinite
    }

    fn one(&self) -> Rank {
        Rank::Finite(0)
    }

    fn add(&self, a: &Rank, b: &Rank) -> Rank {
        *a.min(b)
    }

    fn mul(&self, a: &Rank, b: &Rank) -> Rank {
        a.plus(*b)
    }

    fn compare(&self, a: &Rank, b: &Rank) -> Comparison {
        // smaller rank = more plausible
        b.cmp(a).into()
    }

    fn solve_add(&self, target: &Rank, known: &Rank) -> Option<Rank> {
        match target.cmp(known) {
            core::cmp::Ordering::Less => Some(*target),
            core::cmp::Ordering::Equal => Some(Rank::Infinite),
            core::cmp::Ordering::Greater => None,
        }
    }

    fn solve_scale(&self, lambda: &Rank, mu: &Rank) -> Option<(Rank, Rank)> {
        let s = *lambda.min(mu);
        if s == Rank::Infinite {
            return Some((self.one(), self.zero()));
        }
        Some((lambda.minus(s), mu.minus(s)))
    }

    fn contains(&self, _e: &Rank) -> bool {
        true
    }

    fn render(&self, e: &Rank) -> String {
        e.to_string()
    }

    fn parse(&self, text: &str) -> Result<Rank> {
        let text = text.trim();
        if text == "inf" {
            return Ok(Rank::Infinite);
        }
        if !text.is_empty() && text.bytes().all(|b| b.is_ascii_digit()) {
            if let Ok(r) = text.parse() {
                return Ok(Rank::Finite(r));
            }
        }
        Err(Error::Parse {
            what: "kappa rank",
            text: text.to_string(),
        })
    }
}

impl Carrier for Kappa {
    fn elements(&self, cfg: &SampleConfig) -> Option<Vec<Rank>> {
        Some(
            (0..=cfg.kappa_ceiling)
                .map(Rank::Finite)
                .chain(core::iter::once(Rank::Infinite))
                .collect(),
        )
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, cfg: &SampleConfig) -> Rank {
        if rng.gen_ratio(1, 8) {
            Rank::Infinite
        } else {
            Rank::Finite(rng.gen_range(0..=cfg.kappa_ceiling))
        }
    }

    fn sample_normalized<R: Rng + ?Sized>(&self, rng: &mut R, k: usize, cfg: &SampleConfig) -> Vec<Rank> {
        let mut out: Vec<Rank> = (0..k).map(|_| self.sample(rng, cfg)).collect();
        let peak = rng.gen_range(0..k);
        out[peak] = Rank::Finite(0);
        out
    }
}
