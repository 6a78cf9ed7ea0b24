//! Helpers shared by the rational carriers.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::{Error, Rational};

pub(crate) fn parse_nonnegative(text: &str, what: &'static str) -> Result<Rational, Error> {
    let err = || Error::Parse {
        what,
        text: text.to_string(),
    };
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !digits(den) {
        return Err(err());
    }
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

pub(crate) fn render(r: &Rational) -> String {
    r.to_string()
}

pub(crate) fn is_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= Rational::one()
}

pub(crate) fn ratio(num: u64, den: u64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A rational in `[0, max]` with denominator at most `bound`.
pub(crate) fn sample_bounded<R: Rng + ?Sized>(rng: &mut R, bound: u64, max: u64) -> Rational {
    let den = rng.gen_range(1..=bound.max(1));
    let num = rng.gen_range(0..=den * max);
    ratio(num, den)
}

/// `k` nonnegative rationals with a common denominator at most `bound`,
/// summing to exactly one.
pub(crate) fn sample_composition<R: Rng + ?Sized>(rng: &mut R, k: usize, bound: u64) -> Vec<Rational> {
    assert!(k > 0);
    let den = rng.gen_range(1..=bound.max(1));
    let mut cuts: Vec<u64> = (0..k - 1).map(|_| rng.gen_range(0..=den)).collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(k);
    let mut prev = 0;
    for c in cuts.into_iter().chain(core::iter::once(den)) {
        out.push(ratio(c - prev, den));
        prev = c;
    }
    out
}
