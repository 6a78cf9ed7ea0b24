//! The binary scale: pairs `<a, b>` with `a + b = 1`, read as the
//! plausibility of reaching the best and the worst consequence.

use alloc::vec::Vec;

use rand::Rng;

use crate::semiring::{normalized_tuples, Carrier, SampleConfig, Semiring};
use crate::{Comparison, Error, Result};

/// An unconstrained pair; the accumulator of sums of binary values, which in
/// general leave the binary scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairValue<E> {
    pub first: E,
    pub second: E,
}

impl<E> PairValue<E> {
    pub fn new(first: E, second: E) -> Self {
        PairValue { first, second }
    }
}

/// A pair on the binary scale. Membership is checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryValue<E> {
    first: E,
    second: E,
}

impl<E: Clone + PartialEq> BinaryValue<E> {
    pub fn new<S: Semiring<Elem = E>>(s: &S, first: E, second: E) -> Result<Self> {
        if !s.contains(&first) || !s.contains(&second) || !s.is_one(&s.add(&first, &second)) {
            return Err(Error::NotBinary {
                first: s.render_checked(&first),
                second: s.render_checked(&second),
            });
        }
        Ok(BinaryValue { first, second })
    }

    pub fn from_pair<S: Semiring<Elem = E>>(s: &S, pair: PairValue<E>) -> Result<Self> {
        Self::new(s, pair.first, pair.second)
    }

    /// `<1, 0>`: the utility of the best consequence.
    pub fn best<S: Semiring<Elem = E>>(s: &S) -> Self {
        BinaryValue {
            first: s.one(),
            second: s.zero(),
        }
    }

    /// `<0, 1>`: the utility of the worst consequence.
    pub fn worst<S: Semiring<Elem = E>>(s: &S) -> Self {
        BinaryValue {
            first: s.zero(),
            second: s.one(),
        }
    }

    pub fn first(&self) -> &E {
        &self.first
    }

    pub fn second(&self) -> &E {
        &self.second
    }

    pub fn to_pair(&self) -> PairValue<E> {
        PairValue::new(self.first.clone(), self.second.clone())
    }

    pub fn into_parts(self) -> (E, E) {
        (self.first, self.second)
    }

    /// `<b, a>` for `<a, b>`; stays on the scale since `+` commutes.
    pub fn swap(&self) -> Self {
        BinaryValue {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }
}

pub(crate) trait RenderChecked: Semiring {
    fn render_checked(&self, e: &Self::Elem) -> alloc::string::String {
        if self.contains(e) {
            self.render(e)
        } else {
            alloc::format!("{e:?}")
        }
    }
}

impl<S: Semiring + ?Sized> RenderChecked for S {}

/// `<a, b> + <c, d> = <a + c, b + d>`.
pub fn pair_add<S: Semiring>(s: &S, a: &PairValue<S::Elem>, b: &PairValue<S::Elem>) -> PairValue<S::Elem> {
    PairValue::new(s.add(&a.first, &b.first), s.add(&a.second, &b.second))
}

/// `l * <a, b> = <l * a, l * b>`.
pub fn scalar_mul<S: Semiring>(s: &S, lambda: &S::Elem, a: &PairValue<S::Elem>) -> PairValue<S::Elem> {
    PairValue::new(s.mul(lambda, &a.first), s.mul(lambda, &a.second))
}

/// The binary-scale order: `a >= b` iff `a.first >= b.first` and
/// `b.second >= a.second`.
pub fn compare2<S: Semiring>(s: &S, a: &BinaryValue<S::Elem>, b: &BinaryValue<S::Elem>) -> Comparison {
    if a == b {
        return Comparison::Equivalent;
    }
    let first = s.compare(&a.first, &b.first);
    let second = s.compare(&b.second, &a.second);
    // Distinct canonical forms are never Equivalent.
    match first.product(second) {
        Comparison::Equivalent => Comparison::Incomparable,
        other => other,
    }
}

/// Factor `<lambda, mu>` as `(lambda + mu) * alpha` with `alpha` on the binary
/// scale. The solver's answer is re-multiplied before it is returned.
pub fn solve_scale<S: Semiring>(s: &S, lambda: &S::Elem, mu: &S::Elem) -> Result<BinaryValue<S::Elem>> {
    let failure = || {
        Error::Invariant(alloc::format!(
            "{}: no scale factor for <{}, {}>",
            s.name(),
            s.render(lambda),
            s.render(mu)
        ))
    };
    let (a1, a2) = s.solve_scale(lambda, mu).ok_or_else(failure)?;
    let alpha = BinaryValue::new(s, a1, a2).map_err(|_| failure())?;
    let total = s.add(lambda, mu);
    if s.mul(&total, &alpha.first) != *lambda || s.mul(&total, &alpha.second) != *mu {
        return Err(failure());
    }
    Ok(alpha)
}

/// Every element of the binary scale of a finite carrier.
pub fn elements<S: Carrier>(s: &S, cfg: &SampleConfig) -> Option<Vec<BinaryValue<S::Elem>>> {
    Some(
        normalized_tuples(s, 2, cfg)?
            .into_iter()
            .map(|mut t| {
                let second = t.pop().expect("pair");
                let first = t.pop().expect("pair");
                BinaryValue { first, second }
            })
            .collect(),
    )
}

pub fn sample<S: Carrier, R: Rng + ?Sized>(s: &S, rng: &mut R, cfg: &SampleConfig) -> BinaryValue<S::Elem> {
    let mut t = s.sample_normalized(rng, 2, cfg);
    let second = t.pop().expect("pair");
    let first = t.pop().expect("pair");
    BinaryValue { first, second }
}
