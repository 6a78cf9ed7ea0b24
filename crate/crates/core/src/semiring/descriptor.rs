//! Runtime-selected instances: a [`Descriptor`] names an instance and is
//! itself a [`Semiring`] over the tagged [`Value`] carrier.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::Rng;

use super::{
    Carrier, Kappa, LexProbability, Probability, Product, QualPossibility, QuantPossibility, Rank, SampleConfig,
    Semiring,
};
use crate::{Comparison, Error, Rational, Result};

/// Identifies one shipped semiring instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    Prob,
    QuantPoss,
    QualPoss(QualPossibility),
    Kappa,
    LexProb(LexProbability),
    Product(Box<Product<Descriptor, Descriptor>>),
}

/// An element of some instance's carrier, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Rational(Rational),
    Level(u32),
    Rank(Rank),
    Vector(Vec<Rational>),
    Pair(Box<(Value, Value)>),
}

impl Value {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Value::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_level(&self) -> Option<&u32> {
        match self {
            Value::Level(l) => Some(l),
            _ => None,
        }
    }

    pub fn as_rank(&self) -> Option<&Rank> {
        match self {
            Value::Rank(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_vector(&self) -> Option<&Vec<Rational>> {
        match self {
            Value::Vector(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<&(Value, Value)> {
        match self {
            Value::Pair(p) => Some(p),
            _ => None,
        }
    }

    pub fn pair(left: Value, right: Value) -> Value {
        Value::Pair(Box::new((left, right)))
    }
}

fn wrap_pair(p: (Value, Value)) -> Value {
    Value::Pair(Box::new(p))
}

/// Binds the concrete instance `$s`, the carrier projection `$un` and the
/// injection `$wrap` for whichever variant `$desc` is, then evaluates `$body`.
macro_rules! dispatch {
    ($desc:expr, $s:ident, $un:ident, $wrap:ident => $body:expr) => {{
        #[allow(unused_variables)]
        match $desc {
            Descriptor::Prob => {
                let $s = &Probability;
                let $un: fn(&Value) -> Option<&Rational> = Value::as_rational;
                let $wrap: fn(Rational) -> Value = Value::Rational;
                $body
            }
            Descriptor::QuantPoss => {
                let $s = &QuantPossibility;
                let $un: fn(&Value) -> Option<&Rational> = Value::as_rational;
                let $wrap: fn(Rational) -> Value = Value::Rational;
                $body
            }
            Descriptor::QualPoss(q) => {
                let $s = q;
                let $un: fn(&Value) -> Option<&u32> = Value::as_level;
                let $wrap: fn(u32) -> Value = Value::Level;
                $body
            }
            Descriptor::Kappa => {
                let $s = &Kappa;
                let $un: fn(&Value) -> Option<&Rank> = Value::as_rank;
                let $wrap: fn(Rank) -> Value = Value::Rank;
                $body
            }
            Descriptor::LexProb(l) => {
                let $s = l;
                let $un: fn(&Value) -> Option<&Vec<Rational>> = Value::as_vector;
                let $wrap: fn(Vec<Rational>) -> Value = Value::Vector;
                $body
            }
            Descriptor::Product(p) => {
                let $s = &**p;
                let $un: fn(&Value) -> Option<&(Value, Value)> = Value::as_pair;
                let $wrap: fn((Value, Value)) -> Value = wrap_pair;
                $body
            }
        }
    }};
}

impl Descriptor {
    pub fn qualposs(levels: u32) -> Result<Self> {
        Ok(Descriptor::QualPoss(QualPossibility::new(levels)?))
    }

    pub fn lexprob(len: usize) -> Result<Self> {
        Ok(Descriptor::LexProb(LexProbability::new(len)?))
    }

    pub fn product(left: Descriptor, right: Descriptor) -> Self {
        Descriptor::Product(Box::new(Product::new(left, right)))
    }

    /// Whether enumeration of the carrier is possible.
    pub fn is_finite(&self) -> bool {
        match self {
            Descriptor::Prob | Descriptor::QuantPoss | Descriptor::LexProb(_) => false,
            Descriptor::QualPoss(_) | Descriptor::Kappa => true,
            Descriptor::Product(p) => p.left.is_finite() && p.right.is_finite(),
        }
    }

    /// Rejects values that do not belong to this instance.
    pub fn check(&self, v: &Value) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::InstanceMismatch {
                expected: self.to_string(),
                value: format!("{v:?}"),
            })
        }
    }

    pub fn checked_add(&self, a: &Value, b: &Value) -> Result<Value> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_mul(&self, a: &Value, b: &Value) -> Result<Value> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn checked_compare(&self, a: &Value, b: &Value) -> Result<Comparison> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.compare(a, b))
    }

    pub fn checked_solve_add(&self, target: &Value, known: &Value) -> Result<Option<Value>> {
        self.check(target)?;
        self.check(known)?;
        Ok(self.solve_add(target, known))
    }

    fn parse_tokens<'a, I: Iterator<Item = &'a str>>(tokens: &mut I, whole: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "semiring descriptor",
            text: whole.to_string(),
        };
        let number = |tokens: &mut I| -> Result<u64> {
            tokens
                .next()
                .filter(|t| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|t| t.parse().ok())
                .ok_or_else(err)
        };
        match tokens.next().ok_or_else(err)? {
            "prob" => Ok(Descriptor::Prob),
            "quantposs" => Ok(Descriptor::QuantPoss),
            "kappa" => Ok(Descriptor::Kappa),
            "qualposs" => {
                let n = u32::try_from(number(tokens)?).map_err(|_| err())?;
                Descriptor::qualposs(n).map_err(|_| err())
            }
            "lexprob" => {
                let k = usize::try_from(number(tokens)?).map_err(|_| err())?;
                Descriptor::lexprob(k).map_err(|_| err())
            }
            "product" => {
                let left = Self::parse_tokens(tokens, whole)?;
                let right = Self::parse_tokens(tokens, whole)?;
                Ok(Descriptor::product(left, right))
            }
            _ => Err(err()),
        }
    }
}

impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.trim().split(':');
        let d = Self::parse_tokens(&mut tokens, s)?;
        if tokens.next().is_some() {
            return Err(Error::Parse {
                what: "semiring descriptor",
                text: s.to_string(),
            });
        }
        Ok(d)
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn expect<'a, T>(d: &Descriptor, v: &'a Value, projected: Option<&'a T>) -> &'a T {
    match projected {
        Some(x) => x,
        None => panic!("instance mismatch: {v:?} is not a {d} value"),
    }
}

/// Operations panic on values of another instance; validate untrusted values
/// with [`Descriptor::check`] or use the `checked_*` methods.
impl Semiring for Descriptor {
    type Elem = Value;

    fn name(&self) -> String {
        match self {
            Descriptor::Prob => Probability.name(),
            Descriptor::QuantPoss => QuantPossibility.name(),
            Descriptor::QualPoss(q) => q.name(),
            Descriptor::Kappa => Kappa.name(),
            Descriptor::LexProb(l) => l.name(),
            Descriptor::Product(p) => p.name(),
        }
    }

    fn zero(&self) -> Value {
        dispatch!(self, s, un, wrap => wrap(s.zero()))
    }

    fn one(&self) -> Value {
        dispatch!(self, s, un, wrap => wrap(s.one()))
    }

    fn add(&self, a: &Value, b: &Value) -> Value {
        dispatch!(self, s, un, wrap => wrap(s.add(expect(self, a, un(a)), expect(self, b, un(b)))))
    }

    fn mul(&self, a: &Value, b: &Value) -> Value {
        dispatch!(self, s, un, wrap => wrap(s.mul(expect(self, a, un(a)), expect(self, b, un(b)))))
    }

    fn compare(&self, a: &Value, b: &Value) -> Comparison {
        dispatch!(self, s, un, wrap => s.compare(expect(self, a, un(a)), expect(self, b, un(b))))
    }

    fn solve_add(&self, target: &Value, known: &Value) -> Option<Value> {
        dispatch!(self, s, un, wrap => s
            .solve_add(expect(self, target, un(target)), expect(self, known, un(known)))
            .map(wrap))
    }

    // Some carriers are `Copy`, others are not.
    #[allow(clippy::clone_on_copy)]
    fn solve_add_system(&self, equations: &[(Value, Value)]) -> Option<Value> {
        dispatch!(self, s, un, wrap => {
            let eqs: Vec<_> = equations
                .iter()
                .map(|(t, k)| (expect(self, t, un(t)).clone(), expect(self, k, un(k)).clone()))
                .collect();
            s.solve_add_system(&eqs).map(wrap)
        })
    }

    fn solve_scale(&self, lambda: &Value, mu: &Value) -> Option<(Value, Value)> {
        dispatch!(self, s, un, wrap => s
            .solve_scale(expect(self, lambda, un(lambda)), expect(self, mu, un(mu)))
            .map(|(a, b)| (wrap(a), wrap(b))))
    }

    fn contains(&self, e: &Value) -> bool {
        dispatch!(self, s, un, wrap => un(e).is_some_and(|x| s.contains(x)))
    }

    fn render(&self, e: &Value) -> String {
        dispatch!(self, s, un, wrap => s.render(expect(self, e, un(e))))
    }

    fn parse(&self, text: &str) -> Result<Value> {
        dispatch!(self, s, un, wrap => s.parse(text).map(wrap))
    }
}

impl Carrier for Descriptor {
    fn elements(&self, cfg: &SampleConfig) -> Option<Vec<Value>> {
        dispatch!(self, s, un, wrap => s.elements(cfg).map(|v| v.into_iter().map(wrap).collect()))
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, cfg: &SampleConfig) -> Value {
        dispatch!(self, s, un, wrap => wrap(s.sample(rng, cfg)))
    }

    fn sample_normalized<R: Rng + ?Sized>(&self, rng: &mut R, k: usize, cfg: &SampleConfig) -> Vec<Value> {
        dispatch!(self, s, un, wrap => s.sample_normalized(rng, k, cfg).into_iter().map(wrap).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::rational::ratio;

    fn d(s: &str) -> Descriptor {
        s.parse().unwrap()
    }

    #[test]
    fn descriptor_strings_round_trip() {
        for s in [
            "prob",
            "quantposs",
            "qualposs:3",
            "kappa",
            "lexprob:2",
            "product:prob:prob",
            "product:qualposs:3:kappa",
            "product:product:prob:kappa:lexprob:3",
        ] {
            assert_eq!(d(s).to_string(), s);
        }
        for bad in [
            "",
            "qualposs",
            "qualposs:1",
            "lexprob:0",
            "product:prob",
            "prob:1",
            "symbolic",
        ] {
            assert!(bad.parse::<Descriptor>().is_err(), "{bad}");
        }
    }

    #[test]
    fn dynamic_examples() {
        let prob = d("prob");
        let v = |s: &str| prob.parse(s).unwrap();
        assert_eq!(prob.add(&v("3/10"), &v("1/10")), v("2/5"));
        assert_eq!(prob.render(&prob.mul(&v("1/2"), &v("2/5"))), "1/5");

        let kappa = d("kappa");
        let k = |s: &str| kappa.parse(s).unwrap();
        assert_eq!(kappa.add(&k("2"), &k("inf")), k("2"));
        assert_eq!(kappa.mul(&k("2"), &k("3")), k("5"));
        assert_eq!(kappa.compare(&k("5"), &k("2")), Comparison::Less);

        let q = d("qualposs:3");
        assert_eq!(q.add(&Value::Level(1), &Value::Level(2)), Value::Level(2));
        assert_eq!(q.mul(&Value::Level(2), &Value::Level(0)), Value::Level(0));
        assert_eq!(q.solve_add(&Value::Level(1), &Value::Level(2)), None);

        let pp = d("product:prob:prob");
        let a = pp.parse("(1/2,3/4)").unwrap();
        let b = pp.parse("(3/4,1/2)").unwrap();
        assert_eq!(pp.compare(&a, &b), Comparison::Incomparable);
        assert_eq!(
            a,
            Value::pair(Value::Rational(ratio(1, 2)), Value::Rational(ratio(3, 4)))
        );
    }

    #[test]
    fn mismatch_is_an_error() {
        let q = d("qualposs:3");
        let prob_value = Value::Rational(ratio(1, 2));
        assert!(matches!(
            q.checked_add(&prob_value, &Value::Level(1)),
            Err(Error::InstanceMismatch { .. })
        ));
        assert!(matches!(
            q.checked_compare(&Value::Level(3), &Value::Level(1)),
            Err(Error::InstanceMismatch { .. })
        ));
        assert!(d("qualposs:4").checked_mul(&Value::Level(3), &Value::Level(1)).is_ok());
    }

    #[test]
    #[should_panic(expected = "instance mismatch")]
    fn unchecked_mismatch_panics() {
        d("kappa").add(&Value::Level(1), &Value::Level(1));
    }
}
