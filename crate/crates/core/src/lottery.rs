//! Consequence spaces, simple and compound lotteries, and reduction.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::binary::BinaryValue;
use crate::semiring::Semiring;
use crate::{Error, Result};

/// A finite, ordered list of named consequences with a designated best and
/// worst one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsequenceSpace {
    names: Vec<String>,
    best: usize,
    worst: usize,
}

impl ConsequenceSpace {
    pub fn new<N: Into<String>>(names: impl IntoIterator<Item = N>, best: &str, worst: &str) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() < 2 {
            return Err(Error::InvalidSpace("at least two consequences are required".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateName(n.clone()));
            }
        }
        let find = |n: &str| {
            names
                .iter()
                .position(|x| x == n)
                .ok_or_else(|| Error::UnknownConsequence(n.into()))
        };
        let (best, worst) = (find(best)?, find(worst)?);
        if best == worst {
            return Err(Error::InvalidSpace("best and worst consequences coincide".into()));
        }
        Ok(ConsequenceSpace { names, best, worst })
    }

    /// `best, c1, .., c(n-2), worst`.
    pub fn numbered(n: usize) -> Result<Self> {
        let mut names = Vec::with_capacity(n);
        names.push(String::from("best"));
        names.extend((1..n.saturating_sub(1)).map(|i| format!("c{i}")));
        names.push(String::from("worst"));
        Self::new(names, "best", "worst")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownConsequence(name.into()))
    }

    pub fn best(&self) -> usize {
        self.best
    }

    pub fn worst(&self) -> usize {
        self.worst
    }

    /// The same consequences with best and worst exchanged.
    pub fn reversed(&self) -> Self {
        ConsequenceSpace {
            names: self.names.clone(),
            best: self.worst,
            worst: self.best,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch<E> {
    pub weight: E,
    pub lottery: Lottery<E>,
}

/// A simple lottery (a distribution indexed by consequence position; absent
/// mass is zero) or a compound lottery over sub-lotteries.
///
/// Use the checked constructors; [`Lottery::validate`] re-checks a value
/// assembled by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lottery<E> {
    Simple(Vec<E>),
    Compound(Vec<Branch<E>>),
}

fn check_normalized<S: Semiring>(s: &S, weights: &[S::Elem], what: &'static str) -> Result<()> {
    if let Some(bad) = weights.iter().find(|w| !s.contains(w)) {
        return Err(Error::InstanceMismatch {
            expected: s.name(),
            value: format!("{bad:?}"),
        });
    }
    let total = s.sum(weights);
    if !s.is_one(&total) {
        return Err(Error::NotNormalized {
            what,
            total: s.render(&total),
        });
    }
    Ok(())
}

impl<E: Clone + PartialEq> Lottery<E> {
    pub fn simple<S: Semiring<Elem = E>>(s: &S, dist: Vec<E>) -> Result<Self> {
        check_normalized(s, &dist, "simple lottery")?;
        Ok(Lottery::Simple(dist))
    }

    pub fn compound<S: Semiring<Elem = E>>(s: &S, branches: Vec<Branch<E>>) -> Result<Self> {
        let first = branches
            .first()
            .ok_or_else(|| Error::InvalidLottery("compound lottery without branches".into()))?;
        let arity = first.lottery.arity();
        if let Some(b) = branches.iter().find(|b| b.lottery.arity() != arity) {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: b.lottery.arity(),
            });
        }
        let weights: Vec<E> = branches.iter().map(|b| b.weight.clone()).collect();
        check_normalized(s, &weights, "compound lottery")?;
        Ok(Lottery::Compound(branches))
    }

    /// All mass on consequence `x` of an `n`-consequence space.
    pub fn degenerate<S: Semiring<Elem = E>>(s: &S, n: usize, x: usize) -> Result<Self> {
        if x >= n {
            return Err(Error::UnknownConsequence(format!("#{x}")));
        }
        let mut dist = alloc::vec![s.zero(); n];
        dist[x] = s.one();
        Ok(Lottery::Simple(dist))
    }

    /// `[a1/best, a2/worst]`.
    pub fn binary<S: Semiring<Elem = E>>(s: &S, space: &ConsequenceSpace, alpha: &BinaryValue<E>) -> Self {
        let mut dist = alloc::vec![s.zero(); space.len()];
        dist[space.best()] = alpha.first().clone();
        dist[space.worst()] = alpha.second().clone();
        Lottery::Simple(dist)
    }

    /// Number of consequences the lottery ranges over.
    pub fn arity(&self) -> usize {
        match self {
            Lottery::Simple(d) => d.len(),
            Lottery::Compound(b) => b.first().map_or(0, |b| b.lottery.arity()),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Lottery::Simple(_) => 1,
            Lottery::Compound(b) => 1 + b.iter().map(|b| b.lottery.depth()).max().unwrap_or(0),
        }
    }

    pub fn is_simple(&self) -> bool {
        matches!(self, Lottery::Simple(_))
    }

    /// Re-checks normalization and arity of every node.
    pub fn validate<S: Semiring<Elem = E>>(&self, s: &S, arity: usize) -> Result<()> {
        match self {
            Lottery::Simple(d) => {
                if d.len() != arity {
                    return Err(Error::ArityMismatch {
                        expected: arity,
                        found: d.len(),
                    });
                }
                check_normalized(s, d, "simple lottery")
            }
            Lottery::Compound(branches) => {
                if branches.is_empty() {
                    return Err(Error::InvalidLottery("compound lottery without branches".into()));
                }
                let weights: Vec<E> = branches.iter().map(|b| b.weight.clone()).collect();
                check_normalized(s, &weights, "compound lottery")?;
                branches.iter().try_for_each(|b| b.lottery.validate(s, arity))
            }
        }
    }

    /// The sub-lottery at `path` (branch indices from the root).
    pub fn at(&self, path: &[usize]) -> Result<&Lottery<E>> {
        let mut node = self;
        for (depth, &i) in path.iter().enumerate() {
            node = match node {
                Lottery::Compound(b) if i < b.len() => &b[i].lottery,
                _ => return Err(Error::InvalidPath(format!("{:?}", &path[..=depth]))),
            };
        }
        Ok(node)
    }

    /// Replace the sub-lottery at a non-empty `path`; coefficients are kept.
    pub fn substitute(&self, path: &[usize], replacement: Lottery<E>) -> Result<Self> {
        if path.is_empty() {
            return Err(Error::InvalidPath("[]".into()));
        }
        if replacement.arity() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: replacement.arity(),
            });
        }
        let mut out = self.clone();
        let mut node = &mut out;
        for (depth, &i) in path.iter().enumerate() {
            node = match node {
                Lottery::Compound(b) if i < b.len() => &mut b[i].lottery,
                _ => return Err(Error::InvalidPath(format!("{:?}", &path[..=depth]))),
            };
        }
        *node = replacement;
        Ok(out)
    }

    /// The reduced distribution: `x -> sum_i w_i * reduce(sub_i)(x)`.
    pub fn distribution<S: Semiring<Elem = E>>(&self, s: &S) -> Vec<E> {
        match self {
            Lottery::Simple(d) => d.clone(),
            Lottery::Compound(branches) => {
                let mut acc = alloc::vec![s.zero(); self.arity()];
                for b in branches {
                    for (slot, p) in acc.iter_mut().zip(b.lottery.distribution(s)) {
                        *slot = s.add(slot, &s.mul(&b.weight, &p));
                    }
                }
                acc
            }
        }
    }

    /// Collapse to the equivalent simple lottery.
    pub fn reduce<S: Semiring<Elem = E>>(&self, s: &S) -> Self {
        Lottery::Simple(self.distribution(s))
    }

    /// Merge one level: branches whose sub-lottery is compound are replaced by
    /// its branches with multiplied weights.
    pub fn flatten<S: Semiring<Elem = E>>(&self, s: &S) -> Self {
        match self {
            Lottery::Simple(_) => self.clone(),
            Lottery::Compound(branches) => {
                let mut out = Vec::new();
                for b in branches {
                    match &b.lottery {
                        Lottery::Compound(inner) => out.extend(inner.iter().map(|ib| Branch {
                            weight: s.mul(&b.weight, &ib.weight),
                            lottery: ib.lottery.clone(),
                        })),
                        Lottery::Simple(_) => out.push(b.clone()),
                    }
                }
                Lottery::Compound(out)
            }
        }
    }
}
