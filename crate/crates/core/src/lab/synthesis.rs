//! Recovering a utility from a finite table of preference judgements.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::aeu::{aeu_compare, UtilityAssignment};
use crate::binary::BinaryValue;
use crate::lottery::{ConsequenceSpace, Lottery};
use crate::semiring::Semiring;
use crate::{Comparison, Error, Result};

/// Named lotteries and a verdict for every ordered pair of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferenceTable<E> {
    names: Vec<String>,
    lotteries: Vec<Lottery<E>>,
    relation: Vec<Vec<Comparison>>,
}

impl<E: Clone + PartialEq> PreferenceTable<E> {
    /// Entries may give either orientation of a pair; the other is implied.
    /// Every pair must be covered, the diagonal may be omitted.
    pub fn new(
        names: Vec<String>,
        lotteries: Vec<Lottery<E>>,
        entries: &[(String, String, Comparison)],
    ) -> Result<Self> {
        if names.len() != lotteries.len() {
            return Err(Error::ArityMismatch {
                expected: names.len(),
                found: lotteries.len(),
            });
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateName(n.clone()));
            }
        }
        let index = |name: &str| {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::InconsistentTable(format!("unknown lottery `{name}`")))
        };
        let n = names.len();
        let mut relation: Vec<Vec<Option<Comparison>>> = alloc::vec![alloc::vec![None; n]; n];
        for (i, row) in relation.iter_mut().enumerate() {
            row[i] = Some(Comparison::Equivalent);
        }
        for (a, b, c) in entries {
            let (i, j) = (index(a)?, index(b)?);
            for (x, y, v) in [(i, j, *c), (j, i, c.reverse())] {
                match relation[x][y] {
                    Some(old) if old != v => {
                        return Err(Error::InconsistentTable(format!(
                            "`{}` vs `{}` is both {old} and {v}",
                            names[x], names[y]
                        )))
                    }
                    _ => relation[x][y] = Some(v),
                }
            }
        }
        let relation = relation
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(j, c)| {
                        c.ok_or_else(|| {
                            Error::InconsistentTable(format!("no verdict for `{}` vs `{}`", names[i], names[j]))
                        })
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(PreferenceTable {
            names,
            lotteries,
            relation,
        })
    }

    /// The table `u` induces on the given lotteries.
    pub fn from_utility<S: Semiring<Elem = E>>(
        s: &S,
        u: &UtilityAssignment<E>,
        named: Vec<(String, Lottery<E>)>,
    ) -> Result<Self> {
        let (names, lotteries): (Vec<_>, Vec<_>) = named.into_iter().unzip();
        let mut entries = Vec::new();
        for i in 0..names.len() {
            for j in i + 1..names.len() {
                entries.push((
                    names[i].clone(),
                    names[j].clone(),
                    aeu_compare(s, &lotteries[i], &lotteries[j], u)?,
                ));
            }
        }
        Self::new(names, lotteries, &entries)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lotteries(&self) -> &[Lottery<E>] {
        &self.lotteries
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn verdict(&self, i: usize, j: usize) -> Comparison {
        self.relation[i][j]
    }

    /// Every verdict with `i < j`, by name.
    pub fn entries(&self) -> Vec<(String, String, Comparison)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                out.push((self.names[i].clone(), self.names[j].clone(), self.relation[i][j]));
            }
        }
        out
    }

    /// The table without the named lotteries.
    pub fn without(&self, drop: &[&str]) -> Self {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&i| !drop.contains(&self.names[i].as_str()))
            .collect();
        PreferenceTable {
            names: keep.iter().map(|&i| self.names[i].clone()).collect(),
            lotteries: keep.iter().map(|&i| self.lotteries[i].clone()).collect(),
            relation: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.relation[i][j]).collect())
                .collect(),
        }
    }

    /// Fraction of verdicts `u` reproduces, as (agreeing, total).
    pub fn agreement<S: Semiring<Elem = E>>(&self, s: &S, u: &UtilityAssignment<E>) -> Result<(usize, usize)> {
        let mut agree = 0;
        let mut total = 0;
        for i in 0..self.len() {
            for j in 0..self.len() {
                total += 1;
                if aeu_compare(s, &self.lotteries[i], &self.lotteries[j], u)? == self.relation[i][j] {
                    agree += 1;
                }
            }
        }
        Ok((agree, total))
    }
}

/// Search cap on combinations of candidate witnesses.
const MAX_COMBINATIONS: usize = 100_000;

/// A utility reproducing every verdict of the table, built from binary
/// lotteries the table judges equivalent to each sure consequence. `None`
/// when some consequence has no such witness or no combination of
/// witnesses reproduces the table.
pub fn synthesize_utility<S: Semiring>(
    s: &S,
    table: &PreferenceTable<S::Elem>,
    space: &ConsequenceSpace,
) -> Result<Option<UtilityAssignment<S::Elem>>> {
    let n = space.len();
    if let Some(l) = table.lotteries.iter().find(|l| l.arity() != n) {
        return Err(Error::ArityMismatch {
            expected: n,
            found: l.arity(),
        });
    }
    let (best, worst) = (space.best(), space.worst());
    let on_scale = |l: &Lottery<S::Elem>| -> Option<BinaryValue<S::Elem>> {
        let Lottery::Simple(d) = l else { return None };
        let off = d
            .iter()
            .enumerate()
            .any(|(x, p)| x != best && x != worst && !s.is_zero(p));
        if off {
            return None;
        }
        BinaryValue::new(s, d[best].clone(), d[worst].clone()).ok()
    };

    let mut candidates: Vec<Vec<BinaryValue<S::Elem>>> = Vec::with_capacity(n);
    for x in 0..n {
        let sure = Lottery::degenerate(s, n, x)?;
        let Some(d) = table.lotteries.iter().position(|l| *l == sure) else {
            return Ok(None);
        };
        let mut found: Vec<BinaryValue<S::Elem>> = Vec::new();
        if x == best {
            found.push(BinaryValue::best(s));
        } else if x == worst {
            found.push(BinaryValue::worst(s));
        } else {
            for (j, l) in table.lotteries.iter().enumerate() {
                if table.relation[d][j] != Comparison::Equivalent {
                    continue;
                }
                if let Some(v) = on_scale(l) {
                    if !found.contains(&v) {
                        found.push(v);
                    }
                }
            }
        }
        if found.is_empty() {
            return Ok(None);
        }
        candidates.push(found);
    }

    let mut pick = alloc::vec![0usize; n];
    for _ in 0..MAX_COMBINATIONS {
        let utilities = pick.iter().zip(&candidates).map(|(&i, c)| c[i].clone()).collect();
        let u = UtilityAssignment::new(s, space.clone(), utilities)?;
        let (agree, total) = table.agreement(s, &u)?;
        if agree == total {
            return Ok(Some(u));
        }
        let mut advanced = false;
        for (slot, c) in pick.iter_mut().zip(&candidates).rev() {
            *slot += 1;
            if *slot < c.len() {
                advanced = true;
                break;
            }
            *slot = 0;
        }
        if !advanced {
            break;
        }
    }
    Ok(None)
}
