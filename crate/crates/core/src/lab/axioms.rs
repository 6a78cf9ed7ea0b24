//! The two axiom systems, checked against a relation over a lottery universe.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;

use rand::seq::SliceRandom;
use rand::Rng;

use super::solvability::continuity_witness;
use super::{render_lottery, render_value, scale_pool, CheckReport, EnumerationBudget, Mode, Tally, Universe};
use crate::aeu::{aeu_eval, elicit_binary_equivalent, UtilityAssignment};
use crate::binary::{compare2, BinaryValue};
use crate::lottery::{Branch, ConsequenceSpace, Lottery};
use crate::semiring::{Carrier, Semiring};
use crate::{Comparison, Result};

/// A preference relation over lotteries, decided on a per-lottery summary so
/// that each lottery is assessed once.
pub trait Preference<S: Semiring> {
    type Key: Clone + PartialEq + Debug;

    fn key(&self, l: &Lottery<S::Elem>) -> Result<Self::Key>;

    /// How `a` stands relative to `b`.
    fn relate(&self, a: &Self::Key, b: &Self::Key) -> Comparison;

    fn render_key(&self, k: &Self::Key) -> String;

    fn compare(&self, a: &Lottery<S::Elem>, b: &Lottery<S::Elem>) -> Result<Comparison> {
        Ok(self.relate(&self.key(a)?, &self.key(b)?))
    }

    /// The utility behind the relation, if any. Continuity witnesses are then
    /// constructed from it instead of searched for.
    fn utility(&self) -> Option<&UtilityAssignment<S::Elem>> {
        None
    }
}

/// The relation represented by AEU under `u`.
pub struct AeuPreference<'a, S: Semiring> {
    s: &'a S,
    u: &'a UtilityAssignment<S::Elem>,
}

impl<'a, S: Semiring> AeuPreference<'a, S> {
    pub fn new(s: &'a S, u: &'a UtilityAssignment<S::Elem>) -> Self {
        AeuPreference { s, u }
    }
}

impl<S: Semiring> Preference<S> for AeuPreference<'_, S> {
    type Key = BinaryValue<S::Elem>;

    fn key(&self, l: &Lottery<S::Elem>) -> Result<Self::Key> {
        aeu_eval(self.s, l, self.u)
    }

    fn relate(&self, a: &Self::Key, b: &Self::Key) -> Comparison {
        compare2(self.s, a, b)
    }

    fn render_key(&self, k: &Self::Key) -> String {
        render_value(self.s, k)
    }

    fn utility(&self) -> Option<&UtilityAssignment<S::Elem>> {
        Some(self.u)
    }
}

/// Negative control: compares AEU values on their first component only, so
/// lotteries differing only in the plausibility of the worst outcome tie.
pub struct FirstComponentOnly<'a, S: Semiring> {
    s: &'a S,
    u: &'a UtilityAssignment<S::Elem>,
}

impl<'a, S: Semiring> FirstComponentOnly<'a, S> {
    pub fn new(s: &'a S, u: &'a UtilityAssignment<S::Elem>) -> Self {
        FirstComponentOnly { s, u }
    }
}

impl<S: Semiring> Preference<S> for FirstComponentOnly<'_, S> {
    type Key = BinaryValue<S::Elem>;

    fn key(&self, l: &Lottery<S::Elem>) -> Result<Self::Key> {
        aeu_eval(self.s, l, self.u)
    }

    fn relate(&self, a: &Self::Key, b: &Self::Key) -> Comparison {
        self.s.compare(a.first(), b.first())
    }

    fn render_key(&self, k: &Self::Key) -> String {
        render_value(self.s, k)
    }

    fn utility(&self) -> Option<&UtilityAssignment<S::Elem>> {
        Some(self.u)
    }
}

/// Shared state of one checker run: the universe with its keys, and a pool
/// of binary-scale values.
pub(crate) struct Lab<'a, S: Carrier, P: Preference<S>> {
    s: &'a S,
    pref: &'a P,
    budget: &'a EnumerationBudget,
    universe: &'a Universe<S::Elem>,
    /// `None` where the relation could not assess the lottery.
    keys: Vec<Option<P::Key>>,
    pool: Vec<BinaryValue<S::Elem>>,
}

impl<'a, S: Carrier, P: Preference<S>> Lab<'a, S, P> {
    pub(crate) fn new(
        s: &'a S,
        pref: &'a P,
        budget: &'a EnumerationBudget,
        universe: &'a Universe<S::Elem>,
        report: &mut CheckReport,
    ) -> Result<Self> {
        let mut eval = Tally::new("evaluation");
        let keys = universe
            .lotteries
            .iter()
            .map(|l| match pref.key(l) {
                Ok(k) => {
                    eval.record(true, String::new);
                    Some(k)
                }
                Err(e) => {
                    eval.fail(format!("{}: {e}", render_lottery(s, l)));
                    None
                }
            })
            .collect();
        report.push(eval);
        report.universe = universe.lotteries.len();
        Ok(Lab {
            s,
            pref,
            budget,
            universe,
            keys,
            pool: scale_pool(s, budget, 20, 48)?,
        })
    }

    fn space(&self) -> &ConsequenceSpace {
        &self.universe.space
    }

    fn rl(&self, l: &Lottery<S::Elem>) -> String {
        render_lottery(self.s, l)
    }

    fn binary(&self, alpha: &BinaryValue<S::Elem>) -> Lottery<S::Elem> {
        Lottery::binary(self.s, self.space(), alpha)
    }

    fn mix(&self, w: &BinaryValue<S::Elem>, a: &Lottery<S::Elem>, b: &Lottery<S::Elem>) -> Lottery<S::Elem> {
        Lottery::Compound(alloc::vec![
            Branch {
                weight: w.first().clone(),
                lottery: a.clone(),
            },
            Branch {
                weight: w.second().clone(),
                lottery: b.clone(),
            },
        ])
    }

    /// Lotteries with a key, as (index, key).
    fn assessed(&self) -> impl Iterator<Item = (usize, &P::Key)> {
        self.keys
            .iter()
            .enumerate()
            .filter_map(|(i, k)| k.as_ref().map(|k| (i, k)))
    }

    fn simple_indices(&self) -> Vec<usize> {
        let n = self.universe.simple.len();
        (0..n).filter(|&i| self.keys[i].is_some()).collect()
    }

    pub(crate) fn reduction(&self, report: &mut CheckReport) {
        let mut t = Tally::new("R");
        for (i, k) in self.assessed() {
            let l = &self.universe.lotteries[i];
            if l.is_simple() {
                continue;
            }
            let reduced = l.reduce(self.s);
            match self.pref.key(&reduced) {
                Ok(kr) => {
                    let c = self.pref.relate(k, &kr);
                    t.record(c == Comparison::Equivalent, || {
                        format!("{} is {c} to its reduction {}", self.rl(l), self.rl(&reduced))
                    });
                }
                Err(e) => t.fail(format!("reduction {} of {}: {e}", self.rl(&reduced), self.rl(l))),
            }
        }
        report.push(t);
    }

    pub(crate) fn preorder(&self, axiom: &str, report: &mut CheckReport) {
        let mut refl = Tally::new(&format!("{axiom}.reflexive"));
        for (i, k) in self.assessed() {
            let c = self.pref.relate(k, k);
            refl.record(c == Comparison::Equivalent, || {
                format!("{} is {c} to itself", self.rl(&self.universe.lotteries[i]))
            });
        }
        report.push(refl);

        // The relation is a function of the keys, so transitivity over the
        // distinct keys is transitivity over the universe.
        let mut distinct: Vec<(usize, &P::Key)> = Vec::new();
        for (i, k) in self.assessed() {
            if !distinct.iter().any(|(_, d)| *d == k) {
                distinct.push((i, k));
            }
        }
        let mut trans = Tally::new(&format!("{axiom}.transitive"));
        let mut check = |a: (usize, &P::Key), b: (usize, &P::Key), c: (usize, &P::Key)| {
            if self.pref.relate(a.1, b.1).is_ge() && self.pref.relate(b.1, c.1).is_ge() {
                trans.record(self.pref.relate(a.1, c.1).is_ge(), || {
                    let l = &self.universe.lotteries;
                    format!(
                        "{} >= {} >= {} but not the first >= the last",
                        self.rl(&l[a.0]),
                        self.rl(&l[b.0]),
                        self.rl(&l[c.0])
                    )
                });
            }
        };
        let d = distinct.len();
        if d <= self.budget.transitivity_threshold {
            for &a in &distinct {
                for &b in &distinct {
                    for &c in &distinct {
                        check(a, b, c);
                    }
                }
            }
            trans.note(format!("all triples over {d} distinct assessments"));
        } else {
            let mut rng = self.budget.rng(21);
            let draws = self.budget.samples.max(1000) * 10;
            for _ in 0..draws {
                let pick = |rng: &mut rand_chacha::ChaCha8Rng| distinct[rng.gen_range(0..d)];
                let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                check(a, b, c);
            }
            trans.note(format!("{draws} sampled triples over {d} distinct assessments"));
        }
        report.push(trans);
    }

    pub(crate) fn binary_order(&self, report: &mut CheckReport) {
        let mut t = Tally::new("C2");
        for a in &self.pool {
            for b in &self.pool {
                let by_scale = compare2(self.s, a, b).is_ge();
                match self.pref.compare(&self.binary(a), &self.binary(b)) {
                    Ok(c) => t.record(by_scale == c.is_ge(), || {
                        format!(
                            "alpha={}, beta={}: alpha >=2 beta is {by_scale} but the binary lotteries are judged {c}",
                            render_value(self.s, a),
                            render_value(self.s, b)
                        )
                    }),
                    Err(e) => t.fail(format!("{}: {e}", render_value(self.s, a))),
                }
            }
        }
        report.push(t);
    }

    /// Equivalence classes of the universe, each as a list of indices.
    fn classes(&self) -> Vec<(P::Key, Vec<usize>)> {
        let mut classes: Vec<(P::Key, Vec<usize>)> = Vec::new();
        for (i, k) in self.assessed() {
            match classes
                .iter_mut()
                .find(|(rep, _)| self.pref.relate(rep, k) == Comparison::Equivalent)
            {
                Some((_, members)) => members.push(i),
                None => classes.push((k.clone(), alloc::vec![i])),
            }
        }
        classes
    }

    /// Lotteries judged equivalent to `l`: members of its class, its
    /// reduction, and the binary lottery carrying its AEU value.
    fn equivalents(
        &self,
        l: &Lottery<S::Elem>,
        classes: &[(P::Key, Vec<usize>)],
        turn: usize,
    ) -> Result<Vec<Lottery<S::Elem>>> {
        let k = self.pref.key(l)?;
        let mut out: Vec<Lottery<S::Elem>> = Vec::new();
        if let Some((_, members)) = classes
            .iter()
            .find(|(rep, _)| self.pref.relate(rep, &k) == Comparison::Equivalent)
        {
            // two members, rotating through the class
            for step in [turn, turn.wrapping_mul(7).wrapping_add(3)] {
                out.push(self.universe.lotteries[members[step % members.len()]].clone());
            }
        }
        out.push(l.reduce(self.s));
        if let Some(u) = self.pref.utility() {
            out.push(self.binary(&aeu_eval(self.s, l, u)?));
        }
        out.retain(|c| c != l);
        // only candidates the relation itself accepts
        let mut accepted = Vec::new();
        for c in out {
            if self.pref.relate(&k, &self.pref.key(&c)?) == Comparison::Equivalent {
                accepted.push(c);
            }
        }
        Ok(accepted)
    }

    pub(crate) fn substitutability(&self, report: &mut CheckReport) {
        let classes = self.classes();
        let mut single = Tally::new("C3.single");
        let mut all = Tally::new("C3.all");
        let mut turn = 0usize;
        for (i, k) in self.assessed() {
            let Lottery::Compound(branches) = &self.universe.lotteries[i] else {
                continue;
            };
            let l = &self.universe.lotteries[i];
            let mut replaced = branches.clone();
            for (b, branch) in branches.iter().enumerate() {
                turn = turn.wrapping_add(1);
                let candidates = match self.equivalents(&branch.lottery, &classes, turn) {
                    Ok(c) => c,
                    Err(e) => {
                        single.fail(format!("{}: {e}", self.rl(&branch.lottery)));
                        continue;
                    }
                };
                if candidates.is_empty() {
                    continue;
                }
                let pick = &candidates[turn % candidates.len()];
                replaced[b].lottery = pick.clone();
                let substituted = match l.substitute(&[b], pick.clone()) {
                    Ok(x) => x,
                    Err(e) => {
                        single.fail(format!("{}: {e}", self.rl(l)));
                        continue;
                    }
                };
                self.expect_equivalent(&mut single, l, k, &substituted);
            }
            if replaced != *branches {
                self.expect_equivalent(&mut all, l, k, &Lottery::Compound(replaced));
            }
        }
        report.push(single);
        report.push(all);
    }

    fn expect_equivalent(&self, t: &mut Tally, l: &Lottery<S::Elem>, k: &P::Key, other: &Lottery<S::Elem>) {
        match self.pref.key(other) {
            Ok(ko) => {
                let c = self.pref.relate(k, &ko);
                t.record(c == Comparison::Equivalent, || {
                    format!(
                        "{} ({}) is {c} to {} ({})",
                        self.rl(l),
                        self.pref.render_key(k),
                        self.rl(other),
                        self.pref.render_key(&ko)
                    )
                });
            }
            Err(e) => t.fail(format!("{}: {e}", self.rl(other))),
        }
    }

    pub(crate) fn consequence_continuity(&self, report: &mut CheckReport) {
        let mut t = Tally::new("C4");
        let space = self.space();
        for x in 0..space.len() {
            let sure = match Lottery::degenerate(self.s, space.len(), x) {
                Ok(l) => l,
                Err(e) => {
                    t.fail(format!("{}: {e}", space.name(x)));
                    continue;
                }
            };
            let mut candidates = Vec::new();
            if let Some(u) = self.pref.utility() {
                match elicit_binary_equivalent(self.s, u, x) {
                    Ok(alpha) => candidates.push(alpha),
                    Err(e) => {
                        t.fail(format!("{}: {e}", space.name(x)));
                        continue;
                    }
                }
            }
            candidates.extend(self.pool.iter().cloned());
            let found = candidates
                .iter()
                .find(|a| matches!(self.pref.compare(&sure, &self.binary(a)), Ok(Comparison::Equivalent)));
            t.record(found.is_some(), || {
                format!("no binary lottery is equivalent to `{}`", space.name(x))
            });
        }
        report.push(t);
    }

    pub(crate) fn non_triviality(&self, report: &mut CheckReport) {
        let mut t = Tally::new("D2");
        for (i, a) in self.pool.iter().enumerate() {
            for b in &self.pool[i + 1..] {
                match self.pref.compare(&self.binary(a), &self.binary(b)) {
                    Ok(c) => t.record(c != Comparison::Equivalent, || {
                        format!(
                            "binary lotteries {} and {} judged EQUIVALENT",
                            render_value(self.s, a),
                            render_value(self.s, b)
                        )
                    }),
                    Err(e) => t.fail(format!("{}: {e}", render_value(self.s, a))),
                }
            }
        }
        report.push(t);
    }

    /// Instances `(pi1, pi2, pi)` for D3 and candidate chains for D4: the
    /// cube of simple lotteries in exhaustive mode, plus seeded draws from the
    /// whole universe.
    /// The flag marks seeded draws, which callers may reorder.
    fn triples(&self, stream: u64) -> Vec<([usize; 3], bool)> {
        let mut out = Vec::new();
        if self.budget.mode == Mode::Exhaustive {
            let simple = self.simple_indices();
            for &a in &simple {
                for &b in &simple {
                    for &c in &simple {
                        out.push(([a, b, c], false));
                    }
                }
            }
        }
        let assessed: Vec<usize> = self.assessed().map(|(i, _)| i).collect();
        if !assessed.is_empty() {
            let mut rng = self.budget.rng(stream);
            for _ in 0..self.budget.samples {
                out.push(([0, 1, 2].map(|_| *assessed.choose(&mut rng).expect("nonempty")), true));
            }
        }
        out
    }

    fn key_of(&self, i: usize) -> &P::Key {
        self.keys[i].as_ref().expect("assessed index")
    }

    pub(crate) fn weak_independence(&self, report: &mut CheckReport) {
        let mut t = Tally::new("D3");
        let l = &self.universe.lotteries;
        let exhaustive = self.budget.mode == Mode::Exhaustive;
        let mut rng = self.budget.rng(22);
        for ([a, b, c], drawn) in self.triples(23) {
            let (a, b) = match self.pref.relate(self.key_of(a), self.key_of(b)) {
                x if x.is_ge() => (a, b),
                x if drawn && x.is_le() => (b, a),
                _ => continue,
            };
            let alphas: Vec<&BinaryValue<S::Elem>> =
                if exhaustive && l[a].is_simple() && l[b].is_simple() && l[c].is_simple() {
                    self.pool.iter().collect()
                } else {
                    alloc::vec![self.pool.choose(&mut rng).expect("pool has the extremes")]
                };
            for alpha in alphas {
                let left = self.mix(alpha, &l[a], &l[c]);
                let right = self.mix(alpha, &l[b], &l[c]);
                match self.pref.compare(&left, &right) {
                    Ok(cmp) => t.record(cmp.is_ge(), || {
                        format!(
                            "{} >= {} but mixing with {} at {} gives {cmp}",
                            self.rl(&l[a]),
                            self.rl(&l[b]),
                            self.rl(&l[c]),
                            render_value(self.s, alpha)
                        )
                    }),
                    Err(e) => t.fail(format!("{}: {e}", self.rl(&left))),
                }
            }
        }
        report.push(t);
    }

    pub(crate) fn continuity(&self, report: &mut CheckReport) {
        let mut t = Tally::new("D4");
        let l = &self.universe.lotteries;
        for (chain, drawn) in self.triples(24) {
            let strict = |x: usize, y: usize| self.pref.relate(self.key_of(x), self.key_of(y)) == Comparison::Greater;
            let [x, y, z] = chain;
            // a draw counts in whichever order makes it a strict chain
            let orders = if drawn {
                alloc::vec![[x, y, z], [x, z, y], [y, x, z], [y, z, x], [z, x, y], [z, y, x]]
            } else {
                alloc::vec![[x, y, z]]
            };
            let Some(&[a, b, c]) = orders.iter().find(|[a, b, c]| strict(*a, *b) && strict(*b, *c)) else {
                continue;
            };
            match self.continuity_instance(&l[a], &l[b], &l[c]) {
                Ok(None) => t.record(true, String::new),
                Ok(Some(why)) => t.fail(why),
                Err(e) => t.fail(format!(
                    "{} > {} > {}: {e}",
                    self.rl(&l[a]),
                    self.rl(&l[b]),
                    self.rl(&l[c])
                )),
            }
        }
        report.push(t);
    }

    /// `None` when a verified witness exists, otherwise the reason.
    fn continuity_instance(
        &self,
        hi: &Lottery<S::Elem>,
        mid: &Lottery<S::Elem>,
        lo: &Lottery<S::Elem>,
    ) -> Result<Option<String>> {
        let k_mid = self.pref.key(mid)?;
        if let Some(u) = self.pref.utility() {
            let (va, vb, vg) = (
                aeu_eval(self.s, hi, u)?,
                aeu_eval(self.s, mid, u)?,
                aeu_eval(self.s, lo, u)?,
            );
            let alpha = continuity_witness(self.s, &va, &vb, &vg)?;
            let mixture = self.mix(&alpha, hi, lo);
            let value = aeu_eval(self.s, &mixture, u)?;
            let c = self.pref.relate(&self.pref.key(&mixture)?, &k_mid);
            if c != Comparison::Equivalent || value != vb {
                return Ok(Some(format!(
                    "witness {} mixes {} and {} into {} ({c}), not {}",
                    render_value(self.s, &alpha),
                    self.rl(hi),
                    self.rl(lo),
                    render_value(self.s, &value),
                    render_value(self.s, &vb)
                )));
            }
            return Ok(None);
        }
        for alpha in &self.pool {
            let c = self.pref.relate(&self.pref.key(&self.mix(alpha, hi, lo))?, &k_mid);
            if c == Comparison::Equivalent {
                return Ok(None);
            }
        }
        Ok(Some(format!(
            "no mixture of {} and {} is equivalent to {}",
            self.rl(hi),
            self.rl(lo),
            self.rl(mid)
        )))
    }
}

/// R and C1-C4 for the relation represented by AEU under `u`.
pub fn check_c_axioms<S: Carrier>(
    s: &S,
    u: &UtilityAssignment<S::Elem>,
    budget: &EnumerationBudget,
) -> Result<CheckReport> {
    check_c_axioms_with(s, &AeuPreference::new(s, u), u.space(), budget)
}

pub fn check_c_axioms_with<S: Carrier, P: Preference<S>>(
    s: &S,
    pref: &P,
    space: &ConsequenceSpace,
    budget: &EnumerationBudget,
) -> Result<CheckReport> {
    let universe = Universe::build(s, space, budget)?;
    let mut report = CheckReport::new("c-axioms", s.name(), budget.mode);
    let lab = Lab::new(s, pref, budget, &universe, &mut report)?;
    lab.reduction(&mut report);
    lab.preorder("C1", &mut report);
    lab.binary_order(&mut report);
    lab.substitutability(&mut report);
    lab.consequence_continuity(&mut report);
    Ok(report)
}

/// D1-D4 for the relation represented by AEU under `u`.
pub fn check_d_axioms<S: Carrier>(
    s: &S,
    u: &UtilityAssignment<S::Elem>,
    budget: &EnumerationBudget,
) -> Result<CheckReport> {
    check_d_axioms_with(s, &AeuPreference::new(s, u), u.space(), budget)
}

pub fn check_d_axioms_with<S: Carrier, P: Preference<S>>(
    s: &S,
    pref: &P,
    space: &ConsequenceSpace,
    budget: &EnumerationBudget,
) -> Result<CheckReport> {
    let universe = Universe::build(s, space, budget)?;
    let mut report = CheckReport::new("d-axioms", s.name(), budget.mode);
    let lab = Lab::new(s, pref, budget, &universe, &mut report)?;
    lab.preorder("D1", &mut report);
    lab.non_triviality(&mut report);
    lab.weak_independence(&mut report);
    lab.continuity(&mut report);
    Ok(report)
}
