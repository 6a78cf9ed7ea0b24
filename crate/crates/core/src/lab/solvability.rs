//! Solvability conditions and the witnesses built from them in the proofs of
//! the lemmas and of continuity.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::axioms::{AeuPreference, Lab};
use super::universe::{advance, random_utility};
use super::{render_value, scale_pool, CheckReport, EnumerationBudget, Mode, Tally, Universe};
use crate::binary::{self, compare2, pair_add, scalar_mul, BinaryValue};
use crate::lottery::ConsequenceSpace;
use crate::semiring::{Carrier, Semiring};
use crate::{Comparison, Error, Result};

/// The difference `l` with `a1 = b1 + l` and `b2 = a2 + l`, for `a >=2 b`.
fn difference<S: Semiring>(s: &S, a: &BinaryValue<S::Elem>, b: &BinaryValue<S::Elem>) -> Option<S::Elem> {
    let l = s.solve_add_system(&[
        (a.first().clone(), b.first().clone()),
        (b.second().clone(), a.second().clone()),
    ])?;
    (s.add(b.first(), &l) == *a.first() && s.add(a.second(), &l) == *b.second()).then_some(l)
}

/// `alpha` with `alpha1 * a + alpha2 * g = b`, for `a >2 b >2 g`.
///
/// `nu` solves the gap between `a` and `b`, `xi` the gap between `b` and `g`,
/// and `alpha = scale(xi, nu)`: `alpha1 * (nu + xi) = xi`. The first
/// coefficient pairs with `xi`, not `nu`.
pub fn continuity_witness<S: Semiring>(
    s: &S,
    a: &BinaryValue<S::Elem>,
    b: &BinaryValue<S::Elem>,
    g: &BinaryValue<S::Elem>,
) -> Result<BinaryValue<S::Elem>> {
    if compare2(s, a, b) != Comparison::Greater || compare2(s, b, g) != Comparison::Greater {
        return Err(Error::Precondition(format!(
            "continuity needs {} > {} > {}",
            render_value(s, a),
            render_value(s, b),
            render_value(s, g)
        )));
    }
    let gap = |hi, lo| {
        difference(s, hi, lo).ok_or_else(|| {
            Error::Invariant(format!(
                "no difference between {} and {}",
                render_value(s, hi),
                render_value(s, lo)
            ))
        })
    };
    let nu = gap(a, b)?;
    let xi = gap(b, g)?;
    let alpha = binary::solve_scale(s, &xi, &nu).map_err(|e| Error::Invariant(format!("scaling failed: {e}")))?;
    let mixed = pair_add(
        s,
        &scalar_mul(s, alpha.first(), &a.to_pair()),
        &scalar_mul(s, alpha.second(), &g.to_pair()),
    );
    if mixed != b.to_pair() {
        return Err(Error::Invariant(format!(
            "witness {} mixes {} and {} into <{}, {}>, not {}",
            render_value(s, &alpha),
            render_value(s, a),
            render_value(s, g),
            s.render(&mixed.first),
            s.render(&mixed.second),
            render_value(s, b)
        )));
    }
    Ok(alpha)
}

/// Solution of the system behind the second lemma:
///
/// ```text
/// a1 = lambda + mu * lambda'      a2 = mu * mu'
/// b1 = mu * lambda'               b2 = lambda + mu * mu'
/// ```
///
/// so that `[lambda/best, mu/[lambda'/best, mu'/worst]]` reduces to `a` and
/// the same lottery with best and worst exchanged at the root reduces to `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma2Witness<E> {
    pub lambda: E,
    pub mu: E,
    pub lambda_prime: E,
    pub mu_prime: E,
}

pub fn lemma2_witness<S: Semiring>(
    s: &S,
    alpha: &BinaryValue<S::Elem>,
    beta: &BinaryValue<S::Elem>,
) -> Result<Lemma2Witness<S::Elem>> {
    if !compare2(s, alpha, beta).is_ge() {
        return Err(Error::Precondition(format!(
            "the second lemma needs {} >=2 {}",
            render_value(s, alpha),
            render_value(s, beta)
        )));
    }
    let mu = s.add(alpha.second(), beta.first());
    let lambda = difference(s, alpha, beta).ok_or_else(|| {
        Error::Invariant(format!(
            "no difference between {} and {}",
            render_value(s, alpha),
            render_value(s, beta)
        ))
    })?;
    let inner = binary::solve_scale(s, beta.first(), alpha.second())
        .map_err(|e| Error::Invariant(format!("scaling failed: {e}")))?;
    let (lambda_prime, mu_prime) = inner.into_parts();
    let w = Lemma2Witness {
        lambda,
        mu,
        lambda_prime,
        mu_prime,
    };
    if let Some(broken) = lemma2_violation(s, alpha, beta, &w) {
        return Err(Error::Invariant(broken));
    }
    Ok(w)
}

/// The first equation the witness fails, if any.
fn lemma2_violation<S: Semiring>(
    s: &S,
    a: &BinaryValue<S::Elem>,
    b: &BinaryValue<S::Elem>,
    w: &Lemma2Witness<S::Elem>,
) -> Option<String> {
    let r = |e: &S::Elem| s.render(e);
    let ml = s.mul(&w.mu, &w.lambda_prime);
    let mm = s.mul(&w.mu, &w.mu_prime);
    let checks = [
        ("(1) a1 = lambda + mu * lambda'", s.add(&w.lambda, &ml), a.first()),
        ("(2) b1 = mu * lambda'", ml.clone(), b.first()),
        ("(3) a2 = mu * mu'", mm.clone(), a.second()),
        ("(4) b2 = lambda + mu * mu'", s.add(&w.lambda, &mm), b.second()),
    ];
    for (name, got, want) in checks {
        if got != *want {
            return Some(format!(
                "{name} fails for a={}, b={}: {} != {}",
                render_value(s, a),
                render_value(s, b),
                r(&got),
                r(want)
            ));
        }
    }
    if !s.is_one(&s.add(&w.lambda, &w.mu)) || !s.is_one(&s.add(&w.lambda_prime, &w.mu_prime)) {
        return Some(format!(
            "coefficients <{}, {}> and <{}, {}> are not both on the binary scale",
            r(&w.lambda),
            r(&w.mu),
            r(&w.lambda_prime),
            r(&w.mu_prime)
        ));
    }
    None
}

type Pairs<E> = Vec<(BinaryValue<E>, BinaryValue<E>)>;

/// Pairs `(a, b)` with `a >=2 b`: all of them over a finite scale, otherwise
/// seeded draws put in order (incomparable draws are skipped).
fn ordered_pairs<S: Carrier>(s: &S, budget: &EnumerationBudget, stream: u64) -> Result<Pairs<S::Elem>> {
    let mut out = Vec::new();
    match budget.mode {
        Mode::Exhaustive => {
            let pool = scale_pool(s, budget, stream, 0)?;
            for a in &pool {
                for b in &pool {
                    if compare2(s, a, b).is_ge() {
                        out.push((a.clone(), b.clone()));
                    }
                }
            }
        }
        Mode::Sampled => {
            let mut rng = budget.rng(stream);
            let mut draws = 0;
            while out.len() < budget.samples && draws < 20 * budget.samples {
                draws += 1;
                let a = binary::sample(s, &mut rng, &budget.carrier);
                let b = binary::sample(s, &mut rng, &budget.carrier);
                match compare2(s, &a, &b) {
                    c if c.is_ge() => out.push((a, b)),
                    c if c.is_le() => out.push((b, a)),
                    _ => {}
                }
            }
        }
    }
    Ok(out)
}

/// Tuples of `k` carrier elements: all of them when finite, else samples.
fn element_tuples<S: Carrier>(s: &S, budget: &EnumerationBudget, k: usize, stream: u64) -> Result<Vec<Vec<S::Elem>>> {
    match budget.mode {
        Mode::Exhaustive => {
            let elems = s.elements(&budget.carrier).ok_or_else(|| {
                Error::Budget(format!("exhaustive mode needs a finite carrier, `{}` is not", s.name()))
            })?;
            let total = (elems.len() as u128).saturating_pow(k as u32);
            if total > budget.max_universe as u128 {
                return Err(Error::Budget(format!("{total} {k}-tuples exceed the enumeration cap")));
            }
            let mut out = Vec::new();
            let mut idx = alloc::vec![0usize; k];
            loop {
                out.push(idx.iter().map(|&i| elems[i].clone()).collect());
                if !advance(&mut idx, elems.len()) {
                    return Ok(out);
                }
            }
        }
        Mode::Sampled => {
            let mut rng = budget.rng(stream);
            Ok((0..budget.samples)
                .map(|_| (0..k).map(|_| s.sample(&mut rng, &budget.carrier)).collect())
                .collect())
        }
    }
}

/// E1 on ordered pairs of the binary scale, E2 on pairs of elements.
pub fn check_solvability<S: Carrier>(s: &S, budget: &EnumerationBudget) -> Result<CheckReport> {
    budget.validate()?;
    let mut report = CheckReport::new("solvability", s.name(), budget.mode);
    let pairs = ordered_pairs(s, budget, 30)?;
    report.universe = pairs.len();
    let mut e1 = Tally::new("E1");
    for (a, b) in &pairs {
        e1.record(difference(s, a, b).is_some(), || {
            format!(
                "no lambda with a1 = b1 + lambda and b2 = a2 + lambda for a={}, b={}",
                render_value(s, a),
                render_value(s, b)
            )
        });
    }
    report.push(e1);

    let mut e2 = Tally::new("E2");
    for t in element_tuples(s, budget, 2, 31)? {
        let (l, m) = (&t[0], &t[1]);
        let total = s.add(l, m);
        let ok = match s.solve_scale(l, m) {
            Some((a1, a2)) => {
                s.contains(&a1)
                    && s.contains(&a2)
                    && s.is_one(&s.add(&a1, &a2))
                    && s.mul(&total, &a1) == *l
                    && s.mul(&total, &a2) == *m
            }
            None => false,
        };
        e2.record(ok, || {
            format!(
                "no alpha on the binary scale with ({0} + {1}) * alpha = <{0}, {1}>",
                s.render(l),
                s.render(m)
            )
        });
    }
    report.push(e2);
    Ok(report)
}

/// Every ordered pair of the binary scale yields a verified witness.
pub fn check_lemma2<S: Carrier>(s: &S, budget: &EnumerationBudget) -> Result<CheckReport> {
    budget.validate()?;
    let mut report = CheckReport::new("lemma2", s.name(), budget.mode);
    let pairs = ordered_pairs(s, budget, 32)?;
    report.universe = pairs.len();
    let mut t = Tally::new("lemma2.witness");
    for (a, b) in &pairs {
        match lemma2_witness(s, a, b) {
            Ok(_) => t.record(true, String::new),
            Err(e) => t.fail(format!("a={}, b={}: {e}", render_value(s, a), render_value(s, b))),
        }
    }
    report.push(t);
    Ok(report)
}

/// `alpha` with `sum(alpha) = 1` and `sum(lambdas) * alpha_i = lambda_i`, by
/// the recursion: scale `(sum of the first k, lambda_{k+1})` into `beta`,
/// recurse on the first `k` for `gamma`, then `alpha_i = beta1 * gamma_i` and
/// `alpha_{k+1} = beta2`.
pub fn kary_scale<S: Semiring>(s: &S, lambdas: &[S::Elem]) -> Result<Vec<S::Elem>> {
    let alpha = kary_unchecked(s, lambdas)?;
    let total = s.sum(lambdas);
    let render = |v: &[S::Elem]| v.iter().map(|e| s.render(e)).collect::<Vec<_>>().join(", ");
    if !s.is_one(&s.sum(&alpha)) || alpha.iter().zip(lambdas).any(|(a, l)| s.mul(&total, a) != *l) {
        return Err(Error::Invariant(format!(
            "scaling ({}) gave ({}) which does not re-multiply",
            render(lambdas),
            render(&alpha)
        )));
    }
    Ok(alpha)
}

fn kary_unchecked<S: Semiring>(s: &S, lambdas: &[S::Elem]) -> Result<Vec<S::Elem>> {
    match lambdas {
        [] => Err(Error::Precondition("nothing to scale".into())),
        [_] => Ok(alloc::vec![s.one()]),
        [head @ .., last] => {
            let beta = binary::solve_scale(s, &s.sum(head), last)
                .map_err(|e| Error::Invariant(format!("scaling failed: {e}")))?;
            let mut alpha: Vec<S::Elem> = kary_unchecked(s, head)?
                .iter()
                .map(|g| s.mul(beta.first(), g))
                .collect();
            alpha.push(beta.second().clone());
            Ok(alpha)
        }
    }
}

/// The k-ary scaling for every k up to the branch budget, then C3 on a
/// seeded AEU relation wherever D3, E1 and E2 hold.
pub fn check_lemma1<S: Carrier>(s: &S, budget: &EnumerationBudget) -> Result<CheckReport> {
    budget.validate()?;
    let mut report = CheckReport::new("lemma1", s.name(), budget.mode);
    for k in 1..=budget.max_branches {
        let mut t = Tally::new(&format!("lemma1.scale-{k}"));
        for lambdas in element_tuples(s, budget, k, 40 + k as u64)? {
            match kary_scale(s, &lambdas) {
                Ok(_) => t.record(true, String::new),
                Err(e) => t.fail(format!("{e}")),
            }
        }
        report.push(t);
    }

    let solvable = check_solvability(s, budget)?.passed();
    let space = ConsequenceSpace::numbered(budget.consequences)?;
    let u = random_utility(s, &mut budget.rng(41), &budget.carrier, &space)?;
    let pref = AeuPreference::new(s, &u);
    let universe = Universe::build(s, &space, budget)?;
    let mut scratch = CheckReport::new("lemma1", s.name(), budget.mode);
    let lab = Lab::new(s, &pref, budget, &universe, &mut scratch)?;
    lab.weak_independence(&mut scratch);
    let independent = scratch.verdict("D3").is_some_and(|v| v.passed());
    let mut c3 = CheckReport::new("lemma1", s.name(), budget.mode);
    lab.substitutability(&mut c3);
    let mut t = Tally::new("lemma1.c3");
    if solvable && independent {
        for v in &c3.verdicts {
            match &v.counterexample {
                None => t.record(true, String::new),
                Some(c) => t.fail(format!("{}: {c}", v.law)),
            }
        }
        t.note(format!("C3 checked on {} lotteries", universe.lotteries.len()));
    } else {
        t.note("premises fail (E1, E2 or D3); the implication holds vacuously");
    }
    report.universe = universe.lotteries.len();
    report.push(t);
    Ok(report)
}
