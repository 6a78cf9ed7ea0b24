//! Law checker for the semiring axioms, the expectation-domain conditions on
//! the binary scale, and the order.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use super::Carrier;
use crate::binary::{self, pair_add, scalar_mul, PairValue};
use crate::lab::{CheckReport, EnumerationBudget, Mode, Tally};
use crate::{Error, Result};

fn sample_element<S: Carrier, R: Rng + ?Sized>(s: &S, rng: &mut R, budget: &EnumerationBudget) -> S::Elem {
    match rng.gen_range(0..8) {
        0 => s.zero(),
        1 => s.one(),
        _ => s.sample(rng, &budget.carrier),
    }
}

fn triples<T: Clone>(
    budget: &EnumerationBudget,
    pool: Option<Vec<T>>,
    mut draw: impl FnMut() -> T,
    what: &str,
) -> Result<Vec<(T, T, T)>> {
    match budget.mode {
        Mode::Exhaustive => {
            let pool = pool.ok_or_else(|| Error::Budget(format!("exhaustive mode needs a finite carrier ({what})")))?;
            let n = pool.len();
            if n.saturating_mul(n).saturating_mul(n) > budget.max_universe {
                return Err(Error::Budget(format!(
                    "{n}^3 {what} triples exceed the enumeration cap"
                )));
            }
            let mut out = Vec::with_capacity(n * n * n);
            for a in &pool {
                for b in &pool {
                    for c in &pool {
                        out.push((a.clone(), b.clone(), c.clone()));
                    }
                }
            }
            Ok(out)
        }
        Mode::Sampled => Ok((0..budget.samples).map(|_| (draw(), draw(), draw())).collect()),
    }
}

/// Checks A1-A3 on carrier elements and B1-B3 on the binary scale.
pub fn check_semiring_laws<S: Carrier>(s: &S, budget: &EnumerationBudget) -> Result<CheckReport> {
    budget.validate()?;
    let cfg = &budget.carrier;
    let mut report = CheckReport::new("semiring", s.name(), budget.mode);
    let mut rng = budget.rng(1);
    let elems = triples(
        budget,
        s.elements(cfg),
        || sample_element(s, &mut rng, budget),
        "element",
    )?;
    report.universe = elems.len();

    let r = |e: &S::Elem| s.render(e);
    let zero = s.zero();
    let one = s.one();

    let mut closure = Tally::new("closure");
    let mut a1_comm = Tally::new("A1.commutativity");
    let mut a1_assoc = Tally::new("A1.associativity");
    let mut a1_zero = Tally::new("A1.zero-neutral");
    let mut a2_assoc = Tally::new("A2.associativity");
    let mut a2_one = Tally::new("A2.one-neutral");
    let mut a2_absorb = Tally::new("A2.zero-absorbing");
    let mut a3_left = Tally::new("A3.left-distributivity");
    let mut a3_right = Tally::new("A3.right-distributivity");

    for (a, b, c) in &elems {
        let ab = s.add(a, b);
        let ab_mul = s.mul(a, b);
        closure.record(s.contains(&ab) && s.contains(&ab_mul), || {
            format!("a={}, b={}: a+b or a*b leaves the carrier", r(a), r(b))
        });
        let ba = s.add(b, a);
        a1_comm.record(ab == ba, || {
            format!("a={}, b={}: a+b = {} but b+a = {}", r(a), r(b), r(&ab), r(&ba))
        });
        let lhs = s.add(&ab, c);
        let rhs = s.add(a, &s.add(b, c));
        a1_assoc.record(lhs == rhs, || {
            format!(
                "a={}, b={}, c={}: (a+b)+c = {} but a+(b+c) = {}",
                r(a),
                r(b),
                r(c),
                r(&lhs),
                r(&rhs)
            )
        });
        let lhs = s.mul(&ab_mul, c);
        let rhs = s.mul(a, &s.mul(b, c));
        a2_assoc.record(lhs == rhs, || {
            format!(
                "a={}, b={}, c={}: (a*b)*c = {} but a*(b*c) = {}",
                r(a),
                r(b),
                r(c),
                r(&lhs),
                r(&rhs)
            )
        });
        let lhs = s.mul(a, &s.add(b, c));
        let rhs = s.add(&ab_mul, &s.mul(a, c));
        a3_left.record(lhs == rhs, || {
            format!(
                "a={}, b={}, c={}: a*(b+c) = {} but a*b+a*c = {}",
                r(a),
                r(b),
                r(c),
                r(&lhs),
                r(&rhs)
            )
        });
        let lhs = s.mul(&ab, c);
        let rhs = s.add(&s.mul(a, c), &s.mul(b, c));
        a3_right.record(lhs == rhs, || {
            format!(
                "a={}, b={}, c={}: (a+b)*c = {} but a*c+b*c = {}",
                r(a),
                r(b),
                r(c),
                r(&lhs),
                r(&rhs)
            )
        });
    }
    let singles: Vec<S::Elem> = match budget.mode {
        Mode::Exhaustive => s.elements(cfg).unwrap_or_default(),
        Mode::Sampled => elems.iter().map(|t| t.0.clone()).collect(),
    };
    for a in &singles {
        let (x0, zx) = (s.add(a, &zero), s.add(&zero, a));
        a1_zero.record(x0 == *a && zx == *a, || {
            format!("a={}: a+0 = {}, 0+a = {}", r(a), r(&x0), r(&zx))
        });
        let (x1, ox) = (s.mul(a, &one), s.mul(&one, a));
        a2_one.record(x1 == *a && ox == *a, || {
            format!("a={}: a*1 = {}, 1*a = {}", r(a), r(&x1), r(&ox))
        });
        let (xz, zx) = (s.mul(a, &zero), s.mul(&zero, a));
        a2_absorb.record(xz == zero && zx == zero, || {
            format!("a={}: a*0 = {}, 0*a = {}, expected {}", r(a), r(&xz), r(&zx), r(&zero))
        });
    }
    for t in [
        closure, a1_comm, a1_assoc, a1_zero, a2_assoc, a2_one, a2_absorb, a3_left, a3_right,
    ] {
        report.push(t);
    }

    let mut rng = budget.rng(2);
    let pairs = triples(
        budget,
        binary::elements(s, cfg).map(|v| v.iter().map(|b| b.to_pair()).collect()),
        || binary::sample(s, &mut rng, cfg).to_pair(),
        "binary-scale",
    )?;
    let rp = |p: &PairValue<S::Elem>| format!("<{}, {}>", r(&p.first), r(&p.second));
    let mut b1 = Tally::new("B1.associativity");
    let mut b2 = Tally::new("B2.commutativity");
    let mut b3 = Tally::new("B3.one-neutral");
    for (x, y, z) in &pairs {
        let lhs = pair_add(s, &pair_add(s, x, y), z);
        let rhs = pair_add(s, x, &pair_add(s, y, z));
        b1.record(lhs == rhs, || {
            format!(
                "x={}, y={}, z={}: (x+y)+z = {} but x+(y+z) = {}",
                rp(x),
                rp(y),
                rp(z),
                rp(&lhs),
                rp(&rhs)
            )
        });
        let xy = pair_add(s, x, y);
        let yx = pair_add(s, y, x);
        b2.record(xy == yx, || {
            format!("x={}, y={}: x+y = {} but y+x = {}", rp(x), rp(y), rp(&xy), rp(&yx))
        });
        let scaled = scalar_mul(s, &one, x);
        b3.record(scaled == *x, || format!("x={}: 1*x = {}", rp(x), rp(&scaled)));
    }
    report.push(b1);
    report.push(b2);
    report.push(b3);
    Ok(report)
}

/// Reflexivity, antisymmetry, transitivity and converse-consistency of the
/// order, soundness of `solve_add`, and compatibility with `+`
/// (`a >= b` implies `a = b + d` for some `d`).
pub fn check_order_laws<S: Carrier>(s: &S, budget: &EnumerationBudget) -> Result<CheckReport> {
    budget.validate()?;
    let cfg = &budget.carrier;
    let mut report = CheckReport::new("order", s.name(), budget.mode);
    let mut rng = budget.rng(3);
    let elems = triples(
        budget,
        s.elements(cfg),
        || sample_element(s, &mut rng, budget),
        "element",
    )?;
    report.universe = elems.len();
    let r = |e: &S::Elem| s.render(e);

    let mut refl = Tally::new("order.reflexive");
    let mut antisym = Tally::new("order.antisymmetric");
    let mut converse = Tally::new("order.converse");
    let mut trans = Tally::new("order.transitive");
    let mut sound = Tally::new("solve_add.sound");
    let mut compat = Tally::new("order.plus-compatible");

    for (a, b, c) in &elems {
        refl.record(s.compare(a, a).is_ge() && s.compare(a, a).is_le(), || {
            format!("a={}", r(a))
        });
        let ab = s.compare(a, b);
        antisym.record(!(ab.is_ge() && ab.is_le()) || a == b, || {
            format!("a={}, b={} equivalent but distinct", r(a), r(b))
        });
        let ba = s.compare(b, a);
        converse.record(ab == ba.reverse(), || {
            format!("a={}, b={}: {ab} vs reversed {ba}", r(a), r(b))
        });
        if ab.is_ge() && s.compare(b, c).is_ge() {
            trans.record(s.compare(a, c).is_ge(), || {
                format!("a={} >= b={} >= c={} but not a >= c", r(a), r(b), r(c))
            });
        }
        let solved = s.solve_add(a, b);
        if let Some(d) = &solved {
            let back = s.add(b, d);
            sound.record(back == *a, || {
                format!(
                    "target={}, known={}: returned {} but known+d = {}",
                    r(a),
                    r(b),
                    r(d),
                    r(&back)
                )
            });
        }
        if ab.is_ge() {
            compat.record(solved.is_some(), || {
                format!("a={} >= b={} yet no d with b+d = a", r(a), r(b))
            });
        }
    }
    for t in [refl, antisym, converse, trans, sound, compat] {
        report.push(t);
    }
    Ok(report)
}
