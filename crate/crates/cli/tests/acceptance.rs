//! Acceptance suite. Runs every criterion in order, prints one PASS/FAIL line
//! per criterion and exits non-zero if any fails.

use std::error::Error as StdError;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use aeu_cli::files::{Kind, Source};
use aeu_core::lab::{
    check_c_axioms, check_d_axioms, check_lemma1, check_lemma2, check_solvability, continuity_witness, lemma2_witness,
    random_lottery, random_utility, seeded_utility, synthesize_utility, CheckReport, EnumerationBudget, Mode,
    PreferenceTable, Universe,
};
use aeu_core::semiring::{
    check_semiring_laws, Kappa, LexProbability, NaturalPlusMax, Probability, Product, QualPossibility,
    QuantPossibility, Rank,
};
use aeu_core::{
    aeu_compare, aeu_eval, aeu_fold, binary, compare2, shift_utility, sigma_measure, solve_scale, BinaryValue, Branch,
    Carrier, Comparison, ConsequenceSpace, Lottery, PlausibilityMeasure, Rational, SampleConfig, Semiring,
    ShiftDirection, UtilityAssignment,
};
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, Box<dyn StdError>>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+).into());
        }
    };
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn small(x: &Rational) -> Rational64 {
    Rational64::new(x.numer().to_i64().unwrap(), x.denom().to_i64().unwrap())
}

fn passed(report: &CheckReport) -> Result<(), Box<dyn StdError>> {
    if let Some(v) = report.failures().next() {
        return Err(format!(
            "{} on {}: {} failed: {}",
            report.suite,
            report.semiring,
            v.law,
            v.counterexample.as_deref().unwrap_or("")
        )
        .into());
    }
    Ok(())
}

fn checked(report: &CheckReport) -> u64 {
    report.verdicts.iter().map(|v| v.checked).sum()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), Box<dyn StdError>> {
    let spent = start.elapsed();
    ensure!(spent < limit, "{what} took {spent:.2?}, limit {limit:?}");
    Ok(())
}

fn exhaustive_kappa8() -> EnumerationBudget {
    let mut b = EnumerationBudget::exhaustive();
    b.carrier.kappa_ceiling = 8;
    b
}

fn qual3() -> QualPossibility {
    QualPossibility::new(3).unwrap()
}

// ---------------------------------------------------------------------------

const TRIPLE_LAWS: [&str; 6] = [
    "A1.associativity",
    "A2.associativity",
    "A3.left-distributivity",
    "A3.right-distributivity",
    "B1.associativity",
    "A1.commutativity",
];

fn law_suite<S: Carrier>(s: &S, budget: &EnumerationBudget) -> Result<u64, Box<dyn StdError>> {
    let report = check_semiring_laws(s, budget)?;
    passed(&report)?;
    for law in [
        "A1.commutativity",
        "A1.zero-neutral",
        "A2.one-neutral",
        "A2.zero-absorbing",
        "B2.commutativity",
        "B3.one-neutral",
    ]
    .iter()
    .chain(TRIPLE_LAWS.iter())
    {
        let v = report
            .verdict(law)
            .ok_or_else(|| format!("{}: no verdict for {law}", s.name()))?;
        ensure!(v.checked > 0, "{}: {law} checked nothing", s.name());
    }
    if budget.mode == Mode::Sampled {
        for law in TRIPLE_LAWS {
            let n = report.verdict(law).unwrap().checked;
            ensure!(n >= 1000, "{}: {law} saw only {n} samples", s.name());
        }
    }
    Ok(checked(&report))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let q = law_suite(&qual3(), &EnumerationBudget::exhaustive())?;
    let k = law_suite(&Kappa, &exhaustive_kappa8())?;
    let sampled = EnumerationBudget::sampled(1000, 0);
    law_suite(&Probability, &sampled)?;
    law_suite(&QuantPossibility, &sampled)?;
    law_suite(&LexProbability::new(2)?, &sampled)?;
    law_suite(&Product::new(Probability, Probability), &sampled)?;

    let control = check_semiring_laws(&NaturalPlusMax, &exhaustive_kappa8())?;
    let absorb = control
        .verdict("A2.zero-absorbing")
        .ok_or("control: no absorption verdict")?;
    let witness = absorb.counterexample.clone().ok_or("control passed absorption")?;
    println!("    control counterexample (A2.zero-absorbing): {witness}");
    within(start, Duration::from_secs(10), "law suite")?;
    Ok(format!(
        "qualposs:3 {q} and kappa<=8 {k} instances exhaustive, 4 instances x 1000 samples"
    ))
}

// ---------------------------------------------------------------------------

fn qual_utilities() -> Vec<UtilityAssignment<u32>> {
    let q = qual3();
    let space = ConsequenceSpace::numbered(3).unwrap();
    binary::elements(&q, &SampleConfig::default())
        .unwrap()
        .into_iter()
        .map(|mid| {
            UtilityAssignment::new(
                &q,
                space.clone(),
                vec![BinaryValue::best(&q), mid, BinaryValue::worst(&q)],
            )
            .unwrap()
        })
        .collect()
}

fn criterion_2() -> Outcome {
    let q = qual3();
    let mut universe = 0;
    for u in qual_utilities() {
        let start = Instant::now();
        let report = check_c_axioms(&q, &u, &EnumerationBudget::exhaustive())?;
        passed(&report)?;
        within(start, Duration::from_secs(60), "qualposs c-axioms")?;
        universe = report.universe;
    }
    let start = Instant::now();
    let budget = EnumerationBudget::sampled(500, 0);
    let space = ConsequenceSpace::numbered(3)?;
    let u = seeded_utility(&Probability, &budget, &space)?;
    let report = check_c_axioms(&Probability, &u, &budget)?;
    passed(&report)?;
    within(start, Duration::from_secs(60), "prob c-axioms")?;
    Ok(format!(
        "qualposs:3 exhaustive ({universe} lotteries) for every u(x2); prob 500 samples, {} instances",
        checked(&report)
    ))
}

fn render_pair<S: Semiring>(s: &S, v: &BinaryValue<S::Elem>) -> String {
    format!("<{}, {}>", s.render(v.first()), s.render(v.second()))
}

// ---------------------------------------------------------------------------

fn criterion_3() -> Outcome {
    let q = qual3();
    let mut d4 = 0;
    for u in qual_utilities() {
        let start = Instant::now();
        let report = check_d_axioms(&q, &u, &EnumerationBudget::exhaustive())?;
        passed(&report)?;
        let n = report.verdict("D4").ok_or("no D4 verdict")?.checked;
        ensure!(n > 0, "D4 vacuous for u(x2)={}", render_pair(&q, u.get(1)));
        d4 += n;
        within(start, Duration::from_secs(60), "qualposs d-axioms")?;
    }
    let start = Instant::now();
    let budget = EnumerationBudget::sampled(500, 0);
    let space = ConsequenceSpace::numbered(3)?;
    let u = seeded_utility(&Probability, &budget, &space)?;
    let report = check_d_axioms(&Probability, &u, &budget)?;
    passed(&report)?;
    let n = report.verdict("D4").ok_or("no D4 verdict")?.checked;
    ensure!(n > 0, "D4 vacuous on prob");
    within(start, Duration::from_secs(60), "prob d-axioms")?;

    // The mixing weights, recomputed in plain rational arithmetic.
    let mut g = rng(3);
    let cfg = SampleConfig::default();
    let mut verified = 0;
    while verified < 300 {
        let mut v: Vec<_> = (0..3).map(|_| binary::sample(&Probability, &mut g, &cfg)).collect();
        v.sort_by(|a, b| b.first().cmp(a.first()));
        if v[0].first() == v[1].first() || v[1].first() == v[2].first() {
            continue;
        }
        let alpha = continuity_witness(&Probability, &v[0], &v[1], &v[2])?;
        let (a1, b1, g1) = (small(v[0].first()), small(v[1].first()), small(v[2].first()));
        let expected = (b1 - g1) / (a1 - g1);
        ensure!(
            small(alpha.first()) == expected,
            "continuity weight {} != {}",
            alpha.first(),
            expected
        );
        verified += 1;
    }
    Ok(format!(
        "{d4} qualposs and {n} prob D4 witnesses verified; 300 prob weights match the oracle"
    ))
}

// ---------------------------------------------------------------------------

fn criterion_4() -> Outcome {
    let mut counts = Vec::new();
    for (report, label) in [
        (
            check_solvability(&qual3(), &EnumerationBudget::exhaustive())?,
            "qualposs:3",
        ),
        (check_solvability(&Kappa, &exhaustive_kappa8())?, "kappa<=8"),
        (
            check_solvability(&Probability, &EnumerationBudget::sampled(1000, 0))?,
            "prob",
        ),
    ] {
        passed(&report)?;
        for law in ["E1", "E2"] {
            ensure!(
                report.verdict(law).map_or(0, |v| v.checked) > 0,
                "{label}: {law} vacuous"
            );
        }
        counts.push(format!("{label} {}", checked(&report)));
    }
    let prob = check_solvability(&Probability, &EnumerationBudget::sampled(1000, 0))?;
    ensure!(
        prob.verdict("E1").unwrap().checked >= 1000,
        "prob E1 saw fewer than 1000 pairs"
    );

    // Differences and scale factors against rational arithmetic.
    let mut g = rng(4);
    let cfg = SampleConfig::default();
    let mut n = 0;
    while n < 1000 {
        let a = binary::sample(&Probability, &mut g, &cfg);
        let b = binary::sample(&Probability, &mut g, &cfg);
        let (hi, lo) = if a.first() >= b.first() { (a, b) } else { (b, a) };
        let lambda = lemma2_witness(&Probability, &hi, &lo)?.lambda;
        ensure!(
            small(&lambda) == small(hi.first()) - small(lo.first()),
            "E1 difference wrong"
        );
        let (l, m) = (small(&lambda), small(hi.second()));
        if !(l + m).is_zero() {
            let alpha = solve_scale(&Probability, &lambda, hi.second())?;
            ensure!(small(alpha.first()) * (l + m) == l, "E2 factor wrong");
            ensure!(small(alpha.second()) * (l + m) == m, "E2 factor wrong");
        }
        n += 1;
    }
    Ok(format!("{}; 1000 prob pairs match the oracle", counts.join(", ")))
}

// ---------------------------------------------------------------------------

fn criterion_5() -> Outcome {
    let mut counts = Vec::new();
    let mut lemma1 = 0;
    type Run = Box<dyn Fn() -> aeu_core::Result<(CheckReport, CheckReport)>>;
    let configs: [(&str, Run); 3] = [
        (
            "qualposs:3",
            Box::new(|| {
                Ok((
                    check_lemma2(&qual3(), &EnumerationBudget::exhaustive())?,
                    check_lemma1(&qual3(), &EnumerationBudget::exhaustive())?,
                ))
            }),
        ),
        (
            "kappa<=8",
            Box::new(|| {
                // A two-consequence, depth-1 universe keeps the substitution
                // premise small; the factorizations do not depend on it.
                let shallow = EnumerationBudget {
                    consequences: 2,
                    max_depth: 1,
                    ..exhaustive_kappa8()
                };
                Ok((
                    check_lemma2(&Kappa, &exhaustive_kappa8())?,
                    check_lemma1(&Kappa, &shallow)?,
                ))
            }),
        ),
        (
            "prob",
            Box::new(|| {
                let b = EnumerationBudget::sampled(500, 0);
                Ok((check_lemma2(&Probability, &b)?, check_lemma1(&Probability, &b)?))
            }),
        ),
    ];
    for (label, run) in configs {
        let (l2, l1) = run()?;
        passed(&l2)?;
        let w = l2.verdict("lemma2.witness").ok_or("no lemma2 verdict")?.checked;
        ensure!(w > 0, "{label}: lemma2 vacuous");
        if label == "prob" {
            ensure!(w >= 500, "prob: only {w} lemma2 samples");
        }
        for k in 1..=3 {
            let v = l1.verdict(&format!("lemma1.scale-{k}")).ok_or("no lemma1 verdict")?;
            ensure!(
                v.passed() && v.checked > 0,
                "{label}: lemma1.scale-{k} {:?}",
                v.counterexample
            );
            lemma1 += v.checked;
        }
        counts.push(format!("{label} {w}"));
    }

    // Worked instance: <4/5,1/5> over <1/5,4/5>.
    let pb = |a, b| BinaryValue::new(&Probability, r(a, 5), r(b, 5)).unwrap();
    let w = lemma2_witness(&Probability, &pb(4, 1), &pb(1, 4))?;
    ensure!(
        (
            w.lambda.clone(),
            w.mu.clone(),
            w.lambda_prime.clone(),
            w.mu_prime.clone()
        ) == (r(3, 5), r(2, 5), r(1, 2), r(1, 2)),
        "lemma2 witness for <4/5,1/5>, <1/5,4/5>: {w:?}"
    );
    Ok(format!(
        "lemma2 witnesses {}; {lemma1} k-ary factorizations",
        counts.join(", ")
    ))
}

// ---------------------------------------------------------------------------

fn fold_matches<S: Semiring>(
    s: &S,
    l: &Lottery<S::Elem>,
    u: &UtilityAssignment<S::Elem>,
) -> Result<(), Box<dyn StdError>> {
    let (f, e) = (aeu_fold(s, l, u)?, aeu_eval(s, l, u)?);
    ensure!(f == e, "fold {} != eval {}", render_pair(s, &f), render_pair(s, &e));
    Ok(())
}

fn criterion_6() -> Outcome {
    let q = qual3();
    let mut n = 0usize;
    let budget = |consequences, max_depth, max_branches| EnumerationBudget {
        consequences,
        max_depth,
        max_branches,
        ..EnumerationBudget::exhaustive()
    };
    let pairs = binary::elements(&q, &SampleConfig::default()).unwrap();
    let weights2: Vec<_> = pairs.iter().map(|p| (*p.first(), *p.second())).collect();

    // |X| = 3: every lottery of depth <= 2 with up to 3 branches, then every
    // depth-3 lottery with up to 2 branches, streamed.
    let space = ConsequenceSpace::numbered(3)?;
    let wide = Universe::build(&q, &space, &budget(3, 2, 3))?;
    let narrow = Universe::build(&q, &space, &budget(3, 2, 2))?;
    let deep: Vec<_> = narrow.lotteries.iter().filter(|l| l.depth() == 2).cloned().collect();
    for u in qual_utilities() {
        for l in &wide.lotteries {
            fold_matches(&q, l, &u)?;
            n += 1;
        }
    }
    let u = &qual_utilities()[2];
    for top in &deep {
        let single = Lottery::compound(
            &q,
            vec![Branch {
                weight: q.one(),
                lottery: top.clone(),
            }],
        )?;
        fold_matches(&q, &single, u)?;
        n += 1;
        for other in &narrow.lotteries {
            for (w1, w2) in &weights2 {
                for (a, b) in [(top, other), (other, top)] {
                    let l = Lottery::compound(
                        &q,
                        vec![
                            Branch {
                                weight: *w1,
                                lottery: a.clone(),
                            },
                            Branch {
                                weight: *w2,
                                lottery: b.clone(),
                            },
                        ],
                    )?;
                    fold_matches(&q, &l, u)?;
                    n += 1;
                }
            }
        }
    }

    let mut g = rng(6);
    let cfg = SampleConfig::default();
    let sp4 = ConsequenceSpace::numbered(4)?;
    for i in 0..1000 {
        let u = random_utility(&Probability, &mut g, &cfg, &sp4)?;
        let l = random_lottery(&Probability, &mut g, 4, 2 + i % 2, 3, &cfg);
        ensure!(l.depth() >= 2, "random lottery is not compound");
        fold_matches(&Probability, &l, &u)?;
    }
    Ok(format!(
        "{n} qualposs:3 lotteries up to depth 3, 1000 prob compound lotteries"
    ))
}

// ---------------------------------------------------------------------------

fn maxmin_oracle(dist: &[u32], u: &[(u32, u32)]) -> (u32, u32) {
    dist.iter()
        .zip(u)
        .fold((0, 0), |acc, (p, (a, b))| (acc.0.max(*p.min(a)), acc.1.max(*p.min(b))))
}

fn rank(r: &Rank) -> Option<u64> {
    match r {
        Rank::Finite(n) => Some(*n),
        Rank::Infinite => None,
    }
}

fn minplus_oracle(dist: &[Option<u64>], u: &[(Option<u64>, Option<u64>)]) -> (Option<u64>, Option<u64>) {
    let plus = |a: Option<u64>, b: Option<u64>| Some(a? + b?);
    let min = |a: Option<u64>, b: Option<u64>| match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    };
    dist.iter().zip(u).fold((None, None), |acc, (p, (a, b))| {
        (min(acc.0, plus(*p, *a)), min(acc.1, plus(*p, *b)))
    })
}

fn criterion_7() -> Outcome {
    let cfg = SampleConfig::default();
    let sp = ConsequenceSpace::numbered(4)?;

    let mut g = rng(7);
    for _ in 0..1000 {
        let u = random_utility(&Probability, &mut g, &cfg, &sp)?;
        let l = random_lottery(&Probability, &mut g, 4, 1, 1, &cfg);
        let Lottery::Simple(dist) = &l else {
            return Err("expected a simple lottery".into());
        };
        let expected: Rational64 = dist
            .iter()
            .zip(u.utilities())
            .map(|(p, v)| small(p) * small(v.first()))
            .sum();
        ensure!(
            small(aeu_eval(&Probability, &l, &u)?.first()) == expected,
            "expected value mismatch"
        );
    }

    let q = QualPossibility::new(5)?;
    for i in 0..1000 {
        let u = random_utility(&q, &mut g, &cfg, &sp)?;
        let l = random_lottery(&q, &mut g, 4, 1 + i % 2, 3, &cfg);
        let pairs: Vec<_> = u.utilities().iter().map(|v| (*v.first(), *v.second())).collect();
        let got = aeu_eval(&q, &l, &u)?;
        ensure!(
            (*got.first(), *got.second()) == maxmin_oracle(&l.distribution(&q), &pairs),
            "max-min mismatch"
        );
    }
    let q3 = qual3();
    let space = ConsequenceSpace::numbered(3)?;
    let simple = Universe::build(
        &q3,
        &space,
        &EnumerationBudget {
            max_depth: 1,
            ..EnumerationBudget::exhaustive()
        },
    )?;
    let mut exhaustive = 0;
    for u in qual_utilities() {
        let pairs: Vec<_> = u.utilities().iter().map(|v| (*v.first(), *v.second())).collect();
        for l in &simple.simple {
            let got = aeu_eval(&q3, l, &u)?;
            ensure!(
                (*got.first(), *got.second()) == maxmin_oracle(&l.distribution(&q3), &pairs),
                "max-min mismatch"
            );
            exhaustive += 1;
        }
    }

    let kcfg = SampleConfig {
        kappa_ceiling: 8,
        ..cfg
    };
    for i in 0..1000 {
        let u = random_utility(&Kappa, &mut g, &kcfg, &sp)?;
        let l = random_lottery(&Kappa, &mut g, 4, 1 + i % 2, 3, &kcfg);
        let pairs: Vec<_> = u
            .utilities()
            .iter()
            .map(|v| (rank(v.first()), rank(v.second())))
            .collect();
        let dist: Vec<_> = l.distribution(&Kappa).iter().map(rank).collect();
        let got = aeu_eval(&Kappa, &l, &u)?;
        ensure!(
            (rank(got.first()), rank(got.second())) == minplus_oracle(&dist, &pairs),
            "min-plus mismatch"
        );
    }
    Ok(format!(
        "1000 prob, 1000 + {exhaustive} qualposs, 1000 kappa lotteries agree with their oracles"
    ))
}

// ---------------------------------------------------------------------------

fn swap_antitone<S: Semiring>(s: &S, values: &[BinaryValue<S::Elem>]) -> Result<usize, Box<dyn StdError>> {
    let mut n = 0;
    for a in values {
        for b in values {
            let forward = compare2(s, a, b);
            let back = compare2(s, &b.swap(), &a.swap());
            ensure!(
                forward == back,
                "{} vs {}: {forward} but swapped {back}",
                render_pair(s, a),
                render_pair(s, b)
            );
            n += 1;
        }
    }
    Ok(n)
}

fn sampled_values<S: Carrier>(s: &S, seed: u64) -> Vec<BinaryValue<S::Elem>> {
    let mut g = rng(seed);
    let cfg = SampleConfig::default();
    let mut v = vec![BinaryValue::best(s), BinaryValue::worst(s)];
    v.extend((0..45).map(|_| binary::sample(s, &mut g, &cfg)));
    v
}

fn sigma_duality<S: Semiring>(s: &S, weights: Vec<S::Elem>) -> Result<usize, Box<dyn StdError>> {
    let states = (1..=weights.len()).map(|i| format!("s{i}")).collect();
    let m = PlausibilityMeasure::new(s, states, weights)?;
    let events: Vec<Vec<usize>> = (0..1u32 << m.len())
        .map(|mask| (0..m.len()).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    for a in &events {
        let sigma = sigma_measure(s, &m, a)?;
        let complement = sigma_measure(s, &m, &m.complement(a))?;
        ensure!(
            complement == sigma.swap(),
            "{}: sigma of complement of {a:?} is not the swap",
            s.name()
        );
    }
    Ok(events.len())
}

fn criterion_8() -> Outcome {
    let ex = SampleConfig::default();
    let k8 = SampleConfig { kappa_ceiling: 8, ..ex };
    let q = qual3();
    let mut pairs = swap_antitone(&q, &binary::elements(&q, &ex).unwrap())?;
    pairs += swap_antitone(&Kappa, &binary::elements(&Kappa, &k8).unwrap())?;
    pairs += swap_antitone(&Probability, &sampled_values(&Probability, 1))?;
    pairs += swap_antitone(&QuantPossibility, &sampled_values(&QuantPossibility, 2))?;
    let lex = LexProbability::new(2)?;
    pairs += swap_antitone(&lex, &sampled_values(&lex, 3))?;
    let prod = Product::new(Probability, Probability);
    pairs += swap_antitone(&prod, &sampled_values(&prod, 4))?;

    let mut events = 0;
    events += sigma_duality(&Probability, vec![r(1, 2), r(1, 4), r(1, 8), r(1, 8)])?;
    events += sigma_duality(&QuantPossibility, vec![r(1, 1), r(1, 2), r(1, 4), r(0, 1)])?;
    events += sigma_duality(&q, vec![2, 1, 0, 1])?;
    events += sigma_duality(
        &Kappa,
        vec![Rank::Finite(0), Rank::Finite(1), Rank::Finite(3), Rank::Infinite],
    )?;
    let lw = |a, b| vec![r(1, a), r(1, b)];
    events += sigma_duality(&lex, vec![lw(2, 4), lw(4, 4), lw(8, 4), lw(8, 4)])?;
    let pw = |a, b| (r(1, a), r(1, b));
    events += sigma_duality(&prod, vec![pw(2, 4), pw(4, 4), pw(8, 4), pw(8, 4)])?;

    // Reversing the consequence order swaps every evaluation and reverses
    // every comparison.
    let space = ConsequenceSpace::numbered(3)?;
    let universe = Universe::build(
        &q,
        &space,
        &EnumerationBudget {
            max_branches: 2,
            ..EnumerationBudget::exhaustive()
        },
    )?;
    let mut lotteries = 0;
    for u in qual_utilities() {
        let d = u.dual();
        ensure!(
            d.space().best() == u.space().worst() && d.space().worst() == u.space().best(),
            "dual keeps the extremes"
        );
        for l in &universe.lotteries {
            ensure!(
                aeu_eval(&q, l, &d)? == aeu_eval(&q, l, &u)?.swap(),
                "dual evaluation is not the swap"
            );
            lotteries += 1;
        }
        for a in &universe.simple {
            for b in &universe.simple {
                ensure!(
                    aeu_compare(&q, a, b, &d)? == aeu_compare(&q, a, b, &u)?.reverse(),
                    "dual comparison not reversed"
                );
            }
        }
    }
    Ok(format!(
        "{pairs} P2 pairs, {events} events over 6 instances, {lotteries} lottery evaluations"
    ))
}

// ---------------------------------------------------------------------------

fn criterion_9() -> Outcome {
    let p = Probability;
    let pb = |a: (i64, i64), b: (i64, i64)| BinaryValue::new(&p, r(a.0, a.1), r(b.0, b.1)).unwrap();
    let space = ConsequenceSpace::new(["top", "y1", "y2", "y3", "bottom"], "top", "bottom")?;
    let u_minus = UtilityAssignment::new(
        &p,
        space,
        vec![
            pb((1, 1), (0, 1)),
            pb((1, 1), (0, 1)),
            pb((1, 2), (1, 2)),
            pb((0, 1), (1, 1)),
            pb((0, 1), (1, 1)),
        ],
    )?;
    let gamble = Lottery::simple(&p, vec![r(0, 1), r(1, 2), r(0, 1), r(1, 2), r(0, 1)])?;
    let sure = Lottery::degenerate(&p, 5, 2)?;
    let before = aeu_eval(&p, &gamble, &u_minus)?;
    ensure!(
        before == pb((1, 2), (1, 2)) && before == *u_minus.get(2),
        "AEU under u- is {}",
        render_pair(&p, &before)
    );
    ensure!(
        aeu_compare(&p, &gamble, &sure, &u_minus)? == Comparison::Equivalent,
        "not indifferent under u-"
    );

    let u_plus = shift_utility(&p, &u_minus, 2, ShiftDirection::Up, &r(1, 4))?;
    let after = aeu_eval(&p, &gamble, &u_plus)?;
    ensure!(
        after == pb((5, 8), (3, 8)),
        "AEU under u+ is {}",
        render_pair(&p, &after)
    );
    ensure!(
        compare2(&p, &after, u_plus.get(2)) == Comparison::Greater,
        "not strictly above u(y2)"
    );
    ensure!(
        aeu_compare(&p, &gamble, &sure, &u_plus)? == Comparison::Greater,
        "gamble not preferred under u+"
    );
    Ok(format!(
        "u-: {} ~ sure y2; u+: {} > {}",
        render_pair(&p, &before),
        render_pair(&p, &after),
        render_pair(&p, u_plus.get(2))
    ))
}

// ---------------------------------------------------------------------------

fn criterion_10() -> Outcome {
    let q = qual3();
    let space = ConsequenceSpace::numbered(3)?;
    let simple = Universe::build(
        &q,
        &space,
        &EnumerationBudget {
            max_depth: 1,
            ..EnumerationBudget::exhaustive()
        },
    )?
    .simple;
    let named: Vec<(String, Lottery<u32>)> = simple
        .iter()
        .enumerate()
        .map(|(i, l)| (format!("l{i}"), l.clone()))
        .collect();
    let cfg = SampleConfig::default();
    let mut pairs = 0;
    for seed in 0..20 {
        let u = random_utility(&q, &mut rng(100 + seed), &cfg, &space)?;
        let table = PreferenceTable::from_utility(&q, &u, named.clone())?;
        let found = synthesize_utility(&q, &table, &space)?.ok_or_else(|| format!("seed {seed}: no utility found"))?;
        let (agree, total) = table.agreement(&q, &found)?;
        ensure!(
            agree == total && total > 0,
            "seed {seed}: {agree}/{total} verdicts agree"
        );
        pairs += total;

        let mid = Lottery::degenerate(&q, 3, 1)?;
        let witnesses: Vec<&str> = named
            .iter()
            .filter(|(_, l)| {
                let d = l.distribution(&q);
                q.is_zero(&d[1]) && aeu_compare(&q, l, &mid, &u).ok() == Some(Comparison::Equivalent)
            })
            .map(|(name, _)| name.as_str())
            .collect();
        ensure!(!witnesses.is_empty(), "seed {seed}: table has no witness");
        let control = table.without(&witnesses);
        ensure!(
            synthesize_utility(&q, &control, &space)?.is_none(),
            "seed {seed}: control synthesized a utility"
        );
    }
    Ok(format!(
        "20 utilities, {pairs} table pairs reproduced, 20 controls absent"
    ))
}

// ---------------------------------------------------------------------------

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn aeu(args: &[&str]) -> aeu_cli::Outcome {
    let dir = fixtures();
    let argv = std::iter::once("aeu".to_string()).chain(args.iter().map(|a| match a.strip_prefix('@') {
        Some(file) => dir.join(file).to_string_lossy().into_owned(),
        None => a.to_string(),
    }));
    aeu_cli::run(argv)
}

fn structure(src: &Source) -> Result<String, Box<dyn StdError>> {
    Ok(match src.kind().ok_or("unknown file kind")? {
        Kind::Lottery => format!("{:?}", src.lottery_file()?),
        Kind::Measure => format!("{:?}", src.measure_file()?),
        Kind::Act => format!("{:?}", src.act_file()?),
        Kind::Utility => format!("{:?}", src.utility_file()?),
        Kind::Table => format!("{:?}", src.table_file()?),
    })
}

fn criterion_11() -> Outcome {
    let invocations: Vec<(Vec<&str>, i32)> = vec![
        (
            vec![
                "eval",
                "--lottery",
                "@prob_half.lottery.json",
                "--utility",
                "@prob.utility.json",
            ],
            0,
        ),
        (
            vec![
                "eval",
                "--fold",
                "--lottery",
                "@kappa_compound.lottery.json",
                "--utility",
                "@kappa.utility.json",
            ],
            0,
        ),
        (
            vec![
                "compare",
                "--lottery",
                "@product_a.lottery.json",
                "--lottery2",
                "@product_b.lottery.json",
                "--utility",
                "@product.utility.json",
            ],
            0,
        ),
        (vec!["reduce", "--lottery", "@prob_compound.lottery.json"], 0),
        (vec!["sigma", "--measure", "@prob.measure.json", "--event", "s1,s2"], 0),
        (
            vec!["elicit", "--utility", "@qualposs_y.utility.json", "--consequence", "y"],
            0,
        ),
        (vec!["synthesize", "--table", "@qualposs.table.json"], 0),
        (vec!["synthesize", "--table", "@qualposs_nowitness.table.json"], 1),
        (
            vec!["induce", "--measure", "@prob.measure.json", "--act", "@prob.act.json"],
            0,
        ),
        (vec!["format", "--file", "@prob_compound.lottery.json"], 0),
        (
            vec![
                "check",
                "--suite",
                "c-axioms",
                "--semiring",
                "prob",
                "--samples",
                "60",
                "--seed",
                "5",
            ],
            0,
        ),
        (vec!["check", "--suite", "lemma2", "--semiring", "qualposs:3"], 0),
        (
            vec![
                "check",
                "--suite",
                "semiring",
                "--semiring",
                "lexprob:2",
                "--samples",
                "200",
                "--seed",
                "9",
            ],
            0,
        ),
        (
            vec![
                "check",
                "--suite",
                "order",
                "--semiring",
                "lexprob:2",
                "--samples",
                "200",
                "--seed",
                "9",
            ],
            1,
        ),
        (
            vec![
                "eval",
                "--lottery",
                "@prob_half.lottery.json",
                "--utility",
                "@kappa.utility.json",
            ],
            2,
        ),
        (
            vec![
                "eval",
                "--lottery",
                "@invalid/not_normalized.lottery.json",
                "--utility",
                "@prob.utility.json",
            ],
            2,
        ),
        (vec!["format", "--file", "@invalid/syntax.lottery.json"], 2),
        (vec!["check", "--suite", "nonsense", "--semiring", "prob"], 2),
    ];
    let mut runs = 0;
    for (args, code) in &invocations {
        for format in ["text", "json"] {
            let mut full = args.clone();
            full.extend(["--format", format]);
            let first = aeu(&full);
            let second = aeu(&full);
            ensure!(first == second, "{full:?} is not deterministic");
            ensure!(
                first.code == *code,
                "{full:?} exited {} (expected {code}): {}",
                first.code,
                first.stderr
            );
            runs += 2;
        }
    }

    let mut corpus = 0;
    for entry in std::fs::read_dir(fixtures())? {
        let path = entry?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        let text = std::fs::read_to_string(&path)?;
        let out = aeu(&["format", "--file", path.to_str().unwrap()]);
        ensure!(out.code == 0, "format {} failed: {}", path.display(), out.stderr);
        ensure!(
            out.stdout == text,
            "{} is not byte-identical after formatting",
            path.display()
        );
        let original = structure(&Source::parse(&path, text)?)?;
        let reparsed = structure(&Source::parse(&path, out.stdout)?)?;
        ensure!(original == reparsed, "{} changes structure on re-parse", path.display());
        corpus += 1;
    }
    ensure!(corpus >= 20, "only {corpus} fixtures");

    let mut invalid = 0;
    for entry in std::fs::read_dir(fixtures().join("invalid"))? {
        let path = entry?.path();
        let out = aeu(&["format", "--file", path.to_str().unwrap()]);
        ensure!(out.code == 2, "{} exited {}", path.display(), out.code);
        ensure!(
            out.stderr.contains(&format!("{}:", path.display())),
            "{}: error lacks the file position",
            path.display()
        );
        invalid += 1;
    }

    std::env::set_var("AEU_THREADS", "0");
    let threads = aeu(&["reduce", "--lottery", "@prob_half.lottery.json"]);
    std::env::remove_var("AEU_THREADS");
    ensure!(threads.code == 2, "AEU_THREADS=0 exited {}", threads.code);
    Ok(format!(
        "{runs} deterministic runs, {corpus} files round-trip, {invalid} invalid files exit 2"
    ))
}

// ---------------------------------------------------------------------------

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("semiring laws", criterion_1),
        ("first axiom system", criterion_2),
        ("second axiom system and continuity witnesses", criterion_3),
        ("solvability", criterion_4),
        ("lemma witnesses", criterion_5),
        ("folding equals reduction", criterion_6),
        ("classical specializations", criterion_7),
        ("autoduality", criterion_8),
        ("attitude shift", criterion_9),
        ("utility synthesis", criterion_10),
        ("command line", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.2} s): {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2} s): {e}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
