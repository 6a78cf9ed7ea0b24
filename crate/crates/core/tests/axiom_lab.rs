use aeu_core::lab::{
    check_c_axioms, check_c_axioms_with, check_d_axioms, check_d_axioms_with, check_lemma1, check_lemma2,
    check_solvability, random_utility, CheckReport, EnumerationBudget, FirstComponentOnly,
};
use aeu_core::semiring::{Probability, QualPossibility};
use aeu_core::{BinaryValue, ConsequenceSpace, Rational, UtilityAssignment};

fn show(report: &CheckReport) -> String {
    report
        .verdicts
        .iter()
        .map(|v| format!("{} {} {:?}\n", v.law, v.checked, v.counterexample))
        .collect()
}

fn qual_utility() -> (QualPossibility, UtilityAssignment<u32>) {
    let q = QualPossibility::new(3).unwrap();
    let space = ConsequenceSpace::numbered(3).unwrap();
    let u = UtilityAssignment::new(
        &q,
        space,
        vec![
            BinaryValue::best(&q),
            BinaryValue::new(&q, 2, 1).unwrap(),
            BinaryValue::worst(&q),
        ],
    )
    .unwrap();
    (q, u)
}

#[test]
fn c_axioms_qualitative_exhaustive() {
    let (q, u) = qual_utility();
    let report = check_c_axioms(&q, &u, &EnumerationBudget::exhaustive()).unwrap();
    assert!(report.passed(), "{}", show(&report));
    assert!(report.verdicts.iter().all(|v| v.checked > 0), "{}", show(&report));
}

#[test]
fn d_axioms_qualitative_exhaustive() {
    let (q, u) = qual_utility();
    let report = check_d_axioms(&q, &u, &EnumerationBudget::exhaustive()).unwrap();
    assert!(report.passed(), "{}", show(&report));
    assert!(report.verdict("D4").unwrap().checked > 0);
}

#[test]
fn probability_sampled() {
    let space = ConsequenceSpace::numbered(3).unwrap();
    let budget = EnumerationBudget::sampled(500, 7);
    let u = random_utility(&Probability, &mut rand_seed(7), &budget.carrier, &space).unwrap();
    let c = check_c_axioms(&Probability, &u, &budget).unwrap();
    assert!(c.passed(), "{}", show(&c));
    let d = check_d_axioms(&Probability, &u, &budget).unwrap();
    assert!(d.passed(), "{}", show(&d));
    assert!(d.verdict("D4").unwrap().checked > 0, "{}", show(&d));
}

fn rand_seed(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn first_component_control_fails() {
    let (q, u) = qual_utility();
    let pref = FirstComponentOnly::new(&q, &u);
    let budget = EnumerationBudget::exhaustive();
    let c = check_c_axioms_with(&q, &pref, u.space(), &budget).unwrap();
    let c2 = c.verdict("C2").unwrap();
    assert!(c2.counterexample.is_some(), "{}", show(&c));
    let d = check_d_axioms_with(&q, &pref, u.space(), &budget).unwrap();
    assert!(d.verdict("D2").unwrap().counterexample.is_some());
}

#[test]
fn solvability_and_lemmas() {
    let q = QualPossibility::new(3).unwrap();
    let budget = EnumerationBudget::exhaustive();
    for report in [
        check_solvability(&q, &budget),
        check_lemma2(&q, &budget),
        check_lemma1(&q, &budget),
    ] {
        let report = report.unwrap();
        assert!(report.passed(), "{}", show(&report));
    }
    let budget = EnumerationBudget::sampled(300, 1);
    for report in [
        check_solvability(&Probability, &budget),
        check_lemma2(&Probability, &budget),
        check_lemma1(&Probability, &budget),
    ] {
        let report = report.unwrap();
        assert!(report.passed(), "{}", show(&report));
    }
    let _: Option<Rational> = None;
}
