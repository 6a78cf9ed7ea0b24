//! Machine checks of the semiring laws, both axiom systems, the solvability
//! conditions and the witness constructions, over exhaustively enumerated or
//! seeded-sampled universes.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::binary::{self, BinaryValue};
use crate::lottery::Lottery;
use crate::semiring::{Carrier, SampleConfig, Semiring};
use crate::{Error, Result};

mod axioms;
mod solvability;
mod synthesis;
mod universe;

pub use self::axioms::{
    check_c_axioms, check_c_axioms_with, check_d_axioms, check_d_axioms_with, AeuPreference, FirstComponentOnly,
    Preference,
};
pub use self::solvability::{
    check_lemma1, check_lemma2, check_solvability, continuity_witness, kary_scale, lemma2_witness, Lemma2Witness,
};
pub use self::synthesis::{synthesize_utility, PreferenceTable};
pub use self::universe::{random_lottery, random_utility, seeded_utility, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled => "sampled",
        })
    }
}

/// How much of the (infinite) lottery space a checker looks at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub mode: Mode,
    pub consequences: usize,
    pub max_depth: usize,
    pub max_branches: usize,
    /// Sampled lotteries, value pairs or triples, depending on the check.
    pub samples: usize,
    pub seed: u64,
    pub carrier: SampleConfig,
    /// Above this many lotteries, transitivity is checked on sampled triples.
    pub transitivity_threshold: usize,
    /// Exhaustive universes larger than this are refused.
    pub max_universe: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            mode: Mode::Sampled,
            consequences: 3,
            max_depth: 2,
            max_branches: 3,
            samples: 500,
            seed: 0,
            carrier: SampleConfig::default(),
            transitivity_threshold: 200,
            max_universe: 2_000_000,
        }
    }
}

impl EnumerationBudget {
    pub fn exhaustive() -> Self {
        EnumerationBudget {
            mode: Mode::Exhaustive,
            ..Default::default()
        }
    }

    pub fn sampled(samples: usize, seed: u64) -> Self {
        EnumerationBudget {
            samples,
            seed,
            ..Default::default()
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.consequences < 2 {
            return Err(Error::Budget("at least two consequences".into()));
        }
        if self.max_depth == 0 || self.max_branches == 0 {
            return Err(Error::Budget("depth and branches must be positive".into()));
        }
        if self.mode == Mode::Sampled && self.samples == 0 {
            return Err(Error::Budget("sampled mode needs a positive sample count".into()));
        }
        if self.carrier.denominator_bound == 0 {
            return Err(Error::Budget("denominator bound must be positive".into()));
        }
        Ok(())
    }

    pub(crate) fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

/// Outcome of one law or axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub law: String,
    /// Instances examined (vacuous instances excluded).
    pub checked: u64,
    /// The first violation in enumeration order.
    pub counterexample: Option<String>,
    pub note: Option<String>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: String,
    pub semiring: String,
    pub mode: Mode,
    /// Size of the lottery (or value) universe the checks ranged over.
    pub universe: usize,
    pub verdicts: Vec<Verdict>,
}

impl CheckReport {
    pub(crate) fn new(suite: &str, semiring: String, mode: Mode) -> Self {
        CheckReport {
            suite: suite.into(),
            semiring,
            mode,
            universe: 0,
            verdicts: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(Verdict::passed)
    }

    pub fn verdict(&self, law: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.law == law)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.passed())
    }

    pub(crate) fn push(&mut self, tally: Tally) {
        self.verdicts.push(tally.finish());
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.universe = self.universe.max(other.universe);
        self.verdicts.extend(other.verdicts);
    }
}

/// Running count for one law; keeps the first counterexample.
pub(crate) struct Tally {
    law: String,
    checked: u64,
    counterexample: Option<String>,
    note: Option<String>,
}

impl Tally {
    pub(crate) fn new(law: &str) -> Self {
        Tally {
            law: law.into(),
            checked: 0,
            counterexample: None,
            note: None,
        }
    }

    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    pub(crate) fn fail(&mut self, witness: String) {
        self.record(false, || witness);
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.note = Some(note.into());
    }

    fn finish(self) -> Verdict {
        Verdict {
            law: self.law,
            checked: self.checked,
            counterexample: self.counterexample,
            note: self.note,
        }
    }
}

pub(crate) fn render_lottery<S: Semiring>(s: &S, l: &Lottery<S::Elem>) -> String {
    let parts: Vec<String> = match l {
        Lottery::Simple(d) => d.iter().map(|p| s.render(p)).collect(),
        Lottery::Compound(b) => b
            .iter()
            .map(|b| format!("{}/{}", s.render(&b.weight), render_lottery(s, &b.lottery)))
            .collect(),
    };
    format!("[{}]", parts.join(", "))
}

pub(crate) fn render_value<S: Semiring>(s: &S, v: &BinaryValue<S::Elem>) -> String {
    format!("<{}, {}>", s.render(v.first()), s.render(v.second()))
}

/// The binary scale as a pool of values: all of it when finite, otherwise
/// the extremes plus seeded samples.
pub(crate) fn scale_pool<S: Carrier>(
    s: &S,
    budget: &EnumerationBudget,
    stream: u64,
    sampled: usize,
) -> Result<Vec<BinaryValue<S::Elem>>> {
    match budget.mode {
        Mode::Exhaustive => binary::elements(s, &budget.carrier)
            .ok_or_else(|| Error::Budget(format!("exhaustive mode needs a finite carrier, `{}` is not", s.name()))),
        Mode::Sampled => {
            let mut rng = budget.rng(stream);
            let mut pool = alloc::vec![BinaryValue::best(s), BinaryValue::worst(s)];
            let mut attempts = 0;
            while pool.len() < sampled.max(2) && attempts < 20 * sampled {
                attempts += 1;
                let v = binary::sample(s, &mut rng, &budget.carrier);
                if !pool.contains(&v) {
                    pool.push(v);
                }
            }
            Ok(pool)
        }
    }
}
