use std::path::Path;

use aeu_core::lab::{
    check_c_axioms, check_d_axioms, check_lemma1, check_lemma2, check_solvability, seeded_utility, synthesize_utility,
    CheckReport, EnumerationBudget, Mode,
};
use aeu_core::measure::induced_lottery;
use aeu_core::semiring::{check_order_laws, check_semiring_laws};
use aeu_core::{
    aeu_compare, aeu_eval, aeu_fold, elicit_binary_equivalent, sigma_measure, Branch, ConsequenceSpace, Descriptor,
    Lottery, SampleConfig, Semiring, UtilityAssignment, Value,
};
use serde_json::{json, Value as Json};

use crate::args::{CheckArgs, Command, Format, ModeArg, Suite};
use crate::error::{CliError, EXIT_OK, EXIT_VIOLATION};
use crate::files::{binary_json, render_json, Kind, LotteryFile, Source, UtilityFile};
use crate::report::{report_json, report_text};

pub struct Output {
    pub code: i32,
    pub text: String,
}

fn ok(text: String) -> Result<Output, CliError> {
    Ok(Output { code: EXIT_OK, text })
}

fn same_semiring(a: (&Path, &Descriptor), b: (&Path, &Descriptor)) -> Result<(), CliError> {
    if a.1 != b.1 {
        return Err(CliError::SemiringMismatch {
            left_path: a.0.to_path_buf(),
            left: a.1.to_string(),
            right_path: b.0.to_path_buf(),
            right: b.1.to_string(),
        });
    }
    Ok(())
}

/// Re-index a lottery from its own space into the utility's, by name.
fn remap(
    l: &Lottery<Value>,
    d: &Descriptor,
    from: &ConsequenceSpace,
    to: &ConsequenceSpace,
) -> Result<Lottery<Value>, CliError> {
    Ok(match l {
        Lottery::Simple(dist) => {
            let mut out = vec![d.zero(); to.len()];
            for (x, p) in dist.iter().enumerate() {
                if !d.is_zero(p) {
                    out[to.index_of(from.name(x))?] = p.clone();
                }
            }
            Lottery::Simple(out)
        }
        Lottery::Compound(branches) => Lottery::Compound(
            branches
                .iter()
                .map(|b| {
                    Ok(Branch {
                        weight: b.weight.clone(),
                        lottery: remap(&b.lottery, d, from, to)?,
                    })
                })
                .collect::<Result<_, CliError>>()?,
        ),
    })
}

fn lottery_under(lottery: &Path, utility: &Path) -> Result<(Lottery<Value>, UtilityFile), CliError> {
    let lf = Source::read(lottery)?.lottery_file()?;
    let uf = Source::read(utility)?.utility_file()?;
    same_semiring((lottery, &lf.semiring), (utility, &uf.semiring))?;
    let l = remap(&lf.lottery, &lf.semiring, &lf.space, uf.utility.space())?;
    Ok((l, uf))
}

fn value_output(format: Format, value: Json) -> String {
    match format {
        Format::Text => format!("{value}\n"),
        Format::Json => render_json(&json!({ "value": value })),
    }
}

pub fn execute(command: &Command, format: Format) -> Result<Output, CliError> {
    match command {
        Command::Eval { lottery, utility, fold } => {
            let (l, uf) = lottery_under(lottery, utility)?;
            let d = &uf.semiring;
            let v = if *fold {
                aeu_fold(d, &l, &uf.utility)?
            } else {
                aeu_eval(d, &l, &uf.utility)?
            };
            ok(value_output(format, binary_json(d, &v)))
        }
        Command::Compare {
            lottery,
            lottery2,
            utility,
        } => {
            let (l1, uf) = lottery_under(lottery, utility)?;
            let (l2, _) = lottery_under(lottery2, utility)?;
            let c = aeu_compare(&uf.semiring, &l1, &l2, &uf.utility)?;
            ok(match format {
                Format::Text => format!("{c}\n"),
                Format::Json => render_json(&json!({ "verdict": c.to_string() })),
            })
        }
        Command::Reduce { lottery } => {
            let mut lf = Source::read(lottery)?.lottery_file()?;
            lf.lottery = lf.lottery.reduce(&lf.semiring);
            ok(render_json(&lf.to_json()))
        }
        Command::Sigma { measure, event } => {
            let mf = Source::read(measure)?.measure_file()?;
            let names: Vec<&str> = event.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let a = mf.measure.event(&names)?;
            let v = sigma_measure(&mf.semiring, &mf.measure, &a)?;
            ok(value_output(format, binary_json(&mf.semiring, &v)))
        }
        Command::Elicit { utility, consequence } => {
            let uf = Source::read(utility)?.utility_file()?;
            let x = uf.utility.space().index_of(consequence)?;
            let v = elicit_binary_equivalent(&uf.semiring, &uf.utility, x)?;
            ok(value_output(format, binary_json(&uf.semiring, &v)))
        }
        Command::Check(args) => check(args, format),
        Command::Synthesize { table } => {
            let tf = Source::read(table)?.table_file()?;
            match synthesize_utility(&tf.semiring, &tf.table, &tf.space)? {
                Some(utility) => ok(render_json(
                    &UtilityFile {
                        semiring: tf.semiring,
                        utility,
                    }
                    .to_json(),
                )),
                None => Ok(Output {
                    code: EXIT_VIOLATION,
                    text: match format {
                        Format::Text => "ABSENT\n".into(),
                        Format::Json => render_json(&json!({ "utility": null })),
                    },
                }),
            }
        }
        Command::Induce { measure, act, utility } => {
            let mf = Source::read(measure)?.measure_file()?;
            let af = Source::read(act)?.act_file()?;
            let space = match (&af.space, utility) {
                (Some(space), _) => space.clone(),
                (None, Some(u)) => {
                    let uf = Source::read(u)?.utility_file()?;
                    same_semiring((measure, &mf.semiring), (u, &uf.semiring))?;
                    uf.utility.space().clone()
                }
                (None, None) => {
                    return Err(CliError::Usage(format!(
                        "{} has no consequence space; pass --utility",
                        act.display()
                    )))
                }
            };
            let f = af.resolve(&mf.measure, &space)?;
            let lottery = induced_lottery(&mf.semiring, &mf.measure, &f, &space)?;
            ok(render_json(
                &LotteryFile {
                    semiring: mf.semiring,
                    space,
                    lottery,
                }
                .to_json(),
            ))
        }
        Command::Format { file } => {
            let src = Source::read(file)?;
            let json = match src.kind() {
                Some(Kind::Lottery) => src.lottery_file()?.to_json(),
                Some(Kind::Measure) => src.measure_file()?.to_json(),
                Some(Kind::Act) => src.act_file()?.to_json(),
                Some(Kind::Utility) => src.utility_file()?.to_json(),
                Some(Kind::Table) => src.table_file()?.to_json(),
                None => return Err(src.error("<root>", "", "not a lottery, measure, act, utility or table file")),
            };
            ok(render_json(&json))
        }
    }
}

fn budget(args: &CheckArgs) -> EnumerationBudget {
    EnumerationBudget {
        mode: match args.mode {
            ModeArg::Sampled => Mode::Sampled,
            ModeArg::Auto | ModeArg::Exhaustive => Mode::Exhaustive,
        },
        consequences: args.consequences,
        max_depth: args.depth,
        max_branches: args.branches,
        samples: args.samples,
        seed: args.seed,
        carrier: SampleConfig {
            denominator_bound: args.denominator_bound,
            kappa_ceiling: args.kappa_ceiling,
        },
        transitivity_threshold: args.transitivity_threshold,
        max_universe: args.max_universe,
    }
}

/// Runs `f` under the requested mode; `auto` falls back to sampling when
/// exhaustive enumeration is impossible or over the cap.
fn with_mode(
    mode: ModeArg,
    budget: &EnumerationBudget,
    f: impl Fn(&EnumerationBudget) -> aeu_core::Result<CheckReport>,
) -> Result<CheckReport, CliError> {
    match f(budget) {
        Err(aeu_core::Error::Budget(_)) if mode == ModeArg::Auto => {
            let sampled = EnumerationBudget {
                mode: Mode::Sampled,
                ..budget.clone()
            };
            Ok(f(&sampled)?)
        }
        other => Ok(other?),
    }
}

fn check(args: &CheckArgs, format: Format) -> Result<Output, CliError> {
    let d: Descriptor = args
        .semiring
        .parse()
        .map_err(|e: aeu_core::Error| CliError::Usage(format!("--semiring: {e}")))?;
    let mut budget = budget(args);
    let given: Option<UtilityAssignment<Value>> = match &args.utility {
        Some(path) => {
            let uf = Source::read(path)?.utility_file()?;
            if uf.semiring != d {
                return Err(CliError::Usage(format!(
                    "--semiring is `{d}` but {} uses `{}`",
                    path.display(),
                    uf.semiring
                )));
            }
            budget.consequences = uf.utility.space().len();
            Some(uf.utility)
        }
        None => None,
    };
    let utility = |b: &EnumerationBudget| -> aeu_core::Result<UtilityAssignment<Value>> {
        match &given {
            Some(u) => Ok(u.clone()),
            None => seeded_utility(&d, b, &ConsequenceSpace::numbered(b.consequences)?),
        }
    };
    let suites: &[Suite] = match args.suite {
        Suite::All => &[
            Suite::Semiring,
            Suite::Order,
            Suite::CAxioms,
            Suite::DAxioms,
            Suite::Solvability,
            Suite::Lemma1,
            Suite::Lemma2,
        ],
        ref one => std::slice::from_ref(one),
    };
    let mut reports = Vec::with_capacity(suites.len());
    for suite in suites {
        let run = |b: &EnumerationBudget| match suite {
            Suite::Semiring => check_semiring_laws(&d, b),
            Suite::Order => check_order_laws(&d, b),
            Suite::CAxioms => check_c_axioms(&d, &utility(b)?, b),
            Suite::DAxioms => check_d_axioms(&d, &utility(b)?, b),
            Suite::Solvability => check_solvability(&d, b),
            Suite::Lemma1 => check_lemma1(&d, b),
            Suite::Lemma2 => check_lemma2(&d, b),
            Suite::All => unreachable!("expanded above"),
        };
        reports.push(with_mode(args.mode, &budget, run)?);
    }
    let passed = reports.iter().all(CheckReport::passed);
    let text = match format {
        Format::Text => reports.iter().map(report_text).collect::<Vec<_>>().join("\n"),
        Format::Json => {
            let items: Vec<Json> = reports.iter().map(report_json).collect();
            render_json(&if items.len() == 1 {
                items.into_iter().next().expect("one report")
            } else {
                json!({ "passed": passed, "reports": items })
            })
        }
    };
    Ok(Output {
        code: if passed { EXIT_OK } else { EXIT_VIOLATION },
        text,
    })
}
