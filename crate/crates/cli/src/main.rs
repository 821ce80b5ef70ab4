use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use powmon_core::autosearch::{
    find_automorphisms_with, find_cancellative, proof_pipeline, SearchReport, StrategyRegistry,
    TruncatedPowerMonoid, Variant, DEFAULT_STRATEGY,
};
use powmon_core::lemmas;
use powmon_core::numsgp::parse_generators;
use powmon_core::quotient::{self, naturals};
use powmon_core::verify::{self, DEFAULT_SEED};
use powmon_core::{Error, Limits, NumericalSemigroup, PSet};

#[derive(Parser)]
#[command(name = "powmon", version, about = "Power monoids of numerical semigroups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Numerical semigroups.
    #[command(subcommand)]
    Nsgp(NsgpCmd),
    /// Elements of P(H) in canonical form.
    #[command(subcommand)]
    Set(SetCmd),
    /// Sumsets, powers and translations.
    #[command(subcommand)]
    Sum(SumCmd),
    /// Witness constructions and oracles.
    #[command(subcommand)]
    Lemma(LemmaCmd),
    /// Conjugacy classes and their normal forms.
    #[command(subcommand)]
    Quotient(QuotientCmd),
    /// Truncated power monoids and their automorphisms.
    #[command(subcommand)]
    Aut(AutCmd),
    /// Run the acceptance suite.
    Verify {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run only these criteria (comma separated ids).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
    },
}

#[derive(Args, Clone)]
struct Ground {
    /// Generators of the ground semigroup, e.g. 3,5.
    #[arg(long, default_value = "1")]
    gens: String,
    /// Drop 0 from the ground.
    #[arg(long)]
    no_zero: bool,
}

impl Ground {
    fn build(&self) -> Result<Arc<NumericalSemigroup>, Error> {
        Ok(NumericalSemigroup::from_generators(&parse_generators(&self.gens)?, !self.no_zero)?.shared())
    }
}

#[derive(Subcommand)]
enum NsgpCmd {
    Info(Ground),
    Frobenius(Ground),
    Gaps(Ground),
}

#[derive(Subcommand)]
enum SetCmd {
    Canon {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        set: String,
    },
    Member {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        set: String,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    Min {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        set: String,
    },
}

#[derive(Subcommand)]
enum SumCmd {
    Add {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    Pow {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        x: String,
        #[arg(long)]
        n: usize,
    },
    /// X + t, read in the ground given by --to-gens (default: the same).
    Translate {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        #[arg(long)]
        to_gens: Option<String>,
        #[arg(long)]
        to_no_zero: bool,
    },
}

#[derive(Subcommand)]
enum LemmaCmd {
    /// Q = A^{n-1} \ B for every B ⊆ A \ {0}.
    QWitness {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// A^n and the X_a = A^n \ {a + x}.
    Conjugate {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// x_1, ..., x_{n-1} from A.
        #[arg(long, value_delimiter = ',')]
        tuple: Vec<usize>,
    },
    /// All finite X with X + A = B.
    Enumerate {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    Halo {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        set: String,
        #[arg(long)]
        y: usize,
    },
    /// Idempotency, and with --y the doubleton absorption test.
    Idem {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        set: String,
        #[arg(long)]
        y: Option<usize>,
    },
}

#[derive(Subcommand)]
enum QuotientCmd {
    Normalize {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        set: String,
    },
    Related {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// A + k for A ⊆ N containing 0, as a subset of the ground.
    Lift {
        #[command(flatten)]
        ground: Ground,
        #[arg(long)]
        set: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args, Clone)]
struct MonoidArgs {
    #[command(flatten)]
    ground: Ground,
    #[arg(long)]
    window: usize,
    #[arg(long, default_value = "p0")]
    variant: Variant,
}

impl MonoidArgs {
    fn build(&self) -> Result<TruncatedPowerMonoid, Error> {
        TruncatedPowerMonoid::build(&self.ground.build()?, self.window, self.variant)
    }
}

#[derive(Subcommand)]
enum AutCmd {
    Build(MonoidArgs),
    Search {
        #[command(flatten)]
        monoid: MonoidArgs,
        #[arg(long, default_value = DEFAULT_STRATEGY)]
        strategy: String,
        /// Overrides POWMON_TIMEOUT_SECS.
        #[arg(long)]
        timeout_secs: Option<u64>,
    },
    Pipeline {
        #[command(flatten)]
        monoid: MonoidArgs,
        /// Images of the elements in index order, e.g. 0,1,3,2.
        #[arg(long, value_delimiter = ',')]
        perm: Vec<usize>,
    },
    Cancellative(MonoidArgs),
    /// List the registered search strategies.
    Strategies,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Failed,
    Partial,
}

struct Output {
    text: String,
    json: Value,
    status: Status,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Self {
            text: text.into(),
            json,
            status: Status::Ok,
        }
    }

    fn checked(text: impl Into<String>, json: Value, holds: bool) -> Self {
        Self {
            status: if holds { Status::Ok } else { Status::Failed },
            ..Self::ok(text, json)
        }
    }
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!("1"));
    }
    v
}

fn set_json(p: &PSet) -> Value {
    json!({
        "ground": p.ground().to_string(),
        "literal": p.to_string(),
        "set": p.to_json(),
    })
}

fn single_set(p: &PSet) -> Output {
    Output::ok(p.to_string(), set_json(p))
}

fn parse(ground: &Ground, literal: &str) -> Result<PSet, Error> {
    PSet::parse(&ground.build()?, literal)
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

fn nsgp(cmd: NsgpCmd) -> Result<Output, Error> {
    Ok(match cmd {
        NsgpCmd::Info(g) => {
            let h = g.build()?;
            let gaps = h.gaps();
            Output::ok(
                format!(
                    "ground={h} generators={} frobenius={} multiplicity={} conductor={} gaps={}",
                    join(h.generators()),
                    h.frobenius(),
                    h.multiplicity(),
                    h.conductor(),
                    join(&gaps)
                ),
                json!({
                    "ground": h.to_string(),
                    "semigroup": *h,
                    "multiplicity": h.multiplicity(),
                    "conductor": h.conductor(),
                    "gaps": gaps,
                }),
            )
        }
        NsgpCmd::Frobenius(g) => {
            let f = g.build()?.frobenius();
            Output::ok(f.to_string(), json!({ "frobenius": f }))
        }
        NsgpCmd::Gaps(g) => {
            let gaps = g.build()?.gaps();
            Output::ok(join(&gaps), json!({ "gaps": gaps }))
        }
    })
}

fn set(cmd: SetCmd) -> Result<Output, Error> {
    Ok(match cmd {
        SetCmd::Canon { ground, set } => single_set(&parse(&ground, &set)?),
        SetCmd::Member { ground, set, n } => {
            let m = parse(&ground, &set)?.member(n);
            Output::ok(m.to_string(), json!({ "member": m }))
        }
        SetCmd::Min { ground, set } => {
            let m = parse(&ground, &set)?.min();
            Output::ok(m.to_string(), json!({ "min": m }))
        }
    })
}

fn sum(cmd: SumCmd) -> Result<Output, Error> {
    Ok(match cmd {
        SumCmd::Add { ground, x, y } => single_set(&parse(&ground, &x)?.add(&parse(&ground, &y)?)?),
        SumCmd::Pow { ground, x, n } => single_set(&parse(&ground, &x)?.power(n)?),
        SumCmd::Translate {
            ground,
            x,
            t,
            to_gens,
            to_no_zero,
        } => {
            let target = match to_gens {
                Some(gens) => Ground {
                    gens,
                    no_zero: to_no_zero,
                }
                .build()?,
                None => ground.build()?,
            };
            single_set(&parse(&ground, &x)?.translate(t, &target)?)
        }
    })
}

fn witness_output(report: &lemmas::WitnessReport) -> Output {
    let mut lines: Vec<String> = report
        .witnesses
        .iter()
        .zip(&report.verified)
        .map(|(w, v)| format!("{w} verified={v}"))
        .collect();
    lines.push(format!(
        "witnesses={} distinct={} bound={} holds={}",
        report.witnesses.len(),
        report.distinct_count,
        report.bound_claimed,
        report.holds()
    ));
    Output::checked(
        lines.join("\n"),
        serde_json::to_value(report.to_json()).expect("plain data"),
        report.holds(),
    )
}

fn lemma(cmd: LemmaCmd) -> Result<Output, Error> {
    Ok(match cmd {
        LemmaCmd::QWitness { ground, set, n } => witness_output(&lemmas::lemma_q_witnesses(&parse(&ground, &set)?, n)?),
        LemmaCmd::Conjugate { ground, set, n, tuple } => {
            witness_output(&lemmas::conjugate_witnesses(&parse(&ground, &set)?, n, &tuple)?)
        }
        LemmaCmd::Enumerate { ground, a, b } => {
            let sols = lemmas::enumerate_translate_solutions(&parse(&ground, &a)?, &parse(&ground, &b)?)?;
            let mut lines: Vec<String> = sols.iter().map(|s| s.to_string()).collect();
            lines.push(format!("solutions={}", sols.len()));
            Output::ok(
                lines.join("\n"),
                json!({
                    "solutions": sols.iter().map(set_json).collect::<Vec<_>>(),
                    "count": sols.len(),
                }),
            )
        }
        LemmaCmd::Halo { ground, set, y } => {
            let x = parse(&ground, &set)?;
            let member = x.member(y as i64);
            let equality = lemmas::member_by_halo(&x, y)?;
            let consistent = member == equality;
            Output::checked(
                format!("member={member} equality={equality} consistent={consistent}"),
                json!({ "member": member, "equality": equality, "consistent": consistent }),
                consistent,
            )
        }
        LemmaCmd::Idem { ground, set, y } => {
            let e = parse(&ground, &set)?;
            let idempotent = lemmas::is_idempotent(&e)?;
            match y {
                None => Output::ok(format!("idempotent={idempotent}"), json!({ "idempotent": idempotent })),
                Some(y) => {
                    let absorbs = lemmas::doubleton_absorb_test(&e, y)?;
                    let member = e.member(y as i64);
                    let consistent = absorbs == member;
                    Output::checked(
                        format!("idempotent={idempotent} absorbs={absorbs} member={member} consistent={consistent}"),
                        json!({
                            "idempotent": idempotent,
                            "absorbs": absorbs,
                            "member": member,
                            "consistent": consistent,
                        }),
                        consistent,
                    )
                }
            }
        }
    })
}

fn quotient_cmd(cmd: QuotientCmd) -> Result<Output, Error> {
    Ok(match cmd {
        QuotientCmd::Normalize { ground, set } => single_set(&quotient::normalize(&parse(&ground, &set)?)),
        QuotientCmd::Related { ground, x, y } => {
            let r = quotient::conjugate_related(&parse(&ground, &x)?, &parse(&ground, &y)?)?;
            Output::ok(r.to_string(), json!({ "related": r }))
        }
        QuotientCmd::Lift { ground, set, k } => {
            let a = PSet::parse(&naturals(), &set)?;
            single_set(&quotient::lift(&a, &ground.build()?, k)?)
        }
    })
}

fn aut(cmd: AutCmd) -> Result<Output, Error> {
    Ok(match cmd {
        AutCmd::Build(args) => {
            let m = args.build()?;
            let labels: Vec<String> = (0..m.len()).map(|i| m.label(i)).collect();
            let mut lines = vec![format!(
                "ground={} window={} variant={} elements={}",
                m.ground(),
                m.window(),
                m.variant(),
                m.len()
            )];
            lines.extend(labels.iter().enumerate().map(|(i, l)| format!("{i}: {l}")));
            Output::ok(
                lines.join("\n"),
                json!({
                    "ground": m.ground().to_string(),
                    "window": m.window(),
                    "variant": m.variant(),
                    "elements": labels,
                    "identity": m.identity(),
                    "idempotents": m.idempotents(),
                }),
            )
        }
        AutCmd::Search {
            monoid,
            strategy,
            timeout_secs,
        } => {
            let m = monoid.build()?;
            let timeout = timeout_secs.map_or(Limits::global().timeout, Duration::from_secs);
            let out = find_automorphisms_with(&m, &strategy, Some(timeout))?;
            let count = out.automorphisms.len();
            let mut head = format!("automorphisms={count}");
            if count == 1 && out.automorphisms[0].iter().enumerate().all(|(i, &v)| i == v) {
                head.push_str(" (identity)");
            }
            if !out.complete {
                head.push_str(" (partial: timed out)");
            }
            let mut lines = vec![head];
            if count > 1 {
                lines.extend(out.automorphisms.iter().map(|f| join(f)));
            }
            Output {
                text: lines.join("\n"),
                json: serde_json::to_value(SearchReport::new(&m, &out)).expect("plain data"),
                status: if out.complete { Status::Ok } else { Status::Partial },
            }
        }
        AutCmd::Pipeline { monoid, perm } => {
            let m = monoid.build()?;
            let report = proof_pipeline(&m, &perm)?;
            let mut lines: Vec<String> = report
                .steps
                .iter()
                .map(|s| {
                    let verdict = if s.passed { "pass" } else { "FAIL" };
                    match &s.witness {
                        Some(w) => format!("{} {verdict} ({} checked): {w}", s.step, s.checked),
                        None => format!("{} {verdict} ({} checked)", s.step, s.checked),
                    }
                })
                .collect();
            lines.extend(report.window_notes.iter().map(|n| format!("note: {n}")));
            Output::checked(
                lines.join("\n"),
                serde_json::to_value(&report).expect("plain data"),
                report.all_passed(),
            )
        }
        AutCmd::Cancellative(args) => {
            let m = args.build()?;
            let labels: Vec<String> = find_cancellative(&m).iter().map(|&c| m.label(c)).collect();
            Output::ok(labels.join(" "), json!({ "cancellative": labels }))
        }
        AutCmd::Strategies => {
            let registry = StrategyRegistry::with_builtins();
            let rows: Vec<(&str, &str)> = registry.iter().map(|s| (s.name(), s.description())).collect();
            Output::ok(
                rows.iter().map(|(n, d)| format!("{n}\t{d}")).collect::<Vec<_>>().join("\n"),
                json!({
                    "default": DEFAULT_STRATEGY,
                    "strategies": rows.iter().map(|(n, d)| json!({ "name": n, "description": d })).collect::<Vec<_>>(),
                }),
            )
        }
    })
}

fn run_verify(seed: u64, only: Vec<u32>) -> Result<Output, Error> {
    let ids: Vec<u32> = if only.is_empty() {
        verify::criterion_ids().collect()
    } else {
        only
    };
    let results = ids
        .into_iter()
        .map(|id| verify::run_criterion(id, seed))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = results.iter().all(|r| r.passed);
    let mut lines: Vec<String> = results.iter().map(|r| r.to_string()).collect();
    lines.push(format!(
        "{} of {} criteria passed",
        results.iter().filter(|r| r.passed).count(),
        results.len()
    ));
    Ok(Output::checked(
        lines.join("\n"),
        json!({ "seed": seed, "criteria": results, "passed": passed }),
        passed,
    ))
}

fn dispatch(command: Command) -> Result<Output, Error> {
    match command {
        Command::Nsgp(c) => nsgp(c),
        Command::Set(c) => set(c),
        Command::Sum(c) => sum(c),
        Command::Lemma(c) => lemma(c),
        Command::Quotient(c) => quotient_cmd(c),
        Command::Aut(c) => aut(c),
        Command::Verify { seed, only } => run_verify(seed, only),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", with_schema(out.json)),
            }
            ExitCode::from(match out.status {
                Status::Ok => 0,
                Status::Failed => 1,
                Status::Partial => 3,
            })
        }
        Err(e) => {
            match cli.format {
                Format::Text => eprintln!("error: {e}"),
                Format::Json => println!("{}", json!({ "schema": "1", "error": e.to_string() })),
            }
            ExitCode::from(if e.is_cap() { 3 } else { 2 })
        }
    }
}
