use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use lukstar::arith::{in_pi, is_fermat_prime, is_prime, pi_below, term_equivalent};
use lukstar::formula::F;
use lukstar::igstar::{
    check_r_equations, fixed_point, is_representable, plmap_of, simple_partition, skeleton,
    validate_igstar, AbstractIGChain, Representability, SkSeq, Witness,
};
use lukstar::logic::{
    self, check_hilbert_axioms, check_lambda_equations_on, check_lemma_theorems, Matrix, Report,
};
use lukstar::reproduce;
use lukstar::subalgebra::{all_subalgebras, is_strictly_simple};
use lukstar::synth::{
    synth_crisp_imp, synth_delta_traced, synth_goedel_imp, synth_luk_imp, Definitions, UnaryTerm,
};
use lukstar::{Chain, Error, StarChain};

#[derive(Parser)]
#[command(
    name = "lukstar",
    version,
    about = "Finite square-Lukasiewicz chains and their logics"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ChainArg {
    /// Chain parameter: the chain is {0, 1/n, ..., 1}.
    #[arg(long)]
    n: u32,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long)]
    n: u32,
    /// Designated values are those >= i/n.
    #[arg(long)]
    i: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Value tables of unary terms such as "+*^2+*".
    Table {
        #[command(flatten)]
        chain: ChainArg,
        /// Term in prefix notation; repeatable. Defaults to *, + and ~.
        #[arg(long = "term")]
        terms: Vec<String>,
    },
    /// Every subalgebra of L*_{n+1}.
    Subalgebras {
        #[command(flatten)]
        chain: ChainArg,
    },
    /// Whether L*_{n+1} is strictly simple.
    StrictlySimple {
        #[command(flatten)]
        chain: ChainArg,
    },
    /// Primality, membership in the class Pi and term-equivalence.
    Classify {
        #[arg(long, conflicts_with = "below", required_unless_present = "below")]
        n: Option<u64>,
        /// List the members of Pi below this bound.
        #[arg(long)]
        below: Option<u64>,
    },
    /// Synthesize the term for Delta_{a/n}.
    SynthDelta {
        #[command(flatten)]
        chain: ChainArg,
        /// Numerator of a.
        #[arg(long)]
        a: u32,
    },
    /// Synthesize an implication as a formula in ~, *, |.
    SynthImp {
        #[command(flatten)]
        chain: ChainArg,
        #[arg(long, default_value = "luk", value_parser = ["luk", "goedel", "crisp"])]
        kind: String,
    },
    /// Decide validity of a formula in the matrix logic.
    Valid {
        #[command(flatten)]
        matrix: MatrixArgs,
        formula: String,
    },
    /// Decide whether the premises entail the formula.
    Conseq {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long = "premise")]
        premises: Vec<String>,
        formula: String,
    },
    /// Check the Hilbert axioms (and optionally the lemma theorems).
    CheckAxioms {
        #[arg(long)]
        n: u32,
        /// Filter index; every index 1..=n when omitted.
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        theorems: bool,
    },
    /// Check the equations Eq1-Eq9 on L*_{n+1} or on a star table.
    CheckEquations {
        #[arg(long, required_unless_present = "star")]
        n: Option<u32>,
        /// JSON chain {"size":..,"star":[..]} to check instead.
        #[arg(long)]
        star: Option<PathBuf>,
    },
    /// Fixed point of an sk-sequence such as "**~".
    Skfix { sequence: String },
    /// Finite IG-star chains given as JSON star tables.
    Igstar {
        #[command(subcommand)]
        command: IgCommand,
    },
    /// Run the acceptance suite.
    Reproduce {
        #[arg(long, conflicts_with = "id", required_unless_present = "id")]
        all: bool,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=12))]
        id: Option<u8>,
    },
}

#[derive(Subcommand)]
enum IgCommand {
    Validate {
        file: PathBuf,
    },
    Representable {
        file: PathBuf,
    },
    Skeleton {
        file: PathBuf,
        #[arg(long)]
        elem: usize,
    },
    Partition {
        file: PathBuf,
    },
    REquations {
        file: PathBuf,
        /// Height bound; defaults to size - 1.
        #[arg(long)]
        n: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Refused(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotTermEquivalent(_)
            | Error::NotValidated(_)
            | Error::NotStrictlySimple
            | Error::NoTerm(_)
            | Error::BudgetExceeded(_) => Failure::Refused(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Refused(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(json: bool, value: Value, text: impl FnOnce() -> String) {
    if json {
        println!("{value}");
    } else {
        println!("{}", text());
    }
}

fn chain(n: u32) -> Result<Chain, Failure> {
    Ok(Chain::new(n)?)
}

fn frac(c: &Chain, x: usize) -> String {
    c.elem(x as u32).unwrap().to_string()
}

fn load(path: &PathBuf) -> Result<AbstractIGChain, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse_formula(text: &str, c: &Chain, defs: &Definitions) -> Result<F, Failure> {
    Ok(logic::parse(text)?.expand(c, defs)?)
}

fn report_json(r: &Report) -> Value {
    json!({ "ok": r.ok(), "checked": r.checked, "failures": r.failures })
}

fn report_text(title: &str, r: &Report) -> String {
    let mut out = format!(
        "{title}: {} checked, {} failed",
        r.checked,
        r.failures.len()
    );
    for f in &r.failures {
        out.push_str(&format!("\n  {} {}", f.item, f.params));
        if let Some(cm) = &f.countermodel {
            out.push_str(&format!(" [{} -> {}]", cm.values.join(", "), cm.value));
        }
    }
    out
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Table { chain: ca, terms } => {
            let c = chain(ca.n)?;
            let names: Vec<String> = if terms.is_empty() {
                vec!["*".into(), "+".into(), "~".into()]
            } else {
                terms.clone()
            };
            let mut rows = Vec::new();
            for name in &names {
                let t = UnaryTerm::parse_paper(name)?;
                let vals: Vec<usize> = (0..c.len()).map(|x| t.eval(&c, x)).collect();
                rows.push((t.to_string(), vals));
            }
            emit(
                json,
                json!({
                    "n": ca.n,
                    "rows": rows.iter().map(|(t, v)| json!({
                        "term": t,
                        "values": v.iter().map(|&x| frac(&c, x)).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                }),
                || {
                    let width = rows
                        .iter()
                        .map(|(t, _)| t.len() + 1)
                        .max()
                        .unwrap_or(1)
                        .max(2);
                    let cell = 2 * ca.n.to_string().len() + 2;
                    let line = |label: &str, vals: &mut dyn Iterator<Item = String>| {
                        let mut s = format!("{label:<width$}");
                        for v in vals {
                            s.push_str(&format!(" {v:>cell$}"));
                        }
                        s
                    };
                    let mut out = vec![line("x", &mut (0..c.len()).map(|x| frac(&c, x)))];
                    for (t, v) in &rows {
                        out.push(line(&format!("{t}x"), &mut v.iter().map(|&x| frac(&c, x))));
                    }
                    out.join("\n")
                },
            );
            Ok(true)
        }
        Command::Subalgebras { chain: ca } => {
            let c = chain(ca.n)?;
            let subs = all_subalgebras(&c)?;
            emit(json, json!(subs), || {
                subs.iter()
                    .map(|s| {
                        let els: Vec<String> = s.elements().iter().map(|e| e.to_string()).collect();
                        format!("{{{}}}", els.join(", "))
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(true)
        }
        Command::StrictlySimple { chain: ca } => {
            let c = chain(ca.n)?;
            let ss = is_strictly_simple(&c);
            emit(json, json!({ "n": ca.n, "strictly_simple": ss }), || {
                format!(
                    "L*_{} is {}strictly simple",
                    ca.n + 1,
                    if ss { "" } else { "not " }
                )
            });
            Ok(true)
        }
        Command::Classify { n, below } => {
            if let Some(limit) = below {
                let pi = pi_below(*limit);
                emit(json, json!({ "below": limit, "pi": pi }), || {
                    pi.iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                });
                return Ok(true);
            }
            let n = n.unwrap();
            if n == 0 {
                return Err(Failure::Usage("n must be at least 1".into()));
            }
            let v = in_pi(n);
            let (prime, te, fermat) = (is_prime(n), term_equivalent(n), is_fermat_prime(n));
            emit(
                json,
                json!({ "n": n, "prime": prime, "in_pi": v.in_pi, "term_equivalent": te, "fermat": fermat }),
                || {
                    let yn = |b: bool| if b { "yes" } else { "no" };
                    let mut s = format!("n = {n}\nprime: {}\nin Pi: {}", yn(prime), yn(v.in_pi));
                    if let (Some(m), Some(sign)) = (v.witness_m, v.sign) {
                        s.push_str(&format!(" (2^{m} = {sign:+} mod {n})"));
                    }
                    s.push_str(&format!(
                        "\nterm-equivalent: {}\nFermat prime: {}",
                        yn(te),
                        yn(fermat)
                    ));
                    s
                },
            );
            Ok(true)
        }
        Command::SynthDelta { chain: ca, a } => {
            let c = chain(ca.n)?;
            let a = c.elem(*a)?;
            let (term, trace) = synth_delta_traced(&c, a.num() as usize)?;
            let vals: Vec<String> = (0..c.len()).map(|x| frac(&c, term.eval(&c, x))).collect();
            emit(
                json,
                json!({
                    "n": ca.n,
                    "a": a.to_string(),
                    "term": term.to_string(),
                    "values": vals,
                    "pairs": trace.pairs.iter().map(|&(x, y)| [frac(&c, x), frac(&c, y)]).collect::<Vec<_>>(),
                }),
                || {
                    let xs: Vec<String> = (0..c.len()).map(|x| frac(&c, x)).collect();
                    format!(
                        "{term}\nx:       {}\nD_a(x):  {}",
                        xs.join(" "),
                        vals.join(" ")
                    )
                },
            );
            Ok(true)
        }
        Command::SynthImp { chain: ca, kind } => {
            let c = chain(ca.n)?;
            let f = match kind.as_str() {
                "goedel" => synth_goedel_imp(&c),
                "crisp" => synth_crisp_imp(&c),
                _ => synth_luk_imp(&c)?,
            };
            emit(
                json,
                json!({ "n": ca.n, "kind": kind, "formula": f.to_string(), "size": f.size() }),
                || f.to_string(),
            );
            Ok(true)
        }
        Command::Valid { matrix, formula } => {
            let m = Matrix::new(matrix.n, matrix.i)?;
            let c = m.chain();
            let f = parse_formula(formula, &c, &Definitions::for_chain(&c))?;
            let cm = logic::is_valid(m, &f)?;
            emit(
                json,
                json!({ "valid": cm.is_none(), "countermodel": cm }),
                || match &cm {
                    None => "valid".into(),
                    Some(cm) => format!("not valid: [{}] -> {}", cm.values.join(", "), cm.value),
                },
            );
            Ok(cm.is_none())
        }
        Command::Conseq {
            matrix,
            premises,
            formula,
        } => {
            let m = Matrix::new(matrix.n, matrix.i)?;
            let c = m.chain();
            let defs = Definitions::for_chain(&c);
            let f = parse_formula(formula, &c, &defs)?;
            let ps = premises
                .iter()
                .map(|p| parse_formula(p, &c, &defs))
                .collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&lukstar::formula::Formula> = ps.iter().map(|p| p.as_ref()).collect();
            let cm = logic::consequence(m, &refs, &f)?;
            emit(
                json,
                json!({ "follows": cm.is_none(), "countermodel": cm }),
                || match &cm {
                    None => "follows".into(),
                    Some(cm) => format!(
                        "does not follow: [{}] -> {}",
                        cm.values.join(", "),
                        cm.value
                    ),
                },
            );
            Ok(cm.is_none())
        }
        Command::CheckAxioms { n, i, theorems } => {
            let indices: Vec<u32> = match i {
                Some(i) => vec![*i],
                None => (1..=*n).collect(),
            };
            let mut all_ok = true;
            let mut out = Vec::new();
            for i in indices {
                let m = Matrix::new(*n, i)?;
                let mut r = check_hilbert_axioms(m);
                if *theorems {
                    r.merge(check_lemma_theorems(m));
                }
                all_ok &= r.ok();
                out.push((i, r));
            }
            emit(
                json,
                json!(out
                    .iter()
                    .map(|(i, r)| {
                        let mut v = report_json(r);
                        v["n"] = json!(n);
                        v["i"] = json!(i);
                        v
                    })
                    .collect::<Vec<_>>()),
                || {
                    out.iter()
                        .map(|(i, r)| report_text(&format!("n={n} i={i}"), r))
                        .collect::<Vec<_>>()
                        .join("\n")
                },
            );
            Ok(all_ok)
        }
        Command::CheckEquations { n, star } => {
            let r = match star {
                Some(path) => {
                    let s = load(path)?;
                    let c = chain(s.size() as u32 - 1)?;
                    if let Some(n) = n {
                        if *n != c.n() {
                            return Err(Failure::Usage(format!(
                                "--n {n} does not match a table of size {}",
                                s.size()
                            )));
                        }
                    }
                    check_lambda_equations_on(&c, &s)
                }
                None => {
                    let c = chain(n.unwrap())?;
                    check_lambda_equations_on(&c, &c)
                }
            };
            emit(json, report_json(&r), || report_text("Eq1-Eq9", &r));
            Ok(r.ok())
        }
        Command::Skfix { sequence } => {
            let s = SkSeq::parse(sequence)?;
            let fp = fixed_point(&s)?;
            let f = plmap_of(&s);
            emit(
                json,
                json!({
                    "sequence": s.to_string(),
                    "fixed_point": fp.to_string(),
                    "lo": f.lo.to_string(),
                    "hi": f.hi.to_string(),
                    "increasing": f.increasing,
                }),
                || fp.to_string(),
            );
            Ok(true)
        }
        Command::Igstar { command } => run_igstar(json, command),
        Command::Reproduce { all: _, id } => {
            let outcomes = match id {
                Some(id) => vec![reproduce::run(*id)],
                None => reproduce::run_all(),
            };
            let ok = outcomes.iter().all(|o| o.passed);
            emit(json, json!(outcomes), || {
                let mut lines: Vec<String> = outcomes
                    .iter()
                    .map(|o| {
                        format!(
                            "{} {:>2} {} ({} ms): {}",
                            if o.passed { "PASS" } else { "FAIL" },
                            o.id,
                            o.title,
                            o.elapsed_ms,
                            o.detail
                        )
                    })
                    .collect();
                let passed = outcomes.iter().filter(|o| o.passed).count();
                lines.push(format!("{passed}/{} criteria passed", outcomes.len()));
                lines.join("\n")
            });
            Ok(ok)
        }
    }
}

fn run_igstar(json: bool, command: &IgCommand) -> Outcome {
    match command {
        IgCommand::Validate { file } => {
            let c = load(file)?;
            let r = validate_igstar(&c);
            emit(json, report_json(&r), || {
                report_text("IG-star equations", &r)
            });
            Ok(r.ok())
        }
        IgCommand::Representable { file } => {
            let c = load(file)?;
            let v = is_representable(&c)?;
            emit(json, json!(v), || match &v {
                Representability::Representable { embedding } => {
                    let img: Vec<String> = embedding
                        .image
                        .iter()
                        .map(|x| format!("{x}/{}", embedding.k))
                        .collect();
                    format!("representable in L*_{}: {}", embedding.k + 1, img.join(" "))
                }
                Representability::NotRepresentable { witness } => match witness {
                    Witness::PeriodicSkeleton { elem, skeleton } => {
                        format!("not representable: skeleton {skeleton} of {elem} is periodic")
                    }
                    Witness::SharedSkeleton { elems, skeleton } => format!(
                        "not representable: {} and {} share the skeleton {skeleton}",
                        elems[0], elems[1]
                    ),
                    Witness::Inconsistent { elem } => {
                        format!("not representable: induced values contradict the chain at {elem}")
                    }
                },
            });
            Ok(true)
        }
        IgCommand::Skeleton { file, elem } => {
            let c = load(file)?;
            if *elem >= c.len() {
                return Err(Failure::Usage(format!(
                    "element {elem} is outside the chain"
                )));
            }
            let sk = skeleton(&c, *elem)?;
            emit(json, json!({ "elem": elem, "skeleton": sk }), || {
                sk.to_string()
            });
            Ok(true)
        }
        IgCommand::Partition { file } => {
            let c = load(file)?;
            let p = simple_partition(&c)?;
            emit(json, json!(p), || {
                p.blocks
                    .iter()
                    .map(|b| format!("core {:?} attracts {:?}", b.core, b.attracted))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(true)
        }
        IgCommand::REquations { file, n } => {
            let c = load(file)?;
            let n = n.unwrap_or(c.len() - 1);
            let r = check_r_equations(&c, n)?;
            emit(json, report_json(&r), || {
                report_text(&format!("R1n/R2n with n={n}"), &r)
            });
            Ok(r.ok())
        }
    }
}
