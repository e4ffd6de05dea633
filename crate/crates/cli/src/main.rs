//! `designlattice` command-line tool.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use designlattice::boolean::{
    block_counts, build_design, irreducible_count, BooleanDesignSpec, CountMethod, CountTable,
};
use designlattice::combinatorics::DEFAULT_BUDGET;
use designlattice::{
    embedding_group, exponent_audit, gram_audit, non_injectivity_witness, smith_normal_form,
    verify_design, Budget, Design, IntMatrix,
};
use serde_json::{json, Value};

const BUDGET_ENV: &str = "DESIGNLATTICE_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "designlattice", version, about = "Block designs, their groups G_D, and zero-sum designs")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Write the report here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Cap on exhaustive enumeration size (overridden by DESIGNLATTICE_BUDGET)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a design file is a t-design and print its parameters
    Verify {
        /// Design JSON file, or - for stdin
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        t: usize,
    },
    /// Complementary, supplementary or derived design
    Transform {
        file: PathBuf,
        #[arg(value_enum)]
        kind: TransformKind,
        /// Point to derive at
        #[arg(long, required_if_eq("kind", "derived"))]
        point: Option<usize>,
    },
    /// Compute G_D and the image of every point
    Embed {
        file: PathBuf,
        /// Produce a non-injectivity certificate when points collide
        #[arg(long)]
        witness: bool,
        /// Run the exponent and Gram audits (needs a 2-design)
        #[arg(long)]
        audit: bool,
    },
    /// Incidence matrix of a design, blocks as rows, as matrix JSON
    Incidence { file: PathBuf },
    /// Smith normal form of a matrix JSON file
    Smith { file: PathBuf },
    /// Zero-sum designs over GF(q) and GF(2)^n
    #[command(subcommand)]
    Boolean(BooleanCommand),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TransformKind {
    Complement,
    Supplement,
    Derived,
}

#[derive(Subcommand, Debug)]
enum BooleanCommand {
    /// Enumerate a family as a design JSON file
    Enumerate(EnumerateArgs),
    /// Table of block counts b_k of the projective family
    Counts {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Irreducible zero-sum k-blocks of GF(2)^n, counted three ways
    Irreducible {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    variant: Variant,
    /// Dimension of GF(2)^n (binary variants)
    #[arg(long, required_if_eq_any([("variant", "affine"), ("variant", "projective"), ("variant", "dependent")]))]
    n: Option<u32>,
    /// Field order (field variant)
    #[arg(long, required_if_eq("variant", "field"))]
    q: Option<u64>,
    #[arg(long)]
    k: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    Field,
    Affine,
    Projective,
    Dependent,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    ClosedForm,
    Macwilliams,
    All,
}

/// Bad invocation detected after argument parsing; exits with status 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn budget(cli: &Cli) -> anyhow::Result<Budget> {
    let limit = match std::env::var(BUDGET_ENV) {
        Ok(raw) => match raw.trim().parse::<u64>() {
            Ok(n) if n >= 1 => n,
            _ => return Err(usage(format!("{BUDGET_ENV}={raw:?} is not a positive integer"))),
        },
        Err(_) => cli.budget.unwrap_or(DEFAULT_BUDGET),
    };
    Ok(Budget::new(limit))
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_design(path: &Path) -> anyhow::Result<Design> {
    let text = read_input(path)?;
    Design::from_json(&text).with_context(|| format!("parsing design {}", path.display()))
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    let mut body = text.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cli.out {
        Some(path) => {
            fs::write(path, body).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            io::stdout().write_all(body.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    let budget = budget(cli)?;
    match &cli.command {
        Command::Verify { file, t } => {
            if *t == 0 {
                return Err(usage("--t must be at least 1"));
            }
            let design = read_design(file)?;
            let params = verify_design(&design, *t)?;
            match cli.format {
                Format::Text => emit(cli, &params.to_string()),
                Format::Json => emit(cli, &serde_json::to_string(&params)?),
            }
        }
        Command::Transform { file, kind, point } => {
            let design = read_design(file)?;
            let out = match kind {
                TransformKind::Complement => design.complement()?,
                TransformKind::Supplement => design.supplement_within(budget)?,
                TransformKind::Derived => {
                    let p = point.ok_or_else(|| usage("derived needs --point"))?;
                    if p >= design.v() {
                        return Err(usage(format!(
                            "--point {p} is out of range for v = {}",
                            design.v()
                        )));
                    }
                    design.derived(p)?
                }
            };
            match cli.format {
                Format::Text => emit(cli, &out.to_json_pretty()),
                Format::Json => emit(cli, &out.to_json()),
            }
        }
        Command::Embed {
            file,
            witness,
            audit,
        } => embed(cli, &read_design(file)?, *witness, *audit),
        Command::Incidence { file } => {
            let m = read_design(file)?.incidence_matrix();
            match cli.format {
                Format::Text => emit(cli, &m.to_string()),
                Format::Json => emit(cli, &m.to_json()),
            }
        }
        Command::Smith { file } => {
            let text = read_input(file)?;
            let m = IntMatrix::from_json(&text)
                .with_context(|| format!("parsing matrix {}", file.display()))?;
            let sd = smith_normal_form(&m);
            match cli.format {
                Format::Text => {
                    let diag: Vec<String> = sd.diag.iter().map(ToString::to_string).collect();
                    emit(cli, &format!("invariant factors: {}", diag.join(" ")))
                }
                Format::Json => {
                    let parse = |m: &IntMatrix| -> anyhow::Result<Value> {
                        Ok(serde_json::from_str(&m.to_json())?)
                    };
                    let value = json!({
                        "diag": sd.diag.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "s": parse(&sd.s)?,
                        "u": parse(&sd.u)?,
                        "v": parse(&sd.v)?,
                    });
                    emit(cli, &serde_json::to_string(&value)?)
                }
            }
        }
        Command::Boolean(cmd) => boolean(cli, cmd, budget),
    }
}

fn embed(cli: &Cli, design: &Design, want_witness: bool, want_audit: bool) -> anyhow::Result<()> {
    let e = embedding_group(design);
    let witness = if want_witness {
        non_injectivity_witness(design)?
    } else {
        None
    };
    let audits = if want_audit {
        let params = verify_design(design, 2)?;
        Some((exponent_audit(design, &params)?, gram_audit(design, &params)?))
    } else {
        None
    };

    if cli.format == Format::Json {
        let mut value = json!({
            "group": serde_json::to_value(e.report())?,
            "images": e.images.iter().map(ToString::to_string).collect::<Vec<_>>(),
        });
        if want_witness {
            value["witness"] = match &witness {
                Some(w) => json!({
                    "i": w.i,
                    "j": w.j,
                    "coefficients": w.coefficients.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "norm": w.norm.to_string(),
                }),
                None => Value::Null,
            };
        }
        if let Some((exp, gram)) = &audits {
            value["audit"] = json!({
                "exponent": exp.exponent.to_string(),
                "bound": exp.bound.to_string(),
                "partition": exp.partition,
                "partition_bound": exp.partition_bound.as_ref().map(ToString::to_string),
                "gram_determinant": gram.determinant.to_string(),
                "symmetric_checked": gram.symmetric_checked,
            });
        }
        return emit(cli, &serde_json::to_string(&value)?);
    }

    let mut lines = vec![format!(
        "G_D ≅ {}, injective: {}",
        e.group,
        if e.injective { "yes" } else { "no" }
    )];
    for (i, img) in e.images.iter().enumerate() {
        lines.push(format!("  {} -> {img}", design.label(i)));
    }
    if want_witness {
        lines.push(match &witness {
            Some(w) => {
                let coeffs: Vec<String> = w.coefficients.iter().map(ToString::to_string).collect();
                format!(
                    "witness: points {} and {} collide, w = [{}], <wA,wA> = {}",
                    design.label(w.i),
                    design.label(w.j),
                    coeffs.join(", "),
                    w.norm
                )
            }
            None => "witness: none, the embedding is injective".to_string(),
        });
    }
    if let Some((exp, gram)) = &audits {
        lines.push(format!("exponent {} divides k(r-lambda) = {}", exp.exponent, exp.bound));
        if let Some(pb) = &exp.partition_bound {
            lines.push(format!("exponent {} divides r-lambda = {pb} (blocks partition the points)", exp.exponent));
        }
        lines.push(format!(
            "Gram identity holds, det = {}{}",
            gram.determinant,
            if gram.symmetric_checked { ", AAt = AtA" } else { "" }
        ));
    }
    emit(cli, &lines.join("\n"))
}

fn spec_from_args(args: &EnumerateArgs) -> anyhow::Result<BooleanDesignSpec> {
    let k = args.k;
    let need_n = || args.n.ok_or_else(|| usage("--n is required for this variant"));
    Ok(match args.variant {
        Variant::Field => {
            let q = args.q.ok_or_else(|| usage("--q is required for the field variant"))?;
            BooleanDesignSpec::field_of_order(q, k)?
        }
        Variant::Affine => BooleanDesignSpec::Affine { n: need_n()?, k },
        Variant::Projective => BooleanDesignSpec::Projective { n: need_n()?, k },
        Variant::Dependent => BooleanDesignSpec::Dependent { n: need_n()?, k },
    })
}

fn boolean(cli: &Cli, cmd: &BooleanCommand, budget: Budget) -> anyhow::Result<()> {
    match cmd {
        BooleanCommand::Enumerate(args) => {
            let spec = spec_from_args(args)?;
            let built = build_design(spec, budget)?;
            match built.verify()? {
                Some(params) => eprintln!("{spec}: {params}"),
                None => eprintln!("{spec}: no zero-sum blocks (degenerate family)"),
            }
            match cli.format {
                Format::Text => emit(cli, &built.design.to_json_pretty()),
                Format::Json => emit(cli, &built.design.to_json()),
            }
        }
        BooleanCommand::Counts { n, method } => counts(cli, *n, *method, budget),
        BooleanCommand::Irreducible { n, k } => {
            let c = irreducible_count(*n, *k, budget)?;
            match cli.format {
                Format::Text => emit(
                    cli,
                    &format!(
                        "irreducible zero-sum {}-blocks of GF(2)^{}: {}\n\
                         ordered independent {}-tuples: {}\n\
                         corrected formula: {} ({})",
                        c.k,
                        c.n,
                        c.oracle,
                        c.k,
                        c.product_formula,
                        c.corrected_formula,
                        if c.corrected_matches() { "matches" } else { "MISMATCH" }
                    ),
                ),
                Format::Json => emit(
                    cli,
                    &serde_json::to_string(&json!({
                        "n": c.n,
                        "k": c.k,
                        "oracle": c.oracle.to_string(),
                        "product_formula": c.product_formula.to_string(),
                        "corrected_formula": c.corrected_formula.to_string(),
                        "corrected_matches": c.corrected_matches(),
                    }))?,
                ),
            }
        }
    }
}

fn counts(cli: &Cli, n: u32, method: MethodArg, budget: Budget) -> anyhow::Result<()> {
    let methods: Vec<CountMethod> = match method {
        MethodArg::Brute => vec![CountMethod::Brute],
        MethodArg::ClosedForm => vec![CountMethod::ClosedForm],
        MethodArg::Macwilliams => vec![CountMethod::MacWilliams],
        MethodArg::All => vec![
            CountMethod::Brute,
            CountMethod::ClosedForm,
            CountMethod::MacWilliams,
        ],
    };
    let mut tables: Vec<(CountMethod, CountTable)> = Vec::new();
    for m in methods {
        match block_counts(n, m, budget) {
            Ok(t) => tables.push((m, t)),
            // with `all`, methods over budget are skipped
            Err(designlattice::Error::BudgetExceeded { .. }) if method == MethodArg::All => {}
            Err(e) => return Err(e.into()),
        }
    }
    let Some((_, first)) = tables.first() else {
        bail!("no counting method fits the budget for n = {n}");
    };
    for (m, t) in &tables[1..] {
        if t != first {
            let k = (0..first.b.len()).find(|&k| t.b[k] != first.b[k]).unwrap_or(0);
            return Err(anyhow!(designlattice::Error::audit(
                "count methods agree",
                format!("{} and {m} differ at k = {k}", tables[0].0),
            )));
        }
    }
    if let Some(k) = first.recurrence_violation() {
        return Err(anyhow!(designlattice::Error::audit(
            "count recurrence",
            format!("fails at k = {k}"),
        )));
    }
    match cli.format {
        Format::Json => emit(cli, &first.to_json()),
        Format::Text => {
            let names: Vec<String> = tables.iter().map(|(m, _)| m.to_string()).collect();
            let mut lines = vec![format!(
                "n = {n}, v = {}, methods: {}",
                first.v,
                names.join(", ")
            )];
            for (k, b) in first.b.iter().enumerate() {
                lines.push(format!("b_{k} = {b}"));
            }
            emit(cli, &lines.join("\n"))
        }
    }
}
