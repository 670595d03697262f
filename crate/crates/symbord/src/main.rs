//! Command-line frontend: symbols, invariants, families, order relations,
//! diffs, Hasse diagrams, and the verification suite.
//!
//! Output format defaults to a human-readable layout on a terminal and to
//! JSON when piped. Exit codes: 0 on success, 1 when a verification check
//! fails, 2 on usage errors (bad input, unknown names, exceeded bounds).

use std::io::IsTerminal;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symbord::bipartition::bipartitions;
use symbord::biporder::{omega, order_relation_ab, order_relation_dominance, order_relation_pi};
use symbord::error::Error;
use symbord::rep::{a_invariant, lusztig_families, PreceqLTable};
use symbord::symbol::{symbol_rows, SymbolMultiset};
use symbord::verify::{check_names, run_check, CheckOptions, CheckReport};
use symbord::{Bipartition, OrderRelation, WeightParams};

#[derive(Parser)]
#[command(
    name = "symbord",
    version,
    about = "Symbols, a-invariants, families, and order relations for weighted bipartitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the entry multiset, two-row symbol, invariants, and validity
    /// report of one bipartition.
    Symbol(SymbolArgs),
    /// Print the a-invariant and omega of one bipartition, or the table
    /// for every bipartition of a rank.
    Afun(AfunArgs),
    /// Print the partition of rank-n bipartitions into families.
    Families(FamiliesArgs),
    /// Emit an order relation on the bipartitions of a rank, optionally
    /// diffed against a second kind.
    Order(OrderArgs),
    /// Emit the Hasse diagram of an order relation: symmetric classes and
    /// covering edges.
    Hasse(HasseArgs),
    /// Compare two order kinds on the same ground set.
    Diff(DiffArgs),
    /// Run named verification checks, or the whole suite.
    Verify(VerifyArgs),
}

#[derive(Args, Clone, Copy)]
struct WeightArgs {
    /// Weight of the reflections in the symmetric-group part.
    #[arg(short, default_value_t = 1)]
    a: u64,
    /// Weight of the distinguished reflection.
    #[arg(short, default_value_t = 1)]
    b: u64,
}

impl WeightArgs {
    fn params(self) -> WeightParams {
        WeightParams::new(self.a, self.b)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Tsv,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// The symbol pre-order.
    Ab,
    /// The recursively induced pre-order.
    #[value(name = "L", alias = "l")]
    L,
    /// Componentwise dominance with shifted second components.
    Dominance,
    /// Dominance of the doubled one-row encodings.
    Pi,
}

#[derive(Args)]
#[command(after_help = "TSV columns: key<TAB>value, one line per field.")]
struct SymbolArgs {
    #[command(flatten)]
    weight: WeightArgs,
    /// Rank cross-check; must equal the size of the bipartition.
    #[arg(short)]
    n: Option<u64>,
    /// Shift level override; defaults to the smallest level that holds
    /// both rows.
    #[arg(long)]
    level: Option<u64>,
    #[arg(long)]
    format: Option<Format>,
    /// The bipartition, written as "lambda|mu" with dot-separated parts
    /// and "-" for the empty partition.
    #[arg(allow_hyphen_values = true)]
    bipartition: String,
}

#[derive(Args)]
#[command(after_help = "TSV columns: bipartition<TAB>a-invariant<TAB>omega.")]
struct AfunArgs {
    #[command(flatten)]
    weight: WeightArgs,
    /// Tabulate every bipartition of this rank instead of a single one.
    #[arg(short, conflicts_with = "bipartition")]
    n: Option<u64>,
    #[arg(long)]
    format: Option<Format>,
    #[arg(required_unless_present = "n", allow_hyphen_values = true)]
    bipartition: Option<String>,
}

#[derive(Args)]
#[command(after_help = "TSV columns: family index<TAB>bipartition, one line per member.")]
struct FamiliesArgs {
    #[command(flatten)]
    weight: WeightArgs,
    /// Rank of the bipartitions to group.
    #[arg(short)]
    n: u64,
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Args)]
#[command(
    after_help = "TSV columns: low<TAB>high, one line per non-reflexive related pair; \
with --diff: kind<TAB>low<TAB>high, one line per disagreeing pair."
)]
struct OrderArgs {
    #[command(flatten)]
    weight: WeightArgs,
    /// Rank of the ground set.
    #[arg(short)]
    n: u64,
    /// Which relation to build.
    #[arg(long, value_enum)]
    kind: Kind,
    /// Report the pairs on which this second kind disagrees instead of
    /// the relation itself.
    #[arg(long, value_enum)]
    diff: Option<Kind>,
    /// Rank cap for the recursively built kind.
    #[arg(long, default_value_t = 5)]
    bound: u64,
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Args)]
#[command(
    after_help = "TSV columns: lower class<TAB>upper class, one line per covering edge, \
class members comma-joined."
)]
struct HasseArgs {
    #[command(flatten)]
    weight: WeightArgs,
    /// Rank of the ground set.
    #[arg(short)]
    n: u64,
    /// Which relation to reduce.
    #[arg(long, value_enum)]
    kind: Kind,
    /// Rank cap for the recursively built kind.
    #[arg(long, default_value_t = 5)]
    bound: u64,
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Args)]
#[command(after_help = "TSV columns: kind<TAB>low<TAB>high, one line per disagreeing pair.")]
struct DiffArgs {
    #[command(flatten)]
    weight: WeightArgs,
    /// Rank of the ground set.
    #[arg(short)]
    n: u64,
    /// Rank cap for the recursively built kind.
    #[arg(long, default_value_t = 5)]
    bound: u64,
    #[arg(long)]
    format: Option<Format>,
    #[arg(value_enum)]
    left: Kind,
    #[arg(value_enum)]
    right: Kind,
}

#[derive(Args)]
#[command(after_help = "TSV columns: check<TAB>pass|fail<TAB>instances<TAB>point.")]
struct VerifyArgs {
    /// Weight override applied to every named check.
    #[arg(short)]
    a: Option<u64>,
    /// Weight override applied to every named check.
    #[arg(short)]
    b: Option<u64>,
    /// Rank bound override applied to every named check.
    #[arg(short)]
    n: Option<u64>,
    /// Run the whole registered suite.
    #[arg(long, conflicts_with = "checks")]
    all: bool,
    #[arg(long)]
    format: Option<Format>,
    /// Names of the checks to run; empty means the whole suite.
    checks: Vec<String>,
}

fn chosen(format: Option<Format>) -> Format {
    format.unwrap_or(if std::io::stdout().is_terminal() {
        Format::Pretty
    } else {
        Format::Json
    })
}

fn usage(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Symbol(args) => cmd_symbol(args),
        Command::Afun(args) => cmd_afun(args),
        Command::Families(args) => cmd_families(args),
        Command::Order(args) => cmd_order(args),
        Command::Hasse(args) => cmd_hasse(args),
        Command::Diff(args) => cmd_diff(args),
        Command::Verify(args) => return cmd_verify(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => usage(err),
    }
}

fn render_entries(entries: &[u64]) -> String {
    entries
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_symbol(args: SymbolArgs) -> Result<(), Error> {
    let params = args.weight.params();
    params.require_positive_a()?;
    let bp = Bipartition::parse(&args.bipartition)?;
    if let Some(n) = args.n {
        if n != bp.size() {
            return Err(Error::RankMismatch(format!(
                "-n {n} given, but {bp} has rank {}",
                bp.size()
            )));
        }
    }
    let level = match args.level {
        Some(level) => level,
        None => SymbolMultiset::minimal_level(params, &bp)?,
    };
    let z = SymbolMultiset::from_bipartition(params, &bp, level)?;
    let (top, bottom) = symbol_rows(params, &bp, level)?;
    let a_inv = z.a_invariant()?;
    let om = omega(params, &bp);
    let report = z.validate();
    match chosen(args.format) {
        Format::Json => {
            let value = json!({
                "bipartition": bp.to_string(),
                "a": params.a(),
                "b": params.b(),
                "rank": bp.size(),
                "level": level,
                "entries": z.entries(),
                "lambda_row": top,
                "mu_row": bottom,
                "a_invariant": a_inv,
                "omega": om,
                "strict": report.strict,
                "notes": report.notes,
            });
            println!("{value}");
        }
        Format::Tsv => {
            println!("bipartition\t{bp}");
            println!("entries\t{}", render_entries(z.entries()));
            println!("lambda_row\t{}", render_entries(&top));
            println!("mu_row\t{}", render_entries(&bottom));
            println!("a_invariant\t{a_inv}");
            println!("omega\t{om}");
            println!("strict\t{}", report.strict);
        }
        Format::Pretty | Format::Dot => {
            println!(
                "bipartition {bp}  (rank {}, a = {}, b = {})",
                bp.size(),
                params.a(),
                params.b()
            );
            println!("level {level}, entries {{{}}}", render_entries(z.entries()));
            let row = |cells: &[u64]| {
                cells
                    .iter()
                    .map(|e| format!("{e:>3}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!("  ({})", row(&top));
            println!("  ({})", row(&bottom));
            println!("a-invariant {a_inv}");
            println!("omega {om}");
            if report.strict {
                println!("validity: strict");
            } else {
                println!("validity: {}", report.notes.join("; "));
            }
        }
    }
    Ok(())
}

fn cmd_afun(args: AfunArgs) -> Result<(), Error> {
    let params = args.weight.params();
    let rows: Vec<Bipartition> = match (&args.bipartition, args.n) {
        (Some(text), _) => vec![Bipartition::parse(text)?],
        (None, Some(n)) => bipartitions(n),
        (None, None) => unreachable!("clap requires one of the two"),
    };
    let table: Vec<(String, i64, i64)> = rows
        .iter()
        .map(|bp| (bp.to_string(), a_invariant(params, bp), omega(params, bp)))
        .collect();
    match chosen(args.format) {
        Format::Json => {
            let items: Vec<Value> = table
                .iter()
                .map(|(label, a, om)| json!({"bipartition": label, "a_invariant": a, "omega": om}))
                .collect();
            println!("{}", Value::Array(items));
        }
        Format::Tsv => {
            for (label, a, om) in &table {
                println!("{label}\t{a}\t{om}");
            }
        }
        Format::Pretty | Format::Dot => {
            let width = table.iter().map(|(l, _, _)| l.len()).max().unwrap_or(0);
            for (label, a, om) in &table {
                println!("{label:<width$}  a = {a:<4} omega = {om}");
            }
        }
    }
    Ok(())
}

fn cmd_families(args: FamiliesArgs) -> Result<(), Error> {
    let params = args.weight.params();
    let families = lusztig_families(params, args.n);
    match chosen(args.format) {
        Format::Json => {
            let items: Vec<Value> = families
                .iter()
                .map(|family| {
                    let labels: Vec<String> = family.iter().map(Bipartition::to_string).collect();
                    json!({
                        "a_invariant": a_invariant(params, &family[0]),
                        "members": labels,
                    })
                })
                .collect();
            println!("{}", Value::Array(items));
        }
        Format::Tsv => {
            for (index, family) in families.iter().enumerate() {
                for bp in family {
                    println!("{index}\t{bp}");
                }
            }
        }
        Format::Pretty | Format::Dot => {
            let mut sorted: Vec<&Vec<Bipartition>> = families.iter().collect();
            sorted.sort_by_key(|family| a_invariant(params, &family[0]));
            for family in sorted {
                let members = family
                    .iter()
                    .map(Bipartition::to_string)
                    .collect::<Vec<_>>()
                    .join("  ");
                println!("a = {:<4} {members}", a_invariant(params, &family[0]));
            }
        }
    }
    Ok(())
}

fn build_relation(
    kind: Kind,
    params: WeightParams,
    n: u64,
    bound: u64,
) -> Result<OrderRelation, Error> {
    match kind {
        Kind::Ab => order_relation_ab(params, n),
        Kind::L => {
            if n > bound {
                return Err(Error::BoundExceeded(format!(
                    "rank {n} is above the cap {bound} for the recursive kind; raise --bound to accept the cost"
                )));
            }
            Ok(PreceqLTable::build(params, n).top().clone())
        }
        Kind::Dominance => Ok(order_relation_dominance(n)),
        Kind::Pi => order_relation_pi(params, n),
    }
}

fn print_relation(rel: &OrderRelation, format: Format) {
    match format {
        Format::Json => println!("{}", rel.to_json()),
        Format::Tsv => print!("{}", rel.to_tsv()),
        Format::Dot => print!("{}", rel.to_dot()),
        Format::Pretty => {
            println!(
                "{} on {} labels, {} related pairs",
                rel.name(),
                rel.len(),
                rel.pair_count()
            );
            for (i, j) in rel.pairs() {
                println!("  ({}) <= ({})", rel.labels()[i], rel.labels()[j]);
            }
        }
    }
}

fn print_diff(left: &OrderRelation, right: &OrderRelation, format: Format) -> Result<(), Error> {
    let diff = left.diff(right)?;
    match format {
        Format::Json => {
            let side = |pairs: &[(String, String)]| -> Vec<Value> {
                pairs.iter().map(|(x, y)| json!([x, y])).collect()
            };
            let value = json!({
                format!("only_{}", left.name()): side(&diff.only_left),
                format!("only_{}", right.name()): side(&diff.only_right),
            });
            println!("{value}");
        }
        Format::Tsv => {
            for (x, y) in &diff.only_left {
                println!("{}\t{x}\t{y}", left.name());
            }
            for (x, y) in &diff.only_right {
                println!("{}\t{x}\t{y}", right.name());
            }
        }
        Format::Pretty | Format::Dot => {
            if diff.is_empty() {
                println!("the relations agree on all pairs");
            }
            for (x, y) in &diff.only_left {
                println!("only in {}: ({x}) <= ({y})", left.name());
            }
            for (x, y) in &diff.only_right {
                println!("only in {}: ({x}) <= ({y})", right.name());
            }
        }
    }
    Ok(())
}

fn cmd_order(args: OrderArgs) -> Result<(), Error> {
    let params = args.weight.params();
    let format = chosen(args.format);
    let rel = build_relation(args.kind, params, args.n, args.bound)?;
    match args.diff {
        None => print_relation(&rel, format),
        Some(other) => {
            let rhs = build_relation(other, params, args.n, args.bound)?;
            print_diff(&rel, &rhs, format)?;
        }
    }
    Ok(())
}

fn cmd_hasse(args: HasseArgs) -> Result<(), Error> {
    let params = args.weight.params();
    let rel = build_relation(args.kind, params, args.n, args.bound)?;
    let (classes, edges) = rel.hasse();
    match chosen(args.format) {
        Format::Dot => print!("{}", rel.to_dot()),
        Format::Json => {
            let class_labels: Vec<Vec<String>> = classes
                .iter()
                .map(|class| class.iter().map(|&i| rel.labels()[i].clone()).collect())
                .collect();
            let value = json!({
                "classes": class_labels,
                "edges": edges.iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
            });
            println!("{value}");
        }
        Format::Tsv => {
            for &(u, v) in &edges {
                let name = |c: usize| {
                    classes[c]
                        .iter()
                        .map(|&i| rel.labels()[i].clone())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                println!("{}\t{}", name(u), name(v));
            }
        }
        Format::Pretty => {
            println!(
                "{}: {} classes, {} covering edges",
                rel.name(),
                classes.len(),
                edges.len()
            );
            for (c, class) in classes.iter().enumerate() {
                let members = class
                    .iter()
                    .map(|&i| rel.labels()[i].clone())
                    .collect::<Vec<_>>()
                    .join("  ");
                println!("  class {c}: {members}");
            }
            for &(u, v) in &edges {
                println!("  {u} -> {v}");
            }
        }
    }
    Ok(())
}

fn cmd_diff(args: DiffArgs) -> Result<(), Error> {
    let params = args.weight.params();
    let format = chosen(args.format);
    let left = build_relation(args.left, params, args.n, args.bound)?;
    let right = build_relation(args.right, params, args.n, args.bound)?;
    print_diff(&left, &right, format)
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let params = match (args.a, args.b) {
        (None, None) => None,
        (Some(a), Some(b)) => Some(WeightParams::new(a, b)),
        _ => return usage("-a and -b must be given together"),
    };
    let options = CheckOptions { params, n: args.n };
    let names: Vec<String> = if args.all || args.checks.is_empty() {
        check_names().iter().map(|s| s.to_string()).collect()
    } else {
        args.checks.clone()
    };
    let format = chosen(args.format);
    if format == Format::Dot {
        return usage("dot output applies to order and hasse only");
    }
    let mut reports: Vec<CheckReport> = Vec::new();
    for name in &names {
        match run_check(name, &options) {
            Ok(report) => reports.push(report),
            Err(err) => return usage(err),
        }
    }
    let mut all_passed = true;
    for report in &reports {
        all_passed &= report.passed;
        match format {
            Format::Json => println!("{}", report.to_json()),
            Format::Tsv => println!(
                "{}\t{}\t{}\t{}",
                report.name,
                if report.passed { "pass" } else { "fail" },
                report.instances,
                report.point
            ),
            _ => {
                println!("{}", report.human_line());
                for witness in &report.witnesses {
                    println!("    {witness}");
                }
            }
        }
    }
    if format == Format::Pretty {
        println!(
            "{} of {} checks passed",
            reports.iter().filter(|r| r.passed).count(),
            reports.len()
        );
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
