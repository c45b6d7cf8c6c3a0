use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fone_rep::commands::{self, Caps};
use fone_rep::json::{group_from_json, monoid_from_json, parse_text, render, rep_from_json};
use fone_rep::CliError;
use serde_json::Value;

const SCHEMAS: &str = "\
JSON formats (all output uses sorted keys):
  group     list of cyclic orders, e.g. [2,2]; [] is the trivial group
  element   list of residues, one per cyclic factor
  matrix    {\"rows\": m, \"cols\": n, \"entries\": [null | {\"row\": i, \"g\": [..]}, ..]}
            entries indexed by column, rows 1-based
  monoid    {\"group\": [..], \"basis\": [\"1\", ..], \"one\": \"1\",
             \"mult\": [{\"l\": a, \"r\": b, \"res\": null | {\"g\": [..], \"b\": c}}, ..]}
            every ordered pair of basis names exactly once
  rep       {\"dim\": d, \"action\": {\"<basis name>\": [matrix entries], ..}}
  order     [[a, b], ..] meaning a <= b, closed reflexively and transitively;
            elements are written 0, a basis name, or [residues]·name
  quiver    {\"vertices\": [..], \"arrows\": [{\"name\", \"source\", \"target\"}],
             \"relations\": [{\"lhs\": [arrows], \"rhs\": null | {\"vertex\": v} | {\"path\": [arrows]}}]}
            paths read left to right: ab is a then b
  subgroup  for induce: list of element names inside the maximal subgroup

Exit codes: 0 ok, 1 I/O error, 2 validation failure (witness on stderr), 3 cap exceeded.";

#[derive(Parser)]
#[command(name = "fone-rep", version, about = "Representations of finite G-linear monoids", after_help = SCHEMAS)]
struct Cli {
    /// Largest representation dimension to search.
    #[arg(long, global = true, default_value_t = 4)]
    max_dim: usize,
    /// Largest maximal subgroup order to handle.
    #[arg(long, global = true, default_value_t = fone_core::cmp::GROUP_ORDER_CAP)]
    max_subgroup_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// J-classes, flags, idempotents, maximal subgroups, semisimplicity and simples.
    Analyze { monoid: PathBuf },
    /// Emit a monoid JSON.
    Make {
        #[command(subcommand)]
        kind: MakeKind,
    },
    /// Krull-Schmidt summands and the Jordan-Holder factor multiset.
    Decompose { monoid: PathBuf, rep: PathBuf },
    /// Validate a representation.
    CheckRep { monoid: PathBuf, rep: PathBuf },
    /// All simple representations: apex, dimension and iso key.
    Simples { monoid: PathBuf },
    /// Semisimplicity verdict with a witness when negative.
    Semisimple { monoid: PathBuf },
    /// Induce the coset representation of a subgroup of the maximal subgroup at an idempotent.
    Induce {
        monoid: PathBuf,
        #[arg(long)]
        idempotent: String,
        #[arg(long)]
        subgroup: PathBuf,
    },
    /// The representation phi_H of I_n(G) for a normal subgroup H of S_n.
    PhiH {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "[]")]
        group: String,
        /// 1, An, Sn, V4 (n = 4) with n spelled out, or a JSON list of 1-based permutations.
        #[arg(long)]
        subgroup: String,
    },
    /// Validate an ordered monoid; without an order file, the natural order on I_n(G).
    OrderedCheck { monoid: PathBuf, order: Option<PathBuf> },
    /// Whether a representation sends joins to joins.
    RespectsJoins {
        monoid: PathBuf,
        rep: PathBuf,
        #[arg(long)]
        order: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MakeKind {
    /// The symmetric inverse monoid I_n(G).
    In {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "[]")]
        group: String,
    },
    /// The null monoid on n basis elements plus 1.
    Null {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "[]")]
        group: String,
    },
    /// The path monoid of an acyclic quiver with relations.
    Path {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long, default_value = "[]")]
        group: String,
    },
}

fn read(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_text(&text)
}

fn group(text: &str) -> Result<fone_core::PointedGroup, CliError> {
    group_from_json(&parse_text(text)?)
}

fn run(cli: Cli) -> Result<Value, CliError> {
    let caps = Caps { max_dim: cli.max_dim, max_subgroup_order: cli.max_subgroup_order };
    let monoid = |p: &Path| monoid_from_json(&read(p)?);
    match cli.command {
        Command::Analyze { monoid: m } => commands::analyze(&monoid(&m)?, caps),
        Command::Make { kind } => match kind {
            MakeKind::In { n, group: g } => commands::make_in(n, group(&g)?),
            MakeKind::Null { n, group: g } => commands::make_null(n, group(&g)?),
            MakeKind::Path { quiver, group: g } => commands::make_path(&read(&quiver)?, group(&g)?),
        },
        Command::Decompose { monoid: m, rep } => {
            let m = monoid(&m)?;
            Ok(commands::decompose(&rep_from_json(&m, &read(&rep)?)?))
        }
        Command::CheckRep { monoid: m, rep } => {
            let m = monoid(&m)?;
            Ok(commands::check_rep(&rep_from_json(&m, &read(&rep)?)?))
        }
        Command::Simples { monoid: m } => commands::simples(&monoid(&m)?, caps),
        Command::Semisimple { monoid: m } => commands::semisimple(&monoid(&m)?, caps),
        Command::Induce { monoid: m, idempotent, subgroup } => {
            commands::induce_coset(&monoid(&m)?, &idempotent, &read(&subgroup)?, caps)
        }
        Command::PhiH { n, group: g, subgroup } => commands::phi_h(n, group(&g)?, &subgroup),
        Command::OrderedCheck { monoid: m, order } => {
            let m = monoid(&m)?;
            let order = order.map(|p| read(&p)).transpose()?;
            Ok(commands::ordered_check(&commands::resolve_order(&m, order.as_ref())?))
        }
        Command::RespectsJoins { monoid: m, rep, order } => {
            let m = monoid(&m)?;
            let v = rep_from_json(&m, &read(&rep)?)?;
            let order = order.map(|p| read(&p)).transpose()?;
            commands::respects_joins(&commands::resolve_order(&m, order.as_ref())?, &v)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(v) => {
            print!("{}", render(&v));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprint!("{}", render(&e.to_json()));
            ExitCode::from(e.exit_code())
        }
    }
}
