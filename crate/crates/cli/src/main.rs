//! `fanocalc`: command-line front end for the fanocalc library.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.

mod commands;
mod expr;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "fanocalc", version, about = "Exact intersection theory for Fano threefolds")]
pub struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Classification table to use instead of the embedded one.
    #[arg(long, global = true, value_name = "PATH")]
    pub db: Option<PathBuf>,
    /// Run batch loops on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Schubert calculus on Grassmannians.
    #[command(subcommand)]
    Schubert(SchubertCmd),
    /// Chern classes of bundle operations.
    #[command(subcommand)]
    Chern(ChernCmd),
    /// Riemann-Roch and Fano invariants.
    #[command(subcommand)]
    Rr(RrCmd),
    /// Weighted projective spaces.
    #[command(subcommand)]
    Wps(WpsCmd),
    /// The Fano threefold classification table.
    #[command(subcommand)]
    Db(DbCmd),
    /// Degree bounds for morphisms onto Fano threefolds.
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Worked enumerative chains.
    #[command(subcommand)]
    Report(ReportCmd),
}

#[derive(Debug, Args)]
pub struct GrArg {
    /// Grassmannian of projective `a`-planes in `P^b`, e.g. `1,4` for lines in `P^4`.
    #[arg(long, value_name = "A,B", value_parser = parse_gr)]
    pub gr: (usize, usize),
}

fn parse_gr(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected `a,b`")?;
    let a = a.trim().parse().map_err(|_| format!("bad integer `{a}`"))?;
    let b = b.trim().parse().map_err(|_| format!("bad integer `{b}`"))?;
    Ok((a, b))
}

/// Comma-separated integers as one argument value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<i64>);

fn parse_i64_list(s: &str) -> Result<IntList, String> {
    s.split(',').map(|t| t.trim().parse().map_err(|_| format!("bad integer `{t}`"))).collect::<Result<_, _>>().map(IntList)
}

#[derive(Debug, Subcommand)]
pub enum SchubertCmd {
    /// Product of Schubert expressions.
    Mul {
        #[command(flatten)]
        gr: GrArg,
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Multiply an expression by the special class `s[a]`.
    Pieri {
        #[command(flatten)]
        gr: GrArg,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        expr: String,
    },
    /// Degree of the point-class coefficient.
    Integrate {
        #[command(flatten)]
        gr: GrArg,
        #[arg(long)]
        expr: String,
    },
    /// Determinantal expansion of `s[lambda]` in special classes.
    Giambelli {
        #[command(flatten)]
        gr: GrArg,
        /// Comma-separated partition, e.g. `2,1`.
        partition: String,
    },
}

/// The bundle to operate on: `U*` on a Grassmannian, a sum of line bundles
/// on `P^n`, or a generic bundle of the given rank.
#[derive(Debug, Args)]
pub struct BundleArgs {
    /// Dual tautological subbundle on this Grassmannian.
    #[arg(long, value_name = "A,B", value_parser = parse_gr, conflicts_with_all = ["pn", "rank"])]
    pub gr: Option<(usize, usize)>,
    /// Projective space dimension for `--split`.
    #[arg(long, requires = "split", conflicts_with = "rank")]
    pub pn: Option<usize>,
    /// Degrees of the line bundle summands, e.g. `1,1,-2`.
    #[arg(long, value_parser = parse_i64_list, allow_hyphen_values = true, requires = "pn")]
    pub split: Option<IntList>,
    /// Generic bundle of this rank with Chern classes `c1..cr`.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Degree truncation for generic bundles.
    #[arg(long)]
    pub trunc: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum ChernCmd {
    /// Symmetric power.
    Sym {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long)]
        k: usize,
    },
    /// Exterior power.
    Ext {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long)]
        k: usize,
    },
    /// Dual bundle
    Dual {
        #[command(flatten)]
        bundle: BundleArgs,
    },
    /// Tensor with a line bundle: `--by t` means `O(t)` or `t s[1]`; generic
    /// bundles twist by a formal class `t`.
    Twist {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long, allow_negative_numbers = true)]
        by: Option<i64>,
    },
    /// Top Chern class, integrated when the ring has a point class.
    Top {
        #[command(flatten)]
        bundle: BundleArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum RrCmd {
    /// `chi(D)` on a surface.
    Chi2 {
        #[arg(long, allow_negative_numbers = true)]
        dd: i64,
        #[arg(long, allow_negative_numbers = true)]
        dk: i64,
        #[arg(long, allow_negative_numbers = true)]
        kk: i64,
        #[arg(long, allow_negative_numbers = true)]
        c2: i64,
    },
    /// `chi(D)` on a threefold, from intersection numbers or `--fano r,h3,m`.
    Chi3 {
        /// `D = m H` on a Fano threefold of index `r` and degree `h3`.
        #[arg(long, value_name = "R,H3,M", value_parser = parse_i64_list, allow_hyphen_values = true,
              conflicts_with_all = ["d3", "kd2", "kkd", "c2d"])]
        fano: Option<IntList>,
        #[arg(long, allow_negative_numbers = true)]
        d3: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        kd2: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        kkd: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        c2d: Option<i64>,
        #[arg(long, allow_negative_numbers = true, default_value_t = 24)]
        c1c2: i64,
    },
    /// Numerical invariants of a Fano threefold with cyclic Picard group.
    FanoInvariants {
        #[arg(long)]
        index: i64,
        #[arg(long)]
        h3: i64,
        #[arg(long)]
        b3: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum WpsCmd {
    /// Well-formed representative of the weights
    Normalize { weights: String },
    /// Maximal singular strata.
    Sing { weights: String },
    /// Degree of the canonical sheaf.
    Canonical { weights: String },
    /// Whether `O(m)` is generated on the smooth locus.
    Generated {
        weights: String,
        #[arg(long)]
        m: i64,
    },
    /// Twist making the cotangent sheaf generated.
    Lmin { weights: String },
    /// Weighted model of a double cover.
    Model {
        /// `p3`, `projective-space:N`, `veronese-cone` or `quadric-4`.
        #[arg(long)]
        base: String,
        /// Branch divisor has weighted degree `2k`.
        #[arg(long)]
        k: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum DbCmd {
    /// One record, by case-insensitive name
    Lookup { name: String },
    /// Every record in table order
    List,
    /// Check every record of the table against the invariants.
    Validate,
    /// Normal bundle types of lines (and conics for index one).
    NormalBundles {
        #[arg(long)]
        index: i64,
        #[arg(long)]
        not_very_ample: bool,
    },
}

/// Source threefold `X`: a table entry or explicit invariants.
#[derive(Debug, Args)]
pub struct SourceArgs {
    #[arg(long, conflicts_with_all = ["h3x", "kappa", "c2h", "c3"])]
    pub source: Option<String>,
    /// `H_X^3`
    #[arg(long)]
    pub h3x: Option<i64>,
    /// `K_X = kappa H_X`
    #[arg(long, allow_negative_numbers = true)]
    pub kappa: Option<i64>,
    /// `c_2(X) . H_X`
    #[arg(long, allow_negative_numbers = true)]
    pub c2h: Option<i64>,
    /// `c_3(Omega_X)`
    #[arg(long, allow_negative_numbers = true)]
    pub c3: Option<i64>,
    #[arg(long)]
    pub not_very_ample: bool,
}

#[derive(Debug, Args)]
pub struct TargetArgs {
    /// Table name of the target `Y`.
    #[arg(long)]
    pub target: String,
    /// Twist `l`; defaults to the generation bound for `Omega_Y`.
    #[arg(long, allow_negative_numbers = true)]
    pub twist: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum BoundCmd {
    /// `E(Y, l)` and the boundedness verdict.
    #[command(name = "E")]
    E {
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Boundedness verdict only
    Verdict {
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Largest multiplier allowed by the Chern inequality.
    MaxM {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        target: TargetArgs,
    },
    /// `m^3 H_X^3 / H_Y^3`.
    Degree {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        h3x: i64,
        #[arg(long)]
        h3y: i64,
    },
    /// Can the special surface lie in the ramification divisor?
    Ramification {
        #[arg(long)]
        ry: i64,
        #[arg(long)]
        k: i64,
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Multiplier bound from `T_X(j)` generated.
    NegLines {
        #[arg(long, conflicts_with = "hypersurface_degree", required_unless_present = "hypersurface_degree")]
        j: Option<u64>,
        /// Smooth hypersurface degree `d`, giving `j = d - 2`.
        #[arg(long)]
        hypersurface_degree: Option<i64>,
    },
    /// Multipliers allowed by normal bundles of lines and conics.
    FeasibleM {
        #[arg(long)]
        rx: i64,
        #[arg(long)]
        ry: i64,
        #[arg(long)]
        not_very_ample: bool,
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Degree bound for morphisms onto the quadric threefold.
    Quadric {
        #[command(flatten)]
        source: SourceArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReportCmd {
    /// Lines on a smooth cubic threefold, from Chern classes to `D ~ 30H`.
    LinesCubic,
}

/// Successful command output.
pub struct Outcome {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub text: String,
    pub provenance: Vec<&'static str>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] fanocalc::Error),
}

impl From<expr::ExprError> for CliError {
    fn from(e: expr::ExprError) -> Self {
        match e {
            expr::ExprError::Syntax { .. } => CliError::Usage(e.to_string()),
            expr::ExprError::Domain(d) => CliError::Domain(d),
        }
    }
}

/// Writes one line to stdout, ignoring a closed pipe.
fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let name = commands::name(&cli.command);
    match commands::run(&cli) {
        Ok(out) => {
            if cli.json {
                let doc = json!({
                    "command": out.command,
                    "inputs": out.inputs,
                    "status": "ok",
                    "result": out.result,
                    "provenance": out.provenance,
                });
                emit(&doc.to_string());
            } else {
                emit(&out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = match e {
                CliError::Usage(_) => 2,
                CliError::Domain(_) => 1,
            };
            if cli.json {
                let doc = json!({
                    "command": name,
                    "status": "error",
                    "message": e.to_string(),
                    "provenance": Vec::<&str>::new(),
                });
                emit(&doc.to_string());
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
