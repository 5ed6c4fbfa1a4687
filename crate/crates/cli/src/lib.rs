//! The `solids` command line.
//!
//! Exit codes: 0 on success, 1 when a verified identity fails, 2 on usage or
//! evaluation errors.

pub mod expr;
mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;
use solids_core::coeff;
use solids_core::number_theory::factor_report;
use solids_core::realization::{
    difference_plan, fig4_plan, realize1, segment_literal, standard_plan2, svg_chain1, svg_plan2,
    tetra_slabs, Fill, PlacementPlan, SvgOptions,
};
use solids_core::ring::q2_partial_sum;
use solids_core::simplex_nd::{worpitzky_check, EulerianTable};

pub use verify::{Identity, IdentityRange};

#[derive(Debug, Parser)]
#[command(
    name = "solids",
    version,
    about = "Exact arithmetic of scaled simplices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression such as "3*<2> - 3*<1>" and print the element as JSON.
    Eval {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        dim: u8,
        /// Read plain literals as `<n>_0` (with the A0 coordinate).
        #[arg(long)]
        extended: bool,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Check an identity over every argument tuple in a range.
    Verify {
        #[arg(long, value_enum)]
        identity: Identity,
        /// Inclusive range `A..B`.
        #[arg(long, allow_hyphen_values = true)]
        range: IdentityRange,
        /// Check a deliberately broken variant instead; it must fail.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Search for a composite witness of Z and recover its factors.
    Factor { z: u64 },
    /// Eulerian numbers A(m, k) and slice volumes V(m, k).
    Eulerian {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// Both summation forms of Worpitzky's identity at one (n, m).
    Worpitzky {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        n: BigInt,
    },
    /// Draw a placement plan as SVG.
    Render {
        #[arg(long, value_enum)]
        plan: PlanKind,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long)]
        l: Option<i64>,
        /// Fill of the triangles in the fig4 plan.
        #[arg(long, value_enum, default_value_t = FillArg::Closed)]
        fill: FillArg,
        /// Output file, `-` for standard output.
        #[arg(long)]
        out: PathBuf,
        /// Unit edge length in pixels.
        #[arg(long, default_value_t = 40.0)]
        unit: f64,
        /// Fill color for positive cells
        #[arg(long)]
        positive_color: Option<String>,
        /// Fill color for negative cells
        #[arg(long)]
        negative_color: Option<String>,
        /// Stroke color for open edges and vertices
        #[arg(long)]
        open_color: Option<String>,
        /// Color of point markers
        #[arg(long)]
        point_color: Option<String>,
    },
    /// Partial sums of the series 3^(j-1) <-1/2^j>.
    Series {
        #[arg(long)]
        terms: u32,
        #[arg(long)]
        json: bool,
    },
    /// Numbers of <1>, <D1> and <e1> slabs in the tetrahedron <n>.
    Slabs {
        #[arg(long)]
        n: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PlanKind {
    /// The closed triangle <n>_0 from unit pieces (--n, default 3).
    Standard2,
    /// The trapezoid <n> - <k> (--n, --k).
    Difference,
    /// <n+k+l> from three overlapping corners (--n, --k, --l, --fill).
    Fig4,
    /// The segment <n>_10; open and negated for negative n (--n).
    Segment,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FillArg {
    Closed,
    Open,
    Faces,
}

impl From<FillArg> for Fill {
    fn from(f: FillArg) -> Self {
        match f {
            FillArg::Closed => Fill::Closed,
            FillArg::Open => Fill::Open,
            FillArg::Faces => Fill::Faces,
        }
    }
}

enum Failure {
    /// A checked identity did not hold.
    Verification(String),
    Usage(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn required(name: &str, v: Option<i64>) -> Result<i64, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("this plan needs --{name}")))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Eval {
            dim,
            extended,
            expr,
        } => {
            let ctx = expr::Context {
                dim: dim.into(),
                extended,
            };
            let value = expr::parse(&expr)?.to_combination(ctx)?.eval()?;
            writeln!(out, "{}", value.to_json_string())?;
        }
        Command::Verify {
            identity,
            range,
            inject_fault,
        } => {
            let report = verify::run(identity, range, inject_fault)?;
            writeln!(out, "{}", report.summary())?;
            if !report.passed() {
                return Err(Failure::Verification(format!(
                    "{} does not hold",
                    identity.name()
                )));
            }
        }
        Command::Factor { z } => {
            writeln!(out, "{}", serde_json::to_string(&factor_report(z)?)?)?;
        }
        Command::Eulerian { m, json } => {
            let table = EulerianTable::new(m)?;
            if json {
                writeln!(out, "{}", table.to_json_rows())?;
            } else {
                write!(out, "{table}")?;
            }
        }
        Command::Worpitzky { m, n } => {
            let check = worpitzky_check(&n, m)?;
            let holds = check.holds();
            let report = json!({
                "n": check.n.to_string(),
                "m": m,
                "binomial_form": check.binomial_form.to_string(),
                "falling_form": check.falling_form.to_string(),
                "power": check.power.to_string(),
                "holds": holds,
            });
            writeln!(out, "{report}")?;
            if !holds {
                return Err(Failure::Verification(format!(
                    "Worpitzky forms disagree at n = {n}, m = {m}"
                )));
            }
        }
        Command::Render {
            plan,
            n,
            k,
            l,
            fill,
            out: path,
            unit,
            positive_color,
            negative_color,
            open_color,
            point_color,
        } => {
            if !(unit.is_finite() && unit > 0.0) {
                return Err(Failure::Usage(format!(
                    "--unit must be positive, got {unit}"
                )));
            }
            let mut opts = SvgOptions {
                unit,
                ..SvgOptions::default()
            };
            for (slot, v) in [
                (&mut opts.positive, positive_color),
                (&mut opts.negative, negative_color),
                (&mut opts.open, open_color),
                (&mut opts.point, point_color),
            ] {
                if let Some(v) = v {
                    *slot = v;
                }
            }
            let svg = match plan {
                PlanKind::Standard2 => svg_plan2(&standard_plan2(n.unwrap_or(3))?, &opts)?,
                PlanKind::Difference => svg_plan2(
                    &difference_plan(required("n", n)?, required("k", k)?)?,
                    &opts,
                )?,
                PlanKind::Fig4 => svg_plan2(
                    &fig4_plan(
                        required("n", n)?,
                        required("k", k)?,
                        required("l", l)?,
                        fill.into(),
                    )?,
                    &opts,
                )?,
                PlanKind::Segment => {
                    let plan = PlacementPlan {
                        pieces: vec![segment_literal(required("n", n)?, 0)],
                    };
                    svg_chain1(&realize1(&plan)?, &opts)
                }
            };
            if path.as_os_str() == "-" {
                out.write_all(svg.as_bytes())?;
            } else {
                std::fs::write(&path, svg)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
        }
        Command::Series { terms, json } => {
            let mut rows = Vec::new();
            for t in 1..=terms {
                let v = q2_partial_sum(t)?;
                rows.push((
                    t,
                    coeff::format(&v.coeffs()[0]),
                    coeff::format(&v.coeffs()[1]),
                ));
            }
            if json {
                let rows: Vec<_> = rows
                    .iter()
                    .map(|(t, a2, a1)| json!({"terms": t, "a2": a2, "a1": a1}))
                    .collect();
                writeln!(out, "{}", serde_json::Value::Array(rows))?;
            } else {
                let w2 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max(2);
                let w1 = rows.iter().map(|r| r.2.len()).max().unwrap_or(0).max(2);
                writeln!(out, "{:>5}  {:>w2$}  {:>w1$}", "N", "A2", "A1")?;
                for (t, a2, a1) in &rows {
                    writeln!(out, "{t:>5}  {a2:>w2$}  {a1:>w1$}")?;
                }
            }
        }
        Command::Slabs { n } => {
            let (unit, d1, e1) = tetra_slabs(n)?;
            writeln!(out, "{}", json!({"n": n, "unit": unit, "d1": d1, "e1": e1}))?;
        }
    }
    Ok(())
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
