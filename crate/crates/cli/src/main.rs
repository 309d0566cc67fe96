//! Command-line surface for the fold library.
//!
//! Exit codes: 0 on success, 1 when any verification check fails (or the
//! oracle comparison exceeds tolerance), 2 on usage errors.

mod svg;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use haga_core::{
    approx_build, case_coverage, compare, squares_from_triangle, sweep, verify_at, CheckStatus,
    HagaConfig, Rat, RightTriangleFrame, VerificationReport,
};

const ORACLE_TOLERANCE: f64 = 1e-9;

fn parse_rat(s: &str) -> Result<Rat, String> {
    Rat::from_str(s).map_err(|e| e.to_string())
}

#[derive(Parser)]
#[command(
    name = "haga",
    version,
    about = "Exact verification and rendering of generalized Haga fold configurations",
    after_help = "Rationals are written P or P/Q (no decimals), e.g. --e -7/3."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamArgs {
    /// Square side length d (positive rational P/Q)
    #[arg(long, value_parser = parse_rat)]
    d: Rat,
    /// Signed ordinate of E on the line DA (rational P/Q)
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    e: Rat,
}

#[derive(Subcommand)]
enum Command {
    /// Print the case (h1..h7) of the configuration
    Classify(ParamArgs),
    /// Print the full configuration as JSON
    Build {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run all 16 checks on one configuration
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        /// Also compare against the floating-point oracle at 1e-9
        #[arg(long)]
        oracle: bool,
        /// Write the report as JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Verify a whole grid of e values for a fixed d
    Sweep {
        /// Square side length d (positive rational P/Q)
        #[arg(long, value_parser = parse_rat)]
        d: Rat,
        /// Comma-separated rational e values
        #[arg(long = "e-list", value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_rat)]
        e_list: Option<Vec<Rat>>,
        /// Grid start (requires --e-to and --steps)
        #[arg(long = "e-from", value_parser = parse_rat, allow_hyphen_values = true)]
        e_from: Option<Rat>,
        /// Grid end
        #[arg(long = "e-to", value_parser = parse_rat, allow_hyphen_values = true)]
        e_to: Option<Rat>,
        /// Number of grid intervals (the grid has steps + 1 points)
        #[arg(long)]
        steps: Option<u32>,
        /// Write all reports as a JSON array to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Render a configuration as SVG
    Figure {
        #[arg(long, value_parser = parse_rat)]
        d: Option<Rat>,
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        e: Option<Rat>,
        /// Comma-separated circle names (delta, alpha, beta, gamma, eps1..eps6)
        #[arg(long, value_delimiter = ',')]
        circles: Option<Vec<String>>,
        /// Use a stored preset (h1..h7) instead of --d/--e/--circles
        #[arg(long = "paper-figure")]
        paper_figure: Option<String>,
        /// Output SVG path
        #[arg(long)]
        out: PathBuf,
    },
    /// Construct the four squares whose fold reproduces a given right triangle
    ConstructSquares {
        /// The two legs as rationals, e.g. --legs 3,4 (hypotenuse must be rational)
        #[arg(long, value_delimiter = ',', value_parser = parse_rat)]
        legs: Vec<Rat>,
    },
}

fn usage_error(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    2
}

fn check_d(d: &Rat) -> Result<(), u8> {
    if d.is_positive() {
        Ok(())
    } else {
        Err(usage_error("--d must be a positive rational"))
    }
}

fn print_report(report: &VerificationReport) {
    println!("d = {}, e = {}, case {}", report.d, report.e, report.case);
    for entry in &report.checks {
        match &entry.status {
            CheckStatus::Pass => println!("  {:<18} pass", entry.id.to_string()),
            CheckStatus::Fail(witness) => {
                println!("  {:<18} FAIL (residue {witness})", entry.id.to_string())
            }
            CheckStatus::NotApplicable(reason) => {
                println!("  {:<18} n/a  ({reason})", entry.id.to_string())
            }
        }
    }
}

fn summary_line(report: &VerificationReport) -> String {
    let na = report
        .checks
        .iter()
        .filter(|c| matches!(c.status, CheckStatus::NotApplicable(_)))
        .count();
    format!(
        "e = {} case {}: {} pass, {} fail, {} n/a",
        report.e,
        report.case,
        report.pass_count(),
        report.fail_count(),
        na
    )
}

fn exit_code_for_reports(reports: &[VerificationReport]) -> u8 {
    u8::from(reports.iter().any(VerificationReport::has_fail))
}

fn write_json(path: &PathBuf, value: &impl serde::Serialize) -> Result<(), u8> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    std::fs::write(path, text + "\n").map_err(|e| usage_error(&format!("cannot write {path:?}: {e}")))
}

fn run_verify(params: &ParamArgs, oracle: bool, json: Option<&PathBuf>) -> Result<u8, u8> {
    check_d(&params.d)?;
    let report = verify_at(&params.d, &params.e).map_err(|e| usage_error(&e.to_string()))?;
    print_report(&report);
    if let Some(path) = json {
        write_json(path, &report)?;
    }
    let mut code = exit_code_for_reports(std::slice::from_ref(&report));
    if oracle {
        match approx_build(params.d.to_f64(), params.e.to_f64()) {
            Ok(approx) => {
                let exact = HagaConfig::build(params.d.clone(), params.e.clone())
                    .map_err(|e| usage_error(&e.to_string()))?;
                match compare(&exact, &approx) {
                    Ok(err) if err <= ORACLE_TOLERANCE => {
                        println!("oracle: max |exact - approx| = {err:.3e} (<= {ORACLE_TOLERANCE:.0e})");
                    }
                    Ok(err) => {
                        println!("oracle: max |exact - approx| = {err:.3e} EXCEEDS {ORACLE_TOLERANCE:.0e}");
                        code = 1;
                    }
                    Err(e) => {
                        println!("oracle: comparison failed: {e}");
                        code = 1;
                    }
                }
            }
            Err(e) => println!("oracle: skipped ({e})"),
        }
    }
    Ok(code)
}

fn sweep_grid(
    e_list: Option<Vec<Rat>>,
    e_from: Option<Rat>,
    e_to: Option<Rat>,
    steps: Option<u32>,
) -> Result<Vec<Rat>, u8> {
    match (e_list, e_from, e_to, steps) {
        (Some(list), None, None, None) => {
            if list.is_empty() {
                Err(usage_error("--e-list must not be empty"))
            } else {
                Ok(list)
            }
        }
        (None, Some(from), Some(to), Some(steps)) => {
            if steps == 0 {
                return Err(usage_error("--steps must be at least 1"));
            }
            let n = Rat::from_int(steps as i64);
            let span = &to - &from;
            Ok((0..=steps)
                .map(|k| &from + &(&span * &Rat::from_int(k as i64) / &n))
                .collect())
        }
        _ => Err(usage_error(
            "provide either --e-list or all of --e-from, --e-to, --steps",
        )),
    }
}

fn run(cli: Cli) -> Result<u8, u8> {
    match cli.command {
        Command::Classify(params) => {
            check_d(&params.d)?;
            let case = haga_core::classify(&params.d, &params.e)
                .map_err(|e| usage_error(&e.to_string()))?;
            println!("{case}");
            Ok(0)
        }
        Command::Build { params } => {
            check_d(&params.d)?;
            let cfg = HagaConfig::build(params.d, params.e)
                .map_err(|e| usage_error(&e.to_string()))?;
            println!(
                "{}",
                serde_json::to_string_pretty(&cfg.document()).expect("serializable")
            );
            Ok(0)
        }
        Command::Verify { params, oracle, json } => run_verify(&params, oracle, json.as_ref()),
        Command::Sweep {
            d,
            e_list,
            e_from,
            e_to,
            steps,
            json,
        } => {
            check_d(&d)?;
            let grid = sweep_grid(e_list, e_from, e_to, steps)?;
            let reports = sweep(&d, &grid).map_err(|e| usage_error(&e.to_string()))?;
            for report in &reports {
                println!("{}", summary_line(report));
            }
            let coverage = case_coverage(&reports);
            let cases: Vec<String> = coverage.iter().map(|c| c.to_string()).collect();
            println!("coverage: {} ({} configurations)", cases.join(" "), reports.len());
            if let Some(path) = json {
                write_json(&path, &reports)?;
            }
            Ok(exit_code_for_reports(&reports))
        }
        Command::Figure {
            d,
            e,
            circles,
            paper_figure,
            out,
        } => {
            let spec = match (paper_figure, d, e) {
                (Some(name), None, None) => svg::preset(&name)
                    .ok_or_else(|| usage_error(&format!("unknown preset {name:?} (expected h1..h7)")))?,
                (None, Some(d), Some(e)) => {
                    check_d(&d)?;
                    svg::FigureSpec {
                        d,
                        e,
                        circles: circles.unwrap_or_else(|| vec!["delta".to_string()]),
                    }
                }
                _ => {
                    return Err(usage_error(
                        "provide either --paper-figure or both --d and --e",
                    ))
                }
            };
            let rendered = svg::render(&spec).map_err(|e| usage_error(&e))?;
            std::fs::write(&out, rendered)
                .map_err(|e| usage_error(&format!("cannot write {out:?}: {e}")))?;
            println!("wrote {}", out.display());
            Ok(0)
        }
        Command::ConstructSquares { legs } => {
            let [p, q] = legs.as_slice() else {
                return Err(usage_error("--legs expects exactly two rationals, e.g. 3,4"));
            };
            let triangle = RightTriangleFrame::from_legs(p.clone(), q.clone())
                .map_err(|e| usage_error(&format!("invalid legs: {e}")))?;
            let squares = squares_from_triangle(&triangle)
                .map_err(|e| usage_error(&e.to_string()))?;
            // round-trip: rebuilding each fold must reproduce the triangle
            let mut entries = Vec::new();
            for sq in &squares {
                let cfg = HagaConfig::build(sq.side.clone(), sq.e.clone())
                    .map_err(|e| usage_error(&e.to_string()))?;
                let ok = cfg
                    .triangle_aef()
                    .map(|aef| {
                        aef.leg_p() == triangle.leg_p()
                            && aef.leg_q() == triangle.leg_q()
                            && aef.hyp() == triangle.hyp()
                    })
                    .unwrap_or(false);
                entries.push(serde_json::json!({
                    "alpha_kind": sq.alpha_kind,
                    "corners": serde_json::to_value(&sq.corners).expect("serializable"),
                    "d": sq.side,
                    "e": sq.e,
                    "case": haga_core::classify(&sq.side, &sq.e).expect("side > 0").to_string(),
                    "round_trip_ok": ok,
                }));
            }
            let doc = serde_json::json!({
                "legs": [p, q],
                "hypotenuse": triangle.hyp(),
                "squares": entries,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            let all_ok = entries
                .iter()
                .all(|e| e["round_trip_ok"].as_bool().unwrap_or(false));
            Ok(if all_ok { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(code) => code,
    };
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use haga_core::{CheckEntry, CheckId};

    #[test]
    fn exit_code_reflects_failures() {
        let mut report = verify_at(&Rat::from_int(2), &Rat::from_int(1)).unwrap();
        assert_eq!(exit_code_for_reports(&[report.clone()]), 0);
        report.checks[0] = CheckEntry {
            id: CheckId::P3_1_TANGENT,
            status: CheckStatus::Fail("1/1000".to_string()),
        };
        assert_eq!(exit_code_for_reports(&[report]), 1);
    }

    #[test]
    fn grid_generation() {
        let grid = sweep_grid(
            None,
            Some(Rat::from_int(0)),
            Some(Rat::from_int(1)),
            Some(4),
        )
        .unwrap();
        assert_eq!(grid.len(), 5);
        assert_eq!(grid[1], Rat::new(1, 4));
        assert!(sweep_grid(None, Some(Rat::from_int(0)), Some(Rat::from_int(1)), Some(0)).is_err());
        assert!(sweep_grid(None, None, None, None).is_err());
    }
}
