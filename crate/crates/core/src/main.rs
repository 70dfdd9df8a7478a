use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use claw_genus::formulas::GenusPolynomial;
use claw_genus::oracle::{self, OracleConfig};
use claw_genus::report::{self, Format};
use claw_genus::rootcert;
use claw_genus::routes::{self, Route};
use claw_genus::{pgd, Error, Result};

/// Genus polynomials of iterated-claw graphs: computation, cross-checks and
/// certificates.
#[derive(Parser, Debug)]
#[command(name = "claw-genus", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print Γ_{Y_n} for each n by one route, or by all routes with an agreement check.
    Compute {
        /// A single n or an inclusive range a..b.
        #[arg(long = "n", visible_alias = "n-range", value_parser = parse_range, default_value = "0..4")]
        n: RangeInclusive<usize>,
        #[arg(long, value_enum, default_value_t = RouteArg::All)]
        route: RouteArg,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Certify real-rootedness, interlacing and log-concavity of W_n.
    Certify {
        #[arg(long = "n", visible_alias = "n-range", value_parser = parse_range, default_value = "0..10")]
        n: RangeInclusive<usize>,
        /// Bisection cap for separating intervals; defaults to 4·degree·bits of the largest coefficient.
        #[arg(long)]
        max_refine: Option<usize>,
        /// Include decimal root approximations ("approx") in JSON certificates.
        #[arg(long)]
        approx: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print the table of g_{n,i}, cross-checked against the pgd and gf routes.
    Table {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Enumerate every rotation system of Y_n and compare the A/B/C tallies with the pgd route.
    OracleCheck {
        #[arg(long = "n", visible_alias = "n-range", value_parser = parse_range, default_value = "0..4")]
        n: RangeInclusive<usize>,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        oracle: OracleArgs,
    },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Worker threads; defaults to the number of available cores.
    #[arg(long)]
    parallelism: Option<usize>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    /// Largest n the oracle enumerates without --acknowledge-cost.
    #[arg(long, env = "CLAW_GENUS_ORACLE_CAP", default_value_t = oracle::DEFAULT_CAP)]
    oracle_cap: usize,
    /// Run the oracle beyond the cap (2^(4n+2) rotation systems).
    #[arg(long)]
    acknowledge_cost: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RouteArg {
    Pgd,
    Recurrence,
    Explicit,
    Gf,
    Oracle,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let n = num(s)?;
            n..=n
        }
    };
    if r.is_empty() {
        return Err(format!("empty range {s}"));
    }
    Ok(r)
}

fn threads(common: &Common) -> usize {
    common
        .parallelism
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn oracle_config(common: &Common, o: &OracleArgs) -> OracleConfig {
    OracleConfig {
        parallelism: threads(common),
        cap: o.oracle_cap,
        acknowledge_cost: o.acknowledge_cost,
    }
}

/// Accumulates stdout and whether every check passed.
struct Run {
    out: String,
    ok: bool,
}

impl Run {
    fn new() -> Self {
        Run {
            out: String::new(),
            ok: true,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn fail(&mut self, msg: impl AsRef<str>) {
        eprintln!("{}", msg.as_ref());
        self.ok = false;
    }
}

fn single_route(
    route: Route,
    ns: RangeInclusive<usize>,
    format: Format,
    cfg: &OracleConfig,
    run: &mut Run,
) -> Result<()> {
    let rows = routes::compute(route, ns, cfg)?;
    match format {
        Format::Csv => rows.iter().for_each(|g| run.line(report::csv_row(g, 0))),
        Format::Text => rows
            .iter()
            .for_each(|g| run.line(format!("n={} [{route}]: {}", g.n, g.poly))),
        Format::Json => {
            let results: Vec<_> = rows
                .iter()
                .map(|g| json!({"n": g.n, "coefficients": report::coefficients(&g.poly)}))
                .collect();
            run.out += &report::render_json(&json!({"route": route.name(), "results": results}));
        }
    }
    Ok(())
}

fn all_routes(
    ns: RangeInclusive<usize>,
    format: Format,
    cfg: &OracleConfig,
    run: &mut Run,
) -> Result<()> {
    let beyond_cap =
        |r: Route, n: usize| r == Route::Oracle && n > cfg.cap && !cfg.acknowledge_cost;
    if ns.clone().any(|n| beyond_cap(Route::Oracle, n)) {
        eprintln!(
            "note: oracle route skipped for n > {} (set CLAW_GENUS_ORACLE_CAP or pass --acknowledge-cost)",
            cfg.cap
        );
    }
    let rows = routes::consensus(&Route::ALL, ns, cfg, beyond_cap)?;
    for a in &rows {
        if let Some(e) = &a.disagreement {
            if let Error::RouteDisagreement { n, index, .. } = e {
                run.fail(format!("first differing (n, i) = ({n}, {index})"));
            }
            run.fail(e.to_string());
        }
    }
    match format {
        Format::Csv => rows
            .iter()
            .for_each(|a| run.line(report::csv_row(&a.gamma, 0))),
        Format::Text => {
            for a in &rows {
                let names: Vec<_> = a.routes.iter().map(|r| r.name()).collect();
                let status = if a.agree() { "AGREE" } else { "DISAGREE" };
                run.line(format!(
                    "n={} {status} [{}]: {}",
                    a.n,
                    names.join(", "),
                    a.gamma.poly
                ));
            }
        }
        Format::Json => {
            let results: Vec<_> = rows.iter().map(report::agreement).collect();
            run.out += &report::render_json(&json!({"route": "all", "results": results}));
        }
    }
    Ok(())
}

fn certify(
    ns: RangeInclusive<usize>,
    max_refine: Option<usize>,
    approx: bool,
    common: &Common,
    run: &mut Run,
) -> Result<()> {
    let format: Format = common.format.into();
    let certs = rootcert::certify_range(ns, max_refine, threads(common))?;
    for c in &certs {
        let summary = report::summary_line(c);
        if !c.passed() {
            run.fail(format!("certification failed: {summary}"));
        }
        match format {
            Format::Json => eprintln!("{summary}"),
            _ => {
                run.line(&summary);
                run.line(format!(
                    "  roots ≈ {}",
                    report::approximate_roots(&c.roots).join(", ")
                ));
            }
        }
    }
    if format == Format::Json {
        let docs: Vec<_> = certs
            .iter()
            .map(|c| report::certification(c, approx))
            .collect();
        run.out += &report::render_json(&json!({"certificates": docs}));
    }
    Ok(())
}

fn table(max_n: usize, format: Format, run: &mut Run) -> Result<()> {
    let rows = routes::consensus(
        &[Route::Recurrence, Route::Pgd, Route::Gf],
        0..=max_n,
        &OracleConfig::default(),
        |_, _| false,
    )?;
    for a in &rows {
        if let Some(e) = &a.disagreement {
            run.fail(e.to_string());
        }
    }
    let gammas: Vec<GenusPolynomial> = rows.into_iter().map(|a| a.gamma).collect();
    run.out += &report::table(&gammas, format);
    Ok(())
}

fn oracle_check(
    ns: RangeInclusive<usize>,
    format: Format,
    cfg: &OracleConfig,
    run: &mut Run,
) -> Result<()> {
    let mut docs = Vec::new();
    for n in ns {
        let tally = oracle::oracle_pgd(n, cfg)?;
        let got = tally.to_pgd();
        let want = pgd::pgd(n);
        let parts = [
            ("A", &got.a, &want.a),
            ("B", &got.b, &want.b),
            ("C", &got.c, &want.c),
        ];
        let matches = parts.iter().all(|(_, g, w)| g == w);
        for (name, g, w) in parts.iter().filter(|(_, g, w)| g != w) {
            let i = pgd::first_difference(g, w);
            run.fail(format!(
                "n={n}: oracle {name} differs from pgd at z^{i}: {} vs {}",
                g.coeff(i),
                w.coeff(i)
            ));
        }
        match format {
            Format::Json => docs.push(report::oracle(&tally, matches)),
            Format::Csv => {
                for (name, g, _) in parts {
                    let coeffs: Vec<String> = g.coeffs().iter().map(|c| c.to_string()).collect();
                    run.line(format!("{n},{},{}", name.to_lowercase(), coeffs.join(",")));
                }
            }
            Format::Text => {
                let marks: Vec<String> = parts
                    .iter()
                    .map(|(name, g, w)| format!("{name} {}", if g == w { "✓" } else { "✗" }))
                    .collect();
                run.line(format!(
                    "n={n}: {} total {}",
                    marks.join(" "),
                    tally.total()
                ));
                for (name, g, _) in parts {
                    run.line(format!("  {name} = {g}"));
                }
            }
        }
    }
    if format == Format::Json {
        run.out += &report::render_json(&json!({"results": docs}));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut run = Run::new();
    let result = match &cli.command {
        Command::Compute {
            n,
            route,
            common,
            oracle,
        } => {
            let cfg = oracle_config(common, oracle);
            let format = common.format.into();
            match route {
                RouteArg::All => all_routes(n.clone(), format, &cfg, &mut run),
                r => {
                    let route = match r {
                        RouteArg::Pgd => Route::Pgd,
                        RouteArg::Recurrence => Route::Recurrence,
                        RouteArg::Explicit => Route::Explicit,
                        RouteArg::Gf => Route::Gf,
                        RouteArg::Oracle => Route::Oracle,
                        RouteArg::All => unreachable!(),
                    };
                    single_route(route, n.clone(), format, &cfg, &mut run)
                }
            }
        }
        Command::Certify {
            n,
            max_refine,
            approx,
            common,
        } => certify(n.clone(), *max_refine, *approx, common, &mut run),
        Command::Table { max_n, format } => table(*max_n, (*format).into(), &mut run),
        Command::OracleCheck { n, common, oracle } => oracle_check(
            n.clone(),
            common.format.into(),
            &oracle_config(common, oracle),
            &mut run,
        ),
    };
    if let Err(e) = result {
        run.fail(format!("error: {e}"));
    }
    let mut stdout = io::stdout().lock();
    if stdout
        .write_all(run.out.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::FAILURE;
    }
    if run.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
