//! `cjp` — command-line front end for exact colored Jones computations,
//! degree-model fitting, cable predictions, fusion-knot checks, and the
//! conjecture reports. Results go to stdout (JSON by default, CSV where it
//! makes sense), progress to stderr; exit code 0 means every requested
//! check passed or was inapplicable.

use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use cabled_jones::bracket::EvalBudget;
use cabled_jones::cabling::{admissible_constant_a, cable_boundary_slopes, m1_m2, CableParams};
use cabled_jones::checker::catalog_report;
use cabled_jones::families::{catalog, catalog_names, entry_to_json};
use cabled_jones::fusion::{
    delta, delta_bruteforce, delta_point, dplus_model, FusionParams,
};
use cabled_jones::laurent::rat_string;
use cabled_jones::present::{parse as parse_knot, predict_for_base_with, KnotPresentation};
use cabled_jones::quasipoly::fit;
use cabled_jones::report::{
    emit_json, polynomial_row_json, polynomial_rows_csv, slope_set_json, OutputFormat,
};

#[derive(Parser)]
#[command(
    name = "cjp",
    about = "Exact colored Jones polynomials and Jones-slope cabling predictions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Output format.
    #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
    format: String,
    /// State-sum crossing budget (default from CJP_MAX_CROSSINGS, else 26).
    #[arg(long)]
    max_crossings: Option<usize>,
    /// Temperley-Lieb strand budget (default from CJP_MAX_STRANDS, else 12).
    #[arg(long)]
    max_strands: Option<usize>,
    /// Worker threads for parallel parts (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

impl CommonOpts {
    fn budget(&self) -> EvalBudget {
        let mut b = EvalBudget::from_env();
        if let Some(c) = self.max_crossings {
            b.max_state_crossings = c;
        }
        if let Some(s) = self.max_strands {
            b.max_tl_strands = s;
        }
        b
    }

    fn format(&self) -> OutputFormat {
        if self.format == "csv" {
            OutputFormat::Csv
        } else {
            OutputFormat::Json
        }
    }

    fn install_threads(&self) {
        if let Some(t) = self.threads {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global();
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Colored Jones polynomials of a presented knot over a color range.
    Jones {
        /// Presentation: unknot | torus:p,q | braid:1 1 1 | pd:<json> |
        /// cable:<base>;p,q | catalog:<name>.
        #[arg(long)]
        knot: String,
        /// Color or inclusive range, e.g. `2` or `1..4`.
        #[arg(long, default_value = "1..4")]
        n: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Fit the degree quasi-polynomials of computed colored Jones values.
    Fit {
        #[arg(long)]
        knot: String,
        /// Largest color to compute.
        #[arg(long, default_value_t = 10)]
        n_max: i64,
        /// Largest candidate period.
        #[arg(long, default_value_t = 12)]
        pi_max: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Jones slopes and linear-term cluster sets of a knot's degree model.
    Slopes {
        #[arg(long)]
        knot: String,
        /// Colors to compute for diagram presentations (others use closed
        /// forms).
        #[arg(long, default_value_t = 10)]
        n_max: i64,
        #[arg(long, default_value_t = 12)]
        pi_max: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Predict the cable degree model, with case provenance and thresholds.
    Predict {
        /// Base knot presentation (needs a degree model: unknot, torus,
        /// fusion, catalog, or a cable of those).
        #[arg(long)]
        knot: String,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, default_value_t = 12)]
        pi_max: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Verify degrees of the exact cabling sum against the predictions;
    /// exits nonzero on any mismatch.
    VerifyCable {
        #[arg(long)]
        knot: String,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        /// Largest cable color to verify.
        #[arg(long, default_value_t = 12)]
        n_max: i64,
        #[arg(long, default_value_t = 12)]
        pi_max: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Two-fusion knot reports: linear term, degrees, model, or oracle runs.
    Fusion {
        #[arg(long, allow_hyphen_values = true)]
        m1: i64,
        #[arg(long, allow_hyphen_values = true)]
        m2: i64,
        /// b | delta | model | verify.
        #[arg(long, default_value = "b", value_parser = ["b", "delta", "model", "verify"])]
        report: String,
        #[arg(long, default_value_t = 20)]
        n_max: i64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Conjecture checks against the catalog (Slope, Strong Slope,
    /// nonpositive linear term).
    Check {
        /// `all`, a catalog name, or a comma-separated list; pretzels as
        /// `pretzel(-2,3,7)`.
        #[arg(long, default_value = "all")]
        catalog: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Catalog entries as JSON.
    Catalog {
        #[arg(long, default_value = "all")]
        name: String,
    },
}

fn parse_range(text: &str) -> Result<(i64, i64)> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: i64 = lo.trim().parse().context("bad range start")?;
        let hi: i64 = hi.trim().parse().context("bad range end")?;
        if lo < 1 || hi < lo {
            bail!("empty or non-positive color range {text:?}");
        }
        Ok((lo, hi))
    } else {
        let n: i64 = text.trim().parse().context("bad color")?;
        if n < 1 {
            bail!("colors start at 1");
        }
        Ok((n, n))
    }
}

fn knot(text: &str) -> Result<KnotPresentation> {
    parse_knot(text).map_err(|e| anyhow!("{e}"))
}

fn cmd_jones(text: &str, range: &str, common: &CommonOpts) -> Result<()> {
    let k = knot(text)?;
    let (lo, hi) = parse_range(range)?;
    let budget = common.budget();
    let mut rows = Vec::new();
    for n in lo..=hi {
        eprintln!("computing J({n}) of {text}...");
        rows.push((n, k.jones(n, &budget).map_err(|e| anyhow!("{e}"))?));
    }
    match common.format() {
        OutputFormat::Csv => print!("{}", polynomial_rows_csv(&rows)),
        OutputFormat::Json => {
            let values: Vec<_> = rows
                .iter()
                .map(|(n, j)| polynomial_row_json(*n, j))
                .collect();
            print!(
                "{}",
                emit_json(&serde_json::json!({"knot": text, "values": values}))
            );
        }
    }
    Ok(())
}

fn cmd_fit(text: &str, n_max: i64, pi_max: usize, common: &CommonOpts) -> Result<()> {
    let k = knot(text)?;
    let budget = common.budget();
    let mut dplus = BTreeMap::new();
    let mut dminus = BTreeMap::new();
    for n in 1..=n_max {
        eprintln!("computing J({n}) of {text}...");
        let j = k.jones(n, &budget).map_err(|e| anyhow!("{e}"))?;
        let (hi, lo) = j.degrees().map_err(|e| anyhow!("{e}"))?;
        dplus.insert(n, hi);
        dminus.insert(n, lo);
    }
    let plus = fit(&dplus, pi_max).map_err(|e| anyhow!("{e}"))?;
    let minus = fit(&dminus, pi_max).map_err(|e| anyhow!("{e}"))?;
    print!(
        "{}",
        emit_json(&serde_json::json!({
            "knot": text,
            "dplus_model": plus.to_json(),
            "dminus_model": minus.to_json(),
            "js": slope_set_json(&plus.jones_slopes()),
            "jx": slope_set_json(&plus.jx_set()),
            "js_star": slope_set_json(&minus.jones_slopes()),
            "jx_star": slope_set_json(&minus.jx_set()),
        }))
    );
    Ok(())
}

fn cmd_slopes(text: &str, n_max: i64, pi_max: usize, common: &CommonOpts) -> Result<()> {
    let k = knot(text)?;
    let budget = common.budget();
    // Catalog rows carry their slope sets directly (including rows with no
    // full degree model); everything else goes through a model.
    if let KnotPresentation::Catalog(name) = &k {
        let e = catalog(name).map_err(|e| anyhow!("{e}"))?;
        print!(
            "{}",
            emit_json(&serde_json::json!({
                "knot": text,
                "js": slope_set_json(&e.js),
                "jx": slope_set_json(&e.jx),
                "js_star": slope_set_json(&e.js_star),
                "jx_star": slope_set_json(&e.jx_star),
                "bs_known": slope_set_json(&e.bs_known),
            }))
        );
        return Ok(());
    }
    let model = match k.dplus_model(pi_max, &budget) {
        Ok(m) => m,
        Err(_) => k
            .fitted_model(n_max, pi_max, &budget)
            .map_err(|e| anyhow!("{e}"))?,
    };
    print!(
        "{}",
        emit_json(&serde_json::json!({
            "knot": text,
            "dplus_model": model.to_json(),
            "js": slope_set_json(&model.jones_slopes()),
            "jx": slope_set_json(&model.jx_set()),
        }))
    );
    Ok(())
}

fn cmd_predict(text: &str, p: i64, q: i64, pi_max: usize, common: &CommonOpts) -> Result<()> {
    let base = knot(text)?;
    let params = CableParams::new(p, q).map_err(|e| anyhow!("{e}"))?;
    let budget = common.budget();
    let mut extra = serde_json::Map::new();
    if let Ok(base_model) = base.dplus_model(pi_max, &budget) {
        if base_model.period() > 2 && base_model.constant_a().is_some() {
            let (m1v, m2v) = m1_m2(&base_model).map_err(|e| anyhow!("{e}"))?;
            extra.insert("m1_threshold".into(), rat_string(&m1v).into());
            extra.insert("m2_threshold".into(), rat_string(&m2v).into());
            extra.insert(
                "admissible".into(),
                admissible_constant_a(&base_model, params)
                    .map_err(|e| anyhow!("{e}"))?
                    .into(),
            );
        }
        let bs = cable_boundary_slopes(&base_model.jones_slopes(), params);
        extra.insert("transformed_base_js_slopes".into(), slope_set_json(&bs));
    }
    let pred = predict_for_base_with(&base, params, pi_max, &budget)
        .map_err(|e| anyhow!("{e}"))?;
    let min_margin = pred
        .maximizer_trace
        .iter()
        .filter(|s| s.n >= pred.model.valid_from())
        .filter_map(|s| s.margin.clone())
        .min();
    print!(
        "{}",
        emit_json(&serde_json::json!({
            "base": text,
            "p": p,
            "q": q,
            "model": pred.model.to_json(),
            "js": slope_set_json(&pred.model.jones_slopes()),
            "jx": slope_set_json(&pred.model.jx_set()),
            "branches": pred
                .case_tags
                .iter()
                .map(|t| format!("{:?}: {}", t.branch, t.detail))
                .collect::<Vec<_>>(),
            "min_margin": min_margin.as_ref().map(rat_string),
            "extra": serde_json::Value::Object(extra),
        }))
    );
    Ok(())
}

fn cmd_verify_cable(
    text: &str,
    p: i64,
    q: i64,
    n_max: i64,
    pi_max: usize,
    common: &CommonOpts,
) -> Result<ExitCode> {
    let base = knot(text)?;
    let params = CableParams::new(p, q).map_err(|e| anyhow!("{e}"))?;
    let budget = common.budget();
    let pred = predict_for_base_with(&base, params, pi_max, &budget)
        .map_err(|e| anyhow!("{e}"))?;
    let from = pred.model.valid_from();
    let mut mismatches = Vec::new();
    for n in from..=n_max {
        eprintln!("cable sum at n = {n}...");
        let j = cabled_jones::cabling::cable_jones(|m| base.jones(m, &budget), params, n)
            .map_err(|e| anyhow!("{e}"))?;
        let got = j.dplus().map_err(|e| anyhow!("{e}"))?;
        let want = pred.model.eval(n).map_err(|e| anyhow!("{e}"))?;
        if got != want {
            mismatches.push(serde_json::json!({
                "n": n,
                "sum_degree": rat_string(&got),
                "predicted": rat_string(&want),
            }));
        }
    }
    print!(
        "{}",
        emit_json(&serde_json::json!({
            "base": text,
            "p": p,
            "q": q,
            "checked_from": from,
            "checked_to": n_max,
            "model": pred.model.to_json(),
            "mismatches": mismatches,
        }))
    );
    Ok(if mismatches.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_fusion(m1: i64, m2: i64, report: &str, n_max: i64) -> Result<ExitCode> {
    let fp = FusionParams::new(m1, m2).map_err(|e| anyhow!("{e}"))?;
    match report {
        "b" => {
            let model = dplus_model(fp).map_err(|e| anyhow!("{e}"))?;
            let values: Vec<String> = model
                .residues()
                .iter()
                .map(|c| rat_string(&c.b))
                .collect();
            print!(
                "{}",
                emit_json(&serde_json::json!({
                    "knot": format!("fusion:{m1},{m2}"),
                    "b_per_residue": values,
                    "jx": slope_set_json(&model.jx_set()),
                }))
            );
        }
        "delta" => {
            let rows: Vec<_> = (0..=n_max)
                .map(|n| {
                    let d = delta(fp, n).unwrap();
                    let (pt, corr) = delta_point(fp, n).unwrap();
                    serde_json::json!({
                        "n": n,
                        "delta": rat_string(&d),
                        "point": [pt.k1, pt.k2],
                        "half_integer_correction": corr.as_ref().map(rat_string),
                    })
                })
                .collect();
            print!(
                "{}",
                emit_json(&serde_json::json!({
                    "knot": format!("fusion:{m1},{m2}"),
                    "delta": rows,
                }))
            );
        }
        "model" => {
            let model = dplus_model(fp).map_err(|e| anyhow!("{e}"))?;
            print!(
                "{}",
                emit_json(&serde_json::json!({
                    "knot": format!("fusion:{m1},{m2}"),
                    "dplus_model": model.to_json(),
                    "js": slope_set_json(&model.jones_slopes()),
                    "jx": slope_set_json(&model.jx_set()),
                }))
            );
        }
        "verify" => {
            let mut bad = Vec::new();
            for n in 0..=n_max {
                let d = delta(fp, n).map_err(|e| anyhow!("{e}"))?;
                let (max, _) = delta_bruteforce(fp, n).map_err(|e| anyhow!("{e}"))?;
                let (_, corr) = delta_point(fp, n).map_err(|e| anyhow!("{e}"))?;
                let expect = match &corr {
                    Some(c) => &max - c,
                    None => max.clone(),
                };
                if d != expect {
                    bad.push(serde_json::json!({
                        "n": n,
                        "delta": rat_string(&d),
                        "lattice_max": rat_string(&max),
                    }));
                }
            }
            print!(
                "{}",
                emit_json(&serde_json::json!({
                    "knot": format!("fusion:{m1},{m2}"),
                    "verified_to": n_max,
                    "mismatches": bad,
                }))
            );
            if !bad.is_empty() {
                return Ok(ExitCode::FAILURE);
            }
        }
        _ => unreachable!("clap validates the report kind"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(selection: &str) -> Result<ExitCode> {
    let names: Vec<String> = if selection == "all" {
        let mut v: Vec<String> = catalog_names().iter().map(|s| s.to_string()).collect();
        v.extend([7, 9, 11].iter().map(|p| format!("pretzel(-2,3,{p})")));
        v
    } else {
        selection.split(',').map(|s| s.trim().to_string()).collect()
    };
    let mut reports = Vec::new();
    let mut all_ok = true;
    for name in &names {
        let e = catalog(name).map_err(|e| anyhow!("{e}"))?;
        let report = catalog_report(&e);
        all_ok &= report.passed();
        reports.push(report.to_json());
    }
    print!(
        "{}",
        emit_json(&serde_json::json!({
            "reports": reports,
            "all_passed_or_inapplicable": all_ok,
        }))
    );
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_catalog(name: &str) -> Result<()> {
    let entries: Vec<_> = if name == "all" {
        catalog_names()
            .iter()
            .map(|n| entry_to_json(&catalog(n).unwrap()))
            .collect()
    } else {
        vec![entry_to_json(&catalog(name).map_err(|e| anyhow!("{e}"))?)]
    };
    print!("{}", emit_json(&serde_json::json!({ "entries": entries })));
    Ok(())
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Jones { knot, n, common } => {
            common.install_threads();
            cmd_jones(knot, n, common)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fit {
            knot,
            n_max,
            pi_max,
            common,
        } => {
            common.install_threads();
            cmd_fit(knot, *n_max, *pi_max, common)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Slopes {
            knot,
            n_max,
            pi_max,
            common,
        } => {
            cmd_slopes(knot, *n_max, *pi_max, common)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Predict {
            knot,
            p,
            q,
            pi_max,
            common,
        } => {
            cmd_predict(knot, *p, *q, *pi_max, common)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyCable {
            knot,
            p,
            q,
            n_max,
            pi_max,
            common,
        } => {
            common.install_threads();
            cmd_verify_cable(knot, *p, *q, *n_max, *pi_max, common)
        }
        Command::Fusion {
            m1,
            m2,
            report,
            n_max,
            ..
        } => cmd_fusion(*m1, *m2, report, *n_max),
        Command::Check { catalog, .. } => cmd_check(catalog),
        Command::Catalog { name } => {
            cmd_catalog(name)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
