use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hamspec::bounds::{chi_q_verdict, classical_bound};
use hamspec::colouring::{
    certify_complete_system_sampled, certify_edge_orthogonality, chi_q_upper_from_colouring,
    default_tolerance, sample_vertices, Family, PairStrategy,
};
use hamspec::krawtchouk::{kraw_eval, KrawtchoukParams};
use hamspec::products::{product_chi_q, product_spectrum};
use hamspec::spectra::{spectrum_closed_form, HammingGraphSpec};

use hamspec_cli::report::{
    bounds_report, certify_report, csv_field, product_report, BoundsReport, CertifyReport,
    KrawReport, ProductReport, TableReport, VerdictReport,
};
use hamspec_cli::table::{eigenvalue_grid, render_table, render_table_csv, TABLE_CAP};
use hamspec_cli::DEFAULT_SEED;

#[derive(Parser)]
#[command(name = "hamspec", version, about = "Exact spectra and chromatic bounds of binary Hamming graphs")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable text; tables as an r-by-l grid.
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one Krawtchouk value K_l^{n,q}(x).
    Kraw {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        x: u32,
    },
    /// Emit the (n+1) x (n+1) eigenvalue table of all H(n,2,l).
    Table {
        #[arg(long)]
        n: u32,
    },
    /// Spectral bound report and chi_q verdict for H(n,2,l).
    Bounds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
    },
    /// Certify a projector colouring family and report the colour bound.
    Certify {
        /// One of: hadamard, 4t-1, half-plus.
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: u32,
        /// Adjacency distance; implied by n for hadamard and 4t-1.
        #[arg(long)]
        l: Option<u32>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Translation)]
        strategy: StrategyArg,
        /// Residual tolerance; default 1e-9 * d.
        #[arg(long)]
        tol: Option<f64>,
        /// Seed for sampled vertices and the random strategy.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Vertices sampled for the complete-system checks.
        #[arg(long, default_value_t = 8)]
        samples: u32,
        /// Edge pairs drawn by the random strategy.
        #[arg(long, default_value_t = 200)]
        pairs: u64,
    },
    /// Tensor-product spectrum extremes and chi_q verdict.
    Product {
        n1: u32,
        l1: u32,
        n2: u32,
        l2: u32,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    /// One representative pair per translation orbit.
    Translation,
    /// Seeded uniform edge pairs (see --pairs, --seed).
    Random,
    /// Every edge; small n only.
    Exhaustive,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Kraw { n, q, l, x } => {
            let params = KrawtchoukParams::new(n, q, l).map_err(|e| e.to_string())?;
            let value = kraw_eval(&params, x).map_err(|e| e.to_string())?;
            let report = KrawReport {
                n,
                q,
                l,
                x,
                value: value.to_string(),
            };
            match cli.format {
                Format::Table => println!("{}", report.value),
                Format::Csv => {
                    println!("n,q,l,x,value");
                    println!("{n},{q},{l},{x},{}", report.value);
                }
                Format::Json => print_json(&report),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { n } => {
            if n == 0 || n > TABLE_CAP {
                return Err(format!("table size n={n} outside [1, {TABLE_CAP}]"));
            }
            match cli.format {
                Format::Table => print!("{}", render_table(n)),
                Format::Csv => print!("{}", render_table_csv(n)),
                Format::Json => {
                    let rows = eigenvalue_grid(n)
                        .iter()
                        .map(|row| row.iter().map(|v| v.to_string()).collect())
                        .collect();
                    print_json(&TableReport { n, rows });
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { n, l } => {
            let spec = HammingGraphSpec::new(n, l).map_err(|e| e.to_string())?;
            let report = classical_bound(&spectrum_closed_form(&spec)).map_err(|e| e.to_string())?;
            let verdict = chi_q_verdict(&spec);
            let out = bounds_report(&report, &verdict);
            match cli.format {
                Format::Table => print_bounds_text(&out),
                Format::Csv => print_bounds_csv(&out),
                Format::Json => print_json(&out),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify {
            family,
            n,
            l,
            strategy,
            tol,
            seed,
            samples,
            pairs,
        } => {
            let ell = match (l, family.implied_ell(n)) {
                (Some(given), Some(implied)) if given != implied => {
                    return Err(format!(
                        "family {family} with n={n} implies l={implied}, got l={given}"
                    ));
                }
                (Some(given), _) => given,
                (None, Some(implied)) => implied,
                (None, None) if family == Family::HalfPlus => {
                    return Err(format!("family {family} needs an explicit --l"));
                }
                (None, None) => {
                    // n violates the family shape; surface that error
                    return Err(family
                        .validate(n, 0)
                        .expect_err("implied_ell is None only for invalid shapes")
                        .to_string());
                }
            };
            let d = family.validate(n, ell).map_err(|e| e.to_string())?;
            let tol = tol.unwrap_or_else(|| default_tolerance(d));
            let strategy = match strategy {
                StrategyArg::Translation => PairStrategy::TranslationReduced,
                StrategyArg::Random => PairStrategy::Randomized { pairs, seed },
                StrategyArg::Exhaustive => PairStrategy::Exhaustive,
            };
            let vertices = sample_vertices(n, samples, seed);
            let system = certify_complete_system_sampled(family, n, ell, &vertices, tol)
                .map_err(|e| e.to_string())?;
            let edges = certify_edge_orthogonality(family, n, ell, tol, strategy)
                .map_err(|e| e.to_string())?;
            let colours = chi_q_upper_from_colouring(&system, &edges)
                .ok()
                .map(|c| c.to_string());
            let out = certify_report(&system, &edges, colours, seed);
            match cli.format {
                Format::Table => print_certify_text(&out),
                Format::Csv => print_certify_csv(&out),
                Format::Json => print_json(&out),
            }
            Ok(if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Product { n1, l1, n2, l2 } => {
            let left = HammingGraphSpec::new(n1, l1).map_err(|e| e.to_string())?;
            let right = HammingGraphSpec::new(n2, l2).map_err(|e| e.to_string())?;
            let graph = product_spectrum(
                &spectrum_closed_form(&left),
                &spectrum_closed_form(&right),
            );
            let verdict = product_chi_q(&left, &right).map_err(|e| e.to_string())?;
            let out = product_report(&graph, &verdict);
            match cli.format {
                Format::Table => print_product_text(&out),
                Format::Csv => print_product_csv(&out),
                Format::Json => print_json(&out),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_json<T: serde::Serialize>(report: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("reports always serialize")
    );
}

fn verdict_text(verdict: &VerdictReport) -> String {
    match verdict {
        VerdictReport::Exact { value, provenance } => {
            format!("chi_q = {value} ({provenance})")
        }
        VerdictReport::Interval {
            lower,
            upper,
            provenance,
        } => format!("chi_q in [{lower}, {upper}] ({provenance})"),
        VerdictReport::LowerBoundOnly { lower, provenance } => {
            format!("chi_q >= {lower} ({provenance})")
        }
    }
}

fn print_bounds_text(out: &BoundsReport) {
    println!("graph: H({},2,{})", out.n, out.l);
    println!("vertices: {}", out.vertex_count);
    println!("degree: {}", out.degree);
    println!("edges: {}", out.edge_count);
    println!("lambda_1: {}", out.lambda_1);
    println!("lambda_n: {}", out.lambda_n);
    println!("theta_1: {}", out.theta_1);
    println!("delta_1: {}", out.delta_1);
    println!("delta_n: {}", out.delta_n);
    println!("n+: {}  n-: {}", out.n_plus, out.n_minus);
    println!("S+: {}  S-: {}", out.s_plus, out.s_minus);
    for term in &out.terms {
        match &term.value {
            Some(value) => println!("term {}: {}", term.name, value),
            None => println!("term {}: not applicable", term.name),
        }
    }
    println!("classical_lower: {}", out.classical_lower);
    println!("quantum_lower: {}", out.quantum_lower);
    if let Some(upper) = &out.quantum_upper {
        println!("quantum_upper: {} ({})", upper.value, upper.provenance);
    }
    if let Some(exact) = &out.exact_chi_q {
        println!("exact_chi_q: {} ({})", exact.value, exact.provenance);
    }
    println!("verdict: {}", verdict_text(&out.verdict));
}

fn print_bounds_csv(out: &BoundsReport) {
    let mut header: Vec<String> = [
        "n", "l", "vertex_count", "degree", "edge_count", "lambda_1", "lambda_n", "theta_1",
        "delta_1", "delta_n", "n_plus", "n_minus", "s_plus", "s_minus",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let mut row = vec![
        out.n.to_string(),
        out.l.to_string(),
        out.vertex_count.clone(),
        out.degree.clone(),
        out.edge_count.clone(),
        out.lambda_1.clone(),
        out.lambda_n.clone(),
        out.theta_1.clone(),
        out.delta_1.clone(),
        out.delta_n.clone(),
        out.n_plus.clone(),
        out.n_minus.clone(),
        out.s_plus.clone(),
        out.s_minus.clone(),
    ];
    for term in &out.terms {
        header.push(csv_field(term.name.as_str()));
        row.push(term.value.clone().unwrap_or_else(|| "n/a".to_string()));
    }
    header.extend(
        ["classical_lower", "quantum_lower", "verdict", "provenance"]
            .iter()
            .map(|s| s.to_string()),
    );
    row.push(out.classical_lower.clone());
    row.push(out.quantum_lower.clone());
    let (verdict, provenance) = match &out.verdict {
        VerdictReport::Exact { value, provenance } => (value.clone(), provenance.clone()),
        VerdictReport::Interval {
            lower,
            upper,
            provenance,
        } => (format!("{lower}..{upper}"), provenance.clone()),
        VerdictReport::LowerBoundOnly { lower, provenance } => {
            (format!(">={lower}"), provenance.clone())
        }
    };
    row.push(csv_field(&verdict));
    row.push(csv_field(&provenance));
    println!("{}", header.join(","));
    println!("{}", row.join(","));
}

fn print_certify_text(out: &CertifyReport) {
    println!("family: {}", out.family);
    println!("graph: H({},2,{})", out.n, out.l);
    println!("colours(d): {}", out.d);
    println!("tol: {:e}", out.tol);
    println!("seed: {}", out.seed);
    println!("strategy: {}", out.strategy);
    println!("systems_checked: {}", out.systems_checked);
    println!("pairs_checked: {}", out.pairs_checked);
    let show = |label: &str, value: Option<f64>| match value {
        Some(v) => println!("residual {label}: {v:e}"),
        None => println!("residual {label}: not checked"),
    };
    show("hermitian", out.residuals.hermitian);
    show("idempotent", out.residuals.idempotent);
    show("orthogonality", out.residuals.orthogonality);
    show("completeness", out.residuals.completeness);
    show("edge_orthogonality", out.residuals.edge_orthogonality);
    println!("scalar_identity_max: {}", out.scalar_identity_max);
    match (&out.colours, out.pass) {
        (Some(colours), true) => println!("result: PASS (chi_q <= {colours})"),
        _ => println!("result: FAIL"),
    }
}

fn print_certify_csv(out: &CertifyReport) {
    println!(
        "family,n,l,d,tol,seed,strategy,systems_checked,pairs_checked,\
         hermitian,idempotent,orthogonality,completeness,edge_orthogonality,\
         scalar_identity_max,colours,pass"
    );
    let residual = |v: Option<f64>| v.map(|x| format!("{x:e}")).unwrap_or_default();
    println!(
        "{},{},{},{},{:e},{},{},{},{},{},{},{},{},{},{},{},{}",
        out.family,
        out.n,
        out.l,
        out.d,
        out.tol,
        out.seed,
        csv_field(&out.strategy),
        out.systems_checked,
        out.pairs_checked,
        residual(out.residuals.hermitian),
        residual(out.residuals.idempotent),
        residual(out.residuals.orthogonality),
        residual(out.residuals.completeness),
        residual(out.residuals.edge_orthogonality),
        out.scalar_identity_max,
        out.colours.clone().unwrap_or_default(),
        out.pass
    );
}

fn print_product_text(out: &ProductReport) {
    println!("left: H({},2,{})", out.left.n, out.left.l);
    println!("right: H({},2,{})", out.right.n, out.right.l);
    println!("lambda_max: {}", out.lambda_max);
    println!("lambda_min: {}", out.lambda_min);
    println!("distinct_eigenvalues: {}", out.distinct_eigenvalues);
    println!("multiplicity_total: {}", out.multiplicity_total);
    println!("ratio_left: {}", out.ratio_left);
    println!("ratio_right: {}", out.ratio_right);
    match &out.verdict {
        hamspec_cli::report::ProductVerdictReport::Exact { value } => {
            println!("verdict: chi_q = {value}");
        }
        hamspec_cli::report::ProductVerdictReport::Interval { lower, upper } => match upper {
            Some(upper) => println!("verdict: chi_q in [{lower}, {upper}]"),
            None => println!("verdict: chi_q >= {lower}"),
        },
    }
    println!("justification: {}", out.justification.join(", "));
}

fn print_product_csv(out: &ProductReport) {
    println!(
        "left_n,left_l,right_n,right_l,lambda_max,lambda_min,distinct_eigenvalues,\
         multiplicity_total,ratio_left,ratio_right,verdict_kind,verdict_value,\
         verdict_lower,verdict_upper,justification"
    );
    let (kind, value, lower, upper) = match &out.verdict {
        hamspec_cli::report::ProductVerdictReport::Exact { value } => {
            ("exact", value.clone(), String::new(), String::new())
        }
        hamspec_cli::report::ProductVerdictReport::Interval { lower, upper } => (
            "interval",
            String::new(),
            lower.clone(),
            upper.clone().unwrap_or_default(),
        ),
    };
    println!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        out.left.n,
        out.left.l,
        out.right.n,
        out.right.l,
        out.lambda_max,
        out.lambda_min,
        out.distinct_eigenvalues,
        out.multiplicity_total,
        out.ratio_left,
        out.ratio_right,
        kind,
        value,
        lower,
        upper,
        csv_field(&out.justification.join(";"))
    );
}
