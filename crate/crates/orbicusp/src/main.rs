use std::io::Write;
use std::process::ExitCode;

// A closed pipe ends output quietly.
macro_rules! outln {
    ($($t:tt)*) => {{ let _ = writeln!(std::io::stdout().lock(), $($t)*); }};
}
macro_rules! out {
    ($($t:tt)*) => {{ let _ = write!(std::io::stdout().lock(), $($t)*); }};
}

use clap::{Parser, Subcommand, ValueEnum};
use orbicusp::catalog::{builtin_catalog, parse_catalog, resolve};
use orbicusp::report::{analyze, to_csv, to_text, CycloMap, Report};
use orbicusp::run::{run_catalog, run_corpus};
use orbicusp::CliError;
use orbicusp_core::curve::{alpha_prime_normal, dolgachev};
use orbicusp_core::cusp::{gabrielov, gabrielov_prime};
use orbicusp_core::mirror::{enumerate_polynomials, CorpusBounds, Status, Summary, TypeFilter, VerifyConfig};
use orbicusp_core::polynomial::{parse_polynomial, InvertiblePolynomial};
use orbicusp_core::spectra::{char_poly_qh, equivariant_char_poly, verify_poincare_theorem, PoincareVerdict};
use orbicusp_core::symmetry::{dual_group, intermediate_groups, parse_group, DiagonalGroup};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(name = "orbicusp", version, about = "Invariants of orbifold curves and cusp singularities attached to invertible polynomials")]
struct Cli {
    /// Shorthand for --format json.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every invariant of a pair (f, G) and the mirror checks.
    Analyze {
        polynomial: String,
        /// G0, Gfin, 1, index:k, or generators such as "1/2(1,0,1);1/3(0,1,2)".
        #[arg(short, long, default_value = "G0")]
        group: String,
    },
    /// The Berglund-Hübsch transpose.
    Transpose { polynomial: String },
    /// The dual group G^T acting on f^T.
    Dual {
        polynomial: String,
        #[arg(short, long, default_value = "G0")]
        group: String,
    },
    /// Dolgachev numbers of (f, G).
    Dolgachev {
        polynomial: String,
        #[arg(short, long, default_value = "G0")]
        group: String,
    },
    /// Gabrielov numbers of the cusp attached to h with a group G acting on h.
    Gabrielov {
        polynomial: String,
        #[arg(short, long, default_value = "1")]
        group: String,
    },
    /// Characteristic polynomial of the monodromy of (f, G), G in SL.
    Charpoly {
        polynomial: String,
        #[arg(short, long, default_value = "1")]
        group: String,
    },
    /// Compares psi of (f, G0) with the characteristic polynomial of (f^T, G0^T).
    Poincare { polynomial: String },
    /// Runs every check over the catalog or an enumerated corpus.
    Verify {
        /// Use the built-in catalog (the default when no bounds are given).
        #[arg(long)]
        catalog: bool,
        #[arg(long)]
        max_det: Option<u64>,
        #[arg(long)]
        max_exp: Option<u64>,
        /// Restrict the corpus to one type (1-5).
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        r#type: Option<u8>,
        /// Only G0 and Gfin for each polynomial.
        #[arg(long)]
        extremes: bool,
    },
    /// Lists or checks catalog entries.
    Catalog {
        /// Read entries from this TOML file instead of the built-in set.
        #[arg(long)]
        file: Option<std::path::PathBuf>,
        #[arg(long)]
        list: bool,
        /// Only the entry with this id.
        #[arg(long)]
        id: Option<String>,
    },
    /// Lists corpus polynomials (and optionally every admissible group).
    Enumerate {
        #[arg(long, default_value_t = 300)]
        max_det: u64,
        #[arg(long, default_value_t = 300)]
        max_exp: u64,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        r#type: Option<u8>,
        #[arg(long)]
        groups: bool,
    },
}

fn poly(text: &str) -> Result<InvertiblePolynomial, CliError> {
    let f = parse_polynomial(text)?;
    if !f.has_unit_coefficients() {
        eprintln!("note: coefficients are ignored; every invariant depends only on the exponents");
    }
    Ok(f)
}

fn group(f: &InvertiblePolynomial, spec: &str) -> Result<DiagonalGroup, CliError> {
    Ok(parse_group(f, spec)?)
}

fn filter(t: Option<u8>) -> TypeFilter {
    t.map_or(TypeFilter::All, TypeFilter::Only)
}

fn print_json(v: &serde_json::Value) {
    outln!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn group_json(g: &DiagonalGroup) -> serde_json::Value {
    json!({ "order": g.order(), "generators": g.generators().iter().map(ToString::to_string).collect::<Vec<_>>() })
}

fn print_reports(reports: &[Report], format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let text = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(reports)
            };
            outln!("{}", text.map_err(|e| CliError::Output(e.to_string()))?);
        }
        Format::Csv => out!("{}", to_csv(reports)?),
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    outln!();
                }
                out!("{}", to_text(r));
            }
        }
    }
    Ok(())
}

fn summary_line(s: &Summary) -> String {
    format!("pass {}  fail {}  n/a {}", s.pass, s.fail, s.not_applicable)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let format = if cli.json { Format::Json } else { cli.format };
    match cli.command {
        Command::Analyze { polynomial, group: spec } => {
            let f = poly(&polynomial)?;
            let g = group(&f, &spec)?;
            let r = analyze(&f, &g)?;
            print_reports(std::slice::from_ref(&r), format)?;
            Ok(i32::from(!r.all_pass()))
        }
        Command::Transpose { polynomial } => {
            let f = poly(&polynomial)?;
            let t = f.transpose();
            match format {
                Format::Json => print_json(&json!({ "input": f.to_string(), "transpose": t.to_string(), "exponent_matrix": t.matrix().to_rows() })),
                _ => outln!("{t}"),
            }
            Ok(0)
        }
        Command::Dual { polynomial, group: spec } => {
            let f = poly(&polynomial)?;
            let g = group(&f, &spec)?;
            let d = dual_group(&f, &g)?;
            match format {
                Format::Json => print_json(&json!({ "group": group_json(&g), "dual": group_json(&d), "acts_on": f.transpose().to_string() })),
                _ => outln!("{d}  (order {}, acting on {})", d.order(), f.transpose()),
            }
            Ok(0)
        }
        Command::Dolgachev { polynomial, group: spec } => {
            let f = poly(&polynomial)?;
            let g = group(&f, &spec)?;
            let data = dolgachev(&f, &g)?;
            let per: Vec<[u64; 2]> = data.per_coordinate.iter().map(|e| [e.value, e.multiplicity]).collect();
            match format {
                Format::Json => print_json(&json!({ "dolgachev": data.multiset, "per_coordinate": per })),
                _ => outln!("{:?}", data.multiset),
            }
            Ok(0)
        }
        Command::Gabrielov { polynomial, group: spec } => {
            let h = poly(&polynomial)?;
            let g = group(&h, &spec)?;
            let gp = gabrielov_prime(&h)?;
            let data = gabrielov(&h, &g)?;
            match format {
                Format::Json => print_json(&json!({
                    "gamma_prime": gp.gamma_prime, "delta": gp.delta, "gabrielov": data.multiset,
                    "junior": data.j, "milnor": data.milnor,
                })),
                _ => outln!("gamma' {:?}  Gabrielov {:?}  j {}  mu {}", gp.gamma_prime, data.multiset, data.j, data.milnor),
            }
            Ok(0)
        }
        Command::Charpoly { polynomial, group: spec } => {
            let f = poly(&polynomial)?;
            let g = group(&f, &spec)?;
            let v = equivariant_char_poly(&f, &g)?;
            let exps = if g.is_trivial() {
                Some(char_poly_qh(&f)?.0.exponents.iter().map(ToString::to_string).collect::<Vec<_>>())
            } else {
                None
            };
            match format {
                Format::Json => print_json(&json!({ "charpoly": CycloMap(v.clone()), "degree": v.degree(), "exponents": exps })),
                _ => outln!("{v}  (degree {})", v.degree()),
            }
            Ok(0)
        }
        Command::Poincare { polynomial } => {
            let f = poly(&polynomial)?;
            let verdict = verify_poincare_theorem(&f)?;
            let (label, psi, phi) = match &verdict {
                PoincareVerdict::NotApplicable(why) => (format!("not applicable: {why}"), None, None),
                PoincareVerdict::Equal { psi, phi } => ("equal".to_string(), Some(psi.clone()), Some(phi.clone())),
                PoincareVerdict::NotEqual { psi, phi } => ("NOT equal".to_string(), Some(psi.clone()), Some(phi.clone())),
            };
            match format {
                Format::Json => print_json(&json!({ "verdict": label, "psi": psi.map(CycloMap), "phi": phi.map(CycloMap) })),
                _ => {
                    outln!("{label}");
                    if let (Some(psi), Some(phi)) = (psi, phi) {
                        outln!("psi  {psi}\nphi  {phi}");
                    }
                }
            }
            Ok(i32::from(verdict.is_failure()))
        }
        Command::Verify { catalog, max_det, max_exp, r#type, extremes } => {
            if catalog || (max_det.is_none() && max_exp.is_none()) {
                return catalog_command(builtin_catalog(), false, None, format);
            }
            let bounds = CorpusBounds::new(max_det.unwrap_or(300), max_exp.unwrap_or(300));
            let config = VerifyConfig { all_groups: !extremes, ..VerifyConfig::default() };
            let run = run_corpus(bounds, filter(r#type), config);
            let failures: Vec<_> = run
                .verdicts
                .iter()
                .flat_map(|v| v.statuses().filter_map(move |s| match s {
                    Status::Fail(why) => Some((v.polynomial.clone(), why)),
                    _ => None,
                }))
                .collect();
            match format {
                Format::Json => print_json(&json!({
                    "polynomials": run.verdicts.len(),
                    "pass": run.summary.pass, "fail": run.summary.fail, "not_applicable": run.summary.not_applicable,
                    "failures": failures.iter().map(|(p, w)| json!({ "polynomial": p, "reason": w })).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let reports = run
                        .verdicts
                        .iter()
                        .flat_map(|v| {
                            let f = parse_polynomial(&v.polynomial).expect("round trip");
                            intermediate_groups(&f).into_iter().map(move |g| analyze(&f, &g))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    out!("{}", to_csv(&reports)?);
                }
                Format::Text => {
                    for (p, why) in &failures {
                        outln!("FAIL {p}: {why}");
                    }
                    outln!("{} polynomials  {}", run.verdicts.len(), summary_line(&run.summary));
                }
            }
            Ok(run.summary.exit_code())
        }
        Command::Catalog { file, list, id } => {
            let entries = match file {
                Some(path) => parse_catalog(&std::fs::read_to_string(&path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?)?,
                None => builtin_catalog(),
            };
            catalog_command(entries, list, id, format)
        }
        Command::Enumerate { max_det, max_exp, r#type, groups } => {
            let polys = enumerate_polynomials(CorpusBounds::new(max_det, max_exp), filter(r#type));
            let rows: Vec<(String, Vec<DiagonalGroup>)> = polys
                .iter()
                .map(|f| (f.to_string(), if groups { intermediate_groups(f) } else { Vec::new() }))
                .collect();
            match format {
                Format::Json => print_json(&json!(rows
                    .iter()
                    .map(|(p, gs)| json!({ "polynomial": p, "groups": gs.iter().map(group_json).collect::<Vec<_>>() }))
                    .collect::<Vec<_>>())),
                _ => {
                    for (p, gs) in &rows {
                        if groups {
                            for g in gs {
                                outln!("{p}\t{}\t{g}", g.order());
                            }
                        } else {
                            outln!("{p}");
                        }
                    }
                }
            }
            Ok(0)
        }
    }
}

fn catalog_command(
    mut entries: Vec<orbicusp::catalog::CatalogEntry>,
    list: bool,
    id: Option<String>,
    format: Format,
) -> Result<i32, CliError> {
    if let Some(id) = id {
        entries.retain(|e| e.id == id);
        if entries.is_empty() {
            return Err(CliError::Input(format!("no catalog entry {id:?}")));
        }
    }
    if list {
        match format {
            Format::Json => print_json(&json!(entries)),
            _ => {
                for e in &entries {
                    let r = resolve(e)?;
                    outln!("{:<20} {:<24} {:<14} {}", e.id, r.f.to_string(), e.group, e.source);
                }
            }
        }
        return Ok(0);
    }
    let run = run_catalog(&entries, alpha_prime_normal);
    match format {
        Format::Json => print_json(&json!({
            "entries": run.outcomes.iter().map(|o| json!({
                "id": o.id,
                "passed": o.passed(),
                "checks": o.checks.iter().map(|(n, s)| json!({ "check": n, "status": s.label(), "detail": detail(s) })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "pass": run.summary.pass, "fail": run.summary.fail, "not_applicable": run.summary.not_applicable,
        })),
        _ => {
            for o in &run.outcomes {
                let failed: Vec<String> = o
                    .checks
                    .iter()
                    .filter(|(_, s)| s.is_fail())
                    .map(|(n, s)| format!("{n}: {}", detail(s)))
                    .collect();
                if failed.is_empty() {
                    outln!("pass  {}", o.id);
                } else {
                    outln!("FAIL  {}  {}", o.id, failed.join("; "));
                }
            }
            outln!("{} entries  {}", run.outcomes.len(), summary_line(&run.summary));
        }
    }
    Ok(run.summary.exit_code())
}

fn detail(s: &Status) -> String {
    match s {
        Status::Pass => String::new(),
        Status::Fail(w) | Status::NotApplicable(w) => w.clone(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
