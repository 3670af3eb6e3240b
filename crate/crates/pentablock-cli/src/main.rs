//! Command-line harness over the pentablock library.
//!
//! Four commands: `classify` a point of the full domain or its base,
//! `apply` an automorphism (or a Blaschke lift on base points), `verify`
//! the seeded suites, `sample` points from named regions. Machine output
//! is JSON Lines with fixed field order and 17-digit floats; exit codes
//! are 0 (all pass), 1 (a verification suite failed), 2 (usage or parse
//! error), 3 (domain error such as an exterior input).

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pentablock::{
    fmt_f64, g2_classify, lift_blaschke, minkowski_functional, parse_automorphism, parse_blaschke,
    parse_point2, parse_point3, penta_classify, royal_membership, run_all, run_suite, Error,
    G2Point, PentaPoint, Region, Result, SampleRecord, Suite, SuiteReport,
};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "pentablock", version, about = "Pentablock geometry toolkit")]
struct Cli {
    /// Classification tolerance band.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,

    /// Seed for every pseudo-random draw.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Number of samples per suite or region.
    #[arg(long, global = true, default_value_t = 100)]
    samples: u64,

    /// Emit JSON lines instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a point: "a,s,p" for the full domain, "s,p" for the base.
    Classify {
        /// Comma-separated complex components, e.g. "0.3+0.1i,1,0".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Apply an automorphism to a full point, or a Blaschke lift to a base point.
    Apply {
        /// Automorphism parameters "omega=...; eta=...; alpha=..." (full points).
        #[arg(long, conflicts_with = "blaschke")]
        map: Option<String>,
        /// Blaschke product "eta=...; zeros=[...]" (base points).
        #[arg(long)]
        blaschke: Option<String>,
        /// The point to map, "a,s,p" or "s,p" to match the chosen map.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Run one verification suite, or "all", and print one report line each.
    Verify {
        #[arg(long)]
        suite: String,
    },
    /// Draw points from a named region and print one record line each.
    Sample {
        #[arg(long)]
        region: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit_code(&e))
        }
    }
}

/// Parse errors are usage errors (2); everything else the library reports
/// is a domain error (3).
fn error_exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        _ => 3,
    }
}

fn usage_error(message: String) -> Error {
    Error::Parse { position: 0, message }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Classify { point } => {
            cmd_classify(point, cli.tol, cli.json)?;
            Ok(0)
        }
        Command::Apply { map, blaschke, point } => {
            cmd_apply(map.as_deref(), blaschke.as_deref(), point, cli.tol, cli.json)?;
            Ok(0)
        }
        Command::Verify { suite } => cmd_verify(suite, cli.samples, cli.seed, cli.tol),
        Command::Sample { region } => {
            cmd_sample(region, cli.samples, cli.seed, cli.tol)?;
            Ok(0)
        }
    }
}

/// Text form matching the CLI input grammar; f64 Display round-trips.
/// Sign-based branch: -0.0 must render as "-0i", not "+-0i".
fn fmt_complex_text(re: f64, im: f64) -> String {
    if im.is_sign_negative() {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

fn fmt_point_text(pt: &PentaPoint) -> String {
    format!(
        "{},{},{}",
        fmt_complex_text(pt.a.re, pt.a.im),
        fmt_complex_text(pt.s.re, pt.s.im),
        fmt_complex_text(pt.p.re, pt.p.im)
    )
}

fn fmt_base_text(pt: &G2Point) -> String {
    format!(
        "{},{}",
        fmt_complex_text(pt.s.re, pt.s.im),
        fmt_complex_text(pt.p.re, pt.p.im)
    )
}

fn fmt_complex_json(re: f64, im: f64) -> String {
    format!("[{},{}]", fmt_f64(re), fmt_f64(im))
}

fn fmt_point_json(pt: &PentaPoint) -> String {
    format!(
        "{{\"a\":{},\"s\":{},\"p\":{}}}",
        fmt_complex_json(pt.a.re, pt.a.im),
        fmt_complex_json(pt.s.re, pt.s.im),
        fmt_complex_json(pt.p.re, pt.p.im)
    )
}

fn fmt_base_json(pt: &G2Point) -> String {
    format!(
        "{{\"s\":{},\"p\":{}}}",
        fmt_complex_json(pt.s.re, pt.s.im),
        fmt_complex_json(pt.p.re, pt.p.im)
    )
}

/// Gauge with the origin special-cased: the functional is positively
/// homogeneous, so its natural value at 0 is 0 even though the scaling
/// ray degenerates there.
fn gauge_of(pt: &PentaPoint) -> Result<f64> {
    if pt.a.norm_sqr() + pt.s.norm_sqr() + pt.p.norm_sqr() == 0.0 {
        return Ok(0.0);
    }
    minkowski_functional(*pt)
}

fn component_count(input: &str) -> usize {
    input.matches(',').count() + 1
}

fn cmd_classify(point: &str, tol: f64, json: bool) -> Result<()> {
    match component_count(point) {
        3 => {
            let pt = parse_point3(point)?;
            let class = penta_classify(pt, tol)?;
            let gauge = gauge_of(&pt)?;
            if json {
                let hartogs = class
                    .hartogs_defect
                    .map_or_else(|| "null".to_owned(), fmt_f64);
                println!(
                    "{{\"point\":{},\"classification\":\"{}\",\"base\":\"{}\",\"base_defect\":{},\"hartogs_defect\":{},\"minkowski\":{}}}",
                    fmt_point_json(&pt),
                    class.verdict.name(),
                    class.base.verdict.name(),
                    fmt_f64(class.base.defect),
                    hartogs,
                    fmt_f64(gauge)
                );
            } else {
                println!("point: {}", fmt_point_text(&pt));
                println!("classification: {}", class.verdict.name());
                println!("base: {} (defect {})", class.base.verdict.name(), class.base.defect);
                match class.hartogs_defect {
                    Some(d) => println!("hartogs defect: {d}"),
                    None => println!("hartogs defect: n/a"),
                }
                println!("minkowski: {gauge}");
            }
        }
        2 => {
            let pt = parse_point2(point)?;
            let class = g2_classify(pt, tol)?;
            let royal = royal_membership(pt, tol).is_some();
            if json {
                println!(
                    "{{\"point\":{},\"classification\":\"{}\",\"defect\":{},\"royal\":{}}}",
                    fmt_base_json(&pt),
                    class.verdict.name(),
                    fmt_f64(class.defect),
                    royal
                );
            } else {
                println!("point: {}", fmt_base_text(&pt));
                println!("classification: {}", class.verdict.name());
                println!("defect: {}", class.defect);
                println!("royal: {}", if royal { "yes" } else { "no" });
            }
        }
        n => {
            return Err(usage_error(format!(
                "expected 2 or 3 comma-separated components, found {n}"
            )))
        }
    }
    Ok(())
}

fn cmd_apply(
    map: Option<&str>,
    blaschke: Option<&str>,
    point: &str,
    tol: f64,
    json: bool,
) -> Result<()> {
    match (map, blaschke) {
        (Some(params), None) => {
            let f = parse_automorphism(params)?;
            let pt = parse_point3(point)?;
            let input_class = penta_classify(pt, tol)?;
            let image = f.apply(&pt, tol)?;
            let image_class = penta_classify(image, tol)?;
            let agree = input_class.verdict == image_class.verdict;
            if json {
                println!(
                    "{{\"input\":{},\"input_classification\":\"{}\",\"image\":{},\"image_classification\":\"{}\",\"agree\":{}}}",
                    fmt_point_json(&pt),
                    input_class.verdict.name(),
                    fmt_point_json(&image),
                    image_class.verdict.name(),
                    agree
                );
            } else {
                println!("input: {} ({})", fmt_point_text(&pt), input_class.verdict.name());
                println!("image: {} ({})", fmt_point_text(&image), image_class.verdict.name());
                println!("stratum preserved: {agree}");
            }
        }
        (None, Some(product)) => {
            let b = parse_blaschke(product)?;
            let pt = parse_point2(point)?;
            let input_class = g2_classify(pt, tol)?;
            let image = lift_blaschke(&b, pt, tol)?;
            let image_class = g2_classify(image, tol)?;
            let agree = input_class.verdict == image_class.verdict;
            if json {
                println!(
                    "{{\"input\":{},\"input_classification\":\"{}\",\"image\":{},\"image_classification\":\"{}\",\"agree\":{}}}",
                    fmt_base_json(&pt),
                    input_class.verdict.name(),
                    fmt_base_json(&image),
                    image_class.verdict.name(),
                    agree
                );
            } else {
                println!("input: {} ({})", fmt_base_text(&pt), input_class.verdict.name());
                println!("image: {} ({})", fmt_base_text(&image), image_class.verdict.name());
                println!("stratum preserved: {agree}");
            }
        }
        _ => return Err(usage_error("apply needs exactly one of --map or --blaschke".into())),
    }
    Ok(())
}

fn cmd_verify(suite: &str, samples: u64, seed: u64, gate: f64) -> Result<u8> {
    let reports = if suite == "all" {
        run_all(samples, seed, gate)?
    } else {
        let parsed = Suite::parse(suite).ok_or_else(|| {
            usage_error(format!("unknown suite '{suite}'; expected one of {} or all", suite_list()))
        })?;
        vec![run_suite(parsed, samples, seed, gate)?]
    };
    for report in &reports {
        println!("{}", report.to_json_line());
    }
    Ok(verify_exit_code(&reports))
}

fn verify_exit_code(reports: &[SuiteReport]) -> u8 {
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.pass())
        .map(|r| r.suite_name.as_str())
        .collect();
    if failed.is_empty() {
        0
    } else {
        eprintln!("failed suites: {}", failed.join(", "));
        1
    }
}

fn suite_list() -> String {
    Suite::ALL
        .iter()
        .map(|s| s.name())
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_sample(region: &str, samples: u64, seed: u64, tol: f64) -> Result<()> {
    let parsed = Region::parse(region).ok_or_else(|| {
        usage_error(format!("unknown region '{region}'; expected one of {}", region_list()))
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let sample = parsed.sample(&mut rng);
        let record = SampleRecord::from_sample(parsed, sample, tol)?;
        println!("{}", record.to_json_line());
    }
    Ok(())
}

fn region_list() -> String {
    Region::ALL
        .iter()
        .map(|r| r.name())
        .collect::<Vec<_>>()
        .join(", ")
}
