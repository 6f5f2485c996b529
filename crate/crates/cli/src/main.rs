//! `delsarte` — exact Delsarte LP bounds from the command line.
//!
//! Subcommands: `verify` (the full kissing-number-12 certification),
//! `bound` (general classical LP bounds), `search` (re-derive a certificate
//! polynomial by maximizing c₀), `eval` (pointwise exact evaluation),
//! `plot` (CSV/SVG samples of f), and `geom` (geometry cross-checks).
//!
//! Exit codes: 0 success/verified, 1 verification failed, 2 usage error,
//! 3 inconclusive (a branch-and-bound or refinement budget ran out without
//! a verdict either way).  Identical flags produce byte-identical output:
//! no timestamps, no hidden randomness, every seed is a flag.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use delsarte_core::gegenbauer::{positivity_quadform, GegenbauerExpansion};
use delsarte_core::lpbound::{search_extended, verify_and_refine, ClassicalLpSpec, ExtendedSearchConfig};
use delsarte_core::proofcheck::{certificate_f, run_full_verification, VerificationConfig};
use delsarte_core::rational::{
    floor_int, parse_rational, render_decimal, render_rational, to_f64, Rational,
};
use delsarte_core::spheregeom::{
    config_stress, icosahedron_witness, random_exact_configuration, verify_cap_lemma, SplitMix64,
};

const EXIT_OK: u8 = 0;
const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "delsarte",
    about = "Exact Delsarte linear-programming bounds for spherical codes, \
             including a complete certification that kissing(3) = 12",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Certify the six-claim proof that the kissing number in dimension 3 is 12.
    Verify {
        /// Write the JSON certificate here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Master-inequality threshold (default 123/100).
        #[arg(long)]
        threshold: Option<String>,
        /// Read the candidate function from an expansion file instead of
        /// using the built-in certificate polynomial.
        #[arg(long)]
        function: Option<PathBuf>,
        /// Fault injection: negate coefficient k before verifying.
        #[arg(long, value_name = "K")]
        negate_coeff: Option<u32>,
    },
    /// Certified classical Delsarte LP bound for spherical codes.
    Bound {
        /// Sphere dimension d (points live on S^{d-1}).
        #[arg(long, default_value_t = 3)]
        dim: u32,
        /// Inner-product threshold cos(theta) (default 1/2: kissing).
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        cos_theta: String,
        /// Highest Gegenbauer index in the ansatz.
        #[arg(long)]
        max_degree: u32,
        /// Grid points for the discretized negativity constraint.
        #[arg(long, default_value_t = 512)]
        grid: usize,
        /// Certify/cut rounds before giving up.
        #[arg(long, default_value_t = 8)]
        refine_rounds: u32,
    },
    /// Search for a certificate polynomial by maximizing c_0 over a support.
    Search {
        /// Comma-separated Gegenbauer indices, must include 0.
        #[arg(long)]
        support: String,
        /// Master-inequality threshold (default 123/100).
        #[arg(long, default_value = "123/100")]
        threshold: String,
        /// Write the certified expansion here (readable by verify --function).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the certificate polynomial exactly at a rational point.
    Eval {
        /// Evaluation point in [-1, 1], as "num/den" or decimal.
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Expansion file (default: the built-in certificate polynomial).
        #[arg(long)]
        function: Option<PathBuf>,
    },
    /// Sample f on a grid and emit CSV or SVG (default range matches the
    /// certificate plot, t in [-1, 1/2]).
    Plot {
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        from: String,
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        to: String,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = PlotFormat::Csv)]
        format: PlotFormat,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Geometry cross-checks of the covering argument.
    Geom {
        #[arg(long, value_enum)]
        check: GeomCheck,
        /// Randomized trials (cap-lemma samples, stress configurations,
        /// prop1 configurations).
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Configuration size for the stress check.
        #[arg(long, default_value_t = 12)]
        n_points: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotFormat {
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeomCheck {
    /// Certify the cap-capacity inequality and sample for counterexamples.
    CapLemma,
    /// Randomized master-sum stress test over valid configurations.
    Stress,
    /// The 12-point icosahedron witness.
    Icosahedron,
    /// Exact Schoenberg positivity over random rational configurations.
    Prop1,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Verify { out, threshold, function, negate_coeff } => {
            cmd_verify(out, threshold, function, negate_coeff)
        }
        Cmd::Bound { dim, cos_theta, max_degree, grid, refine_rounds } => {
            cmd_bound(dim, &cos_theta, max_degree, grid, refine_rounds)
        }
        Cmd::Search { support, threshold, out } => cmd_search(&support, &threshold, out),
        Cmd::Eval { t, function } => cmd_eval(&t, function),
        Cmd::Plot { from, to, samples, format, out } => cmd_plot(&from, &to, samples, format, out),
        Cmd::Geom { check, trials, seed, n_points } => cmd_geom(check, trials, seed, n_points),
    };
    ExitCode::from(code)
}

/// Parses a rational flag value, reporting a usage error on failure.
fn parse_flag_rational(name: &str, s: &str) -> Result<Rational, u8> {
    parse_rational(s).map_err(|e| {
        eprintln!("error: invalid {name} {s:?}: {e}");
        EXIT_USAGE
    })
}

fn load_expansion(path: &Path) -> Result<GegenbauerExpansion, u8> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_USAGE
    })?;
    GegenbauerExpansion::parse_lines(&text).map_err(|e| {
        eprintln!("error: cannot parse {}: {e}", path.display());
        EXIT_USAGE
    })
}

fn write_output(path: &Path, content: &str) -> Result<(), u8> {
    std::fs::write(path, content).map_err(|e| {
        eprintln!("error: cannot write {}: {e}", path.display());
        EXIT_USAGE
    })
}

fn cmd_verify(
    out: Option<PathBuf>,
    threshold: Option<String>,
    function: Option<PathBuf>,
    negate_coeff: Option<u32>,
) -> u8 {
    let mut cfg = VerificationConfig::default();
    if let Some(t) = threshold {
        match parse_flag_rational("threshold", &t) {
            Ok(r) => cfg = cfg.with_threshold(r),
            Err(code) => return code,
        }
    }
    if let Some(path) = function {
        match load_expansion(&path) {
            Ok(f) => cfg = cfg.with_function(f),
            Err(code) => return code,
        }
    }
    if let Some(k) = negate_coeff {
        cfg = cfg.negate_coeff(k);
    }

    let cert = match run_full_verification(&cfg) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: verification aborted: {e}");
            return EXIT_INCONCLUSIVE;
        }
    };

    println!("threshold: {} = {}", cert.threshold, cert.threshold_decimal);
    println!("admissible: {}", cert.admissible);
    for claim in &cert.claims {
        println!("claim {}: {} — {}", claim.id, claim.verdict, claim.description);
    }
    if let Some(path) = &out {
        if let Err(code) = write_output(path, &cert.to_json()) {
            return code;
        }
        println!("certificate: {}", path.display());
    }

    let any_fail = cert.claims.iter().any(|c| c.verdict == "fail");
    let any_inconclusive = cert.claims.iter().any(|c| c.verdict == "inconclusive");
    if !cert.admissible || any_fail {
        println!("verification FAILED");
        return EXIT_FAILED;
    }
    if any_inconclusive {
        println!("verification inconclusive (budget exhausted)");
        return EXIT_INCONCLUSIVE;
    }
    match (&cert.bound_ratio, &cert.bound_decimal, cert.conclusion) {
        (Some(ratio), Some(decimal), Some(n)) => {
            println!("bound: N <= {ratio} = {decimal}");
            println!("kissing(3) <= {n} — CERTIFIED");
            EXIT_OK
        }
        _ => {
            // All claims pass but c_0 <= 0: nothing follows.
            println!("claims hold but no bound is derivable (c_0 <= 0)");
            EXIT_FAILED
        }
    }
}

fn cmd_bound(dim: u32, cos_theta: &str, max_degree: u32, grid: usize, refine_rounds: u32) -> u8 {
    let ct = match parse_flag_rational("cos-theta", cos_theta) {
        Ok(r) => r,
        Err(code) => return code,
    };
    if ct.abs() >= Rational::from_integer(1.into()) {
        eprintln!("error: cos-theta must lie strictly between -1 and 1");
        return EXIT_USAGE;
    }
    if grid < 2 {
        eprintln!("error: grid must be at least 2");
        return EXIT_USAGE;
    }
    let spec = ClassicalLpSpec { dim, cos_theta: ct.clone(), degree: max_degree, grid };
    match verify_and_refine(&spec, refine_rounds.max(1)) {
        Ok(rep) => {
            println!(
                "dim {dim}, cos(theta) = {}, max degree {max_degree}, grid {grid}",
                render_rational(&ct)
            );
            println!("grid LP value: {}", render_decimal(&rep.lp_value, 12));
            println!(
                "certified bound: {} = {}",
                render_rational(&rep.certified_value),
                render_decimal(&rep.certified_value, 12)
            );
            println!(
                "rounds: {}, cuts: {}, repaired: {}",
                rep.rounds, rep.cuts, rep.repaired
            );
            EXIT_OK
        }
        Err(e) => {
            eprintln!("no certified bound: {e}");
            EXIT_INCONCLUSIVE
        }
    }
}

fn cmd_search(support: &str, threshold: &str, out: Option<PathBuf>) -> u8 {
    let mut indices = Vec::new();
    for part in support.split(',') {
        match part.trim().parse::<u32>() {
            Ok(k) => indices.push(k),
            Err(_) => {
                eprintln!("error: invalid support index {part:?}");
                return EXIT_USAGE;
            }
        }
    }
    indices.sort_unstable();
    indices.dedup();
    if !indices.contains(&0) {
        eprintln!("error: support must include index 0 (the bound is theta/c_0)");
        return EXIT_USAGE;
    }
    let theta = match parse_flag_rational("threshold", threshold) {
        Ok(r) => r,
        Err(code) => return code,
    };

    let cfg = ExtendedSearchConfig {
        support: indices.clone(),
        threshold: theta.clone(),
        ..ExtendedSearchConfig::default()
    };
    match search_extended(&cfg) {
        Ok(res) => {
            let support_str: Vec<String> = indices.iter().map(u32::to_string).collect();
            println!(
                "support {{{}}}, threshold {}",
                support_str.join(","),
                render_rational(&theta)
            );
            println!("c_0 = {} = {}", render_rational(&res.c0), render_decimal(&res.c0, 12));
            println!(
                "bound: {} = {}",
                render_rational(&res.bound),
                render_decimal(&res.bound, 12)
            );
            println!("floor: {}", floor_int(&res.bound));
            println!(
                "rounds: {}, repaired: {} (delta {})",
                res.rounds,
                res.repaired,
                render_decimal(&res.repair_delta, 6)
            );
            if let Some(path) = &out {
                if let Err(code) = write_output(path, &res.expansion.to_lines()) {
                    return code;
                }
                println!("expansion: {}", path.display());
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("search failed: {e}");
            EXIT_FAILED
        }
    }
}

fn cmd_eval(t: &str, function: Option<PathBuf>) -> u8 {
    let t = match parse_flag_rational("t", t) {
        Ok(r) => r,
        Err(code) => return code,
    };
    if t.abs() > Rational::from_integer(1.into()) {
        eprintln!("error: t must lie in [-1, 1] (inner products of unit vectors)");
        return EXIT_USAGE;
    }
    let f = match function {
        Some(path) => match load_expansion(&path) {
            Ok(f) => f,
            Err(code) => return code,
        },
        None => certificate_f(),
    };
    let v = f.eval(&t);
    // Ratio's Display drops the denominator on integers, which reads better
    // than the uniform num/den used in machine-facing output.
    println!("f({t}) = {v} = {}", render_decimal(&v, 12));
    EXIT_OK
}

fn cmd_plot(
    from: &str,
    to: &str,
    samples: usize,
    format: PlotFormat,
    out: Option<PathBuf>,
) -> u8 {
    let lo = match parse_flag_rational("from", from) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let hi = match parse_flag_rational("to", to) {
        Ok(r) => r,
        Err(code) => return code,
    };
    if lo >= hi {
        eprintln!("error: plot range must satisfy from < to");
        return EXIT_USAGE;
    }
    if samples < 2 {
        eprintln!("error: need at least 2 samples");
        return EXIT_USAGE;
    }
    let f = certificate_f();
    let step = (&hi - &lo) / Rational::from_integer(((samples - 1) as i64).into());
    let rows: Vec<(Rational, Rational)> = (0..samples)
        .map(|i| {
            let t = &lo + &step * Rational::from_integer((i as i64).into());
            let v = f.eval(&t);
            (t, v)
        })
        .collect();

    let rendered = match format {
        PlotFormat::Csv => {
            let mut s = String::from("t,f\n");
            for (t, v) in &rows {
                s.push_str(&format!("{},{}\n", render_decimal(t, 12), render_decimal(v, 12)));
            }
            s
        }
        PlotFormat::Svg => render_svg(&rows),
    };
    match out {
        Some(path) => {
            if let Err(code) = write_output(&path, &rendered) {
                return code;
            }
            println!("plot: {}", path.display());
        }
        None => print!("{rendered}"),
    }
    EXIT_OK
}

/// Standalone SVG line chart of the sampled rows.
fn render_svg(rows: &[(Rational, Rational)]) -> String {
    let (w, h, margin) = (640.0f64, 400.0f64, 40.0f64);
    let xs: Vec<f64> = rows.iter().map(|(t, _)| to_f64(t)).collect();
    let ys: Vec<f64> = rows.iter().map(|(_, v)| to_f64(v)).collect();
    let (x0, x1) = (xs[0], xs[xs.len() - 1]);
    let y_min = ys.iter().cloned().fold(f64::INFINITY, f64::min);
    let y_max = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let y_pad = ((y_max - y_min) * 0.05).max(1e-12);
    let (y0, y1) = (y_min - y_pad, y_max + y_pad);
    let px = |x: f64| margin + (x - x0) / (x1 - x0) * (w - 2.0 * margin);
    let py = |y: f64| h - margin - (y - y0) / (y1 - y0) * (h - 2.0 * margin);

    let mut points = String::new();
    for (x, y) in xs.iter().zip(&ys) {
        points.push_str(&format!("{:.2},{:.2} ", px(*x), py(*y)));
    }
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" \
         viewBox=\"0 0 {w} {h}\">\n"
    ));
    svg.push_str(&format!(
        "  <rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n"
    ));
    // Axes: left/bottom box edges plus the y = 0 line if it is in range.
    svg.push_str(&format!(
        "  <line x1=\"{m}\" y1=\"{m}\" x2=\"{m}\" y2=\"{b:.2}\" stroke=\"black\"/>\n",
        m = margin,
        b = h - margin
    ));
    svg.push_str(&format!(
        "  <line x1=\"{m}\" y1=\"{b:.2}\" x2=\"{r:.2}\" y2=\"{b:.2}\" stroke=\"black\"/>\n",
        m = margin,
        b = h - margin,
        r = w - margin
    ));
    if y0 < 0.0 && y1 > 0.0 {
        svg.push_str(&format!(
            "  <line x1=\"{m}\" y1=\"{z:.2}\" x2=\"{r:.2}\" y2=\"{z:.2}\" \
             stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n",
            m = margin,
            z = py(0.0),
            r = w - margin
        ));
    }
    svg.push_str(&format!(
        "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"{}\"/>\n",
        points.trim_end()
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\">t</text>\n",
        w - margin + 8.0,
        h - margin + 4.0
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\">f(t)</text>\n",
        margin - 30.0,
        margin - 10.0
    ));
    svg.push_str("</svg>\n");
    svg
}

fn cmd_geom(check: GeomCheck, trials: u64, seed: u64, n_points: usize) -> u8 {
    match check {
        GeomCheck::CapLemma => {
            let report = verify_cap_lemma(trials, seed);
            println!(
                "cap lemma: inf enclosure [{}, {}]",
                render_rational(report.analytic.enclosure.lo()),
                render_rational(report.analytic.enclosure.hi())
            );
            println!(
                "analytic: {} ({} nodes)",
                if report.analytic.certified { "certified" } else { "NOT certified" },
                report.analytic.nodes
            );
            println!("samples: {}, counterexamples: {}", report.samples, report.counterexamples);
            println!("closest max inner product: {:.12}", report.closest_max_inner);
            if report.analytic.certified && report.counterexamples == 0 {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        GeomCheck::Stress => {
            let rep = match config_stress(n_points, trials, seed, &certificate_f()) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            };
            println!(
                "stress: n = {}, trials = {}, valid = {}, exhausted = {}",
                rep.n_points, rep.trials, rep.valid_trials, rep.exhausted_trials
            );
            if rep.valid_trials == 0 {
                println!("sampler exhausted on every trial — no data");
                return EXIT_INCONCLUSIVE;
            }
            println!(
                "worst master sum: {:.12} (trial {})",
                rep.worst_sum, rep.worst_trial
            );
            if rep.worst_sum <= 1.23 + 1e-9 {
                println!("master inequality respected on all sampled configurations");
                EXIT_OK
            } else {
                println!("master inequality EXCEEDED");
                EXIT_FAILED
            }
        }
        GeomCheck::Icosahedron => {
            let cfg = icosahedron_witness();
            let sums = cfg.master_sums(&certificate_f());
            let max_inner = cfg.max_pairwise_inner();
            let worst = sums.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            println!("icosahedron: {} vertices", cfg.len());
            println!("max pairwise inner product: {max_inner:.12}");
            println!(
                "min separation: {:.12} rad (arccos {:.12})",
                max_inner.acos(),
                max_inner
            );
            println!("worst per-point master sum: {worst:.12}");
            if max_inner < 0.5 && worst <= 1.23 + 1e-9 {
                println!("witness valid: 12 points, pairwise separation > pi/3");
                EXIT_OK
            } else {
                println!("witness INVALID");
                EXIT_FAILED
            }
        }
        GeomCheck::Prop1 => {
            let mut negative = 0u64;
            for trial in 0..trials {
                let mut rng = SplitMix64::for_trial(seed, trial);
                let d = 3 + rng.next_below(2) as u32;
                let n = 1 + rng.next_below(12) as usize;
                let k = rng.next_below(13) as u32;
                let pts = random_exact_configuration(&mut rng, n, d);
                let q = positivity_quadform(&pts, d, k).expect("generated points are unit");
                if q.is_negative() {
                    negative += 1;
                    println!("NEGATIVE form: trial {trial}, d {d}, n {n}, k {k}");
                }
            }
            println!("prop1: trials = {trials}, negative forms = {negative}");
            if negative == 0 {
                println!("all quadratic forms >= 0 exactly");
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
    }
}
