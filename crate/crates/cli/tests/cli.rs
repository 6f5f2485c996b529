//! Black-box tests of the command-line surface: argument validation, exit
//! codes, and the exact text of the small deterministic outputs.

use std::path::PathBuf;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn delsarte(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_delsarte"))
        .args(args)
        .output()
        .expect("failed to launch the delsarte binary");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

fn temp_path(tag: &str) -> PathBuf {
    std::env::temp_dir().join(format!("delsarte-cli-{}-{tag}", std::process::id()))
}

// ---------------------------------------------------------------------------
// eval

#[test]
fn eval_reports_exact_values() {
    let run = delsarte(&["eval", "--t", "1"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert_eq!(run.stdout.trim(), "f(1) = 99999853/100000000 = 0.99999853");

    let run = delsarte(&["eval", "--t", "-1"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout.trim(), "f(-1) = 22999929/100000000 = 0.22999929");

    // The cap-boundary value: tiny but strictly negative.
    let run = delsarte(&["eval", "--t", "1/2"]);
    assert_eq!(run.code, 0);
    assert!(
        run.stdout.contains("= -61239/819200000000 ="),
        "unexpected f(1/2): {}",
        run.stdout
    );
}

#[test]
fn eval_rejects_bad_arguments() {
    assert_eq!(delsarte(&["eval", "--t", "3/2"]).code, 2);
    assert_eq!(delsarte(&["eval", "--t", "-3/2"]).code, 2);
    assert_eq!(delsarte(&["eval", "--t", "pi/3"]).code, 2);
    assert_eq!(delsarte(&["eval", "--t", "1/0"]).code, 2);
}

#[test]
fn eval_reads_expansion_files() {
    let path = temp_path("flat.txt");
    std::fs::write(&path, "dim 3\n0 1\n").unwrap();
    let run = delsarte(&["eval", "--t", "0", "--function", path.to_str().unwrap()]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert_eq!(run.stdout.trim(), "f(0) = 1 = 1");
    let _ = std::fs::remove_file(&path);
}

// ---------------------------------------------------------------------------
// verify

#[test]
fn verify_missing_function_file_is_usage_error() {
    let run = delsarte(&["verify", "--function", "/no/such/delsarte-file.txt"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("cannot read"), "stderr: {}", run.stderr);
}

#[test]
fn verify_unwritable_certificate_path_is_usage_error() {
    let run = delsarte(&["verify", "--out", "/no/such/dir/cert.json"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("cannot write"), "stderr: {}", run.stderr);
}

#[test]
fn verify_rejects_malformed_threshold() {
    assert_eq!(delsarte(&["verify", "--threshold", "fast"]).code, 2);
}

// ---------------------------------------------------------------------------
// bound

#[test]
fn bound_degree_one_is_inconclusive() {
    // No admissible degree-1 expansion is nonpositive on the interval, so
    // the solver reports that no bound is derivable at this degree.
    let run = delsarte(&["bound", "--dim", "3", "--max-degree", "1"]);
    assert_eq!(run.code, 3);
    assert!(run.stderr.contains("no certified bound"), "stderr: {}", run.stderr);
}

#[test]
fn bound_validates_grid_and_angle() {
    assert_eq!(delsarte(&["bound", "--dim", "3", "--max-degree", "6", "--grid", "1"]).code, 2);
    assert_eq!(
        delsarte(&["bound", "--dim", "3", "--max-degree", "6", "--cos-theta", "3/2"]).code,
        2
    );
    assert_eq!(
        delsarte(&["bound", "--dim", "3", "--max-degree", "6", "--cos-theta", "-1"]).code,
        2
    );
}

// ---------------------------------------------------------------------------
// plot

#[test]
fn plot_csv_exact_rows() {
    let run = delsarte(&["plot", "--from", "-1", "--to", "1/2", "--samples", "4"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], "t,f");
    assert_eq!(lines[1], "-1,0.22999929");
    assert_eq!(lines[2], "-0.5,-0.00280154774536");
    assert_eq!(lines[3], "0,-0.00008756");
    assert!(lines[4].starts_with("0.5,-0.0000000747546386"), "last row: {}", lines[4]);
}

#[test]
fn plot_default_resolution_to_file() {
    let path = temp_path("plot.csv");
    let run = delsarte(&["plot", "--out", path.to_str().unwrap()]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let text = std::fs::read_to_string(&path).unwrap();
    // Header plus the default 500 sample rows.
    assert_eq!(text.lines().count(), 501);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn plot_svg_is_well_formed() {
    let run = delsarte(&["plot", "--format", "svg", "--samples", "64"]);
    assert_eq!(run.code, 0);
    let svg = run.stdout;
    assert!(svg.starts_with("<svg"), "not an svg document");
    assert!(svg.contains("<polyline"));
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn plot_validates_range_and_samples() {
    assert_eq!(delsarte(&["plot", "--from", "1/2", "--to", "-1"]).code, 2);
    assert_eq!(delsarte(&["plot", "--samples", "1"]).code, 2);
    assert_eq!(delsarte(&["plot", "--format", "gif"]).code, 2);
}

// ---------------------------------------------------------------------------
// search

#[test]
fn search_requires_index_zero() {
    let run = delsarte(&["search", "--support", "1,2,3"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("must include index 0"), "stderr: {}", run.stderr);
    assert_eq!(delsarte(&["search", "--support", "0,x"]).code, 2);
}

#[test]
fn search_constant_only_support_has_no_bound() {
    // With support {0} the negativity constraints force c_0 <= 0, so the
    // search certifies an optimum of zero and no bound follows.
    let run = delsarte(&["search", "--support", "0"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("search failed"), "stderr: {}", run.stderr);
}

// ---------------------------------------------------------------------------
// geom

#[test]
fn geom_rejects_unknown_check() {
    assert_eq!(delsarte(&["geom", "--check", "tetrahedron"]).code, 2);
}

#[test]
fn geom_stress_smoke() {
    let run = delsarte(&[
        "geom", "--check", "stress", "--n-points", "4", "--trials", "5", "--seed", "3",
    ]);
    assert_eq!(run.code, 0, "stdout: {}\nstderr: {}", run.stdout, run.stderr);
    assert!(
        run.stdout.contains("master inequality respected"),
        "stdout: {}",
        run.stdout
    );
}

#[test]
fn geom_prop1_smoke() {
    let run = delsarte(&["geom", "--check", "prop1", "--trials", "3", "--seed", "11"]);
    assert_eq!(run.code, 0, "stdout: {}\nstderr: {}", run.stdout, run.stderr);
    assert!(
        run.stdout.contains("all quadratic forms >= 0 exactly"),
        "stdout: {}",
        run.stdout
    );
}
