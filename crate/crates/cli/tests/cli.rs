use std::fs;
use std::path::PathBuf;
use std::process::Command;

use clap::Parser;
use podium_cli::plot::strip_version_comment;
use podium_cli::{run, Cli, EXIT_CONDITION, EXIT_ERROR, EXIT_OK};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn podium(args: &[&str]) -> Outcome {
    let cli = Cli::try_parse_from(std::iter::once("podium").chain(args.iter().copied()))
        .expect("valid arguments");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&cli, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
fn check_golden(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    let actual = strip_version_comment(actual);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(golden_dir()).unwrap();
        fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("series.txt", &["series"]),
    (
        "series_mean_cd.tsv",
        &[
            "series", "--avg", "mean", "--method", "cd", "--format", "tsv",
        ],
    ),
    ("series.svg", &["series", "--format", "svg"]),
    ("ccurve.txt", &["ccurve"]),
    ("ccurve.svg", &["ccurve", "--format", "svg"]),
    ("lrt.txt", &["lrt"]),
    ("table_op7.txt", &["table", "--scheme", "op7"]),
    (
        "table_fib13.tsv",
        &[
            "table",
            "--scheme",
            "fib13",
            "--all-rows",
            "--format",
            "tsv",
        ],
    ),
    ("skating.txt", &["skating"]),
    (
        "skating_lumped.tsv",
        &["skating", "--attribution", "lumped", "--format", "tsv"],
    ),
    ("regress.txt", &["regress"]),
    ("percapita.txt", &["percapita", "LIE=1", "NOR=39"]),
    ("validate.txt", &["validate"]),
];

#[test]
fn golden_outputs() {
    for (name, args) in GOLDEN_CASES {
        let o = podium(args);
        assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.stderr);
        check_golden(name, &o.stdout);
    }
}

#[test]
fn svg_output_is_well_formed() {
    for args in [
        &["series", "--format", "svg"][..],
        &["ccurve", "NOR=41/348", "LIE=0/3", "--format", "svg"],
    ] {
        let o = podium(args);
        let doc = roxmltree::Document::parse(&o.stdout).expect("well-formed XML");
        let root = doc.root_element();
        assert_eq!(root.tag_name().name(), "svg");
        assert_eq!(root.attribute("width"), Some("800"));
        assert_eq!(root.attribute("height"), Some("500"));
        assert!(o.stdout.contains("<!-- podium "));
    }
}

#[test]
fn svg_file_gets_tsv_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("series.svg");
    let o = podium(&["series", "--format", "svg", "--out", svg.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.is_empty());
    roxmltree::Document::parse(&fs::read_to_string(&svg).unwrap()).unwrap();
    let sidecar = fs::read_to_string(dir.path().join("series.tsv")).unwrap();
    assert_eq!(sidecar, podium(&["series", "--format", "tsv"]).stdout);
    let last = sidecar.lines().find(|l| l.starts_with("2026\t")).unwrap();
    assert_eq!(last, "2026\t116\t41\t348\t11.8\t0.1178\t0.0923\t0.1492");
}

#[test]
fn custom_colors_replace_palette() {
    let o = podium(&["ccurve", "--format", "svg", "--colors", "#aa0000,#00bb00"]);
    assert!(o.stdout.contains("#aa0000") && o.stdout.contains("#00bb00"));
    let bad = podium(&["ccurve", "--format", "svg", "--colors", "not a color"]);
    assert_eq!(bad.code, EXIT_ERROR);
}

#[test]
fn disjoint_intervals_exit_one() {
    let o = podium(&["ccurve", "NOR=41/348", "USA=33/348", "ITA=5/348"]);
    assert_eq!(o.code, EXIT_CONDITION);
    assert!(o.stdout.ends_with("all intervals overlap: no\n"));
    assert!(o.stderr.contains("NOR and ITA intervals do not overlap"));
    assert!(o.stderr.contains("USA and ITA intervals do not overlap"));
    assert!(!o.stderr.contains("NOR and USA"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["table", "--format", "svg"][..],
        &["lrt", "NOR=41/348"],
        &[
            "ccurve", "A=1/9", "B=1/9", "C=1/9", "D=1/9", "E=1/9", "F=1/9", "G=1/9",
        ],
        &["percapita", "XYZ=3"],
        &["validate", "--format", "tsv"],
    ] {
        let o = podium(args);
        assert_eq!(o.code, EXIT_ERROR, "{args:?}");
        assert!(o.stderr.starts_with("error: "), "{args:?}");
        assert!(o.stdout.is_empty());
    }
}

fn data_copy() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let src = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data");
    for entry in fs::read_dir(src).unwrap() {
        let path = entry.unwrap().path();
        fs::copy(&path, dir.path().join(path.file_name().unwrap())).unwrap();
    }
    dir
}

#[test]
fn data_dir_copy_matches_embedded() {
    let dir = data_copy();
    let d = dir.path().to_str().unwrap();
    for args in [&["series"][..], &["table"], &["skating"], &["validate"]] {
        let mut with_dir = vec!["--data", d];
        with_dir.extend_from_slice(args);
        assert_eq!(podium(&with_dir).stdout, podium(args).stdout, "{args:?}");
    }
}

#[test]
fn data_dir_errors_exit_two() {
    let dir = data_copy();
    let d = dir.path().to_str().unwrap();
    fs::remove_file(dir.path().join("population.tsv")).unwrap();
    let o = podium(&["--data", d, "percapita"]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("population.tsv"));

    let games = dir.path().join("games_norway.tsv");
    let text = fs::read_to_string(&games)
        .unwrap()
        .replacen("\t116\t", "\t11x\t", 1);
    fs::write(&games, text).unwrap();
    let o = podium(&["--data", d, "series"]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(
        o.stderr.contains("games_norway.tsv") && o.stderr.contains("11x"),
        "{}",
        o.stderr
    );
}

#[test]
fn failed_validation_exits_one() {
    let dir = data_copy();
    let nations = dir.path().join("nations_2026.tsv");
    // Give NOR one extra gold without touching the totals row.
    let text = fs::read_to_string(&nations).unwrap().replacen(
        "NOR\t18\t12\t11\t41",
        "NOR\t19\t12\t11\t42",
        1,
    );
    fs::write(&nations, text).unwrap();
    let o = podium(&["--data", dir.path().to_str().unwrap(), "validate"]);
    assert_eq!(o.code, EXIT_CONDITION, "{}{}", o.stdout, o.stderr);
    assert!(o.stdout.contains("FAIL  gold sum: expected 116, found 117"));
    assert!(o.stderr.contains("gold sum"));
}

#[test]
fn regress_file_and_separation() {
    let dir = tempfile::tempdir().unwrap();
    let ok = dir.path().join("two_groups.tsv");
    fs::write(
        &ok,
        "code\tsuccesses\ttrials\tgroup\nA\t10\t40\t0\nB\t25\t50\t1\n",
    )
    .unwrap();
    let o = podium(&["regress", ok.to_str().unwrap(), "--format", "tsv"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let slope: f64 = o
        .stdout
        .lines()
        .nth(2)
        .unwrap()
        .split('\t')
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    assert!((slope - 3.0_f64.ln()).abs() < 1e-7, "{slope}");

    let sep = dir.path().join("separated.tsv");
    fs::write(
        &sep,
        "code\tsuccesses\ttrials\tx\nA\t0\t20\t0\nB\t20\t20\t1\n",
    )
    .unwrap();
    let o = podium(&["regress", sep.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("separation"), "{}", o.stderr);

    let o = podium(&["regress", dir.path().join("missing.tsv").to_str().unwrap()]);
    assert_eq!(o.code, EXIT_ERROR);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_podium");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["lrt"]), Some(EXIT_OK));
    assert_eq!(
        status(&["ccurve", "NOR=41/348", "ITA=5/348"]),
        Some(EXIT_CONDITION)
    );
    assert_eq!(status(&["series", "--level", "1.5"]), Some(EXIT_ERROR));
    assert_eq!(status(&["no-such-command"]), Some(EXIT_ERROR));
    let out = Command::new(bin).args(["lrt"]).output().unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).contains("p = 0.153"));
}
