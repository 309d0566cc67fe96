//! End-to-end tests of the `haga` binary: command surface, exit codes, JSON
//! shapes, and figure determinism (the CLI half of the acceptance criteria).

use std::path::Path;
use std::process::{Command, Output};

fn haga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_haga"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn classify_prints_the_case() {
    let out = haga(&["classify", "--d", "2", "--e", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "h5");

    let out = haga(&["classify", "--d", "1", "--e", "-7/3"]);
    assert_eq!(stdout(&out).trim(), "h7");
}

#[test]
fn build_emits_the_configuration_document() {
    let out = haga(&["build", "--d", "2", "--e", "1"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["case"], "h5");
    assert_eq!(v["points"]["B_prime"][0], "8/5");
    assert_eq!(v["lengths"]["EF"], "5/3");
    assert_eq!(v["circles"]["eps1"]["radius"], "5/6");
    assert_eq!(v["foldable"], true);
}

#[test]
fn verify_passes_and_reports_sixteen_checks() {
    let out = haga(&["verify", "--d", "2", "--e", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches(" pass").count(), 16);
    assert!(text.contains("case h5"));
}

#[test]
fn verify_h2_marks_not_applicable() {
    let out = haga(&["verify", "--d", "1", "--e", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("n/a"));
    assert!(text.contains("P3_1_TANGENT"));
}

#[test]
fn verify_with_oracle() {
    let out = haga(&["verify", "--d", "2", "--e", "1", "--oracle"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("oracle: max |exact - approx|"));

    // h2 is outside the oracle's domain; the exact checks still run
    let out = haga(&["verify", "--d", "1", "--e", "2", "--oracle"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("oracle: skipped"));
}

#[test]
fn verify_writes_json_report(
) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = haga(&["verify", "--d", "1", "--e", "3", "--json", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["case"], "h1");
    assert_eq!(v["checks"].as_array().unwrap().len(), 16);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&haga(&["verify", "--d", "-1", "--e", "0"])), 2);
    assert_eq!(code(&haga(&["verify", "--d", "0", "--e", "1"])), 2);
    assert_eq!(code(&haga(&["verify", "--d", "x", "--e", "1"])), 2);
    assert_eq!(code(&haga(&["verify", "--d", "1/0", "--e", "1"])), 2);
    assert_eq!(code(&haga(&["verify", "--d", "0.5", "--e", "1"])), 2);
    assert_eq!(code(&haga(&["nosuchcommand"])), 2);
}

#[test]
fn sweep_covers_all_seven_cases() {
    let out = haga(&[
        "sweep",
        "--d",
        "1",
        "--e-list",
        "-3,-1/2,0,1/3,1/2,1,3/2,2,5/2,3",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("coverage: h1 h2 h3 h4 h5 h6 h7"));
    assert!(text.contains("(10 configurations)"));
}

#[test]
fn sweep_single_h2() {
    let out = haga(&["sweep", "--d", "1", "--e-list", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("coverage: h2"));
}

#[test]
fn sweep_with_rational_grid() {
    let out = haga(&[
        "sweep", "--d", "1", "--e-from", "-1", "--e-to", "3", "--steps", "8",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("(9 configurations)"));

    let out = haga(&[
        "sweep", "--d", "1", "--e-from", "-1", "--e-to", "3", "--steps", "0",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn sweep_json_array() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    let out = haga(&["sweep", "--d", "1", "--e-list", "1/2,3", "--json", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["case"], "h5");
    assert_eq!(v[1]["case"], "h1");
}

#[test]
fn figure_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.svg");
    let p2 = dir.path().join("b.svg");
    for (path, _) in [(&p1, 0), (&p2, 1)] {
        let out = haga(&[
            "figure", "--d", "2", "--e", "1", "--circles", "alpha,delta,eps1",
            "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
    }
    let b1 = std::fs::read(&p1).unwrap();
    let b2 = std::fs::read(&p2).unwrap();
    assert!(!b1.is_empty());
    assert_eq!(b1, b2, "repeated figure runs must be byte-identical");
}

#[test]
fn figure_presets_render_for_all_cases() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["h1", "h2", "h3", "h4", "h5", "h6", "h7"] {
        let path = dir.path().join(format!("{name}.svg"));
        let out = haga(&["figure", "--paper-figure", name, "--out", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "preset {name}");
        let svg = std::fs::read_to_string(&path).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("class=\"square\""));
        assert!(svg.contains("class=\"crease\""));
    }
}

#[test]
fn figure_h4_preset_crease_is_vertical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h4.svg");
    let out = haga(&["figure", "--paper-figure", "h4", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let svg = std::fs::read_to_string(&path).unwrap();
    let crease = svg.lines().find(|l| l.contains("class=\"crease\"")).unwrap();
    let attr = |name: &str| -> String {
        crease
            .split(&format!("{name}=\""))
            .nth(1)
            .unwrap()
            .split('"')
            .next()
            .unwrap()
            .to_string()
    };
    assert_eq!(attr("x1"), attr("x2"), "h4 crease must render vertical");
    assert_ne!(attr("y1"), attr("y2"));
}

#[test]
fn figure_rejects_unknown_inputs(
) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.svg");
    let out = haga(&["figure", "--d", "1", "--e", "3", "--circles", "nosuch", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let out = haga(&["figure", "--paper-figure", "h9", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let out = haga(&["figure", "--d", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(!path.exists());
}

#[test]
fn construct_squares_from_3_4_5() {
    let out = haga(&["construct-squares", "--legs", "3,4"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let squares = v["squares"].as_array().unwrap();
    assert_eq!(squares.len(), 4);
    let mut sides: Vec<String> = squares.iter().map(|s| s["d"].as_str().unwrap().to_string()).collect();
    sides.sort();
    assert_eq!(sides, ["1", "2", "3", "6"]);
    assert!(squares.iter().all(|s| s["round_trip_ok"] == true));

    let out = haga(&["construct-squares", "--legs", "5,12"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["squares"].as_array().unwrap().iter().all(|s| s["round_trip_ok"] == true));
}

#[test]
fn construct_squares_rejects_irrational_hypotenuse() {
    let out = haga(&["construct-squares", "--legs", "1,1"]);
    assert_eq!(code(&out), 2);
    let out = haga(&["construct-squares", "--legs", "3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn svg_files_land_where_asked(
) {
    // relative path handling
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested").join("fig.svg");
    std::fs::create_dir_all(path.parent().unwrap()).unwrap();
    let out = haga(&["figure", "--d", "3/2", "--e", "5/4", "--circles", "delta,eps2,eps3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(Path::new(&path).exists());
}
