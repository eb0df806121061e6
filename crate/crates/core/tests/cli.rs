use std::path::PathBuf;
use std::process::{Command, Output};

use holofourier::invariants::{StokesArrangement, StokesLine};
use holofourier::report::render_stokes_svg;

fn data(name: &str) -> String {
    format!("{}/data/{}.json", env!("CARGO_MANIFEST_DIR"), name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{}.txt", env!("CARGO_MANIFEST_DIR"), name)).unwrap()
}

fn tool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holofourier")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("holofourier-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn text_reports_match_golden_files() {
    let cases: [(&[&str], &str); 5] = [
        (&["report", "--input", &data("a23")], "a23_report"),
        (&["report", "--input", &data("quadric2")], "quadric2_report"),
        (&["boundary", "--input", &data("a23"), "--slice", "s1"], "a23_boundary_s1"),
        (&["rank", "--input", &data("torus2")], "torus2_rank"),
        (&["multiplicity", "--input", &data("torus2")], "torus2_multiplicity"),
    ];
    for (args, name) in cases {
        let o = tool(args);
        assert!(o.status.success(), "{}: {}", name, String::from_utf8_lossy(&o.stderr));
        assert_eq!(stdout(&o), golden(name), "{}", name);
    }
}

#[test]
fn a23_boundary_reports_the_double_pole() {
    let out = stdout(&tool(&["boundary", "--input", &data("a23"), "--slice", "s1"]));
    assert!(out.contains("factor E^((-4/27)*u^-2) x1"), "{}", out);
    assert!(out.contains("irregularity: 2 [exact]"));
}

#[test]
fn output_is_deterministic() {
    let args = ["report", "--input", &data("quadric3"), "--seed", "3"];
    assert_eq!(tool(&args).stdout, tool(&args).stdout);
    let (a, b) = (scratch("a.svg"), scratch("b.svg"));
    for p in [&a, &b] {
        let o = tool(&["stokes", "--input", &data("torus2"), "--w", "2,3,5", "--svg", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn exit_codes_follow_the_contract() {
    assert_eq!(tool(&["rank", "--input", &data("quadric2")]).status.code(), Some(0));
    // malformed polynomial
    let bad = scratch("bad.json");
    std::fs::write(&bad, r#"{"dim": 2, "components": [{"kind": "conormal_hypersurface", "poly": "z1^^2", "mult": 1}]}"#).unwrap();
    let o = tool(&["rank", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("components[0].poly"));
    // not squarefree
    let sq = scratch("square.json");
    std::fs::write(&sq, r#"{"dim": 2, "components": [{"kind": "conormal_hypersurface", "poly": "(z1^2+z2^2-1)^2", "mult": 1}]}"#).unwrap();
    assert_eq!(tool(&["validate", "--input", sq.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(tool(&["rank", "--input", sq.to_str().unwrap()]).status.code(), Some(2));
    // w outside Omega
    assert_eq!(tool(&["infinity", "--input", &data("a23"), "--w", "1,0"]).status.code(), Some(3));
    assert_eq!(tool(&["stokes", "--input", &data("quadric2"), "--w", "1,i"]).status.code(), Some(3));
    // unreadable input
    assert_eq!(tool(&["rank", "--input", "/nonexistent/x.json"]).status.code(), Some(1));
}

#[test]
fn structured_output_is_versioned_json() {
    let o = tool(&["report", "--input", &data("a23"), "--format", "structured"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["rank"]["rank"], 3);
    assert_eq!(v["discriminant"]["delta"], "w1*w2");
    for key in ["descriptor", "omega", "slices", "infinity", "stokes", "chi", "multiplicities", "provenance"] {
        assert!(v.get(key).is_some(), "missing {}", key);
    }
    assert_eq!(v["provenance"]["seed"], 0);
    assert_eq!(v["provenance"]["precision"], 128);
}

#[test]
fn quadric_stokes_svg_has_one_vertical_chord() {
    let p = scratch("q.svg");
    let o = tool(&["stokes", "--input", &data("quadric2"), "--w", "1,0", "--svg", p.to_str().unwrap()]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&p).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("<line").count(), 1);
    assert!(svg.contains(r#"x1="200.000" y1="360.000" x2="200.000" y2="40.000""#), "{}", svg);
    assert!(!svg.contains("href"));
}

#[test]
fn svg_of_empty_and_two_line_arrangements() {
    let mut a = StokesArrangement { w: vec![], values: vec![], directions: vec![], pairs: vec![] };
    let empty = render_stokes_svg(&a);
    assert!(empty.contains("<circle"));
    assert_eq!(empty.matches("<line").count(), 0);
    a.directions = vec![StokesLine { theta: 0.0, pairs: vec![(0, 1)] }, StokesLine { theta: 1.0, pairs: vec![(0, 2), (1, 2)] }];
    let two = render_stokes_svg(&a);
    assert_eq!(two.matches("<line").count(), 2);
    assert_eq!(two.matches("<text").count(), 2);
    assert!(two.contains(">0-2,1-2</text>"));
}

#[test]
fn svg_flag_is_refused_outside_stokes() {
    let p = scratch("r.svg");
    let o = tool(&["rank", "--input", &data("quadric2"), "--svg", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}
