use std::process::{Command, Output};

fn maps(name: &str) -> String {
    format!("{}/maps/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn padyn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_padyn")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn check_henon() {
    let o = padyn(&["check", "--input", &maps("henon.json"), "--nmax", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["regular"], true);
    assert_eq!(v["special"], true);
    assert_eq!(v["iterate_locus_stable"], true);
    for fiber in ["locus_generic", "locus_special"] {
        assert_eq!(v[fiber]["map"], serde_json::json!(["[0:1:0]"]));
        assert_eq!(v[fiber]["inverse"], serde_json::json!(["[1:0:0]"]));
    }
}

#[test]
fn check_triangular_is_not_regular() {
    let o = padyn(&["check", "--input", &maps("triangular.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["regular"], false);
}

#[test]
fn malformed_file_exits_2() {
    let dir = std::env::temp_dir().join(format!("padyn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{\"prime\": 3,").unwrap();
    let o = padyn(&["check", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::write(&path, "{\"prime\": 3, \"precision\": 4, \"dimension\": 2, \"factors\": [{\"kind\": \"henon\", \"a\": \"1\", \"poly\": [\"x\"]}]}").unwrap();
    let o = padyn(&["cycles", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cycles_csv() {
    let o = padyn(&["cycles", "--input", &maps("henon.json"), "--levels", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "length,count\n1,2\n7,1\n");
}

#[test]
fn identity_cycles_csv() {
    let dir = std::env::temp_dir().join(format!("padyn-id-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("identity.json");
    std::fs::write(&path, "{\"prime\": 3, \"precision\": 5, \"dimension\": 2, \"factors\": []}").unwrap();
    let o = padyn(&["cycles", "--input", path.to_str().unwrap(), "--levels", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "length,count\n1,9\n");
}

#[test]
fn budget_exceeded_exits_3() {
    let o = padyn(&["cycles", "--input", &maps("henon.json"), "--levels", "1,2,3", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bound_reports() {
    let o = padyn(&["bound", "--input", &maps("henon.json"), "--levels", "1,2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["stabilized"], true);
    assert_eq!(v["per_level"][2]["certified_periods"], serde_json::json!([1, 7]));

    let o = padyn(&["bound", "--input", &maps("involution.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["m_empirical"], 2);

    let o = padyn(&["bound", "--input", &maps("translation.json"), "--levels", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["m_empirical"], 0);
    assert_eq!(v["no_periodic_points_certified"], true);

    let o = padyn(&["bound", "--input", &maps("henon.json"), "--levels", "2"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn certify_exit_codes() {
    let o = padyn(&["certify", "--input", &maps("henon.json"), "--primes", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["prime"], 3);
    assert_eq!(v["rational_points"][0]["period"], 1);
    assert_eq!(v["rational_points"][1]["within_bound"], true);

    let o = padyn(&["certify", "--input", &maps("henon_third.json"), "--primes", "3"]);
    assert_eq!(o.status.code(), Some(5));
    let o = padyn(&["certify", "--input", &maps("henon_third.json"), "--primes", "3,5", "--levels", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["prime"], 5);
}

#[test]
fn periods_and_selftest() {
    let o = padyn(&["periods", "--input", &maps("henon.json"), "--nmax", "1", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "x0,x1,period,certified,nondegenerate,residue_cycle_length\n0,0,1,true,true,1\n2,2,1,true,true,1\n"
    );
    let o = padyn(&["selftest", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["bound", "--input", &maps("conjugated.json")[..], "--levels", "1,2"],
        vec!["selftest", "--seed", "9"],
    ] {
        let a = padyn(&args);
        let b = padyn(&args);
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(a.stdout, b.stdout);
    }
}
