use std::process::{Command, Output};

use mmp132::json::{RouteTableJson, SeriesJson, TableJson};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mmp132"))
        .env_remove(mmp132::CACHE_DIR_ENV)
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count() {
    let o = run(&["count", "123", "0,0,1,0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "2");
    assert_eq!(stdout(&run(&["count", "471569283", "2,1,2,1"])).trim(), "2");
    assert_eq!(stdout(&run(&["count", "12", "e,e,e,e"])).trim(), "0");
    assert_eq!(
        stdout(&run(&["count", "10,9,8,7,6,5,4,3,2,1", "0,0,0,1"])).trim(),
        "9"
    );
    assert_eq!(
        stdout(&run(&["--format", "json", "count", "123", "0,0,1,0"])).trim(),
        r#""2""#
    );
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["count", "1223", "0,0,1,0"][..],
        &["count", "123", "0,0,1"],
        &["table", "x", "3"],
        &["verify", "bogus"],
        &["oeis", "A00012"],
        &["nonsense"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unsupported_shapes_exit_3() {
    assert_eq!(run(&["gf", "1,1,1,0", "5"]).status.code(), Some(3));
    assert_eq!(run(&["table", "4,2,e,e", "4", "gf"]).status.code(), Some(3));
    assert_eq!(
        run(&["table", "1,1,1,0", "4", "both"]).status.code(),
        Some(3)
    );
}

#[test]
fn table_both_csv() {
    let o = run(&["table", "1,0,1,0", "5", "both", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,c0,c1,c2,c3,agree");
    assert_eq!(lines[6], "5,16,17,8,1,true");
}

#[test]
fn table_json_roundtrips() {
    let o = run(&["table", "0,1,0,1", "8", "both"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let parsed: RouteTableJson = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), text.trim_end());
    assert!(parsed.rows.iter().all(|r| r.agree == Some(true)));
    assert_eq!(parsed.rows[8].coeffs[4], "368");
    let stderr = String::from_utf8(o.stderr).unwrap();
    assert!(stderr.contains("x^4 t^8"), "{stderr}");
}

#[test]
fn empty_coordinates_use_the_oracle() {
    let o = run(&["table", "4,2,e,e", "4"]);
    assert!(o.status.success());
    let parsed: RouteTableJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(parsed.route, "oracle");
    assert_eq!(parsed.rows.len(), 5);
    assert!(parsed.rows.iter().all(|r| r.agree.is_none()));
}

#[test]
fn gf_outputs() {
    assert_eq!(
        stdout(&run(&["gf", "2,0,2,0", "9", "--x0"])).trim(),
        "1,1,2,5,14,40,115,331,953,2744"
    );
    let o = run(&["gf", "0,0,0,0", "4"]);
    let text = stdout(&o);
    let json: SeriesJson = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&json).unwrap(), text.trim_end());
    assert_eq!(json.coeffs[3], ["0", "0", "0", "5"]);
    let csv = stdout(&run(&["gf", "0,0,0,0", "3", "--format", "csv"]));
    assert_eq!(csv.lines().next(), Some("n,c0,c1,c2,c3"));
    assert_eq!(
        stdout(&run(&[
            "gf", "1,0,2,0", "--order", "6", "--x0", "--format", "json"
        ]))
        .trim(),
        r#"["1","1","2","5","12","29","70"]"#
    );
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "catalog"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("ERRATUM")).count(), 2);
    assert!(text.contains(" 0 failed, 2 errata"));

    let o = run(&["--offline", "verify", "oeis", "--format", "json"]);
    assert!(o.status.success());
    let lines: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(lines.as_array().unwrap().len(), 6);
    assert!(lines
        .as_array()
        .unwrap()
        .iter()
        .all(|l| l["status"] == "pass"));
}

#[test]
fn verify_all_passes() {
    let o = run(&["--offline", "verify", "all"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn oeis_offline_fixture() {
    let o = run(&["--offline", "oeis", "A052963"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("source fixture"));
    assert!(text.contains("1,2,5,14,40,115"));
    assert_eq!(
        run(&["--offline", "oeis", "A999999"]).status.code(),
        Some(1)
    );
    assert!(run(&["--offline", "oeis"]).status.success());
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_mmp132"))
        .env(mmp132::CACHE_DIR_ENV, dir.path())
        .args(["table", "2,0,0,1", "6", "oracle"])
        .output()
        .unwrap();
    assert!(o.status.success());
    let cached = std::fs::read_to_string(dir.path().join("tables").join("2_0_0_1.json")).unwrap();
    let table: TableJson = serde_json::from_str(&cached).unwrap();
    assert_eq!(table.rows.len(), 7);

    let flag = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_mmp132"))
        .env(mmp132::CACHE_DIR_ENV, dir.path())
        .args([
            "--cache-dir",
            flag.path().to_str().unwrap(),
            "table",
            "1,0,0,1",
            "3",
            "oracle",
        ])
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(flag.path().join("tables").join("1_0_0_1.json").exists());
    assert!(!dir.path().join("tables").join("1_0_0_1.json").exists());
}

#[test]
fn cap_is_a_usage_error() {
    let o = run(&["--cap", "5", "table", "1,0,0,0", "6", "oracle"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("cap"));
}
