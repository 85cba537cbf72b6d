use cli::run;
use serde_json::Value;

fn cmd(args: &[&str]) -> cli::Outcome {
    run(std::iter::once("qdecouple").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--format", "json"];
    a.extend_from_slice(args);
    let o = cmd(&a);
    assert_eq!(o.code, 0, "{}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

#[test]
fn normal_form_of_a_square() {
    let o = cmd(&["nf", "--dim", "3", "--algebra", "euclidean", "--expr", "p[1]*p[1]"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.trim(), "p[1]^2");
    let v = json(&["nf", "--dim", "3", "--algebra", "euclidean", "--expr", "p[1]*p[1]"]);
    assert_eq!(v["nf"], "p[1]^2");
    assert_eq!(v["N"], 3);
}

#[test]
fn anchor_image() {
    let o = cmd(&["phi", "--dim", "3", "--which", "minus", "--gen", "L-[0,0]"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout.trim(), "1");
}

#[test]
fn glued_map_at_n3_and_refusal_at_n4() {
    let o = cmd(&["phi", "--dim", "3", "--which", "glued", "--gen", "L+[1,1]"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let o = cmd(&["phi", "--dim", "4", "--which", "glued", "--gen", "L+[1,1]"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("even N"), "{}", o.stderr);
}

#[test]
fn zeta_is_in_the_cross_product() {
    let v = json(&["zeta", "--dim", "3", "--which", "plus", "--gen", "L+[1,1]"]);
    assert!(!v["image"].as_str().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["nf", "--dim", "3", "--algebra", "euclidean", "--expr", "p[1]*"][..],
        &["nf", "--dim", "2", "--algebra", "euclidean", "--expr", "p[1]"],
        &["verify", "--dim", "4", "--suite", "homomorphism-mixed"],
        &["verify", "--dim", "3", "--suite", "nonsense"],
        &["phi", "--dim", "3", "--which", "minus", "--gen", "L-[7,0]"],
    ] {
        let o = cmd(args);
        assert_eq!(o.code, 2, "{args:?}: {}", o.stderr);
        assert!(o.stdout.is_empty());
    }
    assert_eq!(cmd(&["--help"]).code, 0);
}

#[test]
fn rmatrix_report() {
    let v = json(&["rmatrix", "--dim", "3", "--check", "projectors"]);
    let checks = v["report"]["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    let o = cmd(&["rmatrix", "--dim", "5", "--mode", "eval", "--samples", "2"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
}

#[test]
fn presentation_json_is_stable() {
    let a = cmd(&["--format", "json", "presentation", "--dim", "4", "--algebra", "frt"]);
    let b = cmd(&["--format", "json", "presentation", "--dim", "4", "--algebra", "frt"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_writes_the_json_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    let o = cmd(&["--out", p, "verify", "--dim", "3", "--suite", "center"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("passed"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["suite"], "center");
}

#[test]
fn failing_suite_exits_1() {
    // The default gamma does not satisfy the gluing constraints.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gamma.json");
    let g = decoupling::gamma_default(3);
    std::fs::write(&path, serde_json::to_string(&g.to_json()).unwrap()).unwrap();
    let o = cmd(&["verify", "--dim", "3", "--suite", "homomorphism-mixed", "--gamma", path.to_str().unwrap()]);
    assert_eq!(o.code, 1, "{}{}", o.stdout, o.stderr);
    assert!(o.stdout.contains("FAIL"));
}
