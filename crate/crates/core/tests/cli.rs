use std::path::PathBuf;
use std::process::{Command, Output};

const T1: &str = "U(-2,1)\nC(-2,2)\nC(-2,-2)\nC(1,2)\nC(1,-2)\nL(-2,2)\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_arcstrip"))
}

fn file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("arcstrip-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn check_reports_example_two() {
    let f = file("t2.arcs", &format!("{T1}fan U from=L(1) p>=3\n"));
    let o = run(&["check", f.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["tau_compact"], false);
    assert_eq!(r["tau_inv_compact"], true);
    assert_eq!(r["cotorsion_role"], "left");
}

#[test]
fn cotorsion_defaults_to_nc() {
    let f = file("t2c.arcs", &format!("{T1}fan U from=L(1) p>=3\n"));
    let o = run(&["cotorsion", f.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["cotorsion"], true);
    let x = file("t1x.arcs", T1);
    let y = file("empty.arcs", "# nothing\n");
    assert_eq!(code(&run(&["cotorsion", x.to_str().unwrap(), y.to_str().unwrap()])), 1);
}

#[test]
fn tstructure_heart() {
    let o = run(&["tstructure", "--p", "1", "--q", "0", "--side", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["heart"], serde_json::json!(["U(0,2)", "L(-1,1)"]));
    let o = run(&["tstructure", "--p", "-inf", "--q", "0", "--side", "1"]);
    assert_eq!(code(&o), 2);
    let o = run(&["tstructure", "--p", "-inf", "--q", "+inf", "--side", "1"]);
    assert_eq!(code(&o), 2);
    let o = run(&["tstructure", "--p", "-inf", "--q", "2", "--side", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["heart"], serde_json::json!(["L(1,3)"]));
}

#[test]
fn basis_and_nc() {
    let f = file("t3.arcs", &format!("{T1}fan C from=L(1) q<=-5\n"));
    let o = run(&["basis", f.to_str().unwrap(), "--arc", "C(2,-5)"]);
    assert_eq!(code(&o), 0);
    assert!(json(&o)["basis"].as_array().unwrap().contains(&serde_json::json!("C(1,-6)")));
    let f2 = file("t2b.arcs", &format!("{T1}fan U from=L(1) p>=3\n"));
    assert_eq!(code(&run(&["basis", f2.to_str().unwrap(), "--arc", "C(2,-2)"])), 1);
    let o = run(&["nc", f.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(json(&o)["families"].is_array());
}

#[test]
fn input_errors_exit_two() {
    let bad = file("bad.arcs", "U(0,1)\n");
    assert_eq!(code(&run(&["check", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["check", "/nonexistent/file"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    let f = file("ok.arcs", T1);
    assert_eq!(code(&run(&["basis", f.to_str().unwrap(), "--arc", "U(0,1)"])), 2);
    let json_bad = file("bad.json", r#"{"arcs": [], "extra": true}"#);
    assert_eq!(code(&run(&["check", json_bad.to_str().unwrap()])), 2);
}

#[test]
fn ng_check_and_sweep() {
    let yes = file("ng_yes.arcs", "zone ng x_min=0 x_max=0\nzone ng y_min=0 y_max=0\n");
    let o = run(&["ng", "check", yes.to_str().unwrap(), "--base", "C(0,0)"]);
    assert_eq!(code(&o), 0);
    let no = file("ng_no.arcs", "zone ng x_min=1 x_max=1 y_min=3\n");
    assert_eq!(code(&run(&["ng", "check", no.to_str().unwrap(), "--base", "C(0,0)"])), 1);
    let o = run(&["oracle", "sweep", "--window", "-3", "3", "--seed", "5"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("seed 5"));
}

#[test]
fn render_is_deterministic() {
    let f = file("t1r.arcs", T1);
    let a = f.with_extension("a.svg");
    let b = f.with_extension("b.svg");
    for out in [&a, &b] {
        let o = run(&["render", f.to_str().unwrap(), "--window", "-4", "4", "-o", out.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    let sa = std::fs::read(&a).unwrap();
    assert_eq!(sa, std::fs::read(&b).unwrap());
    assert_eq!(String::from_utf8(sa).unwrap().matches("class=\"arc\"").count(), 6);
}
