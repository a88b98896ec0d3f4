use std::path::PathBuf;
use std::process::Command;

use pkit::grothendieck::{proj_to_delta, Family, GrothendieckVector};
use pkit::weights::Weight;
use pkit_cli::run;
use serde_json::Value;

fn pkit(args: &str) -> pkit_cli::Outcome {
    run(std::iter::once("pkit").chain(args.split_whitespace()))
}

fn golden(name: &str, args: &str) {
    let out = pkit(args);
    assert_eq!(out.code, 0, "{args}: {}", out.stderr);
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(out.stdout, want, "{args}");
    assert_eq!(pkit(args).stdout, out.stdout, "output is not stable");
}

#[test]
fn diagram_of_zero() {
    golden("diagram_zero_n4.txt", "diagram --n 4 --weight 0,0,0,0 --window -1..7");
}

#[test]
fn diagram_of_rho() {
    golden("diagram_rho_n4.txt", "diagram --n 4 --weight 3,2,1,0 --window -1..7");
}

#[test]
fn arrow_diagram() {
    golden("arrows_1100.txt", "arrows --n 4 --weight 1,1,0,0 --window -4..5");
}

#[test]
fn projective_filtrations() {
    golden("proj_zero_n2.txt", "proj --n 2 --weight 0,0");
    golden("proj_zero_n3.txt", "proj --n 3 --weight 0,0,0");
}

#[test]
fn structure_outputs() {
    golden("dual_eps4.txt", "dual --n 4 --weight 0,0,0,-1");
    golden("socle_zero_n3.txt", "socle --n 3 --weight 0,0,0");
    golden("translate_simple.txt", "translate --n 3 --rho-shifted --weight 4,2,0 --basis simple --k 0 --window -12..12");
}

#[test]
fn rho_shifted_input() {
    let a = pkit("diagram --n 4 --weight 6,4,2,0 --rho-shifted --window -1..7");
    let b = pkit("diagram --n 4 --weight 3,2,1,0 --window -1..7");
    assert_eq!(a, b);
}

#[test]
fn proj_json_round_trips() {
    let out = pkit("proj --n 2 --weight 0,0 --format json");
    assert_eq!(out.code, 0);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let w: Weight = serde_json::from_value(v["weight"].clone()).unwrap();
    assert_eq!(w, Weight::zero(2));
    let d = GrothendieckVector::from_json(&v["delta"], Family::Delta, 2).unwrap();
    assert_eq!(d, proj_to_delta(&w));
    let up: Vec<Weight> = serde_json::from_value(v["up"].clone()).unwrap();
    assert_eq!(up, vec![Weight::constant(2, -1), Weight::zero(2)]);
}

#[test]
fn arrows_json() {
    let out = pkit("arrows --n 4 --weight 1,1,0,0 --format json");
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["arrows"]["solid"]["4"], serde_json::json!([2, -2]));
    assert_eq!(v["arrows"]["dashed"]["-3"], serde_json::json!([1, 3]));
    assert!(v["arrows"]["solid"].get("0").is_none());
}

#[test]
fn other_json_shapes() {
    let v: Value = serde_json::from_str(&pkit("dual --n 3 --weight 0,0,0 --format json").stdout).unwrap();
    for key in ["dagger", "sharp", "m", "cosocle_nabla", "socle_delta"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let v: Value = serde_json::from_str(&pkit("block --n 2 --weight 0,0 --format json").stdout).unwrap();
    assert_eq!(v, serde_json::json!({"p": 0, "sign": "+"}));
    let v: Value = serde_json::from_str(&pkit("dims --n 2 --weight 1,0 --format json").stdout).unwrap();
    assert_eq!((v["gl"].as_u64(), v["thin"].as_u64(), v["thick"].as_u64()), (Some(2), Some(4), Some(16)));
    let v: Value = serde_json::from_str(&pkit("hom --n 2 --weight -1,-1 --mu 0,0 --format json").stdout).unwrap();
    assert_eq!(v["hom_dim"], 1);
}

#[test]
fn argument_errors_exit_2() {
    for args in [
        "",
        "frobnicate --n 2",
        "diagram --n 2",
        "diagram --n 2 --weight 0,1",
        "diagram --n 2 --weight 0",
        "diagram --n 2 --weight a,b",
        "diagram --n 0 --weight 0",
        "diagram --n 2 --weight 0,0 --window 3..1",
        "diagram --n 2 --weight 0,0 --window 3",
        "translate --n 2 --weight 0,0 --basis proj",
        "translate --n 2 --weight 0,0 --basis other --k 1",
        "decomp --n 2 --weight 0,0 --window -1..1",
        "verify --n 2 --suite nope",
    ] {
        let out = pkit(args);
        assert_eq!(out.code, 2, "{args}: {out:?}");
        assert!(!out.stderr.is_empty(), "{args}");
    }
}

#[test]
fn verify_passes() {
    let out = pkit("verify --n 2 --window -4..4 --suite arrows");
    assert_eq!(out.code, 0, "{}", out.stdout);
    let out = pkit("verify --n 1 --window -4..4 --suite tl --format json");
    assert_eq!(out.code, 0);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["failures"].as_array().unwrap().is_empty()));
}

#[test]
fn verify_blocks_reports_sign_counterexample() {
    let out = pkit("verify --n 1 --window -3..3 --suite blocks");
    assert_eq!(out.code, 1);
    let line = out.stdout.lines().find(|l| l.starts_with('{')).expect("counterexample line");
    let v: Value = serde_json::from_str(line).unwrap();
    assert_eq!(v["relation"], "block_action_sign");
    assert!(out.stdout.contains("block_action_p"));
}

#[test]
fn help_exits_zero() {
    let out = pkit("--help");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verify"));
}

#[test]
fn window_from_environment() {
    let bin = env!("CARGO_BIN_EXE_pkit");
    let out = Command::new(bin)
        .args(["diagram", "--n", "1", "--weight", "0"])
        .env("PKIT_WINDOW", "-1..1")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), " ○  ●  ○\n-1  0  1\n");
    let out = Command::new(bin)
        .args(["diagram", "--n", "1", "--weight", "0", "--window", "0..2"])
        .env("PKIT_WINDOW", "-1..1")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "● ○ ○\n0 1 2\n");
    let out = Command::new(bin).args(["diagram", "--n", "1"]).env_remove("PKIT_WINDOW").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
