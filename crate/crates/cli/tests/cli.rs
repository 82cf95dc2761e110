//! End-to-end checks of the binary: generated files reload, headers carry
//! provenance, and exit codes follow the documented contract.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_expander-growth"))
}

fn tmp(name: &str) -> PathBuf {
    let mut dir = std::env::temp_dir();
    dir.push(format!("expander-growth-test-{}-{name}", std::process::id()));
    dir
}

#[test]
fn gen_polygon_writes_loadable_edge_list() {
    let out = tmp("flip6.edges");
    let status = bin()
        .args(["gen", "polygon", "--k", "6", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("# cmd:"));
    assert!(text.contains("# seed: 0"));
    let g = expander_growth::load_edge_list(&text).unwrap();
    assert_eq!(g.vertex_count(), 14);
    assert_eq!(g.edge_count(), 21);
    std::fs::remove_file(&out).ok();
}

#[test]
fn grow_emits_trajectory_and_bounds() {
    let edges = tmp("k5.edges");
    let traj = tmp("traj.csv");
    let est = tmp("est.csv");
    assert!(bin()
        .args(["gen", "gnp", "--n", "30", "--prob", "1", "--out"])
        .arg(&edges)
        .status()
        .unwrap()
        .success());
    let status = bin()
        .args([
            "grow",
            "--seed",
            "9",
            "--snapshot-every",
            "10",
            "--estimate-every",
            "10",
            "--samples",
            "0",
            "--lambda",
            "auto",
        ])
        .arg("--input")
        .arg(&edges)
        .arg("--out")
        .arg(&traj)
        .arg("--bounds-out")
        .arg(&est)
        .status()
        .unwrap();
    assert!(status.success());
    let traj_text = std::fs::read_to_string(&traj).unwrap();
    assert!(traj_text.contains("t,processed,queued,unvisited,pi,kappa,upsilon"));
    let last = traj_text.lines().last().unwrap();
    assert!(last.starts_with("30,30,0,0"), "final row: {last}");
    let est_text = std::fs::read_to_string(&est).unwrap();
    assert!(est_text.contains("# lambda_policy: computed"));
    assert!(est_text.contains("t,W,eUW,lower,upper"));
    // K30: at t=10 the whole graph is visited, so the bound pins n = 30.
    assert!(est_text.lines().any(|l| l.starts_with("10,30,0.0000,30.0000,30.0000")));
    for p in [&edges, &traj, &est] {
        std::fs::remove_file(p).ok();
    }
}

#[test]
fn exit_codes_follow_contract() {
    // Usage: unknown subcommand.
    let s = bin().arg("frobnicate").output().unwrap();
    assert_eq!(s.status.code(), Some(1));
    // Usage: probes = 0.
    let s = bin()
        .args(["hallknuth", "--k", "6", "--probes", "0"])
        .output()
        .unwrap();
    assert_eq!(s.status.code(), Some(1));
    // Input: invalid generator parameters.
    let s = bin()
        .args(["gen", "lps", "--p", "6", "--q", "13", "--out", "/tmp/never.edges"])
        .output()
        .unwrap();
    assert_eq!(s.status.code(), Some(2));
    // Input: missing file.
    let s = bin()
        .args(["spectral", "--input", "/nonexistent/g.edges"])
        .output()
        .unwrap();
    assert_eq!(s.status.code(), Some(2));
    // Usage: degenerate numeric-process rate.
    let s = bin()
        .args(["ernumeric", "--n", "10", "--d", "10"])
        .output()
        .unwrap();
    assert_eq!(s.status.code(), Some(1));
    // Success with help.
    let s = bin().arg("--help").output().unwrap();
    assert_eq!(s.status.code(), Some(0));
}

#[test]
fn bounds_curves_and_hallknuth_log() {
    let s = bin()
        .args(["bounds", "--curve", "delta0", "--d", "2"])
        .output()
        .unwrap();
    assert!(s.status.success());
    let text = String::from_utf8(s.stdout).unwrap();
    assert!(text.contains("0.7968121300"), "{text}");

    let s = bin()
        .args(["hallknuth", "--k", "7", "--probes", "50", "--seed", "3"])
        .output()
        .unwrap();
    assert!(s.status.success());
    let text = String::from_utf8(s.stdout).unwrap();
    assert!(text.contains("probe_index,seed,estimate,depth,running_mean"));
    assert!(text.lines().last().unwrap().starts_with("# mean="));

    let s = bin()
        .args(["ernumeric", "--n", "50", "--d", "3", "--runs", "4", "--seed", "2"])
        .output()
        .unwrap();
    assert!(s.status.success());
    let text = String::from_utf8(s.stdout).unwrap();
    assert!(text.contains("t,u_mean,q_mean,u_over_n_mean"));
}
