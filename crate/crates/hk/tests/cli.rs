//! End-to-end checks of the command-line binary against the shipped
//! scenario files: determinism of the emitted tables, parseability of the
//! JSON format, the run manifest, the built-in benchmark cases, and the
//! machine-readable error channel.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn scenario(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("scenarios")
        .join(name)
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hk"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("the binary must be runnable")
}

/// A scratch directory per test so manifests and outputs never collide.
fn temp_workdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hk-cli-{tag}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn function_output_is_deterministic_csv() {
    let dir = temp_workdir("function");
    let config = scenario("regular2d.toml");
    let args = [
        "function",
        "--config",
        config.to_str().unwrap(),
        "--format",
        "csv",
    ];
    let first = run_in(&dir, &args);
    assert!(
        first.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&first.stderr)
    );
    let second = run_in(&dir, &args);
    assert_eq!(
        first.stdout, second.stdout,
        "csv output must be byte-identical across runs"
    );

    let text = String::from_utf8(first.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "case,q,colength,normalized_num,normalized_den,estimate_num,estimate_den,verdict,normalized_f64"
    );
    assert!(
        text.lines().any(|l| l.starts_with("m,16,256,1,1,")),
        "the q=16 row must report length 256 and normalized value 1:\n{text}"
    );

    let manifest = fs::read_to_string(dir.join("hk-manifest.json")).unwrap();
    assert!(manifest.contains("\"subcommand\": \"function\""));
    assert!(manifest.contains("\"config_hash\""));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn estimate_output_parses_as_json() {
    let dir = temp_workdir("estimate");
    let config = scenario("cone_point.toml");
    let out = run_in(
        &dir,
        &[
            "estimate",
            "--config",
            config.to_str().unwrap(),
            "--format",
            "json",
            "--qmax",
            "8",
        ],
    );
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert!(rows.len() >= 4, "grid rows plus an estimate row expected");
    let estimate = rows
        .iter()
        .find(|row| row["estimate_num"].is_string())
        .expect("an estimate row must be present");
    assert_eq!(estimate["estimate_num"], "3");
    assert_eq!(estimate["estimate_den"], "2");
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn builtin_benchmark_runs_a_named_case() {
    let dir = temp_workdir("bm");
    let out = run_in(&dir, &["bm", "--case", "alpha=1", "--qmax", "4"]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("7/2"),
        "the q = 2,4 refined estimate 7/2 must appear:\n{text}"
    );
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn unknown_configuration_keys_are_rejected() {
    let dir = temp_workdir("badconfig");
    let bad = dir.join("bad.toml");
    fs::write(
        &bad,
        "[field]\nkind = \"prime\"\np = 2\nsurprise = 1\n\n[ring]\nvariables = [\"x\"]\n",
    )
    .unwrap();
    let out = run_in(&dir, &["function", "--config", bad.to_str().unwrap()]);
    assert!(!out.status.success(), "unknown keys must be fatal");
    let stderr = String::from_utf8(out.stderr).unwrap();
    let record: serde_json::Value =
        serde_json::from_str(stderr.lines().last().unwrap()).unwrap();
    assert_eq!(record["error"]["kind"], "config_error");
    fs::remove_dir_all(&dir).ok();
}
