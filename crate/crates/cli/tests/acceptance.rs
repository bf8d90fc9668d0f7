//! Criterion 9: scan output is byte-identical across worker counts.

use std::process::Command;

#[test]
fn criterion_9_scan_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let run = |workers: &str, name: &str| {
        let out = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_linksing"))
            .args([
                "scan",
                "--bp",
                "2..6",
                "--slots",
                "4",
                "--filter",
                "torsion-nontrivial",
                "--workers",
                workers,
                "--quiet",
                "--out",
            ])
            .arg(&out)
            .status()
            .unwrap();
        assert!(status.success());
        std::fs::read(&out).unwrap()
    };
    let single = run("1", "w1.jsonl");
    let eight = run("8", "w8.jsonl");
    assert!(!single.is_empty());
    assert_eq!(single, eight, "scan output differs between 1 and 8 workers");
    println!("criterion 9: PASS ({} bytes)", single.len());
}
