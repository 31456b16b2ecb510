use std::path::Path;
use std::process::Command;

use proptest::prelude::*;

fn hopfhc(config: &Path, extra: &[&str], threads: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hopfhc"));
    cmd.arg(config).args(extra);
    if let Some(t) = threads {
        cmd.env("HOPFHC_THREADS", t);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> std::path::PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn without_time(json: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(json).unwrap();
    v.as_object_mut().unwrap().remove("wall_time_ms");
    v
}

#[test]
fn check_on_kc2_passes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(&dir, "kc2.cfg", "algebra = kC2\ncoefficient = trivial\ntheory = check\nmax_degree = 3\n");
    let (code, out, _) = hopfhc(&cfg, &[], None);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    let ledger = v["ledger"].as_array().unwrap();
    assert!(ledger.len() > 20);
    assert!(ledger.iter().all(|e| e["pass"] == true), "{out}");
}

#[test]
fn cyclic_of_the_point_writes_ranks_to_output() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(&dir, "point.cfg", "algebra = k\ncoefficient = trivial\ntheory = cyclic\nmax_degree = 1\n");
    let report = dir.path().join("report.json");
    let (code, out, _) = hopfhc(&cfg, &["--output", report.to_str().unwrap(), "--max-degree", "3"], None);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let ranks: Vec<u64> = v["ranks"].as_array().unwrap().iter().map(|r| r["rank"].as_u64().unwrap()).collect();
    assert_eq!(ranks, [1, 0, 1, 0]);
    assert_eq!(v["config_echo"]["max_degree"], 3);
}

#[test]
fn informational_ayd_failure_keeps_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(&dir, "self.cfg", "algebra = sweedler4\ncoefficient = coalgebra_self\ntheory = check\nmax_degree = 2\n");
    let (code, out, _) = hopfhc(&cfg, &[], None);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let entry = |name: &str| v["ledger"].as_array().unwrap().iter().find(|e| e["name"] == name).cloned().unwrap();
    let ayd = entry("aYD");
    assert_eq!(ayd["pass"], false);
    assert!(ayd["witness"].as_str().unwrap().starts_with("h=g, y=x"));
    assert_eq!(entry("t^{n+1}=id on ℂ𝕄")["pass"], true);
}

#[test]
fn refused_route_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(&dir, "p.cfg", "algebra = sweedler4\ntheory = hochschild\nroute = p_image\nmax_degree = 1\n");
    let (code, out, err) = hopfhc(&cfg, &[], None);
    assert_eq!(code, 1);
    assert!(out.contains("anti-Yetter-Drinfeld"));
    assert!(err.contains("FAIL"));
}

#[test]
fn config_errors_exit_two_without_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("never.json");
    for (i, text) in ["algebra = kC2\ntheory = frobnicate\n", "algebra kC2\n", "algebra = kC2\ncolour = red\n"].iter().enumerate() {
        let cfg = write(&dir, &format!("bad{i}.cfg"), text);
        let (code, out, err) = hopfhc(&cfg, &["--output", report.to_str().unwrap()], None);
        assert_eq!(code, 2, "{text}");
        assert!(out.is_empty() && !err.is_empty());
        assert!(!report.exists());
    }
    let (code, _, _) = hopfhc(&dir.path().join("missing.cfg"), &[], None);
    assert_eq!(code, 2);
    let cfg = write(&dir, "ok.cfg", "algebra = k\n");
    assert_eq!(hopfhc(&cfg, &[], Some("zero")).0, 2);
}

#[test]
fn thread_count_does_not_change_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(&dir, "s.cfg", "algebra = sweedler4\ncoefficient = modular_pair\ntheory = cyclic\nroute = both\nmax_degree = 2\n");
    let (c1, one, _) = hopfhc(&cfg, &[], Some("1"));
    let (c2, many, _) = hopfhc(&cfg, &[], Some("4"));
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(without_time(&one), without_time(&many));
}

#[test]
fn quotient_key_adds_the_lemma_ledger() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(&dir, "q.cfg", "algebra = sweedler4\ncoefficient = trivial\ntheory = check\nquotient = x\nmax_degree = 2\n");
    let (_, out, _) = hopfhc(&cfg, &[], None);
    assert!(out.contains("J is a coideal"));
}

const KEYS: &[(&str, &str)] = &[
    ("algebra", "sweedler4"),
    ("coefficient", "modular_pair"),
    ("coefficient.sigma", "g"),
    ("theory", "cyclic"),
    ("route", "both"),
    ("max_degree", "2"),
];

proptest! {
    #[test]
    fn layout_does_not_matter(order in Just((0..KEYS.len()).collect::<Vec<_>>()).prop_shuffle(),
                              pad in proptest::collection::vec(0usize..3, KEYS.len()),
                              comments in proptest::collection::vec(any::<bool>(), KEYS.len())) {
        let mut text = String::new();
        for (slot, &i) in order.iter().enumerate() {
            let (k, v) = KEYS[i];
            let sp = " ".repeat(pad[slot]);
            if comments[slot] {
                text.push_str("# a comment line = with equals\n\n");
            }
            text.push_str(&format!("{sp}{k}{sp}={sp}{v}{sp}{}\n", if comments[slot] { " # trailing" } else { "" }));
        }
        let canonical: String = KEYS.iter().map(|(k, v)| format!("{k} = {v}\n")).collect();
        prop_assert_eq!(hopfhc::parse_config(&text).unwrap(), hopfhc::parse_config(&canonical).unwrap());
    }

    #[test]
    fn unknown_keys_are_rejected_by_name(key in "[a-z_]{1,8}(\\.[a-z]{1,5})?") {
        let known = ["algebra", "coefficient", "theory", "route", "max_degree", "quotient", "output"];
        prop_assume!(!known.contains(&key.as_str()));
        let err = hopfhc::parse_config(&format!("algebra = kC2\n{key} = 1\n")).unwrap_err();
        prop_assert_eq!(err.key(), Some(key.as_str()));
    }
}
