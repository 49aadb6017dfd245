use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn cubring(args: &[&str], input: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubring"))
        .args(args)
        .arg(input)
        .output()
        .expect("cubring runs")
}

fn json(args: &[&str], input: &Path) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = cubring(&all, input);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_picture(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn betti(v: &Value) -> Vec<u64> {
    v["betti"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b.as_u64().unwrap())
        .collect()
}

#[test]
fn betti_numbers_of_fixtures() {
    let v = json(&["betti"], &fixture("single_voxel.txt"));
    assert_eq!(betti(&v), [1, 0, 0]);
    assert_eq!(v["cells"]["q"], 27);
    assert_eq!(
        betti(&json(&["betti"], &fixture("hollow_block.txt"))),
        [1, 0, 1]
    );
    assert_eq!(
        betti(&json(&["betti"], &fixture("solid_torus.txt"))),
        [1, 1, 0]
    );
    assert_eq!(
        betti(&json(&["betti"], &fixture("block2.coords"))),
        [1, 0, 0]
    );
}

#[test]
fn counts_are_ordered() {
    for (name, args) in [
        ("single_voxel.txt", &["betti"][..]),
        ("hollow_block.txt", &["betti"]),
        ("solid_torus.txt", &["betti", "--complement"]),
        ("rings/linked_rings.txt", &["betti", "--complement"]),
    ] {
        let v = json(args, &fixture(name));
        let c = &v["cells"];
        let (q, dq, k) = (
            c["q"].as_u64().unwrap(),
            c["boundary"].as_u64().unwrap(),
            c["k"].as_u64().unwrap(),
        );
        assert!(dq <= k && k <= q, "{name}");
    }
}

#[test]
fn cup_tables_of_ring_complements() {
    let unlinked = json(
        &["cup-table", "--complement"],
        &fixture("rings/unlinked_rings.txt"),
    );
    let linked = json(
        &["cup-table", "--complement"],
        &fixture("rings/linked_rings.txt"),
    );
    assert_eq!(betti(&unlinked), [1, 2, 2]);
    assert_eq!(betti(&linked), [1, 2, 2]);
    assert_eq!(unlinked["cup"]["rank"], 0);
    assert_eq!(linked["cup"]["rank"], 1);
    for row in unlinked["cup"]["rows"].as_array().unwrap() {
        assert_eq!(row["entries"], serde_json::json!([0, 0]));
    }
    for row in linked["cup"]["rows"].as_array().unwrap() {
        let expected = if row["a1"] == row["a2"] {
            [0, 0]
        } else {
            [1, 1]
        };
        assert_eq!(row["entries"], serde_json::json!(expected));
    }
}

#[test]
fn contractible_input_has_an_empty_table() {
    let out = cubring(&["cup-table"], &fixture("single_voxel.txt"));
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("cup table empty\nrank 0\n"), "{text}");
}

#[test]
fn cycle_records() {
    let v = json(&["cycles"], &fixture("hollow_block.txt"));
    let cycles = v["cycles"].as_array().unwrap();
    assert_eq!(cycles.len(), 2);
    assert_eq!(cycles[0]["dim"], 0);
    assert_eq!(cycles[1]["dim"], 2);
    let inner = serde_json::json!([
        [0, 1, 1],
        [1, 0, 1],
        [1, 1, 0],
        [1, 1, 2],
        [1, 2, 1],
        [2, 1, 1]
    ]);
    assert_eq!(cycles[1]["voxels"], inner);

    let v = json(&["cycles"], &fixture("solid_torus.txt"));
    let loops: Vec<&Value> = v["cycles"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["dim"] == 1)
        .collect();
    assert_eq!(loops.len(), 1);
    assert!(loops[0]["voxels"].as_array().unwrap().len() >= 4);

    let v = json(&["cycles"], &fixture("single_voxel.txt"));
    assert_eq!(
        v["cycles"],
        serde_json::json!([{"generator": 0, "dim": 0, "voxels": [[0, 0, 0]], "fallback": false}])
    );
}

#[test]
fn every_fixture_verifies() {
    let root = fixture("");
    let mut n = 0;
    for (dir, args) in [
        (root.clone(), &["verify"][..]),
        (root.join("rings"), &["verify", "--complement"]),
    ] {
        for entry in std::fs::read_dir(dir).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                continue;
            }
            let out = cubring(args, &path);
            assert!(
                out.status.success(),
                "{}: {}",
                path.display(),
                String::from_utf8_lossy(&out.stderr)
            );
            assert!(!stdout(&out).contains("FAIL"));
            n += 1;
        }
    }
    assert!(n >= 7);
}

#[test]
fn rings_need_their_complement() {
    let out = cubring(&["betti"], &fixture("rings/linked_rings.txt"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_lists_every_axiom() {
    let text = stdout(&cubring(&["verify"], &fixture("hollow_block.txt")));
    for axiom in [
        "fg = id",
        "φ∂ + ∂φ = id + gf",
        "f∂ = 0",
        "∂g = 0",
        "φφ = 0",
        "fφ = 0",
        "φg = 0",
    ] {
        assert!(text.contains(&format!("PASS K model: {axiom}")), "{axiom}");
    }
    assert!(text.contains("PASS Betti numbers match the oracle"));
}

#[test]
fn corrupted_phi_fails_verification() {
    let out = cubring(&["verify", "--corrupt-phi"], &fixture("hollow_block.txt"));
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("verification failed"), "{err}");
    assert!(err.contains("cell #"), "{err}");
}

#[test]
fn exit_codes() {
    let bad = temp_picture("2 2 2\n11\n");
    let out = cubring(&["betti"], bad.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size mismatch"));

    let out = cubring(&["betti"], Path::new("/nonexistent/picture.txt"));
    assert_eq!(out.status.code(), Some(1));

    let apart = temp_picture("dims 4 1 1\n0 0 0\n3 0 0\n");
    let out = cubring(&["betti"], apart.path());
    assert_eq!(out.status.code(), Some(2));

    let empty = temp_picture("1 1 1\n0\n");
    assert_eq!(cubring(&["betti"], empty.path()).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["cup-table", "--complement", "--json"][..],
        &["cycles", "--complement"],
        &["verify", "--complement", "--json"],
    ] {
        let a = cubring(args, &fixture("rings/linked_rings.txt"));
        let b = cubring(args, &fixture("rings/linked_rings.txt"));
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cubring"))
        .args(["betti", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"1 1 1\n1\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("betti 1 0 0\n"));
}

#[test]
fn oracle_and_timing_flags() {
    let v = json(
        &["betti", "--oracle", "--timing"],
        &fixture("solid_torus.txt"),
    );
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
    let stages: Vec<&str> = v["timings_us"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s[0].as_str().unwrap())
        .collect();
    assert_eq!(stages.last(), Some(&"total"));
    let plain = json(&["betti"], &fixture("solid_torus.txt"));
    assert!(plain.get("checks").is_none() && plain.get("timings_us").is_none());
}

#[test]
fn padding_grows_the_box() {
    let v = json(
        &["betti", "--complement", "--padding", "2"],
        &fixture("single_voxel.txt"),
    );
    assert_eq!(v["dims"], serde_json::json!([5, 5, 5]));
    assert_eq!(v["complement"], 2);
    assert_eq!(betti(&v), [1, 0, 1]);
}
