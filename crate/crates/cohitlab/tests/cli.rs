use std::path::Path;
use std::process::{Command, Output};

use cohitlab::cache::{convention_hash, Cache, CacheEntry, CacheKey, Provenance, SCHEMA_VERSION};
use cohitlab::json::{bits_from_hex, bits_hex};
use cohitlab_core::f2linalg::BitVector;
use serde_json::{json, Value};

fn cohitlab(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cohitlab"))
        .args(args)
        .env("COHITLAB_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn parsed(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const ZETA_9: &str = r#"{"q": 4, "degree": 9, "terms": [[1,3,3,2],[1,3,4,1],[1,5,2,1],[1,6,1,1]]}"#;

#[test]
fn cohit_dimension_in_degree_nine() {
    let dir = tempfile::tempdir().unwrap();
    let out = cohitlab(dir.path(), &["cohit", "--q", "4", "--n", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let v = parsed(&out);
    assert_eq!(v["dim"], 46);
    assert_eq!(v["admissible"].as_array().unwrap().len(), 46);
}

#[test]
fn warm_cache_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for args in [&["transfer", "--q", "4", "--n", "9"][..], &["invariants", "--q", "4", "--n", "9", "--group", "sigma"]] {
        let cold = cohitlab(dir.path(), args);
        let warm = cohitlab(dir.path(), args);
        let again = cohitlab(dir.path(), args);
        assert_eq!(cold.status.code(), Some(0));
        assert_eq!(cold.stdout, warm.stdout);
        assert_eq!(warm.stdout, again.stdout);
    }
    assert!(dir.path().join("transfer-q4-n9.json").exists());
    assert!(dir.path().join("invariants-q4-n9-sigma.json").exists());
}

#[test]
fn disabling_the_cache_reproduces_cached_output() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["weight", "--q", "4", "--n", "9", "--omega", "3,1,1"];
    let cached = cohitlab(dir.path(), &args);
    let warm = cohitlab(dir.path(), &args);
    let mut uncached_args = args.to_vec();
    uncached_args.push("--no-cache");
    let fresh = cohitlab(&dir.path().join("unused"), &uncached_args);
    assert_eq!(cached.stdout, warm.stdout);
    assert_eq!(cached.stdout, fresh.stdout);
    assert!(!dir.path().join("unused").exists());
    assert_eq!(parsed(&fresh)["dim"], 36);
}

#[test]
fn entries_under_other_conventions_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    let mut key = CacheKey::new("cohit", 4, 9);
    let bogus = json!({ "dim": 0 });
    key.convention = "other".into();
    let entry = CacheEntry {
        schema_version: SCHEMA_VERSION,
        key: key.clone(),
        payload: bogus.clone(),
        provenance: Provenance { code_version: "0".into(), timestamp: 0 },
    };
    std::fs::write(cache.path_of(&key), serde_json::to_vec(&entry).unwrap()).unwrap();
    assert_eq!(parsed(&cohitlab(dir.path(), &["cohit", "--q", "4", "--n", "9"]))["dim"], 46);

    let key = CacheKey::new("cohit", 4, 9);
    let stale = CacheEntry { schema_version: SCHEMA_VERSION + 1, key: key.clone(), ..entry };
    std::fs::write(cache.path_of(&key), serde_json::to_vec(&stale).unwrap()).unwrap();
    assert_eq!(cache.get(&key), None);
    assert_eq!(parsed(&cohitlab(dir.path(), &["cohit", "--q", "4", "--n", "9"]))["dim"], 46);
    assert_eq!(cache.get(&key).unwrap()["dim"], 46);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path().join("nested"));
    let mut key = CacheKey::new("weight", 4, 21);
    key.omega = Some(vec![3, 3, 1]);
    assert_eq!(key.convention, convention_hash());
    assert_eq!(cache.get(&key), None);
    let payload = json!({ "dim": 3, "basis": [[7, 7, 7, 0]], "hex": ["0f"] });
    cache.put(&key, &payload).unwrap();
    assert_eq!(cache.get(&key), Some(payload.clone()));
    cache.put(&key, &payload).unwrap();
    assert_eq!(cache.get(&key), Some(payload));
    let files = std::fs::read_dir(cache.dir()).unwrap().count();
    assert_eq!(files, 1, "no temporary files left behind");
}

#[test]
fn hex_rows_round_trip() {
    for len in [0, 1, 7, 8, 9, 64, 65, 130] {
        let v = BitVector::from_ones(len, (0..len).filter(|i| i % 3 == 1));
        let s = bits_hex(&v);
        assert_eq!(s.len(), 2 * len.div_ceil(8));
        assert_eq!(bits_from_hex(len, &s), Some(v));
    }
    assert_eq!(bits_hex(&BitVector::from_ones(9, [0, 8])), "0101");
    assert_eq!(bits_from_hex(9, "01"), None);
}

#[test]
fn annihilated_and_psi_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let zeta = dir.path().join("zeta1.json");
    std::fs::write(&zeta, ZETA_9).unwrap();
    let out = cohitlab(dir.path(), &["annihilated", "--file", zeta.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(parsed(&out)["annihilated"], true);

    let single = dir.path().join("single.json");
    std::fs::write(&single, r#"{"q": 4, "terms": [[1,3,3,2]]}"#).unwrap();
    assert_eq!(parsed(&cohitlab(dir.path(), &["annihilated", "--file", single.to_str().unwrap()]))["annihilated"], false);

    let out = cohitlab(dir.path(), &["psi", "--q", "4", "--file", zeta.to_str().unwrap()]);
    let v = parsed(&out);
    assert_eq!(v["cycle"], true);
    assert_eq!(v["psi"]["terms"], json!([[1, 3, 3, 2]]));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let mixed = dir.path().join("elem.json");
    std::fs::write(&mixed, r#"{"q": 4, "terms": [[1,3,3,2],[1,1,1,1]]}"#).unwrap();
    let zeta = dir.path().join("zeta1.json");
    std::fs::write(&zeta, ZETA_9).unwrap();
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "not json").unwrap();
    let cases: [&[&str]; 9] = [
        &["psi", "--q", "4", "--file", mixed.to_str().unwrap()],
        &["psi", "--q", "3", "--file", zeta.to_str().unwrap()],
        &["annihilated", "--file", garbage.to_str().unwrap()],
        &["annihilated", "--file", "/nonexistent/elem.json"],
        &["cohit", "--q", "4", "--n", "-1"],
        &["cohit", "--q", "6", "--n", "9"],
        &["cohit", "--q", "4", "--n", "9", "--frobnicate"],
        &["kameko", "--q", "4", "--n", "9"],
        &["verify", "nope"],
    ];
    for args in cases {
        let out = cohitlab(dir.path(), args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn resource_cap_exits_three_with_partial_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = cohitlab(dir.path(), &["cohit", "--q", "4", "--n", "30", "--max-cols", "100"]);
    assert_eq!(out.status.code(), Some(3));
    let v = parsed(&out);
    assert_eq!(v["partial"], true);
    assert_eq!(v["cap"], 100);
    assert!(!dir.path().join("cohit-q4-n30.json").exists());

    let out = cohitlab(dir.path(), &["verify", "dlc1", "--max-cols", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(parsed(&out)["partial"], true);
}

#[test]
fn verify_suites_in_parallel_match_serial() {
    let dir = tempfile::tempdir().unwrap();
    let serial = cohitlab(dir.path(), &["verify", "all"]);
    let parallel = cohitlab(dir.path(), &["verify", "all", "--jobs", "4"]);
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(serial.stdout, parallel.stdout);
    let v = parsed(&serial);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 8);
}

#[test]
fn small_commands() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(parsed(&cohitlab(dir.path(), &["mu", "--n", "21"]))["mu"], 3);
    let v = parsed(&cohitlab(dir.path(), &["spike", "--q", "4", "--n", "9"]));
    assert_eq!(v["spike"], json!([7, 1, 1, 0]));
    assert_eq!(v["weight"], json!([3, 1, 1]));
    assert_eq!(parsed(&cohitlab(dir.path(), &["spike", "--q", "2", "--n", "21"]))["exists"], false);
    assert_eq!(parsed(&cohitlab(dir.path(), &["primitives", "--q", "4", "--n", "9"]))["dim"], 46);
    assert_eq!(parsed(&cohitlab(dir.path(), &["coinvariants", "--q", "4", "--n", "9"]))["dim"], 1);
    assert_eq!(parsed(&cohitlab(dir.path(), &["ext", "--q", "4", "--n", "9"]))["dim"], 1);
    assert_eq!(parsed(&cohitlab(dir.path(), &["invariants", "--q", "4", "--n", "9"]))["dim"], 1);
    let v = parsed(&cohitlab(dir.path(), &["kameko", "--q", "4", "--n", "4"]));
    assert_eq!(v["kernel_dim"], 20);
    assert_eq!(v["kernel_invariants_dim"], 0);
    let table = cohitlab(dir.path(), &["cohit", "--q", "4", "--n", "9", "--out", "table"]);
    let text = String::from_utf8(table.stdout).unwrap();
    assert!(text.lines().any(|l| l == "dim: 46"), "{text}");
}
