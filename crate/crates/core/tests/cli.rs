use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn sliplab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sliplab")).args(args).env_remove("SLIPLAB_CAP").output().expect("spawn sliplab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn check_slip_exit_codes_and_json() {
    let u2 = data("u2.alg");
    let o = sliplab(&["check-slip", p(&u2), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["is_slip"], false);
    assert_eq!(v["lip_dim"], 3);
    assert_eq!(v["multiplier_dim"], 2);
    assert!(v["witness"].is_array());
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.first().map(String::as_str), Some("algebra"));

    let m2 = data("m2_gf2.alg");
    let o = sliplab(&["check-slip", p(&m2)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("is_slip: true"));
}

#[test]
fn block_algebras_from_data_files() {
    assert_eq!(sliplab(&["check-slip", p(&data("b12_u2.alg"))]).status.code(), Some(0));
    assert_eq!(sliplab(&["check-slip", p(&data("b21_u2.alg"))]).status.code(), Some(1));
}

#[test]
fn check_zpd() {
    let o = sliplab(&["check-zpd", p(&data("m2_gf2.alg")), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["is_zpd"], true);
    assert_eq!(v["kernel_dim"], 12);
    assert_eq!(sliplab(&["check-zpd", p(&data("u3.alg"))]).status.code(), Some(1));
}

#[test]
fn witness_round_trips_through_decompose_input() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.map");
    let o = sliplab(&["witness", p(&data("u2.alg")), "-o", p(&w)]);
    assert_eq!(o.status.code(), Some(1));
    let text = std::fs::read_to_string(&w).unwrap();
    let f2 = sliplab::linalg::PrimeField::new(2).unwrap();
    let map = sliplab::io::parse_map(&text, f2).unwrap();
    let u2 = sliplab::io::read_algebra(&data("u2.alg")).unwrap();
    assert!(sliplab::slip::lip_check_full(&u2, &map, 1 << 20).unwrap());
    assert!(!sliplab::slip::is_left_multiplier(&u2, &map).unwrap());

    let o = sliplab(&["witness", p(&data("m2_gf2.alg"))]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn lip_basis_lists_maps() {
    let o = sliplab(&["lip-basis", p(&data("u2.alg")), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
}

#[test]
fn idempotents_and_cap() {
    let o = sliplab(&["idempotents", p(&data("t2_gf2.alg")), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    // T2(GF(2)): 0, 1, and the four rank-one idempotents
    assert_eq!(json(&o)["count"], 6);
    let o = sliplab(&["idempotents", p(&data("b12_u2.alg")), "--cap", "100"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_sliplab"))
        .args(["check-slip", p(&data("b12_u2.alg"))])
        .env("SLIPLAB_CAP", "1000")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_sliplab"))
        .args(["check-slip", p(&data("u2.alg"))])
        .env("SLIPLAB_CAP", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_and_verify_triangulating() {
    let dir = tempfile::tempdir().unwrap();
    let alg = dir.path().join("b.alg");
    let idems = dir.path().join("b.idems");
    let o = sliplab(&["construct", "block", p(&data("gf2.alg")), "1,2", "-o", p(&alg), "--idems", p(&idems)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let b = sliplab::io::read_algebra(&alg).unwrap();
    assert_eq!(b.dim(), 7);
    let o = sliplab(&["verify-triangulating", p(&alg), p(&idems)]);
    assert_eq!(o.status.code(), Some(0));

    // swapping the order breaks the first-element condition
    let text = std::fs::read_to_string(&idems).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    lines.reverse();
    std::fs::write(&idems, lines.join("\n")).unwrap();
    let o = sliplab(&["verify-triangulating", p(&alg), p(&idems), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["triangulating"], false);
}

#[test]
fn bimodule_to_triangular_to_decompose() {
    let dir = tempfile::tempdir().unwrap();
    let bimod = dir.path().join("reg.bimod");
    let o = sliplab(&["construct-bimodule", "regular", p(&data("u2.alg")), "-o", p(&bimod)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(dir.path().join("reg.bimod.left.alg").exists());
    let t = dir.path().join("t.alg");
    assert_eq!(sliplab(&["construct", "tri", p(&bimod), "-o", p(&t)]).status.code(), Some(0));
    let tri = sliplab::io::read_algebra(&t).unwrap();
    assert_eq!(tri.dim(), 6);

    // the identity map is a multiplier, hence LIP
    let id = dir.path().join("id.map");
    let ident = sliplab::slip::LinearMap::identity(tri.field(), 6);
    std::fs::write(&id, sliplab::io::serialize_map(&ident)).unwrap();
    let list = sliplab(&["idempotents", "--semicentral", p(&t), "--json"]);
    let idems = json(&list)["idempotents"].as_array().unwrap().clone();
    let index = idems
        .iter()
        .position(|e| {
            e.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect::<Vec<_>>() == [1, 0, 0, 0, 0, 0]
        })
        .expect("(1, 0, 0) is listed");
    let o = sliplab(&["decompose", p(&t), p(&id), &index.to_string(), "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["dims"], serde_json::json!([2, 2, 2]));

    // a map that is not LIP
    let mut data_ = vec![0u32; 36];
    data_[6] = 1;
    let bad = sliplab::slip::LinearMap::from_vectorized(tri.field(), 6, 6, &data_).unwrap();
    std::fs::write(&id, sliplab::io::serialize_map(&bad)).unwrap();
    let o = sliplab(&["decompose", p(&t), p(&id), &index.to_string()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_input_never_panics() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&str, &str)] = &[
        ("empty.alg", ""),
        // (x x) y = 0 but x (x y) = y
        ("noassoc.alg", "field 2\ndim 3\nunit 1 0 0\nmul 0 0 : 1 0 0\nmul 0 1 : 0 1 0\nmul 0 2 : 0 0 1\nmul 1 0 : 0 1 0\nmul 1 1 : 0 0 0\nmul 1 2 : 0 0 1\nmul 2 0 : 0 0 1\nmul 2 1 : 0 0 0\nmul 2 2 : 0 0 0\n"),
        ("badp.alg", "field 4\ndim 1\nunit 1\nmul 0 0 : 1\n"),
        ("junk.alg", "\u{0}\u{1}garbage\n"),
        ("range.alg", "field 2\ndim 1\nunit 1\nmul 0 0 : 7\n"),
    ];
    for (name, text) in cases {
        let f = dir.path().join(name);
        std::fs::write(&f, text).unwrap();
        for cmd in ["check-slip", "check-zpd", "lip-basis", "witness", "idempotents"] {
            let o = sliplab(&[cmd, p(&f)]);
            assert_eq!(o.status.code(), Some(2), "{cmd} {name}");
            assert!(String::from_utf8_lossy(&o.stderr).contains("error"), "{cmd} {name}");
        }
    }
    assert_eq!(sliplab(&["check-slip", "/nonexistent/x.alg"]).status.code(), Some(2));
    assert_eq!(sliplab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(sliplab(&["check-slip", "x", "--cap", "0"]).status.code(), Some(2));
    assert_eq!(sliplab(&["construct", "field", "6"]).status.code(), Some(2));
    assert_eq!(sliplab(&["construct", "tn", p(&data("gf2.alg")), "0"]).status.code(), Some(2));
    assert_eq!(sliplab(&["construct-bimodule", "regular", p(&data("u2.alg"))]).status.code(), Some(2));
    assert_eq!(sliplab(&["decompose", p(&data("u2.alg")), p(&data("u2.alg")), "0"]).status.code(), Some(2));
}

#[test]
fn no_early_stop_changes_only_the_counters() {
    let a = json(&sliplab(&["check-slip", p(&data("m2_gf2.alg")), "--json"]));
    let b = json(&sliplab(&["check-slip", p(&data("m2_gf2.alg")), "--json", "--no-early-stop"]));
    assert_eq!(a["lip_dim"], b["lip_dim"]);
    assert_eq!(a["is_slip"], b["is_slip"]);
    assert_eq!(b["early_stop"], false);
    assert_eq!(b["points_processed"], 15);
}
