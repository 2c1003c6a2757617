use std::path::PathBuf;
use std::process::{Command, Output};

fn wreath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreath"))
        .args(args)
        .env_remove("WREATH_ENUM_CAP")
        .env_remove("WREATH_MAP_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = wreath(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    wreath(args).status.code().expect("exited normally")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("wreath-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn dim_of_gg_over_z2() {
    assert_eq!(
        stdout(&["dim", "(g,g)", "--fusion", "builtin:cyclic:2", "--N", "4"]),
        "12\n"
    );
}

#[test]
fn fuse_g_with_g() {
    assert_eq!(
        stdout(&["fuse", "(g)", "(g)", "--fusion", "builtin:cyclic:2"]),
        "(g,g) ×1\n(1) ×1\n() ×1\n"
    );
}

#[test]
fn dim_of_empty_word() {
    assert_eq!(stdout(&["dim", "()"]), "1\n");
}

#[test]
fn fuse_longer_words() {
    assert_eq!(
        stdout(&["fuse", "(g,g)", "(g)", "--fusion", "builtin:cyclic:2"]),
        "(g,g,g) ×1\n(g,1) ×1\n(g) ×1\n"
    );
}

#[test]
fn dim_over_s3() {
    assert_eq!(
        stdout(&[
            "dim",
            "(std,sgn)",
            "--fusion",
            "builtin:dual-s3",
            "--N",
            "5"
        ]),
        "40\n"
    );
}

#[test]
fn char_poly_of_gg() {
    assert_eq!(
        stdout(&["char-poly", "(g,g)", "--fusion", "builtin:cyclic:2"]),
        "X^2 - X\n"
    );
}

#[test]
fn hom_dim_and_listing() {
    assert_eq!(
        stdout(&["hom-dim", "--down", "g,g", "--fusion", "builtin:cyclic:2"]),
        "1\n"
    );
    assert_eq!(
        stdout(&[
            "hom-dim",
            "--down",
            "g,g",
            "--fusion",
            "builtin:cyclic:2",
            "--list"
        ]),
        "{1,2} (k=0,l=2) dims [1]\n1\n"
    );
    assert_eq!(
        stdout(&[
            "hom-dim",
            "--up",
            "std",
            "--down",
            "std,std",
            "--fusion",
            "builtin:dual-s3"
        ]),
        "1\n"
    );
}

#[test]
fn negative_integer_labels() {
    assert_eq!(
        stdout(&[
            "hom-dim",
            "--up",
            "-1",
            "--down",
            "-1",
            "--fusion",
            "builtin:integers"
        ]),
        "1\n"
    );
    let out = stdout(&[
        "verify",
        "fusion-dim",
        "--fusion",
        "builtin:integers",
        "--letters",
        "-1,0,2",
        "--max-len",
        "2",
    ]);
    assert!(out.lines().skip(1).all(|l| l.starts_with("  ok")), "{out}");
}

#[test]
fn char_law_trivial_rep_is_catalan() {
    let out = stdout(&["char-law", "--order", "4"]);
    for (word, value) in [("1", "1"), ("1*", "2"), ("***", "5"), ("11*1", "14")] {
        assert!(
            out.lines().any(|l| l == format!("{word}: {value}")),
            "{out}"
        );
    }
    assert_eq!(stdout(&["char-law", "--eps", "11*1"]), "14\n");
}

#[test]
fn char_law_single_word_over_z3() {
    assert_eq!(
        stdout(&[
            "char-law",
            "--rep",
            "g",
            "--eps",
            "11",
            "--fusion",
            "builtin:cyclic:3"
        ]),
        "0\n"
    );
    assert_eq!(
        stdout(&[
            "char-law",
            "--rep",
            "g",
            "--eps",
            "11",
            "--fusion",
            "builtin:cyclic:2"
        ]),
        "1\n"
    );
}

#[test]
fn classical_z2() {
    assert_eq!(
        stdout(&["classical", "--group", "z2", "--n", "3", "--order", "4"]),
        "0: 1\n1: 0\n2: 1\n3: 0\n4: 4\n"
    );
}

#[test]
fn partial_trace_values() {
    assert_eq!(
        stdout(&["partial-trace", "--t", "1/2", "--k", "4"]),
        "45/16\n"
    );
    assert_eq!(
        stdout(&["partial-trace", "--t", "1/3", "--k", "4", "--float", "4"]),
        "1.235\n"
    );
}

#[test]
fn weingarten_tables() {
    assert_eq!(
        stdout(&[
            "weingarten",
            "--k",
            "2",
            "--N",
            "5",
            "--s",
            "2",
            "--category",
            "nc",
            "--invert"
        ]),
        "gram (k=2, N=5, s=2):\n\
         ({1|2}, {1|2}): [100, 20, 10]\n\
         ({1,2}, {1|2}): [20, 20, 10]\n\
         ({1,2}, {1,2}): [10, 10, 10]\n\
         weingarten:\n\
         ({1|2}, {1|2}): [1/80, -1/80, 0]\n\
         ({1,2}, {1|2}): [-1/80, 9/80, -1/10]\n\
         ({1,2}, {1,2}): [0, -1/10, 1/5]\n"
    );
    assert_eq!(
        stdout(&["weingarten", "--k", "1", "--N", "4", "--haar", "1,1,1,1"]),
        "gram (k=1, N=4, s=1):\n({1}, {1}): [4]\nh = 1/4\n"
    );
}

#[test]
fn temperley_lieb_commands() {
    assert_eq!(
        stdout(&["tl", "trace", "TL(2,2): (1,3)(2,4)", "--N", "4"]),
        "4\n"
    );
    assert_eq!(
        stdout(&["tl", "trace", "TL(1,1): (1,2)", "--N", "5", "--float", "6"]),
        "2.23607\n"
    );
    assert_eq!(
        stdout(&["tl", "collapse", "TL(2,2): (1,2)(3,4)"]),
        "{1|2} (k=1,l=1)\n"
    );
    assert_eq!(
        stdout(&["tl", "phi", "TL(2,2): (1,2)(3,4)"]),
        "N^(-1/2) * {1|2} (k=1,l=1)\n"
    );
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "category", "--max-points", "4"][..],
        &["verify", "weingarten", "--max-k", "2"],
        &[
            "verify",
            "fusion-dim",
            "--fusion",
            "builtin:dual-s3",
            "--max-len",
            "2",
        ],
    ] {
        let out = stdout(args);
        assert!(!out.contains("FAIL"), "{out}");
    }
}

#[test]
fn fusion_file_matches_builtin() {
    let table = r#"{
        "irreps": [{"label": "e", "dim": 1}, {"label": "g", "dim": 1}],
        "trivial": "e",
        "conj": {"e": "e", "g": "g"},
        "tensor": {"e,e": {"e": 1}, "e,g": {"g": 1}, "g,e": {"g": 1}, "g,g": {"e": 1}}
    }"#;
    let path = temp_file("z2.json", table);
    let source = format!("file:{}", path.display());
    assert_eq!(
        stdout(&["dim", "(g,g)", "--fusion", &source, "--N", "4"]),
        "12\n"
    );
    assert_eq!(
        stdout(&["fuse", "(g)", "(g)", "--fusion", &source]),
        "(g,g) ×1\n(e) ×1\n() ×1\n"
    );
    std::fs::remove_file(path).unwrap();
}

#[test]
fn malformed_fusion_file_is_rejected() {
    let missing = r#"{
        "irreps": [{"label": "e", "dim": 1}, {"label": "g", "dim": 1}],
        "trivial": "e",
        "conj": {"e": "e", "g": "g"},
        "tensor": {"e,e": {"e": 1}, "e,g": {"g": 1}, "g,e": {"g": 1}}
    }"#;
    let path = temp_file("missing.json", missing);
    let source = format!("file:{}", path.display());
    assert_eq!(code(&["dim", "(g)", "--fusion", &source]), 1);
    std::fs::remove_file(path).unwrap();
    assert_eq!(
        code(&["dim", "(g)", "--fusion", "file:/nonexistent/wreath.json"]),
        1
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["dim", "(h)", "--fusion", "builtin:cyclic:2"]), 1);
    assert_eq!(
        code(&["dim", "(g)", "--fusion", "builtin:cyclic:2", "--N", "3"]),
        1
    );
    assert_eq!(code(&["dim", "(g"]), 1);
    assert_eq!(code(&["no-such-command"]), 1);
    assert_eq!(code(&["weingarten", "--k", "9"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn caps_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_wreath"))
        .args(["weingarten", "--k", "3"])
        .env("WREATH_MAP_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let bad = Command::new(env!("CARGO_BIN_EXE_wreath"))
        .args(["dim", "()"])
        .env("WREATH_ENUM_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["fuse", "(std,sgn)", "(std)", "--fusion", "builtin:dual-s3"];
    let first = stdout(&args);
    assert!(!first.is_empty());
    for _ in 0..3 {
        assert_eq!(stdout(&args), first);
    }
}

#[test]
fn group_table_file() {
    let group = r#"{"elements": ["e", "a", "b"],
        "table": [["e","a","b"],["a","b","e"],["b","e","a"]]}"#;
    let path = temp_file("z3.json", group);
    let source = format!("file:{}", path.display());
    assert_eq!(
        stdout(&["char-law", "--rep", "a", "--eps", "11", "--fusion", &source]),
        "0\n"
    );
    assert_eq!(
        stdout(&["dim", "(a,b)", "--fusion", &source, "--N", "4"]),
        "12\n"
    );
    std::fs::remove_file(path).unwrap();
}
