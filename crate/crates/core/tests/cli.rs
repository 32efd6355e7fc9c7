use std::io::Write;
use std::process::{Command, Output, Stdio};

fn kms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kms"))
        .args(args)
        .env_remove("KMS_WORKERS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn spectrum_of_a_split_star() {
    let o = kms(&[
        "spectrum",
        "--family",
        "split-star",
        "--n",
        "5",
        "--k-clique",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "5.372281323");
}

#[test]
fn odd_order_perfect_matching_query_is_a_parity_error() {
    let o = kms(&[
        "check",
        "--g6",
        "Bw",
        "--property",
        "perfect-k-matching",
        "--k",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parity"));
}

#[test]
fn check_prints_a_witness() {
    let o = kms(&[
        "check",
        "--g6",
        "Cs",
        "--property",
        "perfect-k-matching",
        "--k",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    // K_{1,3}: removing the centre isolates three vertices
    assert_eq!(stdout(&o).trim(), "false  witness {0}");
}

#[test]
fn verify_writes_one_row_per_graph() {
    let dir = std::env::temp_dir().join(format!("kms-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("report.csv");
    let o = kms(&[
        "verify",
        "--theorem",
        "T1",
        "--n",
        "6",
        "--k",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 112);
    assert_eq!(
        rows.iter().filter(|r| r.ends_with(",true,false")).count(),
        1
    );
    assert!(
        text.lines().next().unwrap()
            == "graph6,n,k,d,lambda1,threshold,cmp,property,verdict,exception,violation"
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let args = [
        "verify",
        "--theorem",
        "T5",
        "--n",
        "7",
        "--k",
        "2",
        "--format",
        "json",
    ];
    let one = kms(&[&args[..], &["--workers", "1"]].concat());
    let four = kms(&[&args[..], &["--workers", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_kms"))
        .args(args)
        .env("KMS_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, one.stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(kms(&["spectrum"]).status.code(), Some(2));
    assert_eq!(
        kms(&["spectrum", "--g6", "Bw", "--all", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        kms(&["spectrum", "--g6", "Bw", "--eps", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        kms(&["verify", "--theorem", "T1", "--n", "7", "--k", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kms(&["check", "--g6", "B!", "--property", "gfc", "--k", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(kms(&["enumerate", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn help_names_each_construct() {
    let cases = [
        ("spectrum", "distance spectral radius"),
        ("wiener", "Wiener index"),
        ("deficiency", "k-Berge-Tutte deficiency"),
        ("barriers", "k-barriers"),
        ("check", "k-d-criticality"),
        ("oracle", "integer k-matchings"),
        ("enumerate", "isomorphism class"),
        ("verify", "spectral sufficient condition"),
        ("sharpness", "exceptional graph"),
        ("minimize", "least distance spectral radius"),
        ("lemmas", "extremal families"),
        ("g6", "graph6"),
    ];
    for (cmd, phrase) in cases {
        let o = kms(&[cmd, "--help"]);
        assert_eq!(o.status.code(), Some(0));
        assert!(
            stdout(&o).to_lowercase().contains(&phrase.to_lowercase()),
            "{cmd} help lacks {phrase:?}"
        );
    }
}

#[test]
fn g6_round_trips_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kms"))
        .args(["g6"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"Bw\nCr\n\nDQc\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Bw\nCr\nDQc\n");
}

#[test]
fn sweeps_and_sharpness_succeed() {
    let o = kms(&["lemmas", "--max-n", "16"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failures"));
    let o = kms(&["sharpness", "--theorem", "T1", "--n", "8", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("sharp"));
    let o = kms(&[
        "minimize",
        "--property",
        "perfect-k-matching",
        "--k",
        "3",
        "--n",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = kms(&["enumerate", "--n", "5", "--count"]);
    assert_eq!(stdout(&o).trim(), "21");
}
