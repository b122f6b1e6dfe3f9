use identikit::cli::run;
use identikit::io::format_graph;
use identikit::{Graph, GraphClass};
use proptest::prelude::*;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_identikit");

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("identikit-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn exe(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";

#[test]
fn verdicts_and_exit_codes() {
    let c4 = scratch("c4.graph", C4);
    let c4 = c4.to_str().unwrap();
    assert_eq!(exe(&["solve", "--class", "path", "--k", "1", c4], None).0, 0);
    assert_eq!(exe(&["solve", "--class", "path", "--k", "1", c4], None).1, "YES\n");
    let (code, out, _) = exe(&["solve", "--class", "clique", "--k", "0", c4], None);
    assert_eq!((code, out.as_str()), (1, "NO\n"));
    let e3 = scratch("e3.graph", "3 0\n");
    let (code, out, _) = exe(&["solve", "--class", "clique", "--dual-p", "2", e3.to_str().unwrap()], None);
    assert_eq!((code, out.as_str()), (1, "NO\n"));
    // --seed and --jobs are accepted.
    assert_eq!(exe(&["solve", "--class", "tree", "--k", "2", "--seed", "7", "--jobs", "2", c4], None).0, 0);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let c4 = scratch("c4u.graph", C4);
    let c4 = c4.to_str().unwrap();
    assert_eq!(exe(&[], None).0, 2);
    assert_eq!(exe(&["solve", "--class", "path", c4], None).0, 2);
    assert_eq!(exe(&["solve", "--class", "path", "--k", "1", "--dual-p", "1", c4], None).0, 2);
    assert_eq!(exe(&["solve", "--class", "tree", "--k", "1", "/nonexistent/g.graph"], None).0, 2);
    assert_eq!(exe(&["solve", "--class", "tree", "--k", "1", "--jobs", "0", c4], None).0, 2);
    let (code, _, err) = exe(&["solve", "--class", "path", "--k", "1", "-"], Some("2 1\n0 0\n"));
    assert_eq!(code, 2);
    assert!(err.contains("self-loop"));
    let (code, _, err) = exe(&["kernelize", "--class", "path", "--k", "1", c4], None);
    assert_eq!(code, 2);
    assert!(err.contains("no --k kernel"));
}

#[test]
fn witness_pipes_into_verify() {
    let c4 = scratch("c4p.graph", C4);
    let c4 = c4.to_str().unwrap();
    let (code, out, _) = exe(&["solve", "--class", "path", "--k", "1", "--witness", c4], None);
    assert_eq!(code, 0);
    assert!(out.contains("# target") && out.contains("bag 0:"));
    let (code, out, _) = exe(&["verify", c4, "-"], Some(&out));
    assert_eq!((code, out.as_str()), (0, "VALID\n"));
}

#[test]
fn verify_with_separate_files() {
    let g = scratch("vg.graph", C4);
    let h = scratch("vh.graph", "3 2\n0 1\n1 2\n");
    let good = scratch("good.witness", "bag 0: 0\nbag 1: 1 3\nbag 2: 2\n");
    let bad = scratch("bad.witness", "bag 0: 0 1\nbag 1: 3\nbag 2: 2\n");
    let p = |x: &PathBuf| x.to_str().unwrap().to_string();
    assert_eq!(exe(&["verify", &p(&g), &p(&h), &p(&good)], None).1, "VALID\n");
    let (code, out, _) = exe(&["verify", &p(&g), &p(&h), &p(&bad)], None);
    assert_eq!((code, out.as_str()), (1, "INVALID\n"));
}

#[test]
fn identify_kernelize_and_oracle() {
    let g = scratch("two_k2.graph", "4 2\n0 1\n2 3\n");
    let t = scratch("p3.graph", "3 2\n0 1\n1 2\n");
    let s = scratch("k13.graph", "4 3\n0 1\n0 2\n0 3\n");
    let p = |x: &PathBuf| x.to_str().unwrap().to_string();
    let (code, out, _) = exe(&["identify", "--witness", &p(&g), &p(&t)], None);
    assert_eq!(code, 0);
    let w = scratch("ident.witness", &out);
    assert_eq!(exe(&["verify", &p(&g), &p(&t), &p(&w)], None).1, "VALID\n");
    assert_eq!(exe(&["identify", &p(&g), &p(&s)], None).0, 1);
    assert_eq!(exe(&["identify", "--oracle", &p(&g), &p(&s)], None).0, 1);
    // C4 onto K3 goes through the exact search.
    let c4 = scratch("c4i.graph", C4);
    let k3 = scratch("k3.graph", "3 3\n0 1\n1 2\n0 2\n");
    assert_eq!(exe(&["identify", &p(&c4), &p(&k3)], None).0, 0);

    let (code, out, _) = exe(&["kernelize", "--class", "forest", "--k", "1", &p(&c4)], None);
    assert_eq!(code, 0);
    assert!(out.starts_with("YES") || out.starts_with("REDUCED"));
    assert_eq!(exe(&["kernelize", "--class", "clique", "--dual-p", "5", &p(&c4)], None).1, "NO\n");

    assert_eq!(exe(&["oracle", "--class", "path", &p(&c4)], None).1, "min 1\n");
    assert_eq!(exe(&["solve", "--oracle", "--class", "path", "--k", "0", &p(&c4)], None).0, 1);
}

#[test]
fn generators_print_expected_answers() {
    let c4 = scratch("c4g.graph", C4);
    let c4 = c4.to_str().unwrap();
    let (code, out, _) = exe(&["generate", "independent-set", "--p", "2", c4], None);
    assert_eq!(code, 0);
    assert!(out.starts_with("# expected: yes\n# k: 2\n5 8\n"));
    let target = std::env::temp_dir().join(format!("identikit-bp-{}.graph", std::process::id()));
    let (_, out, _) = exe(
        &["generate", "bin-packing", "--sizes", "3,1", "--bins", "2", "--capacity", "2", "--target-out", target.to_str().unwrap()],
        None,
    );
    assert!(out.starts_with("# expected: no\n"));
    assert_eq!(std::fs::read_to_string(&target).unwrap(), "6 4\n0 1\n1 2\n3 4\n4 5\n");
    let (_, out, _) = exe(&["generate", "set-cover", "--universe", "2", "--sets", "0,1", "--budget", "1"], None);
    assert!(out.starts_with("# expected: yes\n# k: 0\n"));
    let (_, out, _) = exe(&["generate", "split-from-clique", "--k", "1", c4], None);
    assert!(out.starts_with("# expected: yes\n# k: 1\n8 "));
    let (code, _, err) = exe(&["generate", "bin-packing", "--sizes", "3", "--bins", "2", "--capacity", "2"], None);
    assert_eq!(code, 2);
    assert!(err.contains("expected bins * capacity"));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_emitted_witness_verifies(g in arb_graph(7), c in 0usize..10, k in 0usize..4, dual in any::<bool>()) {
        let file = scratch(&format!("prop-{c}-{k}.graph"), &format_graph(&g));
        let class = GraphClass::ALL[c].name();
        let flag = if dual { "--dual-p" } else { "--k" };
        let out = run(["identikit", "solve", "--class", class, flag, &k.to_string(), "--witness", file.to_str().unwrap()]);
        prop_assert!(out.code == 0 || out.code == 1, "{}", out.stderr);
        if out.code == 0 {
            let cert = scratch(&format!("prop-{c}-{k}.out"), &out.stdout);
            let v = run(["identikit", "verify", file.to_str().unwrap(), cert.to_str().unwrap()]);
            prop_assert_eq!(v.stdout, "VALID\n");
        }
    }
}
