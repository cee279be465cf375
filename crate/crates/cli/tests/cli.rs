use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bosonhopf"))
        .args(args)
        .env_remove("BOSONHOPF_ORDER")
        .env_remove("BOSONHOPF_FOCK_DIM")
        .env_remove("BOSONHOPF_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exited normally")
}

#[test]
fn bell_table_rows() {
    assert_eq!(
        stdout(&["bell", "6"]),
        "0 1\n1 1\n2 2\n3 5\n4 15\n5 52\n6 203\n"
    );
    assert_eq!(stdout(&["bell", "0"]), "0 1\n");
    assert_eq!(stdout(&["bell", "10"]).lines().last(), Some("10 115975"));
    assert_eq!(code(&["bell", "100000"]), 5);
}

#[test]
fn stirling_row_and_entry() {
    assert_eq!(stdout(&["stirling", "4"]), "0 0\n1 1\n2 7\n3 6\n4 1\n");
    assert_eq!(stdout(&["stirling", "10", "3"]), "9330\n");
    assert_eq!(code(&["stirling", "3", "4"]), 4);
}

#[test]
fn normal_order_renderings() {
    assert_eq!(stdout(&["normal-order", "ac"]), "c a + 1\n");
    assert_eq!(stdout(&["normal-order", "caca"]), "c^2 a^2 + c a\n");
    assert_eq!(stdout(&["normal-order", ""]), "1\n");
    assert_eq!(
        stdout(&["normal-order", "caca", "--format", "json"]),
        "[{\"r\":2,\"s\":2,\"coeff\":\"1\"},{\"r\":1,\"s\":1,\"coeff\":\"1\"}]\n"
    );
}

#[test]
fn parse_errors_report_position() {
    let out = run(&["normal-order", "x"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 1"));
    let out = run(&["normal-order", "cax"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 3"));
}

#[test]
fn diagram_listing_and_census() {
    let listing = stdout(&["diagrams", "3"]);
    let lines: Vec<&str> = listing.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[5], "census: y1^3:1, y1*y2:3, y3:1");
    assert_eq!(
        lines.iter().filter(|l| l.ends_with("code y1*y2")).count(),
        3
    );
    assert_eq!(
        stdout(&["diagrams", "1"]),
        "{{1}}  shape 1  code y1\ncensus: y1:1\n"
    );
    assert!(stdout(&["diagrams", "0"]).starts_with("{}  shape 0  code e\n"));
    assert_eq!(
        stdout(&["diagrams", "3", "--census"]),
        "census: y1^3:1, y1*y2:3, y3:1\n"
    );
}

#[test]
fn large_listing_suggests_census() {
    let out = run(&["diagrams", "9"]);
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--census"));
    assert!(stdout(&["diagrams", "9", "--census"]).contains("y9:1"));
}

#[test]
fn dot_bundle_has_one_graph_per_diagram() {
    let dot = stdout(&["diagrams", "3", "--format", "dot"]);
    assert_eq!(dot.matches("graph diagram {").count(), 5);
    assert_eq!(dot.matches(" -- ").count(), 15);
    assert!(dot.starts_with("// {{1,2,3}}\ngraph diagram {\n    w1 [shape=circle"));
}

#[test]
fn hopf_check_reports() {
    let bell = stdout(&["hopf-check", "bell", "1"]);
    assert!(bell.contains("basis monomials checked: 1"));
    assert!(bell.ends_with("result: pass\n"));
    for mode in ["bell", "poly"] {
        let report = stdout(&["hopf-check", mode, "6"]);
        for axiom in [
            "coassociativity",
            "counit",
            "antipode",
            "cocommutativity",
            "homomorphism",
        ] {
            assert!(
                report.contains(&format!("{axiom}: pass")),
                "{mode}: {report}"
            );
        }
    }
    let poly = stdout(&["hopf-check", "poly", "6"]);
    assert!(poly.contains("basis monomials checked: 6"));
}

#[test]
fn hopf_check_single_element() {
    let report = stdout(&["hopf-check", "bell", "4", "--element", "3/2*y1^2*y3 + y2"]);
    assert!(report.contains("element: 3/2*y1^2*y3 + y2"));
    assert!(report.ends_with("result: pass\n"));
    assert_eq!(code(&["hopf-check", "poly", "4", "--element", "y2"]), 4);
    assert_eq!(code(&["hopf-check", "bell", "4", "--element", "y0"]), 3);
}

#[test]
fn pfi_numeric_and_symbolic() {
    assert_eq!(
        stdout(&["pfi", "ca", "--order", "6", "--ybar", "1"]),
        "order: 6\nW = [1, 1, 2, 5, 15, 52, 203]\nV = [1, 1, 1, 1, 1, 1]\n"
    );
    assert!(stdout(&["pfi", "", "--order", "3", "--ybar", "1"]).contains("W = [1, 1, 1, 1]\n"));
    let symbolic = stdout(&["pfi", "ca", "--order", "3"]);
    assert!(symbolic.contains("W3 = ybar + 3 ybar^2 + ybar^3\n"));
    assert!(symbolic.contains("V3 = ybar\n"));
}

#[test]
fn pfi_json_schema() {
    assert_eq!(
        stdout(&["pfi", "ca", "--order", "2", "--ybar", "1/2", "--format", "json"]),
        "{\"order\":2,\"W\":[\"1\",\"1/2\",\"3/4\"],\"V\":[\"1/2\",\"1/2\"]}\n"
    );
    assert_eq!(
        stdout(&["pfi", "ca", "--order", "1", "--format", "json"]),
        "{\"order\":1,\"W\":[[\"1\"],[\"0\",\"1\"]],\"V\":[[\"0\",\"1\"]]}\n"
    );
}

#[test]
fn pfi_unbalanced_words() {
    assert_eq!(code(&["pfi", "cca", "--order", "2", "--ybar", "1"]), 4);
    let out = stdout(&["pfi", "cca", "--order", "2", "--z", "1/2", "--fock"]);
    assert!(out.contains("W = [1, 1/8, 9/64]\n"));
    assert!(out.contains("fock W2 = 0.140625000000"));
}

#[test]
fn pfi_order_bound_and_env_fallback() {
    assert_eq!(code(&["pfi", "ca", "--order", "33"]), 5);
    let out = Command::new(env!("CARGO_BIN_EXE_bosonhopf"))
        .args(["pfi", "ca", "--ybar", "1"])
        .env("BOSONHOPF_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "order: 4\nW = [1, 1, 2, 5, 15]\nV = [1, 1, 1, 1]\n"
    );
    let out = Command::new(env!("CARGO_BIN_EXE_bosonhopf"))
        .args(["pfi", "ca", "--ybar", "1", "--order", "2"])
        .env("BOSONHOPF_ORDER", "4")
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("order: 2\n"));
}

#[test]
fn partition_function_methods() {
    let both = stdout(&["z", "1.0", "--method", "both"]);
    let diff: f64 = both
        .lines()
        .find_map(|l| l.strip_prefix("difference: "))
        .expect("difference line")
        .parse()
        .unwrap();
    assert!(diff < 1e-9, "{both}");
    assert!(both.contains("closed: 1.58197670686932642438500200511\n"));
    assert!(stdout(&["z", "ln2"]).contains("closed: 2.000000"));
    assert_eq!(code(&["z", "-1"]), 4);
    assert_eq!(code(&["z", "0"]), 4);
    assert_eq!(code(&["z", "abc"]), 3);
}

#[test]
fn precision_flag_and_env() {
    assert_eq!(
        stdout(&["z", "1", "--precision", "5"]),
        "beta*eps: 1\nclosed: 1.5820\n"
    );
    let out = Command::new(env!("CARGO_BIN_EXE_bosonhopf"))
        .args(["z", "1"])
        .env("BOSONHOPF_PRECISION", "8")
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "beta*eps: 1\nclosed: 1.5819767\n"
    );
}

#[test]
fn graph_expansion_values() {
    assert_eq!(stdout(&["graph-expansion", "5"]), "W5 = 52\n");
    assert_eq!(
        stdout(&["graph-expansion", "4", "--v", "1,1/2"]),
        "W4 = 19/4\n"
    );
    assert_eq!(
        stdout(&["graph-expansion", "20", "--path", "shapes"]),
        "W20 = 51724158235372\n"
    );
    assert_eq!(code(&["graph-expansion", "13"]), 5);
    assert_eq!(code(&["graph-expansion", "3", "--v", "1,q"]), 3);
}

#[test]
fn divergence_report_lines() {
    let report = stdout(&["divergence-report", "3"]);
    assert!(report.contains("n=3: B_3(y) = y + 3 y^2 + y^3; divergent powers {1,2,3}; diverges\n"));
    assert_eq!(
        report.lines().filter(|l| l.ends_with("; diverges")).count(),
        4
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["bell"]), 2);
    assert_eq!(code(&["hopf-check", "lie", "3"]), 2);
    assert_eq!(code(&["pfi", "ca", "--fock"]), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["diagrams", "4", "--format", "dot"][..],
        &["hopf-check", "bell", "4", "--seed", "9"],
        &["pfi", "cacca", "--order", "4", "--format", "json"],
        &["z", "0.5", "--method", "both"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}
