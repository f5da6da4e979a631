//! End-to-end tests of the `orbits` binary: flag handling, output shapes,
//! exit codes and byte-level determinism.

use std::process::{Command, Output};

fn orbits(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbits"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn list_gl6_prints_eleven_lines() {
    let out = orbits(&["list", "gl", "6"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[0], "[6] *");
    assert_eq!(lines[10], "[1^6]");
}

#[test]
fn list_sp8_marks_the_two_distinguished_orbits() {
    let out = orbits(&["list", "sp", "8"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 14);
    let starred: Vec<&str> = lines.iter().copied().filter(|l| l.ends_with(" *")).collect();
    assert_eq!(starred, vec!["[8] *", "[6,2] *"]);
}

#[test]
fn every_listed_partition_parses_back() {
    for args in [["list", "sp", "8"], ["list", "o", "7"], ["list", "gl", "6"]] {
        let out = orbits(&args);
        assert_eq!(exit_code(&out), 0);
        for line in stdout(&out).lines() {
            let label = line.trim_end_matches(" *");
            let parsed: orbits::Partition = label.parse().expect("round-trip parse");
            assert_eq!(parsed.to_string(), label);
        }
    }
}

#[test]
fn list_rejects_odd_symplectic_dimension() {
    let out = orbits(&["list", "sp", "3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stdout(&out).is_empty());
}

#[test]
fn list_rejects_unknown_family_and_dot_format() {
    assert_eq!(exit_code(&orbits(&["list", "su", "3"])), 2);
    assert_eq!(exit_code(&orbits(&["list", "gl", "6", "--format", "dot"])), 2);
}

#[test]
fn list_json_is_an_array_with_flags() {
    let out = orbits(&["list", "sp", "8", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let array = value.as_array().expect("array");
    assert_eq!(array.len(), 14);
    assert_eq!(array[0]["partition"], "[8]");
    assert_eq!(array[0]["distinguished"], true);
    assert_eq!(array[13]["partition"], "[1^8]");
    assert_eq!(array[13]["distinguished"], false);
}

#[test]
fn compare_reports_the_severed_top_pair() {
    let out = orbits(&["compare", "sp", "8", "[8]", "[6,2]"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("dominated: yes"));
    assert!(text.contains("accessible: no"));
    assert!(text.contains("obstruction: DistinguishedTarget"));
}

#[test]
fn compare_reports_an_open_route_with_chain() {
    let out = orbits(&["compare", "gl", "6", "[4,2]", "[3,3]"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("dominated: yes"));
    assert!(text.contains("accessible: yes"));
    assert!(text.contains("1-accessible: Yes"));
    assert!(text.contains("obstruction: none"));

    let chained = orbits(&["compare", "sp", "8", "[6,1,1]", "[4,2,1,1]"]);
    assert_eq!(exit_code(&chained), 0);
    let text = stdout(&chained);
    assert!(text.contains("accessible: yes"));
    assert!(text.contains("1-accessible: No"));
    assert!(text.contains("chain: [6,1^2] -> [4,2^2]"));
}

#[test]
fn compare_accepts_all_three_partition_notations() {
    let bracket = orbits(&["compare", "sp", "8", "[6,2]", "[3,3,1,1]"]);
    let bare = orbits(&["compare", "sp", "8", "6,2", "3,3,1,1"]);
    let exponent = orbits(&["compare", "sp", "8", "6,2", "3^2,1^2"]);
    assert_eq!(exit_code(&bracket), 0);
    assert_eq!(stdout(&bracket), stdout(&bare));
    assert_eq!(stdout(&bracket), stdout(&exponent));
    assert!(stdout(&bracket).contains("target: [3^2,1^2]"));
}

#[test]
fn compare_rejects_invalid_partitions() {
    // Odd part with odd multiplicity is not a symplectic orbit label.
    assert_eq!(exit_code(&orbits(&["compare", "sp", "8", "[5,3]", "[4,4]"])), 2);
    // Wrong total size.
    assert_eq!(exit_code(&orbits(&["compare", "gl", "6", "[4,2]", "[3,3,1]"])), 2);
    // Unparseable text.
    assert_eq!(exit_code(&orbits(&["compare", "gl", "6", "[4,x]", "[3,3]"])), 2);
}

#[test]
fn compare_json_matches_the_report_schema() {
    let out = orbits(&["compare", "sp", "10", "[8,2]", "[6,4]", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["kind"], "sp");
    assert_eq!(value["N"], 10);
    assert_eq!(value["dominated"], true);
    assert_eq!(value["accessible"], false);
    assert_eq!(value["obstruction"], "DirectType5");
}

#[test]
fn diagram_dot_is_well_formed_and_split_at_the_top() {
    let out = orbits(&["diagram", "sp", "8", "--order", "accessibility", "--format", "dot"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches('{').count(), text.matches('}').count());
    assert_eq!(text.matches('"').count() % 2, 0);
    assert!(text.contains("\"[8]\" [shape=doublecircle];"));
    assert!(text.contains("\"[6,2]\" [shape=doublecircle];"));
    assert!(text.contains("\"[6,1^2]\" [shape=ellipse];"));
    assert!(text.contains("\"[8]\" -> \"[4^2]\";"));
    assert!(text.contains("\"[8]\" -> \"[6,1^2]\";"));
    assert!(text.contains("\"[6,2]\" -> \"[4^2]\";"));
    assert!(text.contains("\"[6,2]\" -> \"[6,1^2]\";"));
    assert!(!text.contains("\"[8]\" -> \"[6,2]\""));

    let dominance = orbits(&["diagram", "sp", "8", "--order", "dominance", "--format", "dot"]);
    assert!(stdout(&dominance).contains("\"[8]\" -> \"[6,2]\";"));
}

#[test]
fn diagram_text_lists_every_node_with_indentation() {
    let out = orbits(&["diagram", "gl", "6", "--format", "text"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[0], "[6] *");
    assert!(lines[1].starts_with("    [5,1]"));
    assert!(text.contains("[1^6]"));
}

#[test]
fn diagram_json_has_twelve_gl6_edges_in_both_orders() {
    for order in ["dominance", "accessibility"] {
        let out = orbits(&["diagram", "gl", "6", "--order", order, "--format", "json"]);
        assert_eq!(exit_code(&out), 0);
        let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
        assert_eq!(value["order"], order);
        assert_eq!(value["nodes"].as_array().unwrap().len(), 11);
        assert_eq!(value["edges"].as_array().unwrap().len(), 12);
    }
}

#[test]
fn witness_bundle_verifies_in_json() {
    let out = orbits(&["witness", "sp-move1", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["kind"], "sp");
    assert_eq!(value["source"], "[4,2]");
    assert_eq!(value["target"], "[3^2]");
    assert_eq!(value["verification"]["passed"], true);
}

#[test]
fn witness_accepts_list_parameters() {
    let out = orbits(&["witness", "gl-move-i", "2,2", "1,1", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("source: [3^2,1]"));
    assert!(text.contains("target: [3,2^2]"));
}

#[test]
fn witness_rejects_unknown_names_and_bad_parameters() {
    assert_eq!(exit_code(&orbits(&["witness", "bogus", "2"])), 2);
    assert_eq!(exit_code(&orbits(&["witness", "sp-move1"])), 2);
    // Inadmissible parameters: the rewrite would not go downward.
    assert_eq!(exit_code(&orbits(&["witness", "sp-move3", "2", "1"])), 2);
}

#[test]
fn verify_suite_single_item_passes() {
    let out = orbits(&["verify-suite", "--only", "sp-move1"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("pass  sp-move1"));
    assert!(text.contains("suite: 1/1 items passed"));
}

#[test]
fn verify_suite_rejects_unknown_tags() {
    let out = orbits(&["verify-suite", "--only", "sp-move9"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_suite_full_run_passes_in_json() {
    let out = orbits(&["verify-suite", "--seed", "42", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["passed"], true);
    assert_eq!(value["seed"], 42);
    assert_eq!(value["items"].as_array().unwrap().len(), 19);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["diagram", "sp", "8", "--order", "accessibility", "--format", "dot"],
        vec!["verify-suite", "--seed", "42", "--only", "nontransitivity"],
        vec!["witness", "o-move1", "3", "--format", "json"],
        vec!["compare", "sp", "8", "[6,1,1]", "[4,2,1,1]"],
    ] {
        let first = orbits(&args);
        let second = orbits(&args);
        assert_eq!(exit_code(&first), 0, "args: {args:?}");
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
    }
}

#[test]
fn unknown_flags_are_usage_errors() {
    assert_eq!(exit_code(&orbits(&["list", "gl", "6", "--frmt", "json"])), 2);
    assert_eq!(exit_code(&orbits(&["nonsense"])), 2);
}
