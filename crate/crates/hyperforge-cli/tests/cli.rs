//! End-to-end tests that spawn the compiled binary and inspect its JSON,
//! table output, and exit codes.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperforge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary should spawn")
}

fn json_of(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}):\n{}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn quotient_f9_reports_a_five_element_cc_hyperfield() {
    let out = run(&["quotient", "--q", "9", "--g", "2"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["command"], "quotient");
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["is_cc"], true);
    assert_eq!(v["structure"]["n"], 5);
    assert_eq!(v["subgroup"], serde_json::json!([1, 2]));
    assert!(v["timestamp_secs"].is_u64());
}

#[test]
fn quotient_f3_by_its_units_is_the_two_element_krasner_table() {
    let out = run(&["quotient", "--q", "3", "--g", "2"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["structure"]["n"], 2);
    assert_eq!(v["structure"]["hyperadd"][1][1], serde_json::json!([0, 1]));
    assert_eq!(v["is_cc"], true);
}

#[test]
fn quotient_rejects_a_non_divisor_subgroup_order() {
    let out = run(&["quotient", "--q", "7", "--g", "5"]);
    assert_eq!(exit_code(&out), 2);
    assert!(
        stderr_of(&out).contains("divide"),
        "stderr: {}",
        stderr_of(&out)
    );
}

#[test]
fn sweep_small_bounds_run_clean() {
    let out = run(&["sweep", "--bound", "16"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(
        v["prime_powers"],
        serde_json::json!([2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
    );
    assert_eq!(v["axiom_failures"], 0);
    assert_eq!(v["equivalence_mismatches"], 0);
    assert_eq!(v["quotients_checked"], 32);
    assert!(v["equivalence_checked"].as_u64().unwrap() > 0);

    let minimal = json_of(&run(&["sweep", "--bound", "3"]));
    assert_eq!(minimal["prime_powers"], serde_json::json!([2, 3]));
}

#[test]
fn geometry_of_the_degree_three_binary_extension_is_the_fano_plane() {
    let out = run(&["geometry", "--q", "2", "--n", "3"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["point_count"], 7);
    assert_eq!(v["line_count"], 7);
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["all_ok"], true);
    for line in v["lines"].as_array().unwrap() {
        assert_eq!(line.as_array().unwrap().len(), 3);
    }
}

#[test]
fn desargues_holds_in_the_fano_plane() {
    let out = run(&["desargues", "--q", "2", "--n", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(json_of(&out)["desarguesian"], true);
}

#[test]
fn from_group_of_order_two_fails_associativity_with_a_witness() {
    let out = run(&["from-group", "--factors", "2"]);
    assert_eq!(exit_code(&out), 1);
    let v = json_of(&out);
    assert_eq!(v["all_pass"], false);
    assert_eq!(v["axioms"]["associativity"]["passed"], false);
    assert_eq!(
        v["axioms"]["associativity"]["counterexample"],
        serde_json::json!([1, 1, 2])
    );
}

#[test]
fn from_group_of_order_five_passes_every_axiom() {
    let out = run(&["from-group", "--factors", "5"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["group_order"], 5);
    assert_eq!(v["structure"]["n"], 6);
}

#[test]
fn enumerate_order_two_finds_the_field_and_the_krasner_table() {
    let out = run(&["enumerate", "--order", "2"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["count"], 2);
    let self_sums: Vec<Value> = v["structures"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["structure"]["hyperadd"][1][1].clone())
        .collect();
    assert!(self_sums.contains(&serde_json::json!([0])));
    assert!(self_sums.contains(&serde_json::json!([0, 1])));
}

#[test]
fn witness_certificate_and_oracle_agree_on_a_small_gaussian_family() {
    let out = run(&["witness", "--case", "gauss", "--k", "3", "--oracle-bound", "2"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["certificate"]["rank"], 3);
    assert_eq!(v["certificate"]["independent"], true);
    assert_eq!(v["certificate"]["oracle"]["relation"], Value::Null);
    assert_eq!(v["oracle_agrees"], true);
}

#[test]
fn witness_honors_the_budget_environment_override() {
    let out = bin()
        .args(["witness", "--case", "gauss", "--k", "3", "--oracle-bound", "2"])
        .env("HYPERFORGE_BUDGET", "10")
        .output()
        .expect("binary should spawn");
    assert_eq!(exit_code(&out), 2);
    assert!(
        stderr_of(&out).contains("budget"),
        "stderr: {}",
        stderr_of(&out)
    );

    let malformed = bin()
        .args(["witness", "--case", "gauss", "--k", "3"])
        .env("HYPERFORGE_BUDGET", "lots")
        .output()
        .expect("binary should spawn");
    assert_eq!(exit_code(&malformed), 2);
}

#[test]
fn torsion_report_confirms_the_rank_zero_evidence() {
    let out = run(&["torsion-report", "--q", "5"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["quotient_order"], 6);
    assert_eq!(v["all_torsion"], true);
    assert_eq!(v["rational_rank"], 0);
    assert_eq!(v["coset_orders"].as_array().unwrap().len(), 6);
}

fn write_structure(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path_str = path.to_str().unwrap().to_string();
    let out = bin()
        .args(args)
        .args(["--out", &path_str])
        .output()
        .expect("binary should spawn");
    assert_eq!(exit_code(&out) == 0 || exit_code(&out) == 1, true);
    path_str
}

#[test]
fn eval_reads_structures_written_by_out() {
    let dir = tempfile::tempdir().unwrap();
    let h9 = write_structure(dir.path(), "H9.json", &["quotient", "--q", "9", "--g", "2"]);

    let tautology = run(&[
        "eval",
        "--structure",
        &h9,
        "--formula",
        "forall x. add(x, x, x) \\/ ~add(x, x, x)",
    ]);
    assert_eq!(exit_code(&tautology), 0);
    assert_eq!(json_of(&tautology)["value"], true);

    let falsehood = run(&["eval", "--structure", &h9, "--formula", "forall x. x = 0"]);
    assert_eq!(exit_code(&falsehood), 1);
    assert_eq!(json_of(&falsehood)["value"], false);

    let open = run(&["eval", "--structure", &h9, "--formula", "add(x, 0, 0)"]);
    assert_eq!(exit_code(&open), 2);
    assert!(stderr_of(&open).contains("free variable"));

    let ungrammatical = run(&["eval", "--structure", &h9, "--formula", "forall x y. x = y"]);
    assert_eq!(exit_code(&ungrammatical), 2);
}

#[test]
fn ef_distinguish_and_iso_separate_the_order_four_pair() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_structure(dir.path(), "C4.json", &["from-group", "--factors", "4"]);
    let v4 = write_structure(dir.path(), "V4.json", &["from-group", "--factors", "2,2"]);

    let ef = run(&["ef", &c4, &v4, "--depth", "1"]);
    assert_eq!(exit_code(&ef), 1);
    assert_eq!(json_of(&ef)["equivalent"], false);

    let reflexive = run(&["ef", &c4, &c4, "--depth", "3"]);
    assert_eq!(exit_code(&reflexive), 0);
    assert_eq!(json_of(&reflexive)["equivalent"], true);

    let distinguish = run(&["distinguish", &c4, &v4, "--depth", "3"]);
    assert_eq!(exit_code(&distinguish), 0);
    let v = json_of(&distinguish);
    assert!(v["sentence"].is_string());
    assert_eq!(v["quantifier_depth"], 1);
    assert_eq!(v["verified"], true);

    let no_sentence = run(&["distinguish", &c4, &c4, "--depth", "2"]);
    assert_eq!(exit_code(&no_sentence), 1);
    assert_eq!(json_of(&no_sentence)["sentence"], Value::Null);

    let iso = run(&["iso", &c4, &v4]);
    assert_eq!(exit_code(&iso), 1);
    assert_eq!(json_of(&iso)["isomorphic"], false);

    let self_iso = run(&["iso", &c4, &c4]);
    assert_eq!(exit_code(&self_iso), 0);
    assert!(json_of(&self_iso)["mapping"].is_array());
}

#[test]
fn is_krasner_finds_the_quotient_presentation_beyond_q_two() {
    let dir = tempfile::tempdir().unwrap();
    let k = write_structure(dir.path(), "K.json", &["quotient", "--q", "3", "--g", "2"]);

    let too_small = run(&["is-krasner", &k, "--q-max", "2"]);
    assert_eq!(exit_code(&too_small), 1);
    assert_eq!(json_of(&too_small)["found"], false);

    let found = run(&["is-krasner", &k, "--q-max", "64"]);
    assert_eq!(exit_code(&found), 0);
    let v = json_of(&found);
    assert_eq!(v["q"], 3);
    assert_eq!(v["subgroup"], serde_json::json!([1, 2]));
}

#[test]
fn transfer_check_reports_the_vacuous_and_non_vacuous_cases() {
    let split = run(&[
        "transfer-check",
        "--left",
        "4",
        "--right",
        "2,2",
        "--depth",
        "2",
    ]);
    assert_eq!(exit_code(&split), 0);
    let v = json_of(&split);
    assert_eq!(v["report"]["groups_equivalent"], false);
    assert_eq!(v["report"]["implication_holds"], true);

    let same = run(&[
        "transfer-check",
        "--left",
        "6",
        "--right",
        "2,3",
        "--depth",
        "2",
    ]);
    assert_eq!(exit_code(&same), 0);
    let v = json_of(&same);
    assert_eq!(v["report"]["groups_equivalent"], true);
    assert_eq!(v["report"]["hyperfields_equivalent"], true);
}

#[test]
fn reports_are_byte_identical_after_dropping_the_timestamp() {
    let strip = |output: &Output| {
        let mut v = json_of(output);
        v.as_object_mut().unwrap().remove("timestamp_secs");
        serde_json::to_string_pretty(&v).unwrap()
    };
    let first = run(&["quotient", "--q", "9", "--g", "2"]);
    let second = run(&["quotient", "--q", "9", "--g", "2"]);
    assert_eq!(strip(&first), strip(&second));

    let sweep_a = run(&["sweep", "--bound", "8"]);
    let sweep_b = run(&["sweep", "--bound", "8"]);
    assert_eq!(strip(&sweep_a), strip(&sweep_b));
}

#[test]
fn table_mode_renders_text_and_out_keeps_the_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("H.json");
    let path_str = path.to_str().unwrap();

    let out = run(&["quotient", "--q", "9", "--g", "2", "--table", "--out", path_str]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("carrier: 5 elements"), "stdout: {text}");
    assert!(text.contains("commutativity: pass"));
    assert!(text.contains("CC: yes"));
    assert!(serde_json::from_str::<Value>(&text).is_err());

    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["all_pass"], true);
    assert_eq!(written["structure"]["n"], 5);

    // Without --table, --out leaves stdout empty.
    let quiet = run(&["quotient", "--q", "9", "--g", "2", "--out", path_str]);
    assert!(quiet.stdout.is_empty());
}

#[test]
fn malformed_structure_files_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.json");
    std::fs::write(&path, "{\"n\": 3}").unwrap();
    let out = run(&["eval", "--structure", path.to_str().unwrap(), "--formula", "0 = 0"]);
    assert_eq!(exit_code(&out), 2);

    let missing = run(&["eval", "--structure", "/nonexistent.json", "--formula", "0 = 0"]);
    assert_eq!(exit_code(&missing), 2);

    let ef_depth = run(&["ef", path.to_str().unwrap(), path.to_str().unwrap(), "--depth", "9"]);
    assert_eq!(exit_code(&ef_depth), 2);
}

#[test]
fn golden_quotient_report_is_stable() {
    let golden_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/quotient_q3_g2.json");
    let golden: Value =
        serde_json::from_str(&std::fs::read_to_string(&golden_path).unwrap()).unwrap();
    let out = run(&["quotient", "--q", "3", "--g", "2"]);
    let mut actual = json_of(&out);
    actual.as_object_mut().unwrap().remove("timestamp_secs");
    assert_eq!(actual, golden);
}

#[test]
fn golden_geometry_report_is_stable() {
    let golden_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/geometry_q2_n3.json");
    let golden: Value =
        serde_json::from_str(&std::fs::read_to_string(&golden_path).unwrap()).unwrap();
    let out = run(&["geometry", "--q", "2", "--n", "3"]);
    let mut actual = json_of(&out);
    actual.as_object_mut().unwrap().remove("timestamp_secs");
    assert_eq!(actual, golden);
}
