use std::path::PathBuf;

use hilbfun::decomposition::{enumerate_gorenstein_decompositions, zanello_socle, HVector};
use hilbfun::extremal::{backward_hf_recursion, recognize_hypersurface_form};
use hilbfun::lex::{cancellation_socle_lower_bound, ek_betti, lex_ideal, truncate_ideal};
use hilbfun::macaulay::{expand, green_bound, macaulay_bound};
use hilbfun::prover::{classify_socle4, ProofTrace};
use hilbfun_cli::run;
use serde_json::{json, Value};

fn to<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap()
}

const CASES: &[(&str, &[&str])] = &[
    ("expand_19_3", &["expand", "19", "3"]),
    ("bound_macaulay_19_3", &["bound", "macaulay", "19", "3"]),
    ("bound_green_28_4", &["bound", "green", "28", "4"]),
    ("osequence", &["osequence", "1,19,17,19,31"]),
    ("decompose_19", &["decompose", "1,19,17,19,1"]),
    ("socle_zanello", &["socle", "zanello", "1,19,17,19,31", "3"]),
    ("socle_injectivity", &["socle", "injectivity", "1,19,17,19,28", "1,18,5,7,9", "3"]),
    ("extremal_recognize", &["extremal", "recognize", "19", "3"]),
    ("extremal_backward", &["extremal", "backward", "19", "3"]),
    ("lex_cancel_30", &["lex", "cancel", "1,19,17,19,30", "19", "19", "21", "--truncate", "4"]),
    ("engine_sextics", &["engine", "profile", "--nvars", "3", "--cap", "8", "--random", "6,6,6"]),
    ("classify_20_18", &["classify", "20", "18"]),
    ("classify_24_20", &["classify", "24", "20"]),
];

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

fn payload(args: &[&str]) -> Value {
    let out = run(std::iter::once("hilbfun").chain(args.iter().copied()));
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    v["payload"].clone()
}

#[test]
fn outputs_match_golden_files() {
    let bless = std::env::var_os("HILBFUN_BLESS").is_some();
    for (name, args) in CASES {
        let out = run(std::iter::once("hilbfun").chain(args.iter().copied()));
        assert_eq!(out.code, 0, "{name}: {}", out.stderr);
        let path = golden_path(name);
        if bless {
            std::fs::write(&path, &out.stdout).unwrap();
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(out.stdout, want, "{name}");
    }
}

#[test]
fn payloads_equal_direct_library_calls() {
    assert_eq!(payload(&["expand", "28", "4"]), to(&expand(28, 4).unwrap()));
    assert_eq!(payload(&["bound", "macaulay", "19", "3"])["bound"], json!(macaulay_bound(19, 3).unwrap()));
    assert_eq!(payload(&["bound", "green", "27", "4"])["bound"], json!(green_bound(27, 4).unwrap()));
    let h = HVector::new(vec![1, 19, 17, 19, 1]).unwrap();
    assert_eq!(
        payload(&["decompose", "1,19,17,19,1"]),
        to(&enumerate_gorenstein_decompositions(&h).unwrap())
    );
    assert_eq!(
        payload(&["socle", "zanello", "1,18,16,18,28", "3"]),
        to(&zanello_socle(&[1, 18, 16, 18, 28], 3).unwrap())
    );
    assert_eq!(payload(&["extremal", "recognize", "19", "3"]), to(&recognize_hypersurface_form(19, 3).unwrap()));
    assert_eq!(payload(&["extremal", "backward", "19", "3"]), to(&backward_hf_recursion(19, 3).unwrap()));
    let ideal = truncate_ideal(&lex_ideal(&[1, 19, 17, 19, 29], 19).unwrap(), 4);
    let table = ek_betti(&ideal).unwrap();
    let cancel = payload(&["lex", "cancel", "1,19,17,19,29", "19", "18", "21", "--truncate", "4"]);
    assert_eq!(cancel["beta"], json!(table.get(18, 21)));
    assert_eq!(cancel["lower_bound"], json!(cancellation_socle_lower_bound(&table, 18, 21)));
    assert_eq!(payload(&["lex", "betti", "1,19,17,19,29", "19", "--truncate", "4"]), to(&table));
    assert_eq!(payload(&["classify", "19", "17"]), to(&classify_socle4(19, 17).unwrap()));
}

#[test]
fn prove_19_reports_not_gorenstein() {
    let p = payload(&["prove-19"]);
    assert_eq!(p["conclusion"], "not_gorenstein");
    assert_eq!(p["report"]["conclusion"], "not_gorenstein");
}

#[test]
fn saved_traces_can_be_verified() {
    let p = payload(&["prove-19"]);
    let dir = std::env::temp_dir().join(format!("hilbfun-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("trace.json");
    let trace: ProofTrace = serde_json::from_value(p["trace"].clone()).unwrap();
    std::fs::write(&file, serde_json::to_string_pretty(&trace).unwrap()).unwrap();
    let verified = payload(&["prove-19", "--verify", file.to_str().unwrap()]);
    assert_eq!(verified["report"], p["report"]);

    let tampered = std::fs::read_to_string(&file).unwrap().replacen("\"value\": 7", "\"value\": 8", 1);
    std::fs::write(&file, tampered).unwrap();
    let out = run(["hilbfun", "prove-19", "--verify", file.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    let err: Value = serde_json::from_str(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "prover");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn randomized_commands_record_seed_and_prime() {
    let out = run(["hilbfun", "--seed", "5", "engine", "build", "--nvars", "3", "--cap", "7", "--random", "6,6,6"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["seed"], 5);
    assert_eq!(v["prime"], 2147483647u64);
    assert_eq!(v["payload"]["hf"][6], 25);
    let det: Value = serde_json::from_str(&run(["hilbfun", "expand", "19", "3"]).stdout).unwrap();
    assert!(det.get("seed").is_none());
}

#[test]
fn exit_codes() {
    assert_eq!(run(["hilbfun", "nonsense"]).code, 2);
    assert_eq!(run(["hilbfun", "expand", "x", "3"]).code, 2);
    let out = run(["hilbfun", "expand", "5", "0"]);
    assert_eq!(out.code, 1);
    let err: Value = serde_json::from_str(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "macaulay");
    let out = run(["hilbfun", "engine", "build", "--nvars", "3", "--cap", "4"]);
    assert_eq!(out.code, 1);
    assert_eq!(run(["hilbfun", "--help"]).code, 0);
}

#[test]
fn pretty_output_is_text() {
    let out = run(["hilbfun", "--pretty", "prove-19"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("conclusion: not_gorenstein"));
    assert!(serde_json::from_str::<Value>(&out.stdout).is_err());
}
