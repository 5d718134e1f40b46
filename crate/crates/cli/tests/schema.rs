use frobenius_cli::app::{run, Cli};
use frobenius_cli::report::SCHEMA;
use clap::Parser;
use jsonschema::JSONSchema;
use serde_json::Value;

fn outputs() -> Vec<Value> {
    let sessions = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("sessions");
    let runs: &[&[&str]] = &[
        &["-i", "unit_modules.frob", "analyze", "R"],
        &["-i", "unit_modules.frob", "analyze", "Rx", "--cap", "4"],
        &["-i", "unit_modules.frob", "gb", "H1"],
        &["-i", "unit_modules.frob", "hilbert", "Rx", "--terms", "12"],
        &["-i", "principal.frob", "analyze", "G"],
        &["-i", "principal.frob", "analyze", "N3"],
        &["-i", "modules.frob", "analyze", "M"],
        &["-i", "modules.frob", "analyze", "Free"],
        &["ring-hs", "-p", "3", "-n", "2"],
        &["verify-de", "--degree", "5"],
        &["count", "4"],
        &["-i", "unit_modules.frob", "count", "4", "H1"],
    ];
    runs.iter()
        .map(|args| {
            let cli = Cli::try_parse_from(std::iter::once("frob").chain(std::iter::once("--json")).chain(args.iter().copied()))
                .unwrap();
            let (code, stdout, stderr) = run(&cli, |p| std::fs::read_to_string(sessions.join(p)));
            assert!(code == 0 || code == 3, "{args:?}: {stderr}");
            serde_json::from_str(&stdout).unwrap()
        })
        .collect()
}

#[test]
fn every_report_validates() {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let compiled = JSONSchema::compile(&schema).expect("schema compiles");
    for out in outputs() {
        if let Err(errors) = compiled.validate(&out) {
            let messages: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
            panic!("{out:#}\n{messages:#?}");
        }
    }
}

#[test]
fn schema_rejects_floats_and_missing_fields() {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let compiled = JSONSchema::compile(&schema).unwrap();
    let mut bad = outputs().remove(0);
    bad["hs"]["numerator"][0] = serde_json::json!(1.5);
    assert!(!compiled.is_valid(&bad));
    let mut missing = outputs().remove(0);
    missing.as_object_mut().unwrap().remove("delta");
    assert!(!compiled.is_valid(&missing));
}

#[test]
fn numbers_are_never_floats() {
    fn walk(v: &Value) {
        match v {
            Value::Number(n) => assert!(!n.to_string().contains(['.', 'e', 'E']), "{n}"),
            Value::Array(items) => items.iter().for_each(walk),
            Value::Object(map) => map.values().for_each(walk),
            _ => {}
        }
    }
    outputs().iter().for_each(walk);
}
