use std::path::{Path, PathBuf};
use std::process::{Command as Proc, Output};
use workbench::cli::workspace::TCatEntry;
use workbench::cli::{emit_report, parse_document, run, Command, Format, Theorem, What, Workspace};
use workbench::suites::Bounds;
use workbench::Error;

fn sample() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../workspaces/basic.json")
}

fn sample_workspace() -> Workspace {
    workbench::cli::load_workspace(&[sample()], &Bounds::default()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("workbench-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn workbench(args: &[&str]) -> Output {
    Proc::new(env!("CARGO_BIN_EXE_workbench")).args(args).output().unwrap()
}

const TWO_AND_ISO: &str = r#"{
  "category": {
    "two": {
      "objects": ["0", "1"],
      "arrows": { "i0": ["0", "0"], "i1": ["1", "1"], "u": ["0", "1"] },
      "identities": { "0": "i0", "1": "i1" }
    },
    "iso": {
      "objects": ["0", "1"],
      "arrows": { "i0": ["0", "0"], "i1": ["1", "1"], "u": ["0", "1"], "v": ["1", "0"] },
      "identities": { "0": "i0", "1": "i1" },
      "compose": { "(u,v)": "i0", "(v,u)": "i1" }
    }
  }
}"#;

#[test]
fn empty_document_gives_empty_workspace() {
    let ws = Workspace::from_document(&parse_document("").unwrap(), &Bounds::default()).unwrap();
    assert!(ws.names().is_empty());
    let ws = Workspace::from_document(&parse_document("{}").unwrap(), &Bounds::default()).unwrap();
    assert!(ws.names().is_empty());
}

#[test]
fn two_and_iso_give_two_categories() {
    let ws = Workspace::from_document(&parse_document(TWO_AND_ISO).unwrap(), &Bounds::default()).unwrap();
    assert_eq!(ws.categories.len(), 2);
    assert!(workbench::catkit::is_groupoid(&ws.categories["iso"]));
}

#[test]
fn bad_identity_leg_names_the_first_axiom() {
    let doc = r#"{
      "monad": { "id": { "builtin": "identity" } },
      "tcategory": { "C": {
        "monad": "id", "objects": ["0", "1"], "arrows": ["i0", "i1", "u"],
        "d0": { "i0": "0", "i1": "1", "u": "1" },
        "delta1": { "i0": "0", "i1": "1", "u": "0" },
        "s0": { "0": "u", "1": "i1" },
        "compose": {}
      } }
    }"#;
    let e = Workspace::from_document(&parse_document(doc).unwrap(), &Bounds::default()).unwrap_err();
    assert!(e.to_string().contains("Axioms 1"), "{e}");
}

#[test]
fn unknown_fields_and_bad_json_are_parse_errors() {
    assert!(matches!(parse_document(r#"{"sets": {}}"#), Err(Error::Parse { .. })));
    let Err(Error::Parse { pos, .. }) = parse_document("{\n  \"set\": {\"A\": [}\n}") else { panic!() };
    // the stray brace
    assert_eq!(pos, 18);
}

#[test]
fn references_must_resolve() {
    let doc = r#"{"map": {"f": {"dom": "X", "cod": ["a"], "table": {}}}}"#;
    let e = Workspace::from_document(&parse_document(doc).unwrap(), &Bounds::default()).unwrap_err();
    assert!(matches!(e, Error::Unresolved(ref n) if n.contains("set X")), "{e}");
}

#[test]
fn broken_composition_reports_a_law() {
    let doc = TWO_AND_ISO.replace(r#""(u,v)": "i0""#, r#""(u,v)": "i1""#);
    let e = Workspace::from_document(&parse_document(&doc).unwrap(), &Bounds::default()).unwrap_err();
    assert!(e.to_string().contains("category iso"), "{e}");
}

#[test]
fn sample_survives_serialization() {
    let ws = sample_workspace();
    let doc = ws.to_document();
    let text = serde_json::to_string_pretty(&doc).unwrap();
    let again = Workspace::from_document(&parse_document(&text).unwrap(), &Bounds::default()).unwrap();
    assert_eq!(again.to_document(), doc);
}

#[test]
fn certify_maybe_is_cartesian_but_not_hypercartesian() {
    let mut ws = Workspace::default();
    let r = run(&Command::Certify { monad: "maybe".into() }, &mut ws, &Bounds::default()).unwrap();
    assert!(r.passed);
    let s = &r.sections[0];
    assert!(s.properties["cartesian"]);
    assert!(s.properties["half-cartesian"]);
    assert!(!s.properties["hypercartesian"]);
}

#[test]
fn kleisli_translation_of_e7_is_recorded() {
    let mut ws = sample_workspace();
    let cmd = Command::Translate { theorem: Theorem::Kleisli, input: "E7".into(), as_name: None, monad: None };
    let r = run(&cmd, &mut ws, &Bounds::default()).unwrap();
    assert!(r.passed, "{}", emit_report(&r, Format::Plain));
    assert!(ws.derived["E7-kleisli"].contains("Kl(list)"));
    let again = run(&cmd, &mut ws, &Bounds::default()).unwrap_err();
    assert!(again.to_string().contains("already defined"));
}

#[test]
fn embedding_adds_a_tcategory() {
    let mut ws = sample_workspace();
    let cmd = Command::Translate {
        theorem: Theorem::Embed,
        input: "iso".into(),
        as_name: Some("iso-maybe".into()),
        monad: Some("maybe".into()),
    };
    assert!(run(&cmd, &mut ws, &Bounds::default()).unwrap().passed);
    assert!(matches!(ws.tcategories["iso-maybe"].1, TCatEntry::Maybe(_)));
    let doc = ws.to_document();
    assert!(doc.tcategory.contains_key("iso-maybe"));
}

#[test]
fn dec_counit_translates_to_an_algebra_and_back() {
    let mut ws = sample_workspace();
    let b = Bounds::default();
    let t = |theorem, input: &str, monad: Option<&str>| Command::Translate {
        theorem,
        input: input.into(),
        as_name: None,
        monad: monad.map(String::from),
    };
    assert!(run(&t(Theorem::Dec, "iso", None), &mut ws, &b).unwrap().passed);
    assert!(run(&t(Theorem::Algebra, "iso-dec-counit", Some("tx-iso")), &mut ws, &b).unwrap().passed);
    assert!(run(&t(Theorem::Dfib, "iso-dec-counit-algebra", None), &mut ws, &b).unwrap().passed);
    assert!(ws.functors.contains_key("iso-dec-counit-algebra-dfib"));
}

#[test]
fn enumeration_respects_its_bounds() {
    let mut ws = Workspace::default();
    let b = Bounds::default();
    let cmd = |what, objects, arrows| Command::Enumerate { what, objects, arrows, size: 2, over: None, monad: None, list: false };
    let r = run(&cmd(What::Groupoids, 2, 4), &mut ws, &b).unwrap();
    // the empty groupoid plus the 14 found by the groupoid suite
    assert_eq!(r.sections[0].counts["groupoids"], 15);
    assert!(matches!(run(&cmd(What::Categories, 4, 4), &mut ws, &b), Err(Error::Input(_))));
}

#[test]
fn empty_report_prints_header_only() {
    let mut ws = Workspace::default();
    let r = run(&Command::Validate { name: None }, &mut ws, &Bounds::default()).unwrap();
    assert_eq!(emit_report(&r, Format::Plain).lines().count(), 1);
}

#[test]
fn binary_exit_codes() {
    let s = sample();
    let s = s.to_str().unwrap();
    assert_eq!(workbench(&["validate", s]).status.code(), Some(0));
    let bad = scratch("bad.json", r#"{"category": {"x": }}"#);
    let out = workbench(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    assert_eq!(workbench(&["certify", "--monad", "nothing", s]).status.code(), Some(2));
    assert_eq!(workbench(&["enumerate", "--what", "categories", "--objects", "9"]).status.code(), Some(2));
}

#[test]
fn failing_verdicts_exit_with_one() {
    let s = sample();
    let out = workbench(&["translate", "--theorem", "g-algebra", "--input", "two", s.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not groupoid"));
}

#[test]
fn structured_output_is_deterministic() {
    let s = sample();
    let s = s.to_str().unwrap();
    let a = workbench(&["validate", "--format", "structured", s]);
    let b = workbench(&["validate", "--format", "structured", s]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["command"], "validate");
    assert_eq!(v["passed"], true);
}

#[test]
fn save_writes_a_loadable_workspace() {
    let s = sample();
    let out = std::env::temp_dir().join(format!("workbench-saved-{}.json", std::process::id()));
    let o = out.to_str().unwrap();
    let r = workbench(&["translate", "--theorem", "coreflection", "--input", "E7", "--save", o, s.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0), "{}", String::from_utf8_lossy(&r.stderr));
    let r = workbench(&["validate", "--name", "E7-coreflection", o]);
    assert_eq!(r.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&r.stdout).contains("category E7-coreflection"));
    let _ = std::fs::remove_file(out);
}
