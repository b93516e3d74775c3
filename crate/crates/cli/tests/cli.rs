use std::path::Path;
use std::process::{Command, Output};

use bzu_cli::document::{Payload, ReportDocument, SCHEMA_VERSION};

fn bzu(args: &[&str]) -> Output {
    bzu_env(args, None)
}

fn bzu_env(args: &[&str], cache_env: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bzu"));
    cmd.args(args).env_remove("BZU_CACHE_DIR");
    if let Some(dir) = cache_env {
        cmd.env("BZU_CACHE_DIR", dir);
    }
    cmd.output().expect("bzu runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Minimal structural check for the subset of DOT that the exporter writes.
fn check_dot(text: &str) -> Result<(usize, usize), String> {
    let mut lines = text.lines().skip_while(|l| l.starts_with("//"));
    if lines.next() != Some("graph bzu {") {
        return Err("missing header".into());
    }
    let (mut nodes, mut edges) = (0, 0);
    let mut closed = false;
    let mut declared = std::collections::HashSet::new();
    for l in lines {
        if closed {
            return Err(format!("text after closing brace: {l}"));
        }
        if l == "}" {
            closed = true;
            continue;
        }
        let body = l
            .strip_prefix("  ")
            .and_then(|b| b.strip_suffix(';'))
            .ok_or(format!("bad statement: {l}"))?;
        if let Some((a, b)) = body.split_once(" -- ") {
            if !declared.contains(a) || !declared.contains(b) {
                return Err(format!("edge to undeclared node: {l}"));
            }
            edges += 1;
        } else {
            let (id, attrs) = body.split_once(' ').ok_or(format!("bad node: {l}"))?;
            let ok_id = id.len() > 1 && id[1..].chars().all(|c| c.is_ascii_digit());
            let ok_attrs = (attrs.starts_with("[shape=box, label=\"") || attrs.starts_with("[shape=ellipse, label=\""))
                && attrs.ends_with("\"]");
            if !ok_id || !ok_attrs {
                return Err(format!("bad node: {l}"));
            }
            declared.insert(id.to_string());
            nodes += 1;
        }
    }
    if closed {
        Ok((nodes, edges))
    } else {
        Err("unterminated graph".into())
    }
}

#[test]
fn dot_for_z6_has_the_four_edges() {
    let o = bzu(&["export-dot", "Z/6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(check_dot(&text), Ok((5, 4)));
    for edge in ["z0 -- u0;", "z1 -- u0;", "z1 -- u1;", "z2 -- u1;"] {
        assert!(text.contains(edge), "{edge}");
    }
    assert_eq!(text, stdout(&bzu(&["analyze", "Z/6", "--format", "dot"])));
}

#[test]
fn dot_for_z4_is_edgeless() {
    let text = stdout(&bzu(&["export-dot", "Z/4"]));
    assert_eq!(check_dot(&text), Ok((3, 0)));
    assert_eq!(text.lines().filter(|l| l.contains("shape=")).count(), 3);
}

#[test]
fn dot_names_the_field_modulus_once() {
    let text = stdout(&bzu(&["export-dot", "GF(4) x GF(4)"]));
    assert!(check_dot(&text).is_ok());
    assert_eq!(text.matches("modulo a^2 + a + 1").count(), 1);
    assert_eq!(text, stdout(&bzu(&["export-dot", "GF(4) x GF(4)"])));
}

#[test]
fn analyze_json_round_trips() {
    for spec in ["Z/6", "GF(3)^3", "GF(2)[t]/(t^3) x GF(3)"] {
        let text = stdout(&bzu(&["analyze", spec, "--format", "json"]));
        let doc: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(doc.schema_version, SCHEMA_VERSION);
        assert!(matches!(doc.payload, Payload::RingReport(_)));
        let again = serde_json::to_string_pretty(&doc).unwrap();
        assert_eq!(again.trim_end(), text.trim_end());
    }
}

#[test]
fn census_json_round_trips_and_ignores_jobs() {
    let args = ["census", "--max-order", "40", "--format", "json"];
    let one = bzu(&[&args[..], &["--jobs", "1"]].concat());
    let four = bzu(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one.status.code(), Some(2));
    assert_eq!(one.stdout, four.stdout);
    let doc: ReportDocument = serde_json::from_slice(&one.stdout).unwrap();
    let Payload::Census(c) = &doc.payload else { panic!() };
    assert!(c.reports.iter().any(|r| r.spec_text == "Z/6"));
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap().trim_end(), stdout(&one).trim_end());
}

#[test]
fn exit_codes() {
    assert_eq!(bzu(&["census", "--max-order", "16", "--claims", "C1,C2"]).status.code(), Some(0));
    assert_eq!(bzu(&["census", "--max-order", "30", "--claims", "C7"]).status.code(), Some(2));
    assert_eq!(bzu(&["census", "--claims", "C12"]).status.code(), Some(1));
    assert_eq!(bzu(&["frobnicate"]).status.code(), Some(1));
    let bad = bzu(&["analyze", "GF(6)"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("GF(6)"));
    assert_eq!(bzu(&["isocheck", "Z/4", "Z/6", "--format", "csv"]).status.code(), Some(1));
    assert_eq!(bzu(&["--version"]).status.code(), Some(0));
}

#[test]
fn census_csv_has_one_row_per_verdict() {
    let o = bzu(&["census", "--max-order", "12", "--format", "csv", "--claims", "C1,C3"]);
    let mut r = csv::Reader::from_reader(&o.stdout[..]);
    let headers = r.headers().unwrap().clone();
    assert_eq!(&headers, vec!["ring", "claim", "verdict", "detail", "certificate"]);
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert!(rows.iter().all(|row| &row[1] == "C1" || &row[1] == "C3"));
    let z6 = rows.iter().find(|row| &row[0] == "Z/6" && &row[1] == "C3").unwrap();
    assert_eq!(&z6[2], "HOLDS");
    assert_eq!(&z6[3], "diameter 4");
}

#[test]
fn isocheck_reports_the_non_reduced_pair() {
    let o = bzu(&["isocheck", "Z/4", "GF(2)[t]/(t^2)", "--seed", "11"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("graph-isomorphic, ring-distinct"), "{text}");
    assert!(text.contains("self-check (seed 11): passed"));
    let o = bzu(&["isocheck", "GF(2) x GF(4)", "GF(2)^3", "--format", "json"]);
    let doc: ReportDocument = serde_json::from_slice(&o.stdout).unwrap();
    let Payload::Isocheck(r) = doc.payload else { panic!() };
    assert!(!r.graphs_isomorphic && r.mapping.is_none());
}

#[test]
fn aut_reports_star_symmetry() {
    let text = stdout(&bzu(&["aut", "GF(2)^3"]));
    assert!(text.contains("graph automorphisms: 720"));
    assert!(text.contains("ring automorphisms: 6"));
}

#[test]
fn rigidity_table() {
    let o = bzu(&["rigidity", "--max-order", "16"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("GF(2)[t]/(t^2) | Z/4: graphs isomorphic, rings distinct"), "{text}");
    assert!(text.contains("GF(2) x GF(3) | Z/6: graphs isomorphic, rings isomorphic"));
    let csv = stdout(&bzu(&["rigidity", "--max-order", "16", "--format", "csv"]));
    assert!(csv.starts_with("left,right,order,reduced,graphs_isomorphic,rings_isomorphic,reason\n"));
}

#[test]
fn cache_is_keyed_by_version_and_env_overrides_flag() {
    let flag = tempfile::tempdir().unwrap();
    let env = tempfile::tempdir().unwrap();
    let args = ["analyze", "Z/10", "--format", "json", "--cache-dir", flag.path().to_str().unwrap()];
    let first = bzu_env(&args, Some(env.path()));
    let version_dir = env.path().join(env!("CARGO_PKG_VERSION"));
    let files: Vec<_> = std::fs::read_dir(&version_dir).unwrap().collect();
    assert_eq!(files.len(), 1);
    assert_eq!(std::fs::read_dir(flag.path()).unwrap().count(), 0);
    let second = bzu_env(&args, Some(env.path()));
    assert_eq!(first.stdout, second.stdout);

    let cached = bzu(&args);
    assert_eq!(cached.stdout, first.stdout);
    assert!(flag.path().join(env!("CARGO_PKG_VERSION")).is_dir());

    let path = files[0].as_ref().unwrap().path();
    std::fs::write(&path, b"not json").unwrap();
    assert_eq!(bzu_env(&args, Some(env.path())).stdout, first.stdout);
}
