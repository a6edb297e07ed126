use serde_json::Value;
use vat_web::{alpha_beta_json, analyze_json, verify_json};

fn parse(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.unwrap()).unwrap()
}

#[test]
fn analyze_star() {
    let v = parse(analyze_json("star:5"));
    assert_eq!(v["n"], 6);
    assert_eq!(v["vat"]["value"]["num"], 1);
    assert_eq!(v["vat"]["value"]["den"], 5);
    assert_eq!(v["vat"]["witness"], serde_json::json!([0]));
    assert_eq!(v["vat"]["largest"].as_array().unwrap().len(), 1);
    assert_eq!(v["conductance"]["value"]["real"], 1.0);
    assert_eq!(v["layout"].as_array().unwrap().len(), 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 5);
    assert!(v["note"].is_null());
}

#[test]
fn analyze_edge_list_text() {
    let v = parse(analyze_json("0 1\n1 2\n2 3\n3 0\n"));
    assert_eq!(v["graph_id"], "edge list");
    assert_eq!(v["d"], 2);
    assert_eq!(v["conductance"]["value"]["num"], 1);
    assert_eq!(v["conductance"]["value"]["den"], 2);
    assert!((v["lambda2"].as_f64().unwrap() - 0.0).abs() < 1e-9);
}

#[test]
fn analyze_large_graph_falls_back_to_sweep() {
    let v = parse(analyze_json("random_regular:60,3,seed=2"));
    assert!(v["vat"].is_null());
    assert_eq!(v["conductance"]["exact"], false);
    assert!(v["note"].as_str().unwrap().contains("sweep"));
    let gap = v["gap"].as_f64().unwrap();
    let sweep = v["conductance"]["value"]["real"].as_f64().unwrap();
    assert!(gap <= 2.0 * sweep + 1e-9);
}

#[test]
fn verify_petersen() {
    let v = parse(verify_json("petersen"));
    assert_eq!(v["summary"]["graphs"], 1);
    assert_eq!(v["summary"]["failures"], 0);
    assert!(v["reports"].as_array().unwrap().len() >= 8);
}

#[test]
fn alpha_beta_reduces_to_vat() {
    let ab = parse(alpha_beta_json("cycle:6", 1.0, 0.0));
    let t = parse(analyze_json("cycle:6"));
    assert_eq!(ab["exact"], t["vat"]["value"]);
    let ab = parse(alpha_beta_json("cycle:6", 2.0, 1.0));
    assert!(ab["value"].as_f64().unwrap() > 0.0);
    assert!(!ab["largest"].as_array().unwrap().is_empty());
}

#[test]
fn errors_are_messages() {
    assert!(analyze_json("blob:3").is_err());
    assert!(analyze_json("0 1\n2 3\n").unwrap_err().contains("disconnected"));
    assert!(verify_json("cycle:30").unwrap_err().contains("30"));
    assert!(alpha_beta_json("cycle:6", -1.0, 0.0).is_err());
    assert!(analyze_json("0 0\n").is_err());
}
