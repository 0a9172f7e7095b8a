use std::path::PathBuf;
use std::process::{Command, Output};

use scottlab_core::order::io::parse_poset;
use scottlab_core::property_r::{broken_r_witness, jia_r_witness, johnstone_r_witness, RWitness};
use scottlab_core::structure::{corrupted_johnstone_cert, johnstone_cert, johnstone_plus_x_cert, CPosetCert};
use scottlab_core::FinPoset;

fn scottlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scottlab"))
        .args(args)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn asset(name: &str) -> String {
    std::fs::read_to_string(format!("{}/assets/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("scottlab-{}-{name}", std::process::id()))
}

#[test]
fn assets_match_the_library() {
    assert_eq!(parse_poset(&asset("chain3.json")).unwrap(), FinPoset::chain(3));
    assert_eq!(parse_poset(&asset("diamond.json")).unwrap(), FinPoset::diamond());
    assert_eq!(parse_poset(&asset("antichain3.json")).unwrap(), FinPoset::antichain(3));
    assert_eq!(
        CPosetCert::from_json(&asset("johnstone-cert.json")).unwrap(),
        johnstone_cert()
    );
    assert_eq!(
        CPosetCert::from_json(&asset("johnstone-x-cert.json")).unwrap(),
        johnstone_plus_x_cert(5)
    );
    assert_eq!(
        CPosetCert::from_json(&asset("corrupted-cert.json")).unwrap(),
        corrupted_johnstone_cert()
    );
    assert_eq!(
        RWitness::from_json(&asset("johnstone-r-witness.json")).unwrap(),
        johnstone_r_witness()
    );
    assert_eq!(
        RWitness::from_json(&asset("jia-r-witness.json")).unwrap(),
        jia_r_witness()
    );
    assert_eq!(
        RWitness::from_json(&asset("broken-r-witness.json")).unwrap(),
        broken_r_witness()
    );
}

#[test]
fn check_chain() {
    let o = scottlab(&["check", "@chain3", "sober,wf,propR", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["passed"], true);
    let names: Vec<&str> = v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["property"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["sober", "wf", "propR"]);
}

#[test]
fn check_diamond_product() {
    let o = scottlab(&["check", "@diamond", "product-eq", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["verdicts"][0]["holds"], true);
    assert!(v["verdicts"][0]["detail"].as_str().unwrap().ends_with("opens"));
}

#[test]
fn check_other_topologies() {
    // the upper topology of a 3-chain is sober; the lower one of a 3-antichain too
    assert_eq!(
        code(&scottlab(&["check", "@chain3", "sober", "--topology", "upper"])),
        0
    );
    assert_eq!(
        code(&scottlab(&["check", "@antichain3", "all", "--topology", "lower"])),
        0
    );
}

#[test]
fn input_errors_exit_2() {
    let bad = temp("bad.json");
    std::fs::write(&bad, "{\"elements\": [\"a\"], \"le\": [[\"a\"").unwrap();
    assert_eq!(code(&scottlab(&["check", bad.to_str().unwrap()])), 2);
    let cyclic = temp("cyclic.json");
    std::fs::write(&cyclic, r#"{"elements":["a","b"],"le":[["a","b"],["b","a"]]}"#).unwrap();
    assert_eq!(code(&scottlab(&["check", cyclic.to_str().unwrap()])), 2);
    assert_eq!(code(&scottlab(&["check", "@chain3", "shiny"])), 2);
    assert_eq!(code(&scottlab(&["check", "@nothing"])), 2);
    assert_eq!(code(&scottlab(&["family", "nowhere", "k-formula"])), 2);
    assert_eq!(code(&scottlab(&["family", "jia", "k-formula"])), 2);
    assert_eq!(code(&scottlab(&["family", "jia", "no-such-fact"])), 2);
    assert_eq!(code(&scottlab(&["cert", "@johnstone-cert", "--depth", "0"])), 2);
    assert_eq!(code(&scottlab(&["corpus", "9"])), 2);
}

#[test]
fn family_facts() {
    let o = scottlab(&["family", "johnstone", "non-wf-witness", "--depth", "6", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["data"]["result"]["report"]["certified"], true);

    let o = scottlab(&["family", "jia", "intersection", "--depth", "6"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("(2,6,inf)") && text.contains("discrepancy"));

    let o = scottlab(&["family", "flat:3", "ideals-countable", "--depth", "1", "--json"]);
    assert_eq!(code(&o), 0);
    let r = &json(&o)["data"]["result"];
    assert_eq!(r["principal_in_prefix"], 3);
    assert_eq!(r["non_principal_in_prefix"], 0);

    for (name, fact) in [
        ("johnstone", "k-formula"),
        ("jia", "not-coherent"),
        ("l428", "ideals-countable"),
    ] {
        assert_eq!(
            code(&scottlab(&["family", name, fact, "--depth", "4"])),
            0,
            "{name} {fact}"
        );
    }
}

#[test]
fn corpus_sweeps() {
    let o = scottlab(&["corpus", "4", "--checks", "all", "--json", "--jobs", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["data"]["posets"], 16);
    let o = scottlab(&["corpus", "1", "--json"]);
    assert_eq!(json(&o)["data"]["posets"], 1);
    let o = scottlab(&["corpus", "5", "--checks", "sober-pipeline", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["data"]["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn corpus_reports_are_reproducible() {
    let args = [
        "corpus", "6", "--mode", "random", "--count", "20", "--seed", "9", "--json",
    ];
    let a = scottlab(&args);
    let b = scottlab(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn certificates() {
    let o = scottlab(&["cert", "@johnstone-cert", "--depth", "8", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["verdicts"].as_array().unwrap().len(), 7);
    assert_eq!(code(&scottlab(&["cert", "@johnstone-x-cert", "--depth", "6"])), 0);

    let o = scottlab(&["cert", "@corrupted-cert", "--json"]);
    assert_eq!(code(&o), 1);
    let failed: Vec<serde_json::Value> = json(&o)["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|v| v["holds"] == false)
        .cloned()
        .collect();
    assert_eq!(failed.len(), 1);
    assert!(failed[0]["property"].as_str().unwrap().starts_with("(ii)"));
    assert_eq!(failed[0]["witness"]["index"], 1);
}

#[test]
fn witnesses() {
    let o = scottlab(&[
        "witness",
        "@johnstone-r-witness",
        "--subfamily",
        "5",
        "--depth",
        "12",
        "--json",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["data"]["certified"], true);
    assert_eq!(
        code(&scottlab(&[
            "witness",
            "@jia-r-witness",
            "--subfamily",
            "3",
            "--depth",
            "5"
        ])),
        0
    );
    let o = scottlab(&["witness", "@broken-r-witness"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("(1,inf)"));
    assert_eq!(
        code(&scottlab(&["witness", "@johnstone-r-witness", "--subfamily", "21"])),
        2
    );
}

#[test]
fn export_and_dot() {
    let o = scottlab(&["export", "johnstone", "--depth", "2"]);
    assert_eq!(code(&o), 0);
    let p = parse_poset(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert_eq!(
        p.len(),
        scottlab_core::symbolic::truncation_codes(scottlab_core::symbolic::AmbientFamily::Johnstone, 2).len()
    );

    let dot = temp("diamond.gv");
    let o = scottlab(&["export", "@diamond", "--dot", dot.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph") && text.contains("\"bot\" -> \"x\""));
    assert_eq!(text.matches("->").count(), 4);
}

#[test]
fn size_cap_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_scottlab"))
        .args(["corpus", "2"])
        .env("SCOTTLAB_MAX_SIZE", "zero")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_scottlab"))
        .args(["corpus", "3"])
        .env("SCOTTLAB_MAX_SIZE", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}
