//! Bundled input documents, addressed on the command line as `@name`.

use std::fs;

use scottlab_core::{Error, Result};

pub const ASSETS: &[(&str, &str)] = &[
    ("chain3", include_str!("../assets/chain3.json")),
    ("antichain3", include_str!("../assets/antichain3.json")),
    ("diamond", include_str!("../assets/diamond.json")),
    ("johnstone-cert", include_str!("../assets/johnstone-cert.json")),
    ("johnstone-x-cert", include_str!("../assets/johnstone-x-cert.json")),
    ("corrupted-cert", include_str!("../assets/corrupted-cert.json")),
    (
        "johnstone-r-witness",
        include_str!("../assets/johnstone-r-witness.json"),
    ),
    ("jia-r-witness", include_str!("../assets/jia-r-witness.json")),
    ("broken-r-witness", include_str!("../assets/broken-r-witness.json")),
    ("g-family", include_str!("../assets/g-family.json")),
];

pub fn asset(name: &str) -> Option<&'static str> {
    ASSETS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

/// Reads a file, or a bundled asset when the argument starts with `@`.
pub fn load(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(name) => asset(name)
            .map(str::to_string)
            .ok_or_else(|| Error::Parse(format!("no bundled asset `{name}`"))),
        None => fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}"))),
    }
}
