#![no_main]

use libfuzzer_sys::fuzz_target;

// one argument per line
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let argv = std::iter::once("upq").chain(s.lines());
    let out = upq_cli::run(argv);
    assert!(out.code <= 2);
    // help and version requests win over --json and print plain text
    let informational = out.stdout.contains("Usage:") || out.stdout.starts_with("upq ");
    if out.code == 0 && s.lines().any(|l| l == "--json") && !informational {
        let _: serde_json::Value = serde_json::from_str(&out.stdout).expect("--json output is JSON");
    }
});
