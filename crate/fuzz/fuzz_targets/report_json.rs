#![no_main]

use libfuzzer_sys::fuzz_target;
use upq_cli::{render_json, render_table, Report};

fuzz_target!(|data: &[u8]| {
    let Ok(r) = serde_json::from_slice::<Report>(data) else { return };
    let text = render_json(&r);
    let back: Report = serde_json::from_str(&text).expect("rendered report parses");
    assert_eq!(back, r);
    assert_eq!(render_json(&back), text);
    let _ = render_table(&r);
});
