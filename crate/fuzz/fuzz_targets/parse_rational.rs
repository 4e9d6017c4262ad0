#![no_main]

use libfuzzer_sys::fuzz_target;
use upq_core::Rational;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = s.parse::<Rational>() {
        // display is canonical, so it must parse back to the same value
        let shown = r.to_string();
        let back: Rational = shown.parse().expect("canonical form parses");
        assert_eq!(back, r);
        assert_eq!(back.to_string(), shown);
    }
});
