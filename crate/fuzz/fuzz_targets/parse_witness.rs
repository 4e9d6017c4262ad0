#![no_main]

use libfuzzer_sys::fuzz_target;
use upq_core::triple::{delta_alpha, witness_check};
use upq_core::{Rational, SubtripleWitness, TripleType};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(w) = s.parse::<SubtripleWitness>() else { return };
    let t = TripleType::new(3, 2, 7, -4).unwrap();
    let alpha = Rational::new(5, 2);
    let report = witness_check(&t, &[w], &alpha, false);
    assert_eq!(report.outcomes.len(), 1);
    if w.check_proper_for(&t).is_ok() {
        assert!(delta_alpha(&t, &w, &alpha).is_ok());
    }
});
