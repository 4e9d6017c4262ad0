#![no_main]

use libfuzzer_sys::fuzz_target;
use upq_core::{HiggsType, Rational, TripleType};

// JSON decoding of the validated input records
fuzz_target!(|data: &[u8]| {
    if let Ok(t) = serde_json::from_slice::<TripleType>(data) {
        let again = serde_json::to_vec(&t).unwrap();
        assert_eq!(serde_json::from_slice::<TripleType>(&again).unwrap(), t);
    }
    if let Ok(h) = serde_json::from_slice::<HiggsType>(data) {
        let again = serde_json::to_vec(&h).unwrap();
        assert_eq!(serde_json::from_slice::<HiggsType>(&again).unwrap(), h);
    }
    if let Ok(r) = serde_json::from_slice::<Rational>(data) {
        let again = serde_json::to_vec(&r).unwrap();
        assert_eq!(serde_json::from_slice::<Rational>(&again).unwrap(), r);
    }
});
