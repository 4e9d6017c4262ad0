#![no_main]

use libfuzzer_sys::fuzz_target;
use upq_core::morse::{morse_index, uk_profile, HodgeChain};
use upq_core::Genus;

// input: "<ranks>|<degrees>", each a comma separated list
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Some((ranks, degrees)) = s.split_once('|') else { return };
    let Ok(c) = HodgeChain::parse(ranks, degrees) else { return };
    let m = c.len() as i64;
    let total: i128 = (-(m - 1)..m).map(|k| uk_profile(&c, k).degree).sum();
    assert_eq!(total, 0);
    let _ = morse_index(&c, Genus::new(2).unwrap());
});
