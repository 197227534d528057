//! Fuzz the braid word parser. Accepted words must round-trip through
//! their display form, and free reduction must never panic on them.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = ldkex::BraidWord::parse(text) {
        let printed = w.to_string();
        let again = ldkex::BraidWord::parse(&printed).expect("display form parses");
        assert_eq!(again, w, "round trip changed the word");
        let _ = w.free_reduce();
    }
});
