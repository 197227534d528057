//! Fuzz the tree vector parser: arbitrary text must either be rejected or
//! produce a vector whose display form parses back to the same value.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = ldkex::TreeVector::parse(text) {
        let printed = v.to_string();
        let again = ldkex::TreeVector::parse(&printed).expect("display form parses");
        assert_eq!(again, v, "round trip changed the vector");
    }
});
