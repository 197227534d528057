//! Fuzz the 2x2 matrix parser. Accepted matrices must round-trip
//! through display form with identical entries.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(m) = ldkex::Mat2::parse(text) {
        let printed = m.to_string();
        let again = ldkex::Mat2::parse(&printed).expect("display form parses");
        assert_eq!(again, m, "round trip changed the matrix");
    }
});
