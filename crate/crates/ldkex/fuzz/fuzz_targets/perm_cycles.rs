//! Fuzz the cycle notation parser at a fixed degree. Accepted inputs
//! must round-trip through display form as the same permutation.

#![no_main]

use libfuzzer_sys::fuzz_target;

const DEGREE: usize = 16;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = ldkex::Permutation::parse_cycles(text, DEGREE) {
        let printed = p.to_string();
        let again =
            ldkex::Permutation::parse_cycles(&printed, DEGREE).expect("display form parses");
        assert_eq!(again, p, "round trip changed the permutation");
        assert!(p.then(&p.inverse()).is_identity());
    }
});
