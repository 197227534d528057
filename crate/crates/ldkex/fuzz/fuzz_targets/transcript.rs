//! Fuzz the transcript parser. Parsing is idempotent: rebuilding the
//! sections and entries of an accepted transcript and parsing the result
//! must yield the same structure.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = ldkex::parse_transcript(text) {
        let mut rebuilt = String::from("ldkex-transcript v1\n");
        for section in &t.sections {
            rebuilt.push_str(&format!("\n[{}]\n", section.name));
            for (key, value) in &section.entries {
                rebuilt.push_str(&format!("{key}: {value}\n"));
            }
        }
        let again = ldkex::parse_transcript(&rebuilt).expect("rebuilt transcript parses");
        assert_eq!(again, t, "rebuild changed the structure");
        let _ = t.agreed();
    }
});
