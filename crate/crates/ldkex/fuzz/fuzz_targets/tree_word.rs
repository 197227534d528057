//! Fuzz the tree word record parser. Accepted records must survive a
//! render/parse round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(word) = ldkex::parse_tree_word(text) {
        let printed = ldkex::render_tree_word(&word);
        let again = ldkex::parse_tree_word(&printed).expect("rendered record parses");
        assert_eq!(again, word, "round trip changed the record");
    }
});
