//! Fuzz element parsing for each group shape, including the nested pair
//! grammar of product groups. Accepted elements must re-parse from their
//! display form and validate in the owning group.

#![no_main]

use libfuzzer_sys::fuzz_target;

use std::sync::OnceLock;

fn groups() -> &'static [ldkex::Group; 3] {
    static GROUPS: OnceLock<[ldkex::Group; 3]> = OnceLock::new();
    GROUPS.get_or_init(|| {
        let sym = ldkex::Group::sym(8).unwrap();
        let gl2 = ldkex::Group::gl2(1009).unwrap();
        let product = ldkex::Group::product(sym.clone(), gl2.clone());
        [sym, gl2, product]
    })
}

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for group in groups() {
        if let Ok(elem) = group.parse_element(text) {
            let printed = elem.to_string();
            let again = group.parse_element(&printed).expect("display form parses");
            assert_eq!(again, elem, "round trip changed the element");
        }
    }
});
