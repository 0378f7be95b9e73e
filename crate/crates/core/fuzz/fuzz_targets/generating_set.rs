#![no_main]

use alglen::families::{bare_01245, vinberg_r4};
use alglen::filtration::GenSet;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    for a in [vinberg_r4(), bare_01245()] {
        if let Ok(s) = GenSet::parse(&a, text) {
            assert_eq!(GenSet::parse(&a, &s.describe()).unwrap().vectors(), s.vectors());
        }
        let _ = GenSet::parse_list(&a, text);
    }
});
