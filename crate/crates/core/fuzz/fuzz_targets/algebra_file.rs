#![no_main]

use alglen::Algebra;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(a) = Algebra::from_json(text) {
        let again = Algebra::from_json(&a.to_json()).expect("written files parse");
        assert_eq!(again, a);
        assert_eq!(again.fingerprint(), a.fingerprint());
    }
});
