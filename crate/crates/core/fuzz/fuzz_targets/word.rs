#![no_main]

use alglen::Word;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let Ok(value) = serde_json::from_str::<serde_json::Value>(text) else {
        return;
    };
    if let Ok(w) = Word::from_json(&value) {
        assert_eq!(Word::from_json(&w.to_json()).unwrap(), w);
    }
});
