#![no_main]

use alglen::identities::MultilinearIdentity;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(id) = MultilinearIdentity::from_json(text) {
        let json = serde_json::to_string(&id.to_file()).unwrap();
        assert_eq!(MultilinearIdentity::from_json(&json).unwrap(), id);
    }
});
