#![no_main]

use alglen::exactla::{Field, Scalar, Vector};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    for field in [Field::Rational, Field::prime(7).unwrap(), Field::prime(65521).unwrap()] {
        if let Ok(s) = Scalar::parse(field, text) {
            assert_eq!(Scalar::parse(field, &s.to_string()).unwrap(), s);
        }
        if let Ok(v) = Vector::parse(field, text) {
            let again: Vec<String> = v.coords().iter().map(ToString::to_string).collect();
            assert_eq!(Vector::parse(field, &again.join(",")).unwrap(), v);
        }
    }
    let _ = text.parse::<Field>();
});
