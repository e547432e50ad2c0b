#![no_main]

use libfuzzer_sys::fuzz_target;
use umbral_core::rational::parse_rational;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(value) = parse_rational(text) {
        assert_eq!(parse_rational(&value.to_string()).unwrap(), value);
    }
});
