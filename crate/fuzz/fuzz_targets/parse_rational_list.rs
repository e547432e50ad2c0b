#![no_main]

use libfuzzer_sys::fuzz_target;
use umbral_core::rational::parse_rational_list;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(values) = parse_rational_list(text) {
        let printed: Vec<String> = values.iter().map(ToString::to_string).collect();
        assert_eq!(parse_rational_list(&printed.join(",")).unwrap(), values);
    }
});
