#![no_main]

use libfuzzer_sys::fuzz_target;
use umbral_core::audit::AuditDocument;

// Accepted documents must re-encode to something that decodes to the same value.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = AuditDocument::from_json(text) {
        assert_eq!(AuditDocument::from_json(&doc.to_json()).unwrap(), doc);
    }
});
