#![no_main]
use libfuzzer_sys::fuzz_target;
use wreathkit::io::{monoid_to_json, parse_monoid};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_monoid(text) {
        let back = parse_monoid(&monoid_to_json(&m)).expect("written monoids parse");
        assert_eq!(back.rows(), m.rows());
        assert_eq!(back.labels(), m.labels());
        assert_eq!(back.identity(), m.identity());
    }
});
