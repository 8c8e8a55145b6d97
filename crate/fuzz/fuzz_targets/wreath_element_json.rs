#![no_main]
use libfuzzer_sys::fuzz_target;
use wreathkit::fixtures;
use wreathkit::io::{parse_wreath_element, wreath_element_to_json};
use wreathkit::wreath::WreathContext;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let ctx = WreathContext::singular(fixtures::cyclic(2), 3).unwrap();
    if let Ok(x) = parse_wreath_element(&ctx, text) {
        assert!(!x.trans.is_permutation());
        let back = parse_wreath_element(&ctx, &wreath_element_to_json(&ctx, &x)).expect("written elements parse");
        assert_eq!(back, x);
    }
});
