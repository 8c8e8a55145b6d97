#![no_main]
use libfuzzer_sys::fuzz_target;
use wreathkit::io::{parse_presentation, presentation_to_json};
use wreathkit::todd_coxeter::todd_coxeter;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_presentation(text) {
        assert_eq!(parse_presentation(&presentation_to_json(&p)).expect("written presentations parse"), p);
        // an open table after a finished enumeration is a bug, not an input error
        todd_coxeter(&p, 2_000).expect("validated presentations enumerate");
    }
});
