#![no_main]
use libfuzzer_sys::fuzz_target;
use wreathkit::io::parse_transformations;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(ts) = parse_transformations(text) {
        let list = ts
            .iter()
            .map(|t| t.to_string().trim_matches(|c| c == '[' || c == ']').to_string())
            .collect::<Vec<_>>()
            .join("; ");
        assert_eq!(parse_transformations(&list).expect("written lists parse"), ts);
    }
});
