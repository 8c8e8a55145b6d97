#![no_main]
use libfuzzer_sys::fuzz_target;
use wreathkit::io::parse_edges;
use wreathkit::rank::tournament_check;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(edges) = parse_edges(text) {
        for n in 3..=5 {
            if let Ok(v) = tournament_check(n, &edges) {
                assert_eq!(v.generates, v.strongly_connected && v.complete);
            }
        }
    }
});
