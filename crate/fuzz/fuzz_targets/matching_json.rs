#![no_main]

use fishburn::Matching;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = Matching::from_json(text) {
        assert_eq!(Matching::from_json(&m.to_json()).unwrap(), m);
        assert_eq!(m.to_string().parse::<Matching>().unwrap(), m);
    }
});
