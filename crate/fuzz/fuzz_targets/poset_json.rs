#![no_main]

use fishburn::Poset;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Poset::from_json(text) {
        assert_eq!(Poset::from_json(&p.to_json()).unwrap(), p);
        let _ = p.stats();
        if p.is_22_free() {
            let _ = p.canonical_form().unwrap();
        }
    }
});
