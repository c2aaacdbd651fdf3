#![no_main]

use fishburn::Matching;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 256 {
        return;
    }
    if let Ok(m) = text.parse::<Matching>() {
        assert_eq!(m.to_string().parse::<Matching>().unwrap(), m);
        assert_eq!(Matching::from_json(&m.to_json()).unwrap(), m);
        if m.size() <= 12 {
            let _ = (m.cr(), m.nr(), m.fcr(), m.bl(), m.mcr());
            let _ = fishburn::Poset::omega(&m);
        }
    }
});
