#![no_main]

use fishburn::AscentSeq;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(a) = text.parse::<AscentSeq>() {
        assert_eq!(a.to_string().parse::<AscentSeq>().unwrap(), a);
        assert!(a.lambda().is_fishburn());
        let _ = (a.stats(), a.delta(), a.rgf_runs());
    }
});
