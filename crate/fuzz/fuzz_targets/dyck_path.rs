#![no_main]

use fishburn::DyckPath;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(d) = text.parse::<DyckPath>() {
        assert_eq!(d.to_string().parse::<DyckPath>().unwrap(), d);
        let m = d.gamma();
        assert_eq!(DyckPath::gamma_inverse(&m).unwrap(), d);
    }
});
