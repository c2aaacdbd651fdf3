#![no_main]

use fishburn::Perm;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = text.parse::<Perm>() {
        assert_eq!(p.to_string().parse::<Perm>().unwrap(), p);
        let _ = (p.stats(), p.is_fishburn());
        if p.len() <= 12 && p.is_fishburn() && !p.contains_classical(&[3, 1, 4, 2]) {
            let m = fishburn::bijections::upsilon_p2_inverse(&p).unwrap();
            assert_eq!(fishburn::bijections::upsilon_p2(&m).unwrap(), p);
        }
    }
});
