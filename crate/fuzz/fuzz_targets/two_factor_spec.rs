#![no_main]

use libfuzzer_sys::fuzz_target;
use primediff::factors::{two_factor, TwoFactorSpec};
use primediff::verify_two_factor;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(spec) = text.parse::<TwoFactorSpec>() else {
        return;
    };
    assert_eq!(
        spec.to_string().parse::<TwoFactorSpec>().as_ref(),
        Ok(&spec)
    );
    if spec.order() > 2000 {
        return;
    }
    match two_factor(&spec) {
        Ok(w) => assert_eq!(verify_two_factor(&w, Some(spec.lengths())), Ok(())),
        Err(_) => assert!(spec.order() < 7),
    }
});
