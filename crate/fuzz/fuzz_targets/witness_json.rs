#![no_main]

use libfuzzer_sys::fuzz_target;
use primediff::json::Witness;

fuzz_target!(|data: &[u8]| {
    let Ok(witness) = Witness::from_slice(data) else {
        return;
    };
    let verdict = witness.verify();
    let again = Witness::from_json(&witness.to_json()).expect("re-encoded witness decodes");
    assert_eq!(again, witness);
    assert_eq!(again.verify(), verdict);
});
