#![no_main]

use epwforge::grouprep::{generators, GroupCache, GroupData};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(cache) = serde_json::from_slice::<GroupCache>(data) else { return };
    let _ = GroupData::from_cache(&generators(), &cache);
});
