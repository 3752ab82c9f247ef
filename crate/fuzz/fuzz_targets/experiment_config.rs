#![no_main]

use infnode::experiment::ExperimentConfig;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(config) = ExperimentConfig::from_json(text) else {
        return;
    };
    let _ = config.validate();
    let again = serde_json::to_string(&config).expect("configs serialize");
    assert_eq!(
        ExperimentConfig::from_json(&again).expect("round trip"),
        config
    );
});
