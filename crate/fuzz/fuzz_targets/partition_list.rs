#![no_main]

use isohorn::parse::parse_partition_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: &str| {
    let Ok(ps) = parse_partition_list(input) else { return };
    let text: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    assert_eq!(parse_partition_list(&text.join(" ")).unwrap(), ps);
    for p in &ps {
        assert_eq!(p.conjugate().conjugate().trimmed(), p.trimmed());
    }
});
