#![no_main]

use isohorn::parse::parse_rational_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: &str| {
    let Ok(vs) = parse_rational_list(input) else { return };
    let text: Vec<String> = vs
        .iter()
        .map(|v| format!("({})", v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    assert_eq!(parse_rational_list(&text.join(" ")).unwrap(), vs);
});
