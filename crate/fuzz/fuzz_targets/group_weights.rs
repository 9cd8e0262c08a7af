#![no_main]

use isohorn::parse::{parse_group, parse_weight_list};
use libfuzzer_sys::fuzz_target;

// first line names the group, the rest lists weights
fuzz_target!(|input: &str| {
    let (head, rest) = input.split_once('\n').unwrap_or((input, ""));
    let Ok(g) = parse_group(head) else { return };
    assert!(g.coords() > 0);
    if let Ok(ws) = parse_weight_list(rest, g) {
        for w in ws {
            assert_eq!(w.group(), g);
            let _ = w.is_dominant();
        }
    }
});
