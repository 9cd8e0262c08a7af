#![no_main]

use isohorn::index::{AIndex, BIndex, CIndex};
use isohorn::parse::parse_index_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: &str| {
    let Ok(lists) = parse_index_list(input) else { return };
    let text: Vec<String> = lists
        .iter()
        .map(|l| format!("[{}]", l.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    assert_eq!(parse_index_list(&text.join(" ")).unwrap(), lists);
    for l in lists {
        for n in 1..=6 {
            if let Ok(c) = CIndex::new(l.clone(), n) {
                let _ = c.cell_stats();
                assert_eq!(CIndex::from_weyl(&c.weyl_element(), c.r()), c);
            }
            if let Ok(b) = BIndex::new(l.clone(), n) {
                let _ = b.cell_stats();
            }
            if let Ok(a) = AIndex::new(l.clone(), 2 * n) {
                assert_eq!(a.codim() + a.dim(), AIndex::grassmannian_dim(a.len(), 2 * n));
            }
        }
    }
});
