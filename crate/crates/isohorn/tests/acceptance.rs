use std::process::ExitCode;

use isohorn::verify::{run, Settings};

fn main() -> ExitCode {
    let settings = Settings::default();
    let mut failed = 0;
    for id in 1..=10 {
        let out = run(id, &settings);
        let verdict = if out.passed { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {id:>2}: {} ({:.1}s)", out.title, out.elapsed.as_secs_f64());
        for line in &out.details {
            println!("    {line}");
        }
        if !out.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
