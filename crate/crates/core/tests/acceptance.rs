use std::process::ExitCode;

use hcsf_core::repro::{run, CRITERIA};

/// Sub-checks whose expected value is not reproducible; see the decisions ledger.
const UNATTAINABLE: [(u8, &str); 1] = [(10, "length2_projection_dimension(P12)")];

fn main() -> ExitCode {
    let mut unexpected = Vec::new();
    for &(number, ..) in &CRITERIA {
        let r = match run(number) {
            Ok(r) => r,
            Err(e) => {
                unexpected.push(format!("criterion {number}: {} ({e})", e.name()));
                continue;
            }
        };
        println!("{r}\n  time {}", r.timing());
        if !r.within_budget() {
            unexpected.push(format!("criterion {number} over budget"));
        }
        for c in r.failures() {
            if !UNATTAINABLE.contains(&(number, c.name.as_str())) {
                unexpected.push(format!("criterion {number}: {}", c.name));
            }
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria pass apart from {} documented unattainable sub-check(s)", UNATTAINABLE.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures {unexpected:?}");
        ExitCode::FAILURE
    }
}
