//! Runs the golden checks over every built-in family up to moderate rank.

use std::time::Instant;

use a2cells::cells::A2Cells;
use a2cells::verify::verify_system;

fn sweep() -> Vec<String> {
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push(format!("A:{n}"));
        out.push(format!("B:{n}"));
        out.push(format!("H:{n}"));
    }
    for n in 4..=8 {
        out.push(format!("Ctilde:{n}"));
        out.push(format!("F:{n}"));
    }
    for q in 1..=3 {
        for r in q..=6 - q {
            out.push(format!("E:{q},{r}"));
        }
    }
    out
}

fn main() {
    let mut failures = 0;
    for d in sweep() {
        let start = Instant::now();
        let cells = A2Cells::from_descriptor(&d).expect("built-in systems are a(2)-finite");
        let checks = verify_system(&cells);
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        failures += failed.len();
        println!(
            "{d:<10} stubs {:>3}  |W_2| {:>5}  checks {:>2}  failed {}  {:.2?}",
            cells.stubs().len(),
            cells.len(),
            checks.len(),
            failed.len(),
            start.elapsed()
        );
        for c in failed {
            println!("    FAIL {}: {}", c.name, c.detail);
        }
    }
    std::process::exit(i32::from(failures > 0));
}
