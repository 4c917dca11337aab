//! Brute-force Kazhdan–Lusztig cells of a small finite group, compared with
//! the stub machinery.
//!
//! Usage: `cargo run --release --example oracle_check -- B:3`

use std::sync::Arc;
use std::time::Instant;

use a2cells::cells::A2Cells;
use a2cells::oracle::{compare_with_cells, OracleReport, DEFAULT_BOUND};
use a2cells::system::CoxeterSystem;

fn main() {
    let descriptor = std::env::args().nth(1).unwrap_or_else(|| "B:3".into());
    let sys = Arc::new(CoxeterSystem::from_descriptor(&descriptor).expect("valid descriptor"));
    let start = Instant::now();
    let oracle = OracleReport::new(&sys, DEFAULT_BOUND).expect("small finite group");
    println!("{descriptor}: {} elements, oracle took {:.2?}", oracle.table.group().len(), start.elapsed());
    let histogram = oracle.a.iter().fold(std::collections::BTreeMap::new(), |mut m, &a| {
        *m.entry(a).or_insert(0) += 1;
        m
    });
    println!("a-value histogram: {histogram:?}");
    let cells = A2Cells::new(sys).expect("a(2)-finite");
    for check in compare_with_cells(&oracle, &cells) {
        println!("{} {} {}", if check.passed { "ok  " } else { "FAIL" }, check.name, check.detail);
    }
}
