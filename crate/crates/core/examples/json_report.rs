//! The machine-readable report for one system.
//!
//! `cargo run --example json_report -- E:1,1 > e11.json`

use a2cells::cells::report::Report;
use a2cells::A2Cells;

fn main() -> a2cells::Result<()> {
    let descriptor = std::env::args().nth(1).unwrap_or_else(|| "B:4".into());
    let cells = A2Cells::from_descriptor(&descriptor)?;
    println!("{}", Report::new(&cells).to_json());
    Ok(())
}
