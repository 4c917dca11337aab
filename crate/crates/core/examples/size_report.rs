//! Computed cell sizes next to their closed forms.

use a2cells::cells::report::cell_size_report;
use a2cells::A2Cells;

fn main() -> a2cells::Result<()> {
    let descriptor = std::env::args().nth(1).unwrap_or_else(|| "Ctilde:5".into());
    let cells = A2Cells::from_descriptor(&descriptor)?;
    let report = cell_size_report(&cells);
    for row in &report.rows {
        let expected = row.expected.map_or("-".to_string(), |e| e.to_string());
        println!("{:<28} {:>6} {:>6}  {}", row.quantity, row.computed, expected, row.verdict());
    }
    println!("all match: {}", report.all_match());
    Ok(())
}
